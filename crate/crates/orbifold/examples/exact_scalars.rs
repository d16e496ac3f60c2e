// Exact rationals and Gaussian rationals, the only scalars the classification needs.

use orbifold::exactnum::{dyadic_power, quarter_root_of_unity};
use orbifold::{GaussianRational, Rational};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x: Rational = "3/4".parse()?;
    let y = Rational::new(-1, 6);
    println!("{} + {} = {}", x, y, &x + &y);
    println!("2^-6 = {}", dyadic_power(-6));

    let i = GaussianRational::i();
    let z = i.scale(&dyadic_power(-6));
    println!("i/64 = {}, squared = {}", z, &z * &z);
    assert_eq!(&z * &z, GaussianRational::real(-dyadic_power(-12)));

    for k in 0..4 {
        let e = quarter_root_of_unity(&Rational::new(k, 4))?;
        println!("e^(2 pi i {}/4) = {}", k, e);
    }
    assert!(quarter_root_of_unity(&Rational::new(1, 3)).is_err());
    Ok(())
}

fn main() {
    run_example().expect("exact scalars example");
}
