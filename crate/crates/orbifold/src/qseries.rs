//! Truncated power series in `q^(1/N)` with integer coefficients.
//!
//! These give graded dimensions: theta series of lattice cosets, Fock space
//! characters, and traces of `σ`. They are used as an oracle for the lattice
//! decompositions the census relies on, independently of the module
//! classification itself.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::cocycle::EtaFunction;
use crate::error::Result;
use crate::exactnum::Rational;
use crate::isometry::Frame;
use crate::lattice::{for_each_coset_vector, from_small, integral_vec, to_rational_vec, EvenLattice, SmallRat};

/// `Σ c_k q^(k/N)` for exponents `k/N ≤ order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    denominator: i64,
    coeffs: BTreeMap<i64, BigInt>,
    order: Rational,
}

/// The sign in `∏(1 ∓ q^m)^(−d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    /// `∏(1 − q^m)^(−d)`.
    Minus,
    /// `∏(1 + q^m)^(−d)`.
    Plus,
}

/// Whether the exponents `m` run over `1, 2, 3, …` or `½, 3/2, 5/2, …`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shift {
    Integer,
    Half,
}

fn cutoff(order: &Rational, n: i64) -> i64 {
    (order * &Rational::from_int(n)).floor().to_i64().expect("truncation order fits in i64")
}

impl QSeries {
    pub fn zero(order: Rational) -> Self {
        QSeries { denominator: 1, coeffs: BTreeMap::new(), order }
    }

    pub fn one(order: Rational) -> Self {
        Self::from_terms([(Rational::zero(), BigInt::from(1))], order)
    }

    /// Sums the given terms, dropping those above `order`.
    pub fn from_terms<I: IntoIterator<Item = (Rational, BigInt)>>(terms: I, order: Rational) -> Self {
        let terms: Vec<(Rational, BigInt)> = terms.into_iter().filter(|(e, _)| e <= &order).collect();
        let n = terms.iter().fold(BigInt::from(1), |acc, (e, _)| acc.lcm(e.denom()));
        let n = n.to_i64().expect("exponent denominator fits in i64");
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            let k = (&e * &Rational::from_int(n)).to_i64().expect("integral exponent");
            *coeffs.entry(k).or_insert_with(BigInt::zero) += c;
        }
        let mut s = QSeries { denominator: n, coeffs, order };
        s.prune();
        s
    }

    fn prune(&mut self) {
        self.coeffs.retain(|_, c| !c.is_zero());
    }

    pub fn denominator(&self) -> i64 {
        self.denominator
    }

    pub fn order(&self) -> &Rational {
        &self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The coefficient of `q^e`, zero if `e` is not a stored exponent.
    pub fn coefficient(&self, e: &Rational) -> BigInt {
        let k = e * &Rational::from_int(self.denominator);
        match k.to_i64() {
            Some(k) => self.coeffs.get(&k).cloned().unwrap_or_default(),
            None => BigInt::zero(),
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> Vec<(Rational, BigInt)> {
        self.coeffs.iter().map(|(&k, c)| (Rational::new(k, self.denominator), c.clone())).collect()
    }

    fn rescaled(&self, n: i64) -> BTreeMap<i64, BigInt> {
        let f = n / self.denominator;
        self.coeffs.iter().map(|(&k, c)| (k * f, c.clone())).collect()
    }

    fn common(&self, other: &QSeries) -> (i64, Rational) {
        let order = if self.order <= other.order { self.order.clone() } else { other.order.clone() };
        (self.denominator.lcm(&other.denominator), order)
    }

    fn combine(&self, other: &QSeries, sign: i64) -> QSeries {
        let (n, order) = self.common(other);
        let top = cutoff(&order, n);
        let mut coeffs = self.rescaled(n);
        for (k, c) in other.rescaled(n) {
            *coeffs.entry(k).or_insert_with(BigInt::zero) += c * sign;
        }
        coeffs.retain(|&k, _| k <= top);
        let mut s = QSeries { denominator: n, coeffs, order };
        s.prune();
        s
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.combine(other, -1)
    }

    pub fn mul(&self, other: &QSeries) -> QSeries {
        let (n, order) = self.common(other);
        let top = cutoff(&order, n);
        let a = self.rescaled(n);
        let b = other.rescaled(n);
        let mut coeffs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (ka, ca) in &a {
            for (kb, cb) in &b {
                if ka + kb > top {
                    break;
                }
                *coeffs.entry(ka + kb).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        let mut s = QSeries { denominator: n, coeffs, order };
        s.prune();
        s
    }

    pub fn scale(&self, c: &BigInt) -> QSeries {
        let mut s = self.clone();
        for v in s.coeffs.values_mut() {
            *v *= c;
        }
        s.prune();
        s
    }

    /// Divides every coefficient by `k`, or `None` if one is not divisible.
    pub fn div_exact(&self, k: i64) -> Option<QSeries> {
        let k = BigInt::from(k);
        let mut s = self.clone();
        for v in s.coeffs.values_mut() {
            let (q, r) = v.div_rem(&k);
            if !r.is_zero() {
                return None;
            }
            *v = q;
        }
        Some(s)
    }

    /// The smallest exponent where the two series differ, with both coefficients.
    pub fn first_difference(&self, other: &QSeries) -> Option<(Rational, BigInt, BigInt)> {
        let d = self.sub(other);
        d.terms().into_iter().next().map(|(e, _)| {
            let (a, b) = (self.coefficient(&e), other.coefficient(&e));
            (e, a, b)
        })
    }

    /// `"e:c, e:c, …"` with exponents as reduced fractions.
    pub fn dump(&self) -> String {
        self.terms().iter().map(|(e, c)| format!("{}:{}", e, c)).collect::<Vec<_>>().join(", ")
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (exact through q^{})", self.dump(), self.order)
    }
}

#[derive(Serialize)]
struct SeriesForm {
    order: Rational,
    terms: Vec<(Rational, String)>,
}

impl Serialize for QSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        SeriesForm {
            order: self.order.clone(),
            terms: self.terms().into_iter().map(|(e, c)| (e, c.to_string())).collect(),
        }
        .serialize(serializer)
    }
}

/// `Σ_{v ∈ coset + Zⁿ} q^(|v|²/2)` in the basis of `l`, up to `q^order`.
pub fn theta(l: &EvenLattice, coset: &[Rational], order: &Rational) -> QSeries {
    let mut counts: BTreeMap<SmallRat, i64> = BTreeMap::new();
    let bound = order * &Rational::from_int(2);
    for_each_coset_vector(l, coset, &bound, |_, n| *counts.entry(n).or_insert(0) += 1);
    let half = Rational::new(1, 2);
    QSeries::from_terms(counts.into_iter().map(|(n, c)| (&from_small(&n) * &half, BigInt::from(c))), order.clone())
}

/// `∏_{n≥1} (1 ∓ q^m)^(−d)` with `m = n` or `m = n − ½`.
pub fn inv_product_character(d: usize, parity: Parity, shift: Shift, order: &Rational) -> QSeries {
    let n = match shift {
        Shift::Integer => 1,
        Shift::Half => 2,
    };
    let top = cutoff(order, n).max(-1);
    let mut a: Vec<BigInt> = vec![BigInt::zero(); (top + 1) as usize];
    if top < 0 {
        return QSeries { denominator: n, coeffs: BTreeMap::new(), order: order.clone() };
    }
    a[0] = BigInt::from(1);
    let parts: Vec<i64> = match shift {
        Shift::Integer => (1..=top).collect(),
        Shift::Half => (1..=top).filter(|p| p % 2 == 1).collect(),
    };
    for &p in &parts {
        for _ in 0..d {
            for k in p..=top {
                let prev = a[(k - p) as usize].clone();
                match parity {
                    Parity::Minus => a[k as usize] += prev,
                    Parity::Plus => a[k as usize] -= prev,
                }
            }
        }
    }
    let mut s = QSeries {
        denominator: n,
        coeffs: a.into_iter().enumerate().map(|(k, c)| (k as i64, c)).collect(),
        order: order.clone(),
    };
    s.prune();
    s
}

/// Theta series of every coset of `L` in `Q̄`, counted by enumerating `Q̄`.
fn coset_thetas(frame: &Frame, order: &Rational) -> (Vec<Vec<i64>>, Vec<QSeries>) {
    let reps = frame.transversal();
    let index: HashMap<Vec<i64>, usize> =
        reps.iter().enumerate().map(|(i, r)| (frame.l.reduce_int(r), i)).collect();
    let mut counts: Vec<BTreeMap<SmallRat, i64>> = vec![BTreeMap::new(); reps.len()];
    let zero = vec![Rational::zero(); frame.rank()];
    let bound = order * &Rational::from_int(2);
    for_each_coset_vector(&frame.lattice, &zero, &bound, |z, n| {
        let i = index[&frame.l.reduce_int(z)];
        *counts[i].entry(n).or_insert(0) += 1;
    });
    let half = Rational::new(1, 2);
    let series = counts
        .into_iter()
        .map(|c| {
            QSeries::from_terms(c.into_iter().map(|(n, k)| (&from_small(&n) * &half, BigInt::from(k))), order.clone())
        })
        .collect();
    (reps, series)
}

#[derive(Clone, Debug, Serialize)]
pub struct ThetaFactorizationReport {
    pub order: Rational,
    pub cosets: usize,
    pub passed: bool,
    pub failure: Option<String>,
}

/// Checks `Θ_{γ+L} = Θ_{γ₊+L₊} · Θ_{γ₋+L₋}` for every `γ ∈ Q̄/L`, and that the
/// products add up to `Θ_{Q̄}`.
pub fn check_theta_factorization(frame: &Frame, order: &Rational) -> ThetaFactorizationReport {
    let (reps, direct) = coset_thetas(frame, order);
    let mut failure = None;
    let mut total_direct = QSeries::zero(order.clone());
    let mut total_product = QSeries::zero(order.clone());
    for (gamma, lhs) in reps.iter().zip(&direct) {
        let g = to_rational_vec(gamma);
        let rhs = theta(&frame.l_plus, &frame.plus_coords(&g), order)
            .mul(&theta(&frame.l_minus, &frame.minus_coords(&g), order));
        if failure.is_none() {
            if let Some((e, a, b)) = lhs.first_difference(&rhs) {
                failure = Some(format!("coset {:?}: q^{} has {} vectors but the product gives {}", gamma, e, a, b));
            }
        }
        total_direct = total_direct.add(lhs);
        total_product = total_product.add(&rhs);
    }
    let whole = theta(&frame.lattice, &vec![Rational::zero(); frame.rank()], order);
    if failure.is_none() {
        if let Some((e, a, b)) = whole.first_difference(&total_product) {
            failure = Some(format!("theta of Q-bar: q^{} has {} but the coset products sum to {}", e, a, b));
        } else if total_direct != whole {
            failure = Some("coset thetas do not sum to the theta of Q-bar".into());
        }
    }
    ThetaFactorizationReport { order: order.clone(), cosets: reps.len(), passed: failure.is_none(), failure }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbifoldCharacterReport {
    pub order: Rational,
    /// The graded dimension of `V_{Q̄}^σ` from the trace of `σ`.
    pub character: QSeries,
    pub passed: bool,
    pub failure: Option<String>,
}

/// Computes the character of `V_{Q̄}^σ` as `½(char + trace σ)` and compares it
/// with the sum over `γ ∈ Q̄/L` of `char V_{γ₊+L₊} · char V_{γ₋+L₋}^{η(γ)}`.
pub fn orbifold_character_two_ways(frame: &Frame, eta: &EtaFunction, order: &Rational) -> Result<OrbifoldCharacterReport> {
    let (dp, dm) = (frame.plus_rank(), frame.minus_rank());
    let p_full = inv_product_character(dp + dm, Parity::Minus, Shift::Integer, order);
    let p_plus = inv_product_character(dp, Parity::Minus, Shift::Integer, order);
    let p_minus = inv_product_character(dm, Parity::Minus, Shift::Integer, order);
    let p_minus_trace = inv_product_character(dm, Parity::Plus, Shift::Integer, order);

    let mut fixed: BTreeMap<SmallRat, i64> = BTreeMap::new();
    let mut all: BTreeMap<SmallRat, i64> = BTreeMap::new();
    let zero = vec![Rational::zero(); frame.rank()];
    let bound = order * &Rational::from_int(2);
    for_each_coset_vector(&frame.lattice, &zero, &bound, |z, n| {
        *all.entry(n).or_insert(0) += 1;
        if frame.sigma.apply_int(z) == z {
            *fixed.entry(n).or_insert(0) += i64::from(eta.eval(z));
        }
    });
    let half = Rational::new(1, 2);
    let to_series = |m: BTreeMap<SmallRat, i64>| {
        QSeries::from_terms(m.into_iter().map(|(n, k)| (&from_small(&n) * &half, BigInt::from(k))), order.clone())
    };
    let theta_q = to_series(all);
    let theta_fixed = to_series(fixed);
    let twice_lhs = theta_q.mul(&p_full).add(&theta_fixed.mul(&p_plus).mul(&p_minus_trace));

    let mut twice_rhs = QSeries::zero(order.clone());
    for gamma in frame.transversal() {
        let g = to_rational_vec(&gamma);
        let plus = theta(&frame.l_plus, &frame.plus_coords(&g), order).mul(&p_plus);
        let minus_coset = frame.minus_coords(&g);
        let mut minus = theta(&frame.l_minus, &minus_coset, order).mul(&p_minus);
        if integral_vec(&minus_coset).is_some() {
            minus = minus.add(&p_minus_trace.scale(&BigInt::from(eta.eval(&gamma))));
        }
        twice_rhs = twice_rhs.add(&plus.mul(&minus));
    }

    let mut failure = twice_lhs
        .first_difference(&twice_rhs)
        .map(|(e, a, b)| format!("q^{}: trace formula gives {}/2, coset sum gives {}/2", e, a, b));
    let character = match twice_lhs.div_exact(2) {
        Some(c) => c,
        None => {
            failure.get_or_insert_with(|| "the trace formula has an odd coefficient".into());
            twice_lhs.clone()
        }
    };
    Ok(OrbifoldCharacterReport { order: order.clone(), character, passed: failure.is_none(), failure })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions() {
        let p = inv_product_character(1, Parity::Minus, Shift::Integer, &Rational::from_int(6));
        assert_eq!(p.dump(), "0:1, 1:1, 2:2, 3:3, 4:5, 5:7, 6:11");
    }

    #[test]
    fn half_odd_parts() {
        let p = inv_product_character(1, Parity::Minus, Shift::Half, &Rational::new(3, 2));
        assert_eq!(p.dump(), "0:1, 1/2:1, 1:1, 3/2:2");
    }
}
