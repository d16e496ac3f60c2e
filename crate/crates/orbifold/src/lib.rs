//! Exact classification of irreducible modules over order-two orbifolds of
//! lattice vertex algebras.
//!
//! Given a positive-definite even lattice `Q` (as a Gram matrix) and an
//! involutive isometry `σ`, the crate computes the eigenlattices `L±`, the
//! sublattice `Q̄` on which the lift of `σ` has order two, the sign data `ε`
//! and `η`, the `σ = −1` sector of `L₋`, the twisted-sector group `G_σ`, and
//! finally the full list of irreducible `V_Q^σ`-modules with their branching
//! into `V_{L₊} ⊗ V_{L₋}^+`-modules.
//!
//! Everything is exact: scalars live in `Q(i)` and all lattice work is done
//! over the integers.
//!
//! ```
//! use orbifold::catalog;
//! use orbifold::census::full_census;
//!
//! let entry = catalog::entry("A2-dynkin").unwrap();
//! let report = full_census(&entry.lattice, &entry.isometry).unwrap();
//! assert_eq!(report.counts.total, 20);
//! ```

pub mod catalog;
pub mod census;
pub mod cli;
pub mod cocycle;
pub mod error;
pub mod exactnum;
pub mod gsigma;
pub mod isometry;
pub mod lattice;
pub mod minus_one;
pub mod qseries;

pub use error::{Error, Result};
pub use exactnum::{GaussianRational, Rational};
pub use lattice::{EvenLattice, Sublattice};
