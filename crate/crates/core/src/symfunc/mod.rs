//! Young-diagram calculus and symmetric polynomials over finite alphabets:
//! Schur polynomials, Littlewood-Richardson coefficients, quantum integers
//! and binomials, and exact checks of the Schur identities on disjoint
//! alphabets.

mod identities;
mod quantum;
mod schur;
mod young;

use thiserror::Error;

pub use identities::{identity_check, lr_decompositions, rectangle_sides, IdentityReport};
pub use quantum::{quantum_binom, quantum_factorial, quantum_int};
pub use schur::{lr_coeffs, schur_bialternant, schur_eval, schur_expand, schur_tableaux, SymPoly};
pub use young::{complement, dual, transpose, BoxBound, YoungDiagram};

/// Errors from the symmetric-function layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymfuncError {
    #[error("{0:?} is not a weakly decreasing list of positive integers")]
    NotAPartition(Vec<u32>),
    #[error("diagram {diagram} does not fit in box({a}, {b})")]
    OutOfBox { diagram: YoungDiagram, a: u32, b: u32 },
    #[error("quantum binomial [{n} choose {k}] needs 0 <= k <= n")]
    BinomialRange { n: i64, k: i64 },
    #[error("variable {0} appears in more than one alphabet")]
    AlphabetsOverlap(String),
    #[error("polynomial is not symmetric in the given variables")]
    NotSymmetric,
}
