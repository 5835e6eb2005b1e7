//! Exact scalar and matrix arithmetic: rationals, prime fields, Laurent
//! polynomials in `q`, and Smith normal forms over Euclidean domains.

mod fp;
mod integer;
mod laurent;
mod matrix;
mod mpoly;
mod rational;
mod ring;
mod snf;

pub use fp::Fp;
pub use laurent::{laurent_normalize, quantum_integer, LaurentPoly, LaurentQ};
pub use matrix::{Matrix, MatrixL, SparseMatrix};
pub use mpoly::{MPoly, Monomial};
pub use rational::Rational;
pub use ring::{EuclideanDomain, Field, Ring};
pub use snf::{
    cokernel_decompose, rank_over_fraction_field, smith_normal_form, snf_sparse, SnfOptions, SnfResult,
    SnfTransforms, SparseSnf,
};

pub use num_bigint::BigInt;
