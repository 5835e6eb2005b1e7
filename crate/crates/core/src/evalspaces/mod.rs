//! Evaluation-based gl1 and gl0 state spaces over the rationals: omnichrome
//! colorings, the infinity-evaluation, the gl1 pairing, and the image of the
//! marked-edge twist. This construction is independent of the presentation
//! in the `gilmore` module and serves as its oracle at `q = 1`.

mod coloring;
mod evaluation;
mod state_spaces;

use thiserror::Error;

pub use coloring::{omnichrome_colorings, Coloring};
pub use evaluation::{eval_coloring, eval_gl1, eval_infty, generic_point, RationalFunction};
pub use state_spaces::{
    gl0_dims, gl0_dims_with, gl0_gram, gl1_dims, gl1_gram, gram_rank, monomials, GradedDims, PhiStar,
};

/// Errors from the evaluation layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("the summed evaluation has a nontrivial denominator")]
    NotAPolynomial,
}
