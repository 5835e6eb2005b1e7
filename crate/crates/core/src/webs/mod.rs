//! Braid words, their resolutions, the cube of resolutions with signs, and
//! the layered annular webs the resolutions produce, including coherent
//! cycles and their push-off data.

mod braid;
mod cube;
mod cycles;
mod web;

use thiserror::Error;

pub use braid::{parse_braid, BraidWord};
pub use cube::{cube, CubeEdge, CubeVertex, EdgeKind};
pub use cycles::{coherent_cycles, CoherentCycle, WebEdge};
pub use web::{components, resolve, AnnularWeb, Dumbbell, DumbbellEdges, Resolution, ThinEdge, Vertex};

/// Errors from braid parsing and validation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WebError {
    #[error("a braid needs at least one strand")]
    NoStrands,
    #[error("letter {pos} is zero")]
    ZeroLetter { pos: usize },
    #[error("letter {letter} is out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },
    #[error("cannot parse {0:?} as a signed integer")]
    BadToken(String),
    #[error("the closure has {components} components; a knot is required")]
    NotAKnot { components: usize },
}
