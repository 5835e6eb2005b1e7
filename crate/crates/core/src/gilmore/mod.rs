//! The presentation-based spaces: the Gilmore space of a marked web over
//! Laurent polynomials in `q`, given by local and non-local relations, its
//! torsion-free quotient degree by degree, and the zip and unzip maps
//! between adjacent resolutions.

mod maps;
mod presentation;
mod relations;

use thiserror::Error;

pub use maps::{edge_map, unzip_matrix, zip_matrix, FoamMap};
pub use presentation::{
    ag_at_q1, eliminate_linear, graded_presentation, qag_space, quantum_degree, GilmoreOptions, GradedModulePresentation,
    GradedPiece, LinearElimination, QagPiece, QagSpace, SparseVec,
};
pub use relations::{all_relations, local_relations, nonlocal_relations, Relation, RelationKind, RelationSet};

/// Errors from building foam maps.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GilmoreError {
    #[error("the webs do not differ exactly at crossing {crossing} in the expected way")]
    NotAdjacent { crossing: usize },
    #[error("the map at crossing {crossing} sends the relation {relation:?} outside the target relations")]
    NotWellDefined { crossing: usize, relation: RelationKind },
}
