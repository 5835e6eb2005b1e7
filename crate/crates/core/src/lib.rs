//! Exact computation of gl0 knot homology of braid closures through a cube
//! of resolutions, and of its (q -> 1) Bockstein spectral sequence over
//! `K[q, q^-1]`.

pub mod evalspaces;
pub mod exactalg;
pub mod gilmore;
pub mod homology;
pub mod symfunc;
pub mod webs;
