//! Knot homology from the cube of resolutions.
//!
//! The cube complex is assembled over `K[q, q^-1]` from the torsion-free
//! vertex spaces and their foam maps. Its homology at `q = 1` is the `gl0`
//! homology, its free part over `K[q, q^-1]` is the `E_infinity` page of the
//! `(q - 1)`-Bockstein spectral sequence, and its graded Euler
//! characteristic is the Alexander polynomial.

mod alexander;
mod bockstein;
mod complex;
mod table;

use serde::Serialize;
use thiserror::Error;

use crate::exactalg::{Field, LaurentPoly};
use crate::gilmore::{GilmoreError, GilmoreOptions};
use crate::webs::{BraidWord, WebError};

pub use alexander::{alexander_burau, alexander_burau_t, burau_matrix, euler_as_laurent};
pub use bockstein::{
    bockstein_from_table, bockstein_integer, bockstein_laurent, literal_pages_integer, literal_pages_laurent,
    BocksteinReport,
};
pub use complex::{assemble, assemble_from, specialize_at_one, Bidegree, CubeComplex, CubeData};
pub use table::{homology_table, HomologyGroup, HomologyTable, PoincarePolynomial, PoincareTerm};

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error(transparent)]
    Web(#[from] WebError),
    #[error(transparent)]
    Gilmore(#[from] GilmoreError),
    #[error("a vertex space has rank beyond the polynomial degree bound")]
    DegreeBoundTooSmall,
    #[error("d o d is nonzero at bidegree {bidegree:?} (face {face:?})")]
    DSquaredNonzero { bidegree: Bidegree, face: Option<(u64, usize, usize)> },
    #[error("graded Euler characteristic {euler} differs from the Alexander polynomial {alexander}")]
    EulerMismatch { euler: String, alexander: String },
}

/// How many times the degree bound is doubled before giving up.
const MAX_DOUBLINGS: u32 = 4;

/// Everything computed for one knot.
#[derive(Clone, Debug)]
pub struct KnotHomology<F: Field> {
    pub braid: BraidWord,
    pub complex: CubeComplex<LaurentPoly<F>>,
    /// Homology over `K[q, q^-1]`.
    pub table: HomologyTable<LaurentPoly<F>>,
    /// Homology at `q = 1`.
    pub gl0: HomologyTable<F>,
    pub bockstein: BocksteinReport,
    /// The degree bound that was finally used, if one was set or needed.
    pub degree_bound: Option<u32>,
}

impl<F: Field> KnotHomology<F> {
    pub fn gl0_poincare(&self) -> PoincarePolynomial {
        self.gl0.poincare()
    }

    pub fn einf(&self) -> &PoincarePolynomial {
        &self.bockstein.einf
    }
}

/// A serializable summary of a computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnotSummary {
    pub braid: Vec<i32>,
    pub strands: usize,
    pub gl0: PoincarePolynomial,
    pub bockstein: BocksteinReport,
}

impl<F: Field> From<&KnotHomology<F>> for KnotSummary {
    fn from(k: &KnotHomology<F>) -> Self {
        KnotSummary {
            braid: k.braid.letters().to_vec(),
            strands: k.braid.strands(),
            gl0: k.gl0_poincare(),
            bockstein: k.bockstein.clone(),
        }
    }
}

/// Builds the vertex spaces, doubling the degree bound while some vertex is
/// cut off by it.
fn cube_data<F: Field>(b: &BraidWord, opts: &GilmoreOptions) -> Result<(CubeData<F>, Option<u32>), HomologyError> {
    let mut opts = *opts;
    let mut data = CubeData::<F>::new(b, &opts);
    for _ in 0..MAX_DOUBLINGS {
        if !data.truncated() {
            return Ok((data, opts.degree_bound));
        }
        let current = opts
            .degree_bound
            .unwrap_or_else(|| data.spaces.iter().map(|s| s.presentation.default_bound()).max().unwrap_or(1));
        opts.degree_bound = Some(2 * current.max(1));
        data = CubeData::<F>::new(b, &opts);
    }
    if data.truncated() {
        return Err(HomologyError::DegreeBoundTooSmall);
    }
    Ok((data, opts.degree_bound))
}

/// Computes the complex, its homology over `K[q, q^-1]` and at `q = 1`, and
/// the Bockstein pages. The graded Euler characteristic is checked against
/// the Burau determinant.
pub fn compute_knot<F: Field>(b: &BraidWord, opts: &GilmoreOptions) -> Result<KnotHomology<F>, HomologyError> {
    b.require_knot()?;
    let (data, degree_bound) = cube_data::<F>(b, opts)?;
    let complex = assemble_from(&data)?;
    let euler = euler_as_laurent::<F>(&complex.euler_characteristic());
    let alexander = alexander_burau::<F>(b)?;
    if euler != alexander {
        return Err(HomologyError::EulerMismatch { euler: euler.to_string(), alexander: alexander.to_string() });
    }
    let table = homology_table(&complex);
    let gl0 = homology_table(&specialize_at_one(&complex));
    let bockstein = bockstein_laurent(&table);
    Ok(KnotHomology { braid: b.clone(), complex, table, gl0, bockstein, degree_bound })
}

/// The Poincaré polynomial of `gl0` homology.
pub fn gl0_poincare<F: Field>(b: &BraidWord, opts: &GilmoreOptions) -> Result<PoincarePolynomial, HomologyError> {
    Ok(compute_knot::<F>(b, opts)?.gl0_poincare())
}

/// The ranks of the free part over `K[q, q^-1]`, i.e. the `E_infinity` page.
pub fn hfk_ranks<F: Field>(b: &BraidWord, opts: &GilmoreOptions) -> Result<PoincarePolynomial, HomologyError> {
    Ok(compute_knot::<F>(b, opts)?.bockstein.einf)
}
