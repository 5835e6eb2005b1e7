//! The zip and unzip maps between the spaces of adjacent resolutions.
//!
//! Both foams identify the thin edges of the two webs away from the crossing:
//! a source edge goes to the target edge that contains the point just after
//! its start. Unzip is the resulting ring map; zip additionally multiplies by
//! `x_a - x_d`, where `a` is the upper outgoing and `d` the lower incoming
//! edge of the new dumbbell. Matrices are computed on monomials, then
//! conjugated into the free bases of the two torsion-free quotients.

use std::collections::HashMap;

use crate::exactalg::{Field, LaurentPoly, MPoly, Matrix, MatrixL, Monomial, Ring};
use crate::webs::{AnnularWeb, EdgeKind};

use super::presentation::{QagPiece, QagSpace, SparseVec};
use super::relations::all_relations;
use super::GilmoreError;

type L<F> = LaurentPoly<F>;
type Poly<F> = MPoly<L<F>>;

/// The thin edge of `dst` receiving each thin edge of `src`.
pub fn edge_map(src: &AnnularWeb, dst: &AnnularWeb) -> Vec<usize> {
    let n = src.levels();
    src.thin_edges()
        .iter()
        .map(|e| {
            let level = if e.start == n { 0 } else { e.start + 1 };
            dst.edge_containing(e.lane, level)
        })
        .collect()
}

/// A foam map between two adjacent resolutions, in the free variables of
/// their presentations.
#[derive(Clone, Debug)]
pub struct FoamMap<F: Field> {
    pub kind: EdgeKind,
    pub crossing: usize,
    /// Image of each source thin-edge variable, in target free variables.
    pub edge_images: Vec<Poly<F>>,
    /// Image of each source free variable.
    pub free_images: Vec<Poly<F>>,
    /// `1` for unzip, `x_a - x_d` for zip, in target free variables.
    pub multiplier: Poly<F>,
}

fn check_adjacent(kind: EdgeKind, src: &AnnularWeb, dst: &AnnularWeb, crossing: usize) -> Result<(), GilmoreError> {
    let ok = src.strands() == dst.strands()
        && src.levels() == dst.levels()
        && crossing < src.levels()
        && (0..src.levels()).all(|j| {
            let (a, b) = (src.dumbbell_at(j), dst.dumbbell_at(j));
            if j == crossing {
                match kind {
                    EdgeKind::Unzip => a.is_some() && b.is_none(),
                    EdgeKind::Zip => a.is_none() && b.is_some(),
                }
            } else {
                a.map(|d| src.dumbbells()[d].lower) == b.map(|d| dst.dumbbells()[d].lower)
            }
        });
    if ok {
        Ok(())
    } else {
        Err(GilmoreError::NotAdjacent { crossing })
    }
}

impl<F: Field> FoamMap<F> {
    pub fn new(
        kind: EdgeKind,
        src_web: &AnnularWeb,
        src: &QagSpace<F>,
        dst_web: &AnnularWeb,
        dst: &QagSpace<F>,
        crossing: usize,
    ) -> Result<Self, GilmoreError> {
        check_adjacent(kind, src_web, dst_web, crossing)?;
        let target = &dst.presentation.elimination;
        let edge_images: Vec<Poly<F>> =
            edge_map(src_web, dst_web).into_iter().map(|e| target.images[e].clone()).collect();
        let free_images = src.presentation.elimination.free.iter().map(|&e| edge_images[e].clone()).collect();
        let multiplier = match kind {
            EdgeKind::Unzip => MPoly::one(target.nfree()),
            EdgeKind::Zip => {
                let d = dst_web.dumbbell_at(crossing).expect("dumbbell");
                let r = dst_web.dumbbell_edges(d);
                target.images[r.a].sub(&target.images[r.d])
            }
        };
        Ok(FoamMap { kind, crossing, edge_images, free_images, multiplier })
    }

    /// Polynomial degree of the image of degree `p`.
    pub fn target_degree(&self, p: u32) -> u32 {
        match self.kind {
            EdgeKind::Unzip => p,
            EdgeKind::Zip => p + 1,
        }
    }

    /// Image of a source polynomial in free variables.
    pub fn apply(&self, poly: &Poly<F>) -> Poly<F> {
        poly.compose(&self.free_images).mul(&self.multiplier)
    }

    /// Image of a source polynomial in thin-edge variables.
    pub fn apply_thin(&self, poly: &Poly<F>) -> Poly<F> {
        poly.compose(&self.edge_images).mul(&self.multiplier)
    }

    /// The map from the degree-`p` piece of `src` to the matching piece of
    /// `dst`, with rows indexed by the target basis.
    pub fn matrix(&self, src: &QagSpace<F>, dst: &QagSpace<F>, p: u32) -> MatrixL<F> {
        let q = self.target_degree(p);
        let (Some(sp), Some(dp)) = (src.piece(p), dst.piece(q)) else {
            return Matrix::zeros(dst.rank(q), src.rank(p));
        };
        let mut cache: HashMap<usize, Vec<L<F>>> = HashMap::new();
        let mut m = Matrix::zeros(dp.rank, sp.rank);
        for (t, lift) in sp.basis.iter().enumerate() {
            let mut col = vec![L::<F>::zero(); dp.rank];
            for (i, c) in lift {
                let img = cache.entry(*i).or_insert_with(|| self.project_monomial(&sp.monomials[*i], dp));
                for (acc, v) in col.iter_mut().zip(img.iter()) {
                    acc.add_assign(&c.mul(v));
                }
            }
            for (r, v) in col.into_iter().enumerate() {
                m.set(r, t, v);
            }
        }
        m
    }

    fn project_monomial(&self, mono: &Monomial, dp: &QagPiece<F>) -> Vec<L<F>> {
        let img = self.apply(&MPoly::term(mono.clone(), L::<F>::one()));
        dp.project(&coordinates(&img, dp))
    }

    /// Checks that every source relation maps into the torsion of the
    /// target, so that the map descends to the torsion-free quotients.
    pub fn check_well_defined(&self, src_web: &AnnularWeb, dst: &QagSpace<F>) -> Result<(), GilmoreError> {
        for r in all_relations::<F>(src_web).relations {
            let img = self.apply_thin(&r.poly);
            let q = self.target_degree(r.degree());
            let Some(dp) = dst.piece(q) else { continue };
            if dp.project(&coordinates(&img, dp)).iter().any(|x| !x.is_zero()) {
                return Err(GilmoreError::NotWellDefined { crossing: self.crossing, relation: r.kind });
            }
        }
        Ok(())
    }
}

fn coordinates<F: Field>(poly: &Poly<F>, piece: &QagPiece<F>) -> SparseVec<F> {
    poly.terms().map(|(m, c)| (*piece.index.get(m).expect("degree mismatch"), c.clone())).collect()
}

fn checked_matrix<F: Field>(
    kind: EdgeKind,
    src_web: &AnnularWeb,
    src: &QagSpace<F>,
    dst_web: &AnnularWeb,
    dst: &QagSpace<F>,
    crossing: usize,
    p: u32,
) -> Result<MatrixL<F>, GilmoreError> {
    let f = FoamMap::new(kind, src_web, src, dst_web, dst, crossing)?;
    f.check_well_defined(src_web, dst)?;
    Ok(f.matrix(src, dst, p))
}

/// The unzip map in degree `p`, checked for well-definedness.
pub fn unzip_matrix<F: Field>(
    src_web: &AnnularWeb,
    src: &QagSpace<F>,
    dst_web: &AnnularWeb,
    dst: &QagSpace<F>,
    crossing: usize,
    p: u32,
) -> Result<MatrixL<F>, GilmoreError> {
    checked_matrix(EdgeKind::Unzip, src_web, src, dst_web, dst, crossing, p)
}

/// The zip map from degree `p` to degree `p + 1`, checked for
/// well-definedness.
pub fn zip_matrix<F: Field>(
    src_web: &AnnularWeb,
    src: &QagSpace<F>,
    dst_web: &AnnularWeb,
    dst: &QagSpace<F>,
    crossing: usize,
    p: u32,
) -> Result<MatrixL<F>, GilmoreError> {
    checked_matrix(EdgeKind::Zip, src_web, src, dst_web, dst, crossing, p)
}
