//! The bigraded cube complex of a braid closure.
//!
//! Each resolution contributes its torsion-free quotient, shifted down in
//! quantum degree by its homological degree. Chain groups are direct sums
//! over resolutions of equal homological degree; a cube edge contributes its
//! signed zip or unzip block. Differentials preserve quantum degree, so the
//! complex splits into independent quantum-degree slices.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::exactalg::{Field, LaurentPoly, Matrix, Ring};
use crate::gilmore::{qag_space, FoamMap, GilmoreOptions, QagSpace};
use crate::webs::{cube, resolve, AnnularWeb, BraidWord, CubeVertex};

use super::HomologyError;

/// A bidegree `(hdeg, qdeg)`.
pub type Bidegree = (i32, i32);

/// A bigraded complex of free modules with differentials of bidegree
/// `(1, 0)`. `d[(h, q)]` maps the `(h, q)` group to the `(h + 1, q)` group,
/// with rows indexed by the target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeComplex<R> {
    pub ranks: BTreeMap<Bidegree, usize>,
    pub d: BTreeMap<Bidegree, Matrix<R>>,
}

impl<R: Ring> CubeComplex<R> {
    pub fn rank(&self, h: i32, q: i32) -> usize {
        self.ranks.get(&(h, q)).copied().unwrap_or(0)
    }

    /// The differential leaving `(h, q)`, as a possibly empty zero matrix
    /// when none was stored.
    pub fn differential(&self, h: i32, q: i32) -> Matrix<R> {
        self.d.get(&(h, q)).cloned().unwrap_or_else(|| Matrix::zeros(self.rank(h + 1, q), self.rank(h, q)))
    }

    /// Applies a ring map to every entry.
    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> CubeComplex<S> {
        CubeComplex { ranks: self.ranks.clone(), d: self.d.iter().map(|(k, m)| (*k, m.map(f))).collect() }
    }

    /// Quantum degrees with a nonzero group.
    pub fn qdegrees(&self) -> Vec<i32> {
        let mut q: Vec<i32> = self.ranks.iter().filter(|(_, &n)| n > 0).map(|(&(_, q), _)| q).collect();
        q.sort();
        q.dedup();
        q
    }

    /// Homological degrees with a nonzero group in quantum degree `q`.
    pub fn hdegrees(&self, q: i32) -> Vec<i32> {
        self.ranks.iter().filter(|(&(_, qq), &n)| qq == q && n > 0).map(|(&(h, _), _)| h).collect()
    }

    /// The first bidegree where `d o d` is nonzero, if any.
    pub fn d_squared_failure(&self) -> Option<Bidegree> {
        self.ranks.keys().copied().find(|&(h, q)| {
            let first = self.differential(h, q);
            let second = self.differential(h + 1, q);
            !second.mul(&first).is_zero()
        })
    }

    /// `sum (-1)^h rank q^qdeg`, as a map from quantum degree to coefficient.
    pub fn euler_characteristic(&self) -> BTreeMap<i32, i64> {
        let mut out = BTreeMap::new();
        for (&(h, q), &n) in &self.ranks {
            let sign = if h.rem_euclid(2) == 0 { 1 } else { -1 };
            *out.entry(q).or_insert(0) += sign * n as i64;
        }
        out.retain(|_, v| *v != 0);
        out
    }
}

/// Where the degree-`p` piece of a resolution sits inside its chain group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Slot {
    bidegree: Bidegree,
    offset: usize,
}

/// One signed block of the differential.
struct Block<F: Field> {
    source: usize,
    target: usize,
    crossing: usize,
    degree: u32,
    target_degree: u32,
    matrix: Matrix<LaurentPoly<F>>,
}

/// All the data of an assembled cube, kept for face checks.
pub struct CubeData<F: Field> {
    pub braid: BraidWord,
    pub vertices: Vec<CubeVertex>,
    pub webs: Vec<AnnularWeb>,
    pub spaces: Vec<QagSpace<F>>,
}

impl<F: Field> CubeData<F> {
    /// Resolves every vertex and computes its space, in parallel.
    pub fn new(braid: &BraidWord, opts: &GilmoreOptions) -> Self {
        let vertices = cube(braid);
        let webs: Vec<AnnularWeb> = vertices.iter().map(|v| resolve(braid, v.resolution)).collect();
        let spaces: Vec<QagSpace<F>> = webs.par_iter().map(|w| qag_space::<F>(w, opts)).collect();
        CubeData { braid: braid.clone(), vertices, webs, spaces }
    }

    /// Whether any vertex stopped at its degree bound with rank left over.
    pub fn truncated(&self) -> bool {
        self.spaces.iter().any(|s| s.truncated)
    }

    fn blocks(&self) -> Result<Vec<Block<F>>, HomologyError> {
        let edges: Vec<_> = self.vertices.iter().flat_map(|v| v.outgoing.iter().copied()).collect();
        let per_edge: Vec<Result<Vec<Block<F>>, HomologyError>> = edges
            .par_iter()
            .map(|e| {
                let (i, j) = (e.source.bits() as usize, e.target.bits() as usize);
                let f = FoamMap::new(e.kind, &self.webs[i], &self.spaces[i], &self.webs[j], &self.spaces[j], e.crossing)?;
                let sign = LaurentPoly::<F>::from_i64(e.sign as i64);
                Ok((0..self.spaces[i].pieces.len() as u32)
                    .filter(|&p| self.spaces[j].rank(f.target_degree(p)) > 0)
                    .map(|p| Block {
                        source: i,
                        target: j,
                        crossing: e.crossing,
                        degree: p,
                        target_degree: f.target_degree(p),
                        matrix: f.matrix(&self.spaces[i], &self.spaces[j], p).map(|x| x.mul(&sign)),
                    })
                    .collect())
            })
            .collect();
        let mut out = Vec::new();
        for r in per_edge {
            out.extend(r?);
        }
        Ok(out)
    }

    /// Checks every square face of the cube, returning the first one whose
    /// two signed composites do not cancel, as `(resolution bits, c1, c2)`.
    pub fn bad_face(&self) -> Result<Option<(u64, usize, usize)>, HomologyError> {
        Ok(self.find_bad_face(&self.blocks()?))
    }

    fn find_bad_face(&self, blocks: &[Block<F>]) -> Option<(u64, usize, usize)> {
        let index: HashMap<(usize, usize, u32), &Matrix<LaurentPoly<F>>> =
            blocks.iter().map(|b| ((b.source, b.crossing, b.degree), &b.matrix)).collect();
        let n = self.braid.len();
        // Unzips keep the polynomial degree, zips raise it by one.
        let target_degree = |c: usize, p: u32| -> u32 { if self.braid.is_positive(c) { p } else { p + 1 } };
        for (v, vert) in self.vertices.iter().enumerate() {
            let bits = vert.resolution.bits();
            for c1 in 0..n {
                for c2 in c1 + 1..n {
                    if (bits >> c1) & 1 == 1 || (bits >> c2) & 1 == 1 {
                        continue;
                    }
                    for p in 0..self.spaces[v].pieces.len() as u32 {
                        let path = |a: usize, b: usize| -> Option<Matrix<LaurentPoly<F>>> {
                            let mid = v | 1 << a;
                            let pm = target_degree(a, p);
                            let first = index.get(&(v, a, p))?;
                            let second = index.get(&(mid, b, pm))?;
                            Some(second.mul(first))
                        };
                        let sum = match (path(c1, c2), path(c2, c1)) {
                            (Some(x), Some(y)) => add(&x, &y),
                            (Some(x), None) | (None, Some(x)) => x,
                            (None, None) => continue,
                        };
                        if !sum.is_zero() {
                            return Some((bits, c1, c2));
                        }
                    }
                }
            }
        }
        None
    }
}

fn add<R: Ring>(a: &Matrix<R>, b: &Matrix<R>) -> Matrix<R> {
    let mut out = a.clone();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out.get_mut(i, j).add_assign(b.get(i, j));
        }
    }
    out
}

/// Assembles the complex over `K[q, q^-1]` and verifies `d o d = 0`.
pub fn assemble<F: Field>(braid: &BraidWord, opts: &GilmoreOptions) -> Result<CubeComplex<LaurentPoly<F>>, HomologyError> {
    let data = CubeData::<F>::new(braid, opts);
    assemble_from(&data)
}

/// Assembles the complex from precomputed vertex spaces.
pub fn assemble_from<F: Field>(data: &CubeData<F>) -> Result<CubeComplex<LaurentPoly<F>>, HomologyError> {
    if data.truncated() {
        return Err(HomologyError::DegreeBoundTooSmall);
    }
    let mut ranks: BTreeMap<Bidegree, usize> = BTreeMap::new();
    let mut slots: HashMap<(usize, u32), Slot> = HashMap::new();
    for (v, vert) in data.vertices.iter().enumerate() {
        for piece in &data.spaces[v].pieces {
            let bidegree = (vert.hdeg, piece.qdeg + vert.qshift);
            let r = ranks.entry(bidegree).or_insert(0);
            slots.insert((v, piece.degree), Slot { bidegree, offset: *r });
            *r += piece.rank;
        }
    }
    let blocks = data.blocks()?;
    let mut d: BTreeMap<Bidegree, Matrix<LaurentPoly<F>>> = BTreeMap::new();
    for b in &blocks {
        let src = slots[&(b.source, b.degree)];
        let tgt = slots[&(b.target, b.target_degree)];
        debug_assert_eq!(tgt.bidegree, (src.bidegree.0 + 1, src.bidegree.1));
        let (h, q) = src.bidegree;
        let m = d.entry(src.bidegree).or_insert_with(|| Matrix::zeros(ranks[&(h + 1, q)], ranks[&(h, q)]));
        for i in 0..b.matrix.rows() {
            for j in 0..b.matrix.cols() {
                let x = b.matrix.get(i, j);
                if !x.is_zero() {
                    m.get_mut(tgt.offset + i, src.offset + j).add_assign(x);
                }
            }
        }
    }
    let complex = CubeComplex { ranks, d };
    if let Some(bidegree) = complex.d_squared_failure() {
        let face = data.find_bad_face(&blocks);
        return Err(HomologyError::DSquaredNonzero { bidegree, face });
    }
    Ok(complex)
}

/// The complex specialized at `q = 1`.
pub fn specialize_at_one<F: Field>(c: &CubeComplex<LaurentPoly<F>>) -> CubeComplex<F> {
    c.map(|x| x.eval_one())
}
