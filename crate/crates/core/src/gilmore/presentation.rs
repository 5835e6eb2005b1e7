//! Graded presentations of the Gilmore space and their torsion-free
//! quotients.
//!
//! Linear relations with a unit coefficient are solved first, which leaves a
//! polynomial ring in the remaining free variables. In each polynomial degree
//! `p` the relation matrix has one row per product `m * r` of a relation `r`
//! with a monomial `m` and one column per monomial of degree `p`; the degree
//! `p` piece of the space is the quotient of the free module on monomials by
//! the row span. Its Smith normal form `U M V = D` gives both the free rank
//! and a basis of the torsion-free quotient: the coordinates `x V` beyond the
//! rank project onto it, and the matching rows of `V^-1` lift its basis.

use std::collections::HashMap;

use serde::Serialize;

use crate::evalspaces::{monomials, GradedDims};
use crate::exactalg::{snf_sparse, EuclideanDomain, Field, LaurentPoly, MPoly, Monomial, Ring, SnfOptions, SparseMatrix};
use crate::webs::AnnularWeb;

use super::relations::{all_relations, Relation, RelationSet};

type L<F> = LaurentPoly<F>;
type Poly<F> = MPoly<L<F>>;
/// A sparse vector as sorted `(index, nonzero entry)` pairs.
pub type SparseVec<F> = Vec<(usize, L<F>)>;

/// Knobs shared by every presentation-based computation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GilmoreOptions {
    /// Largest polynomial degree to compute. `None` means twice the number
    /// of thin edges. Computation always stops early at the first degree
    /// whose free rank vanishes, since the space is generated in degree 1.
    pub degree_bound: Option<u32>,
    /// Reverse the variable priority in the linear elimination and the
    /// monomial order, to test that nothing depends on these choices.
    pub reverse_order: bool,
}

/// The result of solving the linear relations with unit coefficients.
#[derive(Clone, Debug)]
pub struct LinearElimination<F: Field> {
    /// Number of thin-edge variables.
    pub nvars: usize,
    /// The thin edge behind each free variable.
    pub free: Vec<usize>,
    /// Each thin-edge variable as a linear form in the free variables.
    pub images: Vec<Poly<F>>,
    /// The remaining relations, rewritten in the free variables and nonzero.
    pub residual: Vec<Relation<F>>,
}

impl<F: Field> LinearElimination<F> {
    pub fn nfree(&self) -> usize {
        self.free.len()
    }

    /// Rewrites a polynomial in thin-edge variables in the free variables.
    pub fn substitute(&self, p: &Poly<F>) -> Poly<F> {
        p.compose(&self.images)
    }
}

/// Gauss-Jordan elimination on the linear relations, pivoting only on unit
/// coefficients; the rest of the relations are rewritten afterwards.
pub fn eliminate_linear<F: Field>(rels: &RelationSet<F>, reverse: bool) -> LinearElimination<F> {
    let nv = rels.nvars;
    let mut rows: Vec<Vec<L<F>>> = Vec::new();
    let mut rest: Vec<&Relation<F>> = Vec::new();
    for r in &rels.relations {
        if r.degree() == 1 {
            let mut row = vec![L::<F>::zero(); nv];
            for (m, c) in r.poly.terms() {
                let v = m.iter().position(|&e| e == 1).expect("linear term");
                row[v] = c.clone();
            }
            rows.push(row);
        } else {
            rest.push(r);
        }
    }
    let priority: Vec<usize> = if reverse { (0..nv).collect() } else { (0..nv).rev().collect() };
    let mut pivot_of_row: Vec<Option<usize>> = vec![None; rows.len()];
    let mut is_pivot = vec![false; nv];
    loop {
        let mut found = None;
        'search: for (i, row) in rows.iter().enumerate() {
            if pivot_of_row[i].is_some() {
                continue;
            }
            for &v in &priority {
                if row[v].is_unit() {
                    found = Some((i, v));
                    break 'search;
                }
            }
        }
        let Some((pi, pv)) = found else { break };
        let inv = rows[pi][pv].unit_inverse().expect("unit");
        for x in rows[pi].iter_mut() {
            *x = x.mul(&inv);
        }
        let prow = rows[pi].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == pi || row[pv].is_zero() {
                continue;
            }
            let c = row[pv].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    x.sub_mul_assign(&c, y);
                }
            }
        }
        pivot_of_row[pi] = Some(pv);
        is_pivot[pv] = true;
    }
    let free: Vec<usize> = (0..nv).filter(|&v| !is_pivot[v]).collect();
    let nf = free.len();
    let mut slot = vec![usize::MAX; nv];
    for (t, &v) in free.iter().enumerate() {
        slot[v] = t;
    }
    let mut images: Vec<Poly<F>> = (0..nv)
        .map(|v| if is_pivot[v] { MPoly::zero(nf) } else { MPoly::var(nf, slot[v]) })
        .collect();
    let as_form = |row: &[L<F>]| {
        let mut p = MPoly::zero(nf);
        for (t, &v) in free.iter().enumerate() {
            if !row[v].is_zero() {
                let mut m = vec![0u32; nf];
                m[t] = 1;
                p.add_term(m, &row[v]);
            }
        }
        p
    };
    let mut residual = Vec::new();
    let mut linear_kinds = rels.relations.iter().filter(|r| r.degree() == 1).map(|r| r.kind);
    for (i, row) in rows.iter().enumerate() {
        let kind = linear_kinds.next().expect("kind");
        match pivot_of_row[i] {
            Some(pv) => images[pv] = as_form(row).neg(),
            None => {
                let p = as_form(row);
                if !p.is_zero() {
                    residual.push(Relation { kind, poly: p });
                }
            }
        }
    }
    let mut elim = LinearElimination { nvars: nv, free, images, residual };
    let rewritten: Vec<Relation<F>> = rest
        .into_iter()
        .filter_map(|r| {
            let p = elim.substitute(&r.poly);
            (!p.is_zero()).then_some(Relation { kind: r.kind, poly: p })
        })
        .collect();
    elim.residual.extend(rewritten);
    elim
}

/// The degree-`p` piece of a presentation: rows are the products of
/// relations with monomials, columns the monomials of degree `p`.
#[derive(Clone, Debug)]
pub struct GradedPiece<F: Field> {
    pub degree: u32,
    pub monomials: Vec<Monomial>,
    pub index: HashMap<Monomial, usize>,
    pub matrix: SparseMatrix<L<F>>,
}

/// A web's relations after linear elimination, ready to be cut into graded
/// pieces.
#[derive(Clone, Debug)]
pub struct GradedModulePresentation<F: Field> {
    pub strands: usize,
    pub thick: usize,
    pub thin: usize,
    pub elimination: LinearElimination<F>,
    pub reverse_order: bool,
}

/// Quantum degree, before the cube shift, of polynomial degree `p` on a web
/// with `s` thick edges and `k` strands.
pub fn quantum_degree(p: u32, s: usize, k: usize) -> i32 {
    2 * p as i32 - s as i32 + k as i32 - 1
}

/// Builds the relations of `w` and eliminates the linear ones.
pub fn graded_presentation<F: Field>(w: &AnnularWeb, opts: &GilmoreOptions) -> GradedModulePresentation<F> {
    let rels = all_relations::<F>(w);
    GradedModulePresentation {
        strands: w.strands(),
        thick: w.thick_count(),
        thin: w.thin_count(),
        elimination: eliminate_linear(&rels, opts.reverse_order),
        reverse_order: opts.reverse_order,
    }
}

impl<F: Field> GradedModulePresentation<F> {
    /// Default degree bound: twice the number of thin edges.
    pub fn default_bound(&self) -> u32 {
        2 * self.thin as u32
    }

    pub fn quantum_degree(&self, p: u32) -> i32 {
        quantum_degree(p, self.thick, self.strands)
    }

    /// The highest polynomial degree that can carry free rank,
    /// `thick - strands + 1`, or `None` when no degree can. At `q = 1` the
    /// free quotient is the `gl0` state space, whose pairing puts degrees `p`
    /// and `thick - strands + 1 - p` in duality.
    pub fn top_degree(&self) -> Option<u32> {
        (self.thick + 1).checked_sub(self.strands).map(|t| t as u32)
    }

    /// Monomials of degree `p` in the free variables, in the configured order.
    pub fn monomial_basis(&self, p: u32) -> Vec<Monomial> {
        let mut m = monomials(self.elimination.nfree(), p);
        if self.reverse_order {
            m.reverse();
        }
        m
    }

    pub fn piece(&self, p: u32) -> GradedPiece<F> {
        let basis = self.monomial_basis(p);
        let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let nf = self.elimination.nfree();
        let mut rows = Vec::new();
        for r in &self.elimination.residual {
            let d = r.degree();
            if d > p {
                continue;
            }
            for m in monomials(nf, p - d) {
                let mut row: SparseVec<F> =
                    r.poly.mul_monomial(&m).terms().map(|(t, c)| (index[t], c.clone())).collect();
                row.sort_by_key(|e| e.0);
                rows.push(row);
            }
        }
        let matrix = SparseMatrix { nrows: rows.len(), ncols: basis.len(), rows };
        GradedPiece { degree: p, monomials: basis, index, matrix }
    }

    /// Coordinates of a homogeneous polynomial in thin-edge variables,
    /// rewritten in the free variables, in the monomial basis of degree `p`.
    pub fn coordinates(&self, poly: &Poly<F>, piece: &GradedPiece<F>) -> SparseVec<F> {
        let p = self.elimination.substitute(poly);
        let mut v: SparseVec<F> = p
            .terms()
            .map(|(m, c)| {
                let i = *piece.index.get(m).expect("polynomial of the wrong degree");
                (i, c.clone())
            })
            .collect();
        v.sort_by_key(|e| e.0);
        v
    }

    /// Whether a homogeneous polynomial in thin-edge variables lies in the
    /// relation ideal, i.e. vanishes in the Gilmore space itself (not only
    /// in its torsion-free quotient).
    pub fn reduces_to_zero(&self, poly: &Poly<F>) -> bool {
        let sub = self.elimination.substitute(poly);
        let Some(p) = sub.total_degree() else { return true };
        assert!(sub.is_homogeneous_of(p), "inhomogeneous polynomial");
        let piece = self.piece(p);
        let x = self.coordinates(poly, &piece);
        let snf = snf_sparse(&piece.matrix, SnfOptions { left: false, right: true });
        let v_cols = snf.v_cols.expect("right transform");
        // y = x V; row span = { y : y_j = 0 for j >= rank, d_j | y_j }.
        v_cols.iter().enumerate().all(|(j, col)| {
            let y = dot(&x, col);
            if j < snf.rank {
                snf.divisors[j].divides_into(&y)
            } else {
                y.is_zero()
            }
        })
    }
}

/// Inner product of two sparse vectors.
pub(crate) fn dot<F: Field>(a: &[(usize, L<F>)], b: &[(usize, L<F>)]) -> L<F> {
    let (mut i, mut j) = (0, 0);
    let mut acc = L::<F>::zero();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc.add_assign(&a[i].1.mul(&b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// The torsion-free quotient in one polynomial degree.
#[derive(Clone, Debug)]
pub struct QagPiece<F: Field> {
    pub degree: u32,
    /// Quantum degree before the cube shift.
    pub qdeg: i32,
    pub rank: usize,
    /// Non-unit invariant factors of the discarded torsion.
    pub torsion: Vec<L<F>>,
    pub monomials: Vec<Monomial>,
    pub index: HashMap<Monomial, usize>,
    /// `projection[i]` holds the free coordinates of monomial `i`.
    pub projection: Vec<SparseVec<F>>,
    /// `basis[t]` is basis vector `t` lifted to monomial coordinates.
    pub basis: Vec<SparseVec<F>>,
}

impl<F: Field> QagPiece<F> {
    /// Free coordinates of a vector in monomial coordinates.
    pub fn project(&self, x: &[(usize, L<F>)]) -> Vec<L<F>> {
        let mut y = vec![L::<F>::zero(); self.rank];
        for (i, c) in x {
            for (t, v) in &self.projection[*i] {
                y[*t].add_assign(&c.mul(v));
            }
        }
        y
    }
}

fn qag_piece<F: Field>(pres: &GradedModulePresentation<F>, p: u32) -> QagPiece<F> {
    let piece = pres.piece(p);
    let n = piece.monomials.len();
    let snf = snf_sparse(&piece.matrix, SnfOptions { left: false, right: true });
    let r = snf.rank;
    let rank = n - r;
    let v_cols = snf.v_cols.expect("right transform");
    let v_inv = snf.v_inv.expect("right transform");
    let mut projection: Vec<SparseVec<F>> = vec![Vec::new(); n];
    for (t, col) in v_cols[r..].iter().enumerate() {
        for (i, x) in col {
            projection[*i].push((t, x.clone()));
        }
    }
    let basis = v_inv[r..].to_vec();
    let torsion = snf.divisors.into_iter().filter(|d| !d.is_unit()).collect();
    QagPiece {
        degree: p,
        qdeg: pres.quantum_degree(p),
        rank,
        torsion,
        monomials: piece.monomials,
        index: piece.index,
        projection,
        basis,
    }
}

/// The torsion-free quotient of the Gilmore space, degree by degree.
#[derive(Clone, Debug)]
pub struct QagSpace<F: Field> {
    pub presentation: GradedModulePresentation<F>,
    /// Pieces for polynomial degrees `0..pieces.len()`; every higher degree
    /// has free rank 0 unless `truncated` is set.
    pub pieces: Vec<QagPiece<F>>,
    /// Set when the degree bound stopped the computation before the free
    /// rank vanished.
    pub truncated: bool,
}

impl<F: Field> QagSpace<F> {
    pub fn piece(&self, p: u32) -> Option<&QagPiece<F>> {
        self.pieces.get(p as usize)
    }

    pub fn rank(&self, p: u32) -> usize {
        self.piece(p).map_or(0, |x| x.rank)
    }

    pub fn total_rank(&self) -> usize {
        self.pieces.iter().map(|x| x.rank).sum()
    }

    /// Free ranks by quantum degree, before the cube shift.
    pub fn dims(&self) -> GradedDims {
        let mut d = GradedDims::new();
        for x in &self.pieces {
            if x.rank > 0 {
                d.add(x.qdeg, x.rank);
            }
        }
        d
    }
}

/// Computes the torsion-free quotient degree by degree, stopping at the
/// first degree of free rank 0, past the top degree, or at the degree bound.
pub fn qag_space<F: Field>(w: &AnnularWeb, opts: &GilmoreOptions) -> QagSpace<F> {
    let presentation = graded_presentation::<F>(w, opts);
    let bound = opts.degree_bound.unwrap_or_else(|| presentation.default_bound());
    let mut pieces = Vec::new();
    let mut truncated = false;
    let top = presentation.top_degree();
    for p in 0.. {
        if top.is_none_or(|t| p > t) {
            break;
        }
        if p > bound {
            truncated = true;
            break;
        }
        let piece = qag_piece(&presentation, p);
        if piece.rank == 0 {
            break;
        }
        pieces.push(piece);
    }
    QagSpace { presentation, pieces, truncated }
}

/// Dimensions of the torsion-free quotient tensored down to `q = 1`.
pub fn ag_at_q1<F: Field>(w: &AnnularWeb, opts: &GilmoreOptions) -> GradedDims {
    qag_space::<F>(w, opts).dims()
}

