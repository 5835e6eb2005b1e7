//! Graded dimensions of the gl1 and gl0 state spaces as ranks of pairing
//! matrices.
//!
//! A decoration of polynomial degree `p` sits in quantum degree `2p - s`
//! (gl1) or `2p - s + k - 1` (gl0), with `s` the number of dumbbells. The
//! gl1 pairing of monomials `S`, `T` is nonzero only for
//! `deg S + deg T = s`, and the gl0 pairing only for
//! `deg S + deg T = s - k + 1`, so each degree is the rank of one block.
//!
//! Because evaluation at a coloring is multiplicative, a block factors as
//! `A * W * B^t` with `A[S][c] = phi_c(S)`, `B[T][c] = phi_c(T)` and
//! `W = diag(1 / Q(w, c))`, all at a generic point. Its rank equals the rank
//! of `P * W * R^t` for row-space bases `P`, `R` of `A`, `B`, which are small
//! because they live in the space of functions on colorings. The row space
//! of degree-`p` monomials is built by multiplying the degree-`(p-1)` basis
//! entrywise with each edge vector. The explicit Gram blocks over monomials
//! are also provided and used to cross-check on small webs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exactalg::{rank_over_fraction_field, Field, MPoly, Matrix, Monomial, Rational, Ring};
use crate::webs::AnnularWeb;

use super::coloring::omnichrome_colorings;
use super::evaluation::{eval_coloring, eval_gl1, generic_point};

/// Dimension per quantum degree; zero dimensions are not stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDims(pub BTreeMap<i32, usize>);

impl GradedDims {
    pub fn new() -> Self {
        GradedDims(BTreeMap::new())
    }

    pub fn from_pairs(pairs: &[(i32, usize)]) -> Self {
        let mut g = GradedDims::new();
        for &(d, n) in pairs {
            g.add(d, n);
        }
        g
    }

    pub fn add(&mut self, degree: i32, dim: usize) {
        if dim > 0 {
            *self.0.entry(degree).or_insert(0) += dim;
        }
    }

    pub fn get(&self, degree: i32) -> usize {
        self.0.get(&degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    /// Every degree moved by `by`.
    pub fn shifted(&self, by: i32) -> GradedDims {
        GradedDims(self.0.iter().map(|(&d, &n)| (d + by, n)).collect())
    }

    /// Degreewise sum.
    pub fn plus(&self, o: &GradedDims) -> GradedDims {
        let mut r = self.clone();
        for (&d, &n) in &o.0 {
            r.add(d, n);
        }
        r
    }

    /// Drops degrees above `bound`.
    pub fn capped(self, bound: Option<i32>) -> GradedDims {
        match bound {
            Some(b) => GradedDims(self.0.into_iter().filter(|&(d, _)| d <= b).collect()),
            None => self,
        }
    }
}

/// The two descriptions of the map defining gl0 from gl1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PhiStar {
    /// Multiply the marked edge by `x^{k-1}`.
    MarkedPower,
    /// Put one dot on every edge below the marking on the trace section.
    DotsBelow,
}

impl PhiStar {
    /// The decoration the map multiplies by.
    pub fn decoration(self, w: &AnnularWeb) -> MPoly<Rational> {
        let nv = w.thin_count();
        let mut m = vec![0u32; nv];
        match self {
            PhiStar::MarkedPower => m[w.marked_edge()] += w.strands() as u32 - 1,
            PhiStar::DotsBelow => {
                for e in w.edges_below_marking() {
                    m[e] += 1;
                }
            }
        }
        MPoly::term(m, Rational::one())
    }
}

/// All exponent vectors of total degree `d` in `n` variables, in
/// lexicographic order.
pub fn monomials(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.is_empty() {
            if left == 0 {
                out.push(Vec::new());
            }
            return;
        }
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            cur[i] = 0;
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// Explicit gl1 Gram block: rows are monomials of degree `p`, columns
/// monomials of degree `s - p`, entries `<S; w; T>_1`.
pub fn gl1_gram(w: &AnnularWeb, p: u32) -> Matrix<Rational> {
    twisted_gram(w, p, None)
}

/// Explicit gl0 Gram block: rows are monomials `S` of degree `p`, columns
/// monomials `T` of degree `s - k + 1 - p`, entries `<phi(S); w; T>_1`.
pub fn gl0_gram(w: &AnnularWeb, p: u32, phi: PhiStar) -> Matrix<Rational> {
    twisted_gram(w, p, Some(phi))
}

fn twisted_gram(w: &AnnularWeb, p: u32, phi: Option<PhiStar>) -> Matrix<Rational> {
    let nv = w.thin_count();
    let s = w.thick_count() as i64;
    let twist = phi.map(|f| f.decoration(w)).unwrap_or_else(|| MPoly::one(nv));
    let tdeg = twist.total_degree().unwrap_or(0) as i64;
    let q = s - tdeg - p as i64;
    let rows = monomials(nv, p);
    let cols = if q >= 0 { monomials(nv, q as u32) } else { Vec::new() };
    let mut g = Matrix::zeros(rows.len(), cols.len());
    for (i, a) in rows.iter().enumerate() {
        let sa = twist.mul_monomial(a);
        for (j, b) in cols.iter().enumerate() {
            g.set(i, j, eval_gl1(w, &sa.mul_monomial(b)));
        }
    }
    g
}

/// A row-echelon basis of a subspace of `F^n`, grown one vector at a time.
struct RowSpace<F> {
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> RowSpace<F> {
    fn new() -> Self {
        RowSpace { rows: Vec::new(), pivots: Vec::new() }
    }

    /// Adds `v` if it is independent of the current basis.
    fn insert(&mut self, mut v: Vec<F>) -> bool {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    x.sub_mul_assign(&c, r);
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                let inv = v[p].inv();
                for x in v.iter_mut() {
                    *x = x.mul(&inv);
                }
                self.rows.push(v);
                self.pivots.push(p);
                true
            }
            None => false,
        }
    }
}

/// Per-coloring data for the fast rank computation.
struct ColoringTable {
    /// `edge[e][c]`: pigment value of thin edge `e` under coloring `c`.
    edge: Vec<Vec<Rational>>,
    /// `1 / Q(w, c)` at the generic point.
    weight: Vec<Rational>,
}

impl ColoringTable {
    fn new(w: &AnnularWeb) -> Self {
        let pt = generic_point(w.strands());
        let colorings = omnichrome_colorings(w);
        let edge = (0..w.thin_count()).map(|e| colorings.iter().map(|c| pt[c.thin[e]].clone()).collect()).collect();
        let one = MPoly::one(w.thin_count());
        let weight = colorings.iter().map(|c| eval_coloring(w, &one, c).eval(&pt)).collect();
        ColoringTable { edge, weight }
    }

    fn len(&self) -> usize {
        self.weight.len()
    }

    /// Row-space bases of the evaluation vectors of all monomials of degree
    /// `0..=max`.
    fn monomial_spans(&self, max: u32) -> Vec<Vec<Vec<Rational>>> {
        let mut spans = Vec::new();
        let mut current = RowSpace::new();
        current.insert(vec![Rational::one(); self.len()]);
        spans.push(current.rows.clone());
        for _ in 0..max {
            let mut next = RowSpace::new();
            for u in &current.rows {
                for ev in &self.edge {
                    next.insert(u.iter().zip(ev).map(|(a, b)| a.mul(b)).collect());
                }
            }
            spans.push(next.rows.clone());
            current = next;
        }
        spans
    }

    /// Evaluation vector of a monomial decoration.
    fn monomial_vector(&self, m: &MPoly<Rational>) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.len()];
        for (exp, coeff) in m.terms() {
            for (c, x) in v.iter_mut().enumerate() {
                let mut t = coeff.clone();
                for (e, &k) in exp.iter().enumerate() {
                    if k > 0 {
                        t = t.mul(&self.edge[e][c].pow(k));
                    }
                }
                x.add_assign(&t);
            }
        }
        v
    }

    /// Rank of `P * diag(twist * weight) * R^t`.
    fn pairing_rank(&self, p: &[Vec<Rational>], r: &[Vec<Rational>], twist: &[Rational]) -> usize {
        if p.is_empty() || r.is_empty() {
            return 0;
        }
        let tw: Vec<Rational> = twist.iter().zip(&self.weight).map(|(a, b)| a.mul(b)).collect();
        let rows: Vec<Vec<Rational>> = p
            .iter()
            .map(|pi| {
                r.iter()
                    .map(|rj| {
                        pi.iter().zip(rj).zip(&tw).fold(Rational::zero(), |acc, ((a, b), t)| {
                            if a.is_zero() || b.is_zero() {
                                acc
                            } else {
                                acc.add(&a.mul(b).mul(t))
                            }
                        })
                    })
                    .collect()
            })
            .collect();
        rank_over_fraction_field(&Matrix::from_rows(rows, r.len()))
    }
}

/// Graded dimensions of the gl1 state space.
pub fn gl1_dims(w: &AnnularWeb, degree_bound: Option<i32>) -> GradedDims {
    let s = w.thick_count() as u32;
    let table = ColoringTable::new(w);
    let spans = table.monomial_spans(s);
    let ones = vec![Rational::one(); table.len()];
    let mut out = GradedDims::new();
    for p in 0..=s {
        let r = table.pairing_rank(&spans[p as usize], &spans[(s - p) as usize], &ones);
        out.add(2 * p as i32 - s as i32, r);
    }
    out.capped(degree_bound)
}

/// Graded dimensions of the gl0 state space of a marked web, using the
/// marked-power description of the twist.
pub fn gl0_dims(w: &AnnularWeb, degree_bound: Option<i32>) -> GradedDims {
    gl0_dims_with(w, PhiStar::MarkedPower, degree_bound)
}

/// Graded dimensions of the gl0 state space for either twist description.
pub fn gl0_dims_with(w: &AnnularWeb, phi: PhiStar, degree_bound: Option<i32>) -> GradedDims {
    let s = w.thick_count() as i64;
    let k = w.strands() as i64;
    let mut out = GradedDims::new();
    let top = s - (k - 1);
    if top < 0 {
        return out;
    }
    let table = ColoringTable::new(w);
    let spans = table.monomial_spans(top as u32);
    let twist = table.monomial_vector(&phi.decoration(w));
    for p in 0..=top {
        let r = table.pairing_rank(&spans[p as usize], &spans[(top - p) as usize], &twist);
        out.add((2 * p - s + k - 1) as i32, r);
    }
    out.capped(degree_bound)
}

/// Rank of an explicit Gram block, for cross-checks.
pub fn gram_rank(g: &Matrix<Rational>) -> usize {
    rank_over_fraction_field(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::webs::{parse_braid, resolve, Resolution};

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(1, 4), vec![vec![4]]);
        assert_eq!(monomials(0, 0), vec![Vec::<u32>::new()]);
        assert!(monomials(0, 1).is_empty());
    }

    #[test]
    fn circles_have_rank_one_in_degree_zero() {
        let unknot = resolve(&parse_braid("", 1).unwrap(), Resolution::new(0, 0));
        assert_eq!(gl1_dims(&unknot, None), GradedDims::from_pairs(&[(0, 1)]));
        assert_eq!(gl0_dims(&unknot, None), GradedDims::from_pairs(&[(0, 1)]));
        let two = resolve(&parse_braid("1", 2).unwrap(), Resolution::from_slice(&[1]));
        assert_eq!(gl1_dims(&two, None), GradedDims::from_pairs(&[(0, 1)]));
        assert_eq!(gl0_dims(&two, None).total(), 0);
    }

    #[test]
    fn trefoil_singular_vertex() {
        let w = resolve(&parse_braid("1 1 1", 2).unwrap(), Resolution::new(0, 3));
        assert_eq!(gl0_dims(&w, None), GradedDims::from_pairs(&[(2, 1), (0, 2), (-2, 1)]));
        assert_eq!(gl0_dims_with(&w, PhiStar::DotsBelow, None), gl0_dims(&w, None));
    }

    #[test]
    fn chain_of_dumbbells_has_one_dimensional_gl0() {
        for k in 2..=4usize {
            let letters: Vec<i32> = (1..k as i32).collect();
            let b = crate::webs::BraidWord::new(k, letters).unwrap();
            let w = resolve(&b, Resolution::new(0, k - 1));
            assert_eq!(gl0_dims(&w, None).total(), 1, "D_{k}");
        }
    }

    #[test]
    fn fast_ranks_match_explicit_gram() {
        let w = resolve(&parse_braid("1 1", 2).unwrap(), Resolution::new(0, 2));
        let s = w.thick_count() as u32;
        for p in 0..=s {
            let fast = gl1_dims(&w, None).get(2 * p as i32 - s as i32);
            assert_eq!(fast, gram_rank(&gl1_gram(&w, p)));
        }
        for p in 0..s {
            let fast = gl0_dims(&w, None).get(2 * p as i32 - s as i32 + 1);
            assert_eq!(fast, gram_rank(&gl0_gram(&w, p, PhiStar::MarkedPower)));
        }
    }
}
