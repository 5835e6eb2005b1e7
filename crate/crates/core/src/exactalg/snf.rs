//! Smith normal form over a Euclidean domain.
//!
//! The elimination works on a row-sparse copy of the matrix. Each step picks
//! the active entry of smallest Euclidean norm, breaking ties by the
//! Markowitz cost `(row_nnz - 1) * (col_nnz - 1)`, then clears its column
//! with row operations and its row with column operations. Remainders that
//! do not vanish become the next pivot. The resulting diagonal is turned
//! into a divisibility chain by 2x2 gcd/lcm moves and normalized to
//! canonical associates.
//!
//! Transforms are optional because the homology code only needs divisors,
//! while cokernel bases need the left transform and its inverse.

use super::matrix::{sparse_axpy, sparse_lincomb, Matrix, SparseMatrix};
use super::ring::EuclideanDomain;

type SparseRows<R> = Vec<Vec<(usize, R)>>;

/// Which transforms to record.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SnfOptions {
    /// Record `U` and `U^-1` (row side).
    pub left: bool,
    /// Record `V` and `V^-1` (column side).
    pub right: bool,
}

impl SnfOptions {
    pub const NONE: SnfOptions = SnfOptions { left: false, right: false };
    pub const LEFT: SnfOptions = SnfOptions { left: true, right: false };
    pub const BOTH: SnfOptions = SnfOptions { left: true, right: true };
}

/// Smith normal form with transforms in sparse form.
///
/// With `D = U * M * V`, entry `D[k][k]` is `divisors[k]` for `k < rank` and
/// every other entry is zero. Transforms are stored row-wise: `u[i]` is row
/// `i` of `U`, `u_inv_cols[j]` is column `j` of `U^-1`, `v_cols[j]` is
/// column `j` of `V` and `v_inv[i]` is row `i` of `V^-1`.
#[derive(Clone, Debug)]
pub struct SparseSnf<R> {
    pub nrows: usize,
    pub ncols: usize,
    pub divisors: Vec<R>,
    pub rank: usize,
    pub u: Option<SparseRows<R>>,
    pub u_inv_cols: Option<SparseRows<R>>,
    pub v_cols: Option<SparseRows<R>>,
    pub v_inv: Option<SparseRows<R>>,
}

/// Dense transforms of a Smith normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfTransforms<R> {
    pub u: Matrix<R>,
    pub u_inv: Matrix<R>,
    pub v: Matrix<R>,
    pub v_inv: Matrix<R>,
}

/// Result of [`smith_normal_form`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult<R> {
    /// Nonzero invariant factors `d_1 | d_2 | ...`, each a canonical associate.
    pub divisors: Vec<R>,
    /// Number of divisors, the rank over the fraction field.
    pub rank: usize,
    /// `U`, `V` with `U * M * V = D`, plus their inverses.
    pub transforms: Option<SnfTransforms<R>>,
}

impl<R: EuclideanDomain> SnfResult<R> {
    /// The diagonal matrix `D` with the shape of the input.
    pub fn diagonal(&self, rows: usize, cols: usize) -> Matrix<R> {
        let mut d = Matrix::zeros(rows, cols);
        for (k, x) in self.divisors.iter().enumerate() {
            d.set(k, k, x.clone());
        }
        d
    }
}

fn identity_rows<R: EuclideanDomain>(n: usize) -> SparseRows<R> {
    (0..n).map(|i| vec![(i, R::one())]).collect()
}

fn lookup<R: Clone>(row: &[(usize, R)], j: usize) -> Option<&R> {
    row.binary_search_by_key(&j, |e| e.0).ok().map(|p| &row[p].1)
}

fn set_entry<R: EuclideanDomain>(row: &mut Vec<(usize, R)>, j: usize, v: R) {
    match row.binary_search_by_key(&j, |e| e.0) {
        Ok(p) => {
            if v.is_zero() {
                row.remove(p);
            } else {
                row[p].1 = v;
            }
        }
        Err(p) => {
            if !v.is_zero() {
                row.insert(p, (j, v));
            }
        }
    }
}

fn scale_row<R: EuclideanDomain>(row: &mut [(usize, R)], c: &R) {
    for e in row.iter_mut() {
        e.1 = e.1.mul(c);
    }
}

struct Engine<R> {
    a: SparseRows<R>,
    u: Option<SparseRows<R>>,
    u_inv_cols: Option<SparseRows<R>>,
    v_cols: Option<SparseRows<R>>,
    v_inv: Option<SparseRows<R>>,
}

impl<R: EuclideanDomain> Engine<R> {
    /// Row `r` -= `c` * row `p`.
    fn row_op(&mut self, r: usize, p: usize, c: &R) {
        let src = self.a[p].clone();
        sparse_axpy(&mut self.a[r], c, &src);
        if let Some(u) = self.u.as_mut() {
            let src = u[p].clone();
            sparse_axpy(&mut u[r], c, &src);
        }
        if let Some(ui) = self.u_inv_cols.as_mut() {
            let src = ui[r].clone();
            sparse_axpy(&mut ui[p], &c.neg(), &src);
        }
    }

    /// Column `l` -= `c` * column `j`, where column `j` is supported only on
    /// row `p` of the working matrix.
    fn col_op_single(&mut self, p: usize, l: usize, j: usize, c: &R) {
        let pj = lookup(&self.a[p], j).cloned().expect("pivot entry");
        let cur = lookup(&self.a[p], l).cloned().unwrap_or_else(R::zero);
        set_entry(&mut self.a[p], l, cur.sub(&c.mul(&pj)));
        if let Some(v) = self.v_cols.as_mut() {
            let src = v[j].clone();
            sparse_axpy(&mut v[l], c, &src);
        }
        if let Some(vi) = self.v_inv.as_mut() {
            let src = vi[l].clone();
            sparse_axpy(&mut vi[j], &c.neg(), &src);
        }
    }
}

/// Computes the Smith normal form of a sparse matrix.
pub fn snf_sparse<R: EuclideanDomain>(m: &SparseMatrix<R>, opts: SnfOptions) -> SparseSnf<R> {
    let (nrows, ncols) = (m.nrows, m.ncols);
    let mut e = Engine {
        a: m.rows.clone(),
        u: opts.left.then(|| identity_rows(nrows)),
        u_inv_cols: opts.left.then(|| identity_rows(nrows)),
        v_cols: opts.right.then(|| identity_rows(ncols)),
        v_inv: opts.right.then(|| identity_rows(ncols)),
    };
    let mut row_active = vec![true; nrows];
    let mut pivots: Vec<(usize, usize, R)> = Vec::new();
    let mut colcount = vec![0usize; ncols];

    loop {
        // Pivot selection over all active entries.
        colcount.iter_mut().for_each(|c| *c = 0);
        for (i, row) in e.a.iter().enumerate() {
            if row_active[i] {
                for (j, _) in row {
                    colcount[*j] += 1;
                }
            }
        }
        let mut best: Option<(u64, usize, usize, usize)> = None;
        for (i, row) in e.a.iter().enumerate() {
            if !row_active[i] {
                continue;
            }
            if row.is_empty() {
                continue;
            }
            let rl = row.len() - 1;
            for (j, x) in row {
                let key = (x.norm(), rl * (colcount[*j] - 1));
                if best.is_none_or(|b| key < (b.0, b.1)) {
                    best = Some((key.0, key.1, i, *j));
                }
            }
            if best.is_some_and(|b| b.0 == 0 && b.1 == 0) {
                break;
            }
        }
        let Some((_, _, mut pi, mut pj)) = best else { break };

        loop {
            let u = lookup(&e.a[pi], pj).cloned().expect("pivot present");
            // Clear the pivot column with row operations.
            let mut repivot: Option<(u64, usize)> = None;
            for (r, &active) in row_active.iter().enumerate() {
                if r == pi || !active {
                    continue;
                }
                let Some(x) = lookup(&e.a[r], pj).cloned() else { continue };
                let (qt, rm) = x.div_rem(&u);
                if !qt.is_zero() {
                    e.row_op(r, pi, &qt);
                }
                if !rm.is_zero() && repivot.is_none_or(|b| rm.norm() < b.0) {
                    repivot = Some((rm.norm(), r));
                }
            }
            if let Some((_, r)) = repivot {
                pi = r;
                continue;
            }
            // Clear the pivot row with column operations.
            let entries: Vec<(usize, R)> = e.a[pi].iter().filter(|x| x.0 != pj).cloned().collect();
            let mut repivot: Option<(u64, usize)> = None;
            for (l, x) in entries {
                let (qt, rm) = x.div_rem(&u);
                if !qt.is_zero() {
                    e.col_op_single(pi, l, pj, &qt);
                }
                if !rm.is_zero() && repivot.is_none_or(|b| rm.norm() < b.0) {
                    repivot = Some((rm.norm(), l));
                }
            }
            if let Some((_, l)) = repivot {
                pj = l;
                continue;
            }
            pivots.push((pi, pj, u));
            row_active[pi] = false;
            break;
        }
    }

    finish(e, nrows, ncols, pivots)
}

fn permute_rows<R: Clone>(rows: SparseRows<R>, order: &[usize]) -> SparseRows<R> {
    let mut slots: Vec<Option<Vec<(usize, R)>>> = rows.into_iter().map(Some).collect();
    order.iter().map(|&i| slots[i].take().unwrap()).collect()
}

fn finish<R: EuclideanDomain>(
    mut e: Engine<R>,
    nrows: usize,
    ncols: usize,
    pivots: Vec<(usize, usize, R)>,
) -> SparseSnf<R> {
    let rank = pivots.len();
    // Row and column orders with pivots first.
    let mut row_order: Vec<usize> = pivots.iter().map(|p| p.0).collect();
    let mut col_order: Vec<usize> = pivots.iter().map(|p| p.1).collect();
    let mut seen = vec![false; nrows];
    row_order.iter().for_each(|&i| seen[i] = true);
    row_order.extend((0..nrows).filter(|&i| !seen[i]));
    let mut seen = vec![false; ncols];
    col_order.iter().for_each(|&j| seen[j] = true);
    col_order.extend((0..ncols).filter(|&j| !seen[j]));
    // P U reorders the rows of U; U^-1 P^T reorders the columns of U^-1.
    // Likewise V Q^T reorders columns of V and Q V^-1 rows of V^-1. The
    // entries inside each stored vector keep their indices.
    let mut u = e.u.take().map(|u| permute_rows(u, &row_order));
    let mut u_inv_cols = e.u_inv_cols.take().map(|ui| permute_rows(ui, &row_order));
    let mut v_cols = e.v_cols.take().map(|v| permute_rows(v, &col_order));
    let mut v_inv = e.v_inv.take().map(|vi| permute_rows(vi, &col_order));

    let mut d: Vec<R> = pivots.into_iter().map(|p| p.2).collect();

    // Divisibility chain via 2x2 gcd/lcm moves.
    for i in 0..rank {
        for k in i + 1..rank {
            if d[i].divides_into(&d[k]) {
                continue;
            }
            let (a, b) = (d[i].clone(), d[k].clone());
            let (g, s, t) = R::ext_gcd(&a, &b);
            let ag = a.exact_div(&g);
            let bg = b.exact_div(&g);
            // U' = [[s, t], [-b/g, a/g]] on rows (i, k) of U.
            if let Some(u) = u.as_mut() {
                let ri = sparse_lincomb(&s, &u[i], &t, &u[k]);
                let rk = sparse_lincomb(&bg.neg(), &u[i], &ag, &u[k]);
                u[i] = ri;
                u[k] = rk;
            }
            // U^-1 <- U^-1 [[a/g, -t], [b/g, s]] on columns (i, k).
            if let Some(ui) = u_inv_cols.as_mut() {
                let ci = sparse_lincomb(&ag, &ui[i], &bg, &ui[k]);
                let ck = sparse_lincomb(&t.neg(), &ui[i], &s, &ui[k]);
                ui[i] = ci;
                ui[k] = ck;
            }
            // V' = [[1, -t b/g], [1, s a/g]] on columns (i, k) of V.
            let tbg = t.mul(&bg);
            let sag = s.mul(&ag);
            if let Some(v) = v_cols.as_mut() {
                let ci = sparse_lincomb(&R::one(), &v[i], &R::one(), &v[k]);
                let ck = sparse_lincomb(&tbg.neg(), &v[i], &sag, &v[k]);
                v[i] = ci;
                v[k] = ck;
            }
            // V^-1 <- [[s a/g, t b/g], [-1, 1]] V^-1 on rows (i, k).
            if let Some(vi) = v_inv.as_mut() {
                let ri = sparse_lincomb(&sag, &vi[i], &tbg, &vi[k]);
                let rk = sparse_lincomb(&R::one().neg(), &vi[i], &R::one(), &vi[k]);
                vi[i] = ri;
                vi[k] = rk;
            }
            d[i] = g;
            d[k] = ag.mul(&b);
        }
    }

    // Canonical associates: d = unit * canon, fold unit^-1 into U.
    for (k, x) in d.iter_mut().enumerate() {
        let (unit, canon) = x.split_unit();
        if unit.is_one() {
            *x = canon;
            continue;
        }
        let inv = unit.unit_inverse().expect("unit");
        if let Some(u) = u.as_mut() {
            scale_row(&mut u[k], &inv);
        }
        if let Some(ui) = u_inv_cols.as_mut() {
            scale_row(&mut ui[k], &unit);
        }
        *x = canon;
    }

    SparseSnf { nrows, ncols, divisors: d, rank, u, u_inv_cols, v_cols, v_inv }
}

fn rows_to_dense<R: EuclideanDomain>(rows: &SparseRows<R>, ncols: usize) -> Matrix<R> {
    let mut m = Matrix::zeros(rows.len(), ncols);
    for (i, row) in rows.iter().enumerate() {
        for (j, v) in row {
            m.set(i, *j, v.clone());
        }
    }
    m
}

/// Smith normal form of a dense matrix, optionally with transforms.
pub fn smith_normal_form<R: EuclideanDomain>(m: &Matrix<R>, transforms: bool) -> SnfResult<R> {
    let opts = if transforms { SnfOptions::BOTH } else { SnfOptions::NONE };
    let s = snf_sparse(&m.to_sparse(), opts);
    let transforms = transforms.then(|| SnfTransforms {
        u: rows_to_dense(s.u.as_ref().unwrap(), s.nrows),
        u_inv: rows_to_dense(s.u_inv_cols.as_ref().unwrap(), s.nrows).transpose(),
        v: rows_to_dense(s.v_cols.as_ref().unwrap(), s.ncols).transpose(),
        v_inv: rows_to_dense(s.v_inv.as_ref().unwrap(), s.ncols),
    });
    SnfResult { divisors: s.divisors, rank: s.rank, transforms }
}

/// Rank over the fraction field.
pub fn rank_over_fraction_field<R: EuclideanDomain>(m: &Matrix<R>) -> usize {
    snf_sparse(&m.to_sparse(), SnfOptions::NONE).rank
}

/// Structure of the cokernel of `m` acting on columns, i.e. of
/// `R^rows / column span`: the free rank and the non-unit invariant factors.
pub fn cokernel_decompose<R: EuclideanDomain>(m: &Matrix<R>) -> (usize, Vec<R>) {
    let s = snf_sparse(&m.to_sparse(), SnfOptions::NONE);
    let torsion = s.divisors.into_iter().filter(|d| !d.is_unit()).collect();
    (m.rows() - s.rank, torsion)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{LaurentQ, Ring};
    use num_bigint::BigInt;

    type L = LaurentQ;

    fn lp(t: &[(i32, i64)]) -> L {
        L::from_int_terms(t)
    }

    fn check_transforms<R: EuclideanDomain>(m: &Matrix<R>) -> SnfResult<R> {
        let s = smith_normal_form(m, true);
        let t = s.transforms.as_ref().unwrap();
        let d = s.diagonal(m.rows(), m.cols());
        assert_eq!(t.u.mul(m).mul(&t.v), d);
        assert_eq!(t.u.mul(&t.u_inv), Matrix::identity(m.rows()));
        assert_eq!(t.v.mul(&t.v_inv), Matrix::identity(m.cols()));
        for w in s.divisors.windows(2) {
            assert!(w[0].divides_into(&w[1]));
        }
        s
    }

    #[test]
    fn integer_diagonal_becomes_chain() {
        let m = Matrix::<BigInt>::from_i64(&[vec![2, 0], vec![0, 3]]);
        let s = check_transforms(&m);
        assert_eq!(s.divisors, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn laurent_examples() {
        let qm1 = lp(&[(1, 1), (0, -1)]);
        let m = Matrix::from_rows(
            vec![vec![qm1.clone(), L::zero()], vec![L::zero(), qm1.pow(2).mul(&lp(&[(1, 1), (0, 1)]))]],
            2,
        );
        let s = check_transforms(&m);
        assert_eq!(s.divisors, vec![qm1.clone(), qm1.pow(2).mul(&lp(&[(1, 1), (0, 1)]))]);

        let q = lp(&[(1, 1)]);
        let m = Matrix::from_rows(vec![vec![q.clone(), L::one()], vec![L::one(), q.clone()]], 2);
        let s = check_transforms(&m);
        assert_eq!(s.divisors, vec![L::one(), lp(&[(2, 1), (0, -1)])]);
    }

    #[test]
    fn rank_and_cokernel_examples() {
        assert_eq!(rank_over_fraction_field(&Matrix::<L>::identity(3)), 3);
        assert_eq!(rank_over_fraction_field(&Matrix::<L>::zeros(2, 3)), 0);
        let qm1 = lp(&[(1, 1), (0, -1)]);
        let m = Matrix::from_rows(vec![vec![qm1.clone()], vec![qm1.mul(&lp(&[(1, 1)]))]], 1);
        assert_eq!(rank_over_fraction_field(&m), 1);

        let m = Matrix::from_rows(vec![vec![qm1.clone()]], 1);
        assert_eq!(cokernel_decompose(&m), (0, vec![qm1.clone()]));
        assert_eq!(cokernel_decompose(&Matrix::<L>::zeros(2, 0)), (2, vec![]));
        let m = Matrix::from_rows(vec![vec![qm1.clone(), L::zero()], vec![L::zero(), L::one()]], 2);
        assert_eq!(cokernel_decompose(&m), (0, vec![qm1]));
    }

    #[test]
    fn empty_matrix_has_no_divisors() {
        let s = check_transforms(&Matrix::<BigInt>::zeros(0, 3));
        assert!(s.divisors.is_empty());
        let s = check_transforms(&Matrix::<BigInt>::zeros(2, 0));
        assert_eq!(s.rank, 0);
    }
}
