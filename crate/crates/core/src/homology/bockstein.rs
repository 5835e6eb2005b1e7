//! Bockstein spectral sequences of free complexes over a discrete valuation.
//!
//! For a free complex `C` over a Euclidean domain and a prime element `p`,
//! the spectral sequence starts at `E_1 = H(C / p)` and converges to the free
//! part of `H(C)`. Every torsion summand `R / f` of `H_h(C)` with
//! `v = val_p(f) >= 1` contributes one class to `E_r` in degrees `h - 1` and
//! `h` for `r <= v`, and those two classes are killed by `d_v`. Reading the
//! pages off the invariant factors is therefore exact.
//!
//! The literal constructions below build `Z_r` and `B_r` directly from
//! their definitions and serve as an independent check.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::exactalg::{rank_over_fraction_field, EuclideanDomain, Field, LaurentPoly, Matrix};

use super::complex::CubeComplex;
use super::table::{HomologyTable, PoincarePolynomial};

/// Pages of a Bockstein spectral sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BocksteinReport {
    /// `pages[r - 1]` is `E_r`, for `r = 1..=stabilization`.
    pub pages: Vec<PoincarePolynomial>,
    /// The first page equal to `E_infinity`: one more than the largest
    /// `p`-adic valuation of a torsion coefficient.
    pub stabilization: usize,
    pub einf: PoincarePolynomial,
}

impl BocksteinReport {
    pub fn e1(&self) -> &PoincarePolynomial {
        &self.pages[0]
    }

    /// The page `E_r` for any `r >= 1`.
    pub fn page(&self, r: usize) -> &PoincarePolynomial {
        assert!(r >= 1, "pages start at 1");
        &self.pages[(r - 1).min(self.pages.len() - 1)]
    }

    /// Whether dimensions never increase from page to page.
    pub fn is_monotone(&self) -> bool {
        self.pages.windows(2).all(|w| w[1].terms().all(|(t, q, n)| n <= w[0].coeff(t, q)))
    }

    /// Whether, in every quantum degree, each page loses an even number of
    /// classes to the next. A differential of bidegree `(1, 0)` kills classes
    /// in pairs within one quantum degree.
    pub fn differences_are_even(&self) -> bool {
        self.pages.windows(2).all(|w| {
            let lost = |p: &PoincarePolynomial| {
                let mut by_q: BTreeMap<i32, usize> = BTreeMap::new();
                for (_, q, n) in p.terms() {
                    *by_q.entry(q).or_insert(0) += n;
                }
                by_q
            };
            let (a, b) = (lost(&w[0]), lost(&w[1]));
            a.iter().all(|(q, &n)| (n - b.get(q).copied().unwrap_or(0)) % 2 == 0)
        })
    }
}

/// Reads the pages off the free ranks and torsion of `H(C)`.
pub fn bockstein_from_table<R: EuclideanDomain>(table: &HomologyTable<R>, prime: &R) -> BocksteinReport {
    let einf = table.poincare();
    // (h, q, valuation) for every torsion coefficient with positive valuation.
    let mut torsion: Vec<(i32, i32, u32)> = Vec::new();
    for (&(h, q), g) in &table.groups {
        for f in &g.torsion {
            let v = f.valuation(prime);
            if v > 0 {
                torsion.push((h, q, v));
            }
        }
    }
    let stabilization = 1 + torsion.iter().map(|&(_, _, v)| v as usize).max().unwrap_or(0);
    let pages = (1..=stabilization)
        .map(|r| {
            let mut page = einf.clone();
            for &(h, q, v) in &torsion {
                if v as usize >= r {
                    page.add(h, q, 1);
                    page.add(h - 1, q, 1);
                }
            }
            page
        })
        .collect();
    BocksteinReport { pages, stabilization, einf }
}

/// The `(q - 1)`-Bockstein spectral sequence of a complex over `K[q, q^-1]`.
pub fn bockstein_laurent<F: Field>(table: &HomologyTable<LaurentPoly<F>>) -> BocksteinReport {
    bockstein_from_table(table, &LaurentPoly::from_terms([(1, F::one()), (0, F::one().neg())]))
}

/// The `p`-Bockstein spectral sequence of a complex over the integers.
pub fn bockstein_integer(table: &HomologyTable<BigInt>, p: u64) -> BocksteinReport {
    bockstein_from_table(table, &BigInt::from(p))
}

/// Coefficients of `(1 + e)^n` up to `e^(order - 1)`, for any integer `n`.
fn binomial_series<F: Field>(n: i32, order: usize) -> Vec<F> {
    let mut out = vec![F::zero(); order];
    if order == 0 {
        return out;
    }
    out[0] = F::one();
    // (1 + e)^-1 = 1 - e + e^2 - ...
    let factor: Vec<F> = if n >= 0 {
        (0..order).map(|j| if j <= 1 { F::one() } else { F::zero() }).collect()
    } else {
        (0..order).map(|j| if j % 2 == 0 { F::one() } else { F::one().neg() }).collect()
    };
    for _ in 0..n.unsigned_abs() {
        let mut next = vec![F::zero(); order];
        for (i, a) in out.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in factor.iter().enumerate().take(order - i) {
                next[i + j].add_assign(&a.mul(b));
            }
        }
        out = next;
    }
    out
}

/// The matrices `M_0, M_1, ...` with `m(1 + e) = sum M_j e^j`, up to order.
fn expand_at_one<F: Field>(m: &Matrix<LaurentPoly<F>>, order: usize) -> Vec<Matrix<F>> {
    let mut out: Vec<Matrix<F>> = vec![Matrix::zeros(m.rows(), m.cols()); order];
    let mut series: BTreeMap<i32, Vec<F>> = BTreeMap::new();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            for (e, c) in m.get(i, j).terms() {
                let s = series.entry(e).or_insert_with(|| binomial_series(e, order));
                for (t, s_t) in s.iter().enumerate() {
                    out[t].get_mut(i, j).add_assign(&c.mul(s_t));
                }
            }
        }
    }
    out
}

/// Rank of the block lower-triangular Toeplitz matrix with blocks
/// `coeffs[0..r]`, the truncation of `m` to order `r`.
fn truncated_rank<F: Field>(coeffs: &[Matrix<F>], r: usize) -> usize {
    if r == 0 || coeffs.is_empty() {
        return 0;
    }
    let (rows, cols) = (coeffs[0].rows(), coeffs[0].cols());
    if rows == 0 || cols == 0 {
        return 0;
    }
    let mut big = Matrix::zeros(r * rows, r * cols);
    for t in 0..r {
        for b in 0..=t {
            let block = &coeffs[t - b];
            for i in 0..rows {
                for j in 0..cols {
                    let x = block.get(i, j);
                    if !x.is_zero() {
                        big.set(t * rows + i, b * cols + j, x.clone());
                    }
                }
            }
        }
    }
    rank_over_fraction_field(&big)
}

/// `E_1, ..., E_pages` of the `(q - 1)`-Bockstein spectral sequence, built
/// from the definitions with `q = 1 + e`.
///
/// `Z_r` is the set of leading coefficients `x_0` of chains with
/// `d x = 0 mod e^r`, and `B_r` is the set of coefficients of `e^(r-1)` in
/// boundaries `d y` that vanish mod `e^(r-1)`. With `T_r(d)` the truncation
/// of `d` to order `r`, `dim Z_r = n - rank T_r + rank T_(r-1)` for the
/// outgoing differential and `dim B_r = rank T_r - rank T_(r-1)` for the
/// incoming one.
pub fn literal_pages_laurent<F: Field>(c: &CubeComplex<LaurentPoly<F>>, pages: usize) -> Vec<PoincarePolynomial> {
    let expansions: BTreeMap<_, Vec<Matrix<F>>> =
        c.d.iter().map(|(&k, m)| (k, expand_at_one(m, pages))).collect();
    let ranks = |h: i32, q: i32| -> Vec<usize> {
        let e = expansions.get(&(h, q));
        (0..=pages).map(|r| e.map_or(0, |e| truncated_rank(e, r))).collect()
    };
    let mut out = vec![PoincarePolynomial::default(); pages];
    for (&(h, q), &n) in &c.ranks {
        if n == 0 {
            continue;
        }
        let (d_out, d_in) = (ranks(h, q), ranks(h - 1, q));
        for r in 1..=pages {
            let z = n - (d_out[r] - d_out[r - 1]);
            let b = d_in[r] - d_in[r - 1];
            out[r - 1].add(h, q, z - b);
        }
    }
    out
}

/// `E_1, ..., E_pages` of the `p`-Bockstein spectral sequence of a tiny
/// integer complex, by enumerating chains modulo `p^r`.
///
/// Panics if a chain group modulo `p^pages` has more than `2^22` elements.
pub fn literal_pages_integer(c: &CubeComplex<BigInt>, p: u64, pages: usize) -> Vec<PoincarePolynomial> {
    let p = p as i128;
    let dense = |h: i32, q: i32| -> Dense {
        let d = c.differential(h, q);
        let rows = (0..d.rows())
            .map(|i| (0..d.cols()).map(|j| d.get(i, j).to_i128().expect("entry fits in i128")).collect())
            .collect();
        Dense { rows, cols: d.cols() }
    };
    let mut out = vec![PoincarePolynomial::default(); pages];
    for (&(h, q), &n) in &c.ranks {
        if n == 0 {
            continue;
        }
        let (d_out, d_in) = (dense(h, q), dense(h - 1, q));
        for r in 1..=pages {
            let pr = p.pow(r as u32);
            let pr1 = pr / p;
            // Z_r: residues mod p of chains with d x = 0 mod p^r.
            let mut z = BTreeSet::new();
            for x in chains(n, pr) {
                if d_out.apply(&x).iter().all(|v| v.rem_euclid(pr) == 0) {
                    z.insert(x.iter().map(|v| v.rem_euclid(p)).collect::<Vec<_>>());
                }
            }
            // B_r: (d y / p^(r-1)) mod p over chains with d y = 0 mod p^(r-1).
            let mut b = BTreeSet::new();
            for y in chains(d_in.cols, pr) {
                let dy = d_in.apply(&y);
                if dy.iter().all(|v| v.rem_euclid(pr1) == 0) {
                    b.insert(dy.iter().map(|v| (v / pr1).rem_euclid(p)).collect::<Vec<_>>());
                }
            }
            out[r - 1].add(h, q, log(z.len(), p) - log(b.len(), p));
        }
    }
    out
}

/// A dense integer matrix, rows indexed by the target.
struct Dense {
    rows: Vec<Vec<i128>>,
    cols: usize,
}

impl Dense {
    fn apply(&self, x: &[i128]) -> Vec<i128> {
        self.rows.iter().map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
    }
}

/// Every vector in `{0, ..., m - 1}^n`.
fn chains(n: usize, m: i128) -> impl Iterator<Item = Vec<i128>> {
    let total = (m as u128).checked_pow(n as u32).filter(|&t| t <= 1 << 22).expect("complex too large to enumerate");
    (0..total).map(move |mut i| {
        (0..n)
            .map(|_| {
                let d = (i % m as u128) as i128;
                i /= m as u128;
                d
            })
            .collect()
    })
}

/// `log_p(size)` for a subgroup size that is a power of `p`.
fn log(size: usize, p: i128) -> usize {
    let (mut s, mut k) = (size as i128, 0);
    while s > 1 {
        assert_eq!(s % p, 0, "not a power of the prime");
        s /= p;
        k += 1;
    }
    k
}
