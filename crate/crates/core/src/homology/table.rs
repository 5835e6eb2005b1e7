//! Homology of bigraded complexes over a Euclidean domain, and Poincaré
//! polynomials.
//!
//! For free complexes over a principal ideal domain the kernel of the
//! outgoing differential is a direct summand, so the torsion of homology at a
//! bidegree is the torsion of the cokernel of the incoming differential: its
//! non-unit invariant factors.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactalg::{snf_sparse, EuclideanDomain, SnfOptions};

use super::complex::{Bidegree, CubeComplex};

/// Free rank and torsion invariant factors of homology at one bidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup<R> {
    pub free_rank: usize,
    pub torsion: Vec<R>,
}

/// Homology at every bidegree where it is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyTable<R> {
    pub groups: BTreeMap<Bidegree, HomologyGroup<R>>,
}

impl<R: EuclideanDomain> HomologyTable<R> {
    /// Free ranks as a Poincaré polynomial.
    pub fn poincare(&self) -> PoincarePolynomial {
        let mut p = PoincarePolynomial::default();
        for (&(h, q), g) in &self.groups {
            if g.free_rank > 0 {
                p.add(h, q, g.free_rank);
            }
        }
        p
    }

    /// `sum (-1)^h free_rank q^qdeg`.
    pub fn euler_characteristic(&self) -> BTreeMap<i32, i64> {
        self.poincare().euler_characteristic()
    }
}

fn rank_and_divisors<R: EuclideanDomain>(c: &CubeComplex<R>, h: i32, q: i32) -> (usize, Vec<R>) {
    match c.d.get(&(h, q)) {
        None => (0, Vec::new()),
        Some(m) => {
            let s = snf_sparse(&m.to_sparse(), SnfOptions::NONE);
            (s.rank, s.divisors)
        }
    }
}

/// Homology of a complex, computed bidegree by bidegree.
pub fn homology_table<R: EuclideanDomain>(c: &CubeComplex<R>) -> HomologyTable<R> {
    let mut groups = BTreeMap::new();
    let mut cache: BTreeMap<Bidegree, (usize, Vec<R>)> = BTreeMap::new();
    let mut get = |h: i32, q: i32| cache.entry((h, q)).or_insert_with(|| rank_and_divisors(c, h, q)).clone();
    for (&(h, q), &n) in &c.ranks {
        if n == 0 {
            continue;
        }
        let (r_out, _) = get(h, q);
        let (r_in, divisors) = get(h - 1, q);
        let free_rank = n - r_out - r_in;
        let torsion: Vec<R> = divisors.into_iter().filter(|d| !d.is_unit()).collect();
        if free_rank > 0 || !torsion.is_empty() {
            groups.insert((h, q), HomologyGroup { free_rank, torsion });
        }
    }
    HomologyTable { groups }
}

/// One term `dim t^t q^q` of a Poincaré polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PoincareTerm {
    pub t: i32,
    pub q: i32,
    pub dim: usize,
}

/// A finitely supported polynomial in `t` (homological degree) and `q`
/// (quantum degree) with nonnegative coefficients. It serializes as a list
/// of terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<PoincareTerm>", into = "Vec<PoincareTerm>")]
pub struct PoincarePolynomial(pub BTreeMap<Bidegree, usize>);

impl From<Vec<PoincareTerm>> for PoincarePolynomial {
    fn from(terms: Vec<PoincareTerm>) -> Self {
        let mut p = PoincarePolynomial::default();
        for x in terms {
            p.add(x.t, x.q, x.dim);
        }
        p
    }
}

impl From<PoincarePolynomial> for Vec<PoincareTerm> {
    fn from(p: PoincarePolynomial) -> Self {
        p.terms().map(|(t, q, dim)| PoincareTerm { t, q, dim }).collect()
    }
}

impl PoincarePolynomial {
    pub fn from_terms(terms: &[(i32, i32, usize)]) -> Self {
        let mut p = PoincarePolynomial::default();
        for &(t, q, n) in terms {
            p.add(t, q, n);
        }
        p
    }

    pub fn add(&mut self, t: i32, q: i32, n: usize) {
        if n == 0 {
            return;
        }
        *self.0.entry((t, q)).or_insert(0) += n;
    }

    pub fn coeff(&self, t: i32, q: i32) -> usize {
        self.0.get(&(t, q)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, usize)> + '_ {
        self.0.iter().map(|(&(t, q), &n)| (t, q, n))
    }

    /// `(t, q) -> (t^-1, q^-1)`.
    pub fn mirrored(&self) -> Self {
        PoincarePolynomial(self.0.iter().map(|(&(t, q), &n)| ((-t, -q), n)).collect())
    }

    /// Specialization `t = -1`, as a map from quantum degree to coefficient.
    pub fn euler_characteristic(&self) -> BTreeMap<i32, i64> {
        let mut out = BTreeMap::new();
        for (t, q, n) in self.terms() {
            let sign = if t.rem_euclid(2) == 0 { 1 } else { -1 };
            *out.entry(q).or_insert(0) += sign * n as i64;
        }
        out.retain(|_, v| *v != 0);
        out
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // Highest quantum degree first, then increasing homological degree.
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|&(t, q, _)| (t, -q));
        for (t, q, n) in terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if n != 1 {
                write!(f, "{n}")?;
            }
            write!(f, "t^{t}q^{q}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{LaurentQ, Matrix, Rational};

    #[test]
    fn zero_differential_gives_chain_ranks() {
        let mut ranks = BTreeMap::new();
        ranks.insert((0, 0), 2);
        ranks.insert((1, 0), 1);
        let c: CubeComplex<Rational> = CubeComplex { ranks, d: BTreeMap::new() };
        let t = homology_table(&c);
        assert_eq!(t.poincare(), PoincarePolynomial::from_terms(&[(0, 0, 2), (1, 0, 1)]));
    }

    #[test]
    fn multiplication_by_q_minus_one() {
        let qm1 = LaurentQ::from_int_terms(&[(1, 1), (0, -1)]);
        let mut ranks = BTreeMap::new();
        ranks.insert((0, 0), 1);
        ranks.insert((1, 0), 1);
        let mut d = BTreeMap::new();
        d.insert((0, 0), Matrix::from_rows(vec![vec![qm1.clone()]], 1));
        let c = CubeComplex { ranks, d };
        let t = homology_table(&c);
        assert_eq!(t.groups.len(), 1);
        let g = &t.groups[&(1, 0)];
        assert_eq!(g.free_rank, 0);
        assert_eq!(g.torsion, vec![qm1]);
        assert!(t.poincare().0.is_empty());
    }

    #[test]
    fn display_and_mirror() {
        let p = PoincarePolynomial::from_terms(&[(0, 2, 1), (1, 0, 1), (2, -2, 1)]);
        assert_eq!(p.to_string(), "t^0q^2 + t^1q^0 + t^2q^-2");
        assert_eq!(p.mirrored(), PoincarePolynomial::from_terms(&[(0, -2, 1), (-1, 0, 1), (-2, 2, 1)]));
        let e = p.euler_characteristic();
        assert_eq!(e, BTreeMap::from([(-2, 1), (0, -1), (2, 1)]));
    }
}
