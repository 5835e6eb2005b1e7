//! Sparse multivariate polynomials over an exact ring.
//!
//! Monomials are exponent vectors of a fixed length `nvars`, kept in a
//! `BTreeMap` so that iteration is in lexicographic order and the last entry
//! is the lex-leading term. Zero coefficients are never stored.

use std::collections::BTreeMap;
use std::fmt;

use super::ring::{Field, Ring};

/// An exponent vector.
pub type Monomial = Vec<u32>;

/// A polynomial `sum_m c_m x^m` in `nvars` commuting variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly<R> {
    nvars: usize,
    terms: BTreeMap<Monomial, R>,
}

impl<R: Ring> MPoly<R> {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, R::one())
    }

    pub fn constant(nvars: usize, c: R) -> Self {
        Self::term(vec![0; nvars], c)
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        Self::term(m, R::one())
    }

    /// A single term `c x^m`.
    pub fn term(m: Monomial, c: R) -> Self {
        let nvars = m.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MPoly { nvars, terms }
    }

    /// Builds from `(monomial, coefficient)` pairs; repeated monomials add up.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, R)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing lexicographic order of monomials.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[u32]) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero)
    }

    /// The lex-leading term.
    pub fn leading_term(&self) -> Option<(&Monomial, &R)> {
        self.terms.iter().next_back()
    }

    /// Adds `c x^m` in place.
    pub fn add_term(&mut self, m: Monomial, c: &R) {
        assert_eq!(m.len(), self.nvars, "monomial arity");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                v.add_assign(c);
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(m.clone(), &c.neg());
        }
        r
    }

    pub fn neg(&self) -> Self {
        MPoly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut r = Self::zero(self.nvars);
        for (m, x) in &self.terms {
            r.add_term(m.clone(), &x.mul(c));
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut r = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                r.add_term(m, &c1.mul(c2));
            }
        }
        r
    }

    /// Multiplication by the monomial `x^m`.
    pub fn mul_monomial(&self, m: &[u32]) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.iter().zip(m).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Total degree of the highest-degree term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    /// `true` when every term has total degree `d` (vacuously for zero).
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.iter().sum::<u32>() == d)
    }

    /// Rewrites in a ring with `nvars` variables, sending variable `i` to
    /// variable `map[i]`. Several variables may share a target.
    pub fn rename(&self, nvars: usize, map: &[usize]) -> Self {
        let mut r = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut t = vec![0; nvars];
            for (i, &e) in m.iter().enumerate() {
                t[map[i]] += e;
            }
            r.add_term(t, c);
        }
        r
    }

    /// Swaps variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        let mut map: Vec<usize> = (0..self.nvars).collect();
        map.swap(i, j);
        self.rename(self.nvars, &map)
    }

    /// Invariance under every permutation of the variables listed in `vars`,
    /// tested on the adjacent transpositions that generate the group.
    pub fn is_symmetric_in(&self, vars: &[usize]) -> bool {
        vars.windows(2).all(|w| self.swap_vars(w[0], w[1]) == *self)
    }

    /// Substitutes a polynomial for every variable.
    pub fn compose(&self, images: &[MPoly<R>]) -> MPoly<R> {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let nv = images.first().map_or(0, |p| p.nvars);
        let mut r = MPoly::zero(nv);
        for (m, c) in &self.terms {
            let mut t = MPoly::constant(nv, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e));
                }
            }
            r = r.add(&t);
        }
        r
    }

    /// Evaluates at a point.
    pub fn eval(&self, point: &[R]) -> R {
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m) {
                if e > 0 {
                    t = t.mul(&x.pow(e));
                }
            }
            acc.add_assign(&t);
        }
        acc
    }

    /// The coefficient of `x^0`.
    pub fn constant_term(&self) -> R {
        self.coeff(&vec![0; self.nvars])
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MPoly<S> {
        MPoly::from_terms(self.nvars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
}

impl<F: Field> MPoly<F> {
    /// Exact quotient `self / d` by lex-leading-term division; `None` if the
    /// division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.leading_term().expect("division by zero polynomial");
        let dm = dm.clone();
        let dc_inv = dc.inv();
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            if m.iter().zip(&dm).any(|(a, b)| a < b) {
                return None;
            }
            let qm: Monomial = m.iter().zip(&dm).map(|(a, b)| a - b).collect();
            let qc = c.mul(&dc_inv);
            rem = rem.sub(&d.mul_monomial(&qm).scale(&qc));
            quot.add_term(qm, &qc);
        }
        Some(quot)
    }
}

impl<R: Ring> fmt::Display for MPoly<R> {
    /// Writes terms from the lex-leading one down, as `c*x0^2*x1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
                .collect();
            if vars.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "({c})*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}
