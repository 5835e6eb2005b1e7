//! Univariate Laurent polynomials `K[q, q^-1]` over an exact field.
//!
//! Storage is dense between the lowest and highest nonzero exponent, so the
//! first and last stored coefficients are always nonzero and zero is the
//! empty vector. [`LaurentPoly::terms`] exposes the sparse view (exponent,
//! nonzero coefficient).
//!
//! The Euclidean structure shifts both operands so that their lowest exponent
//! is zero and then uses ordinary polynomial degree as the norm; units are
//! exactly the nonzero monomials `c q^j`.

use std::fmt;
use std::hash::{Hash, Hasher};

use super::rational::Rational;
use super::ring::{EuclideanDomain, Field, Ring};

/// A Laurent polynomial `sum_j c_j q^j` with coefficients in `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly<F> {
    low: i32,
    coeffs: Vec<F>,
}

/// Laurent polynomials over the rationals, the default scalar ring.
pub type LaurentQ = LaurentPoly<Rational>;

impl<F: Field> Hash for LaurentPoly<F>
where
    F: Hash,
{
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.low.hash(state);
        self.coeffs.hash(state);
    }
}

impl<F: Field> LaurentPoly<F> {
    /// Builds from a dense coefficient list starting at exponent `low`.
    pub fn from_dense(low: i32, coeffs: Vec<F>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i32, F)>>(terms: I) -> Self {
        let terms: Vec<(i32, F)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        if terms.is_empty() {
            return Self::zero();
        }
        let low = terms.iter().map(|t| t.0).min().unwrap();
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![F::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize].add_assign(&c);
        }
        Self::from_dense(low, coeffs)
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(terms: &[(i32, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, F::from_i64(c))))
    }

    /// The monomial `c q^e`.
    pub fn monomial(c: F, e: i32) -> Self {
        Self::from_dense(e, vec![c])
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::monomial(F::one(), e)
    }

    /// A constant.
    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0)
    }

    fn trim(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => {
                self.coeffs.clear();
                self.low = 0;
            }
            Some(i) => {
                if i > 0 {
                    self.coeffs.drain(..i);
                    self.low += i as i32;
                }
                while self.coeffs.last().is_some_and(|c| c.is_zero()) {
                    self.coeffs.pop();
                }
            }
        }
    }

    /// Lowest exponent with nonzero coefficient (`None` for zero).
    pub fn min_exp(&self) -> Option<i32> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    /// Highest exponent with nonzero coefficient (`None` for zero).
    pub fn max_exp(&self) -> Option<i32> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    /// `max_exp - min_exp`, the Euclidean norm.
    pub fn width(&self) -> u32 {
        self.coeffs.len().saturating_sub(1) as u32
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: i32) -> F {
        let i = e - self.low;
        if i < 0 || i as usize >= self.coeffs.len() {
            F::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &F)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i32, c))
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplies by `q^j`.
    pub fn shift(&self, j: i32) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        LaurentPoly { low: self.low + j, coeffs: self.coeffs.clone() }
    }

    /// Multiplies by a scalar.
    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }

    /// The bar involution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        match self.max_exp() {
            None => Self::zero(),
            Some(hi) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                LaurentPoly { low: -hi, coeffs }
            }
        }
    }

    /// Substitutes `q -> q^k` for `k != 0`.
    pub fn substitute_power(&self, k: i32) -> Self {
        assert!(k != 0);
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// Evaluates at a nonzero field element.
    pub fn eval(&self, x: &F) -> F {
        if self.coeffs.is_empty() {
            return F::zero();
        }
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        if self.low >= 0 {
            acc.mul(&x.pow(self.low as u32))
        } else {
            acc.mul(&x.inv().pow((-self.low) as u32))
        }
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> F {
        let mut acc = F::zero();
        for c in &self.coeffs {
            acc.add_assign(c);
        }
        acc
    }

    /// Leading (highest-exponent) coefficient.
    pub fn leading_coeff(&self) -> Option<&F> {
        self.coeffs.last()
    }

    /// The unique associate that is monic with lowest exponent 0.
    pub fn normalize(&self) -> Self {
        self.split_unit().1
    }

    /// True for `c q^j` with `c` nonzero.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Coefficients from `q^min` upward (dense).
    pub fn dense_coeffs(&self) -> &[F] {
        &self.coeffs
    }
}

/// Free function form of [`LaurentPoly::normalize`].
pub fn laurent_normalize<F: Field>(p: &LaurentPoly<F>) -> LaurentPoly<F> {
    p.normalize()
}

impl<F: Field> Ring for LaurentPoly<F> {
    fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    fn one() -> Self {
        LaurentPoly { low: 0, coeffs: vec![F::one()] }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = self.max_exp().unwrap().max(o.max_exp().unwrap());
        let mut coeffs = vec![F::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] = c.clone();
        }
        for (i, c) in o.coeffs.iter().enumerate() {
            coeffs[(o.low - low) as usize + i].add_assign(c);
        }
        Self::from_dense(low, coeffs)
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.coeffs.len() == 1 {
            let mut r = self.scale(&o.coeffs[0]);
            r.low += o.low;
            return r;
        }
        if self.coeffs.len() == 1 {
            let mut r = o.scale(&self.coeffs[0]);
            r.low += self.low;
            return r;
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j].add_assign(&a.mul(b));
                }
            }
        }
        Self::from_dense(self.low + o.low, coeffs)
    }

    fn neg(&self) -> Self {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    fn from_i64(n: i64) -> Self {
        Self::constant(F::from_i64(n))
    }
}

impl<F: Field> EuclideanDomain for LaurentPoly<F> {
    fn norm(&self) -> u64 {
        self.width() as u64
    }

    fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    fn div_rem(&self, b: &Self) -> (Self, Self) {
        assert!(!b.is_zero(), "division by zero Laurent polynomial");
        if self.is_zero() {
            return (Self::zero(), Self::zero());
        }
        if b.is_monomial() {
            let inv = b.coeffs[0].inv();
            let mut q = self.scale(&inv);
            q.low -= b.low;
            return (q, Self::zero());
        }
        if self.width() < b.width() {
            return (Self::zero(), self.clone());
        }
        // Ordinary polynomial division of the shifted operands.
        let mut rem: Vec<F> = self.coeffs.clone();
        let db = b.coeffs.len() - 1;
        let lead_inv = b.coeffs[db].inv();
        let qlen = rem.len() - db;
        let mut quot = vec![F::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = rem[k + db].mul(&lead_inv);
            if c.is_zero() {
                continue;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                rem[k + j].sub_mul_assign(&c, bc);
            }
            quot[k] = c;
        }
        rem.truncate(db);
        let q = Self::from_dense(self.low - b.low, quot);
        let r = Self::from_dense(self.low, rem);
        (q, r)
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_monomial() {
            Some(Self::monomial(self.coeffs[0].inv(), -self.low))
        } else {
            None
        }
    }

    fn split_unit(&self) -> (Self, Self) {
        if self.is_zero() {
            return (Self::one(), Self::zero());
        }
        let lead = self.coeffs.last().unwrap().clone();
        let unit = Self::monomial(lead.clone(), self.low);
        let inv = lead.inv();
        let canon = LaurentPoly { low: 0, coeffs: self.coeffs.iter().map(|c| c.mul(&inv)).collect() };
        (unit, canon)
    }
}

impl<F: Field> fmt::Display for LaurentPoly<F> {
    /// Writes terms from the highest exponent down, e.g. `q^2 - 1 + q^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<(i32, &F)> = self.terms().collect();
        for (n, (e, c)) in terms.iter().rev().enumerate() {
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) => (true, m.to_string()),
                None => (false, s),
            };
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = match *e {
                0 => String::new(),
                1 => "q".to_string(),
                e => format!("q^{e}"),
            };
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}{mono}")?;
            }
        }
        Ok(())
    }
}

/// Quantum integer `[k] = q^(k-1) + q^(k-3) + ... + q^(1-k)`, with `[0] = 0`.
pub fn quantum_integer<F: Field>(k: u32) -> LaurentPoly<F> {
    LaurentPoly::from_terms((0..k).map(|i| (k as i32 - 1 - 2 * i as i32, F::one())))
}
