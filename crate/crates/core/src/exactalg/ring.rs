//! Algebraic traits shared by every exact scalar type in the crate.
//!
//! The engine is generic over its coefficient field (the rationals or a prime
//! field) and over the Euclidean domain that Smith normal forms run on (the
//! integers or Laurent polynomials in `q`). These traits are deliberately
//! small: reference-taking arithmetic, plus the Euclidean structure needed by
//! pivoting algorithms.

use std::fmt;

/// A commutative ring with exact arithmetic.
///
/// Methods take references so that big-number types avoid needless clones.
pub trait Ring: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Image of an integer under the canonical map `Z -> R`.
    fn from_i64(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn add_assign(&mut self, other: &Self) {
        *self = self.add(other);
    }

    fn sub_assign(&mut self, other: &Self) {
        *self = self.sub(other);
    }

    /// `self -= a * b`, the inner step of every elimination loop.
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = self.sub(&a.mul(b));
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

/// A field: every nonzero element is invertible. Fields are trivially
/// Euclidean (see `field_is_euclidean!`).
pub trait Field: EuclideanDomain {
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    /// Characteristic of the field (0 for the rationals).
    fn characteristic() -> u64;

    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
}

/// A Euclidean domain with a computable division-with-remainder.
///
/// `norm` must satisfy `norm(r) < norm(b)` for the remainder of `a / b`.
/// Units have the smallest norm; the default `is_unit` assumes that norm is 0.
pub trait EuclideanDomain: Ring {
    /// Euclidean norm of a nonzero element.
    fn norm(&self) -> u64;

    /// Returns `(quotient, remainder)` with `self = quotient * b + remainder`
    /// and either `remainder = 0` or `norm(remainder) < norm(b)`.
    fn div_rem(&self, b: &Self) -> (Self, Self);

    fn is_unit(&self) -> bool {
        !self.is_zero() && self.norm() == 0
    }

    /// Inverse of a unit, `None` for non-units.
    fn unit_inverse(&self) -> Option<Self>;

    /// Splits `self = unit * canonical` where `canonical` is the preferred
    /// associate. Zero maps to `(1, 0)`.
    fn split_unit(&self) -> (Self, Self);

    /// Canonical associate.
    fn normalized(&self) -> Self {
        self.split_unit().1
    }

    /// `true` when `b` divides `self`.
    fn divides_into(&self, b: &Self) -> bool {
        if self.is_zero() {
            return b.is_zero();
        }
        b.div_rem(self).1.is_zero()
    }

    /// Exact quotient; panics if `b` does not divide `self`.
    fn exact_div(&self, b: &Self) -> Self {
        let (q, r) = self.div_rem(b);
        assert!(r.is_zero(), "exact_div: {b} does not divide {self}");
        q
    }

    /// Extended gcd: returns `(g, s, t)` with `g = s*a + t*b`, `g` canonical.
    fn ext_gcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let (u, g) = r0.split_unit();
        match u.unit_inverse() {
            Some(ui) => (g, s0.mul(&ui), t0.mul(&ui)),
            None => (g, s0, t0),
        }
    }

    fn gcd(a: &Self, b: &Self) -> Self {
        Self::ext_gcd(a, b).0
    }

    /// Multiplicity of the prime element `p` in `self` (`self` nonzero).
    fn valuation(&self, p: &Self) -> u32 {
        assert!(!self.is_zero(), "valuation of zero");
        let mut v = 0;
        let mut x = self.clone();
        loop {
            let (q, r) = x.div_rem(p);
            if !r.is_zero() {
                return v;
            }
            x = q;
            v += 1;
        }
    }
}

/// Every field is a Euclidean domain in which all nonzero elements are units.
#[macro_export]
macro_rules! field_is_euclidean {
    ($t:ty) => {
        impl $crate::exactalg::EuclideanDomain for $t {
            fn norm(&self) -> u64 {
                0
            }
            fn div_rem(&self, b: &Self) -> (Self, Self) {
                (
                    <$t as $crate::exactalg::Field>::div(self, b),
                    <$t as $crate::exactalg::Ring>::zero(),
                )
            }
            fn unit_inverse(&self) -> Option<Self> {
                if $crate::exactalg::Ring::is_zero(self) {
                    None
                } else {
                    Some($crate::exactalg::Field::inv(self))
                }
            }
            fn split_unit(&self) -> (Self, Self) {
                if $crate::exactalg::Ring::is_zero(self) {
                    (<$t as $crate::exactalg::Ring>::one(), self.clone())
                } else {
                    (self.clone(), <$t as $crate::exactalg::Ring>::one())
                }
            }
        }
    };
}
