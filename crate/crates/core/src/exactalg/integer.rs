//! The integers as a Euclidean domain, used by the mod-p Bockstein engine and
//! by Smith-normal-form tests over `Z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ring::{EuclideanDomain, Ring};

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
}

impl EuclideanDomain for BigInt {
    /// Absolute value, saturated at `u64::MAX`.
    fn norm(&self) -> u64 {
        self.abs().to_u64().unwrap_or(u64::MAX)
    }

    /// Division with the remainder of least absolute value.
    fn div_rem(&self, b: &Self) -> (Self, Self) {
        let (mut q, mut r) = Integer::div_mod_floor(self, b);
        let twice: BigInt = &r * 2;
        // The floored remainder has the sign of `b`; stepping once toward
        // zero gives the remainder of least absolute value.
        if twice.abs() > b.abs() {
            r -= b;
            q += 1;
        }
        (q, r)
    }

    fn is_unit(&self) -> bool {
        One::is_one(&self.abs())
    }

    fn unit_inverse(&self) -> Option<Self> {
        if One::is_one(&self.abs()) {
            Some(self.clone())
        } else {
            None
        }
    }

    fn split_unit(&self) -> (Self, Self) {
        if self.is_negative() {
            (BigInt::from(-1), -self)
        } else {
            (BigInt::from(1), self.clone())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn remainder_is_small() {
        for a in -30i64..30 {
            for b in [-7i64, -3, 2, 5, 9] {
                let (q, r) = EuclideanDomain::div_rem(&BigInt::from(a), &BigInt::from(b));
                assert_eq!(q * b + &r, BigInt::from(a));
                assert!(r.norm() < b.unsigned_abs());
            }
        }
    }

    #[test]
    fn ext_gcd_bezout() {
        let (g, s, t) = BigInt::ext_gcd(&BigInt::from(12), &BigInt::from(-18));
        assert_eq!(g, BigInt::from(6));
        assert_eq!(s * 12 + t * -18, BigInt::from(6));
    }
}
