//! Prime fields `F_p` with the prime fixed at compile time.

use std::fmt;

use super::ring::{Field, Ring};

/// An element of `Z/P` for a prime `P < 2^31`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Ring for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, o: &Self) -> Self {
        Fp(((self.0 as u64 + o.0 as u64) % P as u64) as u32)
    }
    fn sub(&self, o: &Self) -> Self {
        Fp(((self.0 as u64 + P as u64 - o.0 as u64) % P as u64) as u32)
    }
    fn mul(&self, o: &Self) -> Self {
        Fp(((self.0 as u64 * o.0 as u64) % P as u64) as u32)
    }
    fn neg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }
}

impl<const P: u32> Field for Fp<P> {
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F_{P}");
        // Fermat: a^(p-2).
        Ring::pow(self, P - 2)
    }

    fn characteristic() -> u64 {
        P as u64
    }
}

impl<const P: u32> super::ring::EuclideanDomain for Fp<P> {
    fn norm(&self) -> u64 {
        0
    }
    fn div_rem(&self, b: &Self) -> (Self, Self) {
        (Field::div(self, b), Fp(0))
    }
    fn unit_inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.inv())
        }
    }
    fn split_unit(&self) -> (Self, Self) {
        if self.0 == 0 {
            (Fp::one(), *self)
        } else {
            (*self, Fp::one())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_mod_seven() {
        for v in 1..7 {
            let a = Fp::<7>::new(v);
            assert_eq!(a.mul(&a.inv()), Fp::one());
        }
        assert_eq!(Fp::<7>::new(-1), Fp::<7>::new(6));
    }
}
