//! Quantum integers, factorials and binomials as Laurent polynomials in `q`.

use crate::exactalg::{EuclideanDomain, LaurentQ, Rational, Ring};

use super::SymfuncError;

/// `[k] = (q^k - q^-k) / (q - q^-1)` for any integer `k`.
pub fn quantum_int(k: i64) -> LaurentQ {
    let n = k.unsigned_abs() as i32;
    let p = LaurentQ::from_terms((0..n).map(|j| (n - 1 - 2 * j, Rational::one())));
    if k < 0 {
        p.neg()
    } else {
        p
    }
}

/// `[n]! = [1][2]...[n]`.
pub fn quantum_factorial(n: u32) -> LaurentQ {
    (1..=n as i64).fold(LaurentQ::one(), |acc, k| acc.mul(&quantum_int(k)))
}

/// The quantum binomial `[n]! / ([k]! [n-k]!)`.
pub fn quantum_binom(n: i64, k: i64) -> Result<LaurentQ, SymfuncError> {
    if k < 0 || k > n {
        return Err(SymfuncError::BinomialRange { n, k });
    }
    let (n, k) = (n as u32, k as u32);
    let den = quantum_factorial(k).mul(&quantum_factorial(n - k));
    Ok(quantum_factorial(n).exact_div(&den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(quantum_int(2), LaurentQ::from_int_terms(&[(1, 1), (-1, 1)]));
        assert!(quantum_int(0).is_zero());
        assert!(quantum_int(1).is_one());
        assert_eq!(quantum_int(-3), quantum_int(3).neg());
        assert_eq!(quantum_binom(2, 1).unwrap(), quantum_int(2));
        assert_eq!(quantum_binom(4, 2).unwrap(), LaurentQ::from_int_terms(&[(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)]));
        assert!(quantum_binom(2, 3).is_err());
        assert!(quantum_binom(2, -1).is_err());
    }

    #[test]
    fn binomials_are_bar_invariant_and_specialize() {
        for n in 0..8 {
            for k in 0..=n {
                let b = quantum_binom(n, k).unwrap();
                assert_eq!(b.bar(), b);
                let classical = (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1));
                assert_eq!(b.eval_one(), Rational::from(classical));
            }
        }
    }
}
