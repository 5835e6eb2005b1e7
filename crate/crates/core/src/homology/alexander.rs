//! The Alexander polynomial, from the reduced Burau representation and from
//! the graded Euler characteristic of homology.
//!
//! Quantum degree `2j` corresponds to Alexander degree `j`, so both are
//! returned as Laurent polynomials in `q` with `t = q^2`.

use std::collections::BTreeMap;

use crate::exactalg::{EuclideanDomain, Field, LaurentPoly, Matrix, Ring};
use crate::webs::{BraidWord, WebError};

fn t_pow<F: Field>(e: i32, c: i64) -> LaurentPoly<F> {
    LaurentPoly::monomial(F::from_i64(c), e)
}

/// The reduced Burau matrix of one letter, in the variable `t`.
fn burau_letter<F: Field>(k: usize, letter: i32) -> Matrix<LaurentPoly<F>> {
    let n = k - 1;
    let i = letter.unsigned_abs() as usize;
    let inverse = letter < 0;
    let mut m = Matrix::identity(n);
    let mut set = |r: usize, c: usize, v: LaurentPoly<F>| m.set(r, c, v);
    if n == 1 {
        set(0, 0, if inverse { t_pow(-1, -1) } else { t_pow(1, -1) });
        return m;
    }
    // Local block rows and columns are i - 2, i - 1, i (0-based), clipped to
    // the matrix.
    if i == 1 {
        // [[-t, 1], [0, 1]] and its inverse [[-1/t, 1/t], [0, 1]].
        if inverse {
            set(0, 0, t_pow(-1, -1));
            set(0, 1, t_pow(-1, 1));
        } else {
            set(0, 0, t_pow(1, -1));
            set(0, 1, t_pow(0, 1));
        }
    } else if i == k - 1 {
        // [[1, 0], [t, -t]] and its inverse [[1, 0], [1, -1/t]].
        let (a, b) = (i - 2, i - 1);
        if inverse {
            set(b, a, t_pow(0, 1));
            set(b, b, t_pow(-1, -1));
        } else {
            set(b, a, t_pow(1, 1));
            set(b, b, t_pow(1, -1));
        }
    } else {
        // [[1, 0, 0], [t, -t, 1], [0, 0, 1]] and its inverse
        // [[1, 0, 0], [1, -1/t, 1/t], [0, 0, 1]].
        let (a, b, c) = (i - 2, i - 1, i);
        if inverse {
            set(b, a, t_pow(0, 1));
            set(b, b, t_pow(-1, -1));
            set(b, c, t_pow(-1, 1));
        } else {
            set(b, a, t_pow(1, 1));
            set(b, b, t_pow(1, -1));
            set(b, c, t_pow(0, 1));
        }
    }
    m
}

/// The reduced Burau matrix of a braid word.
pub fn burau_matrix<F: Field>(b: &BraidWord) -> Matrix<LaurentPoly<F>> {
    let n = b.strands() - 1;
    b.letters().iter().fold(Matrix::identity(n), |acc, &l| acc.mul(&burau_letter(b.strands(), l)))
}

/// Multiplies by a unit `+-t^j` so that the polynomial is symmetric under
/// `t -> t^-1` and takes the value 1 at `t = 1`.
fn symmetrize<F: Field>(p: &LaurentPoly<F>) -> LaurentPoly<F> {
    let (lo, hi) = (p.min_exp().expect("nonzero"), p.max_exp().expect("nonzero"));
    assert!((lo + hi) % 2 == 0, "span of an Alexander polynomial is even");
    let shifted = p.shift(-(lo + hi) / 2);
    let value = shifted.eval_one();
    assert!(!value.is_zero(), "Alexander polynomial of a knot is 1 at t = 1");
    shifted.scale(&value.inv())
}

/// The symmetric Alexander polynomial of the closure, in `t`:
/// `det(I - B(t)) (1 - t) / (1 - t^k)`.
pub fn alexander_burau_t<F: Field>(b: &BraidWord) -> Result<LaurentPoly<F>, WebError> {
    b.require_knot()?;
    let k = b.strands();
    let m = burau_matrix::<F>(b);
    let n = k - 1;
    let mut a: Matrix<LaurentPoly<F>> = Matrix::identity(n);
    for i in 0..n {
        for j in 0..n {
            a.get_mut(i, j).sub_assign(m.get(i, j));
        }
    }
    let one = LaurentPoly::one();
    let num = a.determinant().mul(&one.sub(&t_pow(1, 1)));
    let den = one.sub(&t_pow(k as i32, 1));
    let (quot, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero(), "1 + t + ... + t^(k-1) divides det(I - B)");
    Ok(symmetrize(&quot))
}

/// The Alexander polynomial with `t = q^2`.
pub fn alexander_burau<F: Field>(b: &BraidWord) -> Result<LaurentPoly<F>, WebError> {
    Ok(alexander_burau_t::<F>(b)?.substitute_power(2))
}

/// A map from quantum degree to integer coefficient, as a Laurent polynomial
/// in `q`.
pub fn euler_as_laurent<F: Field>(chi: &BTreeMap<i32, i64>) -> LaurentPoly<F> {
    LaurentPoly::from_terms(chi.iter().map(|(&e, &c)| (e, F::from_i64(c))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{LaurentQ, Rational};
    use crate::webs::parse_braid;

    fn delta(word: &str, k: usize) -> LaurentQ {
        alexander_burau_t::<Rational>(&parse_braid(word, k).unwrap()).unwrap()
    }

    #[test]
    fn letters_and_inverses_cancel() {
        for k in 2..=5 {
            for i in 1..k as i32 {
                let m = burau_letter::<Rational>(k, i).mul(&burau_letter(k, -i));
                assert_eq!(m, Matrix::identity(k - 1));
            }
        }
    }

    #[test]
    fn braid_relations_hold() {
        let b = |w: &[i32], k: usize| burau_matrix::<Rational>(&BraidWord::new(k, w.to_vec()).unwrap());
        assert_eq!(b(&[1, 2, 1], 4), b(&[2, 1, 2], 4));
        assert_eq!(b(&[2, 3, 2], 4), b(&[3, 2, 3], 4));
        assert_eq!(b(&[1, 3], 4), b(&[3, 1], 4));
    }

    #[test]
    fn small_knots() {
        let lp = LaurentQ::from_int_terms;
        assert_eq!(delta("", 1), lp(&[(0, 1)]));
        assert_eq!(delta("1 1 1", 2), lp(&[(1, 1), (0, -1), (-1, 1)]));
        assert_eq!(delta("-1 -1 -1", 2), lp(&[(1, 1), (0, -1), (-1, 1)]));
        assert_eq!(delta("1 -2 1 -2", 3), lp(&[(1, -1), (0, 3), (-1, -1)]));
        assert_eq!(delta("1 1 1 1 1", 2), lp(&[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)]));
        assert_eq!(delta("1 2", 3), lp(&[(0, 1)]));
        assert_eq!(delta("1 2 1 2 1 2 1 2", 3), lp(&[(3, 1), (2, -1), (0, 1), (-2, -1), (-3, 1)]));
    }

    #[test]
    fn links_are_rejected() {
        assert!(alexander_burau_t::<Rational>(&parse_braid("1 1", 2).unwrap()).is_err());
    }
}
