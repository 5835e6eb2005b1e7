//! The infinity- and gl1-evaluations of decorated webs.
//!
//! A decoration is a polynomial in the thin-edge variables of a web. Under a
//! coloring `c`, each thin variable becomes the pigment `X_{c(e)}`, giving
//! the numerator `P(w, T, c)`; the denominator `Q(w, c)` has one factor
//! `X_lower - X_upper` per dumbbell, read off the two outgoing thin edges
//! of its split vertex (the lower one counts as left).

use crate::exactalg::{Field, MPoly, Rational, Ring};
use crate::webs::AnnularWeb;

use super::coloring::{omnichrome_colorings, Coloring};
use super::EvalError;

/// A quotient of polynomials in the pigments `X_1..X_k`, not reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: MPoly<Rational>,
    pub den: MPoly<Rational>,
}

impl RationalFunction {
    /// Value at a point where the denominator does not vanish.
    pub fn eval(&self, point: &[Rational]) -> Rational {
        self.num.eval(point).div(&self.den.eval(point))
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn same_as(&self, o: &RationalFunction) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

/// The pigment of each thin edge, as a variable map for [`MPoly::rename`].
fn pigment_map(c: &Coloring) -> &[usize] {
    &c.thin
}

/// `(lower pigment, upper pigment)` of the outgoing edges of each split.
fn split_pairs<'a>(w: &'a AnnularWeb, c: &'a Coloring) -> impl Iterator<Item = (usize, usize)> + 'a {
    (0..w.thick_count()).map(move |d| {
        let r = w.dumbbell_edges(d);
        (c.thin[r.b], c.thin[r.a])
    })
}

/// `P(w, T, c) / Q(w, c)`.
pub fn eval_coloring(w: &AnnularWeb, t: &MPoly<Rational>, c: &Coloring) -> RationalFunction {
    let k = w.strands();
    let num = t.rename(k, pigment_map(c));
    let mut den = MPoly::one(k);
    for (lo, up) in split_pairs(w, c) {
        den = den.mul(&MPoly::var(k, lo).sub(&MPoly::var(k, up)));
    }
    RationalFunction { num, den }
}

/// The sum of [`eval_coloring`] over all omnichrome colorings, returned as a
/// polynomial in the pigments.
///
/// All denominators are products of `X_i - X_j`, so the sum is taken over
/// the least common multiple of those products and the result is divided
/// back exactly, one linear factor at a time.
pub fn eval_infty(w: &AnnularWeb, t: &MPoly<Rational>) -> Result<MPoly<Rational>, EvalError> {
    let k = w.strands();
    let colorings = omnichrome_colorings(w);
    // Exponent of (X_i - X_j), i < j, in each coloring's denominator, plus a
    // sign from reordering the factors.
    let mut exps: Vec<(Vec<u32>, bool)> = Vec::with_capacity(colorings.len());
    let pair = |i: usize, j: usize| i * k + j;
    for c in &colorings {
        let mut e = vec![0u32; k * k];
        let mut negative = false;
        for (lo, up) in split_pairs(w, c) {
            if lo < up {
                e[pair(lo, up)] += 1;
            } else {
                e[pair(up, lo)] += 1;
                negative = !negative;
            }
        }
        exps.push((e, negative));
    }
    let mut lcm = vec![0u32; k * k];
    for (e, _) in &exps {
        for (m, x) in lcm.iter_mut().zip(e) {
            *m = (*m).max(*x);
        }
    }
    let linear = |i: usize, j: usize| MPoly::<Rational>::var(k, i).sub(&MPoly::var(k, j));
    let mut total = MPoly::zero(k);
    for (c, (e, negative)) in colorings.iter().zip(&exps) {
        let mut term = t.rename(k, pigment_map(c));
        for i in 0..k {
            for j in i + 1..k {
                let missing = lcm[pair(i, j)] - e[pair(i, j)];
                if missing > 0 {
                    term = term.mul(&linear(i, j).pow(missing));
                }
            }
        }
        total = if *negative { total.sub(&term) } else { total.add(&term) };
    }
    for i in 0..k {
        for j in i + 1..k {
            for _ in 0..lcm[pair(i, j)] {
                total = total.exact_div(&linear(i, j)).ok_or(EvalError::NotAPolynomial)?;
            }
        }
    }
    Ok(total)
}

/// A point with pairwise distinct coordinates, where no `Q(w, c)` vanishes.
pub fn generic_point(k: usize) -> Vec<Rational> {
    (0..k).map(|i| Rational::from(i as i64 + 1)).collect()
}

/// The constant coefficient of [`eval_infty`].
///
/// The infinity-evaluation of a homogeneous decoration of degree `p` is a
/// polynomial of degree `p - s` with `s` the number of dumbbells, so only
/// the degree-`s` part of `t` contributes, and its contribution is a
/// constant that can be read off at any generic point.
pub fn eval_gl1(w: &AnnularWeb, t: &MPoly<Rational>) -> Rational {
    let s = w.thick_count() as u32;
    let top = MPoly::from_terms(
        t.nvars(),
        t.terms().filter(|(m, _)| m.iter().sum::<u32>() == s).map(|(m, c)| (m.clone(), c.clone())),
    );
    if top.is_zero() {
        return Rational::zero();
    }
    let pt = generic_point(w.strands());
    omnichrome_colorings(w).iter().fold(Rational::zero(), |acc, c| acc.add(&eval_coloring(w, &top, c).eval(&pt)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::webs::{parse_braid, resolve, Resolution};

    fn unknot() -> AnnularWeb {
        resolve(&parse_braid("", 1).unwrap(), Resolution::new(0, 0))
    }

    #[test]
    fn circle_evaluations() {
        let w = unknot();
        let one = MPoly::one(1);
        assert_eq!(eval_infty(&w, &one).unwrap(), MPoly::one(1));
        let x3 = MPoly::term(vec![3], Rational::one());
        assert_eq!(eval_infty(&w, &x3).unwrap(), x3);
        assert!(eval_gl1(&w, &one).is_one());
        assert!(eval_gl1(&w, &x3).is_zero());
    }

    #[test]
    fn single_dumbbell_unit_decoration() {
        let w = resolve(&parse_braid("1", 2).unwrap(), Resolution::from_slice(&[0]));
        let nv = w.thin_count();
        let v = eval_infty(&w, &MPoly::one(nv)).unwrap();
        // 1/(X1 - X2) + 1/(X2 - X1) = 0.
        assert!(v.is_zero());
        let a = w.dumbbell_edges(0).a;
        let xa = MPoly::var(nv, a);
        let v = eval_infty(&w, &xa).unwrap();
        assert!(v.is_symmetric_in(&[0, 1]));
        assert_eq!(v.constant_term(), eval_gl1(&w, &xa));
    }

    #[test]
    fn swapping_split_outputs_flips_sign() {
        let w = resolve(&parse_braid("1", 2).unwrap(), Resolution::from_slice(&[0]));
        let cs = omnichrome_colorings(&w);
        let r0 = eval_coloring(&w, &MPoly::one(w.thin_count()), &cs[0]);
        let r1 = eval_coloring(&w, &MPoly::one(w.thin_count()), &cs[1]);
        assert_eq!(r0.den, r1.den.neg());
    }
}
