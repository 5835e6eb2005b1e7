//! Exact checks of the Schur-polynomial identities that relate evaluations
//! on disjoint alphabets `X`, `Y`, `Z`:
//!
//! * splitting: `s_l(X+Z) = sum c^l_{ab} s_a(X) s_b(Z)`;
//! * removal: `s_l(X) = sum c^l_{ab} (-1)^|b| s_a(X+Z) s_{b^t}(Z)`;
//! * shift invariance: `sum (-1)^|b| c^l_{ab} s_a(X) s_{b^t}(Y)` is unchanged
//!   when `Z` is added to both `X` and `Y`;
//! * the rectangle case of shift invariance, summing
//!   `(-1)^|dual(a)| s_a(X) s_dual(a)(Y)` over `a` in `T(a, b)`.

use serde::Serialize;

use crate::exactalg::{MPoly, Rational, Ring};

use super::schur::{lr_coeffs, schur_tableaux};
use super::young::{dual, BoxBound, YoungDiagram};
use super::SymfuncError;

/// Outcome of [`identity_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub splitting: bool,
    pub removal: bool,
    pub shift_invariance: bool,
    /// Present when a rectangle was supplied.
    pub rectangle: Option<bool>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.splitting && self.removal && self.shift_invariance && self.rectangle.unwrap_or(true)
    }
}

/// Variable indices of three disjoint alphabets laid out as `X ++ Y ++ Z`.
struct Alphabets {
    nvars: usize,
    x: Vec<usize>,
    y: Vec<usize>,
    z: Vec<usize>,
}

impl Alphabets {
    fn new(x: &[&str], y: &[&str], z: &[&str]) -> Result<Self, SymfuncError> {
        let mut seen = std::collections::HashSet::new();
        for v in x.iter().chain(y).chain(z) {
            if !seen.insert(*v) {
                return Err(SymfuncError::AlphabetsOverlap(v.to_string()));
            }
        }
        let (nx, ny, nz) = (x.len(), y.len(), z.len());
        Ok(Alphabets {
            nvars: nx + ny + nz,
            x: (0..nx).collect(),
            y: (nx..nx + ny).collect(),
            z: (nx + ny..nx + ny + nz).collect(),
        })
    }

    fn union(a: &[usize], b: &[usize]) -> Vec<usize> {
        a.iter().chain(b).copied().collect()
    }

    fn s(&self, lambda: &YoungDiagram, vars: &[usize]) -> MPoly<Rational> {
        schur_tableaux(lambda, vars, self.nvars)
    }
}

/// Every `(alpha, beta, c)` with `c = c^lambda_{alpha beta} > 0`.
pub fn lr_decompositions(lambda: &YoungDiagram) -> Vec<(YoungDiagram, YoungDiagram, u64)> {
    let mut out = Vec::new();
    let n = lambda.size();
    for k in 0..=n {
        for alpha in YoungDiagram::partitions(k) {
            if !lambda.contains(&alpha) {
                continue;
            }
            for beta in YoungDiagram::partitions(n - k) {
                if !lambda.contains(&beta) {
                    continue;
                }
                if let Some(&c) = lr_coeffs(&alpha, &beta).get(lambda) {
                    out.push((alpha.clone(), beta, c));
                }
            }
        }
    }
    out
}

fn sign(n: u32) -> Rational {
    Rational::from(if n.is_multiple_of(2) { 1 } else { -1 })
}

/// Both sides of the rectangle identity for `box(a, b)`, as polynomials in
/// the concatenated alphabet `X ++ Y ++ Z`.
pub fn rectangle_sides(
    bound: BoxBound,
    x: &[&str],
    y: &[&str],
    z: &[&str],
) -> Result<(MPoly<Rational>, MPoly<Rational>), SymfuncError> {
    let al = Alphabets::new(x, y, z)?;
    let xz = Alphabets::union(&al.x, &al.z);
    let yz = Alphabets::union(&al.y, &al.z);
    let mut lhs = MPoly::zero(al.nvars);
    let mut rhs = MPoly::zero(al.nvars);
    for alpha in bound.diagrams() {
        let hat = dual(&alpha, bound)?;
        let sg = sign(hat.size());
        lhs = lhs.add(&al.s(&alpha, &al.x).mul(&al.s(&hat, &al.y)).scale(&sg));
        rhs = rhs.add(&al.s(&alpha, &xz).mul(&al.s(&hat, &yz)).scale(&sg));
    }
    Ok((lhs, rhs))
}

/// Evaluates both sides of each identity for `lambda` on the alphabets
/// `x`, `y`, `z`, and of the rectangle identity when `bound` is given.
pub fn identity_check(
    lambda: &YoungDiagram,
    x: &[&str],
    y: &[&str],
    z: &[&str],
    bound: Option<BoxBound>,
) -> Result<IdentityReport, SymfuncError> {
    let al = Alphabets::new(x, y, z)?;
    let xz = Alphabets::union(&al.x, &al.z);
    let yz = Alphabets::union(&al.y, &al.z);
    let decomp = lr_decompositions(lambda);
    let zero = || MPoly::<Rational>::zero(al.nvars);

    let mut split = zero();
    let mut removal = zero();
    let mut shift_l = zero();
    let mut shift_r = zero();
    for (alpha, beta, c) in &decomp {
        let c = Rational::from(*c as i64);
        let bt = beta.transpose();
        let sc = c.mul(&sign(beta.size()));
        split = split.add(&al.s(alpha, &al.x).mul(&al.s(beta, &al.z)).scale(&c));
        removal = removal.add(&al.s(alpha, &xz).mul(&al.s(&bt, &al.z)).scale(&sc));
        shift_l = shift_l.add(&al.s(alpha, &al.x).mul(&al.s(&bt, &al.y)).scale(&sc));
        shift_r = shift_r.add(&al.s(alpha, &xz).mul(&al.s(&bt, &yz)).scale(&sc));
    }
    let rectangle = match bound {
        Some(b) => {
            let (l, r) = rectangle_sides(b, x, y, z)?;
            Some(l == r)
        }
        None => None,
    };
    Ok(IdentityReport {
        splitting: al.s(lambda, &xz) == split,
        removal: al.s(lambda, &al.x) == removal,
        shift_invariance: shift_l == shift_r,
        rectangle,
    })
}
