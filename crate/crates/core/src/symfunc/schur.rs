//! Schur polynomials by two independent routes (semistandard tableaux and the
//! bialternant quotient) and Littlewood-Richardson coefficients by expanding
//! products in the Schur basis.

use std::collections::BTreeMap;

use crate::exactalg::{MPoly, Rational, Ring};

use super::young::YoungDiagram;
use super::SymfuncError;

/// A polynomial over a named alphabet. Variable `i` of `poly` is
/// `alphabet[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymPoly {
    pub alphabet: Vec<String>,
    pub poly: MPoly<Rational>,
}

impl SymPoly {
    /// Invariance under every permutation of the alphabet.
    pub fn is_symmetric(&self) -> bool {
        let all: Vec<usize> = (0..self.alphabet.len()).collect();
        self.poly.is_symmetric_in(&all)
    }
}

/// `s_lambda` in the variables `vars` of a ring with `nvars` variables,
/// summed over semistandard tableaux. Zero when `lambda` has more rows than
/// `vars` has entries.
pub fn schur_tableaux(lambda: &YoungDiagram, vars: &[usize], nvars: usize) -> MPoly<Rational> {
    let mut out = MPoly::zero(nvars);
    if lambda.num_rows() as usize > vars.len() {
        return out;
    }
    let shape = lambda.parts().to_vec();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&p| vec![0; p as usize]).collect();
    let mut exps = vec![0u32; nvars];
    fill(&shape, 0, 0, vars, &mut grid, &mut exps, &mut out);
    out
}

fn fill(
    shape: &[u32],
    r: usize,
    c: usize,
    vars: &[usize],
    grid: &mut Vec<Vec<usize>>,
    exps: &mut Vec<u32>,
    out: &mut MPoly<Rational>,
) {
    if r == shape.len() {
        out.add_term(exps.clone(), &Rational::one());
        return;
    }
    let (nr, nc) = if c + 1 == shape[r] as usize { (r + 1, 0) } else { (r, c + 1) };
    let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
    let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
    // Entries in row r at least r, and leave room below for strict columns.
    let rows_below = shape[r + 1..].iter().filter(|&&p| p as usize > c).count();
    let hi = vars.len() - rows_below;
    for v in lo_row.max(lo_col)..hi {
        grid[r][c] = v;
        exps[vars[v]] += 1;
        fill(shape, nr, nc, vars, grid, exps, out);
        exps[vars[v]] -= 1;
    }
}

/// `s_lambda` as the quotient `a_{lambda + delta} / a_delta` of alternants.
pub fn schur_bialternant(lambda: &YoungDiagram, vars: &[usize], nvars: usize) -> MPoly<Rational> {
    let n = vars.len();
    if lambda.num_rows() as usize > n {
        return MPoly::zero(nvars);
    }
    let alternant = |shift: &dyn Fn(usize) -> u32| -> MPoly<Rational> {
        let mut acc = MPoly::zero(nvars);
        for (perm, sign) in permutations(n) {
            let mut m = vec![0u32; nvars];
            for (i, &j) in perm.iter().enumerate() {
                m[vars[i]] += shift(j);
            }
            acc.add_term(m, &Rational::from(sign));
        }
        acc
    };
    let num = alternant(&|j| lambda.part(j) + (n - 1 - j) as u32);
    let den = alternant(&|j| (n - 1 - j) as u32);
    num.exact_div(&den).expect("alternant quotient is exact")
}

/// All permutations of `0..n` with their signs.
fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(k: usize, sign: i64, cur: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == cur.len() {
            out.push((cur.clone(), sign));
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, if i == k { sign } else { -sign }, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, 1, &mut cur, &mut out);
    out
}

/// The Schur polynomial `s_lambda` over a named alphabet.
pub fn schur_eval(lambda: &YoungDiagram, alphabet: &[&str]) -> SymPoly {
    let n = alphabet.len();
    let vars: Vec<usize> = (0..n).collect();
    SymPoly { alphabet: alphabet.iter().map(|s| s.to_string()).collect(), poly: schur_tableaux(lambda, &vars, n) }
}

/// Expands a symmetric polynomial in the variables `vars` in the Schur
/// basis by repeatedly peeling off the lex-leading term, whose exponent is a
/// partition. Fails if the input is not symmetric in `vars` or involves other
/// variables.
pub fn schur_expand(p: &MPoly<Rational>, vars: &[usize]) -> Result<BTreeMap<YoungDiagram, Rational>, SymfuncError> {
    let nvars = p.nvars();
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some((m, c)) = rest.leading_term() {
        let parts: Vec<u32> = vars.iter().map(|&v| m[v]).collect();
        let outside = m.iter().enumerate().any(|(i, &e)| e > 0 && !vars.contains(&i));
        let lambda = match YoungDiagram::new(&parts) {
            Ok(l) if !outside => l,
            _ => return Err(SymfuncError::NotSymmetric),
        };
        let c = c.clone();
        rest = rest.sub(&schur_tableaux(&lambda, vars, nvars).scale(&c));
        out.insert(lambda, c);
    }
    Ok(out)
}

/// Littlewood-Richardson coefficients `c^nu_{lambda mu}`, found by expanding
/// `s_lambda * s_mu` in `|lambda| + |mu|` variables.
pub fn lr_coeffs(lambda: &YoungDiagram, mu: &YoungDiagram) -> BTreeMap<YoungDiagram, u64> {
    let n = ((lambda.size() + mu.size()) as usize).max(1);
    let vars: Vec<usize> = (0..n).collect();
    let prod = schur_tableaux(lambda, &vars, n).mul(&schur_tableaux(mu, &vars, n));
    schur_expand(&prod, &vars)
        .expect("products of Schur polynomials are symmetric")
        .into_iter()
        .map(|(nu, c)| {
            let c = c.to_i64().filter(|&c| c > 0).expect("LR coefficients are positive integers");
            (nu, c as u64)
        })
        .collect()
}
