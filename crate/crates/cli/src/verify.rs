//! Self-checks grouped by acceptance criterion.
//!
//! Each function returns one [`Check`] per item it verifies. The `verify`
//! subcommand and the acceptance test both run these.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use qag_core::evalspaces::{eval_gl1, eval_infty, gl0_dims, GradedDims};
use qag_core::exactalg::{smith_normal_form, EuclideanDomain, Fp, LaurentPoly, LaurentQ, MPoly, Matrix, Rational, Ring};
use qag_core::gilmore::{ag_at_q1, GilmoreOptions};
use qag_core::homology::{
    alexander_burau, bockstein_integer, bockstein_laurent, compute_knot, euler_as_laurent, homology_table,
    literal_pages_integer, literal_pages_laurent, specialize_at_one, CubeComplex, PoincarePolynomial,
};
use qag_core::symfunc::{identity_check, BoxBound, YoungDiagram};
use qag_core::webs::{cube, resolve, AnnularWeb, BraidWord, Resolution};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::reference::{ReferenceEntry, CINQUEFOIL, FIGURE_EIGHT, LEFT_TREFOIL, TORUS_3_4, TREFOIL};

/// The outcome of one verification item.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

/// Whether every check passed.
pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.passed)
}

/// Seed for every randomized check, so runs are reproducible.
pub const SEED: u64 = 0x0005_eed0_f9a0;

/// Time allowed per reference knot.
pub const PER_KNOT_LIMIT: Duration = Duration::from_secs(60);

fn opts() -> GilmoreOptions {
    GilmoreOptions::default()
}

/// The four knots whose `gl0` polynomials are listed.
pub fn reference_knots() -> [ReferenceEntry; 4] {
    [TREFOIL, LEFT_TREFOIL, FIGURE_EIGHT, CINQUEFOIL]
}

/// Knot braids with `2..=max_k` strands and `1..=max_n` letters, drawn from
/// a seeded generator.
pub fn random_knots(seed: u64, count: usize, max_k: usize, max_n: usize) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let k = rng.gen_range(2..=max_k);
        let n = rng.gen_range(1..=max_n);
        let letters: Vec<i32> = (0..n)
            .map(|_| {
                let l = rng.gen_range(1..k as i32);
                if rng.gen_bool(0.5) {
                    l
                } else {
                    -l
                }
            })
            .collect();
        let b = BraidWord::new(k, letters).expect("letters are in range");
        if b.is_knot() {
            out.push(b);
        }
    }
    out
}

/// The braids the invariant checks run on: the listed knots and ten random
/// knots with at most three strands and eight crossings.
pub fn test_braids() -> Vec<BraidWord> {
    let mut out: Vec<BraidWord> = reference_knots().iter().map(|e| e.braid_word()).collect();
    out.extend(random_knots(SEED, 10, 3, 8));
    out
}

fn word(b: &BraidWord) -> String {
    b.to_string()
}

/// `gl0` Poincaré polynomials of the listed knots, each within the time
/// limit.
pub fn reference_polynomials() -> Vec<Check> {
    reference_knots()
        .iter()
        .map(|e| {
            let start = Instant::now();
            let got = compute_knot::<Rational>(&e.braid_word(), &opts()).map(|h| h.gl0_poincare());
            let elapsed = start.elapsed();
            let expected = e.gl0_poincare().expect("listed polynomial");
            match got {
                Ok(p) => Check::new(
                    format!("gl0 {}", e.name),
                    p == expected && elapsed < PER_KNOT_LIMIT,
                    format!("{p} (expected {expected}) in {:.2?}", elapsed),
                ),
                Err(err) => Check::new(format!("gl0 {}", e.name), false, err.to_string()),
            }
        })
        .collect()
}

/// Sums of the graded ranks at `q = 1` over each homological degree of the
/// cube, keyed by homological degree.
pub fn column_ranks(b: &BraidWord) -> BTreeMap<i32, GradedDims> {
    let mut by_h: BTreeMap<i32, GradedDims> = BTreeMap::new();
    for v in cube(b) {
        let w = resolve(b, v.resolution);
        let d = ag_at_q1::<Rational>(&w, &opts()).shifted(v.qshift);
        let e = by_h.entry(v.hdeg).or_default();
        *e = e.plus(&d);
    }
    by_h
}

/// Graded ranks of the trefoil and figure-eight cubes, column by column.
pub fn vertex_ranks() -> Vec<Check> {
    let g = GradedDims::from_pairs;
    let cases: [(ReferenceEntry, Vec<(i32, GradedDims)>); 2] = [
        (
            TREFOIL,
            vec![
                (0, g(&[(2, 1), (0, 2), (-2, 1)])),
                (1, g(&[(0, 3), (-2, 3)])),
                (2, g(&[(-2, 3)])),
                (3, g(&[])),
            ],
        ),
        (
            FIGURE_EIGHT,
            vec![(-1, g(&[(0, 2), (2, 2)])), (0, g(&[(-2, 1), (0, 7), (2, 1)])), (1, g(&[(0, 2), (-2, 2)]))],
        ),
    ];
    let mut out = Vec::new();
    for (e, expected) in cases {
        let got = column_ranks(&e.braid_word());
        for (h, dims) in expected.iter().cloned() {
            let have = got.get(&h).cloned().unwrap_or_default();
            out.push(Check::new(format!("{} column h = {h}", e.name), have == dims, format!("{have:?}")));
        }
        let listed: Vec<i32> = expected.iter().map(|&(h, _)| h).collect();
        let extra: Vec<i32> = got.iter().filter(|(h, d)| d.total() > 0 && !listed.contains(h)).map(|(&h, _)| h).collect();
        out.push(Check::new(format!("{} has no other columns", e.name), extra.is_empty(), format!("{extra:?}")));
    }
    out
}

fn words(k: usize, n: usize) -> Vec<BraidWord> {
    let alphabet: Vec<i32> = (1..k as i32).flat_map(|i| [i, -i]).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|w| alphabet.iter().map(move |&l| [w.clone(), vec![l]].concat())).collect();
    }
    out.into_iter().map(|w| BraidWord::new(k, w).expect("letters are in range")).collect()
}

/// Distinct webs over every resolution of every braid with at most `max_k`
/// strands and `max_n` crossings.
pub fn small_webs(max_k: usize, max_n: usize) -> Vec<AnnularWeb> {
    let mut out: Vec<AnnularWeb> = Vec::new();
    for k in 1..=max_k {
        for n in 0..=max_n {
            if k == 1 && n > 0 {
                continue;
            }
            for b in words(k, n) {
                for bits in 0..1u64 << n {
                    let w = resolve(&b, Resolution::new(bits, n));
                    if !out.contains(&w) {
                        out.push(w);
                    }
                }
            }
        }
    }
    out
}

/// The presentation-based ranks at `q = 1` against the evaluation-based
/// `gl0` dimensions on every small web.
pub fn oracle_equivalence() -> Check {
    let webs = small_webs(3, 4);
    let bad: Vec<String> = webs
        .iter()
        .filter(|w| ag_at_q1::<Rational>(w, &opts()) != gl0_dims(w, None))
        .map(|w| w.debug_dump())
        .collect();
    Check::new(
        "presentation ranks equal evaluation ranks",
        webs.len() >= 100 && bad.is_empty(),
        format!("{} webs, {} mismatches{}", webs.len(), bad.len(), bad.first().map(|s| format!(": {s}")).unwrap_or_default()),
    )
}

/// The graded Euler characteristic of `gl0` homology against the Burau
/// Alexander polynomial.
pub fn alexander_consistency() -> Vec<Check> {
    let mut braids: Vec<(String, BraidWord)> =
        reference_knots().iter().chain([&TORUS_3_4]).map(|e| (e.name.to_string(), e.braid_word())).collect();
    braids.extend(random_knots(SEED, 10, 3, 8).into_iter().map(|b| (word(&b), b)));
    braids
        .into_iter()
        .map(|(name, b)| {
            let burau = alexander_burau::<Rational>(&b).expect("knot");
            match compute_knot::<Rational>(&b, &opts()) {
                Ok(h) => {
                    let chi: LaurentQ = euler_as_laurent(&h.gl0.euler_characteristic());
                    Check::new(format!("Alexander {name}"), chi == burau, format!("euler {chi}, burau {burau}"))
                }
                Err(e) => Check::new(format!("Alexander {name}"), false, e.to_string()),
            }
        })
        .collect()
}

/// `E_infinity` totals, and the drop from `E_1` for T(3,4) when requested.
pub fn bockstein_totals(include_torus: bool) -> Vec<Check> {
    let mut entries: Vec<ReferenceEntry> = reference_knots().to_vec();
    if include_torus {
        entries.push(TORUS_3_4);
    }
    entries
        .iter()
        .map(|e| {
            let start = Instant::now();
            match compute_knot::<Rational>(&e.braid_word(), &opts()) {
                Ok(h) => {
                    let (e1, einf) = (h.bockstein.e1().total(), h.einf().total());
                    let e1_ok = e.gl0_total_at_least.is_none_or(|m| e1 >= m && einf < e1);
                    Check::new(
                        format!("E_infinity {}", e.name),
                        einf == e.hfk_total && e1_ok,
                        format!("E1 total {e1}, E_infinity total {einf}, r* = {}, {:.2?}", h.bockstein.stabilization, start.elapsed()),
                    )
                }
                Err(err) => Check::new(format!("E_infinity {}", e.name), false, err.to_string()),
            }
        })
        .collect()
}

/// `d o d = 0` over `Q[q, q^-1]` (checked during assembly), at `q = 1`, and
/// over `F_3` on every test braid.
pub fn d_squared() -> Vec<Check> {
    test_braids()
        .iter()
        .map(|b| {
            let name = format!("d^2 = 0 on {}", word(b));
            let rational = compute_knot::<Rational>(b, &opts());
            let mod3 = compute_knot::<Fp<3>>(b, &opts());
            match (rational, mod3) {
                (Ok(h), Ok(h3)) => {
                    let at_one = specialize_at_one(&h.complex).d_squared_failure();
                    let at_one_mod3 = specialize_at_one(&h3.complex).d_squared_failure();
                    Check::new(
                        name,
                        at_one.is_none() && at_one_mod3.is_none(),
                        format!("{} bidegrees, failure at q = 1: {at_one:?}", h.complex.ranks.len()),
                    )
                }
                (Err(e), _) | (_, Err(e)) => Check::new(name, false, e.to_string()),
            }
        })
        .collect()
}

/// Every square face of every test cube anticommutes.
pub fn sign_faces() -> Check {
    let mut faces = 0usize;
    let mut bad = Vec::new();
    for b in test_braids().iter().chain([&TORUS_3_4.braid_word()]) {
        let n = b.len();
        for v in cube(b) {
            let i = v.resolution;
            for c1 in 0..n {
                for c2 in c1 + 1..n {
                    if i.get(c1) || i.get(c2) {
                        continue;
                    }
                    faces += 1;
                    if i.sign(c1) * i.flip(c1).sign(c2) + i.sign(c2) * i.flip(c2).sign(c1) != 0 {
                        bad.push(format!("{} at {:b}", word(b), i.bits()));
                    }
                }
            }
        }
    }
    Check::new("sign identity on all faces", bad.is_empty(), format!("{faces} faces, {} bad", bad.len()))
}

/// The infinity evaluation of random decorations on small webs is a
/// symmetric polynomial whose constant term is the `gl1` evaluation.
pub fn infinity_evaluation(samples: usize) -> Check {
    let webs = small_webs(3, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let mut bad = 0;
    for s in 0..samples {
        let w = &webs[s % webs.len()];
        let nv = w.thin_count();
        let terms = (0..rng.gen_range(1..4)).map(|_| {
            let mut m = vec![0u32; nv];
            for _ in 0..rng.gen_range(0..=3) {
                m[rng.gen_range(0..nv)] += 1;
            }
            (m, Rational::from(rng.gen_range(-3i64..4)))
        });
        let t = MPoly::from_terms(nv, terms);
        let all: Vec<usize> = (0..w.strands()).collect();
        let ok = match eval_infty(w, &t) {
            Ok(v) => v.is_symmetric_in(&all) && v.constant_term() == eval_gl1(w, &t),
            Err(_) => false,
        };
        if !ok {
            bad += 1;
        }
    }
    Check::new(
        "infinity evaluation is a symmetric polynomial",
        bad == 0,
        format!("{samples} decorations on {} webs, {bad} failures", webs.len()),
    )
}

fn snf_holds<R: EuclideanDomain>(m: &Matrix<R>) -> bool {
    let s = smith_normal_form(m, true);
    let Some(t) = s.transforms.as_ref() else {
        return false;
    };
    t.u.mul(m).mul(&t.v) == s.diagonal(m.rows(), m.cols())
        && t.u.mul(&t.u_inv) == Matrix::identity(m.rows())
        && t.v.mul(&t.v_inv) == Matrix::identity(m.cols())
        && s.divisors.windows(2).all(|w| w[0].divides_into(&w[1]))
        && s.divisors.iter().all(|d| d.normalized() == *d)
}

/// `U M V = D`, invertibility of the transforms and the divisibility chain
/// on random integer and Laurent-polynomial matrices.
pub fn snf_identities(count: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let mut bad = 0;
    for i in 0..count {
        let (r, c) = (rng.gen_range(0..=5), rng.gen_range(0..=5));
        let ok = if i % 2 == 0 {
            let rows = (0..r).map(|_| (0..c).map(|_| BigInt::from(rng.gen_range(-6i64..7))).collect()).collect();
            snf_holds(&Matrix::from_rows(rows, c))
        } else {
            let (r, c) = (r.min(4), c.min(4));
            let rows = (0..r)
                .map(|_| {
                    (0..c)
                        .map(|_| {
                            let terms: Vec<(i32, i64)> =
                                (0..rng.gen_range(0..3)).map(|_| (rng.gen_range(-2..3), rng.gen_range(-3..4))).collect();
                            LaurentQ::from_int_terms(&terms)
                        })
                        .collect()
                })
                .collect();
            snf_holds(&Matrix::from_rows(rows, c))
        };
        if !ok {
            bad += 1;
        }
    }
    Check::new("Smith normal form transforms", bad == 0, format!("{count} random matrices, {bad} failures"))
}

/// The Schur-function identities on random diagrams, alphabets and boxes.
pub fn symfunc_identities(count: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    let names = |prefix: &str, n: usize| -> Vec<String> { (0..n).map(|i| format!("{prefix}{i}")).collect() };
    let mut bad = Vec::new();
    for _ in 0..count {
        let all = YoungDiagram::partitions(rng.gen_range(0..=4));
        let l = all[rng.gen_range(0..all.len())].clone();
        let (x, y, z) = (names("x", rng.gen_range(0..=3)), names("y", rng.gen_range(0..=3)), names("z", rng.gen_range(0..=3)));
        let bound = BoxBound::new(rng.gen_range(0..=2), rng.gen_range(0..=2));
        match identity_check(&l, &strs(&x), &strs(&y), &strs(&z), Some(bound)) {
            Ok(rep) if rep.all_hold() => {}
            other => bad.push(format!("{l}: {other:?}")),
        }
    }
    Check::new(
        "Schur identities",
        bad.is_empty(),
        format!("{count} instances, {} failures{}", bad.len(), bad.first().map(|s| format!(": {s}")).unwrap_or_default()),
    )
}

fn strs(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

fn two_term<R: Ring>(f: R) -> CubeComplex<R> {
    let ranks = BTreeMap::from([((0, 0), 1), ((1, 0), 1)]);
    let d = BTreeMap::from([((0, 0), Matrix::from_rows(vec![vec![f]], 1))]);
    CubeComplex { ranks, d }
}

/// `R --f--> R` with `f` of valuation `k` has two classes on pages `1..=k`
/// and none after, over the integers with `p` and over `Q[q, q^-1]` with
/// `q - 1`. The divisor bookkeeping is compared with the literal pages.
pub fn bockstein_example() -> Vec<Check> {
    let two = PoincarePolynomial::from_terms(&[(0, 0, 1), (1, 0, 1)]);
    let expected = |k: usize| -> Vec<PoincarePolynomial> {
        let mut v = vec![two.clone(); k];
        v.push(PoincarePolynomial::default());
        v
    };
    let mut out = Vec::new();
    for p in [2u64, 3] {
        for k in 1..=3usize {
            let c = two_term(BigInt::from(p).pow(k as u32).mul(&BigInt::from(if p == 2 { 5 } else { -7 })));
            let pages = bockstein_integer(&homology_table(&c), p).pages;
            let literal = literal_pages_integer(&c, p, k + 1);
            out.push(Check::new(
                format!("integers, {p}^{k}"),
                pages == expected(k) && literal == pages,
                format!("page totals {:?}", pages.iter().map(PoincarePolynomial::total).collect::<Vec<_>>()),
            ));
        }
    }
    let qm1 = LaurentQ::from_int_terms(&[(1, 1), (0, -1)]);
    let coprime = LaurentQ::from_int_terms(&[(2, 1), (1, 1), (0, 1)]);
    for k in 1..=4usize {
        let f: LaurentPoly<Rational> = qm1.pow(k as u32).mul(&coprime).shift(-2);
        let c = two_term(f);
        let report = bockstein_laurent(&homology_table(&c));
        let literal = literal_pages_laurent(&c, k + 1);
        out.push(Check::new(
            format!("Laurent, (q-1)^{k}"),
            report.pages == expected(k) && literal == report.pages && report.is_monotone(),
            format!("page totals {:?}", report.pages.iter().map(PoincarePolynomial::total).collect::<Vec<_>>()),
        ));
    }
    out
}

/// Page monotonicity, pairing within quantum degrees, `E_1 = H(q = 1)` and
/// agreement with the literal pages on every test braid.
pub fn bockstein_pages() -> Vec<Check> {
    test_braids()
        .iter()
        .chain([&TORUS_3_4.braid_word()])
        .map(|b| {
            let name = format!("Bockstein pages of {}", word(b));
            match compute_knot::<Rational>(b, &opts()) {
                Ok(h) => {
                    let r = &h.bockstein;
                    let e1 = homology_table(&specialize_at_one(&h.complex)).poincare();
                    let literal = literal_pages_laurent(&h.complex, r.stabilization);
                    Check::new(
                        name,
                        r.is_monotone() && r.differences_are_even() && r.e1() == &e1 && literal == r.pages,
                        format!("r* = {}, totals {:?}", r.stabilization, r.pages.iter().map(PoincarePolynomial::total).collect::<Vec<_>>()),
                    )
                }
                Err(e) => Check::new(name, false, e.to_string()),
            }
        })
        .collect()
}

/// Every property suite: differentials, signs, evaluations, Smith forms,
/// Schur identities and Bockstein pages.
pub fn property_suites() -> Vec<Check> {
    let mut out = d_squared();
    out.push(sign_faces());
    out.push(infinity_evaluation(200));
    out.push(snf_identities(500));
    out.push(symfunc_identities(100));
    out.extend(bockstein_example());
    out.extend(bockstein_pages());
    out
}
