//! Properties of the evaluation-based state spaces on small webs.

use proptest::prelude::*;
use qag_core::evalspaces::{
    eval_coloring, eval_gl1, eval_infty, gl0_dims, gl0_dims_with, gl0_gram, gl1_dims, gl1_gram, gram_rank,
    monomials, omnichrome_colorings, Coloring, PhiStar,
};
use qag_core::exactalg::{MPoly, Rational, Ring};
use qag_core::webs::{resolve, AnnularWeb, BraidWord, Resolution};

fn words(k: usize, n: usize) -> Vec<BraidWord> {
    let alphabet: Vec<i32> = (1..k as i32).flat_map(|i| [i, -i]).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|w| alphabet.iter().map(move |&l| [w.clone(), vec![l]].concat())).collect();
    }
    out.into_iter().map(|w| BraidWord::new(k, w).unwrap()).collect()
}

/// Every resolution of every braid with at most `max_k` strands and `max_n`
/// crossings, up to duplicates of the resulting web.
fn small_webs(max_k: usize, max_n: usize) -> Vec<AnnularWeb> {
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

/// Brute force over all pigment assignments to thin edges.
fn brute_force_colorings(w: &AnnularWeb) -> Vec<Coloring> {
    let k = w.strands();
    let m = w.thin_count();
    let mut out = Vec::new();
    let total = k.pow(m as u32);
    for code in 0..total {
        let mut x = code;
        let thin: Vec<usize> = (0..m)
            .map(|_| {
                let p = x % k;
                x /= k;
                p
            })
            .collect();
        let thick = (0..w.thick_count())
            .map(|d| {
                let r = w.dumbbell_edges(d);
                let (a, b) = (thin[r.c], thin[r.d]);
                [a.min(b), a.max(b)]
            })
            .collect();
        let c = Coloring { thin, thick };
        if c.is_valid(w) {
            out.push(c);
        }
    }
    out.sort();
    out
}

#[test]
fn colorings_match_exhaustive_assignment() {
    for w in small_webs(3, 3) {
        let mut ours = omnichrome_colorings(&w);
        ours.sort();
        assert!(ours.iter().all(|c| c.is_valid(&w)));
        assert_eq!(ours, brute_force_colorings(&w), "{}", w.debug_dump());
    }
}

#[test]
fn worked_example_numerator_and_denominator() {
    // Three strands, four dumbbells; starting pigments (X2, X3, X1) on the
    // lanes from the inside out, keep at the first and third dumbbells and
    // swap at the second and fourth.
    let b = BraidWord::new(3, vec![1, 2, 1, 2]).unwrap();
    let w = resolve(&b, Resolution::new(0, 4));
    let c = omnichrome_colorings(&w)
        .into_iter()
        .find(|c| {
            (0..3).map(|l| c.thin[w.edge_after_trace(l)]).collect::<Vec<_>>() == vec![1, 2, 0]
                && c.thin[w.dumbbell_edges(1).b] == 0
        })
        .expect("coloring exists");
    // Decoration: two dots on an X2 edge, one on an X1 edge, one on an X3 edge.
    let nv = w.thin_count();
    let edge_of = |p: usize| (0..nv).find(|&e| c.thin[e] == p).unwrap();
    let mut m = vec![0u32; nv];
    m[edge_of(1)] += 2;
    m[edge_of(0)] += 1;
    m[edge_of(2)] += 1;
    let r = eval_coloring(&w, &MPoly::term(m, Rational::one()), &c);
    let x = |i: usize| MPoly::<Rational>::var(3, i);
    assert_eq!(r.num, x(1).pow(2).mul(&x(0)).mul(&x(2)));
    let q = x(2).sub(&x(0)).mul(&x(1).sub(&x(2))).mul(&x(0).sub(&x(2))).mul(&x(1).sub(&x(0)));
    assert_eq!(r.den, q);
}

#[test]
fn phi_star_descriptions_agree_and_gl0_fits_in_gl1() {
    for w in small_webs(3, 3) {
        let g0 = gl0_dims(&w, None);
        assert_eq!(g0, gl0_dims_with(&w, PhiStar::DotsBelow, None), "{}", w.debug_dump());
        let g1 = gl1_dims(&w, None);
        let k = w.strands() as i32;
        for (&d, &n) in &g0.0 {
            assert!(n <= g1.get(d + k - 1), "degree {d}: {}", w.debug_dump());
        }
    }
}

#[test]
fn fast_ranks_match_explicit_gram_matrices() {
    for w in small_webs(3, 2) {
        let s = w.thick_count() as i32;
        let k = w.strands() as i32;
        let g1 = gl1_dims(&w, None);
        let g0 = gl0_dims(&w, None);
        for p in 0..=s {
            assert_eq!(g1.get(2 * p - s), gram_rank(&gl1_gram(&w, p as u32)));
            if p <= s - k + 1 {
                assert_eq!(g0.get(2 * p - s + k - 1), gram_rank(&gl0_gram(&w, p as u32, PhiStar::MarkedPower)));
            }
        }
    }
}

#[test]
fn symmetric_positive_degree_sections_annihilate() {
    for w in small_webs(3, 2) {
        let nv = w.thin_count();
        let s = w.thick_count() as u32;
        if s == 0 {
            continue;
        }
        for level in 0..=w.levels() {
            let e1 = (0..w.strands()).fold(MPoly::<Rational>::zero(nv), |acc, lane| {
                acc.add(&MPoly::var(nv, w.edge_containing(lane, level)))
            });
            for p in 0..s {
                for a in monomials(nv, p) {
                    for b in monomials(nv, s - 1 - p) {
                        let t = e1.mul_monomial(&a).mul_monomial(&b);
                        assert!(eval_gl1(&w, &t).is_zero());
                    }
                }
            }
        }
    }
}

fn web_strategy() -> impl Strategy<Value = AnnularWeb> {
    (1usize..=3, prop::collection::vec((1i32..3, any::<bool>()), 0..=3), any::<u64>()).prop_map(|(k, ls, bits)| {
        let letters: Vec<i32> = if k == 1 {
            Vec::new()
        } else {
            ls.iter().map(|&(l, s)| if s { (l - 1) % (k as i32 - 1) + 1 } else { -((l - 1) % (k as i32 - 1) + 1) }).collect()
        };
        let b = BraidWord::new(k, letters).unwrap();
        let n = b.len();
        resolve(&b, Resolution::new(bits & ((1 << n) - 1), n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn infinity_evaluation_is_symmetric_polynomial(
        w in web_strategy(),
        terms in prop::collection::vec((prop::collection::vec(0u32..4, 9), -3i64..4), 1..4),
    ) {
        let nv = w.thin_count();
        let t = MPoly::from_terms(nv, terms.into_iter().map(|(e, c)| {
            let mut m: Vec<u32> = e.into_iter().take(nv).collect();
            m.resize(nv, 0);
            // Keep total degree at most 3.
            let mut budget = 3u32;
            for x in m.iter_mut() {
                *x = (*x).min(budget);
                budget -= *x;
            }
            (m, Rational::from(c))
        }));
        let v = eval_infty(&w, &t);
        prop_assert!(v.is_ok());
        let v = v.unwrap();
        let all: Vec<usize> = (0..w.strands()).collect();
        prop_assert!(v.is_symmetric_in(&all));
        prop_assert_eq!(v.constant_term(), eval_gl1(&w, &t));
    }
}
