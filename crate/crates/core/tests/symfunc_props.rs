//! Property tests for Young-diagram operations, Schur polynomials and the
//! Schur identities on disjoint alphabets.

use proptest::prelude::*;
use qag_core::symfunc::{
    complement, dual, identity_check, lr_coeffs, quantum_binom, schur_bialternant, schur_tableaux, transpose,
    BoxBound, YoungDiagram,
};

#[test]
fn complement_transpose_dual_commute() {
    for a in 0..=4 {
        for b in 0..=4 {
            let bound = BoxBound::new(a, b);
            for l in bound.diagrams() {
                let c = complement(&l, bound).unwrap();
                assert!(c.fits(bound));
                assert_eq!(complement(&c, bound).unwrap(), l, "complement is an involution");
                assert_eq!(c.size() + l.size(), a * b);
                let t = transpose(&l);
                assert!(t.fits(bound.transposed()));
                let d = dual(&l, bound).unwrap();
                assert_eq!(d, complement(&t, bound.transposed()).unwrap());
                assert!(d.fits(bound.transposed()));
            }
        }
    }
}

#[test]
fn tableaux_agree_with_bialternant() {
    for n in 0..=4usize {
        let vars: Vec<usize> = (0..n).collect();
        for size in 0..=6 {
            for l in YoungDiagram::partitions(size) {
                let t = schur_tableaux(&l, &vars, n);
                assert_eq!(t, schur_bialternant(&l, &vars, n), "lambda {l}, {n} variables");
                assert!(t.is_symmetric_in(&vars));
            }
        }
    }
}

fn diagram(max_size: u32) -> impl Strategy<Value = YoungDiagram> {
    (0..=max_size).prop_flat_map(|n| {
        let all = YoungDiagram::partitions(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn schur_identities_hold(
        l in diagram(4),
        nx in 0usize..=3,
        ny in 0usize..=3,
        nz in 0usize..=3,
        (a, b) in (0u32..=2, 0u32..=2),
    ) {
        let (x, y, z) = (names("x", nx), names("y", ny), names("z", nz));
        let xs: Vec<&str> = x.iter().map(String::as_str).collect();
        let ys: Vec<&str> = y.iter().map(String::as_str).collect();
        let zs: Vec<&str> = z.iter().map(String::as_str).collect();
        let r = identity_check(&l, &xs, &ys, &zs, Some(BoxBound::new(a, b))).unwrap();
        prop_assert!(r.all_hold(), "{:?} for {} on sizes {:?}", r, l, (nx, ny, nz));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn lr_symmetric_and_supported(l in diagram(3), m in diagram(3)) {
        let lm = lr_coeffs(&l, &m);
        prop_assert_eq!(&lm, &lr_coeffs(&m, &l));
        for nu in lm.keys() {
            prop_assert_eq!(nu.size(), l.size() + m.size());
            prop_assert!(nu.contains(&l) && nu.contains(&m));
        }
    }

    #[test]
    fn quantum_binomials_bar_invariant(n in 0i64..14, k in 0i64..14) {
        prop_assume!(k <= n);
        let b = quantum_binom(n, k).unwrap();
        prop_assert_eq!(b.bar(), b);
    }
}
