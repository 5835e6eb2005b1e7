//! Properties of the presentation-based spaces and their foam maps.

use qag_core::evalspaces::{gl0_dims, GradedDims};
use qag_core::exactalg::{LaurentQ, MPoly, Rational};
use qag_core::gilmore::{
    ag_at_q1, graded_presentation, qag_space, unzip_matrix, zip_matrix, FoamMap, GilmoreOptions, QagSpace,
};
use qag_core::webs::{cube, parse_braid, resolve, AnnularWeb, BraidWord, EdgeKind, Resolution};

type Space = QagSpace<Rational>;

fn words(k: usize, n: usize) -> Vec<BraidWord> {
    let alphabet: Vec<i32> = (1..k as i32).flat_map(|i| [i, -i]).collect();
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|w| alphabet.iter().map(move |&l| [w.clone(), vec![l]].concat())).collect();
    }
    out.into_iter().map(|w| BraidWord::new(k, w).unwrap()).collect()
}

/// Distinct webs over every resolution of every braid word with at most
/// `max_k` strands and `max_n` crossings.
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

fn opts() -> GilmoreOptions {
    GilmoreOptions::default()
}

fn space(w: &AnnularWeb) -> Space {
    qag_space::<Rational>(w, &opts())
}

fn lp(t: &[(i32, i64)]) -> LaurentQ {
    LaurentQ::from_int_terms(t)
}

#[test]
fn agrees_with_evaluation_spaces_at_q_one() {
    let webs = small_webs(3, 4);
    assert!(webs.len() >= 100, "only {} webs", webs.len());
    for w in &webs {
        let s = space(w);
        assert!(!s.truncated);
        assert_eq!(s.dims(), gl0_dims(w, None), "{}", w.debug_dump());
    }
}

#[test]
fn unknot_is_one_dimensional() {
    let w = resolve(&parse_braid("", 1).unwrap(), Resolution::new(0, 0));
    let s = space(&w);
    assert_eq!(s.total_rank(), 1);
    assert_eq!(s.dims(), GradedDims::from_pairs(&[(0, 1)]));
}

#[test]
fn disconnected_web_is_torsion() {
    let w = resolve(&parse_braid("1", 2).unwrap(), Resolution::from_slice(&[1]));
    let s = space(&w);
    assert_eq!(s.total_rank(), 0);
    let pres = graded_presentation::<Rational>(&w, &opts());
    let piece = pres.piece(0);
    assert_eq!(piece.monomials.len(), 1);
    let (free, torsion) = qag_core::exactalg::cokernel_decompose(&piece.matrix.to_dense().transpose());
    assert_eq!(free, 0);
    assert_eq!(torsion, vec![lp(&[(2, 1), (0, -1)])]);
    for k in 2..=4 {
        for bits in 0..1u64 << (k - 1) {
            let letters: Vec<i32> = (1..k as i32).collect();
            let b = BraidWord::new(k, letters).unwrap();
            let w = resolve(&b, Resolution::new(bits, k - 1));
            if w.components() > 1 {
                assert_eq!(space(&w).total_rank(), 0);
            }
        }
    }
}

/// The chain of dumbbells on `k` strands, built so that the dumbbell joining
/// lanes `k - 1 - i` and `k - 2 - i` comes `i`-th.
fn chain(k: usize) -> AnnularWeb {
    let letters: Vec<i32> = (1..k as i32).rev().collect();
    resolve(&BraidWord::new(k, letters).unwrap(), Resolution::new(0, k - 1))
}

#[test]
fn chain_of_dumbbells_is_generated_by_the_unit() {
    for k in 2..=5 {
        let w = chain(k);
        let s = space(&w);
        assert_eq!(s.total_rank(), 1, "k = {k}");
        assert_eq!(s.rank(0), 1);
    }
}

#[test]
fn chain_of_dumbbells_cycle_relations() {
    // With 1-based positions i along the chain, z_i enters dumbbell i on its
    // upper lane and y_i leaves it towards the trace section. The cycle
    // relations force z_i = q^(2i - 2k) y_i.
    for k in 2..=5 {
        let w = chain(k);
        let pres = graded_presentation::<Rational>(&w, &opts());
        let nv = w.thin_count();
        for i in 1..k {
            let r = w.dumbbell_edges(i - 1);
            let z = MPoly::<LaurentQ>::var(nv, r.c);
            let y = MPoly::<LaurentQ>::var(nv, r.a).scale(&LaurentQ::q_pow(2 * i as i32 - 2 * k as i32));
            assert!(pres.reduces_to_zero(&z.sub(&y)), "k = {k}, i = {i}");
            // A different power is not a consequence.
            let y2 = MPoly::<LaurentQ>::var(nv, r.a).scale(&LaurentQ::q_pow(2 * i as i32 - 2 * k as i32 + 2));
            assert!(!pres.reduces_to_zero(&z.sub(&y2)) || pres.reduces_to_zero(&MPoly::var(nv, r.a)));
        }
    }
}

fn all_singular(word: &str, k: usize) -> AnnularWeb {
    let b = parse_braid(word, k).unwrap();
    let bits = (0..b.len()).filter(|&c| !b.is_positive(c)).fold(0u64, |acc, c| acc | 1 << c);
    resolve(&b, Resolution::new(bits, b.len()))
}

#[test]
fn trefoil_singular_vertex() {
    let w = all_singular("1 1 1", 2);
    assert_eq!(ag_at_q1::<Rational>(&w, &opts()), GradedDims::from_pairs(&[(-2, 1), (0, 2), (2, 1)]));
}

fn columns(word: &str, k: usize) -> std::collections::BTreeMap<i32, GradedDims> {
    let b = parse_braid(word, k).unwrap();
    let mut by_h: std::collections::BTreeMap<i32, GradedDims> = Default::default();
    for v in cube(&b) {
        let w = resolve(&b, v.resolution);
        let d = ag_at_q1::<Rational>(&w, &opts()).shifted(v.qshift);
        let e = by_h.entry(v.hdeg).or_default();
        *e = e.plus(&d);
    }
    by_h.retain(|_, d| d.total() > 0);
    by_h
}

#[test]
fn figure_eight_cube_columns() {
    let by_h = columns("1 -2 1 -2", 3);
    assert_eq!(by_h[&-1], GradedDims::from_pairs(&[(0, 2), (2, 2)]));
    assert_eq!(by_h[&0], GradedDims::from_pairs(&[(-2, 1), (0, 7), (2, 1)]));
    assert_eq!(by_h[&1], GradedDims::from_pairs(&[(-2, 2), (0, 2)]));
    assert_eq!(by_h.len(), 3);
    // The fully singular vertex alone.
    let w = all_singular("1 -2 1 -2", 3);
    assert_eq!(ag_at_q1::<Rational>(&w, &opts()), GradedDims::from_pairs(&[(-2, 1), (0, 3), (2, 1)]));
}

#[test]
fn trefoil_cube_columns() {
    let by_h = columns("1 1 1", 2);
    assert_eq!(by_h[&0], GradedDims::from_pairs(&[(-2, 1), (0, 2), (2, 1)]));
    assert_eq!(by_h[&1], GradedDims::from_pairs(&[(-2, 3), (0, 3)]));
    assert_eq!(by_h[&2], GradedDims::from_pairs(&[(-2, 3)]));
    assert_eq!(by_h.len(), 3);
}

#[test]
fn zip_witness_reduces_to_zero() {
    let w = resolve(&parse_braid("1 -2 1", 3).unwrap(), Resolution::new(0, 3));
    let pres = graded_presentation::<Rational>(&w, &opts());
    let nv = w.thin_count();
    for d in 0..w.thick_count() {
        let r = w.dumbbell_edges(d);
        let x = |e: usize| MPoly::<LaurentQ>::var(nv, e);
        let witness = x(r.a).sub(&x(r.d)).mul(&x(r.a).sub(&x(r.c)));
        assert!(pres.reduces_to_zero(&witness));
        assert!(!pres.reduces_to_zero(&x(r.a).sub(&x(r.d))) || pres.reduces_to_zero(&x(r.a)));
    }
}

#[test]
fn foam_maps_are_well_defined_and_send_unit_to_unit() {
    for (word, k) in [("1 1 1", 2), ("1 -2 1 -2", 3), ("-1 -1 2", 3), ("1 2 1 2", 3)] {
        let b = parse_braid(word, k).unwrap();
        let verts = cube(&b);
        let webs: Vec<AnnularWeb> = verts.iter().map(|v| resolve(&b, v.resolution)).collect();
        let spaces: Vec<Space> = webs.iter().map(space).collect();
        for v in &verts {
            let i = v.resolution.bits() as usize;
            for e in &v.outgoing {
                let j = e.target.bits() as usize;
                let f = FoamMap::new(e.kind, &webs[i], &spaces[i], &webs[j], &spaces[j], e.crossing).unwrap();
                f.check_well_defined(&webs[i], &spaces[j]).unwrap();
                for p in 0..spaces[i].pieces.len() as u32 {
                    let m = match e.kind {
                        EdgeKind::Unzip => unzip_matrix(&webs[i], &spaces[i], &webs[j], &spaces[j], e.crossing, p),
                        EdgeKind::Zip => zip_matrix(&webs[i], &spaces[i], &webs[j], &spaces[j], e.crossing, p),
                    }
                    .unwrap();
                    assert_eq!(m, f.matrix(&spaces[i], &spaces[j], p));
                }
                if e.kind == EdgeKind::Unzip && spaces[i].rank(0) == 1 && spaces[j].rank(0) == 1 {
                    // The unit maps to a unit multiple of the unit.
                    let m = f.matrix(&spaces[i], &spaces[j], 0);
                    assert!(qag_core::exactalg::EuclideanDomain::is_unit(m.get(0, 0)));
                }
            }
        }
    }
}

#[test]
fn mismatched_webs_are_rejected() {
    let b = parse_braid("1 1", 2).unwrap();
    let w0 = resolve(&b, Resolution::new(0, 2));
    let w1 = resolve(&b, Resolution::new(3, 2));
    let (s0, s1) = (space(&w0), space(&w1));
    assert!(unzip_matrix(&w0, &s0, &w1, &s1, 0, 0).is_err());
    assert!(zip_matrix(&w0, &s0, &w1, &s1, 0, 0).is_err());
}

#[test]
fn ordering_does_not_change_ranks() {
    let rev = GilmoreOptions { reverse_order: true, ..opts() };
    for w in small_webs(3, 3) {
        assert_eq!(qag_space::<Rational>(&w, &rev).dims(), space(&w).dims());
    }
}
