//! Cube signs and coherent cycles checked against independent brute force.

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use qag_core::webs::{
    coherent_cycles, cube, resolve, AnnularWeb, BraidWord, Resolution, Vertex, WebEdge,
};

/// Every braid word with `n` letters on `k` strands.
fn all_words(k: usize, n: usize) -> Vec<BraidWord> {
    let alphabet: Vec<i32> = (1..k as i32).flat_map(|i| [i, -i]).collect();
    let mut words = vec![Vec::new()];
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    words.into_iter().map(|w| BraidWord::new(k, w).unwrap()).collect()
}

fn small_braids() -> Vec<BraidWord> {
    let mut out = Vec::new();
    for k in 1..=3 {
        for n in 0..=4 {
            if k == 1 && n > 0 {
                continue;
            }
            out.extend(all_words(k, n));
        }
    }
    out
}

/// Oracle cycle: its edge set, crossed edges and enclosed trace count,
/// derived from a plain depth-first search of the web graph.
#[derive(Debug, PartialEq, Eq, PartialOrd, Ord)]
struct OracleCycle {
    edges: Vec<WebEdge>,
    crossed_in: Vec<usize>,
    crossed_out: Vec<usize>,
    enclosed: usize,
}

fn oracle_cycles(w: &AnnularWeb) -> BTreeSet<OracleCycle> {
    // Adjacency: vertex -> (edge, head).
    let mut adj: BTreeMap<Vertex, Vec<(WebEdge, Vertex)>> = BTreeMap::new();
    for e in w.thin_edges() {
        adj.entry(e.source).or_default().push((WebEdge::Thin(e.id), e.target));
    }
    for d in 0..w.thick_count() {
        adj.entry(Vertex::Merge { dumbbell: d }).or_default().push((WebEdge::Thick(d), Vertex::Split { dumbbell: d }));
    }
    let marked = Vertex::Trace { lane: w.strands() - 1 };
    let vertices = w.vertices();
    let mut found: BTreeSet<Vec<WebEdge>> = BTreeSet::new();
    // Enumerate simple cycles by their smallest vertex.
    for (si, &s) in vertices.iter().enumerate() {
        if s == marked {
            continue;
        }
        let mut stack = vec![(s, Vec::<WebEdge>::new(), vec![s])];
        while let Some((v, path, visited)) = stack.pop() {
            for &(e, h) in adj.get(&v).map(Vec::as_slice).unwrap_or(&[]) {
                if h == s {
                    let mut p = path.clone();
                    p.push(e);
                    p.sort();
                    found.insert(p);
                    continue;
                }
                let hi = vertices.iter().position(|&x| x == h).unwrap();
                if hi < si || h == marked || visited.contains(&h) {
                    continue;
                }
                let mut p = path.clone();
                p.push(e);
                let mut vis = visited.clone();
                vis.push(h);
                stack.push((h, p, vis));
            }
        }
    }
    found
        .into_iter()
        .map(|edges| {
            let thin: BTreeSet<usize> =
                edges.iter().filter_map(|e| if let WebEdge::Thin(t) = e { Some(*t) } else { None }).collect();
            let mut crossed_in = Vec::new();
            let mut crossed_out = Vec::new();
            for e in &edges {
                if let WebEdge::Thick(d) = e {
                    let r = w.dumbbell_edges(*d);
                    // On each side, the other thin edge is crossed when it is
                    // higher than the cycle's edge on that side.
                    if thin.contains(&r.d) {
                        crossed_in.push(r.c);
                    }
                    if thin.contains(&r.b) {
                        crossed_out.push(r.a);
                    }
                }
            }
            // Trace heights on the cycle; a trace vertex is enclosed when it
            // lies on the cycle or below an even number of cycle crossings.
            let on: Vec<usize> = (0..w.strands()).filter(|&l| thin.contains(&w.edge_after_trace(l))).collect();
            let enclosed = (0..w.strands())
                .filter(|h| on.contains(h) || on.iter().filter(|&&x| x < *h).count() % 2 == 0)
                .count();
            crossed_in.sort();
            crossed_out.sort();
            OracleCycle { edges, crossed_in, crossed_out, enclosed }
        })
        .collect()
}

#[test]
fn coherent_cycles_match_depth_first_oracle() {
    let mut webs = 0;
    for b in small_braids() {
        for bits in 0..1u64 << b.len() {
            let w = resolve(&b, Resolution::new(bits, b.len()));
            let ours: BTreeSet<OracleCycle> = coherent_cycles(&w)
                .into_iter()
                .map(|c| {
                    let mut ci = c.crossed_in.clone();
                    let mut co = c.crossed_out.clone();
                    ci.sort();
                    co.sort();
                    OracleCycle { edges: c.edge_set(), crossed_in: ci, crossed_out: co, enclosed: c.enclosed_traces }
                })
                .collect();
            let count = coherent_cycles(&w).len();
            assert_eq!(ours.len(), count, "duplicate cycles in {b} {bits:b}");
            assert_eq!(ours, oracle_cycles(&w), "braid {b}, resolution {bits:b}");
            webs += 1;
        }
    }
    assert!(webs > 1000);
}

#[test]
fn trefoil_singular_cycles() {
    let b = BraidWord::new(2, vec![1, 1, 1]).unwrap();
    let w = resolve(&b, Resolution::new(0, 3));
    assert_eq!(coherent_cycles(&w).len(), oracle_cycles(&w).len());
}

fn check_faces(b: &BraidWord) {
    let c = cube(b);
    let n = b.len();
    for v in &c {
        for c1 in 0..n {
            for c2 in c1 + 1..n {
                if v.resolution.get(c1) || v.resolution.get(c2) {
                    continue;
                }
                let i = v.resolution;
                let (i1, i2) = (i.flip(c1), i.flip(c2));
                let path_a = i.sign(c1) * i1.sign(c2);
                let path_b = i.sign(c2) * i2.sign(c1);
                assert_eq!(path_a + path_b, 0, "face at {:b} crossings {c1},{c2}", i.bits());
            }
        }
        for e in &v.outgoing {
            assert_eq!(e.source.weight() + 1, e.target.weight());
            assert_eq!(v.qshift, -v.hdeg);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sign_identity_on_all_faces(k in 2usize..5, letters in prop::collection::vec(1i32..4, 0..=8), signs in prop::collection::vec(any::<bool>(), 8)) {
        let letters: Vec<i32> = letters
            .iter()
            .zip(&signs)
            .map(|(&l, &s)| {
                let l = (l - 1) % (k as i32 - 1) + 1;
                if s { l } else { -l }
            })
            .collect();
        let b = BraidWord::new(k, letters).unwrap();
        check_faces(&b);
    }

    #[test]
    fn resolve_is_deterministic(letters in prop::collection::vec(prop_oneof![Just(1), Just(-1), Just(2), Just(-2)], 0..=6), bits in any::<u64>()) {
        let b = BraidWord::new(3, letters).unwrap();
        let r = Resolution::new(bits & ((1 << b.len()) - 1), b.len());
        let w1 = resolve(&b, r);
        let w2 = resolve(&b, r);
        prop_assert_eq!(w1.debug_dump(), w2.debug_dump());
        prop_assert_eq!(w1.thin_count(), b.strands() + 2 * w1.thick_count());
    }
}

#[test]
fn every_face_of_an_eight_crossing_cube() {
    check_faces(&BraidWord::new(3, vec![1, 2, 1, 2, 1, 2, 1, 2]).unwrap());
    check_faces(&BraidWord::new(3, vec![1, -2, 1, -2, -1, 2, 2, -1]).unwrap());
}
