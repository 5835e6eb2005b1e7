//! Omnichrome colorings of layered annular webs.
//!
//! Every thin edge gets one pigment and every thick edge two. In a layered
//! web the lanes crossing a generic section carry a permutation of the
//! pigments, a dumbbell either keeps or exchanges the pigments of its two
//! lanes, and the color of a lane is continuous through its trace vertex.
//! Colorings are enumerated from a starting permutation and one keep/swap
//! choice per dumbbell, keeping those that close up at the trace section.

use serde::{Deserialize, Serialize};

use crate::webs::AnnularWeb;

/// Pigment indices: `thin[e]` for thin edge `e`, `thick[d]` (sorted) for
/// dumbbell `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coloring {
    pub thin: Vec<usize>,
    pub thick: Vec<[usize; 2]>,
}

impl Coloring {
    /// Checks the defining conditions directly: pigments of every generic
    /// section form the full set, colors agree across trace vertices, and
    /// each thick color is the disjoint union of the thin colors on either
    /// side.
    pub fn is_valid(&self, w: &AnnularWeb) -> bool {
        let k = w.strands();
        if self.thin.len() != w.thin_count() || self.thick.len() != w.thick_count() {
            return false;
        }
        if self.thin.iter().any(|&p| p >= k) {
            return false;
        }
        for level in 0..=w.levels() {
            let mut seen = vec![false; k];
            for lane in 0..k {
                let p = self.thin[w.edge_containing(lane, level)];
                if seen[p] {
                    return false;
                }
                seen[p] = true;
            }
        }
        for lane in 0..k {
            if self.thin[w.edge_before_trace(lane)] != self.thin[w.edge_after_trace(lane)] {
                return false;
            }
        }
        for (i, t) in self.thick.iter().enumerate() {
            let r = w.dumbbell_edges(i);
            let sorted = |x: usize, y: usize| if x < y { [x, y] } else { [y, x] };
            if t[0] == t[1] || *t != sorted(self.thin[r.c], self.thin[r.d]) || *t != sorted(self.thin[r.a], self.thin[r.b])
            {
                return false;
            }
        }
        true
    }
}

/// All omnichrome colorings, in a deterministic order.
pub fn omnichrome_colorings(w: &AnnularWeb) -> Vec<Coloring> {
    let k = w.strands();
    let mut out = Vec::new();
    for start in permutations(k) {
        let s = w.thick_count();
        for choice in 0..1u64 << s {
            if let Some(c) = propagate(w, &start, choice) {
                out.push(c);
            }
        }
    }
    out
}

fn propagate(w: &AnnularWeb, start: &[usize], choice: u64) -> Option<Coloring> {
    let n = w.levels();
    let mut thin = vec![usize::MAX; w.thin_count()];
    let mut thick = vec![[0, 0]; w.thick_count()];
    let mut lanes = start.to_vec();
    for (lane, &p) in lanes.iter().enumerate() {
        thin[w.edge_after_trace(lane)] = p;
    }
    for j in 0..n {
        let Some(d) = w.dumbbell_at(j) else { continue };
        let h = w.dumbbells()[d].lower;
        let (x, y) = (lanes[h], lanes[h + 1]);
        thick[d] = [x.min(y), x.max(y)];
        if (choice >> d) & 1 == 1 {
            lanes.swap(h, h + 1);
        }
        let r = w.dumbbell_edges(d);
        thin[r.b] = lanes[h];
        thin[r.a] = lanes[h + 1];
    }
    (lanes == start).then_some(Coloring { thin, thick })
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    fn rec(i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for j in i..cur.len() {
            cur.swap(i, j);
            rec(i + 1, cur, out);
            cur.swap(i, j);
        }
    }
    rec(0, &mut cur, &mut out);
    out
}
