//! Resolutions of a braid closure and the layered annular webs they produce.
//!
//! Lanes `0..k` are the strands, lane 0 innermost and lane `k - 1`
//! outermost. Crossing `j` sits at level `j`; the trace section sits at
//! level `n`. A resolved crossing is either a dumbbell (a thick edge joining
//! lanes `h` and `h + 1` at its level) or a pair of parallel arcs, so lanes
//! never swap and every lane is a circle around the annulus.
//!
//! The vertices on a lane are the dumbbell ends touching it plus its trace
//! vertex. Each vertex starts exactly one thin edge on its lane, so a thin
//! edge is named by `(lane, start)` where `start` is a dumbbell level or `n`
//! for the edge leaving the trace vertex. Ids follow the lexicographic order
//! of that pair.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::braid::BraidWord;

/// A choice `I(c) in {0, 1}` for every crossing, stored as a bit mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Resolution {
    bits: u64,
    len: usize,
}

impl Resolution {
    pub fn new(bits: u64, len: usize) -> Self {
        assert!(len < 64, "at most 63 crossings");
        assert!(bits >> len == 0, "bits beyond the crossing count");
        Resolution { bits, len }
    }

    pub fn from_slice(values: &[u8]) -> Self {
        let bits = values.iter().enumerate().fold(0u64, |acc, (i, &v)| acc | ((v as u64 & 1) << i));
        Resolution::new(bits, values.len())
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, c: usize) -> bool {
        (self.bits >> c) & 1 == 1
    }

    /// `|I| = sum_c I(c)`.
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Homological degree `|I| - n_-`.
    pub fn hdeg(&self, braid: &BraidWord) -> i32 {
        self.weight() as i32 - braid.n_minus() as i32
    }

    /// The resolution with crossing `c` flipped.
    pub fn flip(&self, c: usize) -> Resolution {
        Resolution { bits: self.bits ^ (1 << c), len: self.len }
    }

    /// `(-1)^{sum_{c' < c} I(c')}`.
    pub fn sign(&self, c: usize) -> i32 {
        let below = self.bits & ((1u64 << c) - 1);
        if below.count_ones().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// A thick edge joining lanes `lower` and `lower + 1` at `level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dumbbell {
    pub level: usize,
    pub lower: usize,
}

/// A vertex of the web graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Vertex {
    /// Bivalent vertex where a lane crosses the trace section.
    Trace { lane: usize },
    /// The merge end of a dumbbell: two thin edges in, the thick edge out.
    Merge { dumbbell: usize },
    /// The split end of a dumbbell: the thick edge in, two thin edges out.
    Split { dumbbell: usize },
}

/// A maximal thin arc between consecutive vertices on one lane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThinEdge {
    pub id: usize,
    pub lane: usize,
    /// Level of the vertex the edge leaves (`n` for the trace vertex).
    pub start: usize,
    /// Level of the vertex the edge enters (`n` for the trace vertex).
    pub end: usize,
    pub source: Vertex,
    pub target: Vertex,
}

/// The four thin edges around a dumbbell: `a` upper outgoing, `b` lower
/// outgoing, `c` upper incoming, `d` lower incoming.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DumbbellEdges {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

/// A resolved braid closure with its thin-edge bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnnularWeb {
    strands: usize,
    levels: usize,
    /// `slots[j]` is the dumbbell at level `j`, if crossing `j` was
    /// singularized.
    slots: Vec<Option<usize>>,
    dumbbells: Vec<Dumbbell>,
    thin: Vec<ThinEdge>,
    /// `(lane, start)` to edge id; `start` ranges over `0..=levels`.
    by_start: Vec<Vec<Option<usize>>>,
    around: Vec<DumbbellEdges>,
}

impl AnnularWeb {
    /// The web whose crossing `j` is a dumbbell on lanes `lanes[j]`,
    /// `lanes[j] + 1` when `singular[j]` holds and a smoothing otherwise.
    pub fn from_layers(strands: usize, lanes: &[usize], singular: &[bool]) -> Self {
        assert_eq!(lanes.len(), singular.len());
        let n = lanes.len();
        let mut slots = vec![None; n];
        let mut dumbbells = Vec::new();
        for j in 0..n {
            if singular[j] {
                assert!(lanes[j] + 1 < strands, "dumbbell lane out of range");
                slots[j] = Some(dumbbells.len());
                dumbbells.push(Dumbbell { level: j, lower: lanes[j] });
            }
        }
        // Vertex levels on each lane, ascending, ending with the trace vertex.
        let mut stops: Vec<Vec<usize>> = vec![Vec::new(); strands];
        for d in &dumbbells {
            stops[d.lower].push(d.level);
            stops[d.lower + 1].push(d.level);
        }
        for s in stops.iter_mut() {
            s.push(n);
        }
        let vertex_at = |lane: usize, level: usize, outgoing: bool| -> Vertex {
            if level == n {
                Vertex::Trace { lane }
            } else {
                let dumbbell = slots[level].expect("dumbbell at stop");
                if outgoing {
                    Vertex::Split { dumbbell }
                } else {
                    Vertex::Merge { dumbbell }
                }
            }
        };
        let mut thin = Vec::new();
        let mut by_start = vec![vec![None; n + 1]; strands];
        for (lane, s) in stops.iter().enumerate() {
            for (i, &start) in s.iter().enumerate() {
                // The edge leaving the trace vertex wraps to the lane's first stop.
                let end = if start == n { s[0] } else { s[i + 1] };
                let id = thin.len();
                by_start[lane][start] = Some(id);
                thin.push(ThinEdge {
                    id,
                    lane,
                    start,
                    end,
                    source: vertex_at(lane, start, true),
                    target: vertex_at(lane, end, false),
                });
            }
        }
        let mut web = AnnularWeb { strands, levels: n, slots, dumbbells, thin, by_start, around: Vec::new() };
        web.around = (0..web.dumbbells.len())
            .map(|i| {
                let d = web.dumbbells[i];
                DumbbellEdges {
                    a: web.edge_starting(d.lower + 1, d.level),
                    b: web.edge_starting(d.lower, d.level),
                    c: web.edge_ending(d.lower + 1, d.level),
                    d: web.edge_ending(d.lower, d.level),
                }
            })
            .collect();
        web
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Number of crossing levels `n`; the trace section is at level `n`.
    pub fn levels(&self) -> usize {
        self.levels
    }

    pub fn dumbbells(&self) -> &[Dumbbell] {
        &self.dumbbells
    }

    /// Number of thick edges.
    pub fn thick_count(&self) -> usize {
        self.dumbbells.len()
    }

    pub fn thin_edges(&self) -> &[ThinEdge] {
        &self.thin
    }

    pub fn thin_count(&self) -> usize {
        self.thin.len()
    }

    /// The dumbbell at a level, if any.
    pub fn dumbbell_at(&self, level: usize) -> Option<usize> {
        self.slots.get(level).copied().flatten()
    }

    /// The four thin edges around dumbbell `i`.
    pub fn dumbbell_edges(&self, i: usize) -> DumbbellEdges {
        self.around[i]
    }

    /// The thin edge leaving the vertex at `(lane, level)`.
    pub fn edge_starting(&self, lane: usize, level: usize) -> usize {
        self.by_start[lane][level].expect("no vertex at this lane and level")
    }

    /// The thin edge entering the vertex at `(lane, level)`.
    pub fn edge_ending(&self, lane: usize, level: usize) -> usize {
        self.edge_containing(lane, level)
    }

    /// The thin edge on `lane` that covers the point just before `level`;
    /// for `level = 0` this is the edge entering the first stop after the
    /// trace section, i.e. the one leaving the trace vertex.
    pub fn edge_containing(&self, lane: usize, level: usize) -> usize {
        // The last vertex on this lane strictly before `level`, or the trace
        // vertex if there is none.
        let start = (0..level).rev().find(|&j| self.by_start[lane][j].is_some()).unwrap_or(self.levels);
        self.edge_starting(lane, start)
    }

    /// The thin edge entering the trace vertex of `lane`.
    pub fn edge_before_trace(&self, lane: usize) -> usize {
        self.edge_containing(lane, self.levels)
    }

    /// The thin edge leaving the trace vertex of `lane`.
    pub fn edge_after_trace(&self, lane: usize) -> usize {
        self.edge_starting(lane, self.levels)
    }

    /// The marked edge: the one leaving the outermost trace vertex.
    pub fn marked_edge(&self) -> usize {
        self.edge_after_trace(self.strands - 1)
    }

    /// Thin edges strictly below the marked edge on the trace section.
    pub fn edges_below_marking(&self) -> Vec<usize> {
        (0..self.strands - 1).map(|l| self.edge_after_trace(l)).collect()
    }

    /// Variable name of a thin edge: `x<height>_<start>` with 1-based
    /// heights and `m` for the trace start.
    pub fn variable_name(&self, id: usize) -> String {
        let e = &self.thin[id];
        if e.start == self.levels {
            format!("x{}_m", e.lane + 1)
        } else {
            format!("x{}_{}", e.lane + 1, e.start)
        }
    }

    /// All graph vertices in a fixed order: trace vertices by lane, then
    /// merge and split ends by dumbbell.
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = (0..self.strands).map(|lane| Vertex::Trace { lane }).collect();
        for d in 0..self.dumbbells.len() {
            v.push(Vertex::Merge { dumbbell: d });
            v.push(Vertex::Split { dumbbell: d });
        }
        v
    }

    /// Number of connected components of the underlying graph.
    pub fn components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.strands).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for d in &self.dumbbells {
            let (a, b) = (find(&mut parent, d.lower), find(&mut parent, d.lower + 1));
            parent[a] = b;
        }
        (0..self.strands).filter(|&x| find(&mut parent, x) == x).count()
    }

    /// Deterministic text dump, one line per thin edge and per dumbbell.
    pub fn debug_dump(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "web strands={} levels={} thick={}", self.strands, self.levels, self.dumbbells.len());
        for e in &self.thin {
            let _ = writeln!(
                s,
                "thin {} {} height={} start={} end={} {:?} -> {:?}",
                e.id,
                self.variable_name(e.id),
                e.lane + 1,
                e.start,
                e.end,
                e.source,
                e.target
            );
        }
        for (i, d) in self.dumbbells.iter().enumerate() {
            let r = self.around[i];
            let _ = writeln!(
                s,
                "thick {} level={} heights={},{} in=({},{}) out=({},{})",
                i,
                d.level,
                d.lower + 1,
                d.lower + 2,
                r.c,
                r.d,
                r.a,
                r.b
            );
        }
        let _ = writeln!(s, "marking edge {}", self.marked_edge());
        s
    }
}

/// The `I`-resolution of a braid closure: a positive crossing with
/// `I = 0` or a negative one with `I = 1` becomes a dumbbell, the other
/// two cases become parallel arcs.
pub fn resolve(braid: &BraidWord, res: Resolution) -> AnnularWeb {
    assert_eq!(res.len(), braid.len(), "resolution length must match the braid");
    let lanes: Vec<usize> = (0..braid.len()).map(|c| braid.lane_of(c)).collect();
    let singular: Vec<bool> = (0..braid.len()).map(|c| braid.is_positive(c) != res.get(c)).collect();
    AnnularWeb::from_layers(braid.strands(), &lanes, &singular)
}

/// Number of connected components of a web.
pub fn components(w: &AnnularWeb) -> usize {
    w.components()
}
