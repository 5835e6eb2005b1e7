//! Coherent cycles of an annular web and the data of their push-offs.
//!
//! In a layered web every directed edge moves forward around the annulus, so
//! an oriented simple closed walk passes each level exactly once and winds
//! once. At a level with a dumbbell on its lane it must enter the dumbbell
//! and may leave on either lane; elsewhere it stays on its lane. A cycle is
//! therefore the sequence of lanes it occupies, and it is admissible when it
//! avoids the marked trace vertex on the outermost lane.
//!
//! The push-off of a cycle runs just outside it. At a dumbbell entered from
//! the lower lane it crosses the upper incoming edge; at a dumbbell left on
//! the lower lane it crosses the upper outgoing edge. On the trace section
//! the enclosed region holds the trace vertices at and below the cycle's
//! height, so the enclosed trace count is the cycle's 1-based height there.

use serde::{Deserialize, Serialize};

use super::web::AnnularWeb;

/// An edge of the web graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WebEdge {
    Thin(usize),
    Thick(usize),
}

/// An admissible coherent cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoherentCycle {
    /// `lanes[j]` is the lane the cycle occupies just before level `j`;
    /// `lanes[n]` is its lane at the trace section.
    pub lanes: Vec<usize>,
    /// Edges in traversal order, starting with the edge leaving the trace
    /// vertex.
    pub edges: Vec<WebEdge>,
    /// Thin edges the push-off crosses at merge vertices.
    pub crossed_in: Vec<usize>,
    /// Thin edges the push-off crosses at split vertices.
    pub crossed_out: Vec<usize>,
    /// Number of trace vertices in the enclosed region.
    pub enclosed_traces: usize,
}

impl CoherentCycle {
    /// Edge set, sorted, for comparisons that ignore the starting point.
    pub fn edge_set(&self) -> Vec<WebEdge> {
        let mut e = self.edges.clone();
        e.sort();
        e
    }
}

/// Every admissible coherent cycle, ordered by trace lane and then by the
/// lane sequence.
pub fn coherent_cycles(w: &AnnularWeb) -> Vec<CoherentCycle> {
    let k = w.strands();
    let mut out = Vec::new();
    for start in 0..k.saturating_sub(1) {
        let mut lanes = vec![start];
        extend(w, start, &mut lanes, &mut out);
    }
    out
}

fn extend(w: &AnnularWeb, start: usize, lanes: &mut Vec<usize>, out: &mut Vec<CoherentCycle>) {
    let n = w.levels();
    let j = lanes.len() - 1;
    let lane = lanes[j];
    if j == n {
        if lane == start {
            out.push(build(w, lanes));
        }
        return;
    }
    let choices: Vec<usize> = match w.dumbbell_at(j).map(|d| w.dumbbells()[d].lower) {
        Some(h) if lane == h || lane == h + 1 => vec![h, h + 1],
        _ => vec![lane],
    };
    for next in choices {
        lanes.push(next);
        extend(w, start, lanes, out);
        lanes.pop();
    }
}

fn build(w: &AnnularWeb, lanes: &[usize]) -> CoherentCycle {
    let n = w.levels();
    let mut edges = Vec::new();
    let mut crossed_in = Vec::new();
    let mut crossed_out = Vec::new();
    let mut current = w.edge_after_trace(lanes[0]);
    edges.push(WebEdge::Thin(current));
    for j in 0..n {
        let Some(d) = w.dumbbell_at(j) else { continue };
        let h = w.dumbbells()[d].lower;
        if lanes[j] != h && lanes[j] != h + 1 {
            continue;
        }
        let r = w.dumbbell_edges(d);
        if lanes[j] == h {
            crossed_in.push(r.c);
        }
        if lanes[j + 1] == h {
            crossed_out.push(r.a);
        }
        edges.push(WebEdge::Thick(d));
        current = if lanes[j + 1] == h { r.b } else { r.a };
        edges.push(WebEdge::Thin(current));
    }
    // The walk closes up: the last thin edge enters the starting trace vertex.
    debug_assert_eq!(current, w.edge_before_trace(lanes[n]));
    CoherentCycle { lanes: lanes.to_vec(), edges, crossed_in, crossed_out, enclosed_traces: lanes[n] + 1 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::webs::{parse_braid, resolve, Resolution};

    #[test]
    fn unknot_has_no_admissible_cycle() {
        let w = resolve(&parse_braid("", 1).unwrap(), Resolution::new(0, 0));
        assert!(coherent_cycles(&w).is_empty());
    }

    #[test]
    fn one_dumbbell_on_two_strands() {
        let w = resolve(&parse_braid("1", 2).unwrap(), Resolution::from_slice(&[0]));
        let cycles = coherent_cycles(&w);
        // Only the lane-0 loop through the dumbbell closes up without using
        // the marked vertex.
        assert_eq!(cycles.len(), 1);
        let c = &cycles[0];
        assert_eq!(c.enclosed_traces, 1);
        let r = w.dumbbell_edges(0);
        assert_eq!(c.crossed_in, vec![r.c]);
        assert_eq!(c.crossed_out, vec![r.a]);
    }

    #[test]
    fn smoothed_lanes_are_plain_circles() {
        let w = resolve(&parse_braid("1", 2).unwrap(), Resolution::from_slice(&[1]));
        let cycles = coherent_cycles(&w);
        assert_eq!(cycles.len(), 1);
        assert!(cycles[0].crossed_in.is_empty() && cycles[0].crossed_out.is_empty());
        assert_eq!(cycles[0].edges, vec![WebEdge::Thin(w.edge_after_trace(0))]);
    }
}
