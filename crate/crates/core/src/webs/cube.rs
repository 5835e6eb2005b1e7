//! The cube of resolutions of a braid word with its edge signs.

use serde::{Deserialize, Serialize};

use super::braid::BraidWord;
use super::web::Resolution;

/// The foam map attached to a cube edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeKind {
    /// Dumbbell to smoothing, at a positive crossing.
    Unzip,
    /// Smoothing to dumbbell, at a negative crossing.
    Zip,
}

/// An edge `I -> I'` of the cube, where `I'` flips crossing `crossing`
/// from 0 to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CubeEdge {
    pub source: Resolution,
    pub target: Resolution,
    pub crossing: usize,
    /// `(-1)^{sum_{c' < c} I(c')}` in word order.
    pub sign: i32,
    pub kind: EdgeKind,
}

/// A vertex of the cube.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeVertex {
    pub resolution: Resolution,
    pub hdeg: i32,
    /// Quantum shift `q^{-hdeg}`.
    pub qshift: i32,
    pub outgoing: Vec<CubeEdge>,
}

/// All `2^n` vertices, indexed by the bit mask of their resolution.
pub fn cube(braid: &BraidWord) -> Vec<CubeVertex> {
    let n = braid.len();
    (0..1u64 << n)
        .map(|bits| {
            let res = Resolution::new(bits, n);
            let hdeg = res.hdeg(braid);
            let outgoing = (0..n)
                .filter(|&c| !res.get(c))
                .map(|c| CubeEdge {
                    source: res,
                    target: res.flip(c),
                    crossing: c,
                    sign: res.sign(c),
                    kind: if braid.is_positive(c) { EdgeKind::Unzip } else { EdgeKind::Zip },
                })
                .collect();
            CubeVertex { resolution: res, hdeg, qshift: -hdeg, outgoing }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::webs::parse_braid;

    #[test]
    fn trefoil_cube_shape() {
        let b = parse_braid("1 1 1", 2).unwrap();
        let c = cube(&b);
        assert_eq!(c.len(), 8);
        let mut h: Vec<i32> = c.iter().map(|v| v.hdeg).collect();
        h.sort();
        h.dedup();
        assert_eq!(h, vec![0, 1, 2, 3]);
        assert!(c.iter().all(|v| v.outgoing.iter().all(|e| e.kind == EdgeKind::Unzip)));
    }

    #[test]
    fn negative_crossing_cube() {
        let b = parse_braid("-1", 2).unwrap();
        let c = cube(&b);
        assert_eq!(c.iter().map(|v| v.hdeg).collect::<Vec<_>>(), vec![-1, 0]);
        assert_eq!(c[0].outgoing[0].kind, EdgeKind::Zip);
    }
}
