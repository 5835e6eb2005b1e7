//! Local and non-local relations of a marked annular web.
//!
//! Every thin edge carries one variable of quantum degree 2. The local
//! relations are read off the vertices: a trace vertex multiplies by `q^2`,
//! the marked trace vertex kills its outgoing variable, and a dumbbell
//! identifies the elementary symmetric functions of its two sides. Each
//! coherent cycle contributes `prod(out) - q^{2i} prod(in)`, where `i` is
//! the number of trace vertices its push-off encloses.

use serde::{Deserialize, Serialize};

use crate::exactalg::{Field, LaurentPoly, MPoly, Ring};
use crate::webs::{coherent_cycles, AnnularWeb, CoherentCycle};

/// Where a relation comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RelationKind {
    /// `x_after = q^2 x_before` at an unmarked trace vertex.
    Trace { lane: usize },
    /// `x_after = 0` at the marked trace vertex.
    Marking,
    /// `x_a + x_b = x_c + x_d` at a dumbbell.
    DumbbellLinear { dumbbell: usize },
    /// `x_a x_b = x_c x_d` at a dumbbell.
    DumbbellQuadratic { dumbbell: usize },
    /// The relation of the coherent cycle with this index.
    NonLocal { cycle: usize },
}

impl RelationKind {
    pub fn is_local(&self) -> bool {
        !matches!(self, RelationKind::NonLocal { .. })
    }
}

/// A relation `poly = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation<F: Field> {
    pub kind: RelationKind,
    pub poly: MPoly<LaurentPoly<F>>,
}

impl<F: Field> Relation<F> {
    /// Polynomial degree; every relation is homogeneous.
    pub fn degree(&self) -> u32 {
        self.poly.total_degree().unwrap_or(0)
    }
}

/// Relations in the thin-edge variables of one web.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSet<F: Field> {
    pub nvars: usize,
    pub relations: Vec<Relation<F>>,
}

impl<F: Field> RelationSet<F> {
    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    /// Concatenation, keeping the order of both sets.
    pub fn extended(mut self, o: RelationSet<F>) -> RelationSet<F> {
        assert_eq!(self.nvars, o.nvars);
        self.relations.extend(o.relations);
        self
    }
}

type Poly<F> = MPoly<LaurentPoly<F>>;

fn var<F: Field>(nv: usize, e: usize) -> Poly<F> {
    MPoly::var(nv, e)
}

/// The product of the variables of `edges`, with repetitions.
fn product<F: Field>(nv: usize, edges: &[usize]) -> Poly<F> {
    let mut m = vec![0u32; nv];
    for &e in edges {
        m[e] += 1;
    }
    MPoly::term(m, LaurentPoly::one())
}

/// Trace, marking and dumbbell relations, in that order.
pub fn local_relations<F: Field>(w: &AnnularWeb) -> RelationSet<F> {
    let nv = w.thin_count();
    let k = w.strands();
    let mut relations = Vec::new();
    for lane in 0..k - 1 {
        let after = var::<F>(nv, w.edge_after_trace(lane));
        let before = var::<F>(nv, w.edge_before_trace(lane)).scale(&LaurentPoly::q_pow(2));
        relations.push(Relation { kind: RelationKind::Trace { lane }, poly: after.sub(&before) });
    }
    relations.push(Relation { kind: RelationKind::Marking, poly: var(nv, w.marked_edge()) });
    for d in 0..w.thick_count() {
        let r = w.dumbbell_edges(d);
        let (a, b, c, dd) = (var::<F>(nv, r.a), var::<F>(nv, r.b), var::<F>(nv, r.c), var::<F>(nv, r.d));
        relations.push(Relation {
            kind: RelationKind::DumbbellLinear { dumbbell: d },
            poly: a.add(&b).sub(&c).sub(&dd),
        });
        relations.push(Relation {
            kind: RelationKind::DumbbellQuadratic { dumbbell: d },
            poly: a.mul(&b).sub(&c.mul(&dd)),
        });
    }
    RelationSet { nvars: nv, relations }
}

/// One relation per cycle; a relation that is identically zero is dropped.
pub fn nonlocal_relations<F: Field>(w: &AnnularWeb, cycles: &[CoherentCycle]) -> RelationSet<F> {
    let nv = w.thin_count();
    let relations = cycles
        .iter()
        .enumerate()
        .filter_map(|(i, z)| {
            let out = product::<F>(nv, &z.crossed_out);
            let inn = product::<F>(nv, &z.crossed_in).scale(&LaurentPoly::q_pow(2 * z.enclosed_traces as i32));
            let poly = out.sub(&inn);
            (!poly.is_zero()).then_some(Relation { kind: RelationKind::NonLocal { cycle: i }, poly })
        })
        .collect();
    RelationSet { nvars: nv, relations }
}

/// Local relations followed by the non-local relations of every coherent
/// cycle.
pub fn all_relations<F: Field>(w: &AnnularWeb) -> RelationSet<F> {
    local_relations(w).extended(nonlocal_relations(w, &coherent_cycles(w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{LaurentQ, Rational};
    use crate::webs::{parse_braid, resolve, Resolution};

    #[test]
    fn unknot_has_only_the_marking() {
        let w = resolve(&parse_braid("", 1).unwrap(), Resolution::new(0, 0));
        let r = all_relations::<Rational>(&w);
        assert_eq!(r.len(), 1);
        assert_eq!(r.relations[0].kind, RelationKind::Marking);
        assert_eq!(r.relations[0].poly, MPoly::var(1, 0));
    }

    #[test]
    fn one_dumbbell_local_relations() {
        let w = resolve(&parse_braid("1", 2).unwrap(), Resolution::from_slice(&[0]));
        let r = local_relations::<Rational>(&w);
        let kinds: Vec<RelationKind> = r.relations.iter().map(|x| x.kind).collect();
        assert_eq!(
            kinds,
            vec![
                RelationKind::Trace { lane: 0 },
                RelationKind::Marking,
                RelationKind::DumbbellLinear { dumbbell: 0 },
                RelationKind::DumbbellQuadratic { dumbbell: 0 },
            ]
        );
        assert_eq!(r.relations[3].degree(), 2);
    }

    #[test]
    fn inner_circle_gives_degree_zero_torsion() {
        let w = resolve(&parse_braid("1", 2).unwrap(), Resolution::from_slice(&[1]));
        let r = nonlocal_relations::<Rational>(&w, &coherent_cycles(&w));
        assert_eq!(r.len(), 1);
        let expected = MPoly::constant(w.thin_count(), LaurentQ::from_int_terms(&[(0, 1), (2, -1)]));
        assert_eq!(r.relations[0].poly, expected);
    }
}
