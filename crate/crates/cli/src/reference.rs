//! Reference data for the knots the tool is checked against.
//!
//! The `gl0` polynomials and the knot Floer totals are acceptance data. The
//! triply graded polynomials are shown for comparison only; nothing here
//! computes them.

use std::fmt;

use qag_core::homology::PoincarePolynomial;
use qag_core::webs::{parse_braid, BraidWord};

/// One knot of the reference table.
#[derive(Clone, Copy, Debug)]
pub struct ReferenceEntry {
    pub name: &'static str,
    pub braid: &'static str,
    pub strands: usize,
    /// Terms `(t, q, dim)` of the `gl0` Poincaré polynomial, when known.
    pub gl0: Option<&'static [(i32, i32, usize)]>,
    /// Total dimension of knot Floer homology.
    pub hfk_total: usize,
    /// A lower bound for the total dimension of `gl0` homology, when the
    /// polynomial itself is not listed.
    pub gl0_total_at_least: Option<usize>,
    /// Terms `(t, a, q, dim)` of the reduced triply graded Poincaré
    /// polynomial, for display.
    pub hhh: Option<&'static [(i32, i32, i32, usize)]>,
}

impl ReferenceEntry {
    pub fn braid_word(&self) -> BraidWord {
        parse_braid(self.braid, self.strands).expect("reference braids parse")
    }

    pub fn gl0_poincare(&self) -> Option<PoincarePolynomial> {
        self.gl0.map(PoincarePolynomial::from_terms)
    }

    pub fn hhh_display(&self) -> Option<HhhDisplay> {
        self.hhh.map(HhhDisplay)
    }
}

/// Formats triply graded terms as `t^i a^j q^k`.
pub struct HhhDisplay(pub &'static [(i32, i32, i32, usize)]);

impl fmt::Display for HhhDisplay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .map(|&(t, a, q, n)| if n == 1 { format!("t^{t}a^{a}q^{q}") } else { format!("{n}t^{t}a^{a}q^{q}") })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

pub const TREFOIL: ReferenceEntry = ReferenceEntry {
    name: "3_1",
    braid: "1 1 1",
    strands: 2,
    gl0: Some(&[(0, 2, 1), (1, 0, 1), (2, -2, 1)]),
    hfk_total: 3,
    gl0_total_at_least: None,
    hhh: Some(&[(0, -2, 2, 1), (1, -4, 0, 1), (2, -2, -2, 1)]),
};

pub const LEFT_TREFOIL: ReferenceEntry = ReferenceEntry {
    name: "3_1 mirror",
    braid: "-1 -1 -1",
    strands: 2,
    gl0: Some(&[(-2, 2, 1), (-1, 0, 1), (0, -2, 1)]),
    hfk_total: 3,
    gl0_total_at_least: None,
    hhh: Some(&[(-2, 2, 2, 1), (-1, 4, 0, 1), (0, 2, -2, 1)]),
};

pub const FIGURE_EIGHT: ReferenceEntry = ReferenceEntry {
    name: "4_1",
    braid: "1 -2 1 -2",
    strands: 3,
    gl0: Some(&[(-1, 2, 1), (0, 0, 3), (1, -2, 1)]),
    hfk_total: 5,
    gl0_total_at_least: None,
    hhh: Some(&[(-1, 0, 2, 1), (0, 2, 0, 1), (0, 0, 0, 1), (0, -2, 0, 1), (1, 0, -2, 1)]),
};

pub const CINQUEFOIL: ReferenceEntry = ReferenceEntry {
    name: "5_1",
    braid: "1 1 1 1 1",
    strands: 2,
    gl0: Some(&[(0, 4, 1), (1, 2, 1), (2, 0, 1), (3, -2, 1), (4, -4, 1)]),
    hfk_total: 5,
    gl0_total_at_least: None,
    hhh: Some(&[(0, -4, 4, 1), (1, -6, 2, 1), (2, -4, 0, 1), (3, -6, -2, 1), (4, -4, -4, 1)]),
};

pub const TORUS_3_4: ReferenceEntry = ReferenceEntry {
    name: "T(3,4)",
    braid: "1 2 1 2 1 2 1 2",
    strands: 3,
    gl0: None,
    hfk_total: 5,
    gl0_total_at_least: Some(9),
    hhh: Some(&[
        (0, -6, 6, 1),
        (1, -8, 4, 1),
        (1, -8, 2, 1),
        (2, -6, 2, 1),
        (2, -6, 0, 1),
        (2, -10, 0, 1),
        (3, -8, 0, 1),
        (3, -8, -2, 1),
        (4, -6, -2, 1),
        (5, -8, -4, 1),
        (6, -6, -6, 1),
    ]),
};

/// Every reference knot.
pub const REFERENCE_TABLE: [ReferenceEntry; 5] = [TREFOIL, LEFT_TREFOIL, FIGURE_EIGHT, CINQUEFOIL, TORUS_3_4];

/// The reference entry with this braid word, if any.
pub fn lookup(b: &BraidWord) -> Option<&'static ReferenceEntry> {
    REFERENCE_TABLE.iter().find(|e| e.strands == b.strands() && e.braid_word().letters() == b.letters())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_braids_are_knots() {
        for e in REFERENCE_TABLE {
            assert!(e.braid_word().is_knot(), "{}", e.name);
        }
    }

    #[test]
    fn gl0_totals_match_the_floer_totals_where_they_degenerate() {
        for e in REFERENCE_TABLE.iter().filter(|e| e.gl0.is_some()) {
            assert_eq!(e.gl0_poincare().unwrap().total(), e.hfk_total, "{}", e.name);
        }
    }

    #[test]
    fn lookup_finds_entries() {
        assert_eq!(lookup(&parse_braid("1 -2 1 -2", 3).unwrap()).unwrap().name, "4_1");
        assert!(lookup(&parse_braid("1 -2 1 -2", 4).unwrap()).is_none());
    }
}
