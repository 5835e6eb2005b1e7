//! The acceptance gate: one PASS/FAIL line per criterion, then a single
//! assertion over all of them.
//!
//! Run with `cargo test -p qag-cli --test acceptance -- --nocapture` to see
//! the lines.

use qag_cli::verify::{self, Check};

struct Criterion {
    number: usize,
    title: &'static str,
    checks: Vec<Check>,
}

impl Criterion {
    fn passed(&self) -> bool {
        verify::all_passed(&self.checks)
    }

    fn line(&self) -> String {
        let failed: Vec<String> =
            self.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!("criterion {} ({}): {status} [{} checks]", self.number, self.title, self.checks.len());
        if !failed.is_empty() {
            s += &format!(" failing: {}", failed.join("; "));
        }
        s
    }
}

#[test]
fn acceptance() {
    let criteria = [
        Criterion {
            number: 1,
            title: "gl0 polynomials of 3_1, its mirror, 4_1 and 5_1",
            checks: verify::reference_polynomials(),
        },
        Criterion { number: 2, title: "graded ranks of the cube columns", checks: verify::vertex_ranks() },
        Criterion {
            number: 3,
            title: "presentation ranks equal evaluation ranks",
            checks: vec![verify::oracle_equivalence()],
        },
        Criterion {
            number: 4,
            title: "Euler characteristic equals the Burau Alexander polynomial",
            checks: verify::alexander_consistency(),
        },
        Criterion {
            number: 5,
            title: "Bockstein E_infinity totals equal knot Floer totals, including T(3,4)",
            checks: verify::bockstein_totals(true),
        },
        Criterion { number: 6, title: "property suites", checks: verify::property_suites() },
    ];
    for c in &criteria {
        for check in &c.checks {
            println!("    {} {}: {}", if check.passed { "ok" } else { "FAILED" }, check.name, check.detail);
        }
    }
    for c in &criteria {
        println!("{}", c.line());
    }
    let failed: Vec<usize> = criteria.iter().filter(|c| !c.passed()).map(|c| c.number).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
