//! The command-line interface: output formats, JSON round trips and exit
//! codes.

use std::process::Command;

use proptest::prelude::*;
use qag_cli::commands::{
    BocksteinOutput, Gl0Report, KnotId, PageReport, EXIT_NOT_A_KNOT, EXIT_OK, EXIT_PARSE,
};
use qag_cli::{run_args, Outcome};
use qag_core::homology::PoincarePolynomial;

fn qag(args: &[&str]) -> Outcome {
    run_args(std::iter::once("qag").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let o = qag(args);
    assert_eq!(o.code, EXIT_OK, "{args:?}: {}", o.stderr);
    o.stdout
}

fn poly(terms: &[(i32, i32, usize)]) -> PoincarePolynomial {
    PoincarePolynomial::from_terms(terms)
}

#[test]
fn gl0_of_the_trefoil() {
    let out = ok(&["gl0", "--braid", "1 1 1", "--strands", "2"]);
    assert!(out.contains("(3_1)"), "{out}");
    let json = ok(&["gl0", "--braid", "1 1 1", "--strands", "2", "--format", "json"]);
    let report: Gl0Report = serde_json::from_str(&json).unwrap();
    assert_eq!(report.poincare, poly(&[(0, 2, 1), (1, 0, 1), (2, -2, 1)]));
    assert_eq!(
        report.knot,
        KnotId { braid: vec![1, 1, 1], strands: 2, name: Some("3_1".to_string()) }
    );
    assert_eq!(report.characteristic, 0);
}

#[test]
fn gl0_of_the_unknot() {
    let json = ok(&["gl0", "--braid", "", "--strands", "1", "--format", "json"]);
    let report: Gl0Report = serde_json::from_str(&json).unwrap();
    assert_eq!(report.poincare, poly(&[(0, 0, 1)]));
    assert_eq!(report.knot.name, None);
}

#[test]
fn gl0_json_of_the_figure_eight_has_five_entries() {
    let json = ok(&["gl0", "--braid", "1 -2 1 -2", "--strands", "3", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&json).unwrap();
    let terms = value["poincare"].as_array().unwrap();
    assert_eq!(terms.iter().map(|t| t["dim"].as_u64().unwrap()).sum::<u64>(), 5);
    for t in terms {
        assert!(t["t"].is_i64() && t["q"].is_i64() && t["dim"].is_u64(), "{t}");
    }
}

#[test]
fn bockstein_of_the_trefoil_has_one_page() {
    let json = ok(&["bockstein", "--braid", "1 1 1", "--strands", "2", "--format", "json"]);
    let report: BocksteinOutput = serde_json::from_str(&json).unwrap();
    assert_eq!(report.pages.len(), 1);
    assert_eq!(report.stabilization, 1);
    assert_eq!(report.pages[0].poincare.total(), 3);
    assert_eq!(report.einf, report.pages[0].poincare);
    let text = ok(&["bockstein", "--braid", "1 1 1", "--strands", "2"]);
    assert!(text.contains("E1 (total 3)") && text.contains("E_infinity (total 3)"), "{text}");
}

#[test]
fn bockstein_of_the_figure_eight_degenerates() {
    let json = ok(&["bockstein", "--braid", "1 -2 1 -2", "--strands", "3", "--format", "json"]);
    let report: BocksteinOutput = serde_json::from_str(&json).unwrap();
    assert_eq!(report.pages[0].poincare.total(), 5);
    assert_eq!(report.einf.total(), 5);
}

#[test]
fn positive_characteristic_is_reported() {
    let json = ok(&["gl0", "--braid", "1 1 1", "--strands", "2", "--char", "3", "--format", "json"]);
    let report: Gl0Report = serde_json::from_str(&json).unwrap();
    assert_eq!(report.characteristic, 3);
    assert_eq!(report.poincare.total(), 3);
}

#[test]
fn negative_letters_parse() {
    let out = ok(&["gl0", "--braid", "-1 -1 -1", "--strands", "2", "--jobs", "1"]);
    assert!(out.contains("(3_1 mirror)"), "{out}");
}

#[test]
fn exit_codes() {
    let cases: [(&[&str], i32); 7] = [
        (&["gl0", "--braid", "1 1", "--strands", "2"], EXIT_NOT_A_KNOT),
        (&["bockstein", "--braid", "", "--strands", "2"], EXIT_NOT_A_KNOT),
        (&["gl0", "--braid", "1 x", "--strands", "2"], EXIT_PARSE),
        (&["gl0", "--braid", "3", "--strands", "2"], EXIT_PARSE),
        (&["gl0", "--braid", "1 1 1"], EXIT_PARSE),
        (&["gl0", "--braid", "1 1 1", "--strands", "2", "--char", "4"], EXIT_PARSE),
        (&["frobnicate"], EXIT_PARSE),
    ];
    for (args, code) in cases {
        let o = qag(args);
        assert_eq!(o.code, code, "{args:?}");
        assert!(o.stdout.is_empty() && !o.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(qag(&["--help"]).code, EXIT_OK);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_qag");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let good = status(&["gl0", "--braid", "1 1 1", "--strands", "2"]);
    assert_eq!(good.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8(good.stdout).unwrap().contains("gl0 Poincaré polynomial"));
    let link = status(&["gl0", "--braid", "1 1", "--strands", "2"]);
    assert_eq!(link.status.code(), Some(EXIT_NOT_A_KNOT));
    assert!(!link.stderr.is_empty());
    assert_eq!(status(&["gl0", "--strands", "2", "--braid", "0"]).status.code(), Some(EXIT_PARSE));
}

fn arb_poly() -> impl Strategy<Value = PoincarePolynomial> {
    prop::collection::vec((-20i32..20, -20i32..20, 0usize..5), 0..12).prop_map(|terms| poly(&terms))
}

fn arb_knot() -> impl Strategy<Value = KnotId> {
    (prop::collection::vec(prop_oneof![-5i32..=-1, 1i32..=5], 0..10), 1usize..7, prop::option::of("[a-z0-9_ ]{0,8}"))
        .prop_map(|(braid, strands, name)| KnotId { braid, strands, name })
}

proptest! {
    #[test]
    fn gl0_reports_round_trip(knot in arb_knot(), characteristic in 0u32..100, poincare in arb_poly()) {
        let report = Gl0Report { knot, characteristic, poincare };
        let back: Gl0Report = serde_json::from_str(&serde_json::to_string_pretty(&report).unwrap()).unwrap();
        prop_assert_eq!(back, report);
    }

    #[test]
    fn bockstein_reports_round_trip(knot in arb_knot(), pages in prop::collection::vec(arb_poly(), 1..4), einf in arb_poly()) {
        let report = BocksteinOutput {
            knot,
            characteristic: 0,
            stabilization: pages.len(),
            pages: pages.into_iter().enumerate().map(|(i, poincare)| PageReport { page: i + 1, poincare }).collect(),
            einf,
        };
        let back: BocksteinOutput = serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        prop_assert_eq!(back, report);
    }
}

/// Printed reports parse back to the same values they were printed from.
#[test]
fn printed_json_round_trips() {
    let json = ok(&["bockstein", "--braid", "1 1 1 1 1", "--strands", "2", "--format", "json"]);
    let report: BocksteinOutput = serde_json::from_str(&json).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", json);
    let json = ok(&["gl0", "--braid", "1 1 1 1 1", "--strands", "2", "--format", "json"]);
    let report: Gl0Report = serde_json::from_str(&json).unwrap();
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", json);
}
