//! Argument parsing, command dispatch, output formats and exit codes.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qag_core::exactalg::{Field, Fp, Rational};
use qag_core::gilmore::GilmoreOptions;
use qag_core::homology::{compute_knot, BocksteinReport, HomologyError, KnotHomology, PoincarePolynomial};
use qag_core::webs::{parse_braid, BraidWord, WebError};
use serde::{Deserialize, Serialize};

use crate::reference::lookup;
use crate::verify::{self, Check};

/// Success.
pub const EXIT_OK: i32 = 0;
/// The arguments or the braid word could not be parsed.
pub const EXIT_PARSE: i32 = 1;
/// The braid closure has more than one component.
pub const EXIT_NOT_A_KNOT: i32 = 2;
/// The computation failed an internal consistency check.
pub const EXIT_COMPUTATION: i32 = 3;
/// A verification suite reported a failure.
pub const EXIT_VERIFY_FAILED: i32 = 4;

/// Exact gl0 knot homology of braid closures, and its (q -> 1) Bockstein
/// spectral sequence.
#[derive(Debug, Parser)]
#[command(name = "qag", version)]
pub struct Cli {
    /// Worker threads for the per-vertex computations (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Poincaré polynomial of gl0 homology.
    Gl0(KnotArgs),
    /// Print every page of the (q -> 1) Bockstein spectral sequence.
    Bockstein(KnotArgs),
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Debug, Args)]
pub struct KnotArgs {
    /// Whitespace-separated nonzero signed integers; `i` is the generator
    /// crossing strands `i` and `i + 1`, `-i` its inverse.
    #[arg(long, allow_hyphen_values = true)]
    pub braid: String,
    #[arg(long)]
    pub strands: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest polynomial degree computed per resolution.
    #[arg(long)]
    pub degree_bound: Option<u32>,
    /// Characteristic of the coefficient field: 0 for the rationals, or one
    /// of 2, 3, 5, 7, 11, 13, 32003.
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    #[value(name = "appendixC")]
    Reference,
    Oracle,
    Identities,
    All,
}

/// The knot a report is about.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotId {
    pub braid: Vec<i32>,
    pub strands: usize,
    /// The reference-table name, when the braid is listed there.
    pub name: Option<String>,
}

impl KnotId {
    fn of(b: &BraidWord) -> Self {
        KnotId { braid: b.letters().to_vec(), strands: b.strands(), name: lookup(b).map(|e| e.name.to_string()) }
    }
}

/// Output of `gl0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gl0Report {
    pub knot: KnotId,
    pub characteristic: u32,
    pub poincare: PoincarePolynomial,
}

/// One page of the spectral sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PageReport {
    pub page: usize,
    pub poincare: PoincarePolynomial,
}

/// Output of `bockstein`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BocksteinOutput {
    pub knot: KnotId,
    pub characteristic: u32,
    pub pages: Vec<PageReport>,
    pub stabilization: usize,
    pub einf: PoincarePolynomial,
}

impl BocksteinOutput {
    fn new(knot: KnotId, characteristic: u32, r: &BocksteinReport) -> Self {
        BocksteinOutput {
            knot,
            characteristic,
            pages: r.pages.iter().enumerate().map(|(i, p)| PageReport { page: i + 1, poincare: p.clone() }).collect(),
            stabilization: r.stabilization,
            einf: r.einf.clone(),
        }
    }
}

/// Output of `verify`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<Check>,
}

/// What a command produced.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn error(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome { code, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

/// Parses the arguments and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            }
        }
    }
}

/// Runs a parsed command.
pub fn run(cli: &Cli) -> Outcome {
    if let Some(j) = cli.jobs {
        // The global pool can only be set once per process; later calls keep
        // the first setting.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    match &cli.command {
        Command::Gl0(a) => knot_command(a, Kind::Gl0),
        Command::Bockstein(a) => knot_command(a, Kind::Bockstein),
        Command::Verify { suite, format } => verify_command(*suite, *format),
    }
}

#[derive(Clone, Copy)]
enum Kind {
    Gl0,
    Bockstein,
}

fn knot_command(a: &KnotArgs, kind: Kind) -> Outcome {
    let b = match parse_braid(&a.braid, a.strands) {
        Ok(b) => b,
        Err(e) => return Outcome::error(EXIT_PARSE, e),
    };
    let opts = GilmoreOptions { degree_bound: a.degree_bound, ..GilmoreOptions::default() };
    let result = match a.characteristic {
        0 => render::<Rational>(&b, &opts, a, kind),
        2 => render::<Fp<2>>(&b, &opts, a, kind),
        3 => render::<Fp<3>>(&b, &opts, a, kind),
        5 => render::<Fp<5>>(&b, &opts, a, kind),
        7 => render::<Fp<7>>(&b, &opts, a, kind),
        11 => render::<Fp<11>>(&b, &opts, a, kind),
        13 => render::<Fp<13>>(&b, &opts, a, kind),
        32003 => render::<Fp<32003>>(&b, &opts, a, kind),
        p => return Outcome::error(EXIT_PARSE, format!("unsupported characteristic {p}")),
    };
    match result {
        Ok(text) => Outcome::ok(text),
        Err(HomologyError::Web(e @ WebError::NotAKnot { .. })) => Outcome::error(EXIT_NOT_A_KNOT, e),
        Err(HomologyError::Web(e)) => Outcome::error(EXIT_PARSE, e),
        Err(e) => Outcome::error(EXIT_COMPUTATION, e),
    }
}

fn render<F: Field>(b: &BraidWord, opts: &GilmoreOptions, a: &KnotArgs, kind: Kind) -> Result<String, HomologyError> {
    let h: KnotHomology<F> = compute_knot(b, opts)?;
    let knot = KnotId::of(b);
    Ok(match (kind, a.format) {
        (Kind::Gl0, Format::Json) => {
            to_json(&Gl0Report { knot, characteristic: a.characteristic, poincare: h.gl0_poincare() })
        }
        (Kind::Gl0, Format::Text) => {
            let p = h.gl0_poincare();
            format!("{}\ngl0 Poincaré polynomial: {p}\n\n{}", describe(&knot), grid(&p))
        }
        (Kind::Bockstein, Format::Json) => to_json(&BocksteinOutput::new(knot, a.characteristic, &h.bockstein)),
        (Kind::Bockstein, Format::Text) => {
            let mut s = format!("{}\n", describe(&knot));
            for (i, p) in h.bockstein.pages.iter().enumerate() {
                s += &format!("E{} (total {}): {p}\n", i + 1, p.total());
            }
            let e = &h.bockstein.einf;
            s += &format!("E_infinity (total {}), reached at page {}: {e}\n", e.total(), h.bockstein.stabilization);
            s
        }
    })
}

fn to_json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("reports serialize") + "\n"
}

fn describe(k: &KnotId) -> String {
    let word: Vec<String> = k.braid.iter().map(i32::to_string).collect();
    let name = k.name.as_ref().map(|n| format!(" ({n})")).unwrap_or_default();
    format!("braid [{}] on {} strands{name}", word.join(" "), k.strands)
}

/// A table with one row per quantum degree (highest first) and one column
/// per homological degree.
pub fn grid(p: &PoincarePolynomial) -> String {
    if p.total() == 0 {
        return "(zero)\n".to_string();
    }
    let ts: Vec<i32> = {
        let mut v: Vec<i32> = p.terms().map(|(t, _, _)| t).collect();
        v.sort();
        v.dedup();
        (v[0]..=v[v.len() - 1]).collect()
    };
    let mut qs: Vec<i32> = p.terms().map(|(_, q, _)| q).collect();
    qs.sort();
    qs.dedup();
    let mut s = format!("{:>6} |", "q \\ t");
    for t in &ts {
        s += &format!("{t:>4}");
    }
    s += "\n";
    s += &format!("{}\n", "-".repeat(8 + 4 * ts.len()));
    for q in qs.iter().rev() {
        s += &format!("{q:>6} |");
        for &t in &ts {
            let n = p.coeff(t, *q);
            if n == 0 {
                s += &format!("{:>4}", ".");
            } else {
                s += &format!("{n:>4}");
            }
        }
        s += "\n";
    }
    s
}

fn verify_command(suite: Suite, format: Format) -> Outcome {
    let checks = match suite {
        Suite::Reference => {
            let mut c = verify::reference_polynomials();
            c.extend(verify::vertex_ranks());
            c.extend(verify::bockstein_totals(false));
            c
        }
        Suite::Oracle => {
            let mut c = vec![verify::oracle_equivalence()];
            c.extend(verify::alexander_consistency());
            c
        }
        Suite::Identities => verify::property_suites(),
        Suite::All => {
            let mut c = verify::reference_polynomials();
            c.extend(verify::vertex_ranks());
            c.push(verify::oracle_equivalence());
            c.extend(verify::alexander_consistency());
            c.extend(verify::bockstein_totals(true));
            c.extend(verify::property_suites());
            c
        }
    };
    let passed = verify::all_passed(&checks);
    let name = suite.to_possible_value().expect("no skipped variants").get_name().to_string();
    let stdout = match format {
        Format::Json => to_json(&VerifyReport { suite: name, passed, checks }),
        Format::Text => {
            let mut s = String::new();
            for c in &checks {
                s += &format!("{} {}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            s += &format!("{name}: {} checks, {failed} failed\n", checks.len());
            s
        }
    };
    Outcome { code: if passed { EXIT_OK } else { EXIT_VERIFY_FAILED }, stdout, stderr: String::new() }
}

/// Writes an outcome to the process streams and returns its exit code.
pub fn emit(o: &Outcome) -> i32 {
    let _ = std::io::stdout().write_all(o.stdout.as_bytes());
    let _ = std::io::stderr().write_all(o.stderr.as_bytes());
    o.code
}
