//! Command-line front end. [`run_cli`] takes the argument vector and the
//! three standard streams, so it can be driven from tests.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::diagram::{
    assemble, bridge_params, check_general_position, check_transverse, mini_stabilize,
    pairwise_links, verify_trivial, BridgeParams, PositionIssue, TransverseReport,
    TrivialityReport,
};
use crate::error::Error;
use crate::invariants::{ledger, InvariantLedger};
use crate::io::{
    export_svg, parse_diagram, parse_factorization, report_json, serialize_diagram, DiagramDocument,
};
use crate::quasipositive::{hurwitz_orbit, standard_factorization, validate, Factorization};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "transbridge",
    version,
    about = "Torus diagrams of transverse bridge trisections from braid factorizations"
)]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Source {
    /// Input file; `-` or nothing reads standard input.
    file: Option<PathBuf>,
    /// Use the standard factorization of the full twist on this many strands.
    #[arg(long, value_name = "D", conflicts_with = "file")]
    standard: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a factorization multiplies to the full twist.
    Verify(Source),
    /// Assemble and stabilize the torus diagram of a factorization.
    Build {
        #[command(flatten)]
        source: Source,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check transversality, bridge parameters and triviality of a diagram.
    Check(Source),
    /// Print the invariant ledger of a diagram.
    Invariants(Source),
    /// Enumerate the Hurwitz orbit of a factorization.
    Orbit {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
    /// Render a diagram as SVG.
    Export {
        #[command(flatten)]
        source: Source,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

struct Streams<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
}

/// Failure of a command: the message and exit code to report.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidFactorization | Error::NegativeFactor { .. } | Error::Unstabilized(_) => {
                EXIT_CHECK_FAILED
            }
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

fn read_input(path: Option<&Path>, io: &mut Streams) -> std::result::Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("{}: {e}", p.display()),
        }),
        _ => {
            let mut text = String::new();
            io.stdin.read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn load_factorization(
    src: &Source,
    io: &mut Streams,
) -> std::result::Result<Factorization, Failure> {
    match src.standard {
        Some(d) => Ok(standard_factorization(d)?),
        None => Ok(parse_factorization(&read_input(src.file.as_deref(), io)?)?),
    }
}

fn build_document(f: Factorization) -> std::result::Result<DiagramDocument, Failure> {
    let diagram = mini_stabilize(assemble(&f)?);
    Ok(DiagramDocument {
        diagram,
        factorization: Some(f),
    })
}

fn load_diagram(src: &Source, io: &mut Streams) -> std::result::Result<DiagramDocument, Failure> {
    match src.standard {
        Some(d) => build_document(standard_factorization(d)?),
        None => Ok(parse_diagram(&read_input(src.file.as_deref(), io)?)?),
    }
}

fn emit(io: &mut Streams, output: Option<&Path>, text: &str) -> std::result::Result<(), Failure> {
    match output {
        Some(p) if p != Path::new("-") => fs::write(p, text).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("{}: {e}", p.display()),
        }),
        _ => Ok(io.stdout.write_all(text.as_bytes())?),
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn code(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn verify(src: &Source, json: bool, io: &mut Streams) -> Outcome {
    let f = load_factorization(src, io)?;
    let report = validate(&f);
    let ok = report.is_valid();
    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            valid: bool,
            #[serde(flatten)]
            report: &'a crate::quasipositive::ValidationReport,
        }
        io.stdout.write_all(
            report_json(&Out {
                valid: ok,
                report: &report,
            })
            .as_bytes(),
        )?;
    } else {
        let out = &mut io.stdout;
        writeln!(out, "strands: {}", report.strands)?;
        match report.count_ok {
            Some(c) => writeln!(
                out,
                "factors: n={} (expected {}) {}",
                report.factor_count,
                report.strands * report.strands - report.strands,
                verdict(c)
            )?,
            None => writeln!(
                out,
                "factors: n={} (singular, count not checked)",
                report.factor_count
            )?,
        }
        writeln!(
            out,
            "exponent sum: sum={} (expected {}) {}",
            report.exponent_sum,
            report.expected_exponent_sum,
            verdict(report.sum_ok)
        )?;
        writeln!(
            out,
            "product equals full twist: {}",
            verdict(report.product_ok)
        )?;
        writeln!(out, "smooth: {}", if report.smooth { "yes" } else { "no" })?;
        if !report.negative_factors.is_empty() {
            writeln!(out, "negative factors: {:?}", report.negative_factors)?;
        }
        writeln!(out, "result: {}", if ok { "PASS" } else { "FAIL" })?;
    }
    Ok(code(ok))
}

fn build(src: &Source, output: Option<&Path>, json: bool, io: &mut Streams) -> Outcome {
    let doc = build_document(load_factorization(src, io)?)?;
    let text = serialize_diagram(&doc);
    emit(io, output, &text)?;
    if output.is_some_and(|p| p != Path::new("-")) {
        let params = bridge_params(&doc.diagram)?;
        if json {
            io.stdout.write_all(report_json(&params).as_bytes())?;
        } else {
            writeln!(io.stdout, "params {params} s={}", params.s)?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CheckReport {
    transverse: TransverseReport,
    general_position: Vec<PositionIssue>,
    params: Option<BridgeParams>,
    baseline: Option<BridgeParams>,
    unstabilized_crossings: usize,
    triviality: Option<TrivialityReport>,
    passed: bool,
}

fn check(src: &Source, json: bool, io: &mut Streams) -> Outcome {
    let doc = load_diagram(src, io)?;
    let diag = &doc.diagram;
    let transverse = check_transverse(diag);
    let general_position = check_general_position(diag);
    let params = bridge_params(diag).ok();
    let unstabilized_crossings = if params.is_some() {
        0
    } else {
        diag.a_crossings()
    };
    let triviality = match (&doc.factorization, params) {
        (Some(f), Some(_)) => Some(verify_trivial(&pairwise_links(diag, f)?, f)),
        _ => None,
    };
    let passed = transverse.passed()
        && general_position.is_empty()
        && params.is_some()
        && triviality.as_ref().is_none_or(TrivialityReport::passed);
    let report = CheckReport {
        baseline: params.map(|p| p.baseline()),
        transverse,
        general_position,
        params,
        unstabilized_crossings,
        triviality,
        passed,
    };
    if json {
        io.stdout.write_all(report_json(&report).as_bytes())?;
    } else {
        let out = &mut io.stdout;
        writeln!(
            out,
            "transverse: {} ({} arcs, {} violations)",
            verdict(report.transverse.passed()),
            report.transverse.arcs_checked,
            report.transverse.violations.len()
        )?;
        for v in &report.transverse.violations {
            writeln!(
                out,
                "  arc {} ({:?}) segment {:?}: {:?}",
                v.arc, v.color, v.segment, v.kind
            )?;
        }
        writeln!(
            out,
            "general position: {} ({} issues)",
            verdict(report.general_position.is_empty()),
            report.general_position.len()
        )?;
        match (report.params, report.baseline) {
            (Some(p), Some(b)) => writeln!(out, "params {p} s={} baseline {b}", p.s)?,
            _ => writeln!(
                out,
                "params: unavailable, {} A crossings remain",
                report.unstabilized_crossings
            )?,
        }
        match &report.triviality {
            Some(t) => writeln!(
                out,
                "triviality: L1 {} L2 {} L3 {}",
                verdict(t.l1_ok),
                verdict(t.l2_ok),
                verdict(t.l3_ok)
            )?,
            None => writeln!(out, "triviality: skipped (no factorization in document)")?,
        }
        writeln!(out, "result: {}", if passed { "PASS" } else { "FAIL" })?;
    }
    Ok(code(passed))
}

fn invariants(src: &Source, json: bool, io: &mut Streams) -> Outcome {
    let doc = load_diagram(src, io)?;
    let l: InvariantLedger = ledger(&doc.diagram)?;
    if json {
        io.stdout.write_all(report_json(&l).as_bytes())?;
    } else {
        let out = &mut io.stdout;
        writeln!(out, "degree: {}", l.degree)?;
        writeln!(out, "genus (expected): {}", l.genus_expected)?;
        writeln!(out, "euler characteristic (expected): {}", l.euler_expected)?;
        writeln!(
            out,
            "params {} s={} baseline {}",
            l.params, l.params.s, l.baseline
        )?;
        writeln!(out, "self-linking: ({}, {}, {})", l.sl[0], l.sl[1], l.sl[2])?;
        writeln!(out, "smooth: {}", if l.smooth { "yes" } else { "no" })?;
        for (name, ok) in &l.checks {
            writeln!(out, "{name}: {}", verdict(*ok))?;
        }
        writeln!(out, "result: {}", if l.passed() { "PASS" } else { "FAIL" })?;
    }
    Ok(code(l.passed()))
}

fn orbit(src: &Source, budget: usize, json: bool, io: &mut Streams) -> Outcome {
    let f = load_factorization(src, io)?;
    let orbit = hurwitz_orbit(&f, budget);
    if json {
        #[derive(Serialize)]
        struct Out {
            size: usize,
            truncated: bool,
            members: Vec<String>,
        }
        let out = Out {
            size: orbit.len(),
            truncated: orbit.truncated,
            members: orbit.members.iter().map(|(_, m)| m.to_string()).collect(),
        };
        io.stdout.write_all(report_json(&out).as_bytes())?;
    } else {
        writeln!(io.stdout, "orbit size: {}", orbit.len())?;
        writeln!(
            io.stdout,
            "truncated: {}",
            if orbit.truncated { "yes" } else { "no" }
        )?;
        for (_, m) in &orbit.members {
            writeln!(io.stdout, "{m}")?;
        }
    }
    Ok(EXIT_OK)
}

fn export(src: &Source, output: Option<&Path>, io: &mut Streams) -> Outcome {
    let doc = load_diagram(src, io)?;
    emit(io, output, &export_svg(&doc.diagram))?;
    Ok(EXIT_OK)
}

fn dispatch(cli: &Cli, io: &mut Streams) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Verify(src) => verify(src, json, io),
        Command::Build { source, output } => build(source, output.as_deref(), json, io),
        Command::Check(src) => check(src, json, io),
        Command::Invariants(src) => invariants(src, json, io),
        Command::Orbit { source, budget } => orbit(source, *budget, json, io),
        Command::Export { source, output } => export(source, output.as_deref(), io),
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the exit
/// code: 0 when every check passes, 1 when a mathematical check fails, 2 on
/// bad input or usage.
pub fn run_cli<I, T>(
    argv: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    let mut io = Streams {
        stdin,
        stdout,
        stderr,
    };
    match dispatch(&cli, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.stderr, "error: {}", f.message);
            f.code
        }
    }
}
