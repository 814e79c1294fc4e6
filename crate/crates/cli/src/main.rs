//! `dacox`: batch driver for the verification suites.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails or a
//! computation is refused (for instance a matrix outside the required
//! group), 2 on unreadable arguments.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use dacox_core::autoaction::{automorphism_suite, basic_involution_check, AutoContext};
use dacox_core::congruence::{self, member, CongruenceGroup, Mat2};
use dacox_core::daweyl::{a2n2_comparison, verify_bernstein_relations};
use dacox_core::diagrams::build_diagram;
use dacox_core::heckeparams::{parse_system, specialize};
use dacox_core::presentation::{is_simply_laced, phi_dictionary, verify_presentation, Presentation, StarVariant};
use dacox_core::weyl::appendix_a_suite;
use dacox_core::{DoubleAffineLabel, DoubleAffineWeyl, Error, Family, Report};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "dacox", version, about = "Double affine Coxeter presentations: verification suites and tools")]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites on one label.
    Verify {
        #[arg(long)]
        family: String,
        /// Rank (defaults to the smallest admissible rank).
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Allow the E7/E8 presentation suites.
        #[arg(long)]
        large: bool,
        /// Include elapsed milliseconds in the output (breaks byte-identical JSON).
        #[arg(long)]
        timing: bool,
    },
    /// Write a matrix of Γ₁(r) as a word in u12 and u21^r.
    Decompose {
        /// Matrix as "a,b;c,d".
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long, default_value_t = 1)]
        level: u32,
    },
    /// Decide whether e·γ̃·e·γ̃ acts trivially, next to Υ-membership.
    Involution {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, value_enum, default_value_t = Variant::Central)]
        variant: Variant,
    },
    /// Print a double affine Coxeter diagram.
    Diagram {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: Option<usize>,
        /// Graphviz output (default).
        #[arg(long)]
        dot: bool,
    },
    /// Hecke parameter specialisation of an affine root system.
    Params {
        /// For example "A2n^(2)", "D(n+1)^(2)", "(Cn^,Cn)".
        #[arg(long)]
        system: String,
        /// Value of n in the system label.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Evaluate a word in the presentation generators to a normal form.
    Nf {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: Option<usize>,
        /// Space-separated generators and macros, primes for inverses.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum, default_value_t = Variant::Central)]
        variant: Variant,
    },
    /// Automorphism suite, optionally with an involution check.
    Autocheck {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Presentation,
    Bernstein,
    Auto,
    #[value(name = "appendixA")]
    AppendixA,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Central,
    Plain,
}

impl From<Variant> for StarVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Central => StarVariant::Central,
            Variant::Plain => StarVariant::Plain,
        }
    }
}

/// A failure of the command itself, with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::UnknownType(_) | Error::InvalidRank { .. } | Error::UnknownSymbol(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

type CmdResult = Result<bool, Failure>;

/// Accepts a bare family (`ddotB`, rank from `--rank` or the minimum) or a
/// full label (`ddotB3`); a full label must agree with `--rank` if both are given.
fn label_of(family: &str, rank: Option<usize>) -> Result<DoubleAffineLabel, Error> {
    if let Ok(family) = family.parse::<Family>() {
        let rank = rank.unwrap_or(family.rank_range().0);
        return DoubleAffineLabel::new(family, rank);
    }
    let label: DoubleAffineLabel = family.parse()?;
    match rank {
        Some(r) if r != label.rank() => {
            Err(Error::InvalidRank { family: label.family().name().to_string(), rank: r })
        }
        _ => Ok(label),
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serialisable output"));
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
struct VerificationReport {
    suite: String,
    label: String,
    checks: Vec<dacox_core::Check>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

fn run_suite(suite: Suite, label: DoubleAffineLabel, large: bool) -> Result<Report, Error> {
    let name = label.to_string();
    match suite {
        Suite::Presentation => {
            if label.family() == Family::DddotE && label.rank() > 6 && !large {
                let mut r = Report::new("presentation", name);
                r.note("skipped", true, "E7/E8 presentation suites need --large");
                return Ok(r);
            }
            verify_presentation(label)
        }
        Suite::Bernstein => {
            let dw = DoubleAffineWeyl::of_type(label.correspondence())?;
            let mut r = verify_bernstein_relations(&dw);
            r.label = name;
            if label.family().is_starred() {
                r.absorb("comparison/", a2n2_comparison(label.rank())?);
            }
            Ok(r)
        }
        Suite::Auto => automorphism_suite(label),
        Suite::AppendixA => {
            if is_simply_laced(label) {
                let mut r = Report::new("appendixA", name);
                r.note("skipped", true, "simply-laced type: no distinguished short root");
                return Ok(r);
            }
            let dw = DoubleAffineWeyl::of_type(label.correspondence())?;
            appendix_a_suite(dw.root_system().finite(), &name)
        }
        Suite::All => unreachable!("expanded by the caller"),
    }
}

fn cmd_verify(json: bool, family: &str, rank: Option<usize>, suite: Suite, large: bool, timing: bool) -> CmdResult {
    let label = label_of(family, rank)?;
    let suites: Vec<Suite> = if suite == Suite::All {
        vec![Suite::Presentation, Suite::Bernstein, Suite::Auto, Suite::AppendixA]
    } else {
        vec![suite]
    };
    let results: Vec<Result<VerificationReport, Error>> = suites
        .par_iter()
        .map(|&s| {
            let start = Instant::now();
            let report = run_suite(s, label, large)?;
            Ok(VerificationReport {
                suite: report.suite,
                label: report.label,
                checks: report.checks,
                elapsed_ms: timing.then(|| start.elapsed().as_millis()),
            })
        })
        .collect();
    let reports = results.into_iter().collect::<Result<Vec<_>, Error>>()?;
    let ok = reports.iter().all(|r| r.checks.iter().all(|c| c.passed));
    if json {
        print_json(&reports);
    } else {
        for r in &reports {
            let failed = r.checks.iter().filter(|c| !c.passed).count();
            let time = r.elapsed_ms.map(|ms| format!(" in {ms} ms")).unwrap_or_default();
            println!("[{}] {}: {} checks, {} failed{}", r.suite, r.label, r.checks.len(), failed, time);
            for c in &r.checks {
                let status = if c.passed { "ok  " } else { "FAIL" };
                match &c.witness {
                    Some(w) => println!("  {status} {} ({w})", c.id),
                    None => println!("  {status} {}", c.id),
                }
            }
        }
        println!("{}", if ok { "all checks passed" } else { "some checks failed" });
    }
    Ok(ok)
}

fn parse_matrix(text: &str) -> Result<Mat2, Error> {
    text.parse()
}

#[derive(Serialize)]
struct DecomposeOutput {
    matrix: Mat2,
    level: u32,
    word: String,
    notation: String,
    steps: usize,
    round_trip: bool,
}

fn cmd_decompose(json: bool, matrix: &str, level: u32) -> CmdResult {
    let m = parse_matrix(matrix)?;
    if !member(&m, CongruenceGroup::Gamma1(level))? {
        return Err(Error::NotInGroup { element: m.to_string(), group: CongruenceGroup::Gamma1(level).to_string() }.into());
    }
    let d = congruence::decompose_detailed(&m, level)?;
    let round_trip = d.word.evaluate() == m;
    let out = DecomposeOutput {
        word: d.word.to_string(),
        notation: d.word.matrix_notation(),
        steps: d.steps,
        round_trip,
        matrix: m,
        level,
    };
    if json {
        print_json(&out);
    } else {
        println!("{}", out.word);
        println!("  = {}", out.notation);
        println!("  round trip: {}", if round_trip { "ok" } else { "FAILED" });
    }
    Ok(round_trip)
}

#[derive(Serialize)]
struct InvolutionOutput {
    label: String,
    matrix: Mat2,
    lift: String,
    upsilon_member: bool,
    involution: bool,
}

fn cmd_involution(json: bool, matrix: &str, family: &str, rank: Option<usize>, variant: Variant) -> CmdResult {
    let m = parse_matrix(matrix)?;
    let label = label_of(family, rank)?;
    let ctx = AutoContext::with_variant(label, variant.into())?;
    let v = basic_involution_check(&ctx, &m)?;
    let out = InvolutionOutput {
        label: label.to_string(),
        matrix: m,
        lift: v.lift.to_string(),
        upsilon_member: v.in_upsilon,
        involution: v.involution,
    };
    if json {
        print_json(&out);
    } else {
        println!("{} on {}: lift [{}]", out.matrix, out.label, out.lift);
        println!("  member of Υ: {}   involution: {}", yes_no(out.upsilon_member), yes_no(out.involution));
    }
    Ok(true)
}

fn cmd_diagram(json: bool, family: &str, rank: Option<usize>, dot: bool) -> CmdResult {
    let label = label_of(family, rank)?;
    let diagram = build_diagram(label)?;
    if json && !dot {
        print_json(&diagram.to_json(&label));
    } else {
        print!("{}", diagram.to_dot());
    }
    Ok(true)
}

fn cmd_params(system: &str, n: Option<usize>) -> CmdResult {
    let rule = specialize(parse_system(system, n)?)?;
    #[derive(Serialize)]
    struct ParamsOutput {
        system: String,
        target: String,
        generic_count: usize,
        identifications: Vec<String>,
        final_count: usize,
    }
    print_json(&ParamsOutput {
        system: rule.system.to_string(),
        target: rule.target.to_string(),
        generic_count: rule.generic_count,
        identifications: rule.identifications.iter().map(|i| i.to_string()).collect(),
        final_count: rule.final_count,
    });
    Ok(true)
}

#[derive(Serialize)]
struct NfOutput {
    label: String,
    word: String,
    normal_form: String,
    w: Vec<usize>,
    mu: Vec<String>,
    beta: Vec<String>,
    k: String,
}

fn cmd_nf(json: bool, family: &str, rank: Option<usize>, word: &str, variant: Variant) -> CmdResult {
    let label = label_of(family, rank)?;
    let p = Presentation::build_variant(label, variant.into())?;
    let parsed = p.parse_word(word)?;
    let dict = phi_dictionary(&p)?;
    let dw = dict.group();
    let g = dict.eval(&parsed)?;
    let out = NfOutput {
        label: label.to_string(),
        word: parsed.to_string(),
        normal_form: dw.format(&g),
        w: dacox_core::weyl::reduced_word(dw.root_system().finite(), &g.w).iter().map(|i| i + 1).collect(),
        mu: g.mu.iter().map(|x| x.to_string()).collect(),
        beta: g.beta.iter().map(|x| x.to_string()).collect(),
        k: g.k.to_string(),
    };
    if json {
        print_json(&out);
    } else {
        println!("{}", out.normal_form);
    }
    Ok(true)
}

fn cmd_autocheck(json: bool, family: &str, rank: Option<usize>, matrix: Option<&str>) -> CmdResult {
    let label = label_of(family, rank)?;
    let start = Instant::now();
    let mut report = automorphism_suite(label)?;
    if let Some(text) = matrix {
        let m = parse_matrix(text)?;
        let ctx = AutoContext::new(label)?;
        let v = basic_involution_check(&ctx, &m)?;
        report.note(
            format!("involution check for {m}"),
            v.involution == v.in_upsilon,
            format!("member of Υ: {}, involution: {}, lift [{}]", yes_no(v.in_upsilon), yes_no(v.involution), v.lift),
        );
    }
    let ok = report.all_pass();
    if json {
        print_json(&report);
    } else {
        println!("[auto] {}: {} checks, {} failed ({} ms)", label, report.len(), report.failures().len(), start.elapsed().as_millis());
        for c in &report.checks {
            let status = if c.passed { "ok  " } else { "FAIL" };
            match &c.witness {
                Some(w) => println!("  {status} {} ({w})", c.id),
                None => println!("  {status} {}", c.id),
            }
        }
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let json = cli.json;
    let result = match &cli.command {
        Command::Verify { family, rank, suite, large, timing } => cmd_verify(json, family, *rank, *suite, *large, *timing),
        Command::Decompose { matrix, level } => cmd_decompose(json, matrix, *level),
        Command::Involution { matrix, family, rank, variant } => cmd_involution(json, matrix, family, *rank, *variant),
        Command::Diagram { family, rank, dot } => cmd_diagram(json, family, *rank, *dot),
        Command::Params { system, n } => cmd_params(system, *n),
        Command::Nf { family, rank, word, variant } => cmd_nf(json, family, *rank, word, *variant),
        Command::Autocheck { family, rank, matrix } => cmd_autocheck(json, family, *rank, matrix.as_deref()),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
