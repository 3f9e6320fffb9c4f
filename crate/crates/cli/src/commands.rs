use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use acmkit_core::harness::{self, Check, HarnessConfig, HarnessReport, Mode};
use acmkit_core::{
    alexander_dual, classify, dual_ideal, graded_betti_hochster, ideal_of_complex,
    reduced_betti_numbers, ClassReport, Error, FieldSpec, Route, SimplicialComplex,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::format::{parse_complex, parse_complex_json, write_complex, write_ideal};
use crate::report::{ConfigJson, DisagreementJson, ReportJson, VerifyJson, VerifyTimings};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    Parse = 2,
    Disagreement = 3,
    Domain = 4,
    VerifyFailures = 5,
}

impl ExitStatus {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "acmkit",
    version,
    about = "Classify simplicial complexes as CM, ACM, SCM or none"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a complex by route A, route B, or both.
    Check(CheckArgs),
    /// Print the Alexander dual as a complex file.
    Dual(InputArgs),
    /// Print the minimal generators of the Stanley-Reisner ideal.
    Ideal(InputArgs),
    /// Print reduced Betti numbers of the complex.
    Homology(FieldInputArgs),
    /// Print the graded Betti table of the dual ideal (Hochster's formula).
    Betti(FieldInputArgs),
    /// Cross-check both routes over many complexes.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Complex file, or `-` for standard input.
    pub file: PathBuf,
    /// Read `{"vertices": N, "facets": [[...]]}` instead of the text format.
    #[arg(long)]
    pub json_in: bool,
}

#[derive(Debug, Args)]
pub struct FieldInputArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// `rational` or `gf:P`.
    #[arg(long, default_value = "rational", value_parser = parse_field)]
    pub field: FieldSpec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    A,
    B,
    Both,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::A => Route::A,
            RouteArg::B => Route::B,
            RouteArg::Both => Route::Both,
        }
    }
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, default_value = "rational", value_parser = parse_field)]
    pub field: FieldSpec,
    #[arg(long, value_enum, default_value = "both")]
    pub route: RouteArg,
    /// Emit the JSON report instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub vertices: usize,
    #[arg(long, value_enum, default_value = "exhaustive")]
    pub mode: ModeArg,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub count: u64,
    #[arg(long, default_value_t = 0.3)]
    pub density: f64,
    /// Repeatable; defaults to `gf:2`.
    #[arg(long = "field", value_parser = parse_field)]
    pub fields: Vec<FieldSpec>,
    /// Comma-separated subset of ER,HH,MAIN,INVOLUTION,EULER,BETTI,DEGREES,BOUNDARY.
    #[arg(long, value_delimiter = ',', value_parser = parse_check)]
    pub checks: Vec<Check>,
    #[arg(long, env = "ACMKIT_JOBS")]
    pub jobs: Option<usize>,
    #[arg(long)]
    pub json: bool,
    /// Write one complex file per failure into this directory.
    #[arg(long)]
    pub repro_dir: Option<PathBuf>,
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_check(s: &str) -> Result<Check, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Runs a parsed command line, writing results to `out` and diagnostics to `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus {
    let result = match cli.command {
        Command::Check(args) => check(&args, out, err),
        Command::Dual(args) => dual(&args, out, err),
        Command::Ideal(args) => ideal(&args, out, err),
        Command::Homology(args) => homology(&args, out, err),
        Command::Betti(args) => betti(&args, out, err),
        Command::Verify(args) => verify(&args, out, err),
    };
    match result {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            ExitStatus::Parse
        }
    }
}

fn read_input(args: &InputArgs) -> Result<String, io::Error> {
    if args.file == Path::new("-") {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(&args.file)
    }
}

/// Loads the input complex; `Err` carries the exit status after reporting.
fn load(args: &InputArgs, err: &mut dyn Write) -> Result<SimplicialComplex, ExitStatus> {
    let text = read_input(args).map_err(|e| {
        let _ = writeln!(err, "error: {}: {e}", args.file.display());
        ExitStatus::Parse
    })?;
    let parsed = if args.json_in {
        parse_complex_json(&text)
    } else {
        parse_complex(&text)
    };
    parsed.map_err(|e| {
        let _ = writeln!(err, "error: {}: {e}", args.file.display());
        ExitStatus::Parse
    })
}

fn domain(err: &mut dyn Write, e: Error) -> ExitStatus {
    let _ = writeln!(err, "error: {e}");
    ExitStatus::Domain
}

macro_rules! load_or_exit {
    ($args:expr, $err:expr) => {
        match load($args, $err) {
            Ok(c) => c,
            Err(status) => return Ok(status),
        }
    };
}

fn join<I: IntoIterator<Item = T>, T: ToString>(items: I) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn write_report_text(
    out: &mut dyn Write,
    input: &str,
    n: usize,
    r: &ClassReport,
) -> io::Result<()> {
    writeln!(out, "input: {input}")?;
    writeln!(out, "ambient size: {n}")?;
    writeln!(out, "field: {}", r.field)?;
    writeln!(out, "route: {}", r.route)?;
    writeln!(out, "facet cardinalities: {}", join(&r.facet_cardinalities))?;
    if let Some(degrees) = &r.dual_generator_degrees {
        writeln!(out, "dual generator degrees: {}", join(degrees))?;
    }
    if let Some(table) = &r.componentwise_table {
        let cells = table.iter().map(|d| {
            format!(
                "{}:{}",
                d.degree,
                if d.linear { "linear" } else { "nonlinear" }
            )
        });
        writeln!(out, "componentwise table: {}", join(cells))?;
    }
    match r.cm_witness {
        Some(w) => writeln!(
            out,
            "cm witness: link of {} has reduced homology in degree {}",
            w.face, w.degree
        )?,
        None => writeln!(out, "cm witness: none")?,
    }
    if let Some(scm) = r.scm_skeleton {
        writeln!(out, "skeleton scm: {scm}")?;
    }
    writeln!(out, "verdict: {}", r.verdict)
}

pub fn check(args: &CheckArgs, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<ExitStatus> {
    let c = load_or_exit!(&args.input, err);
    let input = args.input.file.display().to_string();
    let n = c.ambient_size();
    let start = Instant::now();
    let outcome = classify(&c, args.field, args.route.into());
    let millis = start.elapsed().as_millis() as u64;
    match outcome {
        Ok(report) => {
            if args.json {
                let doc = ReportJson::new(&input, n, &report, millis);
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                write_report_text(out, &input, n, &report)?;
            }
            Ok(ExitStatus::Ok)
        }
        Err(Error::RouteDisagreement(pair)) => {
            let (a, b) = *pair;
            writeln!(
                err,
                "error: ROUTE_DISAGREEMENT: route A says {}, route B says {}",
                a.verdict, b.verdict
            )?;
            if args.json {
                let doc = DisagreementJson {
                    schema: crate::report::SCHEMA_VERSION,
                    input: input.clone(),
                    error: "ROUTE_DISAGREEMENT",
                    route_a: ReportJson::new(&input, n, &a, millis),
                    route_b: ReportJson::new(&input, n, &b, millis),
                };
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                write_report_text(out, &input, n, &a)?;
                write_report_text(out, &input, n, &b)?;
            }
            Ok(ExitStatus::Disagreement)
        }
        Err(e) => Ok(domain(err, e)),
    }
}

pub fn dual(args: &InputArgs, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<ExitStatus> {
    let c = load_or_exit!(args, err);
    out.write_all(write_complex(&alexander_dual(&c)).as_bytes())?;
    Ok(ExitStatus::Ok)
}

pub fn ideal(args: &InputArgs, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<ExitStatus> {
    let c = load_or_exit!(args, err);
    match ideal_of_complex(&c) {
        Ok(i) => {
            out.write_all(write_ideal(&i).as_bytes())?;
            Ok(ExitStatus::Ok)
        }
        Err(e) => Ok(domain(err, e)),
    }
}

pub fn homology(
    args: &FieldInputArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<ExitStatus> {
    let c = load_or_exit!(&args.input, err);
    match reduced_betti_numbers(&c, args.field) {
        Ok(betti) => {
            for (idx, b) in betti.iter().enumerate() {
                writeln!(out, "betti {}: {b}", idx as isize - 1)?;
            }
            Ok(ExitStatus::Ok)
        }
        Err(e) => Ok(domain(err, e)),
    }
}

pub fn betti(
    args: &FieldInputArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<ExitStatus> {
    let c = load_or_exit!(&args.input, err);
    let table = dual_ideal(&c).and_then(|i| graded_betti_hochster(&i, args.field));
    match table {
        Ok(table) => {
            for ((i, j), b) in table.nonzero() {
                writeln!(out, "beta {i} {j}: {b}")?;
            }
            Ok(ExitStatus::Ok)
        }
        Err(e) => Ok(domain(err, e)),
    }
}

pub fn verify(
    args: &VerifyArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<ExitStatus> {
    let mode = match args.mode {
        ModeArg::Exhaustive => Mode::Exhaustive,
        ModeArg::Random => Mode::Random {
            seed: args.seed,
            count: args.count,
            density: args.density,
        },
    };
    let cfg = HarnessConfig {
        n: args.vertices,
        fields: if args.fields.is_empty() {
            vec![FieldSpec::gf(2).expect("2 is prime")]
        } else {
            args.fields.clone()
        },
        mode,
        checks: if args.checks.is_empty() {
            Check::ALL.into_iter().collect()
        } else {
            args.checks.iter().copied().collect()
        },
        workers: args
            .jobs
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get())),
    };
    if let Err(e) = cfg.validate() {
        writeln!(err, "error: {e}")?;
        return Ok(ExitStatus::Parse);
    }
    let start = Instant::now();
    let report = match harness::run(&cfg) {
        Ok(r) => r,
        Err(e) => return Ok(domain(err, e)),
    };
    let millis = start.elapsed().as_millis() as u64;

    if args.json {
        let doc = VerifyJson {
            schema: crate::report::SCHEMA_VERSION,
            config: ConfigJson::from(&cfg),
            report: &report,
            timings_ms: VerifyTimings { run: millis },
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    } else {
        write_verify_text(out, &report)?;
    }

    if report.is_clean() {
        return Ok(ExitStatus::Ok);
    }
    for (i, failure) in report.failures.iter().enumerate() {
        let field = failure.field.map_or("-".to_owned(), |f| f.to_string());
        writeln!(
            err,
            "failure {i}: {} [{field}] {}",
            failure.check, failure.detail
        )?;
        let repro = write_complex(&failure.complex());
        match &args.repro_dir {
            Some(dir) => {
                fs::create_dir_all(dir)?;
                let path = dir.join(format!("failure-{i}.txt"));
                fs::write(
                    &path,
                    format!("# {} [{field}] {}\n{repro}", failure.check, failure.detail),
                )?;
                writeln!(err, "  reproducer: {}", path.display())?;
            }
            None => {
                for line in repro.lines() {
                    writeln!(err, "  {line}")?;
                }
            }
        }
    }
    Ok(ExitStatus::VerifyFailures)
}

fn write_verify_text(out: &mut dyn Write, report: &HarnessReport) -> io::Result<()> {
    for (check, counter) in &report.checks {
        writeln!(
            out,
            "{check}: {} passed, {} failed",
            counter.passed, counter.failed
        )?;
    }
    for (field, h) in &report.histogram {
        writeln!(
            out,
            "verdicts over {field}: CM {} ACM {} SCM_NOT_ACM {} NOT_SCM {}",
            h.cm, h.acm, h.scm_not_acm, h.not_scm
        )?;
    }
    if report.skipped_void > 0 {
        writeln!(
            out,
            "void complexes skipped by ring checks: {}",
            report.skipped_void
        )?;
    }
    writeln!(
        out,
        "{} checked, {} failures",
        report.complexes_checked,
        report.failure_count()
    )
}
