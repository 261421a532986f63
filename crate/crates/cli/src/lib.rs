//! `subord` command-line front end.

pub mod plot;
pub mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use subord_core::bounds::{bisection_thresholds, cases_for, default_constants, find_case, BetaConstants};
use subord_core::curve::DEFAULT_BOUNDARY_SAMPLES;
use subord_core::quadrature::DEFAULT_TOL;
use subord_core::starlike::{class_membership, corollary_check, AnalyticFunctionSpec, DEFAULT_R_MAX};
use subord_core::subordination::{
    dominant_boundary, sharpness_probe_with, verify_containment_with, ContainmentOptions, ContainmentVerdict,
    DEFAULT_CONTAINMENT_MARGIN, DEFAULT_SHARPNESS_EPSILON,
};
use subord_core::{
    integral_constants, list_cases, target_boundary, Complex64, SubordinationCase, TargetFunction, Theorem,
};

pub use report::{ReportRecord, Timings};

/// Tolerance for `table --verify` bisection.
const BISECTION_TOL: f64 = 1e-11;
/// Largest admissible `|bisection − closed form|`.
const BISECTION_AGREEMENT: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(name = "subord", version, about = "Sharp differential-subordination bounds and their certification")]
pub struct Cli {
    /// Add wall-clock timings to JSON output.
    #[arg(long, global = true)]
    pub timings: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the integral constants L, U, I-, I+.
    Constants(ConstantsArgs),
    /// Closed-form sharp bounds next to the published approximations.
    Table(TableArgs),
    /// Certify containment of the dominant's image in the target region.
    Verify(VerifyArgs),
    /// Containment just below, at and just above the sharp bound.
    Sharpness(SharpnessArgs),
    /// Emit the dominant and target boundary curves.
    Plot(PlotArgs),
    /// Test zf'/f of a polynomial against a starlike class.
    CheckClass(CheckClassArgs),
    /// Evaluate a starlikeness corollary for a polynomial.
    Corollary(CorollaryArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstantsFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct ConstantsArgs {
    /// Quadrature tolerance (default 1e-12, or SUBORD_TOL).
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ConstantsFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Md,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Restrict to one theorem, e.g. T3.
    #[arg(long)]
    pub theorem: Option<String>,
    #[arg(long, value_enum, default_value = "md")]
    pub format: TableFormat,
    /// Also locate each bound by bisection and report the difference.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct CaseArgs {
    /// Theorem id, T1..T9.
    #[arg(long)]
    pub theorem: String,
    /// Case letter within the theorem.
    #[arg(long)]
    pub case: char,
}

impl CaseArgs {
    fn resolve(&self) -> Result<&'static SubordinationCase> {
        let theorem: Theorem = self.theorem.parse()?;
        Ok(find_case(theorem, self.case)?)
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub case: CaseArgs,
    #[arg(long)]
    pub beta: f64,
    #[arg(long, default_value_t = DEFAULT_BOUNDARY_SAMPLES)]
    pub samples: usize,
    #[arg(long, default_value_t = DEFAULT_CONTAINMENT_MARGIN)]
    pub margin: f64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SharpnessArgs {
    #[arg(long, required_unless_present = "all")]
    pub theorem: Option<String>,
    #[arg(long, required_unless_present = "all")]
    pub case: Option<char>,
    /// Probe every registry case.
    #[arg(long, conflicts_with_all = ["theorem", "case"])]
    pub all: bool,
    #[arg(long, default_value_t = DEFAULT_SHARPNESS_EPSILON)]
    pub epsilon: f64,
    #[arg(long, default_value_t = DEFAULT_BOUNDARY_SAMPLES)]
    pub samples: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlotFormat {
    Csv,
    Svg,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    #[command(flatten)]
    pub case: CaseArgs,
    #[arg(long)]
    pub beta: f64,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: PlotFormat,
    #[arg(long, default_value_t = 1024)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct CheckClassArgs {
    /// Coefficients a2,a3,... of f(z) = z + a2 z^2 + ...; complex as 0.1+0.2i.
    #[arg(long, value_parser = parse_coeffs, allow_hyphen_values = true)]
    pub coeffs: AnalyticFunctionSpec,
    /// Class function id, e.g. SG, PHI_Q, BELL.
    #[arg(long)]
    pub class: String,
    #[arg(long, default_value_t = DEFAULT_R_MAX)]
    pub r: f64,
    #[arg(long, default_value_t = 512)]
    pub samples: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct CorollaryArgs {
    #[arg(long, value_parser = parse_coeffs, allow_hyphen_values = true)]
    pub coeffs: AnalyticFunctionSpec,
    /// Defaults to the case's sharp bound.
    #[arg(long)]
    pub beta: Option<f64>,
    #[command(flatten)]
    pub case: CaseArgs,
    #[arg(long, default_value_t = DEFAULT_R_MAX)]
    pub r: f64,
    #[arg(long, default_value_t = 512)]
    pub samples: usize,
    #[arg(long)]
    pub json: bool,
}

/// Parse `a2,a3,...`; an empty string is the identity.
pub fn parse_coeffs(s: &str) -> Result<AnalyticFunctionSpec, String> {
    let coeffs = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| Complex64::from_str(t).map_err(|e| format!("bad coefficient `{t}`: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    AnalyticFunctionSpec::new(coeffs).map_err(|e| e.to_string())
}

/// Quadrature tolerance: explicit flag, then `SUBORD_TOL`, then the default.
fn resolve_tol(flag: Option<f64>) -> Result<f64> {
    if let Some(t) = flag {
        return Ok(t);
    }
    match std::env::var("SUBORD_TOL") {
        Ok(v) => v.trim().parse().with_context(|| format!("SUBORD_TOL=`{v}` is not a number")),
        Err(_) => Ok(DEFAULT_TOL),
    }
}

/// Outcome of a command: pass (0) or verification failure (1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
}

/// Run a parsed command, writing to `out`.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<Outcome> {
    let start = Instant::now();
    let timings = cli.timings;
    let finish = |mut r: ReportRecord| {
        if timings {
            r.timings = Some(Timings::from_duration(start.elapsed()));
        }
        r
    };
    match &cli.command {
        Command::Constants(a) => cmd_constants(a, out, finish),
        Command::Table(a) => cmd_table(a, out, finish),
        Command::Verify(a) => cmd_verify(a, out, finish),
        Command::Sharpness(a) => cmd_sharpness(a, out, finish),
        Command::Plot(a) => cmd_plot(a, out),
        Command::CheckClass(a) => cmd_check_class(a, out, finish),
        Command::Corollary(a) => cmd_corollary(a, out, finish),
    }
}

/// Entry point for the binary: 0 pass, 1 verification failure, 2 usage or
/// domain error.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match execute(&cli, &mut lock) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Fail) => ExitCode::from(1),
        Err(e) => {
            let _ = lock.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn cmd_constants(a: &ConstantsArgs, out: &mut dyn Write, finish: impl Fn(ReportRecord) -> ReportRecord) -> Result<Outcome> {
    let tol = resolve_tol(a.tol)?;
    let k = integral_constants(tol)?;
    match a.format {
        ConstantsFormat::Text => {
            for c in k.all() {
                writeln!(out, "{:<8} {:.15}  (est. error {:.1e})", c.name.as_str(), c.value, c.est_error)?;
            }
        }
        ConstantsFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["name", "value", "est_error"])?;
            for c in k.all() {
                w.write_record([c.name.as_str().to_string(), c.value.to_string(), c.est_error.to_string()])?;
            }
            w.flush()?;
        }
        ConstantsFormat::Json => {
            let mut r = ReportRecord::new("constants").input("tol", tol);
            let mut errors = serde_json::Map::new();
            for c in k.all() {
                r.output(c.name.as_str(), c.value);
                errors.insert(c.name.as_str().to_string(), json!(c.est_error));
            }
            r.output("est_errors", errors);
            writeln!(out, "{}", finish(r).to_json())?;
        }
    }
    Ok(Outcome::Pass)
}

/// One row of the bounds table.
#[derive(Debug, Clone, serde::Serialize)]
pub struct TableRow {
    pub case: String,
    pub family: String,
    pub source: String,
    pub target: String,
    pub beta1: f64,
    pub beta2: f64,
    pub beta: f64,
    pub binding: String,
    pub tied: bool,
    pub paper_approx: String,
    pub delta: f64,
    pub last_digit_unit: f64,
    pub within_unit: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta_bisection: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_bisection: Option<f64>,
}

pub fn table_rows(theorem: Option<Theorem>, verify: bool, k: &BetaConstants) -> Result<Vec<TableRow>> {
    let cases: Vec<&SubordinationCase> = match theorem {
        Some(t) => cases_for(t).collect(),
        None => list_cases().iter().collect(),
    };
    cases
        .into_iter()
        .map(|c| {
            let beta = c.beta_sharp(k);
            let bisection = if verify {
                Some(bisection_thresholds(c, BISECTION_TOL)?.beta)
            } else {
                None
            };
            Ok(TableRow {
                case: c.id().to_string(),
                family: c.family.to_string(),
                source: c.source.to_string(),
                target: c.target.to_string(),
                beta1: c.beta1(k),
                beta2: c.beta2(k),
                beta,
                binding: c.binding_side(k).to_string(),
                tied: c.endpoints_tied(k),
                paper_approx: c.paper_approx.to_string(),
                delta: c.approx_delta(k),
                last_digit_unit: c.last_digit_unit(),
                within_unit: c.matches_approx(k),
                beta_bisection: bisection,
                delta_bisection: bisection.map(|b| (b - beta).abs()),
            })
        })
        .collect()
}

fn cmd_table(a: &TableArgs, out: &mut dyn Write, finish: impl Fn(ReportRecord) -> ReportRecord) -> Result<Outcome> {
    let theorem = a.theorem.as_deref().map(Theorem::from_str).transpose()?;
    let k = default_constants()?;
    let rows = table_rows(theorem, a.verify, &k)?;
    let mismatches: Vec<&TableRow> = rows.iter().filter(|r| !r.within_unit).collect();
    let bisection_bad = rows
        .iter()
        .filter(|r| r.delta_bisection.is_some_and(|d| !(d <= BISECTION_AGREEMENT)))
        .count();

    match a.format {
        TableFormat::Md => {
            let mut header = "| case | family | source | target | beta1 | beta2 | beta | binding | published | delta | ok |".to_string();
            let mut rule = "|---|---|---|---|---|---|---|---|---|---|---|".to_string();
            if a.verify {
                header.push_str(" bisection | delta_bisection |");
                rule.push_str("---|---|");
            }
            writeln!(out, "{header}")?;
            writeln!(out, "{rule}")?;
            for r in &rows {
                let binding = if r.tied { format!("{} (tied)", r.binding) } else { r.binding.clone() };
                write!(
                    out,
                    "| {} | {} | {} | {} | {:.9} | {:.9} | {:.9} | {} | {} | {:.2e} | {} |",
                    r.case,
                    r.family,
                    r.source,
                    r.target,
                    r.beta1,
                    r.beta2,
                    r.beta,
                    binding,
                    r.paper_approx,
                    r.delta,
                    if r.within_unit { "yes" } else { "NO" }
                )?;
                if let (Some(b), Some(d)) = (r.beta_bisection, r.delta_bisection) {
                    write!(out, " {b:.9} | {d:.2e} |")?;
                }
                writeln!(out)?;
            }
            for r in &mismatches {
                writeln!(
                    out,
                    "\nmismatch: {} closed form {:.9} vs published {} (|delta| = {:.3e} > {:e})",
                    r.case, r.beta, r.paper_approx, r.delta, r.last_digit_unit
                )?;
            }
        }
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
        TableFormat::Json => {
            let mut rec = ReportRecord::new("table")
                .input("theorem", theorem.map(|t| t.to_string()))
                .input("verify", a.verify);
            rec.output("rows", &rows);
            rec.output("mismatches", mismatches.iter().map(|r| r.case.clone()).collect::<Vec<_>>());
            for r in &rows {
                rec.verdict(format!("{}:{}", r.case, if r.within_unit { "match" } else { "mismatch" }));
            }
            writeln!(out, "{}", finish(rec).to_json())?;
        }
    }
    Ok(if mismatches.is_empty() && bisection_bad == 0 {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write, finish: impl Fn(ReportRecord) -> ReportRecord) -> Result<Outcome> {
    let case = a.case.resolve()?;
    let opts = ContainmentOptions {
        samples: a.samples,
        margin: a.margin,
        tol: resolve_tol(None)?,
    };
    let r = verify_containment_with(case, a.beta, &opts)?;
    if a.json {
        let mut rec = ReportRecord::new("verify")
            .input("case", case.id().to_string())
            .input("beta", a.beta)
            .input("samples", a.samples)
            .input("margin", a.margin);
        rec.output("endpoint_gap_plus", r.endpoint_gap_plus);
        rec.output("endpoint_gap_minus", r.endpoint_gap_minus);
        rec.output("worst_sample", r.worst_sample);
        rec.output("outside", r.outside);
        rec.output("on_boundary", r.on_boundary);
        rec.output("diagnostic", &r.diagnostic);
        rec.verdict(r.verdict.name());
        writeln!(out, "{}", finish(rec).to_json())?;
    } else {
        writeln!(out, "case      {} ({} {} -> {})", case.id(), case.family, case.source, case.target)?;
        writeln!(out, "beta      {}", a.beta)?;
        writeln!(out, "verdict   {}", r.verdict)?;
        writeln!(out, "gap(+1)   {:.6e}", r.endpoint_gap_plus)?;
        writeln!(out, "gap(-1)   {:.6e}", r.endpoint_gap_minus)?;
        if let Some(w) = r.worst_sample {
            writeln!(
                out,
                "worst     theta={:.6} q={:.9}{:+.9}i distance={:.3e} ({:?})",
                w.theta, w.re, w.im, w.signed_distance, w.region
            )?;
        }
        writeln!(out, "outside   {} of {}", r.outside, r.n_samples)?;
        if let Some(d) = &r.diagnostic {
            writeln!(out, "note      {d}")?;
        }
    }
    Ok(match r.verdict {
        ContainmentVerdict::Violated => Outcome::Fail,
        _ => Outcome::Pass,
    })
}

fn cmd_sharpness(a: &SharpnessArgs, out: &mut dyn Write, finish: impl Fn(ReportRecord) -> ReportRecord) -> Result<Outcome> {
    let cases: Vec<&SubordinationCase> = if a.all {
        list_cases().iter().collect()
    } else {
        let theorem = a.theorem.as_deref().ok_or_else(|| anyhow!("--theorem is required"))?;
        let letter = a.case.ok_or_else(|| anyhow!("--case is required"))?;
        vec![CaseArgs {
            theorem: theorem.to_string(),
            case: letter,
        }
        .resolve()?]
    };
    let opts = ContainmentOptions {
        samples: a.samples,
        tol: resolve_tol(None)?,
        ..ContainmentOptions::default()
    };
    let mut reports = Vec::with_capacity(cases.len());
    for c in cases {
        reports.push(sharpness_probe_with(c, a.epsilon, &opts)?);
    }
    let all_passed = reports.iter().all(|r| r.passed);
    if a.json {
        let mut rec = ReportRecord::new("sharpness")
            .input("epsilon", a.epsilon)
            .input("samples", a.samples)
            .input("cases", reports.iter().map(|r| r.case.to_string()).collect::<Vec<_>>());
        rec.output("probes", &reports);
        for r in &reports {
            rec.verdict(format!("{}:{}", r.case, if r.passed { "sharp" } else { "failed" }));
        }
        writeln!(out, "{}", finish(rec).to_json())?;
    } else {
        for r in &reports {
            writeln!(
                out,
                "{:<4} beta*={:.9} ({}, {}, {}) binding={}{} residual={:.1e} {}",
                r.case.to_string(),
                r.beta_sharp,
                r.below,
                r.at,
                r.above,
                r.binding_side,
                if r.tied { " (tied)" } else { "" },
                r.binding_residual,
                match &r.failure {
                    None => "PASS".to_string(),
                    Some(f) => format!("FAIL: {f}"),
                }
            )?;
        }
    }
    Ok(if all_passed { Outcome::Pass } else { Outcome::Fail })
}

fn cmd_plot(a: &PlotArgs, out: &mut dyn Write) -> Result<Outcome> {
    let case = a.case.resolve()?;
    let q = dominant_boundary(case, a.beta, a.samples, resolve_tol(None)?)?;
    let target = target_boundary(case.target, a.samples)?;
    let file = File::create(&a.out).with_context(|| format!("cannot create {}", a.out.display()))?;
    let mut w = BufWriter::new(file);
    match a.format {
        PlotFormat::Csv => plot::write_csv(&mut w, &q, &target)?,
        PlotFormat::Svg => {
            let title = format!("{} beta = {}", case.id(), a.beta);
            w.write_all(plot::render_svg(&q, &target, &title).as_bytes())?;
        }
    }
    w.flush()?;
    writeln!(out, "wrote {} ({} points per curve)", a.out.display(), a.samples)?;
    Ok(Outcome::Pass)
}

fn cmd_check_class(a: &CheckClassArgs, out: &mut dyn Write, finish: impl Fn(ReportRecord) -> ReportRecord) -> Result<Outcome> {
    let class: TargetFunction = a.class.parse()?;
    let r = class_membership(&a.coeffs, class, a.r, a.samples)?;
    if a.json {
        let mut rec = ReportRecord::new("check-class")
            .input("coeffs", a.coeffs.coeffs())
            .input("class", class.name())
            .input("r", a.r)
            .input("samples", a.samples);
        rec.output("worst_margin", r.worst_margin);
        rec.output("worst_z", [r.worst_re, r.worst_im]);
        rec.output("outside", r.outside);
        rec.output("singularity", &r.singularity);
        rec.verdict(if r.member { "member" } else { "non-member" });
        writeln!(out, "{}", finish(rec).to_json())?;
    } else {
        writeln!(out, "class        {}", class.name())?;
        writeln!(out, "verdict      {}", if r.member { "member" } else { "non-member" })?;
        writeln!(out, "worst margin {:.6e} at z = {:.6}{:+.6}i", r.worst_margin, r.worst_re, r.worst_im)?;
        writeln!(out, "outside      {} of {}", r.outside, r.n_samples)?;
        if let Some(s) = &r.singularity {
            writeln!(out, "singularity  {} at {:.9}{:+.9}i", s.what, s.re, s.im)?;
        }
    }
    Ok(if r.member { Outcome::Pass } else { Outcome::Fail })
}

fn cmd_corollary(a: &CorollaryArgs, out: &mut dyn Write, finish: impl Fn(ReportRecord) -> ReportRecord) -> Result<Outcome> {
    let case = a.case.resolve()?;
    let beta = match a.beta {
        Some(b) => b,
        None => case.beta_sharp(&default_constants()?),
    };
    if !case.has_starlike_corollary() {
        bail!("no starlikeness corollary is stated for case {}", case.id());
    }
    let r = corollary_check(&a.coeffs, beta, case, a.r, a.samples)?;
    let verdict = format!("{:?}", r.verdict);
    if a.json {
        let mut rec = ReportRecord::new("corollary")
            .input("coeffs", a.coeffs.coeffs())
            .input("case", case.id().to_string())
            .input("beta", beta)
            .input("r", a.r)
            .input("samples", a.samples);
        rec.output("conclusion_holds", r.conclusion_holds);
        rec.output("hypothesis_failures", r.hypothesis_failures);
        rec.output("conclusion_failures", r.conclusion_failures);
        rec.output("singularity", &r.singularity);
        rec.verdict(verdict);
        if r.is_counterexample() {
            rec.verdict("counterexample");
        }
        writeln!(out, "{}", finish(rec).to_json())?;
    } else {
        writeln!(out, "case        {} ({} {} -> {})", case.id(), case.family, case.source, case.target)?;
        writeln!(out, "beta        {beta}")?;
        writeln!(out, "hypothesis  {verdict} ({} failing samples)", r.hypothesis_failures)?;
        match r.conclusion_holds {
            Some(true) => writeln!(out, "conclusion  holds")?,
            Some(false) => writeln!(out, "conclusion  FAILS ({} samples)", r.conclusion_failures)?,
            None => writeln!(out, "conclusion  not evaluated")?,
        }
        if let Some(s) = &r.singularity {
            writeln!(out, "singularity {} at {:.9}{:+.9}i", s.what, s.re, s.im)?;
        }
    }
    Ok(if r.is_counterexample() { Outcome::Fail } else { Outcome::Pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (Result<Outcome>, String) {
        let cli = Cli::try_parse_from(std::iter::once("subord").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let res = execute(&cli, &mut buf);
        (res, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn coefficient_parsing() {
        let f = parse_coeffs("0.25, 0.1-0.2i,-0.05").unwrap();
        assert_eq!(f.coeffs().len(), 3);
        assert_eq!(f.coeffs()[1], Complex64::new(0.1, -0.2));
        assert_eq!(parse_coeffs("").unwrap().degree(), 1);
        assert!(parse_coeffs("0.1,abc").is_err());
    }

    #[test]
    fn table_rows_for_one_theorem() {
        let k = default_constants().unwrap();
        let rows = table_rows(Some(Theorem::T3), false, &k).unwrap();
        assert_eq!(rows.len(), 7);
        assert_eq!(rows[3].case, "T3d");
        assert!((rows[3].beta - 2.0 * k.u).abs() < 1e-15);
        assert!(rows[3].within_unit);
        assert_eq!(table_rows(None, false, &k).unwrap().len(), 51);
    }

    #[test]
    fn table_exit_reflects_published_mismatches() {
        let (res, text) = run(&["table", "--theorem", "T2"]);
        assert_eq!(res.unwrap(), Outcome::Pass);
        assert_eq!(text.lines().count(), 2 + 7);
        let (res, text) = run(&["table", "--theorem", "T1"]);
        assert_eq!(res.unwrap(), Outcome::Fail);
        assert!(text.contains("mismatch: T1b"));
    }

    #[test]
    fn verify_exit_codes() {
        let (res, text) = run(&["verify", "--theorem", "T4", "--case", "b", "--beta", "0.8"]);
        assert_eq!(res.unwrap(), Outcome::Pass);
        assert!(text.contains("Contained"));
        let (res, _) = run(&["verify", "--theorem", "T4", "--case", "b", "--beta", "0.7", "--samples", "512"]);
        assert_eq!(res.unwrap(), Outcome::Fail);
        let (res, _) = run(&["verify", "--theorem", "T4", "--case", "z", "--beta", "0.7"]);
        assert!(res.is_err());
    }

    #[test]
    fn sharpness_flags_conflict() {
        assert!(Cli::try_parse_from(["subord", "sharpness", "--all", "--theorem", "T1"]).is_err());
        assert!(Cli::try_parse_from(["subord", "sharpness", "--theorem", "T1"]).is_err());
        assert!(Cli::try_parse_from(["subord", "sharpness", "--all"]).is_ok());
    }

    #[test]
    fn corollary_requires_a_stated_corollary() {
        let (res, _) = run(&["corollary", "--coeffs", "0.05", "--theorem", "T2", "--case", "a"]);
        assert!(res.is_err());
        let (res, text) = run(&["corollary", "--coeffs", "0.05", "--beta", "1.5", "--theorem", "T4", "--case", "a", "--samples", "256"]);
        assert_eq!(res.unwrap(), Outcome::Pass);
        assert!(text.contains("HypothesisHolds"));
    }
}
