//! Command-line front end: exact tables, single evaluations and the
//! verification suites.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::complex::Complex64;
use serde_json::Value;

use crate::contour::{lisbon_f, lisbon_ftilde, lisbon_phi, EntireFn, QuadratureSpec};
use crate::error::{Error, Result};
use crate::exactpoly::SigmaPoly;
use crate::polyroots::SigmaPoint;
use crate::report::{Report, ReportDocument};
use crate::suites::{self, default_functions, exp_fn, SuiteOptions, EQUIVALENCE_TOL, MAX_K, MAX_M};
use crate::traces::{
    derived_newton_table, lagrange_interp, newton_table, phi_to_pi, trace_form, trace_t, vector_trace,
};

#[derive(Parser, Debug)]
#[command(
    name = "lisbon",
    version,
    about = "Lisbon integrals, trace forms and their differential systems"
)]
pub struct Cli {
    /// Quadrature stopping tolerance
    #[arg(long, global = true, default_value_t = 1e-12)]
    pub tol: f64,
    /// Initial number of trapezoid nodes (power of two)
    #[arg(long = "m-start", global = true, default_value_t = 64)]
    pub m_start: usize,
    /// Maximum number of trapezoid nodes (power of two)
    #[arg(long = "m-cap", global = true, default_value_t = 1 << 20)]
    pub m_cap: usize,
    /// Seed for sampled checks
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Emit a versioned JSON document instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Record wall time per report (breaks byte-identical output)
    #[arg(long, global = true)]
    pub timings: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Derived Newton polynomials DN_{-k+1} .. DN_max
    DnTable(TableArgs),
    /// Newton power sums N_0 .. N_max
    NewtonTable(TableArgs),
    /// Evaluate one integral or trace at σ
    Eval(EvalArgs),
    /// Run a verification suite
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// Number of roots, 1 to 6
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Largest index m, at most 10
    #[arg(long = "max-m", default_value_t = 5)]
    pub max_m: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
#[value(rename_all = "verbatim")]
pub enum EvalKind {
    F,
    Ftilde,
    Phi,
    T,
    Ttilde,
    VT,
    #[value(name = "interp")]
    Interp,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[arg(value_enum, ignore_case = true)]
    pub kind: EvalKind,
    /// poly:c0,c1,... or exp:a, summands joined by ';'
    #[arg(long)]
    pub f: String,
    /// Comma-separated complex values σ_1,…,σ_k
    #[arg(long, allow_hyphen_values = true)]
    pub sigma: String,
    /// Expected number of σ values
    #[arg(long)]
    pub k: Option<usize>,
    /// Also compare the integral with the root sum
    #[arg(long = "cross-check")]
    pub cross_check: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Equivalence,
    Systems,
    Kernels,
    Lemmas,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Single k; defaults depend on the suite
    #[arg(long)]
    pub k: Option<usize>,
    /// Largest weight for the kernel suite, at most 10
    #[arg(long = "max-w", default_value_t = 8)]
    pub max_w: u64,
    /// Largest index m for the symbolic suites, at most 10
    #[arg(long = "max-m", default_value_t = 10)]
    pub max_m: usize,
    /// Test function for sampled suites
    #[arg(long)]
    pub f: Option<String>,
    /// σ samples per k
    #[arg(long)]
    pub samples: Option<usize>,
    /// Restrict the lemma suite to one lemma
    #[arg(long)]
    pub lemma: Option<String>,
}

/// What a run printed and whether every report passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub success: bool,
}

fn fmt_real(x: f64) -> String {
    let s = format!("{x:.12}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

/// `a`, `bi` or `a+bi` with twelve decimals, trailing zeros trimmed.
pub fn fmt_complex(z: Complex64) -> String {
    let re = fmt_real(z.re);
    let im = fmt_real(z.im);
    match (re.as_str(), im.as_str()) {
        (_, "0") => re,
        ("0", _) => format!("{im}i"),
        _ if im.starts_with('-') => format!("{re}{im}i"),
        _ => format!("{re}+{im}i"),
    }
}

fn fmt_vector(v: &[Complex64]) -> String {
    format!("({})", v.iter().map(|z| fmt_complex(*z)).collect::<Vec<_>>().join(", "))
}

fn json_values(v: &[Complex64]) -> Vec<[f64; 2]> {
    v.iter().map(|z| [z.re, z.im]).collect()
}

fn render_param(v: &Value) -> Option<String> {
    match v {
        Value::Null => None,
        Value::String(s) => Some(s.clone()),
        Value::Number(_) | Value::Bool(_) => Some(v.to_string()),
        _ => {
            let s = v.to_string();
            (s.len() <= 60).then_some(s)
        }
    }
}

/// One line per report: verdict, check name, short parameters, residual.
pub fn render_text(reports: &[Report]) -> String {
    let mut out = String::new();
    for r in reports {
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        let params: Vec<String> = r
            .params
            .iter()
            .filter(|(k, _)| k.as_str() != "tol")
            .filter_map(|(k, v)| render_param(v).map(|s| format!("{k}={s}")))
            .collect();
        let _ = write!(out, "{verdict} {} {}", r.check, params.join(" "));
        let _ = write!(out, " residual={:e}", r.residual);
        if let Some(tol) = r.tolerance() {
            let _ = write!(out, " tol={tol:e}");
        }
        if let Some(ms) = r.runtime_ms {
            let _ = write!(out, " runtime_ms={ms}");
        }
        out.push('\n');
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    let _ = writeln!(out, "{} reports, {} failed", reports.len(), failed);
    out
}

fn table(name: &str, k: usize, max_m: usize) -> Result<(String, Report)> {
    if !(1..=MAX_K).contains(&k) {
        return Err(Error::range(k, 1, MAX_K));
    }
    if max_m > MAX_M {
        return Err(Error::range(max_m, 0, MAX_M));
    }
    let (check, prefix, first, polys) = if name == "dn" {
        let mut polys = vec![SigmaPoly::zero(k); k - 1];
        polys.extend(derived_newton_table(k, max_m));
        ("dn_table", "DN", -(k as i64) + 1, polys)
    } else {
        ("newton_table", "N", 0, newton_table(k, max_m))
    };
    let rows: Vec<(String, String)> = polys
        .iter()
        .enumerate()
        .map(|(i, p)| (format!("{prefix}_{}", first + i as i64), p.to_string()))
        .collect();
    let text = rows.iter().map(|(n, p)| format!("{n} = {p}\n")).collect();
    let report = Report::new(check)
        .param("k", k)
        .param("max_m", max_m)
        .param("rows", rows)
        .exact(0.0);
    Ok((text, report))
}

fn parse_sigma(input: &str, k: Option<usize>) -> Result<SigmaPoint> {
    let sigma: SigmaPoint = input.parse()?;
    if let Some(k) = k {
        if k != sigma.k() {
            return Err(Error::MismatchedArity {
                left: k,
                right: sigma.k(),
            });
        }
    }
    if sigma.k() > MAX_K {
        return Err(Error::range(sigma.k(), 1, MAX_K));
    }
    Ok(sigma)
}

fn eval(args: &EvalArgs, spec: &QuadratureSpec) -> Result<(String, Report)> {
    let f: EntireFn = args.f.parse()?;
    let sigma = parse_sigma(&args.sigma, args.k)?;
    let (label, value) = match args.kind {
        EvalKind::F => ("F", vec![lisbon_f(&f, &sigma, spec)?]),
        EvalKind::Ftilde => ("Ftilde", vec![lisbon_ftilde(&f, &sigma, spec)?]),
        EvalKind::Phi => ("Phi", lisbon_phi(&f, &sigma, spec)?),
        EvalKind::T => ("T", vec![trace_t(&f, &sigma)?]),
        EvalKind::Ttilde => ("Ttilde", vec![trace_form(&f, &sigma)?]),
        EvalKind::VT => ("VT", vector_trace(&f, &sigma)?),
        EvalKind::Interp => ("Pi", lagrange_interp(&f, &sigma, spec)?.coeffs),
    };
    let reference = if args.cross_check {
        Some(match args.kind {
            EvalKind::F => vec![trace_t(&f, &sigma)?],
            EvalKind::Ftilde => vec![trace_form(&f, &sigma)?],
            EvalKind::Phi => vector_trace(&f, &sigma)?,
            EvalKind::T => vec![lisbon_f(&f, &sigma, spec)?],
            EvalKind::Ttilde => vec![lisbon_ftilde(&f, &sigma, spec)?],
            EvalKind::VT => lisbon_phi(&f, &sigma, spec)?,
            EvalKind::Interp => phi_to_pi(&sigma, &vector_trace(&f, &sigma)?).coeffs,
        })
    } else {
        None
    };
    let shown = if value.len() == 1 && !matches!(args.kind, EvalKind::Phi | EvalKind::VT | EvalKind::Interp) {
        fmt_complex(value[0])
    } else {
        fmt_vector(&value)
    };
    let mut text = format!("{label} = {shown}\n");
    let report = Report::new("eval")
        .param("kind", label)
        .param("f", f.to_string())
        .param("sigma", sigma.to_string())
        .param("value", json_values(&value));
    let report = match reference {
        Some(r) => {
            let dev = value.iter().zip(&r).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
            let _ = writeln!(text, "deviation = {dev:e}");
            report.param("reference", json_values(&r)).within(dev, EQUIVALENCE_TOL)
        }
        None => report.exact(0.0),
    };
    Ok((text, report))
}

fn suite_options(args: &VerifyArgs, seed: u64, spec: QuadratureSpec, default_ks: &[usize]) -> Result<SuiteOptions> {
    let (functions, bridge) = match &args.f {
        Some(s) => {
            let f: EntireFn = s.parse()?;
            (vec![f.clone()], vec![f])
        }
        None => (default_functions(), vec![exp_fn()]),
    };
    let opts = SuiteOptions {
        ks: args.k.map_or_else(|| default_ks.to_vec(), |k| vec![k]),
        functions,
        bridge,
        samples: args.samples.unwrap_or(10),
        seed,
        max_m: args.max_m,
        max_w: args.max_w,
        spec,
    };
    opts.validate()?;
    Ok(opts)
}

fn error_report(suite: &str, k: usize, e: &Error) -> Report {
    Report::new("error")
        .param("suite", suite)
        .param("k", k)
        .param("message", e.to_string())
        .within(f64::MAX, 0.0)
}

fn verify(args: &VerifyArgs, seed: u64, spec: QuadratureSpec, timings: bool) -> Result<Vec<Report>> {
    let suites: Vec<Suite> = match args.suite {
        Suite::All => vec![Suite::Equivalence, Suite::Systems, Suite::Kernels, Suite::Lemmas],
        s => vec![s],
    };
    if let Some(name) = &args.lemma {
        if !suites::LEMMAS.contains(&name.as_str()) {
            return Err(Error::Parse(format!(
                "unknown lemma `{name}`; expected one of {}",
                suites::LEMMAS.join(", ")
            )));
        }
    }
    let mut out = Vec::new();
    for suite in suites {
        let (name, default_ks): (&str, &[usize]) = match suite {
            Suite::Equivalence => ("equivalence", &[2, 3, 4, 5, 6]),
            Suite::Systems => ("systems", &[2, 3]),
            Suite::Kernels => ("kernels", &[2, 3, 4]),
            _ => ("lemmas", &[2, 3, 4, 5]),
        };
        let mut opts = suite_options(args, seed, spec, default_ks)?;
        if suite == Suite::Equivalence && args.f.is_none() && args.suite == Suite::All {
            opts.functions = vec![exp_fn()];
        }
        if suite == Suite::Systems {
            opts.samples = args.samples.unwrap_or(3);
        }
        for k in opts.ks.clone() {
            let single = SuiteOptions {
                ks: vec![k],
                ..opts.clone()
            };
            let start = Instant::now();
            let result = match suite {
                Suite::Equivalence => suites::equivalence_suite(&single),
                Suite::Systems => suites::systems_suite(&single),
                Suite::Kernels => suites::kernels_suite(&single),
                _ => suites::lemmas_suite(&single, args.lemma.as_deref()),
            };
            let elapsed = start.elapsed().as_millis() as u64;
            let mut reports = result.unwrap_or_else(|e| vec![error_report(name, k, &e)]);
            if timings {
                for r in &mut reports {
                    r.runtime_ms = Some(elapsed);
                }
            }
            out.extend(reports);
        }
    }
    Ok(out)
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let spec = QuadratureSpec::new(cli.tol, cli.m_start, cli.m_cap)?;
    let (text, reports) = match &cli.command {
        Command::DnTable(a) | Command::NewtonTable(a) => {
            let name = if matches!(cli.command, Command::DnTable(_)) {
                "dn"
            } else {
                "newton"
            };
            let (text, report) = table(name, a.k, a.max_m)?;
            (text, vec![report])
        }
        Command::Eval(a) => {
            let (text, report) = eval(a, &spec)?;
            (text, vec![report])
        }
        Command::Verify(a) => {
            let reports = verify(a, cli.seed, spec, cli.timings)?;
            (render_text(&reports), reports)
        }
    };
    let doc = ReportDocument::new(reports);
    let success = doc.all_pass();
    let stdout = if cli.json {
        let mut s = serde_json::to_string_pretty(&doc).map_err(|e| Error::Parse(e.to_string()))?;
        s.push('\n');
        s
    } else {
        text
    };
    Ok(Outcome { stdout, success })
}

/// Parses `args`, runs, prints and returns the process exit code: 0 when
/// every report passes, 1 when some check fails, 2 on usage or input
/// errors.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            if outcome.success {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
