//! Command-line front end. Every command produces a [`Report`], rendered
//! either as text or in the line-oriented report format.
//!
//! Exit codes: 0 success, 1 property violation or conjecture
//! counterexample, 2 usage or domain error, 3 resource limit exceeded.

mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::cf_dynamics::{cf_expand, cf_value, dynamical_run, verify_run, yao_knuth_stat};
use crate::dedekind::{dedekind_sum, reciprocity_scan};
use crate::error::{Error, Result};
use crate::euclid::{
    division_from_bezout, gcd, lame_bound, lowest_terms, xgcd, BezoutCertificate, Method,
};
use crate::integers::{Integer, Natural};
use crate::limits::Limits;
use crate::propositions::{classify_perfect, euclid_prime_extension, perfect_from_mersenne, perfect_scan, PerfectClass};
use crate::sequences::{
    default_window_bound, grimm_assign, grimm_scan, non_w_max_run, prime_interval_equivalence, w_witness,
    GrimmOutcome,
};

pub use report::{format_real, Report, REPORT_HEADER};
use report::join;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Report,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Subtractive,
    Remainder,
}

#[derive(Debug, Parser)]
#[command(name = "euclid", about = "Euclid's algorithm, its certificates and its relatives", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,

    /// Override every work budget with this value.
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Worker threads for scans (output does not depend on it).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Greatest common divisor with an optional step trace.
    Gcd {
        a: Natural,
        b: Natural,
        #[arg(long, value_enum, default_value = "remainder")]
        method: MethodArg,
        #[arg(long)]
        trace: bool,
    },
    /// Bezout coefficients by back-substitution.
    Xgcd { a: Natural, b: Natural },
    /// Quotient and remainder rebuilt from a Bezout certificate.
    DivFromBezout {
        a: Natural,
        b: Natural,
        /// Certificate coefficient for `a` (default: from xgcd).
        #[arg(long, allow_negative_numbers = true, requires = "y")]
        x: Option<Integer>,
        /// Certificate coefficient for `b`.
        #[arg(long, allow_negative_numbers = true, requires = "x")]
        y: Option<Integer>,
    },
    /// Reduce a ratio to lowest terms.
    LowestTerms { a: Natural, b: Natural },
    /// Continued fraction of a/b.
    Cf { a: Natural, b: Natural },
    /// Statistics over ranges.
    Stats {
        #[command(subcommand)]
        stat: StatCommand,
    },
    /// Run the subtractive map to a zero coordinate.
    Dynamics { x: Natural, y: Natural },
    /// Dedekind sum s(h, k).
    Dedekind {
        #[arg(allow_negative_numbers = true)]
        h: Integer,
        k: Natural,
    },
    /// Check the reciprocity law for all coprime 1 <= h < k <= limit.
    ReciprocityScan {
        #[arg(long, default_value_t = 150)]
        limit: u64,
    },
    /// Perfect numbers: from a Mersenne exponent, classify, or scan.
    Perfect {
        p: Option<Natural>,
        #[arg(long, conflicts_with_all = ["p", "scan"])]
        classify: Option<Natural>,
        #[arg(long, conflicts_with = "p")]
        scan: Option<u64>,
    },
    /// 1 + product of the given primes, and a new prime factor of it.
    EuclidExtend { primes: Vec<Natural> },
    /// W-sequence test for a strictly increasing sequence.
    Wseq {
        #[arg(required = true)]
        values: Vec<Natural>,
    },
    /// Prime in (m^2, (m+1)^2) versus the W property of m^2+1..m^2+2m.
    IntervalEquiv {
        m: Option<Natural>,
        #[arg(long, conflicts_with = "m")]
        scan: Option<u64>,
    },
    /// Distinct prime divisors for a run of composites m+1..m+n.
    Grimm {
        m: Option<Natural>,
        n: Option<u64>,
        #[arg(long, conflicts_with_all = ["m", "n"])]
        scan: Option<u64>,
    },
    /// Longest window m+1..m+n (n <= limit) that is not a W sequence.
    Nonw {
        m: Natural,
        #[arg(long)]
        limit: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
enum StatCommand {
    /// Sum of partial quotients of a/b over 1 <= b <= a.
    YaoKnuth { a: Natural },
}

/// Result of [`execute`]: the exit code, the report (absent for usage
/// errors), and what would be written to the standard streams.
#[derive(Debug, Clone)]
pub struct Execution {
    pub exit_code: i32,
    pub report: Option<Report>,
    pub stdout: String,
    pub stderr: String,
}

fn error_exit(err: &Error) -> i32 {
    match err {
        Error::ResourceLimit { .. } => EXIT_RESOURCE,
        Error::InvariantViolated(_) => EXIT_VIOLATION,
        _ => EXIT_USAGE,
    }
}

/// Parses `argv` (without the program name) and runs the command.
pub fn execute<I, S>(argv: I) -> Execution
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args = std::iter::once("euclid".to_string()).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == EXIT_OK { (text, String::new()) } else { (String::new(), text) };
            return Execution { exit_code: code, report: None, stdout, stderr };
        }
    };
    let limits = cli.budget.map(Limits::uniform).unwrap_or_default();
    let run = || dispatch(&cli.command, &limits, cli.budget);
    let result = match cli.workers {
        Some(workers) => match rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build() {
            Ok(pool) => pool.install(run),
            Err(e) => {
                return Execution {
                    exit_code: EXIT_USAGE,
                    report: None,
                    stdout: String::new(),
                    stderr: format!("error: cannot start worker pool: {e}\n"),
                }
            }
        },
        None => run(),
    };
    let report = match result {
        Ok(report) => report,
        Err(err) => {
            return Execution {
                exit_code: error_exit(&err),
                report: None,
                stdout: String::new(),
                stderr: format!("error: {err}\n"),
            }
        }
    };
    let rendered = match cli.format {
        Format::Text => report.render_text(),
        Format::Report => report.render_report(),
    };
    let exit_code = if report.violations.is_empty() { EXIT_OK } else { EXIT_VIOLATION };
    match &cli.out {
        Some(path) => match std::fs::write(path, &rendered) {
            Ok(()) => Execution { exit_code, report: Some(report), stdout: String::new(), stderr: String::new() },
            Err(e) => Execution {
                exit_code: EXIT_USAGE,
                report: Some(report),
                stdout: String::new(),
                stderr: format!("error: cannot write {}: {e}\n", path.display()),
            },
        },
        None => Execution { exit_code, report: Some(report), stdout: rendered, stderr: String::new() },
    }
}

fn invocation(parts: &[&str], budget: Option<u64>) -> Vec<String> {
    let mut v: Vec<String> = parts.iter().map(|s| s.to_string()).collect();
    if let Some(b) = budget {
        v.push("--budget".into());
        v.push(b.to_string());
    }
    v
}

fn dispatch(command: &Command, limits: &Limits, budget: Option<u64>) -> Result<Report> {
    let mut report = match command {
        Command::Gcd { a, b, method, trace } => run_gcd(a, b, *method, *trace, limits)?,
        Command::Xgcd { a, b } => run_xgcd(a, b)?,
        Command::DivFromBezout { a, b, x, y } => run_div_from_bezout(a, b, x.as_ref().zip(y.as_ref()), limits)?,
        Command::LowestTerms { a, b } => run_lowest_terms(a, b)?,
        Command::Cf { a, b } => run_cf(a, b)?,
        Command::Stats { stat: StatCommand::YaoKnuth { a } } => run_yao_knuth(a, limits)?,
        Command::Dynamics { x, y } => run_dynamics(x, y, limits)?,
        Command::Dedekind { h, k } => run_dedekind(h, k, limits)?,
        Command::ReciprocityScan { limit } => run_reciprocity_scan(*limit, limits)?,
        Command::Perfect { p, classify, scan } => run_perfect(p.as_ref(), classify.as_ref(), *scan, limits)?,
        Command::EuclidExtend { primes } => run_euclid_extend(primes, limits)?,
        Command::Wseq { values } => run_wseq(values)?,
        Command::IntervalEquiv { m, scan } => run_interval_equiv(m.as_ref(), *scan, limits)?,
        Command::Grimm { m, n, scan } => run_grimm(m.as_ref(), *n, *scan, limits)?,
        Command::Nonw { m, limit } => run_nonw(m, *limit, limits)?,
    };
    let parts: Vec<&str> = report.invocation.iter().map(String::as_str).collect();
    report.invocation = invocation(&parts, budget);
    if let Some(b) = budget {
        report.param("budget", b);
    }
    Ok(report)
}

fn usage(msg: &str) -> Error {
    Error::Domain(msg.to_string())
}

fn run_gcd(a: &Natural, b: &Natural, method: MethodArg, trace: bool, limits: &Limits) -> Result<Report> {
    let method = match method {
        MethodArg::Subtractive => Method::Subtractive,
        MethodArg::Remainder => Method::Remainder,
    };
    let (g, steps) = gcd(a, b, method, limits)?;
    let mut r = Report::new("gcd");
    let (sa, sb, sm) = (a.to_string(), b.to_string(), method.to_string());
    let mut inv = vec!["gcd", &sa, &sb, "--method", &sm];
    if trace {
        inv.push("--trace");
    }
    r.invocation = inv.iter().map(|s| s.to_string()).collect();
    r.param("a", a).param("b", b).param("method", method).param("trace", trace);
    if trace {
        for (i, s) in steps.steps.iter().enumerate() {
            let mut fields = vec![("step", (i + 1).to_string()), ("larger", s.larger.to_string()), ("smaller", s.smaller.to_string())];
            if let Some(q) = &s.quotient {
                fields.push(("quotient", q.to_string()));
            }
            fields.push(("remainder", s.remainder.to_string()));
            r.row(fields);
        }
    }
    r.summary("g", &g).summary("step_count", steps.step_count());
    if let Err(e) = steps.validate() {
        r.violation(e.to_string());
    }
    if method == Method::Remainder {
        let bound = lame_bound(a, b);
        r.summary("lame_bound", bound);
        if steps.step_count() as u32 > bound {
            r.violation(format!("{} division steps exceed the bound {bound}", steps.step_count()));
        }
    }
    Ok(r)
}

fn run_xgcd(a: &Natural, b: &Natural) -> Result<Report> {
    let cert = xgcd(a, b)?;
    let mut r = Report::new("xgcd");
    r.invocation = vec!["xgcd".into(), a.to_string(), b.to_string()];
    r.param("a", a).param("b", b);
    r.summary("g", &cert.g).summary("x", &cert.x).summary("y", &cert.y);
    if let Err(e) = cert.verify() {
        r.violation(e.to_string());
    }
    Ok(r)
}

fn run_div_from_bezout(a: &Natural, b: &Natural, supplied: Option<(&Integer, &Integer)>, limits: &Limits) -> Result<Report> {
    let mut r = Report::new("div-from-bezout");
    r.invocation = vec!["div-from-bezout".into(), a.to_string(), b.to_string()];
    let cert = match supplied {
        Some((x, y)) => {
            let combination = a.to_integer() * x + b.to_integer() * y;
            let g = Natural::from_integer(&combination)
                .ok()
                .filter(|g| !g.is_zero())
                .ok_or_else(|| Error::CertificateMismatch(format!("{a}*({x}) + {b}*({y}) = {combination} is not positive")))?;
            r.invocation.extend(["--x".into(), x.to_string(), "--y".into(), y.to_string()]);
            BezoutCertificate { a: a.clone(), b: b.clone(), g, x: x.clone(), y: y.clone() }
        }
        None => xgcd(a, b)?,
    };
    r.param("a", a).param("b", b);
    r.param("certificate", if supplied.is_some() { "supplied" } else { "xgcd" });
    r.param("x", &cert.x).param("y", &cert.y);
    let d = division_from_bezout(a, b, &cert, limits)?;
    r.summary("g", &cert.g)
        .summary("q", &d.quotient)
        .summary("r", &d.remainder)
        .summary("case", d.case)
        .summary("shifted_x", &d.x)
        .summary("shifted_y", &d.y);
    let direct = a.divmod(b)?;
    if direct != (d.quotient.clone(), d.remainder.clone()) {
        r.violation(format!("divmod gives ({}, {})", direct.0, direct.1));
    }
    Ok(r)
}

fn run_lowest_terms(a: &Natural, b: &Natural) -> Result<Report> {
    let (p, q) = lowest_terms(a, b)?;
    let mut r = Report::new("lowest-terms");
    r.invocation = vec!["lowest-terms".into(), a.to_string(), b.to_string()];
    r.param("a", a).param("b", b);
    r.summary("a_reduced", &p).summary("b_reduced", &q).summary("g", a.gcd_fast(b));
    Ok(r)
}

fn run_cf(a: &Natural, b: &Natural) -> Result<Report> {
    let cf = cf_expand(a, b)?;
    let (num, den) = cf_value(&cf);
    let mut r = Report::new("cf");
    r.invocation = vec!["cf".into(), a.to_string(), b.to_string()];
    r.param("a", a).param("b", b);
    r.summary("quotients", join(cf.quotients()))
        .summary("length", cf.quotients().len())
        .summary("quotient_sum", cf.quotient_sum())
        .summary("value", format!("{num}/{den}"));
    if (num, den) != lowest_terms(a, b)? {
        r.violation("continued fraction does not evaluate to a/b");
    }
    Ok(r)
}

fn run_yao_knuth(a: &Natural, limits: &Limits) -> Result<Report> {
    let stat = yao_knuth_stat(a, limits)?;
    let mut r = Report::new("stats yao-knuth");
    r.invocation = vec!["stats".into(), "yao-knuth".into(), a.to_string()];
    r.param("a", a);
    r.summary("total", &stat.total)
        .summary("predicted", format_real(stat.predicted))
        .summary("ratio", format_real(stat.ratio))
        .summary("mean_steps", format_real(stat.mean_steps));
    Ok(r)
}

fn run_dynamics(x: &Natural, y: &Natural, limits: &Limits) -> Result<Report> {
    let run = dynamical_run(x, y, limits)?;
    let mut r = Report::new("dynamics");
    r.invocation = vec!["dynamics".into(), x.to_string(), y.to_string()];
    r.param("x", x).param("y", y);
    let m = &run.product;
    let (u, v) = run.bezout_row();
    r.summary("step_count", run.step_count)
        .summary("terminal", format!("{},{}", run.terminal.0, run.terminal.1))
        .summary("gcd", run.gcd())
        .summary("product", format!("{},{};{},{}", m.m11, m.m12, m.m21, m.m22))
        .summary("determinant", m.determinant())
        .summary("bezout_u", &u)
        .summary("bezout_v", &v);
    if !verify_run(&run) {
        r.violation("product does not map the start to the terminal pair with determinant 1");
    }
    Ok(r)
}

fn run_dedekind(h: &Integer, k: &Natural, limits: &Limits) -> Result<Report> {
    let value = dedekind_sum(h, k, limits)?;
    let mut r = Report::new("dedekind");
    r.invocation = vec!["dedekind".into(), h.to_string(), k.to_string()];
    r.param("h", h).param("k", k);
    r.summary("value", value);
    Ok(r)
}

fn run_reciprocity_scan(limit: u64, limits: &Limits) -> Result<Report> {
    let scan = reciprocity_scan(limit, limits)?;
    let mut r = Report::new("reciprocity-scan");
    r.invocation = vec!["reciprocity-scan".into(), "--limit".into(), limit.to_string()];
    r.param("limit", limit);
    for (h, k, residual) in &scan.failures {
        r.row(vec![("h", h.to_string()), ("k", k.to_string()), ("residual", residual.to_string())]);
        r.violation(format!("s({h},{k}) + s({k},{h}) misses the reciprocity value by {residual}"));
    }
    r.summary("cases", scan.cases).summary("nonzero_residuals", scan.failures.len());
    Ok(r)
}

fn run_perfect(p: Option<&Natural>, classify: Option<&Natural>, scan: Option<u64>, limits: &Limits) -> Result<Report> {
    let mut r = Report::new("perfect");
    match (p, classify, scan) {
        (Some(p), None, None) => {
            let cert = perfect_from_mersenne(p, limits)?;
            r.invocation = vec!["perfect".into(), p.to_string()];
            r.param("p", p);
            r.summary("mersenne", &cert.mersenne).summary("value", &cert.value).summary("sigma", &cert.sigma_value);
        }
        (None, Some(n), None) => {
            r.invocation = vec!["perfect".into(), "--classify".into(), n.to_string()];
            r.param("classify", n);
            let sigma = crate::integers::sigma(n, limits)?;
            r.summary("sigma", sigma);
            match classify_perfect(n, limits)? {
                PerfectClass::Perfect { p } => r.summary("class", "perfect").summary("p", p),
                PerfectClass::NotPerfect => r.summary("class", "not-perfect"),
            };
        }
        (None, None, Some(limit)) => {
            let scan = perfect_scan(limit, limits)?;
            r.invocation = vec!["perfect".into(), "--scan".into(), limit.to_string()];
            r.param("scan", limit);
            for (n, p) in &scan.found {
                r.row(vec![("n", n.to_string()), ("p", p.to_string())]);
            }
            r.summary("count", scan.found.len()).summary("search_bound", limit).summary("odd_perfect", "none");
        }
        _ => return Err(usage("perfect takes exactly one of P, --classify N, --scan LIMIT")),
    }
    Ok(r)
}

fn run_euclid_extend(primes: &[Natural], limits: &Limits) -> Result<Report> {
    let ext = euclid_prime_extension(primes, limits)?;
    let mut r = Report::new("euclid-extend");
    r.invocation = std::iter::once("euclid-extend".to_string()).chain(primes.iter().map(|p| p.to_string())).collect();
    r.param("primes", join(&ext.input_primes));
    r.summary("e_value", &ext.e_value)
        .summary("new_prime", &ext.new_prime)
        .summary("e_is_prime", ext.new_prime == ext.e_value);
    Ok(r)
}

fn run_wseq(values: &[Natural]) -> Result<Report> {
    let w = w_witness(values)?;
    let mut r = Report::new("wseq");
    r.invocation = std::iter::once("wseq".to_string()).chain(values.iter().map(|v| v.to_string())).collect();
    r.param("sequence", join(values));
    r.summary("is_w", w.is_w());
    match w.witness {
        Some(i) => r.summary("witness", &values[i]).summary("witness_position", i + 1),
        None => r.summary("witness", "none").summary("witness_position", "none"),
    };
    Ok(r)
}

fn run_interval_equiv(m: Option<&Natural>, scan: Option<u64>, limits: &Limits) -> Result<Report> {
    let mut r = Report::new("interval-equiv");
    match (m, scan) {
        (Some(m), None) => {
            let e = prime_interval_equivalence(m, limits)?;
            r.invocation = vec!["interval-equiv".into(), m.to_string()];
            r.param("m", m);
            let opt = |v: &Option<Natural>| v.as_ref().map_or("none".to_string(), Natural::to_string);
            r.summary("prime_exists", e.prime_exists)
                .summary("is_w", e.is_w)
                .summary("least_prime", opt(&e.least_prime))
                .summary("witness", opt(&e.witness));
            if !e.holds() {
                r.violation(format!("m={m}: prime_exists={} but is_w={}", e.prime_exists, e.is_w));
            }
        }
        (None, Some(limit)) => {
            r.invocation = vec!["interval-equiv".into(), "--scan".into(), limit.to_string()];
            r.param("scan", limit);
            let results: Vec<_> = (1..=limit)
                .into_par_iter()
                .map(|m| prime_interval_equivalence(&Natural::from(m), limits))
                .collect::<Result<_>>()?;
            let mut with_prime = 0u64;
            for e in &results {
                with_prime += e.prime_exists as u64;
                if !e.holds() {
                    r.row(vec![("m", e.m.to_string()), ("prime_exists", e.prime_exists.to_string()), ("is_w", e.is_w.to_string())]);
                    r.violation(format!("m={}: prime_exists={} but is_w={}", e.m, e.prime_exists, e.is_w));
                }
            }
            let mismatches = r.violations.len();
            r.summary("cases", limit).summary("with_prime", with_prime).summary("mismatches", mismatches);
        }
        _ => return Err(usage("interval-equiv takes M or --scan LIMIT")),
    }
    Ok(r)
}

fn run_grimm(m: Option<&Natural>, n: Option<u64>, scan: Option<u64>, limits: &Limits) -> Result<Report> {
    let mut r = Report::new("grimm");
    match (m, n, scan) {
        (Some(m), Some(n), None) => {
            r.invocation = vec!["grimm".into(), m.to_string(), n.to_string()];
            r.param("m", m).param("n", n);
            match grimm_assign(m, n, limits)? {
                GrimmOutcome::Assigned(a) => {
                    for (i, p) in a.assignment.iter().enumerate() {
                        r.row(vec![("value", (m + (i as u64 + 1)).to_string()), ("prime", p.to_string())]);
                    }
                    r.summary("matched", true);
                }
                GrimmOutcome::Infeasible => {
                    r.summary("matched", false);
                    r.violation(format!("counterexample to Grimm's conjecture: m={m} n={n}"));
                }
            }
        }
        (None, None, Some(limit)) => {
            r.invocation = vec!["grimm".into(), "--scan".into(), limit.to_string()];
            r.param("scan", limit);
            let rows = grimm_scan(limit, limits)?;
            let mut matched = 0u64;
            for row in &rows {
                let (ok, assignment) = match &row.outcome {
                    GrimmOutcome::Assigned(a) => (true, join(&a.assignment)),
                    GrimmOutcome::Infeasible => (false, "none".to_string()),
                };
                matched += ok as u64;
                r.row(vec![
                    ("m", row.m.to_string()),
                    ("n", row.n.to_string()),
                    ("matched", ok.to_string()),
                    ("assignment", assignment),
                ]);
                if !ok {
                    r.violation(format!("counterexample to Grimm's conjecture: m={} n={}", row.m, row.n));
                }
            }
            r.summary("runs", rows.len())
                .summary("matched", matched)
                .summary("longest_run", rows.iter().map(|row| row.n).max().unwrap_or(0));
        }
        _ => return Err(usage("grimm takes M N or --scan LIMIT")),
    }
    Ok(r)
}

fn run_nonw(m: &Natural, limit: Option<u64>, limits: &Limits) -> Result<Report> {
    let n_max = limit.unwrap_or_else(|| default_window_bound(m));
    let h = non_w_max_run(m, n_max, limits)?;
    let mut r = Report::new("nonw");
    r.invocation = vec!["nonw".into(), m.to_string(), "--limit".into(), n_max.to_string()];
    r.param("m", m).param("limit", n_max);
    r.summary("longest_non_w", h);
    if h > 0 {
        r.summary("window", format!("{}..{}", m + 1u64, m + h));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Execution {
        execute(args.iter().copied())
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(&["gcd", "240", "46"]).exit_code, EXIT_OK);
        assert_eq!(run(&["frobnicate"]).exit_code, EXIT_USAGE);
        assert_eq!(run(&["gcd", "24x", "46"]).exit_code, EXIT_USAGE);
        assert_eq!(run(&["gcd", "0", "46"]).exit_code, EXIT_USAGE);
        assert_eq!(run(&["perfect", "11"]).exit_code, EXIT_USAGE);
        assert_eq!(run(&["gcd", "1000", "1", "--method", "subtractive", "--budget", "10"]).exit_code, EXIT_RESOURCE);
        assert_eq!(run(&["grimm", "22", "3"]).exit_code, EXIT_USAGE);
        assert_eq!(run(&["--help"]).exit_code, EXIT_OK);
    }

    #[test]
    fn gcd_trace() {
        let e = run(&["gcd", "240", "46", "--method", "remainder", "--trace"]);
        let r = e.report.unwrap();
        assert_eq!(r.summary_value("g"), Some("2"));
        assert_eq!(r.rows.len(), 5);
    }

    #[test]
    fn dedekind_value() {
        let r = run(&["dedekind", "2", "5"]).report.unwrap();
        assert_eq!(r.summary_value("value"), Some("0/1"));
        let r = run(&["dedekind", "-1", "3"]).report.unwrap();
        assert_eq!(r.summary_value("value"), Some("-1/18"));
    }

    #[test]
    fn supplied_certificate() {
        let r = run(&["div-from-bezout", "46", "240", "--x", "47", "--y", "-9"]).report.unwrap();
        assert_eq!((r.summary_value("q"), r.summary_value("r")), (Some("0"), Some("46")));
        let e = run(&["div-from-bezout", "46", "240", "--x", "47", "--y", "-8"]);
        assert_eq!(e.exit_code, EXIT_USAGE);
    }

    #[test]
    fn perfect_modes_are_exclusive() {
        assert_eq!(run(&["perfect"]).exit_code, EXIT_USAGE);
        assert_eq!(run(&["perfect", "3", "--scan", "100"]).exit_code, EXIT_USAGE);
        let r = run(&["perfect", "--classify", "496"]).report.unwrap();
        assert_eq!(r.summary_value("p"), Some("5"));
    }
}
