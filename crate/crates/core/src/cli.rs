//! Command-line front end.
//!
//! ```text
//! jumpquad rule --gauss <n>
//! jumpquad integrate (--file <path> | --builtin <name>) --method <m> --n <cells>
//!                    [--jumps auto|analytic|<v0,v1,...>] [--xstar <x>] [--interval <a,b>]
//!                    [--order <l>] [--deriv-order <d>] [--stencil <s>]
//! jumpquad refine --builtin <name> --method <m> --levels <i0..i1> [--corrected]
//!                 [--jumps analytic|auto] [--order <l>] [--out <csv>]
//! jumpquad experiment <1|2|3|4> [--points <m>] [--trials <t>] [--seed <s>] --out <prefix>
//! ```
//!
//! Exit codes: 0 on success, 2 for argument and input-file errors, 1 for
//! numerical failures.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::correction::{corrected_grid_rule, corrected_integrate_analytic};
use crate::detect::{estimate_jumps, locate_discontinuity};
use crate::error::{Error, Result};
use crate::harness::csvout::{
    fmt_real, write_montecarlo_csv, write_montecarlo_summary_csv, write_report_csv, write_table_csv,
};
use crate::harness::experiments::{experiment1, experiment2, experiment3, experiment4, Table};
use crate::harness::{fitted_order, refinement_study_with, Execution, JumpSource, StudyConfig};
use crate::model::{
    jumps_from_analytic, jumps_from_analytic_at, Builtin, GridSamples, Interval, JumpData, PiecewiseFunction,
    PiecewisePolyFile,
};
use crate::rules::{gauss_legendre_rule, integrate_classical, Method};

#[derive(Debug, Parser)]
#[command(
    name = "jumpquad",
    version,
    about = "Quadrature with jump corrections for piecewise-smooth integrands"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the nodes and weights of a Gauss-Legendre rule on [-1, 1].
    Rule(RuleArgs),
    /// Integrate one function, optionally with a jump correction.
    Integrate(IntegrateArgs),
    /// Grid-refinement study of a built-in function.
    Refine(RefineArgs),
    /// Reproduce one of the four numerical experiments.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Args)]
struct RuleArgs {
    /// Number of points.
    #[arg(long)]
    gauss: usize,
}

#[derive(Debug, Args)]
struct IntegrateArgs {
    /// JSON piecewise-polynomial file.
    #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
    file: Option<PathBuf>,
    /// Built-in function name.
    #[arg(long)]
    builtin: Option<String>,
    /// trap, simpson13, simpson38 or gl:<m>.
    #[arg(long)]
    method: Method,
    /// Grid subintervals (Newton-Cotes) or cells (Gauss-Legendre).
    #[arg(long)]
    n: usize,
    /// auto, analytic, or an explicit comma-separated jump vector.
    #[arg(long, allow_hyphen_values = true)]
    jumps: Option<String>,
    /// Breakpoint for an explicit jump vector; with `analytic`, expands the jumps here.
    #[arg(long, allow_hyphen_values = true)]
    xstar: Option<f64>,
    /// Integration interval `a,b` (default: the built-in's, or -1,1 for files).
    #[arg(long, allow_hyphen_values = true)]
    interval: Option<String>,
    /// Correction order l (default: the rule's degree of exactness).
    #[arg(long)]
    order: Option<usize>,
    /// Derivative order whose jump the detector looks for.
    #[arg(long)]
    deriv_order: Option<usize>,
    /// Nodes per side for jump estimation (default l + 2).
    #[arg(long)]
    stencil: Option<usize>,
}

#[derive(Debug, Args)]
struct RefineArgs {
    #[arg(long)]
    builtin: String,
    #[arg(long)]
    method: Method,
    /// Exponent range `i0..i1` for n = 2^i.
    #[arg(long)]
    levels: String,
    #[arg(long)]
    corrected: bool,
    /// analytic or auto (only with --corrected).
    #[arg(long, default_value = "analytic")]
    jumps: String,
    #[arg(long)]
    order: Option<usize>,
    #[arg(long)]
    deriv_order: Option<usize>,
    #[arg(long)]
    stencil: Option<usize>,
    /// Output CSV path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
    id: u8,
    /// Gauss-Legendre points for experiment 3 (default: 2, 3, 4 and 5).
    #[arg(long)]
    points: Option<usize>,
    /// Trials per rule for experiment 3.
    #[arg(long)]
    trials: Option<usize>,
    /// Seed for experiment 3.
    #[arg(long)]
    seed: Option<u64>,
    /// Output file prefix; each table is written to `<prefix>_<table>.csv`.
    #[arg(long)]
    out: String,
    /// Run levels and trials on one thread.
    #[arg(long)]
    sequential: bool,
}

const DEFAULT_TRIALS: usize = 1000;
const DEFAULT_SEED: u64 = 0;
const MAX_LEVEL_EXPONENT: u32 = 26;

/// Runs one invocation, writing results to `out` and diagnostics to `err`,
/// and returns the process exit code.
pub fn run_cli<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                2
            } else {
                let _ = write!(out, "{e}");
                0
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Rule(a) => run_rule(&a, out),
        Command::Integrate(a) => run_integrate(&a, out, err),
        Command::Refine(a) => run_refine(&a, out),
        Command::Experiment(a) => run_experiment(&a, out),
    };
    match result.and_then(|()| out.flush().map_err(Error::from)) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_usage() {
                2
            } else {
                1
            }
        }
    }
}

fn run_rule(a: &RuleArgs, out: &mut dyn Write) -> Result<()> {
    let rule = gauss_legendre_rule(a.gauss)?;
    writeln!(out, "i,node,weight")?;
    for (i, (x, w)) in rule.nodes().iter().zip(rule.weights()).enumerate() {
        writeln!(out, "{i},{},{}", fmt_real(*x), fmt_real(*w))?;
    }
    Ok(())
}

fn parse_pair(s: &str, what: &str) -> Result<(f64, f64)> {
    let bad = || Error::invalid(format!("{what} must look like 'a,b', got '{s}'"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

fn parse_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|v| {
            v.trim()
                .parse::<f64>()
                .map_err(|_| Error::invalid(format!("jump value '{v}' is not a number")))
        })
        .collect()
}

fn parse_levels(s: &str) -> Result<Vec<usize>> {
    let bad = || {
        Error::invalid(format!(
            "levels must look like 'i0..i1' with i0 <= i1 <= {MAX_LEVEL_EXPONENT}, got '{s}'"
        ))
    };
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi || hi > MAX_LEVEL_EXPONENT {
        return Err(bad());
    }
    Ok(crate::harness::power_of_two_levels(lo, hi))
}

fn run_integrate(a: &IntegrateArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let (f, default_iv, default_d): (PiecewiseFunction, Interval, usize) = match (&a.file, &a.builtin) {
        (Some(path), _) => (PiecewisePolyFile::read(path)?.function(), Interval::new(-1.0, 1.0)?, 0),
        (None, Some(name)) => {
            let b = Builtin::from_name(name)?;
            (b.function(), b.interval(), b.detection_order())
        }
        (None, None) => unreachable!("clap requires one source"),
    };
    let iv = match &a.interval {
        Some(s) => {
            let (lo, hi) = parse_pair(s, "--interval")?;
            Interval::new(lo, hi)?
        }
        None => default_iv,
    };
    let method = a.method;
    let n = method.admissible_n(a.n);
    if n != a.n {
        writeln!(err, "note: {method} needs a different n, using n = {n}")?;
    }
    let l = a.order.unwrap_or(method.exactness_degree());
    let value = match a.jumps.as_deref() {
        None => {
            if a.xstar.is_some() {
                return Err(Error::invalid("--xstar needs --jumps"));
            }
            integrate_classical(|x| f.eval(x), iv, method, n)?
        }
        Some("analytic") => {
            let j = match a.xstar {
                Some(x) => jumps_from_analytic_at(&f, x, l)?,
                None => jumps_from_analytic(&f, l)?,
            };
            corrected_integrate_analytic(&f, &j, iv, method, n)?
        }
        Some("auto") => {
            if a.xstar.is_some() {
                return Err(Error::invalid("--xstar cannot be combined with --jumps auto"));
            }
            if !method.is_newton_cotes() {
                return Err(Error::invalid(
                    "--jumps auto needs grid samples; use trap, simpson13 or simpson38",
                ));
            }
            let s = GridSamples::sample(iv, n, |x| f.eval(x))?;
            let d = locate_discontinuity(&s, a.deriv_order.unwrap_or(default_d))?;
            writeln!(
                err,
                "note: discontinuity near {} (cell {}, confidence {:.3e})",
                fmt_real(d.x_estimate),
                d.cell_index,
                d.confidence
            )?;
            let j = estimate_jumps(&s, d.x_estimate, l, a.stencil.unwrap_or(l + 2))?;
            corrected_grid_rule(&s, &j, method)?
        }
        Some(list) => {
            let x = a
                .xstar
                .ok_or_else(|| Error::invalid("an explicit jump vector needs --xstar"))?;
            let j = JumpData::new(x, parse_list(list)?)?;
            corrected_integrate_analytic(&f, &j, iv, method, n)?
        }
    };
    writeln!(out, "{}", fmt_real(value))?;
    Ok(())
}

fn run_refine(a: &RefineArgs, out: &mut dyn Write) -> Result<()> {
    let b = Builtin::from_name(&a.builtin)?;
    let mut cfg = StudyConfig::new(&a.builtin, a.method, parse_levels(&a.levels)?);
    cfg.correction_order = a.order;
    if a.corrected {
        let l = a.order.unwrap_or(a.method.exactness_degree());
        let source = match a.jumps.as_str() {
            "analytic" => JumpSource::Analytic,
            "auto" => JumpSource::Estimated {
                deriv_order: a.deriv_order.unwrap_or(b.detection_order()),
                stencil: a.stencil.unwrap_or(l + 2),
            },
            other => {
                return Err(Error::invalid(format!(
                    "--jumps for refine is analytic or auto, got '{other}'"
                )))
            }
        };
        cfg = cfg.corrected(source);
    }
    let report = refinement_study_with(Execution::default(), &cfg)?;
    match &a.out {
        Some(path) => write_report_csv(BufWriter::new(File::create(path)?), &report),
        None => write_report_csv(out, &report),
    }
}

fn table_path(prefix: &str, stem: &str) -> String {
    format!("{prefix}_{stem}.csv")
}

fn write_tables(tables: &[Table], prefix: &str, out: &mut dyn Write) -> Result<()> {
    for t in tables {
        let path = table_path(prefix, t.name);
        write_table_csv(BufWriter::new(File::create(&path)?), &t.series)?;
        for s in &t.series {
            let fitted = fitted_order(&s.report.levels, s.report.exact)
                .map(|o| format!("{o:.4}"))
                .unwrap_or_else(|| "-".into());
            let last = s.report.levels.last().map(|l| fmt_real(l.error)).unwrap_or_default();
            writeln!(
                out,
                "{} {} {}: fitted order {fitted}, final error {last}",
                t.name,
                s.method,
                s.variant()
            )?;
        }
        writeln!(out, "wrote {path}")?;
    }
    Ok(())
}

fn run_experiment(a: &ExperimentArgs, out: &mut dyn Write) -> Result<()> {
    if a.id != 3 && (a.points.is_some() || a.trials.is_some() || a.seed.is_some()) {
        return Err(Error::invalid(
            "--points, --trials and --seed apply to experiment 3 only",
        ));
    }
    let exec = if a.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    match a.id {
        1 => write_tables(&experiment1(exec)?, &a.out, out),
        2 => write_tables(&experiment2(exec)?, &a.out, out),
        4 => write_tables(&experiment4(exec)?, &a.out, out),
        _ => {
            let points = a.points.map_or_else(|| vec![2, 3, 4, 5], |p| vec![p]);
            let trials = a.trials.unwrap_or(DEFAULT_TRIALS);
            let seed = a.seed.unwrap_or(DEFAULT_SEED);
            let reports = experiment3(exec, &points, trials, seed)?;
            for r in &reports {
                let path = table_path(&a.out, &format!("tab_exp1_n{}", r.n_points));
                write_montecarlo_csv(BufWriter::new(File::create(&path)?), r)?;
                writeln!(out, "wrote {path}")?;
            }
            let summary = table_path(&a.out, "tab_exp1");
            write_montecarlo_summary_csv(BufWriter::new(File::create(&summary)?), &reports)?;
            writeln!(out, "wrote {summary}")?;
            for r in &reports {
                writeln!(
                    out,
                    "n_points={} trials={} seed={seed} max_classical={} max_corrected={}",
                    r.n_points,
                    r.trials.len(),
                    fmt_real(r.max_classical),
                    fmt_real(r.max_corrected)
                )?;
            }
            Ok(())
        }
    }
}
