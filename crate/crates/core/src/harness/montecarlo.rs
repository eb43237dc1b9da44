//! Random-breakpoint trials with single-cell Gauss-Legendre rules.
//!
//! Trial `t` of a run seeded with `s` draws its breakpoint from a ChaCha8
//! generator seeded by `s` on stream `t`, so every trial is reproducible on
//! its own and the schedule of trials does not affect the outcome.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::exec::Execution;
use super::oracle::exact_integral;
use crate::correction::corrected_integrate_analytic;
use crate::error::{Error, Result};
use crate::model::{jumps_from_analytic, Builtin};
use crate::rules::{integrate_classical, Method};

/// Breakpoints are drawn from `(-1 + MARGIN, 1 - MARGIN)`.
pub const BREAKPOINT_MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialRecord {
    pub trial: usize,
    pub x_star: f64,
    pub err_classical: f64,
    pub err_corrected: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloReport {
    pub n_points: usize,
    pub max_classical: f64,
    pub max_corrected: f64,
    pub trials: Vec<TrialRecord>,
}

/// Uniform draw on `[lo, hi)` from the top 53 bits of one 64-bit output.
pub fn trial_breakpoint(seed: u64, trial: usize) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    let (lo, hi) = (-1.0 + BREAKPOINT_MARGIN, 1.0 - BREAKPOINT_MARGIN);
    lo + (hi - lo) * u
}

pub fn random_breakpoint_study(n_points: usize, trials: usize, seed: u64) -> Result<MonteCarloReport> {
    random_breakpoint_study_with(Execution::default(), n_points, trials, seed)
}

pub fn random_breakpoint_study_with(
    exec: Execution,
    n_points: usize,
    trials: usize,
    seed: u64,
) -> Result<MonteCarloReport> {
    if trials == 0 {
        return Err(Error::invalid("at least one trial is required"));
    }
    // validates n_points
    Builtin::table_poly(n_points, 0.0)?;
    let method = Method::GaussLegendre(n_points);
    let l = method.exactness_degree();

    let records = exec.map_indexed(trials, |trial| -> Result<TrialRecord> {
        let x_star = trial_breakpoint(seed, trial);
        let b = Builtin::table_poly(n_points, x_star)?;
        let iv = b.interval();
        let exact = exact_integral(&b, iv)?;
        let f = b.function();
        let classical = integrate_classical(|x| f.eval(x), iv, method, 1)?;
        let j = jumps_from_analytic(&f, l)?;
        let corrected = corrected_integrate_analytic(&f, &j, iv, method, 1)?;
        Ok(TrialRecord {
            trial,
            x_star,
            err_classical: (exact - classical).abs(),
            err_corrected: (exact - corrected).abs(),
        })
    });
    let trials = records.into_iter().collect::<Result<Vec<_>>>()?;
    let max_of = |g: fn(&TrialRecord) -> f64| trials.iter().map(g).fold(0.0, f64::max);
    Ok(MonteCarloReport {
        n_points,
        max_classical: max_of(|t| t.err_classical),
        max_corrected: max_of(|t| t.err_corrected),
        trials,
    })
}
