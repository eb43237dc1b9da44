//! Sensitivity of the corrected rule to an error in the breakpoint location.

use super::oracle::exact_integral;
use crate::correction::corrected_integrate_analytic;
use crate::error::Result;
use crate::model::{jumps_from_analytic_at, Builtin};
use crate::rules::Method;

#[derive(Debug, Clone, PartialEq)]
pub enum PerturbationOutcome {
    Evaluated {
        beta: f64,
        error: f64,
    },
    /// `x* + beta` left the open integration interval.
    Skipped {
        beta: f64,
        reason: String,
    },
}

impl PerturbationOutcome {
    pub fn beta(&self) -> f64 {
        match self {
            PerturbationOutcome::Evaluated { beta, .. } | PerturbationOutcome::Skipped { beta, .. } => *beta,
        }
    }

    pub fn error(&self) -> Option<f64> {
        match self {
            PerturbationOutcome::Evaluated { error, .. } => Some(*error),
            PerturbationOutcome::Skipped { .. } => None,
        }
    }
}

/// For each `beta`, expands the jumps of order `0..=l` at `x* + beta`, runs the
/// corrected `method` on `n` cells and reports the absolute error.
pub fn location_perturbation_study(
    f_name: &str,
    method: Method,
    n: usize,
    betas: &[f64],
    l: usize,
) -> Result<Vec<PerturbationOutcome>> {
    let b = Builtin::from_name(f_name)?;
    let iv = b.interval();
    let exact = exact_integral(&b, iv)?;
    let f = b.function();
    let n = method.admissible_n(n);
    betas
        .iter()
        .map(|&beta| {
            let x = b.breakpoint() + beta;
            if !iv.contains_interior(x) {
                return Ok(PerturbationOutcome::Skipped {
                    beta,
                    reason: format!("perturbed breakpoint {x} is outside {iv}"),
                });
            }
            let j = jumps_from_analytic_at(&f, x, l)?;
            let approx = corrected_integrate_analytic(&f, &j, iv, method, n)?;
            Ok(PerturbationOutcome::Evaluated {
                beta,
                error: (exact - approx).abs(),
            })
        })
        .collect()
}
