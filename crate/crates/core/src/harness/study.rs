//! Grid-refinement studies.

use super::exec::Execution;
use super::oracle::exact_integral;
use super::order::levels_with_orders;
use crate::correction::{corrected_grid_rule, corrected_integrate_analytic};
use crate::detect::{estimate_jumps, locate_discontinuity};
use crate::error::{Error, Result};
use crate::model::{jumps_from_analytic, Builtin, GridSamples, RefinementReport};
use crate::rules::{integrate_classical, Method};

/// Where the corrected rule takes its jumps from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JumpSource {
    /// Exact one-sided derivatives at the known breakpoint.
    Analytic,
    /// Detected from the grid samples and estimated by one-sided interpolation.
    Estimated { deriv_order: usize, stencil: usize },
}

#[derive(Debug, Clone, PartialEq)]
pub struct StudyConfig {
    pub function_name: String,
    pub method: Method,
    /// Requested cell counts, strictly increasing. Simpson 3/8 rounds each
    /// up to a multiple of 3 and reports the count actually used.
    pub levels: Vec<usize>,
    pub corrected: bool,
    pub jump_source: JumpSource,
    /// Correction order `l`; defaults to the rule's degree of exactness.
    pub correction_order: Option<usize>,
}

impl StudyConfig {
    pub fn new(function_name: impl Into<String>, method: Method, levels: Vec<usize>) -> Self {
        Self {
            function_name: function_name.into(),
            method,
            levels,
            corrected: false,
            jump_source: JumpSource::Analytic,
            correction_order: None,
        }
    }

    pub fn corrected(mut self, source: JumpSource) -> Self {
        self.corrected = true;
        self.jump_source = source;
        self
    }

    pub fn with_correction_order(mut self, l: usize) -> Self {
        self.correction_order = Some(l);
        self
    }

    fn validate(&self) -> Result<()> {
        if self.levels.is_empty() {
            return Err(Error::config("a refinement study needs at least one level"));
        }
        if self.levels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::config(format!(
                "levels must be strictly increasing: {:?}",
                self.levels
            )));
        }
        if self.corrected && matches!(self.jump_source, JumpSource::Estimated { .. }) && !self.method.is_newton_cotes()
        {
            return Err(Error::config(format!(
                "estimated jumps need grid samples; {} does not use a uniform grid",
                self.method
            )));
        }
        Ok(())
    }
}

/// `2^i0, ..., 2^i1`.
pub fn power_of_two_levels(i0: u32, i1: u32) -> Vec<usize> {
    (i0..=i1).map(|i| 1usize << i).collect()
}

pub fn refinement_study(cfg: &StudyConfig) -> Result<RefinementReport> {
    refinement_study_with(Execution::default(), cfg)
}

pub fn refinement_study_with(exec: Execution, cfg: &StudyConfig) -> Result<RefinementReport> {
    cfg.validate()?;
    let builtin = Builtin::from_name(&cfg.function_name)?;
    let iv = builtin.interval();
    let exact = exact_integral(&builtin, iv)?;
    let f = builtin.function();
    let method = cfg.method;
    let l = cfg.correction_order.unwrap_or(method.exactness_degree());
    let analytic = if cfg.corrected && cfg.jump_source == JumpSource::Analytic {
        Some(jumps_from_analytic(&f, l)?)
    } else {
        None
    };

    let results = exec.map_indexed(cfg.levels.len(), |i| -> Result<(usize, f64)> {
        let n = method.admissible_n(cfg.levels[i]);
        let approx = match (cfg.corrected, cfg.jump_source, &analytic) {
            (false, _, _) => integrate_classical(|x| f.eval(x), iv, method, n)?,
            (true, _, Some(j)) => corrected_integrate_analytic(&f, j, iv, method, n)?,
            (true, JumpSource::Estimated { deriv_order, stencil }, _) => {
                let s = GridSamples::sample(iv, n, |x| f.eval(x))?;
                let d = locate_discontinuity(&s, deriv_order)?;
                let j = estimate_jumps(&s, d.x_estimate, l, stencil)?;
                corrected_grid_rule(&s, &j, method)?
            }
            (true, JumpSource::Analytic, None) => unreachable!("analytic jumps computed above"),
        };
        Ok((n, (exact - approx).abs()))
    });
    let pairs = results.into_iter().collect::<Result<Vec<_>>>()?;

    let rule_name = if cfg.corrected {
        format!("corrected {method}")
    } else {
        method.to_string()
    };
    Ok(RefinementReport {
        rule_name,
        function_name: cfg.function_name.clone(),
        exact,
        levels: levels_with_orders(&pairs),
    })
}
