//! Drivers that reproduce the four numerical experiments.

use super::exec::Execution;
use super::montecarlo::{random_breakpoint_study_with, MonteCarloReport};
use super::study::{power_of_two_levels, refinement_study_with, JumpSource, StudyConfig};
use crate::error::Result;
use crate::model::RefinementReport;
use crate::rules::Method;

/// One rule/variant row group of a refinement table.
#[derive(Debug, Clone, PartialEq)]
pub struct TableSeries {
    pub method: Method,
    pub corrected: bool,
    pub report: RefinementReport,
}

impl TableSeries {
    pub fn variant(&self) -> &'static str {
        if self.corrected {
            "corrected"
        } else {
            "classical"
        }
    }
}

/// A named table: the CSV file stem and its series.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: &'static str,
    pub series: Vec<TableSeries>,
}

/// Jump detection and estimation settings for the corner function.
pub const CORNER_JUMPS: JumpSource = JumpSource::Estimated {
    deriv_order: 1,
    stencil: 5,
};

fn classical_and_corrected(
    exec: Execution,
    function: &str,
    method: Method,
    levels: &[usize],
    source: JumpSource,
) -> Result<Vec<TableSeries>> {
    let base = StudyConfig::new(function, method, levels.to_vec());
    let classical = refinement_study_with(exec, &base)?;
    let corrected = refinement_study_with(exec, &base.corrected(source))?;
    Ok(vec![
        TableSeries {
            method,
            corrected: false,
            report: classical,
        },
        TableSeries {
            method,
            corrected: true,
            report: corrected,
        },
    ])
}

/// Jump discontinuity with analytic jumps: trapezoid, Simpson 1/3 and 3/8 over `n = 2^4..2^13`.
pub fn experiment1(exec: Execution) -> Result<Vec<Table>> {
    let levels = power_of_two_levels(4, 13);
    let mut tables = Vec::new();
    for (name, method) in [
        ("conv", Method::Trapezoid),
        ("s_1_3", Method::Simpson13),
        ("s3_8", Method::Simpson38),
    ] {
        let series = classical_and_corrected(exec, "exp1", method, &levels, JumpSource::Analytic)?;
        tables.push(Table { name, series });
    }
    Ok(tables)
}

/// Corner with detected location and estimated jumps, Simpson 1/3 over `n = 2^4..2^13`.
pub fn experiment2(exec: Execution) -> Result<Vec<Table>> {
    let levels = power_of_two_levels(4, 13);
    let series = classical_and_corrected(exec, "exp2", Method::Simpson13, &levels, CORNER_JUMPS)?;
    Ok(vec![Table {
        name: "s_1_3_corner",
        series,
    }])
}

/// Random breakpoints for each requested single-cell Gauss-Legendre rule.
pub fn experiment3(exec: Execution, points: &[usize], trials: usize, seed: u64) -> Result<Vec<MonteCarloReport>> {
    points
        .iter()
        .map(|&p| random_breakpoint_study_with(exec, p, trials, seed))
        .collect()
}

/// Composite 2..5-point Gauss-Legendre with analytic jumps over `n = 2^3..2^9` cells.
pub fn experiment4(exec: Execution) -> Result<Vec<Table>> {
    let levels = power_of_two_levels(3, 9);
    let mut series = Vec::new();
    for m in 2..=5 {
        series.extend(classical_and_corrected(
            exec,
            "exp4",
            Method::GaussLegendre(m),
            &levels,
            JumpSource::Analytic,
        )?);
    }
    Ok(vec![Table {
        name: "tabla_exp4",
        series,
    }])
}
