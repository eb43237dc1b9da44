//! CSV serialisation of study results.
//!
//! Reals are written with 16 significant digits in scientific notation, which
//! does not depend on locale and round-trips every `f64` bit pattern we emit.

use std::io::Write;

use super::experiments::TableSeries;
use super::montecarlo::MonteCarloReport;
use crate::error::Result;
use crate::model::RefinementReport;

pub fn fmt_real(x: f64) -> String {
    format!("{x:.15e}")
}

fn fmt_order(o: Option<f64>) -> String {
    o.map(fmt_real).unwrap_or_default()
}

/// `level_n,error,order`, order blank where undefined.
pub fn write_report_csv<W: Write>(out: W, report: &RefinementReport) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["level_n", "error", "order"])?;
    for lv in &report.levels {
        w.write_record([lv.n.to_string(), fmt_real(lv.error), fmt_order(lv.order)])?;
    }
    w.flush()?;
    Ok(())
}

/// Several series of one table in long form: `rule,variant,level_n,error,order`.
pub fn write_table_csv<W: Write>(out: W, series: &[TableSeries]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["rule", "variant", "level_n", "error", "order"])?;
    for s in series {
        let rule = s.method.to_string();
        let variant = s.variant();
        for lv in &s.report.levels {
            w.write_record([
                rule.clone(),
                variant.to_string(),
                lv.n.to_string(),
                fmt_real(lv.error),
                fmt_order(lv.order),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}

/// `trial,x_star,err_classical,err_corrected`.
pub fn write_montecarlo_csv<W: Write>(out: W, report: &MonteCarloReport) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["trial", "x_star", "err_classical", "err_corrected"])?;
    for t in &report.trials {
        w.write_record([
            t.trial.to_string(),
            fmt_real(t.x_star),
            fmt_real(t.err_classical),
            fmt_real(t.err_corrected),
        ])?;
    }
    w.flush()?;
    Ok(())
}

/// One row per rule: `n_points,trials,max_classical,max_corrected`.
pub fn write_montecarlo_summary_csv<W: Write>(out: W, reports: &[MonteCarloReport]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n_points", "trials", "max_classical", "max_corrected"])?;
    for r in reports {
        w.write_record([
            r.n_points.to_string(),
            r.trials.len().to_string(),
            fmt_real(r.max_classical),
            fmt_real(r.max_corrected),
        ])?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::RefinementLevel;

    #[test]
    fn report_layout() {
        let report = RefinementReport {
            rule_name: "trap".into(),
            function_name: "sine".into(),
            exact: 0.0,
            levels: vec![
                RefinementLevel {
                    n: 8,
                    error: 0.25,
                    order: None,
                },
                RefinementLevel {
                    n: 16,
                    error: 0.0625,
                    order: Some(2.0),
                },
            ],
        };
        let mut buf = Vec::new();
        write_report_csv(&mut buf, &report).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "level_n,error,order\n8,2.500000000000000e-1,\n16,6.250000000000000e-2,2.000000000000000e0\n"
        );
    }

    #[test]
    fn reals_round_trip() {
        for x in [0.1, 1.0 / 3.0, 8.881784197001252e-16, 17.00766396063604] {
            assert_eq!(fmt_real(x).parse::<f64>().unwrap(), x);
        }
    }
}
