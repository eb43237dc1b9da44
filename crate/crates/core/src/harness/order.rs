//! Empirical convergence orders from error ladders.

use crate::model::RefinementLevel;

/// `ln(e_prev / e_next) / ln(n_next / n_prev)`; positive when the error decays.
///
/// `None` when either error is zero (or not a positive finite number) or the
/// levels do not increase.
pub fn convergence_order(e_prev: f64, e_next: f64, n_prev: usize, n_next: usize) -> Option<f64> {
    let positive = |e: f64| e > 0.0 && e.is_finite();
    if !positive(e_prev) || !positive(e_next) || n_next <= n_prev || n_prev == 0 {
        return None;
    }
    Some((e_prev / e_next).ln() / (n_next as f64 / n_prev as f64).ln())
}

/// Attaches per-level orders to `(n, error)` pairs.
pub fn levels_with_orders(pairs: &[(usize, f64)]) -> Vec<RefinementLevel> {
    pairs
        .iter()
        .enumerate()
        .map(|(i, &(n, error))| RefinementLevel {
            n,
            error,
            order: i
                .checked_sub(1)
                .and_then(|p| convergence_order(pairs[p].1, error, pairs[p].0, n)),
        })
        .collect()
}

/// Error level under which a rung counts as roundoff-dominated.
pub fn roundoff_threshold(exact: f64) -> f64 {
    100.0 * f64::EPSILON * exact.abs().max(1.0)
}

/// Least-squares slope of `-ln(error)` against `ln(n)` over the rungs whose
/// error exceeds [`roundoff_threshold`]. `None` with fewer than two such rungs.
pub fn fitted_order(levels: &[RefinementLevel], exact: f64) -> Option<f64> {
    let floor = roundoff_threshold(exact);
    let pts: Vec<(f64, f64)> = levels
        .iter()
        .filter(|l| l.error > floor && l.error.is_finite())
        .map(|l| ((l.n as f64).ln(), -l.error.ln()))
        .collect();
    loglog_slope(&pts)
}

/// Ordinary least-squares slope of `y` on `x`.
pub fn loglog_slope(pts: &[(f64, f64)]) -> Option<f64> {
    if pts.len() < 2 {
        return None;
    }
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}
