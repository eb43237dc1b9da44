//! Locating an isolated discontinuity in uniform-grid data and estimating the
//! jumps `[f^(k)]` from one-sided interpolation.
//!
//! Detection runs in two stages. The cell is flagged from divided differences
//! of order `deriv_order + 1`: a jump in the `d`-th derivative makes every
//! difference whose stencil straddles it `O(h^-1)` larger than the smooth
//! background, so the cell whose covering differences are largest relative to
//! their neighbours is taken. The position inside the cell is then refined by bisection on
//! `(p⁺ - p⁻)^(d-1)`, where `p⁻`/`p⁺` interpolate the nodes on each side;
//! when that has no sign change in the cell (a plain jump in `f`) the cell
//! midpoint is returned.

use crate::error::{Error, Result};
use crate::model::{GridSamples, JumpData};
use crate::poly::Polynomial;

/// Below this max/median ratio of divided differences the data is considered smooth.
pub const CONFIDENCE_THRESHOLD: f64 = 3.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectionResult {
    /// Index `c` of the flagged cell `[x_c, x_{c+1}]`.
    pub cell_index: usize,
    /// Estimated breakpoint, inside the closed flagged cell.
    pub x_estimate: f64,
    /// Largest divided-difference magnitude over the median one.
    pub confidence: f64,
}

/// `k`-th forward differences of the samples; entry `i` spans nodes `i..=i+k`.
fn forward_differences(values: &[f64], k: usize) -> Vec<f64> {
    let mut d = values.to_vec();
    for _ in 0..k {
        d = d.windows(2).map(|w| w[1] - w[0]).collect();
    }
    d
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len().is_multiple_of(2) {
        0.5 * (v[m - 1] + v[m])
    } else {
        v[m]
    }
}

/// Interpolant through `indices` in the scaled variable `u = (x - center) / h`.
fn local_interpolant(s: &GridSamples, indices: std::ops::Range<usize>, center: f64) -> Polynomial {
    let h = s.spacing();
    let us: Vec<f64> = indices.clone().map(|i| (s.node(i) - center) / h).collect();
    Polynomial::interpolate(&us, &s.values()[indices])
}

pub fn locate_discontinuity(s: &GridSamples, deriv_order: usize) -> Result<DetectionResult> {
    let n = s.n();
    let min_n = 2 * (deriv_order + 3);
    if n < min_n {
        return Err(Error::invalid(format!(
            "detecting a jump in derivative {deriv_order} needs n >= {min_n}, got {n}"
        )));
    }
    let k = deriv_order + 1;
    let diffs: Vec<f64> = forward_differences(s.values(), k).into_iter().map(f64::abs).collect();
    let max = diffs.iter().copied().fold(0.0, f64::max);
    let med = median(diffs.clone());
    let confidence = if max == 0.0 {
        1.0
    } else if med == 0.0 {
        f64::INFINITY
    } else {
        max / med
    };
    if confidence < CONFIDENCE_THRESHOLD {
        return Err(Error::NoClearDiscontinuity {
            confidence,
            threshold: CONFIDENCE_THRESHOLD,
        });
    }

    let cell_index = flag_cell(&diffs, n, k, max);

    let x_estimate = refine_in_cell(s, cell_index, deriv_order);
    Ok(DetectionResult {
        cell_index,
        x_estimate,
        confidence,
    })
}

/// Cell whose covering differences stand out most against the differences
/// just outside them.
///
/// Cell `c` is covered by the differences starting at `c+1-k ..= c`; its
/// background is the largest of the two differences on either side of that
/// window. Scoring against the local background instead of the global scale
/// keeps steep but smooth stretches from outranking a genuine jump.
fn flag_cell(diffs: &[f64], n: usize, k: usize, max: f64) -> usize {
    let last = diffs.len() - 1;
    let tiny = max * f64::EPSILON;
    let mut cell_index = 0;
    let mut best = f64::NEG_INFINITY;
    for c in 0..n {
        let lo = c.saturating_sub(k - 1);
        let hi = c.min(last);
        let window: f64 = diffs[lo..=hi].iter().sum();
        let left = lo.saturating_sub(2)..lo;
        let right = hi + 1..(hi + 3).min(last + 1);
        let background = diffs[left].iter().chain(&diffs[right]).copied().fold(0.0, f64::max);
        let score = if window == 0.0 {
            0.0
        } else {
            window / background.max(tiny)
        };
        if score > best {
            best = score;
            cell_index = c;
        }
    }
    cell_index
}

fn refine_in_cell(s: &GridSamples, c: usize, deriv_order: usize) -> f64 {
    let (xl, xr) = (s.node(c), s.node(c + 1));
    let midpoint = 0.5 * (xl + xr);
    let width = deriv_order + 3;
    let take_left = width.min(c + 1);
    let take_right = width.min(s.n() - c);
    if take_left < deriv_order + 2 || take_right < deriv_order + 2 {
        return midpoint;
    }
    let left = local_interpolant(s, c + 1 - take_left..c + 1, xl);
    let right = local_interpolant(s, c + 1..c + 1 + take_right, xl);
    let mut diff = right.sub(&left);
    for _ in 1..deriv_order {
        diff = diff.derivative();
    }
    // in the scaled variable the cell is [0, 1]
    let g = |u: f64| diff.eval(u);
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let (glo, ghi) = (g(lo), g(hi));
    if glo == 0.0 {
        return xl;
    }
    if ghi == 0.0 {
        return xr;
    }
    if glo.signum() == ghi.signum() {
        return midpoint;
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let gm = g(mid);
        if gm == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if gm.signum() == glo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let u = 0.5 * (lo + hi);
    (xl + u * s.spacing()).clamp(xl, xr)
}

/// Jumps `p⁺^(k)(x̃*) - p⁻^(k)(x̃*)`, `k = 0..=l`, where `p⁻`/`p⁺` interpolate the
/// `stencil` nearest nodes strictly left of / at-or-right of `x_estimate`.
pub fn estimate_jumps(s: &GridSamples, x_estimate: f64, l: usize, stencil: usize) -> Result<JumpData> {
    if stencil < l + 1 {
        return Err(Error::invalid(format!(
            "stencil {stencil} too small for jump order {l} (needs >= {})",
            l + 1
        )));
    }
    let first_right = (0..=s.n()).find(|&i| s.node(i) >= x_estimate).unwrap_or(s.n() + 1);
    let left_avail = first_right;
    let right_avail = s.n() + 1 - first_right;
    if left_avail < stencil || right_avail < stencil {
        return Err(Error::invalid(format!(
            "need {stencil} nodes on each side of {x_estimate}, have {left_avail} left and {right_avail} right"
        )));
    }
    let left = local_interpolant(s, first_right - stencil..first_right, x_estimate);
    let right = local_interpolant(s, first_right..first_right + stencil, x_estimate);
    let h = s.spacing();
    let mut fact = 1.0;
    let jumps = (0..=l)
        .map(|k| {
            if k > 0 {
                fact *= k as f64;
            }
            let c = |p: &Polynomial| p.coeffs().get(k).copied().unwrap_or(0.0);
            fact * (c(&right) - c(&left)) / h.powi(k as i32)
        })
        .collect();
    JumpData::new(x_estimate, jumps)
}
