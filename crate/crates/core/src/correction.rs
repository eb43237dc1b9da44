//! Jump-correction terms.
//!
//! With the jumps `[f^(k)]` at the breakpoint `x*`, the jump Taylor polynomial
//!
//! ```text
//! T(x) = sum_{k=0}^{l} [f^(k)] / k! (x - x*)^k
//! ```
//!
//! expresses `f⁺ - f⁻` near `x*`. The regularised function `f̃ = f - T·1[x >= x*]`
//! is `C^l` across the breakpoint, so a classical rule keeps its smooth-case
//! accuracy on it; the missing piece is the exact tail integral of `T` over
//! `[x*, b]`:
//!
//! ```text
//! ∫_{x*}^{b} T = sum_{k=0}^{l} [f^(k)] / (k+1)! (b - x*)^{k+1}
//! ```
//!
//! Note the index: integrating `T` term by term gives `(k+1)!` and `(b - x*)^{k+1}`
//! for the `k`-th jump. This is what is implemented and what the brute-force tests check.

use crate::error::{Error, Result};
use crate::model::{GridSamples, Interval, JumpData, PiecewiseFunction};
use crate::rules::{gauss_legendre_composite, gauss_legendre_rule, Method};

/// `[f^(k)] / k!` for `k = 0..=l`.
fn taylor_coefficients(j: &JumpData) -> Vec<f64> {
    let mut fact = 1.0;
    j.jumps()
        .iter()
        .enumerate()
        .map(|(k, &v)| {
            if k > 0 {
                fact *= k as f64;
            }
            v / fact
        })
        .collect()
}

/// Evaluates the jump Taylor polynomial at `x` by Horner's scheme.
pub fn jump_taylor_eval(j: &JumpData, x: f64) -> f64 {
    let t = x - j.breakpoint();
    taylor_coefficients(j).iter().rev().fold(0.0, |acc, &c| acc * t + c)
}

/// Exact integral of the jump Taylor polynomial over `[x*, b]`.
pub fn correction_tail_integral(j: &JumpData, b: f64) -> Result<f64> {
    let t = b - j.breakpoint();
    if t < 0.0 {
        return Err(Error::invalid(format!(
            "tail integral needs b >= x*, got b = {b} < {}",
            j.breakpoint()
        )));
    }
    let inner = taylor_coefficients(j)
        .iter()
        .enumerate()
        .rev()
        .fold(0.0, |acc, (k, &c)| acc * t + c / (k + 1) as f64);
    Ok(inner * t)
}

/// Jump data bound to an integration interval, with its tail integral cached.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrectionContext {
    jumps: JumpData,
    interval: Interval,
    coeffs: Vec<f64>,
    tail: f64,
}

impl CorrectionContext {
    pub fn new(jumps: JumpData, interval: Interval) -> Result<Self> {
        if !interval.contains_interior(jumps.breakpoint()) {
            return Err(Error::invalid(format!(
                "breakpoint {} must lie strictly inside {interval}",
                jumps.breakpoint()
            )));
        }
        let tail = correction_tail_integral(&jumps, interval.b())?;
        let coeffs = taylor_coefficients(&jumps);
        Ok(Self {
            jumps,
            interval,
            coeffs,
            tail,
        })
    }

    pub fn jumps(&self) -> &JumpData {
        &self.jumps
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    /// `∫_{x*}^{b} C(x) dx`.
    pub fn tail(&self) -> f64 {
        self.tail
    }

    /// Amount removed from `f` at `x`: `T(x)` at or right of the breakpoint, 0 left of it.
    #[inline]
    pub fn removed_at(&self, x: f64) -> f64 {
        let t = x - self.jumps.breakpoint();
        if t < 0.0 {
            0.0
        } else {
            self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
        }
    }

    /// `f(x) - T(x)·1[x >= x*]`, leaving the left side untouched.
    #[inline]
    pub fn regularize(&self, x: f64, fx: f64) -> f64 {
        if x < self.jumps.breakpoint() {
            fx
        } else {
            fx - self.removed_at(x)
        }
    }
}

/// The regularised function `f̃`: `f⁻` left of the (estimated) breakpoint,
/// `f - T` at and right of it.
///
/// The split uses `j.breakpoint()`, so a perturbed estimate `x̃*` sees the
/// true `f` on both sides of it; with `x̃* = x*` this is `f⁺ - T` on the right.
pub fn build_regularized<'a>(f: &'a PiecewiseFunction, j: &'a JumpData) -> impl Fn(f64) -> f64 + Sync + 'a {
    let coeffs = taylor_coefficients(j);
    let xs = j.breakpoint();
    move |x| {
        let fx = f.eval(x);
        if x < xs {
            fx
        } else {
            let t = x - xs;
            fx - coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c)
        }
    }
}

/// Corrected integral of a callable: the classical `method` applied to `f̃`
/// over `iv` (grid of `n` subintervals, or `n` Gauss-Legendre cells) plus the
/// closed-form tail.
pub fn corrected_integrate_analytic(
    f: &PiecewiseFunction,
    j: &JumpData,
    iv: Interval,
    method: Method,
    n: usize,
) -> Result<f64> {
    method.check_n(n)?;
    let ctx = CorrectionContext::new(j.clone(), iv)?;
    let regularized = |x: f64| ctx.regularize(x, f.eval(x));
    let base = match method {
        Method::GaussLegendre(m) => {
            let rule = gauss_legendre_rule(m)?;
            gauss_legendre_composite(regularized, iv, n, &rule)?
        }
        _ => method.apply_to_grid(&GridSamples::sample(iv, n, regularized)?)?,
    };
    Ok(base + ctx.tail())
}

/// Copy of `s` with `T(x_i)` subtracted at every node `x_i >= x*`.
pub fn regularize_samples(s: &GridSamples, j: &JumpData) -> Result<GridSamples> {
    let ctx = CorrectionContext::new(j.clone(), s.interval())?;
    Ok(regularize_with(s, &ctx))
}

fn regularize_with(s: &GridSamples, ctx: &CorrectionContext) -> GridSamples {
    let mut out = s.clone();
    for i in 0..=s.n() {
        let x = s.node(i);
        let v = &mut out.values_mut()[i];
        *v = ctx.regularize(x, *v);
    }
    out
}

/// One corrected Newton-Cotes value from grid data.
pub fn corrected_grid_rule(s: &GridSamples, j: &JumpData, method: Method) -> Result<f64> {
    if !method.is_newton_cotes() {
        return Err(Error::invalid(format!("{method} cannot be applied to grid samples")));
    }
    let ctx = CorrectionContext::new(j.clone(), s.interval())?;
    Ok(method.apply_to_grid(&regularize_with(s, &ctx))? + ctx.tail())
}

/// Corrected trapezoid, Simpson 1/3 and Simpson 3/8 values from the same grid.
/// The Simpson entries are `None` when `n` does not meet their divisibility.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridCorrection {
    pub trapezoid: f64,
    pub simpson13: Option<f64>,
    pub simpson38: Option<f64>,
}

pub fn corrected_integrate_grid(s: &GridSamples, j: &JumpData) -> Result<GridCorrection> {
    let ctx = CorrectionContext::new(j.clone(), s.interval())?;
    let reg = regularize_with(s, &ctx);
    let tail = ctx.tail();
    let trapezoid = Method::Trapezoid.apply_to_grid(&reg)? + tail;
    let simpson13 = Method::Simpson13.apply_to_grid(&reg).ok().map(|v| v + tail);
    let simpson38 = Method::Simpson38.apply_to_grid(&reg).ok().map(|v| v + tail);
    Ok(GridCorrection {
        trapezoid,
        simpson13,
        simpson38,
    })
}

/// Bound on the truncation error left after the correction of order `l`:
/// `(sup|f⁻^(l+1)| + sup|f⁺^(l+1)|) / (l+1)! (b - x*)^(l+2)`.
pub fn tail_truncation_bound(sup_left: f64, sup_right: f64, l: usize, xstar: f64, b: f64) -> f64 {
    let fact: f64 = (1..=l + 1).map(|k| k as f64).product();
    (sup_left + sup_right) / fact * (b - xstar).powi(l as i32 + 2)
}
