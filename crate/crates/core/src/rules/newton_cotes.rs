use crate::error::{Error, Result};
use crate::model::GridSamples;

/// `h (v0/2 + v1 + ... + v_{n-1} + vn/2)`.
pub fn trapezoid_composite(s: &GridSamples) -> f64 {
    let v = s.values();
    let n = s.n();
    let interior: f64 = v[1..n].iter().sum();
    s.spacing() * (0.5 * v[0] + interior + 0.5 * v[n])
}

/// Composite Simpson 1/3; `n` must be even.
pub fn simpson13_composite(s: &GridSamples) -> Result<f64> {
    let n = s.n();
    if !n.is_multiple_of(2) {
        return Err(Error::invalid(format!("Simpson 1/3 needs an even n, got {n}")));
    }
    let v = s.values();
    let odd: f64 = v[1..n].iter().step_by(2).sum();
    let even: f64 = v[2..n].iter().step_by(2).sum();
    Ok(s.spacing() * (v[0] + 4.0 * odd + 2.0 * even + v[n]) / 3.0)
}

/// Composite Simpson 3/8; `n` must be a multiple of 3.
pub fn simpson38_composite(s: &GridSamples) -> Result<f64> {
    let n = s.n();
    if !n.is_multiple_of(3) {
        return Err(Error::invalid(format!("Simpson 3/8 needs n divisible by 3, got {n}")));
    }
    let v = s.values();
    let (mut triple, mut double) = (0.0, 0.0);
    for (i, &x) in v.iter().enumerate().take(n).skip(1) {
        if i % 3 == 0 {
            double += x;
        } else {
            triple += x;
        }
    }
    Ok(3.0 * s.spacing() * (v[0] + 3.0 * triple + 2.0 * double + v[n]) / 8.0)
}
