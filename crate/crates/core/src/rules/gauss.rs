use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::model::{Interval, QuadratureRule};

pub const MAX_GAUSS_POINTS: usize = 64;

const NEWTON_TOL: f64 = 1e-15;
const NEWTON_MAX_ITER: usize = 100;

/// `(P_n(x), P_n'(x))` from the three-term recurrence
/// `(k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}` and
/// `P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)`.
pub fn legendre_poly_and_deriv(n: usize, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let (mut prev, mut cur) = (1.0, x);
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    let nf = n as f64;
    let deriv = if x.abs() == 1.0 {
        // P_n'(±1) = (±1)^(n-1) n (n+1) / 2
        let sign = if x > 0.0 || n % 2 == 1 { 1.0 } else { -1.0 };
        sign * nf * (nf + 1.0) / 2.0
    } else {
        nf * (x * cur - prev) / (x * x - 1.0)
    };
    (cur, deriv)
}

/// `n`-point Gauss-Legendre rule: nodes are the roots of `P_n` found by Newton
/// iteration from Chebyshev-like guesses, weights `2 / ((1 - x^2) P_n'(x)^2)`.
/// Nodes are returned ascending and exactly antisymmetric.
pub fn gauss_legendre_rule(n: usize) -> Result<QuadratureRule> {
    if !(1..=MAX_GAUSS_POINTS).contains(&n) {
        return Err(Error::invalid(format!(
            "Gauss-Legendre points must be in 1..={MAX_GAUSS_POINTS}, got {n}"
        )));
    }
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 1..=n / 2 {
        let mut x = (PI * (i as f64 - 0.25) / (nf + 0.5)).cos();
        for _ in 0..NEWTON_MAX_ITER {
            let (p, dp) = legendre_poly_and_deriv(n, x);
            let dx = p / dp;
            x -= dx;
            if dx.abs() < NEWTON_TOL {
                break;
            }
        }
        let (_, dp) = legendre_poly_and_deriv(n, x);
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[n - i] = x;
        nodes[i - 1] = -x;
        weights[n - i] = w;
        weights[i - 1] = w;
    }
    if n % 2 == 1 {
        let (_, dp) = legendre_poly_and_deriv(n, 0.0);
        nodes[n / 2] = 0.0;
        weights[n / 2] = 2.0 / (dp * dp);
    }
    QuadratureRule::new(nodes, weights, 2 * n - 1)
}

/// Applies `rule` on `iv` through the affine map `x = mid + half * t`.
pub fn gauss_legendre_integrate(f: impl Fn(f64) -> f64, iv: Interval, rule: &QuadratureRule) -> f64 {
    integrate_cell(&f, iv.a(), iv.b(), rule)
}

#[inline]
fn integrate_cell(f: &impl Fn(f64) -> f64, a: f64, b: f64, rule: &QuadratureRule) -> f64 {
    let half = 0.5 * (b - a);
    let mid = a + half;
    let sum: f64 = rule
        .nodes()
        .iter()
        .zip(rule.weights())
        .map(|(&t, &w)| w * f(mid + half * t))
        .sum();
    half * sum
}

/// Sum of `gauss_legendre_integrate` over `cells` uniform subintervals of `iv`.
pub fn gauss_legendre_composite(
    f: impl Fn(f64) -> f64,
    iv: Interval,
    cells: usize,
    rule: &QuadratureRule,
) -> Result<f64> {
    if cells == 0 {
        return Err(Error::invalid("composite Gauss-Legendre needs at least one cell"));
    }
    let h = iv.length() / cells as f64;
    let total = (0..cells)
        .map(|c| {
            let a = iv.a() + c as f64 * h;
            let b = if c + 1 == cells { iv.b() } else { a + h };
            integrate_cell(&f, a, b, rule)
        })
        .sum();
    Ok(total)
}
