//! Reference integrals for the built-in functions.

use crate::error::{Error, Result};
use crate::model::{Builtin, Interval, Smooth};
use crate::rules::gauss_legendre_rule;

const ORACLE_POINTS: usize = 20;
const MAX_DOUBLINGS: u32 = 24;
const AGREEMENT: f64 = 1e-14;

/// Exact integral of the named built-in over `iv`.
pub fn exact_integral_oracle(name: &str, iv: Interval) -> Result<f64> {
    exact_integral(&Builtin::from_name(name)?, iv)
}

/// Exact integral of `b` over `iv`: closed-form antiderivatives on each piece
/// where available, otherwise adaptive composite Gauss-Legendre.
pub fn exact_integral(b: &Builtin, iv: Interval) -> Result<f64> {
    let xs = b.breakpoint();
    let (a, c) = (iv.a(), iv.b());
    let mut total = 0.0;
    if a < xs {
        total += piece_integral(b.left(), a, c.min(xs))?;
    }
    if c > xs {
        total += piece_integral(b.right(), a.max(xs), c)?;
    }
    Ok(total)
}

fn piece_integral(s: &Smooth, lo: f64, hi: f64) -> Result<f64> {
    match (s.antiderivative(lo), s.antiderivative(hi)) {
        (Some(fl), Some(fh)) => Ok(fh - fl),
        _ => adaptive_gauss(|x| crate::model::Branch::eval(s, x), lo, hi),
    }
}

/// Composite 20-point Gauss-Legendre, doubling the cell count until two
/// successive results agree to `1e-14` relative (absolute below magnitude 1).
pub fn adaptive_gauss(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> Result<f64> {
    adaptive_gauss_limited(f, lo, hi, MAX_DOUBLINGS)
}

fn adaptive_gauss_limited(f: impl Fn(f64) -> f64, lo: f64, hi: f64, max_doublings: u32) -> Result<f64> {
    let rule = gauss_legendre_rule(ORACLE_POINTS)?;
    let composite = |cells: usize| {
        let h = (hi - lo) / cells as f64;
        let mut sum = Neumaier::default();
        for c in 0..cells {
            let mid = lo + (c as f64 + 0.5) * h;
            for (x, w) in rule.nodes().iter().zip(rule.weights()) {
                sum.add(0.5 * h * w * f(mid + 0.5 * h * x));
            }
        }
        sum.value()
    };
    let mut cells = 1usize;
    let mut prev = composite(cells);
    for _ in 0..max_doublings {
        cells *= 2;
        let next = composite(cells);
        if (next - prev).abs() <= AGREEMENT * next.abs().max(1.0) {
            return Ok(next);
        }
        prev = next;
    }
    Err(Error::OracleFailure(format!(
        "no agreement on [{lo}, {hi}] after {max_doublings} doublings"
    )))
}

/// Compensated (Kahan-Babuska-Neumaier) running sum.
#[derive(Debug, Default, Clone, Copy)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(self) -> f64 {
        self.sum + self.comp
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn iv(a: f64, b: f64) -> Interval {
        Interval::new(a, b).unwrap()
    }

    #[test]
    fn closed_form_first_function() {
        let x9 = PI * PI / 9.0;
        let want = x9.sin() / PI + 10.0 * PI / 9.0 + (x9.cos() + 1.0) / PI;
        let got = exact_integral_oracle("exp1", iv(0.0, 1.0)).unwrap();
        assert!((got - want).abs() < 1e-14);
        assert!((got - 4.237_500_633_905_466).abs() < 1e-14);
    }

    #[test]
    fn reference_values() {
        let cases = [
            ("exp2", 1.397_776_279_517_940_5),
            ("exp4", 17.007_663_960_636_04),
            ("step", 0.6),
            ("poly2@0", 1.25),
            ("poly3@0", 1.45),
            ("poly4@0", 1.825),
            ("poly5@0", 1.691_666_666_666_666_7),
            ("poly4@0.3", 1.356_919_381_964_285_7),
        ];
        for (name, want) in cases {
            let b = Builtin::from_name(name).unwrap();
            let got = exact_integral(&b, b.interval()).unwrap();
            assert!(
                (got - want).abs() <= 2e-15 * want.abs().max(1.0),
                "{name}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn adaptive_matches_series() {
        // int_0^x e^{t^2} dt = sum x^{2k+1} / (k! (2k+1))
        let x: f64 = 1.5;
        let mut term = x;
        let mut series = 0.0;
        for k in 0..80 {
            series += term / (2 * k + 1) as f64;
            term *= x * x / (k + 1) as f64;
        }
        let got = adaptive_gauss(|t| (t * t).exp(), 0.0, x).unwrap();
        assert!((got - series).abs() < 1e-14 * series, "{got} vs {series}");
    }

    #[test]
    fn subinterval_on_one_side() {
        let got = exact_integral_oracle("step", iv(0.5, 1.0)).unwrap();
        assert_eq!(got, 0.5);
        let got = exact_integral_oracle("step", iv(0.0, 0.3)).unwrap();
        assert_eq!(got, 0.0);
    }

    #[test]
    fn nonconvergent_integrand_fails() {
        let r = adaptive_gauss_limited(|x| x.powf(-0.9), 0.0, 1.0, 6);
        assert!(matches!(r, Err(Error::OracleFailure(_))));
    }

    #[test]
    fn unknown_name_is_configuration_error() {
        assert!(matches!(
            exact_integral_oracle("zzz", iv(0.0, 1.0)),
            Err(Error::Configuration(_))
        ));
    }
}
