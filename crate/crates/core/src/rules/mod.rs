//! Classical, uncorrected quadrature: composite Newton-Cotes rules on uniform
//! grids and Gauss-Legendre rules.

mod gauss;
mod newton_cotes;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{GridSamples, Interval};

pub use gauss::{
    gauss_legendre_composite, gauss_legendre_integrate, gauss_legendre_rule, legendre_poly_and_deriv, MAX_GAUSS_POINTS,
};
pub use newton_cotes::{simpson13_composite, simpson38_composite, trapezoid_composite};

/// Which classical rule to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Trapezoid,
    Simpson13,
    Simpson38,
    /// Composite Gauss-Legendre with the given number of points per cell.
    GaussLegendre(usize),
}

impl Method {
    /// Highest polynomial degree integrated exactly.
    pub fn exactness_degree(self) -> usize {
        match self {
            Method::Trapezoid => 1,
            Method::Simpson13 | Method::Simpson38 => 3,
            Method::GaussLegendre(m) => 2 * m - 1,
        }
    }

    pub fn is_newton_cotes(self) -> bool {
        !matches!(self, Method::GaussLegendre(_))
    }

    /// Smallest admissible subinterval (or cell) count `>= n`.
    pub fn admissible_n(self, n: usize) -> usize {
        let n = n.max(1);
        match self {
            Method::Trapezoid | Method::GaussLegendre(_) => n,
            Method::Simpson13 => n.max(2).next_multiple_of(2),
            Method::Simpson38 => n.max(3).next_multiple_of(3),
        }
    }

    pub fn check_n(self, n: usize) -> Result<()> {
        if n == 0 || self.admissible_n(n) != n {
            let need = match self {
                Method::Trapezoid | Method::GaussLegendre(_) => "n >= 1",
                Method::Simpson13 => "an even n >= 2",
                Method::Simpson38 => "n divisible by 3",
            };
            return Err(Error::invalid(format!("{self} needs {need}, got n = {n}")));
        }
        if let Method::GaussLegendre(m) = self {
            if !(1..=MAX_GAUSS_POINTS).contains(&m) {
                return Err(Error::invalid(format!(
                    "Gauss-Legendre points must be in 1..={MAX_GAUSS_POINTS}, got {m}"
                )));
            }
        }
        Ok(())
    }

    /// Applies a composite Newton-Cotes rule to grid data.
    pub fn apply_to_grid(self, s: &GridSamples) -> Result<f64> {
        match self {
            Method::Trapezoid => Ok(trapezoid_composite(s)),
            Method::Simpson13 => simpson13_composite(s),
            Method::Simpson38 => simpson38_composite(s),
            Method::GaussLegendre(_) => Err(Error::invalid(
                "Gauss-Legendre rules need a callable integrand, not grid samples",
            )),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Trapezoid => write!(f, "trap"),
            Method::Simpson13 => write!(f, "simpson13"),
            Method::Simpson38 => write!(f, "simpson38"),
            Method::GaussLegendre(m) => write!(f, "gl:{m}"),
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trap" | "trapezoid" => Ok(Method::Trapezoid),
            "simpson13" => Ok(Method::Simpson13),
            "simpson38" => Ok(Method::Simpson38),
            _ => {
                let m = s
                    .strip_prefix("gl:")
                    .and_then(|m| m.parse::<usize>().ok())
                    .ok_or_else(|| {
                        Error::invalid(format!(
                            "unknown method '{s}' (expected trap, simpson13, simpson38 or gl:<m>)"
                        ))
                    })?;
                if !(1..=MAX_GAUSS_POINTS).contains(&m) {
                    return Err(Error::invalid(format!(
                        "Gauss-Legendre points must be in 1..={MAX_GAUSS_POINTS}, got {m}"
                    )));
                }
                Ok(Method::GaussLegendre(m))
            }
        }
    }
}

/// Integrates a callable with `method`: Newton-Cotes rules sample it on a grid of
/// `n` subintervals, Gauss-Legendre applies the rule on `n` uniform cells.
pub fn integrate_classical(f: impl Fn(f64) -> f64, iv: Interval, method: Method, n: usize) -> Result<f64> {
    method.check_n(n)?;
    match method {
        Method::GaussLegendre(m) => {
            let rule = gauss_legendre_rule(m)?;
            gauss_legendre_composite(f, iv, n, &rule)
        }
        _ => method.apply_to_grid(&GridSamples::sample(iv, n, f)?),
    }
}
