//! Named test functions used by the experiments and the CLI.

use std::f64::consts::PI;

use super::{Interval, PiecewiseFunction, Smooth};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

pub const BUILTIN_NAMES: &[&str] = &[
    "exp1", "exp2", "exp4", "step", "sine", "poly2", "poly3", "poly4", "poly5",
];

/// Breakpoint used for `polyN` when no `@x` suffix is given.
const DEFAULT_POLY_BREAKPOINT: f64 = 0.3;

// Piecewise polynomials paired with the 2..5-point Gauss-Legendre rules,
// coefficients constant-first, piece degree 2n - 1.
const TABLE_POLY_LEFT: [&[f64]; 4] = [
    &[1.0, -3.0, 2.0, 1.0],
    &[1.0, 1.0, -1.0, 1.0, -3.0, 1.0],
    &[1.0, 1.0, -1.0, 1.0, -3.0, 1.0, 1.0, -1.0],
    &[1.0, 1.0, -1.0, 1.0, -3.0, 1.0, 1.0, -1.0, -2.0, 1.0],
];
const TABLE_POLY_RIGHT: [&[f64]; 4] = [
    &[-2.0, 1.0, -2.0, 2.0],
    &[3.0, -2.0, -1.0, 2.0, -1.0, 2.0],
    &[3.0, -2.0, -1.0, 2.0, -1.0, 2.0, -1.0, 2.0],
    &[3.0, -2.0, -1.0, 2.0, -1.0, 2.0, -1.0, 2.0, -1.0, 3.0],
];

/// A registered piecewise function with analytic pieces, its interval and breakpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct Builtin {
    name: String,
    interval: Interval,
    breakpoint: f64,
    left: Smooth,
    right: Smooth,
    corner: bool,
}

impl Builtin {
    /// Looks up a built-in by name. `polyN@x` selects the breakpoint of a table polynomial.
    pub fn from_name(name: &str) -> Result<Self> {
        let unit = Interval::new(0.0, 1.0)?;
        let x9 = PI / 9.0;
        let b = match name {
            // cos(pi x) + 10 | sin(pi x), jump at pi/9
            "exp1" => Self {
                name: name.into(),
                interval: unit,
                breakpoint: x9,
                left: Smooth::Cos {
                    freq: PI,
                    shift: 0.0,
                    offset: 10.0,
                },
                right: Smooth::Sin {
                    freq: PI,
                    shift: 0.0,
                    offset: 0.0,
                },
                corner: false,
            },
            // continuous, jump in the first derivative at pi/9
            "exp2" => Self {
                name: name.into(),
                interval: unit,
                breakpoint: x9,
                left: Smooth::Cos {
                    freq: PI,
                    shift: x9,
                    offset: 0.0,
                },
                right: Smooth::Sin {
                    freq: PI,
                    shift: x9,
                    offset: 1.0,
                },
                corner: true,
            },
            // exp(x^2) | sin(x) on [-2, 1], jump at 0.1
            "exp4" => Self {
                name: name.into(),
                interval: Interval::new(-2.0, 1.0)?,
                breakpoint: 0.1,
                left: Smooth::ExpSquare,
                right: Smooth::Sin {
                    freq: 1.0,
                    shift: 0.0,
                    offset: 0.0,
                },
                corner: false,
            },
            "step" => Self {
                name: name.into(),
                interval: unit,
                breakpoint: 0.4,
                left: Smooth::Poly(Polynomial::constant(0.0)),
                right: Smooth::Poly(Polynomial::constant(1.0)),
                corner: false,
            },
            // smooth control: both branches sin(pi x)
            "sine" => {
                let s = Smooth::Sin {
                    freq: PI,
                    shift: 0.0,
                    offset: 0.0,
                };
                Self {
                    name: name.into(),
                    interval: unit,
                    breakpoint: 0.5,
                    left: s.clone(),
                    right: s,
                    corner: false,
                }
            }
            _ => return Self::parse_table_poly(name),
        };
        Ok(b)
    }

    fn parse_table_poly(name: &str) -> Result<Self> {
        let unknown = || {
            Error::config(format!(
                "unknown built-in function '{name}' (known: {})",
                BUILTIN_NAMES.join(", ")
            ))
        };
        let rest = name.strip_prefix("poly").ok_or_else(unknown)?;
        let (points, x_star) = match rest.split_once('@') {
            Some((p, x)) => {
                let x: f64 = x
                    .parse()
                    .map_err(|_| Error::config(format!("bad breakpoint in '{name}'")))?;
                (p, x)
            }
            None => (rest, DEFAULT_POLY_BREAKPOINT),
        };
        let points: usize = points.parse().map_err(|_| unknown())?;
        Self::table_poly(points, x_star)
    }

    /// The table piecewise polynomial matched to the `points`-point Gauss-Legendre
    /// rule (pieces of degree `2 points - 1`) on `[-1, 1]` with breakpoint `x_star`.
    pub fn table_poly(points: usize, x_star: f64) -> Result<Self> {
        if !(2..=5).contains(&points) {
            return Err(Error::config(format!(
                "table polynomials exist for 2..=5 points, got {points}"
            )));
        }
        let interval = Interval::new(-1.0, 1.0)?;
        if !interval.contains_interior(x_star) {
            return Err(Error::invalid(format!("breakpoint {x_star} not inside {interval}")));
        }
        Ok(Self {
            name: format!("poly{points}"),
            interval,
            breakpoint: x_star,
            left: Smooth::Poly(Polynomial::new(TABLE_POLY_LEFT[points - 2].to_vec())),
            right: Smooth::Poly(Polynomial::new(TABLE_POLY_RIGHT[points - 2].to_vec())),
            corner: false,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    pub fn breakpoint(&self) -> f64 {
        self.breakpoint
    }

    pub fn left(&self) -> &Smooth {
        &self.left
    }

    pub fn right(&self) -> &Smooth {
        &self.right
    }

    /// Derivative order whose jump the detector should look for:
    /// 1 for the continuous corner function, 0 otherwise.
    pub fn detection_order(&self) -> usize {
        usize::from(self.corner)
    }

    pub fn function(&self) -> PiecewiseFunction {
        PiecewiseFunction::new(self.left.clone(), self.right.clone(), self.breakpoint)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_name_resolves() {
        for name in BUILTIN_NAMES {
            let b = Builtin::from_name(name).unwrap();
            assert!(b.interval().contains_interior(b.breakpoint()), "{name}");
        }
    }

    #[test]
    fn poly_breakpoint_suffix() {
        let b = Builtin::from_name("poly3@-0.25").unwrap();
        assert_eq!(b.breakpoint(), -0.25);
        assert_eq!(b.name(), "poly3");
        assert!(Builtin::from_name("poly7").is_err());
        assert!(Builtin::from_name("poly2@1.5").is_err());
        assert!(matches!(Builtin::from_name("nope"), Err(Error::Configuration(_))));
    }

    #[test]
    fn corner_function_is_continuous() {
        let f = Builtin::from_name("exp2").unwrap().function();
        let x = f.breakpoint();
        assert!((f.left().eval(x) - f.right().eval(x)).abs() < 1e-15);
    }
}
