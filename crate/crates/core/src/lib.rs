//! Quadrature for piecewise-smooth integrands with one isolated discontinuity.
//!
//! A classical rule (composite trapezoid, Simpson 1/3, Simpson 3/8 or
//! Gauss-Legendre) is applied to a regularised integrand in which the jump
//! Taylor polynomial has been removed to the right of the breakpoint; the
//! closed-form integral of that polynomial is then added back. With exact
//! jumps up to the rule's exactness degree this restores the rule's
//! smooth-case order of accuracy.
//!
//! ```
//! use jumpquad::correction::corrected_integrate_analytic;
//! use jumpquad::model::{jumps_from_analytic, Interval, PiecewiseFunction};
//! use jumpquad::poly::Polynomial;
//! use jumpquad::rules::Method;
//!
//! // 0 left of 0.4, 1 right of it.
//! let f = PiecewiseFunction::from_polynomials(Polynomial::constant(0.0), Polynomial::constant(1.0), 0.4);
//! let jumps = jumps_from_analytic(&f, 1).unwrap();
//! let iv = Interval::new(0.0, 1.0).unwrap();
//! let v = corrected_integrate_analytic(&f, &jumps, iv, Method::Trapezoid, 4).unwrap();
//! assert!((v - 0.6).abs() < 1e-15);
//! ```

pub mod cli;
pub mod correction;
pub mod detect;
pub mod error;
pub mod harness;
pub mod model;
pub mod poly;
pub mod rules;

pub use error::{Error, Result};
