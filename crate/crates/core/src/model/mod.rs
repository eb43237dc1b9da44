//! Domain types shared by the rule, correction, detection and harness modules.

mod catalog;
mod pwfile;
mod smooth;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Polynomial;

pub use catalog::{Builtin, BUILTIN_NAMES};
pub use pwfile::PiecewisePolyFile;
pub use smooth::Smooth;

/// Closed interval `[a, b]` with finite endpoints and `a < b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    a: f64,
    b: f64,
}

impl Interval {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::invalid(format!(
                "interval endpoints must be finite, got [{a}, {b}]"
            )));
        }
        if a >= b {
            return Err(Error::invalid(format!("interval requires a < b, got [{a}, {b}]")));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn length(&self) -> f64 {
        self.b - self.a
    }

    pub fn contains(&self, x: f64) -> bool {
        self.a <= x && x <= self.b
    }

    /// Strictly interior point.
    pub fn contains_interior(&self, x: f64) -> bool {
        self.a < x && x < self.b
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.a, self.b)
    }
}

/// One smooth piece of a piecewise function, defined on the whole interval of use.
pub trait Branch: Send + Sync {
    fn eval(&self, x: f64) -> f64;

    /// `k`-th derivative at `x`; `None` when no evaluator of that order exists.
    /// Order 0 is the value itself.
    fn derivative(&self, k: usize, x: f64) -> Option<f64>;
}

impl Branch for Polynomial {
    fn eval(&self, x: f64) -> f64 {
        Polynomial::eval(self, x)
    }

    fn derivative(&self, k: usize, x: f64) -> Option<f64> {
        Some(self.eval_derivative(k, x))
    }
}

pub type RealFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A branch assembled from plain closures: a value evaluator and
/// `derivs[k - 1]` for the k-th derivative.
#[derive(Clone)]
pub struct FnBranch {
    value: RealFn,
    derivs: Vec<RealFn>,
}

impl FnBranch {
    pub fn new(value: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Self {
            value: Arc::new(value),
            derivs: Vec::new(),
        }
    }

    pub fn with_derivative(mut self, d: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.derivs.push(Arc::new(d));
        self
    }
}

impl Branch for FnBranch {
    fn eval(&self, x: f64) -> f64 {
        (self.value)(x)
    }

    fn derivative(&self, k: usize, x: f64) -> Option<f64> {
        match k {
            0 => Some((self.value)(x)),
            _ => self.derivs.get(k - 1).map(|d| d(x)),
        }
    }
}

/// `f(x) = f⁻(x)` for `x < x*` and `f⁺(x)` for `x >= x*`.
///
/// Both branches are defined on the full interval because the correction
/// integrates the left branch across the breakpoint.
#[derive(Clone)]
pub struct PiecewiseFunction {
    left: Arc<dyn Branch>,
    right: Arc<dyn Branch>,
    breakpoint: f64,
    max_smoothness: Option<usize>,
}

impl PiecewiseFunction {
    pub fn new(left: impl Branch + 'static, right: impl Branch + 'static, breakpoint: f64) -> Self {
        Self {
            left: Arc::new(left),
            right: Arc::new(right),
            breakpoint,
            max_smoothness: None,
        }
    }

    /// Convenience constructor from bare value closures (no derivatives).
    pub fn from_fns(
        left: impl Fn(f64) -> f64 + Send + Sync + 'static,
        right: impl Fn(f64) -> f64 + Send + Sync + 'static,
        breakpoint: f64,
    ) -> Self {
        Self::new(FnBranch::new(left), FnBranch::new(right), breakpoint)
    }

    pub fn from_polynomials(left: Polynomial, right: Polynomial, breakpoint: f64) -> Self {
        Self::new(left, right, breakpoint)
    }

    /// Declares how many continuous derivatives (`l + 1`) each piece is assumed to have.
    pub fn with_max_smoothness(mut self, count: usize) -> Self {
        self.max_smoothness = Some(count);
        self
    }

    /// Same branches, different breakpoint.
    pub fn with_breakpoint(&self, breakpoint: f64) -> Self {
        Self {
            breakpoint,
            ..self.clone()
        }
    }

    pub fn breakpoint(&self) -> f64 {
        self.breakpoint
    }

    pub fn max_smoothness(&self) -> Option<usize> {
        self.max_smoothness
    }

    pub fn left(&self) -> &dyn Branch {
        self.left.as_ref()
    }

    pub fn right(&self) -> &dyn Branch {
        self.right.as_ref()
    }

    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        eval_piecewise(self, x)
    }
}

impl fmt::Debug for PiecewiseFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PiecewiseFunction")
            .field("breakpoint", &self.breakpoint)
            .field("max_smoothness", &self.max_smoothness)
            .finish_non_exhaustive()
    }
}

/// The breakpoint belongs to the right piece.
#[inline]
pub fn eval_piecewise(f: &PiecewiseFunction, x: f64) -> f64 {
    if x < f.breakpoint {
        f.left.eval(x)
    } else {
        f.right.eval(x)
    }
}

/// Jumps `[f^(k)]`, `k = 0..=l`, at a (possibly approximate) breakpoint.
#[derive(Debug, Clone, PartialEq)]
pub struct JumpData {
    breakpoint: f64,
    jumps: Vec<f64>,
}

impl JumpData {
    pub fn new(breakpoint: f64, jumps: Vec<f64>) -> Result<Self> {
        if jumps.is_empty() {
            return Err(Error::invalid("jump vector must have at least one entry"));
        }
        if !breakpoint.is_finite() {
            return Err(Error::invalid(format!("breakpoint must be finite, got {breakpoint}")));
        }
        if let Some((k, v)) = jumps.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::invalid(format!("jump of order {k} is not finite ({v})")));
        }
        Ok(Self { breakpoint, jumps })
    }

    /// Order-`l` jump data with every entry zero.
    pub fn zeros(breakpoint: f64, order: usize) -> Self {
        Self {
            breakpoint,
            jumps: vec![0.0; order + 1],
        }
    }

    pub fn breakpoint(&self) -> f64 {
        self.breakpoint
    }

    pub fn jumps(&self) -> &[f64] {
        &self.jumps
    }

    /// The Taylor order `l` (number of entries minus one).
    pub fn order(&self) -> usize {
        self.jumps.len() - 1
    }
}

/// Jumps of the analytic derivatives at the function's own breakpoint.
pub fn jumps_from_analytic(f: &PiecewiseFunction, l: usize) -> Result<JumpData> {
    jumps_from_analytic_at(f, f.breakpoint, l)
}

/// Jumps `f⁺^(k)(x) - f⁻^(k)(x)` evaluated at an arbitrary location `x`, which
/// is how a perturbed breakpoint estimate sees the branches.
pub fn jumps_from_analytic_at(f: &PiecewiseFunction, x: f64, l: usize) -> Result<JumpData> {
    if let Some(s) = f.max_smoothness {
        if l >= s {
            return Err(Error::config(format!(
                "jump order {l} needs {} continuous derivatives per piece, function declares {s}",
                l + 1
            )));
        }
    }
    let jumps = (0..=l)
        .map(|k| {
            let r = f.right.derivative(k, x);
            let lft = f.left.derivative(k, x);
            match (r, lft) {
                (Some(r), Some(lft)) => Ok(r - lft),
                _ => Err(Error::config(format!("missing derivative evaluator of order {k}"))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    JumpData::new(x, jumps)
}

/// Samples on the uniform grid `a + i h`, `i = 0..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSamples {
    interval: Interval,
    values: Vec<f64>,
}

impl GridSamples {
    pub fn new(interval: Interval, values: Vec<f64>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::invalid(format!(
                "grid needs at least 2 nodes, got {}",
                values.len()
            )));
        }
        Ok(Self { interval, values })
    }

    /// Samples `f` at the `n + 1` grid nodes.
    pub fn sample(interval: Interval, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("grid needs n >= 1 subintervals"));
        }
        let h = interval.length() / n as f64;
        let values = (0..=n).map(|i| f(interval.a + i as f64 * h)).collect();
        Ok(Self { interval, values })
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    /// Number of subintervals.
    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn spacing(&self) -> f64 {
        self.interval.length() / self.n() as f64
    }

    pub fn node(&self, i: usize) -> f64 {
        self.interval.a + i as f64 * self.spacing()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub(crate) fn values_mut(&mut self) -> &mut [f64] {
        &mut self.values
    }
}

/// Nodes and weights on the reference interval `[-1, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    exactness_degree: usize,
}

impl QuadratureRule {
    pub fn new(nodes: Vec<f64>, weights: Vec<f64>, exactness_degree: usize) -> Result<Self> {
        if nodes.is_empty() || nodes.len() != weights.len() {
            return Err(Error::invalid("rule needs matching, non-empty node and weight lists"));
        }
        if nodes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid("rule nodes must be strictly increasing"));
        }
        if nodes.iter().any(|x| !(-1.0..=1.0).contains(x)) {
            return Err(Error::invalid("rule nodes must lie in [-1, 1]"));
        }
        if weights.iter().any(|&w| w.is_nan() || w <= 0.0) {
            return Err(Error::invalid("rule weights must be positive"));
        }
        Ok(Self {
            nodes,
            weights,
            exactness_degree,
        })
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn exactness_degree(&self) -> usize {
        self.exactness_degree
    }
}

/// One rung of a grid-refinement ladder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RefinementLevel {
    pub n: usize,
    pub error: f64,
    /// Empirical order against the previous rung; absent on the first rung
    /// and when either error is zero.
    pub order: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RefinementReport {
    pub rule_name: String,
    pub function_name: String,
    /// Reference value the errors were measured against.
    pub exact: f64,
    pub levels: Vec<RefinementLevel>,
}
