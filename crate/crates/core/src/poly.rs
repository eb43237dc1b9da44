//! Dense real polynomials stored constant-first.

use std::fmt;

/// `c[0] + c[1] x + ... + c[d] x^d`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Self { coeffs: vec![c] }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Degree of the stored coefficient vector (trailing zeros included).
    /// The zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c * i as f64)
            .collect();
        Self { coeffs }
    }

    /// k-th derivative evaluated at `x`, without allocating intermediate polynomials.
    pub fn eval_derivative(&self, k: usize, x: f64) -> f64 {
        if k >= self.coeffs.len() {
            return 0.0;
        }
        // falling factorial i (i-1) ... (i-k+1)
        let mut acc = 0.0;
        for i in (k..self.coeffs.len()).rev() {
            let mut ff = 1.0;
            for m in 0..k {
                ff *= (i - m) as f64;
            }
            acc = acc * x + ff * self.coeffs[i];
        }
        acc
    }

    /// Antiderivative vanishing at 0.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(0.0);
        coeffs.extend(self.coeffs.iter().enumerate().map(|(i, &c)| c / (i + 1) as f64));
        Self { coeffs }
    }

    /// Exact integral over `[lo, hi]` by the power rule.
    pub fn integrate(&self, lo: f64, hi: f64) -> f64 {
        let anti = self.antiderivative();
        anti.eval(hi) - anti.eval(lo)
    }

    /// Multiplies in place by `(x - root)`.
    pub fn mul_linear(&mut self, root: f64) {
        self.coeffs.push(0.0);
        for i in (1..self.coeffs.len()).rev() {
            self.coeffs[i] = self.coeffs[i - 1] - root * self.coeffs[i];
        }
        self.coeffs[0] *= -root;
    }

    pub fn add_scaled(&mut self, other: &Polynomial, scale: f64) {
        if other.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), 0.0);
        }
        for (c, &o) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *c += scale * o;
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.add_scaled(other, -1.0);
        out
    }

    /// Newton-form interpolant through `(xs[i], ys[i])`, returned in monomial form.
    ///
    /// Panics if `xs` and `ys` differ in length or `xs` contains duplicates.
    pub fn interpolate(xs: &[f64], ys: &[f64]) -> Polynomial {
        assert_eq!(xs.len(), ys.len(), "interpolation data length mismatch");
        let n = xs.len();
        let mut table = ys.to_vec();
        for level in 1..n {
            for i in (level..n).rev() {
                let den = xs[i] - xs[i - level];
                assert!(den != 0.0, "duplicate interpolation node");
                table[i] = (table[i] - table[i - 1]) / den;
            }
        }
        let mut out = Polynomial::zero();
        let mut basis = Polynomial::constant(1.0);
        for (i, &c) in table.iter().enumerate() {
            out.add_scaled(&basis, c);
            basis.mul_linear(xs[i]);
        }
        out
    }
}

impl From<Vec<f64>> for Polynomial {
    fn from(coeffs: Vec<f64>) -> Self {
        Self::new(coeffs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}
