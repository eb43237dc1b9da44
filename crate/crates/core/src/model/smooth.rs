//! Closed-form smooth pieces used by the built-in test functions.

use super::Branch;
use crate::poly::Polynomial;

/// A smooth analytic function with derivatives of every order.
#[derive(Debug, Clone, PartialEq)]
pub enum Smooth {
    Poly(Polynomial),
    /// `offset + sin(freq (x - shift))`
    Sin {
        freq: f64,
        shift: f64,
        offset: f64,
    },
    /// `offset + cos(freq (x - shift))`
    Cos {
        freq: f64,
        shift: f64,
        offset: f64,
    },
    /// `exp(x^2)`
    ExpSquare,
}

impl Smooth {
    /// Antiderivative when one exists in closed form.
    pub fn antiderivative(&self, x: f64) -> Option<f64> {
        match self {
            Smooth::Poly(p) => Some(p.antiderivative().eval(x)),
            Smooth::Sin { freq, shift, offset } => Some(offset * x - (freq * (x - shift)).cos() / freq),
            Smooth::Cos { freq, shift, offset } => Some(offset * x + (freq * (x - shift)).sin() / freq),
            Smooth::ExpSquare => None,
        }
    }

    fn trig_derivative(is_sin: bool, freq: f64, arg: f64, k: usize) -> f64 {
        // d/dx sin = cos, d/dx cos = -sin; cycle of length 4.
        let (s, c) = arg.sin_cos();
        let phase = if is_sin { k % 4 } else { (k + 1) % 4 };
        let base = match phase {
            0 => s,
            1 => c,
            2 => -s,
            _ => -c,
        };
        freq.powi(k as i32) * base
    }
}

/// `d^k/dx^k exp(x^2) = q_k(x) exp(x^2)` with `q_{k+1} = q_k' + 2x q_k`.
fn exp_square_factor(k: usize) -> Polynomial {
    let mut q = Polynomial::constant(1.0);
    for _ in 0..k {
        let mut two_x_q = q.clone();
        two_x_q.mul_linear(0.0);
        let mut next = q.derivative();
        next.add_scaled(&two_x_q, 2.0);
        q = next;
    }
    q
}

impl Branch for Smooth {
    fn eval(&self, x: f64) -> f64 {
        match self {
            Smooth::Poly(p) => p.eval(x),
            Smooth::Sin { freq, shift, offset } => offset + (freq * (x - shift)).sin(),
            Smooth::Cos { freq, shift, offset } => offset + (freq * (x - shift)).cos(),
            Smooth::ExpSquare => (x * x).exp(),
        }
    }

    fn derivative(&self, k: usize, x: f64) -> Option<f64> {
        if k == 0 {
            return Some(self.eval(x));
        }
        Some(match self {
            Smooth::Poly(p) => p.eval_derivative(k, x),
            Smooth::Sin { freq, shift, .. } => Self::trig_derivative(true, *freq, freq * (x - shift), k),
            Smooth::Cos { freq, shift, .. } => Self::trig_derivative(false, *freq, freq * (x - shift), k),
            Smooth::ExpSquare => exp_square_factor(k).eval(x) * (x * x).exp(),
        })
    }
}
