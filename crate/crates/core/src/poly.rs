//! Dense real polynomials in the monomial basis.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Real polynomial, `coeffs[j]` multiplies `x^j`.
///
/// An empty or all-zero coefficient list is the zero polynomial, which has
/// degree 0 by convention.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly {
    coeffs: Vec<f64>,
}

impl Poly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        let coeffs = if coeffs.is_empty() { vec![0.0] } else { coeffs };
        Poly { coeffs }
    }

    /// Like [`Poly::new`] but rejects NaN and infinite coefficients.
    pub fn try_new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Poly::new(coeffs))
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![0.0] }
    }

    pub fn constant(c: f64) -> Self {
        Poly { coeffs: vec![c] }
    }

    /// The polynomial `x`.
    pub fn identity() -> Self {
        Poly {
            coeffs: vec![0.0, 1.0],
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `x^j`, zero past the stored length.
    pub fn coeff(&self, j: usize) -> f64 {
        self.coeffs.get(j).copied().unwrap_or(0.0)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|&c| c != 0.0).unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    /// Coefficients up to and including the degree.
    pub fn trimmed(&self) -> Poly {
        Poly {
            coeffs: self.coeffs[..=self.degree()].to_vec(),
        }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, &c)| j as f64 * c)
                .collect(),
        }
    }

    pub fn scale(&self, s: f64) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly {
            coeffs: (0..n).map(|j| self.coeff(j) + other.coeff(j)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(-1.0))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &p) in self.coeffs.iter().enumerate() {
            for (j, &q) in other.coeffs.iter().enumerate() {
                out[i + j] += p * q;
            }
        }
        Poly { coeffs: out }
    }

    /// `p(x) -> p(scale * x + shift)`, by Horner's scheme on polynomials.
    pub fn compose_affine(&self, scale: f64, shift: f64) -> Poly {
        let lin = Poly {
            coeffs: vec![shift, scale],
        };
        let mut acc = Poly::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin);
            acc.coeffs[0] += c;
        }
        acc.coeffs.truncate(self.coeffs.len());
        acc
    }

    /// Quotient of `(p(y) - p(x)) / (y - x)` as a polynomial in `y`.
    ///
    /// Synthetic division by `(y - x)`; the remainder `p(x)` is dropped. Exact
    /// at `y = x`, where the quotient equals `p'(x)`.
    pub fn divided_difference(&self, x: f64) -> Poly {
        let n = self.coeffs.len();
        if n <= 1 {
            return Poly::zero();
        }
        let mut q = vec![0.0; n - 1];
        let mut carry = 0.0;
        for j in (1..n).rev() {
            carry = carry * x + self.coeffs[j];
            q[j - 1] = carry;
        }
        Poly { coeffs: q }
    }
}

impl From<Vec<f64>> for Poly {
    fn from(coeffs: Vec<f64>) -> Self {
        Poly::new(coeffs)
    }
}
