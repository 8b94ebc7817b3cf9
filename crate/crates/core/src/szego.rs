//! Orthogonal polynomials for the two rational weights
//! `sqrt(1-τ²)/ρ(τ)` (hard-edge, `ρ` linear) and `sqrt(1-τ²)/η(τ)`
//! (jacobi, `η` quadratic).
//!
//! With the factorisation `ρ(cos θ) = |h(e^{iθ})|²`, `h` a real polynomial
//! without zeros in the open unit disk and `h(0) > 0`, writing
//! `h(e^{iθ}) = c(θ) + i s(θ)`, the polynomials
//!
//! ```text
//! P_n(cos θ) = sqrt(2/π) [c(θ) sin((n+1)θ) - s(θ) cos((n+1)θ)] / sin θ
//! ```
//!
//! are orthonormal for the weight. For the two weights here the factor `h`
//! is known in closed form, and `P_n` collapses to a short combination of
//! second-kind Chebyshev polynomials:
//!
//! ```text
//! hard-edge:  sqrt(π(b-a))  P_n = (√b+√a) U_n + (√b-√a) U_{n-1}
//! jacobi:    2 sqrt(π(b-a)) P_n = A' U_{n-2} + B' U_{n-1} + C' U_n
//! ```
//!
//! The scaled versions on the left are the `P̂_n` used throughout the crate.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;

use libm::{cos, sin, sqrt};

use crate::chebpoly::{eval_cheb, eval_u_ext, BasisExpansion, ChebKind};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::weight::{WeightKind, WeightSpec};

/// `h(z) = h1 z + h0` for the hard-edge weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HardEdgeConstants {
    pub h1: f64,
    pub h0: f64,
}

/// `h(z) = h2 z² + h1 z + h0` for the jacobi weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiConstants {
    pub h2: f64,
    pub h1: f64,
    pub h0: f64,
}

pub fn hard_edge_constants(a: f64, b: f64) -> Result<HardEdgeConstants> {
    let w = WeightSpec::hard_edge(a, b)?;
    Ok(hard_edge_constants_unchecked(w.a(), w.b()))
}

fn hard_edge_constants_unchecked(a: f64, b: f64) -> HardEdgeConstants {
    let (sa, sb) = (sqrt(a), sqrt(b));
    let den = sqrt(2.0 * (b - a));
    HardEdgeConstants {
        h1: (sb - sa) / den,
        h0: (sb + sa) / den,
    }
}

pub fn jacobi_constants(a: f64, b: f64) -> Result<JacobiConstants> {
    let w = WeightSpec::jacobi(a, b)?;
    Ok(jacobi_constants_unchecked(w.a(), w.b()))
}

fn jacobi_constants_unchecked(a: f64, b: f64) -> JacobiConstants {
    let (sa, sb) = (sqrt(a), sqrt(b));
    let (ta, tb) = (sqrt(1.0 - a), sqrt(1.0 - b));
    let den = sqrt(2.0 * (b - a));
    JacobiConstants {
        h2: (sb - sa) * (tb - ta) / (2.0 * den),
        h1: (sqrt(b * (1.0 - b)) - sqrt(a * (1.0 - a))) / den,
        h0: (sb + sa) * (tb + ta) / (2.0 * den),
    }
}

impl HardEdgeConstants {
    /// Residuals of `2 h1 h0 = 1` and `h1² + h0² = (b+a)/(b-a)`.
    pub fn residuals(&self, a: f64, b: f64) -> [f64; 2] {
        [
            2.0 * self.h1 * self.h0 - 1.0,
            self.h1 * self.h1 + self.h0 * self.h0 - (b + a) / (b - a),
        ]
    }

    /// `(c(θ), s(θ))` with `h(e^{iθ}) = c + i s`.
    pub fn on_circle(&self, theta: f64) -> (f64, f64) {
        (self.h1 * cos(theta) + self.h0, self.h1 * sin(theta))
    }

    /// Modulus of the root `-h0/h1` (infinite when `h1 = 0`).
    pub fn root_modulus(&self) -> f64 {
        if self.h1 == 0.0 {
            f64::INFINITY
        } else {
            (self.h0 / self.h1).abs()
        }
    }
}

impl JacobiConstants {
    /// Residuals of the three coefficient equations of `|h(e^{iθ})|² = η(cos θ)`.
    pub fn residuals(&self, a: f64, b: f64) -> [f64; 3] {
        let JacobiConstants { h2, h1, h0 } = *self;
        [
            4.0 * h2 * h0 - (a - b) / 2.0,
            2.0 * (h2 + h0) * h1 - (1.0 - a - b),
            (h2 - h0) * (h2 - h0) + h1 * h1 - (a + b) * (a + b - 2.0) / (2.0 * (a - b)),
        ]
    }

    pub fn on_circle(&self, theta: f64) -> (f64, f64) {
        (
            self.h2 * cos(2.0 * theta) + self.h1 * cos(theta) + self.h0,
            self.h2 * sin(2.0 * theta) + self.h1 * sin(theta),
        )
    }

    /// Smallest modulus among the roots of `h`.
    pub fn min_root_modulus(&self) -> f64 {
        let JacobiConstants { h2, h1, h0 } = *self;
        if h2 == 0.0 {
            return if h1 == 0.0 {
                f64::INFINITY
            } else {
                (h0 / h1).abs()
            };
        }
        let disc = h1 * h1 - 4.0 * h2 * h0;
        if disc < 0.0 {
            // complex pair, |z|² = h0/h2
            sqrt((h0 / h2).abs())
        } else {
            let q = -0.5 * (h1 + libm::copysign(sqrt(disc), h1));
            let r1 = if q != 0.0 {
                (h0 / q).abs()
            } else {
                f64::INFINITY
            };
            let r2 = (q / h2).abs();
            r1.min(r2)
        }
    }
}

/// Coefficients `(A', B', C')` of `U_{n-2}, U_{n-1}, U_n` in the jacobi `P̂_n`.
fn jacobi_triple(a: f64, b: f64) -> (f64, f64, f64) {
    let (sa, sb) = (sqrt(a), sqrt(b));
    let (ta, tb) = (sqrt(1.0 - a), sqrt(1.0 - b));
    (
        (sb - sa) * (tb - ta),
        2.0 * (sqrt(b * (1.0 - b)) - sqrt(a * (1.0 - a))),
        (sb + sa) * (tb + ta),
    )
}

/// `‖P̂_n‖²` in the weighted inner product on `[a, b]`.
pub fn phat_norm_squared(weight: &WeightSpec) -> Result<f64> {
    let w = weight.b() - weight.a();
    match weight.kind() {
        WeightKind::HardEdge => Ok(PI * w * w / 2.0),
        WeightKind::Jacobi => Ok(2.0 * PI * w * w),
        _ => Err(Error::WeightMismatch),
    }
}

/// Ratio `P̂_n / P_n` between the crate's scaling and the orthonormal one.
pub fn phat_scale(weight: &WeightSpec) -> Result<f64> {
    let w = weight.b() - weight.a();
    match weight.kind() {
        WeightKind::HardEdge => Ok(sqrt(PI * w)),
        WeightKind::Jacobi => Ok(2.0 * sqrt(PI * w)),
        _ => Err(Error::WeightMismatch),
    }
}

/// `P̂_n(x)`, evaluated from the translated-Chebyshev form
///
/// ```text
/// hard-edge: 2(x + √(ab))/(√b + √a) Û_n(x) - (√b - √a) T̂_{n+1}(x)
/// jacobi:    A' Û_{n-2}(x) + B' Û_{n-1}(x) + C' Û_n(x)
/// ```
pub fn eval_phat(weight: &WeightSpec, n: usize, x: f64) -> Result<f64> {
    let (a, b) = (weight.a(), weight.b());
    let tau = weight.map().to_reference(x);
    match weight.kind() {
        WeightKind::HardEdge => {
            let (sa, sb) = (sqrt(a), sqrt(b));
            Ok(
                2.0 * (x + sqrt(a * b)) / (sb + sa) * eval_cheb(ChebKind::U, n, tau)
                    - (sb - sa) * eval_cheb(ChebKind::T, n + 1, tau),
            )
        }
        WeightKind::Jacobi => {
            let (ap, bp, cp) = jacobi_triple(a, b);
            let n = n as i64;
            Ok(ap * eval_u_ext(n - 2, tau) + bp * eval_u_ext(n - 1, tau) + cp * eval_u_ext(n, tau))
        }
        _ => Err(Error::WeightMismatch),
    }
}

/// Orthonormal `P_n(τ)` on the reference interval.
pub fn eval_orthonormal(weight: &WeightSpec, n: usize, tau: f64) -> Result<f64> {
    let x = weight.map().from_reference(tau);
    Ok(eval_phat(weight, n, x)? / phat_scale(weight)?)
}

/// Right-hand side of the trigonometric construction at `θ ∈ (0, π)`.
pub fn eval_trigonometric(weight: &WeightSpec, n: usize, theta: f64) -> Result<f64> {
    let (c, s) = match weight.kind() {
        WeightKind::HardEdge => {
            hard_edge_constants_unchecked(weight.a(), weight.b()).on_circle(theta)
        }
        WeightKind::Jacobi => jacobi_constants_unchecked(weight.a(), weight.b()).on_circle(theta),
        _ => return Err(Error::WeightMismatch),
    };
    let k = (n + 1) as f64;
    Ok(sqrt(2.0 / PI) * (c * sin(k * theta) - s * cos(k * theta)) / sin(theta))
}

/// `dP̂_n/dx` at a point strictly inside `(a, b)`.
///
/// Uses `(1-t²) U_n'(t) = (n+1) U_{n-1}(t) - n t U_n(t)` for every `U` term,
/// then the chain-rule factor `2/(b-a)`.
pub fn eval_phat_deriv(weight: &WeightSpec, n: usize, x: f64) -> Result<f64> {
    let (a, b) = (weight.a(), weight.b());
    if !(x > a && x < b) {
        return Err(Error::OutsideInterval { x, a, b });
    }
    if n == 0 {
        return Err(Error::InvalidIndex { n });
    }
    let tau = weight.map().to_reference(x);
    let one_minus = 1.0 - tau * tau;
    let chain = 2.0 / (b - a);
    let u = |k: i64| eval_u_ext(k, tau);
    let nf = n as f64;
    let ni = n as i64;
    let numerator = match weight.kind() {
        WeightKind::HardEdge => {
            let (sa, sb) = (sqrt(a), sqrt(b));
            (nf + 1.0) * ((sb - sa) * tau + sb + sa) * u(ni - 1)
                - nf * ((sb + sa) * tau + sb - sa) * u(ni)
        }
        WeightKind::Jacobi => {
            let (ap, bp, cp) = jacobi_triple(a, b);
            ap * ((nf - 1.0) * u(ni - 3) - (nf - 2.0) * tau * u(ni - 2))
                + bp * (nf * u(ni - 2) - (nf - 1.0) * tau * u(ni - 1))
                + cp * ((nf + 1.0) * u(ni - 1) - nf * tau * u(ni))
        }
        _ => return Err(Error::WeightMismatch),
    };
    Ok(chain * numerator / one_minus)
}

/// `Σ c_k P̂_k` rewritten in `U_n(τ)`, hard-edge weight.
pub(crate) fn hard_edge_to_u(c: &[f64], a: f64, b: f64) -> Vec<f64> {
    let (s, d) = (sqrt(b) + sqrt(a), sqrt(b) - sqrt(a));
    (0..c.len())
        .map(|n| s * c[n] + d * c.get(n + 1).copied().unwrap_or(0.0))
        .collect()
}

pub(crate) fn hard_edge_from_u(u: &[f64], a: f64, b: f64) -> Vec<f64> {
    let (s, d) = (sqrt(b) + sqrt(a), sqrt(b) - sqrt(a));
    let mut c = vec![0.0; u.len()];
    for n in (0..u.len()).rev() {
        let next = c.get(n + 1).copied().unwrap_or(0.0);
        c[n] = (u[n] - d * next) / s;
    }
    c
}

/// `Σ c_k P̂_k` rewritten in `U_n(τ)`, jacobi weight. `P̂_0 = C' - A'` picks up
/// the `U_{-2} = -1` term.
pub(crate) fn jacobi_to_u(c: &[f64], a: f64, b: f64) -> Vec<f64> {
    let (ap, bp, cp) = jacobi_triple(a, b);
    let at = |k: usize| c.get(k).copied().unwrap_or(0.0);
    let mut u: Vec<f64> = (0..c.len())
        .map(|n| cp * at(n) + bp * at(n + 1) + ap * at(n + 2))
        .collect();
    if let Some(u0) = u.first_mut() {
        *u0 -= ap * at(0);
    }
    u
}

pub(crate) fn jacobi_from_u(u: &[f64], a: f64, b: f64) -> Vec<f64> {
    let (ap, bp, cp) = jacobi_triple(a, b);
    let mut c = vec![0.0; u.len()];
    for n in (0..u.len()).rev() {
        let c1 = c.get(n + 1).copied().unwrap_or(0.0);
        let c2 = c.get(n + 2).copied().unwrap_or(0.0);
        let pivot = if n == 0 { cp - ap } else { cp };
        c[n] = (u[n] - bp * c1 - ap * c2) / pivot;
    }
    c
}

/// Expansion `f = Σ c_n P̂_n` for the hard-edge or jacobi weight.
pub fn expand_in_phat(f: &Poly, weight: &WeightSpec) -> Result<BasisExpansion> {
    match weight.kind() {
        WeightKind::HardEdge | WeightKind::Jacobi => Ok(crate::chebpoly::expand(f, weight)),
        _ => Err(Error::WeightMismatch),
    }
}

/// `P̂_n` as a polynomial in `x`.
pub fn phat_poly(weight: &WeightSpec, n: usize) -> Result<Poly> {
    let mut c = vec![0.0; n + 1];
    c[n] = 1.0;
    let basis = match weight.kind() {
        WeightKind::HardEdge => crate::chebpoly::Basis::SzegoHardEdge,
        WeightKind::Jacobi => crate::chebpoly::Basis::SzegoJacobi,
        _ => return Err(Error::WeightMismatch),
    };
    Ok(BasisExpansion {
        basis,
        interval: weight.map(),
        coeffs: c,
    }
    .to_poly())
}
