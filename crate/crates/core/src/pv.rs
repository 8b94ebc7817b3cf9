//! Direct numerical evaluation of the variance as a double integral with a
//! principal-value inner integral,
//!
//! ```text
//! V = 1/(2π²) ∫_a^b f(x)/sqrt((b-x)(x-a)) PV∫_a^b sqrt((b-y)(y-a)) f'(y)/(x-y) dy dx
//! ```
//!
//! together with the principal-value and moment identities the closed forms
//! are built on. Every PV integral is regularised by singularity subtraction:
//! for polynomial `g`,
//!
//! ```text
//! PV∫ w(t) g(t)/(τ-t) dt = -∫ w(t) q_τ(t) dt + g(τ) PV∫ w(t)/(τ-t) dt
//! ```
//!
//! where `q_τ = (g(t) - g(τ))/(t - τ)` is again a polynomial, so a
//! Gauss–Chebyshev rule of modest size integrates the first term exactly.
//! For `w = sqrt(1-t²)` the subtracted moment is `πτ`, for `w = 1/sqrt(1-t²)`
//! it is zero.

use core::f64::consts::PI;

use crate::chebpoly::{cheb_monomials, eval_cheb, AffineMap, ChebKind};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::quadrature::{QuadratureRule, RuleKind};
use crate::szego;
use crate::weight::{WeightKind, WeightSpec};

fn check_open(tau: f64) -> Result<()> {
    if tau > -1.0 && tau < 1.0 {
        Ok(())
    } else {
        Err(Error::OutsideInterval {
            x: tau,
            a: -1.0,
            b: 1.0,
        })
    }
}

fn check_positive_index(n: usize) -> Result<()> {
    if n >= 1 {
        Ok(())
    } else {
        Err(Error::InvalidIndex { n })
    }
}

fn parity_sign(n: usize) -> f64 {
    if n.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// `PV∫_{-1}^{1} w(t) g(t)/(τ-t) dt` by singularity subtraction.
pub fn pv_reference(g: &Poly, tau: f64, kind: RuleKind) -> f64 {
    let q = g.divided_difference(tau);
    let nodes = q.degree() + 8;
    let (rule, moment) = match kind {
        RuleKind::GaussChebyshevU => (QuadratureRule::chebyshev_u(nodes), PI * tau),
        RuleKind::GaussChebyshevT => (QuadratureRule::chebyshev_t(nodes), 0.0),
    };
    -rule.integrate(|t| q.eval(t)) + g.eval(tau) * moment
}

fn u_poly(n: usize) -> Poly {
    cheb_monomials(ChebKind::U, n)
        .pop()
        .unwrap_or_else(Poly::zero)
}

/// `PV∫ sqrt(1-t²) U_{n-1}(t)/(τ-t) dt = π T_n(τ)`, `n ≥ 1`, `|τ| < 1`.
pub fn pv_cauchy_u(n: usize, tau: f64) -> Result<f64> {
    check_positive_index(n)?;
    check_open(tau)?;
    Ok(PI * eval_cheb(ChebKind::T, n, tau))
}

/// Numerical companion of [`pv_cauchy_u`].
pub fn pv_cauchy_u_numeric(n: usize, tau: f64) -> Result<f64> {
    check_positive_index(n)?;
    check_open(tau)?;
    Ok(pv_reference(&u_poly(n - 1), tau, RuleKind::GaussChebyshevU))
}

/// The three moment identities over `U_n` against Chebyshev-type weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Moment {
    /// `∫ sqrt((1+t)/(1-t)) U_{n-1}(t) dt = π`, `n ≥ 1`.
    RightLeaning,
    /// `∫ sqrt((1-t)/(1+t)) U_{n-1}(t) dt = (-1)^{n-1} π`, `n ≥ 1`.
    LeftLeaning,
    /// `∫ U_n(t)/sqrt(1-t²) dt = (1 + (-1)^n) π/2`, `n ≥ 0`.
    ArcsineWeighted,
}

pub fn moment_identity(n: usize, which: Moment) -> Result<f64> {
    match which {
        Moment::RightLeaning => {
            check_positive_index(n)?;
            Ok(PI)
        }
        Moment::LeftLeaning => {
            check_positive_index(n)?;
            Ok(-parity_sign(n) * PI)
        }
        Moment::ArcsineWeighted => Ok((1.0 + parity_sign(n)) * PI / 2.0),
    }
}

/// Moment integrals evaluated by Gauss–Chebyshev quadrature, using
/// `sqrt((1±t)/(1∓t)) = (1±t)/sqrt(1-t²)`.
pub fn moment_numeric(n: usize, which: Moment) -> Result<f64> {
    let rule = QuadratureRule::chebyshev_t(n + 8);
    match which {
        Moment::RightLeaning => {
            check_positive_index(n)?;
            Ok(rule.integrate(|t| (1.0 + t) * eval_cheb(ChebKind::U, n - 1, t)))
        }
        Moment::LeftLeaning => {
            check_positive_index(n)?;
            Ok(rule.integrate(|t| (1.0 - t) * eval_cheb(ChebKind::U, n - 1, t)))
        }
        Moment::ArcsineWeighted => Ok(rule.integrate(|t| eval_cheb(ChebKind::U, n, t))),
    }
}

/// `PV∫ U_{n-1}(t) / (sqrt(1-t²)(τ-t)) dt`
/// `= π T_n(τ)/(1-τ²) - π/(2(1-τ)) - (-1)^n π/(2(1+τ))`, `n ≥ 1`.
pub fn pv_prin(n: usize, tau: f64) -> Result<f64> {
    check_positive_index(n)?;
    check_open(tau)?;
    Ok(PI * eval_cheb(ChebKind::T, n, tau) / (1.0 - tau * tau)
        - PI / (2.0 * (1.0 - tau))
        - parity_sign(n) * PI / (2.0 * (1.0 + tau)))
}

/// Numerical [`pv_prin`] through the partial-fraction split
/// `1/(1-t²) = (1/(1-t) + 1/(1+t))/2`, which reduces it to a
/// `sqrt(1-t²)`-weighted PV integral and two one-sided moments.
pub fn pv_prin_numeric(n: usize, tau: f64) -> Result<f64> {
    let cauchy = pv_cauchy_u_numeric(n, tau)?;
    let right = moment_numeric(n, Moment::RightLeaning)?;
    let left = moment_numeric(n, Moment::LeftLeaning)?;
    Ok(0.5 * (2.0 / (1.0 - tau * tau) * cauchy - right / (1.0 - tau) + left / (1.0 + tau)))
}

/// `PV∫ t U_n(t) / (sqrt(1-t²)(τ-t)) dt`
/// `= π τ T_{n+1}(τ)/(1-τ²) - π/(2(1-τ)) - (-1)^n π/(2(1+τ))`, `n ≥ 0`.
pub fn pv_next(n: usize, tau: f64) -> Result<f64> {
    check_open(tau)?;
    Ok(
        PI * tau * eval_cheb(ChebKind::T, n + 1, tau) / (1.0 - tau * tau)
            - PI / (2.0 * (1.0 - tau))
            - parity_sign(n) * PI / (2.0 * (1.0 + tau)),
    )
}

/// Numerical [`pv_next`] by direct singularity subtraction against
/// `1/sqrt(1-t²)`.
pub fn pv_next_numeric(n: usize, tau: f64) -> Result<f64> {
    check_open(tau)?;
    let g = Poly::identity().mul(&u_poly(n));
    Ok(pv_reference(&g, tau, RuleKind::GaussChebyshevT))
}

/// `PV∫_a^b sqrt((b-y)(y-a)) f'(y)/(x-y) dy` for `a < x < b`.
///
/// The subtracted term uses `PV∫_a^b sqrt((b-y)(y-a))/(x-y) dy = π(x - (a+b)/2)`.
pub fn inner_pv(fprime: &Poly, x: f64, a: f64, b: f64) -> Result<f64> {
    let map = AffineMap::new(a, b)?;
    if !(x > a && x < b) {
        return Err(Error::OutsideInterval { x, a, b });
    }
    let rule = QuadratureRule::chebyshev_u(fprime.degree() + 8);
    Ok(inner_pv_with(fprime, x, &map, &rule))
}

fn inner_pv_with(fprime: &Poly, x: f64, map: &AffineMap, rule: &QuadratureRule) -> f64 {
    let h = map.half_width();
    let q = fprime.divided_difference(x);
    let regular = -h * h * rule.integrate(|t| q.eval(map.from_reference(t)));
    regular + fprime.eval(x) * PI * (x - map.midpoint())
}

/// Node counts for [`variance_oracle_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleNodes {
    pub inner: usize,
    pub outer: usize,
}

impl OracleNodes {
    /// `deg f' + 8` inner and `4K + 16` outer nodes.
    pub fn for_degree(k: usize) -> Self {
        OracleNodes {
            inner: k.saturating_sub(1) + 8,
            outer: 4 * k + 16,
        }
    }
}

/// Numerical variance on the weight's interval. Only `(a, b)` matters; the
/// weight kind plays no role on this side.
pub fn variance_oracle(f: &Poly, weight: &WeightSpec) -> f64 {
    variance_oracle_on(f, &weight.map(), OracleNodes::for_degree(f.degree()))
}

pub fn variance_oracle_with(f: &Poly, a: f64, b: f64, nodes: OracleNodes) -> Result<f64> {
    Ok(variance_oracle_on(f, &AffineMap::new(a, b)?, nodes))
}

fn variance_oracle_on(f: &Poly, map: &AffineMap, nodes: OracleNodes) -> f64 {
    let f = f.trimmed();
    if f.degree() == 0 {
        return 0.0;
    }
    let fprime = f.derivative();
    let inner = QuadratureRule::chebyshev_u(nodes.inner);
    let outer = QuadratureRule::chebyshev_t(nodes.outer);
    let total = outer.integrate(|tau| {
        let x = map.from_reference(tau);
        f.eval(x) * inner_pv_with(&fprime, x, map, &inner)
    });
    total / (2.0 * PI * PI)
}

/// `g_n(τ)` for the hard-edge and jacobi bases, assembled from [`pv_prin`]
/// and [`pv_next`]: the PV transform of `(1-t²) P̂_n'(t)` against
/// `1/sqrt(1-t²)`, in units where the `P̂` scaling has been stripped.
fn szego_g(weight: &WeightSpec, n: usize, tau: f64) -> Result<f64> {
    let (a, b) = (weight.a(), weight.b());
    let (sa, sb) = (libm::sqrt(a), libm::sqrt(b));
    // PV of (j+1) U_{j-1} - j t U_j; vanishes identically for j <= 0.
    let block = |j: i64| -> Result<f64> {
        if j <= 0 {
            return Ok(0.0);
        }
        let j = j as usize;
        Ok((j + 1) as f64 * pv_prin(j, tau)? - j as f64 * pv_next(j, tau)?)
    };
    let nf = n as f64;
    match weight.kind() {
        WeightKind::HardEdge => {
            let shifted = (nf + 1.0) * pv_next(n - 1, tau)? - nf * pv_prin(n + 1, tau)?;
            Ok((sb - sa) * shifted + (sb + sa) * block(n as i64)?)
        }
        WeightKind::Jacobi => {
            let (ta, tb) = (libm::sqrt(1.0 - a), libm::sqrt(1.0 - b));
            let ap = (sb - sa) * (tb - ta);
            let bp = 2.0 * (libm::sqrt(b * (1.0 - b)) - libm::sqrt(a * (1.0 - a)));
            let cp = (sb + sa) * (tb + ta);
            let n = n as i64;
            Ok(ap * block(n - 2)? + bp * block(n - 1)? + cp * block(n)?)
        }
        _ => Err(Error::WeightMismatch),
    }
}

/// `R(m, n)` for the hard-edge or jacobi weight by Gauss–Chebyshev
/// quadrature of `sqrt(π(b-a))/π² ∫ P_m(τ) g_n(τ)/sqrt(1-τ²) dτ`, with `P_m`
/// orthonormal. Independent of the kernel tables.
pub fn kernel_entry_oracle(weight: &WeightSpec, m: usize, n: usize) -> Result<f64> {
    check_positive_index(m)?;
    check_positive_index(n)?;
    if !matches!(weight.kind(), WeightKind::HardEdge | WeightKind::Jacobi) {
        return Err(Error::WeightMismatch);
    }
    let rule = QuadratureRule::chebyshev_t(m + n + 8);
    let mut acc = 0.0;
    for (&tau, &w) in rule.nodes.iter().zip(&rule.weights) {
        acc += w * szego::eval_orthonormal(weight, m, tau)? * szego_g(weight, n, tau)?;
    }
    Ok(libm::sqrt(PI * (weight.b() - weight.a())) / (PI * PI) * acc)
}
