//! Chebyshev polynomials of the first and second kind, their translates to an
//! interval `[a, b]`, and exact change of basis from monomials.
//!
//! Everything is evaluated by the forward three-term recurrence
//!
//! ```text
//! P_n(t) = 2 t P_{n-1}(t) - P_{n-2}(t),   T_0 = U_0 = 1,  T_1 = t,  U_1 = 2t
//! ```
//!
//! The translated polynomials are `T̂_n(x) = T_n(τ(x))` and `Û_n(x) = U_n(τ(x))`
//! with `τ(x) = (2x - (a + b)) / (b - a)`.
//!
//! Second-kind polynomials are extended to negative indices by
//! `U_{-1} = 0`, `U_{-2} = -1`, which is what the recurrence run backwards
//! gives and what the three-term jacobi basis needs at `n = 0, 1`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::szego;
use crate::weight::WeightSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChebKind {
    T,
    U,
}

/// `T_n(τ)` or `U_n(τ)`. Valid for any real `τ`.
pub fn eval_cheb(kind: ChebKind, n: usize, tau: f64) -> f64 {
    let first = match kind {
        ChebKind::T => tau,
        ChebKind::U => 2.0 * tau,
    };
    match n {
        0 => 1.0,
        1 => first,
        _ => {
            let two_tau = 2.0 * tau;
            let (mut prev, mut cur) = (1.0, first);
            for _ in 2..=n {
                let next = two_tau * cur - prev;
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

/// `U_n(τ)` for `n >= -2`, with `U_{-1} = 0` and `U_{-2} = -1`.
///
/// # Panics
///
/// For `n < -2`.
pub fn eval_u_ext(n: i64, tau: f64) -> f64 {
    match n {
        -2 => -1.0,
        -1 => 0.0,
        n if n >= 0 => eval_cheb(ChebKind::U, n as usize, tau),
        _ => panic!("U_n undefined for n = {}", n),
    }
}

/// All of `P_0(τ) .. P_n(τ)` in one recurrence pass.
pub fn eval_cheb_all(kind: ChebKind, n: usize, tau: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(1.0);
    if n >= 1 {
        out.push(match kind {
            ChebKind::T => tau,
            ChebKind::U => 2.0 * tau,
        });
    }
    for j in 2..=n {
        let v = 2.0 * tau * out[j - 1] - out[j - 2];
        out.push(v);
    }
    out
}

/// Monomial coefficients (in `τ`) of `P_0 .. P_n`.
pub fn cheb_monomials(kind: ChebKind, n: usize) -> Vec<Poly> {
    let mut out: Vec<Poly> = Vec::with_capacity(n + 1);
    out.push(Poly::constant(1.0));
    if n >= 1 {
        out.push(match kind {
            ChebKind::T => Poly::new(vec![0.0, 1.0]),
            ChebKind::U => Poly::new(vec![0.0, 2.0]),
        });
    }
    let two_tau = Poly::new(vec![0.0, 2.0]);
    for j in 2..=n {
        let next = two_tau.mul(&out[j - 1]).sub(&out[j - 2]);
        out.push(next);
    }
    out
}

/// Affine map of `[a, b]` onto the reference interval `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineMap {
    a: f64,
    b: f64,
}

impl AffineMap {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(Error::InvalidInterval { kind: None, a, b });
        }
        Ok(AffineMap { a, b })
    }

    pub(crate) fn new_unchecked(a: f64, b: f64) -> Self {
        AffineMap { a, b }
    }

    /// The reference interval itself.
    pub fn reference() -> Self {
        AffineMap { a: -1.0, b: 1.0 }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn half_width(&self) -> f64 {
        (self.b - self.a) / 2.0
    }

    pub fn midpoint(&self) -> f64 {
        (self.a + self.b) / 2.0
    }

    /// `τ = (2x - (b + a)) / (b - a)`.
    pub fn to_reference(&self, x: f64) -> f64 {
        (2.0 * x - (self.b + self.a)) / (self.b - self.a)
    }

    /// `x = ((b - a)/2) τ + (b + a)/2`.
    pub fn from_reference(&self, tau: f64) -> f64 {
        self.half_width() * tau + self.midpoint()
    }

    /// `f(x)` rewritten as a polynomial in `τ`.
    pub fn pull_back(&self, f: &Poly) -> Poly {
        f.compose_affine(self.half_width(), self.midpoint())
    }

    /// `g(τ)` rewritten as a polynomial in `x`.
    pub fn push_forward(&self, g: &Poly) -> Poly {
        let w = self.b - self.a;
        g.compose_affine(2.0 / w, -(self.b + self.a) / w)
    }
}

/// `T̂_n(x)` or `Û_n(x)` on the map's interval.
pub fn eval_translated(kind: ChebKind, n: usize, x: f64, map: &AffineMap) -> f64 {
    eval_cheb(kind, n, map.to_reference(x))
}

/// Which family of polynomials a [`BasisExpansion`] refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// `T̂_n`, orthogonal for the arcsine weight.
    ChebT,
    /// `Û_n`, orthogonal for the semicircle weight.
    ChebU,
    /// `P̂_n` for the hard-edge weight.
    SzegoHardEdge,
    /// `P̂_n` for the jacobi weight.
    SzegoJacobi,
}

/// Coefficients `c_0 .. c_K` of a polynomial in one of the orthogonal bases.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisExpansion {
    pub basis: Basis,
    pub interval: AffineMap,
    pub coeffs: Vec<f64>,
}

impl BasisExpansion {
    /// `K`, the number of non-constant basis terms.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficients `c_1 .. c_K`.
    pub fn nonconstant(&self) -> &[f64] {
        self.coeffs.get(1..).unwrap_or(&[])
    }

    /// Coefficients in the (untranslated) `U_n(τ)` basis, for the bases built
    /// out of second-kind polynomials.
    fn u_coeffs(&self) -> Option<Vec<f64>> {
        let (a, b) = (self.interval.a(), self.interval.b());
        match self.basis {
            Basis::ChebT => None,
            Basis::ChebU => Some(self.coeffs.clone()),
            Basis::SzegoHardEdge => Some(szego::hard_edge_to_u(&self.coeffs, a, b)),
            Basis::SzegoJacobi => Some(szego::jacobi_to_u(&self.coeffs, a, b)),
        }
    }

    /// Reconstructs the polynomial in `τ`.
    pub fn to_reference_poly(&self) -> Poly {
        let (kind, c) = match self.u_coeffs() {
            Some(u) => (ChebKind::U, u),
            None => (ChebKind::T, self.coeffs.clone()),
        };
        if c.is_empty() {
            return Poly::zero();
        }
        cheb_monomials(kind, c.len() - 1)
            .iter()
            .zip(&c)
            .fold(Poly::zero(), |acc, (p, &ck)| acc.add(&p.scale(ck)))
    }

    /// Reconstructs the polynomial in `x` (monomial basis).
    pub fn to_poly(&self) -> Poly {
        self.interval.push_forward(&self.to_reference_poly())
    }

    /// `Σ c_n · basis_n(x)` by recurrence.
    pub fn eval(&self, x: f64) -> f64 {
        if self.coeffs.is_empty() {
            return 0.0;
        }
        let tau = self.interval.to_reference(x);
        let (kind, c) = match self.u_coeffs() {
            Some(u) => (ChebKind::U, u),
            None => (ChebKind::T, self.coeffs.clone()),
        };
        eval_cheb_all(kind, c.len() - 1, tau)
            .iter()
            .zip(&c)
            .map(|(p, ck)| p * ck)
            .sum()
    }
}

/// Solves `g = Σ c_n P_n` for `c`, where `P_n` has exact degree `n`.
pub(crate) fn triangular_solve(g: &Poly, basis: &[Poly]) -> Vec<f64> {
    let k = basis.len() - 1;
    let mut rem: Vec<f64> = (0..=k).map(|j| g.coeff(j)).collect();
    let mut c = vec![0.0; k + 1];
    for n in (0..=k).rev() {
        let p = basis[n].coeffs();
        let cn = rem[n] / p[n];
        c[n] = cn;
        for (j, &pj) in p.iter().enumerate().take(n + 1) {
            rem[j] -= cn * pj;
        }
    }
    c
}

/// Reference-interval coefficients of `f` in `T_n(τ)` or `U_n(τ)`, `n = 0..=K`.
pub(crate) fn reference_cheb_coeffs(g: &Poly, kind: ChebKind) -> Vec<f64> {
    let k = g.degree();
    triangular_solve(g, &cheb_monomials(kind, k))
}

/// Expands `f` in `T̂_n` or `Û_n` on the map's interval.
pub fn monomial_to_cheb(f: &Poly, kind: ChebKind, map: &AffineMap) -> Result<BasisExpansion> {
    let map = AffineMap::new(map.a(), map.b())?;
    let g = map.pull_back(&f.trimmed());
    let coeffs = reference_cheb_coeffs(&g, kind);
    Ok(BasisExpansion {
        basis: match kind {
            ChebKind::T => Basis::ChebT,
            ChebKind::U => Basis::ChebU,
        },
        interval: map,
        coeffs,
    })
}

/// `f'` in the `Û` basis given `f` in the `T̂` basis:
/// the coefficient of `Û_{n-1}` is `(2/(b-a)) n c_n`.
///
/// # Panics
///
/// If the input is not a `T̂` expansion.
pub fn derivative_in_u(c: &BasisExpansion) -> BasisExpansion {
    assert_eq!(
        c.basis,
        Basis::ChebT,
        "derivative_in_u expects a T̂ expansion"
    );
    let s = 2.0 / (c.interval.b() - c.interval.a());
    let coeffs = c
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, &cn)| s * n as f64 * cn)
        .collect();
    BasisExpansion {
        basis: Basis::ChebU,
        interval: c.interval,
        coeffs,
    }
}

/// Expansion of `f` in the orthogonal basis belonging to `weight`.
pub fn expand(f: &Poly, weight: &WeightSpec) -> BasisExpansion {
    use crate::weight::WeightKind::*;
    let map = weight.map();
    let g = map.pull_back(&f.trimmed());
    let (basis, coeffs) = match weight.kind() {
        Arcsine => (Basis::ChebT, reference_cheb_coeffs(&g, ChebKind::T)),
        Semicircle => (Basis::ChebU, reference_cheb_coeffs(&g, ChebKind::U)),
        HardEdge => (
            Basis::SzegoHardEdge,
            szego::hard_edge_from_u(
                &reference_cheb_coeffs(&g, ChebKind::U),
                weight.a(),
                weight.b(),
            ),
        ),
        Jacobi => (
            Basis::SzegoJacobi,
            szego::jacobi_from_u(
                &reference_cheb_coeffs(&g, ChebKind::U),
                weight.a(),
                weight.b(),
            ),
        ),
    };
    BasisExpansion {
        basis,
        interval: map,
        coeffs,
    }
}
