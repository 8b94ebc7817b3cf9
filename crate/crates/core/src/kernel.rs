//! Closed-form variance of `tr f(M)`.
//!
//! Expanding `f = Σ c_n φ_n` in the orthogonal basis `φ_n` of the weight,
//! the variance is a quadratic form in `c_1 .. c_K`:
//!
//! ```text
//! V = prefactor · Σ_{m,n ≥ 1} c_m c_n R(m, n)
//! ```
//!
//! with `R = diag(n)` and prefactor `1/4` for the arcsine weight, and the
//! integer / algebraic tables below for the others. An upper-triangular
//! `T` with `c = T d` brings it to `V = Σ n d_n²`.

use alloc::vec::Vec;

use libm::sqrt;

use crate::chebpoly::{self, Basis, BasisExpansion};
use crate::error::{Error, Result};
use crate::linalg::{invert_unit_lower, ldl, solve_upper, Matrix};
use crate::poly::Poly;
use crate::weight::{WeightKind, WeightSpec};

/// Default cap on the degree of `f`.
pub const DEFAULT_MAX_DEGREE: usize = 64;

/// Relative tolerance between the quadratic form and `Σ n d_n²`.
pub const PATH_TOLERANCE: f64 = 1e-10;

/// Semicircle-weight kernel. Indices start at 1.
pub fn semicircle_entry(m: usize, n: usize) -> f64 {
    debug_assert!(m >= 1 && n >= 1);
    if m % 2 != n % 2 {
        return 0.0;
    }
    let k = m.min(n) as f64;
    if m.is_multiple_of(2) {
        k * k + 2.0 * k
    } else {
        (k + 1.0) * (k + 1.0)
    }
}

/// Hard-edge kernel for `0 < a < b`.
pub fn hard_edge_entry(m: usize, n: usize, a: f64, b: f64) -> Result<f64> {
    let w = WeightSpec::hard_edge(a, b)?;
    Ok(hard_edge_entry_unchecked(m, n, w.a(), w.b()))
}

fn hard_edge_entry_unchecked(m: usize, n: usize, a: f64, b: f64) -> f64 {
    debug_assert!(m >= 1 && n >= 1);
    let k = m.min(n) as f64;
    if m % 2 != n % 2 {
        return (b - a) * (k * k + k);
    }
    let s = sqrt(b) + sqrt(a);
    let base = (b + a) * k * k + s * s * k;
    if m.is_multiple_of(2) {
        base
    } else {
        base + 2.0 * sqrt(a * b)
    }
}

/// Jacobi kernel for `0 < a < b < 1`.
pub fn jacobi_entry(m: usize, n: usize, a: f64, b: f64) -> Result<f64> {
    let w = WeightSpec::jacobi(a, b)?;
    Ok(jacobi_entry_unchecked(m, n, w.a(), w.b()))
}

fn jacobi_entry_unchecked(m: usize, n: usize, a: f64, b: f64) -> f64 {
    debug_assert!(m >= 1 && n >= 1);
    let k = m.min(n) as f64;
    let q = sqrt((1.0 - a) * (1.0 - b));
    let r = sqrt(a * b);
    if m % 2 != n % 2 {
        return 2.0 * k * (b - a) * (q - r - k * a - k * b + k);
    }
    let quad = -2.0 * k * r * (a + b - 2.0) - 2.0 * k * k * (a * a + b * b - a - b);
    let mut v = if m.is_multiple_of(2) {
        2.0 * k * (a + b) * q + quad
    } else {
        2.0 * q * (k * a + k * b + 2.0 * r) + quad
    };
    // diagonal correction only at m = n
    if m == n {
        v += k * (a - b) * (a - b);
    }
    v
}

/// Symmetric `K × K` kernel `R(m, n)`, `m, n = 1..K`, and its prefactor.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelMatrix {
    pub weight: WeightSpec,
    pub entries: Matrix,
    pub prefactor: f64,
}

impl KernelMatrix {
    pub fn new(weight: &WeightSpec, k: usize) -> Self {
        let (a, b) = (weight.a(), weight.b());
        let entries = match weight.kind() {
            WeightKind::Arcsine => {
                Matrix::from_fn(k, |i, j| if i == j { (i + 1) as f64 } else { 0.0 })
            }
            WeightKind::Semicircle => Matrix::from_fn(k, |i, j| semicircle_entry(i + 1, j + 1)),
            WeightKind::HardEdge => {
                Matrix::from_fn(k, |i, j| hard_edge_entry_unchecked(i + 1, j + 1, a, b))
            }
            WeightKind::Jacobi => {
                Matrix::from_fn(k, |i, j| jacobi_entry_unchecked(i + 1, j + 1, a, b))
            }
        };
        KernelMatrix {
            weight: *weight,
            entries,
            prefactor: weight.kind().prefactor(),
        }
    }

    pub fn order(&self) -> usize {
        self.entries.dim()
    }

    /// `prefactor · R`.
    pub fn scaled(&self) -> Matrix {
        self.entries.scale(self.prefactor)
    }
}

/// `(1/4) Σ n c_n²` for a `T̂` expansion.
pub fn variance_arcsine(c: &BasisExpansion) -> Result<f64> {
    if c.basis != Basis::ChebT {
        return Err(Error::WeightMismatch);
    }
    Ok(0.25
        * c.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, cn)| n as f64 * cn * cn)
            .sum::<f64>())
}

fn basis_for(kind: WeightKind) -> Basis {
    match kind {
        WeightKind::Arcsine => Basis::ChebT,
        WeightKind::Semicircle => Basis::ChebU,
        WeightKind::HardEdge => Basis::SzegoHardEdge,
        WeightKind::Jacobi => Basis::SzegoJacobi,
    }
}

/// `prefactor · Σ_{m,n=1}^{K} c_m c_n R(m,n)`. `c_0` is ignored and missing
/// high coefficients count as zero.
pub fn variance_quadratic(c: &BasisExpansion, r: &KernelMatrix) -> Result<f64> {
    if c.basis != basis_for(r.weight.kind()) || c.interval != r.weight.map() {
        return Err(Error::WeightMismatch);
    }
    let k = r.order();
    let cc: Vec<f64> = (1..=k)
        .map(|n| c.coeffs.get(n).copied().unwrap_or(0.0))
        .collect();
    let rc = r.entries.matvec(&cc);
    Ok(r.prefactor * cc.iter().zip(&rc).map(|(x, y)| x * y).sum::<f64>())
}

/// Upper-triangular `T` with `c = T d` and `Tᵀ (prefactor R) T = diag(1..K)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalTransform {
    pub t: Matrix,
}

impl DiagonalTransform {
    pub fn order(&self) -> usize {
        self.t.dim()
    }

    /// `d` from `c_1 .. c_K` by back-substitution.
    pub fn coordinates(&self, c: &[f64]) -> Vec<f64> {
        solve_upper(&self.t, c)
    }

    /// Largest entrywise deviation of `Tᵀ M T` from `diag(1..K)`.
    pub fn residual(&self, scaled_kernel: &Matrix) -> f64 {
        let k = self.order();
        let target = Matrix::from_fn(k, |i, j| if i == j { (i + 1) as f64 } else { 0.0 });
        scaled_kernel.congruence(&self.t).max_abs_diff(&target)
    }
}

/// `Σ n d_n²`.
pub fn diagonal_sum(d: &[f64]) -> f64 {
    d.iter()
        .enumerate()
        .map(|(i, x)| (i + 1) as f64 * x * x)
        .sum()
}

/// `T = 2 I`: the arcsine form is already diagonal.
pub fn transform_arcsine(k: usize) -> DiagonalTransform {
    DiagonalTransform {
        t: Matrix::identity(k).scale(2.0),
    }
}

/// Ones on the diagonal and `-1` two places to the right of it.
pub fn transform_semicircle(k: usize) -> DiagonalTransform {
    DiagonalTransform {
        t: Matrix::from_fn(k, |i, j| {
            if i == j {
                1.0
            } else if j == i + 2 {
                -1.0
            } else {
                0.0
            }
        }),
    }
}

/// Toeplitz upper-triangular transform for the hard-edge weight.
pub fn transform_hard_edge(k: usize, a: f64, b: f64) -> Result<DiagonalTransform> {
    let w = WeightSpec::hard_edge(a, b)?;
    let (sa, sb) = (sqrt(w.a()), sqrt(w.b()));
    let (s, d) = (sb + sa, sb - sa);
    let g = 4.0 * sqrt(a * b);
    let band = |j: usize| -> f64 {
        match j {
            0 => 1.0 / s,
            1 => -d / (s * s),
            _ => {
                let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
                sign * g * libm::pow(d, (j - 2) as f64) / libm::pow(s, (j + 1) as f64)
            }
        }
    };
    Ok(DiagonalTransform {
        t: Matrix::from_fn(k, |i, j| if j >= i { band(j - i) } else { 0.0 }),
    })
}

/// General route: `M = L D Lᵀ`, `T = L^{-ᵀ} diag(sqrt(n / D_n))`.
///
/// Fails with [`Error::IndefiniteKernel`] if a pivot is not positive.
pub fn diagonalize(r: &KernelMatrix) -> Result<DiagonalTransform> {
    let m = r.scaled();
    let f = ldl(&m)?;
    let linv_t = invert_unit_lower(&f.l).transpose();
    let k = m.dim();
    let t = Matrix::from_fn(k, |i, j| linv_t[(i, j)] * sqrt((j + 1) as f64 / f.d[j]));
    Ok(DiagonalTransform { t })
}

/// Closed-form first row `(α, β, γ, ξ, ζ)` of the `K = 5` jacobi transform.
/// The transform itself is Toeplitz, so this row determines it.
pub fn jacobi_k5_row(a: f64, b: f64) -> Result<[f64; 5]> {
    let w = WeightSpec::jacobi(a, b)?;
    let (a, b) = (w.a(), w.b());
    let p = sqrt(a) + sqrt(b);
    let q = sqrt(1.0 - a) + sqrt(1.0 - b);
    let u = sqrt(a * (1.0 - a)) - sqrt(b * (1.0 - b));
    let v = sqrt(a * (1.0 - a)) + sqrt(b * (1.0 - b));
    let gap = (sqrt(a) - sqrt(b)) * (sqrt(a) - sqrt(b));
    let pq = p * q;
    let pq2 = pq * pq;
    let pq3 = pq2 * pq;
    let pq4 = pq3 * pq;
    let pq5 = pq4 * pq;
    let q4 = libm::pow(q, 4.0);
    let q5 = q4 * q;

    let alpha = 1.0 / pq;
    let beta = 2.0 * u / pq2;
    let gamma = 4.0 * u * u / pq3 - 2.0 * v / pq2;
    let xi =
        8.0 * u * u * u / pq4 - 4.0 * (a - b) * (1.0 - a - b) / pq3 + 2.0 * u * gap / (p * p * q4);
    let zeta = 16.0 * libm::pow(u, 4.0) / pq5 + 12.0 * gap * u * u / (p * p * p * q5)
        - 4.0 * u * u / pq3
        - 2.0 * v * gap / (p * p * q4);
    Ok([alpha, beta, gamma, xi, zeta])
}

/// The transform for `weight`: closed form where one exists, otherwise LDLᵀ.
pub fn transform_for(weight: &WeightSpec, k: usize) -> Result<DiagonalTransform> {
    match weight.kind() {
        WeightKind::Arcsine => Ok(transform_arcsine(k)),
        WeightKind::Semicircle => Ok(transform_semicircle(k)),
        WeightKind::HardEdge => transform_hard_edge(k, weight.a(), weight.b()),
        WeightKind::Jacobi => diagonalize(&KernelMatrix::new(weight, k)),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VarianceResult {
    pub value: f64,
    pub expansion: BasisExpansion,
    /// Diagonal coordinates `d_1 .. d_K`.
    pub d: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VarianceOptions {
    pub max_degree: usize,
    pub path_tolerance: f64,
}

impl Default for VarianceOptions {
    fn default() -> Self {
        VarianceOptions {
            max_degree: DEFAULT_MAX_DEGREE,
            path_tolerance: PATH_TOLERANCE,
        }
    }
}

/// Variance of `tr f(M)` for the equilibrium density `weight`.
pub fn variance(f: &Poly, weight: &WeightSpec) -> Result<VarianceResult> {
    variance_with(f, weight, &VarianceOptions::default())
}

pub fn variance_with(
    f: &Poly,
    weight: &WeightSpec,
    opts: &VarianceOptions,
) -> Result<VarianceResult> {
    if f.coeffs().iter().any(|c| !c.is_finite()) {
        return Err(Error::NonFinite);
    }
    let k = f.degree();
    if k > opts.max_degree {
        return Err(Error::DegreeCap {
            degree: k,
            cap: opts.max_degree,
        });
    }
    let expansion = chebpoly::expand(f, weight);
    if k == 0 {
        return Ok(VarianceResult {
            value: 0.0,
            expansion,
            d: Vec::new(),
        });
    }
    let value = match weight.kind() {
        WeightKind::Arcsine => variance_arcsine(&expansion)?,
        _ => variance_quadratic(&expansion, &KernelMatrix::new(weight, k))?,
    };
    let t = transform_for(weight, k)?;
    let d = t.coordinates(expansion.nonconstant());
    let diagonal = diagonal_sum(&d);
    let gap = (value - diagonal).abs();
    if gap.is_nan() || gap > opts.path_tolerance * value.abs().max(1.0) {
        return Err(Error::PathMismatch {
            closed_form: value,
            diagonal,
        });
    }
    Ok(VarianceResult {
        value,
        expansion,
        d,
    })
}
