//! Gauss–Chebyshev rules on `[-1, 1]`.
//!
//! Both rules have closed-form nodes and weights. With `M` nodes each
//! integrates `p(τ) w(τ)` exactly for polynomials `p` of degree `≤ 2M - 1`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use libm::{cos, sin};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    /// Weight `1/sqrt(1-τ²)`.
    GaussChebyshevT,
    /// Weight `sqrt(1-τ²)`.
    GaussChebyshevU,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub kind: RuleKind,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    /// `τ_k = cos((2k-1)π/(2M))`, `w_k = π/M`.
    pub fn chebyshev_t(m: usize) -> Self {
        assert!(m > 0, "quadrature needs at least one node");
        let nodes = (1..=m)
            .map(|k| cos((2 * k - 1) as f64 * PI / (2 * m) as f64))
            .collect();
        let weights = (0..m).map(|_| PI / m as f64).collect();
        QuadratureRule {
            kind: RuleKind::GaussChebyshevT,
            nodes,
            weights,
        }
    }

    /// `τ_k = cos(kπ/(M+1))`, `w_k = π/(M+1) sin²(kπ/(M+1))`.
    pub fn chebyshev_u(m: usize) -> Self {
        assert!(m > 0, "quadrature needs at least one node");
        let step = PI / (m + 1) as f64;
        let nodes = (1..=m).map(|k| cos(k as f64 * step)).collect();
        let weights = (1..=m)
            .map(|k| {
                let s = sin(k as f64 * step);
                step * s * s
            })
            .collect();
        QuadratureRule {
            kind: RuleKind::GaussChebyshevU,
            nodes,
            weights,
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `Σ w_k g(τ_k)`, summed in node order.
    pub fn integrate(&self, mut g: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .fold(0.0, |acc, (&t, &w)| acc + w * g(t))
    }
}
