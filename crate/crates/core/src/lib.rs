//! Variance of linear statistics `tr f(M)` for polynomial `f`, under
//! one-cut equilibrium densities on `[a, b]`.
//!
//! Four weights are supported: arcsine, semicircle, hard-edge and jacobi.
//! Each comes with an orthogonal polynomial basis in which the variance
//! is a finite quadratic form, a closed-form kernel for that form, and an
//! upper-triangular change of coordinates that makes it diagonal. A direct
//! numerical evaluation of the principal-value double integral serves as an
//! independent check.
//!
//! ```
//! use linstat_core::{variance, variance_oracle, Poly, WeightSpec};
//!
//! let w = WeightSpec::semicircle(0.0, 1.0).unwrap();
//! let f = Poly::new(vec![0.0, 0.0, 1.0]);
//! let v = variance(&f, &w).unwrap().value;
//! assert!((v - 9.0 / 128.0).abs() < 1e-15);
//! assert!((v - variance_oracle(&f, &w)).abs() < 1e-12);
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod chebpoly;
pub mod error;
pub mod kernel;
pub mod linalg;
pub mod poly;
pub mod pv;
pub mod quadrature;
pub mod szego;
pub mod weight;

pub use chebpoly::{expand, AffineMap, Basis, BasisExpansion, ChebKind};
pub use error::{Error, Result};
pub use kernel::{
    variance, variance_with, DiagonalTransform, KernelMatrix, VarianceOptions, VarianceResult,
    DEFAULT_MAX_DEGREE,
};
pub use linalg::Matrix;
pub use poly::Poly;
pub use pv::{variance_oracle, variance_oracle_with, OracleNodes};
pub use weight::{WeightKind, WeightSpec};
