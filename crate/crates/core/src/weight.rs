//! The four equilibrium-density weights and their interval constraints.

use core::fmt;

use crate::chebpoly::AffineMap;
use crate::error::{Error, Result};

/// Number of grid points used to check positivity of the jacobi denominator.
pub const POSITIVITY_GRID: usize = 1001;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightKind {
    /// `1/sqrt((b-x)(x-a))`, basis `T̂_n`.
    Arcsine,
    /// `sqrt((b-x)(x-a))`, basis `Û_n`.
    Semicircle,
    /// `sqrt((b-x)(x-a))/x` with `0 < a < b`.
    HardEdge,
    /// `sqrt((b-x)(x-a))/(x(1-x))` with `0 < a < b < 1`.
    Jacobi,
}

impl WeightKind {
    pub const ALL: [WeightKind; 4] = [
        WeightKind::Arcsine,
        WeightKind::Semicircle,
        WeightKind::HardEdge,
        WeightKind::Jacobi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WeightKind::Arcsine => "arcsine",
            WeightKind::Semicircle => "semicircle",
            WeightKind::HardEdge => "hard-edge",
            WeightKind::Jacobi => "jacobi",
        }
    }

    pub fn from_name(name: &str) -> Option<WeightKind> {
        WeightKind::ALL.into_iter().find(|k| k.name() == name)
    }

    pub fn constraint(self) -> &'static str {
        match self {
            WeightKind::Arcsine | WeightKind::Semicircle => "a < b",
            WeightKind::HardEdge => "0 < a < b",
            WeightKind::Jacobi => "0 < a < b < 1",
        }
    }

    /// Scalar in front of the quadratic form `sum c_m c_n R(m,n)`.
    pub fn prefactor(self) -> f64 {
        match self {
            WeightKind::Arcsine | WeightKind::Semicircle => 0.25,
            WeightKind::HardEdge => 0.5,
            WeightKind::Jacobi => 1.0,
        }
    }
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A weight kind together with a validated support interval `(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightSpec {
    kind: WeightKind,
    a: f64,
    b: f64,
}

impl WeightSpec {
    pub fn new(kind: WeightKind, a: f64, b: f64) -> Result<Self> {
        let ok = a.is_finite()
            && b.is_finite()
            && a < b
            && match kind {
                WeightKind::Arcsine | WeightKind::Semicircle => true,
                WeightKind::HardEdge => a > 0.0,
                WeightKind::Jacobi => a > 0.0 && b < 1.0,
            };
        if !ok {
            return Err(Error::InvalidInterval {
                kind: Some(kind),
                a,
                b,
            });
        }
        let spec = WeightSpec { kind, a, b };
        match kind {
            WeightKind::HardEdge => spec.check_positive(|t| t + (b + a) / (b - a))?,
            WeightKind::Jacobi => spec.check_positive(|t| jacobi_denominator(a, b, t))?,
            _ => {}
        }
        Ok(spec)
    }

    pub fn arcsine(a: f64, b: f64) -> Result<Self> {
        WeightSpec::new(WeightKind::Arcsine, a, b)
    }

    pub fn semicircle(a: f64, b: f64) -> Result<Self> {
        WeightSpec::new(WeightKind::Semicircle, a, b)
    }

    pub fn hard_edge(a: f64, b: f64) -> Result<Self> {
        WeightSpec::new(WeightKind::HardEdge, a, b)
    }

    pub fn jacobi(a: f64, b: f64) -> Result<Self> {
        WeightSpec::new(WeightKind::Jacobi, a, b)
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn map(&self) -> AffineMap {
        AffineMap::new_unchecked(self.a, self.b)
    }

    /// Weight density at `x`, zero outside `(a, b)`.
    pub fn density(&self, x: f64) -> f64 {
        if x <= self.a || x >= self.b {
            return 0.0;
        }
        let r = (self.b - x) * (x - self.a);
        match self.kind {
            WeightKind::Arcsine => 1.0 / libm::sqrt(r),
            WeightKind::Semicircle => libm::sqrt(r),
            WeightKind::HardEdge => libm::sqrt(r) / x,
            WeightKind::Jacobi => libm::sqrt(r) / (x * (1.0 - x)),
        }
    }

    fn check_positive(&self, g: impl Fn(f64) -> f64) -> Result<()> {
        let last = (POSITIVITY_GRID - 1) as f64;
        for i in 0..POSITIVITY_GRID {
            let tau = -1.0 + 2.0 * i as f64 / last;
            let gt = g(tau);
            if gt.is_nan() || gt <= 0.0 {
                return Err(Error::NonPositiveWeight {
                    kind: self.kind,
                    tau,
                });
            }
        }
        Ok(())
    }
}

/// `eta(tau)`: the jacobi weight is `sqrt(1 - tau^2) / eta(tau)` in the
/// reference variable.
pub fn jacobi_denominator(a: f64, b: f64, tau: f64) -> f64 {
    (a - b) / 2.0 * tau * tau + (1.0 - a - b) * tau + (a + b) * (a + b - 2.0) / (2.0 * (a - b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constraints() {
        assert!(WeightSpec::arcsine(-2.0, 2.0).is_ok());
        assert!(WeightSpec::semicircle(1.0, 1.0).is_err());
        assert!(WeightSpec::hard_edge(0.0, 1.0).is_err());
        assert!(WeightSpec::hard_edge(0.5, 3.0).is_ok());
        assert!(WeightSpec::jacobi(0.2, 1.5).is_err());
        assert!(WeightSpec::jacobi(0.2, 0.7).is_ok());
        assert!(WeightSpec::arcsine(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn jacobi_error_message_names_constraint() {
        let e = WeightSpec::jacobi(0.2, 1.5).unwrap_err();
        let msg = alloc::format!("{}", e);
        assert!(msg.starts_with("jacobi requires 0 < a < b < 1"), "{}", msg);
    }

    #[test]
    fn jacobi_denominator_matches_rational_weight() {
        // sqrt(1-tau^2)/eta(tau) must equal the weight at x(tau) up to the
        // Jacobian-free rescaling (b-a)/2 * sqrt(1-tau^2) / (x(1-x)).
        let (a, b) = (0.2, 0.7);
        let h = (b - a) / 2.0;
        for &tau in &[-0.9, -0.2, 0.0, 0.4, 0.95] {
            let x = h * tau + (a + b) / 2.0;
            let eta = jacobi_denominator(a, b, tau);
            assert!((eta - x * (1.0 - x) / h).abs() < 1e-12);
        }
    }

    #[test]
    fn names_round_trip() {
        for k in WeightKind::ALL {
            assert_eq!(WeightKind::from_name(k.name()), Some(k));
        }
        assert_eq!(WeightKind::from_name("gaussian"), None);
    }
}
