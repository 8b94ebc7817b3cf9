#![allow(dead_code)]

use linstat_core::{Poly, WeightKind, WeightSpec};
use proptest::prelude::*;
use rand::Rng;

/// Random valid interval for `kind`.
pub fn random_weight<R: Rng>(rng: &mut R, kind: WeightKind) -> WeightSpec {
    let (a, b) = match kind {
        WeightKind::Arcsine | WeightKind::Semicircle => {
            let a = rng.gen_range(-3.0..3.0);
            (a, a + rng.gen_range(0.1..4.0))
        }
        WeightKind::HardEdge => {
            let a = rng.gen_range(0.05..3.0);
            (a, a + rng.gen_range(0.1..4.0))
        }
        WeightKind::Jacobi => {
            let a = rng.gen_range(0.02..0.9);
            (a, rng.gen_range(a + 0.02..0.98))
        }
    };
    WeightSpec::new(kind, a, b).expect("generated interval is valid")
}

pub fn random_kind<R: Rng>(rng: &mut R) -> WeightKind {
    WeightKind::ALL[rng.gen_range(0..4)]
}

/// Degree exactly `deg`, coefficients uniform in [-1, 1].
pub fn random_poly<R: Rng>(rng: &mut R, deg: usize) -> Poly {
    let mut c: Vec<f64> = (0..=deg).map(|_| rng.gen_range(-1.0..1.0)).collect();
    if c[deg] == 0.0 {
        c[deg] = 0.5;
    }
    Poly::new(c)
}

pub fn rel_gap(v: f64, w: f64) -> f64 {
    (v - w).abs() / v.abs().max(1.0)
}

pub fn kind_strategy() -> impl Strategy<Value = WeightKind> {
    prop::sample::select(WeightKind::ALL.to_vec())
}

pub fn weight_strategy() -> impl Strategy<Value = WeightSpec> {
    (kind_strategy(), any::<u64>()).prop_map(|(kind, seed)| {
        use rand::SeedableRng;
        random_weight(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed), kind)
    })
}

/// Non-constant polynomial of degree 1..=max_deg with coefficients in [-1, 1].
pub fn poly_strategy(max_deg: usize) -> impl Strategy<Value = Poly> {
    (1..=max_deg)
        .prop_flat_map(|d| prop::collection::vec(-1.0f64..1.0, d + 1))
        .prop_map(|mut c| {
            let d = c.len() - 1;
            if c[d].abs() < 1e-3 {
                c[d] = 0.5;
            }
            Poly::new(c)
        })
}
