mod common;

use std::f64::consts::PI;

use linstat_core::chebpoly::{cheb_monomials, AffineMap, ChebKind};
use linstat_core::quadrature::QuadratureRule;
use linstat_core::szego::{
    eval_orthonormal, eval_phat, eval_phat_deriv, eval_trigonometric, expand_in_phat,
    hard_edge_constants, jacobi_constants, phat_norm_squared, phat_poly,
};
use linstat_core::{Poly, WeightKind, WeightSpec};
use rand::SeedableRng;

fn rng(seed: u64) -> rand_chacha::ChaCha8Rng {
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

#[test]
fn constants_satisfy_their_systems() {
    let mut r = rng(11);
    for _ in 0..100 {
        let w = common::random_weight(&mut r, WeightKind::HardEdge);
        let k = hard_edge_constants(w.a(), w.b()).unwrap();
        assert!(k.residuals(w.a(), w.b()).iter().all(|v| v.abs() <= 1e-12));
        assert!(k.h0 > 0.0);

        let w = common::random_weight(&mut r, WeightKind::Jacobi);
        let k = jacobi_constants(w.a(), w.b()).unwrap();
        assert!(k.residuals(w.a(), w.b()).iter().all(|v| v.abs() <= 1e-12));
        assert!(k.h0 > 0.0);
        assert!(k.min_root_modulus() > 1.0);
    }
}

#[test]
fn constants_examples() {
    let k = hard_edge_constants(1.0, 4.0).unwrap();
    assert!((k.h1 - 0.40825).abs() < 1e-5 && (k.h0 - 1.22474).abs() < 1e-5);
    let k = hard_edge_constants(0.01, 1.0).unwrap();
    assert!((k.h1 - 0.63957).abs() < 1e-4 && (k.h0 - 0.78178).abs() < 1e-4);
    let k = jacobi_constants(0.25, 0.75).unwrap();
    assert!((k.h2 + 0.066987).abs() < 1e-6 && k.h1.abs() < 1e-16 && (k.h0 - 0.933013).abs() < 1e-6);
    assert!((4.0 * k.h2 * k.h0 + 0.25).abs() < 1e-15);
    assert!(((k.h2 - k.h0).powi(2) + k.h1 * k.h1 - 1.0).abs() < 1e-15);
    let k = jacobi_constants(0.1, 0.5).unwrap();
    assert!(k.residuals(0.1, 0.5).iter().all(|v| v.abs() <= 1e-12));
    assert!(jacobi_constants(0.2, 1.5).is_err());
    assert!(hard_edge_constants(-1.0, 1.0).is_err());
}

/// `∫_a^b P̂_m P̂_n sqrt((b-x)(x-a)) / ρ(x) dx` with 400 second-kind nodes.
fn weighted_inner(w: &WeightSpec, m: usize, n: usize, rule: &QuadratureRule) -> f64 {
    let map = w.map();
    let h = map.half_width();
    h * h
        * rule.integrate(|t| {
            let x = map.from_reference(t);
            let rho = match w.kind() {
                WeightKind::HardEdge => x,
                _ => x * (1.0 - x),
            };
            eval_phat(w, m, x).unwrap() * eval_phat(w, n, x).unwrap() / rho
        })
}

#[test]
fn orthogonality_with_stated_normalisation() {
    let rule = QuadratureRule::chebyshev_u(400);
    let weights = [
        WeightSpec::hard_edge(1.0, 4.0).unwrap(),
        WeightSpec::hard_edge(0.05, 2.0).unwrap(),
        WeightSpec::jacobi(0.25, 0.75).unwrap(),
        WeightSpec::jacobi(0.1, 0.5).unwrap(),
    ];
    for w in &weights {
        let norm = phat_norm_squared(w).unwrap();
        let span = w.b() - w.a();
        let want_norm = match w.kind() {
            WeightKind::HardEdge => PI * span * span / 2.0,
            _ => 2.0 * PI * span * span,
        };
        assert_eq!(norm, want_norm);
        for m in 0..=8 {
            for n in 0..=8 {
                if w.kind() == WeightKind::Jacobi && m == 0 && n == 0 {
                    continue;
                }
                let got = weighted_inner(w, m, n, &rule);
                let want = if m == n { norm } else { 0.0 };
                assert!(
                    (got - want).abs() <= 1e-9 * norm,
                    "{:?} ({},{}) {} vs {}",
                    w.kind(),
                    m,
                    n,
                    got,
                    want
                );
            }
        }
    }
}

#[test]
fn hard_edge_degree_cancellation() {
    for (a, b) in [(1.0, 4.0), (0.3, 1.7)] {
        let map = AffineMap::new(a, b).unwrap();
        let (sa, sb) = (f64::sqrt(a), f64::sqrt(b));
        let u = cheb_monomials(ChebKind::U, 12);
        let t = cheb_monomials(ChebKind::T, 13);
        let lin = Poly::new(vec![2.0 * (a * b).sqrt() / (sb + sa), 2.0 / (sb + sa)]);
        for n in 0..=12 {
            let p = lin
                .mul(&map.push_forward(&u[n]))
                .sub(&map.push_forward(&t[n + 1]).scale(sb - sa));
            let top = p.coeff(n + 1).abs();
            assert!(
                top <= 1e-12 * p.coeff(n).abs(),
                "n={} top={} lead={}",
                n,
                top,
                p.coeff(n)
            );
            assert!(p.coeff(n) > 0.0);
        }
    }
}

#[test]
fn trigonometric_consistency() {
    let mut r = rng(5);
    for kind in [WeightKind::HardEdge, WeightKind::Jacobi] {
        for _ in 0..10 {
            let w = common::random_weight(&mut r, kind);
            for n in 0..=8 {
                for j in 1..=50 {
                    let theta = j as f64 * PI / 51.0;
                    let lhs = eval_orthonormal(&w, n, theta.cos()).unwrap();
                    let rhs = eval_trigonometric(&w, n, theta).unwrap();
                    assert!((lhs - rhs).abs() <= 1e-10, "{:?} n={} θ={}", kind, n, theta);
                }
            }
        }
    }
}

#[test]
fn phat_examples() {
    let w3 = WeightSpec::hard_edge(1.0, 4.0).unwrap();
    for x in [1.0, 2.5, 3.7] {
        assert!((eval_phat(&w3, 0, x).unwrap() - 3.0).abs() < 1e-14);
    }
    let w4 = WeightSpec::jacobi(0.25, 0.75).unwrap();
    for x in [0.3, 0.5] {
        assert!((eval_phat(&w4, 0, x).unwrap() - 2.0).abs() < 1e-14);
    }
    // trigonometric form at θ = π/3 with the 2 sqrt(π(b-a)) scaling
    let trig = eval_trigonometric(&w4, 0, PI / 3.0).unwrap() * 2.0 * (PI * 0.5).sqrt();
    assert!((trig - 2.0).abs() < 1e-14);
}

#[test]
fn derivative_examples() {
    let w3 = WeightSpec::hard_edge(1.0, 4.0).unwrap();
    let fd = |w: &WeightSpec, n: usize, x: f64| {
        (eval_phat(w, n, x + 1e-6).unwrap() - eval_phat(w, n, x - 1e-6).unwrap()) / 2e-6
    };
    assert!((eval_phat_deriv(&w3, 1, 2.5).unwrap() - fd(&w3, 1, 2.5)).abs() < 1e-7);
    let slope = phat_poly(&w3, 1).unwrap().coeff(1);
    for x in [1.2, 2.5, 3.9] {
        assert!((eval_phat_deriv(&w3, 1, x).unwrap() - slope).abs() < 1e-12);
    }
    let w4 = WeightSpec::jacobi(0.25, 0.75).unwrap();
    assert!((eval_phat_deriv(&w4, 2, 0.5).unwrap() - fd(&w4, 2, 0.5)).abs() < 1e-7);
    assert!(eval_phat_deriv(&w4, 2, 0.25).is_err());
    assert!(eval_phat_deriv(&w3, 2, 4.0).is_err());
}

/// `U_k'(τ)` for `k = 0..=n` from the differentiated recurrence
/// `U'_{k+1} = 2 U_k + 2τ U'_k - U'_{k-1}`.
fn u_derivatives(n: usize, tau: f64) -> Vec<f64> {
    let (mut u_prev, mut u) = (0.0, 1.0);
    let mut d = vec![0.0; n + 1];
    for k in 0..n {
        let u_next = 2.0 * tau * u - u_prev;
        let d_prev = if k == 0 { 0.0 } else { d[k - 1] };
        d[k + 1] = 2.0 * u + 2.0 * tau * d[k] - d_prev;
        u_prev = u;
        u = u_next;
    }
    d
}

#[test]
fn derivative_matches_recurrence() {
    let mut r = rng(9);
    for kind in [WeightKind::HardEdge, WeightKind::Jacobi] {
        for _ in 0..20 {
            let w = common::random_weight(&mut r, kind);
            let (a, b) = (w.a(), w.b());
            let (sa, sb) = (a.sqrt(), b.sqrt());
            // P̂_n as a combination of U_{n-2}, U_{n-1}, U_n
            let (c2, c1, c0) = match kind {
                WeightKind::HardEdge => (0.0, sb - sa, sb + sa),
                _ => {
                    let (ta, tb) = ((1.0 - a).sqrt(), (1.0 - b).sqrt());
                    (
                        (sb - sa) * (tb - ta),
                        2.0 * ((b * (1.0 - b)).sqrt() - (a * (1.0 - a)).sqrt()),
                        (sb + sa) * (tb + ta),
                    )
                }
            };
            for n in 1..=8 {
                for j in 1..=9 {
                    let x = a + (b - a) * j as f64 / 10.0;
                    let tau = w.map().to_reference(x);
                    let d = u_derivatives(n, tau);
                    let mut want = c0 * d[n] + c1 * d[n - 1];
                    if n >= 2 {
                        want += c2 * d[n - 2];
                    }
                    want *= 2.0 / (b - a);
                    let got = eval_phat_deriv(&w, n, x).unwrap();
                    assert!(
                        (got - want).abs() <= 1e-10 * want.abs().max(1.0),
                        "{:?} n={} x={} {} vs {}",
                        kind,
                        n,
                        x,
                        got,
                        want
                    );
                }
            }
        }
    }
}

#[test]
fn expansion_examples() {
    let w3 = WeightSpec::hard_edge(1.0, 4.0).unwrap();
    let p3 = phat_poly(&w3, 3).unwrap();
    let c = expand_in_phat(&p3, &w3).unwrap().coeffs;
    for (i, ci) in c.iter().enumerate() {
        let want = if i == 3 { 1.0 } else { 0.0 };
        assert!((ci - want).abs() < 1e-12, "{:?}", c);
    }
    let c = expand_in_phat(&Poly::constant(1.0), &w3).unwrap().coeffs;
    assert!((c[0] - 1.0 / 3.0).abs() < 1e-15);
    let x2 = Poly::new(vec![0.0, 0.0, 1.0]);
    let e = expand_in_phat(&x2, &w3).unwrap();
    for x in [1.0, 1.7, 2.5, 3.2, 4.0] {
        assert!((e.eval(x) - x * x).abs() <= 1e-11 * x * x);
    }
    let w4 = WeightSpec::jacobi(0.25, 0.75).unwrap();
    let c = expand_in_phat(&Poly::constant(1.0), &w4).unwrap().coeffs;
    assert!((c[0] - 0.5).abs() < 1e-15);
    assert!(expand_in_phat(&x2, &WeightSpec::arcsine(0.0, 1.0).unwrap()).is_err());
}

#[test]
fn expansion_reconstructs() {
    let mut r = rng(21);
    for kind in [WeightKind::HardEdge, WeightKind::Jacobi] {
        for _ in 0..100 {
            let w = common::random_weight(&mut r, kind);
            let deg = rand::Rng::gen_range(&mut r, 0..=10);
            let f = common::random_poly(&mut r, deg);
            let e = expand_in_phat(&f, &w).unwrap();
            assert_eq!(e.coeffs.len(), deg + 1);
            for j in 0..=8 {
                let x = w.a() + (w.b() - w.a()) * j as f64 / 8.0;
                let r = w.b().max(1.0);
                let scale: f64 = f
                    .coeffs()
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c.abs() * r.powi(k as i32))
                    .sum();
                assert!(
                    (e.eval(x) - f.eval(x)).abs() <= 1e-11 * scale.max(1.0),
                    "{:?} ({},{}) deg={} x={} {} vs {}",
                    kind,
                    w.a(),
                    w.b(),
                    deg,
                    x,
                    e.eval(x),
                    f.eval(x)
                );
            }
        }
    }
}
