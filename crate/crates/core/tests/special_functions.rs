use std::f64::consts::PI;

use num_complex::Complex64;
use proptest::prelude::*;
use serde_json::Value;
use xi_lab_core::special_functions::{ln_gamma, xi, xi_detailed, zeta};
use xi_lab_core::{ComplexPoint, EvalConfig};

fn oracle() -> Value {
    serde_json::from_str(include_str!("data/oracle.json")).unwrap()
}

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn phase_gap(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}

#[test]
fn gamma_special_values() {
    let o = oracle();
    let half = ln_gamma(ComplexPoint::new(0.5, 0.0), &cfg()).unwrap();
    let quarter = ln_gamma(ComplexPoint::new(0.25, 0.0), &cfg()).unwrap();
    let g_half = o["gamma_half"].as_f64().unwrap();
    let g_quarter = o["gamma_quarter"].as_f64().unwrap();
    assert!((half.to_complex().re - g_half).abs() < 1e-12 * g_half);
    assert!((quarter.to_complex().re - g_quarter).abs() < 1e-12 * g_quarter);
    assert!((half.to_complex().re - PI.sqrt()).abs() < 1e-12);
}

#[test]
fn ln_gamma_matches_oracle() {
    for row in oracle()["ln_gamma"].as_array().unwrap() {
        let s = ComplexPoint::new(row["sigma"].as_f64().unwrap(), row["t"].as_f64().unwrap());
        let g = ln_gamma(s, &cfg()).unwrap();
        let lm = row["log_magnitude"].as_f64().unwrap();
        let ph = row["phase"].as_f64().unwrap();
        assert!(
            (g.log_magnitude() - lm).abs() <= 1e-12 * (1.0 + lm.abs()),
            "log|Γ| at {s:?}: {} vs {lm}",
            g.log_magnitude()
        );
        assert!(phase_gap(g.phase(), ph) < 1e-10, "arg Γ at {s:?}");
    }
}

#[test]
fn zeta_matches_oracle() {
    for row in oracle()["zeta"].as_array().unwrap() {
        let s = ComplexPoint::new(row["sigma"].as_f64().unwrap(), row["t"].as_f64().unwrap());
        let expected = Complex64::new(row["re"].as_f64().unwrap(), row["im"].as_f64().unwrap());
        let got = zeta(s, &cfg()).unwrap().to_complex();
        let tol = 1e-12 * expected.norm().max(1.0);
        assert!((got - expected).norm() <= tol, "ζ at {s:?}: {got} vs {expected}");
    }
}

#[test]
fn zeta_special_values() {
    let o = oracle();
    let z0 = zeta(ComplexPoint::new(0.0, 0.0), &cfg()).unwrap().to_complex();
    assert!((z0.re + 0.5).abs() < 1e-15 && z0.im == 0.0);
    let zh = zeta(ComplexPoint::new(0.5, 0.0), &cfg()).unwrap().to_complex();
    assert!((zh.re - o["zeta_half"].as_f64().unwrap()).abs() < 1e-13);
    let z1 = zeta(ComplexPoint::new(0.5, 14.1347), &cfg()).unwrap();
    assert!(z1.to_complex().norm() < 1e-3);
}

#[test]
fn xi_special_values() {
    let o = oracle();
    let at = |sigma, t| xi(ComplexPoint::new(sigma, t), &cfg()).unwrap().to_complex();
    assert!((at(0.0, 0.0).re - 0.5).abs() < 1e-13);
    assert!((at(1.0, 0.0).re - 0.5).abs() < 1e-13);
    let xi_half = o["xi_half"].as_f64().unwrap();
    assert!((at(0.5, 0.0).re - xi_half).abs() < 1e-12);
    assert!((at(0.5, 0.0).re - 0.497_120_778_2).abs() < 1e-10);
}

#[test]
fn xi_near_thirtieth_zero_is_below_1e_minus_34() {
    // 101.3178 is the ordinate rounded to four decimals, 5e−5 from the zero
    let v = xi(ComplexPoint::new(0.5, 101.3178), &cfg()).unwrap();
    assert!(v.log10_magnitude() < -34.0);
    assert!((v.log10_magnitude() - (-34.793_34)).abs() < 1e-4);
    let at_zero = xi(ComplexPoint::new(0.5, 101.317_851_005_731_39), &cfg()).unwrap();
    assert!(at_zero.log10_magnitude() < -40.0);
}

#[test]
fn xi_matches_oracle_at_fifty_points() {
    for row in oracle()["xi"].as_array().unwrap() {
        let s = ComplexPoint::new(row["sigma"].as_f64().unwrap(), row["t"].as_f64().unwrap());
        let v = xi(s, &cfg()).unwrap();
        let lm = row["log_magnitude"].as_f64().unwrap();
        let ph = row["phase"].as_f64().unwrap();
        // relative error 1e−10 in ξ maps to 1e−10 in log-magnitude and phase
        assert!((v.log_magnitude() - lm).abs() <= 1e-10, "log|ξ| at {s:?}");
        assert!(phase_gap(v.phase(), ph) <= 1e-10, "arg ξ at {s:?}");
    }
}

#[test]
fn xi_error_estimate_is_reported() {
    let e = xi_detailed(ComplexPoint::new(0.5, 300.0), &cfg()).unwrap();
    assert!(e.error_estimate > 0.0 && e.error_estimate < 1e-10);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn functional_equation(sigma in 0.0f64..1.0, t in 5.0f64..200.0) {
        let s = ComplexPoint::new(sigma, t);
        let a = xi(s, &cfg()).unwrap();
        let b = xi(s.reflect(), &cfg()).unwrap();
        prop_assert!((a.log_magnitude() - b.log_magnitude()).abs() <= 1e-10);
        prop_assert!(phase_gap(a.phase(), b.phase()) <= 1e-10);
    }

    #[test]
    fn conjugate_symmetry(sigma in 0.0f64..1.0, t in 5.0f64..200.0) {
        let s = ComplexPoint::new(sigma, t);
        let a = xi(s, &cfg()).unwrap();
        let b = xi(s.conj(), &cfg()).unwrap().conj();
        prop_assert!((a.log_magnitude() - b.log_magnitude()).abs() <= 1e-10);
        prop_assert!(phase_gap(a.phase(), b.phase()) <= 1e-10);
    }

    #[test]
    fn real_on_critical_line(t in 1.0f64..200.0) {
        let v = xi(ComplexPoint::on_critical_line(t), &cfg()).unwrap();
        let ratio = (v.imag_part().log_magnitude() - v.log_magnitude()).exp();
        prop_assert!(ratio <= 1e-10, "t = {t}, ratio {ratio:e}");
    }
}
