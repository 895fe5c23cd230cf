use std::f64::consts::PI;

use rayon::prelude::*;
use xi_lab_core::critical_line::{
    big_xi, central_differences, cross_section, derivatives, lambda_grid, strip_partials, DifferentiationScheme, Xi,
};
use xi_lab_core::{ComplexPoint, EvalConfig};

const T30: f64 = 101.317_851_005_731_39;

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

#[test]
fn value_at_zero_height() {
    let v = big_xi(0.0, &cfg()).unwrap();
    assert_eq!(v.phase(), 0.0);
    assert!((v.to_complex().re - 0.497_120_778_2).abs() < 1e-10);
}

#[test]
fn near_thirtieth_zero() {
    let v = big_xi(101.3178, &cfg()).unwrap();
    assert!(v.log10_magnitude() < -34.0);
    assert!(big_xi(T30, &cfg()).unwrap().log10_magnitude() < -40.0);
}

#[test]
fn single_sign_between_thirty_first_and_thirty_second_zeros() {
    let signs: Vec<f64> = (1..100)
        .map(|i| 103.7255 + (105.4466 - 103.7255) * i as f64 / 100.0)
        .map(|t| big_xi(t, &cfg()).unwrap().phase())
        .collect();
    assert!(signs.iter().all(|&p| p == PI));
}

#[test]
fn second_order_convergence_of_plain_differences() {
    let f = Xi::new(cfg());
    let t = 47.3;
    let reference = xi_lab_core::special_functions::xi_envelope_log(ComplexPoint::on_critical_line(t)).unwrap();
    let best = derivatives(t, &DifferentiationScheme::default(), &cfg()).unwrap();
    let (d1_h, d2_h) = central_differences(&f, t, 2e-2, reference).unwrap();
    let (d1_h2, d2_h2) = central_differences(&f, t, 1e-2, reference).unwrap();
    let ratio1 = (d1_h - best.scaled_d1) / (d1_h2 - best.scaled_d1);
    let ratio2 = (d2_h - best.scaled_d2) / (d2_h2 - best.scaled_d2);
    assert!((ratio1 - 4.0).abs() < 0.05, "first derivative ratio {ratio1}");
    assert!((ratio2 - 4.0).abs() < 0.05, "second derivative ratio {ratio2}");
}

#[test]
fn absolute_and_scaled_derivatives_agree() {
    let s = derivatives(T30, &DifferentiationScheme::default(), &cfg()).unwrap();
    let factor = s.reference_log_scale.exp();
    assert!((s.d1 - s.scaled_d1 * factor).abs() <= 1e-12 * s.d1.abs());
    assert!(s.d1.abs() < 1e-25 && s.d1 != 0.0);
}

#[test]
fn laplace_and_cauchy_riemann_on_a_thousand_points() {
    let f = Xi::new(cfg());
    let scheme = DifferentiationScheme::default();
    let worst = (0..1000)
        .into_par_iter()
        .map(|i| {
            let t = 10.0 + 190.0 * i as f64 / 999.0;
            let s = derivatives(t, &scheme, &cfg()).unwrap();
            let p = strip_partials(&f, ComplexPoint::on_critical_line(t), scheme.step_at(t), 3).unwrap();
            // ∂²Re ξ/∂λ² = −∂²Re ξ/∂t² = −Ξ″ and ∂Im ξ/∂λ = −Ξ′ = b
            let scale2 = s.scaled_d2.abs().max(s.scaled_value.abs());
            let scale1 = s.scaled_d1.abs().max(s.scaled_value.abs());
            let laplace = (p.d_lambda_lambda.re + s.scaled_d2).abs() / scale2;
            let cauchy_riemann = (p.d_lambda.im + s.scaled_d1).abs() / scale1;
            assert_eq!(s.a, -s.d2 / 2.0);
            assert_eq!(s.b, -s.d1);
            (laplace, cauchy_riemann)
        })
        .reduce(|| (0.0, 0.0), |a, b| (a.0.max(b.0), a.1.max(b.1)));
    assert!(worst.0 <= 1e-4, "Laplace residual {}", worst.0);
    assert!(worst.1 <= 1e-6, "Cauchy-Riemann residual {}", worst.1);
}

#[test]
fn cross_section_at_thirtieth_zero() {
    let grid = lambda_grid(-0.5, 0.5, 41);
    let cs = cross_section(T30, &grid, &cfg()).unwrap();
    let mid = cs.rows[20];
    assert_eq!(mid.lambda, 0.0);
    let scale = cs.max_abs_re().max(cs.max_abs_im());
    assert!(mid.re.abs() < 1e-9 * scale && mid.im.abs() < 1e-9 * scale);

    for (left, right) in cs.rows.iter().zip(cs.rows.iter().rev()) {
        assert!((left.re - right.re).abs() <= 1e-10 * scale);
        assert!((left.im + right.im).abs() <= 1e-10 * scale);
    }

    // pure parabola c λ² through the origin
    let num: f64 = cs.rows.iter().map(|r| r.re * r.lambda.powi(2)).sum();
    let den: f64 = cs.rows.iter().map(|r| r.lambda.powi(4)).sum();
    let c = num / den;
    let misfit = cs
        .rows
        .iter()
        .map(|r| (r.re - c * r.lambda.powi(2)).abs())
        .fold(0.0, f64::max);
    assert!(misfit <= 0.02 * cs.max_abs_re(), "misfit {}", misfit / cs.max_abs_re());
}

#[test]
fn grid_evaluation_is_order_independent() {
    let f = Xi::new(cfg());
    let ts: Vec<f64> = (0..50).map(|i| 20.0 + i as f64 * 0.37).collect();
    let scheme = DifferentiationScheme::default();
    let parallel = xi_lab_core::critical_line::derivatives_on_grid(&f, &ts, &scheme).unwrap();
    for (t, sample) in ts.iter().zip(&parallel) {
        assert_eq!(*sample, derivatives(*t, &scheme, &cfg()).unwrap());
    }
}
