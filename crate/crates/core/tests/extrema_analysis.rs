use serde_json::Value;
use xi_lab_core::critical_line::{derivatives, DifferentiationScheme};
use xi_lab_core::extrema_analysis::{check_theorem1, find_extrema, saddle_test, ExtremumKind};
use xi_lab_core::product_form::second_log_derivative_partial;
use xi_lab_core::zero_catalog::ZeroCatalog;
use xi_lab_core::{EvalConfig, XiError};

fn cfg() -> EvalConfig {
    EvalConfig::default()
}

fn oracle() -> Value {
    serde_json::from_str(include_str!("data/oracle.json")).unwrap()
}

#[test]
fn two_extrema_between_thirtieth_and_thirty_second_zero() {
    let c = ZeroCatalog::reference();
    let scan = find_extrema((101.0, 106.0), c, &DifferentiationScheme::default(), &cfg()).unwrap();
    assert_eq!(scan.records.len(), 2);
    assert!(scan.anomalies.is_empty());
    let (t30, t31, t32) = (c.t(30).unwrap(), c.t(31).unwrap(), c.t(32).unwrap());
    let (max, min) = (scan.records[0], scan.records[1]);
    assert!(t30 < max.t_star && max.t_star < t31);
    assert_eq!(max.kind, ExtremumKind::Max);
    assert!(max.value > 0.0 && max.second_deriv < 0.0);
    assert!(t31 < min.t_star && min.t_star < t32);
    assert_eq!(min.kind, ExtremumKind::Min);
    assert!(min.value < 0.0 && min.second_deriv > 0.0);
    for r in scan.records {
        assert!(r.theorem1_ok);
        assert!(r.relative_slope <= 1e-8);
        assert!(r.half_width <= 1e-9);
    }
}

#[test]
fn no_extremum_around_first_zero() {
    let o = oracle();
    // the independent oracle gives Ξ′ < 0 at both ends
    assert!(o["big_xi_derivative_14_0"].as_f64().unwrap() < 0.0);
    assert!(o["big_xi_derivative_14_3"].as_f64().unwrap() < 0.0);
    let scheme = DifferentiationScheme::default();
    for (t, key) in [(14.0, "big_xi_derivative_14_0"), (14.3, "big_xi_derivative_14_3")] {
        let expected = o[key].as_f64().unwrap();
        let d = derivatives(t, &scheme, &cfg()).unwrap();
        assert!((d.d1 / expected - 1.0).abs() < 1e-8, "{t}: {} vs {expected}", d.d1);
    }
    let scan = find_extrema((14.0, 14.3), ZeroCatalog::reference(), &scheme, &cfg()).unwrap();
    assert!(scan.records.is_empty());
}

#[test]
fn sign_rule_holds_from_ten_to_two_hundred_forty() {
    let c = ZeroCatalog::reference();
    let scan = find_extrema((10.0, 240.0), c, &DifferentiationScheme::default(), &cfg()).unwrap();
    assert!(scan.anomalies.is_empty(), "{:?}", scan.anomalies);
    assert_eq!(scan.records.len(), c.zeros_in(10.0, 240.0).len() - 1);
    let summary = check_theorem1(&scan.records, c, 200).unwrap();
    assert_eq!(summary.violations, 0);
    assert_eq!(summary.nonnegative_lhs, 0);
    for r in &summary.records {
        assert_eq!(r.value.signum() * r.second_deriv.signum(), -1.0, "t* = {}", r.t_star);
        let rhs = r.eq17_rhs_partial.unwrap();
        assert!(rhs < 0.0);
        if 20.0 < r.t_star && r.t_star < 120.0 {
            assert!((r.eq17_lhs - rhs).abs() <= 0.1 * r.eq17_lhs.abs(), "t* = {}", r.t_star);
        }
    }
    for w in scan.records.windows(2) {
        assert_ne!(w[0].kind, w[1].kind);
    }
}

#[test]
fn truncated_second_log_derivative_is_negative_anywhere() {
    let c = ZeroCatalog::reference();
    for i in 0..2000 {
        let t = 0.37 + i as f64 * 0.2;
        assert!(second_log_derivative_partial(t, 200, c).unwrap() < 0.0);
    }
}

#[test]
fn saddle_at_the_maximum_after_the_thirtieth_zero() {
    let c = ZeroCatalog::reference();
    let scheme = DifferentiationScheme::default();
    let scan = find_extrema((101.0, 103.5), c, &scheme, &cfg()).unwrap();
    let t_star = scan.records[0].t_star;
    let r = saddle_test(t_star, &scheme, &cfg()).unwrap();
    let xi2 = r.line_second_deriv;
    assert!(r.discriminant <= 0.0);
    assert!((r.discriminant + xi2 * xi2).abs() <= 1e-4 * xi2 * xi2);
    assert!(r.mixed_partial.abs() <= 1e-4 * xi2.abs());
    assert!((r.sigma_curvature / (2.0 * r.a) - 1.0).abs() <= 1e-4);
    assert!(r.laplace_residual() <= 1e-4);
}

#[test]
fn discriminant_is_never_positive() {
    let c = ZeroCatalog::reference();
    let scheme = DifferentiationScheme::default();
    let scan = find_extrema((10.0, 240.0), c, &scheme, &cfg()).unwrap();
    for rec in scan.records.iter().step_by(3) {
        let r = saddle_test(rec.t_star, &scheme, &cfg()).unwrap();
        assert!(r.discriminant <= 0.0, "t* = {}", rec.t_star);
        assert!(r.laplace_residual() <= 1e-4, "t* = {}", rec.t_star);
    }
}

#[test]
fn saddle_test_rejects_a_zero() {
    let t30 = ZeroCatalog::reference().t(30).unwrap();
    let err = saddle_test(t30, &DifferentiationScheme::default(), &cfg()).unwrap_err();
    assert!(matches!(err, XiError::NotAnExtremum { .. }));
}

#[test]
fn range_beyond_catalog_is_rejected() {
    let err = find_extrema(
        (10.0, 500.0),
        ZeroCatalog::reference(),
        &DifferentiationScheme::default(),
        &cfg(),
    );
    assert!(matches!(err, Err(XiError::InvalidConfig(_))));
}
