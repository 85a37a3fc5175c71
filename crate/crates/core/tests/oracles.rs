//! Zak-transform and frame-sum oracles against closed forms, and against
//! the chain-polynomial analysis.

use std::f64::consts::PI;

use num_complex::Complex64;

use whframe::frame_analysis::{analyze_continuous, analyze_step, AnalysisOptions};
use whframe::functions::{PiecewiseFunction, Restricted, StepFunction};
use whframe::intervals::BasicSupportSet;
use whframe::laurent::circle_extrema;
use whframe::zak::{self, TestFunction};

const TWO_PI: f64 = 2.0 * PI;

fn g1() -> StepFunction {
    StepFunction::from_real(&[(4.0, 0), (3.0, 1), (2.0, 3)]).unwrap()
}

fn base() -> BasicSupportSet {
    "[0,2pi)".parse().unwrap()
}

#[test]
fn zak_extrema_match_circle_extrema() {
    let g = g1();
    let ex = circle_extrema(&g.polynomial());
    let grid = zak::zak_transform(&g.to_piecewise(), 64, 1024).unwrap();
    let (lo, hi) = zak::zak_extrema(&grid, &base()).unwrap();
    assert!(
        (lo - ex.min_sq / TWO_PI).abs() <= 1e-4,
        "{lo} vs {}",
        ex.min_sq / TWO_PI
    );
    assert!(
        (hi - ex.max_sq / TWO_PI).abs() <= 1e-4,
        "{hi} vs {}",
        ex.max_sq / TWO_PI
    );

    let one = zak::zak_transform(
        &StepFunction::from_real(&[(1.0, 0)]).unwrap().to_piecewise(),
        32,
        32,
    )
    .unwrap();
    let (lo, hi) = zak::zak_extrema(&one, &base()).unwrap();
    assert!((lo - 1.0 / TWO_PI).abs() < 1e-15 && (hi - 1.0 / TWO_PI).abs() < 1e-15);
}

#[test]
fn zak_at_matches_grid() {
    let g = g1().to_piecewise();
    let grid = zak::zak_transform(&g, 16, 16).unwrap();
    for (a, b) in [(0, 0), (3, 5), (15, 15)] {
        let v = zak::zak_at(&g, grid.t(a), grid.w(b)).unwrap();
        assert!((v - grid.at(a, b)).norm() < 1e-13);
    }
}

#[test]
fn unitarity_of_smooth_and_polynomial_pieces() {
    let blend = PiecewiseFunction::parse(include_str!("../fixtures/sine_blend.pw")).unwrap();
    let e: BasicSupportSet = "[0,2pi) U [4pi,6pi) U [8pi,10pi)".parse().unwrap();
    assert!(
        zak::unitarity_check(
            &Restricted {
                inner: &blend,
                set: &e
            },
            1024,
            1024
        )
        .unwrap()
            <= 1e-6
    );
    let poly4 = PiecewiseFunction::parse(include_str!("../fixtures/poly4.pw")).unwrap();
    assert!(zak::unitarity_check(&poly4, 1024, 1024).unwrap() <= 1e-6);
    let probe = &zak::test_corpus(&[(0.5, 5.0)], 1, 9, 2)[0];
    assert!(zak::unitarity_check(probe, 512, 512).unwrap() <= 1e-6);
}

#[test]
fn commutation_on_step_window() {
    let g = g1().to_piecewise();
    assert!(zak::commutation_check(&g, 1, 1, 128, 128).unwrap() <= 1e-12);
}

#[test]
fn frame_sums_bracket_step_bounds() {
    let g = g1();
    let report = analyze_step(&g, &AnalysisOptions::with_kappa(TWO_PI)).unwrap();
    let tests = zak::test_corpus(&[(0.0, TWO_PI), (1.0, 4.0)], 8, 21, 3);
    let est = zak::frame_sum_bounds(&g.to_piecewise(), &tests, zak::M_MAX_STEP).unwrap();
    let b = report.bounds.calibrated;
    assert!(est.B_est <= b.B0 * 1.01, "{est:?} vs {b:?}");
    assert!(est.A_est >= b.A0 * 0.99, "{est:?} vs {b:?}");
    assert!(est.A_est <= est.B_est);
}

#[test]
fn frame_sums_degenerate_for_two_periods() {
    // Zg vanishes on w = π; probes concentrated there drive the sums down
    let g = PiecewiseFunction::parse("[0,4pi) : 1").unwrap();
    let sums = |order: i64| {
        let probe = TestFunction::zak_concentrated(0.0, TWO_PI, PI, order);
        zak::frame_sum(&g, &probe, zak::M_MAX_SMOOTH).unwrap().0
    };
    let spread = zak::test_corpus(&[(0.0, TWO_PI)], 6, 5, 2);
    let b_est = zak::frame_sum_bounds(&g, &spread, zak::M_MAX_SMOOTH)
        .unwrap()
        .B_est;
    let (s4, s8, s16) = (sums(4), sums(8), sums(16));
    assert!(s4 <= 0.1 * b_est, "{s4} vs {b_est}");
    assert!(s8 <= 0.5 * s4, "{s8} vs {s4}");
    assert!(s16 <= 0.5 * s8, "{s16} vs {s8}");
}

#[test]
fn calibration_is_scale_free() {
    let plain = zak::calibrate_kappa().unwrap();
    let scaled = zak::calibrate_kappa_scaled(Complex64::new(-1.5, 2.0)).unwrap();
    assert!((plain - scaled).abs() <= 1e-10 * plain);
    assert_eq!(zak::calibrated_kappa().unwrap(), plain);
}

#[test]
fn continuous_analysis_matches_zak_for_example_window() {
    let blend = PiecewiseFunction::parse(include_str!("../fixtures/sine_blend.pw")).unwrap();
    let e: BasicSupportSet = "[0,2pi) U [4pi,6pi) U [8pi,10pi)".parse().unwrap();
    let report = analyze_continuous(&blend, &e, &AnalysisOptions::with_kappa(TWO_PI)).unwrap();
    let grid = zak::zak_transform(
        &Restricted {
            inner: &blend,
            set: &e,
        },
        512,
        512,
    )
    .unwrap();
    let (lo, hi) = zak::zak_extrema(&grid, &base()).unwrap();
    assert!(lo >= report.m_sq / TWO_PI * (1.0 - 1e-12));
    assert!(hi <= report.M_sq / TWO_PI * (1.0 + 1e-12));
    assert!((lo - report.m_sq / TWO_PI).abs() <= 1e-3 * lo);
    assert!((hi - report.M_sq / TWO_PI).abs() <= 1e-3 * hi);
}
