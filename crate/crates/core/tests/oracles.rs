//! Numerical routines against frozen high-precision references
//! (see `data/gen_oracles.py`) and against `statrs`.

use biorel::evaluate::{paired_t_test, regularized_incomplete_beta, student_t_two_tailed};
use serde::Deserialize;

#[derive(Deserialize)]
struct BetaPoint {
    a: f64,
    b: f64,
    x: f64,
    value: f64,
}

#[derive(Deserialize)]
struct TSample {
    xs: Vec<f64>,
    ys: Vec<f64>,
    t: f64,
    p: f64,
}

fn beta_grid() -> Vec<BetaPoint> {
    serde_json::from_str(include_str!("data/incomplete_beta_grid.json")).unwrap()
}

fn t_samples() -> Vec<TSample> {
    serde_json::from_str(include_str!("data/paired_t_reference.json")).unwrap()
}

#[test]
fn incomplete_beta_matches_high_precision_grid() {
    let grid = beta_grid();
    assert_eq!(grid.len(), 200);
    for pt in grid {
        let got = regularized_incomplete_beta(pt.a, pt.b, pt.x);
        assert!(
            (got - pt.value).abs() <= 1e-10,
            "I_{}({}, {}) = {got}, want {}",
            pt.x,
            pt.a,
            pt.b,
            pt.value
        );
    }
}

#[test]
fn incomplete_beta_agrees_with_statrs() {
    for pt in beta_grid() {
        let reference = statrs::function::beta::beta_reg(pt.a, pt.b, pt.x);
        assert!((regularized_incomplete_beta(pt.a, pt.b, pt.x) - reference).abs() < 1e-9);
    }
}

#[test]
fn paired_t_matches_reference_samples() {
    let samples = t_samples();
    assert_eq!(samples.len(), 50);
    for s in samples {
        let r = paired_t_test(&s.xs, &s.ys).unwrap();
        assert!((r.t - s.t).abs() <= 1e-9, "t {} vs {}", r.t, s.t);
        assert!((r.p - s.p).abs() <= 1e-6 * s.p, "p {} vs {}", r.p, s.p);
    }
}

#[test]
fn student_t_tail_agrees_with_statrs() {
    use statrs::distribution::{ContinuousCDF, StudentsT};
    for df in [1.0, 2.0, 3.0, 7.5, 29.0] {
        let dist = StudentsT::new(0.0, 1.0, df).unwrap();
        for t in [0.1, 0.9, 2.5, 6.0, 19.0] {
            let reference = 2.0 * (1.0 - dist.cdf(t));
            let got = student_t_two_tailed(t, df);
            assert!((got - reference).abs() < 1e-9, "df={df} t={t}: {got} vs {reference}");
        }
    }
}

#[test]
fn location_shift_moves_mean_difference() {
    for s in t_samples() {
        let base = paired_t_test(&s.xs, &s.ys).unwrap();
        let shifted: Vec<f64> = s.xs.iter().map(|x| x + 1.5).collect();
        let r = paired_t_test(&shifted, &s.ys).unwrap();
        assert!((r.mean_difference - base.mean_difference - 1.5).abs() < 1e-9);
        // recompute t directly from the shifted differences
        let d: Vec<f64> = shifted.iter().zip(&s.ys).map(|(x, y)| x - y).collect();
        let n = d.len() as f64;
        let mean = d.iter().sum::<f64>() / n;
        let sd = (d.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt();
        assert!((r.t - mean / (sd / n.sqrt())).abs() < 1e-9);
    }
}
