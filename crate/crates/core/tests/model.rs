use std::f64::consts::SQRT_2;

use deltabound::model::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// Reference roots of 1 − k²/2 − exp(−√2 k x) from 30-digit arithmetic.
const HIGH_PRECISION_ROOTS: [(f64, f64); 5] = [
    (0.5, 1.010_535_330_383_85),
    (1.0, 1.296_215_235_791_8),
    (2.0, 1.400_692_948_412_65),
    (3.0, 1.412_446_526_448_47),
    (6.0, 1.414_209_217_592_03),
];

#[test]
fn roots_match_high_precision_reference() {
    for (x, k) in HIGH_PRECISION_ROOTS {
        let s = solve_k(x, DEFAULT_MODEL_TOL).unwrap();
        assert!((s.k - k).abs() < 1e-12, "x = {x}: {} vs {k}", s.k);
    }
}

#[test]
fn tabulated_rows() {
    let s = solve_k(1.0, DEFAULT_MODEL_TOL).unwrap();
    assert!((s.k - 1.29622).abs() < 1e-5);
    assert!((s.energy + 0.840093).abs() < 1e-5);
    let s = solve_k(5.0, DEFAULT_MODEL_TOL).unwrap();
    assert!((s.k - 1.41418).abs() < 1e-5);
    assert!((s.energy + 0.999952).abs() < 1e-5);
    let s = sweep(&[2.0], DEFAULT_MODEL_TOL).unwrap();
    assert!((s[0].k - 1.40069).abs() < 1e-5);
    assert!((s[0].energy + 0.980966).abs() < 1e-5);
}

#[test]
fn root_certificate() {
    for x in 1..=10 {
        let s = solve_k(x as f64, DEFAULT_MODEL_TOL).unwrap();
        assert!(secular(s.k, s.x).unwrap().abs() <= DEFAULT_MODEL_TOL);
    }
}

#[test]
fn monotone_on_half_grid() {
    let xs: Vec<f64> = (1..=20).map(|i| 0.5 * i as f64).collect();
    let rows = sweep(&xs, DEFAULT_MODEL_TOL).unwrap();
    for w in rows.windows(2) {
        assert!(w[1].k > w[0].k, "k not increasing at x = {}", w[1].x);
        assert!(
            w[1].energy < w[0].energy,
            "E not decreasing at x = {}",
            w[1].x
        );
    }
}

#[test]
fn sweep_preserves_order_and_is_deterministic() {
    let xs = [3.0, 0.7, 9.0, 1.5];
    let a = sweep(&xs, DEFAULT_MODEL_TOL).unwrap();
    let b = sweep(&xs, DEFAULT_MODEL_TOL).unwrap();
    assert_eq!(a, b);
    assert!(a.iter().zip(xs).all(|(s, x)| s.x == x));
}

#[test]
fn exchange_symmetry_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let w = AnsatzWavefunction::new(1.0, -0.08, 1.3).unwrap();
    for _ in 0..1000 {
        let x = rng.gen_range(-10.0..10.0);
        let y = rng.gen_range(-10.0..10.0);
        assert_eq!(
            eval_ansatz(&w, x, y).unwrap(),
            eval_ansatz(&w, y, x).unwrap()
        );
    }
}

#[test]
fn jump_conditions_at_random_separations() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let x = rng.gen_range(0.5..8.0);
        let s = solve_k(x, DEFAULT_MODEL_TOL).unwrap();
        let w = AnsatzWavefunction::new(1.0, s.amp_ratio, s.k).unwrap();
        let r = jump_residuals(&w, x, x, DEFAULT_FD_STEP).unwrap();
        assert!(r.max_abs() <= 1e-5, "x = {x}: {r:?}");
        // Well conditions hold along the whole axis, not only at x.
        let r = jump_residuals(&w, 2.0, -1.5, DEFAULT_FD_STEP).unwrap();
        assert!(r.well_in_x.abs() <= 1e-5 && r.well_in_y.abs() <= 1e-5);
    }
}

#[test]
fn well_condition_at_y_two() {
    let s = solve_k(1.0, DEFAULT_MODEL_TOL).unwrap();
    let w = AnsatzWavefunction::new(1.0, s.amp_ratio, s.k).unwrap();
    let r = jump_residuals(&w, 1.0, 2.0, 1e-6).unwrap();
    assert!(r.well_in_x.abs() < 1e-5);
}

proptest! {
    #[test]
    fn trivial_root_excluded(x in 0.01f64..100.0) {
        prop_assert_eq!(secular(0.0, x).unwrap(), 0.0);
        let s = solve_k(x, DEFAULT_MODEL_TOL).unwrap();
        prop_assert!(s.k > 1e-6 && s.k < SQRT_2 + 1e-15);
        prop_assert!(s.energy < 0.0);
        // k can round to √2 itself for large x.
        prop_assert!(s.amp_ratio > -1.0 && s.amp_ratio <= 2.0 * f64::EPSILON);
    }

    #[test]
    fn bracket_has_sign_change(x in 0.01f64..100.0) {
        prop_assert!(secular(K_SEARCH_MIN, x).unwrap() > 0.0);
        prop_assert!(secular(SQRT_2, x).unwrap() < 0.0);
    }

    #[test]
    fn solution_consistency(x in 0.05f64..40.0) {
        let s = solve_k(x, DEFAULT_MODEL_TOL).unwrap();
        prop_assert_eq!(s.energy, energy_from_k(s.k).unwrap());
        prop_assert_eq!(s.amp_ratio, amplitude_ratio(s.k).unwrap());
    }

    #[test]
    fn asymptote(x in 2.0f64..40.0) {
        let s = solve_k(x, DEFAULT_MODEL_TOL).unwrap();
        prop_assert!((s.k - SQRT_2).abs() <= 1.1 * (-2.0 * x).exp() + 4.0 * f64::EPSILON);
    }

    #[test]
    fn determinant_identity(k in 0.001f64..1.414, x in 0.01f64..20.0, a in -5.0f64..5.0) {
        prop_assume!(a.abs() > 1e-3);
        let w = AnsatzWavefunction::new(a, amplitude_ratio(k).unwrap() * a, k).unwrap();
        let (r1, r2) = boundary_residuals(&w, x).unwrap();
        let expect = -a * secular(k, x).unwrap();
        prop_assert!((r1 - expect).abs() <= 8.0 * f64::EPSILON * (1.0 + a.abs()));
        prop_assert!(r2.abs() <= 8.0 * f64::EPSILON * (1.0 + a.abs()));
    }

    #[test]
    fn ansatz_symmetries(k in 0.01f64..3.0, a in -2.0f64..2.0, b in -2.0f64..2.0,
                         x in -20.0f64..20.0, y in -20.0f64..20.0) {
        prop_assert_eq!(eval_separable(k, a, x, y).unwrap(), eval_separable(k, a, -x, y).unwrap());
        prop_assert_eq!(eval_separable(k, a, x, y).unwrap(), eval_separable(k, a, x, -y).unwrap());
        prop_assert_eq!(eval_correlation(k, b, x, x).unwrap(), b);
        prop_assert_eq!(eval_correlation(k, b, x, y).unwrap(), eval_correlation(k, b, y, x).unwrap());
    }
}
