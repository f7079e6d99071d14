//! Cross-module properties: search + checker on random non-vanishing functions.

use std::f64::consts::{PI, TAU};

use diskmod::{
    check_max_lemma, check_min_theorem, find_max_on_disk, find_min_on_disk, log_derivative,
    schwarz_quantity, AnalyticFunction, Complex64, ExpOf, Link, PowerSeries, Reciprocal, Rotated,
    DEFAULT_TOL,
};
use proptest::prelude::*;

/// `a0·exp(h)` with `h` starting at `z^n` and `Σ|h_k| = budget`.
fn arb_function() -> impl Strategy<Value = ExpOf> {
    (
        0.55f64..2.0,
        0.0..TAU,
        1usize..7,
        prop::collection::vec((0.05f64..1.0, 0.0..TAU), 1..12),
        0.1f64..2.0,
    )
        .prop_map(|(m, arg, n, raw, budget)| {
            let total: f64 = raw.iter().map(|p| p.0).sum();
            let coeffs = raw
                .into_iter()
                .map(|(mag, ph)| Complex64::from_polar(mag * budget / total, ph))
                .collect();
            ExpOf {
                scale: Complex64::from_polar(m, arg),
                exponent: PowerSeries::new(Complex64::default(), n, coeffs).unwrap(),
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn min_and_max_chains_hold(f in arb_function(), r in 0.1f64..0.9) {
        let n = f.class_index();
        let lo = find_min_on_disk(&f, r).unwrap();
        let min_rep = check_min_theorem(&f, n, lo.z0, DEFAULT_TOL).unwrap();
        prop_assert!(min_rep.passed(), "{}", min_rep.to_text());

        let g = Reciprocal(f.clone());
        let hi = find_max_on_disk(&g, r).unwrap();
        let max_rep = check_max_lemma(&g, n, hi.z0, DEFAULT_TOL).unwrap();
        prop_assert!(max_rep.passed(), "{}", max_rep.to_text());

        prop_assert!((min_rep.m - max_rep.m).abs() <= 1e-10 * min_rep.m.abs().max(1.0));
        prop_assert!(min_rep.im_residual <= 1e-8 * min_rep.m.abs().max(1.0));
        prop_assert!(min_rep.m >= min_rep.bound_sq - DEFAULT_TOL);
        prop_assert!(min_rep.bound_sq >= min_rep.bound_abs - DEFAULT_TOL);
        prop_assert!(min_rep.bound_abs >= 0.0);
    }

    #[test]
    fn proof_identity_at_minimum(f in arb_function(), r in 0.1f64..0.9) {
        let z0 = find_min_on_disk(&f, r).unwrap().z0;
        let m = -log_derivative(&f, z0).unwrap().re;
        let sf = schwarz_quantity(&f, z0).unwrap();
        let sg = schwarz_quantity(&Reciprocal(f.clone()), z0).unwrap();
        // Re(z0 g''/g') + 1 = Re(z0 f''/f') + 2m + 1 with g = 1/f.
        prop_assert!((sg - (sf + 2.0 * m)).abs() <= 1e-9 * sf.abs().max(1.0));
    }

    #[test]
    fn rotation_leaves_report_unchanged(f in arb_function(), r in 0.1f64..0.9, phi in -PI..PI) {
        let n = f.class_index();
        let base = find_min_on_disk(&f, r).unwrap();
        let rot = Rotated { inner: f.clone(), phi };
        let moved = find_min_on_disk(&rot, r).unwrap();

        // minimiser of f(e^{iφ}z) is the original one rotated by -φ (modulo symmetry)
        prop_assert!((rot.value(base.z0 * Complex64::from_polar(1.0, -phi)).norm() - moved.value).abs() < 1e-12);

        let a = check_min_theorem(&f, n, base.z0, DEFAULT_TOL).unwrap();
        let b = check_min_theorem(&rot, n, moved.z0, DEFAULT_TOL).unwrap();
        let scale = a.m.abs().max(1.0);
        prop_assert!((a.m - b.m).abs() <= 1e-10 * scale);
        prop_assert!((a.bound_sq - b.bound_sq).abs() <= 1e-10 * scale);
        prop_assert!((a.bound_abs - b.bound_abs).abs() <= 1e-10 * scale);
        let (sa, sb) = (a.schwarz.unwrap(), b.schwarz.unwrap());
        prop_assert!((sa - sb).abs() <= 1e-10 * sa.abs().max(1.0));
    }
}

#[test]
fn jack_reduction_for_powers() {
    for k in 1..8 {
        let f = PowerSeries::new(Complex64::default(), k, vec![Complex64::new(1.0, 0.0)]).unwrap();
        for r in [0.1, 0.5, 0.9] {
            let z0 = find_max_on_disk(&f, r).unwrap().z0;
            let rep = check_max_lemma(&f, k, z0, DEFAULT_TOL).unwrap();
            assert!(rep.passed());
            assert!((rep.m - k as f64).abs() <= 1e-12);
            assert!((rep.bound_sq - k as f64).abs() <= 1e-12);
            assert!((rep.bound_abs - k as f64).abs() <= 1e-12);
            assert!(rep.check(Link::Schwarz).passed);
        }
    }
}

#[test]
fn series_backed_reciprocal_matches_closed_reciprocal() {
    // 1/f as a truncated series versus the exact reciprocal at the same point.
    let f = PowerSeries::new(
        Complex64::new(1.5, 0.2),
        2,
        vec![Complex64::new(0.3, 0.1), Complex64::new(-0.2, 0.0)],
    )
    .unwrap();
    let g = f.invert(80).unwrap();
    let z0 = find_min_on_disk(&f, 0.6).unwrap().z0;
    assert!((g.value(z0) - Reciprocal(f.clone()).value(z0)).norm() < 1e-12);
    let a = check_min_theorem(&f, 2, z0, DEFAULT_TOL).unwrap();
    let b = check_max_lemma(&g, 2, z0, DEFAULT_TOL).unwrap();
    assert!(a.passed() && b.passed());
    assert!((a.m - b.m).abs() < 1e-10);
}
