//! Structural properties of the measures over parameter sweeps: the
//! trade-off bound, monotonicity trends, limits, and stabilization.

use horizonq::{eval_point, run_sweep, Scenario, SweepConfig, SweepRow};
use proptest::prelude::*;

const GAMMAS: [Option<f64>; 4] = [None, Some(1.0 / 3.0), Some(0.5), Some(2.0 / 3.0)];

fn grid_rows(scenario: Scenario, gamma: Option<f64>) -> Vec<SweepRow> {
    let cfg = SweepConfig {
        gamma,
        ..SweepConfig::new(scenario)
    };
    run_sweep(&cfg).unwrap()
}

/// D^2 + F <= 1 everywhere, damped or not.
#[test]
fn tradeoff_bound_holds_on_grid() {
    for scenario in Scenario::ALL {
        for gamma in GAMMAS {
            for row in grid_rows(scenario, gamma) {
                assert!(
                    row.tradeoff <= 1.0 + 1e-9,
                    "{scenario} gamma={gamma:?} T={}: {}",
                    row.t,
                    row.tradeoff,
                );
            }
        }
    }
}

/// The two exactly-perfect trade-off points.
#[test]
fn perfect_tradeoff_limits() {
    let (_, r) = eval_point(Scenario::Abc3, 0.0, 1.0, None).unwrap();
    assert!((r.tradeoff - 1.0).abs() < 1e-12);
    let (_, r) = eval_point(Scenario::AInterior, f64::INFINITY, 1.0, None).unwrap();
    assert!((r.tradeoff - 1.0).abs() < 1e-12);
}

fn finite_rows(scenario: Scenario) -> Vec<SweepRow> {
    grid_rows(scenario, None)
        .into_iter()
        .filter(|r| r.t > 0.0 && r.t.is_finite())
        .collect()
}

#[test]
fn monotonicity_all_exterior() {
    let rows = finite_rows(Scenario::Abc3);
    assert_eq!(rows.len(), 50);
    for w in rows.windows(2) {
        assert!(w[1].c_l1 < w[0].c_l1, "C_l1(ABC) not strictly decreasing");
    }
}

#[test]
fn monotonicity_interior() {
    let rows = finite_rows(Scenario::AInterior);
    for w in rows.windows(2) {
        assert!(w[1].c_l1 >= w[0].c_l1 - 1e-12, "C_l1(Abc) decreased");
        assert!(w[1].gc >= w[0].gc - 1e-12, "Q(Abc) decreased");
        assert!(w[1].cf >= w[0].cf - 1e-12, "F(Abc) decreased");
        assert!(w[1].foc <= w[0].foc + 1e-12, "D(Abc) increased");
    }
}

#[test]
fn monotonicity_mixed() {
    let rows = finite_rows(Scenario::Mixed);
    for w in rows.windows(2) {
        assert!(w[1].c_l1 >= w[0].c_l1 - 1e-12, "C_l1(ABc) decreased");
        assert!(w[1].gc >= w[0].gc - 1e-12, "Q(ABc) decreased");
        assert!(w[1].cf >= w[0].cf - 1e-12, "F(ABc) decreased");
        assert!(w[1].foc <= w[0].foc + 1e-12, "D(ABc) increased");
    }
}

/// All five measures settle: T = 1000 sits within 1e-3 of the T = +inf
/// limit. (The T=100 vs T=1000 gap is up to 3.6e-3 for C_l1 because
/// alpha^2 approaches 1/2 only as 1/(4T); the trade-off itself converges
/// much faster and is pinned separately in the acceptance suite.)
#[test]
fn stabilization_at_large_temperature() {
    for scenario in Scenario::ALL {
        let (_, lo) = eval_point(scenario, 1000.0, 1.0, None).unwrap();
        let (_, hi) = eval_point(scenario, f64::INFINITY, 1.0, None).unwrap();
        for (a, b, name) in [
            (lo.c_l1, hi.c_l1, "c_l1"),
            (lo.foc, hi.foc, "foc"),
            (lo.gc, hi.gc, "gc"),
            (lo.cf, hi.cf, "cf"),
            (lo.tradeoff, hi.tradeoff, "tradeoff"),
        ] {
            assert!((a - b).abs() < 1e-3, "{scenario} {name}: {a} vs {b}");
        }
    }
}

proptest! {
    /// Reports are finite with every measure in its range, and the
    /// trade-off bound holds at arbitrary (T, omega, gamma).
    #[test]
    fn report_well_formed(
        t in 0.01f64..50.0,
        omega in 0.1f64..5.0,
        gamma in proptest::option::of(0.0f64..=1.0),
    ) {
        for scenario in Scenario::ALL {
            let (params, r) = eval_point(scenario, t, omega, gamma).unwrap();
            prop_assert!((params.alpha * params.alpha + params.beta * params.beta - 1.0).abs() < 1e-12);
            for v in [r.c_l1, r.foc, r.gc, r.cf, r.tradeoff] {
                prop_assert!(v.is_finite() && v >= 0.0);
            }
            prop_assert!(r.c_l1 <= 2.0 + 1e-12);
            prop_assert!(r.foc <= 1.0 + 1e-12);
            prop_assert!(r.cf <= 1.0 + 1e-12);
            prop_assert!(r.tradeoff <= 1.0 + 1e-9);
        }
    }

    /// Both evaluation routes agree at arbitrary parameter points, not
    /// just on the standard grid.
    #[test]
    fn oracle_agreement_random_points(
        t in 0.05f64..20.0,
        gamma in proptest::option::of(0.05f64..0.95),
    ) {
        let params = horizonq::bogoliubov(t, 1.0).unwrap();
        for scenario in Scenario::ALL {
            let d = horizonq::closedform::verify_point(scenario, &params, gamma).unwrap();
            prop_assert!(d.matrix_dev < 1e-12);
            prop_assert!(d.measure_dev < 1e-10);
        }
    }
}
