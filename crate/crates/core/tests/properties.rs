//! Property tests over randomized inputs: the invariants that should hold
//! for *any* data, not just the seeded fixtures.

use ndarray::{Array1, Array2};
use proptest::prelude::*;

use stagewise::boosters::{run, select_column, AlgorithmConfig, Variant};
use stagewise::io::{read_numeric_csv, write_numeric_csv};
use stagewise::model::{standardize, RawDataset, STANDARDIZATION_TOL};
use stagewise::oracles::{max_representation_check, project_l1_ball};
use stagewise::subgrad::ResidualObjective;

fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<f64>, Vec<f64>)> {
    (2usize..12, 1usize..8).prop_flat_map(|(n, p)| {
        (
            Just(n),
            Just(p),
            proptest::collection::vec(-10.0f64..10.0, n * p),
            proptest::collection::vec(-10.0f64..10.0, n),
        )
    })
}

fn build_problem(
    n: usize,
    p: usize,
    xs: &[f64],
    ys: &[f64],
) -> Option<stagewise::StandardizedProblem> {
    let x = Array2::from_shape_vec((n, p), xs.to_vec()).ok()?;
    let y = Array1::from(ys.to_vec());
    let raw = RawDataset::new(x, y).ok()?;
    standardize(&raw, true).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn standardize_is_idempotent_on_random_data((n, p, xs, ys) in small_matrix()) {
        if let Some(once) = build_problem(n, p, &xs, &ys) {
            let raw = RawDataset::new(once.x().clone(), once.y().clone()).unwrap();
            let twice = standardize(&raw, true).unwrap();
            for (a, b) in once.x().iter().zip(twice.x().iter()) {
                prop_assert!((a - b).abs() <= STANDARDIZATION_TOL);
            }
            for (s, expect) in twice.column_scales().iter().map(|s| (s, 1.0)) {
                prop_assert!((s - expect).abs() <= STANDARDIZATION_TOL);
            }
        }
    }

    #[test]
    fn l1_projection_is_feasible_and_idempotent(
        v in proptest::collection::vec(-100.0f64..100.0, 1..20),
        delta in 0.01f64..50.0,
    ) {
        let v = Array1::from(v);
        let proj = project_l1_ball(&v, delta);
        let l1: f64 = proj.iter().map(|x| x.abs()).sum();
        prop_assert!(l1 <= delta * (1.0 + 1e-12));
        let again = project_l1_ball(&proj, delta);
        for (a, b) in proj.iter().zip(again.iter()) {
            prop_assert!((a - b).abs() <= 1e-12);
        }
        // Projection never moves a point that is already inside.
        if v.iter().map(|x| x.abs()).sum::<f64>() <= delta {
            for (a, b) in v.iter().zip(proj.iter()) {
                prop_assert!(a == b);
            }
        }
    }

    #[test]
    fn subgradient_inequality_on_random_pairs(
        (n, p, xs, ys) in small_matrix(),
        r1 in proptest::collection::vec(-5.0f64..5.0, 12),
        r2 in proptest::collection::vec(-5.0f64..5.0, 12),
        delta in 0.1f64..5.0,
    ) {
        if let Some(sp) = build_problem(n, p, &xs, &ys) {
            let a = Array1::from_iter(r1.iter().copied().take(sp.n()));
            let b = Array1::from_iter(r2.iter().copied().take(sp.n()));
            if a.len() == sp.n() && b.len() == sp.n() {
                for obj in [ResidualObjective::cm(&sp), ResidualObjective::rcm(&sp, delta)] {
                    let g = obj.subgradient(&a);
                    let lhs = obj.evaluate(&b);
                    let rhs = obj.evaluate(&a) + g.dot(&(&b - &a));
                    prop_assert!(lhs >= rhs - 1e-9, "{lhs} < {rhs}");
                }
            }
        }
    }

    #[test]
    fn fixed_step_trace_invariants(
        (n, p, xs, ys) in small_matrix(),
        eps in 0.01f64..0.5,
    ) {
        if let Some(sp) = build_problem(n, p, &xs, &ys) {
            let trace = run(&sp, &AlgorithmConfig::new(Variant::Fse { epsilon: eps }, 60)).unwrap();
            prop_assert!(trace.max_residual_inconsistency(&sp) <= 1e-10);
            for rec in &trace.records {
                prop_assert!(rec.l1_norm <= rec.k as f64 * eps + 1e-12);
                prop_assert!(rec.l0_norm <= rec.k);
            }
        }
    }

    #[test]
    fn selection_maximizes_absolute_correlation(
        (n, p, xs, ys) in small_matrix(),
        r in proptest::collection::vec(-5.0f64..5.0, 12),
    ) {
        if let Some(sp) = build_problem(n, p, &xs, &ys) {
            let resid = Array1::from_iter(r.iter().copied().take(sp.n()));
            if resid.len() == sp.n() {
                let (j, c) = select_column(sp.x(), &resid);
                let corr = sp.x().t().dot(&resid);
                prop_assert!((corr[j] - c).abs() == 0.0);
                for (idx, v) in corr.iter().enumerate() {
                    prop_assert!(v.abs() <= c.abs());
                    // Smallest-index tie-break.
                    if v.abs() == c.abs() {
                        prop_assert!(idx >= j);
                    }
                }
            }
        }
    }

    #[test]
    fn loss_max_representation_for_any_beta(
        (n, p, xs, ys) in small_matrix(),
        b in proptest::collection::vec(-5.0f64..5.0, 8),
    ) {
        if let Some(sp) = build_problem(n, p, &xs, &ys) {
            let beta = Array1::from_iter(b.iter().copied().take(sp.p()));
            if beta.len() == sp.p() {
                prop_assert!(max_representation_check(&sp, &beta) <= 1e-10);
            }
        }
    }

    #[test]
    fn csv_round_trip_is_lossless(
        rows in proptest::collection::vec(
            proptest::collection::vec(proptest::num::f64::NORMAL | proptest::num::f64::ZERO, 3),
            1..20,
        ),
    ) {
        let path = std::env::temp_dir().join(format!(
            "stagewise_prop_{}_{:x}.csv",
            std::process::id(),
            rows.len() * 31 + rows.first().map(|r| r[0].to_bits() as usize).unwrap_or(0)
        ));
        write_numeric_csv(&path, &["a", "b", "c"], rows.clone()).unwrap();
        let (_, back) = read_numeric_csv(&path).unwrap();
        std::fs::remove_file(&path).ok();
        prop_assert_eq!(rows.len(), back.len());
        for (r, b) in rows.iter().zip(back.iter()) {
            for (x, y) in r.iter().zip(b.iter()) {
                prop_assert_eq!(x.to_bits(), y.to_bits());
            }
        }
    }
}
