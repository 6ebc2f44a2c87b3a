//! Machine checks of every invariant family: trace consistency, the
//! per-family bound dominations, the engine/subgradient trace equivalences,
//! and the duality identities. Each check reports its worst violation so a
//! verification run can print per-family slack.

use ndarray::Array1;
use serde::Serialize;

use crate::boosters::{run, AlgorithmConfig, BoostTrace, GridExtension, Variant};
use crate::error::Result;
use crate::guarantees::{
    fse_bounds, lsboost_bounds, lsboost_shrink_bound, path_bounds, rfs_bounds, ProblemConstants,
};
use crate::model::{generate_synthetic, standardize, StandardizedProblem, SyntheticSpec};
use crate::oracles::{
    certify, delta_max, project_l1_ball, solve_lasso, solve_least_squares_with, LassoSolution,
    LeastSquaresSolution,
};
use crate::rng::GaussianSource;
use crate::spectral::GramEigen;
use crate::subgrad::{descend, ResidualObjective};

/// One verified statement: `pass` iff `max_violation <= tolerance`.
/// Negative violations measure slack.
#[derive(Debug, Clone, Serialize)]
pub struct CheckItem {
    pub label: String,
    pub max_violation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckItem {
    pub fn new(label: impl Into<String>, max_violation: f64, tolerance: f64) -> Self {
        CheckItem {
            label: label.into(),
            max_violation,
            pass: max_violation <= tolerance,
            tolerance,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub family: String,
    pub items: Vec<CheckItem>,
    pub pass: bool,
}

impl FamilyReport {
    pub fn new(family: impl Into<String>, items: Vec<CheckItem>) -> Self {
        let pass = items.iter().all(|i| i.pass);
        FamilyReport {
            family: family.into(),
            items,
            pass,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub families: Vec<FamilyReport>,
    pub pass: bool,
}

/// Accumulates the worst violation of one inequality over many points.
struct Worst {
    value: f64,
}

impl Worst {
    fn new() -> Self {
        Worst {
            value: f64::NEG_INFINITY,
        }
    }

    /// Record `observed <= bound`, violation measured relative to the bound
    /// scale.
    fn le_rel(&mut self, observed: f64, bound: f64) {
        self.value = self.value.max((observed - bound) / bound.abs().max(1.0));
    }

    /// Record `observed <= bound` with an absolute violation.
    fn le_abs(&mut self, observed: f64, bound: f64) {
        self.value = self.value.max(observed - bound);
    }

    fn into_item(self, label: &str, tolerance: f64) -> CheckItem {
        let v = if self.value == f64::NEG_INFINITY {
            0.0
        } else {
            self.value
        };
        CheckItem::new(label, v, tolerance)
    }
}

/// `max_k ||(y - X beta_k) - r_k||_inf` across a full trace.
pub fn residual_consistency_item(problem: &StandardizedProblem, trace: &BoostTrace) -> CheckItem {
    CheckItem::new(
        format!("{}: residual consistency", trace.variant.name()),
        trace.max_residual_inconsistency(problem),
        crate::boosters::RESIDUAL_CONSISTENCY_TOL,
    )
}

/// Every per-iteration guarantee of the greedy engine: the contraction of
/// the training gap, the residual-change identity, and the six closed-form
/// bounds checked against the realized trace.
pub fn lsboost_guarantee_items(
    problem: &StandardizedProblem,
    trace: &BoostTrace,
    constants: &ProblemConstants,
    epsilon: f64,
    ls: &LeastSquaresSolution,
    eigen: &GramEigen,
) -> Vec<CheckItem> {
    let gamma = constants.gamma(epsilon);
    let n = problem.n() as f64;

    let mut contraction = Worst::new();
    let mut step_identity = Worst::new();
    let mut train = Worst::new();
    let mut coeff = Worst::new();
    let mut pred = Worst::new();
    let mut grad = Worst::new();
    let mut shrink = Worst::new();
    let mut sparsity = Worst::new();
    let mut gamma_valid = Worst::new();

    gamma_valid.le_abs(gamma, 1.0 - f64::EPSILON);
    gamma_valid.le_abs(0.75, gamma);

    let mut prev_gap: Option<f64> = None;
    let mut prev_residual: Option<Array1<f64>> = None;
    for rec in &trace.records {
        let beta = rec.beta.as_ref().expect("full trace required");
        let residual = rec.residual.as_ref().expect("full trace required");
        let gap = problem.loss(beta) - ls.loss_star;
        let k = rec.k;

        if let Some(prev) = prev_gap {
            contraction.le_abs(gap, gamma * prev);
        }
        if let (Some(prev_r), Some(info)) = (&prev_residual, rec.selected.as_ref()) {
            let diff = residual - prev_r;
            step_identity.le_abs(
                (diff.dot(&diff).sqrt() - epsilon * info.correlation.abs()).abs(),
                0.0,
            );
        }

        let row = lsboost_bounds(constants, epsilon, k);
        train.le_rel(gap, row.train_error_bound);

        let dist = eigen.distance_to_solution_set(problem, beta, &ls.beta_ls);
        coeff.le_rel(dist, row.coeff_dist_bound);

        let fit_diff = problem.x().dot(beta) - &ls.fitted;
        let pred_dist = fit_diff.dot(&fit_diff).sqrt();
        pred.le_rel(pred_dist, row.prediction_dist_bound);

        grad.le_rel(rec.inf_corr / n, row.gradient_bound);

        let exact_shrink = lsboost_shrink_bound(constants, epsilon, k, pred_dist);
        shrink.le_rel(rec.l1_norm, exact_shrink);

        sparsity.le_abs(rec.l0_norm as f64, k as f64);

        prev_gap = Some(gap);
        prev_residual = Some(residual.clone());
    }

    vec![
        gamma_valid.into_item("lsboost: gamma in [0.75, 1)", 0.0),
        contraction.into_item("lsboost: per-step gap contraction by gamma", 1e-12),
        step_identity.into_item("lsboost: residual-change norm identity", 1e-10),
        train.into_item("lsboost: training error bound", 1e-9),
        coeff.into_item("lsboost: coefficient distance bound", 1e-9),
        pred.into_item("lsboost: prediction distance bound", 1e-9),
        grad.into_item("lsboost: gradient norm bound", 1e-9),
        shrink.into_item("lsboost: l1 shrinkage bound", 1e-9),
        sparsity.into_item("lsboost: sparsity bound", 0.0),
    ]
}

/// The fixed-step engine guarantees; the distance-style statements hold for
/// the best iterate so far, so observed values enter as running minima.
pub fn fse_guarantee_items(
    problem: &StandardizedProblem,
    trace: &BoostTrace,
    constants: &ProblemConstants,
    epsilon: f64,
    ls: &LeastSquaresSolution,
    eigen: &GramEigen,
) -> Vec<CheckItem> {
    let mut step_identity = Worst::new();
    let mut train = Worst::new();
    let mut coeff = Worst::new();
    let mut pred = Worst::new();
    let mut corr = Worst::new();
    let mut shrink = Worst::new();
    let mut sparsity = Worst::new();

    let mut best_gap = f64::INFINITY;
    let mut best_dist = f64::INFINITY;
    let mut best_pred = f64::INFINITY;
    let mut best_corr = f64::INFINITY;
    let mut prev_residual: Option<Array1<f64>> = None;

    for rec in &trace.records {
        let beta = rec.beta.as_ref().expect("full trace required");
        let residual = rec.residual.as_ref().expect("full trace required");
        let k = rec.k;

        if let (Some(prev_r), Some(info)) = (&prev_residual, rec.selected.as_ref()) {
            let diff = residual - prev_r;
            step_identity.le_abs(
                (diff.dot(&diff).sqrt() - epsilon * info.sign.abs()).abs(),
                0.0,
            );
        }

        best_gap = best_gap.min(problem.loss(beta) - ls.loss_star);
        best_dist = best_dist.min(eigen.distance_to_solution_set(problem, beta, &ls.beta_ls));
        let fit_diff = problem.x().dot(beta) - &ls.fitted;
        best_pred = best_pred.min(fit_diff.dot(&fit_diff).sqrt());
        best_corr = best_corr.min(rec.inf_corr);

        let row = fse_bounds(constants, epsilon, k);
        train.le_rel(best_gap, row.train_error_bound);
        coeff.le_rel(best_dist, row.coeff_dist_bound);
        pred.le_rel(best_pred, row.prediction_dist_bound);
        corr.le_rel(best_corr, row.corr_bound);
        shrink.le_abs(rec.l1_norm, row.l1_shrink_bound);
        sparsity.le_abs(rec.l0_norm as f64, k as f64);

        prev_residual = Some(residual.clone());
    }

    vec![
        step_identity.into_item("fse: residual-change norm identity", 1e-10),
        train.into_item("fse: best training error bound", 1e-9),
        coeff.into_item("fse: best coefficient distance bound", 1e-9),
        pred.into_item("fse: best prediction distance bound", 1e-9),
        corr.into_item("fse: best correlation bound", 1e-9),
        shrink.into_item("fse: l1 growth bound", 1e-12),
        sparsity.into_item("fse: sparsity bound", 0.0),
    ]
}

/// The regularized-engine guarantees against the constrained optimum
/// supplied by the independent solver.
pub fn rfs_guarantee_items(
    problem: &StandardizedProblem,
    trace: &BoostTrace,
    constants: &ProblemConstants,
    epsilon: f64,
    delta: f64,
    lasso: &LassoSolution,
) -> Vec<CheckItem> {
    let mut feasibility = Worst::new();
    let mut budget = Worst::new();
    let mut train = Worst::new();
    let mut pred = Worst::new();
    let mut sparsity = Worst::new();

    let lasso_fit = problem.x().dot(&lasso.beta_star);
    let mut best_gap = f64::INFINITY;
    let mut best_pred = f64::INFINITY;

    for rec in &trace.records {
        let beta = rec.beta.as_ref().expect("full trace required");
        let k = rec.k;
        let row = rfs_bounds(constants, epsilon, delta, k);

        feasibility.le_abs(rec.l1_norm, row.l1_shrink_bound);
        budget.le_abs(rec.l1_norm, delta);

        best_gap = best_gap.min(problem.loss(beta) - lasso.loss_star_delta);
        let diff = problem.x().dot(beta) - &lasso_fit;
        best_pred = best_pred.min(diff.dot(&diff).sqrt());
        train.le_rel(best_gap, row.train_gap_bound);
        pred.le_rel(best_pred, row.prediction_dist_bound);

        sparsity.le_abs(rec.l0_norm as f64, k as f64);
    }

    vec![
        feasibility.into_item("rfs: geometric l1 shrinkage chain", 1e-10),
        budget.into_item("rfs: l1 budget never exceeded", 1e-10),
        train.into_item("rfs: best training gap bound", 1e-9),
        pred.into_item("rfs: best prediction distance bound", 1e-9),
        sparsity.into_item("rfs: sparsity bound", 0.0),
    ]
}

/// Per-iteration budgets actually in force for a path run.
pub fn resolved_path_grid(grid: &[f64], extension: GridExtension, iters: usize) -> Vec<f64> {
    (0..iters)
        .map(|k| match extension {
            GridExtension::ClampLast => grid[k.min(grid.len() - 1)],
            GridExtension::Strict => grid[k],
        })
        .collect()
}

/// Path-run guarantees: per-iterate feasibility under its own budget and the
/// profile-average suboptimality bound. `lasso_losses[i]` must hold
/// `L*_{n, delta_i}` for the budget in force at iterate `i` (with
/// `lasso_losses[0]` the value at the first budget).
pub fn path_guarantee_items(
    problem: &StandardizedProblem,
    trace: &BoostTrace,
    constants: &ProblemConstants,
    epsilon: f64,
    per_iterate_delta: &[f64],
    lasso_losses: &[f64],
) -> Vec<CheckItem> {
    assert_eq!(per_iterate_delta.len(), trace.records.len());
    assert_eq!(lasso_losses.len(), trace.records.len());

    let mut feasibility = Worst::new();
    let mut average = Worst::new();
    let mut running_sum = 0.0;

    for (rec, (&delta_i, &loss_i)) in trace
        .records
        .iter()
        .zip(per_iterate_delta.iter().zip(lasso_losses.iter()))
    {
        let beta = rec.beta.as_ref().expect("full trace required");
        feasibility.le_abs(rec.l1_norm, delta_i);
        running_sum += problem.loss(beta) - loss_i;
        let avg = running_sum / (rec.k + 1) as f64;
        let bound = path_bounds(constants, epsilon, per_iterate_delta, rec.k);
        average.le_abs(avg, bound);
    }

    vec![
        feasibility.into_item("path: per-iterate l1 feasibility", 1e-10),
        average.into_item("path: profile-average suboptimality bound", 1e-8),
    ]
}

/// Trace equivalences between the engines and subgradient descent: the
/// fixed-step engine against constant-step descent on the correlation
/// objective, the greedy engine against descent with refit-scaled steps,
/// and the regularized engine against descent on the regularized objective.
pub fn equivalence_items(
    problem: &StandardizedProblem,
    epsilon: f64,
    delta: f64,
    iters: usize,
) -> Result<Vec<CheckItem>> {
    let mut items = Vec::new();

    let fse = run(
        problem,
        &AlgorithmConfig::new(Variant::Fse { epsilon }, iters),
    )?;
    let cm_states = descend(
        &ResidualObjective::cm(problem),
        &vec![epsilon; iters],
        iters,
    );
    items.push(CheckItem::new(
        "fse matches constant-step correlation descent",
        trace_state_distance(&fse, &cm_states),
        1e-12,
    ));

    let eps_ls = epsilon.min(1.0);
    let lsb = run(
        problem,
        &AlgorithmConfig::new(Variant::LsBoost { epsilon: eps_ls }, iters),
    )?;
    let alphas: Vec<f64> = lsb.records[1..]
        .iter()
        .map(|r| eps_ls * r.selected.expect("stepped record").correlation.abs())
        .collect();
    let scaled_states = descend(&ResidualObjective::cm(problem), &alphas, iters);
    items.push(CheckItem::new(
        "greedy refit matches refit-scaled correlation descent",
        trace_state_distance(&lsb, &scaled_states),
        1e-12,
    ));

    let rfs = run(
        problem,
        &AlgorithmConfig::new(Variant::Rfs { epsilon, delta }, iters),
    )?;
    let rcm_states = descend(
        &ResidualObjective::rcm(problem, delta),
        &vec![epsilon; iters],
        iters,
    );
    items.push(CheckItem::new(
        "regularized stagewise matches regularized-objective descent",
        trace_state_distance(&rfs, &rcm_states),
        1e-12,
    ));

    Ok(items)
}

fn trace_state_distance(trace: &BoostTrace, states: &[crate::subgrad::SubgradState]) -> f64 {
    let mut worst = 0.0f64;
    for (rec, st) in trace.records.iter().zip(states.iter()) {
        let beta = rec.beta.as_ref().expect("full trace required");
        let residual = rec.residual.as_ref().expect("full trace required");
        for (a, b) in residual.iter().zip(st.residual.iter()) {
            worst = worst.max((a - b).abs());
        }
        for (a, b) in beta.iter().zip(st.beta_shadow.iter()) {
            worst = worst.max((a - b).abs());
        }
    }
    worst
}

/// Weak duality on random primal/dual pairs, strong duality at solver
/// optima, domination of the true gap by the certified bound, and
/// monotonicity of the constrained optimum in the budget.
pub fn duality_items(
    problem: &StandardizedProblem,
    delta_fracs: &[f64],
    lasso_tol: f64,
    seed: u64,
) -> Result<Vec<CheckItem>> {
    let n = problem.n() as f64;
    let y_half_sq = problem.y().dot(problem.y()) / (2.0 * n);
    let dmax = delta_max(problem)?;

    let mut weak = Worst::new();
    let mut strong = Worst::new();
    let mut gap_dom = Worst::new();
    let mut monotone = Worst::new();

    let mut src = GaussianSource::from_seed(seed);
    let mut prev_loss = f64::INFINITY;
    for &frac in delta_fracs {
        let delta = frac * dmax;
        let sol = solve_lasso(problem, delta, lasso_tol)?;

        // Strong duality at the solver optimum.
        let r_star = problem.residual(&sol.beta_star);
        let xtr = problem.x().t().dot(&r_star);
        let max_corr = xtr.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        let dist = &r_star - problem.y();
        let f_delta = max_corr + dist.dot(&dist) / (2.0 * delta);
        strong.le_abs(
            (sol.loss_star_delta + delta / n * f_delta - y_half_sq).abs(),
            0.0,
        );

        monotone.le_abs(sol.loss_star_delta, prev_loss);
        prev_loss = sol.loss_star_delta;

        // Random feasible points: weak duality and gap domination.
        for _ in 0..20 {
            let raw = Array1::from_iter((0..problem.p()).map(|_| src.next_normal()));
            let beta = project_l1_ball(&raw, delta);
            let other = Array1::from_iter((0..problem.p()).map(|_| src.next_normal()));
            let r_tilde = problem.residual(&other);
            let xtr2 = problem.x().t().dot(&r_tilde);
            let mc = xtr2.iter().fold(0.0f64, |m, c| m.max(c.abs()));
            let d2 = &r_tilde - problem.y();
            let fd = mc + d2.dot(&d2) / (2.0 * delta);
            weak.le_abs(y_half_sq, problem.loss(&beta) + delta / n * fd);

            let cert = certify(problem, &beta, delta)?;
            let true_gap = problem.loss(&beta) - sol.loss_star_delta;
            gap_dom.le_abs(true_gap, cert.gap_bound);
        }
    }

    Ok(vec![
        weak.into_item("duality: weak duality on random pairs", 1e-10),
        strong.into_item("duality: strong duality residual at optima", 1e-6),
        gap_dom.into_item("duality: certified bound dominates true gap", 1e-9),
        monotone.into_item("duality: constrained optimum monotone in budget", 1e-10),
    ])
}

/// Options for the default verification battery.
#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Additive gamma distortion; nonzero values are a negative control and
    /// must break the greedy-engine bound family.
    pub gamma_distortion: f64,
    pub iters: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 7,
            gamma_distortion: 0.0,
            iters: 150,
        }
    }
}

/// Run every invariant family on a small battery of seeded instances,
/// including an overdetermined, a correlated, and a rank-deficient design.
pub fn run_default_suite(opts: &SuiteOptions) -> Result<SuiteReport> {
    let shapes = [(40usize, 15usize, 0.0), (40, 15, 0.7), (25, 50, 0.5)];
    let mut families = Vec::new();

    for (idx, &(n, p, rho)) in shapes.iter().enumerate() {
        let data = generate_synthetic(&SyntheticSpec {
            n,
            p,
            rho,
            snr: 1.0,
            support: 5.min(p),
            seed: opts.seed + idx as u64,
        })?;
        let problem = standardize(&data.raw, true)?;
        let eigen = GramEigen::compute(&problem)?;
        let summary = eigen.summary()?;
        let ls = solve_least_squares_with(&problem, &eigen)?;
        let mut constants = ProblemConstants::new(&summary, &ls);
        constants.gamma_distortion = opts.gamma_distortion;
        let tag = format!("n={n} p={p} rho={rho}");

        let mut consistency = Vec::new();
        let mut lsboost_items = Vec::new();
        for eps in [0.1, 1.0] {
            let trace = run(
                &problem,
                &AlgorithmConfig::new(Variant::LsBoost { epsilon: eps }, opts.iters),
            )?;
            consistency.push(residual_consistency_item(&problem, &trace));
            lsboost_items.extend(lsboost_guarantee_items(
                &problem, &trace, &constants, eps, &ls, &eigen,
            ));
        }
        families.push(FamilyReport::new(
            format!("greedy engine bounds [{tag}]"),
            lsboost_items,
        ));

        let eps_fse = 0.05;
        let fse_trace = run(
            &problem,
            &AlgorithmConfig::new(Variant::Fse { epsilon: eps_fse }, opts.iters),
        )?;
        consistency.push(residual_consistency_item(&problem, &fse_trace));
        families.push(FamilyReport::new(
            format!("fixed-step engine bounds [{tag}]"),
            fse_guarantee_items(&problem, &fse_trace, &constants, eps_fse, &ls, &eigen),
        ));

        let dmax = delta_max(&problem)?;
        let delta = 0.5 * dmax;
        let eps_rfs = (0.02 * dmax).min(delta);
        let rfs_trace = run(
            &problem,
            &AlgorithmConfig::new(
                Variant::Rfs {
                    epsilon: eps_rfs,
                    delta,
                },
                opts.iters,
            ),
        )?;
        consistency.push(residual_consistency_item(&problem, &rfs_trace));
        let lasso = solve_lasso(&problem, delta, 1e-8)?;
        families.push(FamilyReport::new(
            format!("regularized engine bounds [{tag}]"),
            rfs_guarantee_items(&problem, &rfs_trace, &constants, eps_rfs, delta, &lasso),
        ));

        let grid: Vec<f64> = (0..20)
            .map(|i| 0.2 * dmax * (4.0f64).powf(i as f64 / 19.0))
            .collect();
        let path_cfg = AlgorithmConfig::new(
            Variant::PathRfs {
                epsilon: (0.05 * grid[0]).min(grid[0]),
                delta_grid: grid.clone(),
            },
            opts.iters,
        );
        let path_trace = run(&problem, &path_cfg)?;
        consistency.push(residual_consistency_item(&problem, &path_trace));
        let eps_path = match path_cfg.variant {
            Variant::PathRfs { epsilon, .. } => epsilon,
            _ => unreachable!(),
        };
        let resolved = {
            let mut v = vec![grid[0]];
            v.extend(resolved_path_grid(
                &grid,
                GridExtension::ClampLast,
                path_trace.iterations(),
            ));
            v
        };
        let mut losses = Vec::with_capacity(resolved.len());
        let mut cache: Vec<(f64, f64)> = Vec::new();
        for &d in &resolved {
            let hit = cache.iter().find(|(key, _)| *key == d).map(|(_, v)| *v);
            let loss = match hit {
                Some(v) => v,
                None => {
                    let v = solve_lasso(&problem, d, 1e-9)?.loss_star_delta;
                    cache.push((d, v));
                    v
                }
            };
            losses.push(loss);
        }
        families.push(FamilyReport::new(
            format!("path engine bounds [{tag}]"),
            path_guarantee_items(
                &problem,
                &path_trace,
                &constants,
                eps_path,
                &resolved,
                &losses,
            ),
        ));

        families.push(FamilyReport::new(
            format!("residual consistency [{tag}]"),
            consistency,
        ));

        families.push(FamilyReport::new(
            format!("subgradient equivalences [{tag}]"),
            equivalence_items(&problem, (0.05 * dmax).min(0.5 * dmax), 0.5 * dmax, 120)?,
        ));

        families.push(FamilyReport::new(
            format!("duality [{tag}]"),
            duality_items(&problem, &[0.2, 0.4, 0.6, 0.8, 1.0], 1e-8, opts.seed + 100)?,
        ));

        // Gamma stays inside [0.75, 1) across the learning-rate range.
        let mut gamma_range = Worst::new();
        for i in 1..=20 {
            let g = constants.gamma(i as f64 / 20.0);
            gamma_range.le_abs(g, 1.0 - f64::EPSILON);
            gamma_range.le_abs(0.75, g);
        }
        families.push(FamilyReport::new(
            format!("gamma range [{tag}]"),
            vec![gamma_range.into_item("gamma within [0.75, 1)", 0.0)],
        ));
    }

    let pass = families.iter().all(|f| f.pass);
    Ok(SuiteReport { families, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_passes() {
        let report = run_default_suite(&SuiteOptions {
            iters: 60,
            ..SuiteOptions::default()
        })
        .unwrap();
        for family in &report.families {
            for item in &family.items {
                assert!(
                    item.pass,
                    "{} / {}: violation {} > tol {}",
                    family.family, item.label, item.max_violation, item.tolerance
                );
            }
        }
        assert!(report.pass);
    }

    #[test]
    fn distorted_gamma_breaks_bound_checks() {
        let report = run_default_suite(&SuiteOptions {
            iters: 40,
            gamma_distortion: 0.1,
            ..SuiteOptions::default()
        })
        .unwrap();
        assert!(!report.pass);
        let broken = report
            .families
            .iter()
            .any(|f| f.family.starts_with("greedy engine bounds") && !f.pass);
        assert!(
            broken,
            "gamma distortion must break the greedy bound family"
        );
    }
}
