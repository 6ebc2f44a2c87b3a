//! Closed-form per-iteration guarantees for every engine, evaluated from
//! problem constants alone (spectral summary plus the exact least squares
//! solution), and the efficiency ratios comparing the greedy and fixed-step
//! engines.
//!
//! Except where a bound structurally needs trace data (the per-coordinate
//! visit count, or the realized prediction distance inside one shrinkage
//! expression), nothing here looks at a run: the point of these numbers is
//! that they are computable before boosting starts.

use serde::Serialize;

use crate::boosters::BoostTrace;
use crate::model::StandardizedProblem;
use crate::oracles::LeastSquaresSolution;
use crate::spectral::{gamma_unchecked, SpectralSummary};

/// The data-dependent constants every bound is built from.
#[derive(Debug, Clone, Serialize)]
pub struct ProblemConstants {
    pub n: usize,
    pub p: usize,
    pub lambda_pmin: f64,
    /// `||X beta_ls||_2` (or `||y||_2` when the substitution flag is used;
    /// it always dominates the fitted norm).
    pub fitted_norm: f64,
    /// `L_n^*`.
    pub loss_star: f64,
    /// Additive distortion of gamma, zero in normal operation. Nonzero only
    /// in self-test negative controls that must make bound checks fail.
    pub gamma_distortion: f64,
}

impl ProblemConstants {
    pub fn new(summary: &SpectralSummary, ls: &LeastSquaresSolution) -> Self {
        ProblemConstants {
            n: summary.n,
            p: summary.p,
            lambda_pmin: summary.lambda_pmin,
            fitted_norm: ls.fitted_norm,
            loss_star: ls.loss_star,
            gamma_distortion: 0.0,
        }
    }

    /// Substitute `||y||_2` for the fitted norm; valid since the fit never
    /// exceeds the response in norm, at the price of looser bounds.
    pub fn with_response_norm(
        summary: &SpectralSummary,
        ls: &LeastSquaresSolution,
        problem: &StandardizedProblem,
    ) -> Self {
        let mut c = Self::new(summary, ls);
        c.fitted_norm = problem.y().dot(problem.y()).sqrt();
        c
    }

    pub fn gamma(&self, epsilon: f64) -> f64 {
        gamma_unchecked(self.lambda_pmin, self.p, epsilon) + self.gamma_distortion
    }
}

/// One row of the greedy-engine guarantee profile.
#[derive(Debug, Clone, Serialize)]
pub struct LsBoostRow {
    pub k: usize,
    /// Bound on `L_n(beta_k) - L_n^*`.
    pub train_error_bound: f64,
    /// Bound on the l2 distance to the least squares solution set.
    pub coeff_dist_bound: f64,
    /// Bound on `||X beta_k - X beta_ls||_2`.
    pub prediction_dist_bound: f64,
    /// Bound on `||grad L_n(beta_k)||_inf = ||X'r_k||_inf / n`.
    pub gradient_bound: f64,
    /// A-priori l1-shrinkage estimate (the realized-distance term dropped).
    pub l1_shrink_bound: f64,
    /// Looser closed-form alternative to the shrinkage estimate.
    pub l1_shrink_alt: f64,
}

pub fn lsboost_bounds(c: &ProblemConstants, epsilon: f64, k: usize) -> LsBoostRow {
    let gamma = c.gamma(epsilon);
    let n = c.n as f64;
    let fitted = c.fitted_norm;
    let gk = gamma.powf(k as f64);
    let gk_half = gamma.powf(k as f64 / 2.0);
    let geo = epsilon * fitted * (1.0 - gk_half) / (1.0 - gamma.sqrt());
    LsBoostRow {
        k,
        train_error_bound: fitted * fitted * gk / (2.0 * n),
        coeff_dist_bound: fitted * gk_half / c.lambda_pmin.sqrt(),
        prediction_dist_bound: fitted * gk_half,
        gradient_bound: fitted * gk_half / n,
        l1_shrink_bound: (fitted * (k as f64 * epsilon / (2.0 - epsilon)).sqrt()).min(geo),
        l1_shrink_alt: fitted * ((k as f64 * epsilon).sqrt()).min(epsilon / (1.0 - gamma.sqrt())),
    }
}

/// The exact l1-shrinkage bound, which keeps the realized prediction
/// distance `||X beta_ls - X beta_k||_2` inside the square root.
pub fn lsboost_shrink_bound(
    c: &ProblemConstants,
    epsilon: f64,
    k: usize,
    prediction_dist: f64,
) -> f64 {
    let gamma = c.gamma(epsilon);
    let fitted = c.fitted_norm;
    let reduced = (fitted * fitted - prediction_dist * prediction_dist).max(0.0);
    let root_term = (k as f64 * epsilon / (2.0 - epsilon)).sqrt() * reduced.sqrt();
    let geo = epsilon * fitted * (1.0 - gamma.powf(k as f64 / 2.0)) / (1.0 - gamma.sqrt());
    root_term.min(geo)
}

/// One row of the fixed-step-engine profile. All bounds are of the
/// "there exists an iterate among the first k" kind.
#[derive(Debug, Clone, Serialize)]
pub struct FseRow {
    pub k: usize,
    pub train_error_bound: f64,
    pub coeff_dist_bound: f64,
    pub prediction_dist_bound: f64,
    /// Bound on `min_i ||X'r_i||_inf`.
    pub corr_bound: f64,
    /// `k epsilon`.
    pub l1_shrink_bound: f64,
}

pub fn fse_bounds(c: &ProblemConstants, epsilon: f64, k: usize) -> FseRow {
    let n = c.n as f64;
    let p = c.p as f64;
    let lambda = c.lambda_pmin;
    let fitted_sq = c.fitted_norm * c.fitted_norm;
    let bracket = fitted_sq / (epsilon * (k + 1) as f64) + epsilon;
    FseRow {
        k,
        train_error_bound: p / (2.0 * n * lambda) * bracket * bracket,
        coeff_dist_bound: p.sqrt() / lambda * bracket,
        prediction_dist_bound: (p / lambda).sqrt() * bracket,
        corr_bound: fitted_sq / (2.0 * epsilon * (k + 1) as f64) + epsilon / 2.0,
        l1_shrink_bound: k as f64 * epsilon,
    }
}

/// Limit of the fixed-step training bound as iterations grow:
/// `p epsilon^2 / (2 n lambda_pmin)` above the optimum.
pub fn fse_limit_train_gap(c: &ProblemConstants, epsilon: f64) -> f64 {
    c.p as f64 * epsilon * epsilon / (2.0 * c.n as f64 * c.lambda_pmin)
}

/// Training-bound value at a given shrinkage-bound level: the tradeoff curve
/// linking data fidelity to l1 shrinkage for the fixed-step engine.
pub fn fse_tradeoff(c: &ProblemConstants, epsilon: f64, shrink_bound: f64) -> f64 {
    let fitted_sq = c.fitted_norm * c.fitted_norm;
    let bracket = fitted_sq / (shrink_bound + epsilon) + epsilon;
    c.p as f64 / (2.0 * c.n as f64 * c.lambda_pmin) * bracket * bracket
}

/// One row of the regularized-engine profile, stated against the
/// l1-constrained optimum for budget `delta`.
#[derive(Debug, Clone, Serialize)]
pub struct RfsRow {
    pub k: usize,
    /// Bound on `min_i L_n(beta_i) - L*_{n,delta}`.
    pub train_gap_bound: f64,
    /// Bound on `min_i ||X beta_i - X beta*_delta||_2`.
    pub prediction_dist_bound: f64,
    /// `delta (1 - (1 - eps/delta)^k)`, increasing to `delta` from below.
    pub l1_shrink_bound: f64,
}

pub fn rfs_bounds(c: &ProblemConstants, epsilon: f64, delta: f64, k: usize) -> RfsRow {
    let n = c.n as f64;
    let fitted_sq = c.fitted_norm * c.fitted_norm;
    let kp1 = (k + 1) as f64;
    RfsRow {
        k,
        train_gap_bound: delta / n * (fitted_sq / (2.0 * epsilon * kp1) + 2.0 * epsilon),
        prediction_dist_bound: (delta * fitted_sq / (epsilon * kp1) + 4.0 * delta * epsilon).sqrt(),
        l1_shrink_bound: delta * (1.0 - (1.0 - epsilon / delta).powf(k as f64)),
    }
}

/// Bound on the profile-average suboptimality of a path run after `k`
/// iterations, governed by the largest grid value.
pub fn path_bounds(c: &ProblemConstants, epsilon: f64, delta_grid: &[f64], k: usize) -> f64 {
    let delta_bar = *delta_grid.last().expect("nonempty grid");
    let n = c.n as f64;
    let fitted_sq = c.fitted_norm * c.fitted_norm;
    delta_bar * fitted_sq / (2.0 * n * epsilon * (k + 1) as f64) + 2.0 * delta_bar * epsilon / n
}

/// Trace-dependent extras for the greedy engine: the two-rate bound on the
/// best gradient norm seen so far, and the l2-shrinkage bound through the
/// maximum per-coordinate visit count.
#[derive(Debug, Clone, Serialize)]
pub struct LsBoostExtraRow {
    pub k: usize,
    /// Bound on `min_{i<=k} ||grad L_n(beta_i)||_inf`.
    pub grad_inf_bound: f64,
    /// Bound on `||beta_k||_2`.
    pub l2_shrink_bound: f64,
    pub max_visits: usize,
}

pub fn lsboost_extra_bounds(
    c: &ProblemConstants,
    epsilon: f64,
    ls: &LeastSquaresSolution,
    problem: &StandardizedProblem,
    trace: &BoostTrace,
    k: usize,
) -> LsBoostExtraRow {
    assert!(
        k + 1 < trace.records.len(),
        "need the state after iteration k"
    );
    let n = c.n as f64;
    let fitted_sq = c.fitted_norm * c.fitted_norm;
    let gamma = c.gamma(epsilon);

    let pred_dist_sq = |rec_idx: usize| -> f64 {
        let beta = trace.records[rec_idx]
            .beta
            .as_ref()
            .expect("full trace required");
        let diff = problem.x().dot(beta) - &ls.fitted;
        diff.dot(&diff)
    };

    let sublinear = ((fitted_sq - pred_dist_sq(k + 1)).max(0.0)).sqrt()
        / (n * (epsilon * (2.0 - epsilon) * (k + 1) as f64).sqrt());
    let linear = c.fitted_norm * gamma.powf(k as f64 / 2.0) / n;

    let mut visits = vec![0usize; problem.p()];
    for rec in trace.records.iter().take(k + 1).skip(1) {
        visits[rec.selected.expect("non-initial record").index] += 1;
    }
    let max_visits = visits.into_iter().max().unwrap_or(0);
    let l2_shrink_bound = (max_visits as f64).sqrt()
        * (epsilon / (2.0 - epsilon)).sqrt()
        * ((fitted_sq - pred_dist_sq(k)).max(0.0)).sqrt();

    LsBoostExtraRow {
        k,
        grad_inf_bound: sublinear.min(linear),
        l2_shrink_bound,
        max_visits,
    }
}

/// Per-iteration bound rows for one algorithm family.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProfileRows {
    LsBoost(Vec<LsBoostRow>),
    Fse(Vec<FseRow>),
    Rfs(Vec<RfsRow>),
    /// `(k, average-suboptimality bound)` pairs.
    Path(Vec<(usize, f64)>),
}

/// A full guarantee profile: the constants the bounds are built from plus
/// the evaluated per-iteration rows for `k = 0..=iters`.
#[derive(Debug, Clone, Serialize)]
pub struct GuaranteeProfile {
    pub constants: ProblemConstants,
    pub epsilon: f64,
    pub delta: Option<f64>,
    pub rows: ProfileRows,
}

impl GuaranteeProfile {
    pub fn lsboost(constants: &ProblemConstants, epsilon: f64, iters: usize) -> Self {
        GuaranteeProfile {
            constants: constants.clone(),
            epsilon,
            delta: None,
            rows: ProfileRows::LsBoost(
                (0..=iters)
                    .map(|k| lsboost_bounds(constants, epsilon, k))
                    .collect(),
            ),
        }
    }

    pub fn fse(constants: &ProblemConstants, epsilon: f64, iters: usize) -> Self {
        GuaranteeProfile {
            constants: constants.clone(),
            epsilon,
            delta: None,
            rows: ProfileRows::Fse(
                (0..=iters)
                    .map(|k| fse_bounds(constants, epsilon, k))
                    .collect(),
            ),
        }
    }

    pub fn rfs(constants: &ProblemConstants, epsilon: f64, delta: f64, iters: usize) -> Self {
        GuaranteeProfile {
            constants: constants.clone(),
            epsilon,
            delta: Some(delta),
            rows: ProfileRows::Rfs(
                (0..=iters)
                    .map(|k| rfs_bounds(constants, epsilon, delta, k))
                    .collect(),
            ),
        }
    }

    pub fn path(
        constants: &ProblemConstants,
        epsilon: f64,
        delta_grid: &[f64],
        iters: usize,
    ) -> Self {
        GuaranteeProfile {
            constants: constants.clone(),
            epsilon,
            delta: delta_grid.last().copied(),
            rows: ProfileRows::Path(
                (0..=iters)
                    .map(|k| (k, path_bounds(constants, epsilon, delta_grid, k)))
                    .collect(),
            ),
        }
    }
}

/// Iteration counts and shrinkage-bound ratios for reaching a tau-relative
/// prediction error with each engine's tuned learning rate.
#[derive(Debug, Clone, Serialize)]
pub struct EfficiencyReport {
    pub tau: f64,
    pub k_lsboost: u64,
    pub k_fse: u64,
    /// Discrete iteration-count ratio.
    pub eta: f64,
    pub sbound_lsboost: f64,
    pub sbound_fse: f64,
    /// Discrete shrinkage-bound ratio `sqrt(k_lsboost / k_fse)`.
    pub vartheta: f64,
    /// `tau^2 ln(1/tau^2)`, maximized at `tau = exp(-1/2)` with value `1/e`.
    pub eta_continuous: f64,
    /// `tau sqrt(ln(1/tau^2))`, maximized at `tau = exp(-1/2)` with value
    /// `1/sqrt(e)`.
    pub vartheta_continuous: f64,
}

pub fn efficiency(c: &ProblemConstants, tau: f64) -> EfficiencyReport {
    assert!(tau > 0.0 && tau <= 1.0, "tau must lie in (0, 1]");
    let ratio = 4.0 * c.p as f64 / c.lambda_pmin;
    let log_term = (1.0 / (tau * tau)).ln();
    let k_lsboost = (ratio * log_term).ceil().max(0.0) as u64;
    let k_fse = ((ratio / (tau * tau)).ceil() as u64).saturating_sub(1);
    let eta = k_lsboost as f64 / k_fse as f64;
    let eps_fse = c.fitted_norm / ((k_fse + 1) as f64).sqrt();
    EfficiencyReport {
        tau,
        k_lsboost,
        k_fse,
        eta,
        sbound_lsboost: c.fitted_norm * (k_lsboost as f64).sqrt(),
        sbound_fse: eps_fse * k_fse as f64,
        vartheta: (k_lsboost as f64 / k_fse as f64).sqrt(),
        eta_continuous: tau * tau * log_term,
        vartheta_continuous: tau * log_term.sqrt(),
    }
}

/// Sandwich enclosing the greedy engine's training error at iteration `k`:
/// the constrained optimum at budget `l_k` from below, the geometric decay
/// from above. `lasso_loss_at_lk` is the oracle value `L*_{n, l_k}`.
pub fn sandwich(c: &ProblemConstants, epsilon: f64, k: usize, lasso_loss_at_lk: f64) -> (f64, f64) {
    let upper = c.fitted_norm * c.fitted_norm * c.gamma(epsilon).powf(k as f64)
        / (2.0 * c.n as f64)
        + c.loss_star;
    (lasso_loss_at_lk, upper)
}
