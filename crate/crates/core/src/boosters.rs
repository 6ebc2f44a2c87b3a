//! The boosting engines: least squares boosting, incremental forward
//! stagewise regression (uniform and scheduled learning rates), its
//! regularized variant, and the path-tracing variant that sweeps the
//! regularization budget along a grid.
//!
//! All five are steppable state machines over a shared
//! [`StandardizedProblem`]. Residuals and coefficients are both updated
//! incrementally, exactly as the update rules are written; the agreement of
//! the two (`r = y - X beta`) is a cross-check, not an implementation detail.

use ndarray::{Array1, Array2};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::StandardizedProblem;

/// Coefficients with magnitude above this count as nonzero when reporting
/// sparsity. Rescaling variants never produce exact zeros, so sparsity is
/// thresholded rather than exact.
pub const SPARSITY_THRESHOLD: f64 = 1e-5;

/// Tolerance on the incremental-residual consistency check
/// `max_k || (y - X beta_k) - r_k ||_inf`.
pub const RESIDUAL_CONSISTENCY_TOL: f64 = 1e-10;

/// Sign with `sgn(0) = 0`: an exactly-zero correlation is a detected fixed
/// point, not an error.
pub fn sgn(v: f64) -> f64 {
    if v > 0.0 {
        1.0
    } else if v < 0.0 {
        -1.0
    } else {
        0.0
    }
}

/// Algorithm family plus its variant-specific parameters.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Variant {
    /// Greedy univariate refit shrunk by `epsilon` in (0, 1].
    LsBoost { epsilon: f64 },
    /// Fixed-size signed steps of length `epsilon > 0`.
    Fse { epsilon: f64 },
    /// Forward stagewise with a per-iteration learning rate schedule.
    Fsek { schedule: Vec<f64> },
    /// Forward stagewise with geometric coefficient rescaling toward the
    /// l1 budget `delta`; `delta = +inf` reproduces `Fse` exactly.
    Rfs { epsilon: f64, delta: f64 },
    /// `Rfs` with a per-iteration nondecreasing budget grid.
    PathRfs { epsilon: f64, delta_grid: Vec<f64> },
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::LsBoost { .. } => "lsboost",
            Variant::Fse { .. } => "fse",
            Variant::Fsek { .. } => "fsek",
            Variant::Rfs { .. } => "rfs",
            Variant::PathRfs { .. } => "path-rfs",
        }
    }
}

/// What happens when a path run outlives its budget grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GridExtension {
    /// Reuse the last grid value for the remaining iterations (default).
    ClampLast,
    /// Refuse to run: the grid must cover every iteration.
    Strict,
}

/// Whether per-iteration coefficient and residual vectors are retained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TraceMode {
    /// Keep full vectors each iteration (default; enables cross-checks).
    Full,
    /// Keep scalar statistics only, for very long runs.
    StatsOnly,
}

#[derive(Debug, Clone)]
pub struct AlgorithmConfig {
    pub variant: Variant,
    pub max_iters: usize,
    /// Early stop once `||X'r||_inf` falls to this level. The default 0
    /// runs all iterations, stopping only at an exact fixed point.
    pub stop_tolerance: f64,
    pub trace_mode: TraceMode,
    pub grid_extension: GridExtension,
}

impl AlgorithmConfig {
    pub fn new(variant: Variant, max_iters: usize) -> Self {
        AlgorithmConfig {
            variant,
            max_iters,
            stop_tolerance: 0.0,
            trace_mode: TraceMode::Full,
            grid_extension: GridExtension::ClampLast,
        }
    }

    pub fn with_stop_tolerance(mut self, tol: f64) -> Self {
        self.stop_tolerance = tol;
        self
    }

    pub fn with_trace_mode(mut self, mode: TraceMode) -> Self {
        self.trace_mode = mode;
        self
    }

    pub fn with_grid_extension(mut self, ext: GridExtension) -> Self {
        self.grid_extension = ext;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.stop_tolerance < 0.0 {
            return Err(Error::invalid("stop tolerance must be nonnegative"));
        }
        match &self.variant {
            Variant::LsBoost { epsilon } => {
                if !(*epsilon > 0.0 && *epsilon <= 1.0) {
                    return Err(Error::EpsilonOutOfRange { epsilon: *epsilon });
                }
            }
            Variant::Fse { epsilon } => {
                if !(*epsilon > 0.0) {
                    return Err(Error::invalid(format!(
                        "learning rate {epsilon} must be positive"
                    )));
                }
            }
            Variant::Fsek { schedule } => {
                if schedule.iter().any(|e| !(*e >= 0.0) || !e.is_finite()) {
                    return Err(Error::invalid(
                        "schedule entries must be finite and nonnegative",
                    ));
                }
                if schedule.len() < self.max_iters {
                    return Err(Error::ScheduleTooShort {
                        schedule_len: schedule.len(),
                        max_iters: self.max_iters,
                    });
                }
            }
            Variant::Rfs { epsilon, delta } => {
                if !(*epsilon > 0.0) {
                    return Err(Error::invalid(format!(
                        "learning rate {epsilon} must be positive"
                    )));
                }
                if !(*delta > 0.0) {
                    return Err(Error::invalid(format!("delta {delta} must be positive")));
                }
                if *epsilon > *delta {
                    return Err(Error::invalid(format!(
                        "regularized stagewise needs epsilon <= delta, got epsilon {epsilon} > delta {delta}"
                    )));
                }
            }
            Variant::PathRfs {
                epsilon,
                delta_grid,
            } => {
                if !(*epsilon > 0.0) {
                    return Err(Error::invalid(format!(
                        "learning rate {epsilon} must be positive"
                    )));
                }
                if delta_grid.is_empty() {
                    return Err(Error::invalid("delta grid must be nonempty"));
                }
                if delta_grid.iter().any(|d| !(*d > 0.0)) {
                    return Err(Error::invalid("delta grid entries must be positive"));
                }
                if delta_grid.windows(2).any(|w| w[1] < w[0]) {
                    return Err(Error::invalid("delta grid must be nondecreasing"));
                }
                if *epsilon > delta_grid[0] {
                    return Err(Error::invalid(format!(
                        "path run needs epsilon <= first grid value, got epsilon {epsilon} > {}",
                        delta_grid[0]
                    )));
                }
                if self.grid_extension == GridExtension::Strict && delta_grid.len() < self.max_iters
                {
                    return Err(Error::GridTooShort {
                        grid_len: delta_grid.len(),
                        max_iters: self.max_iters,
                    });
                }
            }
        }
        Ok(())
    }
}

/// The step applied at one iteration.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct StepInfo {
    /// Selected column.
    pub index: usize,
    /// Sign of the correlation at selection (0 at an exact fixed point).
    pub sign: f64,
    /// Signed change actually applied to the selected coefficient.
    pub step: f64,
    /// Signed correlation `r' X_j` at selection.
    pub correlation: f64,
    /// Budget in force at this iteration (regularized variants only).
    pub delta: Option<f64>,
}

/// State after `k` iterations plus the step that produced it.
#[derive(Debug, Clone)]
pub struct TraceRecord {
    pub k: usize,
    /// `None` for the initial state `k = 0`.
    pub selected: Option<StepInfo>,
    /// Present in [`TraceMode::Full`] runs only.
    pub beta: Option<Array1<f64>>,
    pub residual: Option<Array1<f64>>,
    pub train_error: f64,
    pub l1_norm: f64,
    /// Count of coefficients above [`SPARSITY_THRESHOLD`] in magnitude.
    pub l0_norm: usize,
    /// `||X'r||_inf` at this state.
    pub inf_corr: f64,
}

/// Complete record of one engine run, state `k = 0` included.
#[derive(Debug, Clone)]
pub struct BoostTrace {
    pub variant: Variant,
    pub records: Vec<TraceRecord>,
    /// True when the stop tolerance fired before `max_iters`.
    pub stopped_early: bool,
}

impl BoostTrace {
    /// Number of completed iterations (records minus the initial state).
    pub fn iterations(&self) -> usize {
        self.records.len() - 1
    }

    pub fn final_record(&self) -> &TraceRecord {
        self.records
            .last()
            .expect("a trace always has the initial state")
    }

    /// Largest deviation between the incrementally maintained residual and
    /// `y - X beta`, over all recorded states. Requires a full trace.
    pub fn max_residual_inconsistency(&self, problem: &StandardizedProblem) -> f64 {
        let mut worst = 0.0f64;
        for rec in &self.records {
            let (Some(beta), Some(residual)) = (&rec.beta, &rec.residual) else {
                continue;
            };
            let direct = problem.residual(beta);
            for (a, b) in direct.iter().zip(residual.iter()) {
                worst = worst.max((a - b).abs());
            }
        }
        worst
    }
}

/// Smallest index attaining `max_j |r' X_j|`, with the signed correlation at
/// that index. The fixed smallest-index tie-break keeps every engine (and the
/// subgradient view of each engine) on the same trajectory.
pub fn select_column(x: &Array2<f64>, resid: &Array1<f64>) -> (usize, f64) {
    let correlations = x.t().dot(resid);
    let mut best = 0usize;
    let mut best_abs = correlations[0].abs();
    for (j, c) in correlations.iter().enumerate().skip(1) {
        let a = c.abs();
        if a > best_abs {
            best = j;
            best_abs = a;
        }
    }
    (best, correlations[best])
}

/// Mutable engine state: coefficients and incrementally updated residuals.
#[derive(Debug, Clone)]
pub struct BoostState {
    pub beta: Array1<f64>,
    pub residual: Array1<f64>,
}

impl BoostState {
    /// `beta = 0`, `r = y`.
    pub fn initial(problem: &StandardizedProblem) -> Self {
        BoostState {
            beta: Array1::zeros(problem.p()),
            residual: problem.y().clone(),
        }
    }

    /// One least squares boosting step: refit the best column's univariate
    /// coefficient and apply it shrunk by `epsilon`.
    pub fn step_lsboost(&mut self, problem: &StandardizedProblem, epsilon: f64) -> StepInfo {
        let (j, corr) = select_column(problem.x(), &self.residual);
        self.apply_lsboost(problem, epsilon, j, corr)
    }

    pub(crate) fn apply_lsboost(
        &mut self,
        problem: &StandardizedProblem,
        epsilon: f64,
        j: usize,
        corr: f64,
    ) -> StepInfo {
        // Under unit-norm columns the univariate least squares coefficient
        // is the correlation itself.
        let step = epsilon * corr;
        self.beta[j] += step;
        let col = problem.x().column(j);
        for (r, xij) in self.residual.iter_mut().zip(col.iter()) {
            *r -= step * xij;
        }
        StepInfo {
            index: j,
            sign: sgn(corr),
            step,
            correlation: corr,
            delta: None,
        }
    }

    /// One incremental forward stagewise step of fixed size `epsilon`.
    pub fn step_fse(&mut self, problem: &StandardizedProblem, epsilon: f64) -> StepInfo {
        let (j, corr) = select_column(problem.x(), &self.residual);
        self.apply_fse(problem, epsilon, j, corr)
    }

    pub(crate) fn apply_fse(
        &mut self,
        problem: &StandardizedProblem,
        epsilon: f64,
        j: usize,
        corr: f64,
    ) -> StepInfo {
        let s = sgn(corr);
        let step = epsilon * s;
        self.beta[j] += step;
        let col = problem.x().column(j);
        for (r, xij) in self.residual.iter_mut().zip(col.iter()) {
            *r -= step * xij;
        }
        StepInfo {
            index: j,
            sign: s,
            step,
            correlation: corr,
            delta: None,
        }
    }

    /// Forward stagewise with the iteration's own learning rate; a zero rate
    /// leaves the state untouched.
    pub fn step_fsek(&mut self, problem: &StandardizedProblem, epsilon_k: f64) -> StepInfo {
        self.step_fse(problem, epsilon_k)
    }

    /// One regularized forward stagewise step: rescale every coefficient by
    /// `1 - epsilon/delta`, then take a signed `epsilon` step on the selected
    /// coordinate. `delta = +inf` reduces to [`BoostState::step_fse`].
    pub fn step_rfs(
        &mut self,
        problem: &StandardizedProblem,
        epsilon: f64,
        delta: f64,
    ) -> StepInfo {
        let (j, corr) = select_column(problem.x(), &self.residual);
        self.apply_rfs(problem, epsilon, delta, j, corr)
    }

    pub(crate) fn apply_rfs(
        &mut self,
        problem: &StandardizedProblem,
        epsilon: f64,
        delta: f64,
        j: usize,
        corr: f64,
    ) -> StepInfo {
        let s = sgn(corr);
        let shrink = 1.0 - epsilon / delta;
        let before = self.beta[j];

        let col = problem.x().column(j);
        let y = problem.y();
        for ((r, xij), yi) in self.residual.iter_mut().zip(col.iter()).zip(y.iter()) {
            *r -= epsilon * (s * xij + (*r - yi) / delta);
        }

        self.beta.mapv_inplace(|b| b * shrink);
        self.beta[j] += epsilon * s;

        StepInfo {
            index: j,
            sign: s,
            step: self.beta[j] - before,
            correlation: corr,
            delta: Some(delta),
        }
    }

    fn snapshot(
        &self,
        problem: &StandardizedProblem,
        k: usize,
        selected: Option<StepInfo>,
        inf_corr: f64,
        mode: TraceMode,
    ) -> TraceRecord {
        let n = problem.n() as f64;
        let train_error = self.residual.dot(&self.residual) / (2.0 * n);
        let l1_norm = self.beta.iter().map(|b| b.abs()).sum();
        let l0_norm = self
            .beta
            .iter()
            .filter(|b| b.abs() > SPARSITY_THRESHOLD)
            .count();
        let (beta, residual) = match mode {
            TraceMode::Full => (Some(self.beta.clone()), Some(self.residual.clone())),
            TraceMode::StatsOnly => (None, None),
        };
        TraceRecord {
            k,
            selected,
            beta,
            residual,
            train_error,
            l1_norm,
            l0_norm,
            inf_corr,
        }
    }
}

/// Run the configured engine for `max_iters` iterations (or until the stop
/// tolerance on `||X'r||_inf` fires), recording every state from `k = 0`.
pub fn run(problem: &StandardizedProblem, config: &AlgorithmConfig) -> Result<BoostTrace> {
    config.validate()?;
    let mut state = BoostState::initial(problem);
    let mut records = Vec::with_capacity(config.max_iters + 1);
    let mut last_step: Option<StepInfo> = None;
    let mut stopped_early = false;

    for k in 0..=config.max_iters {
        let (j, corr) = select_column(problem.x(), &state.residual);
        let inf_corr = corr.abs();
        records.push(state.snapshot(problem, k, last_step.take(), inf_corr, config.trace_mode));

        if k == config.max_iters {
            break;
        }
        if inf_corr <= config.stop_tolerance {
            stopped_early = true;
            break;
        }

        let info = match &config.variant {
            Variant::LsBoost { epsilon } => state.apply_lsboost(problem, *epsilon, j, corr),
            Variant::Fse { epsilon } => state.apply_fse(problem, *epsilon, j, corr),
            Variant::Fsek { schedule } => state.apply_fse(problem, schedule[k], j, corr),
            Variant::Rfs { epsilon, delta } => state.apply_rfs(problem, *epsilon, *delta, j, corr),
            Variant::PathRfs {
                epsilon,
                delta_grid,
            } => {
                let delta_k = match config.grid_extension {
                    GridExtension::ClampLast => delta_grid[k.min(delta_grid.len() - 1)],
                    GridExtension::Strict => delta_grid[k],
                };
                state.apply_rfs(problem, *epsilon, delta_k, j, corr)
            }
        };
        last_step = Some(info);
    }

    Ok(BoostTrace {
        variant: config.variant.clone(),
        records,
        stopped_early,
    })
}

/// Run a path-tracing sweep; the config must carry a delta grid.
pub fn run_path(problem: &StandardizedProblem, config: &AlgorithmConfig) -> Result<BoostTrace> {
    if !matches!(config.variant, Variant::PathRfs { .. }) {
        return Err(Error::invalid("run_path requires the path variant"));
    }
    run(problem, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{standardize, RawDataset};
    use crate::testutil::{random_problem, t1};
    use ndarray::array;

    #[test]
    fn selection_on_orthonormal_design() {
        let sp = t1();
        let (j, c) = select_column(sp.x(), &array![3.0, 1.0]);
        assert_eq!((j, c), (0, 3.0));
        let (j, c) = select_column(sp.x(), &array![-3.0, 1.0]);
        assert_eq!((j, c), (0, -3.0));
        // Ties break toward the smallest index.
        let (j, _) = select_column(sp.x(), &array![2.0, 2.0]);
        assert_eq!(j, 0);
    }

    #[test]
    fn lsboost_reaches_exact_fit_on_orthonormal_design() {
        let sp = t1();
        let mut state = BoostState::initial(&sp);

        let info = state.step_lsboost(&sp, 1.0);
        assert_eq!(info.index, 0);
        assert_eq!(state.beta.to_vec(), vec![3.0, 0.0]);
        assert_eq!(state.residual.to_vec(), vec![0.0, 1.0]);
        assert_eq!(sp.loss(&state.beta), 0.25);

        state.step_lsboost(&sp, 1.0);
        assert_eq!(state.beta.to_vec(), vec![3.0, 1.0]);
        assert_eq!(state.residual.to_vec(), vec![0.0, 0.0]);
    }

    #[test]
    fn lsboost_first_step_contracts_by_gamma() {
        // gamma = 0.875 for the 2x2 identity design at epsilon = 1.
        let sp = t1();
        let mut state = BoostState::initial(&sp);
        let gap0 = sp.loss(&state.beta); // L* = 0 here
        state.step_lsboost(&sp, 1.0);
        let gap1 = sp.loss(&state.beta);
        assert!(gap1 <= 0.875 * gap0 + 1e-12);
    }

    #[test]
    fn fse_hand_trace() {
        let sp = t1();
        let mut state = BoostState::initial(&sp);
        state.step_fse(&sp, 0.5);
        assert_eq!(state.beta.to_vec(), vec![0.5, 0.0]);
        assert_eq!(state.residual.to_vec(), vec![2.5, 1.0]);
        state.step_fse(&sp, 0.5);
        assert_eq!(state.beta.to_vec(), vec![1.0, 0.0]);
        assert_eq!(state.residual.to_vec(), vec![2.0, 1.0]);
    }

    #[test]
    fn fse_residual_change_has_norm_epsilon() {
        let (sp, _) = random_problem(20, 8, 0.4, 31);
        let eps = 0.05;
        let mut state = BoostState::initial(&sp);
        for _ in 0..50 {
            let before = state.residual.clone();
            let info = state.step_fse(&sp, eps);
            if info.sign == 0.0 {
                break;
            }
            let diff = &state.residual - &before;
            assert!((diff.dot(&diff).sqrt() - eps).abs() < 1e-10);
        }
    }

    #[test]
    fn fsek_with_lsboost_schedule_reproduces_lsboost() {
        let (sp, _) = random_problem(25, 10, 0.5, 7);
        let eps = 0.7;
        let ls = run(
            &sp,
            &AlgorithmConfig::new(Variant::LsBoost { epsilon: eps }, 60),
        )
        .unwrap();
        let schedule: Vec<f64> = ls.records[1..]
            .iter()
            .map(|r| {
                let info = r.selected.unwrap();
                eps * info.correlation * info.sign
            })
            .collect();
        let m = schedule.len();
        let fsek = run(&sp, &AlgorithmConfig::new(Variant::Fsek { schedule }, m)).unwrap();
        for (a, b) in ls.records.iter().zip(fsek.records.iter()) {
            let (ba, bb) = (a.beta.as_ref().unwrap(), b.beta.as_ref().unwrap());
            for (x, y) in ba.iter().zip(bb.iter()) {
                assert!((x - y).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn fsek_zero_rate_is_a_no_op() {
        let sp = t1();
        let mut state = BoostState::initial(&sp);
        let before = state.clone();
        state.step_fsek(&sp, 0.0);
        assert_eq!(state.beta, before.beta);
        assert_eq!(state.residual, before.residual);
    }

    #[test]
    fn rfs_hand_trace() {
        let sp = t1();
        let mut state = BoostState::initial(&sp);
        state.step_rfs(&sp, 0.5, 2.0);
        assert_eq!(state.beta.to_vec(), vec![0.5, 0.0]);
        assert_eq!(state.residual.to_vec(), vec![2.5, 1.0]);
        state.step_rfs(&sp, 0.5, 2.0);
        assert_eq!(state.beta.to_vec(), vec![0.875, 0.0]);
        assert_eq!(state.residual.to_vec(), vec![2.125, 1.0]);
        // Geometric shrinkage chain attained with equality here.
        let l1: f64 = state.beta.iter().map(|b| b.abs()).sum();
        assert!((l1 - 2.0 * (1.0 - 0.75f64.powi(2))).abs() < 1e-15);
    }

    #[test]
    fn rfs_with_infinite_delta_is_exactly_fse() {
        let (sp, _) = random_problem(15, 6, 0.3, 13);
        let fse = run(
            &sp,
            &AlgorithmConfig::new(Variant::Fse { epsilon: 0.2 }, 80),
        )
        .unwrap();
        let rfs = run(
            &sp,
            &AlgorithmConfig::new(
                Variant::Rfs {
                    epsilon: 0.2,
                    delta: f64::INFINITY,
                },
                80,
            ),
        )
        .unwrap();
        for (a, b) in fse.records.iter().zip(rfs.records.iter()) {
            assert_eq!(a.beta.as_ref().unwrap(), b.beta.as_ref().unwrap());
            assert_eq!(a.residual.as_ref().unwrap(), b.residual.as_ref().unwrap());
        }
    }

    #[test]
    fn path_with_constant_grid_matches_rfs() {
        let (sp, _) = random_problem(15, 6, 0.3, 19);
        let rfs = run(
            &sp,
            &AlgorithmConfig::new(
                Variant::Rfs {
                    epsilon: 0.05,
                    delta: 1.5,
                },
                40,
            ),
        )
        .unwrap();
        let path = run_path(
            &sp,
            &AlgorithmConfig::new(
                Variant::PathRfs {
                    epsilon: 0.05,
                    delta_grid: vec![1.5; 40],
                },
                40,
            ),
        )
        .unwrap();
        for (a, b) in rfs.records.iter().zip(path.records.iter()) {
            assert_eq!(a.beta.as_ref().unwrap(), b.beta.as_ref().unwrap());
        }
    }

    #[test]
    fn path_records_per_iteration_delta() {
        let (sp, _) = random_problem(12, 5, 0.0, 3);
        let grid: Vec<f64> = (0..20).map(|i| 0.5 * 1.1f64.powi(i)).collect();
        let trace = run_path(
            &sp,
            &AlgorithmConfig::new(
                Variant::PathRfs {
                    epsilon: 0.05,
                    delta_grid: grid.clone(),
                },
                20,
            ),
        )
        .unwrap();
        for rec in &trace.records[1..] {
            let info = rec.selected.unwrap();
            assert_eq!(info.delta.unwrap(), grid[rec.k - 1]);
        }
    }

    #[test]
    fn path_feasible_under_its_grid() {
        for seed in 0..20 {
            let (sp, _) = random_problem(20, 10, 0.4, 100 + seed);
            let grid: Vec<f64> = (0..30).map(|i| 0.2 * 1.08f64.powi(i)).collect();
            let trace = run_path(
                &sp,
                &AlgorithmConfig::new(
                    Variant::PathRfs {
                        epsilon: 0.05,
                        delta_grid: grid.clone(),
                    },
                    30,
                ),
            )
            .unwrap();
            for rec in &trace.records[1..] {
                assert!(rec.l1_norm <= grid[rec.k - 1] + 1e-10);
            }
        }
    }

    #[test]
    fn strict_grid_extension_rejects_short_grids() {
        let cfg = AlgorithmConfig::new(
            Variant::PathRfs {
                epsilon: 0.1,
                delta_grid: vec![1.0; 5],
            },
            10,
        )
        .with_grid_extension(GridExtension::Strict);
        assert!(matches!(cfg.validate(), Err(Error::GridTooShort { .. })));
    }

    #[test]
    fn run_with_zero_iterations_keeps_initial_state_only() {
        let sp = t1();
        let trace = run(&sp, &AlgorithmConfig::new(Variant::Fse { epsilon: 0.1 }, 0)).unwrap();
        assert_eq!(trace.records.len(), 1);
        assert_eq!(trace.records[0].l1_norm, 0.0);
        assert_eq!(trace.records[0].train_error, 2.5);
        assert_eq!(trace.records[0].inf_corr, 3.0);
    }

    #[test]
    fn lsboost_stops_at_exact_fit() {
        let sp = t1();
        let trace = run(
            &sp,
            &AlgorithmConfig::new(Variant::LsBoost { epsilon: 1.0 }, 500)
                .with_stop_tolerance(1e-10),
        )
        .unwrap();
        assert_eq!(trace.iterations(), 2);
        assert!(trace.stopped_early);
    }

    #[test]
    fn identical_config_gives_identical_trace() {
        let (sp, _) = random_problem(18, 7, 0.6, 5);
        let cfg = AlgorithmConfig::new(
            Variant::Rfs {
                epsilon: 0.1,
                delta: 2.0,
            },
            50,
        );
        let a = run(&sp, &cfg).unwrap();
        let b = run(&sp, &cfg).unwrap();
        for (ra, rb) in a.records.iter().zip(b.records.iter()) {
            assert_eq!(ra.beta.as_ref().unwrap(), rb.beta.as_ref().unwrap());
        }
    }

    #[test]
    fn residual_consistency_and_sparsity_all_variants() {
        let (sp, _) = random_problem(25, 12, 0.5, 41);
        let m = 80;
        let configs = vec![
            AlgorithmConfig::new(Variant::LsBoost { epsilon: 0.8 }, m),
            AlgorithmConfig::new(Variant::Fse { epsilon: 0.05 }, m),
            AlgorithmConfig::new(
                Variant::Fsek {
                    schedule: vec![0.03; m],
                },
                m,
            ),
            AlgorithmConfig::new(
                Variant::Rfs {
                    epsilon: 0.05,
                    delta: 1.0,
                },
                m,
            ),
            AlgorithmConfig::new(
                Variant::PathRfs {
                    epsilon: 0.05,
                    delta_grid: (0..m).map(|i| 0.5 + 0.05 * i as f64).collect(),
                },
                m,
            ),
        ];
        for cfg in configs {
            let trace = run(&sp, &cfg).unwrap();
            assert!(
                trace.max_residual_inconsistency(&sp) <= RESIDUAL_CONSISTENCY_TOL,
                "inconsistency for {:?}",
                cfg.variant.name()
            );
            for rec in &trace.records {
                assert!(rec.l0_norm <= rec.k, "l0 {} at k {}", rec.l0_norm, rec.k);
            }
        }
    }

    #[test]
    fn fse_l1_growth_bound() {
        let (sp, _) = random_problem(30, 10, 0.2, 53);
        let eps = 0.04;
        let trace = run(
            &sp,
            &AlgorithmConfig::new(Variant::Fse { epsilon: eps }, 200),
        )
        .unwrap();
        for rec in &trace.records {
            assert!(rec.l1_norm <= rec.k as f64 * eps + 1e-12);
        }
    }

    #[test]
    fn rfs_l1_geometric_bound() {
        let (sp, _) = random_problem(30, 10, 0.2, 67);
        let (eps, delta) = (0.05, 1.2);
        let trace = run(
            &sp,
            &AlgorithmConfig::new(
                Variant::Rfs {
                    epsilon: eps,
                    delta,
                },
                200,
            ),
        )
        .unwrap();
        for rec in &trace.records {
            let cap = delta * (1.0 - (1.0 - eps / delta).powi(rec.k as i32));
            assert!(rec.l1_norm <= cap + 1e-10);
            assert!(rec.l1_norm <= delta + 1e-10);
        }
    }

    #[test]
    fn config_validation_catches_bad_parameters() {
        let sp = standardize(
            &RawDataset::new(array![[1.0], [0.0]], array![1.0, 0.0]).unwrap(),
            false,
        )
        .unwrap();
        let bad = vec![
            AlgorithmConfig::new(Variant::LsBoost { epsilon: 1.5 }, 5),
            AlgorithmConfig::new(Variant::Fse { epsilon: 0.0 }, 5),
            AlgorithmConfig::new(
                Variant::Rfs {
                    epsilon: 0.5,
                    delta: 0.25,
                },
                5,
            ),
            AlgorithmConfig::new(
                Variant::PathRfs {
                    epsilon: 0.5,
                    delta_grid: vec![2.0, 1.0],
                },
                2,
            ),
            AlgorithmConfig::new(
                Variant::Fsek {
                    schedule: vec![0.1; 3],
                },
                5,
            ),
        ];
        for cfg in bad {
            assert!(run(&sp, &cfg).is_err(), "{:?} should fail", cfg.variant);
        }
    }
}
