//! CSV emitters for traces, bound profiles, and certificates. All floats go
//! through the shortest-round-trip writer in the core crate, so emitted
//! files reload bit-identically.

use std::path::Path;

use anyhow::{Context, Result};
use stagewise::boosters::BoostTrace;
use stagewise::guarantees::{
    fse_bounds, lsboost_bounds, GuaranteeProfile, ProblemConstants, ProfileRows,
};
use stagewise::io::write_numeric_csv;
use stagewise::oracles::certify;
use stagewise::StandardizedProblem;

use crate::config::AlgoName;

/// Columns: iter, j (-1 for the initial state), sign, step, optionally
/// delta, then train_error, l1_norm, l0_norm, inf_corr.
pub fn write_trace(path: &Path, trace: &BoostTrace, with_delta: bool) -> Result<()> {
    let mut header = vec!["iter", "j", "sign", "step"];
    if with_delta {
        header.push("delta");
    }
    header.extend(["train_error", "l1_norm", "l0_norm", "inf_corr"]);

    let rows = trace.records.iter().map(|rec| {
        let (j, sign, step, delta) = match &rec.selected {
            Some(info) => (
                info.index as f64,
                info.sign,
                info.step,
                info.delta.unwrap_or(f64::NAN),
            ),
            None => (-1.0, 0.0, 0.0, f64::NAN),
        };
        let mut row = vec![rec.k as f64, j, sign, step];
        if with_delta {
            // The initial state reports the first budget in force.
            let d = if delta.is_nan() {
                trace
                    .records
                    .get(1)
                    .and_then(|r| r.selected.as_ref())
                    .and_then(|i| i.delta)
            } else {
                Some(delta)
            };
            row.push(d.unwrap_or(0.0));
        }
        row.extend([
            rec.train_error,
            rec.l1_norm,
            rec.l0_norm as f64,
            rec.inf_corr,
        ]);
        row
    });
    write_numeric_csv(path, &header, rows).with_context(|| format!("writing {}", path.display()))
}

/// Per-iteration closed-form bound rows for the cell's algorithm family.
pub fn write_bounds(
    path: &Path,
    algo: AlgoName,
    constants: &ProblemConstants,
    eps: f64,
    delta: Option<f64>,
    grid: Option<&[f64]>,
    iters: usize,
) -> Result<()> {
    let profile = match algo {
        AlgoName::Lsboost => GuaranteeProfile::lsboost(constants, eps, iters),
        AlgoName::Fse | AlgoName::Fsek => GuaranteeProfile::fse(constants, eps, iters),
        AlgoName::Rfs => {
            GuaranteeProfile::rfs(constants, eps, delta.expect("rfs cell has a budget"), iters)
        }
        AlgoName::PathRfs => {
            GuaranteeProfile::path(constants, eps, grid.expect("path cell has a grid"), iters)
        }
    };
    let (header, rows): (Vec<&str>, Vec<Vec<f64>>) = match &profile.rows {
        ProfileRows::LsBoost(rows) => (
            vec![
                "iter",
                "train_error_bound",
                "coeff_dist_bound",
                "prediction_dist_bound",
                "gradient_bound",
                "l1_shrink_bound",
                "l1_shrink_alt",
            ],
            rows.iter()
                .map(|row| {
                    vec![
                        row.k as f64,
                        row.train_error_bound,
                        row.coeff_dist_bound,
                        row.prediction_dist_bound,
                        row.gradient_bound,
                        row.l1_shrink_bound,
                        row.l1_shrink_alt,
                    ]
                })
                .collect(),
        ),
        ProfileRows::Fse(rows) => (
            vec![
                "iter",
                "train_error_bound",
                "coeff_dist_bound",
                "prediction_dist_bound",
                "corr_bound",
                "l1_shrink_bound",
            ],
            rows.iter()
                .map(|row| {
                    vec![
                        row.k as f64,
                        row.train_error_bound,
                        row.coeff_dist_bound,
                        row.prediction_dist_bound,
                        row.corr_bound,
                        row.l1_shrink_bound,
                    ]
                })
                .collect(),
        ),
        ProfileRows::Rfs(rows) => (
            vec![
                "iter",
                "train_gap_bound",
                "prediction_dist_bound",
                "l1_shrink_bound",
            ],
            rows.iter()
                .map(|row| {
                    vec![
                        row.k as f64,
                        row.train_gap_bound,
                        row.prediction_dist_bound,
                        row.l1_shrink_bound,
                    ]
                })
                .collect(),
        ),
        ProfileRows::Path(rows) => (
            vec!["iter", "avg_suboptimality_bound"],
            rows.iter().map(|&(k, b)| vec![k as f64, b]).collect(),
        ),
    };
    write_numeric_csv(path, &header, rows).with_context(|| format!("writing {}", path.display()))
}

/// Per-iteration duality certificates for cells with a finite budget.
/// `delta_for_record(k)` supplies the budget in force at state `k`.
pub fn write_certificates(
    path: &Path,
    problem: &StandardizedProblem,
    trace: &BoostTrace,
    delta_for_record: impl Fn(usize) -> f64,
) -> Result<()> {
    let header = ["iter", "delta", "omega", "gap_bound", "primal", "dual"];
    let mut rows = Vec::with_capacity(trace.records.len());
    for rec in &trace.records {
        let beta = rec
            .beta
            .as_ref()
            .context("certificates require a full trace (run without --stats-only)")?;
        let delta = delta_for_record(rec.k);
        let cert = certify(problem, beta, delta)?;
        rows.push(vec![
            rec.k as f64,
            delta,
            cert.omega,
            cert.gap_bound,
            cert.primal_value,
            cert.dual_value,
        ]);
    }
    write_numeric_csv(path, &header, rows).with_context(|| format!("writing {}", path.display()))
}

/// Observed (train_error, l1) pairs next to the theoretical (bound, level)
/// pairs, plus normalized columns: training error relative to the start,
/// l1 columns relative to their own maximum.
pub struct ProfileData {
    pub rows: Vec<Vec<f64>>,
    pub train_error_at_start: f64,
    pub bound_at_start: f64,
    pub l1_max: f64,
    pub level_max: f64,
}

pub fn profile_pairs(
    algo: AlgoName,
    constants: &ProblemConstants,
    eps: f64,
    trace: &BoostTrace,
) -> ProfileData {
    let observed: Vec<(usize, f64, f64)> = trace
        .records
        .iter()
        .map(|rec| (rec.k, rec.train_error, rec.l1_norm))
        .collect();
    let theory: Vec<(f64, f64)> = observed
        .iter()
        .map(|&(k, _, _)| match algo {
            AlgoName::Lsboost => {
                let row = lsboost_bounds(constants, eps, k);
                (
                    row.train_error_bound + constants.loss_star,
                    row.l1_shrink_bound,
                )
            }
            _ => {
                let row = fse_bounds(constants, eps, k);
                (
                    row.train_error_bound + constants.loss_star,
                    row.l1_shrink_bound,
                )
            }
        })
        .collect();

    let train0 = observed[0].1;
    let bound0 = theory[0].0;
    let l1_max = observed.iter().map(|r| r.2).fold(0.0f64, f64::max);
    let level_max = theory.iter().map(|r| r.1).fold(0.0f64, f64::max);
    let norm = |v: f64, d: f64| if d > 0.0 { v / d } else { 0.0 };

    let rows = observed
        .iter()
        .zip(theory.iter())
        .map(|(&(k, te, l1), &(bound, level))| {
            vec![
                k as f64,
                te,
                l1,
                bound,
                level,
                norm(te, train0),
                norm(l1, l1_max),
                norm(bound, bound0),
                norm(level, level_max),
            ]
        })
        .collect();

    ProfileData {
        rows,
        train_error_at_start: train0,
        bound_at_start: bound0,
        l1_max,
        level_max,
    }
}

pub const PROFILE_HEADER: [&str; 9] = [
    "iter",
    "train_error",
    "l1_norm",
    "train_error_bound",
    "l1_level",
    "train_error_rel",
    "l1_rel",
    "train_error_bound_rel",
    "l1_level_rel",
];
