//! Generic subgradient descent over the space of achievable residuals
//! `P_res = { y - X beta }`, instantiated with two objectives:
//!
//! * correlation minimization, `f(r) = ||X'r||_inf`, whose minimum is zero
//!   at the least squares residuals, and
//! * regularized correlation minimization,
//!   `f_delta(r) = ||X'r||_inf + ||r - y||^2 / (2 delta)`, the scaled dual
//!   of the l1-constrained regression problem.
//!
//! With matching step sizes the iterates reproduce the boosting engines
//! exactly; the trace-equivalence tests in this crate are the mechanized
//! form of that statement. Steps never leave `P_res`, so the projection is
//! the identity and is implemented as a debug assertion of membership.

use ndarray::Array1;

use crate::boosters::{select_column, sgn};
use crate::model::StandardizedProblem;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ObjectiveKind {
    /// `||X'r||_inf`
    Cm,
    /// `||X'r||_inf + ||r - y||^2 / (2 delta)`
    Rcm { delta: f64 },
}

/// An objective over achievable residuals, bound to its problem data.
#[derive(Debug, Clone, Copy)]
pub struct ResidualObjective<'a> {
    pub kind: ObjectiveKind,
    pub problem: &'a StandardizedProblem,
}

impl<'a> ResidualObjective<'a> {
    pub fn cm(problem: &'a StandardizedProblem) -> Self {
        ResidualObjective {
            kind: ObjectiveKind::Cm,
            problem,
        }
    }

    pub fn rcm(problem: &'a StandardizedProblem, delta: f64) -> Self {
        assert!(delta > 0.0, "rcm needs a positive delta");
        ResidualObjective {
            kind: ObjectiveKind::Rcm { delta },
            problem,
        }
    }

    pub fn evaluate(&self, r: &Array1<f64>) -> f64 {
        let corr = self.problem.x().t().dot(r);
        let max_corr = corr.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        match self.kind {
            ObjectiveKind::Cm => max_corr,
            ObjectiveKind::Rcm { delta } => {
                let diff = r - self.problem.y();
                max_corr + diff.dot(&diff) / (2.0 * delta)
            }
        }
    }

    /// A subgradient at `r`: the signed selected column (same smallest-index
    /// tie-break as the engines), plus the gradient of the quadratic term
    /// for the regularized objective.
    pub fn subgradient(&self, r: &Array1<f64>) -> Array1<f64> {
        let (j, corr) = select_column(self.problem.x(), r);
        let s = sgn(corr);
        let col = self.problem.x().column(j);
        let y = self.problem.y();
        let n = r.len();
        let mut g = Array1::zeros(n);
        match self.kind {
            ObjectiveKind::Cm => {
                for i in 0..n {
                    g[i] = s * col[i];
                }
            }
            ObjectiveKind::Rcm { delta } => {
                for i in 0..n {
                    g[i] = s * col[i] + (r[i] - y[i]) / delta;
                }
            }
        }
        g
    }
}

/// A residual-space iterate with the coefficient vector certifying its
/// membership in `P_res`.
#[derive(Debug, Clone)]
pub struct SubgradState {
    pub residual: Array1<f64>,
    pub beta_shadow: Array1<f64>,
    pub k: usize,
}

/// Run subgradient descent from `r0 = y`, taking `step_sizes[k]` at
/// iteration `k`. Returns every state including the initial one; the run
/// covers `max_iters.min(step_sizes.len())` steps.
pub fn descend(obj: &ResidualObjective, step_sizes: &[f64], max_iters: usize) -> Vec<SubgradState> {
    let problem = obj.problem;
    let steps = max_iters.min(step_sizes.len());
    let mut states = Vec::with_capacity(steps + 1);
    let mut r = problem.y().clone();
    let mut beta = Array1::zeros(problem.p());
    states.push(SubgradState {
        residual: r.clone(),
        beta_shadow: beta.clone(),
        k: 0,
    });

    for (k, &alpha) in step_sizes.iter().enumerate().take(steps) {
        let (j, corr) = select_column(problem.x(), &r);
        let s = sgn(corr);
        let col = problem.x().column(j);
        let y = problem.y();

        match obj.kind {
            ObjectiveKind::Cm => {
                for (ri, xij) in r.iter_mut().zip(col.iter()) {
                    let g = s * xij;
                    *ri -= alpha * g;
                }
                beta[j] += alpha * s;
            }
            ObjectiveKind::Rcm { delta } => {
                for ((ri, xij), yi) in r.iter_mut().zip(col.iter()).zip(y.iter()) {
                    let g = s * xij + (*ri - yi) / delta;
                    *ri -= alpha * g;
                }
                beta.mapv_inplace(|b| b * (1.0 - alpha / delta));
                beta[j] += alpha * s;
            }
        }

        debug_assert!(
            {
                let direct = problem.residual(&beta);
                direct
                    .iter()
                    .zip(r.iter())
                    .all(|(a, b)| (a - b).abs() <= 1e-10)
            },
            "iterate left the achievable-residual set"
        );

        states.push(SubgradState {
            residual: r.clone(),
            beta_shadow: beta.clone(),
            k: k + 1,
        });
    }
    states
}

/// Constant-step subgradient descent bound on the best objective gap after
/// `k + 1` evaluations: `dist0^2 / (2 (k+1) alpha) + alpha G^2 / 2`.
pub fn sd_bound(dist0: f64, subgrad_norm_bound: f64, alpha: f64, k: usize) -> f64 {
    dist0 * dist0 / (2.0 * (k + 1) as f64 * alpha)
        + alpha * subgrad_norm_bound * subgrad_norm_bound / 2.0
}
