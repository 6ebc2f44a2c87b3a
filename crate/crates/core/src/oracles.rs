//! Independent ground truth: exact least squares through the spectral
//! pseudoinverse, an l1-ball-constrained solver with a duality-gap
//! certificate, the l1 budget beyond which the constraint goes slack, and
//! checkers for the quadratic-function and max-representation identities the
//! convergence proofs rest on.
//!
//! Nothing here shares an iteration path with the boosting engines; these
//! are the oracles the engines are judged against.

use ndarray::{Array1, Array2};
use serde::Serialize;

use crate::boosters::sgn;
use crate::error::{Error, Result};
use crate::linalg::sym_eigen;
use crate::model::StandardizedProblem;
use crate::spectral::GramEigen;

/// Feasibility slack allowed when certifying a coefficient vector against
/// an l1 budget.
pub const FEASIBILITY_SLACK: f64 = 1e-10;

/// Iteration cap for the accelerated projected-gradient solver.
const LASSO_MAX_ITERS: usize = 200_000;

/// Iteration budget and relative accuracy of the minimum-l1 search on
/// rank-deficient designs.
const DELTA_MAX_ITERS: usize = 100_000;
pub const DELTA_MAX_TOL: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct LeastSquaresSolution {
    /// Minimum l2-norm least squares coefficients.
    pub beta_ls: Array1<f64>,
    pub fitted: Array1<f64>,
    /// `L_n^* = ||y - X beta_ls||^2 / (2n)`.
    pub loss_star: f64,
    /// `||X beta_ls||_2`, the constant every convergence bound is scaled by.
    pub fitted_norm: f64,
}

/// Solve least squares exactly (minimum-norm solution) via the spectral
/// pseudoinverse of the smaller Gram matrix.
pub fn solve_least_squares(problem: &StandardizedProblem) -> Result<LeastSquaresSolution> {
    let eigen = GramEigen::compute(problem)?;
    solve_least_squares_with(problem, &eigen)
}

/// Same as [`solve_least_squares`] but reusing an existing factorization.
pub fn solve_least_squares_with(
    problem: &StandardizedProblem,
    eigen: &GramEigen,
) -> Result<LeastSquaresSolution> {
    eigen.summary()?; // surfaces DegenerateMatrix
    let beta_ls = eigen.min_norm_least_squares(problem);
    let fitted = problem.x().dot(&beta_ls);
    let resid = problem.y() - &fitted;
    let loss_star = resid.dot(&resid) / (2.0 * problem.n() as f64);
    let fitted_norm = fitted.dot(&fitted).sqrt();
    Ok(LeastSquaresSolution {
        beta_ls,
        fitted,
        loss_star,
        fitted_norm,
    })
}

/// The duality-gap certificate for a feasible coefficient vector.
#[derive(Debug, Clone, Serialize)]
pub struct DualCertificate {
    /// `omega = ||X'r||_inf - r'X beta / delta`, nonnegative for feasible
    /// beta and zero exactly at constrained optima.
    pub omega: f64,
    /// `(delta / n) omega`, an upper bound on the true optimality gap.
    pub gap_bound: f64,
    /// `L_n(beta)`.
    pub primal_value: f64,
    /// `f_delta(r) = ||X'r||_inf + ||r - y||^2 / (2 delta)`.
    pub dual_value: f64,
}

/// Evaluate the optimality certificate at `beta` for the budget `delta`.
pub fn certify(
    problem: &StandardizedProblem,
    beta: &Array1<f64>,
    delta: f64,
) -> Result<DualCertificate> {
    let l1: f64 = beta.iter().map(|b| b.abs()).sum();
    if l1 > delta * (1.0 + FEASIBILITY_SLACK) {
        return Err(Error::InfeasibleBeta { l1, delta });
    }
    Ok(certificate_unchecked(problem, beta, delta))
}

fn certificate_unchecked(
    problem: &StandardizedProblem,
    beta: &Array1<f64>,
    delta: f64,
) -> DualCertificate {
    let n = problem.n() as f64;
    let r = problem.residual(beta);
    let xtr = problem.x().t().dot(&r);
    let max_corr = xtr.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    // r' X beta = (X'r)' beta
    let omega = max_corr - xtr.dot(beta) / delta;
    let diff = &r - problem.y();
    let dual_value = max_corr + diff.dot(&diff) / (2.0 * delta);
    DualCertificate {
        omega,
        gap_bound: delta / n * omega,
        primal_value: r.dot(&r) / (2.0 * n),
        dual_value,
    }
}

#[derive(Debug, Clone)]
pub struct LassoSolution {
    pub delta: f64,
    pub beta_star: Array1<f64>,
    /// `L*_{n,delta}`, the constrained optimum.
    pub loss_star_delta: f64,
    pub certificate: DualCertificate,
    pub iterations: usize,
    pub tol: f64,
}

/// Solve the l1-constrained least squares problem by accelerated projected
/// gradient (step `n / lambda_max(X'X)`, sort-and-threshold projection,
/// function restarts), stopping once the duality certificate `omega` falls
/// to `tol`.
pub fn solve_lasso(problem: &StandardizedProblem, delta: f64, tol: f64) -> Result<LassoSolution> {
    let start = Array1::zeros(problem.p());
    solve_lasso_from(problem, delta, tol, &start)
}

/// [`solve_lasso`] from a warm start (projected onto the budget first).
pub fn solve_lasso_from(
    problem: &StandardizedProblem,
    delta: f64,
    tol: f64,
    warm_start: &Array1<f64>,
) -> Result<LassoSolution> {
    if !(delta > 0.0) {
        return Err(Error::invalid(format!("delta {delta} must be positive")));
    }
    if !(tol > 0.0) {
        return Err(Error::invalid(format!("tol {tol} must be positive")));
    }
    let eigen = GramEigen::compute(problem)?;
    let summary = eigen.summary()?;
    let step = problem.n() as f64 / summary.lambda_max;

    let x = problem.x();
    let y = problem.y();
    let n = problem.n() as f64;

    let mut beta = project_l1_ball(warm_start, delta);
    let mut momentum = beta.clone();
    let mut t = 1.0f64;
    let mut best: Option<(f64, Array1<f64>)> = None;

    for iter in 0..LASSO_MAX_ITERS {
        let cert = certificate_unchecked(problem, &beta, delta);
        if best.as_ref().is_none_or(|(omega, _)| cert.omega < *omega) {
            best = Some((cert.omega, beta.clone()));
        }
        if cert.omega <= tol {
            return Ok(LassoSolution {
                delta,
                beta_star: beta.clone(),
                loss_star_delta: cert.primal_value,
                certificate: cert,
                iterations: iter,
                tol,
            });
        }

        let grad = -(x.t().dot(&(y - &x.dot(&momentum)))) / n;
        let next = project_l1_ball(&(&momentum - &(grad * step)), delta);

        // Gradient-mapping restart keeps the momentum from overshooting.
        let restart = (&momentum - &next).dot(&(&next - &beta)) > 0.0;
        if restart {
            t = 1.0;
            momentum = next.clone();
        } else {
            let t_next = 0.5 * (1.0 + (1.0 + 4.0 * t * t).sqrt());
            momentum = &next + &((&next - &beta) * ((t - 1.0) / t_next));
            t = t_next;
        }
        beta = next;
    }

    let (omega, beta_best) = best.expect("at least one iterate was evaluated");
    let cert = certificate_unchecked(problem, &beta_best, delta);
    debug_assert!(cert.omega == omega || cert.omega <= omega * (1.0 + 1e-12));
    Err(Error::MaxItersExceeded {
        best: Box::new(LassoSolution {
            delta,
            beta_star: beta_best,
            loss_star_delta: cert.primal_value,
            certificate: cert,
            iterations: LASSO_MAX_ITERS,
            tol,
        }),
    })
}

/// Euclidean projection onto the l1 ball of radius `delta` by the
/// sort-and-threshold rule.
pub fn project_l1_ball(v: &Array1<f64>, delta: f64) -> Array1<f64> {
    let l1: f64 = v.iter().map(|x| x.abs()).sum();
    if l1 <= delta {
        return v.clone();
    }
    let mut mags: Vec<f64> = v.iter().map(|x| x.abs()).collect();
    mags.sort_unstable_by(|a, b| b.partial_cmp(a).expect("no NaN magnitudes"));
    let mut cumulative = 0.0;
    let mut threshold = 0.0;
    for (i, m) in mags.iter().enumerate() {
        cumulative += m;
        let candidate = (cumulative - delta) / (i + 1) as f64;
        if *m <= candidate {
            break;
        }
        threshold = candidate;
    }
    v.mapv(|x| sgn(x) * (x.abs() - threshold).max(0.0))
}

/// The l1 norm of the minimum-l1-norm least squares solution: the budget at
/// and beyond which the l1 constraint is inactive.
///
/// Exact (`||beta_ls||_1`) when X has full column rank; otherwise an
/// iterative minimization of the l1 norm over the least squares solution
/// set, accurate to better than [`DELTA_MAX_TOL`] relative.
pub fn delta_max(problem: &StandardizedProblem) -> Result<f64> {
    let eigen = GramEigen::compute(problem)?;
    let summary = eigen.summary()?;
    let beta_ls = eigen.min_norm_least_squares(problem);
    let l1 = |b: &Array1<f64>| -> f64 { b.iter().map(|v| v.abs()).sum() };
    let mut best = l1(&beta_ls);
    if summary.rank == problem.p() || best == 0.0 {
        return Ok(best);
    }

    // Minimize ||beta||_1 over { beta : X beta = X beta_ls } by alternating
    // the affine projection with soft-thresholding through a scaled dual
    // variable (the standard splitting for l1 over an affine set). The
    // feasible set is beta_ls + null(X), so the projection subtracts the
    // row-space component of the offset; every projected iterate is
    // feasible and `best` only ever tracks feasible values.
    let basis = eigen.row_space_basis(problem).clone();
    let project = |v: &Array1<f64>| -> Array1<f64> {
        let offset = v - &beta_ls;
        v - &basis.dot(&basis.t().dot(&offset))
    };
    let threshold = 0.1 * (1.0 + beta_ls.iter().fold(0.0f64, |m, b| m.max(b.abs())));
    let stop = 1e-9;

    let mut z = beta_ls.clone();
    let mut dual: Array1<f64> = Array1::zeros(problem.p());
    for _ in 0..DELTA_MAX_ITERS {
        let feasible = project(&(&z - &dual));
        let z_next = (&feasible + &dual).mapv(|v| sgn(v) * (v.abs() - threshold).max(0.0));
        let primal_resid = &feasible - &z_next;
        dual = &dual + &primal_resid;
        best = best.min(l1(&feasible));

        let pr = primal_resid.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let dr = (&z_next - &z).iter().fold(0.0f64, |m, v| m.max(v.abs()));
        z = z_next;
        if pr <= stop * (1.0 + best) && dr <= stop * (1.0 + best) {
            break;
        }
    }
    Ok(best)
}

/// Discrepancy of the max-representation of the least squares loss,
/// evaluated at its analytic maximizer `r = y - X beta`. Zero up to
/// roundoff for every beta.
pub fn max_representation_check(problem: &StandardizedProblem, beta: &Array1<f64>) -> f64 {
    let n = problem.n() as f64;
    let r_bar = problem.residual(beta);
    let xbeta = problem.x().dot(beta);
    let y = problem.y();
    let y_sq = y.dot(y);
    let diff = &r_bar - y;
    let value = -r_bar.dot(&xbeta) / n - diff.dot(&diff) / (2.0 * n) + y_sq / (2.0 * n);
    (value - problem.loss(beta)).abs()
}

/// Outcome of checking the two convex-quadratic inequalities that drive the
/// linear convergence proofs: distance to the optimum set bounded by the
/// optimality gap, and gradient norm bounded below by it.
#[derive(Debug, Clone)]
pub struct QuadraticCheck {
    pub optimum_value: f64,
    pub gap: f64,
    pub distance: f64,
    pub distance_bound: f64,
    pub gradient_norm: f64,
    pub gradient_bound: f64,
    pub distance_bound_holds: bool,
    pub gradient_bound_holds: bool,
}

/// For `h(x) = x'Qx/2 + q'x` with symmetric PSD `Q`, verify at a point `x`:
/// `||x - x*|| <= sqrt(2 (h(x) - h*) / lambda_pmin(Q))` against the nearest
/// optimum, and `||grad h(x)|| >= sqrt(lambda_pmin(Q) (h(x) - h*) / 2)`.
pub fn quadratic_lemma_check(
    q: &Array2<f64>,
    lin: &Array1<f64>,
    x: &Array1<f64>,
) -> Result<QuadraticCheck> {
    let eigen = sym_eigen(q)?;
    let dim = lin.len();
    let lambda_max = eigen.values[dim - 1];
    let threshold = dim as f64 * f64::EPSILON * lambda_max.abs();
    if eigen.values[0] < -threshold.max(1e-12) {
        return Err(Error::invalid(
            "quadratic term is not positive semidefinite",
        ));
    }
    let lin_norm = lin.dot(lin).sqrt();
    let mut lambda_pmin = f64::INFINITY;
    let mut x_hat = Array1::zeros(dim);
    for i in 0..dim {
        let lambda = eigen.values[i];
        let v = eigen.vectors.column(i);
        let coef = v.dot(lin);
        if lambda > threshold {
            lambda_pmin = lambda_pmin.min(lambda);
            x_hat.scaled_add(-coef / lambda, &v);
        } else if coef.abs() > 1e-10 * (1.0 + lin_norm) {
            return Err(Error::UnboundedBelow);
        }
    }
    if !lambda_pmin.is_finite() {
        return Err(Error::invalid("quadratic term is the zero matrix"));
    }

    let h = |z: &Array1<f64>| 0.5 * z.dot(&q.dot(z)) + lin.dot(z);
    let optimum_value = h(&x_hat);
    let gap = (h(x) - optimum_value).max(0.0);

    // Distance to the nearest optimum: the range-space component of x - x_hat.
    let offset = x - &x_hat;
    let mut range_part = Array1::zeros(dim);
    for i in 0..dim {
        if eigen.values[i] > threshold {
            let v = eigen.vectors.column(i);
            range_part.scaled_add(v.dot(&offset), &v);
        }
    }
    let distance = range_part.dot(&range_part).sqrt();
    let distance_bound = (2.0 * gap / lambda_pmin).sqrt();
    let grad = q.dot(x) + lin;
    let gradient_norm = grad.dot(&grad).sqrt();
    let gradient_bound = (lambda_pmin * gap / 2.0).sqrt();

    Ok(QuadraticCheck {
        optimum_value,
        gap,
        distance,
        distance_bound,
        gradient_norm,
        gradient_bound,
        distance_bound_holds: distance <= distance_bound * (1.0 + 1e-9) + 1e-12,
        gradient_bound_holds: gradient_norm >= gradient_bound * (1.0 - 1e-9) - 1e-12,
    })
}
