//! Spectral constants of the design: the nonzero eigenvalue range of X'X,
//! the generalized condition number kappa = p / lambda_pmin, and the linear
//! convergence rate coefficient gamma.

use ndarray::{Array1, Array2};

use crate::error::{Error, Result};
use crate::linalg::{sym_eigen, SymEigen};
use crate::model::StandardizedProblem;

/// Scalar spectral summary of a standardized design matrix.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SpectralSummary {
    pub n: usize,
    pub p: usize,
    /// Smallest nonzero eigenvalue of X'X.
    pub lambda_pmin: f64,
    pub lambda_max: f64,
    /// Smallest eigenvalue of X'X; zero for rank-deficient designs.
    pub lambda_min: f64,
    /// Generalized condition number p / lambda_pmin.
    pub kappa: f64,
    /// Classical condition number lambda_max / lambda_min, infinite when
    /// lambda_min = 0.
    pub kappa_bar: f64,
    pub rank: usize,
    /// Cutoff below which an eigenvalue is declared zero:
    /// max(n, p) * machine_epsilon * lambda_max.
    pub zero_threshold: f64,
}

/// Which Gram matrix was decomposed. Both share the nonzero spectrum of X'X;
/// the smaller side is cheaper.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum GramSide {
    /// X'X, p x p (used when p <= n).
    Columns,
    /// XX', n x n (used when p > n).
    Rows,
}

/// Eigendecomposition of the smaller Gram matrix of a standardized problem,
/// reused for the spectral summary, the minimum-norm least squares solve,
/// and row-space projections.
#[derive(Debug)]
pub struct GramEigen {
    side: GramSide,
    eigen: SymEigen,
    n: usize,
    p: usize,
    /// Orthonormal basis of the row space of X (p x rank), built on demand.
    row_basis: std::sync::OnceLock<Array2<f64>>,
}

impl GramEigen {
    pub fn compute(problem: &StandardizedProblem) -> Result<Self> {
        let x = problem.x();
        let (n, p) = (problem.n(), problem.p());
        let (side, gram) = if p <= n {
            (GramSide::Columns, x.t().dot(x))
        } else {
            (GramSide::Rows, x.dot(&x.t()))
        };
        let eigen = sym_eigen(&gram)?;
        Ok(GramEigen {
            side,
            eigen,
            n,
            p,
            row_basis: std::sync::OnceLock::new(),
        })
    }

    pub fn zero_threshold(&self) -> f64 {
        let lambda_max = self.eigen.values[self.eigen.values.len() - 1].max(0.0);
        self.n.max(self.p) as f64 * f64::EPSILON * lambda_max
    }

    /// Indices of eigenvalues above the zero threshold.
    fn nonzero_range(&self) -> std::ops::Range<usize> {
        let thresh = self.zero_threshold();
        let first = self.eigen.values.iter().position(|&v| v > thresh);
        match first {
            Some(i) => i..self.eigen.values.len(),
            None => 0..0,
        }
    }

    pub fn summary(&self) -> Result<SpectralSummary> {
        let nz = self.nonzero_range();
        if nz.is_empty() {
            return Err(Error::DegenerateMatrix);
        }
        let rank = nz.len();
        let lambda_pmin = self.eigen.values[nz.start];
        let lambda_max = self.eigen.values[self.eigen.values.len() - 1];
        // Below-threshold values may carry tiny negative roundoff.
        let lambda_min = if self.side == GramSide::Rows && self.n < self.p {
            // XX' never sees the p - n structural zeros of X'X.
            0.0
        } else if rank < self.eigen.values.len() {
            0.0
        } else {
            self.eigen.values[0]
        };
        let kappa = self.p as f64 / lambda_pmin;
        let kappa_bar = if rank == self.p && lambda_min > 0.0 {
            lambda_max / lambda_min
        } else {
            f64::INFINITY
        };
        Ok(SpectralSummary {
            n: self.n,
            p: self.p,
            lambda_pmin,
            lambda_max,
            lambda_min,
            kappa,
            kappa_bar,
            rank,
            zero_threshold: self.zero_threshold(),
        })
    }

    /// Minimum l2-norm solution of the least squares problem, via the
    /// spectral pseudoinverse.
    pub fn min_norm_least_squares(&self, problem: &StandardizedProblem) -> Array1<f64> {
        let x = problem.x();
        let y = problem.y();
        let nz = self.nonzero_range();
        match self.side {
            GramSide::Columns => {
                // beta = V D+ V' X' y
                let xty = x.t().dot(y);
                let mut beta = Array1::zeros(self.p);
                for i in nz {
                    let v = self.eigen.vectors.column(i);
                    let coef = v.dot(&xty) / self.eigen.values[i];
                    beta.scaled_add(coef, &v);
                }
                beta
            }
            GramSide::Rows => {
                // beta = X' U D+ U' y
                let mut weights = Array1::zeros(self.n);
                for i in nz {
                    let u = self.eigen.vectors.column(i);
                    let coef = u.dot(y) / self.eigen.values[i];
                    weights.scaled_add(coef, &u);
                }
                x.t().dot(&weights)
            }
        }
    }

    /// Orthonormal basis of the row space of X, one column per nonzero
    /// eigenvalue. On the column side these are eigenvectors of X'X; on the
    /// row side they are `X' u_i / sqrt(lambda_i)`.
    pub fn row_space_basis(&self, problem: &StandardizedProblem) -> &Array2<f64> {
        self.row_basis.get_or_init(|| {
            let nz = self.nonzero_range();
            let mut basis = Array2::zeros((self.p, nz.len()));
            match self.side {
                GramSide::Columns => {
                    for (c, i) in nz.enumerate() {
                        basis.column_mut(c).assign(&self.eigen.vectors.column(i));
                    }
                }
                GramSide::Rows => {
                    let x = problem.x();
                    for (c, i) in nz.enumerate() {
                        let u = self.eigen.vectors.column(i);
                        let w = x.t().dot(&u) / self.eigen.values[i].sqrt();
                        basis.column_mut(c).assign(&w);
                    }
                }
            }
            basis
        })
    }

    /// Orthogonal projection of a coefficient-space vector onto the row
    /// space of X (the orthogonal complement of the null space). Distances
    /// to the least squares solution set are norms of such projections.
    pub fn project_row_space(&self, problem: &StandardizedProblem, v: &Array1<f64>) -> Array1<f64> {
        let basis = self.row_space_basis(problem);
        basis.dot(&basis.t().dot(v))
    }

    /// l2 distance from `beta` to the least squares solution set.
    pub fn distance_to_solution_set(
        &self,
        problem: &StandardizedProblem,
        beta: &Array1<f64>,
        min_norm_solution: &Array1<f64>,
    ) -> f64 {
        let diff = beta - min_norm_solution;
        let proj = self.project_row_space(problem, &diff);
        proj.dot(&proj).sqrt()
    }

    /// Raw eigenvalues of the decomposed Gram matrix, ascending.
    pub fn values(&self) -> &Array1<f64> {
        &self.eigen.values
    }
}

/// Spectral constants of a standardized problem.
pub fn analyze(problem: &StandardizedProblem) -> Result<SpectralSummary> {
    GramEigen::compute(problem)?.summary()
}

/// Linear convergence rate coefficient
/// `gamma = 1 - epsilon (2 - epsilon) lambda_pmin / (4p)`, always in
/// [0.75, 1) for standardized designs and epsilon in (0, 1].
pub fn gamma(summary: &SpectralSummary, epsilon: f64) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(Error::EpsilonOutOfRange { epsilon });
    }
    Ok(gamma_unchecked(summary.lambda_pmin, summary.p, epsilon))
}

pub(crate) fn gamma_unchecked(lambda_pmin: f64, p: usize, epsilon: f64) -> f64 {
    1.0 - epsilon * (2.0 - epsilon) * lambda_pmin / (4.0 * p as f64)
}
