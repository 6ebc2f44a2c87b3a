//! Problem representation: raw datasets, standardization, synthetic data.
//!
//! Every algorithm in this crate consumes a [`StandardizedProblem`], whose
//! construction is the single place where the unit-column-norm convention is
//! enforced. Instances are immutable once built and safe to share across
//! threads.

use ndarray::{Array1, Array2};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rng::GaussianSource;

/// Tolerance for the unit-norm and zero-mean invariants of a standardized
/// design matrix.
pub const STANDARDIZATION_TOL: f64 = 1e-12;

/// An unprocessed regression dataset: covariates `x` (n rows, p columns) and
/// response `y` (length n).
#[derive(Debug, Clone)]
pub struct RawDataset {
    pub x: Array2<f64>,
    pub y: Array1<f64>,
}

impl RawDataset {
    pub fn new(x: Array2<f64>, y: Array1<f64>) -> Result<Self> {
        if x.nrows() == 0 || x.ncols() == 0 {
            return Err(Error::invalid(
                "dataset needs at least one row and one column",
            ));
        }
        if x.nrows() != y.len() {
            return Err(Error::invalid(format!(
                "X has {} rows but y has {} entries",
                x.nrows(),
                y.len()
            )));
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFiniteInput {
                what: "design matrix".to_string(),
            });
        }
        if y.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFiniteInput {
                what: "response vector".to_string(),
            });
        }
        Ok(RawDataset { x, y })
    }

    pub fn n(&self) -> usize {
        self.x.nrows()
    }

    pub fn p(&self) -> usize {
        self.x.ncols()
    }
}

/// A design matrix with unit l2-norm columns plus the response, as consumed
/// by every engine and oracle. Immutable after construction.
#[derive(Debug, Clone)]
pub struct StandardizedProblem {
    x: Array2<f64>,
    y: Array1<f64>,
    centered: bool,
    column_scales: Array1<f64>,
    y_mean: f64,
}

impl StandardizedProblem {
    pub fn x(&self) -> &Array2<f64> {
        &self.x
    }

    pub fn y(&self) -> &Array1<f64> {
        &self.y
    }

    pub fn n(&self) -> usize {
        self.x.nrows()
    }

    pub fn p(&self) -> usize {
        self.x.ncols()
    }

    pub fn centered(&self) -> bool {
        self.centered
    }

    /// Original column norms, for mapping fitted coefficients back to raw
    /// units. The iteration engines never consult these.
    pub fn column_scales(&self) -> &Array1<f64> {
        &self.column_scales
    }

    pub fn y_mean(&self) -> f64 {
        self.y_mean
    }

    /// Training loss `||y - X beta||^2 / (2n)` at a coefficient vector.
    pub fn loss(&self, beta: &Array1<f64>) -> f64 {
        let r = self.residual(beta);
        r.dot(&r) / (2.0 * self.n() as f64)
    }

    pub fn residual(&self, beta: &Array1<f64>) -> Array1<f64> {
        &self.y - &self.x.dot(beta)
    }
}

/// Rescale every column of `raw.x` to unit l2 norm, optionally mean-centering
/// columns and response first. Original norms are kept in `column_scales`.
pub fn standardize(raw: &RawDataset, center: bool) -> Result<StandardizedProblem> {
    let n = raw.n();
    let p = raw.p();
    let mut x = raw.x.clone();
    let mut y = raw.y.clone();
    let mut y_mean = 0.0;

    if center {
        for j in 0..p {
            let mean = x.column(j).sum() / n as f64;
            x.column_mut(j).mapv_inplace(|v| v - mean);
        }
        y_mean = y.sum() / n as f64;
        y.mapv_inplace(|v| v - y_mean);
    }

    let mut scales = Array1::zeros(p);
    for j in 0..p {
        let pre_norm = raw.x.column(j).dot(&raw.x.column(j)).sqrt();
        let norm = x.column(j).dot(&x.column(j)).sqrt();
        // A constant column collapses to (numerically) zero under centering;
        // compare against the pre-centering norm to detect that case at any
        // data scale.
        if norm == 0.0 || norm <= pre_norm * STANDARDIZATION_TOL {
            return Err(Error::ZeroColumn { column: j });
        }
        x.column_mut(j).mapv_inplace(|v| v / norm);
        scales[j] = norm;
    }

    Ok(StandardizedProblem {
        x,
        y,
        centered: center,
        column_scales: scales,
        y_mean,
    })
}

/// Parameters of the equicorrelated Gaussian generator.
#[derive(Debug, Clone, Serialize)]
pub struct SyntheticSpec {
    pub n: usize,
    pub p: usize,
    /// Pairwise correlation of the covariates, in [0, 1).
    pub rho: f64,
    /// Signal-to-noise ratio `Var(x' beta) / sigma^2`.
    pub snr: f64,
    /// Number of leading coefficients of the population beta set to one.
    pub support: usize,
    pub seed: u64,
}

impl SyntheticSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.p == 0 {
            return Err(Error::invalid("n and p must be positive"));
        }
        if !(0.0..1.0).contains(&self.rho) {
            return Err(Error::invalid(format!("rho {} outside [0, 1)", self.rho)));
        }
        if !(self.snr > 0.0) {
            return Err(Error::invalid(format!("snr {} must be positive", self.snr)));
        }
        if self.support > self.p {
            return Err(Error::invalid(format!(
                "support {} exceeds p {}",
                self.support, self.p
            )));
        }
        Ok(())
    }
}

/// A generated dataset together with the ground truth that produced it.
#[derive(Debug, Clone)]
pub struct SyntheticDataset {
    pub raw: RawDataset,
    pub beta_pop: Array1<f64>,
    /// Noise variance sigma^2 = Var(x' beta) / snr.
    pub noise_variance: f64,
    /// Var(x' beta) = rho s^2 + (1 - rho) s for support size s.
    pub signal_variance: f64,
}

/// Draw rows i.i.d. from the equicorrelated Gaussian via the one-factor
/// decomposition `x_i = sqrt(rho) z 1 + sqrt(1 - rho) w_i`, then
/// `y = X beta_pop + noise`. Deterministic for a fixed seed.
pub fn generate_synthetic(spec: &SyntheticSpec) -> Result<SyntheticDataset> {
    spec.validate()?;
    let (n, p) = (spec.n, spec.p);
    let mut source = GaussianSource::from_seed(spec.seed);

    let shared = spec.rho.sqrt();
    let own = (1.0 - spec.rho).sqrt();
    let mut x = Array2::zeros((n, p));
    for i in 0..n {
        let z = source.next_normal();
        for j in 0..p {
            x[[i, j]] = shared * z + own * source.next_normal();
        }
    }

    let mut beta_pop = Array1::zeros(p);
    for j in 0..spec.support {
        beta_pop[j] = 1.0;
    }

    let s = spec.support as f64;
    let signal_variance = spec.rho * s * s + (1.0 - spec.rho) * s;
    let noise_variance = signal_variance / spec.snr;
    let sigma = noise_variance.sqrt();

    let mut y = x.dot(&beta_pop);
    for i in 0..n {
        y[i] += sigma * source.next_normal();
    }

    Ok(SyntheticDataset {
        raw: RawDataset::new(x, y)?,
        beta_pop,
        noise_variance,
        signal_variance,
    })
}
