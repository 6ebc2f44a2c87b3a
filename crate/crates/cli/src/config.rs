//! Experiment configuration: the JSON form accepted via `--config` and the
//! resolved in-memory plan the fit/profile commands execute.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};
use stagewise::boosters::{AlgorithmConfig, TraceMode, Variant};
use stagewise::SyntheticSpec;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DataSource {
    Synthetic(SyntheticSpecConfig),
    Csv {
        path: PathBuf,
        response: String,
    },
    /// A directory holding X.csv and y.csv, as written by `gen`.
    Dir {
        path: PathBuf,
    },
}

/// Mirror of [`SyntheticSpec`] with serde derives.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SyntheticSpecConfig {
    pub n: usize,
    pub p: usize,
    pub rho: f64,
    pub snr: f64,
    pub support: usize,
    pub seed: u64,
}

impl SyntheticSpecConfig {
    pub fn to_spec(&self) -> SyntheticSpec {
        SyntheticSpec {
            n: self.n,
            p: self.p,
            rho: self.rho,
            snr: self.snr,
            support: self.support,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgoName {
    Lsboost,
    Fse,
    Fsek,
    Rfs,
    PathRfs,
}

impl AlgoName {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "lsboost" => AlgoName::Lsboost,
            "fse" => AlgoName::Fse,
            "fsek" => AlgoName::Fsek,
            "rfs" => AlgoName::Rfs,
            "path-rfs" => AlgoName::PathRfs,
            other => bail!(
                "unknown algorithm {other:?}; expected one of lsboost, fse, fsek, rfs, path-rfs"
            ),
        })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            AlgoName::Lsboost => "lsboost",
            AlgoName::Fse => "fse",
            AlgoName::Fsek => "fsek",
            AlgoName::Rfs => "rfs",
            AlgoName::PathRfs => "path-rfs",
        }
    }
}

/// One algorithm axis of a sweep.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgoSpec {
    pub algo: AlgoName,
    /// Learning rates to sweep (ignored by `fsek`, which uses `schedule`).
    #[serde(default)]
    pub eps: Vec<f64>,
    /// Absolute budgets for `rfs`.
    #[serde(default)]
    pub delta: Vec<f64>,
    /// Budgets as fractions of the inactive-constraint level `delta_max`,
    /// each in (0, 1].
    #[serde(default)]
    pub delta_frac: Vec<f64>,
    /// Per-iteration learning rates for `fsek`.
    #[serde(default)]
    pub schedule: Option<Vec<f64>>,
    /// Budget grid for `path-rfs`; see [`GridSpec`].
    #[serde(default)]
    pub grid: Option<GridSpec>,
}

/// Either explicit budget values or a geometric ladder
/// `first_frac * delta_max` up to `last_frac * delta_max`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GridSpec {
    Values(Vec<f64>),
    Geometric {
        first_frac: f64,
        last_frac: f64,
        points: usize,
    },
}

impl GridSpec {
    /// Parse the `--grid` flag: either `geometric:FIRST,LAST,POINTS`
    /// (fractions of delta_max) or a comma list of absolute budgets.
    pub fn parse(s: &str) -> Result<Self> {
        if let Some(rest) = s.strip_prefix("geometric:") {
            let parts: Vec<&str> = rest.split(',').collect();
            if parts.len() != 3 {
                bail!("geometric grid needs FIRST_FRAC,LAST_FRAC,POINTS, got {s:?}");
            }
            let first_frac: f64 = parts[0].parse().context("grid first fraction")?;
            let last_frac: f64 = parts[1].parse().context("grid last fraction")?;
            let points: usize = parts[2].parse().context("grid point count")?;
            if points < 2 {
                bail!("geometric grid needs at least 2 points");
            }
            Ok(GridSpec::Geometric {
                first_frac,
                last_frac,
                points,
            })
        } else {
            let values = parse_f64_list(s)?;
            Ok(GridSpec::Values(values))
        }
    }

    pub fn resolve(&self, delta_max: f64) -> Result<Vec<f64>> {
        match self {
            GridSpec::Values(v) => Ok(v.clone()),
            GridSpec::Geometric {
                first_frac,
                last_frac,
                points,
            } => {
                if !(*first_frac > 0.0 && last_frac >= first_frac) {
                    bail!("geometric grid fractions must satisfy 0 < first <= last");
                }
                let ratio = last_frac / first_frac;
                Ok((0..*points)
                    .map(|i| first_frac * delta_max * ratio.powf(i as f64 / (*points as f64 - 1.0)))
                    .collect())
            }
        }
    }
}

pub fn parse_f64_list(s: &str) -> Result<Vec<f64>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .with_context(|| format!("cannot parse {t:?} as a number"))
        })
        .collect()
}

/// What the fit command writes per sweep cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Emit {
    Trace,
    Bounds,
    Certificates,
    ProfilePairs,
}

impl Emit {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "trace" => Emit::Trace,
            "bounds" => Emit::Bounds,
            "certificates" => Emit::Certificates,
            "profile-pairs" | "profile_pairs" => Emit::ProfilePairs,
            other => bail!(
                "unknown emit target {other:?}; expected trace, bounds, certificates, profile-pairs"
            ),
        })
    }
}

/// Full experiment description, JSON-loadable via `--config`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub source: DataSource,
    #[serde(default = "default_center")]
    pub center: bool,
    pub algorithms: Vec<AlgoSpec>,
    /// Extra pairwise-correlation values to sweep (synthetic sources only);
    /// the source's own rho always runs.
    #[serde(default)]
    pub rho_list: Vec<f64>,
    pub iters: usize,
    #[serde(default)]
    pub tol: f64,
    #[serde(default = "default_emit")]
    pub emit: Vec<Emit>,
    #[serde(default)]
    pub stats_only: bool,
    pub out: PathBuf,
}

fn default_center() -> bool {
    true
}

fn default_emit() -> Vec<Emit> {
    vec![Emit::Trace]
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.algorithms.is_empty() {
            bail!("configuration needs at least one algorithm");
        }
        for spec in &self.algorithms {
            for f in &spec.delta_frac {
                if !(*f > 0.0 && *f <= 1.0) {
                    bail!("delta fraction {f} outside (0, 1]");
                }
            }
            match spec.algo {
                AlgoName::Fsek => {
                    if spec.schedule.is_none() {
                        bail!(
                            "fsek needs a per-iteration schedule; supply \"schedule\" in the \
                             config file (the flag form has no schedule syntax)"
                        );
                    }
                }
                AlgoName::PathRfs => {
                    if spec.grid.is_none() {
                        bail!("path-rfs needs a budget grid; pass --grid or set \"grid\"");
                    }
                    if spec.eps.is_empty() {
                        bail!("path-rfs needs at least one learning rate via --eps");
                    }
                }
                AlgoName::Rfs => {
                    if spec.eps.is_empty() {
                        bail!("rfs needs at least one learning rate via --eps");
                    }
                    if spec.delta.is_empty() && spec.delta_frac.is_empty() {
                        bail!("rfs needs budgets via --delta or --delta-frac");
                    }
                }
                AlgoName::Lsboost | AlgoName::Fse => {
                    if spec.eps.is_empty() {
                        bail!(
                            "{} needs at least one learning rate via --eps",
                            spec.algo.as_str()
                        );
                    }
                }
            }
        }
        if self.iters == 0 {
            bail!("iters must be positive");
        }
        if !matches!(self.source, DataSource::Synthetic(_)) && !self.rho_list.is_empty() {
            bail!("rho_list only applies to synthetic sources");
        }
        Ok(())
    }
}

/// One fully resolved run: an algorithm with concrete parameters.
#[derive(Debug, Clone)]
pub struct Cell {
    pub algo: AlgoName,
    pub label: String,
    pub config: AlgorithmConfig,
    /// Absolute budget of this cell, when the algorithm has one.
    pub delta: Option<f64>,
    /// Learning rate of this cell (first schedule entry for `fsek`).
    pub eps: f64,
}

/// Expand an algorithm spec into concrete cells, resolving budget fractions
/// against `delta_max`.
pub fn expand_cells(
    spec: &AlgoSpec,
    delta_max: f64,
    iters: usize,
    tol: f64,
    stats_only: bool,
) -> Result<Vec<Cell>> {
    let mode = if stats_only {
        TraceMode::StatsOnly
    } else {
        TraceMode::Full
    };
    let make = |variant: Variant| -> AlgorithmConfig {
        AlgorithmConfig::new(variant, iters)
            .with_stop_tolerance(tol)
            .with_trace_mode(mode)
    };

    let mut cells = Vec::new();
    match spec.algo {
        AlgoName::Lsboost => {
            for &eps in &spec.eps {
                cells.push(Cell {
                    algo: spec.algo,
                    label: format!("lsboost_eps{eps}"),
                    config: make(Variant::LsBoost { epsilon: eps }),
                    delta: None,
                    eps,
                });
            }
        }
        AlgoName::Fse => {
            for &eps in &spec.eps {
                cells.push(Cell {
                    algo: spec.algo,
                    label: format!("fse_eps{eps}"),
                    config: make(Variant::Fse { epsilon: eps }),
                    delta: None,
                    eps,
                });
            }
        }
        AlgoName::Fsek => {
            let schedule = spec
                .schedule
                .clone()
                .expect("validated: fsek carries a schedule");
            let eps = schedule.first().copied().unwrap_or(0.0);
            cells.push(Cell {
                algo: spec.algo,
                label: "fsek".to_string(),
                config: make(Variant::Fsek { schedule }),
                delta: None,
                eps,
            });
        }
        AlgoName::Rfs => {
            let mut budgets: Vec<(String, f64)> = Vec::new();
            for &d in &spec.delta {
                budgets.push((format!("delta{d}"), d));
            }
            for &f in &spec.delta_frac {
                budgets.push((format!("frac{f}"), f * delta_max));
            }
            for &eps in &spec.eps {
                for (tag, delta) in &budgets {
                    cells.push(Cell {
                        algo: spec.algo,
                        label: format!("rfs_eps{eps}_{tag}"),
                        config: make(Variant::Rfs {
                            epsilon: eps,
                            delta: *delta,
                        }),
                        delta: Some(*delta),
                        eps,
                    });
                }
            }
        }
        AlgoName::PathRfs => {
            let grid = spec
                .grid
                .as_ref()
                .expect("validated: path-rfs carries a grid")
                .resolve(delta_max)?;
            for &eps in &spec.eps {
                cells.push(Cell {
                    algo: spec.algo,
                    label: format!("path-rfs_eps{eps}"),
                    config: make(Variant::PathRfs {
                        epsilon: eps,
                        delta_grid: grid.clone(),
                    }),
                    delta: grid.last().copied(),
                    eps,
                });
            }
        }
    }
    Ok(cells)
}
