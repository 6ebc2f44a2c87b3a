//! `stagewise`: boosting engines for linear regression with certified
//! convergence guarantees.

mod commands;
mod config;
mod emit;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use stagewise::SyntheticSpec;

use config::{parse_f64_list, AlgoName, AlgoSpec, DataSource, Emit, ExperimentConfig, GridSpec};

#[derive(Parser)]
#[command(
    name = "stagewise",
    version,
    about = "Boosting for linear regression: engines, guarantee profiles, and verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    /// Sparse signal with five active coefficients.
    EgA,
    /// Sparse signal with ten active coefficients.
    EgB,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an equicorrelated Gaussian dataset (X.csv, y.csv, meta.json).
    Gen {
        #[arg(long, default_value_t = 50)]
        n: usize,
        #[arg(long, default_value_t = 500)]
        p: usize,
        /// Pairwise correlation of the covariates, in [0, 1).
        #[arg(long, default_value_t = 0.5)]
        rho: f64,
        /// Signal-to-noise ratio Var(x'beta) / sigma^2.
        #[arg(long)]
        snr: Option<f64>,
        /// Number of leading unit coefficients in the population beta.
        #[arg(long)]
        support: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Named parameter preset; explicit flags still win.
        #[arg(long, value_enum)]
        preset: Option<Preset>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run one or more engines over a dataset, emitting traces and
    /// optionally bound profiles and duality certificates.
    Fit(FitArgs),
    /// Emit data-fidelity versus shrinkage profile pairs (observed and
    /// theoretical) for the greedy or fixed-step engine.
    Profile(FitArgs),
    /// Run the full invariant battery and write a machine-readable report.
    /// Exits nonzero if any hard check fails.
    Verify {
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Iterations per engine run inside the battery.
        #[arg(long, default_value_t = 150)]
        iters: usize,
        /// Negative control: distort the convergence rate coefficient by
        /// +0.1 and expect bound checks to fail.
        #[arg(long)]
        self_test: bool,
        /// Where to write report.json.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate the smallest nonzero Gram eigenvalue and the rate
    /// coefficient across a (rho, p) grid of synthetic designs.
    RhoSweep {
        #[arg(long, default_value_t = 50)]
        n: usize,
        /// Comma-separated covariate counts.
        #[arg(long, value_delimiter = ',', default_value = "50,100,200,300,400,500")]
        p_list: Vec<usize>,
        /// Comma-separated pairwise correlations.
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9"
        )]
        rho_list: Vec<f64>,
        /// Repeats averaged per grid cell.
        #[arg(long, default_value_t = 10)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct FitArgs {
    /// Full experiment description as JSON; inline dataset/algorithm flags
    /// are rejected when this is given (--out still overrides).
    #[arg(long)]
    config: Option<PathBuf>,

    /// Directory produced by `gen` (X.csv + y.csv).
    #[arg(long)]
    data: Option<PathBuf>,
    /// Single CSV with a header row; the response column is split off.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Response column name (or zero-based index) for --csv.
    #[arg(long, default_value = "y")]
    response: String,
    /// Skip mean-centering of columns and response.
    #[arg(long)]
    no_center: bool,

    /// Algorithm: lsboost, fse, fsek, rfs, path-rfs.
    #[arg(long)]
    algo: Option<String>,
    /// Comma-separated learning rates.
    #[arg(long)]
    eps: Option<String>,
    /// Comma-separated absolute l1 budgets (rfs).
    #[arg(long)]
    delta: Option<String>,
    /// Comma-separated budgets as fractions of delta_max, each in (0, 1].
    #[arg(long)]
    delta_frac: Option<String>,
    /// Budget grid for path-rfs: `geometric:FIRST_FRAC,LAST_FRAC,POINTS`
    /// (fractions of delta_max) or a comma list of absolute budgets.
    #[arg(long)]
    grid: Option<String>,

    /// Boosting iterations.
    #[arg(long, default_value_t = 500)]
    iters: usize,
    /// Early-stop tolerance on the residual correlation norm; 0 runs all
    /// iterations.
    #[arg(long, default_value_t = 0.0)]
    tol: f64,
    /// Comma-separated outputs: trace, bounds, certificates, profile-pairs.
    #[arg(long, default_value = "trace")]
    emit: String,
    /// Record scalar statistics only (no per-iteration vectors).
    #[arg(long)]
    stats_only: bool,

    #[arg(long)]
    out: Option<PathBuf>,
}

impl FitArgs {
    fn into_config(self) -> Result<ExperimentConfig> {
        if let Some(path) = &self.config {
            if self.data.is_some() || self.csv.is_some() || self.algo.is_some() {
                bail!("--config replaces the inline dataset/algorithm flags; drop them");
            }
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            let mut config: ExperimentConfig = serde_json::from_str(&text)
                .with_context(|| format!("parsing {}", path.display()))?;
            if let Some(out) = self.out {
                config.out = out;
            }
            return Ok(config);
        }

        let source = match (&self.data, &self.csv) {
            (Some(dir), None) => DataSource::Dir { path: dir.clone() },
            (None, Some(file)) => DataSource::Csv {
                path: file.clone(),
                response: self.response.clone(),
            },
            (None, None) => bail!("supply a dataset via --data DIR, --csv FILE, or --config"),
            (Some(_), Some(_)) => bail!("--data and --csv are mutually exclusive"),
        };

        let algo = AlgoName::parse(
            self.algo
                .as_deref()
                .context("pick an algorithm with --algo (or use --config)")?,
        )?;
        let spec = AlgoSpec {
            algo,
            eps: self
                .eps
                .as_deref()
                .map(parse_f64_list)
                .transpose()?
                .unwrap_or_default(),
            delta: self
                .delta
                .as_deref()
                .map(parse_f64_list)
                .transpose()?
                .unwrap_or_default(),
            delta_frac: self
                .delta_frac
                .as_deref()
                .map(parse_f64_list)
                .transpose()?
                .unwrap_or_default(),
            schedule: None,
            grid: self.grid.as_deref().map(GridSpec::parse).transpose()?,
        };

        let emit = self
            .emit
            .split(',')
            .map(|t| Emit::parse(t.trim()))
            .collect::<Result<Vec<_>>>()?;

        Ok(ExperimentConfig {
            source,
            center: !self.no_center,
            algorithms: vec![spec],
            rho_list: Vec::new(),
            iters: self.iters,
            tol: self.tol,
            emit,
            stats_only: self.stats_only,
            out: self.out.context("pick an output directory with --out")?,
        })
    }
}

fn main() -> ExitCode {
    match dispatch() {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch() -> Result<ExitCode> {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen {
            n,
            p,
            rho,
            snr,
            support,
            seed,
            preset,
            out,
        } => {
            let preset_support = match preset {
                Some(Preset::EgB) => 10,
                _ => 5,
            };
            let spec = SyntheticSpec {
                n,
                p,
                rho,
                snr: snr.unwrap_or(1.0),
                // The preset default is clamped to p; an explicit flag is
                // validated as given.
                support: support.unwrap_or(preset_support.min(p)),
                seed,
            };
            commands::cmd_gen(&spec, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Fit(args) => {
            commands::cmd_fit(&args.into_config()?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Profile(args) => {
            commands::cmd_profile(&args.into_config()?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            seed,
            iters,
            self_test,
            out,
        } => {
            let pass = commands::cmd_verify(seed, iters, self_test, out.as_deref())?;
            if pass {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::FAILURE)
            }
        }
        Command::RhoSweep {
            n,
            p_list,
            rho_list,
            repeats,
            seed,
            out,
        } => {
            commands::cmd_rho_sweep(n, &p_list, &rho_list, repeats, seed, &out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
