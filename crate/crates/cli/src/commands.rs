//! Implementations of the five subcommands.

use std::fs;
use std::path::Path;

use anyhow::{bail, Result};
use ndarray::{Array1, Array2};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;
use stagewise::boosters::{run, GridExtension, Variant};
use stagewise::check::{resolved_path_grid, run_default_suite, SuiteOptions};
use stagewise::guarantees::ProblemConstants;
use stagewise::io::{load_csv, read_numeric_csv, write_numeric_csv, ResponseSelector};
use stagewise::model::generate_synthetic;
use stagewise::oracles::{delta_max, solve_least_squares_with};
use stagewise::spectral::{gamma, GramEigen};
use stagewise::{standardize, RawDataset, StandardizedProblem, SyntheticSpec};

use crate::config::{expand_cells, AlgoName, Cell, DataSource, Emit, ExperimentConfig};
use crate::emit::{profile_pairs, write_bounds, write_certificates, write_trace, PROFILE_HEADER};

pub fn cmd_gen(spec: &SyntheticSpec, out: &Path) -> Result<()> {
    let data = generate_synthetic(spec)?;
    fs::create_dir_all(out)?;

    let p = spec.p;
    let header: Vec<String> = (1..=p).map(|j| format!("x{j}")).collect();
    let header_refs: Vec<&str> = header.iter().map(|s| s.as_str()).collect();
    write_numeric_csv(
        out.join("X.csv"),
        &header_refs,
        (0..spec.n).map(|i| data.raw.x.row(i).to_vec()),
    )?;
    write_numeric_csv(
        out.join("y.csv"),
        &["y"],
        data.raw.y.iter().map(|&v| vec![v]),
    )?;

    let meta = json!({
        "spec": spec,
        "beta_pop": data.beta_pop.to_vec(),
        "noise_variance": data.noise_variance,
        "signal_variance": data.signal_variance,
    });
    fs::write(out.join("meta.json"), serde_json::to_string_pretty(&meta)?)?;
    println!(
        "wrote {} ({} rows, {} covariates, seed {})",
        out.display(),
        spec.n,
        spec.p,
        spec.seed
    );
    Ok(())
}

/// Load the dataset a config points at, with an optional correlation
/// override for synthetic sweeps.
fn load_source(source: &DataSource, rho_override: Option<f64>) -> Result<RawDataset> {
    match source {
        DataSource::Synthetic(cfg) => {
            let mut spec = cfg.to_spec();
            if let Some(rho) = rho_override {
                spec.rho = rho;
            }
            Ok(generate_synthetic(&spec)?.raw)
        }
        DataSource::Csv { path, response } => {
            if rho_override.is_some() {
                bail!("rho sweeps need a synthetic source");
            }
            let selector = match response.parse::<usize>() {
                Ok(idx) => ResponseSelector::Index(idx),
                Err(_) => ResponseSelector::Name(response.clone()),
            };
            Ok(load_csv(path, &selector)?.dataset)
        }
        DataSource::Dir { path } => {
            if rho_override.is_some() {
                bail!("rho sweeps need a synthetic source");
            }
            load_data_dir(path)
        }
    }
}

/// Read a dataset directory produced by `gen` (X.csv + y.csv).
pub fn load_data_dir(dir: &Path) -> Result<RawDataset> {
    let (_, xrows) = read_numeric_csv(&dir.join("X.csv"))?;
    let (_, yrows) = read_numeric_csv(&dir.join("y.csv"))?;
    if xrows.is_empty() || yrows.len() != xrows.len() {
        bail!(
            "{}: X.csv and y.csv must contain the same positive number of rows",
            dir.display()
        );
    }
    let n = xrows.len();
    let p = xrows[0].len();
    let mut x = Array2::zeros((n, p));
    let mut y = Array1::zeros(n);
    for (i, row) in xrows.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            x[[i, j]] = v;
        }
        y[i] = yrows[i][0];
    }
    Ok(RawDataset::new(x, y)?)
}

struct PreparedDataset {
    tag: String,
    problem: StandardizedProblem,
    constants: ProblemConstants,
    delta_max: f64,
}

fn prepare(
    config: &ExperimentConfig,
    rho_override: Option<f64>,
    tag: String,
) -> Result<PreparedDataset> {
    let raw = load_source(&config.source, rho_override)?;
    let problem = standardize(&raw, config.center)?;
    let eigen = GramEigen::compute(&problem)?;
    let summary = eigen.summary()?;
    let ls = solve_least_squares_with(&problem, &eigen)?;
    let constants = ProblemConstants::new(&summary, &ls);
    let dmax = delta_max(&problem)?;
    Ok(PreparedDataset {
        tag,
        problem,
        constants,
        delta_max: dmax,
    })
}

#[derive(Serialize)]
struct CellMeta {
    label: String,
    algo: &'static str,
    eps: f64,
    delta: Option<f64>,
    iterations_run: usize,
    stopped_early: bool,
    files: Vec<String>,
}

pub fn cmd_fit(config: &ExperimentConfig) -> Result<()> {
    config.validate()?;
    fs::create_dir_all(&config.out)?;

    let mut datasets = Vec::new();
    if !config.rho_list.is_empty() {
        for &rho in &config.rho_list {
            datasets.push(prepare(config, Some(rho), format!("_rho{rho}"))?);
        }
    } else {
        datasets.push(prepare(config, None, String::new())?);
    }

    let mut all_meta = Vec::new();
    for ds in &datasets {
        let mut cells: Vec<Cell> = Vec::new();
        for spec in &config.algorithms {
            cells.extend(expand_cells(
                spec,
                ds.delta_max,
                config.iters,
                config.tol,
                config.stats_only,
            )?);
        }

        let metas: Vec<CellMeta> = cells
            .par_iter()
            .map(|cell| run_cell(config, ds, cell))
            .collect::<Result<Vec<_>>>()?;
        all_meta.push(json!({
            "dataset": ds.tag.trim_start_matches('_'),
            "n": ds.problem.n(),
            "p": ds.problem.p(),
            "delta_max": ds.delta_max,
            "cells": metas,
        }));
    }

    let meta = json!({
        "config": config,
        "datasets": all_meta,
    });
    fs::write(
        config.out.join("fit_meta.json"),
        serde_json::to_string_pretty(&meta)?,
    )?;
    println!("fit complete: outputs in {}", config.out.display());
    Ok(())
}

fn run_cell(config: &ExperimentConfig, ds: &PreparedDataset, cell: &Cell) -> Result<CellMeta> {
    let trace = run(&ds.problem, &cell.config)?;
    let mut files = Vec::new();
    let base = format!("{}{}", cell.label, ds.tag);

    if config.emit.contains(&Emit::Trace) {
        let name = format!("trace_{base}.csv");
        write_trace(&config.out.join(&name), &trace, cell.delta.is_some())?;
        files.push(name);
    }
    if config.emit.contains(&Emit::Bounds) {
        let name = format!("bounds_{base}.csv");
        let grid = match &cell.config.variant {
            Variant::PathRfs { delta_grid, .. } => Some(delta_grid.as_slice()),
            _ => None,
        };
        write_bounds(
            &config.out.join(&name),
            cell.algo,
            &ds.constants,
            cell.eps,
            cell.delta,
            grid,
            trace.iterations(),
        )?;
        files.push(name);
    }
    if config.emit.contains(&Emit::Certificates) {
        if let Some(delta) = cell.delta {
            let name = format!("certificates_{base}.csv");
            match &cell.config.variant {
                Variant::PathRfs { delta_grid, .. } => {
                    let resolved = resolved_path_grid(
                        delta_grid,
                        GridExtension::ClampLast,
                        trace.iterations().max(1),
                    );
                    write_certificates(&config.out.join(&name), &ds.problem, &trace, |k| {
                        resolved[k.min(resolved.len() - 1)]
                    })?;
                }
                _ => {
                    write_certificates(&config.out.join(&name), &ds.problem, &trace, |_| delta)?;
                }
            }
            files.push(name);
        }
    }
    if config.emit.contains(&Emit::ProfilePairs) {
        let name = format!("profile_{base}.csv");
        let data = profile_pairs(cell.algo, &ds.constants, cell.eps, &trace);
        write_numeric_csv(config.out.join(&name), &PROFILE_HEADER, data.rows)?;
        files.push(name);
    }

    Ok(CellMeta {
        label: base,
        algo: cell.algo.as_str(),
        eps: cell.eps,
        delta: cell.delta,
        iterations_run: trace.iterations(),
        stopped_early: trace.stopped_early,
        files,
    })
}

pub fn cmd_profile(config: &ExperimentConfig) -> Result<()> {
    config.validate()?;
    if !matches!(config.algorithms[0].algo, AlgoName::Lsboost | AlgoName::Fse) {
        bail!("profile curves are defined for lsboost and fse");
    }
    fs::create_dir_all(&config.out)?;
    let ds = prepare(config, None, String::new())?;

    let mut normalizers = Vec::new();
    for spec in &config.algorithms {
        for cell in expand_cells(spec, ds.delta_max, config.iters, config.tol, false)? {
            let trace = run(&ds.problem, &cell.config)?;
            let data = profile_pairs(cell.algo, &ds.constants, cell.eps, &trace);
            let name = format!("profile_pairs_{}.csv", cell.label);
            write_numeric_csv(config.out.join(&name), &PROFILE_HEADER, data.rows)?;
            normalizers.push(json!({
                "file": name,
                "algo": cell.algo.as_str(),
                "eps": cell.eps,
                "train_error_at_start": data.train_error_at_start,
                "train_error_bound_at_start": data.bound_at_start,
                "l1_max": data.l1_max,
                "l1_level_max": data.level_max,
            }));
        }
    }
    let meta = json!({
        "constants": ds.constants,
        "delta_max": ds.delta_max,
        "normalizers": normalizers,
    });
    fs::write(
        config.out.join("profile_meta.json"),
        serde_json::to_string_pretty(&meta)?,
    )?;
    println!("profile pairs written to {}", config.out.display());
    Ok(())
}

pub fn cmd_verify(seed: u64, iters: usize, self_test: bool, out: Option<&Path>) -> Result<bool> {
    let opts = SuiteOptions {
        seed,
        iters,
        gamma_distortion: if self_test { 0.1 } else { 0.0 },
    };
    let report = run_default_suite(&opts)?;

    for family in &report.families {
        let verdict = if family.pass { "PASS" } else { "FAIL" };
        let worst = family
            .items
            .iter()
            .map(|i| i.max_violation)
            .fold(f64::NEG_INFINITY, f64::max);
        println!("[{verdict}] {} (max violation {worst:.3e})", family.family);
        if !family.pass {
            for item in family.items.iter().filter(|i| !i.pass) {
                println!(
                    "       {}: violation {:.3e} > tolerance {:.1e}",
                    item.label, item.max_violation, item.tolerance
                );
            }
        }
    }

    if let Some(path) = out {
        if let Some(parent) = path.parent() {
            if !parent.as_os_str().is_empty() {
                fs::create_dir_all(parent)?;
            }
        }
        fs::write(path, serde_json::to_string_pretty(&report)?)?;
        println!("report written to {}", path.display());
    }

    if self_test {
        if report.pass {
            println!("self-test FAILED: the distorted rate coefficient did not break any check");
        } else {
            println!("self-test passed: distorted rate coefficient broke bound checks as expected");
        }
    }
    Ok(report.pass)
}

pub fn cmd_rho_sweep(
    n: usize,
    p_list: &[usize],
    rho_list: &[f64],
    repeats: usize,
    seed: u64,
    out: &Path,
) -> Result<()> {
    if let Some(parent) = out.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)?;
        }
    }

    let cells: Vec<(usize, f64)> = p_list
        .iter()
        .flat_map(|&p| rho_list.iter().map(move |&rho| (p, rho)))
        .collect();

    let rows: Vec<Vec<f64>> = cells
        .par_iter()
        .enumerate()
        .map(|(idx, &(p, rho))| -> Result<Vec<f64>> {
            let mut lambda_sum = 0.0;
            let mut gamma_sum = 0.0;
            for rep in 0..repeats {
                let data = generate_synthetic(&SyntheticSpec {
                    n,
                    p,
                    rho,
                    snr: 1.0,
                    support: 5.min(p),
                    seed: seed + (idx * repeats + rep) as u64,
                })?;
                let sp = standardize(&data.raw, true)?;
                let summary = stagewise::spectral::analyze(&sp)?;
                lambda_sum += summary.lambda_pmin;
                gamma_sum += gamma(&summary, 1.0)?;
            }
            Ok(vec![
                rho,
                p as f64,
                repeats as f64,
                lambda_sum / repeats as f64,
                gamma_sum / repeats as f64,
            ])
        })
        .collect::<Result<Vec<_>>>()?;

    // Soft smoke check: averaged gamma should not decrease with correlation
    // at fixed p. A violation is reported, not fatal.
    for &p in p_list {
        let mut prev: Option<(f64, f64)> = None;
        for row in rows.iter().filter(|r| r[1] == p as f64) {
            if let Some((prev_rho, prev_gamma)) = prev {
                if row[4] < prev_gamma - 1e-12 {
                    eprintln!(
                        "warning: averaged gamma dipped from {prev_gamma:.6} (rho={prev_rho}) \
                         to {:.6} (rho={}) at p={p}; expected a nondecreasing trend",
                        row[4], row[0]
                    );
                }
            }
            prev = Some((row[0], row[4]));
        }
    }

    write_numeric_csv(
        out,
        &["rho", "p", "repeats", "lambda_pmin_mean", "gamma_mean"],
        rows,
    )?;
    println!("sweep written to {}", out.display());
    Ok(())
}
