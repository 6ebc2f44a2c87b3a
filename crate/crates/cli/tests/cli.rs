//! End-to-end tests of the command-line interface, driving the built binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_stagewise"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("stagewise_cli_{}_{name}", std::process::id()));
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn run_ok(cmd: &mut Command) -> Output {
    let out = cmd.output().expect("binary runs");
    assert!(
        out.status.success(),
        "command failed\nstdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    out
}

fn read_csv(path: &Path) -> (Vec<String>, Vec<Vec<f64>>) {
    let text = fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let header = lines
        .next()
        .unwrap()
        .split(',')
        .map(|s| s.to_string())
        .collect();
    let rows = lines
        .map(|l| l.split(',').map(|v| v.parse::<f64>().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn gen_is_deterministic_and_records_provenance() {
    let dir = scratch("gen");
    for sub in ["a", "b"] {
        run_ok(
            bin()
                .args([
                    "gen", "--n", "20", "--p", "15", "--rho", "0.5", "--preset", "eg-b", "--seed",
                    "3", "--out",
                ])
                .arg(dir.join(sub)),
        );
    }
    for file in ["X.csv", "y.csv", "meta.json"] {
        let a = fs::read(dir.join("a").join(file)).unwrap();
        let b = fs::read(dir.join("b").join(file)).unwrap();
        assert_eq!(a, b, "{file} differs between identical seeds");
    }
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.join("a/meta.json")).unwrap()).unwrap();
    let beta: Vec<f64> = meta["beta_pop"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_f64().unwrap())
        .collect();
    assert_eq!(beta.iter().filter(|b| **b == 1.0).count(), 10);
    assert!(beta[..10].iter().all(|b| *b == 1.0));
    fs::remove_dir_all(dir).ok();
}

#[test]
fn fit_budget_sweep_emits_one_trace_per_fraction() {
    let dir = scratch("sweep7");
    run_ok(
        bin()
            .args([
                "gen", "--n", "30", "--p", "10", "--rho", "0.3", "--seed", "5", "--out",
            ])
            .arg(dir.join("data")),
    );
    run_ok(
        bin()
            .args([
                "fit",
                "--algo",
                "rfs",
                "--eps",
                "0.01",
                "--delta-frac",
                "0.2,0.3,0.4,0.5,0.6,0.7,0.8",
                "--iters",
                "50",
                "--data",
            ])
            .arg(dir.join("data"))
            .arg("--out")
            .arg(dir.join("fits")),
    );
    let traces: Vec<_> = fs::read_dir(dir.join("fits"))
        .unwrap()
        .filter_map(|e| e.ok())
        .filter(|e| e.file_name().to_string_lossy().starts_with("trace_"))
        .collect();
    assert_eq!(traces.len(), 7);
    // Default emit is trace only: no bounds or certificate files.
    let extras = fs::read_dir(dir.join("fits"))
        .unwrap()
        .filter_map(|e| e.ok())
        .filter(|e| {
            let name = e.file_name().to_string_lossy().to_string();
            name.starts_with("bounds_") || name.starts_with("certificates_")
        })
        .count();
    assert_eq!(extras, 0);

    // Resolved absolute budgets are recorded in the metadata.
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.join("fits/fit_meta.json")).unwrap()).unwrap();
    let cells = meta["datasets"][0]["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 7);
    let dmax = meta["datasets"][0]["delta_max"].as_f64().unwrap();
    for cell in cells {
        let delta = cell["delta"].as_f64().unwrap();
        assert!(delta > 0.0 && delta <= dmax * 0.8 + 1e-9);
    }
    fs::remove_dir_all(dir).ok();
}

#[test]
fn greedy_trace_on_csv_input_is_monotone_and_round_trips() {
    let dir = scratch("csvfit");
    // Small regression CSV with the response in the middle.
    let mut csv = String::from("a,y,b\n");
    for i in 0..25 {
        let x1 = (i as f64 * 0.7).sin();
        let x2 = (i as f64 * 0.31).cos();
        let y = 2.0 * x1 - x2 + 0.1 * ((i * i) as f64).sin();
        csv.push_str(&format!("{x1},{y},{x2}\n"));
    }
    fs::write(dir.join("data.csv"), csv).unwrap();

    run_ok(
        bin()
            .args([
                "fit",
                "--algo",
                "lsboost",
                "--eps",
                "0.1",
                "--iters",
                "80",
                "--emit",
                "trace,bounds",
                "--csv",
            ])
            .arg(dir.join("data.csv"))
            .arg("--response")
            .arg("y")
            .arg("--out")
            .arg(dir.join("fits")),
    );

    let trace_path = dir.join("fits/trace_lsboost_eps0.1.csv");
    let (header, rows) = read_csv(&trace_path);
    let te = header.iter().position(|h| h == "train_error").unwrap();
    let mut prev = f64::INFINITY;
    for row in &rows {
        assert!(row[te] <= prev + 1e-12, "train_error not monotone");
        prev = row[te];
    }

    // Bounds dominate the observed gap at every iteration.
    let (bheader, brows) = read_csv(&dir.join("fits/bounds_lsboost_eps0.1.csv"));
    let tb = bheader
        .iter()
        .position(|h| h == "train_error_bound")
        .unwrap();
    let final_error = rows.last().unwrap()[te];
    for (row, brow) in rows.iter().zip(brows.iter()) {
        assert!(row[te] - final_error <= brow[tb] * (1.0 + 1e-9) + 1e-9);
    }

    // The written file reloads losslessly through the library reader.
    let (_, reloaded) = stagewise::io::read_numeric_csv(&trace_path).unwrap();
    for (a, b) in rows.iter().zip(reloaded.iter()) {
        for (x, y) in a.iter().zip(b.iter()) {
            assert_eq!(x.to_bits(), y.to_bits());
        }
    }
    fs::remove_dir_all(dir).ok();
}

#[test]
fn profile_normalization_starts_at_one_and_bound_decreases() {
    let dir = scratch("profile");
    run_ok(
        bin()
            .args([
                "gen", "--n", "30", "--p", "8", "--rho", "0.2", "--seed", "9", "--out",
            ])
            .arg(dir.join("data")),
    );
    run_ok(
        bin()
            .args([
                "profile", "--algo", "lsboost", "--eps", "0.05,0.5", "--iters", "120", "--data",
            ])
            .arg(dir.join("data"))
            .arg("--out")
            .arg(dir.join("prof")),
    );
    for eps in ["0.05", "0.5"] {
        let (header, rows) =
            read_csv(&dir.join(format!("prof/profile_pairs_lsboost_eps{eps}.csv")));
        let rel = header.iter().position(|h| h == "train_error_rel").unwrap();
        let bound = header
            .iter()
            .position(|h| h == "train_error_bound")
            .unwrap();
        let level = header.iter().position(|h| h == "l1_level").unwrap();
        assert_eq!(rows[0][rel], 1.0);
        // Theoretical curve: training bound decreasing as the shrinkage
        // level grows along the profile.
        for pair in rows.windows(2) {
            assert!(pair[1][level] >= pair[0][level] - 1e-12);
            assert!(pair[1][bound] <= pair[0][bound] + 1e-12);
        }
    }
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.join("prof/profile_meta.json")).unwrap())
            .unwrap();
    assert!(meta["normalizers"].as_array().unwrap().len() == 2);
    fs::remove_dir_all(dir).ok();
}

#[test]
fn verify_exit_codes_and_report() {
    let dir = scratch("verify");
    let report = dir.join("report.json");
    run_ok(
        bin()
            .args(["verify", "--iters", "30", "--seed", "3", "--out"])
            .arg(&report),
    );
    let parsed: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(parsed["pass"], serde_json::Value::Bool(true));
    assert!(!parsed["families"].as_array().unwrap().is_empty());

    // Negative control: distorted rate coefficient must fail loudly.
    let out = bin()
        .args(["verify", "--iters", "30", "--self-test"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("self-test passed"), "{stdout}");
    fs::remove_dir_all(dir).ok();
}

#[test]
fn rho_sweep_single_cell_yields_one_row() {
    let dir = scratch("rho");
    let out = dir.join("gamma_vs_p.csv");
    run_ok(
        bin()
            .args([
                "rho-sweep",
                "--n",
                "25",
                "--p-list",
                "12",
                "--rho-list",
                "0.4",
                "--repeats",
                "2",
                "--out",
            ])
            .arg(&out),
    );
    let (header, rows) = read_csv(&out);
    assert_eq!(
        header,
        vec!["rho", "p", "repeats", "lambda_pmin_mean", "gamma_mean"]
    );
    assert_eq!(rows.len(), 1);
    assert!(rows[0][4] >= 0.75 && rows[0][4] < 1.0);
    fs::remove_dir_all(dir).ok();
}

#[test]
fn fit_accepts_a_config_file() {
    let dir = scratch("config");
    let config = serde_json::json!({
        "source": {"synthetic": {"n": 30, "p": 12, "rho": 0.4, "snr": 1.0, "support": 4, "seed": 21}},
        "algorithms": [
            {"algo": "fse", "eps": [0.02]},
            {"algo": "path-rfs", "eps": [0.01],
             "grid": {"geometric": {"first_frac": 0.1, "last_frac": 0.8, "points": 12}}}
        ],
        "iters": 40,
        "emit": ["trace", "bounds"],
        "out": dir.join("runs").to_string_lossy()
    });
    fs::write(
        dir.join("cfg.json"),
        serde_json::to_string_pretty(&config).unwrap(),
    )
    .unwrap();
    run_ok(bin().args(["fit", "--config"]).arg(dir.join("cfg.json")));
    assert!(dir.join("runs/trace_fse_eps0.02.csv").exists());
    assert!(dir.join("runs/trace_path-rfs_eps0.01.csv").exists());
    assert!(dir.join("runs/bounds_path-rfs_eps0.01.csv").exists());

    // Per-iteration budgets in the path trace follow the geometric grid.
    let (header, rows) = read_csv(&dir.join("runs/trace_path-rfs_eps0.01.csv"));
    let d = header.iter().position(|h| h == "delta").unwrap();
    for pair in rows[1..].windows(2) {
        assert!(pair[1][d] >= pair[0][d] - 1e-12);
    }
    fs::remove_dir_all(dir).ok();
}

#[test]
fn config_rho_sweep_runs_one_dataset_per_correlation() {
    let dir = scratch("rholist");
    let config = serde_json::json!({
        "source": {"synthetic": {"n": 25, "p": 8, "rho": 0.0, "snr": 1.0, "support": 3, "seed": 13}},
        "algorithms": [{"algo": "lsboost", "eps": [0.5]}],
        "rho_list": [0.0, 0.6],
        "iters": 20,
        "out": dir.join("runs").to_string_lossy()
    });
    fs::write(dir.join("cfg.json"), config.to_string()).unwrap();
    run_ok(bin().args(["fit", "--config"]).arg(dir.join("cfg.json")));
    assert!(dir.join("runs/trace_lsboost_eps0.5_rho0.csv").exists());
    assert!(dir.join("runs/trace_lsboost_eps0.5_rho0.6.csv").exists());
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.join("runs/fit_meta.json")).unwrap()).unwrap();
    assert_eq!(meta["datasets"].as_array().unwrap().len(), 2);
    fs::remove_dir_all(dir).ok();
}

#[test]
fn actionable_errors_for_bad_invocations() {
    let out = bin()
        .args([
            "fit",
            "--algo",
            "rfs",
            "--eps",
            "0.1",
            "--out",
            "/tmp/nowhere",
        ])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("supply a dataset"), "stderr: {stderr}");

    let dir = scratch("badalgo");
    run_ok(
        bin()
            .args([
                "gen", "--n", "10", "--p", "4", "--rho", "0", "--seed", "1", "--out",
            ])
            .arg(dir.join("data")),
    );
    let out = bin()
        .args(["fit", "--algo", "rfs", "--eps", "0.1", "--data"])
        .arg(dir.join("data"))
        .arg("--out")
        .arg(dir.join("fits"))
        .output()
        .unwrap();
    assert!(!out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("--delta"), "stderr: {stderr}");
    fs::remove_dir_all(dir).ok();
}
