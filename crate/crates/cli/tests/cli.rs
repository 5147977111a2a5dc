use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

use fewcurve::bounds::paper_bound_general;
use fewcurve::intersect::IntersectError;
use fewcurve::poly::rat;
use fewcurve_cli::{parse_system, run, CliError, Format, Mode, Report, RunConfig};
use tempfile::TempDir;

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn config(mode: Mode, dir: &TempDir) -> RunConfig {
    RunConfig { mode, out: Some(dir.path().join("out")), ..RunConfig::default() }
}

fn cell<'a>(r: &'a Report, row: usize, col: &str) -> &'a str {
    &r.rows[row][r.column(col).unwrap()]
}

#[test]
fn counts_the_line_and_circle() {
    let dir = TempDir::new().unwrap();
    let mut cfg = config(Mode::Count, &dir);
    cfg.f_path = Some(write(&dir, "f", "1 0 1\n-1 1 0\n"));
    cfg.g_path = Some(write(&dir, "g", "1 2 0\n1 0 2\n-2 0 0\n"));
    let r = run(&cfg).unwrap();
    assert_eq!(r.rows.len(), 1);
    assert_eq!(cell(&r, 0, "count"), "2");
    assert_eq!(cell(&r, 0, "bound_general"), paper_bound_general(1, 3).to_string());
    assert_eq!(cell(&r, 0, "within_bound"), "true");
    let text = fs::read_to_string(dir.path().join("out")).unwrap();
    assert!(text.starts_with("# fewcurve count report, schema v1\nindex,d,t,"));
}

#[test]
fn tabulates_bounds() {
    let dir = TempDir::new().unwrap();
    let mut cfg = config(Mode::Bounds, &dir);
    cfg.d_max = 2;
    cfg.t_max = 2;
    let r = run(&cfg).unwrap();
    assert_eq!(r.rows.len(), 2 * 2 * 2);
    let rows: Vec<usize> = (0..r.rows.len())
        .filter(|&k| cell(&r, k, "d") == "2" && cell(&r, k, "t") == "2")
        .collect();
    assert_eq!(rows.len(), 2);
    for &k in &rows {
        assert_eq!(cell(&r, k, "paper_general"), "95");
        assert_eq!(cell(&r, k, "paper_irreducible"), "94");
        assert_eq!(cell(&r, k, "optm"), "6");
    }
    // Bezout number 2 * deg G
    assert_eq!(cell(&r, rows[0], "bezout"), "2");
    assert_eq!(cell(&r, rows[1], "bezout"), "4");
}

#[test]
fn verify_campaign_passes() {
    let dir = TempDir::new().unwrap();
    let mut cfg = config(Mode::Verify, &dir);
    cfg.seed = 42;
    cfg.n_instances = 10;
    cfg.d_max = 2;
    cfg.t_max = 3;
    let r = run(&cfg).unwrap();
    assert_eq!(r.rows.len(), 10);
    assert_eq!(r.failures(), 0);
    for (k, row) in r.rows.iter().enumerate() {
        assert_eq!(row[0], k.to_string());
    }
}

#[test]
fn rows_replay_from_their_instance_columns() {
    let dir = TempDir::new().unwrap();
    let mut cfg = config(Mode::Verify, &dir);
    cfg.seed = 9;
    cfg.n_instances = 4;
    let r = run(&cfg).unwrap();
    for k in 0..r.rows.len() {
        let mut replay = config(Mode::Verify, &dir);
        replay.out = Some(dir.path().join("replay"));
        replay.f_path = Some(write(&dir, "rf", cell(&r, k, "f")));
        replay.g_path = Some(write(&dir, "rg", cell(&r, k, "g")));
        let one = run(&replay).unwrap();
        assert_eq!(one.rows[0][1..], r.rows[k][1..]);
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    for (mode, n) in [(Mode::Verify, 12), (Mode::Count, 12), (Mode::Wronskcheck, 6), (Mode::Derivcheck, 2)] {
        for format in [Format::Csv, Format::Json] {
            let mut cfg = config(mode, &dir);
            cfg.seed = 7;
            cfg.n_instances = n;
            cfg.format = format;
            cfg.d_max = 3;
            cfg.t_max = 4;
            run(&cfg).unwrap();
            let a = fs::read(dir.path().join("out")).unwrap();
            run(&cfg).unwrap();
            assert_eq!(a, fs::read(dir.path().join("out")).unwrap(), "{mode:?} {format:?}");
        }
    }
}

#[test]
fn json_mirrors_csv() {
    let dir = TempDir::new().unwrap();
    let mut cfg = config(Mode::Count, &dir);
    cfg.n_instances = 5;
    let r = run(&cfg).unwrap();
    cfg.format = Format::Json;
    let j = run(&cfg).unwrap();
    assert_eq!(r, j);
    let v: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("out")).unwrap()).unwrap();
    assert_eq!(v["mode"], "count");
    assert_eq!(v["columns"].as_array().unwrap().len(), r.columns.len());
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
}

#[test]
fn derivative_and_wronskian_checks_pass() {
    let dir = TempDir::new().unwrap();
    let mut cfg = config(Mode::Derivcheck, &dir);
    cfg.n_instances = 6;
    cfg.d_max = 3;
    let r = run(&cfg).unwrap();
    assert_eq!(r.rows.len(), 6 * 4);
    assert_eq!(r.failures(), 0);
    let mut cfg = config(Mode::Wronskcheck, &dir);
    cfg.n_instances = 20;
    cfg.d_max = 3;
    cfg.t_max = 4;
    let r = run(&cfg).unwrap();
    assert_eq!(r.rows.len(), 20);
    assert_eq!(r.failures(), 0);
}

#[test]
fn parse_errors() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g", "1 1 0\n");
    let empty = write(&dir, "empty", "# nothing here\n");
    match parse_system(&empty, &g) {
        Err(CliError::Intersect(IntersectError::ZeroF)) => {}
        other => panic!("{other:?}"),
    }
    let msg = parse_system(&empty, &g).unwrap_err().to_string();
    assert!(msg.contains("two sparse equations"), "{msg}");
    let third = write(&dir, "third", "1/3 0 1\n-1 1 0\n");
    let sys = parse_system(&third, &g).unwrap();
    assert_eq!(sys.f.coeff(0, 1), rat(1, 3));
    let bad = write(&dir, "bad", "1 0\n");
    assert!(matches!(parse_system(&bad, &g), Err(CliError::Parse { .. })));
    let huge = write(&dir, "huge", "1 0 1\n1 5000 0\n");
    assert!(matches!(parse_system(&huge, &g), Err(CliError::Budget(_))));
    let missing = dir.path().join("missing");
    assert!(matches!(parse_system(&missing, &g), Err(CliError::Io(_))));
}

#[test]
fn invalid_configurations_are_rejected() {
    let dir = TempDir::new().unwrap();
    for edit in [
        (|c: &mut RunConfig| c.d_max = 0) as fn(&mut RunConfig),
        |c| c.n_instances = 0,
        |c| c.tolerance = rat(0, 1),
        |c| c.f_path = Some(Path::new("f").into()),
    ] {
        let mut cfg = config(Mode::Verify, &dir);
        edit(&mut cfg);
        assert!(matches!(run(&cfg), Err(CliError::Config(_))));
    }
}

#[test]
fn binary_exit_codes() {
    let dir = TempDir::new().unwrap();
    let bin = env!("CARGO_BIN_EXE_fewcurve");
    let out = dir.path().join("r.csv");
    let ok = Command::new(bin)
        .args(["--mode", "verify", "--seed", "42", "--n", "3", "--dmax", "2", "--tmax", "3", "--tol", "1e-6"])
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert!(ok.success());
    assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 2 + 3);
    let f = write(&dir, "f", "");
    let g = write(&dir, "g", "1 0 0\n");
    let bad = Command::new(bin).args(["--mode", "count"]).arg("--f").arg(&f).arg("--g").arg(&g).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("identically zero"));
}
