use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use maxsurf_cli::coeffs;
use maxsurf_core::corpus;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn maxsurf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_maxsurf"))
        .args(args)
        .env_remove("MAXSURF_CONFIG")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_exit_codes() {
    let ok = maxsurf(&["validate", "--spec", s(&data("catenoid_bjorling.json"))]);
    assert_eq!(code(&ok), 0, "{}", String::from_utf8_lossy(&ok.stderr));

    let bad = maxsurf(&["validate", "--spec", s(&data("not_null.json"))]);
    assert_eq!(code(&bad), 2);
    let report: serde_json::Value = serde_json::from_slice(&bad.stdout).unwrap();
    let nullity = report["sections"]["bjorling"]["gamma_nullity"].as_f64().unwrap();
    assert!((nullity - 1.0).abs() < 1e-12);
    assert_eq!(report["verdict"], "fail");

    assert_eq!(code(&maxsurf(&["validate", "--spec", s(&data("malformed.json"))])), 3);
    assert_eq!(code(&maxsurf(&["validate", "--spec", s(&data("circle_curve.json"))])), 0);
}

#[test]
fn solve_bjorling_writes_catenoid() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("cat");
    let out = maxsurf(&["solve-bjorling", "--spec", s(&data("catenoid_bjorling.json")), "--out", s(&prefix)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(dir.path().join("cat.coeffs")).unwrap();
    assert!(text.contains("a 1 5.0000000000000000e-1 0.0000000000000000e0"));
    assert!(text.contains("b 1 -5.0000000000000000e-1 0.0000000000000000e0"));
    assert!(text.contains("log 1.0000000000000000e0 0.0000000000000000e0"));
    let surface = coeffs::from_text(&text).unwrap();
    assert_eq!(surface.h().max_coeff_diff(&corpus::catenoid_h()), 0.0);
}

#[test]
fn solve_bjorling_constant_offsets() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("shifted");
    let out = maxsurf(&["solve-bjorling", "--spec", s(&data("constant_bjorling.json")), "--out", s(&prefix)]);
    assert_eq!(code(&out), 0);
    let text = std::fs::read_to_string(dir.path().join("shifted.coeffs")).unwrap();
    assert!(text.contains("a 0 7.5000000000000000e-1 7.5000000000000000e-1"));
    assert!(text.contains("a 1 5.0000000000000000e-1"));
}

#[test]
fn degenerate_data_fails() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("deg");
    let out = maxsurf(&["solve-bjorling", "--spec", s(&data("degenerate_bjorling.json")), "--out", s(&prefix)]);
    assert_eq!(code(&out), 2);
    let report = std::fs::read_to_string(dir.path().join("deg.report.json")).unwrap();
    assert!(report.contains("degenerate"));
    assert!(!dir.path().join("deg.coeffs").exists());
}

#[test]
fn interpolate_catenoid_finds_both_roots() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("cat");
    let out = maxsurf(&[
        "interpolate",
        "--spec",
        s(&data("catenoid_curve.json")),
        "--bracket",
        "0.05,20",
        "--out",
        s(&prefix),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("cat.report.json")).unwrap()).unwrap();
    let roots: Vec<f64> = report["sections"]["roots"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["r0"].as_f64().unwrap())
        .collect();
    assert_eq!(roots.len(), 2);
    assert!((roots[0] - 0.5).abs() < 1e-6 && (roots[1] - 2.0).abs() < 1e-6);
    let first = coeffs::from_text(&std::fs::read_to_string(dir.path().join("cat.root1.coeffs")).unwrap()).unwrap();
    assert!(first.h().max_coeff_diff(&corpus::catenoid_h()) < 1e-9);
    assert!(dir.path().join("cat.root2.coeffs").exists());
}

#[test]
fn interpolate_sampled_curve() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("sampled");
    let out = maxsurf(&["interpolate", "--spec", s(&data("catenoid_curve_sampled.json")), "--r0", "0.5", "--out", s(&prefix)]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn interpolate_circle_has_no_root() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("circle");
    let out = maxsurf(&["interpolate", "--spec", s(&data("circle_curve.json")), "--out", s(&prefix)]);
    assert_eq!(code(&out), 4);
    let report = std::fs::read_to_string(dir.path().join("circle.report.json")).unwrap();
    assert!(report.contains("\"verdict\": \"no-root\""));
}

#[test]
fn interpolate_family_through_a_point() {
    let dir = tempfile::tempdir().unwrap();
    let prefix = dir.path().join("fam");
    let out = maxsurf(&[
        "interpolate",
        "--spec",
        s(&data("family_curve.json")),
        "--r0",
        "2",
        "--singularity",
        "0,0,0",
        "--out",
        s(&prefix),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let f = coeffs::from_text(&std::fs::read_to_string(dir.path().join("fam.root1.coeffs")).unwrap()).unwrap();
    assert!(f.h().max_coeff_diff(&corpus::family_h()) < 1e-10);
    assert!(f.w().max_coeff_diff(&corpus::family_w()) < 1e-10);
}

#[test]
fn sample_mesh_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let surface = dir.path().join("cat.coeffs");
    std::fs::write(&surface, coeffs::to_text(&corpus::catenoid())).unwrap();
    let mesh = dir.path().join("cat.obj");
    let out = maxsurf(&[
        "sample", "--surface", s(&surface), "--grid", "64x32", "--rho", "0.4,2.5", "--out", s(&mesh), "--singular",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let obj = std::fs::read_to_string(&mesh).unwrap();
    assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 2048);
    assert!(!obj.contains('\r'));
    let sidecar = std::fs::read_to_string(dir.path().join("cat.obj.singular.csv")).unwrap();
    assert_eq!(sidecar.lines().count(), 33);

    let csv = dir.path().join("cat.csv");
    let out = maxsurf(&[
        "sample", "--surface", s(&surface), "--grid", "64x32", "--rho", "0.4,2.5", "--format", "csv", "--out", s(&csv),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(std::fs::read_to_string(&csv).unwrap().lines().count(), 2049);
}

#[test]
fn sample_outside_annulus_fails() {
    let dir = tempfile::tempdir().unwrap();
    let surface = dir.path().join("bounded.coeffs");
    let bounded = corpus::catenoid().with_annulus(maxsurf_core::Annulus::new(0.5, 2.0).unwrap());
    std::fs::write(&surface, coeffs::to_text(&bounded)).unwrap();
    let out = maxsurf(&["sample", "--surface", s(&surface), "--rho", "0.4,2.5", "--out", s(&dir.path().join("m.obj"))]);
    assert_eq!(code(&out), 2);
}

#[test]
fn singular_set_and_gauss_map() {
    let dir = tempfile::tempdir().unwrap();
    let surface = dir.path().join("cat.coeffs");
    std::fs::write(&surface, coeffs::to_text(&corpus::catenoid())).unwrap();
    let out = maxsurf(&["singular-set", "--surface", s(&surface), "--grid", "16x16", "--rho", "0.3,3"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    for row in text.lines().skip(1) {
        let rho: f64 = row.split(',').nth(1).unwrap().parse().unwrap();
        assert!((rho - 1.0).abs() < 1e-8);
    }
    assert_eq!(text.lines().count(), 17);

    let out = maxsurf(&["gauss-map", "--surface", s(&surface), "--grid", "4x8", "--rho", "1.5,3"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 33);
    assert!(text.lines().nth(1).unwrap().starts_with("1.5,0,finite,1.5,0"));
}

#[test]
fn config_file_and_environment() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.toml");
    std::fs::write(&config, "bracket = [0.05, 20.0]\nscan_points = 256\n").unwrap();
    let prefix = dir.path().join("cat");
    let out = maxsurf(&["interpolate", "--spec", s(&data("catenoid_curve.json")), "--out", s(&prefix), "--config", s(&config)]);
    assert_eq!(code(&out), 0);
    let report = std::fs::read_to_string(dir.path().join("cat.report.json")).unwrap();
    assert!(report.contains("\"scan_points\": 256"));

    let out = Command::new(env!("CARGO_BIN_EXE_maxsurf"))
        .args(["validate", "--spec", s(&data("catenoid_bjorling.json"))])
        .env("MAXSURF_CONFIG", s(&config))
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().contains("\"scan_points\": 256"));

    std::fs::write(&config, "no_such_key = 1\n").unwrap();
    let out = maxsurf(&["validate", "--spec", s(&data("catenoid_bjorling.json")), "--config", s(&config)]);
    assert_eq!(code(&out), 3);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let run = || {
        let dir = tempfile::tempdir().unwrap();
        let prefix = dir.path().join("fam");
        let out = maxsurf(&["interpolate", "--spec", s(&data("family_curve.json")), "--bracket", "0.1,10", "--out", s(&prefix)]);
        assert_eq!(code(&out), 0);
        let mesh = dir.path().join("fam.obj");
        let root = dir.path().join("fam.root1.coeffs");
        assert_eq!(code(&maxsurf(&["sample", "--surface", s(&root), "--out", s(&mesh)])), 0);
        ["fam.report.json", "fam.root1.coeffs", "fam.root2.coeffs", "fam.obj"]
            .map(|name| std::fs::read_to_string(dir.path().join(name)).unwrap())
    };
    let (a, b) = (run(), run());
    for (x, y) in a.iter().zip(&b) {
        assert!(x == y, "outputs differ");
    }
}
