use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobscope"))
        .args(args)
        .env_remove("FROBSCOPE_GUARD_OVERRIDE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn torus_census_rows() {
    let o = run(&["torus-census", "--family", "gl", "--n", "2", "--p", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    assert!(out.contains(",24,1/2") && out.contains(",16,1/2"));
    assert!(stderr(&o).contains("class equation sum 1"));

    let o = run(&["torus-census", "--family", "sp", "--n", "4", "--p", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 6);
}

#[test]
fn unknown_family_is_usage_error() {
    let o = run(&["torus-census", "--family", "so", "--n", "2", "--p", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn borel_volume_values() {
    let o = run(&["borel-volume", "--family", "gl", "--n", "2", "--p", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("GL_2(F_3),3,48,bounding,30,5/8"));

    let o = run(&["borel-volume", "--preset", "pgl2", "--p", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("coset:0,,2/3") && out.contains("coset:1,,1/2"));
}

#[test]
fn guard_exceeded() {
    let o = run(&["borel-volume", "--family", "gl", "--n", "2", "--p", "101"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("103020000"));
}

#[test]
fn csv_and_json_agree() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("v.csv");
    let json = dir.path().join("v.json");
    let base = ["borel-volume", "--family", "sl", "--n", "2", "--p", "3,5"];
    let mut a = base.to_vec();
    a.extend(["--out", csv.to_str().unwrap()]);
    let mut b = base.to_vec();
    b.extend(["--format", "json", "--out", json.to_str().unwrap()]);
    assert!(run(&a).status.success());
    assert!(run(&b).status.success());
    let rows: Vec<String> = fs::read_to_string(&csv).unwrap().lines().skip(1).map(String::from).collect();
    let reports: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    let reports = reports.as_array().unwrap();
    assert_eq!(reports.len(), 2);
    for r in reports {
        let group = format!("SL_2(F_{})", r["group"]["p"]);
        let b = &r["bounding_volume"];
        let want = format!("{group},{},{},bounding", r["group"]["p"], r["group_order"]);
        let row = rows.iter().find(|l| l.starts_with(&want)).expect("bounding row");
        let frac = if b["den"] == "1" {
            b["num"].as_str().unwrap().to_string()
        } else {
            format!("{}/{}", b["num"].as_str().unwrap(), b["den"].as_str().unwrap())
        };
        assert!(row.ends_with(&frac), "{row} vs {frac}");
        let per_torus = r["per_torus"].as_array().unwrap().len();
        assert_eq!(rows.iter().filter(|l| l.starts_with(&group) && l.contains("torus:")).count(), per_torus);
    }
}

#[test]
fn scan_cm_artifacts() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cm");
    let o = run(&[
        "scan",
        "--preset",
        "cm",
        "--x",
        "20000",
        "--checkpoints",
        "1000,5000",
        "--target",
        "1,0,1",
        "--workers",
        "2",
        "--out-dir",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let density: serde_json::Value = serde_json::from_str(&fs::read_to_string(out.join("density.json")).unwrap()).unwrap();
    assert_eq!(density["key"], "quad:-1");
    for p in density["points"].as_array().unwrap() {
        let r = p["ratio"].as_f64().unwrap();
        assert!((0.45..=0.55).contains(&r), "{r}");
    }
    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(out.join("scan.json")).unwrap()).unwrap();
    let csv = fs::read_to_string(out.join("scan.csv")).unwrap();
    let nonzero: usize = report["series"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["counts"].as_array().unwrap().iter().filter(|c| c.as_u64() != Some(0)).count())
        .sum();
    assert_eq!(csv.lines().count() - 1, nonzero);
}

#[test]
fn scan_is_worker_independent() {
    let a = run(&["scan", "--preset", "non-cm", "--x", "5000", "--checkpoints", "1000", "--workers", "1"]);
    let b = run(&["scan", "--preset", "non-cm", "--x", "5000", "--checkpoints", "1000", "--workers", "3"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn scan_usage_errors() {
    let o = run(&["scan", "--preset", "cm", "--x", "2000", "--checkpoints", "1000,500"]);
    assert_eq!(o.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("curves.txt");
    fs::write(&f, "# test\n\nelliptic a=1 b=zz\n").unwrap();
    let o = run(&["scan", "--curve-file", f.to_str().unwrap(), "--x", "100"]);
    assert_eq!(o.status.code(), Some(2));
    let e = stderr(&o);
    assert!(e.contains(":3:") && e.contains("elliptic a=1 b=zz"), "{e}");

    fs::write(&f, "elliptic a=1 b=1\n").unwrap();
    assert!(run(&["scan", "--curve-file", f.to_str().unwrap(), "--x", "100"]).status.success());
}

#[test]
fn sieve_presets() {
    let o = run(&["sieve", "--preset", "g1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("1 − 1/16"));

    let o = run(&["sieve", "--preset", "g2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let e = stderr(&o);
    assert!(e.contains("= 34") && e.contains("= 38") && e.contains("warning"), "{e}");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["bound"]["label"], "shape evaluation");
    assert_eq!(v["exponent"]["corollary"]["discrepancy"], true);
}

#[test]
fn sieve_config_errors() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("cfg.json");
    fs::write(&f, r#"{"beta_floor": "1/4", "X": 10000}"#).unwrap();
    let o = run(&["sieve", "--config", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let e = stderr(&o);
    assert!(e.contains("main_constant") && e.contains("sieving_primes") && e.contains("dim"), "{e}");

    fs::write(
        &f,
        r#"{"beta_floor": "1/4", "main_constant": 1, "X": 10000, "z": 2.5, "sieving_primes": [3, 5, 7],
            "error_model": {"gamma_tilde": 1, "constant": 1}, "dim": 3, "rank": 1}"#,
    )
    .unwrap();
    let o = run(&["sieve", "--config", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));

    fs::write(
        &f,
        r#"{"beta_floor": "1/4", "main_constant": 1, "X": 10000, "z": 10, "sieving_primes": [3, 5, 7],
            "error_model": {"gamma_tilde": 1, "constant": 1}, "dim": 3, "rank": 1}"#,
    )
    .unwrap();
    let o = run(&["sieve", "--config", f.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let main = v["bound"]["main_term"].as_f64().unwrap();
    assert!((main - v["bound"]["li_x"].as_f64().unwrap()).abs() < 1e-9 * main);
}

#[test]
fn sieve_config_with_per_prime_densities() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("cfg.json");
    fs::write(
        &f,
        r#"{"beta_floor": "1/4", "beta_per_prime": {"3": "1/4", "5": "1/3"}, "main_constant": 1, "X": 10000,
            "z": 10, "sieving_primes": [3, 5, 7], "error_model": {"gamma_tilde": 2.5, "constant": 1},
            "dim": 3, "rank": 1, "g": 1}"#,
    )
    .unwrap();
    let o = run(&["sieve", "--config", f.to_str().unwrap(), "--epsilon", "0.01"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));

    fs::write(
        &f,
        r#"{"beta_floor": "1/4", "beta_per_prime": {"3": "1/8"}, "main_constant": 1, "X": 10000,
            "z": 10, "sieving_primes": [3, 5, 7], "error_model": {"gamma_tilde": 2.5, "constant": 1},
            "dim": 3, "rank": 1}"#,
    )
    .unwrap();
    assert_eq!(run(&["sieve", "--config", f.to_str().unwrap()]).status.code(), Some(2));
}
