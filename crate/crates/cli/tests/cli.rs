use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_stieltjes"));
    c.env_remove("STIELTJES_CONFIG");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn text_value(o: &Output) -> f64 {
    let out = stdout(o);
    let line = out.lines().next().unwrap();
    line.rsplit("= ").next().unwrap().trim().parse().unwrap()
}

fn temp_config(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

#[test]
fn gamma1_at_one() {
    let o = run(&["stieltjes", "--k", "1", "--a", "1"]);
    assert!(o.status.success());
    assert!((text_value(&o) - -0.0728158454836767).abs() < 1e-10);
    assert!(stdout(&o).contains("method = integral"));
}

#[test]
fn gamma0_at_half_is_minus_digamma() {
    let o = run(&["stieltjes", "--k", "0", "--a", "1/2"]);
    assert!(o.status.success());
    let expected = 0.577_215_664_901_532_9 + 2.0 * 2f64.ln();
    assert!((text_value(&o) - expected).abs() < 1e-9);
}

#[test]
fn stieltjes_exit_codes() {
    assert_eq!(run(&["stieltjes", "--k", "1", "--a", "0"]).status.code(), Some(2));
    assert_eq!(run(&["stieltjes", "--k", "1", "--a", "x/y"]).status.code(), Some(2));
    assert_eq!(run(&["stieltjes", "--k", "-1", "--a", "1"]).status.code(), Some(2));
    assert_eq!(run(&["stieltjes", "--k", "1", "--a", "1", "--method", "guess"]).status.code(), Some(2));
    let o = run(&["stieltjes", "--k", "2", "--a", "1/1000", "--method", "stirling-zeta-series"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn all_methods_report_spread() {
    let o = run(&["stieltjes", "--k", "1", "--a", "1", "--all-methods", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let methods = v["methods"].as_array().unwrap();
    assert!(methods.len() >= 5);
    let dev = v["max_pairwise_deviation"].as_f64().unwrap();
    assert!(dev < 1e-5, "deviation {dev}");
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "bogus"]).status.code(), Some(2));
    let o = run(&["verify", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("0 gold failures"));
}

#[test]
fn verify_json_fields() {
    let o = run(&["verify", "fracpart", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert!(!rows.is_empty());
    let mut keys: Vec<_> = rows[0].as_object().unwrap().keys().cloned().collect();
    keys.sort();
    assert_eq!(keys, ["abs_diff", "id", "lhs", "pass", "rhs", "runtime_ms", "tol"]);
    assert!(rows.iter().all(|r| r["runtime_ms"].as_f64() == Some(0.0)));
}

#[test]
fn verify_csv_header() {
    let o = run(&["verify", "integrals", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("id,lhs,rhs,abs_diff,tol,pass,runtime_ms"));
}

#[test]
fn verify_is_byte_identical_across_parallelism() {
    let a = run(&["verify", "core", "--format", "csv", "--parallel", "1"]);
    let b = run(&["verify", "core", "--format", "csv", "--parallel", "3"]);
    let c = run(&["verify", "core", "--format", "csv", "--parallel", "3"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(b.stdout, c.stdout);
}

#[test]
fn config_file_and_flag_precedence() {
    let cfg = temp_config("# test config\nformat = json\nabs_tol = 1e-12\n");
    let path = cfg.path().to_str().unwrap();
    let o = run(&["--config", path, "stieltjes", "--k", "1", "--a", "1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!((v["value"].as_f64().unwrap() - -0.0728158454836767).abs() < 1e-12);

    let o = run(&["--config", path, "--format", "text", "stieltjes", "--k", "1", "--a", "1"]);
    assert!(stdout(&o).starts_with("gamma_1(1) = "));

    let o = bin().env("STIELTJES_CONFIG", path).args(["stieltjes", "--k", "0", "--a", "1"]).output().unwrap();
    assert!(serde_json::from_slice::<serde_json::Value>(&o.stdout).is_ok());

    let bad = temp_config("colour = red\n");
    let o = run(&["--config", bad.path().to_str().unwrap(), "stieltjes", "--k", "0", "--a", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn stieltjes_grid_table() {
    let o = run(&["table", "stieltjes-grid", "--kmax", "3", "--qmax", "4"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("k,a,value,err_est"));
    // reduced r/q with q ≤ 4: 1, 1/2, 1/3, 2/3, 1/4, 3/4
    let rows: Vec<_> = lines.collect();
    assert_eq!(rows.len(), 6 * 4);
    let g01: f64 = rows[0].split(',').nth(2).unwrap().parse().unwrap();
    assert!((g01 - 0.577_215_664_901_532_9).abs() < 1e-9);
}

#[test]
fn frac_integral_table_routes_agree() {
    let o = run(&["table", "frac-integrals", "--nmax", "6", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 12);
    for pair in rows.chunks(2) {
        let (a, b) = (pair[0]["value"].as_f64().unwrap(), pair[1]["value"].as_f64().unwrap());
        assert!((a - b).abs() < 1e-8);
    }
}

#[test]
fn monte_carlo_row_is_seeded() {
    let args = ["table", "frac-integrals", "--nmax", "1", "--mc-samples", "20000", "--seed", "9"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let other = run(&["table", "frac-integrals", "--nmax", "1", "--mc-samples", "20000", "--seed", "10"]);
    assert_ne!(run(&args).stdout, other.stdout);
}

#[test]
fn l_derivative_table() {
    let o = run(&["table", "L-derivatives", "--k", "3,4,5,7"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<_> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    let l4: f64 = rows[1].split(',').nth(3).unwrap().parse().unwrap();
    assert!((l4 - std::f64::consts::FRAC_PI_4).abs() < 1e-10);
}

#[test]
fn table_bad_ranges() {
    assert_eq!(run(&["table", "stieltjes-grid", "--kmax", "99"]).status.code(), Some(2));
    assert_eq!(run(&["table", "stieltjes-grid", "--qmax", "0"]).status.code(), Some(2));
    assert_eq!(run(&["table", "frac-integrals", "--nmax", "0"]).status.code(), Some(2));
    assert_eq!(run(&["table", "L-derivatives", "--k", "8"]).status.code(), Some(2));
    assert_eq!(run(&["table", "L-derivatives", "--k", "1"]).status.code(), Some(2));
}
