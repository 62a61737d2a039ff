use std::path::PathBuf;
use std::process::{Command, Output};

fn polynet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polynet"))
        .args(args)
        .env_remove("POLYNET_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect();
    p.to_str().unwrap().to_string()
}

/// Lines that are not `#` metadata.
fn body(out: &Output) -> Vec<String> {
    stdout(out).lines().filter(|l| !l.starts_with('#')).map(String::from).collect()
}

fn gamma_of(out: &Output) -> String {
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    body(out).iter().find_map(|l| l.strip_prefix("gamma = ").map(String::from)).expect("gamma line")
}

#[test]
fn exponent_saw_ordinary() {
    let out = polynet(&["exponent", "--class", "saw", "--bc", "ordinary", "--L-max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(body(&out), ["5/48|5/8", "2/3|2", "77/48|33/8"]);
}

#[test]
fn exponent_theta_special() {
    let out = polynet(&["exponent", "--class", "theta", "--bc", "special", "--L-max", "2", "--no-meta"]);
    assert_eq!(stdout(&out), "0|0\n1/4|1/3\n");
}

#[test]
fn exponent_series_setting() {
    let out = polynet(&["--no-meta", "exponent", "--class", "saw", "--setting", "eps1", "--L-max", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let row = stdout(&out);
    assert_eq!(row, "1 - 1/2*eps|2 - 5/8*eps\n");
    assert_eq!(row.lines().count(), 1);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(polynet(&["exponent", "--class", "spaghetti"]).status.code(), Some(2));
    assert_eq!(polynet(&["exponent", "--class", "saw", "--bc", "sticky"]).status.code(), Some(2));
    assert_eq!(polynet(&["kpz", "--kappa", "-1"]).status.code(), Some(2));
    assert_eq!(polynet(&["verify", "--suite", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(polynet(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(polynet(&["enumerate", "--n-max", "3", "--threads", "0"]).status.code(), Some(2));
}

#[test]
fn gamma_bridge_and_arch() {
    assert_eq!(gamma_of(&polynet(&["gamma", &data("bridge.net")])), "9/16");
    assert_eq!(gamma_of(&polynet(&["gamma", &data("arch.net")])), "-3/16");
}

#[test]
fn gamma_eight_chain_pair_differs_by_three_quarters() {
    let v = gamma_of(&polynet(&["gamma", &data("eight_chain_surface.net")]));
    let b = gamma_of(&polynet(&["gamma", &data("eight_chain_bridge.net")]));
    assert_eq!((v.as_str(), b.as_str()), ("-33/4", "-15/2"));
}

#[test]
fn gamma_census_is_printed() {
    let out = polynet(&["--no-meta", "gamma", &data("eight_chain_surface.net")]);
    let text = stdout(&out);
    assert!(text.contains("bulk: n1=1 n3=3"), "{text}");
    assert!(text.contains("surface: n1=1 n2=1 n3=1"), "{text}");
}

#[test]
fn gamma_special_default_changes_the_arch() {
    let ordinary = gamma_of(&polynet(&["gamma", &data("arch.net")]));
    let special = gamma_of(&polynet(&["gamma", &data("arch.net"), "--bc-default", "special"]));
    assert_ne!(ordinary, special);
}

#[test]
fn input_errors_exit_3() {
    let out = polynet(&["gamma", &data("bad_keyword.net")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("link"));
    assert_eq!(polynet(&["gamma", &data("missing.net")]).status.code(), Some(3));
    assert_eq!(polynet(&["fit", &data("missing.csv")]).status.code(), Some(3));
    assert_eq!(polynet(&["fit", &data("bridge.net")]).status.code(), Some(3));
}

#[test]
fn kpz_outputs() {
    let out = polynet(&["--no-meta", "kpz", "--kappa", "6", "--delta", "1/2"]);
    assert_eq!(stdout(&out), "U = 1/8\nV = 5/96\n");
    let out = polynet(&["--no-meta", "kpz", "--kappa", "8/3", "--x", "5/8"]);
    assert_eq!(stdout(&out), "U^-1 = 3/4\n");
    let out = polynet(&["--no-meta", "kpz", "--kappa", "8/3", "--L-max", "2"]);
    assert_eq!(stdout(&out), "1|0|3/4|5/8|5/48\n2|0|3/2|2|2/3\n");
}

#[test]
fn verify_list_and_run() {
    let out = polynet(&["verify", "--list"]);
    let names = stdout(&out);
    assert!(names.lines().any(|l| l == "golden-gamma"));
    assert!(names.lines().all(|l| !l.contains(' ')));
    let out = polynet(&["verify", "--suite", "golden-gamma", "--suite", "duality"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(body(&out).iter().filter(|l| l.starts_with("PASS")).count(), 2);
}

#[test]
fn verify_everything_passes() {
    let out = polynet(&["verify"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("all 12 suites passed"));
}

#[test]
fn enumerate_csv_is_reproducible() {
    let args = ["--no-meta", "enumerate", "--n-max", "6", "--sequential"];
    let a = polynet(&args);
    assert_eq!(stdout(&a), "N,count,r2_sum\n1,4,4\n2,12,32\n3,36,164\n4,100,704\n5,284,2716\n6,780,9808\n");
    let b = polynet(&["--no-meta", "enumerate", "--n-max", "6", "--threads", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn enumerate_metadata_is_commented() {
    let out = polynet(&["enumerate", "--ensemble", "bridge", "--n-max", "4"]);
    let text = stdout(&out);
    assert!(text.contains("# ensemble: bridge"));
    let first_data = text.lines().position(|l| !l.starts_with('#')).unwrap();
    assert!(text.lines().nth(first_data).unwrap().starts_with("N,count"));
    assert!(text.lines().skip(first_data).all(|l| !l.starts_with('#')));
}

#[test]
fn thread_count_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_polynet"))
        .args(["enumerate", "--n-max", "3"])
        .env("POLYNET_THREADS", "2")
        .output()
        .unwrap();
    assert!(stdout(&out).contains("threads: 2"), "{}", stdout(&out));
}

#[test]
fn enumerate_then_fit() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("bridge.csv");
    let csv = csv.to_str().unwrap();
    let out = polynet(&["enumerate", "--ensemble", "bridge", "--n-max", "14", "-o", csv]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());

    let out = polynet(&["--no-meta", "fit", csv, "--method", "both"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let lines = body(&out);
    assert_eq!(lines[0], "quantity,estimate,spread,method,window");
    assert!(lines[1].starts_with("gamma_b,") && lines[1].contains(",three-point,"));
    assert!(lines[2].starts_with("gamma_b,") && lines[2].contains(",ratio,"));
    let estimate: f64 = lines[1].split(',').nth(1).unwrap().parse().unwrap();
    assert!((estimate - 0.5625).abs() < 0.2, "{estimate}");
}

#[test]
fn fit_nu_and_short_series() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("free.csv");
    std::fs::write(&csv, stdout(&polynet(&["enumerate", "--n-max", "18"]))).unwrap();
    let out = polynet(&["--no-meta", "fit", csv.to_str().unwrap(), "--nu"]);
    let row = &body(&out)[1];
    assert!(row.starts_with("nu,") && row.contains("windowed-lsq"), "{row}");

    let short = dir.path().join("short.csv");
    std::fs::write(&short, "N,count\n1,4\n2,12\n").unwrap();
    assert_eq!(polynet(&["fit", short.to_str().unwrap()]).status.code(), Some(1));
}
