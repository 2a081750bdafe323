use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn lmhs(args: &[&str]) -> Output {
    lmhs_env(args, &[])
}

fn lmhs_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lmhs"));
    cmd.args(args);
    for var in ["LMHS_CONFIG", "LMHS_PRECISION_BITS", "LMHS_TOLERANCE", "LMHS_CUTOFFS", "LMHS_OUT", "LMHS_SEED"] {
        cmd.env_remove(var);
    }
    cmd.envs(env.iter().copied());
    cmd.output().expect("binary runs")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn failing_ids(v: &Value) -> Vec<String> {
    v["checks"].as_array().unwrap().iter().filter(|c| c["pass"] == false).map(|c| c["id"].as_str().unwrap().to_string()).collect()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lmhs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn cicy_all_reports_every_row() {
    let o = lmhs(&["cicy", "--all"]);
    let v = json(&o);
    assert_eq!(v["data"]["geometries"].as_array().unwrap().len(), 13);
    // the tabulated m of P7[2,2,2,2] disagrees with its own a and b
    assert_eq!(failing_ids(&v), vec!["P7[2,2,2,2]/m"]);
    assert_eq!(o.status.code(), Some(1));
    let ids: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| !c["anchor"].as_str().unwrap().is_empty()));
}

#[test]
fn cicy_by_weights_finds_the_quintic() {
    let o = lmhs(&["cicy", "--weights", "1,1,1,1,1", "--degrees", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let g = &v["data"]["geometries"][0];
    assert_eq!(g["name"], "P4[5]");
    assert_eq!((g["m"].as_str(), g["a"].as_str(), g["b"].as_str()), (Some("5"), Some("50"), Some("-200")));
    assert!(failing_ids(&v).is_empty());
}

#[test]
fn cicy_rejects_bad_input() {
    let o = lmhs(&["cicy", "--weights", "1,1", "--degrees", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not Calabi-Yau"));
    assert_eq!(lmhs(&["cicy", "--name", "P9[10]"]).status.code(), Some(2));
    assert_eq!(lmhs(&["cicy", "--weights", "1,1,1"]).status.code(), Some(2));
}

#[test]
fn empty_constant_list_gives_empty_report() {
    let o = lmhs(&["constants"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o)["checks"].as_array().unwrap().is_empty());
    assert_eq!(lmhs(&["constants", "gamma_7"]).status.code(), Some(2));
}

#[test]
fn gamma_constants_direct_against_closed() {
    let names: Vec<String> = (1..=6).map(|n| format!("gamma_{n}")).collect();
    let mut args = vec!["constants"];
    args.extend(names.iter().map(String::as_str));
    let o = lmhs(&args);
    assert_eq!(o.status.code(), Some(0));
    for c in json(&o)["checks"].as_array().unwrap() {
        assert!(c["residual"].as_f64().unwrap() < 1e-10, "{c}");
    }
}

#[test]
fn psi_is_stable_under_cutoff_doubling() {
    let o = lmhs(&["constants", "psi"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let v = json(&o);
    let ids: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["psi/cutoff-doubling", "psi/lattice-vs-one-index"]);
}

#[test]
fn matrices_suite_passes() {
    let o = lmhs(&["verify", "matrices"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let conj = v["checks"].as_array().unwrap().iter().find(|c| c["id"] == "conjugation").unwrap();
    assert_eq!(conj["computed"], "50/50");
}

#[test]
fn d3_report_is_byte_identical_across_runs() {
    let a = lmhs(&["verify", "d3"]);
    let b = lmhs(&["verify", "d3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    let q = v["checks"].as_array().unwrap().iter().find(|c| c["id"] == "d3/q").unwrap();
    assert_eq!(q["computed"], "-48");
    assert!(v.get("wall_time_s").is_none());
    assert!(json(&lmhs(&["verify", "d3", "--timing"]))["wall_time_s"].as_f64().unwrap() >= 0.0);
}

#[test]
fn absurd_tolerance_fails_cleanly() {
    let o = lmhs(&["verify", "appendix", "--tolerance", "1e-99"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert!(failing_ids(&v).iter().any(|id| id.starts_with("gamma/")));
    // exact partition checks do not depend on the tolerance
    assert!(!failing_ids(&v).iter().any(|id| id.starts_with("partition/")));
    assert_eq!(lmhs(&["verify", "appendix", "--tolerance", "-1"]).status.code(), Some(2));
}

#[test]
fn configuration_file_and_environment() {
    let path = scratch("run.toml");
    std::fs::write(&path, "precision_bits = 128\ntolerances = { appendix = 1e-9 }\n").unwrap();
    let p = path.to_str().unwrap();
    let v = json(&lmhs(&["--config", p, "verify", "appendix"]));
    assert_eq!(v["environment"]["precision_bits"], 128);
    // flags beat the file, the environment stands in for flags
    let v = json(&lmhs(&["--config", p, "--precision-bits", "192", "verify", "d3"]));
    assert_eq!(v["environment"]["precision_bits"], 192);
    let v = json(&lmhs_env(&["verify", "d3"], &[("LMHS_CONFIG", p), ("LMHS_PRECISION_BITS", "160")]));
    assert_eq!(v["environment"]["precision_bits"], 160);

    std::fs::write(&path, "cutoffs = [8, 8, 16]\n").unwrap();
    assert_eq!(lmhs(&["--config", p, "verify", "d3"]).status.code(), Some(2));
    std::fs::write(&path, "colour = \"blue\"\n").unwrap();
    assert_eq!(lmhs(&["--config", p, "verify", "d3"]).status.code(), Some(2));
    std::fs::write(&path, "tolerances = { nonsense = 1e-3 }\n").unwrap();
    assert_eq!(lmhs(&["--config", p, "verify", "d3"]).status.code(), Some(2));
    assert_eq!(lmhs(&["--cutoffs", "16,8", "verify", "d3"]).status.code(), Some(2));
    assert_eq!(lmhs_env(&["verify", "d3"], &[("LMHS_PRECISION_BITS", "8")]).status.code(), Some(2));
    assert_eq!(lmhs(&["--config", "/nonexistent/lmhs.toml", "verify", "d3"]).status.code(), Some(2));
}

#[test]
fn out_and_table_rendering() {
    let path = scratch("report.txt");
    let o = lmhs(&["verify", "matrices", "--table", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("matrices: 38 checks, 0 failed"));
    assert!(text.lines().any(|l| l.starts_with("PASS") && l.contains("jordan/6/graded")));
    let o = lmhs(&["cicy", "--all", "--table"]);
    let text = String::from_utf8_lossy(&o.stdout);
    // failing rows carry the statement they check
    let i = text.lines().position(|l| l.starts_with("FAIL")).unwrap();
    assert!(text.lines().nth(i + 1).unwrap().contains("tabulated (m, a, b) of P7[2,2,2,2]"));
}

#[test]
fn asymptotics_d1_with_pinned_log_term() {
    let o = lmhs(&["asymptotics", "--d", "1", "--t-min", "1e-9", "--t-max", "1e-4", "--samples", "8", "--fix-leading"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stdout));
    let v = json(&o);
    for key in ["coefficients", "error_bars", "normalized", "bottom_row"] {
        assert!(v["data"].get(key).is_some(), "{key}");
    }
    assert_eq!(v["data"]["error_bars"][1], 0.0);
    assert!(v["data"]["normalized"]["constant_times_two_pi_i"].as_f64().unwrap().abs() < 1e-6);
}

#[test]
fn asymptotics_d3_with_too_few_samples_warns() {
    let o = lmhs(&["asymptotics", "--d", "3", "--samples", "8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("ill-conditioned"));
    assert_eq!(failing_ids(&json(&o)), ["d3/fit"]);
    assert_eq!(lmhs(&["asymptotics", "--t-min", "1e-3", "--t-max", "1e-5"]).status.code(), Some(2));
}

#[test]
fn recognize_examples() {
    let o = lmhs(&["recognize", "-57.69873135166052", "--base", "zeta3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["checks"][0]["computed"], "-48 * zeta3");
    let o = lmhs(&["recognize", "3.14159265358979", "--base", "pi", "--max-den", "10"]);
    assert_eq!(json(&o)["checks"][0]["computed"], "1 * pi");
    // too few digits for denominators up to 1000
    assert_eq!(lmhs(&["recognize", "0.33"]).status.code(), Some(1));
    assert_eq!(lmhs(&["recognize", "0.5", "--base", "e"]).status.code(), Some(2));
    assert_eq!(lmhs(&["recognize", "abc"]).status.code(), Some(2));
}
