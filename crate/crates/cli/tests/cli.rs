use std::process::{Command, Output};

use alpha_spectral::hypergraph::canonical_form;
use alpha_spectral::io::{builtin_graph, parse_hypergraph, BUILTIN_GRAPHS};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alpha-spectral")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn line_value(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(key))
        .and_then(|rest| rest.trim().parse().ok())
        .unwrap_or_else(|| panic!("no `{key}` line in:\n{text}"))
}

#[test]
fn spectral_triangle_and_single_edge() {
    let o = run(&["spectral", "--builtin", "K_3", "--alpha", "2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!((line_value(&out, "lambda") - 2.0).abs() < 1e-10);
    assert!((line_value(&out, "principal ratio") - 1.0).abs() < 1e-10);

    let o = run(&["spectral", "--builtin", "edge:r=3", "--alpha", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("0.222222222222"));
}

#[test]
fn spectral_json_record() {
    let o = run(&["spectral", "--builtin", "K_3", "--alpha", "2", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["report"], "spectral");
    assert!((v["lambda"].as_f64().unwrap() - 2.0).abs() < 1e-10);
    assert_eq!(v["vector"].as_array().unwrap().len(), 3);
    for key in ["residual", "iterations", "method"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.hg");
    std::fs::write(&bad, "hg 3 2 2\n0 1\n0 9\n").unwrap();
    let o = run(&["spectral", "--file", bad.to_str().unwrap(), "--alpha", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));

    let o =
        run(&["spectral", "--builtin", "frl:r=3,l=4", "--alpha", "1.5", "--max-iterations", "1", "--restarts", "1"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["extremal", "--forbid", "K_3", "--n", "20", "--mode", "ex"]);
    assert_eq!(o.status.code(), Some(3));

    assert_eq!(run(&["spectral", "--builtin", "K_3"]).status.code(), Some(1));
    assert_eq!(run(&["spectral", "--builtin", "K_3", "--alpha", "0.5"]).status.code(), Some(1));
    assert_eq!(run(&["construct", "nosuch"]).status.code(), Some(1));
}

#[test]
fn construct_turan_graph() {
    let o = run(&["construct", "turan", "--n", "6", "--l", "3", "--r", "2"]);
    assert!(o.status.success());
    let h = parse_hypergraph(&stdout(&o)).unwrap();
    assert_eq!((h.order(), h.size()), (6, 12));
}

#[test]
fn construct_round_trips_every_builtin() {
    let dir = tempfile::tempdir().unwrap();
    for (i, spec) in BUILTIN_GRAPHS.iter().enumerate() {
        let (builder, params) = spec.split_once(':').unwrap_or((spec, ""));
        if builder.starts_with("K_") {
            continue;
        }
        let mut args = vec!["construct".to_string(), builder.to_string()];
        for kv in params.split(',').filter(|s| !s.is_empty()) {
            let (k, v) = kv.split_once('=').unwrap();
            args.push(format!("--{k}"));
            args.push(v.to_string());
        }
        let path = dir.path().join(format!("{i}.hg"));
        args.push("-o".into());
        args.push(path.to_str().unwrap().into());
        let o = run(&args.iter().map(String::as_str).collect::<Vec<_>>());
        assert!(o.status.success(), "{spec}: {}", stderr(&o));
        let back = parse_hypergraph(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let direct = builtin_graph(spec).unwrap();
        assert_eq!(canonical_form(&back).unwrap(), canonical_form(&direct).unwrap(), "{spec}");
    }
}

#[test]
fn density_of_chromatic_pattern() {
    let o = run(&["density", "--pattern", "chromatic:k=2,r=3"]);
    assert!(o.status.success());
    assert!((line_value(&stdout(&o), "simplex") - 0.75).abs() < 1e-9);

    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k3.pat");
    std::fs::write(&file, "pat 3 2 3\n0 1 1\n1 0 1\n1 1 0\n").unwrap();
    let o = run(&["density", "--pattern", file.to_str().unwrap(), "--method", "both"]);
    let out = stdout(&o);
    assert!((line_value(&out, "simplex") - 2.0 / 3.0).abs() < 1e-9);
    assert!((line_value(&out, "finite-n") - 2.0 / 3.0).abs() < 1e-9);
}

#[test]
fn sweep_is_monotone_csv() {
    let o = run(&["sweep", "--builtin", "K_3", "--alphas", "1:100:log"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("alpha,lambda,residual"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 24);
    assert!(rows.windows(2).all(|w| w[1][0] > w[0][0] && w[1][1] >= w[0][1]));
    // K_3 is regular: lambda = 6 / 3^(2/alpha)
    for row in &rows {
        assert!((row[1] - 6.0 / 3f64.powf(2.0 / row[0])).abs() < 1e-9);
    }
}

#[test]
fn extremal_reports() {
    let o = run(&["extremal", "--forbid", "K_3", "--n", "6", "--alpha", "2", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert!((v["optimum"].as_f64().unwrap() - 3.0).abs() < 1e-9);
    let witnesses = v["witnesses"].as_array().unwrap();
    assert_eq!(witnesses.len(), 1);
    let g = parse_hypergraph(witnesses[0]["graph"].as_str().unwrap()).unwrap();
    assert_eq!(g.size(), 9);

    let o = run(&["extremal", "--pattern", "complete:l=2,r=2", "--n", "7", "--mode", "ex"]);
    assert!(stdout(&o).contains("ex(n = 7, r = 2) = 12"));
}

#[test]
fn verify_unknown_lists_registry() {
    let o = run(&["verify", "nosuch"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("density-closed-forms"));
}

#[test]
fn verify_named_experiments() {
    let o = run(&["verify", "density-closed-forms"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("| pi(chromatic k=2, r=3) by simplex optimization | 0.7500000000 |"));
    let o = run(&["verify", "turan-r2"]);
    assert!(o.status.success());
}

fn without_timing(mut v: Value) -> Value {
    match &mut v {
        Value::Object(m) => {
            m.remove("wall_time_secs");
            for x in m.values_mut() {
                *x = without_timing(x.take());
            }
        }
        Value::Array(a) => {
            for x in a.iter_mut() {
                *x = without_timing(x.take());
            }
        }
        _ => {}
    }
    v
}

#[test]
fn verify_all_json_is_deterministic_across_thread_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for threads in ["1", "4"] {
        let path = dir.path().join(format!("r{threads}.json"));
        // the exit status reflects the checks; only the report bytes matter here
        run(&["--threads", threads, "verify", "all", "--json", path.to_str().unwrap()]);
        let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(v["data"].as_array().unwrap().len(), 15);
        reports.push(serde_json::to_string(&without_timing(v)).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
    let o = run(&["verify", "oracle-spectra"]);
    assert!(o.status.success());
}

#[test]
fn seed_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let o = Command::new(env!("CARGO_BIN_EXE_alpha-spectral"))
        .args(["verify", "scalar-lemmas", "--json", path.to_str().unwrap()])
        .env("ALPHA_SPECTRAL_SEED", "77")
        .output()
        .unwrap();
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["seed"], 77);
    assert_eq!(v["report"], "run-report");
}
