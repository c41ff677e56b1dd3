use std::process::{Command, Output};

fn lyness(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lyness"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn certify_passes_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = lyness(&["certify", "--no-timing", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("overall: PASS"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["overallPass"], true);
    assert_eq!(json["counts"]["delta2Numerator"], 277);
    assert_eq!(json["counts"]["eq16"], 233);
    assert_eq!(json["counts"]["eq17"], 371);
    let steps = json["steps"].as_array().unwrap();
    assert!(steps.len() >= 12);
    for step in steps {
        for key in [
            "step",
            "region",
            "bindings",
            "inputCount",
            "outputCount",
            "minCoefficient",
            "witness",
            "allPositive",
            "allInteger",
            "elapsedMs",
        ] {
            assert!(step.get(key).is_some(), "missing {key}");
        }
        assert_eq!(step["elapsedMs"], 0.0);
    }
    let q1 = steps.iter().find(|s| s["step"] == "q1 y0>x0").unwrap();
    assert_eq!(q1["minCoefficient"], "1/1");
    assert_eq!(q1["witness"], serde_json::Value::Null);
    assert_eq!(
        q1["bindings"],
        "u -> 1 + t, x -> 1 + x0 + t, y -> 1 + x0 + k + t, y0 -> x0 + k"
    );
}

#[test]
fn reports_are_byte_identical_across_runs_and_thread_counts() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_lyness"))
            .args(["certify", "--no-timing", "--json", "-"])
            .env("LYNESS_THREADS", threads)
            .output()
            .unwrap()
            .stdout
    };
    let a = run("1");
    assert_eq!(a, run("1"));
    assert_eq!(a, run("4"));
}

#[test]
fn single_step_and_unknown_step() {
    let out = lyness(&["certify", "--step", "q3 v=w", "--no-timing"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("PASS q3 v=w"));
    let out = lyness(&["certify", "--step", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_on_stdout_is_pure_json() {
    let out = lyness(&["certify", "--step", "q3 v=w", "--no-timing", "--json", "-"]);
    assert_eq!(out.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json[0]["step"], "q3 v=w");
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("PASS q3 v=w"));
}

#[test]
fn identities() {
    for which in ["delta1", "delta2-denominator"] {
        let out = lyness(&["identity", "--which", which]);
        assert_eq!(out.status.code(), Some(0), "{which}");
    }
    assert_eq!(
        lyness(&["identity", "--which", "delta3"]).status.code(),
        Some(2)
    );
}

#[test]
fn regions_exterior_point() {
    let out = lyness(&["regions", "--p", "20", "--q", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("flags: {}\n"));
    let out = lyness(&["regions", "--p", "1", "--q", "1"]);
    assert!(stdout(&out).contains("c: q > 1"));
    assert!(stdout(&out).contains("not applicable"));
}

#[test]
fn simulate_equilibrium_seed() {
    let out = lyness(&[
        "simulate", "--p", "4", "--q", "1", "--x0", "2", "--xm1", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("verdict: converged"));
    assert!(text.contains("converged at n = 0"));
    assert!(text.contains("xbar: 2.0000000000000000e0"));
}

#[test]
fn simulate_writes_a_trace() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trace.csv");
    let out = lyness(&[
        "simulate",
        "--p",
        "20",
        "--q",
        "4",
        "--x0",
        "1",
        "--xm1",
        "0.5",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,x_prev,x_curr,g"));
    let first = lines.next().unwrap();
    assert!(first.starts_with("0,5.0000000000000000e-1,1.0000000000000000e0,"));
    // g at y = x / 4 with alpha_tilde = u^2 - u, u = (3 + sqrt(89)) / 8
    let u = (3.0 + 89f64.sqrt()) / 8.0;
    let (a, b) = (0.125, 0.25);
    let g = (1.0 + a) * (1.0 + b) * (u * u - u + a + b) / (a * b);
    let got: f64 = first.rsplit(',').next().unwrap().parse().unwrap();
    assert!((got - g).abs() < 1e-12 * g);
    let again = lyness(&[
        "simulate",
        "--p",
        "20",
        "--q",
        "4",
        "--x0",
        "1",
        "--xm1",
        "0.5",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert_eq!(stdout(&out), stdout(&again));
    assert_eq!(csv, std::fs::read_to_string(&path).unwrap());
}

#[test]
fn simulate_reports_non_convergence() {
    let out = lyness(&[
        "simulate",
        "--p",
        "2",
        "--q",
        "1",
        "--x0",
        "1/10",
        "--xm1",
        "10",
        "--max-iters",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = lyness(&[
        "simulate",
        "--p",
        "2",
        "--q",
        "1",
        "--x0",
        "1/10",
        "--xm1",
        "10",
        "--exact",
        "--max-iters",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("max-iters-exceeded"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(lyness(&[]).status.code(), Some(2));
    assert_eq!(
        lyness(&["simulate", "--p", "0", "--q", "1", "--x0", "1", "--xm1", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lyness(&["simulate", "--p", "1", "--q", "1", "--x0", "1", "--xm1", "x"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lyness(&["simulate", "--p=2", "--q=1", "--x0=-1", "--xm1=1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        lyness(&["regions", "--p", "1/0", "--q", "1"]).status.code(),
        Some(2)
    );
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("g.csv");
    let csv = csv.to_str().unwrap();
    assert_eq!(
        lyness(&[
            "ggrid",
            "--alpha-tilde",
            "2",
            "--window",
            "0,5,0.5,5",
            "--res",
            "11",
            "--csv",
            csv
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        lyness(&[
            "ggrid",
            "--alpha-tilde",
            "2",
            "--window",
            "1,5,1",
            "--res",
            "11",
            "--csv",
            csv
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(lyness(&["--help"]).status.code(), Some(0));
}

#[test]
fn ggrid_emits_a_symmetric_grid() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.csv");
    let out = lyness(&[
        "ggrid",
        "--alpha-tilde",
        "2",
        "--window",
        "0.5,5,0.5,5",
        "--res",
        "21",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    let rows: Vec<Vec<f64>> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 21 * 21);
    for a in 0..21 {
        for b in 0..21 {
            assert_eq!(rows[a * 21 + b][2], rows[b * 21 + a][2]);
        }
    }
    assert!(csv.starts_with("x,y,g\n"));
}
