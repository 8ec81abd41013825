use std::fs;
use std::process::{Command, Output};

use cfkit::Cfn;

fn cfkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cfkit"))
        .args(args)
        .env_remove("CFKIT_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn combined_distance_plain() {
    let out = cfkit(&[
        "distance",
        "--measure",
        "c",
        "--p",
        "1",
        "--lambda",
        "0.5",
        "⟨0.8,0.4,0.32⟩",
        "⟨0.1,0.9,0.09⟩",
    ]);
    assert_eq!(stdout(&out), "1.095000\n");
}

#[test]
fn distance_measures_and_plain_operands() {
    let run = |m: &str, p: &str| {
        stdout(&cfkit(&[
            "distance",
            "--measure",
            m,
            "--p",
            p,
            "0.8,0.4,0.32",
            "0.1,0.9,0.09",
        ]))
    };
    assert_eq!(run("h", "1"), "0.730000\n");
    assert_eq!(run("im", "1"), "1.460000\n");
    assert_eq!(run("im", "2"), "0.898666\n");
    assert_eq!(run("legacy", "1"), "1.430000\n");
    assert_eq!(run("im", "inf"), "0.730000\n");
}

#[test]
fn distance_json_round_trips_operands() {
    let text = stdout(&cfkit(&[
        "distance",
        "--format",
        "json",
        "--measure",
        "im",
        "0.123457,0.9,0.1",
        "0.5,0.5,0.25",
    ]));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let f1: Cfn = serde_json::from_value(v["f1"].clone()).unwrap();
    assert_eq!(f1, "0.123457,0.9,0.1".parse().unwrap());
    assert_eq!(v["measure"], "im");
}

#[test]
fn distance_batch() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("pairs.csv");
    fs::write(
        &input,
        "u1,v1,j1,u2,v2,j2\n0.8,0.4,0.32,0.1,0.9,0.09\n1,0,0,0,1,0\n",
    )
    .unwrap();
    let text = stdout(&cfkit(&[
        "distance",
        "--measure",
        "h",
        "--batch",
        input.to_str().unwrap(),
    ]));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "u1,v1,j1,u2,v2,j2,distance");
    assert!(lines[1].ends_with(",0.73"), "{}", lines[1]);
    assert!(lines[2].ends_with(",1.0"));
}

#[test]
fn score_of_best_anchor() {
    let text = stdout(&cfkit(&["score", "--p", "2", "--lambda", "0.5", "⟨1,0,0⟩"]));
    assert!(text.starts_with("s=1.000000\n"), "{text}");
    assert!(text.contains("d_to_best=0.000000"));
}

#[test]
fn score_sweep_grid() {
    let text = stdout(&cfkit(&["score", "--sweep", "0.8,0.4,0.32"]));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("lambda,p,s"));
    assert_eq!(lines.count(), 101 * 10);
}

#[test]
fn pain_eval_case_study() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("case_study.json");
    fs::write(
        &input,
        r#"{"patient_items":[4,5,3,5,3,5,4],"sim_scale0":0.4,"sim_scale10":0.7,"p":2,"lambda":0.5}"#,
    )
    .unwrap();
    let text = stdout(&cfkit(&["pain-eval", "--input", input.to_str().unwrap()]));
    assert!(text.contains("\"j_opt\": 0.4"), "{text}");
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["recommendation"], "second_nurse_suggested");
    assert_eq!(v["confusion_ratio"], 1.0);
    let nurse = v["nurse_pain"].as_f64().unwrap();
    let patient = v["patient_pain"].as_f64().unwrap();
    assert_eq!(v["final_pain_score"].as_f64().unwrap(), nurse.max(patient));

    let relaxed = stdout(&cfkit(&[
        "pain-eval",
        "--input",
        input.to_str().unwrap(),
        "--threshold",
        "1",
    ]));
    assert!(relaxed.contains("second_nurse_suggested"));
}

#[test]
fn pain_eval_sweeps() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sweep.csv");
    stdout(&cfkit(&[
        "pain-eval",
        "--sweep",
        "--grid-points",
        "1001",
        "--out",
        out.to_str().unwrap(),
    ]));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("mode,p,lambda,j_opt,s_opt,gap\n"));
    assert_eq!(text.lines().count(), 1 + 10 * 21);
    assert!(text
        .lines()
        .skip(1)
        .all(|l| l.split(',').nth(3) == Some("0.4")));

    let legacy = stdout(&cfkit(&[
        "pain-eval",
        "--legacy-sweep",
        "--grid-points",
        "1001",
    ]));
    assert_eq!(legacy.lines().count(), 11);
    assert!(legacy.lines().skip(1).all(|l| l.starts_with("legacy,")));
}

#[test]
fn combined_sweep_has_both_modes() {
    let text = stdout(&cfkit(&["sweep", "--grid-points", "1001"]));
    assert_eq!(text.lines().filter(|l| l.starts_with("cf-c,")).count(), 210);
    assert_eq!(
        text.lines().filter(|l| l.starts_with("legacy,")).count(),
        10
    );
}

#[test]
fn simulate_is_seeded() {
    let a = stdout(&cfkit(&[
        "simulate", "--trials", "5", "--seed", "3", "--p", "1", "--lambda", "0", "--lambda", "1",
    ]));
    let b = stdout(&cfkit(&[
        "simulate", "--trials", "5", "--seed", "3", "--p", "1", "--lambda", "0", "--lambda", "1",
    ]));
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 1 + 5 * 2);
    let env = Command::new(env!("CARGO_BIN_EXE_cfkit"))
        .args([
            "simulate", "--trials", "5", "--p", "1", "--lambda", "0", "--lambda", "1",
        ])
        .env("CFKIT_SEED", "3")
        .output()
        .unwrap();
    assert_eq!(stdout(&env), a);
    let other = stdout(&cfkit(&[
        "simulate", "--trials", "5", "--seed", "4", "--p", "1", "--lambda", "0", "--lambda", "1",
    ]));
    assert_ne!(a, other);
}

#[test]
fn simulate_summary_json() {
    let text = stdout(&cfkit(&[
        "simulate",
        "--summary",
        "--pair",
        "0.8,0.4,0.32",
        "0.1,0.9,0.09",
    ]));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["trials"], 100);
    assert_eq!(v["cells"].as_array().unwrap().len(), 3);
    assert_eq!(v["cells"][0]["m_ge_h"], 100);
}

#[test]
fn export_figures_twice_is_identical() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    stdout(&cfkit(&[
        "export-figures",
        "--out-dir",
        a.to_str().unwrap(),
        "--seed",
        "11",
    ]));
    stdout(&cfkit(&[
        "export-figures",
        "--out-dir",
        b.to_str().unwrap(),
        "--seed",
        "11",
    ]));
    for name in cfkit::export::FIGURE_FILES {
        assert_eq!(
            fs::read(a.join(name)).unwrap(),
            fs::read(b.join(name)).unwrap(),
            "{name}"
        );
    }
    let fig5 = fs::read_to_string(a.join("fig5.csv")).unwrap();
    for line in fig5.lines().skip(1) {
        let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert!(cols[2] > cols[3], "{line}");
    }
    let fig7 = fs::read_to_string(a.join("fig7.csv")).unwrap();
    assert!(fig7
        .lines()
        .skip(1)
        .all(|l| l.split(',').nth(3) == Some("0.4")));
}

fn error_json(out: &Output) -> serde_json::Value {
    assert!(!out.status.success());
    serde_json::from_slice(&out.stderr)
        .unwrap_or_else(|_| panic!("{}", String::from_utf8_lossy(&out.stderr)))
}

#[test]
fn errors_are_machine_readable() {
    let bad_cfn = cfkit(&["distance", "0.5,0.6,0.05", "0.1,0.2,0.0"]);
    assert_eq!(error_json(&bad_cfn)["error"], "usage");
    assert_eq!(bad_cfn.status.code(), Some(2));

    let one_operand = cfkit(&["distance", "0.5,0.6,0.1"]);
    assert_eq!(error_json(&one_operand)["error"], "usage");

    let missing = cfkit(&["pain-eval", "--input", "/nonexistent/x.json"]);
    assert_eq!(error_json(&missing)["error"], "io");
    assert_eq!(missing.status.code(), Some(3));

    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("bad.json");
    fs::write(
        &input,
        r#"{"patient_items":[1,2,3],"sim_scale0":0.4,"sim_scale10":0.7,"p":2,"lambda":0.5}"#,
    )
    .unwrap();
    let bad_items = cfkit(&["pain-eval", "--input", input.to_str().unwrap()]);
    let v = error_json(&bad_items);
    assert_eq!(v["error"], "pain");
    assert!(v["message"].as_str().unwrap().contains("got 3"));

    let bad_lambda = cfkit(&["score", "--lambda", "2", "0.5,0.5,0.2"]);
    assert_eq!(error_json(&bad_lambda)["error"], "usage");
}
