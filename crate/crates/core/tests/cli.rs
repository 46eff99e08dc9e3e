use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alcove-cores"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).unwrap()
}

#[test]
fn text_outputs() {
    assert_eq!(stdout(&["core", "--s", "5", "6,6,2,1"]), "5,2,2,1\n");
    assert_eq!(stdout(&["core", "--s", "5", ""]), "\n");
    assert_eq!(stdout(&["core", "--s", "4", "4,2,1,1"]), "\n");
    assert_eq!(stdout(&["qset", "--s", "5", "5,2,2,1"]), "[-4,-2,2,5,9]\n");
    assert_eq!(stdout(&["qset", "--s", "3", ""]), "[0,1,2]\n");
    assert_eq!(stdout(&["qset", "--s", "3", "3,1,1"]), "[-3,1,5]\n");
    assert_eq!(
        stdout(&["act", "chi", "--s", "3", "--t", "4", "--word", "0", "(0,1,2)"]),
        "(-4,1,6)\n"
    );
    assert_eq!(
        stdout(&["act", "psi", "--s", "3", "--t", "4", "--word", "0", "(0,1,2)"]),
        "(-10,1,12)\n"
    );
    assert_eq!(
        stdout(&["act", "psi", "--t", "4", "(5,-3,1)"]),
        "(5,-3,1)\n"
    );
    assert_eq!(stdout(&["kappa", "--s", "3", "--t", "4"]), "3,1,1\n");
    assert_eq!(stdout(&["count", "--s", "3", "--t", "4"]), "5\n");
    assert_eq!(stdout(&["enumerate", "--s", "2", "--t", "3"]), "\n1\n");
    assert_eq!(
        stdout(&["orbit-min", "--s", "3", "--t", "2", "4,2"]),
        core_of("4,2", 2)
    );
}

fn core_of(p: &str, t: usize) -> String {
    stdout(&["core", "--s", &t.to_string(), p])
}

#[test]
fn enumerate_agrees_with_count() {
    for (s, t) in [(3, 5), (4, 7), (5, 6)] {
        let (s, t) = (s.to_string(), t.to_string());
        let listed = stdout(&["enumerate", "--s", &s, "--t", &t]).lines().count();
        let counted: usize = stdout(&["count", "--s", &s, "--t", &t])
            .trim()
            .parse()
            .unwrap();
        assert_eq!(listed, counted);
    }
}

#[test]
fn printed_values_parse_back() {
    let q: alcove_cores::SSet = stdout(&["qset", "--s", "3", "4,2"]).trim().parse().unwrap();
    let core: alcove_cores::Partition = "4,2".parse().unwrap();
    assert_eq!(q, alcove_cores::abacus::q_set(&core, 3).unwrap());
    // the printed point is a valid input for the next action; generators are involutions
    let p = stdout(&["act", "chi", "--t", "1", "--word", "1", "(2,0,1)"]);
    let back = stdout(&["act", "chi", "--t", "1", "--word", "1", p.trim()]);
    assert_eq!(back, "(2,0,1)\n");
    let json_point = json(&["act", "chi", "--t", "1", "--word", "1", "(2,0,1)"]);
    assert_eq!(
        serde_json::to_string(&json_point["result"]).unwrap(),
        format!("[{}]", &p.trim()[1..p.trim().len() - 1])
    );
}

#[test]
fn traces_start_at_step_zero() {
    let out = stdout(&["orbit-min", "--s", "3", "--t", "2", "--trace", "4,2"]);
    let lines: Vec<_> = out.lines().collect();
    assert!(lines[0].starts_with("step 0: gen=- sset="), "{out}");
    assert!(lines[1..lines.len() - 1]
        .iter()
        .all(|l| l.starts_with("step ")));

    let out = stdout(&["chain", "--s", "3", "--t", "4", "(0,1,2)"]);
    let first = out.lines().next().unwrap();
    assert!(out.lines().count() > 1, "{out}");
    assert!(first.starts_with("step 0: gen=-"), "{out}");
    assert!(out.lines().last().unwrap().ends_with("core=3,1,1"), "{out}");
}

#[test]
fn json_shape() {
    let v = json(&["kappa", "--s", "3", "--t", "5"]);
    assert_eq!(v["result"], serde_json::json!([4, 2, 1, 1]));
    assert_eq!(v["meta"]["s"], 3);
    assert_eq!(v["meta"]["t"], 5);
    assert!(v["input"].is_object());

    let v = json(&["core", "--s", "5", "6,6,2,1"]);
    assert_eq!(v["input"]["partition"], serde_json::json!([6, 6, 2, 1]));
    assert_eq!(v["meta"]["t"], Value::Null);

    let v = json(&["count", "--s", "4", "--t", "5"]);
    assert_eq!(v["result"], 14);
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(run(&["kappa", "--s", "3"]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--s-max", "1"]).status.code(), Some(1));
    assert_eq!(
        run(&["verify", "--suite", "nonesuch"]).status.code(),
        Some(1)
    );
    // help is not an error
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    // domain errors
    assert_eq!(
        run(&["kappa", "--s", "4", "--t", "6"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["core", "--s", "3", "1,2"]).status.code(), Some(2));
    assert_eq!(
        run(&["act", "chi", "--t", "1", "(1,1,-2)"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["chain", "--s", "4", "--t", "5", "(6,-1,0,1)"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["diagram", "--s", "4"]).status.code(), Some(2));

    let out = run(&["--json", "count", "--s", "2", "--t", "4"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["error"].is_string());
}

#[test]
fn verify_suites_pass() {
    for suite in ["core-oracle", "actions", "olsson", "vandehey"] {
        let out = run(&[
            "verify", "--suite", suite, "--s-max", "5", "--t-max", "6", "--trials", "200",
        ]);
        let text = String::from_utf8_lossy(&out.stdout);
        assert_eq!(out.status.code(), Some(0), "{suite}: {text}");
        assert!(text.lines().last().unwrap().contains("passed"), "{text}");
    }
    let v = json(&[
        "verify",
        "--suite",
        "olsson",
        "--sequential",
        "--trials",
        "50",
    ]);
    assert!(v["result"]["checks"]
        .as_array()
        .is_some_and(|c| !c.is_empty()));
}

#[test]
fn diagram_writes_svg_file() {
    let dir = std::env::temp_dir().join(format!("alcove-cores-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fig.svg");
    let out = stdout(&[
        "diagram",
        "--depth",
        "3",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.trim(), format!("wrote {}", path.display()));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches("class=\"alcove\"").count(), 9);
    std::fs::remove_dir_all(&dir).unwrap();

    let inline = stdout(&["diagram", "--mode", "tcores", "--t", "2", "--depth", "2"]);
    assert!(inline.contains("class=\"bold\""));
}
