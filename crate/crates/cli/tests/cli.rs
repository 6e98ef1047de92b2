//! Runs the `wwm` binary: golden reports, exit codes, determinism and
//! report round trips.

use std::path::Path;
use std::process::{Command, Output};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use wwm_cli::{cmd_evolve, ExperimentReport, StateSpec};
use wwm_core::scalar::fmt_rational;
use wwm_core::weyl::random_bloch;

fn wwm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wwm")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = wwm(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn report(args: &[&str]) -> ExperimentReport {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)).unwrap()
}

fn q(num: i64, den: i64) -> Value {
    json!({ "num": num, "den": den })
}

#[test]
fn goldens_are_byte_stable() {
    let cases: [(&str, &[&str]); 5] = [
        ("blowtorch_grassmann_plus_z.json", &["blowtorch", "--model", "grassmann", "--state", "stab +z"]),
        ("blowtorch_eight_state.json", &["blowtorch", "--model", "eight-state", "--state", "atom +++"]),
        ("families_three_state.json", &["families", "--model", "three-state"]),
        ("measure_table.txt", &["measure", "--state", "stab +z", "--pauli", "x", "--table"]),
        ("evolve_h.json", &["evolve", "--gates", "H", "--state", "bloch 1/2,1/3,1/5"]),
    ];
    for (file, args) in cases {
        assert_eq!(stdout(args), golden(file), "{file}");
    }
}

#[test]
fn blowtorch_reports() {
    let g = report(&["blowtorch", "--model", "grassmann", "--state", "stab +z"]);
    let zero = json!([q(0, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1), q(0, 1)]);
    assert_eq!(g.outputs["t1"], zero);
    assert_eq!(g.outputs["t2"], zero);
    assert_eq!(serde_json::to_value(g.verdict).unwrap(), "non-contextual");

    let e = report(&["blowtorch", "--model", "eight-state", "--state", "atom +++"]);
    assert_eq!(serde_json::to_value(e.verdict).unwrap(), "contextual");
    let states = |v: &Value| v.as_array().unwrap().iter().map(|x| x["state"].as_str().unwrap().to_string()).collect::<Vec<_>>();
    let even = |s: &String| s.chars().filter(|&c| c == '-').count() % 2 == 0;
    assert!(states(&e.outputs["t1"]).iter().all(even));
    assert!(!states(&e.outputs["t2"]).iter().any(even));
    assert_eq!(states(&e.outputs["t1"]).len(), 4);

    let mixed = report(&["blowtorch", "--model", "grassmann", "--state", "bloch 0,0,0"]);
    assert_eq!(mixed.outputs["t1"], zero);
    assert_eq!(mixed.outputs["t2"], zero);
}

#[test]
fn family_reports() {
    let three = report(&["families", "--model", "three-state"]);
    assert_eq!(three.outputs["count"], 2);
    assert_eq!(serde_json::to_value(three.verdict).unwrap(), "non-convex");
    let w = three.witness.unwrap();
    assert_eq!(w["first"], json!([q(1, 1), q(0, 1), q(0, 1), q(0, 1)]));
    assert_eq!(w["second"], json!([q(0, 1), q(1, 1), q(0, 1), q(0, 1)]));

    let g = report(&["families", "--model", "grassmann"]);
    assert_eq!(g.outputs["count"], 8);
    let mut common = vec![q(0, 1); 6];
    common.extend(vec![q(1, 2); 6]);
    assert_eq!(g.outputs["common_point"], Value::Array(common));

    let pairs = report(&["families", "--model", "grassmann", "--form", "pairs"]);
    assert_eq!(pairs.outputs["count"], 1);
    assert_eq!(serde_json::to_value(pairs.verdict).unwrap(), "convex");

    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data/three_state.ontic");
    let from_file = report(&["families", "--system", path.to_str().unwrap()]);
    assert_eq!(from_file.outputs["families"], three.outputs["families"]);
}

#[test]
fn measure_and_regions() {
    let m = report(&["measure", "--state", "stab -y", "--pauli", "y"]);
    assert_eq!((&m.outputs["plus"], &m.outputs["minus"]), (&q(0, 1), &q(1, 1)));
    let m = report(&["measure", "--state", "bloch 0,0,0", "--pauli", "z"]);
    assert_eq!((&m.outputs["plus"], &m.outputs["minus"]), (&q(1, 2), &q(1, 2)));
    let r = report(&["regions", "--state", "stab +x"]);
    assert_eq!(r.outputs["support"].as_array().unwrap().len(), 4);
    assert_eq!(r.outputs["total"], q(1, 1));
}

#[test]
fn evolve_steps() {
    let r = report(&["evolve", "--gates", "H", "--state", "bloch 1/2,1/3,1/5"]);
    assert_eq!(r.outputs["final"], json!({ "alpha": q(1, 5), "beta": q(-1, 3), "gamma": q(1, 2) }));
    let empty = report(&["evolve", "--gates", "", "--state", "bloch 1/2,1/3,1/5"]);
    assert_eq!(empty.outputs["final"], json!({ "alpha": q(1, 2), "beta": q(1, 3), "gamma": q(1, 5) }));
    assert_eq!(empty.outputs["steps"].as_array().unwrap().len(), 1);

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let b = random_bloch(&mut rng);
        let c = b.components();
        let spec: StateSpec = format!("bloch {},{},{}", fmt_rational(&c[0]), fmt_rational(&c[1]), fmt_rational(&c[2])).parse().unwrap();
        let r = cmd_evolve("H H", &spec).unwrap();
        assert_eq!(r.outputs["final"], serde_json::to_value(&b).unwrap());
    }
}

#[test]
fn exit_codes() {
    assert_eq!(wwm(&["check"]).status.code(), Some(0));
    for bad in [
        &["blowtorch", "--model", "nine-state", "--state", "stab +z"][..],
        &["blowtorch", "--model", "grassmann", "--state", "stab +q"],
        &["blowtorch", "--model", "three-state", "--state", "stab +z"],
        &["evolve", "--gates", "H Q", "--state", "stab +x"],
        &["measure", "--state", "stab +x", "--pauli", "w"],
        &["families", "--system", "/nonexistent.ontic"],
        &["frobnicate"],
    ] {
        assert_eq!(wwm(bad).status.code(), Some(2), "{bad:?}");
    }
}

#[test]
fn check_is_deterministic_and_seed_independent() {
    let a = stdout(&["check"]);
    assert_eq!(a, stdout(&["check", "--seed", "2024"]));
    let r: ExperimentReport = serde_json::from_str(&a).unwrap();
    assert_eq!(serde_json::to_value(r.verdict).unwrap(), "pass");
    assert_eq!(r.outputs["unexpected_contextuality"], false);
    for suite in r.outputs["suites"].as_array().unwrap() {
        assert!(suite["cases"].as_u64().unwrap() > 0);
    }
    let other: ExperimentReport = serde_json::from_str(&stdout(&["check", "--seed", "99"])).unwrap();
    assert_eq!(other.verdict, r.verdict);
    assert_eq!(other.outputs["cases"], r.outputs["cases"]);
}

#[test]
fn reports_round_trip_and_timing_is_opt_in() {
    let text = stdout(&["families", "--model", "grassmann", "--form", "pairs"]);
    let r: ExperimentReport = serde_json::from_str(&text).unwrap();
    assert_eq!(r.to_json() + "\n", text);
    assert!(!text.contains("wall_time_ms"));
    let timed = report(&["measure", "--state", "stab +z", "--pauli", "z", "--timing"]);
    assert!(timed.wall_time_ms.is_some());
}
