//! End-to-end tests of the command-line interface: JSON schemas, exit
//! codes, determinism, and @path file references.

use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_powercmp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    assert!(
        output.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is one JSON document")
}

const G872: &str = r#"{"weights":[8,7,2],"quota":9}"#;
const GADGET: &str = r#"{"universe":6,"sets":[[0,1,2],[3,4,5],[0,3,4]]}"#;

#[test]
fn index_command() {
    let out = run(&["index", G872, "--player", "1", "--kind", "banzhaf"]);
    let v = stdout_json(&out);
    assert_eq!(v["raw"], "2");
    assert_eq!(v["scale"], "4");
    assert_eq!(v["normalized"]["num"], "1");
    assert_eq!(v["normalized"]["den"], "2");

    let out = run(&["index", G872, "--player", "2", "--kind", "shapley", "--strategy", "weight-dp"]);
    let v = stdout_json(&out);
    assert_eq!(v["normalized"]["num"], "1");
    assert_eq!(v["normalized"]["den"], "3");
}

#[test]
fn compare_commands() {
    let out = run(&["compare", G872, G872, "--player", "1", "--kind", "shapley"]);
    let v = stdout_json(&out);
    assert_eq!(v["strictly_greater"], false);

    let out = run(&[
        "compare",
        r#"{"weights":[2,1,1],"quota":2}"#,
        r#"{"weights":[1,1,1],"quota":2}"#,
        "--player",
        "1",
        "--kind",
        "shapley",
    ]);
    assert_eq!(stdout_json(&out)["strictly_greater"], true);

    let out = run(&[
        "compare-raw",
        G872,
        r#"{"weights":[1],"quota":1}"#,
        "--player-a",
        "1",
        "--player-b",
        "1",
        "--kind",
        "banzhaf",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["left"]["raw"], "2");
    assert_eq!(v["right"]["raw"], "1");
    assert_eq!(v["strictly_greater"], true);
}

#[test]
fn merge_command() {
    let out = run(&["merge", r#"{"weights":[1,1,1],"quota":2}"#]);
    assert_eq!(stdout_json(&out)["strictly_greater"], true);
    let out = run(&["merge", r#"{"weights":[2,2,1],"quota":4}"#]);
    assert_eq!(stdout_json(&out)["strictly_greater"], false);
}

#[test]
fn reduction_pipeline() {
    let out = run(&["reduce", "x3c-to-subsetsum", GADGET]);
    let v = stdout_json(&out);
    assert_eq!(v["values"], serde_json::json!(["21", "1344", "321"]));
    assert_eq!(v["target"], "1365");

    let out = run(&["reduce", "x3c-to-game", GADGET]);
    let v = stdout_json(&out);
    assert_eq!(v["weights"], serde_json::json!([1, 21, 1344, 321]));
    assert_eq!(v["quota"], 1366);

    let out = run(&[
        "reduce",
        "subsetsum-to-game",
        r#"{"values":["7"],"target":"7"}"#,
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["weights"], serde_json::json!([1, 7]));
    assert_eq!(v["quota"], 8);

    // malformed instance with --lenient becomes the zero-solution fallback
    let out = run(&[
        "reduce",
        "x3c-to-game",
        r#"{"universe":3,"sets":[[0,1,5]]}"#,
        "--lenient",
    ]);
    assert!(out.status.success());
    // without the flag it is a validation error
    let out = run(&["reduce", "x3c-to-game", r#"{"universe":3,"sets":[[0,1,5]]}"#]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn transform_and_count() {
    let out = run(&["transform", "two-thirds", r#"{"universe":3,"sets":[[0,1,2]]}"#]);
    let v = stdout_json(&out);
    assert_eq!(v["universe"], 12);
    assert_eq!(v["sets"].as_array().unwrap().len(), 6);

    let out = run(&["transform", "equalize", GADGET, r#"{"universe":3,"sets":[[0,1,2]]}"#]);
    let v = stdout_json(&out);
    let pair = v.as_array().unwrap();
    assert_eq!(pair[0]["universe"], pair[1]["universe"]);

    let out = run(&["count", "x3c", GADGET]);
    assert_eq!(stdout_json(&out)["value"], "1");
    let out = run(&["count", "subsetsum", r#"{"values":["21","1344","321"],"target":"1365"}"#]);
    assert_eq!(stdout_json(&out)["value"], "1");
}

#[test]
fn psi_command() {
    assert_eq!(stdout_json(&run(&["psi", "2"]))["value"], "1");
    assert_eq!(stdout_json(&run(&["psi", "0"]))["value"], "0");
    assert_eq!(stdout_json(&run(&["psi", "17"]))["value"], "0");
    let out = run(&["psi", "-3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn estimate_is_byte_deterministic() {
    let args = [
        "estimate", G872, "--player", "1", "--kind", "shapley", "--samples", "5000", "--seed", "9",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v = stdout_json(&a);
    assert_eq!(v["samples"], 5000);
    assert_eq!(v["seed"], 9);
}

#[test]
fn verify_and_gen() {
    let out = run(&["verify", G872]);
    assert_eq!(stdout_json(&out)["agree"], true);
    let out = run(&["verify", GADGET]);
    assert_eq!(stdout_json(&out)["agree"], true);

    let a = run(&["gen", "game", "--seed", "4", "--players", "6"]);
    let b = run(&["gen", "game", "--seed", "4", "--players", "6"]);
    assert_eq!(a.stdout, b.stdout);
    let game = stdout_json(&a);
    assert_eq!(game["weights"].as_array().unwrap().len(), 6);

    let x = run(&["gen", "x3c", "--seed", "4", "--universe", "9", "--sets", "5"]);
    let v = stdout_json(&x);
    assert_eq!(v["universe"], 9);
    assert_eq!(v["sets"].as_array().unwrap().len(), 5);
}

#[test]
fn file_reference_input() {
    let dir = std::env::temp_dir().join(format!("powercmp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("game.json");
    std::fs::write(&path, G872).unwrap();
    let arg = format!("@{}", path.display());
    let out = run(&["index", &arg, "--player", "3", "--kind", "banzhaf"]);
    assert_eq!(stdout_json(&out)["raw"], "2");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    // usage error
    let out = run(&["index", G872, "--player", "1"]);
    assert_eq!(out.status.code(), Some(1));
    // validation error, machine-readable on stderr
    let out = run(&[
        "index",
        r#"{"weights":[1,-2],"quota":3}"#,
        "--player",
        "1",
        "--kind",
        "banzhaf",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "validation");
    // capacity error: 70 players with an enormous quota has no exact backend
    let weights: Vec<u64> = vec![1; 70];
    let big_game = serde_json::json!({
        "weights": weights,
        "quota": "100000000000000000000000000000000"
    })
    .to_string();
    let out = run(&["index", &big_game, "--player", "1", "--kind", "banzhaf"]);
    assert_eq!(out.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "capacity");
}
