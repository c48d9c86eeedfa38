use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biserial"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(name: &str) -> String {
    fixture(name).to_string_lossy().into_owned()
}

#[test]
fn classify_reports() {
    let o = run(&["classify", &path("lambda3.qp")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class_c"], true);

    let o = run(&["classify", &path("lambda4.qp")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class_c"], false);
    let witnesses = v["witnesses"].as_array().unwrap();
    assert!(witnesses.iter().any(|w| w["flag"] == "class_c" && w["item"] == "t0"));
}

#[test]
fn broken_input_exits_2() {
    let o = run(&["classify", &path("broken.qp")]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn string_listings() {
    let l3 = path("lambda3.qp");
    let o = run(&["strings", &l3, "--max-len", "1", "--generalized"]);
    assert_eq!(stdout(&o).lines().count(), 9);
    let o = run(&["strings", &l3, "--max-len", "0"]);
    assert_eq!(stdout(&o), "1_0\n1_1\n1_2\n");
    let o = run(&["strings", &l3, "--max-len", "3", "--generalized"]);
    assert!(stdout(&o).lines().any(|l| l == "z0^-1*t0*t1"));
}

#[test]
fn rim_towers() {
    let l3 = path("lambda3.qp");
    let o = run(&["rim", &l3, "--string", "z0^-1*t0*t1", "--levels", "3", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("P0 | P0+P1+P0 | P2+P0+P1+P0 | P2+P0+P1+P0 | P2+P0+P1 | P2"));
    assert_eq!(out.lines().count(), 5);

    let o = run(&["rim", &l3, "--string", "z0^-1*t0*t1", "--levels", "0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["levels"].as_array().unwrap().len(), 1);

    let o = run(&["rim", &l3, "--string", "z0*z0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["rim", &l3, "--string", "(z0*z0)", "--levels", "1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn small_characteristic_exits_4() {
    let o = run(&[
        "--field",
        "fp:5",
        "rim",
        &path("lambda3.qp"),
        "--string",
        "z0^-1*t0*t1",
        "--levels",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn diagrams() {
    let l3 = path("lambda3.qp");
    let o = run(&["diagram", &l3, "--string", "z0^-1*t0*t1", "--levels", "0"]);
    let out = stdout(&o);
    let row0 = out.lines().nth(1).unwrap();
    assert_eq!(row0, "0\tS0\tM[z0*g1^-1]\tM[z2]");

    let o = run(&["diagram", &l3, "--tower", "v0", "--n", "3"]);
    let out = stdout(&o);
    let last = out.lines().nth(4).unwrap();
    assert_eq!(last, "3\tM[z0^-1*t0]\tS0+S1\tS0+S1\tM[z0*g1^-1]");

    let o = run(&["diagram", &l3, "--string", "t0", "--levels", "1", "--format", "dot"]);
    assert!(stdout(&o).starts_with("digraph"));
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let l3 = path("lambda3.qp");
    let args = ["--seed", "7", "diagram", &l3, "--string", "z0^-1*t0*t1", "--levels", "3"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(a, b);

    let dir = std::env::temp_dir().join(format!("biserial-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("d.tsv");
    let o = run(&["--seed", "7", "--out", out.to_str().unwrap(), "diagram", &l3, "--string", "z0^-1*t0*t1", "--levels", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), a);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn complex_json_roundtrip() {
    let l3 = path("lambda3.qp");
    let o = run(&["complex", &l3, "--string", "z0^-1*t0*t1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let dir = std::env::temp_dir().join(format!("biserial-json-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("c.json");
    std::fs::write(&file, v["complex"].to_string()).unwrap();
    let o = run(&["complex", &l3, "--json", file.to_str().unwrap(), "--minimal"]);
    assert_eq!(o.status.code(), Some(0));
    let w: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(w["complex"], v["complex"]);
    assert_eq!(w["terms"], "P0 | P0+P1 | P2");
    std::fs::remove_dir_all(&dir).unwrap();
}
