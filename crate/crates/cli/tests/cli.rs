use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn corona(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corona"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn spec(name: &str) -> String {
    fixture(name).display().to_string()
}

#[test]
fn build_writes_edge_list_and_partition() {
    let dir = std::env::temp_dir().join(format!("corona-cli-build-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("k2_pendants.txt");
    let o = corona(&[
        "build",
        &spec("k2_pendants.spec"),
        "-o",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let g = corona_core::parse_edge_list(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!((g.n(), g.m()), (5, 5));
    let part: serde_json::Value = serde_json::from_str(
        &std::fs::read_to_string(dir.join("k2_pendants.txt.partition.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(part["kind"], "r_vertex_corona");
    assert_eq!(part["partition"]["crowns"], serde_json::json!([[3], [4]]));

    let out = dir.join("tri.txt");
    assert!(corona(&[
        "build",
        &spec("k2_rgraph.spec"),
        "-o",
        out.to_str().unwrap()
    ])
    .status
    .success());
    assert_eq!(std::fs::read_to_string(&out).unwrap(), "3\n0 1\n0 2\n1 2\n");
}

#[test]
fn bad_crown_index_reports_path_and_line() {
    let o = corona(&["build", &spec("bad_crown_index.spec"), "-o", "/dev/null"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("bad_crown_index.spec:4"), "{err}");
}

#[test]
fn resist_pair_and_all() {
    let o = corona(&[
        "resist",
        &spec("k2_pendants.spec"),
        "--pair",
        "0",
        "1",
        "--format",
        "json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let row = &v["pairs"][0];
    assert_eq!(row["closed"].as_f64().unwrap(), 0.666666666667);
    assert_eq!(row["oracle"].as_f64().unwrap(), 0.666666666667);
    assert!(row["residual"].as_f64().unwrap() < 1e-8);

    let o = corona(&[
        "resist",
        &spec("k2_pendants.spec"),
        "--all",
        "--format",
        "csv",
    ]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 11);
    assert!(text.contains("3,4,cross_crown,2.66666666667,2.66666666667,"));

    let o = corona(&["resist", &spec("k2_pendants.spec"), "--pair", "0", "0"]);
    assert!(stdout(&o).contains("closed = 0  oracle = 0"));

    let o = corona(&["resist", &spec("k2_pendants.spec"), "--pair", "0", "9"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn edge_corona_same_crown_resistance() {
    let o = corona(&[
        "resist",
        &spec("p3_edge.spec"),
        "--pair",
        "5",
        "6",
        "--format",
        "csv",
    ]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("5,6,same_crown,2,2,"), "{}", stdout(&o));
}

#[test]
fn kf_values_and_errors() {
    let o = corona(&["kf", &spec("k2_rgraph.spec"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["oracle"].as_f64().unwrap(), 2.0);
    assert_eq!(v["closed"].as_f64().unwrap(), 2.0);

    let o = corona(&["kf", &spec("k2_pendants.spec"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["relative_residual"].as_f64().unwrap() <= 1e-6);
    assert!(v["expansion"]["trace_terms"].as_array().unwrap().len() >= 5);

    let o = corona(&["kf", &spec("disconnected.spec")]);
    assert_ne!(o.status.code(), Some(0));
    assert!(String::from_utf8(o.stderr)
        .unwrap()
        .contains("disconnected"));
}

#[test]
fn suite_is_deterministic_and_zero_cases_pass() {
    let args = [
        "suite", "--seed", "7", "--cases", "4", "--nmax", "4", "--tmax", "2", "--format", "json",
    ];
    let a = corona(&args);
    let b = corona(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], "corona-suite/1");
    assert_eq!(v["verdict"], "pass");
    assert_eq!(
        v["instances"][0]["base"]["sha256"].as_str().unwrap().len(),
        64
    );

    let o = corona(&["suite", "--cases", "0", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["instances"].as_array().unwrap().len(), 0);
}

#[test]
fn unknown_mutation_is_an_error() {
    let o = corona(&["suite", "--cases", "1", "--mutate", "bogus=1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn conformance_command_succeeds() {
    let o = corona(&["conformance", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["variants"].as_array().unwrap().len(), 8);
}
