use std::process::{Command, Output};

fn capelli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_capelli")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

#[test]
fn expand_two_by_two_example() {
    let o = capelli(&["expand", "--type", "capelli", "--n", "4", "--left", "1 2 / 2 4", "--right", "2 3 / 3 4"]);
    assert_eq!(o.status.code(), Some(0));
    let printed = "+e[1,2]e[2,3]e[2,3]e[4,4] -2e[1,3]e[2,3]e[4,4] \
        -e[1,3]e[2,2]e[2,3]e[4,4] +e[1,3]e[2,3]e[4,4] \
        -e[1,2]e[2,3]e[2,4]e[4,3] +e[1,2]e[2,3]e[2,3] +e[1,3]e[2,4]e[4,3] -e[1,3]e[2,3] +e[2,3]e[1,4]e[4,3] -e[2,3]e[1,3] \
        +e[1,3]e[2,2]e[2,4]e[4,3] -e[1,3]e[2,2]e[2,3] -e[1,3]e[2,4]e[4,3] +e[1,3]e[2,3]";
    let expected: capelli::UeaElement = printed.parse().unwrap();
    assert_eq!(stdout(&o), expected.to_string());
}

#[test]
fn koszul_from_json_file() {
    let dir = std::env::temp_dir().join(format!("capelli-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("e.json");
    let e: capelli::UeaElement = "-e[1,2]e[2,1]e[3,1] +e[1,1]e[3,1]".parse().unwrap();
    std::fs::write(&path, serde_json::to_string(&e.to_json()).unwrap()).unwrap();
    let o = capelli(&["koszul", "--n", "3", "--element-file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-(1|2)(2|1)(3|1)");
}

#[test]
fn verify_all_small() {
    let o = capelli(&["verify", "--suite", "all", "--n", "2", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 7);
    assert!(out.lines().all(|l| l.starts_with("PASS ")));
}

#[test]
fn json_round_trips_through_the_parsers() {
    let o = capelli(&["inverse-koszul", "--n", "2", "--poly", "+(1|2)(2|1)", "--format", "json"]);
    let e = capelli::UeaElement::from_json(&serde_json::from_str(&stdout(&o)).unwrap()).unwrap();
    assert_eq!(e.to_string(), "-e[1,1] +e[1,2]e[2,1]");
    let back = capelli(&["koszul", "--n", "2", "--element", &stdout(&o), "--format", "json"]);
    let p = capelli::Poly::from_json(&serde_json::from_str(&stdout(&back)).unwrap()).unwrap();
    assert_eq!(p.to_string(), "+(1|2)(2|1)");
}

#[test]
fn central_elements() {
    let h = capelli(&["central", "--n", "2", "--k", "2"]);
    assert_eq!(stdout(&h), "+e[1,1] +e[1,1]e[2,2] -e[1,2]e[2,1]");
    let k = capelli(&["central", "--n", "2", "--shape", "1"]);
    assert_eq!(stdout(&k), "+e[1,1] +e[2,2]");
    assert_eq!(capelli(&["central", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn basis_count_matches_dimensions() {
    let o = capelli(&["basis-count", "--n", "2", "--max-degree", "4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows[2]["standard"], 10);
    assert_eq!(rows[4]["dimension"], 35);
}

#[test]
fn oracle_check_single_pair_and_sweep() {
    let one = capelli(&["oracle-check", "--n", "3", "--left", "1 / 2", "--right", "2 / 3", "--type", "young"]);
    assert_eq!(one.status.code(), Some(0));
    let all = capelli(&["oracle-check", "--n", "2", "--type", "star", "--max-degree", "2"]);
    assert_eq!(stdout(&all), "PASS oracle star (36 pairs, 7 inputs each)");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["expand", "--n", "9", "--left", "1", "--right", "1"],
        vec!["expand", "--n", "2", "--left", "1 3", "--right", "1 2"],
        vec!["expand", "--n", "2", "--left", "1 2", "--right", "1 / 2"],
        vec!["expand", "--n", "2", "--left", "1 x", "--right", "1 2"],
        vec!["verify", "--suite", "bogus"],
        vec!["verify", "--max-degree", "7"],
        vec!["oracle-check", "--type", "column"],
        vec!["frobnicate"],
    ] {
        let o = capelli(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn unsafe_sizes_lifts_the_guard() {
    let o = capelli(&["expand", "--n", "6", "--unsafe-sizes", "--left", "6", "--right", "1"]);
    assert_eq!(stdout(&o), "+e[6,1]");
}

#[test]
fn output_is_deterministic() {
    let args = ["expand", "--type", "young", "--n", "3", "--left", "1 2 / 3", "--right", "2 3 / 1"];
    assert_eq!(capelli(&args).stdout, capelli(&args).stdout);
}
