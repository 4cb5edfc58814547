use std::io::Write;
use std::process::{Command, Output};

fn permsum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permsum")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ps_examples() {
    let o = permsum(&["ps", "--family", "B1(3,4)"]);
    assert_eq!(stdout(&o), "30\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&permsum(&["ps", "--family", "P(1)"])), "1\n");
    let o = permsum(&["ps", "--family", "B3(1,1,1)", "--engine", "all"]);
    assert_eq!(stdout(&o), "19\n19\n19\n");
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn poly_examples() {
    assert_eq!(stdout(&permsum(&["poly", "--family", "C(3)"])), "1,0,3,-2\n");
    assert_eq!(stdout(&permsum(&["poly", "--family", "P(2)"])), "1,0,1\n");
    assert_eq!(stdout(&permsum(&["poly", "--graph6", "?"])), "1\n");
    assert_eq!(stdout(&permsum(&["poly", "--family", "C(4)", "--engine", "all"])), "1,0,4,0,4\n1,0,4,0,4\n");
}

#[test]
fn family_round_trips() {
    let text = stdout(&permsum(&["family", "B3(1,1,0)"]));
    let g = permsum::decode_graph6(text.trim()).unwrap();
    assert!(permsum::is_isomorphic(&g, &permsum::family::make_b3(1, 1, 0).unwrap()));
    assert_eq!((g.order(), g.size()), (4, 5));
}

#[test]
fn enumerate_csv() {
    let o = permsum(&["enumerate", "--class", "bicyclic", "--n", "5", "--top", "5", "--format", "csv"]);
    let out = stdout(&o);
    let lines: Vec<_> = out.lines().collect();
    assert_eq!(lines[0], "graph6,n,class,ps,rank");
    assert_eq!(lines.len(), 6);
    let ps: Vec<u64> = lines[1..].iter().map(|l| l.split(',').nth(3).unwrap().parse().unwrap()).collect();
    assert!(ps.windows(2).all(|w| w[0] >= w[1]));
}

#[test]
fn enumerate_json() {
    let o = permsum(&[
        "enumerate",
        "--class",
        "naive",
        "--n",
        "4",
        "--m",
        "5",
        "--connected",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
    assert_eq!(v[0]["class"], "TypeB3");
    assert_eq!(v[0]["ps"], "14");
}

#[test]
fn verify_range_passes() {
    let o = permsum(&["verify", "--claim", "thm1.3", "--n-min", "6", "--n-max", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 5);
    assert!(out.lines().all(|l| l.ends_with("PASS")));
}

#[test]
fn verify_json_schema() {
    let o = permsum(&["verify", "--claim", "lem4.3", "--n", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let keys: Vec<_> = v[0].as_object().unwrap().keys().cloned().collect();
    assert_eq!(
        keys,
        ["claim", "n", "expected", "observed", "extremal_expected", "extremal_observed", "pass"]
    );
    assert_eq!(v[0]["expected"], "9");
    assert_eq!(v[0]["pass"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(permsum(&["verify", "--claim", "thm7.7", "--n", "8"]).status.code(), Some(2));
    assert_eq!(permsum(&["ps", "--family", "X(1)"]).status.code(), Some(2));
    assert_eq!(permsum(&["ps", "--graph6", "A"]).status.code(), Some(2));
    assert_eq!(permsum(&["ps", "--family", "P(20)", "--engine", "sachs"]).status.code(), Some(3));
    assert_eq!(permsum(&["enumerate", "--class", "bicyclic", "--n", "13"]).status.code(), Some(3));
    let o = permsum(&["verify", "--claim", "thm1.2", "--n", "9"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stdout(&o).contains("unverifiable"));
    assert!(stdout(&o).contains("second maximum"));
    // a failing check wins over an unverifiable one
    assert_eq!(
        permsum(&["verify", "--claim", "lem5.1", "--n-min", "4", "--n-max", "10"]).status.code(),
        Some(1)
    );
}

#[test]
fn file_input_reports_line_numbers() {
    let dir = std::env::temp_dir().join(format!("permsum-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.g6");
    let mut f = std::fs::File::create(&good).unwrap();
    writeln!(f, "Bw\nC~\n?").unwrap();
    let o = permsum(&["ps", "--file", good.to_str().unwrap()]);
    assert_eq!(stdout(&o), "6\n24\n1\n");

    let bad = dir.join("bad.g6");
    std::fs::write(&bad, "Bw\nC~\nzz\n").unwrap();
    let o = permsum(&["ps", "--file", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains(":3:"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bound_subcommand() {
    assert_eq!(stdout(&permsum(&["bound", "--claim", "thm1.2", "--n", "11"])), "408\n");
    assert_eq!(permsum(&["bound", "--claim", "lem4.6", "--n", "11"]).status.code(), Some(2));
}
