use std::process::{Command, Output};

use arq_core::denom::DenominatorTable;
use arq_core::{ARQuiver, Kind, RootSequence, RootSystem};

fn arq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arq")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

const D4: &str = "D4:3>2,2>1,2>4";

#[test]
fn a1_dot_has_one_vertex() {
    let out = arq(&["show", "--type", "A", "--rank", "1", "--format", "dot"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("label=").count(), 1);
    assert!(!text.contains("->"));
}

#[test]
fn d4_socle() {
    let out = arq(&["pair", "socle", "--quiver", D4, "--pair", "{2|-4},{1|2}"]);
    assert_eq!(out.status.code(), Some(0));
    let s = RootSystem::new(Kind::D, 4).unwrap();
    let printed = RootSequence::parse(&s, stdout(&out).trim()).unwrap();
    assert_eq!(printed, RootSequence::parse(&s, "({1|-4},{2|3},{2|-3})").unwrap());

    let reading = "D4:3 2 1 4 3 2 1 4 3 2 1 4";
    let out = arq(&["pair", "socle", "--class", reading, "--pair", "{2|-4},{1|2}"]);
    assert_eq!(stdout(&out), "({1|-4},{2|3},{2|-3})\n");
}

#[test]
fn rds_mul_on_all_d4_orientations() {
    let out = arq(&["verify", "rds-mul", "--type", "D", "--rank", "4", "--all-orientations"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).ends_with("rds-mul: 8 orientations, 0 failed\n"));
}

#[test]
fn distances_on_the_e6_appendix_quiver() {
    let dist = arq(&["pair", "dist", "--fixture", "e6-appendix", "--pair", "(111001,123212)"]);
    assert!(stdout(&dist).starts_with("1\n"));
    let gdist = arq(&["pair", "gdist", "--fixture", "e6-appendix", "--pair", "(111001,123212)", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&gdist.stdout).unwrap();
    assert_eq!(v["length"], 2);
    assert_eq!(v["chain"].as_array().unwrap().len(), 2);
    let radius = arq(&["pair", "radius", "--fixture", "e7-appendix", "--gamma", "(1122221)"]);
    assert!(stdout(&radius).starts_with("3\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(arq(&["show", "--type", "D", "--rank", "4"]).status.code(), Some(2));
    assert_eq!(arq(&["show", "--type", "D4", "--orient", "3>2,2>1"]).status.code(), Some(2));
    assert_eq!(arq(&["pair", "socle", "--quiver", D4, "--pair", "{2|-9},{1|2}"]).status.code(), Some(2));
    assert_eq!(arq(&["pair", "socle", "--quiver", D4, "--pair", "x", "--cap-partitions", "0"]).status.code(), Some(2));
    let cap = arq(&["word", "class", "--type", "A4", "--word", "1 2 1 3 2 1 4 3 2 1", "--cap-class", "3"]);
    assert_eq!(cap.status.code(), Some(3));
    assert_eq!(arq(&["fixture", "diff", "e7-appendix"]).status.code(), Some(1));
    assert_eq!(arq(&["fixture", "diff", "e6-appendix"]).status.code(), Some(0));
    assert_eq!(arq(&["fixture", "diff", "d4-readings"]).status.code(), Some(0));
    assert_eq!(arq(&["denom", "verify", "--type", "A", "--rank", "4", "--all-orientations"]).status.code(), Some(0));
}

#[test]
fn orders() {
    let a5 = ["--type", "A5", "--word", "1 3 2 1 4 3 2 1 5 4 3 2 1 5 4"];
    let run = |kind: &str, lhs: &str, rhs: &str| {
        let mut args = vec!["order", "cmp", "--kind", kind, "--lhs", lhs, "--rhs", rhs];
        args.extend(a5);
        stdout(&arq(&args))
    };
    assert_eq!(run("total", "[1]", "[2,5]"), "true\n");
    assert_eq!(run("total", "[2,5]", "[1]"), "false\n");
    let coarse = arq(&["order", "cmp", "--kind", "coarse", "--class", D4, "--lhs", "{1|-4},{2|3},{2|-3}", "--rhs", "{2|-4},{1|2}"]);
    assert_eq!(stdout(&coarse), "true\n");
}

#[test]
fn output_is_deterministic_and_json_round_trips() {
    let args = ["denom", "table", "--type", "E6", "--fixture", "e6-appendix", "--format", "json"];
    let (a, b) = (arq(&args), arq(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let table: DenominatorTable = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(table.entries.len(), 36);
    assert_eq!(table.p_star, Some(12));

    let show = arq(&["show", "--class", D4, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&show.stdout).unwrap();
    let back = ARQuiver::from_json(&v).unwrap();
    assert_eq!(back.to_json(), v);
    assert_eq!(back.system().type_name(), "D4");
    assert_eq!(back.quiver().to_spec(), "2>1,3>2,2>4");
}

#[test]
fn out_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("arq-cli-test-{}.txt", std::process::id()));
    let out = arq(&["fixture", "list", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.lines().any(|l| l == "e8-appendix"));
}
