use std::process::Command;

use isoclips_cli::{run, Output, EXIT_OK, EXIT_ORACLE_FAIL, EXIT_PARSE, EXIT_UNSUPPORTED};
use isoclips_core::groups::{hasse, ClassSet, GroupContext, SubgroupClass};
use serde::Deserialize;

fn isoclips(args: &[&str]) -> Output {
    run(std::iter::once("isoclips").chain(args.iter().copied()))
}

#[derive(Deserialize)]
struct Classes {
    context: GroupContext,
    classes: ClassSet,
}

#[derive(Deserialize)]
struct Poset {
    classes: ClassSet,
    edges: Vec<(SubgroupClass, SubgroupClass)>,
}

#[test]
fn clips_prints_the_class_list() {
    let out = isoclips(&["clips", "D2", "O(2)", "--ctx", "so3"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "1, Z2, D2\n");
    assert!(out.stderr.is_empty());
}

#[test]
fn improper_classes_promote_the_context() {
    let out = isoclips(&["clips", "O^-", "D3"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(
        out.stderr.starts_with("note: using o3 context"),
        "{}",
        out.stderr
    );
    let out = isoclips(&["clips", "O^-", "D3", "--ctx", "so3"]);
    assert_eq!(out.code, EXIT_PARSE);
}

#[test]
fn isotropy_json_round_trips() {
    let out = isoclips(&["isotropy", "H3 + H2* + 2*H1", "--json"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stderr.contains("o3"));
    let parsed: Classes = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(parsed.context, GroupContext::O3);
    assert_eq!(parsed.classes.len(), 16);
    let plain = isoclips(&["isotropy", "H3 + H2* + 2*H1"]);
    assert_eq!(plain.stdout, format!("{}\n", parsed.classes));
}

#[test]
fn expressions_are_expanded_before_the_fold() {
    let a = isoclips(&["isotropy", "S2(S2(H1))"]);
    let b = isoclips(&["isotropy", "H4 + 2*H2 + 2*H0"]);
    assert_eq!(a, b);
    assert_eq!(a.stdout, "1, Z2, D2, D3, D4, O, O(2), SO(3)\n");
    let d = isoclips(&["decompose", "S2(S2(H1))", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&d.stdout).unwrap();
    assert_eq!(v["dim"], 21);
    assert_eq!(v["sum"], "H4 + 2*H2 + 2*H0");
    assert_eq!(v["terms"][0]["label"], "H4");
}

#[test]
fn poset_edges_match_the_hasse_diagram() {
    let dot = isoclips(&["poset", "H4 + 2*H2 + 2*H0"]);
    assert_eq!(dot.code, EXIT_OK);
    let json = isoclips(&["poset", "H4 + 2*H2 + 2*H0", "--json"]);
    let p: Poset = serde_json::from_str(&json.stdout).unwrap();
    let expected = hasse(&p.classes, GroupContext::SO3).unwrap();
    assert_eq!(p.edges, expected.0);
    assert_eq!(p.edges.len(), 10);
    let arrows: Vec<(SubgroupClass, SubgroupClass)> = dot
        .stdout
        .lines()
        .filter_map(|l| l.trim().trim_end_matches(';').split_once(" -> "))
        .map(|(lo, hi)| {
            (
                lo.trim_matches('"').parse().unwrap(),
                hi.trim_matches('"').parse().unwrap(),
            )
        })
        .collect();
    assert_eq!(arrows, p.edges);
}

#[test]
fn dot_file_is_written() {
    let path = std::env::temp_dir().join(format!("isoclips-{}.dot", std::process::id()));
    let p = path.to_str().unwrap();
    let out = isoclips(&["isotropy", "H2 + H1", "--dot", p]);
    assert_eq!(out.code, EXIT_OK);
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("\"1\" -> \"Z2\""));
}

#[test]
fn irreps_by_degree_or_label() {
    assert_eq!(isoclips(&["irrep", "2"]).stdout, "D2, O(2), SO(3)\n");
    let starred = isoclips(&["irrep", "H2*"]);
    assert_eq!(starred, isoclips(&["irrep", "2", "--star"]));
    assert!(starred.stdout.contains("O(3)"));
    assert_eq!(isoclips(&["irrep", "H2 + H3"]).code, EXIT_PARSE);
}

#[test]
fn exit_codes() {
    assert_eq!(
        isoclips(&["isotropy", "H2 + H3", "--ctx", "o3"]).code,
        EXIT_UNSUPPORTED
    );
    assert_eq!(
        isoclips(&["clips", "[D2 x Zc2]", "Z2", "--ctx", "o3"]).code,
        EXIT_UNSUPPORTED
    );
    assert_eq!(isoclips(&["clips", "D0", "Z2"]).code, EXIT_PARSE);
    assert_eq!(isoclips(&["clips", "Q7", "Z2"]).code, EXIT_PARSE);
    assert_eq!(isoclips(&["verify", "O(2)", "Z2"]).code, EXIT_PARSE);
    assert_eq!(isoclips(&["frobnicate"]).code, EXIT_PARSE);
    assert_eq!(isoclips(&["--help"]).code, EXIT_OK);
    assert_ne!(EXIT_ORACLE_FAIL, EXIT_OK);
}

#[test]
fn parse_errors_report_the_offset() {
    let out = isoclips(&["isotropy", "H4 + 2*H2 +"]);
    assert_eq!(out.code, EXIT_PARSE);
    assert!(out.stderr.contains("byte 11"), "{}", out.stderr);
    let out = isoclips(&["decompose", "H1 + -1*H2"]);
    assert!(
        out.stderr.contains("negative multiplicity at byte 5"),
        "{}",
        out.stderr
    );
}

#[test]
fn verify_is_deterministic() {
    let args = [
        "verify",
        "D6",
        "O",
        "--samples",
        "50",
        "--seed",
        "3",
        "--json",
    ];
    let a = isoclips(&args);
    assert_eq!(a.code, EXIT_OK);
    assert_eq!(a, isoclips(&args));
    let v: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["verdict"], "pass");
    let text = isoclips(&["verify", "T", "T", "--samples", "50"]);
    assert!(
        text.stdout.contains("observed: 1, Z2, Z3, T\n"),
        "{}",
        text.stdout
    );
    assert!(text.stdout.ends_with("verdict: pass\n"));
}

#[test]
fn binary_forwards_streams_and_status() {
    let out = Command::new(env!("CARGO_BIN_EXE_isoclips"))
        .args(["clips", "Z4", "Z6"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1, Z2\n");
    let out = Command::new(env!("CARGO_BIN_EXE_isoclips"))
        .args(["isotropy", "H2 + H3", "--ctx", "o3"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_UNSUPPORTED));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: unsupported"));
}
