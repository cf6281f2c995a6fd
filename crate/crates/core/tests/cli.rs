use std::path::PathBuf;

use psyknot::cli::run;
use psyknot::corpus::{builtin_corpus_dir, builtin_psy_dir};

fn corpus(file: &str) -> String {
    builtin_corpus_dir().join(file).display().to_string()
}

fn psy(file: &str) -> String {
    builtin_psy_dir().join(file).display().to_string()
}

fn psyknot(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv: Vec<String> = std::iter::once("psyknot".to_string())
        .chain(args.iter().map(|s| s.to_string()))
        .collect();
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = psyknot(&["verify", &psy("tbg6.psy")]);
    assert_eq!(code, 0);
    assert!(out.contains("pI-adequate: yes"), "{out}");
    let (code, out, _) = psyknot(&["verify", &psy("pure3.psy")]);
    assert_eq!(code, 0);
    assert!(out.contains("pI-adequate: no"), "{out}");
    let (code, _, _) = psyknot(&["verify", &psy("z5_printed.psy")]);
    assert_eq!(code, 1);
}

#[test]
fn corrupted_input_reports_location() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.psy");
    std::fs::write(&bad, "2\n2 2 2 2 2 2 2 2\n1 1 1 x 1 1 1 1\n").unwrap();
    let (code, _, err) = psyknot(&["verify", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
    std::fs::write(&bad, "junk\n").unwrap();
    let (code, _, err) = psyknot(&["verify", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 1"), "{err}");
    let (code, _, _) = psyknot(&["count", "/nonexistent.pd", &psy("tbg6.psy")]);
    assert_eq!(code, 2);
}

#[test]
fn count_examples() {
    let (code, out, _) = psyknot(&["count", &corpus("1_1l.pd"), &psy("two_elt.psy"), "--list"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "4");
    assert_eq!(lines.len(), 5);
    let (_, out, _) = psyknot(&["count", &corpus("2_1k.pd"), &psy("tbg6.psy")]);
    assert_eq!(out.trim(), "18");
    let (_, out, _) = psyknot(&["count", &corpus("0_1.pd"), &psy("tbg6.psy")]);
    assert_eq!(out.trim(), "6");
}

#[test]
fn jablan_example() {
    let (code, out, _) = psyknot(&["jablan", &corpus("1_1l.pd")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("s - t"));
}

#[test]
fn json_parses() {
    let (_, out, _) = psyknot(&[
        "--json",
        "count",
        &corpus("1_1l.pd"),
        &psy("two_elt.psy"),
        "--list",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["count"], 4);
    assert_eq!(v["colorings"].as_array().unwrap().len(), 4);
    let (_, out, _) = psyknot(&["--json", "jablan", &corpus("1_1l.pd")]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["jablan"], "s - t");
    let again: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, again);
}

#[test]
fn strong_three_colorings_of_pseudolink() {
    // resolving to the Hopf link (determinant 2) leaves only constant 3-colorings
    let (code, out, _) = psyknot(&["pcolor", &corpus("hopf_pseudo.pd"), "-p", "3", "--strong"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("3"));
}

#[test]
fn jablan_table_groups() {
    let dir: PathBuf = builtin_corpus_dir();
    let (code, out, _) = psyknot(&["table", dir.to_str().unwrap(), "--jablan"]);
    assert_eq!(code, 0);
    let row = |value: &str| -> Vec<String> {
        out.lines()
            .find_map(|l| l.strip_prefix(&format!("{value}\t")))
            .unwrap_or_else(|| panic!("no row {value} in\n{out}"))
            .split_whitespace()
            .map(String::from)
            .collect()
    };
    assert_eq!(row("s - t"), ["hopf", "1_1^l", "pl"]);
    assert!(row("s^2 + t^2").contains(&"2_1^k".to_string()));
    assert_eq!(row("s^3 - t^3"), ["3_1^l"]);
    assert_eq!(row("s^4 + t^4"), ["4_1^k"]);
}

#[test]
fn quiet_prints_nothing() {
    let (code, out, err) = psyknot(&["-q", "verify", &psy("z5_printed.psy")]);
    assert_eq!(code, 1);
    assert!(out.is_empty() && err.is_empty());
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec![
            "table".to_string(),
            builtin_corpus_dir().display().to_string(),
            psy("tbg6.psy"),
        ],
        vec!["groebner".to_string(), corpus("3_1.pd")],
        vec!["were".to_string(), corpus("3_1.1.pd")],
    ] {
        let a: Vec<&str> = args.iter().map(|s| s.as_str()).collect();
        let first = psyknot(&a);
        assert_eq!(first.0, 0, "{}", first.2);
        assert_eq!(first, psyknot(&a));
    }
}

#[test]
fn search_two_element() {
    let (code, out, _) = psyknot(&["search", "2"]);
    assert_eq!(code, 0);
    assert!(!out.is_empty());
}
