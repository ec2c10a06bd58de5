use std::fs;
use std::process::{Command, Output};

fn liecx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liecx"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn error_line(out: &Output) -> serde_json::Value {
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    serde_json::from_str(err.trim()).unwrap()
}

#[test]
fn generate_fibonacci_prefix() {
    let out = liecx(&["generate", "--cf", "2;(1)", "--len", "13"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0100101001001\n");
}

#[test]
fn generate_morphism_with_named_letters() {
    let out = liecx(&[
        "generate",
        "--morphism",
        "a->ab,b->ba",
        "--alphabet",
        "ab",
        "--seed-symbol",
        "a",
        "--len",
        "8",
    ]);
    assert_eq!(stdout(&out), "abbabaab\n");
}

#[test]
fn fibonacci_profile_rows() {
    let out = liecx(&[
        "profile",
        "--cf",
        "2;(1)",
        "--n",
        "0..20",
        "--methods",
        "bruteforce,rauzy,formula",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,p,delta_p,lie_bruteforce,lie_rauzy,lie_formula,bound_ok,case_tag")
    );
    // only the trailing case_tag column can hold commas
    let rows: Vec<Vec<&str>> = lines.map(|l| l.splitn(8, ',').collect()).collect();
    assert_eq!(rows.len(), 21);
    let expected = [
        1, 2, 2, 1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0,
    ];
    for (row, want) in rows.iter().zip(expected) {
        assert_eq!(row[3], want.to_string());
        assert_eq!(row[5], want.to_string());
        if row[0] != "0" {
            assert_eq!(row[4], want.to_string());
        }
    }
}

#[test]
fn formula_row_with_case_tag() {
    let out = liecx(&["formula", "--cf", "3;(2)", "--n", "4"]);
    assert_eq!(
        stdout(&out),
        "n,lie_formula,case_tag\n4,1,\"Semistandard(k=2,l=1)\"\n"
    );
    let out = liecx(&["formula", "--cf", "3;(2)", "--n", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v[0]["case_tag"], "Semistandard(k=2,l=1)");
}

#[test]
fn output_is_deterministic_and_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let out = liecx(&[
            "profile",
            "--cf",
            "2,3,1;(4,1)",
            "--n",
            "0..60",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty());
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn rauzy_dot_and_json() {
    let out = liecx(&["rauzy", "--cf", "2;(1)", "--n", "2"]);
    assert_eq!(
        stdout(&out),
        "digraph rauzy_2 {\n  v0 [label=\"0\"];\n  v1 [label=\"1\"];\n  \
         v0 -> v0 [label=\"00\", liecycle=0];\n  \
         v0 -> v1 [label=\"01\", liecycle=1];\n  \
         v1 -> v0 [label=\"10\", liecycle=1];\n}\n"
    );
    let out = liecx(&["rauzy", "--cf", "2;(1)", "--n", "1..4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    assert_eq!(v[3]["order"], 4);
}

#[test]
fn verify_reports_pass_on_word_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.txt");
    fs::write(&path, "abaababaabaababaababa\n").unwrap();
    let out = liecx(&[
        "verify",
        "--word-file",
        path.to_str().unwrap(),
        "--alphabet",
        "ab",
        "--n",
        "1..6",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout(&out).ends_with("PASS: 12 checks, 0 failed\n"));
}

#[test]
fn verify_sturmian_campaign() {
    let out = liecx(&[
        "verify", "--cf", "3;(2)", "--n", "1..30", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["check"] == "index-set"));
    assert!(checks.iter().any(|c| c["check"] == "closure"));
}

#[test]
fn exit_codes() {
    let out = liecx(&["formula", "--cf", "3,2", "--n", "0..30"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(error_line(&out)["error"], "digits_exhausted");

    let out = liecx(&[
        "profile",
        "--cf",
        "2;(1)",
        "--n",
        "40",
        "--prefix-cap",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(error_line(&out)["exit_code"], 4);

    for args in [
        &["profile", "--cf", "2;x", "--n", "3"][..],
        &["profile", "--n", "3"],
        &["profile", "--cf", "2;(1)", "--n", "5..2"],
        &["rauzy", "--cf", "2;(1)", "--n", "0..3"],
        &[
            "profile",
            "--morphism",
            "0->01,1->10",
            "--n",
            "2",
            "--methods",
            "formula",
        ],
        &["generate", "--cf", "2;(1)", "--len", "5", "--format", "dot"],
    ] {
        let out = liecx(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(error_line(&out)["exit_code"], 2);
    }

    let out = liecx(&[
        "generate",
        "--word-file",
        "/nonexistent/word.txt",
        "--len",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_line(&out)["error"], "io");
}
