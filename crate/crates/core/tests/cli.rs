mod common;

use std::fs;
use std::path::Path;
use std::process::Command;

use common::data_dir;
use serde_json::Value as Json;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["enumorder"];
    argv.extend_from_slice(args);
    let code = enumorder::cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn data(rel: &str) -> String {
    data_dir().join(rel).to_string_lossy().into_owned()
}

fn json(text: &str) -> Json {
    serde_json::from_str(text).unwrap()
}

#[test]
fn uniform_doubling_and_successor() {
    let (code, out, _) = run(&[
        "uniform",
        &data("listings/doubling.txt"),
        &data("listings/successor.txt"),
    ]);
    assert_eq!(code, 0);
    let report = json(&out);
    assert_eq!(report["verdict"]["kind"], "Uniform");
    assert_eq!(report["verdict"]["compared_length"], 5);
}

#[test]
fn uniform_reports_witness() {
    let (code, out, err) = run(&[
        "uniform",
        &data("listings/seven_first.txt"),
        &data("listings/six_first.txt"),
    ]);
    assert_eq!(code, 1);
    let report = json(&out);
    assert_eq!(report["verdict"]["kind"], "NotUniform");
    assert_eq!(report["verdict"]["witness"], serde_json::json!([1, 2]));
    assert!(err.contains("(1, 2)"));
}

#[test]
fn uniform_is_reflexive() {
    for f in ["doubling.txt", "seven_first.txt", "zigzag.txt"] {
        let p = data(&format!("listings/{f}"));
        assert_eq!(run(&["uniform", &p, &p]).0, 0, "{f}");
    }
}

#[test]
fn uniform_input_errors() {
    let (code, _, err) = run(&[
        "uniform",
        "/nonexistent/a.txt",
        &data("listings/doubling.txt"),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("/nonexistent/a.txt"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "1\n2\nx\n").unwrap();
    let (code, _, err) = run(&[
        "uniform",
        bad.to_str().unwrap(),
        &data("listings/doubling.txt"),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("bad.txt") && err.contains("line 3"), "{err}");

    assert_eq!(run(&["uniform", &data("listings/doubling.txt")]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn uniform_type2() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    let b = dir.path().join("b.txt");
    fs::write(&a, "100\n2\n4\n6\n8\n").unwrap();
    fs::write(&b, "1\n3\n5\n7\n").unwrap();
    let (a, b) = (a.to_str().unwrap(), b.to_str().unwrap());

    let (code, out, _) = run(&[
        "uniform",
        a,
        b,
        "--type2",
        "--max-m",
        "3",
        "--max-n",
        "3",
        "--min-overlap",
        "3",
    ]);
    assert_eq!(code, 0);
    let report = json(&out);
    assert_eq!(
        report["type2"],
        serde_json::json!({"m": 1, "n": 0, "overlap": 4})
    );
    assert_eq!(report["verdict"]["kind"], "NotUniform");

    let (code, out, _) = run(&[
        "uniform",
        a,
        b,
        "--type2",
        "--max-m",
        "0",
        "--max-n",
        "3",
        "--min-overlap",
        "3",
    ]);
    assert_eq!(code, 1);
    assert!(json(&out)["type2"].is_null());

    // min-overlap has no default
    assert_eq!(run(&["uniform", a, b, "--type2"]).0, 2);
    assert_eq!(run(&["uniform", a, b, "--min-overlap", "2"]).0, 2);
}

#[test]
fn tobst_emits() {
    let asc = data("listings/doubling.txt");
    let (code, out, _) = run(&["tobst", &asc]);
    assert_eq!(code, 0);
    let report = json(&out);
    assert_eq!(report["spine_kind"], "RightSpine");
    assert_eq!(report["size"], 5);
    assert_eq!(report["shape"], "(,(,(,(,(,)))))");

    let (code, out, _) = run(&["tobst", &data("listings/zigzag.txt"), "--emit", "dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
    assert_eq!(
        out.matches("[label=\"").count() - out.matches(" -> ").count(),
        5
    );

    let (_, out, _) = run(&[
        "tobst",
        &data("listings/zigzag.txt"),
        "--emit",
        "shape",
        "--step",
        "3",
    ]);
    assert_eq!(out, "(,((,),))\n");

    assert_eq!(run(&["tobst", &asc, "--step", "6"]).0, 2);
    assert_eq!(run(&["tobst", &asc, "--emit", "svg"]).0, 2);
}

#[test]
fn tobst_empty_listing() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.txt");
    fs::write(&empty, "").unwrap();
    let (code, out, _) = run(&["tobst", empty.to_str().unwrap()]);
    assert_eq!(code, 0);
    let report = json(&out);
    assert_eq!(report["size"], 0);
    assert_eq!(report["shape"], "");
    assert_eq!(report["spine_kind"], "Both");
}

fn corpus(files: &[(&str, &str)]) -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    for (name, body) in files {
        fs::write(dir.path().join(name), body).unwrap();
    }
    dir
}

#[test]
fn classify_groups() {
    let dir = corpus(&[("h.txt", "2\n4\n6\n8\n10\n"), ("g.txt", "2\n3\n4\n5\n6\n")]);
    let (code, out, _) = run(&[
        "classify",
        dir.path().to_str().unwrap(),
        "--prefix-len",
        "5",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        json(&out),
        serde_json::json!({"1,2,3,4,5": ["g.txt", "h.txt"]})
    );

    let dir = corpus(&[
        ("h1.txt", "7\n2\n5\n6\n14\n"),
        ("h2.txt", "6\n8\n1\n2\n5\n"),
    ]);
    let (code, out, _) = run(&[
        "classify",
        dir.path().to_str().unwrap(),
        "--prefix-len",
        "5",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        json(&out),
        serde_json::json!({"4,1,2,3,5": ["h1.txt"], "4,5,1,2,3": ["h2.txt"]})
    );

    let dir = corpus(&[("only.txt", "3\n1\n")]);
    let (_, out, _) = run(&[
        "classify",
        dir.path().to_str().unwrap(),
        "--prefix-len",
        "2",
    ]);
    assert_eq!(json(&out), serde_json::json!({"2,1": ["only.txt"]}));
}

#[test]
fn classify_errors() {
    let dir = corpus(&[("long.txt", "1\n2\n3\n"), ("short.txt", "1\n")]);
    let (code, _, err) = run(&[
        "classify",
        dir.path().to_str().unwrap(),
        "--prefix-len",
        "2",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("short.txt"));

    let empty = tempfile::tempdir().unwrap();
    assert_eq!(
        run(&[
            "classify",
            empty.path().to_str().unwrap(),
            "--prefix-len",
            "1"
        ])
        .0,
        2
    );
    assert_eq!(
        run(&["classify", "/nonexistent-dir", "--prefix-len", "1"]).0,
        2
    );
}

#[test]
fn enumerate_writes_listing_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("evens.txt");
    let (code, stdout, err) = run(&[
        "enumerate",
        &data("programs/evens.rm"),
        "--steps",
        "1000",
        "--cap",
        "5",
        "--output",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    assert!(err.is_empty());
    assert_eq!(fs::read_to_string(&out_path).unwrap(), "2\n4\n6\n8\n10\n");

    let (code, stdout, _) = run(&[
        "enumerate",
        &data("programs/evens.rm"),
        "--steps",
        "0",
        "--cap",
        "5",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "");
}

#[test]
fn enumerate_verbose_and_dovetail() {
    let (code, stdout, err) = run(&[
        "enumerate",
        &data("programs/odds.rm"),
        "--steps",
        "1000",
        "--cap",
        "4",
        "--dovetail",
        &data("programs/evens.rm"),
        "--slice",
        "3",
        "--verbose",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "1\n2\n3\n4\n");
    let run_record = json(err.trim());
    assert_eq!(run_record["program"], "odds+evens");
    assert_eq!(run_record["listing"], serde_json::json!([1, 2, 3, 4]));
    assert_eq!(run_record["halted"], false);
}

#[test]
fn enumerate_bad_program() {
    let (code, _, err) = run(&[
        "enumerate",
        &data("programs/bad_jump.rm"),
        "--steps",
        "10",
        "--cap",
        "5",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("instruction 2"), "{err}");
}

#[test]
fn json_output_is_sorted_and_stable() {
    let args = ["tobst", &data("listings/seven_first.txt") as &str];
    let (_, a, _) = run(&args);
    let (_, b, _) = run(&args);
    assert_eq!(a, b);
    assert!(!a.contains('\r'));
    let keys: Vec<&str> = a
        .lines()
        .filter_map(|l| l.trim().strip_prefix('"'))
        .filter_map(|l| l.split('"').next())
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_enumorder");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&[
        "uniform",
        &data("listings/doubling.txt"),
        &data("listings/successor.txt"),
    ]);
    assert_eq!(ok.status.code(), Some(0));
    let no = status(&[
        "uniform",
        &data("listings/seven_first.txt"),
        &data("listings/six_first.txt"),
    ]);
    assert_eq!(no.status.code(), Some(1));
    let bad = status(&["uniform", "missing.txt", "missing.txt"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(Path::new(bin).exists());
}
