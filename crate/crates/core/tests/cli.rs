use std::io::Write;
use std::process::{Command, Stdio};

use uast::cli::run;

fn run_cli(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut input = stdin.as_bytes();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(args.iter().copied(), &mut input, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn converts_stdin() {
    let (code, out, err) = run_cli(&["-f", "uast-io", "-t", "iast"], "praj/n//a/\n");
    assert_eq!((code, out.as_str(), err.as_str()), (0, "prajñā\n", ""));
}

#[test]
fn empty_input() {
    assert_eq!(run_cli(&["-f", "iast", "-t", "iast"], ""), (0, String::new(), String::new()));
}

#[test]
fn trailing_newline_preserved_only_if_present() {
    let (_, out, _) = run_cli(&["--from", "uast", "--to", "devanagari"], "kml");
    assert_eq!(out, "कमल");
    let (_, out, _) = run_cli(&["--from", "uast", "--to", "devanagari"], "kml\nk-\n");
    assert_eq!(out, "कमल\nक्\n");
}

#[test]
fn strict_error() {
    let (code, out, err) = run_cli(&["-f", "uast-io", "-t", "iast"], "/zz/\n");
    assert_eq!(code, 1);
    assert_eq!(out, "");
    assert_eq!(err, "1:1: unknown-key: /zz/\n");
}

#[test]
fn strict_keeps_good_lines() {
    let (code, out, err) = run_cli(&["-f", "uast", "-t", "iast"], "ka\nkf\nma\n");
    assert_eq!(code, 1);
    assert_eq!(out, "ka\nma\n");
    assert_eq!(err, "2:2: unknown-letter: f\n");
}

#[test]
fn lenient_passes_through() {
    let (code, out, err) = run_cli(&["-f", "uast-io", "-t", "iast", "--lenient"], "/zz/a\n");
    assert_eq!(code, 0);
    assert_eq!(out, "/zz/a\n");
    assert_eq!(err, "1:1: unknown-key: /zz/\n");
}

#[test]
fn compact_output() {
    let (_, out, _) = run_cli(&["-f", "devanagari", "-t", "uast", "--compact"], "कमल");
    assert_eq!(out, "kml");
}

#[test]
fn usage_errors() {
    let (code, _, err) = run_cli(&["-f", "hk", "-t", "iast"], "");
    assert_eq!(code, 2);
    assert!(err.contains("unknown scheme"), "{err}");
    assert_eq!(run_cli(&["-f", "iast"], "").0, 2);
    assert_eq!(run_cli(&["--bogus"], "").0, 2);
    assert_eq!(run_cli(&["--help"], "").0, 0);
}

#[test]
fn dump_tables() {
    let (code, out, _) = run_cli(&["--dump-tables"], "");
    assert_eq!(code, 0);
    assert_eq!(out, uast::tables::tables_tsv());
    assert!(out.lines().any(|l| l == "sl\t1E63\tṣ\tष"));
}

#[test]
fn files_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.txt");
    let output = dir.path().join("out.txt");
    std::fs::write(&input, "r/a/ma/h/\n").unwrap();
    let args = [
        "-f",
        "uast-io",
        "-t",
        "devanagari",
        "-i",
        input.to_str().unwrap(),
        "-o",
        output.to_str().unwrap(),
    ];
    assert_eq!(run_cli(&args, "").0, 0);
    assert_eq!(std::fs::read_to_string(&output).unwrap(), "रामः\n");

    let missing = dir.path().join("missing.txt");
    let (code, _, err) = run_cli(&["-f", "iast", "-t", "uast", "-i", missing.to_str().unwrap()], "");
    assert_eq!(code, 1);
    assert!(err.starts_with("uast: "), "{err}");
}

#[test]
fn binary_rejects_invalid_utf8() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_uast"))
        .args(["-f", "iast", "-t", "devanagari"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"rama\nr\xc3ma\n").unwrap();
    let output = child.wait_with_output().unwrap();
    assert_eq!(output.status.code(), Some(1));
    let err = String::from_utf8(output.stderr).unwrap();
    assert!(err.contains("invalid UTF-8 at byte 6"), "{err}");
    assert_eq!(String::from_utf8(output.stdout).unwrap(), "रम\n");
}
