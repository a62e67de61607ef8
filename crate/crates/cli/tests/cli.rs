use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_domipoly"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn poly_of_petersen() {
    let o = run(&["poly", "--petersen"], "");
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o),
        "x^10 + 10x^9 + 45x^8 + 120x^7 + 200x^6 + 192x^5 + 75x^4 + 10x^3\n"
    );
}

#[test]
fn poly_detects_formats() {
    assert_eq!(stdout(&run(&["poly"], "C~\n")), "x^4 + 4x^3 + 6x^2 + 4x\n");
    assert_eq!(stdout(&run(&["poly"], ">>graph6<<C~\n")), "x^4 + 4x^3 + 6x^2 + 4x\n");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty5.el");
    std::fs::write(&path, "5\n").unwrap();
    assert_eq!(stdout(&run(&["poly", path.to_str().unwrap()], "")), "x^5\n");
    let path = dir.path().join("two.g6");
    std::fs::write(&path, "C~\n@\n").unwrap();
    assert_eq!(stdout(&run(&["poly", path.to_str().unwrap()], "")), "x^4 + 4x^3 + 6x^2 + 4x\nx\n");
}

#[test]
fn poly_output_formats() {
    let json = stdout(&run(&["poly", "--output", "json"], "C~"));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["coeff"], serde_json::json!([0, 4, 6, 4, 1]));
    let table = stdout(&run(&["poly", "--output", "table"], "C~"));
    assert_eq!(table, "i\td(G,i)\n0\t0\n1\t4\n2\t6\n3\t4\n4\t1\n");
    let forced = run(&["poly", "--format", "edgelist"], "C~");
    assert_eq!(code(&forced), 2);
}

#[test]
fn input_errors_exit_two() {
    let o = run(&["poly"], "3\n1 4\n");
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
    assert_eq!(code(&run(&["poly", "--format", "graph6"], "Bh\n")), 2);
    assert_eq!(code(&run(&["poly", "/nonexistent/file"], "")), 2);
    assert_eq!(code(&run(&["poly"], "")), 2);
}

#[test]
fn capacity_exits_three() {
    let o = run(&["poly"], "40\n");
    assert_eq!(code(&o), 3);
    assert_eq!(code(&run(&["catalog", "-n", "20", "-k", "3"], "")), 3);
}

#[test]
fn gamma_sets() {
    let p = stdout(&run(&["gamma", "--petersen"], ""));
    let mut lines = p.lines();
    assert_eq!(lines.next(), Some("gamma=3, count=10"));
    assert_eq!(lines.count(), 10);
    assert!(stdout(&run(&["gamma"], "C~")).starts_with("gamma=1, count=4\n{1}\n"));
    let c5 = stdout(&run(&["gamma"], "5\n1 2\n2 3\n3 4\n4 5\n5 1\n"));
    assert_eq!(c5, "gamma=2, count=5\n{1, 3}\n{1, 4}\n{2, 4}\n{2, 5}\n{3, 5}\n");
}

#[test]
fn catalog_generation() {
    let six = run(&["catalog", "-n", "6", "-k", "3"], "");
    assert_eq!(code(&six), 0);
    assert_eq!(stdout(&six).lines().count(), 2);
    assert_eq!(code(&run(&["catalog", "-n", "5", "-k", "3"], "")), 2);
    let g6 = stdout(&run(&["catalog", "-n", "4", "-k", "3", "--graph6"], ""));
    assert_eq!(g6, "C~\n");
}

fn write_cubic_ten(dir: &Path) -> String {
    let path = dir.join("cubic10.jsonl");
    let o = run(&["catalog", "-n", "10", "-k", "3", "-o", path.to_str().unwrap()], "");
    assert_eq!(code(&o), 0);
    assert!(String::from_utf8_lossy(&o.stderr).contains("discrepancy: G9"));
    path.to_str().unwrap().to_string()
}

#[test]
fn cubic_ten_catalog_and_classes() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_cubic_ten(dir.path());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 21);
    assert!(text.contains("\"paper_name\":\"G17\""));

    let table = stdout(&run(&["classify", &path], ""));
    assert!(table.ends_with("21 graphs, 18 classes, 15 singletons\n"), "{table}");
    let json = stdout(&run(&["classify", "--json", &path], ""));
    let classes: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    assert_eq!(classes.iter().filter(|c| c["members"].as_array().unwrap().len() == 2).count(), 3);

    let eight = dir.path().join("cubic8.jsonl");
    run(&["catalog", "-n", "8", "-k", "3", "-o", eight.to_str().unwrap()], "");
    let table = stdout(&run(&["classify", eight.to_str().unwrap()], ""));
    assert!(table.ends_with("6 graphs, 6 classes, 6 singletons\n"), "{table}");

    let one = dir.path().join("one.jsonl");
    std::fs::write(&one, text.lines().next().unwrap()).unwrap();
    assert!(stdout(&run(&["classify", one.to_str().unwrap()], "")).ends_with("1 graphs, 1 classes, 1 singletons\n"));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["catalog", "-n", "10", "-k", "3"], "");
    let b = run(&["catalog", "-n", "10", "-k", "3"], "");
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stderr, b.stderr);
}

// The ledger reports the stated values that the computed catalog does not
// reproduce, so the command exits 4 on a correct build.
#[test]
fn verify_reports_ledger() {
    let o = run(&["verify-paper"], "");
    assert_eq!(code(&o), 4);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with('[')).count(), 13);
    assert!(text.contains("[PASS]  1 Petersen polynomial"));
    assert!(text.contains("[FAIL]  7"));

    let json = run(&["verify-paper", "--json"], "");
    let ledger: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(ledger["results"].as_array().unwrap().len(), 13);
    assert_eq!(ledger["results"][0]["status"], "PASS");
}

#[test]
fn verify_with_catalog_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_cubic_ten(dir.path());
    let with_file = run(&["verify-paper", "--catalog", &path], "");
    let fresh = run(&["verify-paper"], "");
    assert_eq!(with_file.stdout, fresh.stdout);

    let corrupt = dir.path().join("corrupt.jsonl");
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&corrupt, text.replacen("\"t\":0", "\"t\":3", 1)).unwrap();
    let o = run(&["verify-paper", "--catalog", corrupt.to_str().unwrap()], "");
    assert_eq!(code(&o), 4);
    assert!(stdout(&o).starts_with("[FAIL] catalog: line"), "{}", stdout(&o));

    let short = dir.path().join("short.jsonl");
    std::fs::write(&short, text.lines().skip(1).collect::<Vec<_>>().join("\n")).unwrap();
    let o = run(&["verify-paper", "--catalog", short.to_str().unwrap()], "");
    assert_eq!(code(&o), 4);
    assert!(stdout(&o).contains("supplied catalog: missing"), "{}", stdout(&o));
}

#[test]
fn usage_errors() {
    assert_eq!(code(&run(&["poly", "--bogus"], "")), 2);
    assert_eq!(code(&run(&["poly", "--petersen", "file"], "")), 2);
}
