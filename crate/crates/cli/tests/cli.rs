use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("data");
    p.push(name);
    p.display().to_string()
}

fn pmas(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pmas"))
        .args(args)
        .env_remove("PMAS_MAX_PLAYERS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn analyze_market() {
    let o = pmas(&["analyze", &data("example3.matrix")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("tau          [2,1,4,1]"), "{out}");
    assert!(out.contains("nucleolus    [7/3,2/3,13/3,2/3]"), "{out}");
    assert!(out.contains("blocks       not-admissible"), "{out}");
}

#[test]
fn analyze_veto_game_and_zero_matrix() {
    let out = stdout(&pmas(&["analyze", &data("example1.game")]));
    assert!(out.contains("tau          [16/5,6/5,8/5,2]"), "{out}");
    assert!(out.contains("nucleolus    [7/2,4/3,4/3,11/6]"), "{out}");
    let o = pmas(&["analyze", &data("zero.matrix")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("blocks       admissible"), "{out}");
    assert!(out.contains("nucleolus    [0,0,0,0,0]"), "{out}");
}

#[test]
fn json_report_is_deterministic_and_exact() {
    let a = pmas(&["analyze", "--json", &data("example3.matrix")]);
    let b = pmas(&["analyze", "--json", &data("example3.matrix")]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["tau"]["kappa"], "1/2");
    assert_eq!(v["nucleolus"][2], "13/3");
    assert_eq!(v["blocks"]["verdict"], "not-admissible");
}

#[test]
fn check_reports_the_witness() {
    let o = pmas(&["pmas", "check", &data("example3.matrix")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("6 < 3 + 5"));
    assert_eq!(code(&pmas(&["pmas", "check", &data("gamma.matrix")])), 0);
}

#[test]
fn oracle_verdicts() {
    let o = pmas(&[
        "pmas",
        "oracle",
        &data("example1.game"),
        "--point",
        "1,2,2,3",
    ]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "infeasible\n");
    let o = pmas(&[
        "pmas",
        "oracle",
        &data("example1.game"),
        "--point",
        "8,0,0,0",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("feasible\nS=1 -> 0\n"));
    let o = pmas(&[
        "pmas",
        "oracle",
        &data("example1.game"),
        "--point",
        "0,0,0,8",
    ]);
    assert_eq!(code(&o), 4);
    assert_eq!(
        code(&pmas(&["pmas", "oracle", &data("example3.matrix")])),
        1
    );
}

#[test]
fn build_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("gamma.scheme");
    let file = file.to_str().unwrap();
    let vertices = stdout(&pmas(&["core", "vertices", &data("gamma.matrix")]));
    let row_opt = vertices
        .lines()
        .next()
        .unwrap()
        .split_whitespace()
        .nth(1)
        .unwrap();
    let point = row_opt.trim_matches(['[', ']']);
    let o = pmas(&[
        "pmas",
        "build",
        &data("gamma.matrix"),
        "--point",
        point,
        "--output",
        file,
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let o = pmas(&["pmas", "verify", &data("gamma.matrix"), "--scheme", file]);
    assert_eq!((code(&o), stdout(&o)), (0, "valid\n".to_string()));

    let text = std::fs::read_to_string(file).unwrap();
    std::fs::write(file, text.replace("S=1,4 -> 5,4", "S=1,4 -> 6,3")).unwrap();
    let o = pmas(&["pmas", "verify", &data("gamma.matrix"), "--scheme", file]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("invalid: "), "{}", stdout(&o));
}

#[test]
fn build_refusals() {
    let o = pmas(&[
        "pmas",
        "build",
        &data("example3.matrix"),
        "--point",
        "2,1,4,1",
    ]);
    assert_eq!(code(&o), 1);
    let o = pmas(&[
        "pmas",
        "build",
        &data("gamma.matrix"),
        "--point",
        "9,0,0,0,0,0",
    ]);
    assert_eq!(code(&o), 4);
    assert!(String::from_utf8_lossy(&o.stderr).contains("{2,4}"));
}

#[test]
fn solution_commands() {
    assert_eq!(
        stdout(&pmas(&["shapley", &data("example3.matrix")])),
        "shapley [7/3,4/3,10/3,1]\n"
    );
    let out = stdout(&pmas(&["tau", &data("example1.game")]));
    assert!(out.contains("kappa    2/5"), "{out}");
    let out = stdout(&pmas(&["nucleolus", &data("example1.game")]));
    assert!(
        out.starts_with("nucleolus [7/2,4/3,4/3,11/6]\nt=4/3 "),
        "{out}"
    );
    let o = pmas(&[
        "core",
        "contains",
        &data("example3.matrix"),
        "--point",
        "2,1,4,1",
    ]);
    assert_eq!((code(&o), stdout(&o)), (0, "in core\n".to_string()));
    let o = pmas(&[
        "core",
        "contains",
        &data("example3.matrix"),
        "--point",
        "4,1,2,1",
    ]);
    assert_eq!(code(&o), 1);
}

#[test]
fn input_errors_and_limits() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.matrix");
    std::fs::write(&bad, "1 2\n3 4/0\n").unwrap();
    let o = pmas(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad.matrix:2:3:"));

    let renamed = dir.path().join("market.txt");
    std::fs::write(&renamed, "6 3\n5 0\n").unwrap();
    assert_eq!(code(&pmas(&["analyze", renamed.to_str().unwrap()])), 2);
    assert_eq!(
        code(&pmas(&[
            "analyze",
            "--format",
            "matrix",
            renamed.to_str().unwrap()
        ])),
        0
    );

    let wide = dir.path().join("wide.matrix");
    std::fs::write(&wide, format!("{}\n", ["1"; 17].join(" "))).unwrap();
    assert_eq!(code(&pmas(&["analyze", wide.to_str().unwrap()])), 3);
    let o = Command::new(env!("CARGO_BIN_EXE_pmas"))
        .args(["tau", wide.to_str().unwrap()])
        .env("PMAS_MAX_PLAYERS", "18")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let too_many = dir.path().join("huge.matrix");
    std::fs::write(&too_many, format!("{}\n", ["1"; 21].join(" "))).unwrap();
    assert_eq!(code(&pmas(&["analyze", too_many.to_str().unwrap()])), 3);
    let eleven = dir.path().join("eleven.matrix");
    std::fs::write(&eleven, format!("{}\n", ["1"; 10].join(" "))).unwrap();
    assert_eq!(
        code(&pmas(&["pmas", "oracle", eleven.to_str().unwrap()])),
        3
    );
}

#[test]
fn verify_paper_goldens_only() {
    let o = pmas(&["verify-paper", "--instances", "0"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 4);
}

#[test]
fn verify_paper_random_suites_pass() {
    let o = pmas(&["verify-paper", "--seed", "7", "--instances", "100"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("pass")));
    let again = pmas(&["verify-paper", "--seed", "7", "--instances", "100"]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn injected_mutant_is_caught() {
    let o = pmas(&["verify-paper", "--instances", "5", "--inject-mutant"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    let line = out
        .lines()
        .find(|l| l.starts_with("FAIL  classifier vs LP, exhaustive"))
        .unwrap();
    assert!(line.contains("matrix [["), "{line}");
}
