use std::io::Write;
use std::process::{Command, Output};

fn ske(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ske"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn temp_input(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

#[test]
fn solve_battle_of_the_sexes_csv() {
    let out = ske(&["solve", "--game", "1,5,3,1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let row = text.lines().nth(1).unwrap();
    assert_eq!(row, ",1,5,3,1,0.5,2.5,4,1.5,QuantumAdvantage");
}

#[test]
fn solve_prisoners_dilemma_json() {
    let out = ske(&["solve", "--game", "3,0,5,1", "--format", "json-lines"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["classical"]["payoff"], 3.0);
    assert_eq!(v["classical"]["strategies"]["kind"], "singleton");
    assert_eq!(v["quantum"]["payoff"], 3.0);
    assert_eq!(v["gap"], 0.0);
    assert_eq!(v["classification"], "Equal");
}

#[test]
fn solve_accepts_negative_payoffs() {
    let out = ske(&["solve", "--game", "-1,2,-3,0.5", "--format", "csv"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}

#[test]
fn malformed_game_exits_2() {
    let out = ske(&["solve", "--game", "1,2,3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn asymmetric_game_exits_3() {
    let f = temp_input("{\"bimatrix\":{\"a\":[[-14,-2],[-4,-12]],\"b\":[[15,-3],[0,12]]}}\n");
    let out = ske(&["solve", "--input", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("b01=-3 but a10=-4"), "{err}");
}

#[test]
fn compare_reports_bad_lines_and_continues() {
    let f = temp_input(
        "{\"symmetric\":[1,5,3,1],\"label\":\"bos\"}\nnot json\n{\"symmetric\":[3,0,5,1],\"label\":\"pd\"}\n",
    );
    let out = ske(&[
        "compare",
        "--input",
        f.path().to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    let rows: Vec<_> = text.lines().collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[1].starts_with("bos,") && rows[1].ends_with(",1.5,QuantumAdvantage"));
    assert!(rows[2].starts_with("pd,") && rows[2].ends_with(",0,Equal"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn sample_is_byte_reproducible() {
    let args = [
        "sample",
        "--n",
        "20000",
        "--seed",
        "11",
        "--format",
        "json-lines",
    ];
    let (a, b) = (ske(&args), ske(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["n"], 20000);
    assert_eq!(v["distribution"]["kind"], "uniform");
}

#[test]
fn sample_rejects_bad_bounds() {
    let out = ske(&["sample", "--n", "10", "--low", "1", "--high", "-1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let ok = ske(&["verify", "--n", "5", "--seed", "1"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let again = ske(&["verify", "--n", "5", "--seed", "1"]);
    assert_eq!(ok.stdout, again.stdout);
    let strict = ske(&["verify", "--n", "5", "--seed", "1", "--tol", "0"]);
    assert_eq!(strict.status.code(), Some(1));
}
