use std::process::{Command, Output};

fn immaculate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_immaculate"))
        .args(args)
        .env_remove("IMMACULATE_DIM_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn expand_skew() {
    let o = immaculate(&["expand", "6,4,3", "--skew", "2,4,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "+1·H[4,2] −1·H[3,1,2]\n");
}

#[test]
fn expand_show_matrix() {
    let o = immaculate(&["expand", "6,4,3", "--skew", "2,4,1", "--show-matrix"]);
    assert_eq!(stdout(&o), "4 3 7\n1 0 4\n-1 -2 2\n+1·H[4,2] −1·H[3,1,2]\n");
}

#[test]
fn expand_cancelling_pair_prints_zero() {
    let o = immaculate(&["expand", "9,5,5", "--skew", "2,5,6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn pad_extends_inner_with_zeros() {
    let short = immaculate(&["expand", "3,3", "--skew", "2"]);
    assert_eq!(short.status.code(), Some(3));
    let padded = immaculate(&["expand", "3,3", "--skew", "2", "--pad"]);
    assert_eq!(padded.status.code(), Some(0));
    assert_eq!(stdout(&padded), "−1·H[4] +1·H[1,3]\n");
}

#[test]
fn classify_lines() {
    let cases = [
        (["9,5,5", "2,5,6"], "ZERO_AFTER_CANCELLATION\n"),
        (["5,7,1,3", "5,5,5,1"], "ALL_ZERO_PRE_CANCELLATION\n"),
        (["6,4,3", "2,4,1"], "NONZERO_TERM_EXISTS 1->1,2->2,3->3\n"),
        (["3,3", "2,2"], "PROVABLY_NONZERO 1->1,2->2\n"),
    ];
    for ([a, b], want) in cases {
        let o = immaculate(&["classify", a, b]);
        assert_eq!(o.status.code(), Some(0), "{a}/{b}");
        assert_eq!(stdout(&o), want, "{a}/{b}");
    }
}

#[test]
fn exit_codes() {
    assert_eq!(immaculate(&["expand", "4,0"]).status.code(), Some(2));
    assert_eq!(immaculate(&["expand", "a,b"]).status.code(), Some(2));
    assert_eq!(immaculate(&["classify", "4", "1,2"]).status.code(), Some(3));
    assert_eq!(immaculate(&["enumerate", "--n", "20", "--len", "2"]).status.code(), Some(3));
    assert_eq!(immaculate(&["schur-check", "2,3", "--vars", "2"]).status.code(), Some(2));
    assert_eq!(immaculate(&["schur-check", "2,1", "--inner", "3", "--vars", "2"]).status.code(), Some(2));
    assert_eq!(immaculate(&["expand", "1,1,1,1,1,1,1,1,1,1,1"]).status.code(), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("missing").join("out.jsonl");
    let o = immaculate(&["enumerate", "--n", "3", "--len", "2", "--out", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn dim_cap_env_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_immaculate"))
        .args(["expand", "2,1,1"])
        .env("IMMACULATE_DIM_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_immaculate"))
        .args(["expand", "2,1"])
        .env("IMMACULATE_DIM_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn schur_check_match() {
    let o = immaculate(&["schur-check", "6,3,2", "--inner", "5,1", "--vars", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("MATCH\n"));
}

#[test]
fn enumerate_csv_to_stdout() {
    let o = immaculate(&["enumerate", "--n", "4", "--len", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("alpha,beta,class,certificate,terms,micros"));
    assert_eq!(lines.next(), Some("\"1,3\",\"1,3\",NONZERO_TERM_EXISTS,\"1->1,2->2\",1,"));
    assert_eq!(text.lines().count(), 10);
    assert_eq!(
        String::from_utf8(o.stderr).unwrap().trim(),
        "rows=9 ALL_ZERO_PRE_CANCELLATION=4 NONZERO_TERM_EXISTS=2 PROVABLY_NONZERO=3 ZERO_AFTER_CANCELLATION=0"
    );
}

#[test]
fn enumerate_is_deterministic_across_modes() {
    let dir = tempfile::tempdir().unwrap();
    let par = dir.path().join("par.jsonl");
    let seq = dir.path().join("seq.jsonl");
    let a = immaculate(&["enumerate", "--n", "7", "--len", "3", "--out", par.to_str().unwrap()]);
    let b = immaculate(&["enumerate", "--n", "7", "--len", "3", "--sequential", "--out", seq.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    assert_eq!(std::fs::read(&par).unwrap(), std::fs::read(&seq).unwrap());
    assert_eq!(stdout(&a), stdout(&b));
    let first = std::fs::read_to_string(&par).unwrap();
    let first = first.lines().next().unwrap();
    let v: serde_json::Value = serde_json::from_str(first).unwrap();
    assert_eq!(v["alpha"], "1,1,5");
    assert!(v["micros"].is_null());
}

#[test]
fn timing_fills_micros() {
    let o = immaculate(&["enumerate", "--n", "3", "--len", "2", "--timing"]);
    let line = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(line.lines().next().unwrap()).unwrap();
    assert!(v["micros"].is_u64());
}
