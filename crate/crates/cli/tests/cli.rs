//! End-to-end tests of the `flatcat` binary: output shapes, determinism,
//! and the exit-code contract (0 ok, 1 domain, 2 usage, 3 verify failure).

use std::process::{Command, Output};

fn flatcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flatcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = flatcat(args);
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    flatcat(args).status.code().expect("no signal")
}

#[test]
fn count_matches_closed_form() {
    assert_eq!(stdout(&["count", "--n", "10"]), "9842\n");
    assert_eq!(stdout(&["count", "--n", "1"]), "1\n");
    assert_eq!(
        stdout(&["count", "--n", "60"]),
        "7065193045869367252382405534\n"
    );
}

#[test]
fn enumerate_streams_lexicographically() {
    let out = stdout(&["enumerate", "--n", "4"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 14);
    assert_eq!(lines[0], "0,0,0,0");
    assert_eq!(lines[13], "0,1,2,3");
    let mut sorted = lines.clone();
    sorted.sort();
    assert_eq!(lines, sorted);

    let weak = stdout(&["enumerate", "--n", "3", "--weakly-increasing"]);
    assert_eq!(weak, "0,0,0\n0,0,1\n0,1,1\n0,1,2\n");
}

#[test]
fn stats_single_word_and_single_statistic() {
    assert_eq!(
        stdout(&["stats", "--word", "012230123122", "--stat", "runs"]),
        "5\n"
    );
    assert_eq!(
        stdout(&[
            "stats",
            "--word",
            "0122200122322334544",
            "--stat",
            "ell-peak",
            "--ell",
            "3"
        ]),
        "1\n"
    );
}

#[test]
fn stats_distribution_mode() {
    let out = stdout(&["stats", "--n", "4", "--stat", "runs", "--format", "csv"]);
    assert_eq!(out, "k,count\n1,1\n2,6\n3,6\n4,1\n");
    let json = stdout(&[
        "stats", "--n", "6", "--stat", "ell-val", "--ell", "2", "--format", "json",
    ]);
    assert!(json.contains("\"counts\": [\"115\", \"7\"]"), "{json}");
}

#[test]
fn triangle_formats() {
    let csv = stdout(&[
        "triangle", "--stat", "runs", "--max-n", "4", "--format", "csv",
    ]);
    assert!(csv.starts_with("n,k,count\n"));
    assert!(csv.contains("4,3,6\n"));
    let md = stdout(&[
        "triangle", "--stat", "peak", "--max-n", "4", "--format", "markdown",
    ]);
    assert!(md.lines().next().unwrap().starts_with("| n \\ k |"));
    let json = stdout(&[
        "triangle", "--stat", "val", "--max-n", "7", "--max-k", "2", "--format", "json",
    ]);
    assert!(json.contains("\"stat\": \"val\""));
    assert!(json.contains("\"193\""));
}

#[test]
fn totals_formats() {
    let text = stdout(&["totals", "--stat", "druns", "--max-n", "5"]);
    assert_eq!(text, "1 1\n2 4\n3 14\n4 50\n5 179\n");
    let csv = stdout(&[
        "totals", "--stat", "symp", "--max-n", "7", "--format", "csv",
    ]);
    assert!(csv.ends_with("7,230\n"));
    let json = stdout(&[
        "totals", "--stat", "ell-val", "--ell", "2", "--max-n", "7", "--format", "json",
    ]);
    assert!(
        json.contains("\"totals\": [\"0\", \"0\", \"0\", \"0\", \"1\", \"7\", \"34\"]"),
        "{json}"
    );
}

#[test]
fn coeffs_routes_agree() {
    assert_eq!(
        stdout(&["coeffs", "--stat", "runs", "--n", "7", "--k", "4"]),
        "141\n"
    );
    assert_eq!(
        stdout(&["coeffs", "--stat", "runs", "--n", "7", "--k", "4", "--route", "formula"]),
        "141\n"
    );
    // no published per-cell formula for symmetric peaks
    assert_eq!(
        exit_code(&["coeffs", "--stat", "symp", "--n", "5", "--k", "1", "--route", "formula"]),
        1
    );
}

#[test]
fn bijections_round_trip_through_text() {
    assert_eq!(
        stdout(&["bijection", "--which", "ocp", "--word", "0,1,1,2,0,1,2,0"]),
        "{1,2}{6}{4,5,7}{3,8}\n"
    );
    let comp = stdout(&["bijection", "--which", "comp", "--word", "01"]);
    assert_eq!(comp, "2\n");
    assert_eq!(
        stdout(&["bijection", "--which", "comp-inv", "--composition", "2"]),
        "0,1\n"
    );
    assert_eq!(
        stdout(&["bijection", "--which", "phi", "--word", "00"]),
        "0,1\n"
    );
    let dotted = stdout(&[
        "bijection",
        "--which",
        "dotted",
        "--dotted",
        "10100.1010.0110.01.0110.0.00",
    ]);
    assert_eq!(
        dotted,
        "0,1,1,2,2,2,3,4,4,5,5,2,2,3,4,4,5,5,6,4,4,5,6,6,7,7,6,6,6\n"
    );
}

#[test]
fn render_ascii_and_svg() {
    assert_eq!(stdout(&["render", "--word", "010"]), "  _\n_| |_\n");
    let svg = stdout(&[
        "render",
        "--word",
        "010",
        "--format",
        "svg",
        "--highlight",
        "2",
    ]);
    assert!(svg.starts_with("<svg xmlns="));
    assert!(svg.contains("stroke=\"red\""));
}

#[test]
fn verify_single_statistic_exits_zero() {
    let out = stdout(&["verify", "--stat", "wruns", "--max-n", "6"]);
    assert!(out.contains("summary: GREEN"));
    let json = stdout(&[
        "verify", "--stat", "peak", "--max-n", "5", "--format", "json",
    ]);
    assert!(json.contains("\"passed\": true"));
}

#[test]
fn exit_codes() {
    // domain errors
    assert_eq!(exit_code(&["count", "--n", "0"]), 1);
    assert_eq!(exit_code(&["stats", "--word", "021"]), 1);
    assert_eq!(exit_code(&["stats", "--word", "0,x"]), 1);
    assert_eq!(
        exit_code(&["bijection", "--which", "comp", "--word", "012321"]),
        1
    );
    assert_eq!(
        exit_code(&["bijection", "--which", "comp-inv", "--composition", "1,0"]),
        1
    );
    assert_eq!(exit_code(&["stats", "--n", "25", "--stat", "runs"]), 1);
    assert_eq!(
        exit_code(&["render", "--word", "010", "--highlight", "9"]),
        1
    );
    // usage errors
    assert_eq!(exit_code(&["stats", "--word", "010", "--stat", "area"]), 2);
    assert_eq!(
        exit_code(&["triangle", "--stat", "ell-val", "--max-n", "4"]),
        2
    );
    assert_eq!(
        exit_code(&["triangle", "--stat", "runs", "--max-n", "4", "--format", "svg"]),
        2
    );
    assert_eq!(
        exit_code(&["render", "--word", "010", "--format", "png"]),
        2
    );
    assert_eq!(
        exit_code(&["bijection", "--which", "trees", "--word", "0"]),
        2
    );
    assert_eq!(exit_code(&["stats", "--word", "010", "--n", "4"]), 2);
    assert_eq!(exit_code(&["no-such-command"]), 2);
    assert_eq!(
        exit_code(&["stats", "--word", "010", "--stat", "runs", "--ell", "2"]),
        2
    );
}

#[test]
fn output_is_deterministic() {
    let a = stdout(&[
        "triangle", "--stat", "symv", "--max-n", "8", "--format", "json",
    ]);
    let b = stdout(&[
        "triangle", "--stat", "symv", "--max-n", "8", "--format", "json",
    ]);
    assert_eq!(a, b);
}
