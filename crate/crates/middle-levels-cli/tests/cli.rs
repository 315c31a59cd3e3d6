//! End-to-end tests of the binary: exact bytes, exit codes, pipelines.

use std::io::Write;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_middle-levels");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().expect("binary finishes")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn generate_smallest_instance_exact_bytes() {
    let out = run(&["generate", "--n", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "100\n110\n010\n011\n001\n101\n");
}

#[test]
fn generate_rejects_n_zero() {
    let out = run(&["generate", "--n", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_closed_repeats_start() {
    let out = run(&["generate", "--n", "1", "--closed"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[0], lines[6]);
}

#[test]
fn generate_closed_conflicts_with_flips() {
    let out = run(&["generate", "--n", "1", "--closed", "--format", "flips"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--closed"));
}

#[test]
fn generate_respects_cap_and_override() {
    let out = run(&["generate", "--n", "11"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("size limit"));
    // an override below the default is honored too
    let out = run(&["generate", "--n", "3", "--max-n-override", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["generate", "--n", "2", "--max-n-override", "2"]);
    assert!(out.status.success());
}

#[test]
fn flips_replay_to_bits() {
    let bits = stdout(&run(&["generate", "--n", "3"]));
    let flips = stdout(&run(&["generate", "--n", "3", "--format", "flips"]));
    let vertices: Vec<&str> = bits.lines().collect();
    let positions: Vec<usize> = flips.lines().map(|l| l.parse().unwrap()).collect();
    assert_eq!(positions.len(), 70);
    let mut cur: Vec<u8> = vertices[0].bytes().collect();
    let mut replayed = Vec::new();
    for p in positions {
        replayed.push(String::from_utf8(cur.clone()).unwrap());
        cur[p - 1] = if cur[p - 1] == b'0' { b'1' } else { b'0' };
    }
    assert_eq!(replayed, vertices);
    assert_eq!(String::from_utf8(cur).unwrap(), vertices[0]);
}

#[test]
fn generate_verify_pipeline_passes() {
    for n in ["1", "2", "3", "4"] {
        let cycle = stdout(&run(&["generate", "--n", n]));
        let out = run_with_stdin(&["verify", "--n", n], &cycle);
        assert!(out.status.success(), "n={n}: {}", stdout(&out));
        assert!(stdout(&out).ends_with("pass true\n"));
    }
}

#[test]
fn closed_generate_verifies_with_closed_flag() {
    let cycle = stdout(&run(&["generate", "--n", "2", "--closed"]));
    let out = run_with_stdin(&["verify", "--n", "2", "--closed"], &cycle);
    assert!(out.status.success());
    // without the flag the repeated start vertex counts as a duplicate
    let out = run_with_stdin(&["verify", "--n", "2"], &cycle);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_fails_on_truncated_cycle() {
    let cycle = stdout(&run(&["generate", "--n", "2"]));
    let truncated: String =
        cycle.lines().take(19).map(|l| format!("{l}\n")).collect();
    let out = run_with_stdin(&["verify", "--n", "2"], &truncated);
    assert_eq!(out.status.code(), Some(1));
    let report = stdout(&out);
    assert!(report.contains("vertex_count 19"));
    assert!(report.contains("expected_count 20"));
    assert!(report.contains("pass false"));
}

#[test]
fn verify_rejects_malformed_input_with_line_number() {
    let out = run_with_stdin(&["verify", "--n", "2"], "11000\n11x10\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"));
    let out = run_with_stdin(&["verify", "--n", "2"], "11000\n11110\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"));
}

#[test]
fn sigma_prints_space_separated_positions() {
    let out = run(&["sigma", "110100"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "6 1 3 2 1 3 5 4 3 5\n");
}

#[test]
fn sigma_validates_input() {
    assert_eq!(run(&["sigma", "1101"]).status.code(), Some(2));
    assert_eq!(run(&["sigma", "110100", "--n", "2"]).status.code(), Some(2));
    assert!(run(&["sigma", "110100", "--n", "3"]).status.success());
}

#[test]
fn matching_maps_stdin_lines() {
    let out = run_with_stdin(&["matching", "--n", "3", "--map", "M"], "1101000\n");
    assert_eq!(stdout(&out), "1101010\n");
    let out = run_with_stdin(&["matching", "--n", "3", "--map", "N"], "1101000\n");
    assert_eq!(stdout(&out), "1101001\n");
    let out = run_with_stdin(&["matching", "--n", "3", "--map", "Minv"], "1101010\n");
    assert_eq!(stdout(&out), "1101000\n");
    let out = run_with_stdin(&["matching", "--n", "3", "--map", "Ninv"], "1101001\n");
    assert_eq!(stdout(&out), "1101000\n");
}

#[test]
fn matching_rejects_bad_lines() {
    let out = run_with_stdin(&["matching", "--n", "3", "--map", "M"], "1101000\n110\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2"));
    // wrong weight for the chosen map
    let out = run_with_stdin(&["matching", "--n", "3", "--map", "M"], "1101010\n");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 1"));
}

#[test]
fn six_cycles_lists_patterns() {
    let out = run(&["six-cycles", "--n", "3"]);
    assert_eq!(stdout(&out), "1***100\n1**10*0\n01***10\n");
    let out = run(&["six-cycles", "--n", "2"]);
    assert_eq!(stdout(&out), "1***0\n");
}

#[test]
fn aux_graph_emits_dot() {
    let expected = "graph aux_2 {\n  \"1010\";\n  \"1010\" -- \"1010\" [label=\"1100->1010\"];\n}\n";
    let out = run(&["aux-graph", "--n", "2"]);
    assert_eq!(stdout(&out), expected);
    // --dot selects the default format explicitly
    let out = run(&["aux-graph", "--n", "2", "--dot"]);
    assert_eq!(stdout(&out), expected);
}

#[test]
fn stats_emits_single_json_object() {
    let out = run(&["stats", "--n", "3"]);
    assert_eq!(
        stdout(&out),
        "{\"n\":3,\"catalan\":5,\"vertices\":70,\"two_factor_cycles\":2,\
         \"six_cycles\":3,\"aux_nodes\":2,\"aux_edges\":3,\"spanning_edges\":1}\n"
    );
}

#[test]
fn two_factor_blocks_are_blank_line_separated() {
    let out = run(&["two-factor", "--n", "3"]);
    let text = stdout(&out);
    let blocks: Vec<&str> = text.trim_end().split("\n\n").collect();
    assert_eq!(blocks.len(), 2);
    let mut lens: Vec<usize> = blocks.iter().map(|b| b.lines().count()).collect();
    lens.sort();
    assert_eq!(lens, [28, 42]);
    // blocks are ordered by their first vertex, each block's minimum
    let firsts: Vec<&str> = blocks.iter().map(|b| b.lines().next().unwrap()).collect();
    assert!(firsts.windows(2).all(|w| w[0] < w[1]));
    for block in &blocks {
        let first = block.lines().next().unwrap();
        assert_eq!(block.lines().min().unwrap(), first);
    }
}

#[test]
fn identical_invocations_produce_identical_bytes() {
    for args in [
        vec!["generate", "--n", "4"],
        vec!["two-factor", "--n", "4"],
        vec!["six-cycles", "--n", "5"],
        vec!["aux-graph", "--n", "5"],
        vec!["stats", "--n", "5"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(stdout(&a), stdout(&b), "{args:?}");
        assert!(a.status.success());
    }
}
