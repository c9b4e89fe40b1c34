//! Fixtures shared by the golden and acceptance targets.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

/// Golden fixtures: file stem and arguments.
pub const FIXTURES: &[(&str, &[&str])] = &[
    ("eval_fib10", &["eval", "-a", "0", "-b", "1", "-p", "1", "-q", "1", "-n", "10"]),
    ("eval_initial", &["eval", "-a", "5", "-b", "7", "-p", "1", "-q", "0", "-n", "0"]),
    ("eval_rational", &["eval", "-a", "1/2", "-b", "1/3", "-p", "2", "-q", "1", "-n", "2"]),
    ("eval_lucas_doubling", &["eval", "-a", "2", "-b", "1", "-p", "1", "-q", "1", "-n", "0..=10", "--method", "doubling"]),
    ("eval_negative_rational", &["eval", "-a", "-3/4", "-b", "2/5", "-p", "-1/2", "-q", "3", "-n", "4..7"]),
    ("sum_fib4", &["sum", "-a", "0", "-b", "1", "-p", "1", "-q", "1", "-n", "4"]),
    ("sum_empty", &["sum", "-a", "0", "-b", "1", "-p", "1", "-q", "1", "-n", "-1"]),
    ("sum_simple_degenerate", &["sum", "-a", "1", "-b", "1", "-p", "3", "-q", "-2", "-n", "3"]),
    ("sum_double_degenerate", &["sum", "-a", "1", "-b", "2", "-p", "2", "-q", "-1", "-n", "10"]),
    ("sum_rational", &["sum", "-a", "1/3", "-b", "-2", "-p", "5/2", "-q", "-1/7", "-n", "12"]),
    ("range_fib", &["range", "-a", "0", "-b", "1", "-p", "1", "-q", "1", "-n", "2", "-m", "2"]),
    ("range_lucas", &["range", "-a", "2", "-b", "1", "-p", "1", "-q", "1", "-n", "1", "-m", "3"]),
    ("range_simple_degenerate", &["range", "-a", "4", "-b", "-1", "-p", "1/2", "-q", "1/2", "-n", "3", "-m", "5"]),
    ("gf_f", &["gf", "-a", "0", "-b", "1", "-p", "1", "-q", "1", "--which", "F", "--terms", "6"]),
    ("gf_s_first", &["gf", "-a", "3", "--which", "S", "--terms", "1"]),
    ("gf_l_period_two", &["gf", "--which", "L", "-p", "0", "-q", "1", "--terms", "4"]),
    ("gf_w_rational", &["gf", "-a", "1/2", "-b", "-2/3", "-p", "3/4", "-q", "5", "--which", "W", "--terms", "5"]),
    ("verify_small", &["verify", "--seed", "42", "--trials", "3", "--max-n", "20"]),
];

/// Output format and golden file extension.
pub const FORMATS: &[(&str, &str)] = &[("text", "txt"), ("json", "json"), ("csv", "csv")];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn invoke(args: &[&str], format: &str) -> (String, String, i32) {
    let mut argv = vec!["horadam", "--format", format];
    argv.extend_from_slice(args);
    horadam_cli::run(argv)
}

/// Arguments and the exit code they must produce.
pub const EXIT_CASES: &[(&[&str], i32)] = &[
    (&["eval", "-a", "0", "-b", "1", "-p", "1", "-q", "1", "-n", "10"], 0),
    (&["sum", "-n", "-1"], 0),
    (&["verify", "--trials", "1", "--max-n", "2"], 0),
    (&["eval", "-a", "1.5", "-n", "1"], 2),
    (&["eval", "-a", "1/0", "-n", "1"], 2),
    (&["eval", "-n", "-1"], 2),
    (&["sum", "-n", "-2"], 2),
    (&["range", "-n", "0", "-m", "0"], 2),
    (&["range", "-n", "1", "-m", "-1"], 2),
    (&["gf", "--which", "Q", "--terms", "3"], 2),
    (&["gf", "--which", "F", "--terms", "0"], 2),
    (&["verify", "--trials", "0"], 2),
    (&["verify", "--max-n", "1"], 2),
    (&["frobnicate"], 2),
    (&["--max-bits", "64", "eval", "-a", "0", "-b", "1", "-p", "1", "-q", "1", "-n", "200"], 3),
    (&["--max-bits", "64", "sum", "-a", "0", "-b", "1", "-p", "1", "-q", "1", "-n", "200"], 3),
    (&["--max-bits", "64", "gf", "--which", "F", "-p", "3", "-q", "1", "--terms", "200"], 3),
    (&["--max-bits", "64", "eval", "-a", "0", "-b", "1", "-p", "1", "-q", "1", "-n", "90"], 0),
];

/// Runs the built binary, returning exit code, stdout and stderr.
pub fn binary(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_horadam")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}
