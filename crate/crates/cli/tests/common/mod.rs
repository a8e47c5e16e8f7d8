//! Golden-file cases shared by the golden test and the acceptance suite.

#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

/// `(name, arguments)`; the expected transcript is `golden/<name>.txt`.
pub const CASES: &[(&str, &[&str])] = &[
    (
        "cword_fibonacci",
        &["cword", "--slope", "2,1,1,1,1,1", "--length", "13"],
    ),
    (
        "cword_json",
        &[
            "cword",
            "--slope",
            "1,1,1,1,1",
            "--length",
            "5",
            "--format",
            "json",
        ],
    ),
    (
        "cword_depth_exceeded",
        &["cword", "--slope", "2,1", "--length", "30"],
    ),
    (
        "complexity_fibonacci",
        &[
            "complexity",
            "--slope",
            "2,1,1,1,1,1,1",
            "--length",
            "30",
            "--m",
            "6",
        ],
    ),
    (
        "complexity_word_json",
        &[
            "complexity",
            "--word",
            "0011",
            "--m",
            "3",
            "--format",
            "json",
        ],
    ),
    ("balance_unbalanced", &["balance", "--word", "0011"]),
    (
        "balance_witness_json",
        &["balance", "--word", "00110", "--format", "json"],
    ),
    (
        "balance_sturmian",
        &["balance", "--slope", "3,2,1,1,1", "--length", "40"],
    ),
    (
        "repetition_closed_form",
        &["repetition", "--slope", "2,1,1,1,1", "--m", "4"],
    ),
    (
        "repetition_leading_interval",
        &[
            "repetition",
            "--slope",
            "3,2,3",
            "--m",
            "1",
            "--format",
            "json",
        ],
    ),
    (
        "repetition_word",
        &[
            "repetition",
            "--word",
            "000000",
            "--m",
            "2",
            "--format",
            "json",
        ],
    ),
    (
        "repetition_insufficient",
        &["repetition", "--word", "0110", "--m", "2"],
    ),
    (
        "rauzy_fibonacci_m2",
        &["rauzy", "--slope", "2,1,1,1", "--m", "2"],
    ),
    (
        "rauzy_json",
        &["rauzy", "--slope", "2,2,2,2", "--m", "3", "--json"],
    ),
    (
        "rauzy_dot",
        &["rauzy", "--slope", "2,1,1,1", "--m", "1", "--format", "dot"],
    ),
    (
        "rauzy_dot_large",
        &[
            "rauzy",
            "--slope",
            "1,3,2,1,2",
            "--m",
            "7",
            "--format",
            "dot",
        ],
    ),
    ("central_check", &["central", "check", "010"]),
    (
        "central_check_json",
        &["central", "check", "01", "--format", "json"],
    ),
    ("central_decompose", &["central", "decompose", "00100"]),
    (
        "central_decompose_json",
        &["central", "decompose", "01001010010", "--format", "json"],
    ),
    ("central_letter_power", &["central", "decompose", "0000"]),
    (
        "central_not_central",
        &["central", "decompose", "0100101001"],
    ),
    (
        "ostrowski_encode",
        &[
            "ostrowski",
            "encode",
            "4",
            "--slope",
            "2,1,1,1",
            "--depth",
            "3",
        ],
    ),
    (
        "ostrowski_encode_json",
        &[
            "ostrowski",
            "encode",
            "20",
            "--slope",
            "2,1,1,1,1,1",
            "--depth",
            "6",
            "--format",
            "json",
        ],
    ),
    (
        "ostrowski_out_of_range",
        &[
            "ostrowski",
            "encode",
            "5",
            "--slope",
            "2,1,1,1",
            "--depth",
            "3",
        ],
    ),
    (
        "ostrowski_decode",
        &["ostrowski", "decode", "1,0,1", "--slope", "2,1,1,1"],
    ),
    (
        "ostrowski_invalid_digits",
        &["ostrowski", "decode", "1,1", "--slope", "2,1,1,1"],
    ),
    (
        "intercept_recover",
        &[
            "intercept",
            "recover",
            "--slope",
            "2,1,1,1,1",
            "--word",
            "001001010010010100",
            "--depth",
            "4",
            "--format",
            "json",
        ],
    ),
    (
        "intercept_recover_file",
        &[
            "intercept",
            "recover",
            "--slope",
            "2,1,1,1,1,1,1,1",
            "--word-file",
            "tests/data/zero_fibonacci.txt",
            "--depth",
            "6",
        ],
    ),
    (
        "intercept_not_this_slope",
        &[
            "intercept",
            "recover",
            "--slope",
            "2,1,1,1,1",
            "--word",
            "0110101",
            "--depth",
            "3",
        ],
    ),
    (
        "intercept_insufficient",
        &[
            "intercept",
            "recover",
            "--slope",
            "2,1,1,1,1",
            "--word",
            "010",
            "--depth",
            "4",
        ],
    ),
    (
        "intercept_word",
        &[
            "intercept",
            "word",
            "--slope",
            "2,1,1,1,1",
            "--digits",
            "0,1",
            "--length",
            "4",
        ],
    ),
    (
        "intercept_word_one_family",
        &[
            "intercept",
            "word",
            "--slope",
            "2,1,1,1,1,1,1",
            "--family",
            "one",
            "--length",
            "12",
            "--format",
            "json",
        ],
    ),
    (
        "intercept_lambda",
        &[
            "intercept",
            "lambda",
            "--slope",
            "2,1,1,1,1",
            "--digits",
            "0,1,0,1",
            "--n",
            "3",
        ],
    ),
    (
        "intercept_lambda_equal",
        &[
            "intercept",
            "lambda",
            "--slope",
            "2,1,1,1,1",
            "--digits",
            "0,1,0,0",
            "--n",
            "3",
            "--format",
            "json",
        ],
    ),
    ("usage_unknown_command", &["frobnicate"]),
    ("usage_missing_slope", &["cword", "--length", "5"]),
    (
        "usage_bad_slope",
        &["cword", "--slope", "2,0,1", "--length", "5"],
    ),
    (
        "usage_dot_format",
        &[
            "cword", "--slope", "2,1", "--length", "2", "--format", "dot",
        ],
    ),
];

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    crate_dir()
        .join("tests")
        .join("golden")
        .join(format!("{name}.txt"))
}

/// Runs the binary and renders exit code, stdout and stderr as one text.
pub fn transcript(args: &[&str]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_sturmian"))
        .args(args)
        .current_dir(crate_dir())
        .output()
        .expect("binary runs");
    format!(
        "$ sturmian {}\nexit {}\n--- stdout\n{}--- stderr\n{}",
        args.join(" "),
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    )
}

/// Compares every case against its golden file, running each twice. With
/// `UPDATE_GOLDEN` set the files are rewritten instead.
pub fn check_goldens() -> Result<usize, String> {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut mismatches = Vec::new();
    for (name, args) in CASES {
        let first = transcript(args);
        if transcript(args) != first {
            mismatches.push(format!("{name}: output differs between runs"));
            continue;
        }
        let path = golden_path(name);
        if update {
            fs::write(&path, &first).map_err(|e| format!("{}: {e}", path.display()))?;
            continue;
        }
        match fs::read_to_string(&path) {
            Ok(expected) if expected == first => {}
            Ok(expected) => mismatches.push(format!("{name}: expected\n{expected}\ngot\n{first}")),
            Err(e) => mismatches.push(format!("{}: {e}", display(&path))),
        }
    }
    if mismatches.is_empty() {
        Ok(CASES.len())
    } else {
        Err(mismatches.join("\n"))
    }
}

fn display(path: &Path) -> String {
    path.display().to_string()
}
