#![allow(dead_code)]

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

pub fn run(args: &[&str], stdin: &str) -> Output {
    run_with_env(args, stdin, &[])
}

pub fn run_with_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_cayley"));
    cmd.args(args)
        .env_remove("CAYLEY_MAX_N")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("spawn cayley");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

pub struct GoldenCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub stdin: &'static str,
    pub exit: i32,
}

pub const GOLDEN: &[GoldenCase] = &[
    GoldenCase {
        name: "count_total",
        args: &["count", "total", "-n", "4"],
        stdin: "",
        exit: 0,
    },
    GoldenCase {
        name: "count_degrees",
        args: &["count", "degrees", "-d", "2,2,1,1"],
        stdin: "",
        exit: 0,
    },
    GoldenCase {
        name: "count_degv1",
        args: &["count", "degv1", "-n", "2", "-k", "1"],
        stdin: "",
        exit: 0,
    },
    GoldenCase {
        name: "enumerate_n3_prufer",
        args: &["enumerate", "-n", "3", "--format", "prufer"],
        stdin: "",
        exit: 0,
    },
    GoldenCase {
        name: "enumerate_n2",
        args: &["enumerate", "-n", "2"],
        stdin: "",
        exit: 0,
    },
    GoldenCase {
        name: "enumerate_star",
        args: &["enumerate", "-n", "4", "--degrees", "1,1,1,3"],
        stdin: "",
        exit: 0,
    },
    GoldenCase {
        name: "prufer_encode_path",
        args: &["prufer", "encode"],
        stdin: "n 3\n1 2\n2 3\n",
        exit: 0,
    },
    GoldenCase {
        name: "prufer_decode_star",
        args: &["prufer", "decode", "-n", "4"],
        stdin: "4,4\n",
        exit: 0,
    },
    GoldenCase {
        name: "prufer_encode_edge",
        args: &["prufer", "encode"],
        stdin: "n 2\n1 2\n",
        exit: 0,
    },
    GoldenCase {
        name: "sample_edge",
        args: &["sample", "-n", "2", "--count", "3", "--seed", "7"],
        stdin: "",
        exit: 0,
    },
    GoldenCase {
        name: "sample_star",
        args: &[
            "sample",
            "--degrees",
            "1,1,1,3",
            "--count",
            "2",
            "--seed",
            "1",
        ],
        stdin: "",
        exit: 0,
    },
    GoldenCase {
        name: "sample_n4_seed42",
        args: &["sample", "-n", "4", "--count", "5", "--seed", "42"],
        stdin: "",
        exit: 0,
    },
    GoldenCase {
        name: "verify_all_json",
        args: &["verify", "all", "--max-n", "6", "--json"],
        stdin: "",
        exit: 0,
    },
    GoldenCase {
        name: "verify_lemma1",
        args: &["verify", "lemma1", "--max-n", "2"],
        stdin: "",
        exit: 0,
    },
    GoldenCase {
        name: "verify_fault",
        args: &[
            "verify",
            "lemma1",
            "--max-n",
            "5",
            "--inject-fault",
            "LEMMA_1",
        ],
        stdin: "",
        exit: 1,
    },
];

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("golden")
        .join(format!("{name}.out"))
}

/// Zeroes every `elapsed_ms` in pretty-printed JSON so reports compare
/// byte for byte.
pub fn normalize(output: &str) -> String {
    let mut out = String::with_capacity(output.len());
    for line in output.split_inclusive('\n') {
        let trimmed = line.trim_start();
        if trimmed.starts_with("\"elapsed_ms\":") {
            let indent = &line[..line.len() - trimmed.len()];
            let comma = if trimmed.trim_end().ends_with(',') {
                ","
            } else {
                ""
            };
            out.push_str(&format!("{indent}\"elapsed_ms\": 0{comma}\n"));
        } else {
            out.push_str(line);
        }
    }
    out
}

/// Runs one golden case. `Err` carries a description of the mismatch.
/// Setting `GOLDEN_UPDATE=1` rewrites the file instead.
pub fn check_golden(case: &GoldenCase) -> Result<(), String> {
    let out = run(case.args, case.stdin);
    let got = normalize(&stdout(&out));
    let code = out.status.code().unwrap_or(-1);
    if code != case.exit {
        return Err(format!(
            "{}: exit {code}, expected {}",
            case.name, case.exit
        ));
    }
    let path = golden_path(case.name);
    if std::env::var_os("GOLDEN_UPDATE").is_some() {
        std::fs::write(&path, &got).unwrap();
        return Ok(());
    }
    let want = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if got == want {
        Ok(())
    } else {
        Err(format!(
            "{}: output differs\n--- expected\n{want}--- got\n{got}",
            case.name
        ))
    }
}
