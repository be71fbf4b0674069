//! The golden corpus: `golden/cases.txt` lists `name: arguments`, and
//! `golden/expected/<name>.txt` holds the exit code, stdout and stderr.

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn cases() -> Vec<(String, Vec<String>)> {
    let text = std::fs::read_to_string(golden_dir().join("cases.txt")).unwrap();
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|l| {
            let (name, args) = l.split_once(':').expect("name: args");
            (name.trim().to_string(), args.split_whitespace().map(str::to_string).collect())
        })
        .collect()
}

pub fn run(args: &[String]) -> String {
    let out = Command::new(env!("CARGO_BIN_EXE_gradia")).args(args).current_dir(golden_dir()).output().unwrap();
    format!(
        "exit {}\n--- stdout\n{}--- stderr\n{}",
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    )
}

/// Runs every case; returns the mismatching ones, rendered.
pub fn check_all(bless: bool) -> Vec<String> {
    let expected_dir = golden_dir().join("expected");
    let mut mismatches = Vec::new();
    for (name, args) in cases() {
        let got = run(&args);
        let path = expected_dir.join(format!("{name}.txt"));
        if bless {
            std::fs::create_dir_all(&expected_dir).unwrap();
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(want) if want == got => {}
            Ok(want) => mismatches.push(format!("{name}:\n-- want\n{want}-- got\n{got}")),
            Err(_) => mismatches.push(format!("{name}: missing {}", path.display())),
        }
    }
    mismatches
}
