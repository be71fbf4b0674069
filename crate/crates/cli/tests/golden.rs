//! Set `GOLDEN_BLESS=1` to rewrite the expectations.

mod common;

use std::time::{Duration, Instant};

#[test]
fn golden_corpus() {
    let bless = std::env::var_os("GOLDEN_BLESS").is_some();
    assert!(common::cases().len() >= 25);
    let start = Instant::now();
    let mismatches = common::check_all(bless);
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
    assert!(start.elapsed() < Duration::from_secs(2), "corpus took {:?}", start.elapsed());
}

#[test]
fn repeated_runs_are_byte_identical() {
    for (_, args) in common::cases().iter().filter(|(n, _)| n == "noninterfere" || n == "many") {
        assert_eq!(common::run(args), common::run(args));
    }
}
