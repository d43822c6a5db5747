//! The eleven acceptance criteria. Runs without the libtest harness so that
//! every criterion prints exactly one PASS/FAIL line, passing or not.
//! `cargo test --test acceptance -- 7 8` runs a subset.

use std::process::ExitCode;

use indpath::acceptance::{run_criterion, NAMES};

fn main() -> ExitCode {
    let picked: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let ids: Vec<usize> = if picked.is_empty() {
        (1..=NAMES.len()).collect()
    } else {
        picked
    };
    let mut failed = Vec::new();
    for id in ids {
        let outcome = run_criterion(id);
        println!("{outcome}");
        if !outcome.passed {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
