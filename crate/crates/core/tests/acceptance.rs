//! Runs every acceptance criterion and prints one line per criterion.
//!
//! `cargo test --test acceptance` exits nonzero if any criterion fails.
//! Pass criterion numbers as arguments to run a subset.

use std::process::ExitCode;

use findep::acceptance::{criterion, run_all, CriterionOutcome};

fn main() -> ExitCode {
    // libtest-style flags (e.g. from `cargo test -- --nocapture`) are ignored
    let selected: Vec<u8> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let outcomes: Vec<CriterionOutcome> = if selected.is_empty() {
        run_all()
    } else {
        selected
            .iter()
            .filter_map(|&id| criterion(id))
            .map(|c| c.run())
            .collect()
    };
    for o in &outcomes {
        println!("{}", o.line());
        for c in &o.checks {
            let mark = if c.passed { "ok" } else { "FAILED" };
            if c.detail.is_empty() {
                println!("    {mark}: {} [{} cases]", c.name, c.cases);
            } else {
                println!("    {mark}: {} [{} cases] {}", c.name, c.cases, c.detail);
            }
        }
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        outcomes.len() - failed
    );
    if failed == 0 && !outcomes.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
