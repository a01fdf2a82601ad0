//! Run every registered identity over its default grid and print the
//! Markdown table. Pass `--strict` to demand 1e-15 everywhere and watch the
//! failures appear.

use loglog_lab::verifier::{full_matrix, RunConfig, Thresholds};

fn main() -> loglog_lab::Result<()> {
    let strict = std::env::args().any(|a| a == "--strict");
    let run = RunConfig {
        thresholds: if strict {
            Thresholds::uniform(1e-15)
        } else {
            Thresholds::default()
        },
        ..RunConfig::default()
    };
    let report = full_matrix(&run)?;
    print!("{}", report.to_markdown());
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
