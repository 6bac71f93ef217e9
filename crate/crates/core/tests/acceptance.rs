//! Headline results, one printed line per check. Runs without the libtest
//! harness so the lines show up in plain `cargo test` output.

use std::process::ExitCode;

use sdrd_core::reproduce::{Reproduction, CRITERIA};

fn main() -> ExitCode {
    let run = Reproduction::new(4);
    let mut failed = Vec::new();
    for (id, ..) in CRITERIA {
        let outcome = run.run(id).expect("listed criterion");
        println!("{outcome}");
        if !outcome.passed {
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: {} of {} criteria passed", CRITERIA.len(), CRITERIA.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
