//! Runs every acceptance criterion at full scale and prints one line each.
//! Plain `main` so the lines show without `--nocapture`.

use std::process::ExitCode;
use std::time::Instant;

use cfconn::selftest::{run_criterion, Scale, CRITERIA};

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for id in CRITERIA {
        let start = Instant::now();
        let report = run_criterion(id, Scale::Full).expect("known criterion");
        println!("{} [{:.1}s]", report.line(), start.elapsed().as_secs_f64());
        for f in &report.failures {
            println!("    counterexample: {f}");
        }
        if !report.passed {
            failed.push(id);
        }
    }
    println!("{}/{} criteria passed", CRITERIA.len() - failed.len(), CRITERIA.len());
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("failing criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
