//! Runs every acceptance criterion and prints one verdict line each, with
//! the supporting details of failures. Exits non-zero if any fails.

use dpcodes_cli::acceptance::{run_criterion, CRITERIA};

fn main() {
    let mut failed = Vec::new();
    for id in 1..=CRITERIA {
        let r = run_criterion(id);
        println!("{}", r.line());
        if !r.passed {
            for d in r.details.iter().filter(|d| d.starts_with("FAIL")) {
                println!("    {d}");
            }
            failed.push(id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {CRITERIA} criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
