//! The nine acceptance criteria, one PASS/FAIL line each.
//!
//! Set `ACCEPTANCE_VERBOSE=1` to print the evidence under every line.

use std::process::ExitCode;

use vbraid::report::{criterion, ReportConfig, CRITERIA};

fn main() -> ExitCode {
    let cfg = ReportConfig::default();
    let verbose = std::env::var_os("ACCEPTANCE_VERBOSE").is_some();
    let mut failed = 0;
    for (id, title) in CRITERIA {
        match criterion(id, &cfg) {
            Ok(r) => {
                println!("{} criterion {id}: {title}", if r.passed { "PASS" } else { "FAIL" });
                if verbose || !r.passed {
                    for d in &r.details {
                        println!("    {d}");
                    }
                }
                failed += usize::from(!r.passed);
            }
            Err(e) => {
                println!("FAIL criterion {id}: {title}");
                println!("    error: {e}");
                failed += 1;
            }
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
