//! One PASS/FAIL line per acceptance criterion, taken from the verify suite.

use std::process::ExitCode;

use mcover::Limits;
use mcover_cli::verify::{run_suite, Goldens, CHECKS};

fn main() -> ExitCode {
    let limits = Limits::from_env().expect("valid MCOVER_LIMITS");
    let report = run_suite(&Goldens::default(), None, &limits).expect("suite runs");
    assert_eq!(report.rows.len(), CHECKS.len());
    for (i, row) in report.rows.iter().enumerate() {
        let verdict = if row.pass { "PASS" } else { "FAIL" };
        println!("{verdict} {:>2} {:<10} {}", i + 1, row.id, row.statement);
        if !row.pass {
            println!("        expected: {}", row.expected);
            println!("        observed: {}", row.observed);
        }
    }
    println!("acceptance: {} passed, {} failed", report.passed(), report.failed());
    if report.failed() == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
