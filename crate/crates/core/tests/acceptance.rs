use std::process::ExitCode;
use std::time::Instant;

use sl12_core::suites::{run_criterion, Sizes, CRITERIA};

fn main() -> ExitCode {
    let sizes = Sizes::default();
    let mut failed = 0;
    for (id, _) in CRITERIA {
        let start = Instant::now();
        let report = run_criterion(id, &sizes).expect("criterion id is listed");
        let status = if report.passed() { "PASS" } else { "FAIL" };
        println!(
            "criterion {id:>2} {status}: {} ({}/{} cases, {:.1}s)",
            report.title,
            report.pass_count(),
            report.cases.len(),
            start.elapsed().as_secs_f64()
        );
        for f in report.failures().take(5) {
            println!("    {}: {}", f.case, f.detail);
        }
        if !report.passed() {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
