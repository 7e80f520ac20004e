//! The twelve acceptance criteria at full size. Runs as a plain binary so each
//! criterion prints its own pass/fail line; exits non-zero if any fails.

use std::process::ExitCode;
use std::thread;

use partite::suite::run_criterion;

fn main() -> ExitCode {
    let seed = std::env::var("PARTITE_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    let only: Option<u8> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let ids: Vec<u8> = (1..=12)
        .filter(|&id| only.is_none_or(|o| o == id))
        .collect();
    // Independent criteria, each on its own seeded stream; report order stays fixed.
    let handles: Vec<_> = ids
        .iter()
        .map(|&id| thread::spawn(move || run_criterion(id, seed, false)))
        .collect();
    let mut failed = 0;
    for h in handles {
        let report = h.join().expect("criterion panicked");
        println!("{}", report.line());
        if !report.passed {
            failed += 1;
        }
    }
    println!(
        "acceptance: {} of {} criteria passed (seed {seed})",
        ids.len() - failed,
        ids.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
