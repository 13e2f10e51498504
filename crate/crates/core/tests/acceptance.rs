//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! A criterion passes when every check of its experiment passes and the run
//! stays within the wall-clock budget. Failures listed in `KNOWN_UNATTAINABLE`
//! are still printed as FAIL but do not change the exit status, as long as
//! no other check of that criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use alpha_spectral::experiments::{registry, run_experiment, RunReport, DEFAULT_SEED};

/// `(experiment, claim fragment, reason)` for checks that cannot pass as stated.
const KNOWN_UNATTAINABLE: &[(&str, &str, &str)] = &[
    (
        "alpha-monotonicity",
        "(r=3): lambda^(100) in [0.95 r! e, r! e]",
        "dense 3-graphs on 6..8 vertices sit near the floor r! e n^(-3/100) >= 0.9395 r! e",
    ),
    (
        "spectral-turan",
        "SPEX_2(C_5-free, 7)",
        "K_2 + 5K_1 is C_5-free with lambda = (1 + sqrt 41)/2 > sqrt 12 = lambda(T_2(7))",
    ),
];

fn known(experiment: &str, claim: &str) -> Option<&'static str> {
    KNOWN_UNATTAINABLE.iter().find(|(e, c, _)| *e == experiment && claim.contains(c)).map(|k| k.2)
}

enum Outcome {
    Pass,
    KnownFail,
    Fail,
}

fn judge(report: &RunReport, budget: u64) -> (Outcome, Vec<String>) {
    let mut notes = Vec::new();
    let mut unexplained = false;
    for c in report.failures() {
        match known(&report.experiment, &c.claim) {
            Some(why) => notes.push(format!("{} (known: {why})", c.claim)),
            None => {
                unexplained = true;
                notes.push(format!("{}: computed {}, target {}", c.claim, c.computed, c.target));
            }
        }
    }
    if report.wall_time_secs > budget as f64 {
        unexplained = true;
        notes.push(format!("took {:.1} s, budget {budget} s", report.wall_time_secs));
    }
    let outcome = if notes.is_empty() {
        Outcome::Pass
    } else if unexplained {
        Outcome::Fail
    } else {
        Outcome::KnownFail
    };
    (outcome, notes)
}

fn main() -> ExitCode {
    let specs = registry();
    let mut hard_failures = 0;
    let mut passes = 0;
    for (i, spec) in specs.iter().enumerate() {
        let id = i + 1;
        let result = catch_unwind(AssertUnwindSafe(|| run_experiment(&spec.name, DEFAULT_SEED)));
        let (outcome, notes, secs) = match result {
            Ok(Ok(report)) => {
                let (o, n) = judge(&report, spec.budget_secs);
                (o, n, report.wall_time_secs)
            }
            Ok(Err(e)) => (Outcome::Fail, vec![format!("error: {e}")], 0.0),
            Err(_) => (Outcome::Fail, vec!["panicked".to_string()], 0.0),
        };
        let label = match outcome {
            Outcome::Pass => {
                passes += 1;
                "PASS"
            }
            Outcome::KnownFail => "FAIL",
            Outcome::Fail => {
                hard_failures += 1;
                "FAIL"
            }
        };
        println!("{label} criterion {id:>2} {:<24} {secs:>8.2} s", spec.name);
        for n in notes {
            println!("       - {n}");
        }
    }
    println!("{passes}/{} criteria passed", specs.len());
    if hard_failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
