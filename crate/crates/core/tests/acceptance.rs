//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use polynet::enumeration::{
    enumerate, enumerate_with, oracle_enumerate, Ensemble, EnsembleKind, Execution, Lattice, ORACLE_MAX_N,
};
use polynet::lab::{hexagonal_mu, polygon_weighting_shift, square_exponents, LabCheck};
use polynet::verify::{run_criterion, SuiteReport};

struct Outcome {
    passed: bool,
    detail: String,
}

fn exact_suites(criterion: u8) -> Outcome {
    let reports = run_criterion(criterion);
    let checks: usize = reports.iter().map(|r| r.checks).sum();
    let failed: Vec<&SuiteReport> = reports.iter().filter(|r| !r.passed()).collect();
    let mut detail = format!("{} suites, {checks} exact checks", reports.len());
    for r in &failed {
        detail.push_str(&format!("; {} failed: {}", r.name, r.failures.first().map_or("no checks", String::as_str)));
    }
    Outcome { passed: failed.is_empty() && !reports.is_empty(), detail }
}

fn oracle_equivalence() -> Outcome {
    let mut mismatches = Vec::new();
    let mut compared = 0;
    for lattice in [Lattice::Square, Lattice::Hexagonal] {
        for kind in EnsembleKind::ALL {
            let e = Ensemble::new(kind);
            let oracle = oracle_enumerate(lattice, &e, ORACLE_MAX_N).expect("oracle runs");
            let reference = enumerate_with(lattice, &e, ORACLE_MAX_N, Execution::Sequential).expect("engine runs");
            for n in 1..=ORACLE_MAX_N {
                compared += 1;
                if reference.histogram(n) != oracle.histogram(n) || reference.r2_sum(n) != oracle.r2_sum(n) {
                    mismatches.push(format!("{lattice} {kind} N={n} differs from oracle"));
                }
            }
            for threads in [1, 4, 8] {
                if enumerate(lattice, &e, ORACLE_MAX_N, threads).expect("engine runs") != reference {
                    mismatches.push(format!("{lattice} {kind} changes at {threads} threads"));
                }
            }
        }
    }
    let mut detail = format!("{compared} (lattice, ensemble, N) cells at N <= {ORACLE_MAX_N}, threads 1/4/8");
    if let Some(m) = mismatches.first() {
        detail.push_str(&format!("; {} mismatches, first: {m}", mismatches.len()));
    }
    Outcome { passed: mismatches.is_empty(), detail }
}

fn lab_outcome(checks: Result<Vec<LabCheck>, polynet::lab::LabError>) -> Outcome {
    match checks {
        Ok(checks) => {
            for c in &checks {
                println!("    {c}");
            }
            let detail = checks
                .iter()
                .map(|c| format!("{} = {:.4} (|dev| {:.4} <= {})", c.quantity, c.estimate, c.deviation(), c.tolerance))
                .collect::<Vec<_>>()
                .join(", ");
            Outcome { passed: !checks.is_empty() && checks.iter().all(LabCheck::passed), detail }
        }
        Err(e) => Outcome { passed: false, detail: format!("error: {e}") },
    }
}

type Criterion = (u8, &'static str, Duration, Box<dyn Fn() -> Outcome>);

fn main() -> ExitCode {
    let exec = Execution::Sequential;
    let criteria: Vec<Criterion> = vec![
        (1, "exact golden gamma table", Duration::from_secs(5), Box::new(|| exact_suites(1))),
        (2, "identity suites", Duration::from_secs(30), Box::new(|| exact_suites(2))),
        (3, "KPZ and welding suites", Duration::from_secs(30), Box::new(|| exact_suites(3))),
        (4, "engine equals oracle, thread invariant", Duration::from_secs(600), Box::new(oracle_equivalence)),
        (5, "square lattice exponents at N_max = 20", Duration::from_secs(1200), Box::new(move || lab_outcome(square_exponents(exec)))),
        (6, "polygon contact-count weighting shift", Duration::from_secs(600), Box::new(move || lab_outcome(polygon_weighting_shift(exec).map(|c| vec![c])))),
        (7, "hexagonal connective constant bracket", Duration::from_secs(900), Box::new(move || {
            let out = hexagonal_mu(exec).map(|(check, ratios)| {
                for (n, r) in ratios {
                    println!("    c_{n}/c_{} = {r:.6}", n - 1);
                }
                vec![check]
            });
            lab_outcome(out)
        })),
    ];

    let mut all = true;
    for (n, title, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let passed = outcome.passed && in_time;
        all &= passed;
        println!(
            "criterion {n}: {} {title} [{:.2?} of {:?}] {}",
            if passed { "PASS" } else { "FAIL" },
            elapsed,
            budget,
            outcome.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
