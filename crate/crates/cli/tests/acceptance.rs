use std::process::ExitCode;
use std::time::Instant;

use pmas::suites;

const SEED: u64 = 20_240_607;

type Check = Box<dyn Fn() -> Result<usize, String>>;

fn both(
    a: Result<usize, String>,
    b: impl FnOnce() -> Result<usize, String>,
) -> Result<usize, String> {
    Ok(a? + b()?)
}

fn main() -> ExitCode {
    let criteria: Vec<(u32, &str, Check)> = vec![
        (
            1,
            "veto game tau-value, nucleolus and certificates",
            Box::new(suites::veto_solutions),
        ),
        (
            2,
            "two-by-two market goldens and refusal",
            Box::new(suites::market_example),
        ),
        (
            3,
            "veto game extensions and veto scheme",
            Box::new(suites::veto_extension),
        ),
        (
            4,
            "composite game tau-value and nucleolus",
            Box::new(suites::composite_example),
        ),
        (
            5,
            "classifier agrees with the LP oracle",
            Box::new(|| {
                both(suites::classifier_matches_lp_exhaustive(false), || {
                    suites::classifier_matches_lp_random(SEED + 5, 200, false)
                })
            }),
        ),
        (
            6,
            "nucleolus = tau = vertex midpoint on admissible games; midpoint on arbitrary games",
            Box::new(|| {
                both(suites::coincidence_on_admissible(SEED + 6, 300), || {
                    suites::midpoint_on_arbitrary(SEED + 60, 300)
                })
            }),
        ),
        (
            7,
            "sampled core points extend to verified schemes",
            Box::new(|| suites::every_core_point_extends(SEED + 7, 100)),
        ),
        (
            8,
            "corner dichotomy and scheme table",
            Box::new(|| suites::corner_dichotomy(SEED + 8, 100)),
        ),
        (
            9,
            "nucleolus certified and brute-forced",
            Box::new(|| suites::nucleolus_certified(SEED + 9, 50)),
        ),
        (
            10,
            "positive 2x2 matrices admit no scheme",
            Box::new(|| suites::positive_squares_fail(SEED + 10, 50)),
        ),
    ];
    let mut failed = 0;
    for (id, name, check) in &criteria {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(n) => println!("PASS criterion {id:>2}: {name} ({n} checks, {secs:.1}s)"),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {id:>2}: {name}: {e}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
