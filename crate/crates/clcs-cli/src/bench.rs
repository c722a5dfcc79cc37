//! `clcs bench`: exact DP work counts over a grid of required-substring
//! lengths at fixed input sizes. Counts are the primary signal — they are
//! closed-form in the dimensions — and wall time is informational.

use anyhow::{bail, Result};
use clcs::oracle::{random_word, XorShift64};
use clcs::{
    solve_cubic, solve_quartic, Algorithm, Instance, Sequence, Solved, SolverConfig, SolverError,
};

use crate::args::{BenchArgs, Format};
use crate::input::memory_budget;
use crate::report::{BenchReport, BenchRow, StatsReport};

pub fn run(args: &BenchArgs) -> Result<u8> {
    if args.t == 0 {
        bail!("--t must be at least 1 (constraint strings are nonempty)");
    }
    if args.s.is_empty() || args.s.contains(&0) {
        bail!("--s needs at least one length, all of them at least 1");
    }

    let config = SolverConfig {
        algorithm: Algorithm::Cubic,
        memory_budget: memory_budget()?,
        collect_stats: true,
    };
    let mut rows = Vec::new();
    let mut had_error = false;
    for &s in &args.s {
        let instance = bench_instance(args, s);
        let runs: [(&'static str, Result<Solved, SolverError>); 2] = [
            ("quartic", solve_quartic(&instance, &config)),
            ("cubic", solve_cubic(&instance, &config)),
        ];
        for (algorithm, outcome) in runs {
            rows.push(match outcome {
                Ok(solved) => BenchRow {
                    s,
                    algorithm,
                    feasible: Some(solved.outcome.is_feasible()),
                    length: solved.outcome.length(),
                    stats: Some(StatsReport::from(&solved.stats)),
                    error: None,
                },
                Err(err) => {
                    had_error = true;
                    BenchRow {
                        s,
                        algorithm,
                        feasible: None,
                        length: None,
                        stats: None,
                        error: Some(err.to_string()),
                    }
                }
            });
        }
    }

    let report = BenchReport {
        n: args.n,
        m: args.m,
        t: args.t,
        seed: args.seed,
        alphabet: args.alphabet,
        rows,
    };
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Text => print_table(&report),
    }
    Ok(if had_error { 1 } else { 0 })
}

/// A random instance with exact dimensions; the required substring is
/// planted into both inputs whenever it fits so the planted configurations
/// are feasible by construction.
fn bench_instance(args: &BenchArgs, s: usize) -> Instance {
    let mut rng = XorShift64::from_seed_and_stream(args.seed, s as u64);
    let p = random_word(&mut rng, s, args.alphabet);
    let q = random_word(&mut rng, args.t, args.alphabet);
    let mut x = random_word(&mut rng, args.n, args.alphabet);
    let mut y = random_word(&mut rng, args.m, args.alphabet);
    if s <= args.n && s <= args.m {
        let at_x = rng.next_range(0, args.n - s);
        x[at_x..at_x + s].copy_from_slice(&p);
        let at_y = rng.next_range(0, args.m - s);
        y[at_y..at_y + s].copy_from_slice(&p);
    }
    Instance::new(
        Sequence::from(x),
        Sequence::from(y),
        Sequence::from(p),
        Sequence::from(q),
    )
    .expect("bench constraints are nonempty by argument validation")
}

fn print_table(report: &BenchReport) {
    println!(
        "bench n={} m={} t={} seed={} alphabet={}",
        report.n, report.m, report.t, report.seed, report.alphabet
    );
    println!(
        "{:<6} {:<8} {:>12} {:>12} {:>12} {:>12} {:>12} {:>8} {:>10}",
        "s", "algo", "suffix", "forward", "reverse", "total", "combine", "length", "wall_us"
    );
    for row in &report.rows {
        match (&row.stats, &row.error) {
            (Some(stats), _) => println!(
                "{:<6} {:<8} {:>12} {:>12} {:>12} {:>12} {:>12} {:>8} {:>10}",
                row.s,
                row.algorithm,
                stats.suffix_updates,
                stats.forward_updates,
                stats.reverse_updates,
                stats.cell_updates,
                stats.combine_candidates,
                row.length.map_or_else(|| "-".into(), |l| l.to_string()),
                stats.wall_time_us
            ),
            (None, Some(error)) => {
                println!("{:<6} {:<8} error: {error}", row.s, row.algorithm);
            }
            (None, None) => unreachable!("bench rows carry stats or an error"),
        }
    }
}
