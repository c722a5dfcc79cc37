//! `clcs solve`: run one algorithm on one instance.

use anyhow::Result;
use clcs::{solve, Instance, SolverConfig};

use crate::args::{Format, SolveArgs};
use crate::input::{load_source, memory_budget};
use crate::report::{SolveReport, StatsReport};

pub fn run(args: &SolveArgs) -> Result<u8> {
    let x = load_source("x", args.x.x.as_deref(), args.x.x_file.as_deref())?;
    let y = load_source("y", args.y.y.as_deref(), args.y.y_file.as_deref())?;
    let p = load_source(
        "include",
        args.include.include.as_deref(),
        args.include.include_file.as_deref(),
    )?;
    let q = load_source(
        "exclude",
        args.exclude.exclude.as_deref(),
        args.exclude.exclude_file.as_deref(),
    )?;
    let instance = Instance::new(x, y, p, q)?;

    let config = SolverConfig {
        algorithm: args.algo.to_algorithm(),
        memory_budget: memory_budget()?,
        collect_stats: args.stats,
    };
    let solved = solve(&instance, &config)?;

    let report = SolveReport {
        algorithm: args.algo.name(),
        x: instance.x().to_string(),
        y: instance.y().to_string(),
        include: instance.p().to_string(),
        exclude: instance.q().to_string(),
        n: instance.n(),
        m: instance.m(),
        s: instance.s(),
        t: instance.t(),
        feasible: solved.outcome.is_feasible(),
        length: solved.outcome.length(),
        lcs: solved.outcome.witness().map(|w| w.to_string()),
        stats: args.stats.then(|| StatsReport::from(&solved.stats)),
    };
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Text => print_text(&report),
    }
    Ok(if report.feasible { 0 } else { 2 })
}

fn print_text(report: &SolveReport) {
    println!("feasible: {}", report.feasible);
    if let Some(length) = report.length {
        println!("length: {length}");
    }
    if let Some(lcs) = &report.lcs {
        println!("lcs: {lcs}");
    }
    println!("algorithm: {}", report.algorithm);
    if let Some(stats) = &report.stats {
        println!(
            "cell updates: {} (suffix {}, forward {}, reverse {})",
            stats.cell_updates, stats.suffix_updates, stats.forward_updates, stats.reverse_updates
        );
        println!("combine candidates: {}", stats.combine_candidates);
        println!("wall time: {} us", stats.wall_time_us);
    }
}
