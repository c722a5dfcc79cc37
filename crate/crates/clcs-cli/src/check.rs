//! `clcs check`: validate a candidate answer against an instance.

use anyhow::Result;
use clcs::{validate, Instance};

use crate::args::{CheckArgs, Format};
use crate::input::load_source;
use crate::report::CheckReport;

pub fn run(args: &CheckArgs) -> Result<u8> {
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
    let candidate = load_source(
        "candidate",
        args.candidate.candidate.as_deref(),
        args.candidate.candidate_file.as_deref(),
    )?;
    let instance = Instance::new(x, y, p, q)?;

    let verdict = validate(&instance, &candidate);
    let report = CheckReport {
        x: instance.x().to_string(),
        y: instance.y().to_string(),
        include: instance.p().to_string(),
        exclude: instance.q().to_string(),
        candidate: candidate.to_string(),
        length: verdict.length,
        is_common_subsequence: verdict.is_common_subsequence,
        includes_required_substring: verdict.includes_p_substring,
        excludes_forbidden_subsequence: verdict.excludes_q_subsequence,
        valid: verdict.is_valid(),
    };
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Text => {
            println!("candidate: {}", report.candidate);
            println!("length: {}", report.length);
            println!("common subsequence: {}", report.is_common_subsequence);
            println!(
                "includes required substring: {}",
                report.includes_required_substring
            );
            println!(
                "excludes forbidden subsequence: {}",
                report.excludes_forbidden_subsequence
            );
            println!("valid: {}", report.valid);
        }
    }
    Ok(if report.valid { 0 } else { 2 })
}
