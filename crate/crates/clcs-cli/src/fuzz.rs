//! `clcs fuzz`: differential testing of both dynamic programs against the
//! exhaustive reference on a deterministic instance stream.

use anyhow::{bail, Result};
use clcs::oracle::{brute_force_solve, gen_instance, GenParams, ORACLE_MAX_N};
use clcs::{solve_cubic, solve_quartic, validate, Algorithm, Instance, Outcome, SolverConfig};

use crate::args::FuzzArgs;
use crate::input::{memory_budget, parse_alphabet};

pub fn run(args: &FuzzArgs) -> Result<u8> {
    let (alpha_lo, alpha_hi) = parse_alphabet(&args.alphabet)?;
    for (flag, value) in [("--max-n", args.max_n), ("--max-m", args.max_m)] {
        if !(1..=ORACLE_MAX_N).contains(&value) {
            bail!(
                "{flag} must be in 1..={ORACLE_MAX_N} so the exhaustive reference stays \
                 tractable, got {value}"
            );
        }
    }
    for (flag, value) in [("--max-s", args.max_s), ("--max-t", args.max_t)] {
        if value == 0 {
            bail!("{flag} must be at least 1 (constraint strings are nonempty)");
        }
    }
    if !(0.0..=1.0).contains(&args.plant) {
        bail!(
            "--plant must be a probability in [0, 1], got {}",
            args.plant
        );
    }

    let config = SolverConfig {
        algorithm: Algorithm::Cubic,
        memory_budget: memory_budget()?,
        collect_stats: false,
    };
    let span = u64::from(alpha_hi - alpha_lo + 1);
    let mut mismatches = 0u64;
    let mut feasible = 0u64;
    for index in 0..args.iters {
        let params = GenParams {
            seed: args.seed,
            n_max: args.max_n,
            m_max: args.max_m,
            s_max: args.max_s,
            t_max: args.max_t,
            alphabet_size: alpha_lo + (index % span) as u8,
            plant_probability: args.plant,
        };
        let instance = gen_instance(&params, index);
        let expected = brute_force_solve(&instance)?;
        let quartic = solve_quartic(&instance, &config)?.outcome;
        let cubic = solve_cubic(&instance, &config)?.outcome;

        let problems = collect_problems(&instance, &expected, &quartic, &cubic);
        if !problems.is_empty() {
            mismatches += 1;
            report_mismatch(args.seed, index, &instance, &problems);
            if !args.keep_going {
                return Ok(4);
            }
        }
        if expected.is_feasible() {
            feasible += 1;
        }
    }

    if mismatches > 0 {
        eprintln!("{mismatches} mismatching instances out of {}", args.iters);
        return Ok(4);
    }
    let percent = if args.iters == 0 {
        0.0
    } else {
        feasible as f64 * 100.0 / args.iters as f64
    };
    println!("{} ok ({feasible} feasible, {percent:.1}%)", args.iters);
    Ok(0)
}

fn collect_problems(
    instance: &Instance,
    expected: &Outcome,
    quartic: &Outcome,
    cubic: &Outcome,
) -> Vec<String> {
    let mut problems = Vec::new();
    for (name, outcome) in [("quartic", quartic), ("cubic", cubic)] {
        if outcome.length() != expected.length() {
            problems.push(format!(
                "{name} answered {:?}, exhaustive reference says {:?}",
                outcome.length(),
                expected.length()
            ));
        }
    }
    for (name, outcome) in [("oracle", expected), ("quartic", quartic), ("cubic", cubic)] {
        if let Some(witness) = outcome.witness() {
            if !validate(instance, witness).is_valid() {
                problems.push(format!("{name} produced invalid witness {witness}"));
            }
        }
    }
    problems
}

fn report_mismatch(seed: u64, index: u64, instance: &Instance, problems: &[String]) {
    eprintln!("mismatch at seed {seed} index {index}");
    for problem in problems {
        eprintln!("  {problem}");
    }
    eprintln!(
        "  instance: x={} y={} include={} exclude={}",
        instance.x(),
        instance.y(),
        instance.p(),
        instance.q()
    );
    eprintln!(
        "  reproduce: clcs solve --x {} --y {} --include {} --exclude {} --algo quartic",
        instance.x(),
        instance.y(),
        instance.p(),
        instance.q()
    );
}
