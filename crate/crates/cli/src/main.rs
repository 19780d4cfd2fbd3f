//! Command-line front end. Every subcommand loads or constructs a monomial
//! ideal, runs the requested computation, and prints either a human-readable
//! line or a single JSON object (JSON lines for sweeps). Exit codes: 0 for
//! success with all cross-checks matching, 1 for a mismatch or broken
//! invariant, 2 for bad input, 3 for a tripped resource cap.

mod parse;
mod report;
mod verify;

use clap::{Args, Parser, Subcommand};
use monomult::formulas::{e0_cycle, e0_cycle_power, e0_power_formula};
use monomult::hilbert::{
    hilbert_value, k_polynomial_with, series_profile_with, DEFAULT_NODE_CAP,
};
use monomult::monomial::{symbolic_power, DEFAULT_GENERATOR_CAP};
use monomult::primes::{dim_profile, minimal_primes};
use monomult::{Error, MonomialIdeal, PivotRule};
use num_bigint::BigInt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use report::Report;

#[derive(Parser)]
#[command(
    name = "monomult",
    version,
    about = "Multiplicities, Hilbert series, and minimal primes of monomial ideals",
    long_about = "Computes dimension, multiplicity, Hilbert series data, and minimal primes \
                  for monomial ideals, with closed formulas for powers of squarefree ideals \
                  and for window ideals of cycles, each cross-checked against an independent \
                  series engine."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity of a power of an ideal: closed formula vs series engine
    Mult(MultArgs),
    /// Closed-form data for the width-d window ideal of an n-cycle
    Cycle(CycleArgs),
    /// Minimal primes of a squarefree monomial ideal
    Assprimes(IdealOnlyArgs),
    /// Dimension, top-component count, and height of a squarefree ideal
    Dim(IdealOnlyArgs),
    /// Hilbert series numerator and Hilbert function values
    Hilbert(HilbertArgs),
    /// Seeded sweep re-checking every identity the crate claims
    Verify(VerifyArgs),
}

#[derive(Args)]
struct IdealInput {
    /// Generators, e.g. "x1*x2, x2*x3^2" ("1" is the unit ideal)
    ideal: Option<String>,
    /// Read the generators from a file instead of the argument
    #[arg(long, conflicts_with = "ideal", value_name = "PATH")]
    file: Option<PathBuf>,
    /// Ambient variable count (default: highest index that appears)
    #[arg(long, value_name = "N")]
    n: Option<usize>,
}

impl IdealInput {
    fn load(&self) -> monomult::Result<MonomialIdeal> {
        let text = match (&self.ideal, &self.file) {
            (Some(t), None) => t.clone(),
            (None, Some(p)) => std::fs::read_to_string(p)
                .map_err(|e| Error::input(format!("cannot read {}: {e}", p.display())))?,
            _ => {
                return Err(Error::input(
                    "no ideal given: pass generators as an argument or via --file",
                ))
            }
        };
        parse::parse_ideal(&text, self.n)
    }
}

#[derive(Args)]
struct MultArgs {
    #[command(flatten)]
    input: IdealInput,
    /// Power s of the ideal to measure (ordinary power unless --symbolic)
    #[arg(long, default_value_t = 1, value_name = "S")]
    power: u64,
    /// Use the symbolic power (intersection of minimal prime powers)
    #[arg(long)]
    symbolic: bool,
    /// Evaluate only the closed formula, skip the series engine
    #[arg(long, conflicts_with = "engine_only")]
    formula_only: bool,
    /// Run only the series engine (works for non-squarefree ideals too)
    #[arg(long)]
    engine_only: bool,
    /// Emit one JSON object instead of a human-readable line
    #[arg(long)]
    json: bool,
    /// Node budget for the series recursion (overrides MONOMULT_CAP)
    #[arg(long, value_name = "NODES")]
    cap: Option<u64>,
}

#[derive(Args)]
struct CycleArgs {
    /// Cycle length n = number of variables
    #[arg(long)]
    n: usize,
    /// Window width d: generators are the n cyclic products of d consecutive variables
    #[arg(long)]
    d: usize,
    /// Power s of the window ideal
    #[arg(long, default_value_t = 1, value_name = "S")]
    power: u64,
    /// Also list the minimal primes (all of cover size ceil(n/d))
    #[arg(long)]
    primes: bool,
    /// Evaluate only the closed formula, skip the series engine
    #[arg(long, conflicts_with = "engine_only")]
    formula_only: bool,
    /// Run only the series engine
    #[arg(long)]
    engine_only: bool,
    /// Emit JSON instead of human-readable lines
    #[arg(long)]
    json: bool,
    /// Node budget for the series recursion (overrides MONOMULT_CAP)
    #[arg(long, value_name = "NODES")]
    cap: Option<u64>,
}

#[derive(Args)]
struct IdealOnlyArgs {
    #[command(flatten)]
    input: IdealInput,
    /// Emit JSON instead of a human-readable line
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct HilbertArgs {
    #[command(flatten)]
    input: IdealInput,
    /// Report the Hilbert function value at this degree
    #[arg(long, value_name = "A")]
    degree: Option<u64>,
    /// Tabulate the Hilbert function on an inclusive degree range
    #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
    window: Option<Vec<u64>>,
    /// Emit JSON instead of human-readable lines
    #[arg(long)]
    json: bool,
    /// Node budget for the series recursion (overrides MONOMULT_CAP)
    #[arg(long, value_name = "NODES")]
    cap: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Largest variable count for sampled ideals
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    /// Largest window width in the cycle sweep
    #[arg(long, default_value_t = 11)]
    max_d: usize,
    /// Largest power checked per ideal
    #[arg(long, default_value_t = 3)]
    max_s: u64,
    /// Number of random squarefree ideals to sample
    #[arg(long, default_value_t = 200)]
    samples: usize,
    /// Seed for the sample generator; same seed, same case list
    #[arg(long, default_value_t = 0x5eed, value_name = "S")]
    seed: u64,
    /// Largest cycle length in the first-power cycle sweep
    #[arg(long, default_value_t = 12)]
    cycle_n: usize,
    /// Largest cycle length in the cycle power sweep
    #[arg(long, default_value_t = 8)]
    cycle_power_n: usize,
    /// Emit JSON lines instead of human-readable lines
    #[arg(long)]
    json: bool,
    /// Node budget per series computation (overrides MONOMULT_CAP)
    #[arg(long, value_name = "NODES")]
    cap: Option<u64>,
}

fn node_cap(flag: Option<u64>) -> monomult::Result<u64> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("MONOMULT_CAP") {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::input(format!("MONOMULT_CAP must be an unsigned integer, got {v:?}"))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_NODE_CAP),
        Err(e) => Err(Error::input(format!("MONOMULT_CAP: {e}"))),
    }
}

fn engine_profile(
    ideal: &MonomialIdeal,
    cap: u64,
) -> monomult::Result<monomult::SeriesProfile> {
    series_profile_with(ideal, PivotRule::default(), cap)
}

fn exit_for(report: &Report) -> u8 {
    match report.matched {
        Some(false) => 1,
        _ => 0,
    }
}

fn cmd_mult(args: MultArgs) -> monomult::Result<u8> {
    let start = Instant::now();
    let ideal = args.input.load()?;
    if args.power < 1 {
        return Err(Error::input("--power must be at least 1"));
    }
    if ideal.is_zero() {
        return Err(Error::input("the zero ideal has no multiplicity"));
    }
    if !ideal.is_proper() {
        return Err(Error::input("the unit ideal has no multiplicity"));
    }
    let cap = node_cap(args.cap)?;
    let n = ideal.num_vars();
    let mut report = Report::new(ideal.to_string(), n as u64);
    report.s = Some(args.power);

    if !args.engine_only {
        if !ideal.is_squarefree() {
            return Err(Error::input(
                "the closed formula needs a squarefree ideal; pass --engine-only to run just the series engine",
            ));
        }
        let profile = dim_profile(&ideal)?;
        report.d = Some(profile.d as u64);
        report.mu = Some(profile.mu.to_string());
        let formula = e0_power_formula(
            n as u64,
            profile.d as u64,
            &BigInt::from(profile.mu),
            args.power,
        )?;
        report.e0_formula = Some(formula.to_string());
    }

    let mut dims_agree = true;
    if !args.formula_only {
        let target = if args.symbolic {
            if !ideal.is_squarefree() {
                return Err(Error::input("symbolic powers need a squarefree ideal"));
            }
            let primes = minimal_primes(&ideal)?;
            symbolic_power(&ideal, args.power as usize, primes.primes())?
        } else {
            ideal.power_capped(args.power as usize, DEFAULT_GENERATOR_CAP)?
        };
        let engine = engine_profile(&target, cap)?;
        report.e0_engine = Some(engine.e0.to_string());
        match report.d {
            Some(d) => dims_agree = d == engine.d as u64,
            None => report.d = Some(engine.d as u64),
        }
    }

    report.matched = match (&report.e0_formula, &report.e0_engine) {
        (Some(f), Some(e)) => Some(f == e && dims_agree),
        _ => None,
    };
    report.ms = start.elapsed().as_millis() as u64;
    println!("{}", report.render(args.json));
    Ok(exit_for(&report))
}

fn cmd_cycle(args: CycleArgs) -> monomult::Result<u8> {
    let start = Instant::now();
    let spec = monomult::cycles::CycleIdealSpec::new(args.n, args.d)?;
    if args.power < 1 {
        return Err(Error::input("--power must be at least 1"));
    }
    let cap = node_cap(args.cap)?;
    let ideal = spec.ideal();
    let mut report = Report::new(ideal.to_string(), args.n as u64);
    report.s = Some(args.power);
    report.d = Some(spec.dim() as u64);

    if !args.engine_only {
        report.mu = Some(e0_cycle(args.n as u64, args.d as u64)?.to_string());
        report.e0_formula =
            Some(e0_cycle_power(args.n as u64, args.d as u64, args.power)?.to_string());
    }

    let mut dims_agree = true;
    if !args.formula_only {
        let power = ideal.power_capped(args.power as usize, DEFAULT_GENERATOR_CAP)?;
        let engine = engine_profile(&power, cap)?;
        report.e0_engine = Some(engine.e0.to_string());
        dims_agree = engine.d == spec.dim();
    }

    report.matched = match (&report.e0_formula, &report.e0_engine) {
        (Some(f), Some(e)) => Some(f == e && dims_agree),
        _ => None,
    };
    report.ms = start.elapsed().as_millis() as u64;
    println!("{}", report.render(args.json));

    if args.primes {
        let list = spec.assoc_primes()?;
        if args.json {
            let vars: Vec<&[usize]> = list.primes().iter().map(|p| p.vars()).collect();
            println!(
                "{}",
                serde_json::json!({ "input": ideal.to_string(), "primes": vars })
            );
        } else {
            for p in list.primes() {
                println!("{p}");
            }
        }
    }
    Ok(exit_for(&report))
}

fn cmd_assprimes(args: IdealOnlyArgs) -> monomult::Result<u8> {
    let start = Instant::now();
    let ideal = args.input.load()?;
    let list = minimal_primes(&ideal)?;
    let profile = dim_profile(&ideal)?;
    let ms = start.elapsed().as_millis() as u64;
    if args.json {
        let vars: Vec<&[usize]> = list.primes().iter().map(|p| p.vars()).collect();
        println!(
            "{}",
            serde_json::json!({
                "input": ideal.to_string(),
                "n": ideal.num_vars(),
                "d": profile.d,
                "mu": profile.mu.to_string(),
                "height": profile.height,
                "primes": vars,
                "ms": ms,
            })
        );
    } else {
        for p in list.primes() {
            println!("{p}");
        }
        println!(
            "{} minimal primes  d={}  mu={}  [{} ms]",
            list.primes().len(),
            profile.d,
            profile.mu,
            ms
        );
    }
    Ok(0)
}

fn cmd_dim(args: IdealOnlyArgs) -> monomult::Result<u8> {
    let start = Instant::now();
    let ideal = args.input.load()?;
    let profile = dim_profile(&ideal)?;
    let mut report = Report::new(ideal.to_string(), ideal.num_vars() as u64);
    report.d = Some(profile.d as u64);
    report.mu = Some(profile.mu.to_string());
    report.ms = start.elapsed().as_millis() as u64;
    println!("{}", report.render(args.json));
    Ok(0)
}

fn cmd_hilbert(args: HilbertArgs) -> monomult::Result<u8> {
    let start = Instant::now();
    let ideal = args.input.load()?;
    let cap = node_cap(args.cap)?;
    let n = ideal.num_vars();
    let numerator = k_polynomial_with(&ideal, PivotRule::default(), cap)?;
    let (c, deflated) = numerator.deflate_at_one();
    let d = n
        .checked_sub(c)
        .ok_or_else(|| Error::internal("numerator vanishing order exceeds variable count"))?;
    let e0 = deflated.eval_one();

    let mut degrees: Vec<u64> = Vec::new();
    if let Some(w) = &args.window {
        let (lo, hi) = (w[0], w[1]);
        if lo > hi {
            return Err(Error::input("--window needs LO <= HI"));
        }
        degrees.extend(lo..=hi);
    }
    if let Some(a) = args.degree {
        degrees.push(a);
    }
    let values: Vec<(u64, BigInt)> = degrees
        .iter()
        .map(|&a| (a, hilbert_value(&numerator, n, a)))
        .collect();
    let ms = start.elapsed().as_millis() as u64;

    if args.json {
        let coeffs: Vec<String> = numerator.coeffs().iter().map(|c| c.to_string()).collect();
        let vals: Vec<serde_json::Value> = values
            .iter()
            .map(|(a, v)| serde_json::json!({ "degree": a, "value": v.to_string() }))
            .collect();
        println!(
            "{}",
            serde_json::json!({
                "input": ideal.to_string(),
                "n": n,
                "numerator": coeffs,
                "d": d,
                "e0": e0.to_string(),
                "values": vals,
                "ms": ms,
            })
        );
    } else {
        let coeffs: Vec<String> = numerator.coeffs().iter().map(|c| c.to_string()).collect();
        println!(
            "{}  n={n}  numerator=[{}]  d={d}  e0={e0}  [{ms} ms]",
            ideal,
            coeffs.join(", ")
        );
        for (a, v) in &values {
            println!("H({a}) = {v}");
        }
    }
    Ok(0)
}

fn dispatch(cli: Cli) -> monomult::Result<u8> {
    match cli.command {
        Command::Mult(args) => cmd_mult(args),
        Command::Cycle(args) => cmd_cycle(args),
        Command::Assprimes(args) => cmd_assprimes(args),
        Command::Dim(args) => cmd_dim(args),
        Command::Hilbert(args) => cmd_hilbert(args),
        Command::Verify(args) => {
            let node_cap = node_cap(args.cap)?;
            verify::run(&verify::VerifyConfig {
                max_n: args.max_n,
                max_d: args.max_d,
                max_s: args.max_s,
                samples: args.samples,
                seed: args.seed,
                cycle_n: args.cycle_n,
                cycle_power_n: args.cycle_power_n,
                node_cap,
                json: args.json,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Input(_) => 2,
                Error::Resource(_) => 3,
                Error::Internal(_) => 1,
            })
        }
    }
}
