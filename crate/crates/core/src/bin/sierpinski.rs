use std::io;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sierpinski::closedform::decompose;
use sierpinski::exactmath::{
    check_identity_erdosh1, check_identity_erdosh2, cleared_sides, IdentitySampler,
};
use sierpinski::render::{to_json, to_text, triples_csv};
use sierpinski::{brute_force, invert_p1, resume_sweep, run_sweep, Error, SearchBudget, SweepConfig, UnitTriple};

/// Exit codes: 0 success, 1 verification false, 2 bad input or unsupported
/// residue, 3 no witness found.
#[derive(Parser)]
#[command(name = "sierpinski", version, about = "Exact unit-fraction decompositions of r/a")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose r/a into three unit fractions (r in 4, 5, 6)
    Decompose {
        #[arg(long, default_value_t = 5)]
        r: u64,
        #[arg(long)]
        a: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check r/a = 1/b + 1/c + 1/d exactly
    Verify {
        #[arg(long, default_value_t = 5)]
        r: u64,
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        d: u64,
    },
    /// Find (x, y, z) with z(x(5y - 1) - y) - x = q
    Invert {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 3)]
        small_range: u64,
        #[arg(long)]
        xmax: Option<u64>,
    },
    /// Search witnesses for q = q_start, q_start + step, ... <= q_max
    Sweep {
        #[arg(long, default_value_t = SweepConfig::DEFAULT_STEP)]
        q_start: u64,
        #[arg(long, default_value_t = SweepConfig::DEFAULT_Q_MAX)]
        q_max: u64,
        #[arg(long, default_value_t = SweepConfig::DEFAULT_STEP)]
        step: u64,
        #[arg(long, default_value_t = SweepConfig::DEFAULT_BATCH_SIZE)]
        batch_size: u64,
        /// Worker threads (default: available cores)
        #[arg(long, env = "SIERPINSKI_JOBS")]
        jobs: Option<usize>,
        #[arg(long, default_value = "Results")]
        out: PathBuf,
        /// Skip batches already present in the output directory
        #[arg(long)]
        resume: bool,
    },
    /// Enumerate decompositions of r/a by brute force
    Oracle {
        #[arg(long, default_value_t = 5)]
        r: u64,
        #[arg(long)]
        a: u64,
        /// Stop after this many triples (default: all)
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Check both parametric identities on seeded random parameters
    IdentityCheck {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

fn exit_for(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    match err {
        Error::NotFound { .. } => ExitCode::from(3),
        Error::Io { .. } => ExitCode::from(1),
        _ => ExitCode::from(2),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Decompose { r, a, format } => match decompose(r, a) {
            Ok(d) => {
                match format {
                    Format::Text => print!("{}", to_text(&d)),
                    Format::Json => println!("{}", to_json(&d)),
                }
                ExitCode::SUCCESS
            }
            Err(e) => exit_for(&e),
        },
        Command::Verify { r, a, b, c, d } => {
            if [r, a, b, c, d].contains(&0) {
                eprintln!("error: all of r, a, b, c, d must be positive");
                return ExitCode::from(2);
            }
            let t = UnitTriple::from_u64(b, c, d).expect("checked positive");
            let (lhs, rhs) = cleared_sides(r, a, &t);
            println!("{r}*{b}*{c}*{d} = {lhs}");
            println!("{a}*({c}*{d} + {b}*{d} + {b}*{c}) = {rhs}");
            if lhs == rhs {
                println!("true");
                ExitCode::SUCCESS
            } else {
                println!("false");
                ExitCode::from(1)
            }
        }
        Command::Invert { q, small_range, xmax } => {
            let budget = SearchBudget {
                small_range,
                xmax_override: xmax,
            };
            match invert_p1(q, &budget) {
                Ok(w) => {
                    println!("{w}");
                    ExitCode::SUCCESS
                }
                Err(e) => exit_for(&e),
            }
        }
        Command::Sweep {
            q_start,
            q_max,
            step,
            batch_size,
            jobs,
            out,
            resume,
        } => {
            let mut cfg = SweepConfig::new(out);
            cfg.q_start = q_start;
            cfg.q_max = q_max;
            cfg.step = step;
            cfg.batch_size = batch_size;
            if let Some(j) = jobs {
                cfg.jobs = j;
            }
            let mut stdout = io::stdout().lock();
            let res = if resume {
                resume_sweep(&cfg, &mut stdout)
            } else {
                run_sweep(&cfg, &mut stdout)
            };
            match res {
                Ok(report) if report.unsolved.is_empty() => ExitCode::SUCCESS,
                Ok(report) => {
                    eprintln!("{} values of q without a witness", report.unsolved.len());
                    ExitCode::from(3)
                }
                Err(e) => exit_for(&e),
            }
        }
        Command::Oracle { r, a, limit } => match brute_force(r, a, limit) {
            Ok(ts) => {
                print!("{}", triples_csv(&ts));
                ExitCode::SUCCESS
            }
            Err(e) => exit_for(&e),
        },
        Command::IdentityCheck { samples, seed } => {
            if samples == 0 {
                eprintln!("error: --samples must be positive");
                return ExitCode::from(2);
            }
            let mut sampler = IdentitySampler::new(seed);
            let mut fail = [0usize; 2];
            for _ in 0..samples {
                let p = sampler.next_erdosh1();
                if !matches!(check_identity_erdosh1(&p), Ok(true)) {
                    eprintln!("erdosh1 failed: {p:?}");
                    fail[0] += 1;
                }
                let p = sampler.next_erdosh2();
                if !matches!(check_identity_erdosh2(&p), Ok(true)) {
                    eprintln!("erdosh2 failed: {p:?}");
                    fail[1] += 1;
                }
            }
            println!("erdosh1: {}/{samples} passed", samples - fail[0]);
            println!("erdosh2: {}/{samples} passed", samples - fail[1]);
            if fail == [0, 0] {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
