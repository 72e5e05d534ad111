use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use cep11::pipeline::{solve, verify_solution, Answer};
use cep11::toolkit::{
    gen_named, gen_planted, gen_random, oracle_decide, parse_certificate, parse_instance, write_certificate,
    write_instance, ORACLE_MAX_VERTICES,
};
use cep11::{Error, Instance};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(name = "cep11", version, about = "Cluster editing with at most one deletion and one addition per vertex")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance; prints YES or NO.
    Solve {
        /// Print the edit certificate after YES.
        #[arg(long, conflicts_with = "decision_only")]
        certificate: bool,
        /// Print the applied reduction steps as comment lines.
        #[arg(long)]
        trace: bool,
        /// Skip certificate construction entirely.
        #[arg(long)]
        decision_only: bool,
        file: PathBuf,
    },
    /// Decide by exhaustive search (at most 14 vertices).
    Oracle { file: PathBuf },
    /// Check a certificate against an instance; prints OK or the first failure.
    Verify { file: PathBuf, certfile: PathBuf },
    /// Write a generated instance to standard output.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Named graph, optionally with `:a0=ids:d0=ids` suffixes.
        #[arg(long)]
        name: Option<String>,
        /// Edge probability for random instances.
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        /// Largest clique of a planted instance.
        #[arg(long, default_value_t = 5)]
        clique_max: usize,
        /// Edit density of a planted instance.
        #[arg(long, default_value_t = 0.3)]
        density: f64,
    },
    /// Compare the solver with the oracle on random instances.
    Xcheck {
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Planted,
    Random,
    Named,
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load(path: &Path) -> anyhow::Result<Instance> {
    Ok(parse_instance(&read(path)?)?)
}

fn answer_code(a: Answer) -> u8 {
    match a {
        Answer::Yes => EXIT_YES,
        Answer::No => EXIT_NO,
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Solve { certificate, trace, decision_only, file } => {
            let inst = load(&file)?;
            let verdict = solve(&inst, certificate && !decision_only)?;
            println!("{}", verdict.answer);
            if let Some(sol) = &verdict.certificate {
                print!("{}", write_certificate(sol));
            }
            if trace {
                for (i, step) in verdict.trace.iter().enumerate() {
                    let vs: Vec<String> = step.vertices().iter().map(|v| (v.0 + 1).to_string()).collect();
                    println!("c step {} {} {}", i + 1, step.kind(), vs.join(" "));
                }
                println!(
                    "c stats steps {} components {} peak-component {}",
                    verdict.stats.total_steps, verdict.stats.components, verdict.stats.peak_component
                );
                if let Some(reason) = &verdict.reason {
                    println!("c reason {reason}");
                }
            }
            Ok(answer_code(verdict.answer))
        }
        Command::Oracle { file } => {
            let inst = load(&file)?;
            let yes = oracle_decide(&inst)?;
            println!("{}", if yes { "YES" } else { "NO" });
            Ok(if yes { EXIT_YES } else { EXIT_NO })
        }
        Command::Verify { file, certfile } => {
            let inst = load(&file)?;
            let text = read(&certfile)?;
            // accept `solve --certificate` output directly
            let body = match text.trim_start().strip_prefix("YES") {
                Some(rest) => rest,
                None => &text,
            };
            let sol = parse_certificate(body, Some(inst.vertex_count()))?;
            match verify_solution(&inst, &sol) {
                Ok(()) => {
                    println!("OK");
                    Ok(EXIT_YES)
                }
                Err(why) => {
                    println!("{why}");
                    Ok(EXIT_NO)
                }
            }
        }
        Command::Gen { kind, n, seed, name, p, clique_max, density } => {
            let inst = match kind {
                Kind::Planted => gen_planted(n, seed, clique_max, density)?,
                Kind::Random => gen_random(n, p, seed)?,
                Kind::Named => gen_named(name.as_deref().context("--kind named needs --name")?)?,
            };
            print!("{}", write_instance(&inst));
            Ok(EXIT_YES)
        }
        Command::Xcheck { n_max, samples, seed } => {
            if n_max == 0 || n_max > ORACLE_MAX_VERTICES {
                anyhow::bail!(Error::Usage(format!("--n-max must lie in 1..={ORACLE_MAX_VERTICES}")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (mut yes, mut no, mut disagree) = (0usize, 0usize, 0usize);
            for _ in 0..samples {
                let n = rng.gen_range(1..=n_max);
                let p = rng.gen_range(0.1..=0.5);
                let inst = gen_random(n, p, rng.gen())?;
                let expected = oracle_decide(&inst)?;
                let verdict = solve(&inst, true)?;
                if (verdict.answer == Answer::Yes) != expected {
                    disagree += 1;
                    eprintln!("disagreement:\n{}", write_instance(&inst));
                }
                if expected {
                    yes += 1;
                } else {
                    no += 1;
                }
            }
            println!("samples {samples} yes {yes} no {no} disagreements {disagree}");
            Ok(if disagree == 0 { EXIT_YES } else { EXIT_NO })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            let code = match err.downcast_ref::<Error>() {
                Some(Error::Invariant(_)) => EXIT_INTERNAL,
                _ => EXIT_INPUT,
            };
            ExitCode::from(code)
        }
    }
}
