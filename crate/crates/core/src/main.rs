use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use polyrec::constructors::{Constructor, DensitySpec};
use polyrec::enumeration::{densities, NumerationSystem, DEFAULT_STATE_BUDGET};
use polyrec::io::{load_bundle, parse_polynomial, read_dfa, save_bundle, write_dfa, SYSTEM_FILE};
use polyrec::pipeline::{build_system_with, verify_recognizer, BuildOptions};
use polyrec::{Error, Result};

#[derive(Parser)]
#[command(name = "polyrec", version, about = "Numeration systems recognizing polynomial images")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a system and recognizer for a polynomial.
    Build {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_STATE_BUDGET)]
        state_budget: usize,
    },
    /// Write one of the stock languages.
    Lang {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        alpha: Option<u64>,
        #[arg(long)]
        c: Option<u64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the representation of a value.
    Rep {
        #[arg(long)]
        system: PathBuf,
        value: BigUint,
    },
    /// Print the value of a word given as tokens.
    Val {
        #[arg(long)]
        system: PathBuf,
        #[arg(num_args = 0..)]
        word: Vec<String>,
    },
    /// Print word counts per length.
    Density {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// Check the recognizer against brute-force enumeration.
    Verify {
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        max_value: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Power,
    Stirling,
    Poldif,
    Const,
}

fn system_dfa(path: &Path) -> Result<polyrec::automata::Dfa> {
    if path.is_dir() {
        read_dfa(&path.join(SYSTEM_FILE))
    } else {
        read_dfa(path)
    }
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run(cmd: Command) -> Result<ExitCode> {
    let mut out = std::io::stdout().lock();
    match cmd {
        Command::Build { poly, out: dir, state_budget } => {
            let p = parse_polynomial(&poly)?;
            let bundle = build_system_with(&p, BuildOptions { state_budget })?;
            save_bundle(&bundle, &dir)?;
        }
        Command::Lang { kind, k, alpha, c, out: file } => {
            let spec = match kind {
                Kind::Power => DensitySpec::Power(k),
                Kind::Stirling if k >= 1 => DensitySpec::Stirling(k),
                Kind::Poldif => match alpha {
                    Some(a) if k >= 1 && a >= 1 => DensitySpec::PolDif { k, alpha: a },
                    _ => return Ok(usage("poldif needs --k ≥ 1 and --alpha ≥ 1")),
                },
                Kind::Const => match c {
                    Some(c) if c >= 1 => DensitySpec::Const(c),
                    _ => return Ok(usage("const needs --c ≥ 1")),
                },
                Kind::Stirling => return Ok(usage("stirling needs --k ≥ 1")),
            };
            write_dfa(&file, &Constructor::new().build(spec))?;
        }
        Command::Rep { system, value } => {
            let sys = NumerationSystem::new(system_dfa(&system)?)?;
            writeln!(out, "{}", sys.alphabet().render(&sys.unrank(&value)))?;
        }
        Command::Val { system, word } => {
            let sys = NumerationSystem::new(system_dfa(&system)?)?;
            let w = sys.alphabet().parse_word(&word.join(" "))?;
            writeln!(out, "{}", sys.rank(&w)?)?;
        }
        Command::Density { system, max_len } => {
            let d = system_dfa(&system)?;
            for (n, c) in densities(&d, max_len).iter().enumerate() {
                writeln!(out, "{n}\t{c}")?;
            }
        }
        Command::Verify { system, max_value } => {
            let b = load_bundle(&system)?;
            b.exceptional_words()?;
            let words = max_value.checked_add(1).ok_or(Error::ResourceLimit(usize::MAX))?;
            match verify_recognizer(&b.system, &b.recognizer, &b.manifest.polynomial, words)? {
                None => writeln!(out, "ok: ranks 0..={max_value} agree")?,
                Some(m) => {
                    let verdict = if m.accepted { "accepted but not a value" } else { "a value but rejected" };
                    eprintln!("mismatch at rank {}: {:?} is {verdict}", m.rank, b.system.alphabet().render(&m.word));
                    return Ok(ExitCode::from(1));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
