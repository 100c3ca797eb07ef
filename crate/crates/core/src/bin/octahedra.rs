//! Command-line front end: sequence terms, catalog export, brute-force
//! counts, verification, and orbit statistics for a single configuration.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 verification mismatch.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lattice_octahedra::bfile;
use lattice_octahedra::enumerator::{sequence_terms, Catalog};
use lattice_octahedra::oracle::{brute_force_count_with, FEASIBILITY_BOUND};
use lattice_octahedra::symmetry::{count_in_cube_new, count_in_cube_old, orbit_stats};
use lattice_octahedra::PointConfig;

#[derive(Parser)]
#[command(
    name = "octahedra",
    version,
    about = "Count regular octahedra in {0..n}^3 (OEIS A178797)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a(n) for n = 1..=max.
    Terms {
        #[arg(long = "max", value_parser = clap::value_parser!(i64).range(1..))]
        max_n: i64,
        #[arg(long, value_enum, default_value_t = Format::Bfile)]
        format: Format,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Export the irreducible catalog (and its multiples) as JSON.
    Irreducible {
        #[arg(long = "max", value_parser = clap::value_parser!(i64).range(1..))]
        max_n: i64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Brute-force counts for n = 1..=max.
    Oracle {
        #[arg(long = "max", value_parser = clap::value_parser!(i64).range(1..))]
        max_n: i64,
        #[arg(long, value_enum, default_value_t = Format::Bfile)]
        format: Format,
        /// Allow grids above the feasibility bound.
        #[arg(long)]
        allow_large: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Compare pipeline terms with the oracle and with a reference b-file.
    Verify {
        #[arg(long = "max", value_parser = clap::value_parser!(i64).range(1..))]
        max_n: i64,
        /// Reference b-file; defaults to the bundled 100-term table.
        #[arg(long)]
        reference: Option<PathBuf>,
        /// Largest n checked against the oracle (default: min(max, 8)).
        #[arg(long)]
        oracle_max: Option<i64>,
        #[arg(long)]
        allow_large: bool,
    },
    /// Orbit statistics and both counting formulas for one configuration.
    Orbit {
        /// JSON array of [x, y, z] triples; `-` or omitted reads stdin.
        #[arg(long, short)]
        input: Option<PathBuf>,
        #[arg(long)]
        grid: i64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Bfile,
    Csv,
    Json,
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn render(terms: &[(i64, u64)], format: Format) -> String {
    match format {
        Format::Bfile => bfile::render(terms),
        Format::Csv => {
            let mut s = String::from("n,a_n\n");
            for (n, v) in terms {
                s += &format!("{n},{v}\n");
            }
            s
        }
        Format::Json => {
            let rows: Vec<_> = terms
                .iter()
                .map(|&(n, v)| serde_json::json!({ "n": n, "count": v }))
                .collect();
            serde_json::to_string_pretty(&rows).unwrap() + "\n"
        }
    }
}

fn emit(text: &str, output: Option<&Path>) -> io::Result<()> {
    match output {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn read_input(path: Option<&Path>) -> io::Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Terms {
            max_n,
            format,
            output,
        } => {
            let terms = sequence_terms(max_n)?;
            emit(&render(&terms, format), output.as_deref())?;
        }
        Command::Irreducible { max_n, output } => {
            emit(&Catalog::build(max_n)?.to_json(), output.as_deref())?;
        }
        Command::Oracle {
            max_n,
            format,
            allow_large,
            output,
        } => {
            let terms = (1..=max_n)
                .map(|n| brute_force_count_with(n, allow_large).map(|v| (n, v)))
                .collect::<Result<Vec<_>, _>>()?;
            emit(&render(&terms, format), output.as_deref())?;
        }
        Command::Verify {
            max_n,
            reference,
            oracle_max,
            allow_large,
        } => {
            let terms = sequence_terms(max_n)?;
            let oracle_max = oracle_max.unwrap_or(max_n.min(8)).min(max_n);
            if oracle_max > FEASIBILITY_BOUND && !allow_large {
                return Err(Failure::Usage(format!(
                    "--oracle-max {oracle_max} exceeds {FEASIBILITY_BOUND}; pass --allow-large"
                )));
            }
            for &(n, v) in terms.iter().take_while(|(n, _)| *n <= oracle_max) {
                let brute = brute_force_count_with(n, allow_large)?;
                if brute != v {
                    return Err(Failure::Mismatch(format!(
                        "n={n}: pipeline {v}, oracle {brute}"
                    )));
                }
            }
            let reference = match reference {
                Some(p) => {
                    let text =
                        fs::read_to_string(&p).map_err(|e| format!("{}: {e}", p.display()))?;
                    bfile::parse(&text).map_err(|e| format!("{}: {e}", p.display()))?
                }
                None => bfile::reference_terms(),
            };
            if let Some((n, got, want)) = bfile::first_mismatch(&terms, &reference) {
                return Err(Failure::Mismatch(format!(
                    "n={n}: pipeline {got}, reference {want}"
                )));
            }
            let compared = terms
                .iter()
                .filter(|(n, _)| reference.iter().any(|(r, _)| r == n))
                .count();
            println!(
                "ok: {max_n} terms; oracle agrees on n <= {oracle_max}; {compared} terms match the reference"
            );
        }
        Command::Orbit { input, grid } => {
            let text = read_input(input.as_deref())?;
            let config: PointConfig = serde_json::from_str(&text)
                .map_err(|e| format!("invalid point configuration: {e}"))?;
            let stats = orbit_stats(&config);
            let bbox = config.bounding_box();
            println!("box {:?}", bbox.dims);
            println!("omega {}", stats.omega);
            println!("alpha0 {}", stats.alpha0);
            println!("alpha {}", stats.alpha);
            println!("beta {}", stats.beta);
            println!("gamma {}", stats.gamma);
            println!("count_new {}", count_in_cube_new(&config, grid));
            println!("count_old {}", count_in_cube_old(&config, grid));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(2)
        }
    }
}
