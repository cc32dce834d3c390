use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use bruhat_chains::chains::{chain_count, WeightSpec};
use bruhat_chains::perm::Permutation;
use bruhat_chains::report::Report;
use bruhat_chains::schubert::{padded_schubert, principal_specialization, schubert};
use bruhat_chains::verify::run_target;
use bruhat_chains::{bruhat, Result};

#[derive(Parser)]
#[command(
    name = "bruhat",
    about = "Exact computations and identity checks in the strong Bruhat order"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// List the covers of a permutation with their (a,b,c,d) statistics
    Covers {
        /// Permutation in one-line notation, or e/w0 with --n
        w: String,
        /// Include the four cover statistics in text output
        #[arg(long)]
        stats: bool,
        #[arg(long, default_value = "3")]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print a Schubert polynomial
    Schubert {
        w: String,
        /// Print the padded form instead
        #[arg(long)]
        padded: bool,
        /// Print the principal specialization S_w(1,...,1)
        #[arg(long)]
        spec1: bool,
        #[arg(long, default_value = "3")]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Weighted chain count m_wt(v, w)
    Chains {
        /// Weight preset: code, chevalley, thm13, thm14, thm12:<pair>
        #[arg(long)]
        weights: String,
        v: String,
        w: String,
        #[arg(long, default_value = "3")]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a verification target and report pass/fail per check
    Verify {
        /// One of thm12, thm13, thm14, ex15, prop21..prop24,
        /// lem31..lem34, lem41, or all
        target: String,
        #[arg(long, default_value = "3")]
        n: usize,
        /// Sweep n = 3..=max-n instead of a single size
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
}

fn parse_perm(s: &str, n: usize) -> Result<Permutation> {
    match s {
        "e" => Ok(Permutation::identity(n)),
        "w0" => Ok(Permutation::longest_element(n)),
        _ => Permutation::parse(s),
    }
}

fn emit(out: &Option<std::path::PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn run() -> std::result::Result<ExitCode, String> {
    if let Ok(threads) = std::env::var("BRUHAT_THREADS") {
        let threads: usize = threads
            .parse()
            .map_err(|_| format!("BRUHAT_THREADS must be a number, got {threads:?}"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    let cli = Cli::parse();
    match cli.command {
        Command::Covers { w, stats, n, format } => {
            let w = parse_perm(&w, n).map_err(|e| e.to_string())?;
            let covers = bruhat::covers_up(&w);
            match format {
                Format::Json => {
                    let arr: Vec<serde_json::Value> =
                        covers.iter().map(|c| c.to_json()).collect();
                    println!("{}", serde_json::to_string_pretty(&arr).unwrap());
                }
                _ => {
                    for c in &covers {
                        if stats {
                            println!(
                                "{} <. {} via t({},{})  a={} b={} c={} d={}",
                                c.lower, c.upper, c.i, c.j, c.a, c.b, c.c, c.d
                            );
                        } else {
                            println!("{} <. {} via t({},{})", c.lower, c.upper, c.i, c.j);
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Schubert { w, padded, spec1, n, format } => {
            let w = parse_perm(&w, n).map_err(|e| e.to_string())?;
            if spec1 {
                println!("{}", principal_specialization(&w));
                return Ok(ExitCode::SUCCESS);
            }
            let poly = if padded { padded_schubert(&w) } else { schubert(&w) };
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&poly.to_json()).unwrap()),
                _ => println!("{poly}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Chains { weights, v, w, n, format } => {
            let spec = WeightSpec::preset(&weights, n).map_err(|e| e.to_string())?;
            let v = parse_perm(&v, n).map_err(|e| e.to_string())?;
            let w = parse_perm(&w, n).map_err(|e| e.to_string())?;
            if v.n() != n || w.n() != n {
                return Err(format!(
                    "permutations must live in S_{n} (got {} and {})",
                    v.n(),
                    w.n()
                ));
            }
            let m = chain_count(&spec, &v, &w).map_err(|e| e.to_string())?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&m.to_json()).unwrap()),
                _ => println!("{m}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { target, n, max_n, format, out } => {
            let sizes: Vec<usize> = match max_n {
                Some(top) => (3..=top).collect(),
                None => vec![n],
            };
            let mut reports: Vec<Report> = Vec::new();
            for size in sizes {
                reports.extend(run_target(&target, size).map_err(|e| e.to_string())?);
            }
            for r in &mut reports {
                r.sort_cases();
            }
            let all_pass = reports.iter().all(|r| r.passed());
            let text = match format {
                Format::Json => {
                    format!("{}\n", serde_json::to_string_pretty(&reports).unwrap())
                }
                Format::Tsv => reports.iter().map(|r| r.to_tsv()).collect(),
                Format::Text => reports.iter().map(|r| r.to_string()).collect(),
            };
            emit(&out, &text).map_err(|e| e.to_string())?;
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
