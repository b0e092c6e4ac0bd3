//! Command-line driver. Exit codes: 0 when every hard suite passes, 2 when
//! only comparison mismatches occurred, 1 on errors or hard failures.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use flagcomb::complex::SimplicialComplex;
use flagcomb::poset::CellPoset;
use flagcomb_cli::{
    parse_complex, run_suite, search_gamma_witness, stats_csv, stats_row, SuiteConfig,
    SUITE_NAMES,
};

#[derive(Parser)]
#[command(
    name = "flagcomb",
    about = "Exact combinatorics of flag complexes: generators, statistics, and identity suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct OutArg {
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a complex from an expression such as cycle:5, cross:3, or
    /// join(cycle:5,cycle:5) and print it as canonical JSON.
    Gen {
        spec: String,
        #[command(flatten)]
        out: OutArg,
    },
    /// Face statistics (f, h, gamma, g, P) for one or more expressions.
    Stats {
        specs: Vec<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[command(flatten)]
        out: OutArg,
    },
    /// Run one identity suite, or `all`.
    Suite {
        /// gamcheb | tchebF | danzer | interval | booldecomp | balanced |
        /// danzinput | invtcheb | all
        name: String,
        #[arg(long, default_value_t = 12)]
        max_n: u32,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        out: OutArg,
    },
    /// Search for complexes realizing the h-vector readings of a sphere.
    SearchGammaWitness {
        spec: String,
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        #[command(flatten)]
        out: OutArg,
    },
    /// Read a complex or poset JSON file and rewrite it canonically.
    Io {
        input: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
}

fn emit(out: &OutArg, text: &str) -> Result<(), String> {
    match &out.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("writing {path:?}: {e}")),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run() -> Result<u8, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen { spec, out } => {
            let c = parse_complex(&spec).map_err(|e| e.to_string())?;
            emit(&out, &c.to_json_string())?;
            Ok(0)
        }
        Command::Stats { specs, format, out } => {
            if specs.is_empty() {
                return Err("stats needs at least one complex expression".into());
            }
            let rows: Result<Vec<_>, String> = specs
                .iter()
                .map(|s| {
                    parse_complex(s)
                        .map(|c| stats_row(s, &c))
                        .map_err(|e| e.to_string())
                })
                .collect();
            let rows = rows?;
            let text = match format {
                Format::Csv => stats_csv(&rows),
                Format::Json => serde_json::to_string_pretty(&rows).expect("rows serialize"),
            };
            emit(&out, &text)?;
            Ok(0)
        }
        Command::Suite { name, max_n, seed, format, out } => {
            let config = SuiteConfig { max_n, seed, ..Default::default() };
            let names: Vec<&str> = if name == "all" {
                SUITE_NAMES.to_vec()
            } else {
                vec![name.as_str()]
            };
            let mut reports = Vec::new();
            let mut hard_failure = false;
            let mut mismatches = false;
            for n in names {
                let report = run_suite(n, &config).map_err(|e| e.to_string())?;
                for line in report.summary_lines() {
                    eprintln!("{line}");
                }
                hard_failure |= !report.passed;
                mismatches |= report.mismatches > 0;
                reports.push(report);
            }
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&reports).expect("reports serialize"),
                Format::Csv => {
                    let mut t = String::from("suite,case,identity,pass,comparison,detail\n");
                    for r in &reports {
                        for c in &r.cases {
                            for v in &c.verdicts {
                                t.push_str(&format!(
                                    "{},\"{}\",\"{}\",{},{},\"{}\"\n",
                                    r.suite,
                                    c.input,
                                    v.identity,
                                    v.pass,
                                    v.comparison,
                                    v.detail.as_deref().unwrap_or("").replace('"', "'")
                                ));
                            }
                        }
                    }
                    t
                }
            };
            emit(&out, &text)?;
            if hard_failure {
                Ok(1)
            } else if mismatches {
                Ok(2)
            } else {
                Ok(0)
            }
        }
        Command::SearchGammaWitness { spec, max_n, out } => {
            let c = parse_complex(&spec).map_err(|e| e.to_string())?;
            let report = search_gamma_witness(&spec, &c, max_n)?;
            emit(&out, &serde_json::to_string_pretty(&report).expect("report serializes"))?;
            Ok(0)
        }
        Command::Io { input, out } => {
            let text = fs::read_to_string(&input).map_err(|e| format!("reading {input:?}: {e}"))?;
            let canonical = if let Ok(c) = SimplicialComplex::from_json_str(&text) {
                c.to_json_string()
            } else if let Ok(p) = CellPoset::from_json_str(&text) {
                p.to_json_string()
            } else if let Ok(r) = serde_json::from_str::<Vec<flagcomb_cli::SuiteReport>>(&text) {
                serde_json::to_string_pretty(&r).expect("reports serialize")
            } else {
                return Err(format!(
                    "{input:?} holds neither a complex, a poset, nor a suite report"
                ));
            };
            emit(&out, &canonical)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
