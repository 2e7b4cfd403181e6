use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use cartan_pi0::doc::ReportDoc;
use cartan_pi0::query::needs_assumption;
use cartan_pi0::render::render_text;
use cartan_pi0::selftest::{run_selftest, Depth, SelftestOptions};
use cartan_pi0::{exit, parse_queries, run_batch, AppError, Catalog, RunOptions};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "cartan-pi0", version, about = "Component groups of Cartan and isotropy subgroups of real forms")]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Catalog file in JSON Lines; defaults to the built-in catalog.
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Doc,
}

#[derive(Subcommand)]
enum Command {
    /// Run a query document (one object or an array); `-` reads stdin.
    Query {
        #[arg(default_value = "-")]
        file: String,
        /// Acknowledge that the Cartan subalgebra is maximally noncompact.
        #[arg(long)]
        assume_maximally_noncompact: bool,
        /// Include wall-clock time in reports.
        #[arg(long)]
        timing: bool,
    },
    /// List the catalog of named real forms.
    Catalog,
    /// Run the cross-check suites.
    Selftest {
        #[arg(long, value_enum, default_value_t = Depth::Small)]
        depth: Depth,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, hide = true)]
        inject_failure: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { exit::USAGE as u8 } else { exit::OK as u8 });
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}

fn load_catalog(path: &Option<PathBuf>) -> Result<Catalog, AppError> {
    match path {
        Some(p) => Catalog::from_path(p),
        None => Catalog::builtin(),
    }
}

fn json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("documents serialize")
}

fn run(cli: Cli) -> Result<i32, AppError> {
    let catalog = load_catalog(&cli.catalog)?;
    match cli.command {
        Command::Query { file, assume_maximally_noncompact, timing } => {
            let text = if file == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(|e| AppError::Usage(format!("stdin: {}", e)))?;
                s
            } else {
                std::fs::read_to_string(&file).map_err(|e| AppError::Usage(format!("cannot read {}: {}", file, e)))?
            };
            let is_array = text.trim_start().starts_with('[');
            let queries = parse_queries(&text).map_err(AppError::Parse)?;
            if !assume_maximally_noncompact && queries.iter().any(needs_assumption) {
                return Err(AppError::Usage(
                    "isotropy and delta requests rest on a maximally noncompact Cartan subalgebra; \
                     pass --assume-maximally-noncompact to acknowledge it"
                        .to_string(),
                ));
            }
            let opts = RunOptions { assume_maximally_noncompact, timing };
            let reports = run_batch(&queries, &catalog, &opts);
            emit(cli.output, &reports, is_array);
            Ok(cartan_pi0::exit_code(&reports))
        }
        Command::Catalog => {
            let listing = catalog.listing();
            match cli.output {
                Output::Text => {
                    for e in &listing {
                        println!("{}", e.summary());
                    }
                }
                Output::Doc => println!("{}", json(&listing)),
            }
            Ok(exit::OK)
        }
        Command::Selftest { depth, seed, inject_failure } => {
            let results = run_selftest(&catalog, &SelftestOptions { depth, seed, inject_failure });
            match cli.output {
                Output::Text => {
                    for r in &results {
                        println!(
                            "{} {:<26} {:>6} cases {:>7} ms",
                            if r.passed { "PASS" } else { "FAIL" },
                            r.name,
                            r.cases,
                            r.elapsed_ms
                        );
                        for f in &r.failures {
                            println!("     {}", f);
                        }
                    }
                }
                Output::Doc => println!("{}", json(&results)),
            }
            Ok(if results.iter().all(|r| r.passed) { exit::OK } else { exit::DEFECT })
        }
    }
}

fn emit(output: Output, reports: &[ReportDoc], is_array: bool) {
    match output {
        Output::Text => {
            let blocks: Vec<String> = reports.iter().map(render_text).collect();
            print!("{}", blocks.join("\n"));
        }
        Output::Doc if is_array => println!("{}", json(&reports)),
        Output::Doc => {
            for r in reports {
                println!("{}", json(r));
            }
        }
    }
}
