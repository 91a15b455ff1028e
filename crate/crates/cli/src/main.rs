use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ringenv_cli::eval::{run, CliCommand, CliError, RunOptions};
use ringenv_cli::parse::parse;
use ringenv_core::envelopes::ClassTag;

/// Envelope calculator for commutative rings.
///
/// Rings are written in a small DSL: residue rings `Z/12`, finite fields
/// `F9`, presented quotients `F2[x,y]/(x^2, x*y - y)`, products
/// `Z/4 x Z/9`, truncations `fib(2,5)`, symbolic trivial extensions
/// `triv(Zp(3); free(1) + pruefer(3))`, and the bases `Zp(p)`, `Z`, `Q`.
///
/// Exit codes: 0 = computed (any status, including "discrepancy"),
/// 2 = parse error, 3 = resource limit, 4 = incompatible command.
#[derive(Parser)]
#[command(name = "ringenv", version, about, verbatim_doc_comment)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Field,
    Semisimple,
    Domain,
    Noetherian,
}

impl From<ClassArg> for ClassTag {
    fn from(c: ClassArg) -> ClassTag {
        match c {
            ClassArg::Field => ClassTag::Field,
            ClassArg::Semisimple => ClassTag::Semisimple,
            ClassArg::Domain => ClassTag::Domain,
            ClassArg::Noetherian => ClassTag::Noetherian,
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Ring expression in the DSL (omit when using --corpus)
    expr: Option<String>,

    /// Emit the report as JSON
    #[arg(long)]
    json: bool,

    /// Largest order of catalog test rings for the oracle
    #[arg(long, default_value_t = 9)]
    catalog_max_order: usize,

    /// S-pair reduction budget for Groebner basis runs
    #[arg(long, default_value_t = 100_000)]
    budget: usize,

    /// Evaluate every line of FILE as an expression (output ordered by
    /// input line)
    #[arg(long, value_name = "FILE")]
    corpus: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the ring has an envelope in a class and construct it
    Envelope {
        /// Target class
        #[arg(long, value_enum)]
        class: ClassArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Enumerate the prime (= maximal) ideals
    Spectrum {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compute the nilradical
    Nil {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Decompose into local factors along primitive idempotents
    Decompose {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Replay a theorem verdict against the homomorphism-search oracle
    Verify {
        /// Target class
        #[arg(long, value_enum)]
        class: ClassArg,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compute a reduced Groebner basis of a presented quotient
    Groebner {
        #[command(flatten)]
        common: CommonArgs,
    },
}

impl Command {
    fn split(self) -> (CliCommand, CommonArgs) {
        match self {
            Command::Envelope { class, common } => (CliCommand::Envelope(class.into()), common),
            Command::Spectrum { common } => (CliCommand::Spectrum, common),
            Command::Nil { common } => (CliCommand::Nil, common),
            Command::Decompose { common } => (CliCommand::Decompose, common),
            Command::Verify { class, common } => (CliCommand::Verify(class.into()), common),
            Command::Groebner { common } => (CliCommand::Groebner, common),
        }
    }
}

fn run_one(input: &str, command: CliCommand, opts: &RunOptions, json: bool) -> Result<String, CliError> {
    let expr = parse(input)?;
    let report = run(&expr, command, opts)?;
    Ok(if json {
        serde_json::to_string_pretty(&report.to_json()).expect("serializable")
    } else {
        report.to_text()
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, common) = cli.command.split();
    let opts = RunOptions {
        catalog_max_order: common.catalog_max_order,
        budget: common.budget,
    };

    let inputs: Vec<String> = match (&common.corpus, &common.expr) {
        (Some(path), _) => match std::fs::read_to_string(path) {
            Ok(text) => text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(String::from)
                .collect(),
            Err(e) => {
                eprintln!("cannot read corpus file {}: {e}", path.display());
                return ExitCode::from(3);
            }
        },
        (None, Some(expr)) => vec![expr.clone()],
        (None, None) => {
            eprintln!("missing ring expression (or --corpus FILE)");
            return ExitCode::from(2);
        }
    };

    let mut exit = 0u8;
    let mut json_reports: Vec<serde_json::Value> = Vec::new();
    for input in &inputs {
        match run_one(input, command, &opts, common.json) {
            Ok(rendered) => {
                if common.json && inputs.len() > 1 {
                    json_reports.push(serde_json::from_str(&rendered).expect("own output"));
                } else {
                    println!("{rendered}");
                    if inputs.len() > 1 {
                        println!();
                    }
                }
            }
            Err(e) => {
                eprintln!("{input}: {e}");
                if exit == 0 {
                    exit = e.exit_code();
                }
            }
        }
    }
    if common.json && inputs.len() > 1 {
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::Value::Array(json_reports)).expect("serializable")
        );
    }
    ExitCode::from(exit)
}
