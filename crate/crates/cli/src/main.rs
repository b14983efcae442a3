use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cmtensor_core::frontend::{execute, parse_session, RunConfig};
use cmtensor_core::polyring::{Limits, PrimeField, DEFAULT_PRIME};
use cmtensor_core::theorems::{generate_corpus, CorpusBudget, InstanceRecord};
use serde_json::json;

#[derive(Parser)]
#[command(name = "cmtensor", version, about = "Grade and Cohen-Macaulay checks for tensor products of algebras")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum CorpusFormat {
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a session file; exits 0 iff every assert and check passes.
    Run {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_PRIME as u64)]
        prime: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = Limits::default().gb_step_budget)]
        gb_step_budget: u64,
        #[arg(long, default_value_t = Limits::default().nzd_retries)]
        nzd_retries: u32,
    },
    /// Print the seeded instance corpus.
    Corpus {
        #[arg(long)]
        seed: u64,
        /// `small`, `medium`, `large` or a number of random instances.
        #[arg(long, default_value = "small")]
        size: String,
        #[arg(long, value_enum, default_value = "json")]
        format: CorpusFormat,
    },
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn run(file: PathBuf, config: RunConfig, format: Format) -> ExitCode {
    let text = match std::fs::read_to_string(&file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cmtensor: cannot read {}: {e}", file.display());
            return ExitCode::from(2);
        }
    };
    let field = match PrimeField::new(config.prime) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("cmtensor: {e}");
            return ExitCode::from(2);
        }
    };
    let ast = match parse_session(&text, field) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("{}:{e}", file.display());
            return ExitCode::from(2);
        }
    };
    let report = match execute(&ast, &config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("cmtensor: {e}");
            return ExitCode::from(2);
        }
    };
    match format {
        Format::Json => emit(&format!("{}\n", report.to_json())),
        Format::Text => emit(&report.to_text()),
    }
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn corpus(seed: u64, size: &str) -> ExitCode {
    let Some(budget) = CorpusBudget::parse(size) else {
        eprintln!("cmtensor: unknown corpus size `{size}` (expected small, medium, large or a number)");
        return ExitCode::from(2);
    };
    match generate_corpus(seed, budget) {
        Ok(c) => {
            let records: Vec<InstanceRecord> = c.instances.iter().map(|i| i.record()).collect();
            let out = json!({ "seed": seed, "size": size, "prime": DEFAULT_PRIME, "instances": records });
            emit(&format!("{}\n", serde_json::to_string_pretty(&out).expect("records serialize")));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("cmtensor: {e}");
            ExitCode::from(2)
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Cmd::Run { file, prime, seed, format, gb_step_budget, nzd_retries } => {
            run(file, RunConfig { prime, seed, gb_step_budget, nzd_retries }, format)
        }
        Cmd::Corpus { seed, size, format: CorpusFormat::Json } => corpus(seed, &size),
    }
}
