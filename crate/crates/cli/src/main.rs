//! `fbword`: inspect, enumerate and verify fully bordered binary words.
//!
//! Exit codes: 0 success, 1 a verification or golden check failed,
//! 2 usage or parse error.

mod commands;
mod output;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{CliError, Suite};
use output::OutputFormat;

#[derive(Debug, Parser)]
#[command(
    name = "fbword",
    version,
    about = "Binary words with exactly two unbordered conjugates"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: OutputFormat,

    /// Worker threads for exhaustive suites (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Borders, periods, roots, Lyndon status, local roots and census of one word.
    Analyze { word: String },
    /// Census table over all words of length 2..=N, with golden-file regression.
    Census {
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        /// Golden file to compare against (or write, with --bless).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        bless: bool,
    },
    /// Run verification suites.
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: Suite,
        /// Length bound; defaults to 18 for pair suites and 14 for all-word suites.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// List the members of F up to a total length.
    #[command(name = "generate-f")]
    GenerateF {
        #[arg(long, default_value_t = 8)]
        max_len: usize,
        #[arg(long)]
        with_trace: bool,
    },
    /// Descend from a fully bordered pair to a base pair.
    Descend { u: String, v: String },
}

fn run(cli: Cli) -> Result<output::Outcome, CliError> {
    #[cfg(feature = "parallel")]
    if let Some(k) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot configure {k} threads: {e}")))?;
    }
    match cli.command {
        Command::Analyze { word } => commands::analyze(&word),
        Command::Census {
            max_len,
            out,
            bless,
        } => commands::census_cmd(max_len, bless, out),
        Command::Verify { suite, max_len } => commands::verify(suite, max_len),
        Command::GenerateF {
            max_len,
            with_trace,
        } => commands::generate(max_len, with_trace),
        Command::Descend { u, v } => commands::descend_cmd(&u, &v),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok(outcome) => {
            let mut stdout = io::stdout().lock();
            match outcome
                .write(format, &mut stdout)
                .and_then(|_| stdout.flush())
            {
                Ok(()) => {}
                // e.g. piped into `head`
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => {}
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            }
            ExitCode::from(outcome.exit_code)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}
