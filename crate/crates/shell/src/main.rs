use std::fs::{File, OpenOptions};
use std::io::{self, BufReader, IsTerminal};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use symkern_shell::bench::{bench_run, test_ids, write_csv};
use symkern_shell::repl::repl;

#[derive(Parser)]
#[command(name = "symsh", about = "Symbolic expression shell and benchmark runner")]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Interactive session; statements end with ';'.
    Shell {
        /// Replay statements from a file instead of stdin.
        #[arg(long)]
        script: Option<PathBuf>,
    },
    /// Time one test and check its result.
    Bench {
        #[arg(long = "test")]
        test: String,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        reps: u32,
        /// Append CSV rows here (a header is written to a new file).
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// List the registered benchmark ids.
    List,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command.unwrap_or(Command::Shell { script: None }) {
        Command::Shell { script } => shell(script),
        Command::Bench { test, n, reps, csv } => bench(&test, n, reps, csv),
        Command::List => {
            test_ids().for_each(|id| println!("{id}"));
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("symsh: {e}");
            ExitCode::FAILURE
        }
    }
}

fn shell(script: Option<PathBuf>) -> Result<(), Box<dyn std::error::Error>> {
    let mut out = io::stdout().lock();
    match script {
        Some(path) => repl(BufReader::new(File::open(path)?), &mut out, false)?,
        None => {
            let stdin = io::stdin();
            let prompt = stdin.is_terminal();
            repl(stdin.lock(), &mut out, prompt)?;
        }
    }
    Ok(())
}

fn bench(test: &str, n: u64, reps: u32, csv: Option<PathBuf>) -> Result<(), Box<dyn std::error::Error>> {
    let mut records = Vec::new();
    for _ in 0..reps.max(1) {
        records.push(bench_run(test, n)?);
    }
    write_csv(io::stdout().lock(), &records, false)?;
    if let Some(path) = csv {
        let fresh = !path.exists() || std::fs::metadata(&path)?.len() == 0;
        let file = OpenOptions::new().create(true).append(true).open(&path)?;
        write_csv(file, &records, fresh)?;
    }
    Ok(())
}
