use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qcount_cli::verify::{self, Fault, VerifyOptions};
use qcount_cli::{cmd_delta, cmd_enumerate, cmd_ng, CliError, Format, Side};

#[derive(Parser)]
#[command(
    name = "qcount",
    version,
    about = "Rational curve counts on K3 surfaces and the combinatorics behind them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print N_g for g = 0..=max-genus
    Ng {
        #[arg(long)]
        max_genus: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Write the table here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List every configuration of weight m
    Enumerate {
        #[arg(long)]
        m: u64,
        #[arg(long, value_enum)]
        side: Side,
        /// Only admissible multiplicity configurations
        #[arg(long)]
        admissible: bool,
    },
    /// Evaluate the delta lower bound of a multiplicity configuration
    Delta {
        /// JSON file with {"mu", "mu_neg", "mu_pos"}, or - for standard input
        #[arg(long)]
        config: String,
    },
    /// Run the identity suite
    Verify {
        #[arg(long, default_value_t = 40)]
        order: usize,
        #[arg(long, default_value_t = 12)]
        max_m: u64,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<Fault>,
    },
}

fn read_config(source: &str) -> Result<String, CliError> {
    if source == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        fs::read_to_string(source)
            .map_err(|e| CliError::Usage(format!("cannot read {source}: {e}")))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    match cli.command {
        Command::Ng {
            max_genus,
            format,
            out,
        } => {
            let table = cmd_ng(max_genus, format)?;
            match out {
                Some(path) => fs::write(path, table)?,
                None => stdout.lock().write_all(table.as_bytes())?,
            }
        }
        Command::Enumerate {
            m,
            side,
            admissible,
        } => {
            stdout
                .lock()
                .write_all(cmd_enumerate(m, side, admissible).as_bytes())?;
        }
        Command::Delta { config } => {
            let text = read_config(&config)?;
            stdout.lock().write_all(cmd_delta(&text)?.as_bytes())?;
        }
        Command::Verify {
            order,
            max_m,
            max_n,
            inject_fault,
        } => {
            let report = verify::run(&VerifyOptions {
                order,
                max_m,
                max_n,
                fault: inject_fault,
            });
            writeln!(stdout.lock(), "{report}")?;
            eprintln!("elapsed: {} ms", report.elapsed_ms());
            if !report.passed() {
                let names: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
                return Err(CliError::Verification(names.join(", ")));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qcount: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
