use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use crosscap::show::{self, GroupKind, RepFormat, RepKind};
use crosscap::{find, render, run_all, CliError, Inputs, OutputFormat, Status};
use crosscap_core::symp::MAX_GENUS;
use crosscap_core::verify::TableName;

/// Machine checks for finite representations of mapping class groups of
/// nonorientable surfaces.
#[derive(Parser, Debug)]
#[command(name = "crosscap", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run registered claims.
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Print a built object.
    Show {
        #[command(subcommand)]
        kind: ShowKind,
    },
}

#[derive(Args, Debug)]
struct RunOptions {
    /// Include runtimes in milliseconds (output is then not reproducible).
    #[arg(long)]
    ms: bool,
    /// Replace one builtin table by a broken copy.
    #[arg(long, hide = true, value_name = "TABLE")]
    corrupt: Option<String>,
}

#[derive(Subcommand, Debug)]
enum VerifyTarget {
    /// Every claim up to a genus ceiling.
    All {
        #[arg(long, default_value_t = 4)]
        max_genus: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        output: OutputFormat,
        #[command(flatten)]
        run: RunOptions,
    },
    /// One claim by id.
    Claim {
        id: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        output: OutputFormat,
        #[command(flatten)]
        run: RunOptions,
    },
}

#[derive(Subcommand, Debug)]
enum ShowKind {
    /// A builtin table: phi2-minus, phi1-alpha or phi2-plus.
    Tables { name: String },
    /// Generator images of a representation.
    Rep {
        #[arg(long, value_enum)]
        which: RepKind,
        #[arg(long)]
        g: usize,
        /// Number of crosscaps, for epsilon (default 2g+1).
        #[arg(long)]
        h: Option<usize>,
        #[arg(long, value_enum, default_value_t = RepFormat::Cycles)]
        format: RepFormat,
    },
    /// The relation catalogue checked for a generator system.
    Relations {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        flavor: String,
    },
    /// Order and index in Sp(2g, 2) of a model subgroup.
    Group {
        #[arg(long, value_enum)]
        name: GroupKind,
        #[arg(long)]
        g: usize,
    },
}

fn inputs(run: &RunOptions) -> Result<Inputs, CliError> {
    match &run.corrupt {
        None => Ok(Inputs::builtin()),
        Some(name) => {
            let name: TableName = name.parse().map_err(|_| CliError::Usage(format!("unknown table {name:?}")))?;
            Ok(Inputs::corrupted(name))
        }
    }
}

fn execute(cli: Cli) -> Result<(String, bool), CliError> {
    match cli.command {
        Command::Verify { target } => {
            let (reports, output) = match target {
                VerifyTarget::All { max_genus, output, run } => {
                    if !(1..=MAX_GENUS).contains(&max_genus) {
                        return Err(CliError::Usage(format!("--max-genus must be between 1 and {MAX_GENUS}")));
                    }
                    (run_all(max_genus, &inputs(&run)?, run.ms), output)
                }
                VerifyTarget::Claim { id, output, run } => {
                    let claim = find(&id).ok_or_else(|| CliError::Usage(format!("unknown claim {id:?}")))?;
                    (vec![claim.run(&inputs(&run)?, run.ms)], output)
                }
            };
            let ok = reports.iter().all(|r| r.status != Status::Fail);
            Ok((render(&reports, output), ok))
        }
        Command::Show { kind } => {
            let text = match kind {
                ShowKind::Tables { name } => show::tables(&name)?,
                ShowKind::Rep { which, g, h, format } => show::rep(which, g, h, format)?,
                ShowKind::Relations { h, flavor } => show::relations(h, &flavor)?,
                ShowKind::Group { name, g } => show::group(name, g)?,
            };
            Ok((text, true))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok((text, ok)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            if ok { ExitCode::SUCCESS } else { ExitCode::from(1) }
        }
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("usage: crosscap verify all|claim <id> | crosscap show tables|rep|relations|group (see --help)");
            ExitCode::from(2)
        }
    }
}
