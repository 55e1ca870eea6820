use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pcube_cli::commands::{self, IndexOptions, Method, PartitionSpec};
use pcube_cli::format::InputFile;
use pcube_cli::{load_input, CliError};
use serde::Serialize;

/// Wiener and Szeged indices of partial cubes.
///
/// Graph files use 0-based vertex ids.
#[derive(Parser)]
#[command(name = "pcube", version)]
struct Cli {
    /// Print one JSON object instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute both indices of a graph or cell file.
    Index {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "cut")]
        method: Method,
        /// finest, coarsest, direction (cell files) or groups such as `0,1;2`.
        #[arg(long)]
        partition: Option<PartitionSpec>,
        /// Add per-class and per-group rows.
        #[arg(long)]
        verbose: bool,
    },
    /// Decide whether a graph is a partial cube.
    Recognize { file: PathBuf },
    /// Build a graph file and a `.embed` sidecar from a cell file.
    Generate { cells: PathBuf, out: PathBuf },
    /// Weighted indices of a tree in linear time.
    TreeIndex { file: PathBuf },
}

fn emit<T: Serialize>(json: bool, report: &T, text: impl FnOnce(&T) -> String) {
    if json {
        println!(
            "{}",
            serde_json::to_string(report).expect("reports serialize")
        );
    } else {
        print!("{}", text(report));
    }
}

fn graph_input(path: &Path) -> Result<pcube_cli::format::GraphFile, CliError> {
    match load_input(path)? {
        InputFile::Graph(f) => Ok(f),
        InputFile::Cells(_) => Err(CliError::Usage(format!(
            "{}: expected a graph file",
            path.display()
        ))),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Index {
            file,
            method,
            partition,
            verbose,
        } => {
            let opts = IndexOptions {
                method,
                partition,
                verbose,
            };
            let report = commands::index(&load_input(&file)?, &opts)?;
            emit(cli.json, &report, |r| r.to_text());
        }
        Command::Recognize { file } => {
            let report = commands::recognize(&load_input(&file)?)?;
            emit(cli.json, &report, |r| r.to_text());
        }
        Command::Generate { cells, out } => {
            let InputFile::Cells(spec) = load_input(&cells)? else {
                return Err(CliError::Usage(format!(
                    "{}: expected a cell file",
                    cells.display()
                )));
            };
            let generated = commands::generate(&spec)?;
            generated.write_to(&out)?;
            emit(cli.json, &generated, |g| g.to_text());
        }
        Command::TreeIndex { file } => {
            let report = commands::tree_index(&graph_input(&file)?)?;
            emit(cli.json, &report, |r| r.to_text());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
