//! The `fulkerson-lab` command line: generate graphs, search for and verify
//! certificates, run dot-product pipelines and export renderings.

pub mod commands;
pub mod error;
pub mod export;
pub mod files;
pub mod recipe;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use fulkerson_core::{Budget, Strategy};

use crate::commands::{PipelineArgs, SearchArgs};
use crate::error::CliError;
use crate::files::CertificateKind;

#[derive(Debug, Parser)]
#[command(
    name = "fulkerson-lab",
    version,
    about = "Fulkerson coverings of bridgeless cubic graphs"
)]
pub struct Cli {
    /// Search budget in nodes. Defaults to $FULKERSON_LAB_BUDGET, else 50,000,000.
    #[arg(long, global = true, value_name = "NODES")]
    pub budget: Option<u64>,
    /// Worker threads for parallel searches. Output does not depend on it.
    #[arg(long, global = true, value_name = "K")]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a generated graph: petersen, theta, k4, k33, q3, ten-vertex,
    /// cluster, flower <k>, goldberg <k>, doubled <m>.
    Gen { family: String, param: Option<usize> },
    /// Check certificates against a graph. Exit 0 if all are valid, 1 if not.
    Verify { graph: PathBuf, certificate: PathBuf },
    /// Search for certificates and print them.
    Search {
        graph: PathBuf,
        /// fr-triple, covering or ffamily.
        target: CertificateKind,
        /// Covering search: color, exact2cover, a1a2 or auto.
        #[arg(long, default_value = "auto")]
        strategy: Strategy,
        /// Every certificate instead of the first.
        #[arg(long)]
        all: bool,
    },
    /// Run an iterated dot-product recipe and print the final graph with
    /// its F-family and covering certificates.
    Pipeline {
        recipe: PathBuf,
        /// Write artifacts to this directory instead of stdout.
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
        /// Also write every intermediate graph and family (needs --out).
        #[arg(long)]
        emit_intermediate: bool,
    },
    /// Render a graph as DOT or JSON, optionally annotated with a certificate.
    Export {
        graph: PathBuf,
        #[arg(long, default_value = "dot")]
        format: String,
        #[arg(long, value_name = "FILE")]
        certificate: Option<PathBuf>,
    },
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    if let Some(k) = cli.threads {
        if k == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        // a pool may already exist when called twice in one process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    let budget = cli.budget.map(Budget::new).unwrap_or_else(Budget::from_env);
    match cli.command {
        Command::Gen { family, param } => commands::cmd_gen(&family, param, out),
        Command::Verify { graph, certificate } => commands::cmd_verify(&graph, &certificate, out),
        Command::Search {
            graph,
            target,
            strategy,
            all,
        } => commands::cmd_search(
            SearchArgs {
                graph: &graph,
                target,
                strategy,
                all,
                budget: &budget,
            },
            out,
            err,
        ),
        Command::Pipeline {
            recipe,
            out: dir,
            emit_intermediate,
        } => commands::cmd_pipeline(
            PipelineArgs {
                recipe: &recipe,
                out_dir: dir.as_deref(),
                emit_intermediate,
                budget: &budget,
            },
            out,
            err,
        ),
        Command::Export {
            graph,
            format,
            certificate,
        } => commands::cmd_export(&graph, &format, certificate.as_deref(), out),
    }
}

/// Run a parsed command line and return the process exit code. Errors are
/// reported on `err`.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
