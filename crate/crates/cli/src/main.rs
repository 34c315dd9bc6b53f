//! `cxtool`: batch checks on square complexes and their simplexifications.
//!
//! Exit status 0 means the check passed (or the command succeeded), 1 that
//! it failed with certificates, 2 an input or usage error.

mod commands;
mod dot;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
    Core(cxcore::Error),
}

impl From<cxcore::Error> for CliError {
    fn from(e: cxcore::Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Input(m) => write!(f, "{m}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "cxtool", version, about = "Checks for square complexes and their simplexifications")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Common {
    /// SQC or DSC file (recognized by content)
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Built-in complex: K, torus, klein, disk, rose_product(m,n)
    #[arg(long, global = true)]
    pub corpus: Option<String>,
    /// Print a JSON report instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Write the produced complex or DOT text here
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Swap vertical and horizontal classes
    #[arg(long, global = true)]
    pub vclass_swap: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate a complex, or re-verify the certificates of a report
    Validate {
        /// JSON report whose certificates are checked against the input
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Nonpositive curvature: no loops, bigons or triangles in vertex links
    Npc,
    /// Find a vertical/horizontal partition of the edges
    Vh,
    /// Vertex link, as a summary or DOT
    Link {
        #[arg(long)]
        vertex: String,
        #[arg(long)]
        dot: bool,
    },
    /// Simplexification X* (or the triangulation X̂ with --hat), as DSC
    Simplexify {
        #[arg(long)]
        hat: bool,
        /// Write the provenance table (JSON keyed by simplex name) here
        #[arg(long)]
        provenance: Option<PathBuf>,
    },
    /// Local 6-largeness of a simplicial complex
    Sixlarge {
        /// Check the links of all simplices, not only of vertices
        #[arg(long)]
        all_simplices: bool,
    },
    /// Integral homology
    Homology,
    /// Euler characteristic
    Euler,
    /// Presentation of the fundamental group
    Pi1 {
        #[arg(long)]
        basepoint: Option<String>,
    },
    /// Abelianization of the fundamental group
    Abel {
        #[arg(long)]
        basepoint: Option<String>,
    },
    /// Finite cover from an edge labeling, or all Z/2 covers
    Cover {
        #[arg(long)]
        labels: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        fiber: usize,
        #[arg(long)]
        enumerate: bool,
    },
    /// Product of two graphs given as SQC files without squares
    Product {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
    },
    /// Print a built-in complex as SQC
    Corpus {
        name: Option<String>,
        #[arg(long)]
        list: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    ExitCode::from(commands::run(cli))
}
