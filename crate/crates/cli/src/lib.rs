//! Command-line front end for the inscribed-rectangle library.
//!
//! Reports are JSON on standard output with every exact value written as a
//! string. Exit codes: 0 on success, 2 for unusable input, 3 when an exact
//! internal check fails.

pub mod commands;
pub mod config;
pub mod error;
pub mod render;
pub mod report;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use quadriline_core::paths::PathKind;

pub use commands::{execute, Outcome, RatioRequest, Request};
pub use config::{ConfigFile, ConfigFileError};
pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "quadriline", version, about = "Exact rectangles inscribed in four lines")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Slope,
    Aspect,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normalized form, constants, diagonals and classification.
    Classify {
        #[arg(long)]
        input: PathBuf,
    },
    /// The rectangle with a given slope or aspect ratio, in input coordinates.
    Rect {
        #[arg(long)]
        input: PathBuf,
        /// Slope as `s/t`; `1/0` is vertical.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "aspect", required_unless_present = "aspect")]
        slope: Option<String>,
        /// Aspect ratio as `u/v`.
        #[arg(long, allow_hyphen_values = true)]
        aspect: Option<String>,
    },
    /// Rectangles sampled along the slope or aspect path.
    Path {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "slope")]
        kind: KindArg,
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
    /// Centers of rectangles: lines or conic, Gauss-Newton line, diagonal G.
    Locus {
        #[arg(long)]
        input: PathBuf,
    },
    /// Brute-force count over a prime field, checked against both paths.
    Census {
        #[arg(long)]
        input: PathBuf,
    },
    /// Draws the configuration as SVG.
    Render {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 8)]
        samples: usize,
        /// Also draw the diagonals E, F and G.
        #[arg(long)]
        diagonals: bool,
    },
}

impl Command {
    pub fn input(&self) -> &PathBuf {
        match self {
            Command::Classify { input }
            | Command::Rect { input, .. }
            | Command::Path { input, .. }
            | Command::Locus { input }
            | Command::Census { input }
            | Command::Render { input, .. } => input,
        }
    }

    pub fn request(&self) -> Request {
        match self {
            Command::Classify { .. } => Request::Classify,
            Command::Rect { slope: Some(s), .. } => Request::Rect(RatioRequest::Slope(s.clone())),
            Command::Rect { aspect, .. } => Request::Rect(RatioRequest::Aspect(aspect.clone().unwrap_or_default())),
            Command::Path { kind, samples, .. } => Request::Path {
                kind: match kind {
                    KindArg::Slope => PathKind::Slope,
                    KindArg::Aspect => PathKind::Aspect,
                },
                samples: *samples,
            },
            Command::Locus { .. } => Request::Locus,
            Command::Census { .. } => Request::Census,
            Command::Render { out, samples, diagonals, .. } => {
                Request::Render { out: out.clone(), samples: *samples, diagonals: *diagonals }
            }
        }
    }
}

/// Reads the configuration named by `cli` and runs its command.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let file = ConfigFile::read(cli.command.input())?;
    execute(&file, &cli.command.request())
}
