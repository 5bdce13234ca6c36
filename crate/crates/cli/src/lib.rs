//! Command-line driver for exact Waring decompositions of double-line
//! quartics. The binary is a thin wrapper around [`run`].

pub mod commands;
pub mod document;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use waring_core::Form;

use document::{parse_line, parse_rational_list, DecompositionDocument};
use report::{RunReport, EXIT_USAGE};

#[derive(Debug, Parser)]
#[command(name = "waring", version, about = "Exact Waring decompositions of quartics x^2 q")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for randomized commands.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// The line x as coefficients c0,c1,c2 (default: the document's line, or x2).
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub line: Option<String>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze a decomposition file.
    Verify { file: PathBuf },

    /// Random seven-term solutions: every nonzero q must be tangent to x2 = 0.
    TheoremCheck {
        #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        /// Node numerators are drawn from [-R, R].
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(i64).range(1..=1_000_000))]
        nodes_range: i64,
    },

    /// Symbolic check of the tangency invariant on seven fixed nodes.
    IdentityCheck {
        #[arg(long, allow_hyphen_values = true)]
        h: String,
    },

    /// Six-term claim on given nodes or on random ones.
    ClaimCheck {
        #[arg(long, allow_hyphen_values = true, required_unless_present = "random", conflicts_with = "random")]
        h: Option<String>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        random: Option<u64>,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(i64).range(1..=1_000_000))]
        nodes_range: i64,
    },

    /// Reproduce the reference six-term example.
    Example,
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

fn usage(message: impl Into<String>) -> Outcome {
    Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: message.into() + "\n" }
}

fn finish(report: RunReport, json: bool) -> Outcome {
    Outcome { code: report.exit_code(), stdout: report.render(json), stderr: String::new() }
}

const DEFAULT_SEED: u64 = 0;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.exit_code() {
                0 => Outcome { code: 0, stdout: text, stderr: String::new() },
                _ => usage(text.trim_end()),
            };
        }
    };
    let line: Option<Form> = match cli.line.as_deref().map(parse_line).transpose() {
        Ok(l) => l,
        Err(e) => return usage(format!("error: --line: {e}")),
    };
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    let report = match cli.command {
        Command::Verify { file } => {
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => return usage(format!("error: cannot read {}: {e}", file.display())),
            };
            let doc = match DecompositionDocument::from_json(&text) {
                Ok(d) => d,
                Err(e) => return usage(format!("error: {}: {e}", file.display())),
            };
            let (dec, doc_line) = match (doc.decomposition(), doc.line()) {
                (Ok(d), Ok(l)) => (d, l),
                (Err(e), _) | (_, Err(e)) => return usage(format!("error: {}: {e}", file.display())),
            };
            let line = line.unwrap_or(doc_line);
            commands::verify(&dec, &line, &format!("verify {}", file.display()))
        }
        Command::TheoremCheck { trials, nodes_range } => commands::theorem_check(
            trials,
            seed,
            nodes_range,
            &format!("theorem-check --trials {trials} --seed {seed} --nodes-range {nodes_range}"),
        ),
        Command::IdentityCheck { h } => {
            let nodes = match parse_rational_list(&h) {
                Ok(n) => n,
                Err(e) => return usage(format!("error: --h: {e}")),
            };
            if nodes.len() != 7 {
                return usage(format!("error: --h: expected 7 values, found {}", nodes.len()));
            }
            commands::identity_check(&nodes, &format!("identity-check --h {h}"))
        }
        Command::ClaimCheck { h: Some(h), .. } => {
            let nodes = match parse_rational_list(&h) {
                Ok(n) => n,
                Err(e) => return usage(format!("error: --h: {e}")),
            };
            if nodes.len() != 6 {
                return usage(format!("error: --h: expected 6 values, found {}", nodes.len()));
            }
            commands::claim_check_nodes(&nodes, seed, &format!("claim-check --h {h}"))
        }
        Command::ClaimCheck { h: None, random, nodes_range } => {
            let n = random.expect("clap requires --h or --random");
            commands::claim_check_random(
                n,
                seed,
                nodes_range,
                &format!("claim-check --random {n} --seed {seed} --nodes-range {nodes_range}"),
            )
        }
        Command::Example => commands::example(),
    };
    finish(report, cli.json)
}
