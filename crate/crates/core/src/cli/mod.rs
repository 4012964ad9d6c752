//! Command-line front end. [`run_command`] parses an argument vector,
//! dispatches to the analysis operations and returns the rendered output
//! together with an exit status; the `virasoro` binary only prints it.
//!
//! Exit statuses: 0 on success, 1 when the input is well formed but
//! rejected by the mathematics (an invalid `N`, `ψ = 0` where it is not
//! allowed, a zero element), 2 for usage and parse errors.

mod commands;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

pub use self::commands::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    Core,
    Lemmas,
    Theorems,
    Actions,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BracketName {
    Virasoro,
    Corrupted,
}

#[derive(Debug, Parser)]
#[command(name = "virasoro", version, about = "Exact computations in U(Vir) and its Whittaker modules")]
pub struct Cli {
    /// Output rendering.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normal-order an expression in d(k) and z.
    NormalOrder { expr: String },
    /// Act with an expression on a module element.
    Act {
        /// Family record: inline JSON or a file path.
        family: String,
        expr: String,
        element: String,
    },
    /// Whittaker vectors of type ψ with filtration degree at most L.
    Whittaker {
        family: String,
        /// ψ as "ψ1,ψ2".
        #[arg(long, allow_hyphen_values = true)]
        psi: String,
        #[arg(long)]
        level: u32,
    },
    /// Hom(L_p, L_q) between cyclic Whittaker modules, or the surjectivity
    /// of multiplication by r.
    Hom {
        #[arg(long, allow_hyphen_values = true)]
        p: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long)]
        surjective: bool,
        #[arg(long, allow_hyphen_values = true)]
        r: Option<String>,
    },
    /// Central-character decomposition from "ξ:multiplicity,..." pairs.
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        factors: String,
    },
    /// A nonzero vector of W_ξ in the submodule generated by an element of
    /// the universal Whittaker module with ψ = 0.
    ExtractWxi {
        element: String,
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
    },
    /// Validate an n⁺-module record.
    ValidateN { spec: String },
    /// Run the verification campaigns.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteName::All)]
        suite: SuiteName,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random cases per parametric property.
        #[arg(long)]
        cases: Option<usize>,
        #[arg(long, value_enum, default_value_t = BracketName::Virasoro)]
        bracket: BracketName,
        /// Include wall times (the output is then no longer deterministic).
        #[arg(long)]
        timings: bool,
    },
}

/// A rendered result in both formats.
#[derive(Clone, Debug, PartialEq)]
pub struct Payload {
    pub text: String,
    pub json: Value,
    /// Set when the payload is complete but reports a failure, as a
    /// verification campaign with counterexamples does.
    pub failed: bool,
}

impl Payload {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Payload { text: text.into(), json, failed: false }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Renders a payload; both renderings end with a newline.
pub fn emit_report(payload: &Payload, format: Format) -> String {
    match format {
        Format::Text => {
            let mut out = payload.text.clone();
            if !out.ends_with('\n') {
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut out = serde_json::to_string_pretty(&payload.json).expect("JSON values always serialize");
            out.push('\n');
            out
        }
    }
}

/// Runs one command. `argv[0]` is the program name.
pub fn run_command<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() { (String::new(), rendered) } else { (rendered, String::new()) };
            return CommandOutcome { status, stdout, stderr };
        }
    };
    match commands::dispatch(&cli.command) {
        Ok(payload) => CommandOutcome {
            status: i32::from(payload.failed),
            stdout: emit_report(&payload, cli.format),
            stderr: String::new(),
        },
        Err(e) => CommandOutcome { status: e.status(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
