//! Command-line interface: argument types, dispatch and exit codes.
//!
//! Exit status is 0 when every check passes, 1 when a mathematical check
//! fails and 2 for usage or configuration errors.

mod commands;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::{cmd_elliptic, cmd_gen, cmd_ode, cmd_ortho, cmd_units, cmd_verify, CheckLine, CheckStatus, Report};

use crate::error::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug, Clone)]
#[command(name = "pellpoly", version, about = "Exact Pell-polynomial families: generation, identity checks, ODEs and orthogonality")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

/// Either `--beta` for the quartic family or a custom `--p/--a1/--b0` triple.
#[derive(Args, Debug, Clone, Default)]
pub struct ConfigArgs {
    /// Exact rational parameter of the quartic family, e.g. `3` or `5/3`.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["p", "a1", "b0"])]
    pub beta: Option<String>,
    /// Custom curve polynomial, e.g. `t^2 - 1`.
    #[arg(long, requires_all = ["a1", "b0"])]
    pub p: Option<String>,
    #[arg(long, requires_all = ["p", "b0"])]
    pub a1: Option<String>,
    #[arg(long, requires_all = ["p", "a1"])]
    pub b0: Option<String>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum KindArg {
    First,
    Second,
    Both,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodArg {
    Gauss,
    Tanhsinh,
    Both,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum OdeKindArg {
    GeneralA,
    GeneralB,
    DjkmA,
    DjkmB,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Print a_0..a_n and b_0..b_n.
    Gen {
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run every exact check for indices up to n.
    Verify {
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long, default_value_t = 16)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Gram tables of the two orthogonality integrals.
    Ortho {
        /// Rational or decimal, greater than 1.
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        #[arg(long, value_enum, default_value = "both")]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
        /// Tanh-sinh stopping tolerance.
        #[arg(long, default_value_t = 1e-11)]
        tol: f64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build an operator, check it annihilates the family and classify its singular points.
    Ode {
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: OdeKindArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The four units of the quartic family and their relations.
    Units {
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check that the two integrals vanish for n + m odd.
    Elliptic {
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Dispatches an already-parsed configuration.
pub fn execute(cfg: &RunConfig) -> Result<Report, Error> {
    match &cfg.command {
        Command::Gen { config, n, .. } => cmd_gen(config, *n),
        Command::Verify { config, n, .. } => cmd_verify(config, *n),
        Command::Ortho { beta, nmax, kind, method, tol, .. } => cmd_ortho(beta, *nmax, *kind, *method, *tol),
        Command::Ode { config, n, kind, .. } => cmd_ode(config, *n, *kind),
        Command::Units { beta, .. } => cmd_units(beta),
        Command::Elliptic { beta, n, m, tol, .. } => cmd_elliptic(beta, *n, *m, *tol),
    }
}

fn format_of(cmd: &Command) -> Format {
    match cmd {
        Command::Gen { format, .. }
        | Command::Verify { format, .. }
        | Command::Ortho { format, .. }
        | Command::Ode { format, .. }
        | Command::Units { format, .. }
        | Command::Elliptic { format, .. } => *format,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let format = format_of(&cfg.command);
    let report = match execute(&cfg) {
        Ok(r) => r,
        Err(e) => return Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    let stdout = match format {
        Format::Json => report.json_string(),
        Format::Text => report.text.clone(),
        Format::Csv => match &report.csv {
            Some(csv) => csv.clone(),
            None => {
                return Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: "error: csv output is only available for the ortho command\n".into(),
                }
            }
        },
    };
    Outcome { code: if report.passed { EXIT_OK } else { EXIT_CHECK_FAILED }, stdout, stderr: String::new() }
}
