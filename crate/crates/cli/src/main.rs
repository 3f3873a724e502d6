use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hahn_cli::{run, Command, Outcome};
use hahn_core::Session;

/// Exact derivations and integration on generalised series fields.
#[derive(Parser)]
#[command(name = "hahn", version)]
struct Cli {
    /// Session file (chain, schema, budgets); the log-exp session by default.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Overrides the integration budget.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Overrides the probe depth of outward searches.
    #[arg(long, global = true)]
    probe: Option<usize>,
    /// Overrides the number of terms kept by `invert`.
    #[arg(long, global = true)]
    terms: Option<usize>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Derivative of a series.
    Derive { expr: String },
    /// An asymptotic integral `b` with `b′ ∼ a`.
    AsympInt { expr: String },
    /// Iterated integration; prints the antiderivative, residual and exactness.
    Int { expr: String },
    /// Leading terms of the multiplicative inverse.
    Invert { expr: String },
    /// Checks h1prime, h1doubleprime, h2doubleprime or h3prime on a window.
    Check {
        condition: String,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Whether every `φ′/φ` in the window has a positive leading coefficient.
    Hfield {
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// l'Hospital's rule on one pair.
    Lhospital {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Compatibility of the logarithmic derivative with dominance on one pair.
    Logcompat {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Greatest lower bound of the leading monomials of `φ′/φ`.
    Glb,
    /// (H3′) check plus sampled l'Hospital, log-compatibility and H-field checks.
    Hardy {
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Derive { expr } => Command::Derive { expr },
            Cmd::AsympInt { expr } => Command::AsympInt { expr },
            Cmd::Int { expr } => Command::Int { expr },
            Cmd::Invert { expr } => Command::Invert { expr },
            Cmd::Check { condition, window } => Command::Check { condition, window },
            Cmd::Hfield { window } => Command::Hfield { window },
            Cmd::Lhospital { a, b } => Command::Lhospital { a, b },
            Cmd::Logcompat { a, b } => Command::Logcompat { a, b },
            Cmd::Glb => Command::Glb,
            Cmd::Hardy { window, samples, seed } => Command::Hardy { window, samples, seed },
        }
    }
}

fn session(cli: &Cli) -> hahn_core::Result<Session> {
    let mut s = match &cli.config {
        Some(path) => Session::from_path(path)?,
        None => Session::log_exp(),
    };
    let mut b = s.budgets;
    b.integrate = cli.budget.unwrap_or(b.integrate);
    b.probe = cli.probe.unwrap_or(b.probe);
    b.invert = cli.terms.unwrap_or(b.invert);
    s = Session::new(s.schema, b)?;
    Ok(s)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match session(&cli) {
        Ok(s) => run(&cli.command.into(), &s),
        Err(e) => Outcome::from_error(&e),
    };
    if !outcome.stdout.is_empty() {
        println!("{}", outcome.stdout);
    }
    if !outcome.stderr.is_empty() {
        let _ = writeln!(std::io::stderr(), "{}", outcome.stderr);
    }
    ExitCode::from(outcome.code as u8)
}
