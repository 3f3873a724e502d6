//! Command dispatch for the `hahn` binary.
//!
//! [`run`] maps a [`Command`] and a [`Session`] to an [`Outcome`]: the exit
//! status plus the text for stdout and stderr. The first stdout line is
//! always the machine-readable result (a series, a verdict, `true`/`false`).

use hahn_core::asympint::{asymptotic_integral, integrate, theta_glb};
use hahn_core::hardy::{self, HFieldVerdict};
use hahn_core::text::{parse_series, print_monomial, print_series};
use hahn_core::{
    check_condition, ChainKind, Condition, Error, Fundamental, GlbVerdict, Result, Series, Session,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Derive { expr: String },
    AsympInt { expr: String },
    Int { expr: String },
    Invert { expr: String },
    Check { condition: String, window: Option<String> },
    Hfield { window: Option<String> },
    Lhospital { a: String, b: String },
    Logcompat { a: String, b: String },
    Glb,
    Hardy { window: Option<String>, samples: usize, seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    pub fn from_error(err: &Error) -> Self {
        let code = if err.is_input_error() { 2 } else { 1 };
        Outcome { code, stdout: String::new(), stderr: format!("{}\n{err}", err.name()) }
    }
}

pub fn run(cmd: &Command, session: &Session) -> Outcome {
    match execute(cmd, session) {
        Ok(text) => Outcome::ok(text),
        Err(e) => Outcome::from_error(&e),
    }
}

fn execute(cmd: &Command, session: &Session) -> Result<String> {
    let schema = &session.schema;
    let chain = session.chain();
    let parse = |s: &str| parse_series(s, chain).map_err(Error::from);
    let show = |s: &Series| print_series(s, chain);
    let probe = session.budgets.probe;
    Ok(match cmd {
        Command::Derive { expr } => show(&schema.derive(&parse(expr)?)?),
        Command::AsympInt { expr } => show(&asymptotic_integral(schema, &parse(expr)?, probe)?),
        Command::Int { expr } => {
            let r = integrate(schema, &parse(expr)?, session.budgets.integrate, probe)?;
            format!("{}\nresidual: {}\nexact: {}", show(&r.antiderivative), show(&r.residual), r.exact)
        }
        Command::Invert { expr } => show(&parse(expr)?.invert(session.budgets.invert)?),
        Command::Check { condition, window } => {
            let condition: Condition = condition.parse()?;
            let w = window_for(session, window.as_deref(), condition.ascending())?;
            check_condition(schema, condition, &w)?.render(chain)
        }
        Command::Hfield { window } => {
            match hardy::check_hfield(schema, &window_for(session, window.as_deref(), true)?)? {
                HFieldVerdict::Yes => "Yes".into(),
                HFieldVerdict::No(phi) => format!("No\nwitness: {}", chain.name(&phi)),
            }
        }
        Command::Lhospital { a, b } => hardy::verify_lhospital(schema, &parse(a)?, &parse(b)?)?.to_string(),
        Command::Logcompat { a, b } => hardy::verify_log_compat(schema, &parse(a)?, &parse(b)?)?.to_string(),
        Command::Glb => match theta_glb(schema)? {
            GlbVerdict::Attained(m) => format!("Attained\nglb: {}", print_monomial(&m, chain)),
            GlbVerdict::Infimum(m) => format!("Infimum\nglb: {}", print_monomial(&m, chain)),
            GlbVerdict::NotInGamma => "NotInGamma".into(),
            GlbVerdict::Unknown => "Unknown".into(),
        },
        Command::Hardy { window, samples, seed } => {
            let w = window_for(session, window.as_deref(), true)?;
            let r = hardy::hardy_report(schema, &w, *samples, *seed)?;
            let passed = |v: &[(Series, Series, bool)]| v.iter().filter(|s| s.2).count();
            let verdict = if r.h3prime.verdict.witness().is_some()
                || !r.all_samples_pass()
                || r.hfield != HFieldVerdict::Yes
            {
                "Fails"
            } else if r.h3prime.verdict.holds() {
                "Holds"
            } else {
                "UnknownAtDepth"
            };
            let hfield = match &r.hfield {
                HFieldVerdict::Yes => "Yes".to_owned(),
                HFieldVerdict::No(phi) => format!("No ({})", chain.name(phi)),
            };
            format!(
                "{verdict}\nh3prime: {}\nlhospital: {}/{}\nlogcompat: {}/{}\nhfield: {hfield}",
                r.h3prime.verdict.name(),
                passed(&r.lhospital_samples),
                r.lhospital_samples.len(),
                passed(&r.logcompat_samples),
                r.logcompat_samples.len(),
            )
        }
    })
}

/// `LO..HI` (inclusive integer indices) or a comma-separated list of names;
/// the whole chain when omitted on a finite chain. Returned in the order the
/// condition expects.
pub fn window_for(session: &Session, text: Option<&str>, ascending: bool) -> Result<Vec<Fundamental>> {
    let chain = session.chain();
    let mut w = match text {
        None => chain
            .elements()
            .ok_or_else(|| Error::Window("--window is required on an infinite chain".into()))?,
        Some(s) => match s.split_once("..") {
            Some((lo, hi)) => {
                let bound = |t: &str| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Window(format!("`{t}` is not an integer index")))
                };
                if matches!(chain.kind(), ChainKind::FiniteList(_)) {
                    return Err(Error::Window("finite chains take a list of names".into()));
                }
                chain.range(bound(lo)?, bound(hi)?)?
            }
            None => {
                let mut names = Vec::new();
                for n in s.split(',') {
                    let n = n.trim();
                    names.push(
                        chain
                            .lookup(n)
                            .ok_or_else(|| Error::Window(format!("`{n}` is not a name of the chain")))?,
                    );
                }
                names.sort();
                names
            }
        },
    };
    if !ascending {
        w.reverse();
    }
    Ok(w)
}
