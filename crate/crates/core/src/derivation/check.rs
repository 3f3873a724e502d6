//! Window-based checkers for the extension and Hardy-type criteria.
//!
//! The criteria quantify over infinite sequences of the chain, so a checker
//! only ever sees a finite window. A violation found in the window is
//! reported with a witness that [`Witness::recheck`] confirms from scratch.
//! `Holds` is reported when the condition is vacuous for the chain (for
//! instance no infinite descending sequence exists), when the window covers
//! a finite chain, or when the schema is certified by construction.
//! Otherwise the answer is `UnknownAtDepth`.

use std::fmt;
use std::str::FromStr;

use crate::chain::{Fundamental, FundamentalChain};
use crate::monomial::Monomial;
use crate::{Error, Result};

use super::{first_non_shift, DerivationSchema};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// `E_1 = {φ | ∃ψ ≻ φ, I_{ψ,φ} is not a left shift}` is well ordered.
    H1Prime,
    /// Every strictly decreasing sequence has a pair `m < n` with
    /// `I_{φ_m,φ_n}` a left shift.
    H1DoublePrime,
    /// `E_2 = {ψ | ∃φ ≺ ψ, τ_φ, τ_ψ with LF(τ_φ/τ_ψ) ≽ ψ}` is anti-well-ordered.
    H2DoublePrime,
    /// `θ^(φ) ≺ θ^(ψ)` and `LF(θ^(φ)/θ^(ψ)) ≺ ψ` for all `φ ≺ ψ`.
    H3Prime,
}

impl Condition {
    pub const ALL: [Condition; 4] =
        [Condition::H1Prime, Condition::H1DoublePrime, Condition::H2DoublePrime, Condition::H3Prime];

    pub fn name(self) -> &'static str {
        match self {
            Condition::H1Prime => "h1prime",
            Condition::H1DoublePrime => "h1doubleprime",
            Condition::H2DoublePrime => "h2doubleprime",
            Condition::H3Prime => "h3prime",
        }
    }

    /// Windows are ascending except for (H1″), which walks down the chain.
    pub fn ascending(self) -> bool {
        self != Condition::H1DoublePrime
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace(['-', '_', '\''], "");
        Condition::ALL
            .into_iter()
            .find(|c| c.name() == key || short_name(*c) == key)
            .ok_or_else(|| Error::Domain(format!("unknown condition `{s}`")))
    }
}

fn short_name(c: Condition) -> &'static str {
    match c {
        Condition::H1Prime => "h1p",
        Condition::H1DoublePrime => "h1pp",
        Condition::H2DoublePrime => "h2pp",
        Condition::H3Prime => "h3p",
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `ψ ≻ φ` and `I_{ψ,φ}(τ_ψ) = τ_φ ≽ τ_ψ` at `position`.
    NotLeftShift { psi: Fundamental, phi: Fundamental, position: usize, tau_psi: Monomial, tau_phi: Monomial },
    /// A strictly descending window in which no `I_{φ_m,φ_n}`, `m < n`, is a
    /// left shift.
    NoLeftShiftPair { window: Vec<Fundamental> },
    /// `φ ≺ ψ`, `τ_φ ∈ Supp(φ′/φ)`, `τ_ψ ∈ Supp(ψ′/ψ)` and
    /// `LF(τ_φ/τ_ψ) = lf ≽ ψ`.
    SupportRatio { phi: Fundamental, psi: Fundamental, tau_phi: Monomial, tau_psi: Monomial, lf: Fundamental },
    /// `φ ≺ ψ` but `θ^(φ) ≽ θ^(ψ)`.
    ThetaOrder { phi: Fundamental, psi: Fundamental },
    /// `φ ≺ ψ` and `LF(θ^(φ)/θ^(ψ)) = lf ≽ ψ`.
    ThetaRatio { phi: Fundamental, psi: Fundamental, lf: Fundamental },
}

impl Witness {
    /// Confirms the witness using only the schema, independently of the scan
    /// that produced it.
    pub fn recheck(&self, schema: &DerivationSchema) -> Result<bool> {
        Ok(match self {
            Witness::NotLeftShift { psi, phi, position, tau_psi, tau_phi } => {
                psi > phi
                    && schema.position(psi, tau_psi)? == *position
                    && schema.position(phi, tau_phi)? == *position
                    && tau_phi >= tau_psi
            }
            Witness::NoLeftShiftPair { window } => {
                if window.len() < 2 || window.windows(2).any(|w| w[0] <= w[1]) {
                    return Ok(false);
                }
                for (m, mu) in window.iter().enumerate() {
                    for nu in &window[m + 1..] {
                        if schema.is_left_shift(mu, nu)? {
                            return Ok(false);
                        }
                    }
                }
                true
            }
            Witness::SupportRatio { phi, psi, tau_phi, tau_psi, lf } => {
                phi < psi
                    && schema.support(phi)?.contains(tau_phi)
                    && schema.support(psi)?.contains(tau_psi)
                    && tau_phi.div(tau_psi).leading_fundamental() == Some(lf)
                    && lf >= psi
            }
            Witness::ThetaOrder { phi, psi } => phi < psi && schema.theta(phi)? >= schema.theta(psi)?,
            Witness::ThetaRatio { phi, psi, lf } => {
                phi < psi
                    && schema.theta(phi)?.div(&schema.theta(psi)?).leading_fundamental() == Some(lf)
                    && lf >= psi
            }
        })
    }

    /// The fundamentals the witness is about, in the order `(φ, ψ)` when it
    /// concerns a pair.
    pub fn pair(&self) -> Option<(&Fundamental, &Fundamental)> {
        match self {
            Witness::NotLeftShift { psi, phi, .. } => Some((phi, psi)),
            Witness::NoLeftShiftPair { .. } => None,
            Witness::SupportRatio { phi, psi, .. }
            | Witness::ThetaOrder { phi, psi }
            | Witness::ThetaRatio { phi, psi, .. } => Some((phi, psi)),
        }
    }

    pub fn describe(&self, chain: &FundamentalChain) -> String {
        let n = |p: &Fundamental| chain.name(p);
        let m = |x: &Monomial| crate::text::print_monomial(x, chain);
        match self {
            Witness::NotLeftShift { psi, phi, position, tau_psi, tau_phi } => format!(
                "not-left-shift psi={} phi={} position={} tau_psi={} tau_phi={}",
                n(psi),
                n(phi),
                position,
                m(tau_psi),
                m(tau_phi)
            ),
            Witness::NoLeftShiftPair { window } => {
                format!("no-left-shift-pair window={}", window.iter().map(n).collect::<Vec<_>>().join(","))
            }
            Witness::SupportRatio { phi, psi, tau_phi, tau_psi, lf } => format!(
                "support-ratio psi={} phi={} tau_psi={} tau_phi={} lf={}",
                n(psi),
                n(phi),
                m(tau_psi),
                m(tau_phi),
                n(lf)
            ),
            Witness::ThetaOrder { phi, psi } => {
                format!("theta-order phi={} psi={}", n(phi), n(psi))
            }
            Witness::ThetaRatio { phi, psi, lf } => {
                format!("theta-ratio phi={} psi={} lf={}", n(phi), n(psi), n(lf))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails(Witness),
    /// No violation in a window of the given size, but nothing certifies the
    /// rest of the chain.
    UnknownAtDepth(usize),
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Holds => "Holds",
            Verdict::Fails(_) => "Fails",
            Verdict::UnknownAtDepth(_) => "UnknownAtDepth",
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Fails(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub condition: Condition,
    pub window: Vec<Fundamental>,
    /// `E_1 ∩ W` for (H1′), `E_2 ∩ W` for (H2″), the larger element of every
    /// violating pair for (H3′), and the first left-shift pair for (H1″).
    pub members: Vec<Fundamental>,
    pub verdict: Verdict,
}

impl ConditionReport {
    pub fn render(&self, chain: &FundamentalChain) -> String {
        let names = |v: &[Fundamental]| v.iter().map(|p| chain.name(p)).collect::<Vec<_>>().join(",");
        let mut out = vec![
            self.verdict.name().to_owned(),
            format!("condition: {}", self.condition),
            format!("window: {}", names(&self.window)),
            format!("members: {}", if self.members.is_empty() { "-".into() } else { names(&self.members) }),
        ];
        match &self.verdict {
            Verdict::Fails(w) => out.push(format!("witness: {}", w.describe(chain))),
            Verdict::UnknownAtDepth(d) => out.push(format!("depth: {d}")),
            Verdict::Holds => {}
        }
        out.join("\n")
    }
}

pub fn check_condition(
    schema: &DerivationSchema,
    condition: Condition,
    window: &[Fundamental],
) -> Result<ConditionReport> {
    validate_window(schema.chain(), condition, window)?;
    let (members, witness) = match condition {
        Condition::H1Prime => scan_h1prime(schema, window)?,
        Condition::H1DoublePrime => scan_h1doubleprime(schema, window)?,
        Condition::H2DoublePrime => scan_h2doubleprime(schema, window)?,
        Condition::H3Prime => scan_h3prime(schema, window)?,
    };
    let verdict = if vacuous(schema.chain(), condition) {
        Verdict::Holds
    } else if let Some(w) = witness {
        Verdict::Fails(w)
    } else if schema.is_certified() || covers(schema, window) {
        Verdict::Holds
    } else {
        Verdict::UnknownAtDepth(window.len())
    };
    Ok(ConditionReport { condition, window: window.to_vec(), members, verdict })
}

fn validate_window(chain: &FundamentalChain, condition: Condition, window: &[Fundamental]) -> Result<()> {
    if window.is_empty() {
        return Err(Error::Window("empty window".into()));
    }
    if let Some(p) = window.iter().find(|p| !chain.contains(p)) {
        return Err(Error::Window(format!("index {} is not in the chain", p.index())));
    }
    let sorted = if condition.ascending() {
        window.windows(2).all(|w| w[0] < w[1])
    } else {
        window.windows(2).all(|w| w[0] > w[1])
    };
    if !sorted {
        let dir = if condition.ascending() { "ascending" } else { "descending" };
        return Err(Error::Window(format!("{condition} needs a strictly {dir} window")));
    }
    Ok(())
}

/// Conditions that hold for every schema on the chain: a well-ordered or
/// anti-well-ordered requirement on a chain where every subset already is
/// one, or a requirement on infinite descending sequences where there are
/// none.
fn vacuous(chain: &FundamentalChain, condition: Condition) -> bool {
    let discrete = chain.is_discrete();
    match condition {
        Condition::H1Prime | Condition::H1DoublePrime => discrete && chain.min_index().is_some(),
        Condition::H2DoublePrime => discrete && chain.max_index().is_some(),
        Condition::H3Prime => false,
    }
}

fn covers(schema: &DerivationSchema, window: &[Fundamental]) -> bool {
    schema.chain().is_finite() && schema.domain().is_some_and(|d| d.iter().all(|p| window.contains(p)))
}

type Scan = (Vec<Fundamental>, Option<Witness>);

fn supports(schema: &DerivationSchema, window: &[Fundamental]) -> Result<Vec<Vec<Monomial>>> {
    window.iter().map(|p| schema.support(p)).collect()
}

fn scan_h1prime(schema: &DerivationSchema, window: &[Fundamental]) -> Result<Scan> {
    let supp = supports(schema, window)?;
    let mut members = Vec::new();
    let mut witness = None;
    for (i, phi) in window.iter().enumerate() {
        for j in i + 1..window.len() {
            if let Some(pos) = first_non_shift(&supp[j], &supp[i]) {
                members.push(phi.clone());
                witness.get_or_insert_with(|| Witness::NotLeftShift {
                    psi: window[j].clone(),
                    phi: phi.clone(),
                    position: pos,
                    tau_psi: supp[j][pos].clone(),
                    tau_phi: supp[i][pos].clone(),
                });
                break;
            }
        }
    }
    Ok((members, witness))
}

fn scan_h1doubleprime(schema: &DerivationSchema, window: &[Fundamental]) -> Result<Scan> {
    let supp = supports(schema, window)?;
    for m in 0..window.len() {
        for n in m + 1..window.len() {
            if first_non_shift(&supp[m], &supp[n]).is_none() {
                return Ok((vec![window[m].clone(), window[n].clone()], None));
            }
        }
    }
    let witness = (window.len() >= 2).then(|| Witness::NoLeftShiftPair { window: window.to_vec() });
    Ok((Vec::new(), witness))
}

fn scan_h2doubleprime(schema: &DerivationSchema, window: &[Fundamental]) -> Result<Scan> {
    let supp = supports(schema, window)?;
    let mut members = Vec::new();
    let mut witness = None;
    for (j, psi) in window.iter().enumerate() {
        'pairs: for i in 0..j {
            for tau_phi in &supp[i] {
                for tau_psi in &supp[j] {
                    let ratio = tau_phi.div(tau_psi);
                    match ratio.leading_fundamental() {
                        Some(lf) if lf >= psi => {
                            members.push(psi.clone());
                            witness.get_or_insert_with(|| Witness::SupportRatio {
                                phi: window[i].clone(),
                                psi: psi.clone(),
                                tau_phi: tau_phi.clone(),
                                tau_psi: tau_psi.clone(),
                                lf: lf.clone(),
                            });
                            break 'pairs;
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    Ok((members, witness))
}

fn scan_h3prime(schema: &DerivationSchema, window: &[Fundamental]) -> Result<Scan> {
    let thetas: Vec<Monomial> = window.iter().map(|p| schema.theta(p)).collect::<Result<_>>()?;
    let mut members = Vec::new();
    let mut witness = None;
    for (j, psi) in window.iter().enumerate() {
        for i in 0..j {
            let phi = &window[i];
            let found = if thetas[i] >= thetas[j] {
                Some(Witness::ThetaOrder { phi: phi.clone(), psi: psi.clone() })
            } else {
                match thetas[i].div(&thetas[j]).leading_fundamental() {
                    Some(lf) if lf >= psi => {
                        Some(Witness::ThetaRatio { phi: phi.clone(), psi: psi.clone(), lf: lf.clone() })
                    }
                    _ => None,
                }
            };
            if let Some(w) = found {
                members.push(psi.clone());
                witness.get_or_insert(w);
                break;
            }
        }
    }
    Ok((members, witness))
}
