//! Sessions: a chain, a derivation schema on it and computation budgets,
//! read from a TOML file.
//!
//! ```toml
//! [chain]
//! kind = "integer"            # "list" | "integer" | "rational"
//! prefix = "E_"
//! aliases = [{ index = 0, name = "x" }]
//! # names = ["a", "b"]        # for kind = "list"
//! # min = 0, max = 10, shift = 1
//!
//! [schema]
//! kind = "log-exp"
//!
//! [budgets]
//! invert = 8
//! integrate = 8
//! probe = 64
//! ```
//!
//! Schema kinds and their keys:
//!
//! | kind               | keys                                                     |
//! |--------------------|----------------------------------------------------------|
//! | `table`            | `[schema.table]` mapping names to series text            |
//! | `log-exp`          | none                                                     |
//! | `shift-monomial`   | `scale` (default 1), `exponents`                         |
//! | `indexed-power`    | `beta`, `scale` (a rational or `"index"`, default 1)     |
//! | `general-shift`    | `gamma` (monomial text, default `1`), `terms = [{ coeff, tau }]` |
//! | `offset-monomial`  | `scale` (default 1), `factors = [{ offset, exponent }]`  |
//!
//! Rationals are written as integers or as strings `"p/q"`.

use std::collections::BTreeMap;
use std::path::Path;

use num_traits::One;
use serde::Deserialize;

use crate::chain::{Fundamental, FundamentalChain};
use crate::derivation::{DerivationSchema, PowerScale, SchemaKind};
use crate::monomial::Monomial;
use crate::{text, Error, Result, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    /// Terms kept by series inversion.
    pub invert: usize,
    /// Refinement steps of the integrator.
    pub integrate: usize,
    /// Fundamentals visited by outward searches.
    pub probe: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { invert: 8, integrate: 8, probe: 64 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Session {
    pub schema: DerivationSchema,
    pub budgets: Budgets,
}

impl Session {
    pub fn new(schema: DerivationSchema, budgets: Budgets) -> Result<Self> {
        if budgets.invert == 0 || budgets.integrate == 0 || budgets.probe == 0 {
            return Err(Error::Config("budgets must be at least 1".into()));
        }
        Ok(Session { schema, budgets })
    }

    /// The log-exp chain with its usual derivation and default budgets.
    pub fn log_exp() -> Self {
        Session { schema: DerivationSchema::log_exp(), budgets: Budgets::default() }
    }

    pub fn chain(&self) -> &FundamentalChain {
        self.schema.chain()
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let raw: RawSession = toml::from_str(text).map_err(|e| Error::Config(e.message().to_owned()))?;
        let chain = raw.chain.build()?;
        let schema = raw.schema.build(chain)?;
        let b = raw.budgets.unwrap_or_default();
        let d = Budgets::default();
        Session::new(
            schema,
            Budgets {
                invert: b.invert.unwrap_or(d.invert),
                integrate: b.integrate.unwrap_or(d.integrate),
                probe: b.probe.unwrap_or(d.probe),
            },
        )
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawRational {
    Int(i64),
    Text(String),
}

impl RawRational {
    fn value(&self) -> Result<Q> {
        match self {
            RawRational::Int(n) => Ok(Q::from_integer((*n).into())),
            RawRational::Text(s) => {
                let v: Q =
                    s.trim().parse().map_err(|_| Error::Config(format!("`{s}` is not a rational number")))?;
                Ok(v)
            }
        }
    }
}

fn rational(r: &Option<RawRational>, default: Q) -> Result<Q> {
    r.as_ref().map_or(Ok(default), RawRational::value)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSession {
    chain: RawChain,
    schema: RawSchema,
    budgets: Option<RawBudgets>,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawBudgets {
    invert: Option<usize>,
    integrate: Option<usize>,
    probe: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlias {
    index: RawRational,
    name: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawChain {
    kind: String,
    prefix: Option<String>,
    names: Option<Vec<String>>,
    #[serde(default)]
    aliases: Vec<RawAlias>,
    min: Option<RawRational>,
    max: Option<RawRational>,
    shift: Option<RawRational>,
}

impl RawChain {
    fn build(&self) -> Result<FundamentalChain> {
        let prefix = || {
            self.prefix
                .as_deref()
                .ok_or_else(|| Error::Config(format!("chain kind `{}` needs a prefix", self.kind)))
        };
        let mut chain = match self.kind.as_str() {
            "list" => {
                let names = self
                    .names
                    .as_ref()
                    .ok_or_else(|| Error::Config("chain kind `list` needs names".into()))?;
                if self.min.is_some() || self.max.is_some() {
                    return Err(Error::Config("list chains take no bounds".into()));
                }
                FundamentalChain::finite(names.iter().cloned())?
            }
            "integer" => FundamentalChain::integer(prefix()?)?,
            "rational" => FundamentalChain::rational(prefix()?)?,
            other => return Err(Error::Config(format!("unknown chain kind `{other}`"))),
        };
        if self.min.is_some() || self.max.is_some() {
            let min = self.min.as_ref().map(RawRational::value).transpose()?;
            let max = self.max.as_ref().map(RawRational::value).transpose()?;
            chain = chain.with_bounds(min, max)?;
        }
        for alias in &self.aliases {
            chain = chain.with_alias(Fundamental::from_index(alias.index.value()?), &alias.name)?;
        }
        if let Some(step) = &self.shift {
            chain = chain.with_shift(step.value()?)?;
        }
        Ok(chain)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    coeff: Option<RawRational>,
    tau: Vec<RawRational>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFactor {
    offset: RawRational,
    exponent: Option<RawRational>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSchema {
    kind: String,
    table: Option<BTreeMap<String, String>>,
    scale: Option<RawRational>,
    exponents: Option<Vec<RawRational>>,
    beta: Option<RawRational>,
    gamma: Option<String>,
    terms: Option<Vec<RawTerm>>,
    factors: Option<Vec<RawFactor>>,
}

impl RawSchema {
    fn build(&self, chain: FundamentalChain) -> Result<DerivationSchema> {
        let missing = |key: &str| Error::Config(format!("schema kind `{}` needs `{key}`", self.kind));
        let kind = match self.kind.as_str() {
            "table" => {
                let raw = self.table.as_ref().ok_or_else(|| missing("table"))?;
                let mut table = BTreeMap::new();
                for (name, value) in raw {
                    let phi = chain
                        .lookup(name)
                        .ok_or_else(|| Error::Config(format!("`{name}` is not a name of the chain")))?;
                    table.insert(phi, text::parse_series(value, &chain)?);
                }
                SchemaKind::ExplicitTable(table)
            }
            "log-exp" => SchemaKind::LogExpChain,
            "shift-monomial" => SchemaKind::ShiftMonomial {
                scale: rational(&self.scale, Q::one())?,
                exponents: self
                    .exponents
                    .as_ref()
                    .ok_or_else(|| missing("exponents"))?
                    .iter()
                    .map(RawRational::value)
                    .collect::<Result<_>>()?,
            },
            "indexed-power" => {
                let scale = match &self.scale {
                    Some(RawRational::Text(s)) if s == "index" => PowerScale::IndexOrOne,
                    other => PowerScale::Constant(rational(other, Q::one())?),
                };
                SchemaKind::RealIndexedPower {
                    beta: self.beta.as_ref().ok_or_else(|| missing("beta"))?.value()?,
                    scale,
                }
            }
            "general-shift" => {
                let gamma = match &self.gamma {
                    Some(g) => text::parse_monomial(g, &chain)?,
                    None => Monomial::one(),
                };
                let terms = self
                    .terms
                    .as_ref()
                    .ok_or_else(|| missing("terms"))?
                    .iter()
                    .map(|t| {
                        Ok((
                            rational(&t.coeff, Q::one())?,
                            t.tau.iter().map(RawRational::value).collect::<Result<_>>()?,
                        ))
                    })
                    .collect::<Result<_>>()?;
                SchemaKind::GeneralShift { gamma, terms }
            }
            "offset-monomial" => SchemaKind::OffsetMonomial {
                scale: rational(&self.scale, Q::one())?,
                factors: self
                    .factors
                    .as_ref()
                    .ok_or_else(|| missing("factors"))?
                    .iter()
                    .map(|f| Ok((f.offset.value()?, rational(&f.exponent, Q::one())?)))
                    .collect::<Result<_>>()?,
            },
            other => return Err(Error::Config(format!("unknown schema kind `{other}`"))),
        };
        DerivationSchema::new(chain, kind)
    }
}
