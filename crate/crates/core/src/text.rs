//! Canonical text form of monomials and series.
//!
//! ```text
//! series   := "0" | [sign] term (sign term)*
//! term     := item ("*" item)*
//! item     := rational | name ["^" exponent]
//! exponent := [sign] digits ["/" digits] | "(" [sign] digits ["/" digits] ")"
//! ```
//!
//! Whitespace between tokens is ignored. Names are resolved against the
//! chain; indexed chains accept `prefix` followed by the index, e.g. `E_-1`
//! or `F_1/2`, plus any aliases.
//!
//! ```
//! use hahn_core::{text, FundamentalChain};
//!
//! let chain = FundamentalChain::log_exp();
//! let a = text::parse_series("x^2*3 - 5*x + x^2", &chain).unwrap();
//! assert_eq!(text::print_series(&a, &chain), "4*x^2 - 5*x");
//! ```

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::chain::{ChainKind, Fundamental, FundamentalChain};
use crate::monomial::Monomial;
use crate::series::{Series, Term};
use crate::{ParseError, Q};

pub fn print_monomial(m: &Monomial, chain: &FundamentalChain) -> String {
    if m.is_one() {
        return "1".to_owned();
    }
    let mut factors: Vec<(&Fundamental, &Q)> = m.iter().collect();
    factors.sort_by(|(a, _), (b, _)| factor_order(a, b));
    factors
        .into_iter()
        .map(|(phi, e)| {
            let name = chain.name(phi);
            if e.is_one() {
                name
            } else {
                format!("{name}^{e}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

/// Factors closest to the anchor index come first, so `x*E_-1` rather
/// than `E_-1*x`.
fn factor_order(a: &Fundamental, b: &Fundamental) -> Ordering {
    let (ia, ib) = (a.index(), b.index());
    ia.abs().cmp(&ib.abs()).then_with(|| ia.is_negative().cmp(&ib.is_negative()))
}

fn print_term(coeff: &Q, m: &Monomial, chain: &FundamentalChain) -> String {
    let c = coeff.abs();
    if m.is_one() {
        c.to_string()
    } else if c.is_one() {
        print_monomial(m, chain)
    } else {
        format!("{c}*{}", print_monomial(m, chain))
    }
}

pub fn print_series(a: &Series, chain: &FundamentalChain) -> String {
    if a.is_zero() {
        return "0".to_owned();
    }
    let mut out = String::new();
    for (i, t) in a.terms().iter().enumerate() {
        let neg = t.coeff.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&print_term(&t.coeff, &t.monomial, chain));
    }
    out
}

pub fn parse_series(text: &str, chain: &FundamentalChain) -> Result<Series, ParseError> {
    let mut p = Parser::new(text, chain);
    let s = p.series()?;
    p.skip_ws();
    match p.peek() {
        None => Ok(s),
        Some(c) => Err(p.error("`+`, `-`, `*` or end of input", &c.to_string())),
    }
}

/// Parses a monomial: a single term with coefficient 1, or `1`.
pub fn parse_monomial(text: &str, chain: &FundamentalChain) -> Result<Monomial, ParseError> {
    let mut p = Parser::new(text, chain);
    p.skip_ws();
    let start = p.pos;
    let (coeff, m) = p.term()?;
    p.skip_ws();
    if let Some(c) = p.peek() {
        return Err(p.error("`*` or end of input", &c.to_string()));
    }
    if !coeff.is_one() {
        return Err(ParseError {
            position: start,
            expected: "a monomial (coefficient 1)".into(),
            found: coeff.to_string(),
        });
    }
    Ok(m)
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    chain: &'a FundamentalChain,
}

impl<'a> Parser<'a> {
    fn new(text: &str, chain: &'a FundamentalChain) -> Self {
        Parser { chars: text.chars().collect(), pos: 0, chain }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn found(&self) -> String {
        self.peek().map_or_else(|| "end of input".to_owned(), |c| format!("`{c}`"))
    }

    fn error(&self, expected: &str, found: &str) -> ParseError {
        ParseError { position: self.pos, expected: expected.to_owned(), found: found.to_owned() }
    }

    fn sign(&mut self) -> Option<bool> {
        self.skip_ws();
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn series(&mut self) -> Result<Series, ParseError> {
        let mut terms = Vec::new();
        let mut neg = self.sign().unwrap_or(false);
        loop {
            self.skip_ws();
            let (c, m) = self.term()?;
            terms.push(Term::new(if neg { -c } else { c }, m));
            match self.sign() {
                Some(s) => neg = s,
                None => break,
            }
        }
        Ok(Series::from_terms(terms))
    }

    fn term(&mut self) -> Result<(Q, Monomial), ParseError> {
        let mut coeff = Q::one();
        let mut factors = Vec::new();
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.rational()?,
                Some(c) if c.is_ascii_alphabetic() => {
                    let phi = self.name()?;
                    self.skip_ws();
                    let e = if self.peek() == Some('^') {
                        self.pos += 1;
                        self.exponent()?
                    } else {
                        Q::one()
                    };
                    factors.push((phi, e));
                }
                _ => return Err(self.error("a number or a name", &self.found())),
            }
            self.skip_ws();
            if self.peek() == Some('*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((coeff, Monomial::from_pairs(factors)))
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("digits", &self.found()));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("ascii digits"))
    }

    /// `digits ["/" digits]`, no surrounding whitespace.
    fn rational(&mut self) -> Result<Q, ParseError> {
        let n = self.digits()?;
        if self.peek() == Some('/') {
            self.pos += 1;
            let at = self.pos;
            let d = self.digits()?;
            if d.is_zero() {
                return Err(ParseError {
                    position: at,
                    expected: "a nonzero denominator".into(),
                    found: "0".into(),
                });
            }
            Ok(Q::new(n, d))
        } else {
            Ok(Q::from_integer(n))
        }
    }

    fn exponent(&mut self) -> Result<Q, ParseError> {
        self.skip_ws();
        let paren = self.peek() == Some('(');
        if paren {
            self.pos += 1;
            self.skip_ws();
        }
        let neg = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let e = self.rational()?;
        if paren {
            self.skip_ws();
            if self.peek() != Some(')') {
                return Err(self.error("`)`", &self.found()));
            }
            self.pos += 1;
        }
        Ok(if neg { -e } else { e })
    }

    fn name(&mut self) -> Result<Fundamental, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        if self.chars[self.pos - 1] == '_' {
            // indexed name: `prefix_` followed by an index
            let save = self.pos;
            if self.peek() == Some('-') {
                self.pos += 1;
            }
            if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
            } else {
                self.pos = save;
            }
        }
        let rational = matches!(self.chain.kind(), ChainKind::RationalIndexed { .. });
        if rational
            && self.chars[self.pos - 1].is_ascii_digit()
            && self.peek() == Some('/')
            && self.chars.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit())
        {
            self.pos += 1;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        self.chain.lookup(&name).ok_or(ParseError {
            position: start,
            expected: "a name of the chain".into(),
            found: format!("`{name}`"),
        })
    }
}
