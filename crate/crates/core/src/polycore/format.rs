//! Canonical text, LaTeX and JSON forms of [`Polynomial`] and [`FracPoly`].
//!
//! Text grammar: terms joined by ` + ` / ` - `, each term an optional integer
//! coefficient followed by `q`, `a`, `t` powers in that order, separated by
//! single spaces. Integer exponents print as `q^3` or `q^-3`, fractional ones
//! as `q^(1/2)` or `q^(-3/4)`. The zero polynomial prints as `0`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::exponent::{Exponent, UNITS};
use super::frac::{BinomialFactor, FracPoly};
use super::poly::Polynomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            other => Err(Error::parse(0, format!("unknown format {other:?}"))),
        }
    }
}

pub fn serialize(p: &Polynomial, format: Format) -> String {
    match format {
        Format::Text => to_text(p),
        Format::Latex => to_latex(p),
        Format::Json => to_json(p),
    }
}

pub fn parse(input: &str, format: Format) -> Result<Polynomial> {
    match format {
        Format::Text => input.parse(),
        Format::Json => from_json(input),
        Format::Latex => Err(Error::parse(0, "LaTeX output cannot be parsed")),
    }
}

pub fn serialize_frac(f: &FracPoly, format: Format) -> String {
    match format {
        Format::Text => frac_to_text(f),
        Format::Latex => frac_to_latex(f),
        Format::Json => frac_to_json(f),
    }
}

// ---------------------------------------------------------------------------
// text / latex

const VARS: [char; 3] = ['q', 'a', 't'];

fn text_power(var: char, units: i32) -> String {
    if units == UNITS {
        return var.to_string();
    }
    if units % UNITS == 0 {
        return format!("{var}^{}", units / UNITS);
    }
    let g = units.abs().gcd(&UNITS);
    format!("{var}^({}/{})", units / g, UNITS / g)
}

fn latex_power(var: char, units: i32) -> String {
    if units == UNITS {
        return var.to_string();
    }
    if units % UNITS == 0 {
        return format!("{var}^{{{}}}", units / UNITS);
    }
    let g = units.abs().gcd(&UNITS);
    let sign = if units < 0 { "-" } else { "" };
    format!(
        "{var}^{{{sign}\\frac{{{}}}{{{}}}}}",
        units.abs() / g,
        UNITS / g
    )
}

fn monomial_with(e: &Exponent, power: fn(char, i32) -> String) -> String {
    e.as_array()
        .iter()
        .zip(VARS)
        .filter(|(u, _)| **u != 0)
        .map(|(u, v)| power(v, *u))
        .collect::<Vec<_>>()
        .join(" ")
}

fn join_terms(p: &Polynomial, power: fn(char, i32) -> String) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        let mono = monomial_with(e, power);
        let mag = c.abs();
        let body = if mono.is_empty() {
            mag.to_string()
        } else if mag.is_one() {
            mono
        } else {
            format!("{mag} {mono}")
        };
        match (i, c.is_negative()) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

pub fn to_text(p: &Polynomial) -> String {
    join_terms(p, text_power)
}

pub fn to_latex(p: &Polynomial) -> String {
    join_terms(p, latex_power)
}

fn den_with(
    factors: &[(Exponent, u32)],
    poly: fn(&Polynomial) -> String,
    pow: fn(u32) -> String,
) -> String {
    factors
        .iter()
        .map(|(u, m)| {
            let f = &Polynomial::one() - &Polynomial::from(*u);
            let base = format!("({})", poly(&f));
            if *m > 1 {
                format!("{base}{}", pow(*m))
            } else {
                base
            }
        })
        .collect()
}

fn wrap(s: String, p: &Polynomial) -> String {
    if p.len() > 1 {
        format!("({s})")
    } else {
        s
    }
}

/// `num / (1 - u1)^m1 (1 - u2)^m2 ...`; a polynomial prints as itself.
pub fn frac_to_text(f: &FracPoly) -> String {
    let (num, factors) = f.display_parts();
    if factors.is_empty() {
        return to_text(&num);
    }
    format!(
        "{} / {}",
        wrap(to_text(&num), &num),
        den_with(&factors, to_text, |m| format!("^{m}"))
    )
}

pub fn frac_to_latex(f: &FracPoly) -> String {
    let (num, factors) = f.display_parts();
    if factors.is_empty() {
        return to_latex(&num);
    }
    format!(
        "\\frac{{{}}}{{{}}}",
        to_latex(&num),
        den_with(&factors, to_latex, |m| format!("^{{{m}}}"))
    )
}

/// Text form with every factor `t^k + a` (the factors produced by the
/// sequence recursion) pulled out in front, e.g. `(1 + a)(t + a + q - q t)`.
pub fn to_text_factored(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut rest = p.clone();
    let mut parts = Vec::new();
    let max_t = p.span(|e| e.t).map_or(0, |(_, hi)| hi / UNITS).max(0);
    for k in 0..=max_t {
        let factor = &Polynomial::qat(0, 0, k) + &Polynomial::a();
        while rest.len() > 1 {
            match rest.exact_div(&factor) {
                Ok(r) => {
                    parts.push(format!("({})", to_text(&factor)));
                    rest = r;
                }
                Err(_) => break,
            }
        }
    }
    if parts.is_empty() {
        return to_text(p);
    }
    let parts = parts.concat();
    if rest.len() > 1 {
        format!("{parts}({})", to_text(&rest))
    } else if rest.is_one() {
        parts
    } else if rest == -&Polynomial::one() {
        format!("-{parts}")
    } else {
        format!("{} {parts}", to_text(&rest))
    }
}

/// Like [`frac_to_text`] with the numerator in factored form.
pub fn frac_to_text_factored(f: &FracPoly) -> String {
    let (num, factors) = f.display_parts();
    let head = to_text_factored(&num);
    if factors.is_empty() {
        return head;
    }
    let head = if head.starts_with('(') || num.len() == 1 {
        head
    } else {
        format!("({head})")
    };
    format!(
        "{head} / {}",
        den_with(&factors, to_text, |m| format!("^{m}"))
    )
}

// ---------------------------------------------------------------------------
// JSON

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    coeff: String,
    exp: [i32; 3],
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FactorJson {
    lead: [i32; 3],
    trail: [i32; 3],
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyJson {
    exponent_unit: String,
    variables: Vec<String>,
    terms: Vec<TermJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    den: Option<Vec<FactorJson>>,
}

fn terms_json(p: &Polynomial) -> Vec<TermJson> {
    p.terms()
        .map(|(e, c)| TermJson {
            coeff: c.to_string(),
            exp: e.as_array(),
        })
        .collect()
}

fn header() -> (String, Vec<String>) {
    (
        "1/4".to_string(),
        VARS.iter().map(|v| v.to_string()).collect(),
    )
}

pub(crate) fn poly_json_value(p: &Polynomial) -> serde_json::Value {
    let (exponent_unit, variables) = header();
    serde_json::to_value(PolyJson {
        exponent_unit,
        variables,
        terms: terms_json(p),
        den: None,
    })
    .expect("serializable")
}

pub fn to_json(p: &Polynomial) -> String {
    poly_json_value(p).to_string()
}

pub fn frac_to_json(f: &FracPoly) -> String {
    let (exponent_unit, variables) = header();
    let den = f
        .denominator_factors()
        .iter()
        .map(|b| FactorJson {
            lead: b.lead.as_array(),
            trail: b.trail.as_array(),
        })
        .collect();
    serde_json::to_string(&PolyJson {
        exponent_unit,
        variables,
        terms: terms_json(f.numerator()),
        den: Some(den),
    })
    .expect("serializable")
}

fn json_error(input: &str, e: serde_json::Error) -> Error {
    let offset: usize = input
        .lines()
        .take(e.line().saturating_sub(1))
        .map(|l| l.len() + 1)
        .sum::<usize>()
        + e.column().saturating_sub(1);
    Error::parse(offset, e.to_string())
}

fn poly_from_json_value(doc: &PolyJson) -> Result<Polynomial> {
    let (unit, vars) = header();
    if doc.exponent_unit != unit {
        return Err(Error::parse(0, format!("exponent_unit must be {unit:?}")));
    }
    if doc.variables != vars {
        return Err(Error::parse(0, "variables must be [\"q\",\"a\",\"t\"]"));
    }
    let mut p = Polynomial::zero();
    let mut prev: Option<Exponent> = None;
    for (i, term) in doc.terms.iter().enumerate() {
        let c: BigInt = term
            .coeff
            .parse()
            .map_err(|_| Error::parse(i, format!("term {i}: bad coefficient {:?}", term.coeff)))?;
        if c.is_zero() {
            return Err(Error::parse(i, format!("term {i}: zero coefficient")));
        }
        let e = Exponent::from_array(term.exp);
        if prev.is_some_and(|p| p >= e) {
            return Err(Error::parse(
                i,
                format!("term {i}: terms must be in strictly increasing canonical order"),
            ));
        }
        prev = Some(e);
        p.add_term(e, c);
    }
    Ok(p)
}

pub fn from_json(input: &str) -> Result<Polynomial> {
    let doc: PolyJson = serde_json::from_str(input).map_err(|e| json_error(input, e))?;
    if doc.den.as_ref().is_some_and(|d| !d.is_empty()) {
        return Err(Error::parse(
            0,
            "rational function where a polynomial was expected",
        ));
    }
    poly_from_json_value(&doc)
}

pub fn frac_from_json(input: &str) -> Result<FracPoly> {
    let doc: PolyJson = serde_json::from_str(input).map_err(|e| json_error(input, e))?;
    let num = poly_from_json_value(&doc)?;
    let mut factors = Vec::new();
    for (i, f) in doc.den.iter().flatten().enumerate() {
        if f.lead == f.trail {
            return Err(Error::parse(i, "degenerate denominator factor"));
        }
        factors.push(BinomialFactor {
            lead: Exponent::from_array(f.lead),
            trail: Exponent::from_array(f.trail),
        });
    }
    Ok(FracPoly::from_parts(num, factors))
}

// ---------------------------------------------------------------------------
// text parser

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src.char_indices().collect(),
            pos: 0,
            src,
        }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |(i, _)| *i)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.offset(), msg))
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-') | Some('−') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let s: String = self.chars[start..self.pos]
            .iter()
            .map(|(_, c)| *c)
            .collect();
        Ok(s.parse().expect("digits"))
    }

    fn small_integer(&mut self) -> Result<i32> {
        let at = self.offset();
        let n = self.integer()?;
        i32::try_from(n).map_err(|_| Error::parse(at, "exponent out of range"))
    }

    /// Exponent after `^`, returned in quarter units.
    fn exponent(&mut self) -> Result<i32> {
        if self.peek() == Some('(') {
            self.pos += 1;
            self.skip_ws();
            let neg = self.sign() == Some(true);
            self.skip_ws();
            let num = self.small_integer()?;
            self.skip_ws();
            let den = if self.peek() == Some('/') {
                self.pos += 1;
                self.skip_ws();
                self.small_integer()?
            } else {
                1
            };
            self.skip_ws();
            if self.bump() != Some(')') {
                self.pos -= 1;
                return self.err("expected ')'");
            }
            if den == 0 || (num * UNITS) % den != 0 {
                return self.err("exponent is not on the quarter lattice");
            }
            let u = num * UNITS / den;
            Ok(if neg { -u } else { u })
        } else {
            let neg = self.sign() == Some(true);
            let u = self.small_integer()? * UNITS;
            Ok(if neg { -u } else { u })
        }
    }

    fn term(&mut self) -> Result<(BigInt, Exponent)> {
        let mut coeff = BigInt::one();
        let mut exp = Exponent::ZERO;
        let mut factors = 0;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    coeff *= self.integer()?;
                }
                Some(v @ ('q' | 'a' | 't')) => {
                    self.pos += 1;
                    let u = if self.peek() == Some('^') {
                        self.pos += 1;
                        self.exponent()?
                    } else {
                        UNITS
                    };
                    exp = exp
                        + match v {
                            'q' => Exponent::units(u, 0, 0),
                            'a' => Exponent::units(0, u, 0),
                            _ => Exponent::units(0, 0, u),
                        };
                }
                Some('*') if factors > 0 => {
                    self.pos += 1;
                    continue;
                }
                _ => {
                    if factors == 0 {
                        return self.err("expected a coefficient or one of q, a, t");
                    }
                    return Ok((coeff, exp));
                }
            }
            factors += 1;
        }
    }

    fn polynomial(&mut self) -> Result<Polynomial> {
        let mut p = Polynomial::zero();
        self.skip_ws();
        let mut neg = self.sign() == Some(true);
        loop {
            let (c, e) = self.term()?;
            p.add_term(e, if neg { -c } else { c });
            self.skip_ws();
            match self.sign() {
                Some(n) => neg = n,
                None if self.peek().is_none() => return Ok(p),
                None => return self.err("expected '+', '-' or end of input"),
            }
        }
    }
}

impl FromStr for Polynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s).polynomial()
    }
}
