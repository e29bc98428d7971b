//! Ring context and the text grammar for polynomials and DP-polynomials.
//!
//! Grammar: signed terms joined by `+`/`-`, factors joined by optional `*`, exponents with `^`,
//! integer or rational literals (`3`, `3/2`) and parentheses. Variables are matched greedily
//! against the configured names, so `xz` reads as `x*z` when `x` and `z` are variables.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::dp::DpPoly;
use crate::error::{Error, Result};
use crate::field::{Coeff, Field};
use crate::monomial::{Monomial, MAX_VARS};
use crate::poly::Poly;

/// Variable names of `R = k[z_1..z_n]`, their duals in `Γ`, and the ground field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ring {
    pub vars: Vec<String>,
    pub dual_vars: Vec<String>,
    pub field: Field,
}

impl Ring {
    /// Ring with the given variable names; dual names are the uppercased variable names.
    pub fn new<S: AsRef<str>>(vars: &[S], field: Field) -> Ring {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        assert!(vars.len() < MAX_VARS, "at most {} variables", MAX_VARS - 1);
        let dual_vars = vars.iter().map(|v| v.to_uppercase()).collect();
        Ring { vars, dual_vars, field }
    }

    /// Ring with explicit dual variable names.
    pub fn with_names<S: AsRef<str>>(vars: &[S], dual_vars: &[S], field: Field) -> Result<Ring> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().trim().to_string()).collect();
        let dual_vars: Vec<String> = dual_vars.iter().map(|v| v.as_ref().trim().to_string()).collect();
        if vars.is_empty() || vars.len() >= MAX_VARS {
            return Err(Error::Invalid(format!("between 1 and {} variables", MAX_VARS - 1)));
        }
        if dual_vars.len() != vars.len() {
            return Err(Error::Invalid("as many dual variables as variables".into()));
        }
        for names in [&vars, &dual_vars] {
            let mut seen = std::collections::HashSet::new();
            for v in names.iter() {
                let ok = !v.is_empty() && v.chars().next().unwrap().is_alphabetic() && v.chars().all(|c| c.is_alphanumeric() || c == '_');
                if !ok || !seen.insert(v) {
                    return Err(Error::Invalid(format!("bad or repeated variable name {v:?}")));
                }
            }
        }
        Ok(Ring { vars, dual_vars, field })
    }

    /// The default `k[x,y,z,w]` truncated to `n` variables.
    pub fn standard(n: usize, field: Field) -> Ring {
        let names = ["x", "y", "z", "w", "u", "v", "s"];
        Ring::new(&names[..n], field)
    }

    pub fn with_field(&self, field: Field) -> Ring {
        Ring { field, ..self.clone() }
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::var(i, self.field)
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn constant(&self, v: i64) -> Poly {
        Poly::constant(self.field.from_i64(v))
    }

    pub fn parse_poly(&self, text: &str) -> Result<Poly> {
        Parser::new(text, &self.vars, self.field).parse_all()
    }

    pub fn parse_dp(&self, text: &str) -> Result<DpPoly> {
        Parser::new(text, &self.dual_vars, self.field).parse_all().map(DpPoly::from_poly)
    }

    pub fn format_poly(&self, f: &Poly) -> String {
        format_terms(f.terms(), &self.vars)
    }

    pub fn format_dp(&self, f: &DpPoly) -> String {
        format_terms(f.as_poly().terms(), &self.dual_vars)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        write_monomial(&mut s, m, &self.vars, juxtapose(&self.vars));
        if s.is_empty() {
            s.push('1');
        }
        s
    }

    /// Comma-separated generator list, parenthesized.
    pub fn format_ideal(&self, gens: &[Poly]) -> String {
        let inner: Vec<String> = gens.iter().map(|g| self.format_poly(g)).collect();
        format!("({})", inner.join(", "))
    }

    /// Parses `(f1, f2, ...)` or `f1, f2, ...`.
    pub fn parse_list(&self, text: &str) -> Result<Vec<Poly>> {
        split_list(text).iter().map(|p| self.parse_poly(p)).collect()
    }

    pub fn parse_dp_list(&self, text: &str) -> Result<Vec<DpPoly>> {
        split_list(text).iter().map(|p| self.parse_dp(p)).collect()
    }
}

/// Splits a top-level comma-separated list, removing one pair of enclosing parentheses or brackets.
pub fn split_list(text: &str) -> Vec<String> {
    let t = text.trim();
    let t = if (t.starts_with('(') && t.ends_with(')')) || (t.starts_with('[') && t.ends_with(']')) {
        let inner = &t[1..t.len() - 1];
        // only strip when the outer pair matches
        let mut depth = 0i32;
        let mut closes_early = false;
        for ch in inner.chars() {
            match ch {
                '(' | '[' => depth += 1,
                ')' | ']' => {
                    depth -= 1;
                    if depth < 0 {
                        closes_early = true;
                        break;
                    }
                }
                _ => {}
            }
        }
        if closes_early {
            t
        } else {
            inner
        }
    } else {
        t
    };
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in t.chars() {
        match ch {
            '(' | '[' => {
                depth += 1;
                cur.push(ch);
            }
            ')' | ']' => {
                depth -= 1;
                cur.push(ch);
            }
            ',' | ';' if depth == 0 => {
                out.push(std::mem::take(&mut cur).trim().to_string());
            }
            _ => cur.push(ch),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out.retain(|s| !s.is_empty());
    out
}

fn juxtapose(names: &[String]) -> bool {
    names.iter().all(|n| n.chars().count() == 1)
}

fn write_monomial(s: &mut String, m: &Monomial, names: &[String], jux: bool) {
    let mut first = true;
    for (i, name) in names.iter().enumerate() {
        let e = m.exp(i);
        if e == 0 {
            continue;
        }
        if !first && !jux {
            s.push('*');
        }
        first = false;
        s.push_str(name);
        if e > 1 {
            let _ = write!(s, "^{e}");
        }
    }
}

fn format_terms(terms: &[(Monomial, Coeff)], names: &[String]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let jux = juxtapose(names);
    let mut s = String::new();
    for (k, (m, c)) in terms.iter().enumerate() {
        let q = c.to_rational();
        let neg = q < BigRational::zero();
        let abs = if neg { -q } else { q };
        if neg {
            s.push('-');
        } else if k > 0 {
            s.push('+');
        }
        let unit = abs.is_one();
        if m.is_one() {
            let _ = write!(s, "{abs}");
        } else {
            if !unit {
                let _ = write!(s, "{abs}");
                if !jux || !abs.is_integer() {
                    s.push('*');
                }
            }
            write_monomial(&mut s, m, names, jux);
        }
    }
    s
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    names: &'a [String],
    field: Field,
}

impl<'a> Parser<'a> {
    fn new(text: &str, names: &'a [String], field: Field) -> Parser<'a> {
        Parser { chars: text.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, names, field }
    }

    fn err(&self, msg: &str) -> Error {
        let text: String = self.chars.iter().collect();
        Error::Parse(format!("{msg} at position {} in `{text}`", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<Poly> {
        if self.chars.is_empty() {
            return Err(self.err("empty input"));
        }
        let p = self.expr()?;
        if self.pos != self.chars.len() {
            return Err(self.err("unexpected character"));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero();
        let mut sign = 1i64;
        match self.peek() {
            Some('+') => self.pos += 1,
            Some('-') => {
                self.pos += 1;
                sign = -1;
            }
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = if sign > 0 { acc.add(&t) } else { acc.sub(&t) };
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some('-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '(' || c == '_')
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            if self.peek() == Some('*') {
                self.pos += 1;
                let f = self.factor()?;
                acc = acc.mul(&f);
            } else if self.starts_factor() {
                let f = self.factor()?;
                acc = acc.mul(&f);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.base()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.uint()?;
            let e = u32::try_from(e).map_err(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e, self.field));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().unwrap())
    }

    fn base(&mut self) -> Result<Poly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let p = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.err("expected `)`"));
                }
                self.pos += 1;
                Ok(p)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.uint()?;
                let mut q = BigRational::from_integer(num);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    let den = self.uint()?;
                    if den.is_zero() {
                        return Err(self.err("division by zero"));
                    }
                    q /= BigRational::from_integer(den);
                }
                let c = self.field.from_rational(&q).map_err(|e| match e {
                    Error::Parse(m) => Error::Parse(format!("characteristic conflict: {m}")),
                    other => other,
                })?;
                Ok(Poly::constant(c))
            }
            Some(_) => {
                let rest: String = self.chars[self.pos..].iter().collect();
                let best = self
                    .names
                    .iter()
                    .enumerate()
                    .filter(|(_, n)| rest.starts_with(n.as_str()))
                    .max_by_key(|(_, n)| n.len());
                match best {
                    Some((i, n)) => {
                        self.pos += n.chars().count();
                        Ok(Poly::var(i, self.field))
                    }
                    None => {
                        let ident: String = rest
                            .chars()
                            .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
                            .collect();
                        Err(self.err(&format!("unknown variable `{ident}`")))
                    }
                }
            }
            None => Err(self.err("unexpected end of input")),
        }
    }
}
