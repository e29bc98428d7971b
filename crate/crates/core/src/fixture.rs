//! Line-oriented fixture files.
//!
//! ```text
//! # comment
//! %gadm vars=x,y dual=X,Y field=q z=y
//! X^2
//! X^2Y
//! ```
//!
//! The header names the kind (`gadm`, `dp` or `ideal`), the ring variables, optionally the dual
//! names (default: uppercased), the field (`q` or `fp:P`, default `q`) and, for `gadm`, the
//! linear form `z`. Every further non-blank, non-comment line holds one object in the text grammar.

use std::fmt::Write as _;

use crate::dp::DpPoly;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;
use crate::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    Gadm,
    Dp,
    Ideal,
}

impl FixtureKind {
    fn name(self) -> &'static str {
        match self {
            FixtureKind::Gadm => "gadm",
            FixtureKind::Dp => "dp",
            FixtureKind::Ideal => "ideal",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub kind: FixtureKind,
    pub ring: Ring,
    pub z: Option<Poly>,
    pub lines: Vec<String>,
}

fn parse_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("fixture line {line}: {msg}"))
}

impl Fixture {
    pub fn parse(text: &str) -> Result<Fixture> {
        let mut header: Option<(FixtureKind, Ring, Option<String>)> = None;
        let mut lines = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('%') {
                if header.is_some() {
                    return Err(parse_err(k + 1, "second header"));
                }
                header = Some(parse_header(rest).map_err(|e| parse_err(k + 1, e))?);
                continue;
            }
            if header.is_none() {
                return Err(parse_err(k + 1, "object before the % header"));
            }
            lines.push(line.to_string());
        }
        let (kind, ring, z) = header.ok_or_else(|| Error::Parse("fixture has no % header".into()))?;
        let z = match z {
            Some(s) => Some(ring.parse_poly(&s)?),
            None if kind == FixtureKind::Gadm => return Err(Error::Parse("gadm fixture needs z=".into())),
            None => None,
        };
        let fx = Fixture { kind, ring, z, lines };
        match kind {
            FixtureKind::Ideal => {
                fx.polys()?;
            }
            _ => {
                fx.dp_polys()?;
            }
        }
        Ok(fx)
    }

    pub fn read(path: &std::path::Path) -> Result<Fixture> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
        Fixture::parse(&text)
    }

    pub fn dp_polys(&self) -> Result<Vec<DpPoly>> {
        self.lines.iter().map(|l| self.ring.parse_dp(l)).collect()
    }

    pub fn polys(&self) -> Result<Vec<Poly>> {
        self.lines.iter().map(|l| self.ring.parse_poly(l)).collect()
    }

    pub fn gadm(ring: &Ring, z: &Poly, seq: &[DpPoly]) -> Fixture {
        Fixture {
            kind: FixtureKind::Gadm,
            ring: ring.clone(),
            z: Some(z.clone()),
            lines: seq.iter().map(|h| ring.format_dp(h)).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "%{} vars={} dual={} field={}",
            self.kind.name(),
            self.ring.vars.join(","),
            self.ring.dual_vars.join(","),
            self.ring.field
        );
        if let Some(z) = &self.z {
            let _ = write!(out, " z={}", self.ring.format_poly(z).replace(' ', ""));
        }
        out.push('\n');
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out
    }
}

fn parse_header(rest: &str) -> std::result::Result<(FixtureKind, Ring, Option<String>), String> {
    let mut words = rest.split_whitespace();
    let kind = match words.next() {
        Some("gadm") => FixtureKind::Gadm,
        Some("dp") => FixtureKind::Dp,
        Some("ideal") => FixtureKind::Ideal,
        other => return Err(format!("unknown fixture kind {other:?}")),
    };
    let (mut vars, mut dual, mut field, mut z) = (None, None, Field::Rational, None);
    for w in words {
        let (key, value) = w.split_once('=').ok_or_else(|| format!("expected key=value, got {w:?}"))?;
        match key {
            "vars" => vars = Some(value.split(',').map(str::to_string).collect::<Vec<_>>()),
            "dual" => dual = Some(value.split(',').map(str::to_string).collect::<Vec<_>>()),
            "field" => field = Field::parse(value).map_err(|e| e.to_string())?,
            "z" => z = Some(value.to_string()),
            _ => return Err(format!("unknown header key {key:?}")),
        }
    }
    let vars = vars.ok_or("header needs vars=")?;
    let dual = dual.unwrap_or_else(|| vars.iter().map(|v| v.to_uppercase()).collect());
    let ring = Ring::with_names(&vars, &dual, field).map_err(|e| e.to_string())?;
    Ok((kind, ring, z))
}
