//! Gröbner bases for global orders, Mora standard bases for local and mixed orders, and the
//! ideal toolkit built on them.

mod buchberger;
mod hilbert;
mod ideal;
mod mora;

use serde::{Deserialize, Serialize};

use crate::field::Coeff;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Poly;

pub use buchberger::groebner;
pub use hilbert::{hilbert_of_monomials, krull_dim_of_monomials, HilbertData};
pub use ideal::Ideal;
pub use mora::{lazard_std, local_std, mora_normal_form, mora_std};

/// Whether an ideal lives in the polynomial ring or in its localization at the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Global,
    Local,
}

impl Mode {
    pub fn order(self) -> MonomialOrder {
        match self {
            Mode::Global => MonomialOrder::DegRevLex,
            Mode::Local => MonomialOrder::NegDegRevLex,
        }
    }

    /// Local wins: an equality or membership question involving a local ideal is asked in the
    /// local ring.
    pub fn join(self, other: Mode) -> Mode {
        if self == Mode::Local || other == Mode::Local {
            Mode::Local
        } else {
            Mode::Global
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Global => "global",
            Mode::Local => "local",
        })
    }
}

/// A standard basis: for global orders a reduced Gröbner basis, for local orders a standard
/// basis whose leading monomials minimally generate the leading ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct StandardBasis {
    pub elements: Vec<Poly>,
    pub order: MonomialOrder,
    pub reduced: bool,
}

impl StandardBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .filter_map(|f| f.leading_term(&self.order).map(|t| t.0))
            .collect()
    }

    /// Normal form of `f`; zero iff `f` lies in the ideal (in the localization for local orders).
    pub fn normal_form(&self, f: &Poly) -> Poly {
        if self.order.is_global() {
            let basis: Vec<Terms> = self.elements.iter().map(|g| ordered(g, &self.order)).collect();
            let refs: Vec<&Terms> = basis.iter().collect();
            to_poly(buchberger::reduce_full(ordered(f, &self.order), &refs, &self.order))
        } else {
            mora_normal_form(f, &self.elements, &self.order)
        }
    }

    pub fn contains(&self, f: &Poly) -> bool {
        if self.order.is_global() {
            f.is_zero() || self.normal_form(f).is_zero()
        } else {
            mora::local_contains(f, &self.elements, &self.order)
        }
    }

    /// True when the ideal is the whole ring (of the localization for local orders).
    pub fn is_unit(&self) -> bool {
        self.leading_monomials().iter().any(|m| m.is_one())
    }
}

pub(crate) type Terms = Vec<(Monomial, Coeff)>;

/// Terms of `p` sorted descending in `ord`.
pub(crate) fn ordered(p: &Poly, ord: &MonomialOrder) -> Terms {
    let mut v = p.terms().to_vec();
    if *ord != MonomialOrder::DegRevLex {
        v.sort_by(|a, b| ord.cmp(&b.0, &a.0));
    }
    v
}

pub(crate) fn to_poly(v: Terms) -> Poly {
    Poly::from_terms(v)
}

/// `a - c·m·b` for term lists sorted descending in `ord`.
pub(crate) fn sub_mul(a: &[(Monomial, Coeff)], c: &Coeff, m: &Monomial, b: &[(Monomial, Coeff)], ord: &MonomialOrder) -> Terms {
    use std::cmp::Ordering::*;
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let mb = b[j].0.mul(m);
        match ord.cmp(&a[i].0, &mb) {
            Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Less => {
                out.push((mb, b[j].1.mul(c).neg()));
                j += 1;
            }
            Equal => {
                let v = a[i].1.sub(&b[j].1.mul(c));
                if !v.is_zero() {
                    out.push((mb, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(t, d)| (t.mul(m), d.mul(c).neg())));
    out
}

pub(crate) fn make_monic(v: Terms) -> Terms {
    match v.first() {
        None => v,
        Some((_, c)) if c.is_one() => v,
        Some((_, c)) => {
            let inv = c.inv();
            v.into_iter().map(|(m, a)| (m, a.mul(&inv))).collect()
        }
    }
}

/// Makes the leading coefficient in `ord` equal to one.
pub fn monic_in(p: &Poly, ord: &MonomialOrder) -> Poly {
    match p.leading_term(ord) {
        None => Poly::zero(),
        Some((_, c)) => p.scale(&c.inv()),
    }
}
