//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Maximum number of variables, including the tag variable used for elimination.
pub const MAX_VARS: usize = 8;

/// A multi-index `L = (l_1, ..., l_n)`; unused slots are zero.
///
/// The derived `Ord` is degree-reverse-lexicographic with the last variable smallest,
/// which is the canonical term order for printing and equality.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(i: usize) -> Monomial {
        let mut m = Monomial::one();
        m.exps[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Monomial {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::one();
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflow");
        }
        m
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.exps[..nvars].iter().map(|&e| e as u32).collect()
    }

    pub fn with_exp(mut self, i: usize, e: u32) -> Monomial {
        self.exps[i] = u16::try_from(e).expect("exponent overflow");
        self
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Dot product of the exponent vector with `weights`.
    pub fn weighted_degree(&self, weights: &[u32]) -> Result<u64> {
        if weights.len() > MAX_VARS || self.exps[weights.len()..].iter().any(|&e| e != 0) {
            return Err(Error::Context(format!(
                "weight vector of length {} does not cover the monomial",
                weights.len()
            )));
        }
        Ok(weights.iter().zip(self.exps).map(|(&w, e)| w as u64 * e as u64).sum())
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps) {
            *a = a.checked_add(b).expect("exponent overflow");
        }
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps).all(|(&a, b)| a <= b)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps) {
            *a = a.checked_sub(b)?;
        }
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps) {
            *a = (*a).max(b);
        }
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(other.exps) {
            *a = (*a).min(b);
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps).all(|(&a, b)| a == 0 || b == 0)
    }

    /// Highest index with a nonzero exponent, plus one.
    pub fn support_len(&self) -> usize {
        self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1)
    }

    fn revlex_tail(&self, other: &Monomial) -> Ordering {
        for i in (0..MAX_VARS).rev() {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                ord => return ord.reverse(),
            }
        }
        Ordering::Equal
    }

    /// All monomials of total degree exactly `d` in `nvars` variables, in descending canonical order.
    pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = [0u32; MAX_VARS];
        fn rec(i: usize, nvars: usize, left: u32, cur: &mut [u32; MAX_VARS], out: &mut Vec<Monomial>) {
            if i + 1 == nvars {
                cur[i] = left;
                out.push(Monomial::from_exponents(&cur[..nvars]));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, nvars, left - e, cur, out);
            }
            cur[i] = 0;
        }
        if nvars == 0 {
            if d == 0 {
                out.push(Monomial::one());
            }
            return out;
        }
        rec(0, nvars, d, &mut cur, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    /// All monomials of total degree at most `d`, in ascending canonical order.
    pub fn all_up_to_degree(nvars: usize, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for k in 0..=d {
            let mut layer = Monomial::all_of_degree(nvars, k);
            layer.reverse();
            out.extend(layer);
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.revlex_tail(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.support_len().max(1);
        write!(f, "{:?}", &self.exps[..n])
    }
}

/// Term orders used by the standard-basis engine.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Global degree reverse lexicographic order (`dp`).
    DegRevLex,
    /// Local order: lower total degree is larger, ties broken by degrevlex (`ds`).
    NegDegRevLex,
    /// Positive weights first, ties broken by degrevlex (`wp`).
    Weighted(Vec<u32>),
    /// Block order eliminating the variable `tag`: its exponent is compared first,
    /// then the base order on the remaining variables.
    Elim { tag: usize, base: Box<MonomialOrder> },
    /// Order on the homogenization by `t`: total degree first, then `base` on the monomial with
    /// `t` removed. Global even when `base` is local.
    Homogenized { t: usize, base: Box<MonomialOrder> },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => a.cmp(b),
            MonomialOrder::NegDegRevLex => {
                b.degree().cmp(&a.degree()).then_with(|| a.revlex_tail(b))
            }
            MonomialOrder::Weighted(w) => {
                let wa: u64 = w.iter().zip(a.exps).map(|(&x, e)| x as u64 * e as u64).sum();
                let wb: u64 = w.iter().zip(b.exps).map(|(&x, e)| x as u64 * e as u64).sum();
                wa.cmp(&wb).then_with(|| a.cmp(b))
            }
            MonomialOrder::Elim { tag, base } => a.exps[*tag]
                .cmp(&b.exps[*tag])
                .then_with(|| base.cmp(&a.with_exp(*tag, 0), &b.with_exp(*tag, 0))),
            MonomialOrder::Homogenized { t, base } => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| base.cmp(&a.with_exp(*t, 0), &b.with_exp(*t, 0))),
        }
    }

    /// True when `1` is the smallest monomial, so plain Buchberger reduction terminates.
    pub fn is_global(&self) -> bool {
        match self {
            MonomialOrder::DegRevLex => true,
            MonomialOrder::NegDegRevLex => false,
            MonomialOrder::Weighted(w) => w.iter().all(|&x| x > 0),
            MonomialOrder::Elim { base, .. } => base.is_global(),
            MonomialOrder::Homogenized { .. } => true,
        }
    }

    /// Elimination order for `tag` on top of `self`.
    pub fn eliminating(&self, tag: usize) -> MonomialOrder {
        MonomialOrder::Elim { tag, base: Box::new(self.clone()) }
    }
}
