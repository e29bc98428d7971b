//! Sparse multivariate polynomials with exact coefficients.

use std::collections::HashMap;

use crate::field::{Coeff, Field};
use crate::monomial::{Monomial, MonomialOrder};

/// A polynomial stored as a list of terms sorted in descending canonical (degrevlex) order,
/// with no zero coefficients and no repeated monomials. Equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Coeff)>,
}

/// Order of a power series: `None` stands for the order of zero, which is infinite.
pub type Valuation = Option<u32>;

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: Coeff) -> Poly {
        Poly::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: Coeff) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn var(i: usize, field: Field) -> Poly {
        Poly::monomial(Monomial::var(i), field.one())
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Poly {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            match acc.get_mut(&m) {
                Some(e) => *e = e.add(&c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by_key(|t| std::cmp::Reverse(t.0));
        Poly { terms }
    }

    /// Terms already sorted in descending canonical order with no zeros.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, Coeff)>) -> Poly {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn field(&self) -> Option<Field> {
        self.terms.first().map(|(_, c)| c.field())
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Coeff> {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    pub fn is_linear_form(&self) -> bool {
        !self.is_zero() && self.terms.iter().all(|(m, _)| m.degree() == 1)
    }

    /// Index of the variable when `self` is a nonzero multiple of a single variable.
    pub fn as_variable(&self) -> Option<usize> {
        match self.terms.as_slice() {
            [(m, _)] if m.degree() == 1 => (0..crate::monomial::MAX_VARS).find(|&i| m.exp(i) == 1),
            _ => None,
        }
    }

    /// Number of variable slots actually used.
    pub fn support_len(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.support_len()).max().unwrap_or(0)
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<&(Monomial, Coeff)> {
        self.terms.iter().max_by(|a, b| order.cmp(&a.0, &b.0))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        merge(&self.terms, &other.terms, |c| c.clone())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        merge(&self.terms, &other.terms, |c| c.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect() }
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (*m, a.mul(c))).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_monomial(m).scale(c);
        }
        Poly::from_terms(
            self.terms
                .iter()
                .flat_map(|(a, c)| other.terms.iter().map(move |(b, d)| (a.mul(b), c.mul(d)))),
        )
    }

    pub fn pow(&self, e: u32, field: Field) -> Poly {
        let mut acc = Poly::constant(field.one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Makes the canonical leading coefficient one.
    pub fn monic(&self) -> Poly {
        match self.terms.first() {
            None => Poly::zero(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly { terms: self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect() }
    }

    /// The order `v(f)` (least degree of a nonzero component) and the initial form `f*`.
    pub fn initial_form(&self) -> (Valuation, Poly) {
        match self.terms.iter().map(|(m, _)| m.degree()).min() {
            None => (None, Poly::zero()),
            Some(v) => (Some(v), self.homogeneous_part(v)),
        }
    }

    pub fn valuation(&self) -> Valuation {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    /// Terms of total degree at most `d`.
    pub fn truncate_degree(&self, d: u32) -> Poly {
        Poly { terms: self.terms.iter().filter(|(m, _)| m.degree() <= d).cloned().collect() }
    }

    /// Substitutes each variable `i` by `images[i]`.
    pub fn substitute(&self, images: &[Poly], field: Field) -> Poly {
        let mut acc = Poly::zero();
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            for (i, img) in images.iter().enumerate() {
                let e = m.exp(i);
                if e > 0 {
                    t = t.mul(&img.pow(e, field));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Exact division `self / divisor` in the polynomial ring, or `None` when it leaves a remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let (lm, lc) = divisor.terms.first()?.clone();
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first().cloned() {
            let q = m.div(&lm)?;
            let qc = c.div(&lc);
            rem = rem.sub(&divisor.mul_monomial(&q).scale(&qc));
            quot.push((q, qc));
        }
        Some(Poly::from_terms(quot))
    }
}

fn merge(a: &[(Monomial, Coeff)], b: &[(Monomial, Coeff)], map_b: impl Fn(&Coeff) -> Coeff) -> Poly {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((b[j].0, map_b(&b[j].1)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = a[i].1.add(&map_b(&b[j].1));
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend(b[j..].iter().map(|(m, c)| (*m, map_b(c))));
    Poly { terms: out }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Poly {
        Poly::var(i, Field::Rational)
    }

    #[test]
    fn difference_of_squares() {
        let f = x(0).add(&x(1));
        let g = x(0).sub(&x(1));
        let expected = x(0).mul(&x(0)).sub(&x(1).mul(&x(1)));
        assert_eq!(f.mul(&g), expected);
        let one = Poly::constant(Field::Rational.one());
        assert_eq!(f.mul(&one), f);
    }

    #[test]
    fn initial_form_examples() {
        let q = Field::Rational;
        // yz - x^7
        let f = x(1).mul(&x(2)).sub(&x(0).pow(7, q));
        let (v, star) = f.initial_form();
        assert_eq!(v, Some(2));
        assert_eq!(star, x(1).mul(&x(2)));
        let g = x(0).pow(3, q).sub(&x(0).mul(&x(1)).mul(&x(1)));
        assert_eq!(g.initial_form(), (Some(3), g.clone()));
        assert_eq!(Poly::zero().initial_form(), (None, Poly::zero()));
    }

    #[test]
    fn exact_division() {
        let q = Field::Rational;
        let f = x(0).add(&x(1)).pow(3, q);
        let g = x(0).add(&x(1));
        assert_eq!(f.div_exact(&g), Some(g.mul(&g)));
        assert_eq!(x(0).div_exact(&x(1)), None);
    }
}
