use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::poly::Poly;
use crate::ring::Ring;

use super::buchberger::cmp_lead;
use super::hilbert::{hilbert_of_monomials, krull_dim_of_monomials, HilbertData};
use super::{groebner, local_std, monic_in, Mode, StandardBasis};

/// A finitely generated ideal of `k[z_1..z_n]` or of its localization at the origin.
///
/// Equality is mathematical; compare with [`Ideal::equals`]. The standard basis is computed on
/// first use and cached.
#[derive(Clone, Debug)]
pub struct Ideal {
    nvars: usize,
    field: Field,
    gens: Vec<Poly>,
    mode: Mode,
    basis: OnceLock<StandardBasis>,
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Poly>, mode: Mode) -> Ideal {
        Ideal::from_parts(ring.nvars(), ring.field, gens, mode)
    }

    pub fn from_parts(nvars: usize, field: Field, gens: Vec<Poly>, mode: Mode) -> Ideal {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal { nvars, field, gens, mode, basis: OnceLock::new() }
    }

    /// An ideal whose standard basis for its mode is already known.
    pub fn with_basis(nvars: usize, field: Field, basis: StandardBasis, mode: Mode) -> Ideal {
        debug_assert_eq!(basis.order, mode.order());
        let ideal = Ideal::from_parts(nvars, field, basis.elements.clone(), mode);
        let _ = ideal.basis.set(basis);
        ideal
    }

    pub fn unit(nvars: usize, field: Field, mode: Mode) -> Ideal {
        Ideal::from_parts(nvars, field, vec![Poly::constant(field.one())], mode)
    }

    pub fn maximal(nvars: usize, field: Field, mode: Mode) -> Ideal {
        Ideal::from_parts(nvars, field, (0..nvars).map(|i| Poly::var(i, field)).collect(), mode)
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn in_mode(&self, mode: Mode) -> Ideal {
        if mode == self.mode {
            return self.clone();
        }
        let out = Ideal::from_parts(self.nvars, self.field, self.gens.clone(), mode);
        // a homogeneous degrevlex basis is also a negative-degrevlex standard basis and vice versa
        if let Some(b) = self.basis.get().filter(|b| b.elements.iter().all(|g| g.is_homogeneous())) {
            let order = mode.order();
            let _ = out.basis.set(StandardBasis { elements: b.elements.clone(), order, reduced: false });
        }
        out
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    fn check_field(&self, f: &Poly) -> Result<()> {
        match f.field() {
            Some(k) if k != self.field => {
                Err(Error::Context(format!("polynomial over {k} used with an ideal over {}", self.field)))
            }
            _ => Ok(()),
        }
    }

    /// Reduced Gröbner basis (global mode) or Mora standard basis (local mode).
    pub fn std_basis(&self) -> &StandardBasis {
        self.basis.get_or_init(|| {
            let order = self.mode.order();
            let elements = match self.mode {
                Mode::Global => groebner(&self.gens, &order),
                Mode::Local => local_std(&self.gens, &order),
            };
            StandardBasis { elements, order, reduced: self.mode == Mode::Global }
        })
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        self.std_basis().normal_form(f)
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.std_basis().contains(f)
    }

    pub fn is_unit(&self) -> bool {
        self.std_basis().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// `other ⊆ self`, decided in the localization when either ideal is local.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        let host = self.in_mode(self.mode.join(other.mode));
        other.gens.iter().all(|g| host.contains(g))
    }

    /// Mathematical equality by mutual containment.
    pub fn equals(&self, other: &Ideal) -> bool {
        let mode = self.mode.join(other.mode);
        let (a, b) = (self.in_mode(mode), other.in_mode(mode));
        a.contains_ideal(&b) && b.contains_ideal(&a)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::from_parts(self.nvars, self.field, gens, self.mode.join(other.mode))
    }

    pub fn add_gens(&self, more: impl IntoIterator<Item = Poly>) -> Ideal {
        let mut gens = self.gens.clone();
        gens.extend(more);
        Ideal::from_parts(self.nvars, self.field, gens, self.mode)
    }

    /// `I ∩ J = (t·I + (1-t)·J) ∩ R` with `t` eliminated.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        let mode = self.mode.join(other.mode);
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::from_parts(self.nvars, self.field, vec![], mode));
        }
        let tag = self.nvars;
        if tag >= MAX_VARS {
            return Err(Error::Invalid(format!("intersection needs a spare variable (at most {} variables)", MAX_VARS - 1)));
        }
        let t = Poly::var(tag, self.field);
        let one_minus_t = Poly::constant(self.field.one()).sub(&t);
        let mut gens: Vec<Poly> = self.gens.iter().map(|f| f.mul(&t)).collect();
        gens.extend(other.gens.iter().map(|g| g.mul(&one_minus_t)));
        let order = mode.order().eliminating(tag);
        let sb = match mode {
            Mode::Global => groebner(&gens, &order),
            Mode::Local => local_std(&gens, &order),
        };
        let kept: Vec<Poly> = sb.into_iter().filter(|f| f.terms().iter().all(|(m, _)| m.exp(tag) == 0)).collect();
        Ok(Ideal::from_parts(self.nvars, self.field, kept, mode))
    }

    /// `I : f = (I ∩ (f)) / f`.
    pub fn colon_poly(&self, f: &Poly) -> Result<Ideal> {
        self.check_field(f)?;
        if f.is_zero() {
            return Ok(Ideal::unit(self.nvars, self.field, self.mode));
        }
        let principal = Ideal::from_parts(self.nvars, self.field, vec![f.clone()], self.mode);
        let inter = self.intersect(&principal)?;
        let mut gens = Vec::with_capacity(inter.gens.len());
        for g in &inter.gens {
            match g.div_exact(f) {
                Some(q) => gens.push(q),
                None => {
                    return Err(Error::Internal("colon: generator of I ∩ (f) is not divisible by f".into()));
                }
            }
        }
        Ok(Ideal::from_parts(self.nvars, self.field, gens, self.mode))
    }

    /// `I : J`, the intersection of `I : g` over the generators of `J`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        let mode = self.mode.join(other.mode);
        let base = self.in_mode(mode);
        let mut acc: Option<Ideal> = None;
        for g in &other.gens {
            let c = base.colon_poly(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(self.nvars, self.field, mode)))
    }

    /// Leading monomials of the standard basis; for homogeneous ideals those of the graded
    /// Gröbner basis. Either way they generate the leading ideal of `I*`.
    pub fn leading_ideal(&self) -> Vec<Monomial> {
        if self.is_homogeneous() {
            self.in_mode(Mode::Global).std_basis().leading_monomials()
        } else {
            self.in_mode(Mode::Local).std_basis().leading_monomials()
        }
    }

    /// Hilbert data of `P/I*`, which for a homogeneous ideal is that of the graded quotient.
    pub fn hilbert(&self) -> HilbertData {
        let lms = self.leading_ideal();
        let h = hilbert_of_monomials(&lms, self.nvars);
        debug_assert!(h.length == Some(0) || h.dim == krull_dim_of_monomials(&lms, self.nvars));
        h
    }

    /// Krull dimension via maximal independent sets of variables.
    pub fn krull_dim(&self) -> usize {
        if self.is_unit() {
            return 0;
        }
        krull_dim_of_monomials(&self.leading_ideal(), self.nvars)
    }

    pub fn is_artinian(&self) -> bool {
        self.hilbert().dim == 0
    }

    /// Ideal of initial forms `I* = (f* : f ∈ I)`, generated by the initial forms of a standard basis.
    pub fn initial_ideal_star(&self) -> Ideal {
        if self.is_homogeneous() {
            return self.in_mode(Mode::Global);
        }
        let gens = self.in_mode(Mode::Local).std_basis().elements.iter().map(|f| f.initial_form().1).collect();
        Ideal::from_parts(self.nvars, self.field, gens, Mode::Global)
    }

    /// Subset of the local standard basis whose initial forms minimally generate `I*`, sorted by
    /// valuation.
    pub fn minimal_std_basis(&self) -> Vec<Poly> {
        let local = self.in_mode(Mode::Local);
        let ds = MonomialOrder::NegDegRevLex;
        let mut elems = local.std_basis().elements.clone();
        elems.sort_by(|a, b| a.valuation().cmp(&b.valuation()).then_with(|| cmp_lead(b, a, &ds)));
        let mut kept: Vec<Poly> = Vec::new();
        let mut stars: Vec<Poly> = Vec::new();
        for f in elems {
            let star = f.initial_form().1;
            let gb = groebner(&stars, &MonomialOrder::DegRevLex);
            let sb = StandardBasis { elements: gb, order: MonomialOrder::DegRevLex, reduced: true };
            if !sb.contains(&star) {
                stars.push(star);
                kept.push(f);
            }
        }
        kept
    }

    /// A minimal system of generators chosen from the given generators: degree-greedy for
    /// homogeneous ideals, greedy modulo `M·I` otherwise.
    pub fn minimal_generators(&self) -> Vec<Poly> {
        if self.is_homogeneous() {
            let mut gens = self.gens.clone();
            gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| cmp_lead(b, a, &MonomialOrder::DegRevLex)));
            let mut kept: Vec<Poly> = Vec::new();
            for g in gens {
                let sb = Ideal::from_parts(self.nvars, self.field, kept.clone(), Mode::Global);
                if !sb.contains(&g) {
                    kept.push(g);
                }
            }
            return kept;
        }
        let mut gens = self.gens.clone();
        let ds = MonomialOrder::NegDegRevLex;
        gens.sort_by(|a, b| a.valuation().cmp(&b.valuation()).then_with(|| cmp_lead(b, a, &ds)));
        let mi: Vec<Poly> = self
            .gens
            .iter()
            .flat_map(|g| (0..self.nvars).map(move |i| g.mul_monomial(&Monomial::var(i))))
            .collect();
        let mut kept: Vec<Poly> = Vec::new();
        for g in gens {
            let mut test = mi.clone();
            test.extend(kept.iter().cloned());
            let sb = StandardBasis { elements: local_std(&test, &ds), order: ds.clone(), reduced: false };
            if !sb.contains(&g) {
                kept.push(g);
            }
        }
        kept
    }

    /// `J_{≤s}R`: homogeneous ideals keep the forms of degree at most `s`; otherwise the ideal
    /// generated by the minimal-standard-basis elements of order at most `s`.
    pub fn truncate(&self, s: u32) -> Ideal {
        if self.is_homogeneous() {
            let low: Vec<Poly> = self
                .in_mode(Mode::Global)
                .std_basis()
                .elements
                .iter()
                .filter(|g| g.degree().is_some_and(|d| d <= s))
                .cloned()
                .collect();
            let low = Ideal::from_parts(self.nvars, self.field, low, self.mode);
            return Ideal::from_parts(self.nvars, self.field, low.minimal_generators(), self.mode);
        }
        let gens =
            self.minimal_std_basis().into_iter().filter(|g| g.valuation().is_some_and(|v| v <= s)).collect();
        Ideal::from_parts(self.nvars, self.field, gens, self.mode)
    }

    /// `dim_k (I : M)/I` for an Artinian ideal.
    pub fn socle_dim(&self) -> Result<usize> {
        let h = self.hilbert();
        let Some(len) = h.length else {
            return Err(Error::Invalid("socle dimension needs an Artinian ideal".into()));
        };
        let m = Ideal::maximal(self.nvars, self.field, self.mode);
        let colon = self.colon(&m)?;
        let len_colon = colon.hilbert().length.unwrap_or(0);
        Ok((len - len_colon) as usize)
    }

    /// `z` is a nonzerodivisor modulo `I`, i.e. `I : z ⊆ I`.
    pub fn is_regular_mod(&self, z: &Poly) -> Result<bool> {
        if !z.is_linear_form() || !z.is_homogeneous() {
            return Err(Error::Invalid("regularity test needs a linear form".into()));
        }
        // A variable regular on R/L(I) is regular on R/I.
        if let Some(v) = z.as_variable() {
            let lead = self.std_basis().leading_monomials();
            let minimal = lead.iter().filter(|m| !lead.iter().any(|d| d != *m && d.divides(m)));
            if minimal.into_iter().all(|m| m.exp(v) == 0) {
                return Ok(true);
            }
        }
        Ok(self.contains_ideal(&self.colon_poly(z)?))
    }

    /// Generators, made monic in the ideal's order, as they should be displayed.
    pub fn monic_gens(&self) -> Vec<Poly> {
        let ord = self.mode.order();
        self.gens.iter().map(|g| monic_in(g, &ord)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(r: &Ring, s: &str, mode: Mode) -> Ideal {
        Ideal::new(r, r.parse_list(s).unwrap(), mode)
    }

    #[test]
    fn colon_and_identities() {
        let r = Ring::standard(2, Field::Rational);
        let i = ideal(&r, "xy", Mode::Global);
        let c = i.colon_poly(&r.parse_poly("x").unwrap()).unwrap();
        assert!(c.equals(&ideal(&r, "y", Mode::Global)));
        let j = ideal(&r, "x^2, xy^3", Mode::Global);
        assert!(j.intersect(&j).unwrap().equals(&j));
        assert!(j.colon(&Ideal::unit(2, Field::Rational, Mode::Global)).unwrap().equals(&j));
        let inter = ideal(&r, "x", Mode::Global).intersect(&ideal(&r, "y", Mode::Global)).unwrap();
        assert!(inter.equals(&i));
    }

    #[test]
    fn local_regularity() {
        let r = Ring::standard(3, Field::Rational);
        let j = ideal(&r, "yz-x^3, z^2-y^3", Mode::Local);
        assert!(j.is_regular_mod(&r.parse_poly("x").unwrap()).unwrap());
        let z = ideal(&r, "z", Mode::Local);
        assert!(!z.is_regular_mod(&r.parse_poly("z").unwrap()).unwrap());
        let embedded = ideal(&r, "y^2, xy, z", Mode::Local);
        assert!(!embedded.is_regular_mod(&r.parse_poly("x").unwrap()).unwrap());
        let h = j.hilbert();
        assert_eq!((h.dim, h.e), (1, 5));
    }

    #[test]
    fn socle_dimensions() {
        let r = Ring::standard(3, Field::Rational);
        assert_eq!(ideal(&r, "x, y^3, z^2", Mode::Global).socle_dim().unwrap(), 1);
        let r2 = Ring::standard(2, Field::Rational);
        assert_eq!(ideal(&r2, "x^2, xy, y^2", Mode::Global).socle_dim().unwrap(), 2);
        assert_eq!(ideal(&r2, "x^3, y^4", Mode::Local).socle_dim().unwrap(), 1);
    }

    #[test]
    fn initial_ideal_of_cusp() {
        let r = Ring::standard(2, Field::Rational);
        for n in 3..7 {
            let f = ideal(&r, &format!("y^2-x^{n}"), Mode::Local);
            assert!(f.initial_ideal_star().equals(&ideal(&r, "y^2", Mode::Global)));
        }
    }

    #[test]
    fn truncation_keeps_low_degrees() {
        let r = Ring::standard(2, Field::Rational);
        let j = ideal(&r, "x^3-xy^2, y^5, x^2y^3", Mode::Global);
        let t = j.truncate(3);
        assert!(t.equals(&ideal(&r, "x^3-xy^2", Mode::Global)));
        assert!(j.truncate(9).equals(&j));
    }
}
