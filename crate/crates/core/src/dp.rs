//! The divided-power module `Γ = k_DP[Z_1..Z_n]` and the contraction action of `R` on it.

use std::collections::VecDeque;

use crate::field::Coeff;
use crate::linalg::Echelon;
use crate::monomial::Monomial;
use crate::poly::Poly;

/// A divided-power polynomial `Σ b_L Z^[L]`, printed as `Z^L`.
///
/// `Z·H` (see [`DpPoly::mul_var`]) is the ordinary product on DP-monomials,
/// `Z_i · Z^[L] = Z^[L + e_i]`, not the divided-power product.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DpPoly(Poly);

impl DpPoly {
    pub fn zero() -> DpPoly {
        DpPoly(Poly::zero())
    }

    pub fn from_poly(p: Poly) -> DpPoly {
        DpPoly(p)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> DpPoly {
        DpPoly(Poly::from_terms(terms))
    }

    pub fn monomial(m: Monomial, c: Coeff) -> DpPoly {
        DpPoly(Poly::monomial(m, c))
    }

    pub fn as_poly(&self) -> &Poly {
        &self.0
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        self.0.terms()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn degree(&self) -> Option<u32> {
        self.0.degree()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.0.is_homogeneous()
    }

    pub fn add(&self, other: &DpPoly) -> DpPoly {
        DpPoly(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &DpPoly) -> DpPoly {
        DpPoly(self.0.sub(&other.0))
    }

    pub fn scale(&self, c: &Coeff) -> DpPoly {
        DpPoly(self.0.scale(c))
    }

    pub fn neg(&self) -> DpPoly {
        DpPoly(self.0.neg())
    }

    /// Ordinary multiplication by the dual variable `Z_i`.
    pub fn mul_var(&self, i: usize) -> DpPoly {
        DpPoly(self.0.mul_monomial(&Monomial::var(i)))
    }

    pub fn mul_monomial(&self, m: &Monomial) -> DpPoly {
        DpPoly(self.0.mul_monomial(m))
    }

    /// True when no term involves `Z_i`.
    pub fn avoids_var(&self, i: usize) -> bool {
        self.terms().iter().all(|(m, _)| m.exp(i) == 0)
    }

    /// Contraction by a single monomial: `z^M ∘ Z^[L] = Z^[L-M]`, zero when `M ∤ L`.
    pub fn contract_monomial(&self, m: &Monomial) -> DpPoly {
        // L ↦ L - M preserves the canonical order on the surviving terms.
        let terms: Vec<_> = self
            .terms()
            .iter()
            .filter_map(|(l, c)| l.div(m).map(|q| (q, c.clone())))
            .collect();
        DpPoly(Poly::from_sorted_unchecked(terms))
    }

    /// `h ∘ F = Σ a_M b_L Z^[L-M]`.
    pub fn contract_by(&self, h: &Poly) -> DpPoly {
        contract(h, self)
    }

    pub fn fields_match(&self, other: &DpPoly) -> bool {
        match (self.0.field(), other.0.field()) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }
}

/// The contraction `h ∘ F`.
pub fn contract(h: &Poly, f: &DpPoly) -> DpPoly {
    match h.terms() {
        [] => DpPoly::zero(),
        [(m, a)] => f.contract_monomial(m).scale(a),
        _ => DpPoly::from_terms(h.terms().iter().flat_map(|(m, a)| {
            f.terms().iter().filter_map(move |(l, b)| l.div(m).map(|q| (q, a.mul(b))))
        })),
    }
}

/// A k-basis of the R-submodule `⟨F_1, ..., F_k⟩ = R∘F_1 + ... + R∘F_k` of `Γ`.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    nvars: usize,
    echelon: Echelon<Monomial>,
}

impl SpanBasis {
    pub fn empty(nvars: usize) -> SpanBasis {
        SpanBasis { nvars, echelon: Echelon::new() }
    }

    /// Closure of the generators under contraction by the variables.
    pub fn generated_by(gens: &[DpPoly], nvars: usize) -> SpanBasis {
        let mut span = SpanBasis::empty(nvars);
        let mut queue: VecDeque<DpPoly> = VecDeque::new();
        for g in gens {
            if let Some(j) = span.echelon.insert(g.terms()) {
                queue.push_back(span.row(j));
            }
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..nvars {
                let w = v.contract_monomial(&Monomial::var(i));
                if w.is_zero() {
                    continue;
                }
                if let Some(j) = span.echelon.insert(w.terms()) {
                    queue.push_back(span.row(j));
                }
            }
        }
        span
    }

    fn row(&self, j: usize) -> DpPoly {
        DpPoly(Poly::from_sorted_unchecked(self.echelon.rows()[j].clone()))
    }

    pub fn dim(&self) -> usize {
        self.echelon.dim()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn basis(&self) -> Vec<DpPoly> {
        (0..self.dim()).map(|j| self.row(j)).collect()
    }

    pub fn contains(&self, g: &DpPoly) -> bool {
        self.echelon.contains(g.terms())
    }

    pub fn reduce(&self, g: &DpPoly) -> DpPoly {
        DpPoly(Poly::from_sorted_unchecked(self.echelon.reduce(g.terms())))
    }

    pub fn contains_span(&self, other: &SpanBasis) -> bool {
        other.basis().iter().all(|g| self.contains(g))
    }

    pub fn equals(&self, other: &SpanBasis) -> bool {
        self.dim() == other.dim() && self.contains_span(other)
    }

    /// Number of basis vectors per pivot degree. For a span generated by homogeneous elements
    /// this is the graded dimension `dim ⟨F⟩_j`.
    pub fn degree_profile(&self) -> Vec<usize> {
        let mut prof = Vec::new();
        for row in self.echelon.rows() {
            let d = row[0].0.degree() as usize;
            if prof.len() <= d {
                prof.resize(d + 1, 0);
            }
            prof[d] += 1;
        }
        prof
    }
}

/// `⟨F⟩` as a [`SpanBasis`].
pub fn span_basis(f: &DpPoly, nvars: usize) -> SpanBasis {
    if f.is_zero() {
        return SpanBasis::empty(nvars);
    }
    SpanBasis::generated_by(std::slice::from_ref(f), nvars)
}

/// `⟨F⟩` computed by applying every monomial of degree at most `max_degree` and row-reducing.
/// The full sweep is exponentially larger than the closure in [`span_basis`]; it exists as an
/// independent route for cross-checks.
pub fn span_by_sweep(f: &DpPoly, nvars: usize, max_degree: u32) -> SpanBasis {
    let mut span = SpanBasis::empty(nvars);
    for m in Monomial::all_up_to_degree(nvars, max_degree) {
        let w = f.contract_monomial(&m);
        if !w.is_zero() {
            span.echelon.insert(w.terms());
        }
    }
    span
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::ring::Ring;

    fn r3() -> Ring {
        Ring::standard(3, Field::Rational)
    }

    #[test]
    fn contraction_examples() {
        let r = Ring::standard(2, Field::Rational);
        let f = r.parse_dp("X^2Y").unwrap();
        assert_eq!(contract(&r.parse_poly("y").unwrap(), &f), r.parse_dp("X^2").unwrap());
        assert_eq!(contract(&r.constant(1), &f), f);
        assert!(contract(&r.parse_poly("y^2").unwrap(), &f).is_zero());
    }

    #[test]
    fn span_dimensions() {
        let r = r3();
        assert_eq!(span_basis(&r.parse_dp("Z^2+Y^3").unwrap(), 3).dim(), 5);
        let f = r.parse_dp("X^2+Y^2+Z^2").unwrap();
        let s = span_basis(&f, 3);
        assert_eq!(s.dim(), 5);
        for g in ["1", "X", "Y", "Z", "X^2+Y^2+Z^2"] {
            assert!(s.contains(&r.parse_dp(g).unwrap()));
        }
        let h = r.parse_dp("X^3Y+Y^3Z+XZ^3").unwrap();
        let s = span_basis(&h, 3);
        assert_eq!(s.dim(), 14);
        assert_eq!(s.degree_profile(), vec![1, 3, 6, 3, 1]);
    }

    #[test]
    fn monomial_span_membership() {
        let r = r3();
        let s = span_basis(&r.parse_dp("X^2").unwrap(), 3);
        assert!(s.contains(&r.parse_dp("X^2").unwrap()));
        assert!(!s.contains(&r.parse_dp("X^3").unwrap()));
        let f = r.parse_dp("X^2Y+3Z").unwrap();
        let g = f.scale(&Field::Rational.from_i64(-7));
        assert!(span_basis(&f, 3).equals(&span_basis(&g, 3)));
    }

    #[test]
    fn sweep_agrees_with_closure() {
        let r = r3();
        let f = r.parse_dp("X^3Y+2XY^2Z-Z^4+Y").unwrap();
        let d = f.degree().unwrap();
        assert!(span_basis(&f, 3).equals(&span_by_sweep(&f, 3, d)));
        assert_eq!(span_by_sweep(&f, 3, d).dim(), span_by_sweep(&f, 3, d + 1).dim());
    }
}
