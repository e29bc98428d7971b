//! Macaulay duality: annihilators, truncated inverse systems and dual generators.

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dp::{span_basis, DpPoly};
use crate::error::{Error, Result};
use crate::field::{Coeff, Field};
use crate::linalg::{solve_affine, Echelon};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Poly;
use crate::stdbasis::{Ideal, Mode, StandardBasis};

/// A basis of `{G ∈ Γ_{≤d} : I∘G = 0}`.
#[derive(Clone, Debug)]
pub struct DualTruncation {
    pub degree: u32,
    pub basis: Vec<DpPoly>,
}

impl DualTruncation {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn divisors_of_support(fs: &[DpPoly], nvars: usize) -> Vec<Monomial> {
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut stack: Vec<Monomial> = fs.iter().flat_map(|f| f.terms().iter().map(|(m, _)| *m)).collect();
    while let Some(m) = stack.pop() {
        if !seen.insert(m) {
            continue;
        }
        for i in 0..nvars {
            if m.exp(i) > 0 {
                let d = m.with_exp(i, m.exp(i) - 1);
                if !seen.contains(&d) {
                    stack.push(d);
                }
            }
        }
    }
    seen.into_iter().collect()
}

type ModuleKey = (usize, Monomial);

fn image(fs: &[DpPoly], u: &Monomial) -> Vec<(ModuleKey, Coeff)> {
    let mut out: Vec<(ModuleKey, Coeff)> = Vec::new();
    for (i, f) in fs.iter().enumerate().rev() {
        out.extend(f.contract_monomial(u).terms().iter().map(|(m, c)| ((i, *m), c.clone())));
    }
    out
}

/// Reduced standard basis of `Ann_R(F_1, ..., F_k)` for `order`.
///
/// Every monomial outside the divisors of the supports kills all `F_i`. The divisors are visited
/// in ascending order and each image `(u∘F_i)_i` is reduced against the images of the smaller
/// standard monomials; a dependency yields the basis element `u - Σ c_s s`.
fn ann_walk(fs: &[DpPoly], nvars: usize, order: &MonomialOrder, field: Field) -> Vec<Poly> {
    let mut divisors = divisors_of_support(fs, nvars);
    divisors.sort_by(|a, b| order.cmp(a, b));
    let mut ech: Echelon<ModuleKey> = Echelon::new();
    // combos[j]: the polynomial in standard monomials whose image is row j
    let mut combos: Vec<Poly> = Vec::new();
    let mut standard: HashSet<Monomial> = HashSet::new();
    let mut dependent: Vec<(Monomial, Poly)> = Vec::new();
    for u in divisors {
        let img = image(fs, &u);
        let (rem, used) = ech.reduce_tracked(&img);
        let mut combo = Poly::monomial(u, field.one());
        for (j, lambda) in &used {
            combo = combo.sub(&combos[*j].scale(lambda));
        }
        if rem.is_empty() {
            dependent.push((u, combo));
        } else {
            let inv = rem[0].1.inv();
            ech.push_reduced(rem).expect("nonzero remainder");
            combos.push(combo.scale(&inv));
            standard.insert(u);
        }
    }
    let is_std = |m: &Monomial| standard.contains(m);
    let minimal = |u: &Monomial| (0..nvars).all(|i| u.exp(i) == 0 || is_std(&u.with_exp(i, u.exp(i) - 1)));
    let mut out: Vec<Poly> = dependent.into_iter().filter(|(u, _)| minimal(u)).map(|(_, g)| g).collect();
    let mut border: BTreeSet<Monomial> = BTreeSet::new();
    for s in &standard {
        for i in 0..nvars {
            let u = s.mul(&Monomial::var(i));
            if !is_std(&u) && minimal(&u) && fs.iter().all(|f| f.contract_monomial(&u).is_zero()) {
                border.insert(u);
            }
        }
    }
    let dep_lms: HashSet<Monomial> = out.iter().map(|g| g.leading_term(order).unwrap().0).collect();
    out.extend(border.into_iter().filter(|u| !dep_lms.contains(u)).map(|u| Poly::monomial(u, field.one())));
    out.sort_by(|a, b| order.cmp(&a.leading_term(order).unwrap().0, &b.leading_term(order).unwrap().0));
    out
}

/// `Ann_R(F) = {f ∈ R : f∘F = 0}`.
///
/// Homogeneous `F` gives a global ideal carrying its reduced degrevlex basis; otherwise the
/// ideal is local and carries its reduced negative-degrevlex standard basis. The two agree
/// because `R/Ann(F)` is Artinian and supported at the origin.
pub fn ann_dp(f: &DpPoly, nvars: usize) -> Result<Ideal> {
    ann_module(std::slice::from_ref(f), nvars)
}

/// Annihilator of the submodule generated by several DP-polynomials.
pub fn ann_module(gens: &[DpPoly], nvars: usize) -> Result<Ideal> {
    let gens: Vec<DpPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    let Some(field) = gens.first().and_then(|g| g.as_poly().field()) else {
        return Err(Error::Invalid("annihilator of the zero DP-polynomial".into()));
    };
    if gens.iter().any(|g| g.as_poly().field() != Some(field)) {
        return Err(Error::Context("DP-polynomials over different fields".into()));
    }
    if gens.iter().any(|g| g.terms().iter().any(|(m, _)| (nvars..crate::monomial::MAX_VARS).any(|i| m.exp(i) > 0))) {
        return Err(Error::Context("DP-polynomial uses more dual variables than the ring has".into()));
    }
    let mode = if gens.iter().all(|g| g.is_homogeneous()) { Mode::Global } else { Mode::Local };
    let order = mode.order();
    let elements = ann_walk(&gens, nvars, &order, field);
    let basis = StandardBasis { elements, order, reduced: true };
    Ok(Ideal::with_basis(nvars, field, basis, mode))
}

/// `{G ∈ Γ_{≤d} : g∘G = 0 for every generator g of I}`.
pub fn perp_truncated(ideal: &Ideal, d: u32) -> DualTruncation {
    let n = ideal.nvars();
    let field = ideal.field();
    let monos = Monomial::all_up_to_degree(n, d);
    let index: std::collections::HashMap<Monomial, usize> = monos.iter().enumerate().map(|(k, m)| (*m, k)).collect();
    let mut equations = Vec::new();
    for g in ideal.gens() {
        // coefficient of Z^{L'} in g∘G is Σ_M a_M b_{L'+M}
        let mut rows: std::collections::HashMap<Monomial, Vec<(usize, Coeff)>> = std::collections::HashMap::new();
        for (l, &k) in &index {
            for (m, a) in g.terms() {
                if let Some(target) = l.div(m) {
                    rows.entry(target).or_default().push((k, a.clone()));
                }
            }
        }
        let mut rows: Vec<_> = rows.into_iter().collect();
        rows.sort_by_key(|r| std::cmp::Reverse(r.0));
        equations.extend(rows.into_iter().map(|(_, lhs)| (lhs, field.zero())));
    }
    let sol = solve_affine(monos.len(), equations, &field.zero()).expect("homogeneous system is consistent");
    let basis = sol
        .kernel
        .into_iter()
        .map(|v| DpPoly::from_terms(v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (monos[k], c))))
        .collect();
    DualTruncation { degree: d, basis }
}

/// Top degree of the Hilbert function of an Artinian ideal; `I^⊥` lives in degrees up to it.
fn socle_degree_bound(ideal: &Ideal) -> Result<(u32, u64)> {
    let h = ideal.hilbert();
    match h.length {
        Some(len) if len > 0 => Ok(((h.numerator.len() - 1) as u32, len)),
        Some(_) => Err(Error::Invalid("unit ideal has no inverse system".into())),
        None => Err(Error::Invalid("ideal is not Artinian".into())),
    }
}

/// Random combinations in a field: small integers, which are generic enough over `Q` and `F_p`.
pub(crate) fn random_coeff(rng: &mut ChaCha8Rng, field: Field) -> Coeff {
    let v: i64 = rng.gen_range(-9..=9);
    field.from_i64(v)
}

/// A generator `H` of `(I + (z^l))^⊥` as a cyclic module, i.e. with `dim ⟨H⟩ = length R/(I + (z^l))`.
pub fn dual_generator(ideal: &Ideal, z: &Poly, l: u32, seed: u64, retries: usize) -> Result<DpPoly> {
    if !z.is_linear_form() {
        return Err(Error::Invalid("z must be a linear form".into()));
    }
    let field = ideal.field();
    let j = ideal.add_gens([z.pow(l, field)]);
    let (d, len) = socle_degree_bound(&j)?;
    let perp = perp_truncated(&j, d);
    if perp.dim() as u64 != len {
        return Err(Error::Internal(format!("inverse system has dimension {} but the length is {len}", perp.dim())));
    }
    let n = ideal.nvars();
    let cyclic = |h: &DpPoly| span_basis(h, n).dim() as u64 == len;
    if let Some(h) = perp.basis.iter().find(|h| cyclic(h)) {
        return Ok(h.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..retries {
        let mut h = DpPoly::zero();
        for b in &perp.basis {
            h = h.add(&b.scale(&random_coeff(&mut rng, field)));
        }
        if !h.is_zero() && cyclic(&h) {
            return Ok(h);
        }
    }
    Err(Error::NotCyclic(l))
}

/// `dim R/I = 0` and the socle is one-dimensional.
pub fn is_artinian_gorenstein(ideal: &Ideal) -> Result<bool> {
    if ideal.is_unit() || !ideal.is_artinian() {
        return Ok(false);
    }
    Ok(ideal.socle_dim()? == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    #[test]
    fn annihilator_of_monomials() {
        let r = Ring::standard(3, Field::Rational);
        let a = ann_dp(&r.parse_dp("Y^2Z").unwrap(), 3).unwrap();
        assert!(a.equals(&Ideal::new(&r, r.parse_list("x, y^3, z^2").unwrap(), Mode::Global)));
        let r2 = Ring::standard(2, Field::Rational);
        let a = ann_dp(&r2.parse_dp("X^2").unwrap(), 2).unwrap();
        assert!(a.equals(&Ideal::new(&r2, r2.parse_list("y, x^3").unwrap(), Mode::Global)));
        assert!(ann_dp(&DpPoly::zero(), 2).is_err());
    }

    #[test]
    fn module_annihilator_is_intersection() {
        let r = Ring::standard(2, Field::Rational);
        let fs = r.parse_dp_list("X^2, Y^3, XY+X^3").unwrap();
        let m = ann_module(&fs, 2).unwrap();
        let mut acc = ann_dp(&fs[0], 2).unwrap().in_mode(Mode::Local);
        for f in &fs[1..] {
            acc = acc.intersect(&ann_dp(f, 2).unwrap().in_mode(Mode::Local)).unwrap();
        }
        assert!(m.equals(&acc));
    }

    #[test]
    fn annihilator_kills_and_is_gorenstein() {
        let r = Ring::standard(3, Field::Rational);
        for s in ["X^3Y+Y^3Z+XZ^3", "Z^2+Y^3", "X^2+Y^2+Z^2", "XY+Z^3+X"] {
            let f = r.parse_dp(s).unwrap();
            let a = ann_dp(&f, 3).unwrap();
            for g in a.gens() {
                assert!(f.contract_by(g).is_zero(), "{s}");
            }
            assert!(is_artinian_gorenstein(&a).unwrap(), "{s}");
            assert_eq!(a.hilbert().length, Some(span_basis(&f, 3).dim() as u64));
        }
    }

    #[test]
    fn perp_of_maximal_ideal() {
        let r = Ring::standard(3, Field::Rational);
        let m = Ideal::maximal(3, Field::Rational, Mode::Global);
        let p = perp_truncated(&m, 3);
        assert_eq!(p.basis, vec![r.parse_dp("1").unwrap()]);
    }

    #[test]
    fn dual_generator_of_plane_cubic_cone() {
        let r = Ring::standard(2, Field::Rational);
        let i = Ideal::new(&r, r.parse_list("x^3-xy^2").unwrap(), Mode::Global);
        let h = dual_generator(&i, &r.parse_poly("y").unwrap(), 4, 1, 16).unwrap();
        let expected = r.parse_dp("X^4Y+X^2Y^3").unwrap();
        assert!(span_basis(&h, 2).equals(&span_basis(&expected, 2)));
    }

    #[test]
    fn not_gorenstein() {
        let r = Ring::standard(2, Field::Rational);
        let i = Ideal::new(&r, r.parse_list("x^2, xy, y^2").unwrap(), Mode::Global);
        assert!(!is_artinian_gorenstein(&i).unwrap());
    }
}
