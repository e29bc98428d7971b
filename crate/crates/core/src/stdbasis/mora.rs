use crate::monomial::{Monomial, MonomialOrder, MAX_VARS};
use crate::poly::Poly;

use super::buchberger::groebner;
use super::{make_monic, ordered, sub_mul, to_poly, Terms};

const HOMOG: usize = MAX_VARS - 1;

fn ecart(f: &Terms) -> u32 {
    let top = f.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
    top - f[0].0.degree()
}

/// Mora's weak normal form with ecart control.
pub(crate) fn nf_mora(f: Terms, basis: &[Terms], ord: &MonomialOrder) -> Terms {
    let mut unlimited = usize::MAX;
    nf_mora_bounded(f, basis, ord, &mut unlimited).expect("unbounded")
}

/// As `nf_mora`, giving up (`None`) once `budget` reduction steps are spent.
fn nf_mora_bounded(f: Terms, basis: &[Terms], ord: &MonomialOrder, budget: &mut usize) -> Option<Terms> {
    let mut h = f;
    let mut t: Vec<(Terms, u32)> = basis.iter().map(|g| (g.clone(), ecart(g))).collect();
    while !h.is_empty() {
        let lm = h[0].0;
        let best = t
            .iter()
            .enumerate()
            .filter(|(_, (g, _))| g[0].0.divides(&lm))
            .min_by_key(|(k, (_, e))| (*e, *k))
            .map(|(k, _)| k);
        let Some(k) = best else { break };
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        let eh = ecart(&h);
        let (g, eg) = (&t[k].0, t[k].1);
        let q = lm.div(&g[0].0).unwrap();
        let coef = h[0].1.div(&g[0].1);
        let next = sub_mul(&h, &coef, &q, g, ord);
        if eg > eh {
            t.push((h, eh));
        }
        h = next;
    }
    Some(h)
}

pub fn mora_normal_form(f: &Poly, basis: &[Poly], ord: &MonomialOrder) -> Poly {
    let b: Vec<Terms> = basis.iter().filter(|g| !g.is_zero()).map(|g| ordered(g, ord)).collect();
    to_poly(nf_mora(ordered(f, ord), &b, ord))
}

/// Standard basis for an arbitrary (local, mixed or global) order, reduced to distinct,
/// mutually non-dividing leading monomials and made monic.
pub fn mora_std(gens: &[Poly], ord: &MonomialOrder) -> Vec<Poly> {
    mora_std_bounded(gens, ord, usize::MAX).expect("unbounded")
}

fn mora_std_bounded(gens: &[Poly], ord: &MonomialOrder, mut budget: usize) -> Option<Vec<Poly>> {
    let mut s: Vec<Terms> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut input: Vec<Terms> = gens.iter().filter(|g| !g.is_zero()).map(|g| ordered(g, ord)).collect();
    input.sort_by(|a, b| ord.cmp(&b[0].0, &a[0].0));
    for g in input {
        let h = nf_mora_bounded(g, &s, ord, &mut budget)?;
        if !h.is_empty() {
            let idx = s.len();
            s.push(make_monic(h));
            pairs.extend((0..idx).map(|k| (k, idx)));
        }
    }
    while !pairs.is_empty() {
        let key = |&(i, j): &(usize, usize)| {
            let l = s[i][0].0.lcm(&s[j][0].0);
            (l.degree(), j, i)
        };
        let best = (0..pairs.len()).min_by_key(|&p| key(&pairs[p])).unwrap();
        let (i, j) = pairs.swap_remove(best);
        let (fi, fj) = (&s[i], &s[j]);
        if fi[0].0.is_coprime(&fj[0].0) && ord.is_global() {
            continue;
        }
        let lcm = fi[0].0.lcm(&fj[0].0);
        let ui = lcm.div(&fi[0].0).unwrap();
        let uj = lcm.div(&fj[0].0).unwrap();
        let sp = sub_mul(&sub_mul(&[], &fi[0].1.neg().inv(), &ui, fi, ord), &fj[0].1.inv(), &uj, fj, ord);
        let h = nf_mora_bounded(sp, &s, ord, &mut budget)?;
        if !h.is_empty() {
            let idx = s.len();
            s.push(make_monic(h));
            pairs.extend((0..idx).map(|k| (k, idx)));
        }
    }
    Some(minimal_by_leading(s, ord).into_iter().map(to_poly).collect())
}

const MORA_BUDGET: usize = 20_000;

/// Standard basis for a local order: Mora's algorithm while it makes progress, otherwise
/// Lazard's homogenization.
pub fn local_std(gens: &[Poly], ord: &MonomialOrder) -> Vec<Poly> {
    mora_std_bounded(gens, ord, MORA_BUDGET).unwrap_or_else(|| lazard_std(gens, ord))
}

/// `f ∈ I` in the localization, for a standard basis `basis` of `I`: a bounded Mora normal
/// form, else a comparison of leading ideals with `f` adjoined.
pub(crate) fn local_contains(f: &Poly, basis: &[Poly], ord: &MonomialOrder) -> bool {
    if f.is_zero() {
        return true;
    }
    let b: Vec<Terms> = basis.iter().filter(|g| !g.is_zero()).map(|g| ordered(g, ord)).collect();
    let mut budget = MORA_BUDGET;
    if let Some(h) = nf_mora_bounded(ordered(f, ord), &b, ord, &mut budget) {
        return h.is_empty();
    }
    let mut gens = basis.to_vec();
    gens.push(f.clone());
    let lead = |g: &Poly| g.leading_term(ord).map(|t| t.0);
    let old: Vec<Monomial> = basis.iter().filter_map(lead).collect();
    local_std(&gens, ord).iter().filter_map(lead).all(|m| old.iter().any(|o| o.divides(&m)))
}

/// Standard basis for any order by Lazard's method: a Gröbner basis of the homogenized
/// generators in the homogenized order, dehomogenized. Uses Mora when the last variable slot
/// is taken.
pub fn lazard_std(gens: &[Poly], ord: &MonomialOrder) -> Vec<Poly> {
    let uses_slot = gens.iter().any(|g| g.terms().iter().any(|(m, _)| m.exp(HOMOG) > 0));
    if uses_slot {
        return mora_std(gens, ord);
    }
    let hom: Vec<Poly> = gens.iter().filter(|g| !g.is_zero()).map(homogenize).collect();
    let hord = MonomialOrder::Homogenized { t: HOMOG, base: Box::new(ord.clone()) };
    let gb = groebner(&hom, &hord);
    let s: Vec<Terms> = gb
        .iter()
        .map(|g| make_monic(ordered(&Poly::from_terms(g.terms().iter().map(|(m, c)| (m.with_exp(HOMOG, 0), c.clone()))), ord)))
        .filter(|g| !g.is_empty())
        .collect();
    minimal_by_leading(s, ord).into_iter().map(to_poly).collect()
}

fn homogenize(g: &Poly) -> Poly {
    let top = g.degree().unwrap_or(0);
    Poly::from_terms(g.terms().iter().map(|(m, c)| (m.with_exp(HOMOG, top - m.degree()), c.clone())))
}

fn minimal_by_leading(s: Vec<Terms>, ord: &MonomialOrder) -> Vec<Terms> {
    let mut keep: Vec<Terms> = Vec::new();
    let mut sorted = s;
    sorted.sort_by(|a, b| ord.cmp(&b[0].0, &a[0].0).then(a.len().cmp(&b.len())));
    for f in sorted {
        let lm = f[0].0;
        if keep.iter().any(|g| g[0].0.divides(&lm)) {
            continue;
        }
        keep.retain(|g| !lm.divides(&g[0].0));
        keep.push(f);
    }
    keep.sort_by(|a, b| ord.cmp(&b[0].0, &a[0].0));
    keep
}
