use std::cmp::Ordering;

use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Poly;

use super::{make_monic, ordered, sub_mul, to_poly, Terms};

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Full reduction of `f` by `basis`: no term of the result is divisible by a leading monomial.
pub(crate) fn reduce_full(mut p: Terms, basis: &[&Terms], ord: &MonomialOrder) -> Terms {
    let mut rem = Vec::new();
    while let Some((m, c)) = p.first().cloned() {
        match basis.iter().find(|g| g[0].0.divides(&m)) {
            Some(g) => {
                let q = m.div(&g[0].0).unwrap();
                let coef = c.div(&g[0].1);
                p = sub_mul(&p[..], &coef, &q, g, ord);
            }
            None => {
                rem.push((m, c));
                p.remove(0);
            }
        }
    }
    rem
}

fn top_reduce(mut p: Terms, basis: &[&Terms], ord: &MonomialOrder) -> Terms {
    while let Some((m, c)) = p.first().cloned() {
        match basis.iter().find(|g| g[0].0.divides(&m)) {
            Some(g) => {
                let q = m.div(&g[0].0).unwrap();
                let coef = c.div(&g[0].1);
                p = sub_mul(&p[..], &coef, &q, g, ord);
            }
            None => break,
        }
    }
    p
}

fn spoly(f: &Terms, g: &Terms, lcm: &Monomial, ord: &MonomialOrder) -> Terms {
    let uf = lcm.div(&f[0].0).unwrap();
    let ug = lcm.div(&g[0].0).unwrap();
    let lhs = sub_mul(&[], &f[0].1.neg().inv(), &uf, f, ord);
    sub_mul(&lhs, &g[0].1.inv(), &ug, g, ord)
}

/// Gebauer–Möller pair update after adding `polys[h]`.
fn update(polys: &[Terms], active: &mut [bool], pairs: &mut Vec<Pair>, h: usize) {
    let lh = polys[h][0].0;
    let cands: Vec<usize> = (0..h).filter(|&g| active[g]).collect();
    let lcms: Vec<Monomial> = cands.iter().map(|&g| lh.lcm(&polys[g][0].0)).collect();
    // None: still pending, Some(true): kept, Some(false): discarded
    let mut state: Vec<Option<bool>> = vec![None; cands.len()];
    for a in 0..cands.len() {
        let coprime = lh.is_coprime(&polys[cands[a]][0].0);
        let dominated =
            (0..cands.len()).any(|b| b != a && state[b] != Some(false) && lcms[b].divides(&lcms[a]));
        state[a] = Some(coprime || !dominated);
    }
    let keep: Vec<bool> = state.into_iter().map(|s| s == Some(true)).collect();
    let new_pairs: Vec<Pair> = (0..cands.len())
        .filter(|&a| keep[a] && !lh.is_coprime(&polys[cands[a]][0].0))
        .map(|a| Pair { i: cands[a], j: h, lcm: lcms[a] })
        .collect();
    pairs.retain(|p| {
        !(lh.divides(&p.lcm)
            && lh.lcm(&polys[p.i][0].0) != p.lcm
            && lh.lcm(&polys[p.j][0].0) != p.lcm)
    });
    pairs.extend(new_pairs);
    for g in 0..h {
        if active[g] && lh.divides(&polys[g][0].0) {
            active[g] = false;
        }
    }
    active[h] = true;
}

/// Reduced Gröbner basis of `gens` for a global order, monic, sorted ascending by leading monomial.
pub fn groebner(gens: &[Poly], ord: &MonomialOrder) -> Vec<Poly> {
    assert!(ord.is_global(), "Buchberger needs a global order");
    let mut polys: Vec<Terms> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut input: Vec<Terms> = gens.iter().filter(|g| !g.is_zero()).map(|g| ordered(g, ord)).collect();
    input.sort_by(|a, b| ord.cmp(&a[0].0, &b[0].0));
    let add = |h: Terms, polys: &mut Vec<Terms>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>| {
        polys.push(make_monic(h));
        active.push(false);
        let idx = polys.len() - 1;
        update(polys, active, pairs, idx);
    };
    for g in input {
        let basis: Vec<&Terms> = (0..polys.len()).filter(|&k| active[k]).map(|k| &polys[k]).collect();
        let h = top_reduce(g, &basis, ord);
        if !h.is_empty() {
            add(h, &mut polys, &mut active, &mut pairs);
        }
    }
    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                ord.cmp(&pairs[a].lcm, &pairs[b].lcm)
                    .then((pairs[a].j, pairs[a].i).cmp(&(pairs[b].j, pairs[b].i)))
            })
            .unwrap();
        let p = pairs.swap_remove(best);
        let s = spoly(&polys[p.i], &polys[p.j], &p.lcm, ord);
        let basis: Vec<&Terms> = (0..polys.len()).filter(|&k| active[k]).map(|k| &polys[k]).collect();
        let h = top_reduce(s, &basis, ord);
        if !h.is_empty() {
            add(h, &mut polys, &mut active, &mut pairs);
        }
    }
    let mut basis: Vec<Terms> = (0..polys.len()).filter(|&k| active[k]).map(|k| polys[k].clone()).collect();
    basis.sort_by(|a, b| ord.cmp(&a[0].0, &b[0].0));
    interreduce(basis, ord).into_iter().map(to_poly).collect()
}

/// Tail-reduces a minimal basis (distinct, mutually non-dividing leading monomials).
fn interreduce(basis: Vec<Terms>, ord: &MonomialOrder) -> Vec<Terms> {
    let mut out = basis.clone();
    for k in 0..basis.len() {
        let others: Vec<&Terms> = basis.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, g)| g).collect();
        let head = basis[k][0].clone();
        let tail = reduce_full(basis[k][1..].to_vec(), &others, ord);
        let mut v = vec![head];
        v.extend(tail);
        out[k] = make_monic(v);
    }
    out
}

pub(crate) fn cmp_lead(a: &Poly, b: &Poly, ord: &MonomialOrder) -> Ordering {
    let la = a.leading_term(ord).map(|t| t.0);
    let lb = b.leading_term(ord).map(|t| t.0);
    match (la, lb) {
        (Some(x), Some(y)) => ord.cmp(&x, &y),
        (x, y) => x.is_some().cmp(&y.is_some()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::ring::Ring;

    #[test]
    fn linear_change_of_coordinates() {
        let r = Ring::standard(2, Field::Rational);
        let gb = groebner(&r.parse_list("x+y, x-y").unwrap(), &MonomialOrder::DegRevLex);
        assert_eq!(gb, vec![r.parse_poly("y").unwrap(), r.parse_poly("x").unwrap()]);
    }

    #[test]
    fn twisted_cubic() {
        let r = Ring::standard(4, Field::Rational);
        let gens = r.parse_list("xz-y^2, yw-z^2, xw-yz").unwrap();
        let gb = groebner(&gens, &MonomialOrder::DegRevLex);
        assert_eq!(gb.len(), 3);
        let shuffled = r.parse_list("xw-yz, xz-y^2+ (yw-z^2), yw-z^2").unwrap();
        assert_eq!(groebner(&shuffled, &MonomialOrder::DegRevLex), gb);
    }

    #[test]
    fn unit_ideal() {
        let r = Ring::standard(2, Field::prime(7).unwrap());
        let gb = groebner(&r.parse_list("x^2-1, x").unwrap(), &MonomialOrder::DegRevLex);
        assert_eq!(gb, vec![r.constant(1)]);
    }
}
