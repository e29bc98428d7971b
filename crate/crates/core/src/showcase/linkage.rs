//! Linkage of points by a Gorenstein set: `I(G) : I(X) = I(Y)` and `I(G) : I(Y) = I(X)`.

use crate::dp::DpPoly;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::invsys::{ann_module, perp_truncated};
use crate::linalg::Echelon;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::report::{list, Report};
use crate::ring::Ring;
use crate::showcase::points::run_points;
use crate::stdbasis::{Ideal, Mode};

#[derive(Clone, Debug)]
pub struct LinkageInstance {
    pub ring: Ring,
    pub ig: Ideal,
    pub ix: Ideal,
    pub iy: Ideal,
    /// Expected numbers of points of `X` and `Y`.
    pub d: u64,
    pub e: u64,
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `HF_{R/I}(j) = min(d, binom(j + n - 1, n - 1))` for every `j`.
pub fn generic_hf_check(ideal: &Ideal, d: u64) -> Result<bool> {
    let h = ideal.hilbert();
    if h.dim != 1 {
        return Err(Error::Invalid(format!("expected a one-dimensional quotient, got dim {}", h.dim)));
    }
    let n = ideal.nvars() as u64;
    let upto = h.stabilization + 2;
    Ok(h.e == d && (0..=upto).all(|j| h.value(j) == d.min(binom(j as u64 + n - 1, n - 1))))
}

/// Homogeneous part of degree `d` of `I^⊥`, read off a truncation.
fn perp_part(ideal: &Ideal, top: u32, d: u32) -> Vec<DpPoly> {
    perp_truncated(ideal, top)
        .basis
        .into_iter()
        .map(|g| DpPoly::from_terms(g.terms().iter().filter(|(m, _)| m.degree() == d).cloned()))
        .filter(|g| !g.is_zero())
        .collect()
}

fn span_of(v: &[DpPoly]) -> Echelon<Monomial> {
    let mut e = Echelon::new();
    for g in v {
        e.insert(g.terms());
    }
    e
}

fn same_span(a: &Echelon<Monomial>, b: &Echelon<Monomial>) -> bool {
    a.dim() == b.dim() && a.rows().iter().all(|r| b.contains(r))
}

/// Colon identities, the inverse-system identity `I(X)^⊥ = I(Y)∘I(G)^⊥` in degrees up to
/// `trunc`, additivity of degrees and generic Hilbert functions of `X` and `Y`.
pub fn linkage_check(inst: &LinkageInstance, trunc: u32, field: Field) -> Result<Report> {
    let LinkageInstance { ring, ig, ix, iy, d, e } = inst;
    if !(ig.is_homogeneous() && ix.is_homogeneous() && iy.is_homogeneous()) {
        return Err(Error::Invalid("linkage check needs homogeneous ideals".into()));
    }
    let mut rep = Report::new("linkage", field, 0).param("truncation", trunc);
    let gy = ig.colon(iy)?;
    rep.check("colon-Y", "I(G) : I(Y) = I(X)", gy.equals(ix));
    let gx = ig.colon(ix)?;
    rep.check("colon-X", "I(G) : I(X) = I(Y)", gx.equals(iy));

    let qdeg: Vec<u32> = iy.gens().iter().map(|q| q.degree().unwrap_or(0)).collect();
    let top_q = qdeg.iter().copied().max().unwrap_or(0);
    let mut bad = Vec::new();
    for j in 0..=trunc.saturating_sub(top_q) {
        let mut images = Vec::new();
        for (q, &dq) in iy.gens().iter().zip(&qdeg) {
            images.extend(perp_part(ig, j + dq, j + dq).iter().map(|h| h.contract_by(q)));
        }
        if !same_span(&span_of(&images), &span_of(&perp_part(ix, j, j))) {
            bad.push(j);
        }
    }
    rep.check("inverse-system", "I(X)^⊥ = I(Y)∘I(G)^⊥ degree by degree", bad.is_empty())
        .witness
        .insert("failing degrees".into(), list(&bad));

    let (hg, hx, hy) = (ig.hilbert(), ix.hilbert(), iy.hilbert());
    let c = rep.check("degrees", "deg G = deg X + deg Y", hg.e == hx.e + hy.e && hx.e == *d && hy.e == *e);
    c.witness.insert("deg G".into(), hg.e.to_string());
    c.witness.insert("deg X".into(), hx.e.to_string());
    c.witness.insert("deg Y".into(), hy.e.to_string());
    rep.check("generic-X", "X has maximal Hilbert function", generic_hf_check(ix, *d)?)
        .witness
        .insert("hf".into(), list(&hx.prefix(hx.stabilization + 2)));
    rep.check("generic-Y", "Y has maximal Hilbert function", generic_hf_check(iy, *e)?)
        .witness
        .insert("hf".into(), list(&hy.prefix(hy.stabilization + 2)));
    let _ = ring;
    Ok(rep)
}

pub const P14_L: [&str; 6] = ["3x+12y+3z+7w", "6x+11y+9z+11w", "12x+10y+11z+7w", "9x+7y+5z+11w", "x+10y+4z+3w", "10x+2y+10z+2w"];

/// Orders of the six quadrics `q_i = m_i + w L_i` that are tried.
pub const QUADRIC_ORDERS: [[&str; 6]; 2] = [["x^2", "xy", "xz", "y^2", "yz", "z^2"], ["x^2", "xy", "y^2", "xz", "yz", "z^2"]];

/// Reference generators of `I(X)`; the fifth and sixth are run together in the source.
pub const P14_IX_RAW: [&str; 5] = [
    "-x^3+3x^2y+3y^3-y^2z+3xz^2+3z^3+xyw",
    "-2x^3+6x^2y-4y^3-2y^2z-4xz^2+yz^2+6z^3+x^2w",
    "-3x^3-x^2y-2y^3-2y^2z-2xz^2-z^3+z^2w",
    "-6x^3-4x^2y+5y^3-6y^2z+6xz^2-4z^3+yzw",
    "-3x^3+x^2y+4y^3+xyz-3y^2z+4xz^2+z^3+y^2w 2x^3-3x^2y+xy^2-3y^3+2y^2z-3xz^2-3z^3+xzw",
];

/// Readings of the run-together reference list: split into six generators, or joined by `+`.
pub fn ix_parsings(ring: &Ring) -> Result<Vec<(&'static str, Vec<Poly>)>> {
    let (a, b) = P14_IX_RAW[4].split_once(' ').unwrap();
    let mut head: Vec<Poly> = P14_IX_RAW[..4].iter().map(|s| ring.parse_poly(s)).collect::<Result<_>>()?;
    let (pa, pb) = (ring.parse_poly(a)?, ring.parse_poly(b)?);
    let mut split = head.clone();
    split.extend([pa.clone(), pb.clone()]);
    head.push(pa.add(&pb));
    Ok(vec![("six generators", split), ("five generators", head)])
}

fn quadrics(ring: &Ring, order: &[&str; 6]) -> Result<Vec<Poly>> {
    let w = ring.parse_poly("w")?;
    order.iter().zip(P14_L).map(|(m, l)| Ok(ring.parse_poly(m)?.add(&w.mul(&ring.parse_poly(l)?)))).collect()
}

pub fn default_candidate_fields() -> Vec<Field> {
    let mut v = vec![Field::Rational];
    v.extend([3u32, 5, 7, 11, 13, 17, 19, 23, 29, 31].map(Field::Prime));
    v
}

/// Field search for the 14-point linkage data, followed by the full linkage check in the
/// first field where `I(Y)` is four points inside `G` and both colon identities hold.
pub fn p14_linkage(candidates: &[Field]) -> Result<Report> {
    let mut rep = Report::new("linkage-p14", candidates.first().copied().unwrap_or(Field::Rational), 0);
    let mut found = None;
    'search: for &field in candidates {
        let ring = Ring::standard(4, field);
        let run = run_points("p14", field)?;
        let ig = run.lift.ideal.clone();
        for (k, order) in QUADRIC_ORDERS.iter().enumerate() {
            let iy = Ideal::new(&ring, quadrics(&ring, order)?, Mode::Global);
            let hy = iy.hilbert();
            let plausible = hy.dim == 1 && hy.e == 4 && iy.contains_ideal(&ig);
            let c = rep.info(&format!("candidate {field} order {k}"), "I(Y) is 4 points contained in G");
            c.witness.insert("plausible".into(), plausible.to_string());
            c.witness.insert("hf(Y)".into(), list(&hy.prefix(4)));
            if !plausible {
                continue;
            }
            let ix = ig.colon(&iy)?;
            if ig.colon(&ix)?.equals(&iy) {
                found = Some((field, ring, run, ig, ix, iy, k));
                break 'search;
            }
        }
    }
    let Some((field, ring, run, ig, ix, iy, k)) = found else {
        rep.check("field", "some candidate field validates the linkage data", false);
        return Ok(rep);
    };
    rep.field = field.to_string();
    let c = rep.check("field", "some candidate field validates the linkage data", true);
    c.witness.insert("field".into(), field.to_string());
    c.witness.insert("quadric order".into(), QUADRIC_ORDERS[k].join(","));
    rep.info("I(Y)", "the six quadrics").witness.insert("I(Y)".into(), ring.format_ideal(iy.gens()));
    rep.info("I(X)", "I(G) : I(Y)").witness.insert("I(X)".into(), ring.format_ideal(&ix.minimal_generators()));

    // independent construction of I(X) from the dual side
    let h4 = run.built.set.last();
    let duals: Vec<DpPoly> = iy.gens().iter().map(|q| h4.contract_by(q)).collect();
    let from_dual = ann_module(&duals, 4)?.truncate(3);
    rep.check("I(X)-dual", "I(X) = Ann(q_1∘H_4, ..., q_6∘H_4)_{<=3} R", from_dual.equals(&ix));

    for (label, gens) in ix_parsings(&ring)? {
        let printed = Ideal::new(&ring, gens, Mode::Global);
        let contained = ix.contains_ideal(&printed);
        let equal = contained && printed.contains_ideal(&ix);
        let c = rep.info(&format!("reference I(X), {label}"), "reference list agrees with I(G) : I(Y)");
        c.witness.insert("validated".into(), equal.to_string());
        c.witness.insert("contained in I(X)".into(), contained.to_string());
        c.witness.insert("hf".into(), list(&printed.hilbert().prefix(5)));
    }

    let inst = LinkageInstance { ring, ig, ix, iy, d: 10, e: 4 };
    rep.absorb(linkage_check(&inst, 5, field)?);
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_hf_of_a_point_and_unit_link() {
        let r = Ring::standard(4, Field::Rational);
        let pt = Ideal::new(&r, r.parse_list("x, y, z").unwrap(), Mode::Global);
        assert!(generic_hf_check(&pt, 1).unwrap());
        assert!(generic_hf_check(&Ideal::maximal(4, Field::Rational, Mode::Global), 1).is_err());
        let unit = Ideal::unit(4, Field::Rational, Mode::Global);
        assert!(pt.colon(&unit).unwrap().equals(&pt));
        assert!(pt.colon(&pt).unwrap().is_unit());
    }
}
