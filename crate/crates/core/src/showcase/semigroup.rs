//! The family `A = k[[t^{3b}, t^{3b+1}, t^{6b+3}]] = k[[x,y,z]]/(xz - y^3, z^b - x^{2b+1})`.

use crate::dp::DpPoly;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::gadm::check_g_admissible;
use crate::invsys::ann_dp;
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::report::{list, Report};
use crate::ring::Ring;
use crate::showcase::tata_holds;
use crate::stdbasis::{Ideal, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SemigroupInstance {
    pub b: u32,
}

impl SemigroupInstance {
    pub fn new(b: u32) -> Result<SemigroupInstance> {
        if b < 2 {
            return Err(Error::Invalid(format!("b = {b} must be at least 2")));
        }
        Ok(SemigroupInstance { b })
    }

    pub fn weights(&self) -> [u32; 3] {
        [3 * self.b, 3 * self.b + 1, 6 * self.b + 3]
    }

    /// `δ(b,t) = 6b² + 3bt - 1`.
    pub fn delta(&self, t: u32) -> u64 {
        let b = self.b as u64;
        6 * b * b + 3 * b * t as u64 - 1
    }

    pub fn ring(&self, field: Field) -> Ring {
        Ring::standard(3, field)
    }

    pub fn ideal(&self, ring: &Ring) -> Ideal {
        let b = self.b;
        let gens = vec![
            ring.parse_poly("xz-y^3").unwrap(),
            ring.parse_poly(&format!("z^{b}-x^{}", 2 * b + 1)).unwrap(),
        ];
        Ideal::new(ring, gens, Mode::Local)
    }

    pub fn multiplicity(&self) -> u64 {
        3 * self.b as u64
    }

    /// Closed form of the Hilbert function of `A` (it has `b - 1` flats).
    pub fn expected_hf(&self, t: u32) -> u64 {
        let b = self.b as u64;
        let t = t as u64;
        if t == 0 {
            1
        } else if t >= 3 * b - 1 {
            3 * b
        } else if t < b {
            2 * t + 1
        } else if t == b {
            2 * b
        } else if t == b + 1 {
            2 * b + 1
        } else if (t - b).is_multiple_of(2) {
            2 * b + (t - b) / 2
        } else {
            2 * b + (t - b - 1) / 2 + 1
        }
    }
}

/// `H_t`: the sum of all DP-monomials in `X, Y, Z` of weighted degree `δ(b,t)`.
pub fn semigroup_h(b: u32, t: u32, field: Field) -> Result<DpPoly> {
    let inst = SemigroupInstance::new(b)?;
    if t == 0 {
        return Err(Error::Invalid("t must be at least 1".into()));
    }
    let [wx, wy, wz] = inst.weights().map(|w| w as u64);
    let d = inst.delta(t);
    let mut terms = Vec::new();
    for c in 0..=d / wz {
        for bb in 0..=(d - c * wz) / wy {
            let rest = d - c * wz - bb * wy;
            if rest % wx == 0 {
                let m = Monomial::from_exponents(&[(rest / wx) as u32, bb as u32, c as u32]);
                terms.push((m, field.one()));
            }
        }
    }
    Ok(DpPoly::from_terms(terms))
}

fn x_power(ring: &Ring, e: u32) -> Poly {
    ring.var(0).pow(e, ring.field)
}

/// Claims (a)–(d) for one `b`, plus admissibility and `Ann(H_t) = I + (x^t)` for `t ≤ 3b + 1`.
pub fn semigroup_suite(b: u32, field: Field) -> Result<Report> {
    let inst = SemigroupInstance::new(b)?;
    let ring = inst.ring(field);
    let top = 3 * b + 1;
    let seq: Vec<DpPoly> = (1..=top).map(|t| semigroup_h(b, t, field)).collect::<Result<_>>()?;
    let ideal = inst.ideal(&ring);
    let x = ring.var(0);
    let mut rep = Report::new(format!("semigroup-b{b}"), field, 0).param("b", b).param("weights", list(&inst.weights()));

    let h1_expected = ring.parse_dp(&format!("Y^2Z^{}", b - 1))?;
    rep.check("H1", "H_1 = Y^2 Z^(b-1)", seq[0] == h1_expected).witness.insert("H_1".into(), ring.format_dp(&seq[0]));

    let a1 = ann_dp(&seq[0], 3)?;
    let target = Ideal::new(&ring, ring.parse_list(&format!("x, y^3, z^{b}"))?, Mode::Global);
    rep.check("a", "Ann(H_1) = (x, y^3, z^b)", a1.equals(&target))
        .witness
        .insert("Ann(H_1)".into(), ring.format_ideal(a1.gens()));

    let chain: Vec<usize> = (1..top as usize).filter(|&t| seq[t].contract_by(&x) != seq[t - 1]).collect();
    rep.check("b", "x∘H_{t+1} = H_t for 1 <= t <= 3b", chain.is_empty())
        .witness
        .insert("failing t".into(), list(&chain));

    let adm = check_g_admissible(&seq, &x, 3)?;
    rep.check("admissible", "H_1..H_{3b+1} is G-admissible w.r.t. x", adm.passed())
        .witness
        .insert("verdict".into(), adm.describe());

    let last = &seq[top as usize - 1];
    let xt = x_power(&ring, top);
    let sub1 = last.contract_by(&xt).is_zero();
    let sub2 = last.contract_by(&ideal.gens()[0]).is_zero();
    let sub3 = last.contract_by(&ideal.gens()[1]).is_zero();
    let a = ann_dp(last, 3)?.in_mode(Mode::Local);
    let plus = ideal.add_gens([xt.clone()]);
    let reverse = plus.contains_ideal(&a);
    let c = rep.check("c", "Ann(H_{3b+1}) = I + (x^{3b+1})", sub1 && sub2 && sub3 && reverse);
    c.witness.insert("x^(3b+1)∘H".into(), sub1.to_string());
    c.witness.insert("(xz-y^3)∘H".into(), sub2.to_string());
    c.witness.insert("(z^b-x^(2b+1))∘H".into(), sub3.to_string());
    c.witness.insert("Ann(H) in I + (x^(3b+1))".into(), reverse.to_string());

    let bad: Vec<u32> = (1..=top)
        .filter(|&t| {
            let a = ann_dp(&seq[t as usize - 1], 3).map(|a| a.in_mode(Mode::Local));
            !a.is_ok_and(|a| a.equals(&ideal.add_gens([x_power(&ring, t)])))
        })
        .collect();
    rep.check("descente", "Ann(H_t) = I + (x^t) for 1 <= t <= 3b+1", bad.is_empty())
        .witness
        .insert("failing t".into(), list(&bad));

    let tata = tata_holds(&seq, &x, 3)?;
    rep.check("tata", "Ann(H_{t+1}) + (x^t) = Ann(H_t) for t < 3b+1", tata);

    let hd = ideal.hilbert();
    let len = hd.stabilization.max(3 * b as usize) + 2;
    let hf = hd.prefix(len);
    let expected: Vec<u64> = (0..len as u32).map(|t| inst.expected_hf(t)).collect();
    let d = rep.check("d", "HF of A matches the closed form with b-1 flats", hf == expected && hd.dim == 1 && hd.e == inst.multiplicity());
    d.witness.insert("hf".into(), list(&hf));
    d.witness.insert("closed form".into(), list(&expected));
    d.witness.insert("e".into(), hd.e.to_string());

    if b == 3 {
        let printed = ring.parse_dp("X^2Y^2Z^5+XY^5Z^4+Y^8Z^3+X^9Y^2Z^2+X^8Y^5Z+X^7Y^8")?;
        rep.check("H10", "H_10 is the six-term sum X^2Y^2Z^5 + ... + X^7Y^8", seq[9] == printed)
            .witness
            .insert("H_10".into(), ring.format_dp(&seq[9]));
    }
    rep.info("H_top", "last element of the sequence").witness.insert(format!("H_{top}"), ring.format_dp(last));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_element_and_degrees() {
        let r = Ring::standard(3, Field::Rational);
        assert_eq!(semigroup_h(2, 1, Field::Rational).unwrap(), r.parse_dp("Y^2Z").unwrap());
        let inst = SemigroupInstance::new(4).unwrap();
        let h = semigroup_h(4, 5, Field::Rational).unwrap();
        for (m, _) in h.terms() {
            assert_eq!(m.weighted_degree(&inst.weights()).unwrap(), inst.delta(5));
        }
        assert!(SemigroupInstance::new(1).is_err());
    }

    #[test]
    fn closed_form_small_b() {
        let inst = SemigroupInstance::new(2).unwrap();
        let v: Vec<u64> = (0..7).map(|t| inst.expected_hf(t)).collect();
        assert_eq!(v, vec![1, 3, 4, 5, 5, 6, 6]);
    }

    #[test]
    fn suite_b2_passes() {
        let rep = semigroup_suite(2, Field::Rational).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
    }
}
