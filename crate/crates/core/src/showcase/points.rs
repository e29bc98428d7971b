//! Gorenstein sets of 5, 14, 30 and 55 points built from a finite G-admissible set w.r.t. `w`.

use crate::dp::{span_basis, DpPoly, SpanBasis};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::gadm::{build_sequence, graded_lift, BuiltSequence, ChoicePolicy, GradedLift};
use crate::report::{list, Report};
use crate::ring::Ring;
use crate::showcase::is_palindrome;
use crate::stdbasis::{Ideal, Mode};

#[derive(Clone, Debug)]
pub struct PointsInstance {
    pub name: &'static str,
    pub h1: &'static str,
    /// `C_1, C_2, ...` fixed in advance; later constants are solved for.
    pub constants: &'static [&'static str],
    pub t0: usize,
    pub t: u32,
    pub span_dim: usize,
    pub h_vector: &'static [i64],
    /// Only run behind the long flag.
    pub long: bool,
}

pub const P14_IDEAL: &str = "x^3-y^2z+z^2w, x^2y-z^3+2xw^2, xy^2-xzw+2yw^2, y^3-xz^2+yzw, x^2z+2w^3, xyz-y^2w+zw^2, yz^2-x^2w";
pub const P14_C2: &str = "-2X^4Y^2-XY^4Z+2Z^6";
pub const P14_C3: &str = "-XY^6-2X^5YZ-2X^2Y^3Z^2-2X^3Z^4";

pub const INSTANCES: [PointsInstance; 4] = [
    PointsInstance {
        name: "p5",
        h1: "X^2+Y^2+Z^2",
        constants: &["X^3+Y^3+Z^3", "X^4+Y^4+Z^4"],
        t0: 3,
        t: 2,
        span_dim: 5,
        h_vector: &[1, 3, 1],
        long: false,
    },
    PointsInstance {
        name: "p14",
        h1: "X^3Y+Y^3Z+XZ^3",
        constants: &["XY^2Z^2"],
        t0: 4,
        t: 3,
        span_dim: 14,
        h_vector: &[1, 3, 6, 3, 1],
        long: false,
    },
    PointsInstance {
        name: "p30",
        h1: "X^6+Y^6+Z^6+X^5Y+Y^5Z+XZ^5",
        constants: &["X^2Y^2Z^2"],
        t0: 5,
        t: 4,
        span_dim: 30,
        h_vector: &[1, 3, 6, 10, 6, 3, 1],
        long: true,
    },
    PointsInstance {
        name: "p55",
        h1: "X^8+Y^8+Z^8+X^3Y^3Z^2+X^2Y^3Z^3+X^3Y^2Z^3",
        constants: &["XY^4Z^4"],
        t0: 6,
        t: 5,
        span_dim: 55,
        h_vector: &[1, 3, 6, 10, 15, 10, 6, 3, 1],
        long: true,
    },
];

impl PointsInstance {
    pub fn by_name(name: &str) -> Result<&'static PointsInstance> {
        INSTANCES
            .iter()
            .find(|p| p.name == name)
            .ok_or_else(|| Error::Invalid(format!("unknown points instance {name:?} (p5, p14, p30, p55)")))
    }
}

/// The computed objects of one points instance.
#[derive(Clone, Debug)]
pub struct PointsRun {
    pub inst: &'static PointsInstance,
    pub ring: Ring,
    pub span: SpanBasis,
    pub built: BuiltSequence,
    pub lift: GradedLift,
}

pub fn run_points(name: &str, field: Field) -> Result<PointsRun> {
    let inst = PointsInstance::by_name(name)?;
    let ring = Ring::standard(4, field);
    let h1 = ring.parse_dp(inst.h1)?;
    let w = ring.parse_poly("w")?;
    let constants: Vec<DpPoly> = inst.constants.iter().map(|c| ring.parse_dp(c)).collect::<Result<_>>()?;
    let built = build_sequence(&h1, &w, 4, inst.t0, &ChoicePolicy::User(constants), 0)?;
    let lift = graded_lift(&built.set, Some(inst.t))?;
    let span = span_basis(&h1, 4);
    Ok(PointsRun { inst, ring, span, built, lift })
}

/// Span data, the built sequence with per-step kernel dimensions, and the lifted ideal.
pub fn points_suite(name: &str, field: Field) -> Result<Report> {
    let inst = PointsInstance::by_name(name)?;
    let ring = Ring::standard(4, field);
    let mut rep = Report::new(format!("points-{name}"), field, 0).param("t", inst.t).param("H_1", inst.h1);
    let span = span_basis(&ring.parse_dp(inst.h1)?, 4);
    let profile = span.degree_profile();
    let c = rep.check("span", "dim span(H_1) matches the expected point count", span.dim() == inst.span_dim);
    c.witness.insert("dim".into(), span.dim().to_string());
    c.witness.insert("expected".into(), inst.span_dim.to_string());
    c.witness.insert("profile".into(), list(&profile));
    let profile_i: Vec<i64> = profile.iter().map(|&v| v as i64).collect();
    rep.check("span-hf", "Hilbert function of span(H_1) equals the expected h-vector", profile_i == inst.h_vector)
        .witness
        .insert("expected".into(), list(inst.h_vector));

    let run = match run_points(name, field) {
        Ok(run) => run,
        Err(e) => {
            rep.check("build", "build_sequence and graded_lift succeed", false).witness.insert("error".into(), e.to_string());
            return Ok(rep);
        }
    };
    let PointsRun { built, lift, .. } = &run;
    for s in &built.steps {
        let fixed = s.level <= inst.constants.len();
        let claim = if fixed { "constant fixed in advance" } else { "constant solved for" };
        let c = rep.info(&format!("C_{}", s.level), claim);
        c.witness.insert("C".into(), ring.format_dp(&s.chosen));
        c.witness.insert("kernel dim".into(), s.kernel_dim().to_string());
        c.witness.insert("degree".into(), s.solution.degree_bound.to_string());
    }
    rep.info("H_t0", "last element of the G-admissible set")
        .witness
        .insert(format!("H_{}", inst.t0), ring.format_dp(built.set.last()));

    let hd = &lift.hilbert;
    let c = rep.info("ideal", "I = Ann(H_{t+1})_{<=t} R");
    c.witness.insert("I".into(), ring.format_ideal(lift.ideal.gens()));
    c.witness.insert("hf".into(), list(&hd.prefix(hd.stabilization + 2)));
    rep.check("dim", "dim R/I = 1", hd.dim == 1);
    rep.check("e", "e(R/I) = dim span(H_1)", hd.e == span.dim() as u64).witness.insert("e".into(), hd.e.to_string());
    let h = hd.h_vector();
    let c = rep.check("h-vector", "h-vector of R/I equals the expected one and is palindromic", h == inst.h_vector && is_palindrome(&h));
    c.witness.insert("h".into(), list(&h));
    rep.check("descente", "Ann(H_l) = I + (w^l) for every l", lift.descente.iter().all(|&b| b))
        .witness
        .insert("per level".into(), list(&lift.descente));

    if name == "p14" {
        let reference = Ideal::new(&ring, ring.parse_list(P14_IDEAL)?, Mode::Global);
        rep.check("reference-ideal", "I equals the reference 7-generator ideal", lift.ideal.equals(&reference));
        for (level, text) in [(2usize, P14_C2), (3, P14_C3)] {
            let c = ring.parse_dp(text)?;
            let step = &built.steps[level - 1];
            let claim = rep.check(
                &format!("reference-C_{level}"),
                "reference constant lies in the solution space",
                step.solution.admits(&c),
            );
            claim.witness.insert("reference".into(), text.to_string());
            claim.witness.insert("exact".into(), (step.chosen == c).to_string());
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_points() {
        let rep = points_suite("p5", Field::Rational).unwrap();
        assert!(rep.passed(), "{}", rep.to_text());
        assert!(PointsInstance::by_name("p7").is_err());
    }
}
