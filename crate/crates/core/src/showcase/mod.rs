//! End-to-end suites: Gorenstein points in `P^3`, linkage, and the semigroup family.

pub mod linkage;
pub mod points;
pub mod semigroup;

use rayon::prelude::*;

use crate::dp::DpPoly;
use crate::error::Result;
use crate::invsys::ann_dp;
use crate::poly::Poly;
use crate::stdbasis::Mode;

pub use linkage::{generic_hf_check, linkage_check, p14_linkage, LinkageInstance};
pub use points::{points_suite, run_points, PointsInstance, PointsRun};
pub use semigroup::{semigroup_h, semigroup_suite, SemigroupInstance};

/// `Ann(H_{t+1}) + (z^t) = Ann(H_t)` for every `t < len`.
pub fn tata_holds(seq: &[DpPoly], z: &Poly, nvars: usize) -> Result<bool> {
    let Some(field) = z.field() else { return Ok(false) };
    let anns: Vec<_> = seq.par_iter().map(|h| ann_dp(h, nvars).map(|a| a.in_mode(Mode::Local))).collect::<Result<_>>()?;
    Ok((1..seq.len())
        .into_par_iter()
        .all(|t| anns[t].add_gens([z.pow(t as u32, field)]).equals(&anns[t - 1])))
}

/// Palindromic integer sequence.
pub fn is_palindrome(v: &[i64]) -> bool {
    v.iter().eq(v.iter().rev())
}
