//! G-admissible sets: verification, step-wise extension, the graded shortcut and local lifting.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dp::{span_basis, DpPoly, SpanBasis};
use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::invsys::{ann_dp, random_coeff};
use crate::linalg::{solve_affine, Echelon};
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::stdbasis::{HilbertData, Ideal, Mode};

/// Per-index outcome of conditions (1) and (2).
///
/// `condition1[l-1]` is `z∘H_1 = 0` for `l = 1` and `z∘H_l = H_{l-1}` otherwise;
/// `condition2[l-1]` is `Ann(H_l)∘H_{l+1} = ⟨H_1⟩` for `l < t0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibilityReport {
    pub condition1: Vec<bool>,
    pub condition2: Vec<bool>,
}

impl AdmissibilityReport {
    pub fn passed(&self) -> bool {
        self.condition1.iter().chain(&self.condition2).all(|&b| b)
    }

    /// The first failing condition as `(condition, l)`.
    pub fn first_failure(&self) -> Option<(u8, usize)> {
        if let Some(l) = self.condition1.iter().position(|&b| !b) {
            return Some((1, l + 1));
        }
        self.condition2.iter().position(|&b| !b).map(|l| (2, l + 1))
    }

    pub fn describe(&self) -> String {
        match self.first_failure() {
            None => "G-admissible".to_string(),
            Some((c, l)) => format!("condition ({c}) fails at l={l}"),
        }
    }
}

/// A finite sequence `H_1..H_t0` together with the linear form `z` and its verification record.
#[derive(Clone, Debug)]
pub struct GAdmissibleSet {
    pub z: Poly,
    pub seq: Vec<DpPoly>,
    pub nvars: usize,
    pub report: AdmissibilityReport,
}

impl GAdmissibleSet {
    pub fn new(seq: Vec<DpPoly>, z: Poly, nvars: usize) -> Result<GAdmissibleSet> {
        let report = check_g_admissible(&seq, &z, nvars)?;
        Ok(GAdmissibleSet { z, seq, nvars, report })
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn last(&self) -> &DpPoly {
        self.seq.last().expect("nonempty sequence")
    }

    pub fn is_homogeneous(&self) -> bool {
        self.seq.iter().all(|h| h.is_homogeneous())
    }

    fn require_verified(&self) -> Result<()> {
        if self.report.passed() {
            Ok(())
        } else {
            Err(Error::Invalid(format!("set is not G-admissible: {}", self.report.describe())))
        }
    }
}

/// Index of `z` when it is a coordinate variable.
pub fn coordinate_index(z: &Poly) -> Result<usize> {
    match (z.as_variable(), z.terms().first()) {
        (Some(i), Some((_, c))) if c.is_one() => Ok(i),
        _ => Err(Error::Invalid("z must be one of the ring variables".into())),
    }
}

fn check_fields(seq: &[DpPoly], z: &Poly) -> Result<()> {
    let fz = z.field();
    for h in seq {
        if let (Some(a), Some(b)) = (h.as_poly().field(), fz) {
            if a != b {
                return Err(Error::Context(format!("DP-polynomial over {a} with z over {b}")));
            }
        }
    }
    Ok(())
}

fn image_span(ann: &Ideal, h: &DpPoly, nvars: usize) -> SpanBasis {
    let images: Vec<DpPoly> = ann.gens().iter().map(|g| h.contract_by(g)).collect();
    SpanBasis::generated_by(&images, nvars)
}

/// Verifies conditions (1) and (2) index by index.
pub fn check_g_admissible(seq: &[DpPoly], z: &Poly, nvars: usize) -> Result<AdmissibilityReport> {
    if seq.is_empty() {
        return Err(Error::Invalid("empty sequence".into()));
    }
    if !z.is_linear_form() || !z.is_homogeneous() {
        return Err(Error::Invalid("z must be a linear form".into()));
    }
    check_fields(seq, z)?;
    let condition1: Vec<bool> = (0..seq.len())
        .map(|k| {
            let c = seq[k].contract_by(z);
            if k == 0 {
                c.is_zero()
            } else {
                c == seq[k - 1]
            }
        })
        .collect();
    let h1 = span_basis(&seq[0], nvars);
    let condition2: Vec<bool> = (0..seq.len().saturating_sub(1))
        .into_par_iter()
        .map(|k| {
            let Ok(ann) = ann_dp(&seq[k], nvars) else { return false };
            let w = image_span(&ann, &seq[k + 1], nvars);
            w.contains_span(&h1) && h1.contains_span(&w)
        })
        .collect();
    Ok(AdmissibilityReport { condition1, condition2 })
}

/// The affine space of constants `C` with `H_{t0+1} = Z·H_{t0} + C` satisfying condition (2).
#[derive(Clone, Debug)]
pub struct ExtensionSolution {
    pub particular: DpPoly,
    pub kernel: Vec<DpPoly>,
    pub next: DpPoly,
    pub degree_bound: u32,
}

impl ExtensionSolution {
    /// Whether `c` lies in `particular + span(kernel)`.
    pub fn admits(&self, c: &DpPoly) -> bool {
        let mut ech: Echelon<Monomial> = Echelon::new();
        for k in &self.kernel {
            ech.insert(k.terms());
        }
        ech.contains(c.sub(&self.particular).terms())
    }

    /// Whether `C = 0` is admissible.
    pub fn admits_zero(&self) -> bool {
        self.admits(&DpPoly::zero())
    }

    pub fn with_constant(&self, z_index: usize, last: &DpPoly, c: &DpPoly) -> DpPoly {
        last.mul_var(z_index).add(c)
    }
}

/// Solves for the constants `C` extending a verified set by one element.
///
/// The unknowns are the coefficients of `C` on DP-monomials avoiding `Z` of degree at most
/// `degree_bound`, or of degree exactly `deg H_t0 + 1` when the set is homogeneous.
pub fn extend_step(set: &GAdmissibleSet, degree_bound: u32) -> Result<ExtensionSolution> {
    extend_step_graded(set, degree_bound, set.is_homogeneous())
}

/// `extend_step` with the graded restriction chosen explicitly.
pub fn extend_step_graded(set: &GAdmissibleSet, degree_bound: u32, graded: bool) -> Result<ExtensionSolution> {
    set.require_verified()?;
    let zi = coordinate_index(&set.z)?;
    let n = set.nvars;
    let last = set.last();
    let field = last.as_poly().field().or(set.z.field()).ok_or_else(|| Error::Invalid("zero sequence".into()))?;
    let top = last.degree().unwrap_or(0);
    if degree_bound < top {
        return Err(Error::Invalid(format!("degree bound {degree_bound} below deg H_t0 = {top}")));
    }
    let g0 = last.mul_var(zi);
    let unknowns: Vec<Monomial> = if graded {
        Monomial::all_of_degree(n, top + 1).into_iter().rev().filter(|m| m.exp(zi) == 0).collect()
    } else {
        Monomial::all_up_to_degree(n, degree_bound).into_iter().filter(|m| m.exp(zi) == 0).collect()
    };
    let ann = ann_dp(last, n)?;
    let h1 = span_basis(&set.seq[0], n);
    let mut equations: Vec<(Vec<(usize, Coeff)>, Coeff)> = Vec::new();
    for g in ann.gens() {
        let rhs = h1.reduce(&g0.contract_by(g));
        let mut cols: std::collections::BTreeMap<Monomial, Vec<(usize, Coeff)>> = std::collections::BTreeMap::new();
        for (j, u) in unknowns.iter().enumerate() {
            let img = h1.reduce(&DpPoly::monomial(*u, field.one()).contract_by(g));
            for (k, c) in img.terms() {
                cols.entry(*k).or_default().push((j, c.clone()));
            }
        }
        for (k, _) in rhs.terms() {
            cols.entry(*k).or_default();
        }
        for (k, lhs) in cols.into_iter().rev() {
            let b = rhs.as_poly().coeff(&k).map(|c| c.neg()).unwrap_or_else(|| field.zero());
            equations.push((lhs, b));
        }
    }
    let bound = if graded { top + 1 } else { degree_bound };
    let sol = solve_affine(unknowns.len(), equations, &field.zero()).ok_or(Error::NoSolution(bound))?;
    let to_dp = |v: &[Coeff]| {
        DpPoly::from_terms(v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(j, c)| (unknowns[j], c.clone())))
    };
    let particular = to_dp(&sol.particular);
    let kernel: Vec<DpPoly> = sol.kernel.iter().map(|v| to_dp(v)).collect();
    let next = g0.add(&particular);
    Ok(ExtensionSolution { particular, kernel, next, degree_bound: bound })
}

/// How `build_sequence` picks `C` from the solution space at each step.
#[derive(Clone, Debug)]
pub enum ChoicePolicy {
    /// `C = 0` when admissible, otherwise the particular solution.
    ZeroIfFeasible,
    /// `C_l` given for the first steps; later steps fall back to `ZeroIfFeasible`.
    User(Vec<DpPoly>),
    /// Particular solution plus a seeded random kernel combination.
    SeededRandom(u64),
}

/// One extension step as performed by `build_sequence`.
#[derive(Clone, Debug)]
pub struct StepRecord {
    pub level: usize,
    pub chosen: DpPoly,
    pub solution: ExtensionSolution,
}

impl StepRecord {
    pub fn kernel_dim(&self) -> usize {
        self.solution.kernel.len()
    }
}

#[derive(Clone, Debug)]
pub struct BuiltSequence {
    pub set: GAdmissibleSet,
    pub steps: Vec<StepRecord>,
}

/// Builds `H_1..H_t0` from `H_1` by `t0 - 1` extension steps.
pub fn build_sequence(h1: &DpPoly, z: &Poly, nvars: usize, t0: usize, policy: &ChoicePolicy, extra_degree: u32) -> Result<BuiltSequence> {
    let zi = coordinate_index(z)?;
    if !h1.contract_by(z).is_zero() {
        return Err(Error::Invalid("z∘H_1 must vanish".into()));
    }
    let mut set = GAdmissibleSet::new(vec![h1.clone()], z.clone(), nvars)?;
    let mut steps: Vec<StepRecord> = Vec::new();
    let mut rng = match policy {
        ChoicePolicy::SeededRandom(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
        _ => None,
    };
    while set.len() < t0 {
        let level = set.len();
        let top = set.last().degree().unwrap_or(0);
        let given = match policy {
            ChoicePolicy::User(list) if level <= list.len() => Some(list[level - 1].clone()),
            _ => None,
        };
        let graded = set.is_homogeneous()
            && given.as_ref().is_none_or(|c| c.is_zero() || (c.is_homogeneous() && c.degree() == Some(top + 1)));
        let base = given.as_ref().and_then(|c| c.degree()).unwrap_or(0).max(top + 1);
        let mut sol = Err(Error::NoSolution(base));
        for bound in base..=base + extra_degree {
            sol = extend_step_graded(&set, bound, graded);
            if sol.is_ok() || graded {
                break;
            }
        }
        let sol = sol.map_err(|e| match e {
            Error::NoSolution(b) => Error::DoesNotExtend(format!("no constant C_{level} up to degree {b}")),
            other => other,
        })?;
        let chosen = match (&given, policy) {
            (Some(c), _) => {
                if !sol.admits(c) {
                    return Err(Error::DoesNotExtend(format!("C_{level} is not in the solution space")));
                }
                c.clone()
            }
            (None, ChoicePolicy::SeededRandom(_)) => {
                let rng = rng.as_mut().unwrap();
                let field = h1.as_poly().field().unwrap();
                sol.kernel.iter().fold(sol.particular.clone(), |acc, k| acc.add(&k.scale(&random_coeff(rng, field))))
            }
            _ => {
                if sol.admits_zero() {
                    DpPoly::zero()
                } else {
                    sol.particular.clone()
                }
            }
        };
        let next = set.last().mul_var(zi).add(&chosen);
        let mut seq = set.seq.clone();
        seq.push(next);
        set = GAdmissibleSet::new(seq, z.clone(), nvars)?;
        if !set.report.passed() {
            return Err(Error::Internal(format!("extension at level {level} broke admissibility: {}", set.report.describe())));
        }
        steps.push(StepRecord { level, chosen, solution: sol });
    }
    Ok(BuiltSequence { set, steps })
}

/// `Ann(H_l) = I + (z^l)` for `l = 1..len`.
pub fn verify_descente(seq: &[DpPoly], ideal: &Ideal, z: &Poly, nvars: usize) -> Result<Vec<bool>> {
    let field = ideal.field();
    let mode = if seq.iter().all(|h| h.is_homogeneous()) && ideal.is_homogeneous() { ideal.mode() } else { Mode::Local };
    seq.par_iter()
        .enumerate()
        .map(|(k, h)| {
            let ann = ann_dp(h, nvars)?.in_mode(mode);
            let rhs = ideal.in_mode(mode).add_gens([z.pow(k as u32 + 1, field)]);
            Ok(ann.equals(&rhs))
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct GradedLift {
    pub ideal: Ideal,
    pub t: u32,
    pub hilbert: HilbertData,
    pub descente: Vec<bool>,
}

/// `I = Ann(H_{t+1})_{≤t} R` for a homogeneous set, with the postconditions checked.
pub fn graded_lift(set: &GAdmissibleSet, t: Option<u32>) -> Result<GradedLift> {
    set.require_verified()?;
    if !set.is_homogeneous() {
        return Err(Error::Invalid("graded lift needs homogeneous DP-polynomials".into()));
    }
    let r = set.seq[0].degree().unwrap_or(0);
    let t = t.unwrap_or(r + 1);
    if set.len() < t as usize + 1 {
        return Err(Error::InsufficientLength(format!("need H_{} for t = {t}, have {} elements", t + 1, set.len())));
    }
    let ann = ann_dp(&set.seq[t as usize], set.nvars)?;
    let ideal = ann.truncate(t);
    let hilbert = ideal.hilbert();
    if hilbert.dim != 1 {
        return Err(Error::DoesNotExtend(format!("dim R/I = {} instead of 1", hilbert.dim)));
    }
    if !ideal.is_regular_mod(&set.z)? {
        return Err(Error::DoesNotExtend("z is not regular modulo I".into()));
    }
    let descente = verify_descente(&set.seq, &ideal, &set.z, set.nvars)?;
    if let Some(l) = descente.iter().position(|&b| !b) {
        return Err(Error::DoesNotExtend(format!("Ann(H_{}) differs from I + (z^{})", l + 1, l + 1)));
    }
    Ok(GradedLift { ideal, t, hilbert, descente })
}

/// Budget and search space for the perturbations `α_i`.
#[derive(Clone, Debug)]
pub struct AlphaPolicy {
    pub deg_max: u32,
    pub budget: usize,
    pub seed: u64,
    /// Stop after this many accepted candidates.
    pub accept: usize,
}

impl Default for AlphaPolicy {
    fn default() -> Self {
        AlphaPolicy { deg_max: 2, budget: 64, seed: 0, accept: 1 }
    }
}

/// A candidate `I_α = (h_1 + α_1 z^{t+1}, ..., h_s + α_s z^{t+1})` and its verdict.
#[derive(Clone, Debug)]
pub struct AlphaOutcome {
    pub alphas: Vec<Poly>,
    pub ideal: Ideal,
    pub regular: bool,
    pub descente: Vec<bool>,
}

impl AlphaOutcome {
    pub fn accepted(&self) -> bool {
        self.regular && self.descente.iter().all(|&b| b)
    }
}

#[derive(Clone, Debug)]
pub struct LiftResult {
    pub t: u32,
    pub e: usize,
    /// Minimal-standard-basis elements of `Ann(H_{t+1})` of order at most `t`.
    pub h: Vec<Poly>,
    /// A minimal system of generators of `J = (h)` chosen among the `h`.
    pub minimal: Vec<Poly>,
    pub tried: usize,
    pub accepted: Vec<AlphaOutcome>,
}

/// Tests one α-vector against the minimal generators: `z` regular modulo `I_α` and descente.
pub fn test_alpha(set: &GAdmissibleSet, minimal: &[Poly], alphas: &[Poly]) -> Result<AlphaOutcome> {
    let field = set.z.field().ok_or_else(|| Error::Invalid("zero z".into()))?;
    let t = set.len() as u32 - 1;
    let zt = set.z.pow(t + 1, field);
    let gens: Vec<Poly> = minimal.iter().zip(alphas).map(|(h, a)| h.add(&a.mul(&zt))).collect();
    let ideal = Ideal::from_parts(set.nvars, field, gens, Mode::Local);
    let regular = ideal.is_regular_mod(&set.z)?;
    let descente = if regular { verify_descente(&set.seq, &ideal, &set.z, set.nvars)? } else { vec![] };
    Ok(AlphaOutcome { alphas: alphas.to_vec(), ideal, regular, descente })
}

fn alpha_candidates(s: usize, nvars: usize, policy: &AlphaPolicy, field: crate::field::Field) -> Vec<Vec<Poly>> {
    let zero = vec![Poly::zero(); s];
    let mut out = vec![zero.clone()];
    let monos = Monomial::all_up_to_degree(nvars, policy.deg_max);
    'single: for i in 0..s {
        for m in &monos {
            if out.len() >= policy.budget {
                break 'single;
            }
            let mut a = zero.clone();
            a[i] = Poly::monomial(*m, field.one());
            out.push(a);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(policy.seed);
    while out.len() < policy.budget {
        let a: Vec<Poly> = (0..s)
            .map(|_| Poly::from_terms(monos.iter().map(|m| (*m, random_coeff(&mut rng, field)))))
            .collect();
        out.push(a);
    }
    out
}

/// Lifts a G-admissible set `H_1..H_{t+1}` with `t ≥ e` to Gorenstein ideals `I_α`.
pub fn lift_to_ideal(set: &GAdmissibleSet, policy: &AlphaPolicy) -> Result<LiftResult> {
    set.require_verified()?;
    let n = set.nvars;
    let field = set.z.field().ok_or_else(|| Error::Invalid("zero z".into()))?;
    let e = span_basis(&set.seq[0], n).dim();
    if set.len() < 2 || set.len() - 1 < e {
        return Err(Error::InsufficientLength(format!("t = {} is below e = {e}", set.len().saturating_sub(1))));
    }
    let t = set.len() as u32 - 1;
    let ann = ann_dp(set.last(), n)?.in_mode(Mode::Local);
    let h: Vec<Poly> = ann.minimal_std_basis().into_iter().filter(|f| f.valuation().is_some_and(|v| v <= t)).collect();
    let zt = set.z.pow(t + 1, field);
    let split = Ideal::from_parts(n, field, h.clone(), Mode::Local).add_gens([zt]);
    if !split.equals(&ann) {
        return Err(Error::NotLiftable("Ann(H_{t+1}) differs from (h_1..h_r) + (z^{t+1})".into()));
    }
    let minimal = Ideal::from_parts(n, field, h.clone(), Mode::Local).minimal_generators();
    let candidates = alpha_candidates(minimal.len(), n, policy, field);
    let mut accepted = Vec::new();
    let mut tried = 0;
    let chunk = rayon::current_num_threads().max(1);
    for batch in candidates.chunks(chunk) {
        let outcomes: Vec<Result<AlphaOutcome>> = batch.par_iter().map(|a| test_alpha(set, &minimal, a)).collect();
        for o in outcomes {
            tried += 1;
            let o = o?;
            if o.accepted() {
                accepted.push(o);
                if accepted.len() >= policy.accept {
                    return Ok(LiftResult { t, e, h, minimal, tried, accepted });
                }
            }
        }
    }
    if accepted.is_empty() {
        return Err(Error::BudgetExhausted(tried));
    }
    Ok(LiftResult { t, e, h, minimal, tried, accepted })
}
