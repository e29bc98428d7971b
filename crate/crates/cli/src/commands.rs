use std::fmt::Write as _;

use gorenstein::fixture::Fixture;
use gorenstein::gadm::{
    build_sequence, extend_step, graded_lift, lift_to_ideal, AlphaPolicy, ChoicePolicy, GAdmissibleSet,
};
use gorenstein::report::{list, Claim, Report, Status};
use gorenstein::showcase::{self, linkage::default_candidate_fields, PointsInstance};
use gorenstein::{ann_module, perp_truncated, span_basis, DpPoly, Error, Field, Ideal, Mode, Ring};

use crate::{Cli, Command, Config, ExampleOp, Format, GadmOp, Policy};

pub struct Output {
    pub rendered: String,
    pub passed: bool,
}

pub struct CliError {
    pub message: String,
    pub usage: bool,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let usage = matches!(e, Error::Parse(_) | Error::Field(_) | Error::Context(_));
        CliError { message: e.to_string(), usage }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError { message: msg.into(), usage: true }
}

type Res<T> = std::result::Result<T, CliError>;

fn names(s: &str) -> Vec<String> {
    s.split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect()
}

fn ring(cfg: &Config) -> Res<Ring> {
    let field = Field::parse(&cfg.field)?;
    let (vars, dual) = match (&cfg.vars, &cfg.dual_vars) {
        (Some(v), Some(d)) => (names(v), names(d)),
        (Some(v), None) => {
            let v = names(v);
            let d = v.iter().map(|s| s.to_uppercase()).collect();
            (v, d)
        }
        (None, Some(d)) => {
            let d = names(d);
            (d.iter().map(|s| s.to_lowercase()).collect(), d)
        }
        (None, None) => (names("x,y,z"), names("X,Y,Z")),
    };
    Ok(Ring::with_names(&vars, &dual, field)?)
}

fn mode(local: bool) -> Mode {
    if local {
        Mode::Local
    } else {
        Mode::Global
    }
}

fn ideal(r: &Ring, text: &str, local: bool) -> Res<Ideal> {
    Ok(Ideal::new(r, r.parse_list(text)?, mode(local)))
}

fn read_fixture(path: &str) -> Res<Fixture> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| usage(format!("stdin: {e}")))?
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{path}: {e}")))?
    };
    Ok(Fixture::parse(&text)?)
}

fn gadm_set(fx: &Fixture) -> Res<GAdmissibleSet> {
    let z = fx.z.clone().ok_or_else(|| usage("fixture needs z="))?;
    Ok(GAdmissibleSet::new(fx.dp_polys()?, z, fx.ring.nvars())?)
}

/// A report plus its human-readable rendering.
struct Done {
    report: Report,
    text: String,
}

fn info(report: &mut Report, name: &str, claim: &str, witness: &[(&str, String)]) {
    let mut c = Claim::new(name, claim, Status::Info);
    for (k, v) in witness {
        c = c.with(*k, v);
    }
    report.push(c);
}

pub fn run(cli: &Cli) -> Res<Output> {
    let cfg = &cli.cfg;
    let mut done = dispatch(cli)?;
    done.report.seed = cfg.seed;
    let passed = done.report.passed();
    let rendered = match cfg.format {
        Format::Text => done.text,
        Format::Report => done.report.to_json() + "\n",
    };
    Ok(Output { rendered, passed })
}

fn dispatch(cli: &Cli) -> Res<Done> {
    let cfg = &cli.cfg;
    match &cli.cmd {
        Command::Contract { f, dp } => {
            let r = ring(cfg)?;
            let h = r.parse_poly(f)?;
            let g = r.parse_dp(dp)?;
            let out = r.format_dp(&g.contract_by(&h));
            let mut report = Report::new("contract", r.field, cfg.seed);
            info(&mut report, "contraction", "f∘F", &[("f", f.clone()), ("F", dp.clone()), ("f∘F", out.clone())]);
            Ok(Done { report, text: out + "\n" })
        }
        Command::Ann { dps } => {
            let r = ring(cfg)?;
            let fs: Vec<DpPoly> = dps.iter().map(|d| r.parse_dp(d)).collect::<gorenstein::Result<_>>()?;
            let a = ann_module(&fs, r.nvars())?;
            let gens = r.format_ideal(a.gens());
            let h = a.hilbert();
            let mut report = Report::new("ann", r.field, cfg.seed);
            info(
                &mut report,
                "annihilator",
                "Ann(F_1, ..., F_k)",
                &[("F", dps.join("; ")), ("Ann", gens.clone()), ("length", h.length.unwrap_or(0).to_string()), ("mode", a.mode().to_string())],
            );
            Ok(Done { report, text: gens + "\n" })
        }
        Command::Perp { ideal: text } => {
            let r = ring(cfg)?;
            let i = ideal(&r, text, false)?;
            let d = match cfg.degree_bound {
                Some(d) => d,
                None => match i.hilbert() {
                    h if h.length.is_some() => (h.numerator.len() - 1) as u32,
                    _ => return Err(usage("perp of a non-Artinian ideal needs --degree-bound")),
                },
            };
            let p = perp_truncated(&i, d);
            let basis: Vec<String> = p.basis.iter().map(|g| r.format_dp(g)).collect();
            let mut report = Report::new("perp", r.field, cfg.seed);
            info(&mut report, "perp", "basis of I^⊥ up to the degree bound", &[("degree", d.to_string()), ("dim", p.dim().to_string()), ("basis", list(&basis))]);
            let mut text = format!("dim {} (degree <= {d})\n", p.dim());
            for b in basis {
                let _ = writeln!(text, "{b}");
            }
            Ok(Done { report, text })
        }
        Command::Span { dp } => {
            let r = ring(cfg)?;
            let s = span_basis(&r.parse_dp(dp)?, r.nvars());
            let basis: Vec<String> = s.basis().iter().map(|g| r.format_dp(g)).collect();
            let profile = list(&s.degree_profile());
            let mut report = Report::new("span", r.field, cfg.seed);
            info(&mut report, "span", "span of F under contraction", &[("dim", s.dim().to_string()), ("profile", profile.clone()), ("basis", list(&basis))]);
            let mut text = format!("dim {}\nprofile {profile}\n", s.dim());
            for b in basis {
                let _ = writeln!(text, "{b}");
            }
            Ok(Done { report, text })
        }
        Command::Std { ideal: text, local } => {
            let r = ring(cfg)?;
            let i = ideal(&r, text, *local)?;
            let sb = r.format_ideal(&i.std_basis().elements);
            let mut report = Report::new("std", r.field, cfg.seed);
            info(&mut report, "std", "standard basis", &[("I", text.clone()), ("basis", sb.clone()), ("mode", i.mode().to_string())]);
            Ok(Done { report, text: sb + "\n" })
        }
        Command::Nf { f, ideal: text, local } => {
            let r = ring(cfg)?;
            let i = ideal(&r, text, *local)?;
            let nf = r.format_poly(&i.normal_form(&r.parse_poly(f)?));
            let mut report = Report::new("nf", r.field, cfg.seed);
            info(&mut report, "nf", "normal form", &[("f", f.clone()), ("I", text.clone()), ("nf", nf.clone())]);
            Ok(Done { report, text: nf + "\n" })
        }
        Command::Colon { i, j, local } => {
            let r = ring(cfg)?;
            let a = ideal(&r, i, *local)?;
            let b = ideal(&r, j, *local)?;
            let c = a.colon(&b)?;
            let out = r.format_ideal(&c.std_basis().elements);
            let mut report = Report::new("colon", r.field, cfg.seed);
            info(&mut report, "colon", "I : J", &[("I", i.clone()), ("J", j.clone()), ("I:J", out.clone())]);
            Ok(Done { report, text: out + "\n" })
        }
        Command::Hilbert { ideal: text, local } => {
            let r = ring(cfg)?;
            let h = ideal(&r, text, *local)?.hilbert();
            let hf = list(&h.prefix(h.stabilization + 3));
            let length = h.length.map(|l| l.to_string()).unwrap_or_else(|| "-".into());
            let mut report = Report::new("hilbert", r.field, cfg.seed);
            info(
                &mut report,
                "hilbert",
                "Hilbert data of R/I",
                &[
                    ("hf", hf.clone()),
                    ("dim", h.dim.to_string()),
                    ("e", h.e.to_string()),
                    ("h-vector", list(&h.h_vector())),
                    ("stabilization", h.stabilization.to_string()),
                    ("length", length.clone()),
                ],
            );
            let text = format!(
                "hf {hf}\ndim {}\ne {}\nh-vector {}\nstabilization {}\nlength {length}\n",
                h.dim,
                h.e,
                list(&h.h_vector()),
                h.stabilization
            );
            Ok(Done { report, text })
        }
        Command::Gadm { op } => gadm(cfg, op),
        Command::Example { which } => {
            let field = Field::parse(&cfg.field)?;
            let report = match which {
                ExampleOp::Semigroup { b } => showcase::semigroup_suite(*b, field)?,
                ExampleOp::Points { name } => {
                    if PointsInstance::by_name(name)?.long && !cfg.long {
                        return Err(usage(format!("{name} is a long run; pass --long")));
                    }
                    showcase::points_suite(name, field)?
                }
            };
            let text = report.to_text();
            Ok(Done { report, text })
        }
        Command::Linkage => {
            let report = showcase::p14_linkage(&default_candidate_fields())?;
            let text = report.to_text();
            Ok(Done { report, text })
        }
    }
}

fn gadm(cfg: &Config, op: &GadmOp) -> Res<Done> {
    match op {
        GadmOp::Check { fixture } => {
            let fx = read_fixture(fixture)?;
            let set = gadm_set(&fx)?;
            let rep = &set.report;
            let mut report = Report::new("gadm-check", fx.ring.field, cfg.seed);
            for (k, ok) in rep.condition1.iter().enumerate() {
                let claim = if k == 0 { "z∘H_1 = 0" } else { "z∘H_l = H_{l-1}" };
                report.check(&format!("condition (1) at l={}", k + 1), claim, *ok);
            }
            for (k, ok) in rep.condition2.iter().enumerate() {
                report.check(&format!("condition (2) at l={}", k + 1), "Ann(H_l)∘H_{l+1} = span(H_1)", *ok);
            }
            let mut text = rep.describe() + "\n";
            for (l, h) in fx.lines.iter().enumerate() {
                let c1 = if rep.condition1[l] { "ok" } else { "FAIL" };
                let c2 = rep.condition2.get(l).map(|&b| if b { "ok" } else { "FAIL" }).unwrap_or("-");
                let _ = writeln!(text, "  l={:<3} (1) {c1:<4} (2) {c2:<4} {h}", l + 1);
            }
            Ok(Done { report, text })
        }
        GadmOp::Extend { fixture } => {
            let fx = read_fixture(fixture)?;
            let set = gadm_set(&fx)?;
            let top = set.last().degree().unwrap_or(0);
            let sol = extend_step(&set, cfg.degree_bound.unwrap_or(top + 1))?;
            let r = &fx.ring;
            let kernel: Vec<String> = sol.kernel.iter().map(|k| r.format_dp(k)).collect();
            let mut report = Report::new("gadm-extend", r.field, cfg.seed);
            info(
                &mut report,
                "extension",
                "solution space of C with H_{t0+1} = Z·H_t0 + C",
                &[
                    ("particular", r.format_dp(&sol.particular)),
                    ("kernel dim", kernel.len().to_string()),
                    ("kernel", list(&kernel)),
                    ("next", r.format_dp(&sol.next)),
                    ("degree", sol.degree_bound.to_string()),
                ],
            );
            let mut text = format!("particular C = {}\nkernel dim {}\n", r.format_dp(&sol.particular), kernel.len());
            for k in &kernel {
                let _ = writeln!(text, "  {k}");
            }
            let _ = writeln!(text, "next H = {}", r.format_dp(&sol.next));
            Ok(Done { report, text })
        }
        GadmOp::Build { h1, z, len, constants, policy, out } => {
            let r = ring(cfg)?;
            let h = r.parse_dp(h1)?;
            let zp = r.parse_poly(z)?;
            let policy = match (constants, policy) {
                (Some(c), _) => ChoicePolicy::User(
                    c.split(';').map(|s| r.parse_dp(s.trim())).collect::<gorenstein::Result<_>>()?,
                ),
                (None, Policy::Zero) => ChoicePolicy::ZeroIfFeasible,
                (None, Policy::Random) => ChoicePolicy::SeededRandom(cfg.seed),
            };
            let extra = cfg.degree_bound.map(|d| d.saturating_sub(h.degree().unwrap_or(0) + 1)).unwrap_or(2);
            let built = build_sequence(&h, &zp, r.nvars(), *len, &policy, extra)?;
            let mut report = Report::new("gadm-build", r.field, cfg.seed);
            let mut text = String::new();
            for s in &built.steps {
                info(
                    &mut report,
                    &format!("C_{}", s.level),
                    "chosen constant",
                    &[("C", r.format_dp(&s.chosen)), ("kernel dim", s.kernel_dim().to_string())],
                );
                let _ = writeln!(text, "C_{} = {}  (kernel dim {})", s.level, r.format_dp(&s.chosen), s.kernel_dim());
            }
            let fx = Fixture::gadm(&r, &zp, &built.set.seq);
            let body = fx.to_text();
            report.check("admissible", "the built set is G-admissible", built.set.report.passed());
            text.push_str(&body);
            if let Some(path) = out {
                std::fs::write(path, &body).map_err(|e| usage(format!("{path}: {e}")))?;
            }
            Ok(Done { report, text })
        }
        GadmOp::Lift { fixture, budget, accept } => {
            let fx = read_fixture(fixture)?;
            let set = gadm_set(&fx)?;
            let r = &fx.ring;
            let policy = AlphaPolicy { deg_max: cfg.alpha_deg_max, budget: *budget, seed: cfg.seed, accept: *accept };
            let lift = lift_to_ideal(&set, &policy)?;
            let mut report = Report::new("gadm-lift", r.field, cfg.seed);
            info(
                &mut report,
                "split",
                "Ann(H_{t+1}) = (h_1..h_r) + (z^{t+1})",
                &[("t", lift.t.to_string()), ("e", lift.e.to_string()), ("h", r.format_ideal(&lift.h)), ("minimal", r.format_ideal(&lift.minimal))],
            );
            let mut text = format!(
                "t = {}, e = {}\nh = {}\nminimal generators = {}\ncandidates tried {}\n",
                lift.t,
                lift.e,
                r.format_ideal(&lift.h),
                r.format_ideal(&lift.minimal),
                lift.tried
            );
            for (k, o) in lift.accepted.iter().enumerate() {
                let alphas: Vec<String> = o.alphas.iter().map(|a| r.format_poly(a)).collect();
                let h = o.ideal.hilbert();
                report.check(&format!("I_alpha {}", k + 1), "z regular modulo I_α and descente holds", o.accepted()).witness.extend([
                    ("alpha".to_string(), list(&alphas)),
                    ("I".to_string(), r.format_ideal(o.ideal.gens())),
                    ("hf".to_string(), list(&h.prefix(h.stabilization + 2))),
                ]);
                let _ = writeln!(text, "alpha = {}\nI = {}\nhf {}", list(&alphas), r.format_ideal(o.ideal.gens()), list(&h.prefix(h.stabilization + 2)));
            }
            Ok(Done { report, text })
        }
        GadmOp::GradedLift { fixture, t } => {
            let fx = read_fixture(fixture)?;
            let set = gadm_set(&fx)?;
            let r = &fx.ring;
            let g = graded_lift(&set, *t)?;
            let h = &g.hilbert;
            let mut report = Report::new("gadm-graded-lift", r.field, cfg.seed);
            report.check("descente", "Ann(H_l) = I + (z^l) for every l", g.descente.iter().all(|&b| b)).witness.extend([
                ("t".to_string(), g.t.to_string()),
                ("I".to_string(), r.format_ideal(g.ideal.gens())),
                ("hf".to_string(), list(&h.prefix(h.stabilization + 2))),
                ("e".to_string(), h.e.to_string()),
            ]);
            let text = format!("I = {}\nhf {}\ndim {} e {}\n", r.format_ideal(g.ideal.gens()), list(&h.prefix(h.stabilization + 2)), h.dim, h.e);
            Ok(Done { report, text })
        }
    }
}
