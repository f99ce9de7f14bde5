//! Case plans per suite and their execution.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand_chacha::ChaCha8Rng;

use super::draw::{case_rng, draw_groups};
use super::{CaseRecord, Status, Suite, SuiteConfig};
use crate::check::{expect_scalar, CheckReport};
use crate::dwpf::{
    cauchy_determinant_check, inverse_h_check, lemma_sum_check, permutation_symmetry_check,
    residue_check, shift_properties_check, LemmaCase, LemmaId,
};
use crate::error::{Error, Result};
use crate::graded::yang_baxter_check;
use crate::identities::{
    base_case_check, bethe_agreement_check, bethe_symmetry_check, dual_bethe_agreement_check,
    leading_term_check, mcr_check, recursion_check, xy_equivalence_check, Equation, McrCase,
    XYArgs, XYKind,
};
use crate::monodromy::{quadruples, rtt_check, sign_convention_survey, ChainSpec, Monodromy};
use crate::scalar::{Coupling, RationalFn};
use crate::varsets::VarSet;
use crate::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) enum ScalarIdentity {
    GAntisymmetry,
    HgInverse,
    FShiftInverse,
    FMinusG,
    SetProduct,
}

impl ScalarIdentity {
    const ALL: [ScalarIdentity; 5] = [
        ScalarIdentity::GAntisymmetry,
        ScalarIdentity::HgInverse,
        ScalarIdentity::FShiftInverse,
        ScalarIdentity::FMinusG,
        ScalarIdentity::SetProduct,
    ];

    fn name(self) -> &'static str {
        match self {
            ScalarIdentity::GAntisymmetry => "g-antisymmetry",
            ScalarIdentity::HgInverse => "h-g-inverse",
            ScalarIdentity::FShiftInverse => "f-shift-inverse",
            ScalarIdentity::FMinusG => "f-minus-g",
            ScalarIdentity::SetProduct => "set-product-factorization",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(super) enum Job {
    Scalar(ScalarIdentity),
    YangBaxter,
    Rtt {
        l: usize,
    },
    Commutators {
        l: usize,
    },
    Vacuum {
        l: usize,
    },
    OddExchange {
        l: usize,
    },
    SignSurvey {
        l: usize,
    },
    KSymmetry {
        n: usize,
    },
    KShift {
        n: usize,
    },
    Cauchy {
        n: usize,
    },
    Residue {
        n: usize,
    },
    InverseH,
    Lemma {
        id: LemmaId,
        m1: usize,
        m2: usize,
    },
    Mcr {
        l: usize,
        eq: Equation,
        indices: Vec<usize>,
        n: usize,
        m: usize,
    },
    Xy {
        l: usize,
        a: usize,
        b: usize,
    },
    Recursion {
        l: usize,
        kind: XYKind,
        a: usize,
        b: usize,
    },
    BaseCase {
        l: usize,
        b: usize,
    },
    LeadingTerm {
        l: usize,
        a: usize,
        b: usize,
    },
    Bethe {
        l: usize,
        a: usize,
        b: usize,
    },
    DualBethe {
        l: usize,
        a: usize,
        b: usize,
    },
}

impl Job {
    fn equation_ref(&self) -> String {
        match self {
            Job::Scalar(s) => format!("scalar:{}", s.name()),
            Job::YangBaxter => "graded:yang-baxter".into(),
            Job::Rtt { .. } => "monodromy:rtt".into(),
            Job::Commutators { .. } => "monodromy:graded-commutator".into(),
            Job::Vacuum { .. } => "monodromy:vacuum-and-parity".into(),
            Job::OddExchange { .. } => "monodromy:odd-exchange".into(),
            Job::SignSurvey { .. } => "monodromy:sign-convention".into(),
            Job::KSymmetry { .. } => "dwpf:permutation-symmetry".into(),
            Job::KShift { .. } => "dwpf:shift-properties".into(),
            Job::Cauchy { .. } => "dwpf:cauchy-determinant".into(),
            Job::Residue { .. } => "dwpf:residue".into(),
            Job::InverseH => "dwpf:inverse-h".into(),
            Job::Lemma { id, .. } => format!("lemma:{}", id.name()),
            Job::Mcr { eq, .. } => eq.name().into(),
            Job::Xy { .. } => "xy:equivalence".into(),
            Job::Recursion { kind, .. } => format!("xy:recursion-{}", kind.name()),
            Job::BaseCase { .. } => "xy:base-case".into(),
            Job::LeadingTerm { .. } => "xy:leading-terms".into(),
            Job::Bethe { .. } => "bethe:representations".into(),
            Job::DualBethe { .. } => "dual-bethe:representations".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(super) struct CaseSpec {
    pub suite: Suite,
    pub case_id: String,
    pub job: Job,
}

struct Planner<'a> {
    cfg: &'a SuiteConfig,
    suite: Suite,
    out: Vec<CaseSpec>,
}

impl Planner<'_> {
    fn per_draw(&mut self, stem: String, job: Job) {
        for d in 0..self.cfg.draws {
            self.out.push(CaseSpec {
                suite: self.suite,
                case_id: format!("{}/{stem}/d{d:03}", self.suite.name()),
                job: job.clone(),
            });
        }
    }

    fn once(&mut self, stem: String, job: Job) {
        self.out.push(CaseSpec {
            suite: self.suite,
            case_id: format!("{}/{stem}", self.suite.name()),
            job,
        });
    }

    fn lengths(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.cfg.sites
    }
}

/// Every case of one concrete suite, in plan order.
pub(super) fn plan(cfg: &SuiteConfig, suite: Suite) -> Vec<CaseSpec> {
    let k = cfg.max_set_size;
    let mut p = Planner {
        cfg,
        suite,
        out: Vec::new(),
    };
    match suite {
        Suite::All => {
            for s in Suite::CONCRETE {
                p.out.extend(plan(cfg, s));
            }
        }
        Suite::Scalars => {
            for s in ScalarIdentity::ALL {
                p.per_draw(s.name().into(), Job::Scalar(s));
            }
        }
        Suite::Dwpf => {
            p.per_draw("inverse-h".into(), Job::InverseH);
            for n in 1..=k.min(5) {
                p.per_draw(format!("symmetry/n{n}"), Job::KSymmetry { n });
                if n <= 4 {
                    p.per_draw(format!("shift/n{n}"), Job::KShift { n });
                    p.per_draw(format!("cauchy/n{n}"), Job::Cauchy { n });
                    p.per_draw(format!("residue/n{n}"), Job::Residue { n });
                }
            }
        }
        Suite::Lemmas => {
            for id in LemmaId::ALL {
                let sizes: Vec<(usize, usize)> = match id {
                    LemmaId::CauchySum | LemmaId::DwpfSum => (0..=k)
                        .flat_map(|m1| (0..=k - m1).map(move |m2| (m1, m2)))
                        .filter(|&(m1, m2)| m1 + m2 >= 1)
                        .collect(),
                    _ => (1..=k).map(|n| (n, 0)).collect(),
                };
                for (m1, m2) in sizes {
                    p.per_draw(
                        format!("{}/m{m1}-{m2}", id.name()),
                        Job::Lemma { id, m1, m2 },
                    );
                }
            }
        }
        Suite::Rtt => {
            p.per_draw("yang-baxter".into(), Job::YangBaxter);
            for l in p.lengths() {
                p.per_draw(format!("L{l}/rtt"), Job::Rtt { l });
                p.per_draw(format!("L{l}/commutators"), Job::Commutators { l });
                p.per_draw(format!("L{l}/vacuum"), Job::Vacuum { l });
                p.per_draw(format!("L{l}/odd-exchange"), Job::OddExchange { l });
                p.once(format!("L{l}/sign-survey"), Job::SignSurvey { l });
            }
        }
        Suite::McrRows => {
            let sizes: Vec<(usize, usize)> = (1..=2)
                .flat_map(|n| (1..=3).map(move |m| (n, m)))
                .filter(|&(n, m)| n + m <= k)
                .collect();
            for l in p.lengths() {
                for eq in Equation::ROWS {
                    for indices in eq.admissible_indices() {
                        let tag: String = indices.iter().map(usize::to_string).collect();
                        for &(n, m) in &sizes {
                            p.per_draw(
                                format!("L{l}/{}/i{tag}/n{n}m{m}", eq_slug(eq)),
                                Job::Mcr {
                                    l,
                                    eq,
                                    indices: indices.clone(),
                                    n,
                                    m,
                                },
                            );
                        }
                    }
                }
            }
        }
        Suite::McrColumns => {
            for l in p.lengths() {
                for eq in Equation::COLUMNS {
                    for b in (1..=2).filter(|b| *b < k) {
                        p.per_draw(
                            format!("L{l}/{}/n{b}m1", eq_slug(eq)),
                            Job::Mcr {
                                l,
                                eq,
                                indices: vec![],
                                n: b,
                                m: 1,
                            },
                        );
                    }
                }
            }
        }
        Suite::Xy => {
            for l in p.lengths() {
                for a in 0..=k {
                    for b in 0..=k - a {
                        p.per_draw(format!("L{l}/equivalence/a{a}b{b}"), Job::Xy { l, a, b });
                        if a >= 1 {
                            for kind in [XYKind::X, XYKind::Y] {
                                p.per_draw(
                                    format!("L{l}/recursion-{}/a{a}b{b}", kind.name()),
                                    Job::Recursion { l, kind, a, b },
                                );
                            }
                            p.per_draw(
                                format!("L{l}/leading/a{a}b{b}"),
                                Job::LeadingTerm { l, a, b },
                            );
                        }
                    }
                }
                for b in 0..=k.min(3) {
                    p.per_draw(format!("L{l}/base/b{b}"), Job::BaseCase { l, b });
                }
                for b in (1..=3).filter(|b| *b < k) {
                    p.per_draw(
                        format!("L{l}/comm-a1/b{b}"),
                        Job::Mcr {
                            l,
                            eq: Equation::CommA1,
                            indices: vec![],
                            n: 1,
                            m: b,
                        },
                    );
                }
            }
        }
        Suite::Bethe | Suite::DualBethe => {
            for l in p.lengths() {
                for (a, b) in bethe_grid(k) {
                    let job = if suite == Suite::Bethe {
                        Job::Bethe { l, a, b }
                    } else {
                        Job::DualBethe { l, a, b }
                    };
                    p.per_draw(format!("L{l}/a{a}b{b}"), job);
                }
            }
        }
    }
    p.out
}

fn bethe_grid(k: usize) -> Vec<(usize, usize)> {
    [(1, 1), (1, 2), (2, 1), (2, 2)]
        .into_iter()
        .filter(|&(a, b)| a + b <= k)
        .collect()
}

fn eq_slug(eq: Equation) -> String {
    eq.name()
        .split(':')
        .nth(1)
        .unwrap_or_default()
        .chars()
        .filter(|ch| ch.is_ascii_alphanumeric())
        .collect()
}

/// Runs one case; errors and panics become failing records.
pub(super) fn execute(cfg: &SuiteConfig, spec: &CaseSpec) -> CaseRecord {
    let start = Instant::now();
    let mut ctx = Ctx {
        cfg,
        c: Coupling::new(cfg.c.clone()),
        rng: case_rng(cfg.seed, &spec.case_id),
        params: BTreeMap::new(),
    };
    ctx.params.insert("c".into(), cfg.c.to_string());
    let outcome = catch_unwind(AssertUnwindSafe(|| ctx.run(&spec.job))).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(Error::Config(format!("internal panic: {msg}")))
    });
    let (status, detail) = match outcome {
        Ok(r) => (Status::Pass, r.summary()),
        Err(e @ Error::Exhaustion(_)) => (Status::Skipped, e.to_string()),
        Err(e) => (Status::Fail, e.to_string()),
    };
    CaseRecord {
        suite: spec.suite.name().into(),
        case_id: spec.case_id.clone(),
        equation_ref: spec.job.equation_ref(),
        params: ctx.params,
        status,
        detail,
        elapsed_ms: cfg.timing.then(|| start.elapsed().as_millis() as u64),
    }
}

struct Ctx<'a> {
    cfg: &'a SuiteConfig,
    c: Result<Coupling<Rat>>,
    rng: ChaCha8Rng,
    params: BTreeMap<String, String>,
}

fn render(xs: &[Rat]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

impl Ctx<'_> {
    fn coupling(&self) -> Result<Coupling<Rat>> {
        self.c.clone()
    }

    /// Draws named groups jointly and records them as parameters.
    fn draw(&mut self, groups: &[(&str, usize)]) -> Result<Vec<Vec<Rat>>> {
        let sizes: Vec<usize> = groups.iter().map(|g| g.1).collect();
        let c = self.coupling()?;
        let drawn = draw_groups(&mut self.rng, &sizes, &c, &[])?;
        for ((name, _), xs) in groups.iter().zip(&drawn) {
            self.params.insert((*name).into(), render(xs));
        }
        Ok(drawn)
    }

    fn monodromy(&mut self, xi: Vec<Rat>) -> Result<Monodromy<Rat>> {
        self.params.insert("L".into(), xi.len().to_string());
        let chain = ChainSpec::new(VarSet::new(xi)?, self.coupling()?)?
            .with_sign(self.cfg.sign)
            .with_order(self.cfg.order);
        Ok(Monodromy::new(chain))
    }

    fn run(&mut self, job: &Job) -> Result<CheckReport> {
        let c = self.coupling()?;
        match job {
            Job::Scalar(s) => self.scalar_identity(*s, &c),
            Job::YangBaxter => {
                let d = self.draw(&[("u", 1), ("v", 1), ("w", 1)])?;
                yang_baxter_check(&d[0][0], &d[1][0], &d[2][0], &c)
            }
            Job::Rtt { l } => {
                let d = self.draw(&[("xi", *l), ("u", 1), ("v", 1)])?;
                let m = self.monodromy(d[0].clone())?;
                rtt_check(m.chain(), &d[1][0], &d[2][0])
            }
            Job::Commutators { l } => {
                let d = self.draw(&[("xi", *l), ("u", 1), ("v", 1)])?;
                let m = self.monodromy(d[0].clone())?;
                let mut report = CheckReport::new("graded commutators, 81 quadruples", 0);
                for q in quadruples() {
                    report.absorb(m.graded_commutator_check(q, &d[1][0], &d[2][0])?);
                }
                Ok(report)
            }
            Job::Vacuum { l } => {
                let d = self.draw(&[("xi", *l), ("u", 1)])?;
                let m = self.monodromy(d[0].clone())?;
                let u = &d[1][0];
                let mut report = m.vacuum_check(u)?;
                let dual = m.dual_vacuum()?;
                report.absorb(m.dual_vacuum_check(&dual, u)?);
                report.absorb(m.parity_check(u)?);
                report.label = "vacuum, dual vacuum and parity".into();
                Ok(report)
            }
            Job::OddExchange { l } => {
                let d = self.draw(&[("xi", *l), ("v1", 1), ("v2", 1)])?;
                let m = self.monodromy(d[0].clone())?;
                m.odd_exchange_check(&d[1][0], &d[2][0])
            }
            Job::SignSurvey { l } => {
                let d = self.draw(&[("xi", *l), ("u", 1), ("v", 1)])?;
                let m = self.monodromy(d[0].clone())?;
                let survey = sign_convention_survey(m.chain(), &d[1][0], &d[2][0])?;
                let table: Vec<String> = survey
                    .iter()
                    .map(|(s, b1, b2)| format!("{} {b1}/{b2}", s.name()))
                    .collect();
                let table = format!("failing quadruples per form: {}", table.join(", "));
                let chosen = survey.iter().find(|e| e.0 == self.cfg.sign);
                match chosen {
                    Some((_, 0, 0)) => {
                        Ok(CheckReport::new("sign convention survey", 81).with_note(table))
                    }
                    _ => Err(Error::check(
                        format!(
                            "configured convention {} satisfies both forms",
                            self.cfg.sign.name()
                        ),
                        table,
                    )),
                }
            }
            Job::KSymmetry { n } => {
                let d = self.draw(&[("u", *n), ("v", *n)])?;
                permutation_symmetry_check(&d[0], &d[1], &c)
            }
            Job::KShift { n } => {
                let d = self.draw(&[("u", *n), ("v", *n), ("z", 1)])?;
                shift_properties_check(&d[0], &d[1], &d[2][0], &c)
            }
            Job::Cauchy { n } => {
                let d = self.draw(&[("u", *n), ("v", *n)])?;
                cauchy_determinant_check(&d[0], &d[1], &c)
            }
            Job::Residue { n } => {
                let d = self.draw(&[("u", *n), ("v", *n)])?;
                let r = residue_check(&d[0], &d[1], &c)?;
                let degree = r
                    .numerator_degree
                    .map_or("zero".to_string(), |k| k.to_string());
                Ok(CheckReport::new("K residues", r.residues.len())
                    .with_note(format!("numerator degree {degree}")))
            }
            Job::InverseH => {
                let d = self.draw(&[("u", 1), ("v", 1)])?;
                inverse_h_check(&d[0][0], &d[1][0], &c)
            }
            Job::Lemma { id, m1, m2 } => {
                let case = match id {
                    LemmaId::CauchySum | LemmaId::DwpfSum => {
                        let d = self.draw(&[("w", m1 + m2), ("u", *m1), ("v", *m2)])?;
                        let [w, u, v] = sets(d)?;
                        if *id == LemmaId::CauchySum {
                            LemmaCase::CauchySum { w, u, v }
                        } else {
                            LemmaCase::DwpfSum { w, u, v }
                        }
                    }
                    LemmaId::OneOutU | LemmaId::OneOutV => {
                        let d = self.draw(&[("u", *m1), ("v", *m1), ("xi", 1)])?;
                        let xi = d[2][0].clone();
                        let [u, v, _] = sets(d)?;
                        if *id == LemmaId::OneOutU {
                            LemmaCase::OneOutU { u, v, xi }
                        } else {
                            LemmaCase::OneOutV { u, v, xi }
                        }
                    }
                    LemmaId::Contour => {
                        let d = self.draw(&[("gamma", *m1), ("tau", 1), ("x", 1)])?;
                        LemmaCase::Contour {
                            gamma: VarSet::new(d[0].clone())?,
                            tau: d[1][0].clone(),
                            x: d[2][0].clone(),
                        }
                    }
                };
                lemma_sum_check(&case, &c)
            }
            Job::Mcr {
                l,
                eq,
                indices,
                n,
                m,
            } => {
                let d = self.draw(&[("xi", *l), ("u", *n), ("v", *m)])?;
                let [xi, u, v] = sets(d)?;
                let mono = self.monodromy(xi.into_vec())?;
                if !indices.is_empty() {
                    let tag: Vec<String> = indices.iter().map(usize::to_string).collect();
                    self.params.insert("indices".into(), tag.join(","));
                }
                mcr_check(&mono, &McrCase::new(*eq, indices.clone(), u, v)?)
            }
            Job::Xy { l, a, b } => {
                let (m, args) = self.xy(*l, *a, *b)?;
                xy_equivalence_check(&m, &args)
            }
            Job::Recursion { l, kind, a, b } => {
                let (m, args) = self.xy(*l, *a, *b)?;
                recursion_check(&m, *kind, &args)
            }
            Job::BaseCase { l, b } => {
                let (m, args) = self.xy(*l, 0, *b)?;
                base_case_check(&m, &args.v_set)
            }
            Job::LeadingTerm { l, a, b } => {
                let (m, args) = self.xy(*l, *a, *b)?;
                leading_term_check(&m, &args)
            }
            Job::Bethe { l, a, b } => {
                let (m, args) = self.xy(*l, *a, *b)?;
                let mut report = bethe_agreement_check(&m, &args)?;
                report.absorb(bethe_symmetry_check(&m, &args)?);
                Ok(report)
            }
            Job::DualBethe { l, a, b } => {
                let (m, args) = self.xy(*l, *a, *b)?;
                let dual = m.dual_vacuum()?;
                dual_bethe_agreement_check(&m, &dual, &args)
            }
        }
    }

    fn xy(&mut self, l: usize, a: usize, b: usize) -> Result<(Monodromy<Rat>, XYArgs<Rat>)> {
        let d = self.draw(&[("xi", l), ("u", a), ("v", b)])?;
        let [xi, u, v] = sets(d)?;
        let m = self.monodromy(xi.into_vec())?;
        Ok((m, XYArgs::new(u, v)))
    }

    fn scalar_identity(&mut self, s: ScalarIdentity, c: &Coupling<Rat>) -> Result<CheckReport> {
        let cv = c.value().clone();
        let one = Rat::from_integer(1.into());
        if s == ScalarIdentity::SetProduct {
            let d = self.draw(&[("a1", 2), ("a2", 2), ("b", 2)])?;
            let a: Vec<Rat> = d[0].iter().chain(&d[1]).cloned().collect();
            for func in [RationalFn::G, RationalFn::F, RationalFn::H] {
                let label = format!("{func:?} set product factorizes");
                let split =
                    c.set_product(func, &d[0], &d[2])? * c.set_product(func, &d[1], &d[2])?;
                expect_scalar(&label, &c.set_product(func, &a, &d[2])?, &split)?;
                let split =
                    c.set_product(func, &d[2], &d[0])? * c.set_product(func, &d[2], &d[1])?;
                expect_scalar(&label, &c.set_product(func, &d[2], &a)?, &split)?;
            }
            return Ok(CheckReport::new("set products factorize", 6));
        }
        let d = self.draw(&[("x", 1), ("y", 1)])?;
        let (x, y) = (&d[0][0], &d[1][0]);
        match s {
            ScalarIdentity::GAntisymmetry => {
                expect_scalar("g(x,y) = -g(y,x)", &c.g(x, y)?, &-c.g(y, x)?)?;
            }
            ScalarIdentity::HgInverse => {
                let prod = c.h(x, y) * c.g(x, &(y.clone() - cv))?;
                expect_scalar("h(x,y) g(x,y-c) = 1", &prod, &one)?;
            }
            ScalarIdentity::FShiftInverse => {
                let prod = c.f(&(x.clone() - cv), y)? * c.f(y, x)?;
                expect_scalar("f(x-c,y) f(y,x) = 1", &prod, &one)?;
            }
            ScalarIdentity::FMinusG => {
                expect_scalar("f(x,y) - g(x,y) = 1", &(c.f(x, y)? - c.g(x, y)?), &one)?;
            }
            ScalarIdentity::SetProduct => unreachable!(),
        }
        Ok(CheckReport::new(s.name(), 1))
    }
}

fn sets(d: Vec<Vec<Rat>>) -> Result<[VarSet<Rat>; 3]> {
    let mut it = d.into_iter().map(VarSet::new);
    let mut next = || it.next().unwrap_or_else(|| Ok(VarSet::empty()));
    Ok([next()?, next()?, next()?])
}
