//! Relation-algebra axioms, their one-sided weakenings, and classification.
//!
//! Every axiom except the general-relation variant of RA10 is decided on
//! base relations only: distributivity of the union-extended operations
//! lifts the result to all relations. One-sided variants read an equation
//! `lhs = rhs` as `lhs ⊆ rhs` (`⊆`) or `lhs ⊇ rhs` (`⊇`).

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::calculus::CalculusSpec;
use crate::relation::Relation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    Ra1,
    Ra2,
    Ra3,
    Ra4,
    Ra4Sub,
    Ra4Sup,
    Ra5,
    Ra5l,
    Ra6,
    Ra6Sub,
    Ra6Sup,
    Ra6l,
    Ra6lSub,
    Ra6lSup,
    Ra7,
    Ra7Sub,
    Ra7Sup,
    Ra8,
    Ra9,
    Ra9Sub,
    Ra9Sup,
    Ra10,
    Ra10Sub,
    Ra10Sup,
    Sa,
    SaSub,
    SaSup,
    Wa,
    WaSub,
    WaSup,
    Pl,
    PlRight,
    PlLeft,
}

/// The equation an axiom id is built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Ra1,
    Ra2,
    Ra3,
    Ra4,
    Ra5,
    Ra5l,
    Ra6,
    Ra6l,
    Ra7,
    Ra8,
    Ra9,
    Ra10,
    Sa,
    Wa,
    Pl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Both,
    Sub,
    Sup,
}

impl AxiomId {
    pub const ALL: [AxiomId; 33] = [
        AxiomId::Ra1,
        AxiomId::Ra2,
        AxiomId::Ra3,
        AxiomId::Ra4,
        AxiomId::Ra4Sub,
        AxiomId::Ra4Sup,
        AxiomId::Ra5,
        AxiomId::Ra5l,
        AxiomId::Ra6,
        AxiomId::Ra6Sub,
        AxiomId::Ra6Sup,
        AxiomId::Ra6l,
        AxiomId::Ra6lSub,
        AxiomId::Ra6lSup,
        AxiomId::Ra7,
        AxiomId::Ra7Sub,
        AxiomId::Ra7Sup,
        AxiomId::Ra8,
        AxiomId::Ra9,
        AxiomId::Ra9Sub,
        AxiomId::Ra9Sup,
        AxiomId::Ra10,
        AxiomId::Ra10Sub,
        AxiomId::Ra10Sup,
        AxiomId::Sa,
        AxiomId::SaSub,
        AxiomId::SaSup,
        AxiomId::Wa,
        AxiomId::WaSub,
        AxiomId::WaSup,
        AxiomId::Pl,
        AxiomId::PlRight,
        AxiomId::PlLeft,
    ];

    /// One-sided variants only.
    pub fn one_sided() -> impl Iterator<Item = AxiomId> {
        AxiomId::ALL.into_iter().filter(|a| a.is_one_sided())
    }

    pub fn name(self) -> &'static str {
        use AxiomId::*;
        match self {
            Ra1 => "RA1",
            Ra2 => "RA2",
            Ra3 => "RA3",
            Ra4 => "RA4",
            Ra4Sub => "RA4⊆",
            Ra4Sup => "RA4⊇",
            Ra5 => "RA5",
            Ra5l => "RA5l",
            Ra6 => "RA6",
            Ra6Sub => "RA6⊆",
            Ra6Sup => "RA6⊇",
            Ra6l => "RA6l",
            Ra6lSub => "RA6l⊆",
            Ra6lSup => "RA6l⊇",
            Ra7 => "RA7",
            Ra7Sub => "RA7⊆",
            Ra7Sup => "RA7⊇",
            Ra8 => "RA8",
            Ra9 => "RA9",
            Ra9Sub => "RA9⊆",
            Ra9Sup => "RA9⊇",
            Ra10 => "RA10",
            Ra10Sub => "RA10⊆",
            Ra10Sup => "RA10⊇",
            Sa => "SA",
            SaSub => "SA⊆",
            SaSup => "SA⊇",
            Wa => "WA",
            WaSub => "WA⊆",
            WaSup => "WA⊇",
            Pl => "PL",
            PlRight => "PLright",
            PlLeft => "PLleft",
        }
    }

    fn family(self) -> Family {
        use AxiomId::*;
        match self {
            Ra1 => Family::Ra1,
            Ra2 => Family::Ra2,
            Ra3 => Family::Ra3,
            Ra4 | Ra4Sub | Ra4Sup => Family::Ra4,
            Ra5 => Family::Ra5,
            Ra5l => Family::Ra5l,
            Ra6 | Ra6Sub | Ra6Sup => Family::Ra6,
            Ra6l | Ra6lSub | Ra6lSup => Family::Ra6l,
            Ra7 | Ra7Sub | Ra7Sup => Family::Ra7,
            Ra8 => Family::Ra8,
            Ra9 | Ra9Sub | Ra9Sup => Family::Ra9,
            Ra10 | Ra10Sub | Ra10Sup => Family::Ra10,
            Sa | SaSub | SaSup => Family::Sa,
            Wa | WaSub | WaSup => Family::Wa,
            Pl | PlRight | PlLeft => Family::Pl,
        }
    }

    // For PL, Sub stands for "right" and Sup for "left".
    fn side(self) -> Side {
        use AxiomId::*;
        match self {
            Ra4Sub | Ra6Sub | Ra6lSub | Ra7Sub | Ra9Sub | Ra10Sub | SaSub | WaSub | PlRight => Side::Sub,
            Ra4Sup | Ra6Sup | Ra6lSup | Ra7Sup | Ra9Sup | Ra10Sup | SaSup | WaSup | PlLeft => Side::Sup,
            _ => Side::Both,
        }
    }

    pub fn is_one_sided(self) -> bool {
        self.side() != Side::Both
    }

    /// Number of base-relation arguments: 1, 2 or 3.
    pub fn arity(self) -> u32 {
        match self.family() {
            Family::Ra6 | Family::Ra6l | Family::Ra7 | Family::Sa | Family::Wa => 1,
            Family::Ra1 | Family::Ra3 | Family::Ra8 | Family::Ra9 | Family::Ra10 => 2,
            Family::Ra2 | Family::Ra4 | Family::Ra5 | Family::Ra5l | Family::Pl => 3,
        }
    }

    pub fn needs_identity(self) -> bool {
        matches!(self.family(), Family::Ra6 | Family::Ra6l | Family::Wa)
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for AxiomId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown axiom `{0}`")]
pub struct UnknownAxiom(pub String);

impl FromStr for AxiomId {
    type Err = UnknownAxiom;

    /// Accepts the display names (`RA4⊆`) and ASCII spellings (`RA4sub`, `ra4-sup`, `PLright`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm: String = s
            .trim()
            .replace('⊆', "sub")
            .replace('⊇', "sup")
            .chars()
            .filter(|c| !matches!(c, '-' | '_'))
            .collect::<String>()
            .to_ascii_lowercase();
        AxiomId::ALL
            .into_iter()
            .find(|a| {
                a.name()
                    .replace('⊆', "sub")
                    .replace('⊇', "sup")
                    .to_ascii_lowercase()
                    == norm
            })
            .ok_or_else(|| UnknownAxiom(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AxiomStatus {
    Holds,
    Violated,
    /// The axiom mentions the identity and the calculus declares none.
    Inapplicable,
}

/// A counterexample: the arguments and the two sides that failed to relate.
///
/// For PL variants `lhs` is `(r⋄s) ∩ t˘` and `rhs` is `(s⋄t) ∩ r˘`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub args: Vec<Relation>,
    pub lhs: Relation,
    pub rhs: Relation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: AxiomId,
    pub status: AxiomStatus,
    pub tested: u64,
    pub violations: u64,
    /// First counterexamples in enumeration order.
    pub samples: Vec<Witness>,
    /// Whether general relations were sampled instead of enumerating base relations.
    pub general: bool,
}

impl AxiomResult {
    pub fn holds(&self) -> bool {
        self.status == AxiomStatus::Holds
    }

    /// Violations as a percentage of tested tuples.
    pub fn percent(&self) -> f64 {
        if self.tested == 0 {
            0.0
        } else {
            self.violations as f64 / self.tested as f64 * 100.0
        }
    }

    /// Whether a witness with exactly these base-relation arguments was recorded.
    pub fn has_witness(&self, calc: &CalculusSpec, args: &[&str]) -> bool {
        self.samples.iter().any(|w| {
            w.args.len() == args.len()
                && w.args
                    .iter()
                    .zip(args)
                    .all(|(r, name)| calc.index_of(name).is_some_and(|i| *r == calc.base(i)))
        })
    }
}

/// Algebra classes a calculus can be placed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraClass {
    Ra,
    WaAlgebra,
    SaAlgebra,
    Na,
    AssocBa,
    WeakAssocBa,
    SemiAssocBaConverseInvolution,
    BaWithDistributivity,
}

impl AlgebraClass {
    pub fn label(self) -> &'static str {
        match self {
            AlgebraClass::Ra => "RA",
            AlgebraClass::WaAlgebra => "WA-algebra",
            AlgebraClass::SaAlgebra => "SA-algebra",
            AlgebraClass::Na => "NA",
            AlgebraClass::AssocBa => "assoc-BA",
            AlgebraClass::WeakAssocBa => "weak-assoc-BA",
            AlgebraClass::SemiAssocBaConverseInvolution => "semi-assoc-BA-with-converse-involution",
            AlgebraClass::BaWithDistributivity => "BA-with-distributivity",
        }
    }
}

impl fmt::Display for AlgebraClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for AlgebraClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

#[derive(Debug, Clone)]
pub struct AnalyzeOptions {
    /// Axioms to report; `None` reports all of them.
    pub axioms: Option<Vec<AxiomId>>,
    /// Decide RA10 on sampled general relations instead of base relations.
    pub ra10_full: bool,
    pub seed: u64,
    /// Random relation pairs drawn for general RA10 when enumeration is too large.
    pub general_samples: usize,
    /// Counterexamples kept per axiom.
    pub max_witnesses: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            axioms: None,
            ra10_full: false,
            seed: crate::DEFAULT_SEED,
            general_samples: 10_000,
            max_witnesses: 10,
        }
    }
}

#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub calculus: String,
    pub results: Vec<AxiomResult>,
    pub classes: Vec<AlgebraClass>,
    /// Verdicts of every axiom, including ones not selected for `results`.
    all: Vec<(AxiomId, AxiomStatus)>,
}

impl AxiomReport {
    pub fn result(&self, axiom: AxiomId) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }

    pub fn status(&self, axiom: AxiomId) -> AxiomStatus {
        self.all
            .iter()
            .find(|(a, _)| *a == axiom)
            .map(|(_, s)| *s)
            .expect("every axiom is evaluated")
    }

    pub fn holds(&self, axiom: AxiomId) -> bool {
        self.status(axiom) == AxiomStatus::Holds
    }

    pub fn has_class(&self, class: AlgebraClass) -> bool {
        self.classes.contains(&class)
    }

    /// Reported axioms whose status is `Violated`.
    pub fn violated(&self) -> Vec<AxiomId> {
        self.results
            .iter()
            .filter(|r| r.status == AxiomStatus::Violated)
            .map(|r| r.axiom)
            .collect()
    }

    /// All reported axioms hold (inapplicable ones count as not holding).
    pub fn all_hold(&self) -> bool {
        self.results.iter().all(AxiomResult::holds)
    }
}

/// Evaluation context with the few relations every check needs.
struct Ctx<'a> {
    calc: &'a CalculusSpec,
    id: Option<&'a Relation>,
    universal: Relation,
}

impl<'a> Ctx<'a> {
    fn new(calc: &'a CalculusSpec) -> Self {
        Ctx {
            calc,
            id: calc.identity(),
            universal: calc.universal(),
        }
    }

    /// Both sides of the equation of `family` at `args`.
    fn sides(&self, family: Family, args: &[Relation]) -> (Relation, Relation) {
        let c = self.calc;
        match (family, args) {
            (Family::Ra1, [r, s]) => (r | s, s | r),
            (Family::Ra2, [r, s, t]) => (r | &(s | t), &(r | s) | t),
            (Family::Ra3, [r, s]) => {
                let nr = !r;
                (&!&(&nr | &!s) | &!&(&nr | s), r.clone())
            }
            (Family::Ra4, [r, s, t]) => (c.compose(r, &c.compose(s, t)), c.compose(&c.compose(r, s), t)),
            (Family::Ra5, [r, s, t]) => (c.compose(&(r | s), t), &c.compose(r, t) | &c.compose(s, t)),
            (Family::Ra5l, [r, s, t]) => (c.compose(r, &(s | t)), &c.compose(r, s) | &c.compose(r, t)),
            (Family::Ra6, [r]) => (c.compose(r, self.id.expect("identity")), r.clone()),
            (Family::Ra6l, [r]) => (c.compose(self.id.expect("identity"), r), r.clone()),
            (Family::Ra7, [r]) => (c.converse(&c.converse(r)), r.clone()),
            (Family::Ra8, [r, s]) => (c.converse(&(r | s)), &c.converse(r) | &c.converse(s)),
            (Family::Ra9, [r, s]) => (c.converse(&c.compose(r, s)), c.compose(&c.converse(s), &c.converse(r))),
            (Family::Ra10, [r, s]) => {
                let ns = !s;
                (&c.compose(&c.converse(r), &!&c.compose(r, s)) | &ns, ns)
            }
            (Family::Sa, [r]) => {
                let r1 = c.compose(r, &self.universal);
                (c.compose(&r1, &self.universal), r1)
            }
            (Family::Wa, [r]) => {
                let r1 = c.compose(&(r & self.id.expect("identity")), &self.universal);
                (c.compose(&r1, &self.universal), r1)
            }
            (Family::Pl, [r, s, t]) => (
                &c.compose(r, s) & &c.converse(t),
                &c.compose(s, t) & &c.converse(r),
            ),
            _ => unreachable!("argument count matches family arity"),
        }
    }

    fn satisfied(&self, axiom: AxiomId, lhs: &Relation, rhs: &Relation) -> bool {
        let family = axiom.family();
        match (family, axiom.side()) {
            (Family::Pl, Side::Both) => lhs.is_empty() == rhs.is_empty(),
            (Family::Pl, Side::Sub) => !lhs.is_empty() || rhs.is_empty(),
            (Family::Pl, Side::Sup) => !rhs.is_empty() || lhs.is_empty(),
            (_, Side::Both) => lhs == rhs,
            (_, Side::Sub) => lhs.is_subset(rhs),
            (_, Side::Sup) => lhs.is_superset(rhs),
        }
    }

}

#[derive(Default)]
struct Tally {
    tested: u64,
    violations: u64,
    samples: Vec<Witness>,
}

impl Tally {
    fn merge(mut self, other: Tally, cap: usize) -> Tally {
        self.tested += other.tested;
        self.violations += other.violations;
        let room = cap.saturating_sub(self.samples.len());
        self.samples.extend(other.samples.into_iter().take(room));
        self
    }
}

fn tally_tuples(ctx: &Ctx<'_>, axiom: AxiomId, tuples: impl Iterator<Item = Vec<Relation>>, cap: usize) -> Tally {
    let mut t = Tally::default();
    for args in tuples {
        t.tested += 1;
        let (lhs, rhs) = ctx.sides(axiom.family(), &args);
        if !ctx.satisfied(axiom, &lhs, &rhs) {
            t.violations += 1;
            if t.samples.len() < cap {
                t.samples.push(Witness { args, lhs, rhs });
            }
        }
    }
    t
}

fn check_base(ctx: &Ctx<'_>, axiom: AxiomId, cap: usize) -> Tally {
    let calc = ctx.calc;
    let n = calc.len();
    let arity = axiom.arity();
    // partition on the first argument; ordered collect keeps witnesses deterministic
    let per_outer: Vec<Tally> = (0..n)
        .into_par_iter()
        .map(|a| {
            let ra = calc.base(a);
            match arity {
                1 => tally_tuples(ctx, axiom, std::iter::once(vec![ra]), cap),
                2 => tally_tuples(ctx, axiom, (0..n).map(|b| vec![ra.clone(), calc.base(b)]), cap),
                _ => tally_tuples(
                    ctx,
                    axiom,
                    (0..n).flat_map(|b| (0..n).map(move |c| (b, c))).map(|(b, c)| {
                        vec![ra.clone(), calc.base(b), calc.base(c)]
                    }),
                    cap,
                ),
            }
        })
        .collect();
    per_outer
        .into_iter()
        .fold(Tally::default(), |acc, t| acc.merge(t, cap))
}

fn check_general_pairs(ctx: &Ctx<'_>, axiom: AxiomId, opts: &AnalyzeOptions) -> Tally {
    let n = ctx.calc.len();
    let cap = opts.max_witnesses;
    if n <= 8 {
        let all: Vec<Relation> = Relation::all(n).collect();
        let per_outer: Vec<Tally> = all
            .par_iter()
            .map(|r| tally_tuples(ctx, axiom, all.iter().map(|s| vec![r.clone(), s.clone()]), cap))
            .collect();
        return per_outer
            .into_iter()
            .fold(Tally::default(), |acc, t| acc.merge(t, cap));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let pairs: Vec<Vec<Relation>> = (0..opts.general_samples)
        .map(|_| vec![Relation::random(n, &mut rng), Relation::random(n, &mut rng)])
        .collect();
    tally_tuples(ctx, axiom, pairs.into_iter(), cap)
}

fn evaluate(ctx: &Ctx<'_>, axiom: AxiomId, opts: &AnalyzeOptions) -> AxiomResult {
    if axiom.needs_identity() && ctx.id.is_none() {
        return AxiomResult {
            axiom,
            status: AxiomStatus::Inapplicable,
            tested: 0,
            violations: 0,
            samples: Vec::new(),
            general: false,
        };
    }
    let general = opts.ra10_full && axiom.family() == Family::Ra10;
    let tally = if general {
        check_general_pairs(ctx, axiom, opts)
    } else {
        check_base(ctx, axiom, opts.max_witnesses)
    };
    AxiomResult {
        axiom,
        status: if tally.violations == 0 {
            AxiomStatus::Holds
        } else {
            AxiomStatus::Violated
        },
        tested: tally.tested,
        violations: tally.violations,
        samples: tally.samples,
        general,
    }
}

/// Decides one axiom on `calc` with default options.
pub fn check_axiom(calc: &CalculusSpec, axiom: AxiomId) -> AxiomResult {
    check_axiom_with(calc, axiom, &AnalyzeOptions::default())
}

pub fn check_axiom_with(calc: &CalculusSpec, axiom: AxiomId, opts: &AnalyzeOptions) -> AxiomResult {
    evaluate(&Ctx::new(calc), axiom, opts)
}

fn classify(status: impl Fn(AxiomId) -> bool) -> Vec<AlgebraClass> {
    use AxiomId::*;
    let all = |ids: &[AxiomId]| ids.iter().all(|&a| status(a));
    let ba_dist = all(&[Ra1, Ra2, Ra3, Ra5, Ra8]);
    let na = all(&[Ra1, Ra2, Ra3, Ra5, Ra6, Ra7, Ra8, Ra9, Ra10]);
    let mut classes = Vec::new();
    if na {
        if status(Ra4) {
            classes.push(AlgebraClass::Ra);
        }
        if status(Wa) {
            classes.push(AlgebraClass::WaAlgebra);
        }
        if status(Sa) {
            classes.push(AlgebraClass::SaAlgebra);
        }
        classes.push(AlgebraClass::Na);
    } else {
        if status(Ra4) {
            classes.push(AlgebraClass::AssocBa);
        }
        if status(Wa) {
            classes.push(AlgebraClass::WeakAssocBa);
        }
        if status(Sa) && status(Ra7) {
            classes.push(AlgebraClass::SemiAssocBaConverseInvolution);
        }
        if ba_dist {
            classes.push(AlgebraClass::BaWithDistributivity);
        }
    }
    classes
}

/// Evaluates every axiom and classifies the calculus.
pub fn analyze(calc: &CalculusSpec) -> AxiomReport {
    analyze_with(calc, &AnalyzeOptions::default())
}

pub fn analyze_with(calc: &CalculusSpec, opts: &AnalyzeOptions) -> AxiomReport {
    let ctx = Ctx::new(calc);
    let results: Vec<AxiomResult> = AxiomId::ALL.iter().map(|&a| evaluate(&ctx, a, opts)).collect();
    let all: Vec<(AxiomId, AxiomStatus)> = results.iter().map(|r| (r.axiom, r.status)).collect();
    let classes = classify(|a| all.iter().any(|&(b, s)| a == b && s == AxiomStatus::Holds));
    let results = match &opts.axioms {
        None => results,
        Some(sel) => results.into_iter().filter(|r| sel.contains(&r.axiom)).collect(),
    };
    AxiomReport {
        calculus: calc.name().to_string(),
        results,
        classes,
        all,
    }
}

/// Agreement between axiom pairs that theory says are equivalent under premises.
///
/// Each field is `None` when the premises fail, otherwise whether the two verdicts agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DerivedEquivalences {
    /// RA6 vs RA6l, given RA7 and RA9.
    pub identity_sides: Option<bool>,
    /// RA5 vs RA5l, given RA1, RA4 and RA6–RA9.
    pub distributivity_sides: Option<bool>,
    /// PL vs RA10, given RA1–RA3, RA5 and RA7–RA9.
    pub pl_ra10: Option<bool>,
}

impl DerivedEquivalences {
    pub fn consistent(&self) -> bool {
        [self.identity_sides, self.distributivity_sides, self.pl_ra10]
            .iter()
            .all(|v| v.unwrap_or(true))
    }
}

pub fn check_derived_equivalences(report: &AxiomReport) -> DerivedEquivalences {
    use AxiomId::*;
    let h = |a| report.holds(a);
    let when = |premise: bool, a: AxiomId, b: AxiomId| premise.then(|| h(a) == h(b));
    DerivedEquivalences {
        identity_sides: when(h(Ra7) && h(Ra9), Ra6, Ra6l),
        distributivity_sides: when(
            [Ra1, Ra4, Ra6, Ra7, Ra8, Ra9].into_iter().all(h),
            Ra5,
            Ra5l,
        ),
        pl_ra10: when([Ra1, Ra2, Ra3, Ra5, Ra7, Ra8, Ra9].into_iter().all(h), Pl, Ra10),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PlRa10Check {
    /// RA1–RA3, RA5 and RA7–RA9 hold, so the two verdicts must agree.
    pub premises_hold: bool,
    pub pl_holds: bool,
    pub ra10_holds: bool,
}

impl PlRa10Check {
    pub fn consistent(&self) -> bool {
        !self.premises_hold || self.pl_holds == self.ra10_holds
    }
}

pub fn check_pl_ra10_equivalence(calc: &CalculusSpec) -> PlRa10Check {
    use AxiomId::*;
    let ctx = Ctx::new(calc);
    let opts = AnalyzeOptions {
        max_witnesses: 0,
        ..AnalyzeOptions::default()
    };
    let h = |a| evaluate(&ctx, a, &opts).holds();
    PlRa10Check {
        premises_hold: [Ra1, Ra2, Ra3, Ra5, Ra7, Ra8, Ra9].into_iter().all(h),
        pl_holds: h(Pl),
        ra10_holds: h(Ra10),
    }
}

/// Enlarges composition cells until composition is associative.
///
/// For each triple where `r⋄(s⋄t)` and `(r⋄s)⋄t` differ, the missing base
/// relations are added to every cell feeding the smaller side. An empty
/// intermediate `r⋄s` (or `s⋄t`) is widened to the universal relation. Cells
/// only grow, so the loop ends at the latest when every cell is universal.
pub fn coarsen_to_associativity(calc: &CalculusSpec) -> CalculusSpec {
    let n = calc.len();
    let mut table = calc.composition_table().to_vec();
    let universal = calc.universal();
    loop {
        let mut changed = false;
        for r in 0..n {
            for s in 0..n {
                for t in 0..n {
                    let st = table[s * n + t].clone();
                    let rs = table[r * n + s].clone();
                    let mut left = calc.empty_relation();
                    for u in &st {
                        left.union_with(&table[r * n + u]);
                    }
                    let mut right = calc.empty_relation();
                    for u in &rs {
                        right.union_with(&table[u * n + t]);
                    }
                    if left == right {
                        continue;
                    }
                    changed = true;
                    let missing_right = &left - &right;
                    if !missing_right.is_empty() {
                        if rs.is_empty() {
                            table[r * n + s] = universal.clone();
                        } else {
                            for u in &rs {
                                table[u * n + t].union_with(&missing_right);
                            }
                        }
                    }
                    let missing_left = &right - &left;
                    if !missing_left.is_empty() {
                        if st.is_empty() {
                            table[s * n + t] = universal.clone();
                        } else {
                            for u in &st {
                                table[r * n + u].union_with(&missing_left);
                            }
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    calc.with_composition(table).expect("same shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_calculus;
    use AxiomId::*;

    #[test]
    fn names_parse_back() {
        for a in AxiomId::ALL {
            assert_eq!(a.name().parse::<AxiomId>().unwrap(), a);
        }
        assert_eq!("ra4sub".parse::<AxiomId>().unwrap(), Ra4Sub);
        assert_eq!("RA6l-sup".parse::<AxiomId>().unwrap(), Ra6lSup);
        assert_eq!("plright".parse::<AxiomId>().unwrap(), PlRight);
        assert!("RA11".parse::<AxiomId>().is_err());
        assert_eq!(AxiomId::one_sided().count(), 18);
    }

    #[test]
    fn allen_associative() {
        let allen = builtin_calculus("allen").unwrap();
        let r = check_axiom(&allen, Ra4);
        assert!(r.holds());
        assert_eq!(r.tested, 13 * 13 * 13);
    }

    #[test]
    fn toy_t2_pl_right_witness() {
        let t2 = builtin_calculus("toy-t2").unwrap();
        let r = check_axiom(&t2, PlRight);
        assert_eq!(r.status, AxiomStatus::Violated);
        assert!(r.has_witness(&t2, &["r1", "r4", "r1"]));
        let w = &r.samples[0];
        assert!(w.lhs.is_empty() && !w.rhs.is_empty());
        assert!(check_axiom(&t2, PlLeft).has_witness(&t2, &["r4", "r1", "r1"]));
    }

    #[test]
    fn ra1_is_structural() {
        for name in crate::catalog::builtin_names() {
            assert!(check_axiom(&builtin_calculus(name).unwrap(), Ra1).holds());
        }
    }

    #[test]
    fn toy_t1_involution() {
        let t1 = builtin_calculus("toy-t1").unwrap();
        let r = check_axiom(&t1, Ra7Sub);
        assert_eq!(r.status, AxiomStatus::Violated);
        assert!(r.has_witness(&t1, &["r1"]));
        assert!(r.samples[0].lhs.is_universal());
        assert!(!analyze(&t1).has_class(AlgebraClass::Na));
    }

    #[test]
    fn percent_denominator() {
        let t2 = builtin_calculus("toy-t2").unwrap();
        let r = check_axiom(&t2, Ra9);
        assert_eq!(r.tested, 16);
        assert!((r.percent() - r.violations as f64 / 16.0 * 100.0).abs() < 1e-12);
    }

    #[test]
    fn identity_axioms_inapplicable_without_identity() {
        let pc = builtin_calculus("point-calculus").unwrap();
        let no_id = CalculusSpec::new(
            "pc-no-id",
            pc.base_relations().iter().map(|b| b.name.clone()).collect(),
            None,
            pc.converse_table().to_vec(),
            pc.composition_table().to_vec(),
        )
        .unwrap();
        let report = analyze(&no_id);
        for a in [Ra6, Ra6Sub, Ra6Sup, Ra6l, Ra6lSub, Ra6lSup, Wa, WaSub, WaSup] {
            assert_eq!(report.status(a), AxiomStatus::Inapplicable);
        }
        assert!(report.holds(Ra4) && report.holds(Pl));
        assert!(!report.has_class(AlgebraClass::Na));
        assert!(report.has_class(AlgebraClass::AssocBa));
    }

    #[test]
    fn class_chain() {
        for name in crate::catalog::builtin_names() {
            let r = analyze(&builtin_calculus(name).unwrap());
            use AlgebraClass::*;
            let chain = [Ra, WaAlgebra, SaAlgebra, Na];
            for w in chain.windows(2) {
                assert!(!r.has_class(w[0]) || r.has_class(w[1]), "{name}: {:?}", r.classes);
            }
        }
    }

    #[test]
    fn selection_keeps_classification() {
        let allen = builtin_calculus("allen").unwrap();
        let opts = AnalyzeOptions {
            axioms: Some(vec![Ra4, Pl]),
            ..AnalyzeOptions::default()
        };
        let r = analyze_with(&allen, &opts);
        assert_eq!(r.results.len(), 2);
        assert!(r.has_class(AlgebraClass::Ra));
    }

    #[test]
    fn ra10_general() {
        let pc = builtin_calculus("point-calculus").unwrap();
        let opts = AnalyzeOptions {
            ra10_full: true,
            ..AnalyzeOptions::default()
        };
        let r = check_axiom_with(&pc, Ra10, &opts);
        assert!(r.holds() && r.general);
        assert_eq!(r.tested, 64);
        let allen = builtin_calculus("allen").unwrap();
        let opts = AnalyzeOptions {
            ra10_full: true,
            general_samples: 300,
            ..AnalyzeOptions::default()
        };
        let r = check_axiom_with(&allen, Ra10, &opts);
        assert!(r.holds());
        assert_eq!(r.tested, 300);
    }

    #[test]
    fn pl_ra10() {
        for name in ["allen", "rcc8", "point-calculus"] {
            let c = check_pl_ra10_equivalence(&builtin_calculus(name).unwrap());
            assert!(c.premises_hold && c.pl_holds && c.ra10_holds, "{name}");
        }
        let t2 = check_pl_ra10_equivalence(&builtin_calculus("toy-t2").unwrap());
        assert!(!t2.premises_hold && t2.consistent());
        assert!(!t2.pl_holds && !t2.ra10_holds);
    }

    #[test]
    fn coarsening() {
        let allen = builtin_calculus("allen").unwrap();
        assert_eq!(coarsen_to_associativity(&allen), allen);
        let t2 = builtin_calculus("toy-t2").unwrap();
        let c = coarsen_to_associativity(&t2);
        assert!(check_axiom(&c, Ra4).holds());
        for (a, b) in c.composition_table().iter().zip(t2.composition_table()) {
            assert!(a.is_superset(b));
        }
        assert_eq!(coarsen_to_associativity(&c), c);
        let all_universal = t2
            .with_composition(vec![t2.universal(); 16])
            .unwrap();
        assert_eq!(coarsen_to_associativity(&all_universal), all_universal);
    }

    #[test]
    fn witnesses_are_deterministic() {
        let t2 = builtin_calculus("toy-t2").unwrap();
        let a = analyze(&t2);
        let b = analyze(&t2);
        assert_eq!(a.results, b.results);
    }
}
