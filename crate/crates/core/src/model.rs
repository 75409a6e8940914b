//! Finite interpretations of a calculus and the checks run against them.
//!
//! A [`FiniteModel`] maps every base relation to a set of ordered pairs over
//! a small universe. All verdicts here are relative to that model: an
//! interpretation over a finite fragment says nothing about the intended
//! infinite domain.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::calculus::CalculusSpec;
use crate::error::ModelError;
use crate::relation::Relation;

/// A binary relation over `{0, …, m-1}` stored as one bit row per element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PairSet {
    m: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl PairSet {
    pub fn empty(m: usize) -> Self {
        let stride = m.div_ceil(64).max(1);
        PairSet {
            m,
            stride,
            bits: vec![0; stride * m],
        }
    }

    /// `{(u,u) | u ∈ Univ}`.
    pub fn diagonal(m: usize) -> Self {
        let mut p = PairSet::empty(m);
        for u in 0..m {
            p.insert(u, u);
        }
        p
    }

    /// `Univ × Univ`.
    pub fn full(m: usize) -> Self {
        let mut p = PairSet::empty(m);
        for a in 0..m {
            for b in 0..m {
                p.insert(a, b);
            }
        }
        p
    }

    pub fn universe_size(&self) -> usize {
        self.m
    }

    fn row(&self, a: usize) -> &[u64] {
        &self.bits[a * self.stride..(a + 1) * self.stride]
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        assert!(a < self.m && b < self.m, "pair ({a},{b}) outside universe");
        self.bits[a * self.stride + b / 64] |= 1 << (b % 64);
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        a < self.m && b < self.m && self.bits[a * self.stride + b / 64] >> (b % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Pairs in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.m).flat_map(move |a| (0..self.m).filter(move |&b| self.contains(a, b)).map(move |b| (a, b)))
    }

    pub fn union_with(&mut self, other: &PairSet) {
        for (x, y) in self.bits.iter_mut().zip(&other.bits) {
            *x |= y;
        }
    }

    pub fn intersects(&self, other: &PairSet) -> bool {
        self.bits.iter().zip(&other.bits).any(|(x, y)| x & y != 0)
    }

    pub fn is_subset(&self, other: &PairSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(x, y)| x & !y == 0)
    }

    /// `P˘ = {(b,a) | (a,b) ∈ P}`.
    pub fn transpose(&self) -> PairSet {
        let mut t = PairSet::empty(self.m);
        for (a, b) in self.iter() {
            t.insert(b, a);
        }
        t
    }

    /// Relational composition `P ∘ Q = {(a,c) | ∃b. (a,b) ∈ P ∧ (b,c) ∈ Q}`.
    pub fn compose(&self, other: &PairSet) -> PairSet {
        let mut out = PairSet::empty(self.m);
        for a in 0..self.m {
            for b in 0..self.m {
                if self.contains(a, b) {
                    let (dst, src) = (a * self.stride, other.row(b));
                    for (k, w) in src.iter().enumerate() {
                        out.bits[dst + k] |= w;
                    }
                }
            }
        }
        out
    }
}

impl std::fmt::Debug for PairSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// An explicit interpretation `φ` of the base relations over a finite universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModel {
    name: Option<String>,
    universe: Vec<String>,
    relation_names: Vec<String>,
    images: Vec<PairSet>,
}

impl FiniteModel {
    /// Builds a model from element names and, per base relation, pairs of element indices.
    pub fn new(
        name: Option<String>,
        universe: Vec<String>,
        relation_names: Vec<String>,
        pairs: Vec<Vec<(usize, usize)>>,
    ) -> Result<Self, ModelError> {
        if universe.is_empty() {
            return Err(ModelError::EmptyUniverse);
        }
        if pairs.len() != relation_names.len() {
            return Err(ModelError::RelationCountMismatch {
                calculus: name.clone().unwrap_or_default(),
                expected: relation_names.len(),
                model: pairs.len(),
            });
        }
        let m = universe.len();
        let mut images = Vec::with_capacity(pairs.len());
        for list in pairs {
            let mut p = PairSet::empty(m);
            for (a, b) in list {
                if a >= m || b >= m {
                    return Err(ModelError::NotJepd(format!(
                        "pair ({a},{b}) references an element outside the universe"
                    )));
                }
                p.insert(a, b);
            }
            images.push(p);
        }
        Ok(FiniteModel {
            name,
            universe,
            relation_names,
            images,
        })
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn universe_size(&self) -> usize {
        self.universe.len()
    }

    pub fn relation_names(&self) -> &[String] {
        &self.relation_names
    }

    pub fn relation_count(&self) -> usize {
        self.images.len()
    }

    pub fn image_of_base(&self, r: usize) -> &PairSet {
        &self.images[r]
    }

    /// `φ(R) = ⋃_{r∈R} φ(r)`.
    pub fn image(&self, r: &Relation) -> PairSet {
        let mut out = PairSet::empty(self.universe_size());
        for i in r {
            out.union_with(&self.images[i]);
        }
        out
    }

    /// Smallest relation `S` with `φ(S) ⊇ p` under JEPD: the base relations whose image meets `p`.
    pub fn cover(&self, p: &PairSet) -> Relation {
        let mut out = Relation::empty(self.relation_count());
        for (i, img) in self.images.iter().enumerate() {
            if img.intersects(p) {
                out.insert(i);
            }
        }
        out
    }

    /// The base relation holding between elements `a` and `b`, if any.
    pub fn relation_between(&self, a: usize, b: usize) -> Option<usize> {
        self.images.iter().position(|p| p.contains(a, b))
    }

    /// Fails unless the model interprets exactly the base relations of `calc`, in order.
    pub fn check_compatible(&self, calc: &CalculusSpec) -> Result<(), ModelError> {
        if self.relation_count() != calc.len() {
            return Err(ModelError::RelationCountMismatch {
                calculus: calc.name().to_string(),
                expected: calc.len(),
                model: self.relation_count(),
            });
        }
        for (i, name) in self.relation_names.iter().enumerate() {
            if name != calc.base_name(i) {
                return Err(ModelError::RelationNameMismatch {
                    index: i,
                    expected: calc.base_name(i).to_string(),
                    model: name.clone(),
                });
            }
        }
        Ok(())
    }
}

/// Structural properties of the interpreted base relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SchemeVerdict {
    pub jepd: bool,
    pub has_identity: bool,
    pub converse_closed: bool,
    pub serial: bool,
    pub non_empty_bases: bool,
}

impl SchemeVerdict {
    /// JEPD with non-empty images.
    pub fn abstract_partition_scheme(&self) -> bool {
        self.jepd && self.non_empty_bases
    }

    pub fn partition_scheme(&self) -> bool {
        self.abstract_partition_scheme() && self.has_identity && self.converse_closed
    }
}

pub fn check_scheme(model: &FiniteModel) -> SchemeVerdict {
    let m = model.universe_size();
    let images = &model.images;
    let mut total = PairSet::empty(m);
    let mut disjoint = true;
    for (i, p) in images.iter().enumerate() {
        if images[..i].iter().any(|q| q.intersects(p)) {
            disjoint = false;
        }
        total.union_with(p);
    }
    let diagonal = PairSet::diagonal(m);
    let converse_closed = images.iter().all(|p| {
        let t = p.transpose();
        images.contains(&t)
    });
    let serial = images
        .iter()
        .all(|p| (0..m).all(|a| (0..m).any(|b| p.contains(a, b))));
    SchemeVerdict {
        jepd: disjoint && total == PairSet::full(m),
        has_identity: images.contains(&diagonal),
        converse_closed,
        serial,
        non_empty_bases: images.iter().all(|p| !p.is_empty()),
    }
}

/// Fidelity of a table with respect to a model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Strength {
    None,
    Abstract,
    Weak,
    Strong,
}

impl std::fmt::Display for Strength {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Strength::None => "none",
            Strength::Abstract => "abstract",
            Strength::Weak => "weak",
            Strength::Strong => "strong",
        })
    }
}

/// Which levels hold for every table entry, evaluated independently.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Levels {
    #[serde(rename = "abstract")]
    pub abstract_: bool,
    pub weak: bool,
    pub strong: bool,
}

impl Levels {
    /// Highest level such that it and all levels below it hold.
    pub fn strength(&self) -> Strength {
        match (self.abstract_, self.weak, self.strong) {
            (false, _, _) => Strength::None,
            (true, false, _) => Strength::Abstract,
            (true, true, false) => Strength::Weak,
            (true, true, true) => Strength::Strong,
        }
    }

    /// `strong ⇒ weak ⇒ abstract`.
    pub fn monotone(&self) -> bool {
        (!self.strong || self.weak) && (!self.weak || self.abstract_)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StrengthVerdict {
    pub converse: Strength,
    pub composition: Strength,
    pub converse_levels: Levels,
    pub composition_levels: Levels,
}

fn levels(table: &Relation, minimal: &Relation, table_image: &PairSet, exact: &PairSet) -> Levels {
    Levels {
        abstract_: table.is_superset(minimal),
        weak: table == minimal,
        strong: table_image == exact,
    }
}

fn and(a: Levels, b: Levels) -> Levels {
    Levels {
        abstract_: a.abstract_ && b.abstract_,
        weak: a.weak && b.weak,
        strong: a.strong && b.strong,
    }
}

const ALL_LEVELS: Levels = Levels {
    abstract_: true,
    weak: true,
    strong: true,
};

fn converse_levels(calc: &CalculusSpec, model: &FiniteModel, r: &Relation) -> Levels {
    let exact = model.image(r).transpose();
    let table = calc.converse(r);
    levels(&table, &model.cover(&exact), &model.image(&table), &exact)
}

fn composition_levels(calc: &CalculusSpec, model: &FiniteModel, r: &Relation, s: &Relation) -> Levels {
    let exact = model.image(r).compose(&model.image(s));
    let table = calc.compose(r, s);
    levels(&table, &model.cover(&exact), &model.image(&table), &exact)
}

fn require_jepd(calc: &CalculusSpec, model: &FiniteModel) -> Result<SchemeVerdict, ModelError> {
    model.check_compatible(calc)?;
    let scheme = check_scheme(model);
    if !scheme.jepd {
        return Err(ModelError::NotJepd(
            "base relation images overlap or do not cover Univ × Univ".into(),
        ));
    }
    Ok(scheme)
}

/// Converse and composition strength of `calc`'s tables with respect to `model`.
pub fn classify_strength(calc: &CalculusSpec, model: &FiniteModel) -> Result<StrengthVerdict, ModelError> {
    require_jepd(calc, model)?;
    let n = calc.len();
    let conv = (0..n).fold(ALL_LEVELS, |acc, r| and(acc, converse_levels(calc, model, &calc.base(r))));
    let comp = (0..n)
        .flat_map(|r| (0..n).map(move |s| (r, s)))
        .fold(ALL_LEVELS, |acc, (r, s)| {
            and(acc, composition_levels(calc, model, &calc.base(r), &calc.base(s)))
        });
    Ok(StrengthVerdict {
        converse: conv.strength(),
        composition: comp.strength(),
        converse_levels: conv,
        composition_levels: comp,
    })
}

/// Builds the weak converse and composition tables induced by `model`.
///
/// The identity is set when some base relation is interpreted as exactly the diagonal.
pub fn derive_tables(model: &FiniteModel, name: &str) -> Result<CalculusSpec, ModelError> {
    let scheme = check_scheme(model);
    if !scheme.jepd {
        return Err(ModelError::NotJepd(
            "base relation images overlap or do not cover Univ × Univ".into(),
        ));
    }
    if let Some(i) = model.images.iter().position(PairSet::is_empty) {
        return Err(ModelError::EmptyBaseRelation(model.relation_names[i].clone()));
    }
    let n = model.relation_count();
    let diagonal = PairSet::diagonal(model.universe_size());
    let identity = model
        .images
        .iter()
        .position(|p| *p == diagonal)
        .map(|i| Relation::singleton(n, i));
    let converse = model.images.iter().map(|p| model.cover(&p.transpose())).collect();
    let mut composition = Vec::with_capacity(n * n);
    for p in &model.images {
        for q in &model.images {
            composition.push(model.cover(&p.compose(q)));
        }
    }
    CalculusSpec::new(
        name,
        model.relation_names.clone(),
        identity,
        converse,
        composition,
    )
    .map_err(|e| ModelError::NotJepd(e.to_string()))
}

/// Outcome of checking table strength on general (non-base) relations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionCheck {
    pub holds: bool,
    pub exhaustive: bool,
    /// Number of `(R, S)` pairs tested.
    pub tested: usize,
    /// First pair on which a verified level failed.
    pub witness: Option<(Relation, Relation)>,
}

fn covers(verified: Strength, got: Levels) -> bool {
    match verified {
        Strength::None => true,
        Strength::Abstract => got.abstract_,
        Strength::Weak => got.abstract_ && got.weak,
        Strength::Strong => got.abstract_ && got.weak && got.strong,
    }
}

/// Checks that the strength verified on base relations carries over to
/// arbitrary relations. Exhaustive when `2^|Rel| <= 256`, otherwise `samples`
/// random pairs drawn from `seed`.
pub fn check_general_extension(
    calc: &CalculusSpec,
    model: &FiniteModel,
    samples: usize,
    seed: u64,
) -> Result<ExtensionCheck, ModelError> {
    let verdict = classify_strength(calc, model)?;
    let n = calc.len();
    let check = |r: &Relation, s: &Relation| {
        covers(verdict.converse, converse_levels(calc, model, r))
            && covers(verdict.composition, composition_levels(calc, model, r, s))
    };
    let mut tested = 0;
    if n <= 8 {
        let all: Vec<Relation> = Relation::all(n).collect();
        for r in &all {
            for s in &all {
                tested += 1;
                if !check(r, s) {
                    return Ok(ExtensionCheck {
                        holds: false,
                        exhaustive: true,
                        tested,
                        witness: Some((r.clone(), s.clone())),
                    });
                }
            }
        }
        return Ok(ExtensionCheck {
            holds: true,
            exhaustive: true,
            tested,
            witness: None,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let r = Relation::random(n, &mut rng);
        let s = Relation::random(n, &mut rng);
        tested += 1;
        if !check(&r, &s) {
            return Ok(ExtensionCheck {
                holds: false,
                exhaustive: false,
                tested,
                witness: Some((r, s)),
            });
        }
    }
    Ok(ExtensionCheck {
        holds: true,
        exhaustive: false,
        tested,
        witness: None,
    })
}

/// Whether `φ` extended to all relations is injective.
///
/// That is the case exactly when every base relation owns a pair that no
/// other base relation's image contains.
pub fn check_injective_interpretation(model: &FiniteModel) -> bool {
    let m = model.universe_size();
    (0..model.relation_count()).all(|i| {
        let mut others = PairSet::empty(m);
        for (j, p) in model.images.iter().enumerate() {
            if j != i {
                others.union_with(p);
            }
        }
        !model.images[i].is_subset(&others)
    })
}

/// The three properties that should coincide for an abstract converse, evaluated separately.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InvolutionCheck {
    /// Precondition: the converse table is at least abstract.
    pub abstract_converse: bool,
    pub strong_converse: bool,
    pub involution_on_base: bool,
    pub involution_on_all: bool,
    /// Whether all relations were enumerated for `involution_on_all`.
    pub exhaustive: bool,
}

impl InvolutionCheck {
    /// The three properties agree (vacuously true when the precondition fails).
    pub fn consistent(&self) -> bool {
        !self.abstract_converse
            || (self.strong_converse == self.involution_on_base
                && self.involution_on_base == self.involution_on_all)
    }
}

pub fn check_converse_involution(calc: &CalculusSpec, model: &FiniteModel, seed: u64) -> Result<InvolutionCheck, ModelError> {
    let verdict = classify_strength(calc, model)?;
    let n = calc.len();
    let involutive = |r: &Relation| calc.converse(&calc.converse(r)) == *r;
    let involution_on_base = (0..n).all(|i| involutive(&calc.base(i)));
    let exhaustive = n <= 16;
    let involution_on_all = if exhaustive {
        Relation::all(n).all(|r| involutive(&r))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..10_000).all(|_| involutive(&Relation::random(n, &mut rng)))
            && (0..n).all(|i| involutive(&calc.base(i)))
    };
    Ok(InvolutionCheck {
        abstract_converse: verdict.converse_levels.abstract_,
        strong_converse: verdict.converse_levels.strong,
        involution_on_base,
        involution_on_all,
        exhaustive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin_model, builtin_names_with_model};

    fn single(name: &str, pairs: Vec<Vec<(usize, usize)>>, universe: usize, names: &[&str]) -> FiniteModel {
        FiniteModel::new(
            Some(name.into()),
            (0..universe).map(|u| u.to_string()).collect(),
            names.iter().map(|s| s.to_string()).collect(),
            pairs,
        )
        .unwrap()
    }

    #[test]
    fn pair_set_ops() {
        let mut p = PairSet::empty(3);
        p.insert(0, 1);
        p.insert(1, 2);
        let c = p.compose(&p);
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![(0, 2)]);
        assert_eq!(p.transpose().iter().collect::<Vec<_>>(), vec![(1, 0), (2, 1)]);
        assert_eq!(PairSet::full(3).len(), 9);
        let wide = PairSet::full(70);
        assert_eq!(wide.compose(&wide), wide);
        assert_eq!(PairSet::diagonal(70).compose(&wide), wide);
    }

    #[test]
    fn point_calculus_scheme() {
        let (_, m) = builtin_model("point-calculus").unwrap();
        let v = check_scheme(&m);
        assert!(v.jepd && v.partition_scheme());
        assert!(!v.serial);
    }

    #[test]
    fn toy_t1_scheme() {
        let (_, m) = builtin_model("toy-t1").unwrap();
        let v = check_scheme(&m);
        assert!(v.jepd);
        assert!(!v.has_identity);
        assert!(!v.partition_scheme());
    }

    #[test]
    fn overlapping_model_is_not_jepd() {
        let m = single("bad", vec![vec![(0, 0), (0, 1)], vec![(0, 1), (1, 0), (1, 1)]], 2, &["a", "b"]);
        assert!(!check_scheme(&m).jepd);
    }

    #[test]
    fn empty_universe_rejected() {
        assert_eq!(
            FiniteModel::new(None, vec![], vec!["a".into()], vec![vec![]]),
            Err(ModelError::EmptyUniverse)
        );
    }

    #[test]
    fn strengths_of_toys() {
        let (c1, m1) = builtin_model("toy-t1").unwrap();
        let v1 = classify_strength(&c1, &m1).unwrap();
        assert_eq!(v1.converse, Strength::Weak);
        let (c2, m2) = builtin_model("toy-t2").unwrap();
        let v2 = classify_strength(&c2, &m2).unwrap();
        assert_eq!(v2.converse, Strength::Strong);
        assert_eq!(v2.composition, Strength::Abstract);
    }

    #[test]
    fn missing_converse_member_is_not_abstract() {
        let (c, m) = builtin_model("point-calculus").unwrap();
        let mut conv = c.converse_table().to_vec();
        conv[0] = c.empty_relation();
        let broken = CalculusSpec::new(
            "broken",
            c.base_relations().iter().map(|b| b.name.clone()).collect(),
            c.identity().cloned(),
            conv,
            c.composition_table().to_vec(),
        )
        .unwrap();
        assert_eq!(classify_strength(&broken, &m).unwrap().converse, Strength::None);
    }

    #[test]
    fn derived_point_calculus_over_three_points() {
        let m = single(
            "pc-0-2",
            vec![
                vec![(0, 1), (0, 2), (1, 2)],
                vec![(0, 0), (1, 1), (2, 2)],
                vec![(1, 0), (2, 0), (2, 1)],
            ],
            3,
            &["<", "=", ">"],
        );
        let d = derive_tables(&m, "derived").unwrap();
        assert!(d.compose_base(0, 2).is_universal());
        assert_eq!(d.identity(), Some(&d.base(1)));
    }

    #[test]
    fn derived_toy_t2_is_minimal() {
        let (c, m) = builtin_model("toy-t2").unwrap();
        let d = derive_tables(&m, "d").unwrap();
        let (r4, r1) = (c.index_of("r4").unwrap(), c.index_of("r1").unwrap());
        assert_eq!(d.compose_base(r4, r1), &c.base(r4));
        for (a, b) in d.composition_table().iter().zip(c.composition_table()) {
            assert!(a.is_subset(b));
        }
    }

    #[test]
    fn identity_only_model() {
        let m = single("one", vec![vec![(0, 0)]], 1, &["r"]);
        let d = derive_tables(&m, "one").unwrap();
        assert_eq!(d.compose_base(0, 0), &d.base(0));
        assert_eq!(d.converse_of_base(0), &d.base(0));
    }

    #[test]
    fn derived_tables_are_weak() {
        for name in builtin_names_with_model() {
            let (_, m) = builtin_model(name).unwrap();
            let d = derive_tables(&m, name).unwrap();
            let v = classify_strength(&d, &m).unwrap();
            assert!(v.converse >= Strength::Weak && v.composition >= Strength::Weak, "{name}");
        }
    }

    #[test]
    fn strength_levels_are_monotone() {
        for name in builtin_names_with_model() {
            let (c, m) = builtin_model(name).unwrap();
            let v = classify_strength(&c, &m).unwrap();
            assert!(v.converse_levels.monotone() && v.composition_levels.monotone(), "{name}");
        }
    }

    #[test]
    fn general_extension() {
        let (c, m) = builtin_model("toy-t2").unwrap();
        let e = check_general_extension(&c, &m, 0, 1).unwrap();
        assert!(e.holds && e.exhaustive);
        assert_eq!(e.tested, 256);
        let (pc, pm) = builtin_model("point-calculus").unwrap();
        assert!(check_general_extension(&pc, &pm, 0, 1).unwrap().holds);
        let le = pc.relation(&["<", "="]).unwrap();
        assert_eq!(pc.converse(&le), pm.cover(&pm.image(&le).transpose()));
        let (ac, am) = builtin_model("allen").unwrap();
        let e = check_general_extension(&ac, &am, 500, 7).unwrap();
        assert!(e.holds && !e.exhaustive);
    }

    #[test]
    fn injective_interpretation() {
        let (_, m) = builtin_model("toy-t1").unwrap();
        assert!(check_injective_interpretation(&m));
        let empty = single("e", vec![vec![(0, 0)], vec![]], 1, &["a", "b"]);
        assert!(!check_injective_interpretation(&empty));
        let one = single("u", vec![vec![(0, 0), (0, 1), (1, 0), (1, 1)]], 2, &["u"]);
        assert!(check_injective_interpretation(&one));
    }

    #[test]
    fn converse_involution_on_toys() {
        let (c2, m2) = builtin_model("toy-t2").unwrap();
        let l2 = check_converse_involution(&c2, &m2, 1).unwrap();
        assert!(l2.strong_converse && l2.involution_on_all && l2.consistent());
        let (c1, m1) = builtin_model("toy-t1").unwrap();
        let l1 = check_converse_involution(&c1, &m1, 1).unwrap();
        assert!(!l1.strong_converse && !l1.involution_on_base && l1.consistent());
    }
}
