//! Calculus definitions: base relations plus converse and composition tables.
//!
//! Converse and composition of general relations are the unions of the table
//! entries of their members, so a calculus is fully determined by its
//! per-base-relation tables.

use std::collections::HashMap;

use crate::error::{CalculusError, RelationError};
use crate::relation::{BaseRelation, Relation, MAX_BASE_RELATIONS};

/// Words that cannot be used as relation names in definition files.
pub const RESERVED_WORDS: &[&str] = &[
    "calculus",
    "relations",
    "identity",
    "converse",
    "composition",
    "none",
];

/// Fold direction for [`CalculusSpec::compose_chain`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fold {
    /// `((r ⋄ s) ⋄ t) ⋄ …`
    #[default]
    Left,
    /// `r ⋄ (s ⋄ (t ⋄ …))`
    Right,
}

/// Returns `true` when `name` may be used as a relation token.
pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && !RESERVED_WORDS.contains(&name)
        && !name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '(' | ')' | ',' | '"' | '#'))
}

/// A binary qualitative calculus given by its tables.
///
/// Immutable once built; share it freely between threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CalculusSpec {
    name: String,
    base: Vec<BaseRelation>,
    index: HashMap<String, usize>,
    identity: Option<Relation>,
    converse: Vec<Relation>,
    // row-major: composition[r * n + s] = r ⋄ s
    composition: Vec<Relation>,
}

impl CalculusSpec {
    pub fn new(
        name: impl Into<String>,
        names: Vec<String>,
        identity: Option<Relation>,
        converse: Vec<Relation>,
        composition: Vec<Relation>,
    ) -> Result<Self, CalculusError> {
        let n = names.len();
        if n == 0 {
            return Err(CalculusError::NoBaseRelations);
        }
        if n > MAX_BASE_RELATIONS {
            return Err(CalculusError::TooManyBaseRelations(n));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, name) in names.iter().enumerate() {
            if !is_valid_name(name) {
                return Err(CalculusError::InvalidName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(CalculusError::DuplicateRelation(name.clone()));
            }
        }
        if converse.len() != n {
            return Err(CalculusError::ConverseTableSize {
                expected: n,
                found: converse.len(),
            });
        }
        if composition.len() != n * n {
            return Err(CalculusError::CompositionTableSize {
                expected: n * n,
                found: composition.len(),
            });
        }
        for r in converse.iter().chain(&composition).chain(&identity) {
            if r.arity() != n {
                return Err(RelationError::ArityMismatch {
                    left: n,
                    right: r.arity(),
                }
                .into());
            }
        }
        if identity.as_ref().is_some_and(Relation::is_empty) {
            return Err(CalculusError::EmptyIdentity);
        }
        let base = names
            .into_iter()
            .enumerate()
            .map(|(index, name)| BaseRelation { index, name })
            .collect();
        Ok(CalculusSpec {
            name: name.into(),
            base,
            index,
            identity,
            converse,
            composition,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of base relations `|Rel|`.
    pub fn len(&self) -> usize {
        self.base.len()
    }

    pub fn is_empty(&self) -> bool {
        self.base.is_empty()
    }

    pub fn base_relations(&self) -> &[BaseRelation] {
        &self.base
    }

    pub fn base_name(&self, index: usize) -> &str {
        &self.base[index].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn identity(&self) -> Option<&Relation> {
        self.identity.as_ref()
    }

    pub fn universal(&self) -> Relation {
        Relation::universal(self.len())
    }

    pub fn empty_relation(&self) -> Relation {
        Relation::empty(self.len())
    }

    pub fn base(&self, index: usize) -> Relation {
        Relation::singleton(self.len(), index)
    }

    /// Relation made of the named base relations.
    pub fn relation<S: AsRef<str>>(&self, names: &[S]) -> Result<Relation, CalculusError> {
        let mut r = self.empty_relation();
        for name in names {
            let name = name.as_ref();
            let i = self
                .index_of(name)
                .ok_or_else(|| CalculusError::UnknownRelation(name.to_string()))?;
            r.insert(i);
        }
        Ok(r)
    }

    /// Parenthesised token list, e.g. `(< =)`; `()` for the empty relation.
    pub fn format_relation(&self, r: &Relation) -> String {
        let names: Vec<&str> = r.iter().map(|i| self.base_name(i)).collect();
        format!("({})", names.join(" "))
    }

    pub fn converse_table(&self) -> &[Relation] {
        &self.converse
    }

    pub fn composition_table(&self) -> &[Relation] {
        &self.composition
    }

    /// Table entry `r˘` for a base relation.
    pub fn converse_of_base(&self, r: usize) -> &Relation {
        &self.converse[r]
    }

    /// Table entry `r ⋄ s` for base relations.
    pub fn compose_base(&self, r: usize, s: usize) -> &Relation {
        &self.composition[r * self.len() + s]
    }

    /// `R˘ = ⋃_{r∈R} r˘`. Panics on arity mismatch; see [`Self::try_converse`].
    pub fn converse(&self, r: &Relation) -> Relation {
        let mut out = self.empty_relation();
        for i in r {
            out.union_with(&self.converse[i]);
        }
        out
    }

    /// `R ⋄ S = ⋃_{r∈R} ⋃_{s∈S} r ⋄ s`. Panics on arity mismatch; see [`Self::try_compose`].
    pub fn compose(&self, r: &Relation, s: &Relation) -> Relation {
        let n = self.len();
        let mut out = self.empty_relation();
        if s.is_empty() {
            return out;
        }
        for i in r {
            let row = &self.composition[i * n..(i + 1) * n];
            for j in s {
                out.union_with(&row[j]);
            }
        }
        out
    }

    fn check_arity(&self, r: &Relation) -> Result<(), RelationError> {
        if r.arity() == self.len() {
            Ok(())
        } else {
            Err(RelationError::ArityMismatch {
                left: self.len(),
                right: r.arity(),
            })
        }
    }

    pub fn try_converse(&self, r: &Relation) -> Result<Relation, RelationError> {
        self.check_arity(r)?;
        Ok(self.converse(r))
    }

    pub fn try_compose(&self, r: &Relation, s: &Relation) -> Result<Relation, RelationError> {
        self.check_arity(r)?;
        self.check_arity(s)?;
        Ok(self.compose(r, s))
    }

    /// Composes a chain of relations in the given fold order.
    pub fn compose_chain(&self, chain: &[Relation], fold: Fold) -> Result<Relation, RelationError> {
        let (first, rest) = chain.split_first().ok_or(RelationError::EmptyChain)?;
        for r in chain {
            self.check_arity(r)?;
        }
        Ok(match fold {
            Fold::Left => rest
                .iter()
                .fold(first.clone(), |acc, r| self.compose(&acc, r)),
            Fold::Right => {
                let (last, init) = chain.split_last().expect("non-empty");
                init.iter()
                    .rev()
                    .fold(last.clone(), |acc, r| self.compose(r, &acc))
            }
        })
    }

    /// Same calculus with a replaced composition table.
    pub fn with_composition(&self, composition: Vec<Relation>) -> Result<Self, CalculusError> {
        CalculusSpec::new(
            self.name.clone(),
            self.base.iter().map(|b| b.name.clone()).collect(),
            self.identity.clone(),
            self.converse.clone(),
            composition,
        )
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtin_calculus;

    fn pc() -> CalculusSpec {
        builtin_calculus("point-calculus").unwrap()
    }

    #[test]
    fn point_calculus_converse_and_composition() {
        let pc = pc();
        let lt = pc.relation(&["<"]).unwrap();
        assert_eq!(pc.converse(&lt), pc.relation(&[">"]).unwrap());
        assert_eq!(pc.compose(&lt, &lt), lt);
        assert!(pc.converse(&pc.empty_relation()).is_empty());
        assert!(pc.compose(&pc.universal(), &pc.empty_relation()).is_empty());
        assert!(pc.compose(&pc.empty_relation(), &pc.universal()).is_empty());
    }

    #[test]
    fn toy_tables() {
        let t1 = builtin_calculus("toy-t1").unwrap();
        assert_eq!(t1.converse(&t1.base(0)), t1.universal());

        let t2 = builtin_calculus("toy-t2").unwrap();
        let r = |n: &str| t2.relation(&[n]).unwrap();
        assert_eq!(
            t2.compose(&r("r3"), &r("r4")),
            t2.relation(&["r1", "r4"]).unwrap()
        );
        let chain = [r("r1"), r("r3"), r("r4")];
        assert_eq!(
            t2.compose_chain(&chain, Fold::Left).unwrap(),
            t2.relation(&["r1", "r4"]).unwrap()
        );
        assert_eq!(t2.compose_chain(&chain, Fold::Right).unwrap(), r("r1"));
    }

    #[test]
    fn chain_edge_cases() {
        let pc = pc();
        let r = pc.relation(&["<", "="]).unwrap();
        assert_eq!(pc.compose_chain(std::slice::from_ref(&r), Fold::Left).unwrap(), r);
        assert_eq!(pc.compose_chain(std::slice::from_ref(&r), Fold::Right).unwrap(), r);
        assert_eq!(
            pc.compose_chain(&[], Fold::Left),
            Err(RelationError::EmptyChain)
        );
        assert!(pc
            .compose_chain(&[r, Relation::universal(4)], Fold::Left)
            .is_err());
    }

    #[test]
    fn arity_checked_variants() {
        let pc = pc();
        let wrong = Relation::universal(4);
        assert!(pc.try_converse(&wrong).is_err());
        assert!(pc.try_compose(&pc.universal(), &wrong).is_err());
    }

    #[test]
    fn construction_errors() {
        let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        let one = Relation::universal(1);
        assert_eq!(
            CalculusSpec::new("x", vec![], None, vec![], vec![]),
            Err(CalculusError::NoBaseRelations)
        );
        assert!(matches!(
            CalculusSpec::new("x", names(&["a", "a"]), None, vec![], vec![]),
            Err(CalculusError::DuplicateRelation(_))
        ));
        assert!(matches!(
            CalculusSpec::new("x", names(&["a b"]), None, vec![one.clone()], vec![one.clone()]),
            Err(CalculusError::InvalidName(_))
        ));
        assert!(matches!(
            CalculusSpec::new("x", names(&["a"]), None, vec![], vec![one.clone()]),
            Err(CalculusError::ConverseTableSize { .. })
        ));
        assert_eq!(
            CalculusSpec::new(
                "x",
                names(&["a"]),
                Some(Relation::empty(1)),
                vec![one.clone()],
                vec![one]
            ),
            Err(CalculusError::EmptyIdentity)
        );
    }
}
