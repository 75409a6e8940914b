use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error("relations belong to calculi of different size ({left} vs {right} base relations)")]
    ArityMismatch { left: usize, right: usize },
    #[error("base relation index {index} out of range for {arity} base relations")]
    IndexOutOfRange { index: usize, arity: usize },
    #[error("composition chain is empty")]
    EmptyChain,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalculusError {
    #[error("calculus has no base relations")]
    NoBaseRelations,
    #[error("too many base relations ({0}, at most 1024 supported)")]
    TooManyBaseRelations(usize),
    #[error("duplicate relation `{0}`")]
    DuplicateRelation(String),
    #[error("invalid relation name `{0}`")]
    InvalidName(String),
    #[error("unknown relation `{0}`")]
    UnknownRelation(String),
    #[error("converse table has {found} rows, expected {expected}")]
    ConverseTableSize { expected: usize, found: usize },
    #[error("composition table has {found} cells, expected {expected}")]
    CompositionTableSize { expected: usize, found: usize },
    #[error("identity relation is empty")]
    EmptyIdentity,
    #[error(transparent)]
    Relation(#[from] RelationError),
}

/// What went wrong while reading a definition, model or network file.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unknown relation `{0}`")]
    UnknownRelation(String),
    #[error("duplicate relation `{0}`")]
    DuplicateRelation(String),
    #[error("`{0}` is a reserved word and cannot name a relation")]
    ReservedName(String),
    #[error("relation list is empty")]
    EmptyRelations,
    #[error("missing converse entry for `{0}`")]
    MissingConverse(String),
    #[error("missing composition entry for `{0}` `{1}`")]
    MissingComposition(String, String),
    #[error("duplicate converse entry for `{0}`")]
    DuplicateConverse(String),
    #[error("duplicate composition entry for `{0}` `{1}`")]
    DuplicateComposition(String, String),
    #[error("missing `{0}` declaration")]
    MissingDeclaration(&'static str),
    #[error("duplicate `{0}` declaration")]
    DuplicateDeclaration(&'static str),
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: String, found: String },
    #[error("empty universe")]
    EmptyUniverse,
    #[error("duplicate universe element `{0}`")]
    DuplicateElement(String),
    #[error("unknown universe element `{0}`")]
    UnknownElement(String),
    #[error("no pair set given for relation `{0}`")]
    MissingPairSet(String),
    #[error("duplicate pair set for relation `{0}`")]
    DuplicatePairSet(String),
    #[error("variable {index} out of range for a network of {n} variables")]
    VariableOutOfRange { index: usize, n: usize },
    #[error("unterminated string")]
    UnterminatedString,
    #[error("{0}")]
    Invalid(String),
}

/// A parse failure with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.kind)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("model has {model} relations but calculus `{calculus}` has {expected}")]
    RelationCountMismatch {
        calculus: String,
        expected: usize,
        model: usize,
    },
    #[error("model relation `{model}` does not match calculus relation `{expected}` at position {index}")]
    RelationNameMismatch {
        index: usize,
        expected: String,
        model: String,
    },
    #[error("model is not JEPD: {0}")]
    NotJepd(String),
    #[error("base relation `{0}` has an empty interpretation")]
    EmptyBaseRelation(String),
    #[error("empty universe")]
    EmptyUniverse,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosureError {
    #[error("network is over {network} base relations but calculus has {calculus}")]
    ArityMismatch { network: usize, calculus: usize },
    #[error("brute-force search needs {valuations} valuations, above the limit of {limit}")]
    Capacity { valuations: u128, limit: u128 },
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricsError {
    #[error("chain distribution at k = {k} has more than {cap} distinct relations")]
    Capacity { k: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown builtin `{name}` (available: {available})")]
    Unknown { name: String, available: String },
    #[error("calculus `{0}` has no bundled model")]
    NoModel(String),
    #[error("builtin `{name}` failed to parse: {source}")]
    Corrupt { name: String, source: ParseError },
}

/// Umbrella error for callers that do not care which stage failed.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Relation(#[from] RelationError),
    #[error(transparent)]
    Calculus(#[from] CalculusError),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Closure(#[from] ClosureError),
    #[error(transparent)]
    Metrics(#[from] MetricsError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}
