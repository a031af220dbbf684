use std::fmt;

use thiserror::Error;

/// The quantale law that a candidate multiplication table broke.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    Associativity,
    Commutativity,
    /// `x·(y ∨ z) = x·y ∨ x·z`
    Distributivity,
    /// `x·0 = 0`, distributivity over the empty join
    EmptyJoin,
    /// `x·1 = x`
    Unit,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::Associativity => "associativity",
            Axiom::Commutativity => "commutativity",
            Axiom::Distributivity => "distributivity",
            Axiom::EmptyJoin => "empty-join distributivity",
            Axiom::Unit => "unit",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("empty carrier")]
    Empty,
    #[error("carrier of {n} elements exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("{table} table row {row}: expected {expected} entries, found {found}")]
    DimensionMismatch { table: &'static str, row: usize, expected: usize, found: usize },
    #[error("mul[{row}][{col}] = {value} is not an element index (n = {n})")]
    IndexOutOfRange { row: usize, col: usize, value: usize, n: usize },
    #[error("order is not a partial order: {property} fails at {witness:?}")]
    NotAPartialOrder { property: &'static str, witness: Vec<usize> },
    #[error("not a lattice: no {missing} for ({x}, {y})")]
    NotALattice { x: usize, y: usize, missing: &'static str },
    #[error("{axiom} fails at {witness:?}")]
    AxiomViolation { axiom: Axiom, witness: [usize; 3] },
    #[error("powers start at exponent 1")]
    ZeroExponent,
    #[error("enumeration bound {requested} exceeds the limit {limit}")]
    BoundExceeded { requested: usize, limit: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassError {
    #[error("radical formulas disagree at element {x}: meet of primes = {by_primes}, join of nilpotent-over = {by_powers}")]
    DefinitionMismatch { x: usize, by_primes: usize, by_powers: usize },
    #[error("unknown element class `{0}`")]
    UnknownClass(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TopologyError {
    #[error("closed-set family exceeds {limit} sets")]
    FamilyTooLarge { limit: usize },
    #[error("set {0} is not closed")]
    NotClosed(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error("map has {found} entries for a source of {expected} elements")]
    WrongLength { expected: usize, found: usize },
    #[error("map sends {x} to {y}, outside the target carrier")]
    OutOfRange { x: usize, y: usize },
    #[error("homomorphism law `{law}` fails at {witness:?}")]
    HomViolation { law: &'static str, witness: Vec<usize> },
    #[error("contraction of target element {y} leaves the class")]
    ContractionPropertyFails { y: usize },
    #[error("homomorphism is not surjective: {y} has no preimage")]
    NotSurjective { y: usize },
    #[error(transparent)]
    Topology(#[from] TopologyError),
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),
    #[error("bad corpus spec `{0}`")]
    BadCorpus(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Class(#[from] ClassError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Hom(#[from] HomError),
}

/// A rejected `.lat` or hom file, always positioned (1-based line and column).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("{line}:{col}: syntax error, expected {expected}")]
    SyntaxError { line: usize, col: usize, expected: String },
    #[error("{line}:{col}: dimension mismatch, expected {expected} entries, found {found}")]
    DimensionMismatch { line: usize, col: usize, expected: usize, found: usize },
    #[error("{line}:{col}: index {value} out of range (n = {n})")]
    IndexOutOfRange { line: usize, col: usize, value: usize, n: usize },
    #[error("{line}:{col}: duplicate section {section}")]
    DuplicateSection { line: usize, col: usize, section: String },
}

impl ParseError {
    pub fn position(&self) -> (usize, usize) {
        match *self {
            ParseError::SyntaxError { line, col, .. }
            | ParseError::DimensionMismatch { line, col, .. }
            | ParseError::IndexOutOfRange { line, col, .. }
            | ParseError::DuplicateSection { line, col, .. } => (line, col),
        }
    }
}
