//! Error types shared across the crate.

use thiserror::Error;

/// Errors from group construction, validation, and the structural
/// operations that carry mathematical preconditions.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("degree {degree} is not a valid permutation degree")]
    InvalidDegree { degree: usize },
    #[error("generator degree {found} does not match declared degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("generator is not a bijection at point {point}")]
    NotBijective { point: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {point} appears in two cycles of one generator")]
    OverlappingCycles { point: usize },
    #[error("generated group exceeds the size cap of {cap} elements")]
    SizeCapExceeded { cap: usize },

    #[error("table is not square: row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("table entry at ({row}, {col}) is {value}, outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("{axis} {index} is not a permutation: value {value} repeats")]
    NotLatin {
        axis: &'static str,
        index: usize,
        value: usize,
    },
    #[error("identity law fails: expected mul[0][{x}] = mul[{x}][0] = {x}")]
    IdentityViolation { x: usize },
    #[error("element {x} has no inverse")]
    MissingInverse { x: usize },
    #[error("associativity fails on triple ({a}, {b}, {c})")]
    AssociativityViolation { a: usize, b: usize, c: usize },

    #[error("element index {index} out of range for group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },
    #[error("seed set contains index {index}, outside the group")]
    BadSeed { index: usize },

    #[error("subgroup of order {sub} is not normal in group of order {order}")]
    NotNormal { sub: usize, order: usize },
    #[error("group of order {order} is not a p-group for any prime")]
    NotPGroup { order: usize },
    #[error("group is not soluble; Fitting height is undefined")]
    NotSoluble,
    #[error("group is not metanilpotent (its residual is not nilpotent)")]
    NotMetanilpotent,
    #[error("group is not metabelian (derived length exceeds 2)")]
    NotMetabelian,
    #[error("target subgroup of order {order} is not cyclic")]
    NotCyclicTarget { order: usize },
    #[error("actor {actor} does not normalize the target subgroup")]
    ActorDoesNotNormalize { actor: usize },
    #[error("acting subgroup order {a} is not coprime to target order {n}")]
    NotCoprime { n: usize, a: usize },
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
}

/// Errors from the truncated p-adic layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum PadicError {
    #[error("{p} is not prime")]
    NotPrime { p: u64 },
    #[error("precision {k} outside the supported range 1..={max}")]
    BadPrecision { k: u32, max: u32 },
    #[error("residue {b} is not a unit modulo {p}^{k}")]
    NotAUnit { b: String, p: u64, k: u32 },
    #[error("operands live at different moduli: {p1}^{k1} vs {p2}^{k2}")]
    ModulusMismatch { p1: u64, k1: u32, p2: u64, k2: u32 },
    #[error("{p}^{k} is over the enumeration cap and {p} is too large for the generator path")]
    UnsupportedModulus { p: u64, k: u32 },
}

/// Errors from corpus specs and group-file parsing.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CorpusError {
    #[error("unknown group id {0:?}")]
    UnknownId(String),
    #[error("invalid parameters for family {family}: {reason}")]
    InvalidParams { family: String, reason: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("i/o error: {0}")]
    Io(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}
