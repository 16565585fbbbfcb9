use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },

    #[error("entry {value} at ({row}, {col}) is out of range 0..{bound}")]
    OutOfRange { row: usize, col: usize, value: usize, bound: usize },

    #[error("multiplication is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NonAssociative(usize, usize, usize),

    #[error("element {0} violates the identity law")]
    BadIdentity(usize),

    #[error("action is not compatible: {0}*({1}*{2}) != ({0}{1})*{2}")]
    CompatibilityViolation(usize, usize, usize),

    #[error("identity does not fix element {0}")]
    UnitViolation(usize),

    #[error("map is not equivariant: {0}")]
    NotEquivariant(String),

    #[error("acts are over different monoids")]
    MonoidMismatch,

    #[error("partitions live on carriers of different sizes ({0} vs {1})")]
    ActMismatch(usize, usize),

    #[error("not a partition of a {size}-element carrier: {reason}")]
    NotAPartition { size: usize, reason: String },

    #[error("partition is not a congruence: {0}")]
    NotACongruence(String),

    #[error("not a subact: {0}")]
    NotASubact(String),

    #[error("invalid Rees system: {0}")]
    InvalidSystem(String),

    #[error("{what} exceeds bound: {value} > {bound}")]
    BoundExceeded { what: &'static str, value: u128, bound: u128 },

    #[error("act of size {0} is not a member of the universe")]
    NotInUniverse(usize),

    #[error("assignment does not cover the universe: {0}")]
    NotTotal(String),

    #[error("not a Hoehnke radical: {0}")]
    NotHoehnke(String),

    #[error("not a Kurosh-Amitsur radical: {0}")]
    NotKa(String),

    #[error("not a torsion theory: {0}")]
    NotATorsionTheory(String),

    #[error("no candidate congruence for act {0}")]
    EmptyCandidateSet(String),

    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
}

impl Error {
    pub(crate) fn bound(what: &'static str, value: impl Into<u128>, bound: impl Into<u128>) -> Self {
        Error::BoundExceeded { what, value: value.into(), bound: bound.into() }
    }
}
