use crate::fields::Field;
use thiserror::Error;

/// Everything that can go wrong while building or certifying an algebra.
///
/// Failed identities inside a certification report are *not* errors; they are
/// report entries. These variants are for broken preconditions and for the
/// single-shot certifiers (`verify_triality`, `verify_local`, ...).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("scalars from different fields: {0} and {1}")]
    DescriptorMismatch(Field, Field),

    #[error("invalid field descriptor: {0}")]
    InvalidField(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("no bilinear form declared on {0}")]
    FormUndeclared(String),

    #[error("no involution declared on {0}")]
    InvolutionUndeclared(String),

    #[error("no unit or para-unit declared on {0}")]
    UnitUndeclared(String),

    #[error("map is not invertible: {0}")]
    NotInvertible(String),

    #[error("{relation} fails: {witness}")]
    RelationFails { relation: String, witness: String },

    #[error("square root of {0} is not in the field")]
    SqrtUnavailable(String),

    #[error("at most 3 doubling levels are supported, got {0}")]
    TooManyLevels(usize),

    #[error("element does not have unit norm: {0}")]
    NormNotOne(String),

    #[error("precondition not met: {0}")]
    PreconditionUnmet(String),

    #[error("field {0} is not finite")]
    FieldNotFinite(Field),

    #[error("field {0} has no embedding into machine floats")]
    FieldNotEmbeddable(Field),

    #[error("characteristic 3 is excluded for this operation")]
    CharThree,

    #[error("scale parameter must be nonzero")]
    ZeroScale,

    #[error("pairing condition fails: {0}")]
    PairingFails(String),

    #[error("algebra is not associative: {0}")]
    NotAssociative(String),

    #[error("element is not unitary: {0}")]
    NotUnitary(String),

    #[error("element is not skew: {0}")]
    NotSkew(String),

    #[error("no solution in the field: {0}")]
    NoSolutionInField(String),

    #[error("degenerate pair: no intermediate point found")]
    DegeneratePair,

    #[error("chain condition fails: {0}")]
    ChainConditionFails(String),

    #[error("constraint fails: {0}")]
    ConstraintFails(String),

    #[error("triples belong to different algebras")]
    AlgebraMismatch,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("suite '{suite}' does not apply to {algebra}")]
    SuiteInapplicable { suite: String, algebra: String },

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
