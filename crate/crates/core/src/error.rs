use thiserror::Error;

use crate::poly::UniPoly;

/// Everything that can go wrong inside the kernel and the certifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix shape {rows}x{cols} does not match {len} entries")]
    ShapeMismatch { rows: usize, cols: usize, len: usize },
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("defining polynomial is not squarefree")]
    NotSquarefree,
    #[error("defining polynomial is reducible; factor {witness}")]
    Reducible { witness: UniPoly },
    #[error("irreducibility of a degree {degree} polynomial could not be decided")]
    IrreducibilityUndecided { degree: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different number fields")]
    FieldMismatch,
    #[error("element has {got} coordinates but the field has degree {degree}")]
    BadCoordinates { got: usize, degree: usize },
    #[error("polynomial has zero constant term; strip the factor x^k first")]
    ZeroConstantTerm,
    #[error("element must be nonzero")]
    ZeroElement,
    #[error("{value} is not a prime")]
    NotPrime { value: String },
    #[error("Galois image {index} is not a root of the defining polynomial")]
    ImageNotRoot { index: usize },
    #[error("Galois images {first} and {second} coincide")]
    DuplicateImage { first: usize, second: usize },
    #[error("Galois data does not list the full automorphism group")]
    NotFullGroup,
    #[error("stabilizer is not closed under composition")]
    StabilizerNotClosed,
    #[error("alpha_1 = alpha_2: the Hankel quantity V_0 vanishes")]
    DegenerateDifference,
    #[error("{k} terms exceed the subset-enumeration limit of 20")]
    TooManyTerms { k: usize },
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("alpha_{index} is a root of unity")]
    RootOfUnityInput { index: usize },
    #[error("target must be nonzero")]
    ZeroTarget,
    #[error("weight sum must be nonzero")]
    ZeroWeightSum,
    #[error("denominator polynomial must have constant term 1")]
    DenominatorConstantTermNotOne,
    #[error("numerator and denominator share a common factor")]
    NotCoprime,
    #[error("f_{i}/f_{j} is a constant function")]
    RatioConstant { i: usize, j: usize },
    #[error("variable index {index} out of range 1..={count}")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
