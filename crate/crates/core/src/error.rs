use thiserror::Error;

/// Errors shared by every module of the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalar values belong to different fields")]
    FieldMismatch,
    #[error("{0} is not prime or is too large for a prime field modulus")]
    BadModulus(u64),
    #[error("cannot parse scalar from {0:?}")]
    ScalarParse(String),
    #[error("multivectors live over different spaces")]
    SpaceMismatch,
    #[error("wedge degree {0} exceeds the ambient dimension {1}")]
    DegreeOverflow(usize, usize),
    #[error("expected degree {expected}, got {got}")]
    WrongDegree { expected: usize, got: usize },
    #[error("vector must be nonzero")]
    ZeroVector,
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("matrix dimensions do not match: {0}")]
    DimensionMismatch(String),
    #[error("pairing matrix is singular")]
    SingularPairing,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("subspace is not Lagrangian: {0}")]
    NotLagrangian(String),
    #[error("covector must be nonzero")]
    ZeroCovector,
    #[error("point lies on the hyperplane of the chart frame")]
    FrameDegenerate,
    #[error("chart determinant vanishes identically (degenerate Lagrangian)")]
    DegenerateDeterminant,
    #[error("field has fewer than {0} elements; interpolation nodes unavailable")]
    FieldTooSmall(usize),
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("matrix does not fix the Lagrangian subspace")]
    NotAutomorphism,
    #[error("transformed point is missing from the supplied list")]
    PointNotInList,
    #[error("point {0} does not have dual stratum dimension 3")]
    NotStratumThree(usize),
    #[error("points in the list must be pairwise distinct")]
    DuplicatePoint,
    #[error("operation requires dim W = 7, got {0}")]
    WrongDimW(usize),
    #[error("vector lies in the hyperplane; expected a point outside it")]
    PointInHyperplane,
    #[error("vector does not lie in the hyperplane; expected a point inside it")]
    PointOutsideHyperplane,
    #[error("Gram matrix must be symmetric")]
    NotSymmetric,
    #[error("Gram matrix is degenerate (zero determinant)")]
    DegenerateLattice,
    #[error("lattice is odd; quadratic values mod 2Z are unavailable")]
    OddLattice,
    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("basis rows are linearly dependent")]
    DependentRows,
    #[error("denominator divisible by {0}")]
    DenominatorDivisible(u64),
    #[error("bad prime {0}: {1}")]
    BadPrime(u64, String),
    #[error("prime {0} exceeds the scan ceiling {1}")]
    PrimeAboveCeiling(u64, u64),
    #[error("invalid data: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
