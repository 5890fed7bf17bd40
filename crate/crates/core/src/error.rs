use thiserror::Error;

/// Errors reported by the library. Each variant corresponds to a violated
/// precondition or a detected internal inconsistency.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero triple is not a projective point")]
    ZeroTriple,
    #[error("point is one of the blown-up points p1..p4")]
    ExcludedPoint,
    #[error("point lies on one of the six lines y1 y2 y3 (y1-y2)(y1-y3)(y2-y3) = 0")]
    OnLine,
    #[error("all forms vanish at the point (base locus of the height set)")]
    BaseLocus,
    #[error("Cox coordinate {0} is zero")]
    ZeroCoordinate(&'static str),
    #[error("Plücker equations violated: {0}")]
    PlueckerViolation(String),
    #[error("congruence conditions fail; the torsor equations have no solution")]
    NoSolution,
    #[error("quadratic form does not vanish at (0:0:1) and (1:1:1)")]
    FormNotVanishing,
    #[error("height set has rank {0}, expected 4")]
    NotSpanning(usize),
    #[error("invalid height set: {0}")]
    InvalidHeightSet(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is outside the supported range of the brute-force count")]
    PrimeOutOfRange(u64),
    #[error("prime cutoff {0} is below 11, where the Euler tail bound is not valid")]
    CutoffTooSmall(u64),
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("quadrature tolerance not reached within the cell budget")]
    ToleranceNotReached,
    #[error("height bound {0} is too large for 64-bit enumeration")]
    BoundTooLarge(u64),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
