use thiserror::Error;

use crate::complex::Tri;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("leading coefficient of the quadratic vanishes")]
    DegenerateLeadingCoefficient,
    #[error("square root argument {re}{im:+}i lies on the branch cut (-inf, 0]")]
    BranchCut { re: f64, im: f64 },
    #[error("denominator vanishes: {0}")]
    SingularDenominator(&'static str),
    #[error("point is not in {domain} (classified {tri:?}, margin {margin:e})")]
    OutsideDomain {
        domain: &'static str,
        tri: Tri,
        margin: f64,
    },
    #[error("condition {0} is not one of 1..=9")]
    InvalidCondition(u8),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("target lies on leaf {actual}, expected {expected}")]
    LeafMismatch { expected: f64, actual: f64 },
    #[error("Mobius distance of the lift is {actual}, expected {expected}")]
    DistanceMismatch { expected: f64, actual: f64 },
    #[error("leaf index {0:e} is too close to the royal variety")]
    DegenerateLeaf(f64),
    #[error("point is off the leaf: |g_a| = {0:e}")]
    OffLeaf(f64),
    #[error("gradient component d/dz1 g_a vanishes")]
    VanishingGradient,
    #[error("point lies on the diagonal z1 = z2")]
    DiagonalPoint,
    #[error("homogeneous coordinates are all zero")]
    ZeroVector,
    #[error("t coordinate vanishes; point is not in the projective model")]
    ZeroT,
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
