//! Error type shared by all modules of the engine.

use crate::axial::Parity;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two values from incompatible algebras were combined.
    #[error("dimension mismatch: m={left} vs m={right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("blade index {index} outside 1..={m}")]
    BladeIndexOutOfRange { index: usize, m: usize },

    #[error("blade indices must be strictly increasing, got {indices:?}")]
    BladeNotIncreasing { indices: Vec<usize> },

    #[error("variable index {index} outside 0..={m}")]
    VariableOutOfRange { index: usize, m: usize },

    #[error("exponent tuple has length {found}, expected {expected}")]
    ExponentLength { expected: usize, found: usize },

    /// A radial polynomial carried an r-exponent of the wrong parity.
    #[error("parity violation: expected every r-exponent to be {expected}")]
    ParityViolation { expected: Parity },

    #[error("parity mismatch: cannot add {left} and {right} radial polynomials")]
    ParityMismatch { left: Parity, right: Parity },

    #[error("input must not depend on x0")]
    DependsOnX0,

    #[error("input is not homogeneous of degree {degree}")]
    NotHomogeneous { degree: usize },

    #[error("input is not monogenic")]
    NotMonogenic,

    #[error("seed pair does not satisfy the order-{p} holomorphy equation")]
    NotPHolomorphic { p: usize },

    /// Transforms are only defined for odd m >= 3; even m would require
    /// fractional Laplacian powers outside exact polynomial arithmetic.
    #[error("dimension m={m} is not supported: m must be odd and at least 3")]
    UnsupportedDimension { m: usize },

    #[error("input is not annihilated by the order-{p} planar Laplacian power")]
    PolyharmonicHypothesis { p: usize },

    #[error("invalid rational literal {text:?}: {reason}")]
    InvalidRational { text: String, reason: &'static str },
}
