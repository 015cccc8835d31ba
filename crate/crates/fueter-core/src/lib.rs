//! Exact symbolic engine generating monogenic functions on `R^{m+1}` from
//! planar holomorphic (and higher-order holomorphic) polynomial seeds.
//!
//! Everything is computed over arbitrary-precision rationals: iterated
//! Laplacian powers, monogenic extensions and factorial weights stay exact,
//! so every claimed identity (`cauchy_riemann(F) = 0`, path agreement, the
//! Vekua system) is checked as an exact polynomial identity, never
//! numerically.
//!
//! All values are immutable and all operations pure; everything is safe to
//! share across threads.

// parity tests and half-integer exponents read better as plain arithmetic
#![allow(clippy::manual_is_multiple_of, clippy::manual_div_ceil)]

pub mod axial;
pub mod clifford;
pub mod error;
pub mod fueter;
pub mod json;
pub mod polynomial;
pub mod rational;
pub mod spherical;
pub mod verify;

pub use axial::{AxialPair, HolomorphicSeed, Parity, RadialPolynomial};
pub use clifford::{Blade, Multivector};
pub use error::Error;
pub use fueter::{FueterConfig, TransformReport, Variant};
pub use polynomial::CliffordPolynomial;
pub use rational::Rational;
pub use spherical::{FischerDecomposition, SphericalMonogenic};
