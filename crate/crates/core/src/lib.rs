//! Exact compound-matrix calculus over the rationals.
//!
//! The crate computes `p`-th compound matrices, their signed complements,
//! generalized Laplace expansions of the determinant, cofactor-based
//! nullspace bases, and property checks for the compound map
//! `a ↦ m_p(a)`. Every formula is validated against the independent
//! oracles in [`oracle`].

pub mod combo;
pub mod compounds;
pub mod counters;
pub mod error;
pub mod fixtures;
pub mod homlab;
pub mod kernel;
pub mod laplace;
pub mod matrix;
pub mod oracle;
pub mod random;
pub mod rational;

pub use combo::{binomial, combinations, Combo};
pub use compounds::{adjugate_compound, complementary_compound, compound, minor, CompoundMatrix};
pub use error::{Error, Result};
pub use homlab::{PropertyReport, Status};
pub use kernel::{KernelResult, KernelSource};
pub use laplace::DetStrategy;
pub use matrix::RMatrix;
pub use rational::Rational;
