//! Exact Grassmann-algebra model of a qubit and a toolkit for finite ontological models.

pub mod clifford;
pub mod grassmann;
pub mod notation;
pub mod scalar;
pub mod weyl;
pub mod eom;
pub mod ontic;
pub mod models;

pub use clifford::{apply_clifford, compose, inverse, named_map, CliffordMap, Gate, GateToken};
pub use grassmann::{Generator, GrassmannElement, Monomial, Sign};
pub use models::{Blowtorch, ModelName};
pub use scalar::{ExactComplex, Rational};
pub use weyl::{Axis, BlochVector, OnticLabel, SixTuple, StabilizerState, WeylState};
