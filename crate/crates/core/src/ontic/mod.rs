//! Finite ontological models: atoms, regions, exact distributions, and
//! systems of linear and min/max constraints on region probabilities.

pub mod distribution;
pub mod dsl;
pub mod families;
pub mod region;
pub mod solve;
pub mod system;

use thiserror::Error;

pub use distribution::{check_kolmogorov, region_probability, AtomDistribution, Axiom, AxiomCheck, KolmogorovReport};
pub use dsl::{parse_region, parse_system};
pub use families::{
    common_region, enumerate_families, is_single_convex_set, linear_combine, nondisjoint_convex_combine, ConvexityVerdict,
    Counterexample, PairBlock, PairStructure, Parameter, SolutionFamily,
};
pub use region::{AtomSet, RegionExpr};
pub use system::{ConstraintSystem, LinearEquality, MinMaxConstraint, MinMaxKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OnticError {
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("atom `{0}` listed twice")]
    DuplicateAtom(String),
    #[error("invalid atom label `{0}`")]
    InvalidLabel(String),
    #[error("{0} atoms exceeds the limit of 64")]
    TooManyAtoms(usize),
    #[error("no atoms")]
    EmptyAtomSet,
    #[error("expected {expected} values, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("parameters outside the family")]
    OutOfRange,
    #[error("no branch of the system is satisfiable")]
    InfeasibleSystem,
    #[error("entry {index} violates the system: {detail}")]
    EntryViolatesSystem { index: usize, detail: String },
    #[error("invalid convex weights: {0}")]
    BadWeights(String),
    #[error("line {line}: {message}")]
    Dsl { line: usize, message: String },
}
