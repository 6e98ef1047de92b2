//! Concrete ontological models: the eight-state disjoint model, the
//! three-state example, and the Grassmann model with its Λ′ basis.

pub mod contextuality;
pub mod eight_state;
pub mod grassmann_model;
pub mod lambda_prime;
pub mod three_state;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ontic::{ConstraintSystem, PairStructure};

pub use contextuality::{
    exhibits_transformation_contextuality, BlowtorchModel, ContextualityVerdict, ContextualityWitness, EightStateModel,
    GrassmannModel, WithT2AsT1,
};
pub use eight_state::{eight_state_blowtorch, eight_state_gate, parity, EightState, EightStateDistribution, Parity};
pub use grassmann_model::{atoms_from_tuple, grassmann_blowtorch, grassmann_model, pair_weights_from_tuple, tuple_from_atoms};
pub use lambda_prime::{
    decompose_on_lambda_prime, measure_pauli, outcome_probability, response, stabilizer_overlaps, LambdaDecomposition,
    LambdaPrimeState, Outcome,
};
pub use three_state::three_state_model;

/// The two blowtorch implementations: T₁ = ¼Σ Pauli conjugations, T₂ = H∘T₁.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Blowtorch {
    T1,
    T2,
}

impl Blowtorch {
    pub const ALL: [Blowtorch; 2] = [Blowtorch::T1, Blowtorch::T2];
}

impl fmt::Display for Blowtorch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Blowtorch::T1 => "T1",
            Blowtorch::T2 => "T2",
        })
    }
}

impl FromStr for Blowtorch {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "T1" | "t1" => Ok(Blowtorch::T1),
            "T2" | "t2" => Ok(Blowtorch::T2),
            other => Err(format!("unknown blowtorch `{other}` (expected T1 or T2)")),
        }
    }
}

/// Models addressable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModelName {
    #[serde(rename = "eight-state")]
    EightState,
    #[serde(rename = "three-state")]
    ThreeState,
    #[serde(rename = "grassmann")]
    Grassmann,
}

impl ModelName {
    pub const ALL: [ModelName; 3] = [ModelName::EightState, ModelName::ThreeState, ModelName::Grassmann];

    pub fn as_str(self) -> &'static str {
        match self {
            ModelName::EightState => "eight-state",
            ModelName::ThreeState => "three-state",
            ModelName::Grassmann => "grassmann",
        }
    }

    /// The constraint systems of the model, if it has any.
    pub fn systems(self) -> Option<ModelSystems> {
        match self {
            ModelName::EightState => None,
            ModelName::ThreeState => Some(three_state_model()),
            ModelName::Grassmann => Some(grassmann_model()),
        }
    }
}

impl fmt::Display for ModelName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ModelName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        ModelName::ALL
            .into_iter()
            .find(|m| m.as_str() == s.trim())
            .ok_or_else(|| format!("unknown model `{s}` (expected eight-state, three-state or grassmann)"))
    }
}

/// Which atom space a system is written over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SystemForm {
    /// The disjoint refinement W, X, Y, Z per pair.
    Disjoint,
    /// The non-disjoint states themselves, one coordinate per state.
    Pairs,
}

impl FromStr for SystemForm {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "disjoint" => Ok(SystemForm::Disjoint),
            "pairs" => Ok(SystemForm::Pairs),
            other => Err(format!("unknown form `{other}` (expected disjoint or pairs)")),
        }
    }
}

impl fmt::Display for SystemForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SystemForm::Disjoint => "disjoint",
            SystemForm::Pairs => "pairs",
        })
    }
}

/// A model's constraints over its disjoint refinement and over its
/// non-disjoint states, plus the block structure linking the two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelSystems {
    pub disjoint: ConstraintSystem,
    pub pairs: ConstraintSystem,
    pub structure: PairStructure,
}

impl ModelSystems {
    pub fn system(&self, form: SystemForm) -> &ConstraintSystem {
        match form {
            SystemForm::Disjoint => &self.disjoint,
            SystemForm::Pairs => &self.pairs,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for m in ModelName::ALL {
            assert_eq!(m.as_str().parse::<ModelName>().unwrap(), m);
            assert_eq!(serde_json::to_string(&m).unwrap(), format!("\"{m}\""));
        }
        assert!("nine-state".parse::<ModelName>().is_err());
        assert_eq!("t2".parse::<Blowtorch>().unwrap(), Blowtorch::T2);
        assert!("pairs".parse::<SystemForm>().is_ok());
        assert!(ModelName::EightState.systems().is_none());
    }
}
