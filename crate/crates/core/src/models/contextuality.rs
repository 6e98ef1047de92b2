//! Transformation-contextuality test for the blowtorch map: T₁ and T₂ are
//! operationally equivalent, so a model is contextual iff some input gets
//! different ontic representations under the two.

use std::fmt;

use serde::Serialize;

use super::eight_state::{eight_state_blowtorch, EightState, EightStateDistribution};
use super::grassmann_model::grassmann_blowtorch;
use super::Blowtorch;
use crate::weyl::{SixTuple, StabilizerState};

/// A model with both blowtorch implementations over its ontic representation.
pub trait BlowtorchModel {
    type Input: Clone + fmt::Debug + fmt::Display;
    type Rep: Clone + fmt::Debug + PartialEq;

    fn name(&self) -> &str;
    /// Every input the exhaustive search visits.
    fn inputs(&self) -> Vec<Self::Input>;
    fn apply(&self, which: Blowtorch, input: &Self::Input) -> Self::Rep;
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ContextualityWitness<I, R> {
    pub input: I,
    pub t1: R,
    pub t2: R,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ContextualityVerdict<I, R> {
    pub contextual: bool,
    pub inputs_checked: usize,
    pub witness: Option<ContextualityWitness<I, R>>,
}

/// Exhaustive search over the model's inputs for one where T₁ and T₂ disagree.
pub fn exhibits_transformation_contextuality<M: BlowtorchModel>(model: &M) -> ContextualityVerdict<M::Input, M::Rep> {
    let inputs = model.inputs();
    let inputs_checked = inputs.len();
    for input in inputs {
        let t1 = model.apply(Blowtorch::T1, &input);
        let t2 = model.apply(Blowtorch::T2, &input);
        if t1 != t2 {
            return ContextualityVerdict { contextual: true, inputs_checked, witness: Some(ContextualityWitness { input, t1, t2 }) };
        }
    }
    ContextualityVerdict { contextual: false, inputs_checked, witness: None }
}

/// Point masses on the eight ontic states; outputs are distributions.
#[derive(Clone, Copy, Debug, Default)]
pub struct EightStateModel;

impl BlowtorchModel for EightStateModel {
    type Input = EightState;
    type Rep = EightStateDistribution;

    fn name(&self) -> &str {
        "eight-state"
    }

    fn inputs(&self) -> Vec<EightState> {
        EightState::ALL.to_vec()
    }

    fn apply(&self, which: Blowtorch, input: &EightState) -> EightStateDistribution {
        eight_state_blowtorch(which, &EightStateDistribution::point_mass(*input))
    }
}

/// Stabilizer states; outputs are probability tuples.
#[derive(Clone, Copy, Debug, Default)]
pub struct GrassmannModel;

impl BlowtorchModel for GrassmannModel {
    type Input = StabilizerState;
    type Rep = SixTuple;

    fn name(&self) -> &str {
        "grassmann"
    }

    fn inputs(&self) -> Vec<StabilizerState> {
        StabilizerState::ALL.to_vec()
    }

    fn apply(&self, which: Blowtorch, input: &StabilizerState) -> SixTuple {
        let t = input.weyl().six_tuple();
        grassmann_blowtorch(which, &t).expect("stabilizer tuples are physical")
    }
}

/// Wraps a model so that T₂ is replaced by T₁.
#[derive(Clone, Copy, Debug, Default)]
pub struct WithT2AsT1<M>(pub M);

impl<M: BlowtorchModel> BlowtorchModel for WithT2AsT1<M> {
    type Input = M::Input;
    type Rep = M::Rep;

    fn name(&self) -> &str {
        self.0.name()
    }

    fn inputs(&self) -> Vec<M::Input> {
        self.0.inputs()
    }

    fn apply(&self, _which: Blowtorch, input: &M::Input) -> M::Rep {
        self.0.apply(Blowtorch::T1, input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::eight_state::Parity;

    #[test]
    fn eight_state_is_contextual() {
        let v = exhibits_transformation_contextuality(&EightStateModel);
        assert!(v.contextual);
        let w = v.witness.unwrap();
        assert_eq!(w.input, EightState::ALL[0]);
        assert!(w.t1.support().iter().all(|s| s.parity() == Parity::Even));
        assert!(w.t2.support().iter().all(|s| s.parity() == Parity::Odd));
    }

    #[test]
    fn grassmann_is_not_contextual() {
        let v = exhibits_transformation_contextuality(&GrassmannModel);
        assert!(!v.contextual);
        assert_eq!(v.inputs_checked, 6);
        assert!(v.witness.is_none());
    }

    #[test]
    fn identified_blowtorch_is_not_contextual() {
        assert!(!exhibits_transformation_contextuality(&WithT2AsT1(EightStateModel)).contextual);
        assert!(!exhibits_transformation_contextuality(&WithT2AsT1(GrassmannModel)).contextual);
    }
}
