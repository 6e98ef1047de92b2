//! The eight basis tuples Λ′ of the Grassmann model, decomposition of a
//! probability tuple over them, and the Pauli measurement rule.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::eight_state::EightState;
use crate::grassmann::Sign;
use crate::scalar::{fmt_rational, half, max_rat, serde_rational, Rational};
use crate::weyl::{Axis, SixTuple, StabilizerState};

/// A basis tuple: for each pair, full weight on the `+` side (wᵢ = 1) or the
/// `−` side (xᵢ = 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LambdaPrimeState {
    plus: [bool; 3],
}

impl LambdaPrimeState {
    /// In display order: (1,1,1,0,0,0), (1,1,0,0,0,1), (1,0,1,0,1,0),
    /// (1,0,0,0,1,1), (0,1,1,1,0,0), (0,1,0,1,0,1), (0,0,1,1,1,0),
    /// (0,0,0,1,1,1).
    pub const ALL: [LambdaPrimeState; 8] = [
        LambdaPrimeState { plus: [true, true, true] },
        LambdaPrimeState { plus: [true, true, false] },
        LambdaPrimeState { plus: [true, false, true] },
        LambdaPrimeState { plus: [true, false, false] },
        LambdaPrimeState { plus: [false, true, true] },
        LambdaPrimeState { plus: [false, true, false] },
        LambdaPrimeState { plus: [false, false, true] },
        LambdaPrimeState { plus: [false, false, false] },
    ];

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|s| *s == self).expect("all states listed")
    }

    pub fn selects_plus(self, axis: Axis) -> bool {
        self.plus[axis.index()]
    }

    pub fn bits(self) -> [u8; 6] {
        let p = self.plus.map(u8::from);
        [p[0], p[1], p[2], 1 - p[0], 1 - p[1], 1 - p[2]]
    }

    pub fn tuple(self) -> SixTuple {
        SixTuple::from_ints(self.bits().map(i64::from)).expect("basis tuples are valid")
    }

    /// The eight-state ontic state with the same sign on every axis.
    pub fn eight_state(self) -> EightState {
        let s = |b: bool| if b { Sign::Plus } else { Sign::Minus };
        EightState { x: s(self.plus[0]), y: s(self.plus[1]), z: s(self.plus[2]) }
    }

    pub fn from_eight_state(e: EightState) -> Self {
        LambdaPrimeState { plus: Axis::ALL.map(|a| e.coordinate(a) == Sign::Plus) }
    }
}

impl fmt::Display for LambdaPrimeState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = self.bits();
        write!(f, "({},{},{},{},{},{})", b[0], b[1], b[2], b[3], b[4], b[5])
    }
}

impl Serialize for LambdaPrimeState {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Weights over Λ′ in [`LambdaPrimeState::ALL`] order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LambdaDecomposition {
    weights: [Rational; 8],
}

impl LambdaDecomposition {
    pub fn weight(&self, s: LambdaPrimeState) -> &Rational {
        &self.weights[s.index()]
    }

    pub fn weights(&self) -> &[Rational; 8] {
        &self.weights
    }

    pub fn support(&self) -> Vec<LambdaPrimeState> {
        LambdaPrimeState::ALL.into_iter().filter(|s| !self.weight(*s).is_zero()).collect()
    }

    pub fn total(&self) -> Rational {
        self.weights.iter().sum()
    }
}

impl fmt::Display for LambdaDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.support().iter().map(|s| format!("{}:{}", s, fmt_rational(self.weight(*s)))).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct RegionWeight {
    region: String,
    #[serde(with = "serde_rational")]
    weight: Rational,
}

impl Serialize for LambdaDecomposition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let all: Vec<RegionWeight> = LambdaPrimeState::ALL
            .iter()
            .map(|l| RegionWeight { region: l.to_string(), weight: self.weight(*l).clone() })
            .collect();
        all.serialize(s)
    }
}

/// Support of the tuple on the intersection and complement of pair `axis`.
fn overlap_share(t: &SixTuple, axis: Axis) -> Rational {
    half() * (Rational::one() - max_rat(t.plus(axis), t.minus(axis)))
}

/// weight(λ) = Πᵢ (g_sideᵢ + yᵢ), with yᵢ = ½(1 − max{g₊ᵢ, g₋ᵢ}) and side
/// chosen by λ. Reduces to the uniform split over the four matching basis
/// states for stabilizer tuples.
pub fn decompose_on_lambda_prime(t: &SixTuple) -> LambdaDecomposition {
    let weights = LambdaPrimeState::ALL.map(|l| {
        Axis::ALL
            .iter()
            .map(|&a| {
                let g = if l.selects_plus(a) { t.plus(a) } else { t.minus(a) };
                g + overlap_share(t, a)
            })
            .product()
    });
    LambdaDecomposition { weights }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

/// Response function ξₖᴹ: indicator that λ sits on the outcome's side of the
/// measured pair.
pub fn response(axis: Axis, outcome: Outcome, l: LambdaPrimeState) -> bool {
    l.selects_plus(axis) == (outcome == Outcome::Plus)
}

pub fn outcome_probability(t: &SixTuple, axis: Axis, outcome: Outcome) -> Rational {
    let d = decompose_on_lambda_prime(t);
    LambdaPrimeState::ALL.iter().filter(|l| response(axis, outcome, **l)).map(|l| d.weight(*l)).sum()
}

/// (Pr(+), Pr(−)) for a Pauli measurement along `axis`.
pub fn measure_pauli(t: &SixTuple, axis: Axis) -> (Rational, Rational) {
    (outcome_probability(t, axis, Outcome::Plus), outcome_probability(t, axis, Outcome::Minus))
}

/// Outcome probabilities for the six stabilizer response functions, in
/// stabilizer order (+x, +y, +z, −x, −y, −z).
pub fn stabilizer_overlaps(t: &SixTuple) -> [Rational; 6] {
    StabilizerState::ALL.map(|s| {
        let outcome = if s.is_plus() { Outcome::Plus } else { Outcome::Minus };
        outcome_probability(t, s.axis(), outcome)
    })
}
