//! The eight-state disjoint model on {±1}³.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::Blowtorch;
use crate::clifford::Gate;
use crate::grassmann::Sign;
use crate::scalar::{fmt_rational, rat, serde_rational, Rational};
use crate::weyl::Axis;

/// An ontic state (x, y, z) with each coordinate ±1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EightState {
    pub x: Sign,
    pub y: Sign,
    pub z: Sign,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

const fn st(x: Sign, y: Sign, z: Sign) -> EightState {
    EightState { x, y, z }
}

impl EightState {
    /// +++, ++-, +-+, -++, +--, -+-, --+, ---
    pub const ALL: [EightState; 8] = {
        use Sign::{Minus as M, Plus as P};
        [st(P, P, P), st(P, P, M), st(P, M, P), st(M, P, P), st(P, M, M), st(M, P, M), st(M, M, P), st(M, M, M)]
    };

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|s| *s == self).expect("all states listed")
    }

    pub fn coordinate(self, axis: Axis) -> Sign {
        match axis {
            Axis::X => self.x,
            Axis::Y => self.y,
            Axis::Z => self.z,
        }
    }

    pub fn parity(self) -> Parity {
        let minus = [self.x, self.y, self.z].iter().filter(|s| **s == Sign::Minus).count();
        if minus % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// The permutation Γ_g of the ontic states.
    pub fn apply(self, gate: Gate) -> EightState {
        let EightState { x, y, z } = self;
        match gate {
            Gate::I => self,
            Gate::X => st(x, -y, -z),
            Gate::Y => st(-x, y, -z),
            Gate::Z => st(-x, -y, z),
            Gate::H => st(z, -y, x),
        }
    }
}

pub fn parity(s: EightState) -> Parity {
    s.parity()
}

fn sign_char(s: Sign) -> char {
    if s == Sign::Plus {
        '+'
    } else {
        '-'
    }
}

impl fmt::Display for EightState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", sign_char(self.x), sign_char(self.y), sign_char(self.z))
    }
}

impl FromStr for EightState {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let t = s.trim().replace('−', "-");
        let signs: Vec<Sign> = t
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                _ => Err(format!("bad sign `{c}` in `{s}`")),
            })
            .collect::<Result<_, _>>()?;
        match signs[..] {
            [x, y, z] => Ok(st(x, y, z)),
            _ => Err(format!("expected three signs like `+-+`, got `{s}`")),
        }
    }
}

impl Serialize for EightState {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for EightState {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// A distribution over the eight ontic states, indexed in [`EightState::ALL`] order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EightStateDistribution {
    weights: [Rational; 8],
}

impl EightStateDistribution {
    pub fn point_mass(s: EightState) -> Self {
        let mut weights: [Rational; 8] = std::array::from_fn(|_| Rational::zero());
        weights[s.index()] = rat(1, 1);
        EightStateDistribution { weights }
    }

    pub fn weight(&self, s: EightState) -> &Rational {
        &self.weights[s.index()]
    }

    pub fn weights(&self) -> &[Rational; 8] {
        &self.weights
    }

    /// States with nonzero weight, in canonical order.
    pub fn support(&self) -> Vec<EightState> {
        EightState::ALL.into_iter().filter(|s| !self.weight(*s).is_zero()).collect()
    }

    fn pushforward(&self, f: impl Fn(EightState) -> Vec<(Rational, EightState)>) -> Self {
        let mut weights: [Rational; 8] = std::array::from_fn(|_| Rational::zero());
        for s in EightState::ALL {
            let w = self.weight(s);
            if w.is_zero() {
                continue;
            }
            for (p, t) in f(s) {
                weights[t.index()] += w * p;
            }
        }
        EightStateDistribution { weights }
    }
}

impl fmt::Display for EightStateDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.support().iter().map(|s| format!("{}:{}", s, fmt_rational(self.weight(*s)))).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct WeightEntry {
    state: EightState,
    #[serde(with = "serde_rational")]
    weight: Rational,
}

impl Serialize for EightStateDistribution {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let entries: Vec<WeightEntry> =
            self.support().into_iter().map(|st| WeightEntry { state: st, weight: self.weight(st).clone() }).collect();
        entries.serialize(s)
    }
}

impl<'de> Deserialize<'de> for EightStateDistribution {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let entries = Vec::<WeightEntry>::deserialize(d)?;
        let mut weights: [Rational; 8] = std::array::from_fn(|_| Rational::zero());
        for e in entries {
            weights[e.state.index()] += e.weight;
        }
        Ok(EightStateDistribution { weights })
    }
}

pub fn eight_state_gate(gate: Gate, d: &EightStateDistribution) -> EightStateDistribution {
    d.pushforward(|s| vec![(rat(1, 1), s.apply(gate))])
}

/// T₁ is the uniform mixture of the four Pauli images; T₂ follows it with H.
pub fn eight_state_blowtorch(which: Blowtorch, d: &EightStateDistribution) -> EightStateDistribution {
    d.pushforward(|s| {
        Gate::PAULIS
            .iter()
            .map(|g| {
                let t = s.apply(*g);
                (rat(1, 4), if which == Blowtorch::T2 { t.apply(Gate::H) } else { t })
            })
            .collect()
    })
}
