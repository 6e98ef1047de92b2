//! Clifford gates as signed permutations of the generators, their action on
//! Weyl states, and the depolarizing channels T₁ and T₂.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grassmann::{Generator, Sign};
use crate::scalar::{rat, Rational};
use crate::weyl::{convex_combine, convex_combine_tuples, six_tuple, SixTuple, WeylError, WeylState};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliffordError {
    #[error("generator images do not form a permutation")]
    NotBijective,
    #[error("unknown gate token `{0}` (expected I, X, Y, Z, H, T1 or T2)")]
    UnknownToken(String),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

/// ξk ↦ ±ξ_{π(k)} for a permutation π.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(Generator, Sign)>", into = "Vec<(Generator, Sign)>")]
pub struct CliffordMap {
    images: [(Generator, Sign); 3],
}

impl TryFrom<Vec<(Generator, Sign)>> for CliffordMap {
    type Error = CliffordError;
    fn try_from(v: Vec<(Generator, Sign)>) -> Result<Self, CliffordError> {
        let images: [(Generator, Sign); 3] = v.try_into().map_err(|_| CliffordError::NotBijective)?;
        CliffordMap::new(images)
    }
}

impl From<CliffordMap> for Vec<(Generator, Sign)> {
    fn from(m: CliffordMap) -> Self {
        m.images.to_vec()
    }
}

impl CliffordMap {
    /// `images[k]` is the signed image of the k-th generator (p, q, r).
    pub fn new(images: [(Generator, Sign); 3]) -> Result<Self, CliffordError> {
        let mut seen = [false; 3];
        for (g, _) in images {
            if std::mem::replace(&mut seen[g.index()], true) {
                return Err(CliffordError::NotBijective);
            }
        }
        Ok(CliffordMap { images })
    }

    fn from_signs(perm: [Generator; 3], signs: [i8; 3]) -> Self {
        let s = |v: i8| if v > 0 { Sign::Plus } else { Sign::Minus };
        CliffordMap::new([(perm[0], s(signs[0])), (perm[1], s(signs[1])), (perm[2], s(signs[2]))])
            .expect("static table is a permutation")
    }

    pub fn identity() -> Self {
        Self::from_signs(Generator::ALL, [1, 1, 1])
    }

    pub fn image(&self, g: Generator) -> (Generator, Sign) {
        self.images[g.index()]
    }

    pub fn images(&self) -> &[(Generator, Sign); 3] {
        &self.images
    }

    /// The map applying `first`, then `then`.
    pub fn compose(first: &CliffordMap, then: &CliffordMap) -> CliffordMap {
        // ξk ↦ s·ξj under `first`, and ξj ↦ s'·ξl under `then`
        let images = first.images.map(|(g, s)| {
            let (h, t) = then.image(g);
            (h, s * t)
        });
        CliffordMap { images }
    }

    pub fn inverse(&self) -> CliffordMap {
        let mut images = [(Generator::P, Sign::Plus); 3];
        for (k, (g, s)) in self.images.iter().enumerate() {
            images[g.index()] = (Generator::ALL[k], *s);
        }
        CliffordMap { images }
    }
}

impl fmt::Display for CliffordMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .images
            .iter()
            .map(|(g, s)| format!("{}{g}", if *s == Sign::Minus { "-" } else { "" }))
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn compose(first: &CliffordMap, then: &CliffordMap) -> CliffordMap {
    CliffordMap::compose(first, then)
}

pub fn inverse(m: &CliffordMap) -> CliffordMap {
    m.inverse()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Gate {
    I,
    X,
    Y,
    Z,
    H,
}

impl Gate {
    pub const ALL: [Gate; 5] = [Gate::I, Gate::X, Gate::Y, Gate::Z, Gate::H];
    pub const PAULIS: [Gate; 4] = [Gate::I, Gate::X, Gate::Y, Gate::Z];

    pub fn name(self) -> &'static str {
        match self {
            Gate::I => "I",
            Gate::X => "X",
            Gate::Y => "Y",
            Gate::Z => "Z",
            Gate::H => "H",
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Gate {
    type Err = CliffordError;
    fn from_str(s: &str) -> Result<Self, CliffordError> {
        Gate::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| CliffordError::UnknownToken(s.to_string()))
    }
}

/// Generator substitution implementing each gate.
///
/// Y flips ξp, ξq and Z flips ξp, ξr: these are the maps that send the Bloch
/// vector (α, β, γ) to (−α, β, −γ) and (−α, −β, γ) respectively.
pub fn named_map(gate: Gate) -> CliffordMap {
    use Generator::{P, Q, R};
    match gate {
        Gate::I => CliffordMap::identity(),
        Gate::X => CliffordMap::from_signs([P, Q, R], [1, -1, -1]),
        Gate::Y => CliffordMap::from_signs([P, Q, R], [-1, -1, 1]),
        Gate::Z => CliffordMap::from_signs([P, Q, R], [-1, 1, -1]),
        Gate::H => CliffordMap::from_signs([Q, P, R], [1, 1, -1]),
    }
}

pub fn apply_clifford(m: &CliffordMap, s: &WeylState) -> WeylState {
    WeylState::from_symbol_unchecked(s.symbol().substitute_generators(m))
}

/// Applies each map to the state and mixes the results with the given weights.
pub fn clifford_mixture(entries: &[(Rational, CliffordMap)], s: &WeylState) -> Result<WeylState, WeylError> {
    let images: Vec<(Rational, WeylState)> = entries.iter().map(|(w, m)| (w.clone(), apply_clifford(m, s))).collect();
    convex_combine(&images)
}

/// Same channel, evaluated by mixing the probability tuples of the images.
pub fn clifford_mixture_tuple(entries: &[(Rational, CliffordMap)], s: &WeylState) -> Result<SixTuple, WeylError> {
    let images: Vec<(Rational, SixTuple)> =
        entries.iter().map(|(w, m)| (w.clone(), six_tuple(&apply_clifford(m, s)))).collect();
    convex_combine_tuples(&images)
}

/// T₁ as a weighted list of maps: the uniform Pauli twirl.
pub fn t1_channel() -> Vec<(Rational, CliffordMap)> {
    Gate::PAULIS.iter().map(|g| (rat(1, 4), named_map(*g))).collect()
}

/// T₂ = H ∘ T₁ as a weighted list of maps.
pub fn t2_channel() -> Vec<(Rational, CliffordMap)> {
    let h = named_map(Gate::H);
    t1_channel().into_iter().map(|(w, m)| (w, compose(&m, &h))).collect()
}

pub fn blowtorch_t1(s: &WeylState) -> WeylState {
    clifford_mixture(&t1_channel(), s).expect("uniform weights")
}

pub fn blowtorch_t2(s: &WeylState) -> WeylState {
    clifford_mixture(&t2_channel(), s).expect("uniform weights")
}

/// One step of a gate sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GateToken {
    Gate(Gate),
    T1,
    T2,
}

impl GateToken {
    pub fn apply(self, s: &WeylState) -> WeylState {
        match self {
            GateToken::Gate(g) => apply_clifford(&named_map(g), s),
            GateToken::T1 => blowtorch_t1(s),
            GateToken::T2 => blowtorch_t2(s),
        }
    }
}

impl fmt::Display for GateToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateToken::Gate(g) => write!(f, "{g}"),
            GateToken::T1 => f.write_str("T1"),
            GateToken::T2 => f.write_str("T2"),
        }
    }
}

impl FromStr for GateToken {
    type Err = CliffordError;
    fn from_str(s: &str) -> Result<Self, CliffordError> {
        match s.trim().to_ascii_uppercase().as_str() {
            "T1" => Ok(GateToken::T1),
            "T2" => Ok(GateToken::T2),
            _ => s.parse().map(GateToken::Gate),
        }
    }
}

/// Parses whitespace-separated tokens, applied left to right.
pub fn parse_gate_sequence(src: &str) -> Result<Vec<GateToken>, CliffordError> {
    src.split_whitespace().map(str::parse).collect()
}

pub fn apply_sequence(tokens: &[GateToken], s: &WeylState) -> WeylState {
    tokens.iter().fold(s.clone(), |acc, t| t.apply(&acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Rational};
    use crate::weyl::{stabilizer_states, BlochVector, StabilizerState};
    use Generator::{P, Q, R};

    fn state(a: Rational, b: Rational, c: Rational) -> WeylState {
        WeylState::from_bloch(&BlochVector::new(a, b, c).unwrap())
    }

    fn basis() -> Vec<WeylState> {
        let mut v = stabilizer_states();
        v.push(state(rat(1, 3), rat(-1, 2), rat(1, 4)));
        v
    }

    #[test]
    fn named_maps_match_tables() {
        let x = named_map(Gate::X);
        assert_eq!(x.images(), &[(P, Sign::Plus), (Q, Sign::Minus), (R, Sign::Minus)]);
        assert_eq!(named_map(Gate::I), CliffordMap::identity());
        let h = named_map(Gate::H);
        assert_eq!(h.images(), &[(Q, Sign::Plus), (P, Sign::Plus), (R, Sign::Minus)]);
        assert_eq!(h.to_string(), "(xi_q, xi_p, -xi_r)");
    }

    #[test]
    fn gate_action_on_bloch_vectors() {
        let (a, b, c) = (rat(1, 3), rat(-1, 2), rat(1, 4));
        let s = state(a.clone(), b.clone(), c.clone());
        let bloch = |g| apply_clifford(&named_map(g), &s).bloch().components();
        assert_eq!(bloch(Gate::I), [a.clone(), b.clone(), c.clone()]);
        assert_eq!(bloch(Gate::X), [a.clone(), -b.clone(), -c.clone()]);
        assert_eq!(bloch(Gate::Y), [-a.clone(), b.clone(), -c.clone()]);
        assert_eq!(bloch(Gate::Z), [-a.clone(), -b.clone(), c.clone()]);
        assert_eq!(bloch(Gate::H), [c, -b, a]);
    }

    #[test]
    fn group_relations() {
        let m = |g| named_map(g);
        assert_eq!(compose(&m(Gate::H), &m(Gate::H)), CliffordMap::identity());
        assert_eq!(compose(&compose(&m(Gate::H), &m(Gate::X)), &m(Gate::H)), m(Gate::Z));
        assert_eq!(compose(&compose(&m(Gate::H), &m(Gate::Z)), &m(Gate::H)), m(Gate::X));
        for g in Gate::ALL {
            assert_eq!(inverse(&m(g)), m(g));
            assert_eq!(compose(&m(g), &m(g)), CliffordMap::identity());
        }
        let xyz = compose(&compose(&m(Gate::X), &m(Gate::Y)), &m(Gate::Z));
        for s in basis() {
            assert_eq!(apply_clifford(&xyz, &s), s);
        }
    }

    #[test]
    fn compose_order_and_inverse() {
        let hx = compose(&named_map(Gate::H), &named_map(Gate::X));
        let s = state(rat(1, 3), rat(-1, 2), rat(1, 4));
        let stepwise = apply_clifford(&named_map(Gate::X), &apply_clifford(&named_map(Gate::H), &s));
        assert_eq!(apply_clifford(&hx, &s), stepwise);
        assert_eq!(compose(&hx, &inverse(&hx)), CliffordMap::identity());
        let cyc = CliffordMap::new([(Q, Sign::Minus), (R, Sign::Plus), (P, Sign::Minus)]).unwrap();
        assert_eq!(compose(&inverse(&cyc), &cyc), CliffordMap::identity());
    }

    #[test]
    fn rejects_non_bijective_images() {
        assert_eq!(CliffordMap::new([(P, Sign::Plus), (P, Sign::Minus), (R, Sign::Plus)]), Err(CliffordError::NotBijective));
    }

    #[test]
    fn blowtorch_fully_depolarizes() {
        let mixed = WeylState::maximally_mixed();
        for s in basis() {
            assert_eq!(blowtorch_t1(&s), mixed);
            assert_eq!(blowtorch_t2(&s), mixed);
        }
        assert_eq!(blowtorch_t1(&mixed), mixed);
    }

    #[test]
    fn tuple_mixture_matches_state_mixture() {
        for s in basis() {
            let via_state = six_tuple(&clifford_mixture(&t2_channel(), &s).unwrap());
            assert_eq!(clifford_mixture_tuple(&t2_channel(), &s).unwrap(), via_state);
        }
    }

    #[test]
    fn gate_sequences() {
        let toks = parse_gate_sequence("H x  T1").unwrap();
        assert_eq!(toks, vec![GateToken::Gate(Gate::H), GateToken::Gate(Gate::X), GateToken::T1]);
        assert!(matches!(parse_gate_sequence("H S"), Err(CliffordError::UnknownToken(t)) if t == "S"));
        let plus_z = StabilizerState::PlusZ.weyl();
        let out = apply_sequence(&parse_gate_sequence("H Z").unwrap(), &plus_z);
        // H: +z -> +x, Z: +x -> -x
        assert_eq!(out.bloch().components(), [int(-1), int(0), int(0)]);
        assert_eq!(apply_sequence(&[], &plus_z), plus_z);
    }

    #[test]
    fn serde_round_trip() {
        let h = named_map(Gate::H);
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(serde_json::from_str::<CliffordMap>(&json).unwrap(), h);
        assert!(serde_json::from_str::<CliffordMap>(r#"[["p","Plus"],["p","Plus"],["r","Plus"]]"#).is_err());
    }
}
