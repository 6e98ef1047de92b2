//! The Grassmann ontological model: three independent pairs of non-disjoint
//! states, one per Pauli axis, and its disjoint refinement into twelve atoms.
//!
//! Block i (axis X, Y, Z in turn) has Wᵢ = λ₊∖λ₋, Xᵢ = λ₋∖λ₊, Yᵢ = λ₊∩λ₋ and
//! Zᵢ = (λ₊∪λ₋)ᶜ, where λ₊ is the ordered pair mapped to the `+` outcome.

use num_traits::One;

use super::{Blowtorch, ModelSystems};
use crate::clifford::{clifford_mixture_tuple, t1_channel, t2_channel};
use crate::ontic::{AtomSet, ConstraintSystem, MinMaxKind, OnticError, PairStructure, RegionExpr};
use crate::scalar::{half, int, max_rat, Rational};
use crate::weyl::{Axis, SixTuple, WeylError, WeylState};

const BLOCKS: usize = 3;

fn label(kind: char, i: usize) -> String {
    format!("{kind}{}", i + 1)
}

fn disjoint_atoms() -> AtomSet {
    let labels = ['W', 'X', 'Y', 'Z'].iter().flat_map(|&k| (0..BLOCKS).map(move |i| label(k, i)));
    AtomSet::new(labels).expect("fixed labels")
}

fn disjoint_system() -> ConstraintSystem {
    let mut sys = ConstraintSystem::without_normalization(disjoint_atoms());
    for i in 0..BLOCKS {
        let [w, x, y, z] = ['W', 'X', 'Y', 'Z'].map(|k| label(k, i));
        let a = RegionExpr::any_of(&[&w, &y]);
        let b = RegionExpr::any_of(&[&x, &y]);
        let block = RegionExpr::any_of(&[&w, &x, &y, &z]);
        sys.add_equality(vec![(int(1), block)], int(1)).expect("atoms exist");
        sys.add_equality(vec![(int(1), a.clone()), (int(1), b.clone())], int(1)).expect("atoms exist");
        sys.add_minmax(MinMaxKind::Max, a.clone().union(b.clone()), a.clone(), b.clone()).expect("atoms exist");
        sys.add_minmax(MinMaxKind::Min, a.clone().intersection(b.clone()), a, b).expect("atoms exist");
    }
    sys.set_normalization(RegionExpr::any_of(&["W1", "X1", "Y1", "Z1"])).expect("atoms exist");
    sys
}

/// Coordinates (a₁, a₂, a₃, b₁, b₂, b₃) with aᵢ = P(Aᵢ), bᵢ = P(Bᵢ).
fn pair_system() -> ConstraintSystem {
    let labels = ['A', 'B'].iter().flat_map(|&k| (0..BLOCKS).map(move |i| label(k, i)));
    let mut sys = ConstraintSystem::without_normalization(AtomSet::new(labels).expect("fixed labels"));
    for i in 0..BLOCKS {
        let terms = vec![(int(1), RegionExpr::atom(label('A', i))), (int(1), RegionExpr::atom(label('B', i)))];
        sys.add_equality(terms, int(1)).expect("atoms exist");
    }
    sys.set_normalization(RegionExpr::any_of(&["A1", "B1"])).expect("atoms exist");
    sys
}

pub fn grassmann_model() -> ModelSystems {
    let disjoint = disjoint_system();
    let blocks: Vec<[String; 4]> = (0..BLOCKS).map(|i| ['W', 'X', 'Y', 'Z'].map(|k| label(k, i))).collect();
    let refs: Vec<[&str; 4]> = blocks.iter().map(|b| [0, 1, 2, 3].map(|k| b[k].as_str())).collect();
    let structure = PairStructure::new(disjoint.atoms(), &refs).expect("atoms exist");
    ModelSystems { disjoint, pairs: pair_system(), structure }
}

fn overlap(t: &SixTuple, axis: Axis) -> Rational {
    half() * (Rational::one() - max_rat(t.plus(axis), t.minus(axis)))
}

/// Twelve disjoint-atom weights of a tuple: wᵢ = g₊ᵢ, xᵢ = g₋ᵢ and
/// yᵢ = zᵢ = ½(1 − max{g₊ᵢ, g₋ᵢ}).
pub fn atoms_from_tuple(t: &SixTuple) -> Vec<Rational> {
    let mut out = Vec::with_capacity(4 * BLOCKS);
    out.extend(Axis::ALL.iter().map(|&a| t.plus(a).clone()));
    out.extend(Axis::ALL.iter().map(|&a| t.minus(a).clone()));
    out.extend(Axis::ALL.iter().map(|&a| overlap(t, a)));
    out.extend(Axis::ALL.iter().map(|&a| overlap(t, a)));
    out
}

/// Inverse of [`atoms_from_tuple`] on points satisfying the disjoint system.
pub fn tuple_from_atoms(atoms: &[Rational]) -> Result<SixTuple, OnticError> {
    let sys = disjoint_system();
    if let Some(detail) = sys.violation(atoms) {
        return Err(OnticError::EntryViolatesSystem { index: 0, detail });
    }
    let entries: [Rational; 6] = std::array::from_fn(|k| atoms[k].clone());
    SixTuple::new(entries).map_err(|e| OnticError::EntryViolatesSystem { index: 0, detail: e.to_string() })
}

/// Pair coordinates (a₁, a₂, a₃, b₁, b₂, b₃) with aᵢ = wᵢ + yᵢ, bᵢ = xᵢ + yᵢ.
pub fn pair_weights_from_tuple(t: &SixTuple) -> Vec<Rational> {
    let mut out: Vec<Rational> = Axis::ALL.iter().map(|&a| t.plus(a) + overlap(t, a)).collect();
    out.extend(Axis::ALL.iter().map(|&a| t.minus(a) + overlap(t, a)));
    out
}

/// Blowtorch on a tuple: the tuple's state pushed through the Clifford mixture.
pub fn grassmann_blowtorch(which: Blowtorch, t: &SixTuple) -> Result<SixTuple, WeylError> {
    let state = WeylState::from_bloch(&t.to_bloch()?);
    let channel = match which {
        Blowtorch::T1 => t1_channel(),
        Blowtorch::T2 => t2_channel(),
    };
    clifford_mixture_tuple(&channel, &state)
}
