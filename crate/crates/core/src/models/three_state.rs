//! The single-pair example: non-disjoint states A, B inside C, refined into
//! disjoint W = A∖B, X = B∖A, Y = A∩B, Z = (A∪B)ᶜ.

use super::ModelSystems;
use crate::ontic::{AtomSet, ConstraintSystem, MinMaxKind, PairStructure, RegionExpr};
use crate::scalar::int;

fn disjoint_system() -> ConstraintSystem {
    let atoms = AtomSet::new(["W", "X", "Y", "Z"]).expect("fixed labels");
    let a = RegionExpr::any_of(&["W", "Y"]);
    let b = RegionExpr::any_of(&["X", "Y"]);
    let mut sys = ConstraintSystem::new(atoms);
    sys.add_equality(vec![(int(1), a.clone()), (int(1), b.clone())], int(1)).expect("atoms exist");
    sys.add_minmax(MinMaxKind::Max, a.clone().union(b.clone()), a.clone(), b.clone()).expect("atoms exist");
    sys.add_minmax(MinMaxKind::Min, a.clone().intersection(b.clone()), a, b).expect("atoms exist");
    sys
}

/// Coordinates (P(A), P(B), P(C)). Union and intersection are not
/// expressible over these coordinates, so only the linear constraints appear.
fn pair_system() -> ConstraintSystem {
    let atoms = AtomSet::new(["A", "B", "C"]).expect("fixed labels");
    let mut sys = ConstraintSystem::without_normalization(atoms);
    sys.add_equality(vec![(int(1), RegionExpr::atom("C"))], int(1)).expect("atoms exist");
    sys.add_equality(vec![(int(1), RegionExpr::atom("A")), (int(1), RegionExpr::atom("B"))], int(1))
        .expect("atoms exist");
    sys.set_normalization(RegionExpr::atom("C")).expect("atoms exist");
    sys
}

pub fn three_state_model() -> ModelSystems {
    let disjoint = disjoint_system();
    let structure = PairStructure::new(disjoint.atoms(), &[["W", "X", "Y", "Z"]]).expect("atoms exist");
    ModelSystems { disjoint, pairs: pair_system(), structure }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::SystemForm;
    use crate::ontic::{check_kolmogorov, enumerate_families, is_single_convex_set, parse_system};

    #[test]
    fn text_form_matches() {
        let parsed = parse_system(include_str!("../../data/three_state.ontic")).unwrap();
        assert_eq!(parsed, three_state_model().disjoint);
    }

    #[test]
    fn families_and_convexity() {
        let m = three_state_model();
        let fams = enumerate_families(&m.disjoint).unwrap();
        assert_eq!(fams.len(), 2);
        assert!(!is_single_convex_set(&fams, &m.disjoint).single_convex_set);
        let pairs = enumerate_families(&m.pairs).unwrap();
        assert_eq!(pairs.len(), 1);
        assert_eq!(pairs[0].to_string(), "(a, 1 - a, 1)");
        assert!(is_single_convex_set(&pairs, &m.pairs).single_convex_set);
        for (form, f) in fams.iter().map(|f| (SystemForm::Disjoint, f)).chain(pairs.iter().map(|f| (SystemForm::Pairs, f))) {
            let zero = vec![int(0); f.dimension()];
            let d = m.system(form).distribution(f.instantiate(&zero).unwrap()).unwrap();
            assert!(check_kolmogorov(&d).passed());
        }
    }
}
