//! Seeded self-check over the public operations of every module.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use wwm_core::clifford::{apply_clifford, compose, inverse, named_map, CliffordMap, Gate, GateToken};
use wwm_core::models::{
    decompose_on_lambda_prime, exhibits_transformation_contextuality, grassmann_blowtorch, grassmann_model,
    measure_pauli, three_state_model, tuple_from_atoms, atoms_from_tuple, Blowtorch, EightStateModel, GrassmannModel,
    SystemForm,
};
use wwm_core::ontic::{check_kolmogorov, common_region, enumerate_families, is_single_convex_set};
use wwm_core::scalar::{half, int, rat};
use wwm_core::weyl::{random_bloch, six_tuple};
use wwm_core::{Axis, ExactComplex, Generator, GrassmannElement, Monomial, Rational, SixTuple, StabilizerState, WeylState};

use crate::report::{ExperimentReport, Verdict};

pub const DEFAULT_SEED: u64 = 2024;

/// Random states drawn per randomized suite.
const SWEEP: usize = 64;

#[derive(Debug, Serialize)]
struct Suite {
    name: &'static str,
    cases: usize,
    failed: usize,
    /// First few failure messages.
    failures: Vec<String>,
}

impl Suite {
    fn new(name: &'static str) -> Self {
        Suite { name, cases: 0, failed: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < 5 {
                self.failures.push(what());
            }
        }
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.random_range(-4..=4), rng.random_range(1..=4))
}

fn random_element(rng: &mut ChaCha8Rng) -> GrassmannElement {
    GrassmannElement::from_terms(
        Monomial::all()
            .into_iter()
            .map(|m| (m, ExactComplex::new(random_rational(rng), random_rational(rng))))
            .collect::<Vec<_>>(),
    )
}

fn random_state(rng: &mut ChaCha8Rng) -> WeylState {
    WeylState::from_bloch(&random_bloch(rng))
}

fn algebra(rng: &mut ChaCha8Rng) -> Suite {
    let mut s = Suite::new("grassmann-algebra");
    for a in Generator::ALL {
        let ea = GrassmannElement::generator(a);
        s.check(ea.multiply(&ea).is_zero(), || format!("xi_{a:?}^2 != 0"));
        for b in Generator::ALL {
            let eb = GrassmannElement::generator(b);
            s.check(ea.multiply(&eb).add(&eb.multiply(&ea)).is_zero(), || format!("xi_{a:?}, xi_{b:?} commute"));
        }
    }
    for _ in 0..SWEEP {
        let (a, b, c) = (random_element(rng), random_element(rng), random_element(rng));
        s.check(a.multiply(&b).multiply(&c) == a.multiply(&b.multiply(&c)), || format!("associativity fails for {a}"));
        s.check(a.to_string().parse::<GrassmannElement>().ok() == Some(a.clone()), || format!("notation round trip: {a}"));
    }
    s
}

fn weyl(rng: &mut ChaCha8Rng) -> Suite {
    let mut s = Suite::new("weyl-states");
    for _ in 0..SWEEP {
        let st = random_state(rng);
        let t = six_tuple(&st);
        s.check(t.to_bloch().ok() == Some(st.bloch()), || format!("tuple round trip for {}", st.symbol()));
        s.check(
            Axis::ALL.iter().all(|&a| t.plus(a) * t.minus(a) == int(0)),
            || format!("paired entries both nonzero for {}", st.symbol()),
        );
        s.check(WeylState::from_symbol(st.symbol().clone()).ok() == Some(st.clone()), || "symbol round trip".into());
    }
    s
}

fn clifford(rng: &mut ChaCha8Rng) -> Suite {
    let mut s = Suite::new("clifford-dynamics");
    let id = CliffordMap::identity();
    for g in [Gate::X, Gate::Y, Gate::Z, Gate::H] {
        let m = named_map(g);
        s.check(compose(&m, &m) == id, || format!("{g} squared is not the identity"));
        s.check(compose(&m, &inverse(&m)) == id, || format!("{g} inverse"));
    }
    let (h, x, z) = (named_map(Gate::H), named_map(Gate::X), named_map(Gate::Z));
    s.check(compose(&compose(&h, &x), &h) == z, || "HXH != Z".into());
    s.check(compose(&compose(&h, &z), &h) == x, || "HZH != X".into());
    for _ in 0..SWEEP {
        let st = random_state(rng);
        for g in [Gate::X, Gate::Y, Gate::Z, Gate::H] {
            let out = apply_clifford(&named_map(g), &st);
            s.check(out.bloch().norm_squared() == st.bloch().norm_squared(), || format!("{g} changes the norm"));
        }
    }
    s
}

fn blowtorch(rng: &mut ChaCha8Rng) -> Suite {
    let mut s = Suite::new("blowtorch");
    let mut states: Vec<WeylState> = StabilizerState::ALL.iter().map(|st| st.weyl()).collect();
    states.extend((0..SWEEP).map(|_| random_state(rng)));
    for st in &states {
        let t = six_tuple(st);
        let t1 = GateToken::T1.apply(st);
        let t2 = GateToken::T2.apply(st);
        s.check(six_tuple(&t1) == SixTuple::zero(), || format!("T1 of {} is not maximally mixed", st.symbol()));
        s.check(t1 == t2, || format!("T1 and T2 differ on {}", st.symbol()));
        let g1 = grassmann_blowtorch(Blowtorch::T1, &t);
        let g2 = grassmann_blowtorch(Blowtorch::T2, &t);
        s.check(g1.is_ok() && g1 == g2, || format!("tuple-level blowtorch differs on {}", st.symbol()));
    }
    s
}

fn ontic(rng: &mut ChaCha8Rng) -> Suite {
    let mut s = Suite::new("ontic-families");
    let three = three_state_model();
    let fams = enumerate_families(&three.disjoint).expect("three-state system is feasible");
    s.check(fams.len() == 2, || format!("three-state has {} families", fams.len()));
    s.check(!is_single_convex_set(&fams, &three.disjoint).single_convex_set, || "three-state union is convex".into());
    let g = grassmann_model();
    let fams = enumerate_families(&g.disjoint).expect("grassmann system is feasible");
    s.check(fams.len() == 8, || format!("grassmann has {} families", fams.len()));
    let common = common_region(&fams);
    s.check(
        common.as_ref().is_some_and(|c| c.dimension() == 0 && tuple_from_atoms(&c.vertices()[0]).ok() == Some(SixTuple::zero())),
        || "grassmann families do not share exactly the all-zero tuple".into(),
    );
    let pairs = enumerate_families(g.system(SystemForm::Pairs)).expect("pair system is feasible");
    s.check(
        pairs.len() == 1 && is_single_convex_set(&pairs, g.system(SystemForm::Pairs)).single_convex_set,
        || "pair form is not a single convex set".into(),
    );
    for f in &fams {
        for p in f.sample_points().into_iter().take(4) {
            let d = g.disjoint.distribution(p.clone()).expect("family points satisfy the system");
            s.check(check_kolmogorov(&d).passed(), || format!("Kolmogorov fails at {p:?}"));
        }
    }
    for _ in 0..SWEEP {
        let t = six_tuple(&random_state(rng));
        let atoms = atoms_from_tuple(&t);
        s.check(g.disjoint.satisfies(&atoms), || format!("atoms of {t:?} violate the system"));
        s.check(tuple_from_atoms(&atoms).ok() == Some(t.clone()), || "atom round trip".into());
    }
    s
}

fn models(rng: &mut ChaCha8Rng) -> (Suite, bool) {
    let mut s = Suite::new("models");
    let eight = exhibits_transformation_contextuality(&EightStateModel);
    s.check(eight.contextual, || "eight-state model is not contextual".into());
    let grassmann = exhibits_transformation_contextuality(&GrassmannModel);
    s.check(!grassmann.contextual, || format!("grassmann model is contextual: {:?}", grassmann.witness));
    for st in StabilizerState::ALL {
        let t = six_tuple(&st.weyl());
        for axis in Axis::ALL {
            let expected = if axis != st.axis() {
                (half(), half())
            } else if st.is_plus() {
                (int(1), int(0))
            } else {
                (int(0), int(1))
            };
            s.check(measure_pauli(&t, axis) == expected, || format!("measuring {axis:?} on {st}"));
        }
    }
    for _ in 0..SWEEP {
        let st = random_state(rng);
        let t = six_tuple(&st);
        s.check(decompose_on_lambda_prime(&t).total() == int(1), || format!("decomposition of {t:?} is not normalized"));
        for axis in Axis::ALL {
            let (p, m) = measure_pauli(&t, axis);
            let expected = (int(1) + st.bloch().component(axis)) * half();
            s.check(p == expected && &p + &m == int(1), || format!("measuring {axis:?} on {t:?}"));
        }
    }
    (s, grassmann.contextual)
}

/// Runs every suite; the verdict fails if any case fails.
pub fn cmd_check(seed: u64) -> ExperimentReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (model_suite, unexpected_contextuality) = models(&mut rng);
    let suites = vec![algebra(&mut rng), weyl(&mut rng), clifford(&mut rng), blowtorch(&mut rng), ontic(&mut rng), model_suite];
    let cases: usize = suites.iter().map(|s| s.cases).sum();
    let failed: usize = suites.iter().map(|s| s.failed).sum();
    let verdict = if failed == 0 { Verdict::Pass } else { Verdict::Fail };
    let witness = suites
        .iter()
        .find(|s| s.failed > 0)
        .map(|s| json!({ "suite": s.name, "failures": s.failures }));
    let outputs = json!({
        "cases": cases,
        "failed": failed,
        "unexpected_contextuality": unexpected_contextuality,
        "suites": serde_json::to_value(&suites).expect("suites serialize"),
    });
    ExperimentReport::new("check", None, json!({ "seed": seed }), outputs).with_verdict(verdict, witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_seed_passes() {
        let r = cmd_check(DEFAULT_SEED);
        assert_eq!(r.verdict, Some(Verdict::Pass), "{}", r.to_json());
        assert_eq!(r.outputs["suites"].as_array().unwrap().len(), 6);
    }
}
