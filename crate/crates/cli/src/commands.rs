//! One function per subcommand, each returning an [`ExperimentReport`].

use std::fs;
use std::path::PathBuf;

use serde_json::{json, Value};

use wwm_core::clifford::{parse_gate_sequence, GateToken};
use wwm_core::models::{
    decompose_on_lambda_prime, eight_state_blowtorch, grassmann_blowtorch, measure_pauli, Blowtorch,
    EightStateDistribution, ModelName, SystemForm,
};
use wwm_core::ontic::{
    common_region, enumerate_families, is_single_convex_set, nondisjoint_convex_combine, parse_system,
    ConstraintSystem, PairStructure,
};
use wwm_core::scalar::{half, serde_rational::Q};
use wwm_core::weyl::six_tuple;
use wwm_core::{Axis, SixTuple};

use crate::report::{ExperimentReport, Verdict};
use crate::state::StateSpec;
use crate::CliError;

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("core records serialize")
}

fn rationals(v: &[wwm_core::Rational]) -> Value {
    to_value(&v.iter().cloned().map(Q).collect::<Vec<_>>())
}

/// Runs T1 and T2 on one input and compares the ontic outputs.
pub fn cmd_blowtorch(model: ModelName, state: &StateSpec) -> Result<ExperimentReport, CliError> {
    let inputs = json!({ "state": state.to_string() });
    let (t1, t2, same) = match model {
        ModelName::EightState => {
            let d = EightStateDistribution::point_mass(state.atom()?);
            let t1 = eight_state_blowtorch(Blowtorch::T1, &d);
            let t2 = eight_state_blowtorch(Blowtorch::T2, &d);
            (to_value(&t1), to_value(&t2), t1 == t2)
        }
        ModelName::Grassmann => {
            let t = six_tuple(&state.weyl()?);
            let run = |which| grassmann_blowtorch(which, &t).map_err(|e| CliError::usage(e.to_string()));
            let (t1, t2): (SixTuple, SixTuple) = (run(Blowtorch::T1)?, run(Blowtorch::T2)?);
            (to_value(&t1), to_value(&t2), t1 == t2)
        }
        ModelName::ThreeState => {
            return Err(CliError::usage("blowtorch runs on the eight-state or grassmann model"));
        }
    };
    let outputs = json!({ "t1": t1, "t2": t2 });
    let (verdict, witness) = if same {
        (Verdict::NonContextual, None)
    } else {
        (Verdict::Contextual, Some(json!({ "input": state.to_string(), "t1": t1, "t2": t2 })))
    };
    Ok(ExperimentReport::new("blowtorch", Some(model.as_str()), inputs, outputs).with_verdict(verdict, witness))
}

/// Where the constraint system for `families` comes from.
#[derive(Clone, Debug)]
pub enum FamiliesSource {
    Model(ModelName, SystemForm),
    /// A system written in the constraint DSL.
    File(PathBuf),
}

/// Enumerates the solution families of a system, their common region and
/// whether their union is convex.
pub fn cmd_families(source: &FamiliesSource) -> Result<ExperimentReport, CliError> {
    let (model, inputs, sys, structure): (Option<&str>, Value, ConstraintSystem, Option<PairStructure>) = match source {
        FamiliesSource::Model(name, form) => {
            let systems = name
                .systems()
                .ok_or_else(|| CliError::usage(format!("model {name} has no constraint system")))?;
            let sys = systems.system(*form).clone();
            let structure = (*form == SystemForm::Disjoint).then(|| systems.structure.clone());
            (Some(name.as_str()), json!({ "form": form.to_string() }), sys, structure)
        }
        FamiliesSource::File(path) => {
            let display = path.display().to_string();
            let src = fs::read_to_string(path).map_err(|e| CliError::Io { path: display.clone(), message: e.to_string() })?;
            let sys = parse_system(&src).map_err(|e| CliError::usage(format!("{display}: {e}")))?;
            (None, json!({ "system": display }), sys, None)
        }
    };
    let families = enumerate_families(&sys).map_err(|e| CliError::usage(e.to_string()))?;
    let convexity = is_single_convex_set(&families, &sys);
    let common = common_region(&families);
    let common_point = common.as_ref().map(|c| rationals(&c.vertices()[0]));
    let mixture = match (&convexity.counterexample, &structure) {
        (Some(ce), Some(st)) => {
            let entries = [(half(), ce.first.clone()), (half(), ce.second.clone())];
            let mixed = nondisjoint_convex_combine(st, &sys, &entries).map_err(|e| CliError::usage(e.to_string()))?;
            Some(rationals(mixed.weights()))
        }
        _ => None,
    };
    let outputs = json!({
        "atoms": sys.atoms().labels(),
        "count": families.len(),
        "families": families.iter().map(|f| json!({ "form": f.to_string(), "record": to_value(f) })).collect::<Vec<_>>(),
        "common": common.as_ref().map(|c| json!({ "form": c.to_string(), "dimension": c.dimension() })),
        "common_point": common_point,
        "nondisjoint_mixture": mixture,
    });
    let verdict = if convexity.single_convex_set { Verdict::Convex } else { Verdict::NonConvex };
    let witness = convexity.counterexample.as_ref().map(to_value);
    Ok(ExperimentReport::new("families", model, inputs, outputs).with_verdict(verdict, witness))
}

/// Applies gate tokens left to right, recording the state after each one.
pub fn cmd_evolve(gates: &str, state: &StateSpec) -> Result<ExperimentReport, CliError> {
    let tokens: Vec<GateToken> = parse_gate_sequence(gates).map_err(|e| CliError::usage(e.to_string()))?;
    let mut s = state.weyl()?;
    let record = |step: Option<GateToken>, s: &wwm_core::WeylState| {
        json!({ "gate": step.map(|t| t.to_string()), "bloch": to_value(&s.bloch()), "six_tuple": to_value(&six_tuple(s)) })
    };
    let mut steps = vec![record(None, &s)];
    for t in &tokens {
        s = t.apply(&s);
        steps.push(record(Some(*t), &s));
    }
    let inputs = json!({ "gates": tokens.iter().map(ToString::to_string).collect::<Vec<_>>(), "state": state.to_string() });
    let outputs = json!({ "final": to_value(&s.bloch()), "steps": steps });
    Ok(ExperimentReport::new("evolve", Some(ModelName::Grassmann.as_str()), inputs, outputs))
}

/// Outcome probabilities of a Pauli measurement through the Λ′ decomposition.
pub fn cmd_measure(state: &StateSpec, pauli: Axis) -> Result<ExperimentReport, CliError> {
    let t = six_tuple(&state.weyl()?);
    let (plus, minus) = measure_pauli(&t, pauli);
    let inputs = json!({ "state": state.to_string(), "pauli": pauli.name().to_string() });
    let outputs = json!({
        "six_tuple": to_value(&t),
        "plus": to_value(&Q(plus)),
        "minus": to_value(&Q(minus)),
    });
    Ok(ExperimentReport::new("measure", Some(ModelName::Grassmann.as_str()), inputs, outputs))
}

/// Weight of the state on each Λ′ region.
pub fn cmd_regions(state: &StateSpec) -> Result<ExperimentReport, CliError> {
    let t = six_tuple(&state.weyl()?);
    let d = decompose_on_lambda_prime(&t);
    let support: Vec<String> = d.support().iter().map(ToString::to_string).collect();
    let inputs = json!({ "state": state.to_string() });
    let outputs = json!({ "six_tuple": to_value(&t), "regions": to_value(&d), "support": support, "total": to_value(&Q(d.total())) });
    Ok(ExperimentReport::new("regions", Some(ModelName::Grassmann.as_str()), inputs, outputs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> StateSpec {
        s.parse().unwrap()
    }

    #[test]
    fn blowtorch_verdicts() {
        let g = cmd_blowtorch(ModelName::Grassmann, &spec("stab +z")).unwrap();
        assert_eq!(g.verdict, Some(Verdict::NonContextual));
        assert_eq!(g.outputs["t1"], g.outputs["t2"]);
        let e = cmd_blowtorch(ModelName::EightState, &spec("atom +++")).unwrap();
        assert_eq!(e.verdict, Some(Verdict::Contextual));
        assert!(e.witness.is_some());
        assert!(cmd_blowtorch(ModelName::ThreeState, &spec("stab +z")).is_err());
        assert!(cmd_blowtorch(ModelName::EightState, &spec("stab +z")).is_err());
    }

    #[test]
    fn family_reports() {
        let three = cmd_families(&FamiliesSource::Model(ModelName::ThreeState, SystemForm::Disjoint)).unwrap();
        assert_eq!(three.outputs["count"], 2);
        assert_eq!(three.verdict, Some(Verdict::NonConvex));
        assert!(three.outputs["nondisjoint_mixture"].is_array());
        let pairs = cmd_families(&FamiliesSource::Model(ModelName::Grassmann, SystemForm::Pairs)).unwrap();
        assert_eq!(pairs.outputs["count"], 1);
        assert_eq!(pairs.verdict, Some(Verdict::Convex));
    }

    #[test]
    fn measure_and_regions() {
        let m = cmd_measure(&spec("stab +z"), Axis::X).unwrap();
        assert_eq!(m.outputs["plus"], json!({"num": 1, "den": 2}));
        let r = cmd_regions(&spec("bloch 0,0,0")).unwrap();
        assert_eq!(r.outputs["support"].as_array().unwrap().len(), 8);
        assert_eq!(r.outputs["total"], json!({"num": 1, "den": 1}));
    }
}
