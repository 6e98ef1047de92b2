//! Exact distributions over atoms and the Kolmogorov-axiom audit.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::region::{AtomSet, RegionExpr};
use super::OnticError;
use crate::scalar::{fmt_rational, serde_rational, Rational};

/// Weights per atom. Weights are not validated on construction so that
/// defective distributions can be audited by [`check_kolmogorov`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomDistribution {
    atoms: AtomSet,
    #[serde(with = "serde_rational::vec")]
    weights: Vec<Rational>,
    normalization: RegionExpr,
}

impl AtomDistribution {
    pub fn new(atoms: AtomSet, weights: Vec<Rational>) -> Result<Self, OnticError> {
        if weights.len() != atoms.len() {
            return Err(OnticError::DimensionMismatch { expected: atoms.len(), got: weights.len() });
        }
        Ok(AtomDistribution { atoms, weights, normalization: RegionExpr::Full })
    }

    pub fn uniform(atoms: AtomSet) -> Self {
        let w = Rational::new(1.into(), (atoms.len() as i64).into());
        let weights = vec![w; atoms.len()];
        AtomDistribution { atoms, weights, normalization: RegionExpr::Full }
    }

    /// Declares the region whose probability must be one.
    pub fn with_normalization(mut self, region: RegionExpr) -> Result<Self, OnticError> {
        region.evaluate(&self.atoms)?;
        self.normalization = region;
        Ok(self)
    }

    pub fn atoms(&self) -> &AtomSet {
        &self.atoms
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn into_weights(self) -> Vec<Rational> {
        self.weights
    }

    pub fn normalization(&self) -> &RegionExpr {
        &self.normalization
    }

    pub fn weight(&self, label: &str) -> Result<&Rational, OnticError> {
        Ok(&self.weights[self.atoms.index_of(label)?])
    }

    pub fn mask_probability(&self, mask: u64) -> Rational {
        self.atoms.members(mask).map(|i| &self.weights[i]).sum()
    }

    pub fn region_probability(&self, r: &RegionExpr) -> Result<Rational, OnticError> {
        Ok(self.mask_probability(r.evaluate(&self.atoms)?))
    }
}

impl fmt::Display for AtomDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(fmt_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub fn region_probability(d: &AtomDistribution, r: &RegionExpr) -> Result<Rational, OnticError> {
    d.region_probability(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Axiom {
    NonNegativity,
    Normalization,
    EmptySet,
    Additivity,
    SumRule,
    Monotonicity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    /// Number of instances examined.
    pub cases: usize,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KolmogorovReport {
    pub checks: Vec<AxiomCheck>,
}

impl KolmogorovReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_violation(&self) -> Option<Axiom> {
        self.checks.iter().find(|c| !c.passed).map(|c| c.axiom)
    }
}

/// Exhaustive over all pairs of regions up to this many atoms; sampled above.
const EXHAUSTIVE_ATOMS: usize = 5;
const SAMPLED_PAIRS: usize = 256;

fn region_pairs(atoms: &AtomSet) -> Vec<(u64, u64)> {
    let full = atoms.full_mask();
    if atoms.len() <= EXHAUSTIVE_ATOMS {
        (0..=full).flat_map(|a| (0..=full).map(move |b| (a, b))).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        (0..SAMPLED_PAIRS).map(|_| (rng.random::<u64>() & full, rng.random::<u64>() & full)).collect()
    }
}

struct Tally {
    axiom: Axiom,
    cases: usize,
    detail: Option<String>,
}

impl Tally {
    fn new(axiom: Axiom) -> Self {
        Tally { axiom, cases: 0, detail: None }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.detail.is_none() {
            self.detail = Some(detail());
        }
    }

    fn finish(self) -> AxiomCheck {
        AxiomCheck { axiom: self.axiom, passed: self.detail.is_none(), cases: self.cases, detail: self.detail }
    }
}

/// Audits a distribution against the probability axioms over its finite
/// power set. Violations are reported, never raised.
pub fn check_kolmogorov(d: &AtomDistribution) -> KolmogorovReport {
    let atoms = d.atoms();
    let name = |m: u64| format!("{{{}}}", atoms.members(m).map(|i| atoms.label(i)).collect::<Vec<_>>().join(","));

    let mut non_neg = Tally::new(Axiom::NonNegativity);
    for (i, w) in d.weights().iter().enumerate() {
        non_neg.record(!w.is_negative(), || format!("P({}) = {}", atoms.label(i), fmt_rational(w)));
    }

    let mut norm = Tally::new(Axiom::Normalization);
    let total = d.region_probability(d.normalization()).expect("validated on construction");
    norm.record(total.is_one(), || format!("P({}) = {}", d.normalization(), fmt_rational(&total)));

    let mut empty = Tally::new(Axiom::EmptySet);
    let p0 = d.mask_probability(0);
    empty.record(p0.is_zero(), || format!("P(empty) = {}", fmt_rational(&p0)));

    let mut additivity = Tally::new(Axiom::Additivity);
    let mut sum_rule = Tally::new(Axiom::SumRule);
    let mut monotone = Tally::new(Axiom::Monotonicity);
    for (a, b) in region_pairs(atoms) {
        let (pa, pb) = (d.mask_probability(a), d.mask_probability(b));
        let (pu, pi) = (d.mask_probability(a | b), d.mask_probability(a & b));
        if a & b == 0 {
            additivity.record(pu == &pa + &pb, || format!("P({} ∪ {}) != P + P", name(a), name(b)));
        }
        sum_rule.record(pu == &pa + &pb - &pi, || format!("sum rule fails on {}, {}", name(a), name(b)));
        // B ⊂ A: P(B) ≤ P(A) and P(A ∖ B) = P(A) − P(B)
        let sub = a & b;
        let ok = d.mask_probability(sub) <= pa && d.mask_probability(a & !sub) == &pa - d.mask_probability(sub);
        monotone.record(ok, || format!("P({}) > P({})", name(sub), name(a)));
    }

    KolmogorovReport {
        checks: vec![
            non_neg.finish(),
            norm.finish(),
            empty.finish(),
            additivity.finish(),
            sum_rule.finish(),
            monotone.finish(),
        ],
    }
}
