//! Linear and min/max constraints on region probabilities.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::distribution::AtomDistribution;
use super::region::{AtomSet, RegionExpr};
use super::OnticError;
use crate::notation::rational_literal;
use crate::scalar::{fmt_rational, max_rat, min_rat, serde_rational, Rational};

/// `Σ cᵢ·P(Rᵢ) = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearEquality {
    pub terms: Vec<Term>,
    #[serde(with = "serde_rational")]
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(with = "serde_rational")]
    pub coefficient: Rational,
    pub region: RegionExpr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MinMaxKind {
    Min,
    Max,
}

/// `P(target) = max{P(first), P(second)}` or the `min` analogue.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinMaxConstraint {
    pub kind: MinMaxKind,
    pub target: RegionExpr,
    pub first: RegionExpr,
    pub second: RegionExpr,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintSystem {
    atoms: AtomSet,
    equalities: Vec<LinearEquality>,
    minmax: Vec<MinMaxConstraint>,
    normalization: RegionExpr,
}

/// Indicator row of a region over the atoms.
pub(crate) fn indicator(atoms: &AtomSet, mask: u64) -> Vec<Rational> {
    (0..atoms.len()).map(|i| if mask >> i & 1 == 1 { Rational::one() } else { Rational::zero() }).collect()
}

fn dot(a: &[Rational], x: &[Rational]) -> Rational {
    a.iter().zip(x).map(|(a, x)| a * x).sum()
}

impl ConstraintSystem {
    /// A system with only the constraints implied by the atoms: weights in
    /// [0, 1] and P(Λ) = 1.
    pub fn new(atoms: AtomSet) -> Self {
        let mut sys = ConstraintSystem { atoms, equalities: Vec::new(), minmax: Vec::new(), normalization: RegionExpr::Full };
        sys.equalities.push(LinearEquality {
            terms: vec![Term { coefficient: Rational::one(), region: RegionExpr::Full }],
            rhs: Rational::one(),
        });
        sys
    }

    /// A system without the implicit P(Λ) = 1 row, for models whose atoms
    /// are not exhaustive.
    pub fn without_normalization(atoms: AtomSet) -> Self {
        ConstraintSystem { atoms, equalities: Vec::new(), minmax: Vec::new(), normalization: RegionExpr::Full }
    }

    pub fn atoms(&self) -> &AtomSet {
        &self.atoms
    }

    pub fn equalities(&self) -> &[LinearEquality] {
        &self.equalities
    }

    pub fn minmax(&self) -> &[MinMaxConstraint] {
        &self.minmax
    }

    pub fn normalization(&self) -> &RegionExpr {
        &self.normalization
    }

    pub fn add_equality(&mut self, terms: Vec<(Rational, RegionExpr)>, rhs: Rational) -> Result<&mut Self, OnticError> {
        for (_, r) in &terms {
            r.evaluate(&self.atoms)?;
        }
        let terms = terms.into_iter().map(|(coefficient, region)| Term { coefficient, region }).collect();
        self.equalities.push(LinearEquality { terms, rhs });
        Ok(self)
    }

    pub fn add_minmax(
        &mut self,
        kind: MinMaxKind,
        target: RegionExpr,
        first: RegionExpr,
        second: RegionExpr,
    ) -> Result<&mut Self, OnticError> {
        for r in [&target, &first, &second] {
            r.evaluate(&self.atoms)?;
        }
        self.minmax.push(MinMaxConstraint { kind, target, first, second });
        Ok(self)
    }

    /// Records the region treated as the whole space by the model. Used when
    /// building distributions; it does not add a constraint by itself.
    pub fn set_normalization(&mut self, region: RegionExpr) -> Result<&mut Self, OnticError> {
        region.evaluate(&self.atoms)?;
        self.normalization = region;
        Ok(self)
    }

    pub(crate) fn region_row(&self, r: &RegionExpr) -> Vec<Rational> {
        indicator(&self.atoms, r.evaluate(&self.atoms).expect("validated on insertion"))
    }

    /// Each equality as `(row, rhs)` with `row · x = rhs`.
    pub(crate) fn equality_rows(&self) -> Vec<(Vec<Rational>, Rational)> {
        self.equalities
            .iter()
            .map(|eq| {
                let mut row = vec![Rational::zero(); self.atoms.len()];
                for t in &eq.terms {
                    for (r, v) in row.iter_mut().zip(self.region_row(&t.region)) {
                        *r += &t.coefficient * v;
                    }
                }
                (row, eq.rhs.clone())
            })
            .collect()
    }

    /// The first violated constraint, if any. Weights must also lie in [0, 1].
    pub fn violation(&self, point: &[Rational]) -> Option<String> {
        if point.len() != self.atoms.len() {
            return Some(format!("expected {} weights, got {}", self.atoms.len(), point.len()));
        }
        for (i, w) in point.iter().enumerate() {
            if w.is_negative() || *w > Rational::one() {
                return Some(format!("P({}) = {} outside [0, 1]", self.atoms.label(i), fmt_rational(w)));
            }
        }
        for (k, (row, rhs)) in self.equality_rows().into_iter().enumerate() {
            let lhs = dot(&row, point);
            if lhs != rhs {
                return Some(format!("{}: {} != {}", self.equalities[k], fmt_rational(&lhs), fmt_rational(&rhs)));
            }
        }
        for c in &self.minmax {
            let p = |r: &RegionExpr| dot(&self.region_row(r), point);
            let (t, a, b) = (p(&c.target), p(&c.first), p(&c.second));
            let want = match c.kind {
                MinMaxKind::Max => max_rat(&a, &b),
                MinMaxKind::Min => min_rat(&a, &b),
            };
            if t != want {
                return Some(format!("{c}: P(target) = {}, expected {}", fmt_rational(&t), fmt_rational(&want)));
            }
        }
        None
    }

    pub fn satisfies(&self, point: &[Rational]) -> bool {
        self.violation(point).is_none()
    }

    /// Wraps a point as a distribution carrying this system's normalization.
    pub fn distribution(&self, point: Vec<Rational>) -> Result<AtomDistribution, OnticError> {
        AtomDistribution::new(self.atoms.clone(), point)?.with_normalization(self.normalization.clone())
    }
}

impl fmt::Display for LinearEquality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            let c = &t.coefficient;
            let sep = match (i, c.is_negative()) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            let mag = c.abs();
            let coef = if mag.is_one() { String::new() } else { format!("{}*", rational_literal(&mag)) };
            write!(f, "{sep}{coef}P({})", t.region)?;
        }
        write!(f, " = {}", rational_literal(&self.rhs))
    }
}

impl fmt::Display for MinMaxConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            MinMaxKind::Max => "max",
            MinMaxKind::Min => "min",
        };
        write!(f, "{kind} P({}) = P({}), P({})", self.target, self.first, self.second)
    }
}
