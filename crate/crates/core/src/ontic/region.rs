//! Atom sets and set-algebra expressions over them.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::OnticError;

/// At most this many atoms; regions are evaluated to `u64` bit masks.
pub const MAX_ATOMS: usize = 64;

/// An ordered list of distinct, pairwise-disjoint atoms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct AtomSet {
    labels: Vec<String>,
}

fn valid_label(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
        && !matches!(s, "empty" | "all")
}

impl AtomSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self, OnticError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(OnticError::EmptyAtomSet);
        }
        if labels.len() > MAX_ATOMS {
            return Err(OnticError::TooManyAtoms(labels.len()));
        }
        for (i, l) in labels.iter().enumerate() {
            if !valid_label(l) {
                return Err(OnticError::InvalidLabel(l.clone()));
            }
            if labels[..i].contains(l) {
                return Err(OnticError::DuplicateAtom(l.clone()));
            }
        }
        Ok(AtomSet { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize, OnticError> {
        self.labels.iter().position(|l| l == label).ok_or_else(|| OnticError::UnknownAtom(label.to_string()))
    }

    pub fn full_mask(&self) -> u64 {
        if self.labels.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.labels.len()) - 1
        }
    }

    /// Atom indices contained in `mask`, ascending.
    pub fn members(&self, mask: u64) -> impl Iterator<Item = usize> + '_ {
        (0..self.labels.len()).filter(move |i| mask >> i & 1 == 1)
    }
}

impl<'de> Deserialize<'de> for AtomSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let labels = Vec::<String>::deserialize(d)?;
        AtomSet::new(labels).map_err(serde::de::Error::custom)
    }
}

/// A region of the ontic space built from atoms by set operations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RegionExpr {
    Empty,
    Full,
    Atom(String),
    Union(Box<RegionExpr>, Box<RegionExpr>),
    Intersection(Box<RegionExpr>, Box<RegionExpr>),
    Difference(Box<RegionExpr>, Box<RegionExpr>),
    Complement(Box<RegionExpr>),
}

impl RegionExpr {
    pub fn atom(label: impl Into<String>) -> Self {
        RegionExpr::Atom(label.into())
    }

    /// Union of the named atoms; empty when `labels` is empty.
    pub fn any_of(labels: &[&str]) -> Self {
        labels
            .iter()
            .map(|l| RegionExpr::atom(*l))
            .reduce(RegionExpr::union)
            .unwrap_or(RegionExpr::Empty)
    }

    pub fn union(self, other: RegionExpr) -> Self {
        RegionExpr::Union(Box::new(self), Box::new(other))
    }

    pub fn intersection(self, other: RegionExpr) -> Self {
        RegionExpr::Intersection(Box::new(self), Box::new(other))
    }

    pub fn difference(self, other: RegionExpr) -> Self {
        RegionExpr::Difference(Box::new(self), Box::new(other))
    }

    pub fn complement(self) -> Self {
        RegionExpr::Complement(Box::new(self))
    }

    /// The set of atoms in the region, as a bit mask over `atoms`.
    pub fn evaluate(&self, atoms: &AtomSet) -> Result<u64, OnticError> {
        Ok(match self {
            RegionExpr::Empty => 0,
            RegionExpr::Full => atoms.full_mask(),
            RegionExpr::Atom(l) => 1 << atoms.index_of(l)?,
            RegionExpr::Union(a, b) => a.evaluate(atoms)? | b.evaluate(atoms)?,
            RegionExpr::Intersection(a, b) => a.evaluate(atoms)? & b.evaluate(atoms)?,
            RegionExpr::Difference(a, b) => a.evaluate(atoms)? & !b.evaluate(atoms)?,
            RegionExpr::Complement(a) => atoms.full_mask() & !a.evaluate(atoms)?,
        })
    }

    fn is_binary(&self) -> bool {
        matches!(self, RegionExpr::Union(..) | RegionExpr::Intersection(..) | RegionExpr::Difference(..))
    }
}

impl fmt::Display for RegionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let child = |e: &RegionExpr| if e.is_binary() { format!("({e})") } else { e.to_string() };
        match self {
            RegionExpr::Empty => f.write_str("empty"),
            RegionExpr::Full => f.write_str("all"),
            RegionExpr::Atom(l) => f.write_str(l),
            RegionExpr::Union(a, b) => write!(f, "{} | {}", child(a), child(b)),
            RegionExpr::Intersection(a, b) => write!(f, "{} & {}", child(a), child(b)),
            RegionExpr::Difference(a, b) => write!(f, "{} \\ {}", child(a), child(b)),
            RegionExpr::Complement(a) => write!(f, "!{}", child(a)),
        }
    }
}

impl Serialize for RegionExpr {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RegionExpr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        super::dsl::parse_region(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wxyz() -> AtomSet {
        AtomSet::new(["W", "X", "Y", "Z"]).unwrap()
    }

    #[test]
    fn atom_set_validation() {
        assert!(matches!(AtomSet::new(["W", "W"]), Err(OnticError::DuplicateAtom(_))));
        assert!(matches!(AtomSet::new(Vec::<String>::new()), Err(OnticError::EmptyAtomSet)));
        assert!(matches!(AtomSet::new(["a b"]), Err(OnticError::InvalidLabel(_))));
        let many: Vec<String> = (0..65).map(|i| format!("a{i}")).collect();
        assert!(matches!(AtomSet::new(many), Err(OnticError::TooManyAtoms(65))));
        let all: Vec<String> = (0..64).map(|i| format!("a{i}")).collect();
        assert_eq!(AtomSet::new(all).unwrap().full_mask(), u64::MAX);
    }

    #[test]
    fn evaluation() {
        let atoms = wxyz();
        let a = RegionExpr::any_of(&["W", "Y"]);
        let b = RegionExpr::any_of(&["X", "Y"]);
        assert_eq!(a.evaluate(&atoms).unwrap(), 0b0101);
        assert_eq!(a.clone().intersection(b.clone()).evaluate(&atoms).unwrap(), 0b0100);
        assert_eq!(a.clone().difference(b.clone()).evaluate(&atoms).unwrap(), 0b0001);
        assert_eq!(a.clone().union(b).complement().evaluate(&atoms).unwrap(), 0b1000);
        assert_eq!(RegionExpr::Empty.evaluate(&atoms).unwrap(), 0);
        assert_eq!(RegionExpr::Full.evaluate(&atoms).unwrap(), 0b1111);
        assert_eq!(RegionExpr::atom("V").evaluate(&atoms), Err(OnticError::UnknownAtom("V".into())));
    }

    #[test]
    fn display_round_trips_through_parser() {
        let e = RegionExpr::any_of(&["W", "Y"]).intersection(RegionExpr::atom("X").complement()).difference(RegionExpr::Empty);
        let text = e.to_string();
        assert_eq!(text, "((W | Y) & !X) \\ empty");
        assert_eq!(super::super::dsl::parse_region(&text).unwrap(), e);
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(serde_json::from_str::<RegionExpr>(&json).unwrap(), e);
    }
}
