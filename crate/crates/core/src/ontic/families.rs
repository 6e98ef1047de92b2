//! Parametric solution families of a constraint system, and the convexity
//! questions asked about them.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::distribution::AtomDistribution;
use super::region::AtomSet;
use super::solve::{solve_affine, tidy_halfspaces, vertices, Affine, Halfspace};
use super::system::{ConstraintSystem, MinMaxKind};
use super::OnticError;
use crate::notation::rational_literal;
use crate::scalar::{half, max_rat, min_rat, rat, serde_rational, Rational};
use crate::weyl::validate_convex_weights;

/// A free parameter: the weight of one atom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameter {
    pub name: String,
    pub atom: String,
    #[serde(with = "serde_rational")]
    pub lower: Rational,
    #[serde(with = "serde_rational")]
    pub upper: Rational,
}

/// A polytope of distributions given as an affine image of a parameter box
/// cut by linear inequalities. Parameters are the weights of the free atoms,
/// in atom order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionFamily {
    atoms: AtomSet,
    free: Vec<usize>,
    params: Vec<Parameter>,
    weights: Vec<Affine>,
    constraints: Vec<Halfspace>,
    vertices: Vec<Vec<Rational>>,
    /// `vertices` mapped to atom coordinates.
    points: Vec<Vec<Rational>>,
}

/// Builds the family `{x : rows·x = rhs, ineqs hold, 0 ≤ x ≤ 1}`, or `None`
/// when it is empty. Ineqs are `coeffs · x ≤ bound` in atom coordinates.
fn build_family(atoms: &AtomSet, rows: &[(Vec<Rational>, Rational)], ineqs: &[Halfspace]) -> Option<SolutionFamily> {
    let n = atoms.len();
    let order: Vec<usize> = (0..n).rev().collect();
    let p = solve_affine(rows, n, &order)?;
    let d = p.free.len();
    let mut hs = Vec::new();
    for a in &p.vars {
        hs.push(Halfspace { coeffs: a.coeffs.iter().map(|c| -c.clone()).collect(), bound: a.constant.clone() });
        hs.push(Halfspace { coeffs: a.coeffs.clone(), bound: Rational::one() - &a.constant });
    }
    for h in ineqs {
        let mut coeffs = vec![Rational::zero(); d];
        let mut bound = h.bound.clone();
        for (c, a) in h.coeffs.iter().zip(&p.vars) {
            if c.is_zero() {
                continue;
            }
            for (k, ak) in a.coeffs.iter().enumerate() {
                coeffs[k] += c * ak;
            }
            bound -= c * &a.constant;
        }
        hs.push(Halfspace { coeffs, bound });
    }
    let constraints = tidy_halfspaces(hs)?;
    let verts = vertices(d, &constraints);
    if verts.is_empty() {
        return None;
    }
    let params = p
        .free
        .iter()
        .enumerate()
        .map(|(k, &atom)| {
            let coord = verts.iter().map(|v| &v[k]);
            Parameter {
                name: atoms.label(atom).to_lowercase(),
                atom: atoms.label(atom).to_string(),
                lower: coord.clone().min().expect("nonempty").clone(),
                upper: coord.max().expect("nonempty").clone(),
            }
        })
        .collect();
    let points = verts.iter().map(|t| p.vars.iter().map(|a| a.eval(t)).collect()).collect();
    Some(SolutionFamily { atoms: atoms.clone(), free: p.free, params, weights: p.vars, constraints, vertices: verts, points })
}

impl SolutionFamily {
    pub fn atoms(&self) -> &AtomSet {
        &self.atoms
    }

    pub fn parameters(&self) -> &[Parameter] {
        &self.params
    }

    pub fn dimension(&self) -> usize {
        self.params.len()
    }

    /// Indices of the atoms whose weights are the parameters.
    pub fn free_atoms(&self) -> &[usize] {
        &self.free
    }

    pub fn weights(&self) -> &[Affine] {
        &self.weights
    }

    pub fn contains_params(&self, t: &[Rational]) -> bool {
        t.len() == self.dimension() && self.constraints.iter().all(|h| h.contains(t))
    }

    pub fn instantiate(&self, t: &[Rational]) -> Result<Vec<Rational>, OnticError> {
        if t.len() != self.dimension() {
            return Err(OnticError::DimensionMismatch { expected: self.dimension(), got: t.len() });
        }
        if !self.contains_params(t) {
            return Err(OnticError::OutOfRange);
        }
        Ok(self.weights.iter().map(|a| a.eval(t)).collect())
    }

    /// Parameters of `point`, if the point belongs to the family.
    pub fn locate(&self, point: &[Rational]) -> Option<Vec<Rational>> {
        if point.len() != self.atoms.len() {
            return None;
        }
        let t: Vec<Rational> = self.free.iter().map(|&i| point[i].clone()).collect();
        let on_plane = self.weights.iter().zip(point).all(|(a, x)| a.eval(&t) == *x);
        (on_plane && self.contains_params(&t)).then_some(t)
    }

    pub fn contains_point(&self, point: &[Rational]) -> bool {
        self.locate(point).is_some()
    }

    /// Vertices in parameter coordinates, ascending.
    pub fn parameter_vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    /// Vertices as distributions.
    pub fn vertices(&self) -> Vec<Vec<Rational>> {
        self.points.clone()
    }

    /// Vertices (largest parameters first), then the grid points with
    /// coordinates in {0, ½, 1} that lie inside, then the vertex centroid.
    pub fn sample_points(&self) -> Vec<Vec<Rational>> {
        let d = self.dimension();
        let mut params: Vec<Vec<Rational>> = self.vertices.iter().rev().cloned().collect();
        let levels = [Rational::zero(), half(), Rational::one()];
        let mut grid = vec![Vec::new()];
        for _ in 0..d {
            grid = grid
                .into_iter()
                .flat_map(|g: Vec<Rational>| {
                    levels.iter().map(move |l| {
                        let mut g = g.clone();
                        g.push(l.clone());
                        g
                    })
                })
                .collect();
        }
        params.extend(grid.into_iter().filter(|t| self.contains_params(t)));
        let count = rat(1, self.vertices.len() as i64);
        let centroid: Vec<Rational> =
            (0..d).map(|k| self.vertices.iter().map(|v| &v[k]).sum::<Rational>() * &count).collect();
        params.push(centroid);
        let mut out: Vec<Vec<Rational>> = Vec::new();
        for t in params {
            let p: Vec<Rational> = self.weights.iter().map(|a| a.eval(&t)).collect();
            if !out.contains(&p) {
                out.push(p);
            }
        }
        out
    }

    /// Whether every point of `self` lies in `other`.
    pub fn is_subset_of(&self, other: &SolutionFamily) -> bool {
        self.dimension() <= other.dimension() && self.points.iter().all(|v| other.contains_point(v))
    }

    /// Each weight as text in the parameter names, e.g. `1/2 - 1/2*w`.
    pub fn rendered_weights(&self) -> Vec<String> {
        let names: Vec<&str> = self.params.iter().map(|p| p.name.as_str()).collect();
        self.weights.iter().map(|a| render_affine(a, &names)).collect()
    }

    /// Equalities and halfspaces describing the family in atom coordinates.
    fn atom_space_constraints(&self) -> (Vec<(Vec<Rational>, Rational)>, Vec<Halfspace>) {
        let n = self.atoms.len();
        let mut rows = Vec::new();
        for (i, a) in self.weights.iter().enumerate() {
            if self.free.contains(&i) {
                continue;
            }
            let mut row = vec![Rational::zero(); n];
            row[i] = Rational::one();
            for (k, &f) in self.free.iter().enumerate() {
                row[f] -= &a.coeffs[k];
            }
            rows.push((row, a.constant.clone()));
        }
        let hs = self
            .constraints
            .iter()
            .map(|h| {
                let mut coeffs = vec![Rational::zero(); n];
                for (k, &f) in self.free.iter().enumerate() {
                    coeffs[f] = h.coeffs[k].clone();
                }
                Halfspace { coeffs, bound: h.bound.clone() }
            })
            .collect();
        (rows, hs)
    }
}

fn render_affine(a: &Affine, names: &[&str]) -> String {
    let mut parts: Vec<(bool, String)> = Vec::new();
    if !a.constant.is_zero() || a.coeffs.iter().all(Zero::is_zero) {
        parts.push((a.constant.is_negative(), rational_literal(&a.constant.abs())));
    }
    for (c, name) in a.coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let text = if mag.is_one() { name.to_string() } else { format!("{}*{name}", rational_literal(&mag)) };
        parts.push((c.is_negative(), text));
    }
    let mut out = String::new();
    for (k, (neg, text)) in parts.into_iter().enumerate() {
        match (k, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&text);
    }
    out
}

impl fmt::Display for SolutionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.rendered_weights().join(", "))
    }
}

#[derive(Serialize)]
struct FamilyRecord<'a> {
    parameters: &'a [Parameter],
    weights: Vec<String>,
    #[serde(serialize_with = "serialize_points")]
    vertices: Vec<Vec<Rational>>,
}

fn serialize_points<S: serde::Serializer>(points: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(points.len()))?;
    for p in points {
        let q: Vec<serde_rational::Q> = p.iter().cloned().map(serde_rational::Q).collect();
        seq.serialize_element(&q)?;
    }
    seq.end()
}

impl Serialize for SolutionFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FamilyRecord { parameters: &self.params, weights: self.rendered_weights(), vertices: self.vertices() }.serialize(s)
    }
}

/// Splits every min/max constraint into its two branches, solves each
/// resulting linear system, and returns the distinct maximal families in
/// canonical order (by free-atom indices).
pub fn enumerate_families(sys: &ConstraintSystem) -> Result<Vec<SolutionFamily>, OnticError> {
    let n = sys.atoms().len();
    let base_rows = sys.equality_rows();
    let mm = sys.minmax();
    let mut found: Vec<SolutionFamily> = Vec::new();
    for branch in 0u64..(1 << mm.len()) {
        let mut rows = base_rows.clone();
        let mut ineqs = Vec::new();
        for (i, c) in mm.iter().enumerate() {
            let (chosen, other) = if branch >> i & 1 == 0 { (&c.first, &c.second) } else { (&c.second, &c.first) };
            let (t, ch, ot) = (sys.region_row(&c.target), sys.region_row(chosen), sys.region_row(other));
            rows.push((t.iter().zip(&ch).map(|(a, b)| a - b).collect(), Rational::zero()));
            // max: chosen ≥ other; min: chosen ≤ other
            let coeffs: Vec<Rational> = match c.kind {
                MinMaxKind::Max => ot.iter().zip(&ch).map(|(o, c)| o - c).collect(),
                MinMaxKind::Min => ch.iter().zip(&ot).map(|(c, o)| c - o).collect(),
            };
            ineqs.push(Halfspace { coeffs, bound: Rational::zero() });
        }
        if let Some(f) = build_family(sys.atoms(), &rows, &ineqs) {
            debug_assert_eq!(f.weights.len(), n);
            // Row reduction in a fixed column order makes equal families identical.
            if !found.iter().any(|g| g.free == f.free && g.weights == f.weights && g.points == f.points) {
                found.push(f);
            }
        }
    }
    if found.is_empty() {
        return Err(OnticError::InfeasibleSystem);
    }
    let maximal: Vec<bool> = found
        .iter()
        .enumerate()
        .map(|(i, f)| !found.iter().enumerate().any(|(j, g)| i != j && f.is_subset_of(g)))
        .collect();
    let mut families: Vec<SolutionFamily> =
        found.into_iter().zip(maximal).filter_map(|(f, keep)| keep.then_some(f)).collect();
    families.sort_by(|a, b| a.free.cmp(&b.free).then_with(|| a.rendered_weights().cmp(&b.rendered_weights())));
    Ok(families)
}

/// The set of distributions shared by all families, or `None` if empty.
pub fn common_region(families: &[SolutionFamily]) -> Option<SolutionFamily> {
    let first = families.first()?;
    let mut rows = Vec::new();
    let mut hs = Vec::new();
    for f in families {
        let (r, h) = f.atom_space_constraints();
        rows.extend(r);
        hs.extend(h);
    }
    build_family(first.atoms(), &rows, &hs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub first_family: usize,
    pub second_family: usize,
    #[serde(with = "serde_rational::vec")]
    pub first: Vec<Rational>,
    #[serde(with = "serde_rational::vec")]
    pub second: Vec<Rational>,
    #[serde(with = "serde_rational::vec")]
    pub midpoint: Vec<Rational>,
    pub violation: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvexityVerdict {
    pub single_convex_set: bool,
    pub counterexample: Option<Counterexample>,
}

/// Tests whether the union of the families is convex by checking the
/// midpoints of cross-family sample pairs against the system.
pub fn is_single_convex_set(families: &[SolutionFamily], sys: &ConstraintSystem) -> ConvexityVerdict {
    let samples: Vec<Vec<Vec<Rational>>> = families.iter().map(SolutionFamily::sample_points).collect();
    let h = half();
    for i in 0..families.len() {
        for j in i + 1..families.len() {
            for a in &samples[i] {
                for b in &samples[j] {
                    let mid: Vec<Rational> = a.iter().zip(b).map(|(x, y)| (x + y) * &h).collect();
                    if let Some(violation) = sys.violation(&mid) {
                        return ConvexityVerdict {
                            single_convex_set: false,
                            counterexample: Some(Counterexample {
                                first_family: i,
                                second_family: j,
                                first: a.clone(),
                                second: b.clone(),
                                midpoint: mid,
                                violation,
                            }),
                        };
                    }
                }
            }
        }
    }
    ConvexityVerdict { single_convex_set: true, counterexample: None }
}

/// Atom indices of one (W, X, Y, Z) block: `A = W ∪ Y` and `B = X ∪ Y` are
/// the non-disjoint states, `Y = A ∩ B` and `Z` the complement of `A ∪ B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairBlock {
    pub w: usize,
    pub x: usize,
    pub y: usize,
    pub z: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairStructure {
    pub blocks: Vec<PairBlock>,
}

impl PairStructure {
    /// Each block is given by its `[W, X, Y, Z]` labels.
    pub fn new(atoms: &AtomSet, blocks: &[[&str; 4]]) -> Result<Self, OnticError> {
        let blocks = blocks
            .iter()
            .map(|[w, x, y, z]| {
                Ok(PairBlock { w: atoms.index_of(w)?, x: atoms.index_of(x)?, y: atoms.index_of(y)?, z: atoms.index_of(z)? })
            })
            .collect::<Result<_, OnticError>>()?;
        Ok(PairStructure { blocks })
    }
}

/// Mixes distributions through the non-disjoint states: per block, P(A) and
/// P(B) are mixed linearly, then `Y = min`, `W = P(A) − Y`, `X = P(B) − Y`
/// and `Z = 1 − max`. Atoms outside every block are mixed linearly.
pub fn nondisjoint_convex_combine(
    structure: &PairStructure,
    sys: &ConstraintSystem,
    entries: &[(Rational, Vec<Rational>)],
) -> Result<AtomDistribution, OnticError> {
    validate_convex_weights(entries.iter().map(|e| &e.0)).map_err(OnticError::BadWeights)?;
    for (index, (_, p)) in entries.iter().enumerate() {
        if let Some(detail) = sys.violation(p) {
            return Err(OnticError::EntryViolatesSystem { index, detail });
        }
    }
    let n = sys.atoms().len();
    let mut out: Vec<Rational> =
        (0..n).map(|i| entries.iter().map(|(w, p)| w * &p[i]).sum()).collect();
    for b in &structure.blocks {
        let a: Rational = entries.iter().map(|(w, p)| w * (&p[b.w] + &p[b.y])).sum();
        let bb: Rational = entries.iter().map(|(w, p)| w * (&p[b.x] + &p[b.y])).sum();
        let y = min_rat(&a, &bb);
        out[b.w] = &a - &y;
        out[b.x] = &bb - &y;
        out[b.z] = Rational::one() - max_rat(&a, &bb);
        out[b.y] = y;
    }
    if let Some(detail) = sys.violation(&out) {
        return Err(OnticError::EntryViolatesSystem { index: entries.len(), detail });
    }
    sys.distribution(out)
}

/// Plain componentwise mixture, for comparison with the constrained rule.
pub fn linear_combine(entries: &[(Rational, Vec<Rational>)]) -> Result<Vec<Rational>, OnticError> {
    validate_convex_weights(entries.iter().map(|e| &e.0)).map_err(OnticError::BadWeights)?;
    let n = entries[0].1.len();
    if let Some(bad) = entries.iter().find(|e| e.1.len() != n) {
        return Err(OnticError::DimensionMismatch { expected: n, got: bad.1.len() });
    }
    Ok((0..n).map(|i| entries.iter().map(|(w, p)| w * &p[i]).sum()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ontic::region::RegionExpr;
    use crate::scalar::int;

    fn three_state() -> ConstraintSystem {
        let atoms = AtomSet::new(["W", "X", "Y", "Z"]).unwrap();
        let a = RegionExpr::any_of(&["W", "Y"]);
        let b = RegionExpr::any_of(&["X", "Y"]);
        let mut sys = ConstraintSystem::new(atoms);
        sys.add_equality(vec![(int(1), a.clone()), (int(1), b.clone())], int(1)).unwrap();
        sys.add_minmax(MinMaxKind::Max, a.clone().union(b.clone()), a.clone(), b.clone()).unwrap();
        sys.add_minmax(MinMaxKind::Min, a.clone().intersection(b.clone()), a, b).unwrap();
        sys
    }

    fn v(xs: &[Rational]) -> Vec<Rational> {
        xs.to_vec()
    }

    #[test]
    fn three_state_has_two_families() {
        let fams = enumerate_families(&three_state()).unwrap();
        assert_eq!(fams.len(), 2);
        assert_eq!(fams[0].to_string(), "(w, 0, 1/2 - 1/2*w, 1/2 - 1/2*w)");
        assert_eq!(fams[1].to_string(), "(0, x, 1/2 - 1/2*x, 1/2 - 1/2*x)");
        for f in &fams {
            assert_eq!(f.parameters()[0].lower, int(0));
            assert_eq!(f.parameters()[0].upper, int(1));
        }
        let common = common_region(&fams).unwrap();
        assert_eq!(common.vertices(), vec![v(&[int(0), int(0), half(), half()])]);
    }

    #[test]
    fn three_state_is_not_convex() {
        let sys = three_state();
        let fams = enumerate_families(&sys).unwrap();
        let verdict = is_single_convex_set(&fams, &sys);
        assert!(!verdict.single_convex_set);
        let c = verdict.counterexample.unwrap();
        assert_eq!(c.first, v(&[int(1), int(0), int(0), int(0)]));
        assert_eq!(c.second, v(&[int(0), int(1), int(0), int(0)]));
        assert_eq!(c.midpoint, v(&[half(), half(), int(0), int(0)]));
    }

    #[test]
    fn nondisjoint_mixing_repairs_the_counterexample() {
        let sys = three_state();
        let s = PairStructure::new(sys.atoms(), &[["W", "X", "Y", "Z"]]).unwrap();
        let a = v(&[int(1), int(0), int(0), int(0)]);
        let b = v(&[int(0), int(1), int(0), int(0)]);
        let mixed = nondisjoint_convex_combine(&s, &sys, &[(half(), a.clone()), (half(), b.clone())]).unwrap();
        assert_eq!(mixed.weights(), &[int(0), int(0), half(), half()]);
        let single = nondisjoint_convex_combine(&s, &sys, &[(int(1), a.clone())]).unwrap();
        assert_eq!(single.weights(), &a[..]);
        let plain = linear_combine(&[(half(), a), (half(), b)]).unwrap();
        assert!(!sys.satisfies(&plain));
        let bad = v(&[half(), half(), int(0), int(0)]);
        assert!(matches!(
            nondisjoint_convex_combine(&s, &sys, &[(int(1), bad)]),
            Err(OnticError::EntryViolatesSystem { index: 0, .. })
        ));
    }

    #[test]
    fn unique_solution_gives_a_point_family() {
        let atoms = AtomSet::new(["a", "b"]).unwrap();
        let mut sys = ConstraintSystem::new(atoms);
        sys.add_equality(vec![(int(1), RegionExpr::atom("a"))], rat(1, 3)).unwrap();
        let fams = enumerate_families(&sys).unwrap();
        assert_eq!(fams.len(), 1);
        assert_eq!(fams[0].dimension(), 0);
        assert_eq!(fams[0].to_string(), "(1/3, 2/3)");
        assert!(is_single_convex_set(&fams, &sys).single_convex_set);
    }

    #[test]
    fn infeasible_system() {
        let atoms = AtomSet::new(["a", "b"]).unwrap();
        let mut sys = ConstraintSystem::new(atoms);
        sys.add_equality(vec![(int(1), RegionExpr::atom("a"))], int(2)).unwrap();
        assert_eq!(enumerate_families(&sys).unwrap_err(), OnticError::InfeasibleSystem);
    }

    #[test]
    fn instantiate_and_locate() {
        let fams = enumerate_families(&three_state()).unwrap();
        let p = fams[0].instantiate(&[rat(1, 3)]).unwrap();
        assert_eq!(p, v(&[rat(1, 3), int(0), rat(1, 3), rat(1, 3)]));
        assert_eq!(fams[0].locate(&p), Some(vec![rat(1, 3)]));
        assert!(!fams[1].contains_point(&p));
        assert_eq!(fams[0].instantiate(&[int(2)]), Err(OnticError::OutOfRange));
    }
}
