//! Exact rational linear algebra: row reduction, affine parametrizations and
//! vertex enumeration for small polytopes.

use num_traits::{One, Signed, Zero};

use crate::scalar::Rational;

/// `coeffs · t ≤ bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    pub coeffs: Vec<Rational>,
    pub bound: Rational,
}

impl Halfspace {
    pub fn contains(&self, t: &[Rational]) -> bool {
        dot(&self.coeffs, t) <= self.bound
    }

    fn is_constant(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Scales so the first nonzero coefficient has magnitude one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in &mut self.coeffs {
                *c /= &lead;
            }
            self.bound /= &lead;
        }
        self
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `constant + coeffs · t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Affine {
    pub constant: Rational,
    pub coeffs: Vec<Rational>,
}

impl Affine {
    pub fn eval(&self, t: &[Rational]) -> Rational {
        &self.constant + dot(&self.coeffs, t)
    }
}

/// Solution set of `rows · x = rhs`, with variables eliminated in
/// `column_order` priority: the earliest columns in the order become pivots,
/// the rest stay free.
pub struct Parametrization {
    /// Free variable indices, ascending.
    pub free: Vec<usize>,
    /// Each variable as an affine function of the free variables.
    pub vars: Vec<Affine>,
}

pub fn solve_affine(rows: &[(Vec<Rational>, Rational)], n: usize, column_order: &[usize]) -> Option<Parametrization> {
    let mut m: Vec<(Vec<Rational>, Rational)> = rows.to_vec();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut r = 0;
    for &col in column_order {
        let Some(p) = (r..m.len()).find(|&i| !m[i].0[col].is_zero()) else { continue };
        m.swap(r, p);
        let lead = m[r].0[col].clone();
        for v in &mut m[r].0 {
            *v /= &lead;
        }
        m[r].1 /= &lead;
        let (pivot_row, pivot_rhs) = m[r].clone();
        for (i, (row, rhs)) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &f * pv;
            }
            *rhs -= &f * &pivot_rhs;
        }
        pivots.push((r, col));
        r += 1;
    }
    if m[r..].iter().any(|(_, rhs)| !rhs.is_zero()) {
        return None;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|p| p.1).collect();
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let mut vars: Vec<Affine> = (0..n)
        .map(|c| {
            let mut coeffs = vec![Rational::zero(); free.len()];
            if let Some(k) = free.iter().position(|&f| f == c) {
                coeffs[k] = Rational::one();
            }
            Affine { constant: Rational::zero(), coeffs }
        })
        .collect();
    for (row, col) in pivots {
        let (coeff_row, rhs) = &m[row];
        vars[col] = Affine {
            constant: rhs.clone(),
            coeffs: free.iter().map(|&f| -coeff_row[f].clone()).collect(),
        };
    }
    Some(Parametrization { free, vars })
}

/// Unique solution of a square system by Gauss-Jordan elimination, if any.
/// Each row carries its right-hand side as the last entry.
fn solve_square(mut m: Vec<Vec<Rational>>) -> Option<Vec<Rational>> {
    let d = m.len();
    for col in 0..d {
        let p = (col..d).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, p);
        let lead = m[col][col].clone();
        if !lead.is_one() {
            for v in &mut m[col][col..] {
                *v /= &lead;
            }
        }
        let (before, rest) = m.split_at_mut(col);
        let (pivot, after) = rest.split_first_mut().expect("col < d");
        for row in before.iter_mut().chain(after.iter_mut()) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, pv) in row[col..].iter_mut().zip(&pivot[col..]) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().expect("augmented row")).collect())
}

/// Removes constant halfspaces (returning `None` if one is violated),
/// normalizes, sorts and deduplicates the rest.
pub fn tidy_halfspaces(hs: Vec<Halfspace>) -> Option<Vec<Halfspace>> {
    let mut out = Vec::new();
    for h in hs {
        if h.is_constant() {
            if h.bound.is_negative() {
                return None;
            }
        } else {
            out.push(h.normalized());
        }
    }
    out.sort();
    out.dedup();
    Some(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Vertices of the bounded polytope `{t ∈ ℚ^d : h·t ≤ b for all h}`, sorted.
/// Empty when the polytope is empty.
pub fn vertices(d: usize, hs: &[Halfspace]) -> Vec<Vec<Rational>> {
    if d == 0 {
        return if hs.iter().all(|h| h.contains(&[])) { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out: Vec<Vec<Rational>> = Vec::new();
    for idx in combinations(hs.len(), d) {
        let rows: Vec<Vec<Rational>> = idx
            .iter()
            .map(|&i| {
                let mut r = hs[i].coeffs.clone();
                r.push(hs[i].bound.clone());
                r
            })
            .collect();
        if let Some(t) = solve_square(rows) {
            if hs.iter().all(|h| h.contains(&t)) && !out.contains(&t) {
                out.push(t);
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{half, int};

    #[test]
    fn affine_solution_prefers_order() {
        // x0 + x1 = 1 with x1 eliminated first leaves x0 free
        let rows = vec![(vec![int(1), int(1)], int(1))];
        let p = solve_affine(&rows, 2, &[1, 0]).unwrap();
        assert_eq!(p.free, vec![0]);
        assert_eq!(p.vars[1], Affine { constant: int(1), coeffs: vec![int(-1)] });
        let p = solve_affine(&rows, 2, &[0, 1]).unwrap();
        assert_eq!(p.free, vec![1]);
    }

    #[test]
    fn inconsistent_systems() {
        let rows = vec![(vec![int(1), int(1)], int(1)), (vec![int(2), int(2)], int(3))];
        assert!(solve_affine(&rows, 2, &[0, 1]).is_none());
    }

    #[test]
    fn square_vertices() {
        let h = |c: [i64; 2], b: i64| Halfspace { coeffs: c.iter().map(|&v| int(v)).collect(), bound: int(b) };
        let hs = vec![h([-1, 0], 0), h([1, 0], 1), h([0, -1], 0), h([0, 1], 1), h([1, 1], 2)];
        let v = vertices(2, &hs);
        assert_eq!(v.len(), 4);
        assert!(v.contains(&vec![int(1), int(1)]));
        let empty = vec![h([1, 0], -1), h([-1, 0], 0), h([0, 1], 0), h([0, -1], 0)];
        assert!(vertices(2, &empty).is_empty());
    }

    #[test]
    fn tidy_detects_infeasible_constants() {
        let constant = Halfspace { coeffs: vec![int(0)], bound: int(-1) };
        assert!(tidy_halfspaces(vec![constant]).is_none());
        let a = Halfspace { coeffs: vec![int(2)], bound: int(1) };
        let b = Halfspace { coeffs: vec![int(1)], bound: half() };
        assert_eq!(tidy_halfspaces(vec![a, b]).unwrap().len(), 1);
    }
}
