//! The Grassmann algebra on three real anticommuting generators ξp, ξq, ξr.
//!
//! Elements are stored in a unique normal form: a map from canonical
//! monomials (generator subsets in increasing order p < q < r) to exact
//! complex coefficients, with the reordering sign folded into the
//! coefficient and zero coefficients never stored. Two elements are equal
//! exactly when their maps are equal.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::clifford::CliffordMap;
use crate::scalar::{ExactComplex, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Generator {
    #[serde(rename = "p")]
    P,
    #[serde(rename = "q")]
    Q,
    #[serde(rename = "r")]
    R,
}

impl Generator {
    pub const ALL: [Generator; 3] = [Generator::P, Generator::Q, Generator::R];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Option<Generator> {
        Self::ALL.get(i).copied()
    }

    fn bit(self) -> u8 {
        1 << self.index()
    }

    pub fn label(self) -> char {
        match self {
            Generator::P => 'p',
            Generator::Q => 'q',
            Generator::R => 'r',
        }
    }

    pub fn from_label(c: char) -> Option<Generator> {
        match c {
            'p' => Some(Generator::P),
            'q' => Some(Generator::Q),
            'r' => Some(Generator::R),
            _ => None,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xi_{}", self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(swaps: usize) -> Sign {
        if swaps.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.as_i64() as f64
    }

    pub fn apply(self, c: ExactComplex) -> ExactComplex {
        match self {
            Sign::Plus => c,
            Sign::Minus => -c,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

/// A product of distinct generators in increasing label order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(u8);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    /// Canonical monomial over a set of generators; order and repetition of
    /// the input are ignored.
    pub fn of(gens: &[Generator]) -> Monomial {
        Monomial(gens.iter().fold(0, |acc, g| acc | g.bit()))
    }

    pub fn generator(g: Generator) -> Monomial {
        Monomial(g.bit())
    }

    pub fn generators(self) -> impl Iterator<Item = Generator> {
        Generator::ALL.into_iter().filter(move |g| self.0 & g.bit() != 0)
    }

    pub fn contains(self, g: Generator) -> bool {
        self.0 & g.bit() != 0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    /// All eight canonical monomials, ordered by degree then label.
    pub fn all() -> Vec<Monomial> {
        let mut v: Vec<Monomial> = (0u8..8).map(Monomial).collect();
        v.sort();
        v
    }

    /// Product of two canonical monomials: `None` if they share a generator,
    /// otherwise the merged monomial and the sign of the merge.
    fn product(self, rhs: Monomial) -> Option<(Monomial, Sign)> {
        if self.0 & rhs.0 != 0 {
            return None;
        }
        // sorting the concatenation swaps every pair (a in self, b in rhs) with a > b
        let inversions: usize = self
            .generators()
            .map(|a| rhs.generators().filter(|&b| b < a).count())
            .sum();
        Some((Monomial(self.0 | rhs.0), Sign::from_parity(inversions)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            let a: Vec<_> = self.generators().collect();
            let b: Vec<_> = other.generators().collect();
            a.cmp(&b)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sorts a generator sequence into canonical order.
///
/// Returns `None` when a generator repeats (ξ² = 0), otherwise the monomial
/// and the parity sign of the sorting permutation.
pub fn canonicalize(seq: &[Generator]) -> Option<(Monomial, Sign)> {
    let mut seen = 0u8;
    for g in seq {
        if seen & g.bit() != 0 {
            return None;
        }
        seen |= g.bit();
    }
    let inversions = (0..seq.len())
        .flat_map(|i| (i + 1..seq.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| seq[i] > seq[j])
        .count();
    Some((Monomial(seen), Sign::from_parity(inversions)))
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GrassmannElement {
    terms: BTreeMap<Monomial, ExactComplex>,
}

impl GrassmannElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(ExactComplex::one())
    }

    pub fn scalar(c: ExactComplex) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn generator(g: Generator) -> Self {
        Self::term(Monomial::generator(g), ExactComplex::one())
    }

    pub fn term(m: Monomial, c: ExactComplex) -> Self {
        let mut e = Self::zero();
        e.accumulate(m, c);
        e
    }

    /// `c · ξ_{seq[0]} ξ_{seq[1]} …` for an arbitrary generator order.
    pub fn product_of(c: ExactComplex, seq: &[Generator]) -> Self {
        match canonicalize(seq) {
            Some((m, sign)) => Self::term(m, sign.apply(c)),
            None => Self::zero(),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, ExactComplex)>) -> Self {
        let mut e = Self::zero();
        for (m, c) in terms {
            e.accumulate(m, c);
        }
        e
    }

    fn accumulate(&mut self, m: Monomial, c: ExactComplex) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += &c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &ExactComplex)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exact stored coefficient of a canonical monomial, zero if absent.
    pub fn coefficient(&self, m: Monomial) -> ExactComplex {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn is_homogeneous(&self, degree: usize) -> bool {
        self.terms.keys().all(|m| m.degree() == degree)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.accumulate(m, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &ExactComplex) -> Self {
        Self::from_terms(self.terms().map(|(m, c)| (m, c * k)))
    }

    pub fn scale_rational(&self, k: &Rational) -> Self {
        Self::from_terms(self.terms().map(|(m, c)| (m, c.scale(k))))
    }

    pub fn multiply(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in self.terms() {
            for (mb, cb) in rhs.terms() {
                if let Some((m, sign)) = ma.product(mb) {
                    out.accumulate(m, sign.apply(ca * cb));
                }
            }
        }
        out
    }

    /// Replaces every generator by its signed image under `map`.
    ///
    /// This is an algebra homomorphism: it commutes with sums and products.
    pub fn substitute_generators(&self, map: &CliffordMap) -> Self {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            let mut sign = Sign::Plus;
            let mut images = Vec::with_capacity(m.degree());
            for g in m.generators() {
                let (image, s) = map.image(g);
                sign = sign * s;
                images.push(image);
            }
            let (mono, reorder) = canonicalize(&images).expect("signed permutation keeps generators distinct");
            out.accumulate(mono, (sign * reorder).apply(c.clone()));
        }
        out
    }

    /// Generalized conjugation: conjugate coefficients and reverse the
    /// generator order of each monomial.
    pub fn conjugate(&self) -> Self {
        Self::from_terms(self.terms().map(|(m, c)| {
            let k = m.degree();
            // reversing k generators takes k(k-1)/2 transpositions
            (m, Sign::from_parity(k * k.saturating_sub(1) / 2).apply(c.conj()))
        }))
    }

    /// Right derivative ∂⃖/∂ξ: move ξ to the right end of each monomial
    /// containing it, then strike it.
    pub fn right_derivative(&self, g: Generator) -> Self {
        Self::from_terms(self.terms().filter(|(m, _)| m.contains(g)).map(|(m, c)| {
            let after = m.generators().filter(|&h| h > g).count();
            (Monomial(m.0 & !g.bit()), Sign::from_parity(after).apply(c.clone()))
        }))
    }
}

impl Add for &GrassmannElement {
    type Output = GrassmannElement;
    fn add(self, rhs: &GrassmannElement) -> GrassmannElement {
        GrassmannElement::add(self, rhs)
    }
}

impl Sub for &GrassmannElement {
    type Output = GrassmannElement;
    fn sub(self, rhs: &GrassmannElement) -> GrassmannElement {
        GrassmannElement::add(self, &-rhs)
    }
}

impl Neg for &GrassmannElement {
    type Output = GrassmannElement;
    fn neg(self) -> GrassmannElement {
        GrassmannElement::from_terms(self.terms().map(|(m, c)| (m, -c.clone())))
    }
}

impl Mul for &GrassmannElement {
    type Output = GrassmannElement;
    fn mul(self, rhs: &GrassmannElement) -> GrassmannElement {
        self.multiply(rhs)
    }
}
