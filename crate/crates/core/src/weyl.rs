//! Single-qubit states as Grassmann Weyl symbols
//! `ρ = ½(1 + α iξrξq + β iξpξq + γ iξpξr)` and the probability tuple over the
//! six non-disjoint ontic states ξjξk ∖ ξkξj.
//!
//! Bloch component, Weyl-symbol slot and tuple pair all share one index,
//! fixed by [`Axis::pair`]:
//!
//! | axis | Bloch | monomial | tuple slots      |
//! |------|-------|----------|------------------|
//! | x    | α     | ξrξq     | g_p, g_-p (0, 3) |
//! | y    | β     | ξpξq     | g_r, g_-r (1, 4) |
//! | z    | γ     | ξpξr     | g_q, g_-q (2, 5) |

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grassmann::{canonicalize, Generator, GrassmannElement, Monomial};
use crate::scalar::{fmt_rational, half, int, max_rat, min_rat, rat, serde_rational, ExactComplex, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeylError {
    #[error("Bloch vector has squared norm {0} > 1")]
    NotPhysical(String),
    #[error("not a single-qubit Weyl symbol: {0}")]
    MalformedSymbol(String),
    #[error("invalid convex weights: {0}")]
    BadWeights(String),
    #[error("invalid probability tuple: {0}")]
    InvalidTuple(String),
    #[error("ontic label needs two distinct generators")]
    InvalidLabel,
    #[error("unknown stabilizer state `{0}` (expected +x, -x, +y, -y, +z or -z)")]
    UnknownStabilizer(String),
}

/// Checks that weights are non-negative and sum to one.
pub fn validate_convex_weights<'a>(weights: impl IntoIterator<Item = &'a Rational>) -> Result<(), String> {
    let mut total = Rational::zero();
    let mut count = 0;
    for w in weights {
        if w.is_negative() {
            return Err(format!("negative weight {}", fmt_rational(w)));
        }
        total += w;
        count += 1;
    }
    if count == 0 {
        return Err("no entries".into());
    }
    if !total.is_one() {
        return Err(format!("weights sum to {}", fmt_rational(&total)));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    /// The ordered generator pair whose `iξjξk` coefficient is this Bloch
    /// component.
    pub fn pair(self) -> (Generator, Generator) {
        use Generator::*;
        match self {
            Axis::X => (R, Q),
            Axis::Y => (P, Q),
            Axis::Z => (P, R),
        }
    }

    pub fn name(self) -> char {
        match self {
            Axis::X => 'x',
            Axis::Y => 'y',
            Axis::Z => 'z',
        }
    }
}

impl FromStr for Axis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "X" => Ok(Axis::X),
            "Y" => Ok(Axis::Y),
            "Z" => Ok(Axis::Z),
            other => Err(format!("unknown Pauli axis `{other}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BlochRecord", into = "BlochRecord")]
pub struct BlochVector {
    alpha: Rational,
    beta: Rational,
    gamma: Rational,
}

#[derive(Serialize, Deserialize)]
struct BlochRecord {
    #[serde(with = "serde_rational")]
    alpha: Rational,
    #[serde(with = "serde_rational")]
    beta: Rational,
    #[serde(with = "serde_rational")]
    gamma: Rational,
}

impl TryFrom<BlochRecord> for BlochVector {
    type Error = WeylError;
    fn try_from(r: BlochRecord) -> Result<Self, WeylError> {
        BlochVector::new(r.alpha, r.beta, r.gamma)
    }
}

impl From<BlochVector> for BlochRecord {
    fn from(b: BlochVector) -> Self {
        BlochRecord { alpha: b.alpha, beta: b.beta, gamma: b.gamma }
    }
}

impl BlochVector {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Result<Self, WeylError> {
        let b = BlochVector { alpha, beta, gamma };
        let n = b.norm_squared();
        if n > Rational::one() {
            return Err(WeylError::NotPhysical(fmt_rational(&n)));
        }
        Ok(b)
    }

    pub fn from_components(c: [Rational; 3]) -> Result<Self, WeylError> {
        let [a, b, g] = c;
        Self::new(a, b, g)
    }

    pub fn maximally_mixed() -> Self {
        BlochVector { alpha: Rational::zero(), beta: Rational::zero(), gamma: Rational::zero() }
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }
    pub fn beta(&self) -> &Rational {
        &self.beta
    }
    pub fn gamma(&self) -> &Rational {
        &self.gamma
    }

    pub fn component(&self, axis: Axis) -> &Rational {
        match axis {
            Axis::X => &self.alpha,
            Axis::Y => &self.beta,
            Axis::Z => &self.gamma,
        }
    }

    pub fn components(&self) -> [Rational; 3] {
        [self.alpha.clone(), self.beta.clone(), self.gamma.clone()]
    }

    pub fn norm_squared(&self) -> Rational {
        &self.alpha * &self.alpha + &self.beta * &self.beta + &self.gamma * &self.gamma
    }

    pub fn is_pure(&self) -> bool {
        self.norm_squared().is_one()
    }
}

impl fmt::Display for BlochVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", fmt_rational(&self.alpha), fmt_rational(&self.beta), fmt_rational(&self.gamma))
    }
}

/// An ordered generator pair ξjξk, naming the ontic state ξjξk ∖ ξkξj.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OnticLabel {
    first: Generator,
    second: Generator,
}

impl OnticLabel {
    pub fn new(first: Generator, second: Generator) -> Result<Self, WeylError> {
        if first == second {
            return Err(WeylError::InvalidLabel);
        }
        Ok(OnticLabel { first, second })
    }

    pub fn first(self) -> Generator {
        self.first
    }

    pub fn second(self) -> Generator {
        self.second
    }

    /// `−λ`: the same pair in the opposite order.
    pub fn reversed(self) -> Self {
        OnticLabel { first: self.second, second: self.first }
    }

    /// The six labels in tuple order (g_p, g_r, g_q, g_-p, g_-r, g_-q).
    pub fn all() -> [OnticLabel; 6] {
        let pos = Axis::ALL.map(|a| {
            let (j, k) = a.pair();
            OnticLabel { first: j, second: k }
        });
        [pos[0], pos[1], pos[2], pos[0].reversed(), pos[1].reversed(), pos[2].reversed()]
    }
}

impl fmt::Display for OnticLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "xi_{}xi_{}", self.first.label(), self.second.label())
    }
}

/// The tuple ḡ = (g_p, g_r, g_q, g_-p, g_-r, g_-q).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TupleRecord", into = "TupleRecord")]
pub struct SixTuple {
    entries: [Rational; 6],
}

#[derive(Serialize, Deserialize)]
struct TupleRecord(#[serde(with = "serde_rational::vec")] Vec<Rational>);

impl TryFrom<TupleRecord> for SixTuple {
    type Error = WeylError;
    fn try_from(r: TupleRecord) -> Result<Self, WeylError> {
        let entries: [Rational; 6] =
            r.0.try_into().map_err(|v: Vec<Rational>| WeylError::InvalidTuple(format!("{} entries", v.len())))?;
        SixTuple::new(entries)
    }
}

impl From<SixTuple> for TupleRecord {
    fn from(t: SixTuple) -> Self {
        TupleRecord(t.entries.to_vec())
    }
}

impl SixTuple {
    pub fn new(entries: [Rational; 6]) -> Result<Self, WeylError> {
        for (i, e) in entries.iter().enumerate() {
            if e.is_negative() || *e > Rational::one() {
                return Err(WeylError::InvalidTuple(format!("entry {i} = {} outside [0, 1]", fmt_rational(e))));
            }
        }
        for i in 0..3 {
            if !min_rat(&entries[i], &entries[i + 3]).is_zero() {
                return Err(WeylError::InvalidTuple(format!("pair {i} has support on both sides")));
            }
        }
        Ok(SixTuple { entries })
    }

    pub fn from_ints(v: [i64; 6]) -> Result<Self, WeylError> {
        Self::new(v.map(int))
    }

    pub fn zero() -> Self {
        SixTuple { entries: std::array::from_fn(|_| Rational::zero()) }
    }

    /// Tuple with the given signed weight per pair; `net[i] ∈ [−1, 1]`.
    pub fn from_net(net: [Rational; 3]) -> Result<Self, WeylError> {
        let zero = Rational::zero();
        let plus = net.clone().map(|n| max_rat(&n, &zero));
        let minus = net.map(|n| max_rat(&-n, &zero));
        let [a, b, c] = plus;
        let [d, e, f] = minus;
        Self::new([a, b, c, d, e, f])
    }

    pub fn entries(&self) -> &[Rational; 6] {
        &self.entries
    }

    pub fn plus(&self, axis: Axis) -> &Rational {
        &self.entries[axis.index()]
    }

    pub fn minus(&self, axis: Axis) -> &Rational {
        &self.entries[axis.index() + 3]
    }

    /// g₊ − g₋ for one pair.
    pub fn net(&self, axis: Axis) -> Rational {
        self.plus(axis) - self.minus(axis)
    }

    /// Bloch vector with the same per-pair net weights.
    pub fn to_bloch(&self) -> Result<BlochVector, WeylError> {
        BlochVector::from_components(Axis::ALL.map(|a| self.net(a)))
    }
}

impl fmt::Display for SixTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(fmt_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// A single-qubit state in Weyl-symbol form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylState {
    symbol: GrassmannElement,
}

fn axis_monomial(axis: Axis) -> (Monomial, crate::grassmann::Sign) {
    let (j, k) = axis.pair();
    canonicalize(&[j, k]).expect("distinct generators")
}

impl WeylState {
    pub fn from_bloch(b: &BlochVector) -> Self {
        let mut symbol = GrassmannElement::scalar(ExactComplex::real(half()));
        for axis in Axis::ALL {
            let (j, k) = axis.pair();
            let c = ExactComplex::imag(b.component(axis) * half());
            symbol = &symbol + &GrassmannElement::product_of(c, &[j, k]);
        }
        WeylState { symbol }
    }

    pub fn maximally_mixed() -> Self {
        Self::from_bloch(&BlochVector::maximally_mixed())
    }

    /// Accepts exactly the elements `½(1 + α iξrξq + β iξpξq + γ iξpξr)` with
    /// real α, β, γ and α² + β² + γ² ≤ 1.
    pub fn from_symbol(symbol: GrassmannElement) -> Result<Self, WeylError> {
        if symbol.coefficient(Monomial::ONE) != ExactComplex::real(half()) {
            return Err(WeylError::MalformedSymbol(format!("scalar part of {symbol} is not 1/2")));
        }
        for (m, c) in symbol.terms() {
            if m.degree() == 2 && !c.is_imaginary() {
                return Err(WeylError::MalformedSymbol(format!("{symbol} has a non-imaginary quadratic coefficient")));
            }
            if m.degree() % 2 == 1 {
                return Err(WeylError::MalformedSymbol(format!("{symbol} has odd terms")));
            }
        }
        if symbol.coefficient(Monomial::of(&Generator::ALL)) != ExactComplex::zero() {
            return Err(WeylError::MalformedSymbol(format!("{symbol} has a cubic term")));
        }
        let state = WeylState { symbol };
        BlochVector::from_components(Axis::ALL.map(|a| state.component(a)))?;
        Ok(state)
    }

    fn component(&self, axis: Axis) -> Rational {
        // coefficient of iξjξk is 2 × (stored canonical coefficient / i) × orientation sign
        let (m, sign) = axis_monomial(axis);
        int(2 * sign.as_i64()) * self.symbol.coefficient(m).im
    }

    pub fn bloch(&self) -> BlochVector {
        BlochVector {
            alpha: self.component(Axis::X),
            beta: self.component(Axis::Y),
            gamma: self.component(Axis::Z),
        }
    }

    pub fn symbol(&self) -> &GrassmannElement {
        &self.symbol
    }

    pub fn into_symbol(self) -> GrassmannElement {
        self.symbol
    }

    /// Used by the Clifford action, which maps valid symbols to valid symbols.
    pub(crate) fn from_symbol_unchecked(symbol: GrassmannElement) -> Self {
        debug_assert!(Self::from_symbol(symbol.clone()).is_ok());
        WeylState { symbol }
    }

    pub fn mu(&self, lam: OnticLabel) -> Rational {
        mu(self, lam)
    }

    pub fn six_tuple(&self) -> SixTuple {
        six_tuple(self)
    }
}

impl fmt::Display for WeylState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol)
    }
}

#[derive(Serialize, Deserialize)]
struct WeylRecord {
    symbol: String,
    bloch: BlochVector,
}

impl Serialize for WeylState {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        WeylRecord { symbol: self.symbol.to_string(), bloch: self.bloch() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeylState {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let r = WeylRecord::deserialize(d)?;
        let symbol: GrassmannElement = r.symbol.parse().map_err(D::Error::custom)?;
        let state = WeylState::from_symbol(symbol).map_err(D::Error::custom)?;
        if state.bloch() != r.bloch {
            return Err(D::Error::custom("symbol and Bloch vector disagree"));
        }
        Ok(state)
    }
}

pub fn weyl_from_bloch(b: &BlochVector) -> WeylState {
    WeylState::from_bloch(b)
}

pub fn bloch_from_weyl(s: &WeylState) -> BlochVector {
    s.bloch()
}

/// The measure μ_ρ(ξjξk): half the coefficient of iξjξk in 2ρ.
pub fn mu(s: &WeylState, lam: OnticLabel) -> Rational {
    let (m, sign) = canonicalize(&[lam.first(), lam.second()]).expect("label generators are distinct");
    // c·m = c·sign·ξjξk, and c is purely imaginary for a valid state
    int(sign.as_i64()) * s.symbol().coefficient(m).im
}

/// P_ρ(λ ∖ −λ) = max{2μ_ρ(λ), 0}.
pub fn prob_setminus(s: &WeylState, lam: OnticLabel) -> Rational {
    max_rat(&(int(2) * mu(s, lam)), &Rational::zero())
}

pub fn six_tuple(s: &WeylState) -> SixTuple {
    let entries = OnticLabel::all().map(|lam| prob_setminus(s, lam));
    SixTuple::new(entries).expect("probabilities of a valid state form a valid tuple")
}

/// Mixes states through their Weyl symbols (sum in the Grassmann algebra).
pub fn convex_combine(entries: &[(Rational, WeylState)]) -> Result<WeylState, WeylError> {
    validate_convex_weights(entries.iter().map(|e| &e.0)).map_err(WeylError::BadWeights)?;
    let symbol = entries
        .iter()
        .fold(GrassmannElement::zero(), |acc, (w, s)| &acc + &s.symbol().scale_rational(w));
    WeylState::from_symbol(symbol)
}

/// Mixes tuples directly: per pair, the net weight Σ w·(g₊ − g₋) is split
/// back into g₊ = max(net, 0) and g₋ = max(−net, 0).
pub fn convex_combine_tuples(entries: &[(Rational, SixTuple)]) -> Result<SixTuple, WeylError> {
    validate_convex_weights(entries.iter().map(|e| &e.0)).map_err(WeylError::BadWeights)?;
    let net = Axis::ALL.map(|a| entries.iter().map(|(w, t)| w * t.net(a)).sum::<Rational>());
    SixTuple::from_net(net)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StabilizerState {
    #[serde(rename = "+x")]
    PlusX,
    #[serde(rename = "+y")]
    PlusY,
    #[serde(rename = "+z")]
    PlusZ,
    #[serde(rename = "-x")]
    MinusX,
    #[serde(rename = "-y")]
    MinusY,
    #[serde(rename = "-z")]
    MinusZ,
}

impl StabilizerState {
    /// In tuple order: the k-th state has its unit entry in slot k.
    pub const ALL: [StabilizerState; 6] = [
        StabilizerState::PlusX,
        StabilizerState::PlusY,
        StabilizerState::PlusZ,
        StabilizerState::MinusX,
        StabilizerState::MinusY,
        StabilizerState::MinusZ,
    ];

    pub fn axis(self) -> Axis {
        Axis::ALL[self as usize % 3]
    }

    pub fn is_plus(self) -> bool {
        (self as usize) < 3
    }

    pub fn opposite(self) -> Self {
        Self::ALL[(self as usize + 3) % 6]
    }

    pub fn name(self) -> String {
        format!("{}{}", if self.is_plus() { '+' } else { '-' }, self.axis().name())
    }

    pub fn bloch(self) -> BlochVector {
        let v = if self.is_plus() { int(1) } else { int(-1) };
        let mut c: [Rational; 3] = std::array::from_fn(|_| Rational::zero());
        c[self.axis().index()] = v;
        BlochVector::from_components(c).expect("unit vector")
    }

    /// ½(1 ± iξjξk).
    pub fn weyl(self) -> WeylState {
        WeylState::from_bloch(&self.bloch())
    }
}

impl FromStr for StabilizerState {
    type Err = WeylError;
    fn from_str(s: &str) -> Result<Self, WeylError> {
        let t = s.trim().replace('−', "-").to_ascii_lowercase();
        Self::ALL
            .into_iter()
            .find(|st| st.name() == t)
            .ok_or_else(|| WeylError::UnknownStabilizer(s.to_string()))
    }
}

impl fmt::Display for StabilizerState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// The six stabilizer states, in tuple order.
pub fn stabilizer_states() -> Vec<WeylState> {
    StabilizerState::ALL.iter().map(|s| s.weyl()).collect()
}

/// A random mixed or pure state with small rational components.
pub fn random_bloch<R: Rng + ?Sized>(rng: &mut R) -> BlochVector {
    loop {
        let mut comp = || {
            let d = rng.random_range(1..=12i64);
            rat(rng.random_range(-d..=d), d)
        };
        let c = [comp(), comp(), comp()];
        if let Ok(b) = BlochVector::from_components(c) {
            return b;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::Generator::{Q, R};

    fn bloch(a: Rational, b: Rational, c: Rational) -> BlochVector {
        BlochVector::new(a, b, c).unwrap()
    }

    fn label(j: Generator, k: Generator) -> OnticLabel {
        OnticLabel::new(j, k).unwrap()
    }

    #[test]
    fn weyl_bloch_examples() {
        let s = WeylState::from_bloch(&bloch(int(1), int(0), int(0)));
        assert_eq!(s.to_string(), "1/2 + 1/2*i*xi_r xi_q");
        assert_eq!(WeylState::maximally_mixed().symbol(), &GrassmannElement::scalar(ExactComplex::real(half())));
        let b = bloch(rat(3, 5), int(0), rat(4, 5));
        assert_eq!(WeylState::from_bloch(&b).bloch(), b);
        assert!(matches!(BlochVector::new(int(1), int(1), int(0)), Err(WeylError::NotPhysical(_))));
    }

    #[test]
    fn from_symbol_rejects_malformed() {
        let ok: GrassmannElement = "1/2 + 1/4*i*xi_p xi_q".parse().unwrap();
        assert!(WeylState::from_symbol(ok).is_ok());
        for bad in ["1 + i*xi_p xi_q", "1/2 + xi_p xi_q", "1/2 + xi_p", "1/2 + xi_p xi_q xi_r", "1/2 + i*xi_p xi_q + i*xi_p xi_r"] {
            let g: GrassmannElement = bad.parse().unwrap();
            assert!(WeylState::from_symbol(g).is_err(), "{bad}");
        }
    }

    #[test]
    fn mu_examples() {
        let s = StabilizerState::PlusX.weyl();
        assert_eq!(mu(&s, label(R, Q)), half());
        assert_eq!(mu(&s, label(Q, R)), -half());
        for lam in OnticLabel::all() {
            assert_eq!(mu(&WeylState::maximally_mixed(), lam), Rational::zero());
        }
        let s = WeylState::from_bloch(&bloch(rat(-1, 3), int(0), int(0)));
        assert_eq!(mu(&s, label(R, Q)), rat(-1, 6));
        assert_eq!(mu(&s, label(Q, R)), rat(1, 6));
    }

    #[test]
    fn prob_setminus_examples() {
        let s = StabilizerState::PlusX.weyl();
        assert_eq!(prob_setminus(&s, label(R, Q)), int(1));
        assert_eq!(prob_setminus(&s, label(Q, R)), int(0));
        for lam in OnticLabel::all() {
            assert!(prob_setminus(&WeylState::maximally_mixed(), lam).is_zero());
        }
        let s = WeylState::from_bloch(&bloch(rat(1, 3), int(0), int(0)));
        assert_eq!(prob_setminus(&s, label(R, Q)), rat(1, 3));
    }

    #[test]
    fn six_tuple_examples() {
        for (k, s) in stabilizer_states().iter().enumerate() {
            let mut unit = [0i64; 6];
            unit[k] = 1;
            assert_eq!(six_tuple(s), SixTuple::from_ints(unit).unwrap());
        }
        assert_eq!(six_tuple(&WeylState::maximally_mixed()), SixTuple::zero());
        let s = WeylState::from_bloch(&bloch(half(), -half(), int(0)));
        let expected = SixTuple::new([half(), int(0), int(0), int(0), half(), int(0)]).unwrap();
        assert_eq!(six_tuple(&s), expected);
    }

    #[test]
    fn convex_combine_examples() {
        let q = rat(1, 4);
        let entries: Vec<_> = [StabilizerState::PlusX, StabilizerState::MinusX, StabilizerState::PlusY, StabilizerState::MinusY]
            .iter()
            .map(|s| (q.clone(), s.weyl()))
            .collect();
        assert_eq!(convex_combine(&entries).unwrap(), WeylState::maximally_mixed());
        let s = WeylState::from_bloch(&bloch(rat(1, 3), rat(1, 3), rat(-1, 3)));
        assert_eq!(convex_combine(&[(int(1), s.clone())]).unwrap(), s);
        let half_half = convex_combine(&[(half(), StabilizerState::PlusZ.weyl()), (half(), StabilizerState::MinusZ.weyl())]);
        assert_eq!(half_half.unwrap(), WeylState::maximally_mixed());
        assert!(matches!(convex_combine(&[(half(), s.clone())]), Err(WeylError::BadWeights(_))));
        assert!(matches!(convex_combine(&[(int(2), s.clone()), (int(-1), s)]), Err(WeylError::BadWeights(_))));
    }

    #[test]
    fn convex_combine_tuples_examples() {
        let e = |k: usize| {
            let mut v = [0i64; 6];
            v[k] = 1;
            SixTuple::from_ints(v).unwrap()
        };
        let q = rat(1, 4);
        let four: Vec<_> = [0, 3, 1, 4].iter().map(|&k| (q.clone(), e(k))).collect();
        assert_eq!(convex_combine_tuples(&four).unwrap(), SixTuple::zero());
        assert_eq!(convex_combine_tuples(&[(int(1), e(2))]).unwrap(), e(2));
        assert_eq!(convex_combine_tuples(&[(half(), e(0)), (half(), e(3))]).unwrap(), SixTuple::zero());
        let mixed = convex_combine_tuples(&[(rat(3, 4), e(0)), (rat(1, 4), e(3))]).unwrap();
        assert_eq!(mixed, SixTuple::new([half(), int(0), int(0), int(0), int(0), int(0)]).unwrap());
    }

    #[test]
    fn tuple_invariants_enforced() {
        assert!(SixTuple::from_ints([1, 0, 0, 1, 0, 0]).is_err());
        assert!(SixTuple::from_ints([2, 0, 0, 0, 0, 0]).is_err());
        assert!(SixTuple::from_ints([-1, 0, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn stabilizer_set() {
        let states = stabilizer_states();
        assert_eq!(states.len(), 6);
        for s in StabilizerState::ALL {
            let sum: Vec<Rational> = s.bloch().components().iter().zip(s.opposite().bloch().components()).map(|(a, b)| a + b).collect();
            assert!(sum.iter().all(|x| x.is_zero()));
            assert_eq!(s.name().parse::<StabilizerState>().unwrap(), s);
        }
        assert_eq!("−z".parse::<StabilizerState>().unwrap(), StabilizerState::MinusZ);
    }

    #[test]
    fn serde_round_trip() {
        let s = WeylState::from_bloch(&bloch(rat(1, 3), rat(-1, 2), int(0)));
        let json = serde_json::to_string(&s).unwrap();
        assert!(json.contains("\"num\":-1,\"den\":2"));
        let back: WeylState = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        let t = s.six_tuple();
        let back: SixTuple = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        assert_eq!(back, t);
        let bad = r#"[{"num":1,"den":1},{"num":0,"den":1},{"num":0,"den":1},{"num":1,"den":1},{"num":0,"den":1},{"num":0,"den":1}]"#;
        assert!(serde_json::from_str::<SixTuple>(bad).is_err());
    }
}
