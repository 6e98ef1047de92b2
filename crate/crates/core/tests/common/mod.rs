//! Test-only oracles built independently of the library's Grassmann path.
#![allow(dead_code)]

use num_complex::Complex;
use num_traits::{One, Zero};
use wwm_core::scalar::{half, Rational};
use wwm_core::{Axis, StabilizerState};

pub type C = Complex<Rational>;
pub type Mat2 = [[C; 2]; 2];

fn c(re: i64, im: i64) -> C {
    Complex::new(Rational::from_integer(re.into()), Rational::from_integer(im.into()))
}

fn identity() -> Mat2 {
    [[c(1, 0), c(0, 0)], [c(0, 0), c(1, 0)]]
}

pub fn pauli(axis: Axis) -> Mat2 {
    match axis {
        Axis::X => [[c(0, 0), c(1, 0)], [c(1, 0), c(0, 0)]],
        Axis::Y => [[c(0, 0), c(0, -1)], [c(0, 1), c(0, 0)]],
        Axis::Z => [[c(1, 0), c(0, 0)], [c(0, 0), c(-1, 0)]],
    }
}

/// Projector (I ± σ)/2 onto the `plus` or minus eigenspace of σ.
pub fn projector(axis: Axis, plus: bool) -> Mat2 {
    let s = pauli(axis);
    let i = identity();
    let h = Complex::new(half(), Rational::zero());
    std::array::from_fn(|r| std::array::from_fn(|k| if plus { &i[r][k] + &s[r][k] } else { &i[r][k] - &s[r][k] } * &h))
}

/// Unnormalized eigenvector of the stabilizer state.
fn ket(s: StabilizerState) -> [C; 2] {
    let plus = s.is_plus();
    let sgn = if plus { 1 } else { -1 };
    match s.axis() {
        Axis::X => [c(1, 0), c(sgn, 0)],
        Axis::Y => [c(1, 0), c(0, sgn)],
        Axis::Z => {
            if plus {
                [c(1, 0), c(0, 0)]
            } else {
                [c(0, 0), c(1, 0)]
            }
        }
    }
}

/// |ψ⟩⟨ψ| / ⟨ψ|ψ⟩.
pub fn density(s: StabilizerState) -> Mat2 {
    let v = ket(s);
    let norm: Rational = v.iter().map(|x| x.norm_sqr()).sum();
    std::array::from_fn(|r| std::array::from_fn(|k| (&v[r] * v[k].conj()).unscale(norm.clone())))
}

fn trace_product(a: &Mat2, b: &Mat2) -> C {
    let mut t = Complex::zero();
    for r in 0..2 {
        for k in 0..2 {
            t += &a[r][k] * &b[k][r];
        }
    }
    t
}

/// Born probability tr(ρ Π) of outcome `plus` when measuring `axis`.
pub fn born(s: StabilizerState, axis: Axis, plus: bool) -> Rational {
    let p = trace_product(&density(s), &projector(axis, plus));
    assert!(p.im.is_zero(), "probabilities are real");
    p.re
}

pub fn is_trivial_probability(p: &Rational) -> bool {
    p.is_zero() || *p == half() || p.is_one()
}
