//! Plain-text notation for Grassmann elements, e.g. `1/2 + 1/2*i*xi_r xi_q`.
//!
//! Rendering writes the degree-two monomial on {q, r} as `xi_r xi_q` (the
//! orientation used by qubit Weyl symbols); every other monomial is written
//! in canonical order. The parser accepts sums of products of rational
//! literals, `i`, generators (`xi_p`, `ξp`, `ξ_p`) and parenthesized
//! subexpressions; juxtaposition means multiplication.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::grassmann::{Generator, GrassmannElement, Monomial, Sign};
use crate::scalar::{fmt_rational, ExactComplex, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

/// Display orientation of a canonical monomial: the generators as written
/// and the sign relating the written product to the canonical one.
fn orientation(m: Monomial) -> (Vec<Generator>, Sign) {
    let gens: Vec<Generator> = m.generators().collect();
    if gens == [Generator::Q, Generator::R] {
        (vec![Generator::R, Generator::Q], Sign::Minus)
    } else {
        (gens, Sign::Plus)
    }
}

fn render_term(m: Monomial, c: &ExactComplex) -> String {
    let (gens, sign) = orientation(m);
    let c = sign.apply(c.clone());
    if gens.is_empty() {
        return c.to_string();
    }
    let word = gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ");
    let one = ExactComplex::one();
    let prefix = if c == one {
        String::new()
    } else if c == -one.clone() {
        "-".to_string()
    } else if c == ExactComplex::i() {
        "i*".to_string()
    } else if c == -ExactComplex::i() {
        "-i*".to_string()
    } else {
        format!("{c}*")
    };
    format!("{prefix}{word}")
}

impl fmt::Display for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let t = render_term(m, c);
            if k == 0 {
                write!(f, "{t}")?;
            } else if let Some(rest) = t.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {t}")?;
            }
        }
        Ok(())
    }
}

/// Formats a rational for use inside larger expressions (`-1/2`, `3`).
pub fn rational_literal(q: &Rational) -> String {
    let s = fmt_rational(&q.abs());
    if q.is_negative() {
        format!("-{s}")
    } else {
        s
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Slash,
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    I,
    Xi(Generator),
}

fn lex(src: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<(usize, char)> = src.char_indices().collect();
    let mut out = Vec::new();
    let mut k = 0;
    let err = |position: usize, message: &str| ParseError { position, message: message.to_string() };
    while k < chars.len() {
        let (pos, ch) = chars[k];
        match ch {
            c if c.is_whitespace() => k += 1,
            '+' => {
                out.push((pos, Token::Plus));
                k += 1;
            }
            '-' | '−' => {
                out.push((pos, Token::Minus));
                k += 1;
            }
            '*' | '·' => {
                out.push((pos, Token::Star));
                k += 1;
            }
            '/' => {
                out.push((pos, Token::Slash));
                k += 1;
            }
            '(' => {
                out.push((pos, Token::LParen));
                k += 1;
            }
            ')' => {
                out.push((pos, Token::RParen));
                k += 1;
            }
            c if c.is_ascii_digit() => {
                let start = k;
                while k < chars.len() && chars[k].1.is_ascii_digit() {
                    k += 1;
                }
                let digits: String = chars[start..k].iter().map(|(_, c)| *c).collect();
                out.push((pos, Token::Num(digits.parse().expect("ascii digits"))));
            }
            'i' if chars.get(k + 1).map(|c| c.1) != Some('_') => {
                out.push((pos, Token::I));
                k += 1;
            }
            'x' | 'ξ' => {
                // xi_p, ξp, ξ_p
                let mut j = k + 1;
                if ch == 'x' {
                    if chars.get(j).map(|c| c.1) != Some('i') {
                        return Err(err(pos, "expected `xi_`"));
                    }
                    j += 1;
                }
                if chars.get(j).map(|c| c.1) == Some('_') {
                    j += 1;
                }
                let g = chars
                    .get(j)
                    .and_then(|c| Generator::from_label(c.1))
                    .ok_or_else(|| err(pos, "unknown generator, expected p, q or r"))?;
                out.push((pos, Token::Xi(g)));
                k = j + 1;
            }
            _ => return Err(err(pos, &format!("unexpected character `{ch}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|t| &t.1)
    }

    fn position(&self) -> usize {
        self.tokens.get(self.at).map(|t| t.0).unwrap_or(self.end)
    }

    fn error(&self, message: &str) -> ParseError {
        ParseError { position: self.position(), message: message.to_string() }
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.at).map(|t| t.1.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<GrassmannElement, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Token::Plus) => {
                self.bump();
            }
            Some(Token::Minus) => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Token::Num(_) | Token::I | Token::Xi(_) | Token::LParen))
    }

    fn term(&mut self) -> Result<GrassmannElement, ParseError> {
        let mut acc = self.factor()?;
        loop {
            if matches!(self.peek(), Some(Token::Star)) {
                self.bump();
                acc = &acc * &self.factor()?;
            } else if self.starts_factor() {
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<GrassmannElement, ParseError> {
        match self.bump() {
            Some(Token::Num(n)) => {
                let mut q = Rational::from_integer(n);
                if matches!(self.peek(), Some(Token::Slash)) {
                    self.bump();
                    match self.bump() {
                        Some(Token::Num(d)) if !d.is_zero() => q /= Rational::from_integer(d),
                        _ => {
                            self.at -= 1;
                            return Err(self.error("expected nonzero denominator"));
                        }
                    }
                }
                Ok(GrassmannElement::scalar(ExactComplex::real(q)))
            }
            Some(Token::I) => Ok(GrassmannElement::scalar(ExactComplex::i())),
            Some(Token::Xi(g)) => Ok(GrassmannElement::generator(g)),
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => {
                        self.at -= 1;
                        Err(self.error("expected `)`"))
                    }
                }
            }
            _ => {
                self.at -= 1;
                Err(self.error("expected a number, `i`, a generator or `(`"))
            }
        }
    }
}

impl FromStr for GrassmannElement {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let tokens = lex(s)?;
        let mut p = Parser { tokens, at: 0, end: s.len() };
        if p.peek().is_none() {
            return Err(p.error("empty expression"));
        }
        let e = p.expr()?;
        if p.peek().is_some() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::Generator::{P, Q, R};
    use crate::scalar::{half, rat};

    #[test]
    fn renders_weyl_symbol_notation() {
        let rho = &GrassmannElement::scalar(ExactComplex::real(half()))
            + &GrassmannElement::product_of(ExactComplex::imag(half()), &[R, Q]);
        assert_eq!(rho.to_string(), "1/2 + 1/2*i*xi_r xi_q");
        let e = &GrassmannElement::product_of(ExactComplex::imag(rat(-1, 3)), &[P, Q])
            + &GrassmannElement::generator(R);
        assert_eq!(e.to_string(), "xi_r - 1/3*i*xi_p xi_q");
        assert_eq!(GrassmannElement::zero().to_string(), "0");
    }

    #[test]
    fn parses_notation() {
        let rho: GrassmannElement = "1/2 + 1/2*i*xi_r xi_q".parse().unwrap();
        let expected = &GrassmannElement::scalar(ExactComplex::real(half()))
            + &GrassmannElement::product_of(ExactComplex::imag(half()), &[R, Q]);
        assert_eq!(rho, expected);
        let same: GrassmannElement = "1/2(1 + i ξr ξq)".parse().unwrap();
        assert_eq!(same, expected);
        let anti: GrassmannElement = "xi_q xi_p + xi_p xi_q".parse().unwrap();
        assert!(anti.is_zero());
        let complex: GrassmannElement = "(1/2 - 3/4*i) xi_p".parse().unwrap();
        assert_eq!(complex.to_string(), "(1/2 - 3/4*i)*xi_p");
    }

    #[test]
    fn parse_errors_carry_position() {
        assert_eq!("1/2 +".parse::<GrassmannElement>().unwrap_err().position, 5);
        assert!("xi_s".parse::<GrassmannElement>().is_err());
        assert!("1/0".parse::<GrassmannElement>().is_err());
        assert!("(xi_p".parse::<GrassmannElement>().is_err());
        assert!("".parse::<GrassmannElement>().is_err());
    }
}
