//! Text format for constraint systems.
//!
//! ```text
//! # comments run to end of line
//! atoms W X Y Z
//! region A = W | Y
//! region B = X | Y
//! eq P(A) + P(B) = 1
//! eq 2*P(Y) + P(W | X) = 1
//! max P(A | B) = P(A), P(B)
//! min P(A & B) = P(A), P(B)
//! normalize all
//! ```
//!
//! Region operators, loosest first: `|` (union), `\` (difference), `&`
//! (intersection), prefix `!` (complement). `empty` and `all` name the empty
//! and full regions. The implicit constraint P(all) = 1 is added unless the
//! file contains `nonexhaustive`.

use std::collections::BTreeMap;

use super::region::{AtomSet, RegionExpr};
use super::system::{ConstraintSystem, MinMaxKind};
use super::OnticError;
use crate::scalar::{parse_rational, Rational};

fn dsl_err(line: usize, message: impl Into<String>) -> OnticError {
    OnticError::Dsl { line, message: message.into() }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Or,
    And,
    Minus,
    Not,
    LParen,
    RParen,
}

fn lex_region(src: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '|' | '∪' => {
                chars.next();
                out.push(Tok::Or);
            }
            '&' | '∩' => {
                chars.next();
                out.push(Tok::And);
            }
            '\\' | '∖' => {
                chars.next();
                out.push(Tok::Minus);
            }
            '!' => {
                chars.next();
                out.push(Tok::Not);
            }
            '(' => {
                chars.next();
                out.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                out.push(Tok::RParen);
            }
            c if c.is_alphanumeric() || c == '_' => {
                let mut s = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_alphanumeric() || c == '_' {
                        s.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(s));
            }
            other => return Err(format!("unexpected character `{other}` in region")),
        }
    }
    Ok(out)
}

struct RegionParser<'a> {
    toks: Vec<Tok>,
    at: usize,
    names: &'a BTreeMap<String, RegionExpr>,
}

impl RegionParser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).cloned();
        self.at += 1;
        t
    }

    fn union(&mut self) -> Result<RegionExpr, String> {
        let mut e = self.difference()?;
        while self.peek() == Some(&Tok::Or) {
            self.next();
            e = e.union(self.difference()?);
        }
        Ok(e)
    }

    fn difference(&mut self) -> Result<RegionExpr, String> {
        let mut e = self.intersection()?;
        while self.peek() == Some(&Tok::Minus) {
            self.next();
            e = e.difference(self.intersection()?);
        }
        Ok(e)
    }

    fn intersection(&mut self) -> Result<RegionExpr, String> {
        let mut e = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.next();
            e = e.intersection(self.unary()?);
        }
        Ok(e)
    }

    fn unary(&mut self) -> Result<RegionExpr, String> {
        match self.next() {
            Some(Tok::Not) => Ok(self.unary()?.complement()),
            Some(Tok::LParen) => {
                let e = self.union()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err("expected `)`".into()),
                }
            }
            Some(Tok::Ident(s)) => Ok(match s.as_str() {
                "empty" => RegionExpr::Empty,
                "all" => RegionExpr::Full,
                _ => self.names.get(&s).cloned().unwrap_or(RegionExpr::Atom(s)),
            }),
            Some(t) => Err(format!("unexpected {t:?} in region")),
            None => Err("region ended early".into()),
        }
    }
}

fn parse_region_with(src: &str, names: &BTreeMap<String, RegionExpr>) -> Result<RegionExpr, String> {
    let toks = lex_region(src)?;
    let mut p = RegionParser { toks, at: 0, names };
    let e = p.union()?;
    if p.at != p.toks.len() {
        return Err(format!("trailing input in region `{src}`"));
    }
    Ok(e)
}

/// Parses a standalone region expression (atoms only, no named regions).
pub fn parse_region(src: &str) -> Result<RegionExpr, OnticError> {
    parse_region_with(src, &BTreeMap::new()).map_err(|m| dsl_err(0, m))
}

/// Parses `P(expr)`, returning the inner region.
fn parse_prob(src: &str, names: &BTreeMap<String, RegionExpr>) -> Result<RegionExpr, String> {
    let s = src.trim();
    let inner = s
        .strip_prefix("P(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| format!("expected P(region), found `{s}`"))?;
    parse_region_with(inner, names)
}

/// Splits `a + b - c` at top-level signs, keeping each sign with its term.
fn split_terms(src: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut negative = false;
    for c in src.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (c == '+' || c == '-') {
            if !cur.trim().is_empty() {
                out.push((negative, cur.trim().to_string()));
            }
            cur.clear();
            negative = c == '-';
            continue;
        }
        cur.push(c);
    }
    if !cur.trim().is_empty() {
        out.push((negative, cur.trim().to_string()));
    }
    out
}

fn parse_term(src: &str, names: &BTreeMap<String, RegionExpr>) -> Result<(Rational, RegionExpr), String> {
    let at = src.find("P(").ok_or_else(|| format!("expected P(region) in `{src}`"))?;
    let coef = src[..at].trim().trim_end_matches('*').trim();
    let coef = if coef.is_empty() {
        Rational::from_integer(1.into())
    } else {
        parse_rational(coef).ok_or_else(|| format!("bad coefficient `{coef}`"))?
    };
    Ok((coef, parse_prob(&src[at..], names)?))
}

/// Parses a constraint system from its text form.
pub fn parse_system(src: &str) -> Result<ConstraintSystem, OnticError> {
    let mut atoms: Option<AtomSet> = None;
    let mut names: BTreeMap<String, RegionExpr> = BTreeMap::new();
    let mut exhaustive = true;
    let mut statements: Vec<(usize, String, String)> = Vec::new();

    for (k, raw) in src.lines().enumerate() {
        let line = k + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let (keyword, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        let rest = rest.trim();
        match keyword {
            "atoms" => {
                if atoms.is_some() {
                    return Err(dsl_err(line, "atoms declared twice"));
                }
                atoms = Some(AtomSet::new(rest.split_whitespace()).map_err(|e| dsl_err(line, e.to_string()))?);
            }
            "region" => {
                let (name, expr) = rest.split_once('=').ok_or_else(|| dsl_err(line, "expected `region NAME = expr`"))?;
                let name = name.trim().to_string();
                let set = atoms.as_ref().ok_or_else(|| dsl_err(line, "region before atoms"))?;
                if set.index_of(&name).is_ok() || names.contains_key(&name) {
                    return Err(dsl_err(line, format!("`{name}` is already defined")));
                }
                let e = parse_region_with(expr, &names).map_err(|m| dsl_err(line, m))?;
                e.evaluate(set).map_err(|e| dsl_err(line, e.to_string()))?;
                names.insert(name, e);
            }
            "nonexhaustive" => exhaustive = false,
            "eq" | "max" | "min" | "normalize" => statements.push((line, keyword.to_string(), rest.to_string())),
            other => return Err(dsl_err(line, format!("unknown statement `{other}`"))),
        }
    }

    let atoms = atoms.ok_or_else(|| dsl_err(0, "missing `atoms` line"))?;
    let mut sys = if exhaustive { ConstraintSystem::new(atoms) } else { ConstraintSystem::without_normalization(atoms) };
    for (line, keyword, rest) in statements {
        let wrap = |e: OnticError| dsl_err(line, e.to_string());
        match keyword.as_str() {
            "eq" => {
                let (lhs, rhs) = rest.rsplit_once('=').ok_or_else(|| dsl_err(line, "expected `=`"))?;
                let rhs = parse_rational(rhs).ok_or_else(|| dsl_err(line, format!("bad right-hand side `{}`", rhs.trim())))?;
                let mut terms = Vec::new();
                for (neg, t) in split_terms(lhs) {
                    let (c, r) = parse_term(&t, &names).map_err(|m| dsl_err(line, m))?;
                    terms.push((if neg { -c } else { c }, r));
                }
                if terms.is_empty() {
                    return Err(dsl_err(line, "empty equation"));
                }
                sys.add_equality(terms, rhs).map_err(wrap)?;
            }
            "max" | "min" => {
                let kind = if keyword == "max" { MinMaxKind::Max } else { MinMaxKind::Min };
                let (lhs, rhs) = rest.split_once('=').ok_or_else(|| dsl_err(line, "expected `=`"))?;
                let target = parse_prob(lhs, &names).map_err(|m| dsl_err(line, m))?;
                let parts = split_top_level_commas(rhs);
                let [first, second] = parts.as_slice() else {
                    return Err(dsl_err(line, "expected two comma-separated probabilities"));
                };
                let first = parse_prob(first, &names).map_err(|m| dsl_err(line, m))?;
                let second = parse_prob(second, &names).map_err(|m| dsl_err(line, m))?;
                sys.add_minmax(kind, target, first, second).map_err(wrap)?;
            }
            "normalize" => {
                let r = parse_region_with(&rest, &names).map_err(|m| dsl_err(line, m))?;
                sys.set_normalization(r).map_err(wrap)?;
            }
            _ => unreachable!("filtered above"),
        }
    }
    Ok(sys)
}

fn split_top_level_commas(src: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in src.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(c);
    }
    out.push(cur);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ontic::families::enumerate_families;
    use crate::scalar::{half, int};

    const THREE_STATE: &str = "
        atoms W X Y Z
        region A = W | Y   # first non-disjoint state
        region B = X | Y
        eq P(A) + P(B) = 1
        max P(A | B) = P(A), P(B)
        min P(A & B) = P(A), P(B)
    ";

    #[test]
    fn parses_three_state_text() {
        let sys = parse_system(THREE_STATE).unwrap();
        assert_eq!(sys.atoms().labels(), ["W", "X", "Y", "Z"]);
        assert_eq!(sys.equalities().len(), 2);
        assert_eq!(sys.minmax().len(), 2);
        assert!(sys.satisfies(&[int(0), int(0), half(), half()]));
        assert_eq!(enumerate_families(&sys).unwrap().len(), 2);
    }

    #[test]
    fn coefficients_and_signs() {
        let sys = parse_system("atoms a b\neq 2*P(a) - 1/2 P(b) = 1/2").unwrap();
        let (row, rhs) = sys.equality_rows().pop().unwrap();
        assert_eq!(row, vec![int(2), -half()]);
        assert_eq!(rhs, half());
    }

    #[test]
    fn region_precedence() {
        let e = parse_region("a | b & !c \\ d").unwrap();
        let atoms = AtomSet::new(["a", "b", "c", "d"]).unwrap();
        // a ∪ ((b ∩ cᶜ) ∖ d)
        assert_eq!(e.evaluate(&atoms).unwrap(), 0b0011);
        assert_eq!(parse_region("(a | b) & c").unwrap().evaluate(&atoms).unwrap(), 0);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse_system("atoms a b\n\neq P(c) = 1").unwrap_err();
        assert!(matches!(err, OnticError::Dsl { line: 3, .. }), "{err:?}");
        assert!(matches!(parse_system("eq P(a) = 1"), Err(OnticError::Dsl { .. })));
        assert!(matches!(parse_system("atoms a\nfoo"), Err(OnticError::Dsl { line: 2, .. })));
        assert!(matches!(parse_system("atoms a\nmax P(a) = P(a)"), Err(OnticError::Dsl { line: 2, .. })));
    }

    #[test]
    fn nonexhaustive_drops_the_total_row() {
        let sys = parse_system("atoms a b\nnonexhaustive").unwrap();
        assert!(sys.equalities().is_empty());
    }
}
