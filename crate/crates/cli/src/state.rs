//! State strings: `bloch a/b,c/d,e/f`, `stab +x` or `atom +-+`.

use std::fmt;
use std::str::FromStr;

use wwm_core::models::EightState;
use wwm_core::scalar::{fmt_rational, parse_rational};
use wwm_core::{BlochVector, StabilizerState, WeylState};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StateSpec {
    Bloch(BlochVector),
    Stabilizer(StabilizerState),
    /// A point mass on one ontic state of the eight-state model.
    Atom(EightState),
}

impl StateSpec {
    /// The qubit state, for specs that describe one.
    pub fn weyl(&self) -> Result<WeylState, CliError> {
        match self {
            StateSpec::Bloch(b) => Ok(WeylState::from_bloch(b)),
            StateSpec::Stabilizer(s) => Ok(s.weyl()),
            StateSpec::Atom(_) => Err(CliError::usage("`atom` states belong to the eight-state model; use `bloch` or `stab`")),
        }
    }

    pub fn atom(&self) -> Result<EightState, CliError> {
        match self {
            StateSpec::Atom(a) => Ok(*a),
            _ => Err(CliError::usage("the eight-state model takes `atom` states, e.g. `atom +++`")),
        }
    }
}

impl FromStr for StateSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let s = s.trim();
        let (kind, rest) = s.split_once(char::is_whitespace).unwrap_or((s, ""));
        let rest = rest.trim();
        match kind {
            "bloch" => {
                let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
                let [a, b, c] = parts.as_slice() else {
                    return Err(CliError::usage(format!("expected three components in `{s}`")));
                };
                let q = |t: &str| parse_rational(t).ok_or_else(|| CliError::usage(format!("bad rational `{t}`")));
                let v = BlochVector::new(q(a)?, q(b)?, q(c)?).map_err(|e| CliError::usage(e.to_string()))?;
                Ok(StateSpec::Bloch(v))
            }
            "stab" => rest.parse().map(StateSpec::Stabilizer).map_err(|e| CliError::usage(format!("{e}"))),
            "atom" => rest.parse().map(StateSpec::Atom).map_err(CliError::Usage),
            _ => Err(CliError::usage(format!("unknown state `{s}` (expected `bloch a,b,c`, `stab +x` or `atom +++`)"))),
        }
    }
}

impl fmt::Display for StateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateSpec::Bloch(b) => {
                let c = b.components();
                write!(f, "bloch {},{},{}", fmt_rational(&c[0]), fmt_rational(&c[1]), fmt_rational(&c[2]))
            }
            StateSpec::Stabilizer(s) => write!(f, "stab {s}"),
            StateSpec::Atom(a) => write!(f, "atom {a}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use wwm_core::scalar::{int, rat};

    #[test]
    fn grammar() {
        let b: StateSpec = "bloch 1/2, 0, -1/3".parse().unwrap();
        assert_eq!(b, StateSpec::Bloch(BlochVector::new(rat(1, 2), int(0), rat(-1, 3)).unwrap()));
        assert_eq!(b.to_string(), "bloch 1/2,0,-1/3");
        assert_eq!("stab −y".parse::<StateSpec>().unwrap(), StateSpec::Stabilizer(StabilizerState::MinusY));
        assert_eq!("atom +-+".parse::<StateSpec>().unwrap().to_string(), "atom +-+");
        for bad in ["bloch 1,1,1", "bloch 1,2", "stab +w", "atom ++", "pure +x", "bloch a,0,0"] {
            assert!(bad.parse::<StateSpec>().is_err(), "{bad}");
        }
        assert!("atom +++".parse::<StateSpec>().unwrap().weyl().is_err());
    }
}
