use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Variable families, listed in rank order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// Symplectic/orthogonal pairs `x_i^{±1}`.
    X,
    /// Free variables `z_j`.
    Z,
    /// Cauchy-kernel variables `y_s`.
    Y,
    /// Square roots `x_i = t_i^2` for half-integer bialternants.
    T,
    Aux,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::X, Family::Z, Family::Y, Family::T, Family::Aux];

    pub fn prefix(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::Z => "z",
            Family::Y => "y",
            Family::T => "t",
            Family::Aux => "a",
        }
    }

    /// Families whose monomials are printed as the "leading" block of a term.
    pub fn is_primary(self) -> bool {
        matches!(self, Family::X | Family::T)
    }

    fn rank(self) -> u16 {
        self as u16
    }

    fn from_rank(r: u16) -> Family {
        Family::ALL[r as usize]
    }
}

/// A variable `(family, index)` packed into 16 bits; indices start at 1.
///
/// The derived order is the variable order: by family rank, then index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u16);

impl Var {
    pub fn new(family: Family, index: u16) -> Var {
        assert!((1..=255).contains(&index), "variable index out of range: {index}");
        Var(family.rank() << 8 | index)
    }

    pub fn x(i: usize) -> Var {
        Var::new(Family::X, i as u16)
    }

    pub fn z(j: usize) -> Var {
        Var::new(Family::Z, j as u16)
    }

    pub fn y(s: usize) -> Var {
        Var::new(Family::Y, s as u16)
    }

    pub fn t(i: usize) -> Var {
        Var::new(Family::T, i as u16)
    }

    pub fn aux(i: usize) -> Var {
        Var::new(Family::Aux, i as u16)
    }

    pub fn family(self) -> Family {
        Family::from_rank(self.0 >> 8)
    }

    pub fn index(self) -> usize {
        (self.0 & 0xff) as usize
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family().prefix(), self.index())
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid variable name `{0}`")]
pub struct ParseVarError(pub String);

impl FromStr for Var {
    type Err = ParseVarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseVarError(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next() {
            Some('x') => Family::X,
            Some('z') => Family::Z,
            Some('y') => Family::Y,
            Some('t') => Family::T,
            Some('a') => Family::Aux,
            _ => return Err(err()),
        };
        let index: u16 = chars.as_str().parse().map_err(|_| err())?;
        if !(1..=255).contains(&index) {
            return Err(err());
        }
        Ok(Var::new(family, index))
    }
}

impl Serialize for Var {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Var {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_family_then_index() {
        assert!(Var::x(2) < Var::x(10));
        assert!(Var::x(10) < Var::z(1));
        assert!(Var::z(3) < Var::y(1));
    }

    #[test]
    fn names_round_trip() {
        for v in [Var::x(1), Var::z(12), Var::y(3), Var::t(2), Var::aux(7)] {
            assert_eq!(v.to_string().parse::<Var>().unwrap(), v);
        }
        assert!("q1".parse::<Var>().is_err());
        assert!("x0".parse::<Var>().is_err());
    }
}
