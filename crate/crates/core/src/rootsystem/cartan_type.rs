use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
}

impl Family {
    pub fn is_crystallographic(self) -> bool {
        !matches!(self, Family::H | Family::I)
    }

    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
            Family::H => 'H',
            Family::I => 'I',
        }
    }
}

/// Label of a finite irreducible Coxeter group: family, rank and, for the
/// dihedral family `I₂(m)`, the parameter `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    family: Family,
    rank: usize,
    m: Option<u32>,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family == Family::I {
            return Err(Error::InvalidCartanType(
                "the dihedral family needs a parameter, use CartanType::dihedral".into(),
            ));
        }
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            // D3 is accepted and is the A3 system with a different node labelling.
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
            Family::H => (2..=4).contains(&rank),
            Family::I => unreachable!(),
        };
        if !ok {
            return Err(Error::InvalidCartanType(format!("{}{}", family.letter(), rank)));
        }
        Ok(Self { family, rank, m: None })
    }

    /// The dihedral group `I₂(m)` of order `2m`, `m ≥ 3`.
    pub fn dihedral(m: u32) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidCartanType(format!("I2({m})")));
        }
        Ok(Self { family: Family::I, rank: 2, m: Some(m) })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dihedral_parameter(&self) -> Option<u32> {
        self.m
    }

    pub fn is_crystallographic(&self) -> bool {
        self.family.is_crystallographic()
    }

    /// Degrees of the basic invariants, sorted ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let n = self.rank as u32;
        let mut d: Vec<u32> = match self.family {
            Family::A => (2..=n + 1).collect(),
            Family::B | Family::C => (1..=n).map(|i| 2 * i).collect(),
            Family::D => (1..n).map(|i| 2 * i).chain([n]).collect(),
            Family::E => match n {
                6 => vec![2, 5, 6, 8, 9, 12],
                7 => vec![2, 6, 8, 10, 12, 14, 18],
                _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
            },
            Family::F => vec![2, 6, 8, 12],
            Family::G => vec![2, 6],
            Family::H => match n {
                2 => vec![2, 5],
                3 => vec![2, 6, 10],
                _ => vec![2, 12, 20, 30],
            },
            Family::I => vec![2, self.m.expect("dihedral parameter")],
        };
        d.sort_unstable();
        d
    }

    /// The tabulated constant entering the power sums of the exponents.
    pub fn gamma(&self) -> u64 {
        let n = self.rank as u64;
        match self.family {
            Family::A => (n + 1) * (n + 1),
            Family::B | Family::C => 4 * n * n + 2 * n - 2,
            Family::D => (2 * n - 2) * (2 * n - 2),
            Family::E => match n {
                6 => 144,
                7 => 324,
                _ => 900,
            },
            Family::F => 162,
            Family::G => 48,
            Family::H => match n {
                // H2 is I2(5)
                2 => 31,
                3 => 124,
                _ => 1116,
            },
            Family::I => {
                let m = self.m.expect("dihedral parameter") as u64;
                2 * m * m - 5 * m + 6
            }
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m {
            Some(m) => write!(f, "I2({m})"),
            None => write!(f, "{}{}", self.family.letter(), self.rank),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidCartanType(s.to_string());
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            Some('H') => Family::H,
            Some('I') => Family::I,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        if family == Family::I {
            let inner = rest
                .strip_prefix("2(")
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(bad)?;
            let m: u32 = inner.trim().parse().map_err(|_| bad())?;
            return Self::dihedral(m);
        }
        let rank: usize = rest.parse().map_err(|_| bad())?;
        Self::new(family, rank)
    }
}
