use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Integral weight in the fundamental-weight basis: `coords[i] = ⟨μ, α̌ᵢ⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = vec![0; rank];
        w[i] = 1;
        Weight(w)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scaled(&self, k: i64) -> Self {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    pub(crate) fn add_scaled(&self, other: &Weight, k: i64) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + k * b).collect())
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.add_scaled(rhs, 1)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.add_scaled(rhs, -1)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Comma-separated fundamental coordinates, e.g. `1,1` or `(2,0,1)`.
impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.trim().is_empty() {
            return Err(Error::Parse(format!("empty weight {s:?}")));
        }
        t.split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map(Weight)
            .map_err(|_| Error::Parse(format!("bad weight {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let w: Weight = "2, 0,-1".parse().unwrap();
        assert_eq!(w, Weight(vec![2, 0, -1]));
        assert_eq!(w.to_string(), "(2,0,-1)");
        assert_eq!(w.to_string().parse::<Weight>().unwrap(), w);
        assert!("".parse::<Weight>().is_err());
        assert!("1,x".parse::<Weight>().is_err());
    }

    #[test]
    fn arithmetic() {
        let a = Weight(vec![1, 2]);
        let b = Weight(vec![3, -1]);
        assert_eq!(&a + &b, Weight(vec![4, 1]));
        assert_eq!(&a - &b, Weight(vec![-2, 3]));
        assert!(!(-&a).is_dominant());
        assert!(Weight::zero(3).is_zero());
    }
}
