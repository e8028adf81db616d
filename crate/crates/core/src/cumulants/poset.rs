use std::collections::HashMap;

use num::BigInt;

use crate::error::{Error, Result};
use crate::numeric::QPolynomial;
use crate::rootsystem::{CartanType, Family, RootSystem};

/// Nodes (1-based, Bourbaki numbering) whose fundamental weight is minuscule.
pub fn minuscule_nodes(t: CartanType) -> Vec<usize> {
    let n = t.rank();
    match t.family() {
        Family::A => (1..=n).collect(),
        Family::B => vec![n],
        Family::C => vec![1],
        Family::D => vec![1, n - 1, n],
        Family::E if n == 6 => vec![1, 6],
        Family::E if n == 7 => vec![7],
        _ => vec![],
    }
}

/// The order filter of positive roots above a minuscule simple root, graded
/// by root height.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinusculePoset {
    cartan_type: CartanType,
    node: usize,
    /// Root coordinates of each element, sorted by height.
    elements: Vec<Vec<i64>>,
    heights: Vec<u32>,
    /// `down[i]` has bit `j` set iff element `j ≤` element `i`.
    down: Vec<u64>,
    ambient_h: u32,
}

impl MinusculePoset {
    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn node(&self) -> usize {
        self.node
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn size(&self) -> usize {
        self.heights.len()
    }

    pub fn ambient_h(&self) -> u32 {
        self.ambient_h
    }

    pub fn elements(&self) -> &[Vec<i64>] {
        &self.elements
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.down[j] >> i & 1 == 1
    }

    /// Number of order ideals, by `N(P) = N(P − m) + N(P − ↓m)` for a
    /// maximal element `m`.
    pub fn order_ideal_count(&self) -> BigInt {
        let full = if self.size() == 64 { u64::MAX } else { (1u64 << self.size()) - 1 };
        let mut memo = HashMap::new();
        self.ideals_in(full, &mut memo)
    }

    fn ideals_in(&self, mask: u64, memo: &mut HashMap<u64, BigInt>) -> BigInt {
        if mask == 0 {
            return BigInt::from(1);
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        // Elements are sorted by height, so the highest set bit is maximal.
        let m = 63 - mask.leading_zeros() as usize;
        let v = self.ideals_in(mask & !(1 << m), memo) + self.ideals_in(mask & !self.down[m], memo);
        memo.insert(mask, v.clone());
        v
    }

    /// Generating function of order-preserving maps `P → {0, …, k}` by the
    /// sum of their values, by direct enumeration.
    pub fn brute_plane_partitions(&self, k: u32) -> QPolynomial {
        let mut counts: Vec<i64> = vec![0; self.size() * k as usize + 1];
        let mut values = vec![0u32; self.size()];
        self.assign(0, k, &mut values, 0, &mut counts);
        QPolynomial::from_integers(counts)
    }

    fn assign(&self, i: usize, k: u32, values: &mut Vec<u32>, sum: usize, counts: &mut Vec<i64>) {
        if i == self.size() {
            counts[sum] += 1;
            return;
        }
        // Everything below i comes earlier in height order.
        let floor = (0..i).filter(|&j| self.le(j, i)).map(|j| values[j]).max().unwrap_or(0);
        for v in floor..=k {
            values[i] = v;
            self.assign(i + 1, k, values, sum + v as usize, counts);
        }
    }

    /// Number of linear extensions, by dynamic programming over order ideals.
    pub fn linear_extension_count(&self) -> BigInt {
        let mut memo: HashMap<u64, BigInt> = HashMap::new();
        self.extensions_from(0, &mut memo)
    }

    fn extensions_from(&self, ideal: u64, memo: &mut HashMap<u64, BigInt>) -> BigInt {
        if ideal.count_ones() as usize == self.size() {
            return BigInt::from(1);
        }
        if let Some(v) = memo.get(&ideal) {
            return v.clone();
        }
        let mut total = BigInt::from(0);
        for i in 0..self.size() {
            let below = self.down[i] & !(1 << i);
            if ideal >> i & 1 == 0 && below & !ideal == 0 {
                total += self.extensions_from(ideal | 1 << i, memo);
            }
        }
        memo.insert(ideal, total.clone());
        total
    }
}

/// Builds the minuscule poset of `rs` at `node` (1-based).
pub fn minuscule_poset(rs: &RootSystem, node: usize) -> Result<MinusculePoset> {
    let t = rs.cartan_type();
    if !minuscule_nodes(t).contains(&node) {
        return Err(Error::NotMinuscule { cartan_type: t.to_string(), node });
    }
    let idx = node - 1;
    let mut roots: Vec<(u32, Vec<i64>)> = rs
        .positive_roots()?
        .iter()
        .filter(|a| a.coeffs[idx] >= 1)
        .map(|a| (a.height, a.coeffs.clone()))
        .collect();
    roots.sort();
    if roots.len() > 64 {
        return Err(Error::InvalidArgument(format!("poset of size {} is too large", roots.len())));
    }
    let down = roots
        .iter()
        .map(|(_, hi)| {
            roots
                .iter()
                .enumerate()
                .filter(|(_, (_, lo))| lo.iter().zip(hi).all(|(l, h)| l <= h))
                .fold(0u64, |acc, (j, _)| acc | 1 << j)
        })
        .collect();
    Ok(MinusculePoset {
        cartan_type: t,
        node,
        heights: roots.iter().map(|(h, _)| *h).collect(),
        elements: roots.into_iter().map(|(_, c)| c).collect(),
        down,
        ambient_h: rs.h(),
    })
}
