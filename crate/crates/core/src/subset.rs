//! Bitmask-indexed subsets of {1, …, n}.
//!
//! Bit (k−1) of the mask is set exactly when index k belongs to the subset.
//! Masks double as array indices: enumeration in ascending mask order is the
//! crate-wide canonical subset order.

use crate::error::{Error, Result};

/// Largest ambient size a mask can address.
pub const MAX_AMBIENT: usize = 62;

/// A subset of {1, …, n} stored as a bitmask over an ambient size n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SubsetIndex {
    mask: u64,
    n: usize,
}

impl SubsetIndex {
    pub fn new(mask: u64, n: usize) -> Result<Self> {
        if n > MAX_AMBIENT {
            return Err(Error::Shape(format!(
                "ambient size {n} exceeds word-width limit {MAX_AMBIENT}"
            )));
        }
        if n < 64 && mask >= (1u64 << n) {
            return Err(Error::Shape(format!(
                "mask {mask} out of range for ambient size {n}"
            )));
        }
        Ok(SubsetIndex { mask, n })
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(0, n)
    }

    pub fn full(n: usize) -> Result<Self> {
        if n > MAX_AMBIENT {
            return Err(Error::Shape(format!(
                "ambient size {n} exceeds word-width limit {MAX_AMBIENT}"
            )));
        }
        Ok(SubsetIndex { mask: ones(n), n })
    }

    /// Build from 1-based indices.
    pub fn from_indices(indices: &[usize], n: usize) -> Result<Self> {
        let mut mask = 0u64;
        for &k in indices {
            if k == 0 || k > n {
                return Err(Error::Shape(format!("index {k} out of range 1..={n}")));
            }
            mask |= 1 << (k - 1);
        }
        Self::new(mask, n)
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    /// Number of elements (popcount).
    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_full(&self) -> bool {
        self.mask == ones(self.n)
    }

    /// Membership of the 1-based index k.
    pub fn contains(&self, k: usize) -> bool {
        k >= 1 && k <= self.n && self.mask & (1 << (k - 1)) != 0
    }

    pub fn complement(&self) -> SubsetIndex {
        SubsetIndex {
            mask: !self.mask & ones(self.n),
            n: self.n,
        }
    }

    /// 1-based member indices in ascending order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.n).filter(move |&k| self.contains(k))
    }

    /// All 2ⁿ subsets of {1, …, n} in ascending mask order.
    pub fn all(n: usize) -> Result<impl Iterator<Item = SubsetIndex>> {
        if n > MAX_AMBIENT {
            return Err(Error::Shape(format!(
                "ambient size {n} exceeds word-width limit {MAX_AMBIENT}"
            )));
        }
        Ok((0..(1u64 << n)).map(move |mask| SubsetIndex { mask, n }))
    }

    /// All subsets of size k, ascending mask order.
    pub fn all_of_size(n: usize, k: usize) -> Result<impl Iterator<Item = SubsetIndex>> {
        Ok(Self::all(n)?.filter(move |s| s.len() == k))
    }
}

fn ones(n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        u64::MAX >> (64 - n)
    }
}
