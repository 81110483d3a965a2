//! Canonically ordered r-subsets of `{1..n}`.
//!
//! A subset is stored as a `u64` bit set where bit `i` stands for the label
//! `i + 1`. Subsets are ordered by the numeric value of their bit set, which
//! coincides with colexicographic order, so the index of a subset is its
//! colex rank and can be computed directly from the bits.

use crate::error::{Error, Result};

/// Largest ground set a bit set can hold.
pub const MAX_GROUND_SET: usize = 64;

/// Object-set size above which enumeration is refused.
pub const MAX_OBJECTS: usize = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetSpace {
    n: usize,
    r: usize,
    masks: Vec<u64>,
    // binom[a][b] = C(a, b) for a <= n, b <= r
    binom: Vec<Vec<u64>>,
}

impl SubsetSpace {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if n == 0 || n > MAX_GROUND_SET {
            return Err(Error::OutOfRange(format!("ground set size {n} must be in 1..={MAX_GROUND_SET}")));
        }
        if r == 0 || r > n {
            return Err(Error::OutOfRange(format!("subset size {r} must be in 1..={n}")));
        }
        let binom = binomial_table(n, r);
        let count = binom[n][r];
        if count as u128 > MAX_OBJECTS as u128 {
            return Err(Error::CapExceeded {
                what: "number of r-subsets",
                value: count as u128,
                cap: MAX_OBJECTS as u128,
            });
        }

        // Gosper's hack walks same-popcount integers in increasing order.
        let limit: u128 = 1u128 << n;
        let mut masks = Vec::with_capacity(count as usize);
        let mut x: u128 = (1u128 << r) - 1;
        while x < limit {
            masks.push(x as u64);
            let c = x & x.wrapping_neg();
            let y = x + c;
            x = (((x ^ y) >> 2) / c) | y;
        }
        debug_assert_eq!(masks.len() as u64, count);

        Ok(Self { n, r, masks, binom })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn mask(&self, index: usize) -> u64 {
        self.masks[index]
    }

    /// Colex rank of a bit set with exactly `r` bits below `n`.
    #[inline]
    pub fn rank(&self, mut mask: u64) -> usize {
        let mut rank = 0u64;
        let mut k = 1;
        while mask != 0 {
            let pos = mask.trailing_zeros() as usize;
            rank += self.binom[pos][k];
            mask &= mask - 1;
            k += 1;
        }
        rank as usize
    }

    pub fn index_of(&self, mask: u64) -> Option<usize> {
        if mask.count_ones() as usize != self.r || (self.n < 64 && mask >> self.n != 0) {
            return None;
        }
        Some(self.rank(mask))
    }

    /// Image of the subset at `index` under a 0-based permutation.
    #[inline]
    pub fn image(&self, perm: &[usize], index: usize) -> usize {
        self.rank(map_mask(perm, self.masks[index]))
    }

    /// Sorted 1-based labels of the subset at `index`.
    pub fn elements(&self, index: usize) -> Vec<usize> {
        mask_elements(self.masks[index])
    }

    /// Comma-joined sorted labels, e.g. `"1,3,4"`.
    pub fn label(&self, index: usize) -> String {
        let parts: Vec<String> = self.elements(index).iter().map(|e| e.to_string()).collect();
        parts.join(",")
    }

    /// Parse a comma-joined label back to an index.
    pub fn parse_label(&self, label: &str) -> Result<usize> {
        let mut mask = 0u64;
        for part in label.split(',') {
            let e: usize = part
                .trim()
                .parse()
                .map_err(|_| Error::OutOfRange(format!("object key {label:?} is not a comma-joined label list")))?;
            if e == 0 || e > self.n {
                return Err(Error::OutOfRange(format!("label {e} in key {label:?} is outside 1..={}", self.n)));
            }
            let bit = 1u64 << (e - 1);
            if mask & bit != 0 {
                return Err(Error::OutOfRange(format!("repeated label {e} in key {label:?}")));
            }
            mask |= bit;
        }
        self.index_of(mask)
            .ok_or_else(|| Error::OutOfRange(format!("key {label:?} is not a {}-subset of 1..={}", self.r, self.n)))
    }

    /// Index of the pair `{a, b}` (1-based labels) when `r = 2`.
    pub fn pair_index(&self, a: usize, b: usize) -> usize {
        debug_assert_eq!(self.r, 2);
        debug_assert!(a != b && a >= 1 && b >= 1 && a <= self.n && b <= self.n);
        self.rank((1u64 << (a - 1)) | (1u64 << (b - 1)))
    }
}

#[inline]
pub fn map_mask(perm: &[usize], mut mask: u64) -> u64 {
    let mut out = 0u64;
    while mask != 0 {
        let pos = mask.trailing_zeros() as usize;
        out |= 1u64 << perm[pos];
        mask &= mask - 1;
    }
    out
}

pub fn mask_elements(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize + 1);
        mask &= mask - 1;
    }
    out
}

fn binomial_table(n: usize, r: usize) -> Vec<Vec<u64>> {
    let mut t = vec![vec![0u64; r + 1]; n + 1];
    for a in 0..=n {
        t[a][0] = 1;
        for b in 1..=r.min(a) {
            t[a][b] = t[a - 1][b - 1] + if b < a { t[a - 1][b] } else { 0 };
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairs_of_four_in_numeric_order() {
        let s = SubsetSpace::new(4, 2).unwrap();
        let labels: Vec<String> = (0..s.len()).map(|i| s.label(i)).collect();
        assert_eq!(labels, ["1,2", "1,3", "2,3", "1,4", "2,4", "3,4"]);
    }

    #[test]
    fn rank_inverts_enumeration() {
        for (n, r) in [(5, 2), (7, 3), (9, 4), (12, 1)] {
            let s = SubsetSpace::new(n, r).unwrap();
            for (i, &m) in s.masks().iter().enumerate() {
                assert_eq!(s.rank(m), i);
            }
            assert!(s.masks().windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn full_width_ground_set() {
        let s = SubsetSpace::new(64, 1).unwrap();
        assert_eq!(s.len(), 64);
        assert_eq!(s.mask(63), 1u64 << 63);
        assert_eq!(s.parse_label("64").unwrap(), 63);
        let s = SubsetSpace::new(64, 2).unwrap();
        assert_eq!(s.len(), 2016);
        assert_eq!(s.label(s.len() - 1), "63,64");
    }

    #[test]
    fn labels_round_trip() {
        let s = SubsetSpace::new(7, 3).unwrap();
        for i in 0..s.len() {
            assert_eq!(s.parse_label(&s.label(i)).unwrap(), i);
        }
        assert!(s.parse_label("1,2").is_err());
        assert!(s.parse_label("1,1,2").is_err());
        assert!(s.parse_label("1,2,8").is_err());
        assert!(s.parse_label("a,b,c").is_err());
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(SubsetSpace::new(0, 1).is_err());
        assert!(SubsetSpace::new(65, 2).is_err());
        assert!(SubsetSpace::new(5, 6).is_err());
        assert!(SubsetSpace::new(64, 32).is_err());
    }
}
