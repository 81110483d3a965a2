//! Permutations of `{1..n}`, cycle types, partition enumeration and orbits of
//! the cyclic group generated by a permutation acting on points, pairs or
//! r-subsets.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subsets::SubsetSpace;

/// A bijection on `{1..n}`.
///
/// Stored 0-based; every public constructor and accessor speaks 1-based
/// labels. Serializes as the array of 1-based images, so `[2,1,3]` is the
/// transposition `(1 2)` on three points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidPermutation("images are 1-based; found 0".to_string()));
        }
        Self::from_zero_based(images.iter().map(|&x| x - 1).collect())
    }

    pub fn from_zero_based(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty image list".to_string()));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{:?} is not a bijection on 1..={n}",
                    images.iter().map(|x| x + 1).collect::<Vec<_>>()
                )));
            }
        }
        Ok(Self { images })
    }

    /// Builds a permutation of `{1..n}` from disjoint 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x == 0 || x > n || std::mem::replace(&mut used[x - 1], true) {
                    return Err(Error::InvalidPermutation(format!("cycle {cycle:?} is not disjoint within 1..={n}")));
                }
                images[x - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `x`.
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    /// 1-based image array.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|x| x + 1).collect()
    }

    pub fn as_zero_based(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self.compose(other)` maps `x` to `self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Self { images: inv }
    }

    /// Disjoint cycles in 1-based labels, each starting at its smallest
    /// point, ordered by that point. Fixed points are included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::from_lengths(self.degree(), self.cycles().iter().map(Vec::len))
            .expect("cycle lengths of a permutation sum to its degree")
    }

    /// Order of the permutation (lcm of its cycle lengths).
    pub fn order(&self) -> BigUint {
        self.cycles().iter().fold(BigUint::one(), |acc, c| acc.lcm(&BigUint::from(c.len())))
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Self::from_images(&images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles().iter().filter(|c| c.len() > 1) {
            let parts: Vec<String> = cycle.iter().map(|x| x.to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images())
    }
}

/// Multiset of cycle lengths, stored as `(length, multiplicity)` pairs with
/// strictly increasing lengths. Serializes as `[[length, multiplicity], ...]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(usize, usize)>", into = "Vec<(usize, usize)>")]
pub struct CycleType {
    n: usize,
    parts: Vec<(usize, usize)>,
}

impl CycleType {
    pub fn new(parts: Vec<(usize, usize)>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidCycleType("no parts".to_string()));
        }
        for w in parts.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::InvalidCycleType(format!("lengths must be strictly increasing, got {parts:?}")));
            }
        }
        if parts.iter().any(|&(len, mult)| len == 0 || mult == 0) {
            return Err(Error::InvalidCycleType(format!("lengths and multiplicities must be positive, got {parts:?}")));
        }
        let n = parts.iter().map(|&(len, mult)| len * mult).sum();
        Ok(Self { n, parts })
    }

    /// Groups an arbitrary sequence of cycle lengths.
    pub fn from_lengths(n: usize, lengths: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut lengths: Vec<usize> = lengths.into_iter().collect();
        lengths.sort_unstable();
        let mut parts: Vec<(usize, usize)> = Vec::new();
        for len in lengths {
            match parts.last_mut() {
                Some((l, m)) if *l == len => *m += 1,
                _ => parts.push((len, 1)),
            }
        }
        let ct = Self::new(parts)?;
        if ct.n != n {
            return Err(Error::InvalidCycleType(format!("lengths sum to {} but n = {n}", ct.n)));
        }
        Ok(ct)
    }

    pub fn identity(n: usize) -> Self {
        Self { n, parts: vec![(1, n)] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[(usize, usize)] {
        &self.parts
    }

    pub fn is_identity(&self) -> bool {
        self.parts == [(1, self.n)]
    }

    pub fn min_length(&self) -> usize {
        self.parts[0].0
    }

    pub fn max_length(&self) -> usize {
        self.parts[self.parts.len() - 1].0
    }

    pub fn multiplicity(&self, length: usize) -> usize {
        self.parts.iter().find(|&&(l, _)| l == length).map_or(0, |&(_, m)| m)
    }

    /// Total number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        self.parts.iter().map(|&(_, m)| m).sum()
    }

    /// Ascending list of cycle lengths with repetition.
    pub fn lengths(&self) -> Vec<usize> {
        self.parts.iter().flat_map(|&(len, mult)| std::iter::repeat_n(len, mult)).collect()
    }

    /// `n! / prod(len^mult * mult!)`, the size of the conjugacy class.
    pub fn count_permutations(&self) -> BigUint {
        let mut denom = BigUint::one();
        for &(len, mult) in &self.parts {
            denom *= BigUint::from(len).pow(mult as u32) * factorial(mult);
        }
        factorial(self.n) / denom
    }

    /// The type obtained by deleting one shortest cycle, or `None` when this
    /// type is a single cycle.
    pub fn remove_shortest_cycle(&self) -> Option<CycleType> {
        let mut parts = self.parts.clone();
        if parts[0].1 == 1 {
            parts.remove(0);
        } else {
            parts[0].1 -= 1;
        }
        if parts.is_empty() {
            None
        } else {
            Some(Self::new(parts).expect("removing a cycle keeps the type valid"))
        }
    }

    /// A permutation of this type with its cycles laid out on consecutive
    /// points, shortest first.
    pub fn representative(&self) -> Permutation {
        let mut images = Vec::with_capacity(self.n);
        let mut start = 0;
        for len in self.lengths() {
            for k in 0..len {
                images.push(start + (k + 1) % len);
            }
            start += len;
        }
        Permutation { images }
    }
}

impl PartialOrd for CycleType {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the ascending list of parts (then by `n`).
impl Ord for CycleType {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lengths().cmp(&other.lengths()).then(self.n.cmp(&other.n))
    }
}

impl TryFrom<Vec<(usize, usize)>> for CycleType {
    type Error = Error;

    fn try_from(parts: Vec<(usize, usize)>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<CycleType> for Vec<(usize, usize)> {
    fn from(ct: CycleType) -> Self {
        ct.parts
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|&(len, mult)| if mult == 1 { len.to_string() } else { format!("{len}^{mult}") })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycleType{self}")
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Every cycle type of `S_n`, ordered lexicographically on the ascending
/// list of parts: `(1^n)` first and the full cycle `(n)` last.
pub fn enumerate_cycle_types(n: usize) -> Result<Vec<CycleType>> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be at least 1".to_string()));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    ascending_partitions(n, 1, &mut current, &mut |parts| {
        out.push(CycleType::from_lengths(n, parts.iter().copied()).expect("valid partition"));
    });
    Ok(out)
}

/// Cycle types with every part at least `r` (`exact = false`) or with
/// smallest part exactly `r` (`exact = true`), in the same order as
/// [`enumerate_cycle_types`].
pub fn enumerate_cycle_types_min(n: usize, r: usize, exact: bool) -> Result<Vec<CycleType>> {
    if r == 0 || r > n {
        return Err(Error::OutOfRange(format!("minimum cycle length {r} must lie in 1..={n}")));
    }
    Ok(enumerate_cycle_types(n)?
        .into_iter()
        .filter(|ct| if exact { ct.min_length() == r } else { ct.min_length() >= r })
        .collect())
}

fn ascending_partitions(remaining: usize, min_part: usize, current: &mut Vec<usize>, emit: &mut dyn FnMut(&[usize])) {
    if remaining == 0 {
        emit(current);
        return;
    }
    for part in min_part..=remaining {
        // the rest must be empty or use parts >= `part`
        if part != remaining && remaining - part < part {
            continue;
        }
        current.push(part);
        ascending_partitions(remaining - part, part, current, emit);
        current.pop();
    }
}

/// The objects a permutation of `{1..n}` acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    /// The points `{1..n}` themselves.
    Points,
    /// Unordered pairs, i.e. the edges of `K_n`.
    Pairs,
    /// r-subsets.
    Subsets(usize),
}

impl Action {
    pub fn subset_size(self) -> usize {
        match self {
            Action::Points => 1,
            Action::Pairs => 2,
            Action::Subsets(r) => r,
        }
    }

    pub fn space(self, n: usize) -> Result<SubsetSpace> {
        SubsetSpace::new(n, self.subset_size())
    }
}

/// Orbits of `<sigma>` on an indexed object set. Each class is sorted and
/// classes are ordered by their smallest member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitPartition {
    classes: Vec<Vec<usize>>,
    object_count: usize,
}

impl OrbitPartition {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn object_count(&self) -> usize {
        self.object_count
    }

    pub fn orbit_count(&self) -> usize {
        self.classes.len()
    }

    /// Objects minus orbits.
    pub fn deficit(&self) -> usize {
        self.object_count - self.classes.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

pub fn orbits_of(sigma: &Permutation, action: Action) -> Result<OrbitPartition> {
    let space = action.space(sigma.degree())?;
    Ok(orbits_in(&space, sigma.as_zero_based()))
}

/// Orbit partition of a 0-based permutation acting on `space`.
pub fn orbits_in(space: &SubsetSpace, perm: &[usize]) -> OrbitPartition {
    let m = space.len();
    let mut seen = vec![false; m];
    let mut classes = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut class = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            class.push(x);
            x = space.image(perm, x);
        }
        class.sort_unstable();
        classes.push(class);
    }
    OrbitPartition { classes, object_count: m }
}

/// Orbit count without materializing the classes; `seen` is scratch space
/// of length `space.len()`.
pub(crate) fn orbit_count_in(space: &SubsetSpace, perm: &[usize], seen: &mut [bool]) -> usize {
    seen.iter_mut().for_each(|s| *s = false);
    let mut count = 0;
    for start in 0..space.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = space.image(perm, x);
        }
    }
    count
}

/// `#objects - #orbits` of `sigma` acting on the objects of `action`.
pub fn orbit_deficit(sigma: &Permutation, action: Action) -> Result<usize> {
    let space = action.space(sigma.degree())?;
    let mut seen = vec![false; space.len()];
    Ok(space.len() - orbit_count_in(&space, sigma.as_zero_based(), &mut seen))
}

/// Rearranges `a` into the next permutation in lexicographic order; returns
/// `false` (leaving `a` sorted ascending) after the last one.
pub fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        a.reverse();
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All of `S_n` in lexicographic order of image arrays (identity first).
pub fn lex_permutations(n: usize) -> LexPermutations {
    LexPermutations { current: Some((0..n).collect()) }
}

pub struct LexPermutations {
    current: Option<Vec<usize>>,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.as_mut()?;
        let out = Permutation { images: cur.clone() };
        if !next_permutation(cur) {
            self.current = None;
        }
        Some(out)
    }
}

/// Below this degree a sequential scan beats the parallel split.
const PARALLEL_MIN_DEGREE: usize = 7;

/// Finds the lexicographically first permutation of `S_n` (0-based images)
/// satisfying `pred`, scanning chunks in parallel. Returns the permutation
/// and its 0-based lexicographic rank (the identity has rank 0).
///
/// The result does not depend on the thread schedule: chunks are ordered
/// by their two-point prefix and the earliest matching chunk wins.
pub fn find_first_permutation<F>(n: usize, skip_identity: bool, pred: F) -> Option<(Vec<usize>, u64)>
where
    F: Fn(&[usize]) -> bool + Sync,
{
    if n < PARALLEL_MIN_DEGREE {
        let mut p: Vec<usize> = (0..n).collect();
        let mut rank = 0u64;
        loop {
            if !(skip_identity && rank == 0) && pred(&p) {
                return Some((p, rank));
            }
            rank += 1;
            if !next_permutation(&mut p) {
                return None;
            }
        }
    }

    let chunk_len: u64 = (1..=(n as u64 - 2)).product();
    let chunks = n * (n - 1);
    (0..chunks).into_par_iter().find_map_first(|c| {
        let a = c / (n - 1);
        let b = {
            let b = c % (n - 1);
            if b >= a {
                b + 1
            } else {
                b
            }
        };
        let mut p = Vec::with_capacity(n);
        p.push(a);
        p.push(b);
        p.extend((0..n).filter(|&x| x != a && x != b));
        let mut local = 0u64;
        loop {
            let rank = c as u64 * chunk_len + local;
            if !(skip_identity && rank == 0) && pred(&p) {
                return Some((p, rank));
            }
            local += 1;
            if !next_permutation(&mut p[2..]) {
                return None;
            }
        }
    })
}

/// Runs `f` on every permutation of `S_n` in parallel chunks, folding the
/// per-chunk results with `reduce`. `init` creates per-chunk state.
pub fn fold_permutations<T, S, I, F, R>(n: usize, init: I, f: F, reduce: R) -> T
where
    T: Send + Default,
    S: Send,
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, &[usize]) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    if n < PARALLEL_MIN_DEGREE {
        let mut state = init();
        let mut p: Vec<usize> = (0..n).collect();
        let mut acc = T::default();
        loop {
            let v = f(&mut state, &p);
            acc = reduce(acc, v);
            if !next_permutation(&mut p) {
                return acc;
            }
        }
    }
    (0..n * (n - 1))
        .into_par_iter()
        .map(|c| {
            let a = c / (n - 1);
            let b = {
                let b = c % (n - 1);
                if b >= a {
                    b + 1
                } else {
                    b
                }
            };
            let mut p = Vec::with_capacity(n);
            p.push(a);
            p.push(b);
            p.extend((0..n).filter(|&x| x != a && x != b));
            let mut state = init();
            let mut acc = T::default();
            loop {
                let v = f(&mut state, &p);
                acc = reduce(acc, v);
                if !next_permutation(&mut p[2..]) {
                    return acc;
                }
            }
        })
        .reduce(T::default, &reduce)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeSet, HashMap};

    fn ct(parts: &[(usize, usize)]) -> CycleType {
        CycleType::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(Permutation::identity(5).cycle_type(), ct(&[(1, 5)]));
        let s = Permutation::from_cycles(5, &[&[1, 2], &[3, 4, 5]]).unwrap();
        assert_eq!(s.cycle_type(), ct(&[(2, 1), (3, 1)]));
        assert_eq!(s.to_string(), "(1 2)(3 4 5)");
        assert_eq!(s.order(), BigUint::from(6u32));
    }

    #[test]
    fn s5_has_seven_types() {
        let types: BTreeSet<CycleType> = lex_permutations(5).map(|p| p.cycle_type()).collect();
        assert_eq!(types.len(), 7);
    }

    #[test]
    fn partition_counts() {
        // p(n) for n = 1..=12
        let expected = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (i, &p) in expected.iter().enumerate() {
            assert_eq!(enumerate_cycle_types(i + 1).unwrap().len(), p);
        }
        assert!(enumerate_cycle_types(0).is_err());
        assert_eq!(enumerate_cycle_types(1).unwrap(), vec![ct(&[(1, 1)])]);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let types = enumerate_cycle_types(9).unwrap();
        assert!(types.windows(2).all(|w| w[0].lengths() < w[1].lengths()));
        assert!(types[0].is_identity());
        assert_eq!(types.last().unwrap(), &ct(&[(9, 1)]));
    }

    #[test]
    fn minimum_length_filters() {
        let t = enumerate_cycle_types_min(7, 2, false).unwrap();
        assert_eq!(t, vec![ct(&[(2, 2), (3, 1)]), ct(&[(2, 1), (5, 1)]), ct(&[(3, 1), (4, 1)]), ct(&[(7, 1)])]);
        assert_eq!(enumerate_cycle_types_min(6, 3, false).unwrap(), vec![ct(&[(3, 2)]), ct(&[(6, 1)])]);
        assert_eq!(enumerate_cycle_types_min(5, 4, false).unwrap(), vec![ct(&[(5, 1)])]);
        let exact = enumerate_cycle_types_min(8, 2, true).unwrap();
        assert!(exact.iter().all(|t| t.min_length() == 2));
        assert_eq!(exact.len(), 4); // 2^4, 2^2 4, 2 3^2, 2 6
        assert!(enumerate_cycle_types_min(4, 5, false).is_err());
    }

    #[test]
    fn class_sizes() {
        assert_eq!(ct(&[(1, 6)]).count_permutations(), BigUint::one());
        assert_eq!(ct(&[(1, 2), (2, 1)]).count_permutations(), BigUint::from(6u32));
        for n in 1..=8 {
            let total: BigUint = enumerate_cycle_types(n).unwrap().iter().map(CycleType::count_permutations).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn class_sizes_match_enumeration() {
        for n in 1..=6 {
            let mut counts: HashMap<CycleType, u64> = HashMap::new();
            for p in lex_permutations(n) {
                *counts.entry(p.cycle_type()).or_default() += 1;
            }
            for (t, c) in counts {
                assert_eq!(t.count_permutations(), BigUint::from(c), "{t}");
            }
        }
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(CycleType::new(vec![(2, 1), (1, 3)]).is_err());
        assert!(CycleType::new(vec![(1, 3), (1, 1)]).is_err());
        assert!(CycleType::new(vec![(1, 0)]).is_err());
        assert!(CycleType::new(vec![]).is_err());
        assert!(CycleType::from_lengths(5, [2, 2]).is_err());
    }

    #[test]
    fn representative_has_its_type() {
        for t in enumerate_cycle_types(8).unwrap() {
            assert_eq!(t.representative().cycle_type(), t);
        }
    }

    #[test]
    fn permutation_validation_and_serde() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[1, 4, 2]).is_err());
        let p = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,1,3]");
        let q: Permutation = serde_json::from_str("[2,1,3]").unwrap();
        assert_eq!(p, q);
        assert!(serde_json::from_str::<Permutation>("[2,2,3]").is_err());
        let t = ct(&[(1, 6), (2, 1)]);
        assert_eq!(serde_json::to_string(&t).unwrap(), "[[1,6],[2,1]]");
    }

    #[test]
    fn compose_and_inverse() {
        let a = Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[3, 4]]).unwrap();
        let ab = a.compose(&b);
        assert_eq!(ab.apply(3), a.apply(b.apply(3)));
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn orbit_examples() {
        let id = Permutation::identity(4);
        let o = orbits_of(&id, Action::Pairs).unwrap();
        assert_eq!(o.orbit_count(), 6);
        assert!(o.sizes().iter().all(|&s| s == 1));

        let c = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        let o = orbits_of(&c, Action::Pairs).unwrap();
        assert_eq!(o.classes(), &[vec![0, 1, 2]]);

        let s = Permutation::from_cycles(5, &[&[1, 2], &[3, 4, 5]]).unwrap();
        let o = orbits_of(&s, Action::Pairs).unwrap();
        let mut sizes = o.sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 6]);
        assert_eq!(sizes.iter().sum::<usize>(), 10);
        // {1,2} is fixed
        assert!(o.classes().contains(&vec![0]));
    }

    #[test]
    fn lex_iterator_and_parallel_search_agree() {
        let all: Vec<Permutation> = lex_permutations(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));

        for n in [5, 7, 8] {
            // last permutation in lex order is the reversal
            let target: Vec<usize> = (0..n).rev().collect();
            let (p, rank) = find_first_permutation(n, true, |p| p == target.as_slice()).unwrap();
            assert_eq!(p, target);
            assert_eq!(rank + 1, (1..=n as u64).product::<u64>());
            let (p, rank) = find_first_permutation(n, true, |p| p[0] == 1).unwrap();
            let mut expected: Vec<usize> = (0..n).collect();
            expected.swap(0, 1);
            assert_eq!(p, expected);
            assert_eq!(rank, (1..=(n as u64 - 1)).product::<u64>());
        }
        assert!(find_first_permutation(7, true, |_| false).is_none());
        assert_eq!(find_first_permutation(7, false, |_| true).unwrap().1, 0);
    }

    #[test]
    fn fold_counts_all_permutations() {
        for n in [3, 7] {
            let total: u64 = fold_permutations(n, || (), |_, _| 1u64, |a, b| a + b);
            assert_eq!(total, (1..=n as u64).product::<u64>());
        }
    }
}
