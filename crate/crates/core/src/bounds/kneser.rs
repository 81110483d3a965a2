//! Union bounds for the vertex action of `S_n` on Kneser graphs `K(n, r)`
//! with `r >= 3`.

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use serde::Serialize;

use super::decimal::REPORT_DIGITS;
use super::dyadic::DyadicRational;
use super::fixation::serialize_biguint;
use crate::error::{Error, Result};
use crate::perm::{factorial, fold_permutations, orbit_count_in};
use crate::subsets::SubsetSpace;

/// Published Category I / II counts, keyed by `n`.
pub const PUBLISHED_CATEGORY_COUNTS: [(usize, u64, u64); 2] = [(7, 231, 4808), (8, 973, 39346)];

fn check_regime(n: usize, r: usize) -> Result<()> {
    if r < 3 || n < 2 * r + 1 {
        return Err(Error::KneserRegime { n, r });
    }
    Ok(())
}

/// `C(n-2, r-1)`: the minimum orbit deficit of a nontrivial permutation on
/// the vertices of `K(n, r)`.
pub fn deficit_floor(n: usize, r: usize) -> u64 {
    binomial(n as u64 - 2, r as u64 - 1)
}

#[derive(Debug, Clone, Serialize)]
pub struct KneserBound {
    pub n: usize,
    pub r: usize,
    pub m: u64,
    pub total: DyadicRational,
    pub decimal: String,
    pub below_one: bool,
}

/// `m = C(n-2, r-1)` and the union bound `n! / 2^m`.
pub fn kneser_orbit_bound(n: usize, r: usize) -> Result<KneserBound> {
    check_regime(n, r)?;
    let m = deficit_floor(n, r);
    let total = DyadicRational::new(BigInt::from(factorial(n)), m);
    Ok(KneserBound { n, r, m, decimal: total.decimal(REPORT_DIGITS), below_one: total < DyadicRational::one(), total })
}

#[derive(Debug, Clone, Serialize)]
pub struct CategorySplit {
    pub n: usize,
    pub r: usize,
    pub m: u64,
    /// Nontrivial permutations whose cycles all have length at most 2.
    #[serde(serialize_with = "serialize_biguint")]
    pub count_i: BigUint,
    /// Permutations with a cycle of length at least 3.
    #[serde(serialize_with = "serialize_biguint")]
    pub count_ii: BigUint,
    /// `count_i / 2^m + count_ii / 2^(2m)`.
    pub bound: DyadicRational,
    pub decimal: String,
    pub below_one: bool,
    pub published_count_i: Option<u64>,
    pub published_count_ii: Option<u64>,
    /// The categorized bound evaluated with the published counts.
    pub published_bound: Option<DyadicRational>,
}

#[derive(Default)]
struct Tally {
    involutions: u64,
    others: u64,
}

fn is_involution(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(i, &x)| p[x] == i)
}

/// Counts nontrivial permutations of `S_n` by category and evaluates the
/// categorized bound. Only `n` in `{7, 8}` is accepted.
pub fn category_split(n: usize, r: usize) -> Result<CategorySplit> {
    check_regime(n, r)?;
    if !(7..=8).contains(&n) {
        return Err(Error::OutOfRange(format!("category split is defined for n in {{7, 8}}, got {n}")));
    }
    let tally = fold_permutations(
        n,
        || (),
        |_, p| {
            let identity = p.iter().enumerate().all(|(i, &x)| i == x);
            match (identity, is_involution(p)) {
                (true, _) => Tally::default(),
                (false, true) => Tally { involutions: 1, others: 0 },
                (false, false) => Tally { involutions: 0, others: 1 },
            }
        },
        |a, b| Tally { involutions: a.involutions + b.involutions, others: a.others + b.others },
    );
    let m = deficit_floor(n, r);
    let bound_for = |i: u64, ii: u64| DyadicRational::new(i, m) + DyadicRational::new(ii, 2 * m);
    let bound = bound_for(tally.involutions, tally.others);
    let published = PUBLISHED_CATEGORY_COUNTS.iter().find(|(pn, _, _)| *pn == n);
    Ok(CategorySplit {
        n,
        r,
        m,
        count_i: tally.involutions.into(),
        count_ii: tally.others.into(),
        decimal: bound.decimal(REPORT_DIGITS),
        below_one: bound < DyadicRational::one(),
        bound,
        published_count_i: published.map(|p| p.1),
        published_count_ii: published.map(|p| p.2),
        published_bound: published.map(|p| bound_for(p.1, p.2)),
    })
}

/// Smallest orbit deficit on `r`-subsets over nontrivial permutations of
/// `S_n`, split by category: `(min over Category I, min over Category II)`.
/// `None` marks an empty category.
pub fn subset_deficit_minima(n: usize, r: usize) -> Result<(Option<usize>, Option<usize>)> {
    let space = SubsetSpace::new(n, r)?;
    let objects = space.len();
    let merge = |a: Option<usize>, b: Option<usize>| match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    };
    #[derive(Default)]
    struct Minima(Option<usize>, Option<usize>);
    let out = fold_permutations(
        n,
        || vec![false; objects],
        |seen, p| {
            if p.iter().enumerate().all(|(i, &x)| i == x) {
                return Minima::default();
            }
            let deficit = objects - orbit_count_in(&space, p, seen);
            if is_involution(p) {
                Minima(Some(deficit), None)
            } else {
                Minima(None, Some(deficit))
            }
        },
        |a, b| Minima(merge(a.0, b.0), merge(a.1, b.1)),
    );
    Ok((out.0, out.1))
}
