use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::lists::ListAssignment;
use crate::error::{Error, Result};
use crate::perm::{fold_permutations, Permutation};
use crate::scalar::Probability;

/// Largest `n` for which the expected count is summed over `S_n`.
pub const DEFAULT_EXPECTATION_CAP: usize = 9;

/// `∏_v |L(v)|`, the number of colorings drawn from the lists.
pub fn coloring_space_size(lists: &ListAssignment) -> BigUint {
    lists.lists().iter().fold(BigUint::one(), |acc, l| acc * l.len())
}

/// Number of colorings constant on every orbit of `perm`: the product over
/// orbits of the size of the common part of the orbit's lists.
pub(crate) fn fixed_coloring_count(lists: &ListAssignment, perm: &[usize], seen: &mut [bool]) -> BigUint {
    let objects = lists.objects();
    seen.fill(false);
    let mut count = BigUint::one();
    let mut common: Vec<u32> = Vec::new();
    for start in 0..lists.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        common.clear();
        common.extend_from_slice(lists.list(start));
        let mut v = objects.image(perm, start);
        while v != start {
            seen[v] = true;
            let l = lists.list(v);
            common.retain(|c| l.binary_search(c).is_ok());
            v = objects.image(perm, v);
        }
        if common.is_empty() {
            return BigUint::zero();
        }
        if common.len() > 1 {
            count *= common.len();
        }
    }
    count
}

fn check_degree(lists: &ListAssignment, sigma: &Permutation) -> Result<()> {
    if sigma.degree() != lists.n() {
        return Err(Error::InvalidPermutation(format!(
            "permutation of degree {} applied to objects over 1..={}",
            sigma.degree(),
            lists.n()
        )));
    }
    Ok(())
}

/// Probability that a uniformly random coloring from the lists is constant
/// on every orbit of `<sigma>`.
pub fn exact_fixation_probability<P: Probability>(lists: &ListAssignment, sigma: &Permutation) -> Result<P> {
    check_degree(lists, sigma)?;
    let mut seen = vec![false; lists.len()];
    let num = fixed_coloring_count(lists, sigma.as_zero_based(), &mut seen);
    Ok(P::from_ratio(&num, &coloring_space_size(lists)))
}

/// Expected number of nontrivial permutations fixing every color class of
/// a random coloring, summed over all of `S_n`.
pub fn expected_fixing_automorphisms<P: Probability>(lists: &ListAssignment, cap_n: usize) -> Result<P> {
    expected_fixing_automorphisms_where(lists, cap_n, |_| true)
}

/// As [`expected_fixing_automorphisms`], restricted to the nontrivial
/// permutations (0-based images) accepted by `filter`.
pub fn expected_fixing_automorphisms_where<P, F>(lists: &ListAssignment, cap_n: usize, filter: F) -> Result<P>
where
    P: Probability,
    F: Fn(&[usize]) -> bool + Sync + Send,
{
    let n = lists.n();
    if n > cap_n {
        return Err(Error::CapExceeded {
            what: "degree n for the expected-count sum",
            value: n as u128,
            cap: cap_n as u128,
        });
    }
    let objects = lists.len();
    let total = fold_permutations(
        n,
        || vec![false; objects],
        |seen, p| {
            let trivial = p.iter().enumerate().all(|(i, &x)| i == x);
            if trivial || !filter(p) {
                BigUint::zero()
            } else {
                fixed_coloring_count(lists, p, seen)
            }
        },
        |a, b| a + b,
    );
    Ok(P::from_ratio(&total, &coloring_space_size(lists)))
}

/// Whether every cycle of a 0-based permutation has length at least `min`.
pub fn all_cycles_at_least(p: &[usize], min: usize) -> bool {
    let mut seen = vec![false; p.len()];
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            v = p[v];
            len += 1;
        }
        if len < min {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{f_min_sum, f_sum};
    use crate::kneser::edge_view;
    use crate::perm::{lex_permutations, orbit_deficit, Action};
    use num_rational::BigRational;

    fn identical(n: usize) -> ListAssignment {
        ListAssignment::identical(edge_view(n).unwrap(), &["a", "b"]).unwrap()
    }

    #[test]
    fn identical_lists_give_two_to_minus_deficit() {
        let l = identical(5);
        for sigma in lex_permutations(5) {
            let p: BigRational = exact_fixation_probability(&l, &sigma).unwrap();
            let d = orbit_deficit(&sigma, Action::Pairs).unwrap();
            assert_eq!(p, BigRational::new(1.into(), (BigUint::one() << d).into()));
        }
        let id: BigRational = exact_fixation_probability(&l, &Permutation::identity(5)).unwrap();
        assert!(id.is_one());
    }

    #[test]
    fn empty_intersection_gives_zero() {
        let e = edge_view(4).unwrap();
        let mut lists: Vec<Vec<String>> = vec![vec!["a".into(), "b".into()]; 6];
        lists[e.edge(1, 3)] = vec!["c".into(), "d".into()];
        let l = ListAssignment::new(e, lists).unwrap();
        // (1 2) swaps edges 13 and 23
        let s = Permutation::from_cycles(4, &[&[1, 2]]).unwrap();
        let p: f64 = exact_fixation_probability(&l, &s).unwrap();
        assert_eq!(p, 0.0);
    }

    #[test]
    fn expected_count_matches_bounds() {
        for n in 3..=7 {
            let e: BigRational = expected_fixing_automorphisms(&identical(n), DEFAULT_EXPECTATION_CAP).unwrap();
            assert_eq!(e, f_sum(n).unwrap().total.to_rational(), "n = {n}");
        }
        let e: BigRational =
            expected_fixing_automorphisms_where(&identical(7), DEFAULT_EXPECTATION_CAP, |p| all_cycles_at_least(p, 2))
                .unwrap();
        assert_eq!(e, f_min_sum(7, 2).unwrap().total.to_rational());
        assert!(expected_fixing_automorphisms::<f64>(&identical(10), 9).is_err());
    }

    #[test]
    fn cycle_filter() {
        assert!(all_cycles_at_least(&[1, 0, 3, 4, 2], 2));
        assert!(!all_cycles_at_least(&[1, 0, 2], 2));
    }
}
