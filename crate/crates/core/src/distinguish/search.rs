//! Exhaustive search over colorings.
//!
//! A coloring is fixed by some nontrivial `σ` exactly when it is fixed by
//! some element of prime order (a suitable power of `σ`), and an element
//! fixes it exactly when every generator of its cyclic group does. So it is
//! enough to test one generator per cyclic subgroup of prime order. Each
//! generator becomes a set of equalities between object colors; the search
//! assigns colors object by object and abandons a branch as soon as some
//! generator has all its moved objects colored and every equality holds.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use super::lists::{palette_names, Coloring, ListAssignment};
use super::probability::coloring_space_size;
use super::verify::{scan, VerifyOptions};
use crate::error::{Error, Result};
use crate::kneser::{ColorableObjectSet, ObjectKind};
use crate::perm::fold_permutations;

/// Largest coloring space the exact oracle enumerates.
pub const DEFAULT_COLORING_CAP: u128 = 1 << 24;

/// Search nodes the distinguishing-number search may visit per `k`.
pub const DEFAULT_NODE_BUDGET: u64 = 1 << 28;

/// One generator of each cyclic subgroup of prime order in `S_n`, compiled
/// to color equalities on a fixed object set.
#[derive(Debug, Clone)]
pub struct SymmetryConstraints {
    generators: Vec<Vec<usize>>,
    /// `(a, b)` with `a < b`: the generator fixes a coloring iff
    /// `color[a] == color[b]` for every pair.
    pairs: Vec<Vec<(u32, u32)>>,
    /// Generators whose largest moved object is `i`.
    by_last: Vec<Vec<usize>>,
}

fn prime_order(p: &[usize]) -> Option<usize> {
    let mut seen = vec![false; p.len()];
    let mut prime = None;
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
        if len > 1 {
            match prime {
                None => prime = Some(len),
                Some(q) if q != len => return None,
                _ => {}
            }
        }
    }
    prime.filter(|&q| (2..q).all(|d| q % d != 0))
}

/// Whether `p` is the lexicographically least nonidentity power of itself.
fn is_canonical_generator(p: &[usize], order: usize) -> bool {
    let mut power = p.to_vec();
    for _ in 2..order {
        power = power.iter().map(|&x| p[x]).collect();
        if power.as_slice() < p {
            return false;
        }
    }
    true
}

impl SymmetryConstraints {
    pub fn new(objects: &ColorableObjectSet, opts: &VerifyOptions) -> Result<Self> {
        let n = objects.n();
        opts.check(n)?;
        let mut generators = fold_permutations(
            n,
            || (),
            |_, p| match prime_order(p) {
                Some(q) if is_canonical_generator(p, q) => vec![p.to_vec()],
                _ => Vec::new(),
            },
            |mut a, mut b| {
                a.append(&mut b);
                a
            },
        );
        generators.sort();

        let mut pairs = Vec::with_capacity(generators.len());
        let mut by_last = vec![Vec::new(); objects.len()];
        let mut seen = vec![false; objects.len()];
        for (g, p) in generators.iter().enumerate() {
            seen.fill(false);
            let mut eqs = Vec::new();
            for start in 0..objects.len() {
                if seen[start] {
                    continue;
                }
                seen[start] = true;
                let mut v = objects.image(p, start);
                while v != start {
                    seen[v] = true;
                    eqs.push((start as u32, v as u32));
                    v = objects.image(p, v);
                }
            }
            let last = eqs.iter().map(|&(_, b)| b as usize).max().unwrap_or(0);
            // with no moved objects the generator fixes every coloring
            by_last[last].push(g);
            pairs.push(eqs);
        }
        Ok(Self { generators, pairs, by_last })
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    #[inline]
    fn fixed_by(&self, g: usize, colors: &[u32]) -> bool {
        self.pairs[g].iter().all(|&(a, b)| colors[a as usize] == colors[b as usize])
    }

    pub fn is_distinguishing(&self, colors: &[u32]) -> bool {
        (0..self.generators.len()).all(|g| !self.fixed_by(g, colors))
    }

    /// Depth-first walk over colorings with `colors[i] ∈ domains[i]`,
    /// calling `leaf` on every distinguishing one until it returns `true`.
    /// Returns the number of nodes visited.
    fn walk<F>(&self, domains: &[Vec<u32>], budget: Option<u64>, mut leaf: F) -> Result<u64>
    where
        F: FnMut(&[u32]) -> bool,
    {
        let m = domains.len();
        if domains.iter().any(|d| d.is_empty()) {
            return Ok(0);
        }
        let mut pos = vec![0usize; m];
        let mut colors = vec![0u32; m];
        let mut nodes = 0u64;
        let mut d = 0;
        loop {
            if pos[d] == domains[d].len() {
                if d == 0 {
                    return Ok(nodes);
                }
                pos[d] = 0;
                d -= 1;
                pos[d] += 1;
                continue;
            }
            colors[d] = domains[d][pos[d]];
            nodes += 1;
            if let Some(b) = budget {
                if nodes > b {
                    return Err(Error::CapExceeded { what: "search nodes", value: nodes as u128, cap: b as u128 });
                }
            }
            if self.by_last[d].iter().any(|&g| self.fixed_by(g, &colors[..=d])) {
                pos[d] += 1;
            } else if d + 1 == m {
                if leaf(&colors) {
                    return Ok(nodes);
                }
                pos[d] += 1;
            } else {
                d += 1;
            }
        }
    }

    /// First distinguishing coloring in depth-first order.
    pub fn find_first(&self, domains: &[Vec<u32>], budget: Option<u64>) -> Result<(Option<Vec<u32>>, u64)> {
        let mut found = None;
        let nodes = self.walk(domains, budget, |c| {
            found = Some(c.to_vec());
            true
        })?;
        Ok((found, nodes))
    }

    /// Number of distinguishing colorings.
    pub fn count(&self, domains: &[Vec<u32>]) -> Result<BigUint> {
        let mut count = 0u64;
        self.walk(domains, None, |_| {
            count += 1;
            false
        })?;
        Ok(count.into())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct OracleOptions {
    pub cap_colorings: u128,
    pub verify: VerifyOptions,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self { cap_colorings: DEFAULT_COLORING_CAP, verify: VerifyOptions::default() }
    }
}

impl OracleOptions {
    fn check(&self, lists: &ListAssignment) -> Result<()> {
        let count = lists.coloring_count();
        if count > self.cap_colorings {
            return Err(Error::CapExceeded {
                what: "colorings drawn from the lists",
                value: count,
                cap: self.cap_colorings,
            });
        }
        self.verify.check(lists.n())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleResult {
    pub distinguishable: bool,
    pub witness: Option<Coloring>,
    pub nodes: u64,
}

/// Decides by exhaustive search whether some coloring from the lists is
/// distinguishing.
pub fn exact_list_distinguishable(lists: &ListAssignment, opts: &OracleOptions) -> Result<OracleResult> {
    opts.check(lists)?;
    let cons = SymmetryConstraints::new(lists.objects(), &opts.verify)?;
    let (found, nodes) = cons.find_first(lists.lists(), None)?;
    let witness = found.map(|ids| {
        assert!(scan(lists.objects(), &ids).verdict, "search returned a coloring the full scan rejects");
        Coloring::from_list_ids(lists, &ids)
    });
    Ok(OracleResult { distinguishable: witness.is_some(), witness, nodes })
}

/// Exact probability that a random coloring from the lists is fixed by
/// some nontrivial permutation.
pub fn fixing_probability(lists: &ListAssignment, opts: &OracleOptions) -> Result<BigRational> {
    opts.check(lists)?;
    let cons = SymmetryConstraints::new(lists.objects(), &opts.verify)?;
    let good = cons.count(lists.lists())?;
    let total = coloring_space_size(lists);
    Ok(BigRational::one() - BigRational::new(good.into(), total.into()))
}

#[derive(Debug, Clone, Copy)]
pub struct DNumberOptions {
    /// Fix the first vertex to the first color. Sound because renaming the
    /// colors of a distinguishing coloring keeps it distinguishing, and with
    /// identical lists every renaming stays within the lists.
    pub rename_prune: bool,
    pub node_budget: Option<u64>,
    pub verify: VerifyOptions,
}

impl Default for DNumberOptions {
    fn default() -> Self {
        Self { rename_prune: true, node_budget: Some(DEFAULT_NODE_BUDGET), verify: VerifyOptions::default() }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DistinguishingNumber {
    pub n: usize,
    pub r: usize,
    pub k_max: usize,
    /// `None` when no `k <= k_max` works.
    pub value: Option<usize>,
    pub witness: Option<Coloring>,
    pub nodes: u64,
}

/// Smallest `k <= k_max` such that some `k`-coloring of the vertices of
/// `K(n, r)` is distinguishing.
pub fn brute_force_distinguishing_number(
    n: usize,
    r: usize,
    k_max: usize,
    opts: &DNumberOptions,
) -> Result<DistinguishingNumber> {
    let objects = ColorableObjectSet::new(ObjectKind::KneserVertices, n, r)?;
    let cons = SymmetryConstraints::new(&objects, &opts.verify)?;
    let mut nodes = 0;
    for k in 1..=k_max {
        let mut domains = vec![(0..k as u32).collect::<Vec<u32>>(); objects.len()];
        if opts.rename_prune {
            domains[0] = vec![0];
        }
        let (found, visited) = cons.find_first(&domains, opts.node_budget)?;
        nodes += visited;
        if let Some(ids) = found {
            assert!(scan(&objects, &ids).verdict, "search returned a coloring the full scan rejects");
            let lists = ListAssignment::identical(objects.clone(), &palette_names(k))?;
            let witness = Coloring::from_list_ids(&lists, &ids);
            return Ok(DistinguishingNumber { n, r, k_max, value: Some(k), witness: Some(witness), nodes });
        }
    }
    Ok(DistinguishingNumber { n, r, k_max, value: None, witness: None, nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kneser::edge_view;

    #[test]
    fn generator_counts() {
        // S_5: 25 involutions, 10 subgroups of order 3, 6 of order 5
        let objects = edge_view(5).unwrap();
        let c = SymmetryConstraints::new(&objects, &VerifyOptions::default()).unwrap();
        assert_eq!(c.generator_count(), 41);
        let objects = edge_view(6).unwrap();
        let c = SymmetryConstraints::new(&objects, &VerifyOptions::default()).unwrap();
        assert_eq!(c.generator_count(), 75 + 40 + 36);
    }

    #[test]
    fn prime_order_detection() {
        assert_eq!(prime_order(&[1, 0, 2]), Some(2));
        assert_eq!(prime_order(&[1, 2, 0, 4, 3]), None);
        assert_eq!(prime_order(&[1, 2, 3, 0]), None);
        assert_eq!(prime_order(&[0, 1]), None);
    }

    #[test]
    fn agrees_with_full_scan() {
        let objects = edge_view(5).unwrap();
        let c = SymmetryConstraints::new(&objects, &VerifyOptions::default()).unwrap();
        let mut state = 12345u64;
        for _ in 0..300 {
            let colors: Vec<u32> = (0..objects.len())
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((state >> 33) % 3) as u32
                })
                .collect();
            assert_eq!(c.is_distinguishing(&colors), scan(&objects, &colors).verdict);
        }
    }

    #[test]
    fn oracle_examples() {
        let k6 = ListAssignment::identical(edge_view(6).unwrap(), &["a", "b"]).unwrap();
        let r = exact_list_distinguishable(&k6, &OracleOptions::default()).unwrap();
        assert!(r.distinguishable);
        assert!(r.witness.unwrap().respects(&k6));

        let k5 = ListAssignment::identical(edge_view(5).unwrap(), &["a", "b"]).unwrap();
        assert!(!exact_list_distinguishable(&k5, &OracleOptions::default()).unwrap().distinguishable);

        let small = OracleOptions { cap_colorings: 100, ..Default::default() };
        assert!(exact_list_distinguishable(&k6, &small).is_err());
    }

    #[test]
    fn fixing_probability_brute_force() {
        let l = ListAssignment::identical(edge_view(4).unwrap(), &["a", "b"]).unwrap();
        let p = fixing_probability(&l, &OracleOptions::default()).unwrap();
        let fixed = (0..64u32)
            .filter(|m| {
                let colors: Vec<u32> = (0..6).map(|i| (m >> i) & 1).collect();
                !scan(l.objects(), &colors).verdict
            })
            .count();
        assert_eq!(p, BigRational::new((fixed as i64).into(), 64.into()));
    }

    #[test]
    fn rename_prune_matches_unpruned() {
        let plain = DNumberOptions { rename_prune: false, ..Default::default() };
        for k_max in 1..=3 {
            let a = brute_force_distinguishing_number(5, 2, k_max, &DNumberOptions::default()).unwrap();
            let b = brute_force_distinguishing_number(5, 2, k_max, &plain).unwrap();
            assert_eq!(a.value, b.value);
        }
        let d = brute_force_distinguishing_number(5, 2, 3, &DNumberOptions::default()).unwrap();
        assert_eq!(d.value, Some(3));
    }
}
