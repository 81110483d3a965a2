use serde::Serialize;

use super::lists::Coloring;
use crate::error::{Error, Result};
use crate::kneser::ColorableObjectSet;
use crate::perm::{factorial, find_first_permutation, Permutation};

/// Largest `n` the exhaustive verifier accepts without an override.
pub const DEFAULT_VERIFY_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub cap_n: usize,
    /// Run even when `n` exceeds `cap_n`.
    pub allow_over_cap: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { cap_n: DEFAULT_VERIFY_CAP, allow_over_cap: false }
    }
}

impl VerifyOptions {
    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.cap_n && !self.allow_over_cap {
            return Err(Error::CapExceeded {
                what: "degree n for exhaustive verification",
                value: n as u128,
                cap: self.cap_n as u128,
            });
        }
        Ok(())
    }
}

/// Outcome of an exhaustive scan of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixationCertificate {
    /// True when no nontrivial permutation fixes every color class.
    pub verdict: bool,
    /// The lexicographically first nontrivial permutation fixing every
    /// class, as 1-based images.
    pub witness: Option<Permutation>,
    /// Nontrivial permutations examined.
    pub checked_count: u64,
}

#[inline]
pub(crate) fn fixes_ids(objects: &ColorableObjectSet, colors: &[u32], perm: &[usize]) -> bool {
    (0..colors.len()).all(|i| colors[objects.image(perm, i)] == colors[i])
}

/// Whether `sigma` maps every color class onto itself.
pub fn fixes_all_classes(c: &Coloring, sigma: &Permutation) -> Result<bool> {
    if sigma.degree() != c.n() {
        return Err(Error::InvalidPermutation(format!(
            "permutation of degree {} applied to objects over 1..={}",
            sigma.degree(),
            c.n()
        )));
    }
    Ok(fixes_ids(c.objects(), c.ids(), sigma.as_zero_based()))
}

/// Scans all of `S_n` for a nontrivial permutation fixing every class.
pub fn is_distinguishing(c: &Coloring) -> Result<FixationCertificate> {
    is_distinguishing_with(c, &VerifyOptions::default())
}

pub fn is_distinguishing_with(c: &Coloring, opts: &VerifyOptions) -> Result<FixationCertificate> {
    opts.check(c.n())?;
    Ok(scan(c.objects(), c.ids()))
}

pub(crate) fn scan(objects: &ColorableObjectSet, colors: &[u32]) -> FixationCertificate {
    let n = objects.n();
    match find_first_permutation(n, true, |p| fixes_ids(objects, colors, p)) {
        Some((p, rank)) => FixationCertificate {
            verdict: false,
            witness: Some(Permutation::from_zero_based(p).expect("enumerated permutation")),
            checked_count: rank,
        },
        None => {
            let total: u64 = factorial(n).try_into().expect("n! fits in u64 under the cap");
            FixationCertificate { verdict: true, witness: None, checked_count: total - 1 }
        }
    }
}
