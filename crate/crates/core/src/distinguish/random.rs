use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::lists::{Coloring, ListAssignment};
use super::verify::{scan, FixationCertificate, VerifyOptions};
use crate::error::Result;

/// Trial budget used when none is given.
pub const DEFAULT_MAX_TRIALS: u64 = 64;

/// Generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial))
}

pub(crate) fn draw_ids<R: Rng + ?Sized>(lists: &ListAssignment, rng: &mut R) -> Vec<u32> {
    lists.lists().iter().map(|l| l[rng.random_range(0..l.len())]).collect()
}

/// Draws every object's color uniformly and independently from its list.
pub fn random_list_coloring(lists: &ListAssignment, seed: u64) -> Coloring {
    let ids = draw_ids(lists, &mut ChaCha8Rng::seed_from_u64(seed));
    Coloring::from_list_ids(lists, &ids)
}

#[derive(Debug, Clone, Serialize)]
pub struct LasVegasReport {
    pub success: bool,
    /// Trials run, including the successful one.
    pub trials: u64,
    pub max_trials: u64,
    pub seed: u64,
    pub coloring: Option<Coloring>,
    /// Certificate of the returned coloring, or of the last failed trial.
    pub certificate: Option<FixationCertificate>,
}

/// Samples colorings with seeds `seed, seed + 1, ...` until one verifies as
/// distinguishing. Never returns an unverified coloring.
pub fn las_vegas_distinguish(
    lists: &ListAssignment,
    max_trials: u64,
    seed: u64,
    opts: &VerifyOptions,
) -> Result<LasVegasReport> {
    opts.check(lists.n())?;
    let mut last = None;
    for trial in 0..max_trials {
        let ids = draw_ids(lists, &mut trial_rng(seed, trial));
        let cert = scan(lists.objects(), &ids);
        if cert.verdict {
            return Ok(LasVegasReport {
                success: true,
                trials: trial + 1,
                max_trials,
                seed,
                coloring: Some(Coloring::from_list_ids(lists, &ids)),
                certificate: Some(cert),
            });
        }
        log::debug!("trial {trial}: fixed by {:?}", cert.witness);
        last = Some(cert);
    }
    Ok(LasVegasReport { success: false, trials: max_trials, max_trials, seed, coloring: None, certificate: last })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distinguish::verify::is_distinguishing;
    use crate::kneser::{edge_view, ColorableObjectSet, ObjectKind};

    #[test]
    fn singleton_lists_are_forced() {
        let e = edge_view(5).unwrap();
        let l = ListAssignment::identical(e, &["z"]).unwrap();
        for seed in [0, 7, u64::MAX] {
            let c = random_list_coloring(&l, seed);
            assert!((0..c.len()).all(|i| c.color(i) == "z"));
        }
        let r = las_vegas_distinguish(&l, 5, 0, &VerifyOptions::default()).unwrap();
        assert!(!r.success);
        assert_eq!(r.trials, 5);
        assert!(r.coloring.is_none());
    }

    #[test]
    fn reproducible() {
        let l = ListAssignment::identical(edge_view(7).unwrap(), &["a", "b", "c"]).unwrap();
        assert_eq!(random_list_coloring(&l, 42), random_list_coloring(&l, 42));
        assert_ne!(random_list_coloring(&l, 42), random_list_coloring(&l, 43));
    }

    #[test]
    fn coin_is_fair() {
        let l = ListAssignment::identical(edge_view(3).unwrap(), &["a", "b"]).unwrap();
        let hits = (0..10_000u64).filter(|&s| random_list_coloring(&l, s).color(0) == "a").count();
        let freq = hits as f64 / 10_000.0;
        assert!((freq - 0.5).abs() < 0.02, "{freq}");
    }

    #[test]
    fn kneser_73_succeeds() {
        let objects = ColorableObjectSet::new(ObjectKind::KneserVertices, 7, 3).unwrap();
        let l = ListAssignment::identical(objects, &["a", "b"]).unwrap();
        let r = las_vegas_distinguish(&l, DEFAULT_MAX_TRIALS, 0, &VerifyOptions::default()).unwrap();
        assert!(r.success);
        assert!(is_distinguishing(r.coloring.as_ref().unwrap()).unwrap().verdict);
    }
}
