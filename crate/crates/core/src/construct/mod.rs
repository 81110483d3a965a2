//! Deterministic list-distinguishing edge colorings of `K_6` and `K_7` from
//! lists of size 2.
//!
//! The construction finds a longest monochromatic path, renames vertices so
//! the path is `1, 2, ..., |P|`, colors the edges by the scheme for that
//! path length and renames back. The result is always checked against all
//! of `S_n`. If the scheme cannot be met or its output is not
//! distinguishing, the exhaustive oracle supplies the coloring instead and
//! the reason is kept in the outcome.

mod path;
mod relabel;
mod scheme;

pub use path::{max_mono_path, MonoPath};
pub use relabel::Relabeling;
pub use scheme::{CaseTrace, Scheme};

use serde::Serialize;

use crate::distinguish::{
    exact_list_distinguishable, las_vegas_distinguish, Coloring, FixationCertificate, ListAssignment, OracleOptions,
    VerifyOptions,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct ConstructionOutcome {
    pub coloring: Coloring,
    /// The case that produced the returned coloring.
    pub trace: CaseTrace,
    /// The case attempted before falling back to the oracle.
    pub attempted: Option<CaseTrace>,
    pub fallback_reason: Option<String>,
    pub path: Option<MonoPath>,
    /// Random trials used on the no-path route.
    pub trials: Option<u64>,
    pub certificate: FixationCertificate,
}

#[derive(Debug, Clone, Copy)]
pub struct ConstructOptions {
    /// Seed for the no-path random route.
    pub seed: u64,
    pub max_trials: u64,
    pub oracle: OracleOptions,
}

impl Default for ConstructOptions {
    fn default() -> Self {
        Self { seed: 0, max_trials: crate::distinguish::DEFAULT_MAX_TRIALS, oracle: OracleOptions::default() }
    }
}

fn check_input(lists: &ListAssignment, n: Option<usize>) -> Result<()> {
    path::require_edge_lists(lists)?;
    lists.require_uniform(2)?;
    match n {
        Some(want) if lists.n() != want => {
            Err(Error::OutOfRange(format!("expected lists on the edges of K_{want}, got K_{}", lists.n())))
        }
        None if !(6..=7).contains(&lists.n()) => {
            Err(Error::OutOfRange(format!("the constructive colorer covers K_6 and K_7 only, got K_{}", lists.n())))
        }
        _ => Ok(()),
    }
}

/// Constructive coloring for `K_6`.
pub fn construct_k6(lists: &ListAssignment, opts: &ConstructOptions) -> Result<ConstructionOutcome> {
    check_input(lists, Some(6))?;
    construct(lists, opts)
}

/// Constructive coloring for `K_7`.
pub fn construct_k7(lists: &ListAssignment, opts: &ConstructOptions) -> Result<ConstructionOutcome> {
    check_input(lists, Some(7))?;
    construct(lists, opts)
}

/// Dispatches on `n ∈ {6, 7}`.
pub fn construct(lists: &ListAssignment, opts: &ConstructOptions) -> Result<ConstructionOutcome> {
    check_input(lists, None)?;
    let Some(path) = max_mono_path(lists)? else {
        let (coloring, trials, certificate, reason) = no_p2_random_distinguish(lists, opts)?;
        let trace = if reason.is_some() { CaseTrace::OracleFallback } else { CaseTrace::Lemma9Random };
        return Ok(ConstructionOutcome {
            coloring,
            trace,
            attempted: reason.is_some().then_some(CaseTrace::Lemma9Random),
            fallback_reason: reason,
            path: None,
            trials: Some(trials),
            certificate,
        });
    };

    let relabel = Relabeling::for_path(lists.n(), &path.vertices);
    let moved = relabel.apply_lists(lists)?;
    let c1 = moved.color_id(&path.c1).expect("path color is in the palette");
    let scheme = Scheme::for_case(&moved, path.len(), c1).expect("every path length 3..=n has a scheme");
    let case = scheme.case();

    let reason = match scheme.solve(&moved) {
        Err(why) => format!("{case}: scheme infeasible: {why}"),
        Ok(ids) => {
            let coloring = relabel.revert_coloring(&Coloring::from_list_ids(&moved, &ids));
            let certificate = crate::distinguish::is_distinguishing_with(&coloring, &opts.oracle.verify)?;
            if certificate.verdict {
                return Ok(ConstructionOutcome {
                    coloring,
                    trace: case,
                    attempted: None,
                    fallback_reason: None,
                    path: Some(path),
                    trials: None,
                    certificate,
                });
            }
            let witness = certificate.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
            format!("{case}: scheme output is fixed by {witness}")
        }
    };
    log::warn!("falling back to the exhaustive oracle: {reason}");
    let (coloring, certificate) = oracle_coloring(lists, &opts.oracle)?;
    Ok(ConstructionOutcome {
        coloring,
        trace: CaseTrace::OracleFallback,
        attempted: Some(case),
        fallback_reason: Some(reason),
        path: Some(path),
        trials: None,
        certificate,
    })
}

fn oracle_coloring(lists: &ListAssignment, opts: &OracleOptions) -> Result<(Coloring, FixationCertificate)> {
    let result = exact_list_distinguishable(lists, opts)?;
    let coloring = result.witness.ok_or(Error::NotDistinguishable)?;
    let certificate = crate::distinguish::is_distinguishing_with(&coloring, &opts.verify)?;
    Ok((coloring, certificate))
}

/// Random colorings for lists with no monochromatic path on three vertices.
/// Falls back to the exhaustive oracle when the trial budget runs out; the
/// fallback reason is returned alongside.
pub fn no_p2_random_distinguish(
    lists: &ListAssignment,
    opts: &ConstructOptions,
) -> Result<(Coloring, u64, FixationCertificate, Option<String>)> {
    path::require_edge_lists(lists)?;
    if lists.n() < 6 {
        return Err(Error::OutOfRange(format!("the no-path route needs n >= 6, got {}", lists.n())));
    }
    if max_mono_path(lists)?.is_some() {
        return Err(Error::InvalidLists("the lists contain a monochromatic path on three vertices".to_string()));
    }
    let verify: VerifyOptions = opts.oracle.verify;
    let report = las_vegas_distinguish(lists, opts.max_trials, opts.seed, &verify)?;
    if let (Some(c), Some(cert)) = (report.coloring, report.certificate.clone()) {
        return Ok((c, report.trials, cert, None));
    }
    let reason = format!("random route used all {} trials", opts.max_trials);
    log::warn!("falling back to the exhaustive oracle: {reason}");
    let (c, cert) = oracle_coloring(lists, &opts.oracle)?;
    Ok((c, report.trials, cert, Some(reason)))
}
