use num_rational::BigRational;
use serde::Serialize;

use super::lists::{palette_names, ListAssignment};
use super::probability::{expected_fixing_automorphisms, DEFAULT_EXPECTATION_CAP};
use super::random::trial_rng;
use super::search::{fixing_probability, OracleOptions};
use crate::bounds::{rational_string, render_decimal, REPORT_DIGITS};
use crate::error::Result;
use crate::kneser::ColorableObjectSet;

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureRow {
    pub label: String,
    pub identical: bool,
    #[serde(serialize_with = "crate::bounds::serialize_rational")]
    pub expected_count: BigRational,
    pub expected_count_decimal: String,
    /// Exact probability of a nontrivial fixing permutation, when the
    /// coloring space is small enough to enumerate.
    #[serde(serialize_with = "serialize_opt_rational")]
    pub fixing_probability: Option<BigRational>,
    pub fixing_probability_decimal: Option<String>,
}

/// Exploratory comparison of identical lists against sampled assignments.
/// A sampled maximum is evidence, not proof.
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub r: usize,
    pub k: usize,
    pub rows: Vec<ConjectureRow>,
    pub identical_max_expected: bool,
    /// `None` when some fixing probability was out of reach.
    pub identical_max_probability: Option<bool>,
}

fn serialize_opt_rational<S: serde::Serializer>(v: &Option<BigRational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(x) => s.serialize_str(&rational_string(x)),
        None => s.serialize_none(),
    }
}

/// `samples` assignments of random `k`-subsets of a `(k+1)`-color palette,
/// the `i`th drawn from seed `seed + i`.
pub fn random_assignments(
    objects: &ColorableObjectSet,
    k: usize,
    samples: usize,
    seed: u64,
) -> Result<Vec<ListAssignment>> {
    (0..samples as u64)
        .map(|i| ListAssignment::random_uniform(objects.clone(), k, k + 1, &mut trial_rng(seed, i)))
        .collect()
}

pub fn conjecture_explore(
    objects: &ColorableObjectSet,
    k: usize,
    assignments: &[ListAssignment],
    opts: &OracleOptions,
) -> Result<ConjectureReport> {
    let identical = ListAssignment::identical(objects.clone(), &palette_names(k))?;
    for a in assignments {
        a.require_uniform(k)?;
    }
    let row = |label: String, lists: &ListAssignment| -> Result<ConjectureRow> {
        let expected: BigRational = expected_fixing_automorphisms(lists, DEFAULT_EXPECTATION_CAP)?;
        let p =
            if lists.coloring_count() <= opts.cap_colorings { Some(fixing_probability(lists, opts)?) } else { None };
        Ok(ConjectureRow {
            label,
            identical: lists.is_identical(),
            expected_count_decimal: render_decimal(&expected, REPORT_DIGITS),
            expected_count: expected,
            fixing_probability_decimal: p.as_ref().map(|x| render_decimal(x, REPORT_DIGITS)),
            fixing_probability: p,
        })
    };
    let mut rows = vec![row("identical".to_string(), &identical)?];
    for (i, a) in assignments.iter().enumerate() {
        rows.push(row(format!("sample-{i}"), a)?);
    }
    let base = &rows[0];
    let identical_max_expected = rows.iter().all(|r| r.expected_count <= base.expected_count);
    let identical_max_probability = match &base.fixing_probability {
        Some(b) => rows
            .iter()
            .map(|r| r.fixing_probability.as_ref().map(|p| p <= b))
            .collect::<Option<Vec<_>>>()
            .map(|v| v.into_iter().all(|x| x)),
        None => None,
    };
    Ok(ConjectureReport { n: objects.n(), r: objects.r(), k, rows, identical_max_expected, identical_max_probability })
}
