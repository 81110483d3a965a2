use std::path::Path;

use anyhow::{bail, ensure, Context};
use serde::Serialize;

use kneser_dist::bounds::{
    category_split, decay_bound_check, f_min_sum, f_sum, geometric_tail, kneser_orbit_bound, p_full_cycle,
    recursion_rhs, BoundReport, BoundTerm, CategorySplit, DecayRow, DyadicRational, RecursionReport, TailReport,
    DEFAULT_MAX_N, REPORT_DIGITS,
};
use kneser_dist::construct::{construct as construct_coloring, CaseTrace, ConstructOptions, MonoPath};
use kneser_dist::distinguish::{
    brute_force_distinguishing_number, conjecture_explore, las_vegas_distinguish, palette_names, random_assignments,
    Coloring, DNumberOptions, FixationCertificate, LasVegasReport, ListAssignment, OracleOptions, VerifyOptions,
};
use kneser_dist::kneser::{ColorableObjectSet, ObjectKind};
use kneser_dist::perm::factorial;

use crate::output::{emit, Report};
use crate::{Common, Status};

/// A bound as an exact fraction and a rounded decimal.
#[derive(Debug, Serialize)]
struct Exact {
    fraction: String,
    decimal: String,
}

impl From<&DyadicRational> for Exact {
    fn from(d: &DyadicRational) -> Self {
        Self { fraction: d.fraction_string(), decimal: d.decimal(REPORT_DIGITS) }
    }
}

impl Common {
    fn verify(&self) -> VerifyOptions {
        let cap_n = (1..).take_while(|&n| factorial(n) <= self.cap_perms.into()).last().unwrap_or(1);
        VerifyOptions { cap_n, allow_over_cap: false }
    }

    fn oracle(&self) -> OracleOptions {
        OracleOptions { cap_colorings: self.cap_colorings, verify: self.verify() }
    }
}

fn read_lists(path: &Path) -> anyhow::Result<ListAssignment> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    ListAssignment::from_json(&text).with_context(|| format!("malformed list assignment in {}", path.display()))
}

fn coloring_rows(c: Option<&Coloring>) -> Vec<Vec<String>> {
    c.map(|c| (0..c.len()).map(|i| vec![c.objects().label(i), c.color(i).to_string()]).collect()).unwrap_or_default()
}

#[derive(Debug, Serialize)]
struct TermRow<'a> {
    cycle_type: String,
    #[serde(flatten)]
    term: &'a BoundTerm,
    decimal: String,
}

#[derive(Debug, Serialize)]
struct SumEntry<'a> {
    n: usize,
    min_cycle: usize,
    terms: Vec<TermRow<'a>>,
    total: Exact,
    #[serde(skip_serializing_if = "Option::is_none")]
    p_full_cycle: Option<Exact>,
    #[serde(skip_serializing_if = "Option::is_none")]
    recursion: Option<RecursionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tail: Option<TailReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    decay: Option<DecayRow>,
}

#[derive(Debug, Serialize)]
struct KneserEntry {
    n: usize,
    r: usize,
    m: u64,
    expression: String,
    bound: Exact,
    below_one: bool,
    categories: Option<CategorySplit>,
}

#[derive(Debug, Serialize)]
struct BoundsOutput<T> {
    mode: &'static str,
    reports: Vec<T>,
}

fn sum_entry(report: &BoundReport, full: bool) -> anyhow::Result<SumEntry<'_>> {
    let n = report.n;
    let in_range = |lo: usize| full && (lo..=DEFAULT_MAX_N).contains(&n);
    Ok(SumEntry {
        n,
        min_cycle: report.min_cycle,
        terms: report
            .terms
            .iter()
            .map(|t| TermRow {
                cycle_type: t.cycle_type.to_string(),
                term: t,
                decimal: t.contribution.decimal(REPORT_DIGITS),
            })
            .collect(),
        total: Exact::from(&report.total),
        p_full_cycle: if full { Some(Exact::from(&p_full_cycle(n)?)) } else { None },
        recursion: if in_range(9) { Some(recursion_rhs(n)?) } else { None },
        tail: if in_range(9) { Some(geometric_tail(n)?) } else { None },
        decay: if in_range(8) { decay_bound_check(n, n)?.rows.pop() } else { None },
    })
}

pub fn bounds(
    common: &Common,
    n: usize,
    n_max: Option<usize>,
    min_cycle: Option<usize>,
    kneser_r: Option<usize>,
) -> anyhow::Result<Status> {
    let n_max = n_max.unwrap_or(n);
    ensure!(n <= n_max, "--n-max ({n_max}) is below --n ({n})");

    if let Some(r) = kneser_r {
        let reports = (n..=n_max)
            .map(|n| {
                let b = kneser_orbit_bound(n, r)?;
                let categories = if (7..=8).contains(&n) && r >= 3 { Some(category_split(n, r)?) } else { None };
                Ok(KneserEntry {
                    n,
                    r,
                    m: b.m,
                    expression: format!("{n}!/2^{}", b.m),
                    bound: Exact::from(&b.total),
                    below_one: b.below_one,
                    categories,
                })
            })
            .collect::<anyhow::Result<Vec<_>>>()?;
        let rows = reports
            .iter()
            .map(|e| {
                let cat = e.categories.as_ref();
                vec![
                    e.n.to_string(),
                    e.r.to_string(),
                    e.m.to_string(),
                    e.bound.fraction.clone(),
                    e.bound.decimal.clone(),
                    e.below_one.to_string(),
                    cat.map(|c| c.count_i.to_string()).unwrap_or_default(),
                    cat.map(|c| c.count_ii.to_string()).unwrap_or_default(),
                    cat.map(|c| c.bound.fraction_string()).unwrap_or_default(),
                ]
            })
            .collect();
        let json = BoundsOutput { mode: "kneser", reports };
        let header = ["n", "r", "m", "bound", "decimal", "below_one", "category_i", "category_ii", "category_bound"];
        emit(common, Report { json: &json, header: &header, rows })?;
        return Ok(Status::Success);
    }

    ensure!(n_max <= DEFAULT_MAX_N, "sums are supported up to n = {DEFAULT_MAX_N}, got {n_max}");
    let raw = (n..=n_max)
        .map(|n| match min_cycle {
            Some(i) => f_min_sum(n, i),
            None => f_sum(n),
        })
        .collect::<kneser_dist::Result<Vec<_>>>()?;
    let reports = raw.iter().map(|r| sum_entry(r, min_cycle.is_none())).collect::<anyhow::Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    for e in &reports {
        for t in &e.terms {
            rows.push(vec![
                e.n.to_string(),
                e.min_cycle.to_string(),
                t.cycle_type.clone(),
                t.term.count.to_string(),
                t.term.mu.to_string(),
                t.term.contribution.fraction_string(),
                t.decimal.clone(),
            ]);
        }
        let total = [e.total.fraction.clone(), e.total.decimal.clone()];
        rows.push(
            [
                vec![e.n.to_string(), e.min_cycle.to_string(), "total".into(), String::new(), String::new()],
                total.to_vec(),
            ]
            .concat(),
        );
    }
    let json = BoundsOutput { mode: if min_cycle.is_some() { "f_min" } else { "f" }, reports };
    let header = ["n", "min_cycle", "cycle_type", "N", "mu", "contribution", "decimal"];
    emit(common, Report { json: &json, header: &header, rows })?;
    Ok(Status::Success)
}

#[derive(Debug, Serialize)]
struct ConstructOutput<'a> {
    #[serde(flatten)]
    coloring: &'a Coloring,
    trace: CaseTrace,
    attempted: Option<CaseTrace>,
    fallback_reason: Option<&'a str>,
    path: Option<&'a MonoPath>,
    trials: Option<u64>,
    certificate: &'a FixationCertificate,
}

pub fn construct(common: &Common, input: &Path, max_trials: u64) -> anyhow::Result<Status> {
    let lists = read_lists(input)?;
    let n = lists.n();
    if lists.objects().kind() != ObjectKind::CompleteGraphEdges || !(6..=7).contains(&n) {
        bail!(
            "construct covers 2-lists on the edges of K_6 and K_7, got {} with n = {n}; use `kneser-dist sample` instead",
            lists.objects().kind().as_str()
        );
    }
    let opts = ConstructOptions { seed: common.seed, max_trials, oracle: common.oracle() };
    let out = construct_coloring(&lists, &opts)?;
    let json = ConstructOutput {
        coloring: &out.coloring,
        trace: out.trace,
        attempted: out.attempted,
        fallback_reason: out.fallback_reason.as_deref(),
        path: out.path.as_ref(),
        trials: out.trials,
        certificate: &out.certificate,
    };
    emit(common, Report { json: &json, header: &["object", "color"], rows: coloring_rows(Some(&out.coloring)) })?;
    Ok(Status::Success)
}

/// A union bound on the chance that one random trial fails.
#[derive(Debug, Serialize)]
struct TrialBound {
    name: String,
    #[serde(flatten)]
    value: Exact,
}

fn trial_bound(lists: &ListAssignment) -> Option<TrialBound> {
    if lists.lists().iter().any(|l| l.len() < 2) {
        return None;
    }
    let (n, r) = (lists.n(), lists.r());
    if r == 2 && (2..=DEFAULT_MAX_N).contains(&n) {
        let f = f_sum(n).ok()?;
        return Some(TrialBound { name: format!("f({n})"), value: Exact::from(&f.total) });
    }
    let b = kneser_orbit_bound(n, r).ok()?;
    Some(TrialBound { name: format!("{n}!/2^{}", b.m), value: Exact::from(&b.total) })
}

#[derive(Debug, Serialize)]
struct SampleOutput<'a> {
    #[serde(flatten)]
    report: &'a LasVegasReport,
    failure_bound: Option<TrialBound>,
}

pub fn sample(
    common: &Common,
    input: Option<&Path>,
    n: Option<usize>,
    r: Option<usize>,
    k: Option<usize>,
    max_trials: u64,
) -> anyhow::Result<Status> {
    let lists = match (input, n, r, k) {
        (Some(path), ..) => read_lists(path)?,
        (None, Some(n), Some(r), Some(k)) => {
            ensure!(k >= 1, "--k must be at least 1");
            let objects = ColorableObjectSet::new(ObjectKind::KneserVertices, n, r)?;
            ListAssignment::identical(objects, &palette_names(k))?
        }
        _ => bail!("give either --input or all of --n, --r and --k"),
    };
    let report = las_vegas_distinguish(&lists, max_trials, common.seed, &common.verify())?;
    let failure_bound = trial_bound(&lists);
    if !report.success {
        let quoted = failure_bound
            .as_ref()
            .map(|b| {
                format!(
                    "; per-trial failure probability is at most {} = {} ({})",
                    b.name, b.value.fraction, b.value.decimal
                )
            })
            .unwrap_or_default();
        eprintln!("no distinguishing coloring in {} trials{quoted}", report.trials);
    }
    let rows = coloring_rows(report.coloring.as_ref());
    emit(
        common,
        Report { json: &SampleOutput { report: &report, failure_bound }, header: &["object", "color"], rows },
    )?;
    Ok(if report.success { Status::Success } else { Status::BudgetExhausted })
}

pub fn dnumber(common: &Common, n: usize, r: usize, k_max: usize, node_budget: u64) -> anyhow::Result<Status> {
    let opts = DNumberOptions { rename_prune: true, node_budget: Some(node_budget), verify: common.verify() };
    let d = brute_force_distinguishing_number(n, r, k_max, &opts)?;
    let row = vec![
        d.n.to_string(),
        d.r.to_string(),
        d.k_max.to_string(),
        d.value.map(|v| v.to_string()).unwrap_or_default(),
        d.nodes.to_string(),
    ];
    emit(common, Report { json: &d, header: &["n", "r", "k_max", "value", "nodes"], rows: vec![row] })?;
    Ok(if d.value.is_some() { Status::Success } else { Status::Negative })
}

pub fn conjecture(common: &Common, n: usize, r: usize, k: usize, samples: usize) -> anyhow::Result<Status> {
    let objects = ColorableObjectSet::new(ObjectKind::KneserVertices, n, r)?;
    let assignments = random_assignments(&objects, k, samples, common.seed)?;
    let report = conjecture_explore(&objects, k, &assignments, &common.oracle())?;
    let rows = report
        .rows
        .iter()
        .map(|row| {
            vec![
                row.label.clone(),
                row.identical.to_string(),
                kneser_dist::bounds::rational_string(&row.expected_count),
                row.expected_count_decimal.clone(),
                row.fixing_probability.as_ref().map(kneser_dist::bounds::rational_string).unwrap_or_default(),
                row.fixing_probability_decimal.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let header = [
        "label",
        "identical",
        "expected_count",
        "expected_count_decimal",
        "fixing_probability",
        "fixing_probability_decimal",
    ];
    emit(common, Report { json: &report, header: &header, rows })?;
    Ok(Status::Success)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Format;

    fn common(cap_perms: u128) -> Common {
        Common { format: Format::Json, out: None, seed: 0, cap_perms, cap_colorings: 1 << 24 }
    }

    #[test]
    fn permutation_cap_maps_to_degree() {
        assert_eq!(common(3_628_800).verify().cap_n, 10);
        assert_eq!(common(3_628_799).verify().cap_n, 9);
        assert_eq!(common(1).verify().cap_n, 1);
    }

    #[test]
    fn trial_bound_needs_lists_of_two() {
        let objects = ColorableObjectSet::new(ObjectKind::KneserVertices, 7, 3).unwrap();
        let two = ListAssignment::identical(objects.clone(), &["a", "b"]).unwrap();
        assert_eq!(trial_bound(&two).unwrap().name, "7!/2^10");
        let one = ListAssignment::identical(objects, &["a"]).unwrap();
        assert!(trial_bound(&one).is_none());
    }
}
