use std::collections::BTreeMap;

use kneser_dist::construct::{construct, max_mono_path, CaseTrace, ConstructOptions};
use kneser_dist::distinguish::{is_distinguishing, trial_rng, Coloring, ListAssignment};
use kneser_dist::kneser::edge_view;

fn instance(n: usize, palette: usize, i: u64) -> ListAssignment {
    ListAssignment::random_uniform(edge_view(n).unwrap(), 2, palette, &mut trial_rng(palette as u64, i)).unwrap()
}

#[test]
fn seeded_instances_are_colored_without_fallback() {
    let opts = ConstructOptions::default();
    let mut seen: BTreeMap<String, usize> = BTreeMap::new();
    for n in [6, 7] {
        for palette in [2, 3, 5, 12, 40] {
            for i in 0..100 {
                let lists = instance(n, palette, i);
                let out = construct(&lists, &opts).unwrap();
                assert!(out.fallback_reason.is_none(), "{:?}", out.fallback_reason);
                assert!(out.coloring.respects(&lists));
                assert!(is_distinguishing(&out.coloring).unwrap().verdict);
                *seen.entry(out.trace.to_string()).or_default() += 1;
            }
        }
    }
    for case in ["P7", "P6", "P5", "P4"] {
        assert!(seen.contains_key(case), "no instance reached {case}: {seen:?}");
    }
}

#[test]
fn reported_path_is_monochromatic_in_the_lists() {
    let e = edge_view(7).unwrap();
    for i in 0..200 {
        let lists = instance(7, 9, i);
        let Some(path) = max_mono_path(&lists).unwrap() else { continue };
        assert!(path.len() >= 3);
        let c1 = lists.color_id(&path.c1).unwrap();
        for w in path.vertices.windows(2) {
            assert!(lists.contains(e.edge(w[0], w[1]), c1));
        }
    }
}

#[test]
fn construction_is_deterministic() {
    let lists = instance(6, 30, 7);
    let opts = ConstructOptions { seed: 99, ..Default::default() };
    let a = construct(&lists, &opts).unwrap();
    let b = construct(&lists, &opts).unwrap();
    assert_eq!(a.coloring, b.coloring);
    assert_eq!(a.trace, b.trace);
}

#[test]
fn pairwise_distinct_lists_use_random_route() {
    let e = edge_view(7).unwrap();
    let names = (0..e.len()).map(|i| vec![format!("p{i:02}"), format!("q{i:02}")]).collect();
    let lists = ListAssignment::new(e, names).unwrap();
    let out = construct(&lists, &ConstructOptions::default()).unwrap();
    assert_eq!(out.trace, CaseTrace::Lemma9Random);
    assert!(out.trials.unwrap() >= 1);
    assert!(out.certificate.verdict);
}

#[test]
fn json_round_trip() {
    let lists = instance(6, 4, 3);
    let back = ListAssignment::from_json(&lists.to_json().unwrap()).unwrap();
    assert_eq!(back.lists(), lists.lists());
    let out = construct(&back, &ConstructOptions::default()).unwrap();
    let c = Coloring::from_json(&out.coloring.to_json().unwrap()).unwrap();
    assert_eq!(c, out.coloring);
}
