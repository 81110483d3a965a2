use kneser_dist::kneser::{edge_view, ColorableObjectSet, KneserGraph, ObjectKind};
use kneser_dist::perm::{lex_permutations, Permutation};

fn golden(name: &str) -> Vec<String> {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).unwrap().lines().map(str::to_string).collect()
}

fn labels(set: &ColorableObjectSet) -> Vec<String> {
    (0..set.len()).map(|i| set.label(i)).collect()
}

#[test]
fn kneser_5_2_vertex_order() {
    let set = ColorableObjectSet::new(ObjectKind::KneserVertices, 5, 2).unwrap();
    assert_eq!(labels(&set), golden("kneser_5_2_vertices.txt"));
}

#[test]
fn k6_edge_order() {
    assert_eq!(labels(&edge_view(6).unwrap()), golden("k6_edges.txt"));
}

#[test]
fn kneser_7_3_vertex_order() {
    let set = ColorableObjectSet::new(ObjectKind::KneserVertices, 7, 3).unwrap();
    let want = golden("kneser_7_3_vertices.txt");
    assert_eq!(labels(&set), want);
    for (i, label) in want.iter().enumerate() {
        assert_eq!(set.parse_label(label).unwrap(), i);
    }
}

#[test]
fn petersen_graph() {
    let g = KneserGraph::build(5, 2).unwrap();
    assert_eq!(g.vertex_count(), 10);
    assert_eq!(g.degree(), 3);
    let edges: usize = (0..10).map(|i| g.neighbors(i).len()).sum::<usize>() / 2;
    assert_eq!(edges, 15);
    for i in 0..10 {
        for j in 0..10 {
            let disjoint = g.vertex(i).iter().all(|x| !g.vertex(j).contains(x));
            assert_eq!(g.adjacent(i, j), i != j && disjoint);
        }
    }
}

#[test]
fn induced_maps_are_automorphisms() {
    let g = KneserGraph::build(6, 2).unwrap();
    let sigma = Permutation::from_cycles(6, &[&[1, 2, 3], &[4, 5]]).unwrap();
    let map = g.induced_vertex_map(&sigma).unwrap();
    for i in 0..g.vertex_count() {
        for j in 0..g.vertex_count() {
            assert_eq!(g.adjacent(i, j), g.adjacent(map.apply(i + 1) - 1, map.apply(j + 1) - 1));
        }
    }
}

#[test]
fn action_is_faithful_on_edges_of_k5() {
    let e = edge_view(5).unwrap();
    let trivial = lex_permutations(5).filter(|s| (0..e.len()).all(|i| e.image(s.as_zero_based(), i) == i)).count();
    assert_eq!(trivial, 1);
}

#[test]
fn regime_is_enforced() {
    assert!(KneserGraph::build(4, 2).is_err());
    assert!(KneserGraph::build(5, 1).is_err());
    assert!(KneserGraph::build(65, 2).is_err());
    assert!(edge_view(2).is_err());
}
