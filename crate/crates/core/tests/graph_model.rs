mod common;

use common::*;
use mwkit_core::io::{family_to_json, graph_to_json};
use mwkit_core::{
    gen, parse_family, parse_graph, write_family, write_graph, Completeness, Error, InstanceKind, PairTable, Rational,
    Vertex, WeightMode, WeightedTree,
};
use proptest::prelude::*;

#[test]
fn fixture_trees_load() {
    let fig1 = fixture_tree("fig1-tree.json");
    assert_eq!(fig1.vertex_count(), 8);
    assert!(fig1.all_labelled());

    let fig3 = fixture_tree("fig3-tree.json");
    assert_eq!(fig3.n(), 10);
    assert_eq!(fig3.vertex_count(), 17);
    assert!(fig3.is_essential());
    let leaves: Vec<Vertex> = fig3.leaf_names().into_iter().collect();
    assert_eq!(leaves, labels(&[1, 2, 3, 4, 5, 6, 7, 8, 9, 10]));
}

#[test]
fn fig1_internal_edges() {
    let fig1 = fixture_tree("fig1-tree.json");
    let internal: Vec<_> = fig1.internal_edges().into_iter().collect();
    assert_eq!(internal, vec![named("2", "3"), named("3", "4")]);
    assert_eq!(fig1.internal_edges(), structural_internal_edges(&fig1));
}

#[test]
fn fig1_tilde_edges_exceed_induced_internal_edges() {
    let fig1 = fixture_tree("fig1-tree.json");
    let s = labels(&[1, 5, 7, 8]);
    let sub = fig1.induced_subtree(&s).unwrap();
    let mut kept: Vec<Vertex> = sub.vertices().to_vec();
    kept.sort();
    assert_eq!(kept, labels(&[1, 2, 3, 4, 5, 7, 8]));

    let tilde = fig1.tilde_edges(&s).unwrap();
    assert!(tilde.contains(&named("2", "3")));
    assert!(!sub.internal_edges().contains(&named("2", "3")));
    assert!(tilde.is_subset(&sub.edge_names()));
}

#[test]
fn tilde_edges_require_leaves() {
    let fig1 = fixture_tree("fig1-tree.json");
    assert!(matches!(fig1.tilde_edges(&labels(&[1, 3])), Err(Error::NotALeaf(v)) if v == "3"));
}

#[test]
fn rejects_malformed_graphs() {
    let cases = [
        (r#"{"n": 2, "edges": [["1", "1", "1"], ["1", "2", "1"]]}"#, "self"),
        (r#"{"n": 2, "edges": [["1", "2", "1"], ["2", "1", "3"]]}"#, "parallel"),
        (r#"{"n": 3, "edges": [["1", "2", "1"]]}"#, "disconnected"),
        (r#"{"n": 2, "edges": [["1", "2", "0"]]}"#, "zero"),
        (r#"{"n": 2, "edges": [["1", "x", "1"], ["x", "2", "1"]]}"#, "unknown"),
        (r#"{"n": 2, "extra": ["v", "v"], "edges": [["1", "v", "1"], ["v", "2", "1"]]}"#, "duplicate"),
        (r#"{"n": 2, "edges": [["1", "2", "1e3"]]}"#, "syntax"),
    ];
    for (text, what) in cases {
        let err = parse_graph(text).unwrap_err();
        let ok = match what {
            "self" => matches!(err, Error::SelfLoop(_)),
            "parallel" => matches!(err, Error::ParallelEdge(..)),
            "disconnected" => matches!(err, Error::Disconnected { .. }),
            "zero" => matches!(err, Error::NonpositiveWeight { .. }),
            "unknown" => matches!(err, Error::UnknownVertex(_)),
            "duplicate" => matches!(err, Error::DuplicateVertex(_)),
            _ => matches!(err, Error::Syntax(_)),
        };
        assert!(ok, "{what}: got {err:?}");
    }
}

#[test]
fn zero_weights_need_the_nonnegative_regime() {
    let g = parse_graph(r#"{"n": 2, "weights": "nonnegative", "edges": [["1", "2", "0"]]}"#).unwrap();
    assert_eq!(g.mode(), WeightMode::Nonnegative);
    assert_eq!(g.total_weight(), Rational::ZERO);
}

#[test]
fn rejects_malformed_families() {
    assert!(matches!(
        parse_family(r#"{"n": 2, "weights": {"1,2": "1", "2,1": "1"}}"#),
        Err(Error::DuplicateKey(k)) if k == "2,1"
    ));
    assert!(matches!(parse_family(r#"{"n": 2, "weights": {"1,2": "-1"}}"#), Err(Error::NonpositiveValue { .. })));
    assert!(parse_family(r#"{"n": 2, "weights": {"1,3": "1"}}"#).is_err());
    assert!(parse_family(r#"{"n": 2, "weights": {}, "extra": 1}"#).is_err());
}

#[test]
fn completeness_levels() {
    assert_eq!(fixture_family("k3-family.json").completeness(), Completeness::Full);
    let pairs = fixture_family("four-cycle-family.json");
    assert_eq!(pairs.completeness(), Completeness::PairsOnly);
    assert!(matches!(pairs.require_full(), Err(Error::IncompleteFamily(s)) if s == "1,2,3"));
    let partial = parse_family(r#"{"n": 3, "weights": {"1,2": "1"}}"#).unwrap();
    assert_eq!(partial.completeness(), Completeness::Partial);
    assert!(matches!(PairTable::from_family(&partial), Err(Error::MissingPair(1, 3))));
}

#[test]
fn decimal_and_fraction_values_agree() {
    let a = parse_family(r#"{"n": 2, "weights": {"1,2": "3.5"}}"#).unwrap();
    let b = parse_family(r#"{"n": 2, "weights": {"1,2": "7/2"}}"#).unwrap();
    let c = parse_family(r#"{"n": 2, "weights": {"1,2": 3.5}}"#).unwrap();
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn fig3_family_fixture_matches_its_tree() {
    let expected = family(&fixture_graph("fig3-tree.json"));
    assert_eq!(fixture_family("fig3-family.json"), expected);
    assert_eq!(expected.get(set(&[1, 3])), Some(int(4)));
}

proptest! {
    #[test]
    fn graph_files_round_trip(kind in 0..3usize, n in 2..8usize, seed in any::<u64>()) {
        let kind = [InstanceKind::Graph, InstanceKind::Tree, InstanceKind::LeafTree][kind];
        let g = gen(kind, n, seed, mwkit_core::gen::DEFAULT_WEIGHT_RANGE).unwrap();
        let text = write_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert!(back == g);
        prop_assert_eq!(graph_to_json(&back), graph_to_json(&g));
        prop_assert_eq!(write_graph(&back), text);
    }

    #[test]
    fn family_files_round_trip(n in 2..6usize, seed in any::<u64>()) {
        let g = gen(InstanceKind::Graph, n, seed, mwkit_core::gen::DEFAULT_WEIGHT_RANGE).unwrap();
        let f = family(&g);
        let text = write_family(&f);
        let back = parse_family(&text).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(family_to_json(&back), family_to_json(&f));
    }

    #[test]
    fn essentialize_undoes_subdivision(n in 2..8usize, seed in any::<u64>()) {
        let t = WeightedTree::from_graph(gen(InstanceKind::LeafTree, n, seed, mwkit_core::gen::DEFAULT_WEIGHT_RANGE).unwrap()).unwrap();
        let mut edges = Vec::new();
        for (k, (u, v, w)) in t.edges().into_iter().enumerate() {
            let mid = Vertex::Extra(format!("s{k}"));
            let a = w * Rational::new(1, 3);
            edges.push((t.vertex(u).clone(), mid.clone(), a));
            edges.push((mid, t.vertex(v).clone(), w - a));
        }
        let subdivided = WeightedTree::from_edges(n, &edges, WeightMode::Nonnegative).unwrap();
        prop_assert!(!subdivided.is_essential());
        let e = subdivided.essentialize();
        prop_assert!(e.is_essential());
        prop_assert_eq!(e.vertex_count(), t.vertex_count());
        prop_assert_eq!(e.total_weight(), t.total_weight());
        for i in 1..=n {
            for j in i + 1..=n {
                prop_assert_eq!(e.label_distance(i, j).unwrap(), t.label_distance(i, j).unwrap());
            }
        }
    }
}
