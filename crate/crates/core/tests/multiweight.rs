mod common;

use common::*;
use mwkit_core::{
    family_of_tree, gen, multiweight_graph, multiweight_oracle, multiweight_tree, pair_tree_min, Error, InstanceKind,
    PairTable, Rational, SubsetKey, Vertex, WeightMode, WeightedGraph,
};
use proptest::prelude::*;

fn cycle(n: usize, w: i128) -> WeightedGraph {
    let edges: Vec<_> = (1..=n).map(|i| (Vertex::Label(i), Vertex::Label(i % n + 1), int(w))).collect();
    WeightedGraph::from_edges(n, &edges, WeightMode::Positive).unwrap()
}

#[test]
fn fig3_path_and_subset_weights() {
    let t = fixture_tree("fig3-tree.json");
    assert_eq!(multiweight_tree(&t, set(&[1, 3])).unwrap(), int(4));
    assert_eq!(multiweight_tree(&t, set(&[1, 3, 4, 7])).unwrap(), int(9));
    assert_eq!(multiweight_tree(&t, SubsetKey::full(10)).unwrap(), int(16));
}

#[test]
fn fig1_multiweight_spans_the_induced_subtree() {
    let t = fixture_tree("fig1-tree.json");
    let s = set(&[1, 5, 7, 8]);
    let sub = t.induced_subtree(&labels(&[1, 5, 7, 8])).unwrap();
    assert_eq!(multiweight_tree(&t, s).unwrap(), sub.total_weight());
    assert_eq!(multiweight_tree(&t, s).unwrap(), int(6));
}

#[test]
fn four_cycle_steiner_values() {
    let g = cycle(4, 1);
    assert_eq!(multiweight_graph(&g, set(&[1, 3])).unwrap().value, int(2));
    assert_eq!(multiweight_graph(&g, set(&[1, 2, 3])).unwrap().value, int(2));
    assert_eq!(multiweight_graph(&g, SubsetKey::full(4)).unwrap().value, int(3));
}

#[test]
fn steiner_point_is_used() {
    // K_{1,3} with unlabelled centre plus a heavy triangle on the labels
    let c = || Vertex::Extra("c".into());
    let mut edges = vec![];
    for i in 1..=3 {
        edges.push((Vertex::Label(i), c(), int(1)));
        edges.push((Vertex::Label(i), Vertex::Label(i % 3 + 1), int(2)));
    }
    let g = WeightedGraph::from_edges(3, &edges, WeightMode::Positive).unwrap();
    let r = multiweight_graph(&g, SubsetKey::full(3)).unwrap();
    assert_eq!(r.value, int(3));
    assert!(r.realizer.index_of(&c()).is_some());
    assert_eq!(multiweight_oracle(&g, SubsetKey::full(3)).unwrap(), int(3));
}

#[test]
fn oracle_refuses_large_graphs() {
    let g = cycle(13, 1);
    assert!(matches!(multiweight_oracle(&g, set(&[1, 2])), Err(Error::TooLarge { .. })));
}

#[test]
fn tree_weight_is_sum_of_separating_edges() {
    for (_, t) in
        tree_corpus(InstanceKind::LeafTree, 40, 3, 7).into_iter().chain(tree_corpus(InstanceKind::Tree, 40, 2, 7))
    {
        for s in SubsetKey::all(t.n(), 2) {
            assert_eq!(multiweight_tree(&t, s).unwrap(), split_weight(&t, s), "S = {s}");
        }
    }
}

#[test]
fn graph_and_tree_algorithms_agree_on_trees() {
    for (_, t) in tree_corpus(InstanceKind::LeafTree, 30, 3, 7) {
        let f = family_of_tree(&t).unwrap();
        for s in SubsetKey::all(t.n(), 2) {
            assert_eq!(multiweight_graph(&t, s).unwrap().value, f.get(s).unwrap());
        }
    }
}

#[test]
fn pair_tree_min_examples() {
    let k3 = PairTable::from_fn(3, |_, _| int(1)).unwrap();
    assert_eq!(pair_tree_min(&k3, SubsetKey::full(3)), int(2));

    let path = PairTable::from_fn(3, |i, j| match (i, j) {
        (1, 2) => int(2),
        (2, 3) => int(3),
        _ => int(5),
    })
    .unwrap();
    assert_eq!(pair_tree_min(&path, SubsetKey::full(3)), int(5));

    let quartet = PairTable::from_fn(4, |i, j| if (i <= 2) == (j <= 2) { int(2) } else { int(4) }).unwrap();
    assert_eq!(pair_tree_min(&quartet, SubsetKey::full(4)), int(8));
    assert_eq!(pair_tree_min(&quartet, set(&[1, 2, 3])), int(6));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dp_matches_oracle(n in 2..7usize, seed in any::<u64>()) {
        let g = gen(InstanceKind::Graph, n, seed, mwkit_core::gen::DEFAULT_WEIGHT_RANGE).unwrap();
        for s in SubsetKey::all(n, 2) {
            prop_assert_eq!(multiweight_graph(&g, s).unwrap().value, multiweight_oracle(&g, s).unwrap());
        }
    }

    #[test]
    fn realizer_is_a_light_tree_through_s(n in 2..7usize, seed in any::<u64>()) {
        let g = gen(InstanceKind::Graph, n, seed, mwkit_core::gen::DEFAULT_WEIGHT_RANGE).unwrap();
        for s in SubsetKey::all(n, 2) {
            let r = multiweight_graph(&g, s).unwrap();
            prop_assert!(r.realizer.is_tree());
            prop_assert_eq!(r.realizer.total_weight(), r.value);
            for label in s.members() {
                prop_assert!(r.realizer.label_index(label).is_some());
            }
            for (u, v, w) in r.realizer.edges() {
                let a = g.index_of(r.realizer.vertex(u)).unwrap();
                let b = g.index_of(r.realizer.vertex(v)).unwrap();
                prop_assert_eq!(g.weight(a, b), Some(w));
            }
        }
    }

    #[test]
    fn monotone_under_inclusion(n in 2..7usize, seed in any::<u64>()) {
        let g = gen(InstanceKind::Graph, n, seed, mwkit_core::gen::DEFAULT_WEIGHT_RANGE).unwrap();
        let f = family(&g);
        for (s, value) in f.iter() {
            for extra in (1..=n).filter(|&l| !s.contains(l)) {
                prop_assert!(value <= f.get(s.insert(extra)).unwrap());
            }
        }
    }

    #[test]
    fn scaling_weights_scales_values(n in 2..6usize, seed in any::<u64>(), k in 1..5i128) {
        let g = gen(InstanceKind::Graph, n, seed, mwkit_core::gen::DEFAULT_WEIGHT_RANGE).unwrap();
        let scaled: Vec<_> = g
            .edges()
            .into_iter()
            .map(|(u, v, w)| (g.vertex(u).clone(), g.vertex(v).clone(), w * Rational::from_integer(k)))
            .collect();
        let h = WeightedGraph::from_edges(n, &scaled, WeightMode::Positive).unwrap();
        let (f, fh) = (family(&g), family(&h));
        for (s, value) in f.iter() {
            prop_assert_eq!(fh.get(s).unwrap(), value * Rational::from_integer(k));
        }
    }
}
