//! Inputs shared by the benchmarks.

use mwkit_core::{family_of, gen, InstanceKind, MultiweightFamily, PairTable, WeightedGraph, WeightedTree};

pub const SEED: u64 = 0x5eed;

pub fn graph(n: usize) -> WeightedGraph {
    gen(InstanceKind::Graph, n, SEED, mwkit_core::gen::DEFAULT_WEIGHT_RANGE).expect("valid parameters")
}

pub fn leaf_tree(n: usize) -> WeightedGraph {
    gen(InstanceKind::LeafTree, n, SEED, mwkit_core::gen::DEFAULT_WEIGHT_RANGE).expect("valid parameters")
}

pub fn leaf_tree_family(n: usize) -> MultiweightFamily {
    family_of(&leaf_tree(n)).expect("connected")
}

pub fn graph_family(n: usize) -> MultiweightFamily {
    family_of(&graph(n)).expect("connected")
}

/// Leaf distances of a random leaf tree, without computing the full family.
pub fn leaf_tree_pairs(n: usize) -> PairTable {
    let t = WeightedTree::from_graph(leaf_tree(n)).expect("tree");
    PairTable::from_fn(n, |i, j| t.label_distance(i, j).expect("labels present")).expect("positive distances")
}
