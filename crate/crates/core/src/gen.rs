//! Seeded random instances for property checks and the `gen` subcommand.
//!
//! Weights are drawn from the lattice `k/16`, so sums collide often enough to
//! exercise ties and degenerate quartets.

use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Vertex, WeightMode, WeightedGraph};
use crate::rational::Rational;
use crate::subset::MAX_LABEL;
use crate::tree::WeightedTree;

pub const WEIGHT_DENOMINATOR: i128 = 16;
pub const DEFAULT_WEIGHT_RANGE: RangeInclusive<i128> = 1..=64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstanceKind {
    /// Connected graph with vertex set `[n]`.
    Graph,
    /// Tree with vertex set `[n]`.
    Tree,
    /// Essential tree whose leaves are exactly `[n]`; internal edges positive,
    /// some twigs possibly zero.
    LeafTree,
}

impl FromStr for InstanceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graph" => Ok(InstanceKind::Graph),
            "tree" => Ok(InstanceKind::Tree),
            "leaf-tree" => Ok(InstanceKind::LeafTree),
            other => Err(Error::BadParameters(format!("unknown instance kind {other:?}"))),
        }
    }
}

struct Weights {
    rng: ChaCha8Rng,
    range: RangeInclusive<i128>,
}

impl Weights {
    fn draw(&mut self) -> Rational {
        Rational::new(self.rng.random_range(self.range.clone()), WEIGHT_DENOMINATOR)
    }
}

/// Probability of adding each non-tree edge to a random graph.
const EXTRA_EDGE_PROBABILITY: f64 = 0.35;
/// Probability that a leaf-tree twig gets weight zero (at most one per node).
const ZERO_TWIG_PROBABILITY: f64 = 0.2;
/// Probability that a new leaf joins an existing node rather than splitting an edge.
const POLYTOMY_PROBABILITY: f64 = 0.3;

/// A random instance. `weight_range` holds numerators over 16 and must be
/// within `1..`.
pub fn gen(kind: InstanceKind, n: usize, seed: u64, weight_range: RangeInclusive<i128>) -> Result<WeightedGraph> {
    if !(2..=MAX_LABEL).contains(&n) {
        return Err(Error::BadParameters(format!("n = {n} outside 2..={MAX_LABEL}")));
    }
    if *weight_range.start() < 1 || weight_range.is_empty() {
        return Err(Error::BadParameters(format!(
            "weight range {}..={} must be nonempty and positive",
            weight_range.start(),
            weight_range.end()
        )));
    }
    let mut w = Weights { rng: ChaCha8Rng::seed_from_u64(seed), range: weight_range };
    match kind {
        InstanceKind::Graph => Ok(random_graph(n, &mut w)),
        InstanceKind::Tree => Ok(random_tree(n, &mut w).into_graph()),
        InstanceKind::LeafTree => Ok(random_leaf_tree(n, &mut w).into_graph()),
    }
}

fn recursive_tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    (1..n)
        .map(|i| {
            let parent = order[rng.random_range(0..i)];
            let child = order[i];
            (parent.min(child), parent.max(child))
        })
        .collect()
}

fn random_graph(n: usize, w: &mut Weights) -> WeightedGraph {
    let mut pairs = recursive_tree_edges(n, &mut w.rng);
    for i in 0..n {
        for j in i + 1..n {
            if !pairs.contains(&(i, j)) && w.rng.random_bool(EXTRA_EDGE_PROBABILITY) {
                pairs.push((i, j));
            }
        }
    }
    pairs.sort_unstable();
    let edges: Vec<_> = pairs.into_iter().map(|(u, v)| (u, v, w.draw())).collect();
    WeightedGraph::from_parts(n, (1..=n).map(Vertex::Label).collect(), edges, WeightMode::Positive)
}

fn random_tree(n: usize, w: &mut Weights) -> WeightedTree {
    let mut pairs = recursive_tree_edges(n, &mut w.rng);
    pairs.sort_unstable();
    let edges: Vec<_> = pairs.into_iter().map(|(u, v)| (u, v, w.draw())).collect();
    WeightedTree::from_graph(WeightedGraph::from_parts(
        n,
        (1..=n).map(Vertex::Label).collect(),
        edges,
        WeightMode::Positive,
    ))
    .expect("recursive tree")
}

fn random_leaf_tree(n: usize, w: &mut Weights) -> WeightedTree {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(&mut w.rng);
    // indices 0..n are labels, n.. are nodes in creation order
    let mut node_count = 0usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    if n == 2 {
        edges.push((0, 1));
    } else {
        node_count = 1;
        for &l in &labels[..3] {
            edges.push((l, n));
        }
        for &l in &labels[3..] {
            let nodes = n..n + node_count;
            if w.rng.random_bool(POLYTOMY_PROBABILITY) {
                let node = w.rng.random_range(nodes);
                edges.push((l, node));
            } else {
                let (a, b) = edges.swap_remove(w.rng.random_range(0..edges.len()));
                let mid = n + node_count;
                node_count += 1;
                edges.extend([(a, mid), (mid, b), (l, mid)]);
            }
        }
    }
    for e in &mut edges {
        *e = (e.0.min(e.1), e.0.max(e.1));
    }
    edges.sort_unstable();

    let mut has_zero_twig = vec![false; node_count];
    let weighted: Vec<(usize, usize, Rational)> = edges
        .into_iter()
        .map(|(u, v)| {
            // a twig has its label first
            if u < n && v >= n && !has_zero_twig[v - n] && w.rng.random_bool(ZERO_TWIG_PROBABILITY) {
                has_zero_twig[v - n] = true;
                (u, v, Rational::ZERO)
            } else {
                (u, v, w.draw())
            }
        })
        .collect();
    let vertices: Vec<Vertex> =
        (1..=n).map(Vertex::Label).chain((1..=node_count).map(|i| Vertex::Extra(format!("v{i}")))).collect();
    WeightedTree::from_graph(WeightedGraph::from_parts(n, vertices, weighted, WeightMode::Nonnegative))
        .expect("leaf tree")
}
