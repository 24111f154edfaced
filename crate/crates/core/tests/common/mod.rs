#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use mwkit_core::{
    family_of, gen, parse_family, parse_graph, Edge, InstanceKind, MultiweightFamily, Rational, SubsetKey, Vertex,
    WeightedGraph, WeightedTree,
};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn fixture_graph(name: &str) -> WeightedGraph {
    parse_graph(&fixture_text(name)).unwrap()
}

pub fn fixture_tree(name: &str) -> WeightedTree {
    WeightedTree::from_graph(fixture_graph(name)).unwrap()
}

pub fn fixture_family(name: &str) -> MultiweightFamily {
    parse_family(&fixture_text(name)).unwrap()
}

pub fn int(v: i128) -> Rational {
    Rational::from_integer(v)
}

pub fn set(labels: &[usize]) -> SubsetKey {
    SubsetKey::new(labels).unwrap()
}

pub fn labels(ls: &[usize]) -> Vec<Vertex> {
    ls.iter().map(|&l| Vertex::Label(l)).collect()
}

pub fn named(a: &str, b: &str) -> Edge {
    mwkit_core::edge(Vertex::parse(a), Vertex::parse(b))
}

/// `n` cycles through `2..=max_n` so every size is covered.
pub fn corpus(kind: InstanceKind, count: u64, min_n: usize, max_n: usize) -> Vec<(u64, WeightedGraph)> {
    let span = (max_n - min_n + 1) as u64;
    (0..count)
        .map(|seed| {
            let n = min_n + (seed % span) as usize;
            (seed, gen(kind, n, seed, mwkit_core::gen::DEFAULT_WEIGHT_RANGE).unwrap())
        })
        .collect()
}

pub fn tree_corpus(kind: InstanceKind, count: u64, min_n: usize, max_n: usize) -> Vec<(u64, WeightedTree)> {
    corpus(kind, count, min_n, max_n)
        .into_iter()
        .map(|(seed, g)| (seed, WeightedTree::from_graph(g).unwrap()))
        .collect()
}

/// Vertices on `u`'s side once edge `u`–`v` is removed.
pub fn side_of(t: &WeightedTree, u: usize, v: usize) -> BTreeSet<usize> {
    let mut seen = BTreeSet::from([u]);
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        for (y, _) in t.neighbors(x) {
            if (x, y) != (u, v) && seen.insert(y) {
                stack.push(y);
            }
        }
    }
    seen
}

fn labels_in(t: &WeightedTree, side: &BTreeSet<usize>) -> SubsetKey {
    side.iter().filter_map(|&ix| t.vertex(ix).label()).collect()
}

/// Edges of `t` whose removal separates two labels of `s`.
pub fn separating_edges(t: &WeightedTree, s: SubsetKey) -> Vec<(usize, usize, Rational)> {
    t.edges()
        .into_iter()
        .filter(|&(u, v, _)| {
            let left = labels_in(t, &side_of(t, u, v)).intersection(s);
            !left.is_empty() && left != s
        })
        .collect()
}

/// Tree multiweight as the total weight of separating edges.
pub fn split_weight(t: &WeightedTree, s: SubsetKey) -> Rational {
    separating_edges(t, s).into_iter().map(|(_, _, w)| w).sum()
}

/// Edges with no leaf endpoint, found by degree alone. Matches the internal
/// edges of trees without unlabelled degree-2 vertices on twigs.
pub fn structural_internal_edges(t: &WeightedTree) -> BTreeSet<Edge> {
    t.edges()
        .into_iter()
        .filter(|&(u, v, _)| t.degree(u) > 1 && t.degree(v) > 1)
        .map(|(u, v, _)| t.edge_name(u, v))
        .collect()
}

/// Internal edges separating two labels of `s`.
pub fn structural_tilde_edges(t: &WeightedTree, s: SubsetKey) -> BTreeSet<Edge> {
    let internal = structural_internal_edges(t);
    separating_edges(t, s).into_iter().map(|(u, v, _)| t.edge_name(u, v)).filter(|e| internal.contains(e)).collect()
}

/// Internal edge of the leaf-labelled tree `t` whose sides split the labels
/// into `left` and its complement.
pub fn edge_with_split(t: &WeightedTree, left: SubsetKey) -> Option<(Edge, Rational)> {
    t.edges().into_iter().find_map(|(u, v, w)| {
        let l = labels_in(t, &side_of(t, u, v));
        let r = labels_in(t, &side_of(t, v, u));
        (l == left || r == left).then(|| (t.edge_name(u, v), w))
    })
}

pub fn family(g: &WeightedGraph) -> MultiweightFamily {
    family_of(g).unwrap()
}

/// Leaves whose nearest point on the subtree spanned by `quad` lies on the
/// path between the first two labels of `quad`.
pub fn clinging_leaves(t: &WeightedTree, quad: [usize; 4]) -> SubsetKey {
    let span = t.induced_subtree(&labels(&quad)).unwrap();
    let on_span: BTreeSet<usize> = span.vertices().iter().map(|v| t.index_of(v).unwrap()).collect();
    let [a, b, ..] = quad.map(|l| t.label_index(l).unwrap());
    let path: BTreeSet<usize> = t.path(a, b).into_iter().collect();
    (1..=t.n())
        .filter(|&x| {
            let start = t.label_index(x).unwrap();
            // nearest vertex of the span, by hop count along the unique path
            let dist = t.distances_from(start);
            let hops = bfs_hops(t, start);
            let anchor = *on_span.iter().min_by_key(|&&v| (hops[v], dist[v])).unwrap();
            path.contains(&anchor)
        })
        .collect()
}

fn bfs_hops(t: &WeightedTree, from: usize) -> Vec<usize> {
    let mut hops = vec![usize::MAX; t.vertex_count()];
    hops[from] = 0;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for (v, _) in t.neighbors(u) {
            if hops[v] == usize::MAX {
                hops[v] = hops[u] + 1;
                queue.push_back(v);
            }
        }
    }
    hops
}
