//! Building graphs and trees that realize a family.

use std::collections::{BTreeMap, VecDeque};

use crate::checkers::{check_graphlike, check_treelike};
use crate::error::{Error, Result};
use crate::family::{MultiweightFamily, PairTable};
use crate::graph::{Vertex, WeightMode, WeightedGraph};
use crate::multiweight::family_of_tree;
use crate::quartets::{four_point_check, triangle_check};
use crate::rational::Rational;
use crate::tree::WeightedTree;

/// Complete graph on `[n]` with `w({i,j}) = D_{i,j}`.
pub fn realize_graph(f: &MultiweightFamily) -> Result<WeightedGraph> {
    let verdict = check_graphlike(f)?;
    if !verdict.accepted {
        return Err(Error::NotGraphlike(Box::new(verdict)));
    }
    let n = f.n();
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            edges.push((i - 1, j - 1, f.pair(i, j).expect("full family")));
        }
    }
    Ok(WeightedGraph::from_parts(n, (1..=n).map(Vertex::Label).collect(), edges, WeightMode::Positive))
}

/// Mutable tree under construction. Labels `1..=n` sit at indices `0..n`,
/// unlabelled vertices follow in creation order.
struct Builder {
    n: usize,
    names: Vec<Vertex>,
    adj: Vec<BTreeMap<usize, Rational>>,
}

impl Builder {
    fn new(n: usize) -> Builder {
        Builder { n, names: (1..=n).map(Vertex::Label).collect(), adj: vec![BTreeMap::new(); n] }
    }

    fn add_unlabelled(&mut self) -> usize {
        let name = format!("v{}", self.names.len() - self.n + 1);
        self.names.push(Vertex::Extra(name));
        self.adj.push(BTreeMap::new());
        self.adj.len() - 1
    }

    fn link(&mut self, u: usize, v: usize, w: Rational) {
        self.adj[u].insert(v, w);
        self.adj[v].insert(u, w);
    }

    fn unlink(&mut self, u: usize, v: usize) {
        self.adj[u].remove(&v);
        self.adj[v].remove(&u);
    }

    /// Splits edge `u`–`v` at distance `at` from `u`, returning the new vertex.
    fn subdivide(&mut self, u: usize, v: usize, at: Rational) -> usize {
        let w = self.adj[u][&v];
        self.unlink(u, v);
        let mid = self.add_unlabelled();
        self.link(u, mid, at);
        self.link(mid, v, w - at);
        mid
    }

    /// Path from `from` to `to` as vertex indices.
    fn path(&self, from: usize, to: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.adj.len()];
        parent[to] = to;
        let mut queue = VecDeque::from([to]);
        while let Some(u) = queue.pop_front() {
            if u == from {
                break;
            }
            for &v in self.adj[u].keys() {
                if parent[v] == usize::MAX {
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        let mut out = vec![from];
        let mut cur = from;
        while cur != to {
            cur = parent[cur];
            out.push(cur);
        }
        out
    }

    /// A vertex at distance `at` from `from` along the path to `to`, creating
    /// one if the point is inside an edge. Labelled vertices stay leaves: a
    /// point on a label gets a fresh vertex joined to it by a zero-weight twig.
    fn point_on_path(&mut self, from: usize, to: usize, at: Rational) -> usize {
        let path = self.path(from, to);
        let mut travelled = Rational::ZERO;
        for pair in path.windows(2) {
            let (x, y) = (pair[0], pair[1]);
            if travelled == at {
                return self.unlabelled_at(x);
            }
            let w = self.adj[x][&y];
            if at < travelled + w {
                return self.subdivide(x, y, at - travelled);
            }
            travelled += w;
        }
        debug_assert_eq!(travelled, at);
        self.unlabelled_at(to)
    }

    fn unlabelled_at(&mut self, x: usize) -> usize {
        if x >= self.n {
            return x;
        }
        let (&y, &w) = self.adj[x].iter().next().expect("inserted label has a neighbour");
        if w.is_zero() {
            y
        } else {
            self.subdivide(x, y, Rational::ZERO)
        }
    }

    fn distances_from(&self, from: usize) -> Vec<Option<Rational>> {
        let mut dist = vec![None; self.adj.len()];
        dist[from] = Some(Rational::ZERO);
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("visited");
            for (&v, &w) in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + w);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    fn finish(self, mode: WeightMode) -> Result<WeightedTree> {
        let edges: Vec<(usize, usize, Rational)> = self
            .adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.range(u + 1..).map(move |(&v, &w)| (u, v, w)))
            .collect();
        WeightedTree::from_graph(WeightedGraph::from_parts(self.n, self.names, edges, mode))
    }
}

/// Reconstructs the tree metric of `p` by inserting labels in ascending order.
///
/// Each new label `k` hangs off the point of the current tree closest to it:
/// over earlier pairs `(i, j)` the smallest `(D_{i,k} + D_{j,k} - D_{i,j}) / 2`
/// gives the hanging length, and the point sits at
/// `(D_{i,k} + D_{i,j} - D_{j,k}) / 2` from `i` along the path to `j`.
///
/// The result is essential, has every label as a leaf, positive internal
/// edges, and possibly zero-weight twigs. New vertices are named `v1, v2, ...`.
pub fn realize_leaf_tree(p: &PairTable) -> Result<WeightedTree> {
    let four = four_point_check(p);
    if !four.accepted {
        return Err(Error::NotFourPoint(Box::new(four)));
    }
    let triangle = triangle_check(p);
    if !triangle.accepted {
        return Err(Error::NotFourPoint(Box::new(triangle)));
    }
    let n = p.n();
    let mut b = Builder::new(n);
    if n >= 2 {
        b.link(0, 1, p.get(1, 2));
    }
    for k in 3..=n {
        let mut best: Option<(Rational, usize, usize)> = None;
        for i in 1..k {
            for j in i + 1..k {
                let hang = (p.get(i, k) + p.get(j, k) - p.get(i, j)).half();
                if best.is_none_or(|(h, _, _)| hang < h) {
                    best = Some((hang, i, j));
                }
            }
        }
        let (hang, i, j) = best.expect("at least one earlier pair");
        let along = (p.get(i, k) + p.get(i, j) - p.get(j, k)).half();
        let attach = b.point_on_path(i - 1, j - 1, along);
        b.link(attach, k - 1, hang);
    }

    for i in 1..=n {
        let dist = b.distances_from(i - 1);
        for j in i + 1..=n {
            if dist[j - 1] != Some(p.get(i, j)) {
                return Err(Error::Internal(format!("reconstructed distance for {i},{j} is off")));
            }
        }
    }
    let tree = b.finish(WeightMode::Nonnegative)?;
    debug_assert!(tree.is_essential());
    Ok(tree)
}

/// Positive-weighted tree with vertex set exactly `[n]` realizing `f`.
///
/// Builds the leaf-labelled tree of the 2-weights, then contracts each
/// zero-weight twig so its label takes the place of the unlabelled node it
/// hangs from. For an accepted family every node carries such a label (it is
/// the median of the triples meeting there).
pub fn realize_tree(f: &MultiweightFamily) -> Result<WeightedTree> {
    let verdict = check_treelike(f)?;
    if !verdict.accepted {
        return Err(Error::NotTreeRealizable(Box::new(verdict)));
    }
    let n = f.n();
    let leafy = realize_leaf_tree(&f.pairs()?)?;

    let mut rename: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    for ((a, b), w) in leafy.named_edges() {
        if w.is_zero() {
            let (label, node) = if a.is_labelled() { (a, b) } else { (b, a) };
            if !label.is_labelled() || node.is_labelled() {
                return Err(Error::Internal(format!("zero-weight edge {label}--{node} is not a twig")));
            }
            if let Some(prev) = rename.insert(node.clone(), label.clone()) {
                return Err(Error::Internal(format!("node {node} carries both {prev} and {label}")));
            }
        }
    }
    if let Some(orphan) = leafy.vertices().iter().find(|v| !v.is_labelled() && !rename.contains_key(v)) {
        return Err(Error::Internal(format!("node {orphan} admits no identifying label")));
    }

    let position = |v: &Vertex| -> usize {
        let v = rename.get(v).unwrap_or(v);
        v.label().expect("every vertex is labelled after renaming") - 1
    };
    let edges: Vec<(usize, usize, Rational)> = leafy
        .named_edges()
        .into_iter()
        .filter(|(_, w)| !w.is_zero())
        .map(|((a, b), w)| (position(&a), position(&b), w))
        .collect();
    let tree = WeightedTree::from_graph(WeightedGraph::from_parts(
        n,
        (1..=n).map(Vertex::Label).collect(),
        edges,
        WeightMode::Positive,
    ))?;
    if family_of_tree(&tree)? != *f {
        return Err(Error::Internal("realized tree does not reproduce the family".into()));
    }
    Ok(tree)
}
