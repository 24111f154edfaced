//! Weighted trees and their structural pieces: leaves, nodes, twigs,
//! internal edges, minimal subtrees.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::graph::{Edge, Vertex, WeightMode, WeightedGraph};
use crate::rational::Rational;
use crate::subset::SubsetKey;

/// A connected acyclic [`WeightedGraph`].
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedTree {
    graph: WeightedGraph,
}

impl Deref for WeightedTree {
    type Target = WeightedGraph;

    fn deref(&self) -> &WeightedGraph {
        &self.graph
    }
}

/// Labels of `s` as vertices.
pub fn label_vertices(s: SubsetKey) -> Vec<Vertex> {
    s.members().map(Vertex::Label).collect()
}

impl WeightedTree {
    pub fn from_graph(graph: WeightedGraph) -> Result<WeightedTree> {
        if !graph.is_connected() {
            return Err(Error::NotATree("not connected".into()));
        }
        if graph.edge_count() + 1 != graph.vertex_count() {
            return Err(Error::NotATree(format!("{} edges on {} vertices", graph.edge_count(), graph.vertex_count())));
        }
        Ok(WeightedTree { graph })
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex, Rational)], mode: WeightMode) -> Result<WeightedTree> {
        WeightedTree::from_graph(WeightedGraph::from_edges(n, edges, mode)?)
    }

    pub fn as_graph(&self) -> &WeightedGraph {
        &self.graph
    }

    pub fn into_graph(self) -> WeightedGraph {
        self.graph
    }

    /// Vertices of degree 1.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices of degree greater than 2.
    pub fn nodes(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.degree(v) > 2).collect()
    }

    pub fn leaf_names(&self) -> BTreeSet<Vertex> {
        self.leaves().into_iter().map(|v| self.vertex(v).clone()).collect()
    }

    pub fn is_essential(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.degree(v) != 2)
    }

    /// Parent pointers of a BFS rooted at `root`, plus distance from the root.
    fn bfs(&self, root: usize) -> (Vec<Option<usize>>, Vec<Rational>) {
        let mut parent = vec![None; self.vertex_count()];
        let mut dist = vec![Rational::ZERO; self.vertex_count()];
        let mut seen = vec![false; self.vertex_count()];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for (v, w) in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    parent[v] = Some(u);
                    dist[v] = dist[u] + w;
                    queue.push_back(v);
                }
            }
        }
        (parent, dist)
    }

    /// Vertex indices along the path from `from` to `to`, both included.
    pub fn path(&self, from: usize, to: usize) -> Vec<usize> {
        let (parent, _) = self.bfs(to);
        let mut out = vec![from];
        let mut cur = from;
        while let Some(p) = parent[cur] {
            out.push(p);
            cur = p;
        }
        out
    }

    pub fn distance(&self, from: usize, to: usize) -> Rational {
        self.bfs(from).1[to]
    }

    /// Distances from `from` to every vertex.
    pub fn distances_from(&self, from: usize) -> Vec<Rational> {
        self.bfs(from).1
    }

    /// Path length between two labelled vertices.
    pub fn label_distance(&self, a: usize, b: usize) -> Result<Rational> {
        let u = self.require_index(&Vertex::Label(a))?;
        let v = self.require_index(&Vertex::Label(b))?;
        Ok(self.distance(u, v))
    }

    /// Edges (by index, `u < v`) lying on some twig: the path from a leaf to
    /// its nearest node. In a tree without nodes every edge is a twig edge.
    pub fn twig_edge_indices(&self) -> BTreeSet<(usize, usize)> {
        let mut out = BTreeSet::new();
        for leaf in self.leaves() {
            let mut prev = leaf;
            let mut cur = self.neighbors(leaf).next().expect("leaf has a neighbour").0;
            out.insert((prev.min(cur), prev.max(cur)));
            while self.degree(cur) == 2 {
                let next = self.neighbors(cur).map(|(v, _)| v).find(|&v| v != prev).expect("degree 2");
                prev = cur;
                cur = next;
                out.insert((prev.min(cur), prev.max(cur)));
            }
        }
        out
    }

    fn internal_edge_indices(&self) -> BTreeSet<(usize, usize)> {
        let twigs = self.twig_edge_indices();
        self.edges().into_iter().map(|(u, v, _)| (u, v)).filter(|e| !twigs.contains(e)).collect()
    }

    pub fn twig_edges(&self) -> BTreeSet<Edge> {
        self.twig_edge_indices().into_iter().map(|(u, v)| self.edge_name(u, v)).collect()
    }

    /// Edges on no twig.
    pub fn internal_edges(&self) -> BTreeSet<Edge> {
        self.internal_edge_indices().into_iter().map(|(u, v)| self.edge_name(u, v)).collect()
    }

    /// Mask of vertices of the minimal subtree spanning `keep`.
    fn spanning_mask(&self, keep: &[usize]) -> Vec<bool> {
        let mut alive = vec![true; self.vertex_count()];
        let mut wanted = vec![false; self.vertex_count()];
        for &k in keep {
            wanted[k] = true;
        }
        let mut degree: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        let mut queue: VecDeque<usize> = (0..self.vertex_count()).filter(|&v| degree[v] <= 1 && !wanted[v]).collect();
        while let Some(u) = queue.pop_front() {
            if !alive[u] {
                continue;
            }
            alive[u] = false;
            for (v, _) in self.neighbors(u) {
                if alive[v] {
                    degree[v] -= 1;
                    if degree[v] <= 1 && !wanted[v] {
                        queue.push_back(v);
                    }
                }
            }
        }
        alive
    }

    /// The minimal subtree containing every vertex in `s`, with inherited weights.
    pub fn induced_subtree(&self, s: &[Vertex]) -> Result<WeightedTree> {
        if s.is_empty() {
            return Err(Error::BadParameters("empty vertex set".into()));
        }
        let keep = s.iter().map(|v| self.require_index(v)).collect::<Result<Vec<_>>>()?;
        let alive = self.spanning_mask(&keep);
        let edges: Vec<(usize, usize)> =
            self.edges().into_iter().filter(|&(u, v, _)| alive[u] && alive[v]).map(|(u, v, _)| (u, v)).collect();
        Ok(WeightedTree { graph: self.subgraph(&alive, &edges) })
    }

    /// Internal edges of this tree that lie in the minimal subtree of the leaves `s`.
    ///
    /// This can be strictly larger than the internal edges of that subtree taken
    /// as a tree on its own.
    pub fn tilde_edges(&self, s: &[Vertex]) -> Result<BTreeSet<Edge>> {
        let keep = s.iter().map(|v| self.require_index(v)).collect::<Result<Vec<_>>>()?;
        if let Some(&bad) = keep.iter().find(|&&v| self.degree(v) != 1) {
            return Err(Error::NotALeaf(self.vertex(bad).to_string()));
        }
        let alive = self.spanning_mask(&keep);
        Ok(self
            .internal_edge_indices()
            .into_iter()
            .filter(|&(u, v)| alive[u] && alive[v])
            .map(|(u, v)| self.edge_name(u, v))
            .collect())
    }

    /// Suppresses every unlabelled vertex of degree 2, merging its two edges.
    /// Labelled vertices are kept whatever their degree.
    pub fn essentialize(&self) -> WeightedTree {
        let count = self.vertex_count();
        let mut adj: Vec<BTreeMap<usize, Rational>> = (0..count).map(|u| self.neighbors(u).collect()).collect();
        let mut alive = vec![true; count];
        loop {
            let victim = (0..count).find(|&u| alive[u] && adj[u].len() == 2 && !self.vertex(u).is_labelled());
            let Some(x) = victim else { break };
            let mut ends = adj[x].iter().map(|(&v, &w)| (v, w));
            let (a, wa) = ends.next().expect("degree 2");
            let (b, wb) = ends.next().expect("degree 2");
            adj[a].remove(&x);
            adj[b].remove(&x);
            adj[a].insert(b, wa + wb);
            adj[b].insert(a, wa + wb);
            adj[x].clear();
            alive[x] = false;
        }
        let edges: Vec<(usize, usize)> =
            (0..count).flat_map(|u| adj[u].range(u + 1..).map(move |(&v, _)| (u, v)).collect::<Vec<_>>()).collect();
        let mut weights = BTreeMap::new();
        for &(u, v) in &edges {
            weights.insert((u, v), adj[u][&v]);
        }
        let mut remap = vec![usize::MAX; count];
        let mut vertices = Vec::new();
        for u in (0..count).filter(|&u| alive[u]) {
            remap[u] = vertices.len();
            vertices.push(self.vertex(u).clone());
        }
        let graph = WeightedGraph::from_parts(
            self.n(),
            vertices,
            weights.into_iter().map(|((u, v), w)| (remap[u], remap[v], w)).collect::<Vec<_>>(),
            self.mode(),
        );
        WeightedTree { graph }
    }
}
