//! Weighted simple graphs with labelled and unlabelled vertices.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A vertex is either one of the labels `1..=n` or a named unlabelled vertex (`v1`, `v2`, ...).
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Vertex {
    Label(usize),
    Extra(String),
}

impl Vertex {
    /// Interprets an all-digit name as a label, anything else as an unlabelled vertex.
    pub fn parse(name: &str) -> Vertex {
        let name = name.trim();
        if !name.is_empty() && name.bytes().all(|b| b.is_ascii_digit()) {
            match name.parse() {
                Ok(label) => Vertex::Label(label),
                Err(_) => Vertex::Extra(name.to_owned()),
            }
        } else {
            Vertex::Extra(name.to_owned())
        }
    }

    pub fn label(&self) -> Option<usize> {
        match self {
            Vertex::Label(l) => Some(*l),
            Vertex::Extra(_) => None,
        }
    }

    pub fn is_labelled(&self) -> bool {
        matches!(self, Vertex::Label(_))
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Vertex::Label(a), Vertex::Label(b)) => a.cmp(b),
            (Vertex::Label(_), Vertex::Extra(_)) => Ordering::Less,
            (Vertex::Extra(_), Vertex::Label(_)) => Ordering::Greater,
            // v2 before v10
            (Vertex::Extra(a), Vertex::Extra(b)) => (a.len(), a).cmp(&(b.len(), b)),
        }
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Label(l) => write!(f, "{l}"),
            Vertex::Extra(name) => f.write_str(name),
        }
    }
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An undirected edge named by its endpoints, smaller endpoint first.
pub type Edge = (Vertex, Vertex);

pub fn edge(a: Vertex, b: Vertex) -> Edge {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum WeightMode {
    #[default]
    Positive,
    Nonnegative,
}

impl WeightMode {
    pub fn admits(self, w: &Rational) -> bool {
        match self {
            WeightMode::Positive => w.is_positive(),
            WeightMode::Nonnegative => !w.is_negative(),
        }
    }
}

/// A graph as read from a file, before any validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawGraph {
    pub n: usize,
    pub extra: Vec<String>,
    pub edges: Vec<(String, String, Rational)>,
}

/// A simple connected graph with exact rational edge weights.
///
/// Vertex indices are dense: labelled vertices come first in ascending order,
/// then unlabelled vertices in declaration order.
#[derive(Clone)]
pub struct WeightedGraph {
    n: usize,
    vertices: Vec<Vertex>,
    index: HashMap<Vertex, usize>,
    adj: Vec<BTreeMap<usize, Rational>>,
    mode: WeightMode,
}

/// Checks a parsed graph: simple, connected, every label in `1..=n` present,
/// weights in the sign regime of `mode`.
pub fn validate_graph(raw: &RawGraph, mode: WeightMode) -> Result<WeightedGraph> {
    if raw.n == 0 {
        return Err(Error::BadParameters("n must be at least 1".into()));
    }
    let mut vertices: Vec<Vertex> = (1..=raw.n).map(Vertex::Label).collect();
    let mut seen = HashSet::new();
    for name in &raw.extra {
        let v = Vertex::parse(name);
        if v.is_labelled() || name.trim().is_empty() {
            return Err(Error::Syntax(format!("unlabelled vertex id {name:?} must not be a number or empty")));
        }
        if !seen.insert(v.clone()) {
            return Err(Error::DuplicateVertex(name.clone()));
        }
        vertices.push(v);
    }
    let index: HashMap<Vertex, usize> = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
    let resolve = |name: &str| -> Result<usize> {
        let v = Vertex::parse(name);
        index.get(&v).copied().ok_or_else(|| Error::UnknownVertex(name.to_owned()))
    };

    let mut adj = vec![BTreeMap::new(); vertices.len()];
    for (a, b, w) in &raw.edges {
        let (u, v) = (resolve(a)?, resolve(b)?);
        if u == v {
            return Err(Error::SelfLoop(vertices[u].to_string()));
        }
        if adj[u].contains_key(&v) {
            return Err(Error::ParallelEdge(vertices[u].to_string(), vertices[v].to_string()));
        }
        if !mode.admits(w) {
            return Err(Error::NonpositiveWeight {
                u: vertices[u].to_string(),
                v: vertices[v].to_string(),
                weight: *w,
            });
        }
        adj[u].insert(v, *w);
        adj[v].insert(u, *w);
    }

    let graph = WeightedGraph { n: raw.n, vertices, index, adj, mode };
    if let Some(unreached) = graph.first_unreachable() {
        return Err(Error::Disconnected {
            root: graph.vertices[0].to_string(),
            vertex: graph.vertices[unreached].to_string(),
        });
    }
    Ok(graph)
}

impl WeightedGraph {
    /// Builds a graph from already-checked parts. `vertices` must be distinct and
    /// `edges` must index into it without loops or repeats.
    pub(crate) fn from_parts(
        n: usize,
        vertices: Vec<Vertex>,
        edges: impl IntoIterator<Item = (usize, usize, Rational)>,
        mode: WeightMode,
    ) -> WeightedGraph {
        let index: HashMap<Vertex, usize> = vertices.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        debug_assert_eq!(index.len(), vertices.len());
        let mut adj = vec![BTreeMap::new(); vertices.len()];
        for (u, v, w) in edges {
            debug_assert!(u != v);
            let fresh = adj[u].insert(v, w).is_none();
            debug_assert!(fresh, "repeated edge");
            adj[v].insert(u, w);
        }
        WeightedGraph { n, vertices, index, adj, mode }
    }

    /// Builds a graph from named edges, with labels `1..=n` plus every unlabelled
    /// vertex mentioned. Runs full validation.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex, Rational)], mode: WeightMode) -> Result<WeightedGraph> {
        let mut extra: Vec<String> = Vec::new();
        for (a, b, _) in edges {
            for v in [a, b] {
                if let Vertex::Extra(name) = v {
                    if !extra.contains(name) {
                        extra.push(name.clone());
                    }
                }
            }
        }
        let raw =
            RawGraph { n, extra, edges: edges.iter().map(|(a, b, w)| (a.to_string(), b.to_string(), *w)).collect() };
        validate_graph(&raw, mode)
    }

    fn first_unreachable(&self) -> Option<usize> {
        if self.vertices.is_empty() {
            return None;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &v in self.adj[u].keys() {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.iter().position(|s| !s)
    }

    /// Size of the label universe `[n]`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> WeightMode {
        self.mode
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeMap::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex(&self, ix: usize) -> &Vertex {
        &self.vertices[ix]
    }

    pub fn index_of(&self, v: &Vertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn label_index(&self, label: usize) -> Option<usize> {
        self.index_of(&Vertex::Label(label))
    }

    pub(crate) fn require_index(&self, v: &Vertex) -> Result<usize> {
        self.index_of(v).ok_or_else(|| Error::UnknownVertex(v.to_string()))
    }

    pub fn neighbors(&self, ix: usize) -> impl Iterator<Item = (usize, Rational)> + '_ {
        self.adj[ix].iter().map(|(&v, &w)| (v, w))
    }

    pub fn degree(&self, ix: usize) -> usize {
        self.adj[ix].len()
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<Rational> {
        self.adj[u].get(&v).copied()
    }

    /// Edges by index, `u < v`, in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize, Rational)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for (&v, &w) in nbrs.range(u + 1..) {
                out.push((u, v, w));
            }
        }
        out
    }

    pub fn edge_name(&self, u: usize, v: usize) -> Edge {
        edge(self.vertices[u].clone(), self.vertices[v].clone())
    }

    /// Edges by name with their weights.
    pub fn named_edges(&self) -> BTreeMap<Edge, Rational> {
        self.edges().into_iter().map(|(u, v, w)| (self.edge_name(u, v), w)).collect()
    }

    pub fn edge_names(&self) -> BTreeSet<Edge> {
        self.named_edges().into_keys().collect()
    }

    pub fn total_weight(&self) -> Rational {
        self.edges().iter().map(|(_, _, w)| *w).sum()
    }

    pub fn is_connected(&self) -> bool {
        self.first_unreachable().is_none()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.vertex_count()
    }

    /// True iff the vertex set is exactly `[n]`.
    pub fn all_labelled(&self) -> bool {
        self.vertices.len() == self.n && self.vertices.iter().all(Vertex::is_labelled)
    }

    /// Subgraph on the given vertex indices and edges, keeping this graph's vertex order.
    pub(crate) fn subgraph(&self, keep: &[bool], edges: &[(usize, usize)]) -> WeightedGraph {
        let mut remap = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for (ix, v) in self.vertices.iter().enumerate() {
            if keep[ix] {
                remap[ix] = vertices.len();
                vertices.push(v.clone());
            }
        }
        let edges = edges.iter().map(|&(u, v)| {
            let w = self.weight(u, v).expect("subgraph edge exists in parent");
            (remap[u], remap[v], w)
        });
        WeightedGraph::from_parts(self.n, vertices, edges.collect::<Vec<_>>(), self.mode)
    }

    pub fn to_raw(&self) -> RawGraph {
        RawGraph {
            n: self.n,
            extra: self
                .vertices
                .iter()
                .filter_map(|v| match v {
                    Vertex::Extra(name) => Some(name.clone()),
                    Vertex::Label(_) => None,
                })
                .collect(),
            edges: self
                .edges()
                .into_iter()
                .map(|(u, v, w)| (self.vertices[u].to_string(), self.vertices[v].to_string(), w))
                .collect(),
        }
    }
}

impl PartialEq for WeightedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.mode == other.mode
            && self.vertices.iter().collect::<BTreeSet<_>>() == other.vertices.iter().collect::<BTreeSet<_>>()
            && self.named_edges() == other.named_edges()
    }
}

impl fmt::Debug for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("WeightedGraph")
            .field("n", &self.n)
            .field("vertices", &self.vertices)
            .field("edges", &self.named_edges())
            .finish()
    }
}
