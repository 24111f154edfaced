//! Multiweights: `D_S` is the least total weight of a connected subgraph whose
//! vertex set contains `S`.
//!
//! Three independent routes compute it:
//!
//! - [`multiweight_graph`]: exact terminal-subset dynamic programming
//!   (Dreyfus–Wagner style, with shortest-path relaxation per subset);
//! - [`multiweight_oracle`]: enumerate every vertex set `U ⊇ S` and take the
//!   cheapest minimum spanning tree of an induced connected subgraph;
//! - [`pair_tree_min`]: from 2-weights alone, the least `Σ D_I` over trees on
//!   label pairs whose leaves lie in `S` and whose vertices cover `S`.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

use crate::error::{Error, Result};
use crate::family::{MultiweightFamily, PairTable};
use crate::graph::{Vertex, WeightedGraph};
use crate::rational::Rational;
use crate::subset::SubsetKey;
use crate::tree::{label_vertices, WeightedTree};

/// Vertex-count limit for [`multiweight_oracle`].
pub const ORACLE_LIMIT: usize = 12;

/// A minimum value together with one subtree attaining it.
#[derive(Clone, Debug)]
pub struct SteinerResult {
    pub value: Rational,
    pub realizer: WeightedTree,
}

fn terminal_indices(g: &WeightedGraph, s: SubsetKey) -> Result<Vec<usize>> {
    if s.len() < 2 {
        return Err(Error::BadParameters(format!("subset {{{s}}} needs at least two labels")));
    }
    s.members().map(|l| g.require_index(&Vertex::Label(l))).collect()
}

/// Weight of the minimal subtree of `t` spanning the labels in `s`.
pub fn multiweight_tree(t: &WeightedTree, s: SubsetKey) -> Result<Rational> {
    if s.len() < 2 {
        return Err(Error::BadParameters(format!("subset {{{s}}} needs at least two labels")));
    }
    Ok(t.induced_subtree(&label_vertices(s))?.total_weight())
}

#[derive(Clone, Copy)]
enum Back {
    Unset,
    Terminal,
    Split(usize),
    Edge(usize),
}

/// `cost[mask][v]`: least weight of a tree containing the terminals in `mask` and `v`.
struct SteinerTable {
    cost: Vec<Vec<Option<Rational>>>,
    back: Option<Vec<Vec<Back>>>,
}

impl SteinerTable {
    fn build(g: &WeightedGraph, terminals: &[usize], track: bool) -> SteinerTable {
        let k = terminals.len();
        assert!(k < usize::BITS as usize - 1, "too many terminals");
        let masks = 1usize << k;
        let nv = g.vertex_count();
        let mut cost = vec![Vec::new(); masks];
        let mut back = track.then(|| vec![Vec::new(); masks]);

        for mask in 1..masks {
            let mut row = vec![None; nv];
            let mut brow = vec![Back::Unset; if track { nv } else { 0 }];
            if mask.count_ones() == 1 {
                let t = terminals[mask.trailing_zeros() as usize];
                row[t] = Some(Rational::ZERO);
                if track {
                    brow[t] = Back::Terminal;
                }
            } else {
                let low = mask & mask.wrapping_neg();
                for v in 0..nv {
                    let mut sub = (mask - 1) & mask;
                    while sub > 0 {
                        if sub & low != 0 {
                            if let (Some(a), Some(b)) = (cost[sub][v], cost[mask ^ sub][v]) {
                                let cand = a + b;
                                if row[v].is_none_or(|cur| cand < cur) {
                                    row[v] = Some(cand);
                                    if track {
                                        brow[v] = Back::Split(sub);
                                    }
                                }
                            }
                        }
                        sub = (sub - 1) & mask;
                    }
                }
            }
            relax(g, &mut row, track.then_some(&mut brow));
            cost[mask] = row;
            if let Some(back) = back.as_mut() {
                back[mask] = brow;
            }
        }
        SteinerTable { cost, back }
    }

    fn value(&self, mask: usize) -> Option<(Rational, usize)> {
        self.cost[mask].iter().enumerate().filter_map(|(v, c)| c.map(|c| (c, v))).min()
    }

    fn collect_edges(&self, mask: usize, v: usize, out: &mut BTreeSet<(usize, usize)>) {
        let back = self.back.as_ref().expect("back pointers tracked");
        let mut v = v;
        loop {
            match back[mask][v] {
                Back::Unset => unreachable!("unreached vertex on reconstruction path"),
                Back::Terminal => return,
                Back::Split(sub) => {
                    self.collect_edges(sub, v, out);
                    self.collect_edges(mask ^ sub, v, out);
                    return;
                }
                Back::Edge(u) => {
                    out.insert((u.min(v), u.max(v)));
                    v = u;
                }
            }
        }
    }
}

/// Dijkstra from every finite entry of `row` at once.
fn relax(g: &WeightedGraph, row: &mut [Option<Rational>], mut back: Option<&mut Vec<Back>>) {
    let mut heap: BinaryHeap<Reverse<(Rational, usize)>> =
        row.iter().enumerate().filter_map(|(v, c)| c.map(|c| Reverse((c, v)))).collect();
    let mut done = vec![false; row.len()];
    while let Some(Reverse((d, u))) = heap.pop() {
        if done[u] || row[u] != Some(d) {
            continue;
        }
        done[u] = true;
        for (v, w) in g.neighbors(u) {
            let cand = d + w;
            if !done[v] && row[v].is_none_or(|cur| cand < cur) {
                row[v] = Some(cand);
                if let Some(back) = back.as_deref_mut() {
                    back[v] = Back::Edge(u);
                }
                heap.push(Reverse((cand, v)));
            }
        }
    }
}

/// Least-weight connected subgraph of `g` containing the labels in `s`, with a
/// realizing subtree. Unlabelled vertices and labels outside `s` are optional
/// Steiner points.
pub fn multiweight_graph(g: &WeightedGraph, s: SubsetKey) -> Result<SteinerResult> {
    let terminals = terminal_indices(g, s)?;
    let table = SteinerTable::build(g, &terminals, true);
    let full = (1usize << terminals.len()) - 1;
    let (value, root) = table.value(full).ok_or_else(|| Error::Internal("terminals are not connected".into()))?;
    let mut edges = BTreeSet::new();
    table.collect_edges(full, root, &mut edges);
    let realizer = prune_to_tree(g, &terminals, edges);
    if realizer.total_weight() != value {
        return Err(Error::Internal(format!(
            "realizer weight {} differs from optimum {value}",
            realizer.total_weight()
        )));
    }
    Ok(SteinerResult { value, realizer })
}

/// Reduces a connected edge set to a tree whose leaves are all terminals.
/// Only zero-weight edges can be dropped here.
fn prune_to_tree(g: &WeightedGraph, terminals: &[usize], edges: BTreeSet<(usize, usize)>) -> WeightedTree {
    let nv = g.vertex_count();
    let mut root: Vec<usize> = (0..nv).collect();
    fn find(root: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while root[x] != x {
            root[x] = root[root[x]];
            x = root[x];
        }
        x
    }
    let mut kept: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (u, v) in edges {
        let (ru, rv) = (find(&mut root, u), find(&mut root, v));
        if ru != rv {
            root[ru] = rv;
            kept.insert((u, v));
        }
    }
    let mut is_terminal = vec![false; nv];
    for &t in terminals {
        is_terminal[t] = true;
    }
    loop {
        let mut degree = vec![0usize; nv];
        for &(u, v) in &kept {
            degree[u] += 1;
            degree[v] += 1;
        }
        let before = kept.len();
        kept.retain(|&(u, v)| !(degree[u] == 1 && !is_terminal[u] || degree[v] == 1 && !is_terminal[v]));
        if kept.len() == before {
            break;
        }
    }
    let mut keep = vec![false; nv];
    for &(u, v) in &kept {
        keep[u] = true;
        keep[v] = true;
    }
    for &t in terminals {
        keep[t] = true;
    }
    let edges: Vec<(usize, usize)> = kept.into_iter().collect();
    WeightedTree::from_graph(g.subgraph(&keep, &edges)).expect("pruned spanning forest is a tree")
}

/// Exhaustive minimum: over every vertex set `U ⊇ S` whose induced subgraph is
/// connected, the weight of its minimum spanning tree. Limited to
/// [`ORACLE_LIMIT`] vertices.
pub fn multiweight_oracle(g: &WeightedGraph, s: SubsetKey) -> Result<Rational> {
    let nv = g.vertex_count();
    if nv > ORACLE_LIMIT {
        return Err(Error::TooLarge { what: "oracle graph", size: nv, limit: ORACLE_LIMIT });
    }
    let terminals = terminal_indices(g, s)?;
    let required: u32 = terminals.iter().map(|&t| 1u32 << t).sum();
    let optional: Vec<usize> = (0..nv).filter(|v| required & (1 << v) == 0).collect();
    let mut best: Option<Rational> = None;
    for extra in 0u32..(1 << optional.len()) {
        let mut members = required;
        for (bit, &v) in optional.iter().enumerate() {
            if extra & (1 << bit) != 0 {
                members |= 1 << v;
            }
        }
        if let Some(w) = induced_mst(g, members) {
            if best.is_none_or(|b| w < b) {
                best = Some(w);
            }
        }
    }
    best.ok_or_else(|| Error::Internal("no connected vertex set contains the terminals".into()))
}

/// Prim's algorithm on the subgraph induced by `members`; `None` if disconnected.
fn induced_mst(g: &WeightedGraph, members: u32) -> Option<Rational> {
    let verts: Vec<usize> = (0..g.vertex_count()).filter(|v| members & (1 << v) != 0).collect();
    let mut in_tree = vec![false; g.vertex_count()];
    let mut key: Vec<Option<Rational>> = vec![None; g.vertex_count()];
    key[verts[0]] = Some(Rational::ZERO);
    let mut total = Rational::ZERO;
    for _ in 0..verts.len() {
        let (u, k) = verts
            .iter()
            .filter(|&&v| !in_tree[v])
            .filter_map(|&v| key[v].map(|k| (v, k)))
            .min_by_key(|&(v, k)| (k, v))?;
        in_tree[u] = true;
        total += k;
        for (v, w) in g.neighbors(u) {
            if members & (1 << v) != 0 && !in_tree[v] && key[v].is_none_or(|kv| w < kv) {
                key[v] = Some(w);
            }
        }
    }
    Some(total)
}

/// Least `Σ_{I ∈ X} D_I` over sets `X` of label pairs forming a tree `G_X`
/// with every leaf in `s` and `s ⊆ V(G_X)`, computed from the 2-weights only.
///
/// For each vertex set `U ⊇ s` the cheapest tree on `U` is its minimum
/// spanning tree in the complete graph weighted by `D`; candidates with a leaf
/// outside `s` are skipped since dropping that leaf gives a cheaper candidate
/// on a smaller vertex set.
pub fn pair_tree_min(pairs: &PairTable, s: SubsetKey) -> Rational {
    let n = pairs.n();
    assert!(s.len() >= 2 && s.max_label() <= n, "subset {{{s}}} must have two labels in [{n}]");
    let optional: Vec<usize> = (1..=n).filter(|&l| !s.contains(l)).collect();
    let mut best: Option<Rational> = None;
    let mut members = Vec::with_capacity(n);
    for extra in 0u64..(1 << optional.len()) {
        members.clear();
        members.extend(s.members());
        for (bit, &l) in optional.iter().enumerate() {
            if extra & (1 << bit) != 0 {
                members.push(l);
            }
        }
        let (weight, degree) = complete_mst(pairs, &members);
        let leaves_ok = members.iter().zip(&degree).all(|(&l, &d)| d != 1 || s.contains(l));
        if leaves_ok && best.is_none_or(|b| weight < b) {
            best = Some(weight);
        }
    }
    best.expect("U = S is always a candidate")
}

/// Minimum spanning tree of the complete graph on `members` weighted by `pairs`;
/// returns its weight and the degree of each member.
fn complete_mst(pairs: &PairTable, members: &[usize]) -> (Rational, Vec<usize>) {
    let m = members.len();
    let mut in_tree = vec![false; m];
    let mut key: Vec<Option<(Rational, usize)>> = vec![None; m];
    let mut degree = vec![0usize; m];
    let mut total = Rational::ZERO;
    in_tree[0] = true;
    for j in 1..m {
        key[j] = Some((pairs.get(members[0], members[j]), 0));
    }
    for _ in 1..m {
        let (j, (w, parent)) = (0..m)
            .filter(|&j| !in_tree[j])
            .map(|j| (j, key[j].expect("complete graph")))
            .min_by_key(|&(j, (w, _))| (w, j))
            .expect("vertices remain");
        in_tree[j] = true;
        total += w;
        degree[j] += 1;
        degree[parent] += 1;
        for k in 0..m {
            if !in_tree[k] {
                let wk = pairs.get(members[j], members[k]);
                if key[k].is_none_or(|(cur, _)| wk < cur) {
                    key[k] = Some((wk, j));
                }
            }
        }
    }
    (total, degree)
}

/// Full multiweight family of `g` over subsets of its labels, via one dynamic
/// program with every label as a terminal.
pub fn family_of(g: &WeightedGraph) -> Result<MultiweightFamily> {
    let n = g.n();
    let terminals: Vec<usize> = (1..=n).map(|l| g.require_index(&Vertex::Label(l))).collect::<Result<_>>()?;
    let table = SteinerTable::build(g, &terminals, false);
    let mut values = BTreeMap::new();
    for mask in 1usize..(1 << n) {
        if mask.count_ones() >= 2 {
            let (value, _) = table.value(mask).ok_or_else(|| Error::Internal("labels are not connected".into()))?;
            values.insert(SubsetKey::from_mask(mask as u64), value);
        }
    }
    MultiweightFamily::new(n, values)
}

/// Full multiweight family of a tree via minimal subtrees.
pub fn family_of_tree(t: &WeightedTree) -> Result<MultiweightFamily> {
    let mut values = BTreeMap::new();
    for s in SubsetKey::all(t.n(), 2) {
        values.insert(s, multiweight_tree(t, s)?);
    }
    MultiweightFamily::new(t.n(), values)
}
