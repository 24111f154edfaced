//! Multiweights of weighted graphs and trees.
//!
//! For a weighted graph `G` labelled by `[n]`, the multiweight `D_S` of a label
//! set `S` is the weight of a lightest connected subgraph containing `S`. This
//! crate computes these families, decides whether a given family can come from
//! a graph, a tree, or a tree labelled at its leaves, and builds realizing
//! graphs and trees when it can. All arithmetic is exact.
//!
//! ```
//! use mwkit_core::{family_of_tree, check_treelike, parse_graph, WeightedTree};
//!
//! let g = parse_graph(r#"{"n": 3, "edges": [["1", "2", "2"], ["2", "3", "3"]]}"#).unwrap();
//! let f = family_of_tree(&WeightedTree::from_graph(g).unwrap()).unwrap();
//! assert_eq!(f.get("1,2,3".parse().unwrap()).unwrap().to_string(), "5");
//! assert!(check_treelike(&f).unwrap().accepted);
//! ```

pub mod checkers;
pub mod error;
pub mod family;
pub mod gen;
pub mod graph;
pub mod io;
pub mod multiweight;
pub mod quartets;
pub mod rational;
pub mod realize;
pub mod subset;
pub mod tree;
pub mod verdict;

pub use checkers::{
    check_diversity, check_graphlike, check_leaf_treelike, check_treelike, leaf_tree_weight, three_subset_weight,
    witness_reproduces,
};
pub use error::{Error, Result};
pub use family::{Completeness, MultiweightFamily, PairTable};
pub use gen::{gen, InstanceKind};
pub use graph::{edge, validate_graph, Edge, RawGraph, Vertex, WeightMode, WeightedGraph};
pub use io::{parse_family, parse_graph, parse_raw_graph, to_dot, write_family, write_graph};
pub use multiweight::{
    family_of, family_of_tree, multiweight_graph, multiweight_oracle, multiweight_tree, pair_tree_min, SteinerResult,
};
pub use quartets::{
    bridge_length, classes_for_subset, four_point_check, l_set, median_check, quartet_classes, quartet_split,
    triangle_check, QuartetClass, QuartetSplit,
};
pub use rational::Rational;
pub use realize::{realize_graph, realize_leaf_tree, realize_tree};
pub use subset::SubsetKey;
pub use tree::WeightedTree;
pub use verdict::{Check, Coverage, Criterion, Pairing, Verdict, Witness};
