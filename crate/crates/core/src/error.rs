use thiserror::Error;

use crate::rational::Rational;
use crate::verdict::Verdict;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph is disconnected: vertex {vertex} is unreachable from {root}")]
    Disconnected { root: String, vertex: String },

    #[error("self-loop at vertex {0}")]
    SelfLoop(String),

    #[error("parallel edge {0}--{1}")]
    ParallelEdge(String, String),

    #[error("edge {u}--{v} has weight {weight}, outside the allowed sign regime")]
    NonpositiveWeight { u: String, v: String, weight: Rational },

    #[error("unknown vertex {0}")]
    UnknownVertex(String),

    #[error("duplicate vertex {0}")]
    DuplicateVertex(String),

    #[error("graph is not a tree: {0}")]
    NotATree(String),

    #[error("vertex {0} is not a leaf")]
    NotALeaf(String),

    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("duplicate key {0}")]
    DuplicateKey(String),

    #[error("missing pair value D_{{{0},{1}}}")]
    MissingPair(usize, usize),

    #[error("value for {key} is {value}, expected a positive number")]
    NonpositiveValue { key: String, value: Rational },

    #[error("family is incomplete: missing D_{{{0}}}")]
    IncompleteFamily(String),

    #[error("{what} has {size} vertices, limit is {limit}")]
    TooLarge { what: &'static str, size: usize, limit: usize },

    #[error("quartet {quartet:?} does not satisfy the 4-point condition (sums {sums:?})")]
    NotTreelike { quartet: [usize; 4], sums: Box<[Rational; 3]> },

    #[error(
        "quartets {first:?} and {second:?} share an L-set pair but have bridge lengths {} and {}",
        lengths[0],
        lengths[1]
    )]
    InconsistentClass { first: [usize; 4], second: [usize; 4], lengths: Box<[Rational; 2]> },

    #[error("family is not realizable by a positive-weighted graph")]
    NotGraphlike(Box<Verdict>),

    #[error("family is not realizable by a tree on labelled vertices")]
    NotTreeRealizable(Box<Verdict>),

    #[error("pairwise values fail the 4-point or triangle condition")]
    NotFourPoint(Box<Verdict>),

    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("internal error: {0}")]
    Internal(String),
}
