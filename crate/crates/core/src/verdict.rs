use serde::{Deserialize, Serialize};

use crate::rational::Rational;
use crate::subset::SubsetKey;

/// Which decision procedure produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Graph,
    Tree,
    LeafTree,
    Diversity,
    Triangle,
    FourPoint,
    Median,
}

/// The individual condition that failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    Triangle,
    FourPoint,
    Median,
    /// `D_S` equals the least pair-tree sum over 2-weights.
    PairTreeMin,
    /// `D_S` equals half the pair sum, for `#S = 3`.
    ThreeSubsetFormula,
    /// Quartets sharing an L-set pair agree on the bridge length.
    QuartetClasses,
    /// The closed form for `#S >= 4` in terms of pair sums and quartet classes.
    LeafTreeFormula,
    DiversitySubadditivity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pairing {
    pub split: [[usize; 2]; 2],
    pub sum: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// `D_pair > D_{pair[0],via} + D_{pair[1],via}`.
    Triangle {
        pair: [usize; 2],
        via: usize,
        direct: Rational,
        detour: Rational,
    },
    /// The three pairings, largest sum first; the maximum is attained once.
    FourPoint {
        quartet: [usize; 4],
        pairings: [Pairing; 3],
    },
    /// A triple with zero or several medians.
    Median {
        triple: [usize; 3],
        medians: Vec<usize>,
    },
    /// `D_subset` was `found` but the condition requires `expected`.
    Subset {
        subset: SubsetKey,
        expected: Rational,
        found: Rational,
    },
    InconsistentClass {
        first: [usize; 4],
        first_length: Rational,
        second: [usize; 4],
        second_length: Rational,
    },
    /// `δ(a ∪ c) = lhs > rhs = δ(a ∪ b) + δ(b ∪ c)`.
    Diversity {
        a: SubsetKey,
        b: SubsetKey,
        c: SubsetKey,
        lhs: Rational,
        rhs: Rational,
    },
}

impl Witness {
    /// For four-point witnesses, the three pair sums in descending order.
    pub fn sums(&self) -> Option<[Rational; 3]> {
        match self {
            Witness::FourPoint { pairings, .. } => Some([pairings[0].sum, pairings[1].sum, pairings[2].sum]),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum Coverage {
    Exhaustive { triples: u64 },
    Sampled { samples: u64, seed: u64, threshold: usize },
}

/// Outcome of a check: accepted with no witness, or rejected with the first
/// violation in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: Check,
    pub accepted: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub criterion: Option<Criterion>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub coverage: Option<Coverage>,
}

impl Verdict {
    pub fn accept(check: Check) -> Verdict {
        Verdict { check, accepted: true, criterion: None, witness: None, coverage: None }
    }

    pub fn reject(check: Check, criterion: Criterion, witness: Witness) -> Verdict {
        Verdict { check, accepted: false, criterion: Some(criterion), witness: Some(witness), coverage: None }
    }

    /// Relabels a sub-check's verdict as coming from `check`.
    pub(crate) fn within(mut self, check: Check) -> Verdict {
        self.check = check;
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }
}
