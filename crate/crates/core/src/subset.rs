//! Subsets of the label set `[n] = {1, ..., n}`, stored as bitmasks.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest label a [`SubsetKey`] can hold.
pub const MAX_LABEL: usize = 64;

/// A set of labels from `[n]`. Bit `i - 1` is set iff label `i` is a member.
///
/// Ordering is lexicographic on the ascending member lists, so
/// `{1,2,3} < {1,2,3,4} < {1,2,4} < {1,3}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SubsetKey(u64);

impl SubsetKey {
    pub const EMPTY: SubsetKey = SubsetKey(0);

    pub fn from_mask(mask: u64) -> Self {
        SubsetKey(mask)
    }

    pub fn new(labels: &[usize]) -> Result<Self> {
        let mut mask = 0u64;
        for &label in labels {
            if label == 0 || label > MAX_LABEL {
                return Err(Error::Syntax(format!("label {label} out of range 1..={MAX_LABEL}")));
            }
            let bit = 1u64 << (label - 1);
            if mask & bit != 0 {
                return Err(Error::Syntax(format!("label {label} repeated in subset")));
            }
            mask |= bit;
        }
        Ok(SubsetKey(mask))
    }

    /// The full set `[n]`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_LABEL);
        if n == MAX_LABEL {
            SubsetKey(u64::MAX)
        } else {
            SubsetKey((1u64 << n) - 1)
        }
    }

    pub fn singleton(label: usize) -> Self {
        assert!((1..=MAX_LABEL).contains(&label));
        SubsetKey(1u64 << (label - 1))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, label: usize) -> bool {
        (1..=MAX_LABEL).contains(&label) && self.0 & (1u64 << (label - 1)) != 0
    }

    pub fn is_subset_of(self, other: SubsetKey) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: SubsetKey) -> SubsetKey {
        SubsetKey(self.0 | other.0)
    }

    pub fn intersection(self, other: SubsetKey) -> SubsetKey {
        SubsetKey(self.0 & other.0)
    }

    pub fn insert(self, label: usize) -> SubsetKey {
        self.union(SubsetKey::singleton(label))
    }

    /// Largest member, or 0 for the empty set.
    pub fn max_label(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Members in ascending order.
    pub fn members(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.members().collect()
    }

    /// All subsets of `[n]` with at least `min_size` members, in lexicographic order.
    pub fn all(n: usize, min_size: usize) -> Vec<SubsetKey> {
        assert!(n <= 24, "refusing to enumerate 2^{n} subsets");
        let mut out: Vec<SubsetKey> = (0..(1u64 << n)).map(SubsetKey).filter(|s| s.len() >= min_size).collect();
        out.sort();
        out
    }

    /// All `k`-subsets of `[n]`, in lexicographic order.
    pub fn of_size(n: usize, k: usize) -> Vec<SubsetKey> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(k);
        fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<SubsetKey>) {
            if current.len() == k {
                out.push(SubsetKey::new(current).expect("valid labels"));
                return;
            }
            for label in start..=n {
                if n - label + 1 < k - current.len() {
                    break;
                }
                current.push(label);
                rec(label + 1, n, k, current, out);
                current.pop();
            }
        }
        rec(1, n, k, &mut current, &mut out);
        out
    }
}

pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let bit = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(bit + 1)
    }
}

impl Ord for SubsetKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.members().cmp(other.members())
    }
}

impl PartialOrd for SubsetKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<usize> for SubsetKey {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(SubsetKey::EMPTY, SubsetKey::insert)
    }
}

impl fmt::Display for SubsetKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for label in self.members() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{label}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for SubsetKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for SubsetKey {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(SubsetKey::EMPTY);
        }
        let labels = s
            .split(',')
            .map(|part| part.trim().parse::<usize>().map_err(|_| Error::Syntax(format!("bad label {part:?} in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        SubsetKey::new(&labels)
    }
}

impl Serialize for SubsetKey {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SubsetKey {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
