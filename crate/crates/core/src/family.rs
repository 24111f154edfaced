//! Families of multiweights `{D_S}` indexed by subsets of `[n]` with at least two members.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::subset::{SubsetKey, MAX_LABEL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Completeness {
    /// Every subset of size at least 2 is present.
    Full,
    /// Exactly the 2-subsets are present.
    PairsOnly,
    Partial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiweightFamily {
    n: usize,
    values: BTreeMap<SubsetKey, Rational>,
    completeness: Completeness,
}

fn classify(n: usize, values: &BTreeMap<SubsetKey, Rational>) -> Completeness {
    let pairs = n * n.saturating_sub(1) / 2;
    let pair_count = values.keys().filter(|k| k.len() == 2).count();
    let full = if n >= MAX_LABEL { u128::MAX } else { (1u128 << n) - n as u128 - 1 };
    if values.len() as u128 == full {
        Completeness::Full
    } else if pair_count == pairs && values.len() == pairs {
        Completeness::PairsOnly
    } else {
        Completeness::Partial
    }
}

impl MultiweightFamily {
    /// Validates keys (subsets of `[n]` with at least two members) and positivity.
    pub fn new(n: usize, values: BTreeMap<SubsetKey, Rational>) -> Result<Self> {
        if n == 0 || n > MAX_LABEL {
            return Err(Error::BadParameters(format!("n = {n} outside 1..={MAX_LABEL}")));
        }
        for (key, value) in &values {
            if key.len() < 2 {
                return Err(Error::Syntax(format!("subset {{{key}}} has fewer than two members")));
            }
            if key.max_label() > n {
                return Err(Error::Syntax(format!("subset {{{key}}} is not contained in [{n}]")));
            }
            if !value.is_positive() {
                return Err(Error::NonpositiveValue { key: key.to_string(), value: *value });
            }
        }
        let completeness = classify(n, &values);
        Ok(MultiweightFamily { n, values, completeness })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn completeness(&self) -> Completeness {
        self.completeness
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn get(&self, s: SubsetKey) -> Option<Rational> {
        self.values.get(&s).copied()
    }

    pub fn require(&self, s: SubsetKey) -> Result<Rational> {
        self.get(s).ok_or_else(|| Error::IncompleteFamily(s.to_string()))
    }

    pub fn pair(&self, i: usize, j: usize) -> Option<Rational> {
        if i == j || i == 0 || j == 0 || i > self.n || j > self.n {
            return None;
        }
        self.get(SubsetKey::singleton(i).insert(j))
    }

    /// Entries in lexicographic subset order.
    pub fn iter(&self) -> impl Iterator<Item = (SubsetKey, Rational)> + '_ {
        self.values.iter().map(|(k, v)| (*k, *v))
    }

    pub fn values(&self) -> &BTreeMap<SubsetKey, Rational> {
        &self.values
    }

    pub fn require_full(&self) -> Result<()> {
        if self.completeness == Completeness::Full {
            return Ok(());
        }
        let missing = SubsetKey::all(self.n, 2)
            .into_iter()
            .find(|s| !self.values.contains_key(s))
            .expect("non-full family misses a subset");
        Err(Error::IncompleteFamily(missing.to_string()))
    }

    /// Copy with `D_S` replaced. Used for perturbation checks.
    pub fn with_value(&self, s: SubsetKey, value: Rational) -> Result<Self> {
        let mut values = self.values.clone();
        values.insert(s, value);
        MultiweightFamily::new(self.n, values)
    }

    /// The 2-subset restriction as a dense table.
    pub fn pairs(&self) -> Result<PairTable> {
        PairTable::from_family(self)
    }
}

/// All 2-weights of a family as a dense symmetric matrix with zero diagonal.
/// Labels are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairTable {
    n: usize,
    d: Vec<Rational>,
}

impl PairTable {
    pub fn from_family(f: &MultiweightFamily) -> Result<PairTable> {
        let n = f.n();
        let mut d = vec![Rational::ZERO; n * n];
        for i in 1..=n {
            for j in i + 1..=n {
                let v = f.pair(i, j).ok_or(Error::MissingPair(i, j))?;
                d[(i - 1) * n + (j - 1)] = v;
                d[(j - 1) * n + (i - 1)] = v;
            }
        }
        Ok(PairTable { n, d })
    }

    /// Builds a table from a function on `i < j`. Values must be positive.
    pub fn from_fn(n: usize, mut value: impl FnMut(usize, usize) -> Rational) -> Result<PairTable> {
        let mut d = vec![Rational::ZERO; n * n];
        for i in 1..=n {
            for j in i + 1..=n {
                let v = value(i, j);
                if !v.is_positive() {
                    return Err(Error::NonpositiveValue { key: format!("{i},{j}"), value: v });
                }
                d[(i - 1) * n + (j - 1)] = v;
                d[(j - 1) * n + (i - 1)] = v;
            }
        }
        Ok(PairTable { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `D_{i,j}`, with `D_{i,i} = 0`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.d[(i - 1) * self.n + (j - 1)]
    }

    /// Sum of `D_{i,j}` over the 2-subsets of `s`.
    pub fn pair_sum(&self, s: SubsetKey) -> Rational {
        let members = s.to_vec();
        let mut total = Rational::ZERO;
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                total += self.get(i, j);
            }
        }
        total
    }

    pub fn to_family(&self) -> MultiweightFamily {
        let mut values = BTreeMap::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                values.insert(SubsetKey::singleton(i).insert(j), self.get(i, j));
            }
        }
        MultiweightFamily::new(self.n, values).expect("pair table values are positive")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(s: &str) -> SubsetKey {
        s.parse().unwrap()
    }

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn completeness_flags() {
        let mut values = BTreeMap::from([(k("1,2"), r("1")), (k("1,3"), r("1")), (k("2,3"), r("1"))]);
        assert_eq!(MultiweightFamily::new(3, values.clone()).unwrap().completeness(), Completeness::PairsOnly);
        values.insert(k("1,2,3"), r("2"));
        let f = MultiweightFamily::new(3, values.clone()).unwrap();
        assert_eq!(f.completeness(), Completeness::Full);
        assert_eq!(f.len(), 4);
        values.remove(&k("1,3"));
        let f = MultiweightFamily::new(3, values).unwrap();
        assert_eq!(f.completeness(), Completeness::Partial);
        assert!(matches!(f.require_full(), Err(Error::IncompleteFamily(s)) if s == "1,3"));
        assert!(matches!(f.pairs(), Err(Error::MissingPair(1, 3))));
    }

    #[test]
    fn rejects_bad_entries() {
        assert!(matches!(
            MultiweightFamily::new(3, BTreeMap::from([(k("1,2"), r("0"))])),
            Err(Error::NonpositiveValue { .. })
        ));
        assert!(MultiweightFamily::new(3, BTreeMap::from([(k("1,4"), r("1"))])).is_err());
        assert!(MultiweightFamily::new(3, BTreeMap::from([(k("1"), r("1"))])).is_err());
    }

    #[test]
    fn pair_table_is_symmetric() {
        let t = PairTable::from_fn(4, |i, j| Rational::from_integer((i * 10 + j) as i128)).unwrap();
        assert_eq!(t.get(2, 4), t.get(4, 2));
        assert_eq!(t.get(3, 3), Rational::ZERO);
        assert_eq!(t.pair_sum(k("1,2,3")), r("12") + r("13") + r("23"));
        assert_eq!(t.to_family().pairs().unwrap(), t);
    }
}
