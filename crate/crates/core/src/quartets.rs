//! Conditions and structure derived from 2-weights alone: triangle
//! inequalities, the 4-point condition, medians, quartet splits, L-sets and
//! quartet classes.
//!
//! All functions take a [`PairTable`]; build one with
//! [`MultiweightFamily::pairs`](crate::family::MultiweightFamily::pairs), which
//! reports a missing 2-subset as [`Error::MissingPair`].

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::PairTable;
use crate::rational::Rational;
use crate::subset::SubsetKey;
use crate::verdict::{Check, Criterion, Pairing, Verdict, Witness};

/// Accepts iff `D_{i,j} <= D_{i,k} + D_{j,k}` for every triple.
pub fn triangle_check(p: &PairTable) -> Verdict {
    let n = p.n();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for (x, y, via) in [(i, j, k), (i, k, j), (j, k, i)] {
                    let direct = p.get(x, y);
                    let detour = p.get(x, via) + p.get(y, via);
                    if direct > detour {
                        return Verdict::reject(
                            Check::Triangle,
                            Criterion::Triangle,
                            Witness::Triangle { pair: [x, y], via, direct, detour },
                        );
                    }
                }
            }
        }
    }
    Verdict::accept(Check::Triangle)
}

/// The three pairings of `{a,b,c,d}` with their sums, largest first.
pub fn pairings(p: &PairTable, [a, b, c, d]: [usize; 4]) -> [Pairing; 3] {
    let mut out = [
        Pairing { split: [[a, b], [c, d]], sum: p.get(a, b) + p.get(c, d) },
        Pairing { split: [[a, c], [b, d]], sum: p.get(a, c) + p.get(b, d) },
        Pairing { split: [[a, d], [b, c]], sum: p.get(a, d) + p.get(b, c) },
    ];
    out.sort_by_key(|x| std::cmp::Reverse(x.sum));
    out
}

/// Accepts iff for every 4-subset the largest of the three pair sums is attained at least twice.
pub fn four_point_check(p: &PairTable) -> Verdict {
    let n = p.n();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    let sorted = pairings(p, [a, b, c, d]);
                    if sorted[0].sum != sorted[1].sum {
                        return Verdict::reject(
                            Check::FourPoint,
                            Criterion::FourPoint,
                            Witness::FourPoint { quartet: [a, b, c, d], pairings: sorted },
                        );
                    }
                }
            }
        }
    }
    Verdict::accept(Check::FourPoint)
}

/// Median of each triple `a < b < c`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct MedianMap(BTreeMap<[usize; 3], usize>);

impl MedianMap {
    /// Median of the triple, in any order.
    pub fn get(&self, triple: [usize; 3]) -> Option<usize> {
        let mut t = triple;
        t.sort_unstable();
        self.0.get(&t).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = ([usize; 3], usize)> + '_ {
        self.0.iter().map(|(t, m)| (*t, *m))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Labels `m` with `D_{i,j} = D_{i,m} + D_{j,m}` for all distinct `i, j` in the
/// triple, under `D_{x,x} = 0` (so a member of the triple can be its median).
pub fn medians_of(p: &PairTable, [a, b, c]: [usize; 3]) -> Vec<usize> {
    (1..=p.n())
        .filter(|&m| {
            p.get(a, b) == p.get(a, m) + p.get(b, m)
                && p.get(a, c) == p.get(a, m) + p.get(c, m)
                && p.get(b, c) == p.get(b, m) + p.get(c, m)
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct MedianOutcome {
    pub verdict: Verdict,
    /// Present iff the verdict accepts.
    pub medians: Option<MedianMap>,
}

/// Accepts iff every triple has exactly one median in `[n]`.
pub fn median_check(p: &PairTable) -> MedianOutcome {
    let n = p.n();
    let mut map = BTreeMap::new();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                let medians = medians_of(p, [a, b, c]);
                if medians.len() != 1 {
                    return MedianOutcome {
                        verdict: Verdict::reject(
                            Check::Median,
                            Criterion::Median,
                            Witness::Median { triple: [a, b, c], medians },
                        ),
                        medians: None,
                    };
                }
                map.insert([a, b, c], medians[0]);
            }
        }
    }
    MedianOutcome { verdict: Verdict::accept(Check::Median), medians: Some(MedianMap(map)) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum QuartetSplit {
    /// `a b | c d`: each pair sorted, pairs ordered by first element.
    Split { pairs: [[usize; 2]; 2] },
    /// All three pair sums equal.
    Degenerate,
}

fn check_quad(p: &PairTable, quad: [usize; 4]) -> Result<()> {
    for (i, &x) in quad.iter().enumerate() {
        if x == 0 || x > p.n() {
            return Err(Error::UnknownVertex(x.to_string()));
        }
        if quad[..i].contains(&x) {
            return Err(Error::BadParameters(format!("quartet {quad:?} repeats label {x}")));
        }
    }
    Ok(())
}

fn normalize_split(mut pairs: [[usize; 2]; 2]) -> [[usize; 2]; 2] {
    for pair in &mut pairs {
        pair.sort_unstable();
    }
    pairs.sort_unstable();
    pairs
}

/// Topology of a quartet read off the three pair sums. The labels may be in any order.
pub fn quartet_split(p: &PairTable, quad: [usize; 4]) -> Result<QuartetSplit> {
    check_quad(p, quad)?;
    let sorted = pairings(p, quad);
    let sums = [sorted[0].sum, sorted[1].sum, sorted[2].sum];
    if sums[0] != sums[1] {
        let mut q = quad;
        q.sort_unstable();
        return Err(Error::NotTreelike { quartet: q, sums: Box::new(sums) });
    }
    if sums[1] == sums[2] {
        return Ok(QuartetSplit::Degenerate);
    }
    Ok(QuartetSplit::Split { pairs: normalize_split(sorted[2].split) })
}

/// True iff `D_{a,b} + D_{c,d} < D_{a,c} + D_{b,d} = D_{a,d} + D_{b,c}`.
pub fn strict_split(p: &PairTable, [a, b, c, d]: [usize; 4]) -> bool {
    let low = p.get(a, b) + p.get(c, d);
    let x = p.get(a, c) + p.get(b, d);
    low < x && x == p.get(a, d) + p.get(b, c)
}

/// `(D_{a,c} + D_{b,d} - D_{a,b} - D_{c,d}) / 2`.
pub fn bridge_length(p: &PairTable, [a, b, c, d]: [usize; 4]) -> Rational {
    (p.get(a, c) + p.get(b, d) - p.get(a, b) - p.get(c, d)).half()
}

fn constant_offset(p: &PairTable, x: usize, base: usize, zs: [usize; 3]) -> bool {
    let first = p.get(x, zs[0]) - p.get(base, zs[0]);
    zs[1..].iter().all(|&z| p.get(x, z) - p.get(base, z) == first)
}

/// `L_{a,b}` relative to `{a,b,c,d}`: `a`, `b`, and every other label `x` for
/// which `D_{x,z} - D_{a,z}` is the same for `z ∈ {b,c,d}` or `D_{x,z} - D_{b,z}`
/// is the same for `z ∈ {a,c,d}`.
///
/// Computed as written whatever the quartet's topology. When `a b | c d` holds
/// in a tree these are the leaves whose attachment point to the quartet's
/// subtree lies on the path from `a` to `b`.
pub fn l_set(p: &PairTable, quad: [usize; 4]) -> Result<SubsetKey> {
    check_quad(p, quad)?;
    let [a, b, c, d] = quad;
    let mut out = SubsetKey::singleton(a).insert(b);
    for x in (1..=p.n()).filter(|x| !quad.contains(x)) {
        if constant_offset(p, x, a, [b, c, d]) || constant_offset(p, x, b, [a, c, d]) {
            out = out.insert(x);
        }
    }
    Ok(out)
}

/// An equivalence class of quartets `(a,b,c,d)` with a strict split whose two
/// L-sets cover `[n]`, keyed by that unordered L-set pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuartetClass {
    /// The two L-sets, smaller in subset order first.
    pub lsets: (SubsetKey, SubsetKey),
    pub bridge_length: Rational,
    /// Quartets in the class as `(a,b,c,d)` with `a < b`, `c < d`, `a < c`.
    pub representatives: Vec<[usize; 4]>,
}

impl QuartetClass {
    /// Product of the sizes of the L-sets' intersections with `s`.
    pub fn q(&self, s: SubsetKey) -> usize {
        self.lsets.0.intersection(s).len() * self.lsets.1.intersection(s).len()
    }
}

/// All quartet classes, in order of their L-set pairs.
///
/// Each unordered split is visited once through its sorted representative; the
/// other seven orderings of the same split yield the same two L-sets, so the
/// classes are the same as over all ordered 4-tuples.
pub fn quartet_classes(p: &PairTable) -> Result<Vec<QuartetClass>> {
    let n = p.n();
    let full = SubsetKey::full(n);
    let mut classes: BTreeMap<(SubsetKey, SubsetKey), QuartetClass> = BTreeMap::new();
    for w in 1..=n {
        for x in w + 1..=n {
            for y in x + 1..=n {
                for z in y + 1..=n {
                    for quad in [[w, x, y, z], [w, y, x, z], [w, z, x, y]] {
                        if !strict_split(p, quad) {
                            continue;
                        }
                        let [a, b, c, d] = quad;
                        let left = l_set(p, quad)?;
                        let right = l_set(p, [c, d, a, b])?;
                        if left.union(right) != full {
                            continue;
                        }
                        let key = if left <= right { (left, right) } else { (right, left) };
                        let length = bridge_length(p, quad);
                        let class = classes.entry(key).or_insert_with(|| QuartetClass {
                            lsets: key,
                            bridge_length: length,
                            representatives: Vec::new(),
                        });
                        if class.bridge_length != length {
                            return Err(Error::InconsistentClass {
                                first: class.representatives[0],
                                second: quad,
                                lengths: Box::new([class.bridge_length, length]),
                            });
                        }
                        class.representatives.push(quad);
                    }
                }
            }
        }
    }
    Ok(classes.into_values().collect())
}

/// Classes whose two L-sets both meet `s`, each with its count `q(S)`.
pub fn classes_for_subset(classes: &[QuartetClass], s: SubsetKey) -> Vec<(&QuartetClass, usize)> {
    classes
        .iter()
        .filter(|c| !c.lsets.0.intersection(s).is_empty() && !c.lsets.1.intersection(s).is_empty())
        .map(|c| (c, c.q(s)))
        .collect()
}
