//! Realizability deciders for complete multiweight families.
//!
//! Every checker walks subsets in lexicographic order and stops at the first
//! violation, so the witness is the lexicographically least one.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::family::{MultiweightFamily, PairTable};
use crate::multiweight::pair_tree_min;
use crate::quartets::{
    bridge_length, classes_for_subset, four_point_check, l_set, median_check, medians_of, pairings, quartet_classes,
    strict_split, QuartetClass,
};
use crate::rational::Rational;
use crate::subset::SubsetKey;
use crate::verdict::{Check, Coverage, Criterion, Verdict, Witness};

/// Above this many labels the diversity check samples instead of enumerating.
pub const DIVERSITY_EXHAUSTIVE_LIMIT: usize = 8;
pub const DIVERSITY_SAMPLES: u64 = 10_000;
pub const DIVERSITY_SEED: u64 = 0x6d77_6b69_7400;

fn subset_mismatch(check: Check, criterion: Criterion, s: SubsetKey, expected: Rational, found: Rational) -> Verdict {
    Verdict::reject(check, criterion, Witness::Subset { subset: s, expected, found })
}

/// Realizable by a positive-weighted graph with vertex set `[n]` iff the
/// triangle inequalities hold and every `D_S` (`#S >= 3`) equals the least
/// pair-tree sum.
pub fn check_graphlike(f: &MultiweightFamily) -> Result<Verdict> {
    f.require_full()?;
    let p = f.pairs()?;
    let triangle = crate::quartets::triangle_check(&p);
    if !triangle.accepted {
        return Ok(triangle.within(Check::Graph));
    }
    if let Some(v) = pair_tree_condition(f, &p, Check::Graph) {
        return Ok(v);
    }
    Ok(Verdict::accept(Check::Graph))
}

fn pair_tree_condition(f: &MultiweightFamily, p: &PairTable, check: Check) -> Option<Verdict> {
    for s in SubsetKey::all(f.n(), 3) {
        let expected = pair_tree_min(p, s);
        let found = f.get(s).expect("full family");
        if found != expected {
            return Some(subset_mismatch(check, Criterion::PairTreeMin, s, expected, found));
        }
    }
    None
}

/// Realizable by a positive-weighted tree with vertex set exactly `[n]` iff the
/// 4-point condition holds, the 2-weights form a median family, and the
/// pair-tree condition of [`check_graphlike`] holds.
pub fn check_treelike(f: &MultiweightFamily) -> Result<Verdict> {
    f.require_full()?;
    let p = f.pairs()?;
    let four = four_point_check(&p);
    if !four.accepted {
        return Ok(four.within(Check::Tree));
    }
    let median = median_check(&p).verdict;
    if !median.accepted {
        return Ok(median.within(Check::Tree));
    }
    if let Some(v) = pair_tree_condition(f, &p, Check::Tree) {
        return Ok(v);
    }
    Ok(Verdict::accept(Check::Tree))
}

/// `½ Σ D_{i,j}` over the pairs of a 3-subset.
pub fn three_subset_weight(p: &PairTable, s: SubsetKey) -> Rational {
    debug_assert_eq!(s.len(), 3);
    p.pair_sum(s).half()
}

/// Closed form for `#S >= 4`:
/// `(Σ_{pairs in S} D - Σ_{classes meeting S} bridge · (q(S) + 1 - #S)) / (#S - 1)`.
pub fn leaf_tree_weight(p: &PairTable, classes: &[QuartetClass], s: SubsetKey) -> Rational {
    let size = s.len() as i128;
    debug_assert!(size >= 4);
    let correction: Rational = classes_for_subset(classes, s)
        .into_iter()
        .map(|(class, q)| class.bridge_length * Rational::from_integer(q as i128 + 1 - size))
        .sum();
    (p.pair_sum(s) - correction) / Rational::from_integer(size - 1)
}

/// Realizable by a nonnegative-weighted tree whose leaf set is `[n]` iff the
/// 4-point condition holds, every 3-subset weight is half its pair sum, and
/// every larger subset matches [`leaf_tree_weight`]. Quartet classes come from
/// the family itself.
pub fn check_leaf_treelike(f: &MultiweightFamily) -> Result<Verdict> {
    f.require_full()?;
    let p = f.pairs()?;
    let four = four_point_check(&p);
    if !four.accepted {
        return Ok(four.within(Check::LeafTree));
    }
    let classes = match quartet_classes(&p) {
        Ok(classes) => classes,
        Err(Error::InconsistentClass { first, second, lengths }) => {
            let [first_length, second_length] = *lengths;
            return Ok(Verdict::reject(
                Check::LeafTree,
                Criterion::QuartetClasses,
                Witness::InconsistentClass { first, first_length, second, second_length },
            ));
        }
        Err(e) => return Err(e),
    };
    for s in SubsetKey::all(f.n(), 3) {
        let found = f.get(s).expect("full family");
        let (criterion, expected) = if s.len() == 3 {
            (Criterion::ThreeSubsetFormula, three_subset_weight(&p, s))
        } else {
            (Criterion::LeafTreeFormula, leaf_tree_weight(&p, &classes, s))
        };
        if found != expected {
            return Ok(subset_mismatch(Check::LeafTree, criterion, s, expected, found));
        }
    }
    Ok(Verdict::accept(Check::LeafTree))
}

/// `δ` extended by zero on the empty set and singletons, indexed by mask.
fn diversity_table(f: &MultiweightFamily) -> Vec<Rational> {
    let n = f.n();
    (0..1u64 << n)
        .map(|mask| {
            let s = SubsetKey::from_mask(mask);
            if s.len() <= 1 {
                Rational::ZERO
            } else {
                f.get(s).expect("full family")
            }
        })
        .collect()
}

fn diversity_violation(delta: &[Rational], a: SubsetKey, b: SubsetKey, c: SubsetKey) -> Option<Witness> {
    let lhs = delta[a.union(c).mask() as usize];
    let rhs = delta[a.union(b).mask() as usize] + delta[b.union(c).mask() as usize];
    (lhs > rhs).then_some(Witness::Diversity { a, b, c, lhs, rhs })
}

/// Diversity axioms for `δ = D` extended by zero on sets of size at most one:
/// `δ(A ∪ C) <= δ(A ∪ B) + δ(B ∪ C)` for nonempty `B`. Positivity on larger
/// sets holds for every [`MultiweightFamily`] by construction.
///
/// Exhaustive up to [`DIVERSITY_EXHAUSTIVE_LIMIT`] labels, otherwise a fixed-seed
/// sample of [`DIVERSITY_SAMPLES`] triples; the verdict's coverage says which.
pub fn check_diversity(f: &MultiweightFamily) -> Result<Verdict> {
    f.require_full()?;
    let n = f.n();
    let delta = diversity_table(f);
    let mut verdict = Verdict::accept(Check::Diversity);
    if n <= DIVERSITY_EXHAUSTIVE_LIMIT {
        let subsets = SubsetKey::all(n, 0);
        let mut triples = 0u64;
        'search: for &a in &subsets {
            for &b in subsets.iter().filter(|b| !b.is_empty()) {
                for &c in &subsets {
                    triples += 1;
                    if let Some(w) = diversity_violation(&delta, a, b, c) {
                        verdict = Verdict::reject(Check::Diversity, Criterion::DiversitySubadditivity, w);
                        break 'search;
                    }
                }
            }
        }
        verdict.coverage = Some(Coverage::Exhaustive { triples });
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(DIVERSITY_SEED);
        let top = 1u64 << n;
        let mut worst: Option<(SubsetKey, SubsetKey, SubsetKey, Witness)> = None;
        for _ in 0..DIVERSITY_SAMPLES {
            let a = SubsetKey::from_mask(rng.random_range(0..top));
            let b = SubsetKey::from_mask(rng.random_range(1..top));
            let c = SubsetKey::from_mask(rng.random_range(0..top));
            if let Some(w) = diversity_violation(&delta, a, b, c) {
                if worst.as_ref().is_none_or(|(x, y, z, _)| (a, b, c) < (*x, *y, *z)) {
                    worst = Some((a, b, c, w));
                }
            }
        }
        if let Some((_, _, _, w)) = worst {
            verdict = Verdict::reject(Check::Diversity, Criterion::DiversitySubadditivity, w);
        }
        verdict.coverage = Some(Coverage::Sampled {
            samples: DIVERSITY_SAMPLES,
            seed: DIVERSITY_SEED,
            threshold: DIVERSITY_EXHAUSTIVE_LIMIT,
        });
    }
    Ok(verdict)
}

/// Re-evaluates a rejection's witness against `f` in isolation. True iff the
/// recorded values match `f` and the recorded condition is indeed violated.
pub fn witness_reproduces(v: &Verdict, f: &MultiweightFamily) -> bool {
    let (Some(criterion), Some(witness)) = (v.criterion, v.witness.as_ref()) else {
        return false;
    };
    let Ok(p) = f.pairs() else { return false };
    match witness {
        Witness::Triangle { pair: [x, y], via, direct, detour } => {
            p.get(*x, *y) == *direct && p.get(*x, *via) + p.get(*y, *via) == *detour && direct > detour
        }
        Witness::FourPoint { quartet, pairings: recorded } => {
            let fresh = pairings(&p, *quartet);
            fresh == *recorded && fresh[0].sum != fresh[1].sum
        }
        Witness::Median { triple, medians } => {
            let fresh = medians_of(&p, *triple);
            fresh == *medians && fresh.len() != 1
        }
        Witness::Subset { subset, expected, found } => {
            if f.get(*subset) != Some(*found) || found == expected {
                return false;
            }
            let fresh = match criterion {
                Criterion::PairTreeMin => pair_tree_min(&p, *subset),
                Criterion::ThreeSubsetFormula => three_subset_weight(&p, *subset),
                Criterion::LeafTreeFormula => match quartet_classes(&p) {
                    Ok(classes) => leaf_tree_weight(&p, &classes, *subset),
                    Err(_) => return false,
                },
                _ => return false,
            };
            fresh == *expected
        }
        Witness::InconsistentClass { first, first_length, second, second_length } => {
            let lsets = |q: [usize; 4]| -> Option<(SubsetKey, SubsetKey)> {
                let left = l_set(&p, q).ok()?;
                let right = l_set(&p, [q[2], q[3], q[0], q[1]]).ok()?;
                (left.union(right) == SubsetKey::full(p.n())).then_some(if left <= right {
                    (left, right)
                } else {
                    (right, left)
                })
            };
            strict_split(&p, *first)
                && strict_split(&p, *second)
                && lsets(*first).is_some()
                && lsets(*first) == lsets(*second)
                && bridge_length(&p, *first) == *first_length
                && bridge_length(&p, *second) == *second_length
                && first_length != second_length
        }
        Witness::Diversity { a, b, c, lhs, rhs } => {
            if f.n() > 20 {
                return false;
            }
            let delta = |s: SubsetKey| if s.len() <= 1 { Some(Rational::ZERO) } else { f.get(s) };
            let (Some(l), Some(r1), Some(r2)) = (delta(a.union(*c)), delta(a.union(*b)), delta(b.union(*c))) else {
                return false;
            };
            !b.is_empty() && l == *lhs && r1 + r2 == *rhs && lhs > rhs
        }
    }
}
