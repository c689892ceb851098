//! Feebly amicable pairs and k-tuples: numbers whose reciprocal abundancy
//! indices `n/sigma(n)` sum to exactly 1.
//!
//! Enumeration keys every `n` by its reduced `r(n) = n/sigma(n)` and probes
//! the complement `1 - r(n)`. Writing `r(n) = a/b` in lowest terms, the
//! complement is `(b - a)/b`, which is already reduced, so a probe costs one
//! hash lookup.

use std::collections::HashMap;
use std::ops::RangeInclusive;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{sigma_wide, SigmaTable};
use crate::error::{domain, Error, Result};
use crate::{Fraction, Natural};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub small: u64,
    pub large: u64,
    pub r_small: Fraction,
    pub r_large: Fraction,
    pub is_amicable: bool,
    pub is_coprime: bool,
    pub both_perfect: bool,
}

impl PairRecord {
    fn new(small: u64, large: u64, sigma_small: u64, sigma_large: u64) -> Self {
        Self {
            small,
            large,
            r_small: reciprocal(small, sigma_small),
            r_large: reciprocal(large, sigma_large),
            is_amicable: sigma_small == sigma_large && sigma_small == small + large,
            is_coprime: small.gcd(&large) == 1,
            both_perfect: sigma_small == 2 * small && sigma_large == 2 * large,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KTupleRecord {
    pub members: Vec<u64>,
    pub reciprocals: Vec<Fraction>,
}

/// Which pairs to keep. The default keeps every pair of distinct numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PairFilters {
    pub exclude_amicable: bool,
    pub exclude_both_perfect: bool,
    pub only_coprime: bool,
    /// Also emit `(n, n)` for perfect `n`.
    pub include_self_pairs: bool,
}

impl PairFilters {
    /// Neither amicable pairs nor pairs of perfect numbers.
    pub fn proper() -> Self {
        Self {
            exclude_amicable: true,
            exclude_both_perfect: true,
            ..Self::default()
        }
    }

    fn keep(&self, rec: &PairRecord) -> bool {
        !(self.exclude_amicable && rec.is_amicable)
            && !(self.exclude_both_perfect && rec.both_perfect)
            && !(self.only_coprime && !rec.is_coprime)
    }
}

fn reciprocal(n: u64, sigma: u64) -> Fraction {
    Fraction::new(n, sigma).expect("sigma(n) >= 1")
}

fn reciprocal_wide(n: u64) -> (u128, u128) {
    let s = sigma_wide(n);
    let g = (n as u128).gcd(&s);
    (n as u128 / g, s / g)
}

/// `m/sigma(m) + n/sigma(n) = 1`, exactly. `m = n` is allowed and holds
/// exactly for perfect numbers.
pub fn is_feebly_pair(m: u64, n: u64) -> bool {
    assert!(
        m >= 1 && n >= 1,
        "is_feebly_pair requires positive arguments"
    );
    let (a, b) = reciprocal_wide(m);
    let (c, d) = reciprocal_wide(n);
    // a/b + c/d = 1 with both reduced forces d = b and c = b - a
    b == d && a + c == b
}

// r(n) -> ascending members, for 2 <= n <= n_max. n = 1 has r = 1 and can
// never take part.
fn reciprocal_index<W: Natural>(n_max: u64, table: &SigmaTable<W>) -> HashMap<Fraction, Vec<u64>> {
    let mut index: HashMap<Fraction, Vec<u64>> = HashMap::with_capacity(n_max as usize);
    for n in 2..=n_max {
        index
            .entry(reciprocal(n, table.sigma(n)))
            .or_default()
            .push(n);
    }
    index
}

/// All pairs with larger member `<= n_max` that pass `filters`, ordered by
/// larger member, then smaller member.
pub fn feebly_pairs<W: Natural>(
    n_max: u64,
    table: &SigmaTable<W>,
    filters: PairFilters,
) -> Result<Vec<PairRecord>> {
    table.require(n_max)?;
    let index = reciprocal_index(n_max, table);
    let pairs = (2..=n_max)
        .into_par_iter()
        .flat_map_iter(|large| {
            let sigma_large = table.sigma(large);
            let complement = reciprocal(large, sigma_large)
                .complement()
                .expect("n/sigma(n) <= 1");
            let partners = index.get(&complement).map(Vec::as_slice).unwrap_or(&[]);
            partners
                .iter()
                .take_while(move |&&small| small <= large)
                .filter(move |&&small| small < large || filters.include_self_pairs)
                .map(move |&small| PairRecord::new(small, large, table.sigma(small), sigma_large))
                .filter(move |rec| filters.keep(rec))
                .collect::<Vec<_>>()
        })
        .collect();
    Ok(pairs)
}

/// Amicable pairs `sigma(m) = sigma(n) = m + n` with larger member `<= n_max`.
pub fn amicable_pairs<W: Natural>(n_max: u64, table: &SigmaTable<W>) -> Result<Vec<PairRecord>> {
    table.require(n_max)?;
    let mut pairs: Vec<PairRecord> = (2..=n_max)
        .filter_map(|small| {
            let s = table.sigma(small);
            let large = s - small;
            (large > small && large <= n_max && table.sigma(large) == s)
                .then(|| PairRecord::new(small, large, s, s))
        })
        .collect();
    pairs.sort_by_key(|p| (p.large, p.small));
    Ok(pairs)
}

/// Feebly amicable pairs with coprime members, larger member `<= n_max`.
pub fn coprime_feebly_pairs<W: Natural>(
    n_max: u64,
    table: &SigmaTable<W>,
) -> Result<Vec<PairRecord>> {
    feebly_pairs(
        n_max,
        table,
        PairFilters {
            only_coprime: true,
            ..PairFilters::default()
        },
    )
}

/// Largest supported tuple length.
pub const MAX_TUPLE_LEN: usize = 6;

struct TupleSearch<'a> {
    n_max: u64,
    first_max: u64,
    reciprocals: Vec<Fraction>,
    // float shadows of `reciprocals`, used only to skip hopeless branches
    approx: Vec<f64>,
    index: HashMap<Fraction, Vec<u64>>,
    min_r: Fraction,
    max_r: Fraction,
    limit: usize,
    out: &'a mut Vec<KTupleRecord>,
}

// Relative slack for the float pre-filter; far above f64 rounding error.
const APPROX_SLACK: f64 = 1e-9;

impl TupleSearch<'_> {
    fn emit(&mut self, prefix: &[u64], last: u64) {
        let members: Vec<u64> = prefix.iter().copied().chain([last]).collect();
        let reciprocals = members
            .iter()
            .map(|&n| self.reciprocals[n as usize])
            .collect();
        self.out.push(KTupleRecord {
            members,
            reciprocals,
        });
    }

    fn done(&self) -> bool {
        self.out.len() >= self.limit
    }

    fn run(
        &mut self,
        prefix: &mut Vec<u64>,
        start: u64,
        remaining: Fraction,
        slots: usize,
    ) -> Result<()> {
        if slots == 1 {
            if let Some(members) = self.index.get(&remaining) {
                let members = members.clone();
                for n in members.into_iter().filter(|&n| n >= start) {
                    if self.done() {
                        break;
                    }
                    self.emit(prefix, n);
                }
            }
            return Ok(());
        }

        let rest_slots = (slots - 1) as u64;
        let lowest = self
            .min_r
            .checked_scale(rest_slots)
            .ok_or(Error::Overflow("k-tuple bound"))?;
        let highest = self
            .max_r
            .checked_scale(rest_slots)
            .ok_or(Error::Overflow("k-tuple bound"))?;
        let (lo_f, hi_f) = (lowest.to_f64(), highest.to_f64());
        let target_f = remaining.to_f64();

        let end = if prefix.is_empty() {
            self.first_max
        } else {
            self.n_max
        };
        for n in start..=end {
            if self.done() {
                break;
            }
            let left_f = target_f - self.approx[n as usize];
            if left_f < lo_f * (1.0 - APPROX_SLACK) || left_f > hi_f * (1.0 + APPROX_SLACK) {
                continue;
            }
            let r = self.reciprocals[n as usize];
            if r >= remaining {
                continue;
            }
            let left = remaining
                .checked_sub(&r)
                .ok_or(Error::Overflow("k-tuple partial sum"))?;
            if left < lowest || left > highest {
                continue;
            }
            prefix.push(n);
            self.run(prefix, n + 1, left, slots - 1)?;
            prefix.pop();
        }
        Ok(())
    }
}

/// Up to `limit` strictly increasing k-tuples from `2..=n_max` whose
/// reciprocal abundancy indices sum to 1, in lexicographic order.
///
/// Depth-first over the leading members; a branch is cut when the part of
/// the sum still missing cannot be covered by the remaining slots, each of
/// which contributes between the smallest and largest `r(n)` in range. The
/// last member is found by lookup.
pub fn feebly_ktuples<W: Natural>(
    n_max: u64,
    k: usize,
    table: &SigmaTable<W>,
    limit: usize,
) -> Result<Vec<KTupleRecord>> {
    feebly_ktuples_from(n_max, k, table, 2..=n_max, limit)
}

/// As [`feebly_ktuples`], with the smallest member restricted to `first`.
pub fn feebly_ktuples_from<W: Natural>(
    n_max: u64,
    k: usize,
    table: &SigmaTable<W>,
    first: RangeInclusive<u64>,
    limit: usize,
) -> Result<Vec<KTupleRecord>> {
    if !(2..=MAX_TUPLE_LEN).contains(&k) {
        return Err(domain(format!(
            "tuple length {k} outside 2..={MAX_TUPLE_LEN}"
        )));
    }
    table.require(n_max)?;
    let mut out = Vec::new();
    let first_min = (*first.start()).max(2);
    let first_max = (*first.end()).min(n_max);
    if n_max < 2 || limit == 0 || first_min > first_max {
        return Ok(out);
    }

    let mut reciprocals = vec![Fraction::one(); n_max as usize + 1];
    for n in 2..=n_max {
        reciprocals[n as usize] = reciprocal(n, table.sigma(n));
    }
    let approx = reciprocals.iter().map(Fraction::to_f64).collect();
    let in_range = &reciprocals[2..];
    let min_r = *in_range.iter().min().expect("n_max >= 2");
    let max_r = *in_range.iter().max().expect("n_max >= 2");

    let mut search = TupleSearch {
        n_max,
        first_max,
        approx,
        index: reciprocal_index(n_max, table),
        reciprocals,
        min_r,
        max_r,
        limit,
        out: &mut out,
    };
    search.run(&mut Vec::with_capacity(k), first_min, Fraction::one(), k)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::sigma_sieve;
    use std::collections::BTreeSet;

    #[rustfmt::skip]
    const GOLDEN: [(u64, u64); 20] = [
        (4, 12), (14, 30), (10, 40), (20, 44), (8, 56), (15, 84), (26, 96), (60, 117),
        (2, 120), (42, 135), (14, 140), (66, 182), (88, 184), (102, 190), (45, 198),
        (10, 224), (4, 234), (174, 248), (153, 252), (164, 260),
    ];

    fn table(n: u64) -> SigmaTable<u64> {
        sigma_sieve(n).unwrap()
    }

    fn as_pairs(recs: &[PairRecord]) -> Vec<(u64, u64)> {
        recs.iter().map(|r| (r.small, r.large)).collect()
    }

    #[test]
    fn is_feebly_pair_examples() {
        assert!(is_feebly_pair(12, 4));
        assert!(is_feebly_pair(6, 6));
        assert!(is_feebly_pair(220, 284));
        assert!(!is_feebly_pair(12, 5));
        assert!(!is_feebly_pair(1, 1));
    }

    #[test]
    fn symmetric() {
        for m in 1..200 {
            for n in 1..200 {
                assert_eq!(is_feebly_pair(m, n), is_feebly_pair(n, m));
            }
        }
    }

    #[test]
    fn golden_first_twenty() {
        let t = table(300);
        let got = feebly_pairs(260, &t, PairFilters::proper()).unwrap();
        assert_eq!(as_pairs(&got), GOLDEN.to_vec());
        let got = feebly_pairs(30, &t, PairFilters::proper()).unwrap();
        assert_eq!(as_pairs(&got), vec![(4, 12), (14, 30)]);
    }

    #[test]
    fn unfiltered_includes_perfect_pair() {
        let t = table(30);
        let got = as_pairs(&feebly_pairs(30, &t, PairFilters::default()).unwrap());
        assert_eq!(got, vec![(4, 12), (6, 28), (14, 30)]);
        let with_self = feebly_pairs(
            30,
            &t,
            PairFilters {
                include_self_pairs: true,
                ..PairFilters::default()
            },
        )
        .unwrap();
        assert_eq!(
            as_pairs(&with_self),
            vec![(6, 6), (4, 12), (6, 28), (28, 28), (14, 30)]
        );
    }

    #[test]
    fn record_invariants_and_filter_soundness() {
        let t = table(20_000);
        let all = feebly_pairs(20_000, &t, PairFilters::default()).unwrap();
        let proper = feebly_pairs(20_000, &t, PairFilters::proper()).unwrap();
        assert!(proper.len() < all.len());
        for rec in &all {
            assert!(rec.small < rec.large);
            assert_eq!(rec.r_small + rec.r_large, Fraction::one());
            if rec.is_amicable {
                assert_eq!(t.sigma(rec.small), rec.small + rec.large);
                assert_eq!(t.sigma(rec.large), rec.small + rec.large);
            }
            if rec.both_perfect {
                assert_eq!(t.sigma(rec.small), 2 * rec.small);
            }
        }
        assert!(proper.iter().all(|r| !r.is_amicable && !r.both_perfect));
        assert!(all
            .windows(2)
            .all(|w| (w[0].large, w[0].small) < (w[1].large, w[1].small)));
    }

    #[test]
    fn complement_lookup_matches_double_loop() {
        let t = table(2_000);
        let r: Vec<Fraction> = (0..=2_000u64)
            .map(|n| {
                if n == 0 {
                    Fraction::zero()
                } else {
                    reciprocal(n, t.sigma(n))
                }
            })
            .collect();
        for n_max in [1u64, 2, 12, 100, 777, 2_000] {
            let mut brute = Vec::new();
            for i in 1..=n_max {
                for j in 1..i {
                    if r[i as usize] + r[j as usize] == Fraction::one() {
                        brute.push((j, i));
                    }
                }
            }
            let fast = feebly_pairs(n_max, &t, PairFilters::default()).unwrap();
            assert_eq!(as_pairs(&fast), brute, "n_max = {n_max}");
        }
    }

    #[test]
    fn amicable_examples() {
        let t = table(1_300);
        assert_eq!(
            as_pairs(&amicable_pairs(1_300, &t).unwrap()),
            vec![(220, 284), (1184, 1210)]
        );
        assert!(amicable_pairs(200, &t).unwrap().is_empty());
        for rec in amicable_pairs(1_300, &t).unwrap() {
            assert!(rec.is_amicable);
            assert!(is_feebly_pair(rec.small, rec.large));
        }
    }

    #[test]
    fn amicable_brute_force_agreement() {
        let t = table(20_000);
        let mut brute = Vec::new();
        for n in 2..=20_000u64 {
            for m in 2..n {
                let s = t.sigma(m);
                if s == t.sigma(n) && s == m + n {
                    brute.push((m, n));
                }
            }
            if brute.len() > 100 {
                break;
            }
        }
        let fast = amicable_pairs(20_000, &t).unwrap();
        assert_eq!(as_pairs(&fast), brute);
        let via_feebly: Vec<_> = feebly_pairs(20_000, &t, PairFilters::default())
            .unwrap()
            .into_iter()
            .filter(|r| r.is_amicable)
            .collect();
        assert_eq!(via_feebly, fast);
    }

    #[test]
    fn coprime_examples() {
        let t = table(5_000);
        let got = coprime_feebly_pairs(5_000, &t).unwrap();
        assert_eq!(
            as_pairs(&got),
            vec![(868, 1485), (135, 3472), (1683, 3500), (1204, 4455)]
        );
        assert!(got.iter().all(|r| r.is_coprime));
        assert!(coprime_feebly_pairs(1_000, &t).unwrap().is_empty());
    }

    #[test]
    fn table_too_small() {
        let t = table(100);
        assert!(feebly_pairs(101, &t, PairFilters::default()).is_err());
        assert!(feebly_ktuples(101, 2, &t, 10).is_err());
    }

    #[test]
    fn ktuples_of_two_match_pairs() {
        let t = table(3_000);
        let tuples = feebly_ktuples(3_000, 2, &t, usize::MAX).unwrap();
        let from_tuples: BTreeSet<(u64, u64)> = tuples
            .iter()
            .map(|r| (r.members[0], r.members[1]))
            .collect();
        let from_pairs: BTreeSet<(u64, u64)> =
            as_pairs(&feebly_pairs(3_000, &t, PairFilters::default()).unwrap())
                .into_iter()
                .collect();
        assert_eq!(from_tuples, from_pairs);
        assert_eq!(tuples.len(), from_pairs.len());
    }

    #[test]
    fn ktuples_are_exact_and_lexicographic() {
        let t = table(1_000);
        let tuples = feebly_ktuples(1_000, 3, &t, 10).unwrap();
        assert_eq!(tuples.len(), 10);
        assert_eq!(tuples[0].members, vec![72, 360, 504]);
        assert_eq!(tuples[9].members, vec![270, 672, 840]);
        assert_eq!(feebly_ktuples(1_000, 3, &t, usize::MAX).unwrap().len(), 13);
        for rec in &tuples {
            assert_eq!(rec.members.len(), 3);
            assert!(rec.members.windows(2).all(|w| w[0] < w[1]));
            let sum = rec
                .reciprocals
                .iter()
                .fold(Fraction::zero(), |acc, &r| acc + r);
            assert_eq!(sum, Fraction::one());
        }
        assert!(tuples.windows(2).all(|w| w[0].members < w[1].members));
    }

    #[test]
    fn ktuples_match_brute_force_triples() {
        let t = table(400);
        let r = |n: u64| reciprocal(n, t.sigma(n));
        let mut brute = Vec::new();
        for a in 2..=400u64 {
            for b in a + 1..=400 {
                for c in b + 1..=400 {
                    if r(a) + r(b) + r(c) == Fraction::one() {
                        brute.push(vec![a, b, c]);
                    }
                }
            }
        }
        assert_eq!(brute, vec![vec![180, 360, 396]]);
        let fast: Vec<Vec<u64>> = feebly_ktuples(400, 3, &t, usize::MAX)
            .unwrap()
            .into_iter()
            .map(|r| r.members)
            .collect();
        assert_eq!(fast, brute);
    }

    #[test]
    fn ktuples_with_restricted_first_member() {
        let t = table(1_000);
        let all = feebly_ktuples(1_000, 3, &t, usize::MAX).unwrap();
        let from: Vec<_> = all
            .iter()
            .filter(|r| (84..=120).contains(&r.members[0]))
            .cloned()
            .collect();
        assert_eq!(
            feebly_ktuples_from(1_000, 3, &t, 84..=120, usize::MAX).unwrap(),
            from
        );
        assert!(
            feebly_ktuples_from(1_000, 3, &t, RangeInclusive::new(500, 400), 10)
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn ktuple_length_validated() {
        let t = table(10);
        assert!(feebly_ktuples(10, 1, &t, 1).is_err());
        assert!(feebly_ktuples(10, 7, &t, 1).is_err());
        assert!(feebly_ktuples(10, 3, &t, 0).unwrap().is_empty());
    }
}
