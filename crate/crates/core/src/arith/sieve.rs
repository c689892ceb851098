//! Bulk divisor sums.
//!
//! [`sigma_sieve`] fills a whole table with a linear (smallest-prime-factor)
//! sieve in O(N). Alongside `sigma` it keeps, for every `n`, the cofactor
//! left after removing the full power of the smallest prime factor `p`.
//! Writing `n = p^a * c`, the two update rules are
//!
//! ```text
//! sigma(n * p) = p * sigma(n) + sigma(c)      if p | n
//! sigma(n * q) = sigma(n) * (q + 1)           if q < spf(n)
//! ```
//!
//! Memory is `size_of::<W>() + 4` bytes per entry during construction and
//! `size_of::<W>()` bytes per entry afterwards (8 for the default `u64`).
//!
//! [`SegmentedSigma`] covers ranges too large to hold in memory: it sieves
//! fixed-size blocks by the primes up to `sqrt(hi)` and hands each block to
//! the caller, optionally in parallel.

use std::ops::RangeInclusive;

use num_integer::Roots;
use rayon::prelude::*;

use super::prime::primes_up_to;
use super::sigma::SigmaLookup;
use crate::error::{domain, Error, Result};
use crate::num::Natural;

/// `sigma(n)` for every `1 <= n <= bound`. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct SigmaTable<W: Natural = u64> {
    // index 0 is a zero placeholder so that values[n] = sigma(n)
    values: Vec<W>,
}

impl<W: Natural> SigmaTable<W> {
    pub(crate) fn from_values(values: Vec<W>) -> Self {
        debug_assert!(values.len() >= 2);
        Self { values }
    }

    pub fn bound(&self) -> u64 {
        (self.values.len() - 1) as u64
    }

    pub fn covers(&self, n: u64) -> bool {
        n >= 1 && n <= self.bound()
    }

    /// Panics when `n` is 0 or beyond the bound.
    pub fn sigma(&self, n: u64) -> u64 {
        assert!(
            self.covers(n),
            "{n} outside sigma table 1..={}",
            self.bound()
        );
        self.values[n as usize].to_u64_lossless()
    }

    pub fn get(&self, n: u64) -> Option<u64> {
        self.covers(n)
            .then(|| self.values[n as usize].to_u64_lossless())
    }

    /// `sigma(1), ..., sigma(bound)`.
    pub fn values(&self) -> &[W] {
        &self.values[1..]
    }

    /// `(n, sigma(n))` for `n` in `1..=bound`.
    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.values
            .iter()
            .enumerate()
            .skip(1)
            .map(|(n, s)| (n as u64, s.to_u64_lossless()))
    }

    pub(crate) fn require(&self, n: u64) -> Result<()> {
        if n > self.bound() {
            return Err(domain(format!(
                "sigma table covers 1..={} but {n} was requested",
                self.bound()
            )));
        }
        Ok(())
    }
}

impl<W: Natural> SigmaLookup for SigmaTable<W> {
    fn sigma_of(&self, n: u64) -> Option<u64> {
        self.get(n)
    }
}

impl<W: Natural> std::fmt::Debug for SigmaTable<W> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SigmaTable")
            .field("bound", &self.bound())
            .finish()
    }
}

fn alloc<T: Clone>(len: usize, fill: T, bound: u64) -> Result<Vec<T>> {
    let mut v = Vec::new();
    v.try_reserve_exact(len)
        .map_err(|_| Error::Allocation(bound))?;
    v.resize(len, fill);
    Ok(v)
}

/// Builds the table for `1..=bound` with a linear sieve.
pub fn sigma_sieve<W: Natural>(bound: u64) -> Result<SigmaTable<W>> {
    if bound == 0 {
        return Err(domain("sieve bound must be at least 1"));
    }
    if bound >= u32::MAX as u64 {
        return Err(Error::Allocation(bound));
    }
    let n = bound as usize;
    let mut values: Vec<W> = alloc(n + 1, W::zero(), bound)?;
    let mut cofactor: Vec<u32> = alloc(n + 1, 0, bound)?;
    let mut primes: Vec<u32> = Vec::new();
    let narrow = |v: u64| W::from_u64(v).ok_or(Error::Overflow("sigma exceeds table word"));

    values[1] = W::one();
    cofactor[1] = 1;
    for i in 2..=n {
        if cofactor[i] == 0 {
            primes.push(i as u32);
            values[i] = narrow(i as u64 + 1)?;
            cofactor[i] = 1;
        }
        let sigma_i = values[i].to_u64_lossless();
        for &p in &primes {
            let p = p as usize;
            let m = i * p;
            if m > n {
                break;
            }
            if i % p == 0 {
                let c = cofactor[i];
                cofactor[m] = c;
                let sigma_c = values[c as usize].to_u64_lossless();
                values[m] = narrow(p as u64 * sigma_i + sigma_c)?;
                break;
            }
            cofactor[m] = i as u32;
            values[m] = narrow(sigma_i * (p as u64 + 1))?;
        }
    }
    Ok(SigmaTable { values })
}

/// Largest `hi` accepted by [`SegmentedSigma`]; keeps every sigma in `u64`.
pub const SEGMENTED_LIMIT: u64 = 1 << 48;
const BLOCK_LEN: u64 = 1 << 15;

/// Block-wise divisor sums over `lo..=hi` without materializing a table.
pub struct SegmentedSigma {
    lo: u64,
    hi: u64,
    primes: Vec<u32>,
}

impl SegmentedSigma {
    pub fn new(range: RangeInclusive<u64>) -> Result<Self> {
        let (lo, hi) = range.into_inner();
        if lo == 0 || lo > hi {
            return Err(domain(format!("invalid sigma range {lo}..={hi}")));
        }
        if hi > SEGMENTED_LIMIT {
            return Err(domain(format!(
                "segmented sigma supports n <= 2^48, got {hi}"
            )));
        }
        Ok(Self {
            lo,
            hi,
            primes: primes_up_to(hi.sqrt() as u32),
        })
    }

    fn block_count(&self) -> u64 {
        (self.hi - self.lo) / BLOCK_LEN + 1
    }

    /// `(start, sigmas)` for block `index`; `sigmas[i] = sigma(start + i)`.
    fn block(&self, index: u64) -> (u64, Vec<u64>) {
        let start = self.lo + index * BLOCK_LEN;
        let end = (start + BLOCK_LEN - 1).min(self.hi);
        let len = (end - start + 1) as usize;
        let mut rest: Vec<u64> = (start..=end).collect();
        let mut sig = vec![1u64; len];
        for &p in &self.primes {
            let p = p as u64;
            if p * p > end {
                break;
            }
            let first = start.div_ceil(p) * p;
            let mut m = first;
            while m <= end {
                let i = (m - start) as usize;
                let mut r = rest[i] / p;
                let mut term = p;
                let mut sum = 1 + p;
                while r % p == 0 {
                    r /= p;
                    term *= p;
                    sum += term;
                }
                rest[i] = r;
                sig[i] *= sum;
                m += p;
            }
        }
        for (s, &r) in sig.iter_mut().zip(&rest) {
            if r > 1 {
                *s *= r + 1;
            }
        }
        (start, sig)
    }

    /// Every `n` in range with `pred(n, sigma(n))`, ascending.
    pub fn filter<F>(&self, pred: F) -> Vec<u64>
    where
        F: Fn(u64, u64) -> bool + Sync,
    {
        (0..self.block_count())
            .into_par_iter()
            .flat_map_iter(|b| {
                let (start, sig) = self.block(b);
                sig.into_iter()
                    .enumerate()
                    .map(move |(i, s)| (start + i as u64, s))
                    .filter(|&(n, s)| pred(n, s))
                    .map(|(n, _)| n)
                    .collect::<Vec<_>>()
            })
            .collect()
    }

    /// Smallest `n` in range with `pred(n, sigma(n))`.
    pub fn find_first<F>(&self, pred: F) -> Option<u64>
    where
        F: Fn(u64, u64) -> bool + Sync,
    {
        (0..self.block_count()).into_par_iter().find_map_first(|b| {
            let (start, sig) = self.block(b);
            sig.iter()
                .enumerate()
                .map(|(i, &s)| (start + i as u64, s))
                .find(|&(n, s)| pred(n, s))
                .map(|(n, _)| n)
        })
    }

    /// Folds `(n, sigma(n))` over each block, then combines block results
    /// in block order.
    pub fn fold<A, F, C>(&self, init: A, fold: F, combine: C) -> A
    where
        A: Clone + Send + Sync,
        F: Fn(A, u64, u64) -> A + Sync,
        C: Fn(A, A) -> A + Sync,
    {
        let parts: Vec<A> = (0..self.block_count())
            .into_par_iter()
            .map(|b| {
                let (start, sig) = self.block(b);
                sig.iter()
                    .enumerate()
                    .fold(init.clone(), |acc, (i, &s)| fold(acc, start + i as u64, s))
            })
            .collect();
        parts.into_iter().fold(init, combine)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::prime::is_prime;

    fn brute_sigma(n: u64) -> u64 {
        (1..=n).filter(|d| n % d == 0).sum()
    }

    #[test]
    fn first_ten() {
        let t = sigma_sieve::<u64>(10).unwrap();
        assert_eq!(t.values(), &[1, 3, 4, 7, 6, 12, 8, 15, 13, 18]);
        assert_eq!(t.bound(), 10);
    }

    #[test]
    fn bound_one() {
        let t = sigma_sieve::<u64>(1).unwrap();
        assert_eq!(t.values(), &[1]);
        assert!(sigma_sieve::<u64>(0).is_err());
    }

    #[test]
    fn oracle_equivalence_to_ten_thousand() {
        let t = sigma_sieve::<u64>(10_000).unwrap();
        for n in 1..=10_000 {
            assert_eq!(t.sigma(n), brute_sigma(n), "n = {n}");
        }
    }

    #[test]
    fn table_invariants() {
        let t = sigma_sieve::<u32>(200_000).unwrap();
        assert_eq!(t.sigma(1), 1);
        for (n, s) in t.iter().skip(1) {
            assert!(s > n);
            if is_prime(n) {
                assert_eq!(s, n + 1);
            }
        }
    }

    #[test]
    fn word_sizes_agree() {
        let wide = sigma_sieve::<u64>(50_000).unwrap();
        let narrow = sigma_sieve::<u32>(50_000).unwrap();
        assert!(wide.iter().eq(narrow.iter()));
    }

    #[test]
    fn abundant_count_to_one_hundred_thousand() {
        let t = sigma_sieve::<u64>(100_000).unwrap();
        let abundant = t.iter().filter(|&(n, s)| s > 2 * n).count();
        assert_eq!(abundant, 24_795);
    }

    #[test]
    fn out_of_range_lookup() {
        let t = sigma_sieve::<u64>(10).unwrap();
        assert_eq!(t.get(11), None);
        assert_eq!(t.get(0), None);
        assert!(t.require(11).is_err());
    }

    #[test]
    fn segmented_matches_linear() {
        let t = sigma_sieve::<u64>(300_000).unwrap();
        let seg = SegmentedSigma::new(1..=300_000).unwrap();
        let all = seg.fold(
            Vec::new(),
            |mut acc, n, s| {
                acc.push((n, s));
                acc
            },
            |mut a, b| {
                a.extend(b);
                a
            },
        );
        assert!(all.into_iter().eq(t.iter()));
    }

    #[test]
    fn segmented_offset_ranges() {
        let seg = SegmentedSigma::new(1_000_000_000_000..=1_000_000_000_500).unwrap();
        let sums = seg.fold(
            Vec::new(),
            |mut acc, n, s| {
                acc.push((n, s));
                acc
            },
            |mut a, b| {
                a.extend(b);
                a
            },
        );
        assert_eq!(sums.len(), 501);
        for (n, s) in sums {
            assert_eq!(s, crate::arith::sigma(n).unwrap());
        }
        assert!(SegmentedSigma::new(0..=5).is_err());
        assert!(SegmentedSigma::new(RangeInclusive::new(5, 4)).is_err());
        assert!(SegmentedSigma::new(1..=SEGMENTED_LIMIT + 1).is_err());
    }

    #[test]
    fn segmented_first_and_filter() {
        let seg = SegmentedSigma::new(1..=10_000).unwrap();
        assert_eq!(seg.find_first(|n, s| s > 2 * n), Some(12));
        assert_eq!(seg.filter(|n, s| s == 2 * n), vec![6, 28, 496, 8128]);
        assert_eq!(seg.find_first(|n, s| s == 3 * n), Some(120));
        assert_eq!(seg.find_first(|n, s| s == 4 * n), None);
    }
}
