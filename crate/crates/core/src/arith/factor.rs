//! Canonical prime-power factorization of 64-bit naturals.

use std::fmt;

use num_integer::Integer;

use super::prime::{is_prime, mul_mod, trial_primes, TRIAL_PRIME_BOUND};

/// `n = p_1^a_1 * ... * p_r^a_r` with `p_1 < ... < p_r` prime and every
/// `a_i >= 1`. The empty factorization is `n = 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Multiplies the prime powers back together; `None` on overflow.
    pub fn value(&self) -> Option<u64> {
        self.factors
            .iter()
            .try_fold(1u64, |acc, &(p, a)| acc.checked_mul(p.checked_pow(a)?))
    }

    /// `sigma(n)` as a product of geometric sums `1 + p + ... + p^a`.
    /// Never overflows: `sigma(n) < 2^67` for every 64-bit n.
    pub fn sigma_wide(&self) -> u128 {
        self.factors.iter().fold(1u128, |acc, &(p, a)| {
            let p = p as u128;
            let mut term = 1u128;
            let mut sum = 1u128;
            for _ in 0..a {
                term *= p;
                sum += term;
            }
            acc * sum
        })
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, a)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " * ")?;
            }
            if a == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{a}")?;
            }
        }
        Ok(())
    }
}

/// Factorizes `n >= 1`. Trial division by primes below 10^6 handles
/// everything up to 10^12 outright; larger cofactors go through
/// Miller-Rabin and Brent's rho.
pub fn factorize(n: u64) -> Factorization {
    assert!(n >= 1, "factorize requires n >= 1");
    let mut factors = Vec::new();
    let mut rest = n;

    if rest.trailing_zeros() > 0 {
        let a = rest.trailing_zeros();
        factors.push((2, a));
        rest >>= a;
    }

    for &p in trial_primes().iter().skip(1) {
        let p = p as u64;
        if p * p > rest {
            break;
        }
        if rest % p == 0 {
            let mut a = 0;
            while rest % p == 0 {
                rest /= p;
                a += 1;
            }
            factors.push((p, a));
        }
    }

    if rest > 1 {
        let bound = TRIAL_PRIME_BOUND as u64;
        if rest < bound * bound {
            factors.push((rest, 1));
        } else {
            let mut large = Vec::new();
            split_large(rest, &mut large);
            large.sort_unstable();
            for p in large {
                match factors.last_mut() {
                    Some((q, a)) if *q == p => *a += 1,
                    _ => factors.push((p, 1)),
                }
            }
        }
    }

    Factorization { factors }
}

// Pushes the prime factors (with repetition) of n, which has no factor below
// the trial bound.
fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = (1..)
        .find_map(|c| rho_brent(n, c))
        .expect("rho finds a factor for some increment");
    split_large(d, out);
    split_large(n / d, out);
}

// Brent's cycle detection with batched gcds. Returns a proper divisor or
// None when this increment degenerates.
fn rho_brent(n: u64, c: u64) -> Option<u64> {
    const BATCH: u64 = 128;
    let f = |x: u64| ((x as u128 * x as u128 + c as u128) % n as u128) as u64;
    let mut y = 2u64;
    let mut x = y;
    let mut ys = y;
    let mut q = 1u64;
    let mut g = 1u64;
    let mut r = 1u64;

    while g == 1 {
        x = y;
        for _ in 0..r {
            y = f(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = f(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += BATCH;
        }
        r *= 2;
        if r > 1 << 40 {
            return None;
        }
    }

    if g == n {
        // backtrack one step at a time
        loop {
            ys = f(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check_canonical(n: u64, fz: &Factorization) {
        assert_eq!(fz.value(), Some(n), "product mismatch for {n}");
        for w in fz.factors().windows(2) {
            assert!(w[0].0 < w[1].0);
        }
        for &(p, a) in fz.factors() {
            assert!(is_prime(p), "{p} not prime in factorization of {n}");
            assert!(a >= 1);
        }
    }

    #[test]
    fn small_examples() {
        assert_eq!(factorize(12).factors(), &[(2, 2), (3, 1)]);
        assert!(factorize(1).is_one());
        assert_eq!(factorize(2).factors(), &[(2, 1)]);
        assert_eq!(factorize(97).factors(), &[(97, 1)]);
    }

    #[test]
    fn multiply_perfect_of_order_five() {
        let n = 14_182_439_040;
        let fz = factorize(n);
        assert_eq!(
            fz.factors(),
            &[(2, 7), (3, 4), (5, 1), (7, 1), (11, 2), (17, 1), (19, 1)]
        );
        // independent cross-check: each listed prime divides n by trial division
        for &(p, a) in fz.factors() {
            assert_eq!(n % p.pow(a), 0);
            assert_ne!((n / p.pow(a)) % p, 0);
        }
        check_canonical(n, &fz);
    }

    #[test]
    fn large_semiprimes_and_prime_powers() {
        let cases = [
            4_294_967_291u64 * 4_294_967_279,
            (1 << 61) - 1,
            1_000_000_007 * 998_244_353,
            1_000_003u64.pow(3),
            18_446_744_073_709_551_615,
            600_851_475_143,
            999_999_999_989 * 17,
        ];
        for n in cases {
            check_canonical(n, &factorize(n));
        }
        assert_eq!(factorize(1_000_003u64.pow(3)).factors(), &[(1_000_003, 3)]);
    }

    #[test]
    fn inverse_of_prime_power_product_up_to_a_million() {
        for n in 1..=1_000_000u64 {
            let fz = factorize(n);
            assert_eq!(fz.value(), Some(n));
        }
    }

    #[test]
    fn display() {
        assert_eq!(factorize(360).to_string(), "2^3 * 3^2 * 5");
        assert_eq!(factorize(1).to_string(), "1");
    }

    proptest! {
        #[test]
        fn canonical_for_random_u64(n in 1u64..u64::MAX) {
            check_canonical(n, &factorize(n));
        }
    }
}
