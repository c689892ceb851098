//! Primality: Eratosthenes for small ranges, deterministic Miller-Rabin for
//! 64-bit inputs and Lucas-Lehmer for Mersenne numbers.

use std::sync::OnceLock;

/// Trial-division primes are sieved up to this bound once per process.
pub const TRIAL_PRIME_BOUND: u32 = 1_000_000;

/// These bases decide primality for every n < 2^64.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// All primes `<= limit`.
pub fn primes_up_to(limit: u32) -> Vec<u32> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u32);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    primes
}

pub(crate) fn trial_primes() -> &'static [u32] {
    static PRIMES: OnceLock<Vec<u32>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(TRIAL_PRIME_BOUND))
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Smallest prime strictly greater than `n`, if one fits in 64 bits.
pub fn next_prime_above(n: u64) -> Option<u64> {
    let mut candidate = n.checked_add(1)?;
    while !is_prime(candidate) {
        candidate = candidate.checked_add(1)?;
    }
    Some(candidate)
}

/// Lucas-Lehmer test: is `2^p - 1` prime? Valid for `2 <= p <= 64`.
pub fn lucas_lehmer(p: u32) -> bool {
    assert!((2..=64).contains(&p), "exponent {p} outside 2..=64");
    if p == 2 {
        return true;
    }
    let modulus: u128 = (1u128 << p) - 1;
    let mut s: u128 = 4;
    for _ in 0..p - 2 {
        // s < 2^64 so s*s fits in u128
        s = (s * s + modulus - 2) % modulus;
    }
    s == 0
}
