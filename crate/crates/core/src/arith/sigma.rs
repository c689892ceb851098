use super::factor::factorize;
use crate::error::{Error, Result};
use crate::Fraction;

/// Anything that can answer `sigma(n)` for some range of `n`.
pub trait SigmaLookup {
    /// `None` when `n` is outside the covered range.
    fn sigma_of(&self, n: u64) -> Option<u64>;
}

/// Sum of all positive divisors of `n`, as `u128`. Cannot overflow.
pub fn sigma_wide(n: u64) -> u128 {
    factorize(n).sigma_wide()
}

/// Sum of all positive divisors of `n`, including `n`.
pub fn sigma(n: u64) -> Result<u64> {
    u64::try_from(sigma_wide(n)).map_err(|_| Error::Overflow("sigma(n) exceeds 64 bits"))
}

fn sigma_via(n: u64, table: Option<&dyn SigmaLookup>) -> u128 {
    table
        .and_then(|t| t.sigma_of(n))
        .map(u128::from)
        .unwrap_or_else(|| sigma_wide(n))
}

/// The abundancy index `sigma(n)/n` in lowest terms. Uses `table` when it
/// covers `n`, otherwise factorizes.
pub fn abundancy(n: u64, table: Option<&dyn SigmaLookup>) -> Result<Fraction> {
    assert!(n >= 1, "abundancy requires n >= 1");
    Fraction::from_wide(sigma_via(n, table), n as u128)
}

/// `n/sigma(n)` in lowest terms.
pub fn reciprocal_abundancy(n: u64, table: Option<&dyn SigmaLookup>) -> Result<Fraction> {
    assert!(n >= 1, "reciprocal_abundancy requires n >= 1");
    Fraction::from_wide(n as u128, sigma_via(n, table))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::prime::primes_up_to;
    use rand::{Rng, SeedableRng};

    fn brute_sigma(n: u64) -> u64 {
        (1..=n).filter(|d| n % d == 0).sum()
    }

    fn frac(n: u64, d: u64) -> Fraction {
        Fraction::new(n, d).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(sigma(12).unwrap(), 28);
        assert_eq!(sigma(1).unwrap(), 1);
        // 255 * 121 * 6 * 8 * 133 * 18 * 20
        let product: u64 = [255u64, 121, 6, 8, 133, 18, 20].iter().product();
        assert_eq!(product, 70_912_195_200);
        assert_eq!(sigma(14_182_439_040).unwrap(), product);
        assert_eq!(product, 5 * 14_182_439_040);
    }

    #[test]
    fn overflow_is_reported() {
        // u64::MAX - 15 is divisible by 16, so sigma exceeds 1.9n
        let n = u64::MAX - 15;
        assert!(matches!(sigma(n), Err(Error::Overflow(_))));
        assert!(sigma_wide(n) > u64::MAX as u128);
        // largest 64-bit prime: p + 1 still fits
        assert_eq!(
            sigma(18_446_744_073_709_551_557).unwrap(),
            18_446_744_073_709_551_558
        );
    }

    #[test]
    fn matches_brute_force_up_to_ten_thousand() {
        for n in 1..=10_000 {
            assert_eq!(sigma(n).unwrap(), brute_sigma(n), "n = {n}");
        }
    }

    #[test]
    fn primes_have_sigma_p_plus_one() {
        for p in primes_up_to(10_000) {
            let p = p as u64;
            assert_eq!(sigma(p).unwrap(), p + 1);
            assert_eq!(abundancy(p, None).unwrap(), frac(p + 1, p));
        }
    }

    #[test]
    fn multiplicative_on_random_coprime_pairs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 1000 {
            let a = rng.gen_range(1..=100_000u64);
            let b = rng.gen_range(1..=1_000_000_000 / a);
            if num_integer::gcd(a, b) != 1 {
                continue;
            }
            assert_eq!(sigma(a * b).unwrap(), sigma(a).unwrap() * sigma(b).unwrap());
            checked += 1;
        }
    }

    #[test]
    fn abundancy_examples() {
        assert_eq!(abundancy(6, None).unwrap(), Fraction::integer(2));
        assert_eq!(abundancy(12, None).unwrap(), frac(7, 3));
        assert_eq!(abundancy(4, None).unwrap(), frac(7, 4));
        assert_eq!(abundancy(1, None).unwrap(), Fraction::one());
    }

    #[test]
    fn reciprocal_examples() {
        let r12 = reciprocal_abundancy(12, None).unwrap();
        let r4 = reciprocal_abundancy(4, None).unwrap();
        assert_eq!(r12, frac(3, 7));
        assert_eq!(r4, frac(4, 7));
        assert_eq!(r12 + r4, Fraction::one());
        assert_eq!(reciprocal_abundancy(1, None).unwrap(), Fraction::one());
        for n in 1..500 {
            assert_eq!(
                reciprocal_abundancy(n, None).unwrap(),
                abundancy(n, None).unwrap().recip().unwrap()
            );
        }
    }

    struct Fixed;
    impl SigmaLookup for Fixed {
        fn sigma_of(&self, n: u64) -> Option<u64> {
            (n == 12).then_some(28)
        }
    }

    #[test]
    fn table_is_used_when_it_covers_n() {
        assert_eq!(abundancy(12, Some(&Fixed)).unwrap(), frac(7, 3));
        assert_eq!(abundancy(4, Some(&Fixed)).unwrap(), frac(7, 4));
    }
}
