//! Abundancy outlaws: rationals above 1 that are not `sigma(n)/n` for any n.
//!
//! A fraction `k/m` in lowest terms with `m < k < sigma(m)` is never an
//! abundancy index: `m * sigma(n) = k * n` forces `m | n`, and then
//! `sigma(n)/n >= sigma(m)/m > k/m`. That certificate is all this module
//! ever calls a proof; failing it only leads to a bounded witness search,
//! and an empty search is reported as `Unknown`, never as an outlaw.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::prime::next_prime_above;
use crate::arith::{abundancy, sigma_wide, SegmentedSigma};
use crate::error::{domain, Error, Result};
use crate::Fraction;

/// Default upper bound for witness searches.
pub const DEFAULT_SEARCH_BOUND: u64 = 1_000_000;

/// How far [`find_outlaw_near`] looks for an index close to its target.
pub const NEAR_INDEX_BOUND: u64 = 10_000_000;

// Denominators at least this large are searched through their multiples
// by factorization instead of a full segmented scan.
const SPARSE_DENOMINATOR: u64 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum OutlawVerdict {
    ProvenOutlaw,
    /// Smallest `n` with this abundancy index.
    Index(u64),
    /// No witness up to the given bound, and no certificate.
    Unknown(u64),
}

impl fmt::Display for OutlawVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ProvenOutlaw => write!(f, "ProvenOutlaw"),
            Self::Index(w) => write!(f, "Index({w})"),
            Self::Unknown(b) => write!(f, "Unknown({b})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LonelyVerdict {
    /// The index a partner would need is a certified outlaw.
    ProvenLonely,
    PartnerExists(u64),
    Unknown(u64),
    /// `n = 1`: `1/lambda(1) = 1` leaves nothing for a partner.
    UnitNoPartner,
}

impl fmt::Display for LonelyVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ProvenLonely => write!(f, "ProvenLonely"),
            Self::PartnerExists(w) => write!(f, "PartnerExists({w})"),
            Self::Unknown(b) => write!(f, "Unknown({b})"),
            Self::UnitNoPartner => write!(f, "UnitNoPartner"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LonelyReport {
    pub n: u64,
    pub verdict: LonelyVerdict,
    /// Abundancy index any feebly amicable partner of `n` must have.
    pub required_index: Option<Fraction>,
}

impl LonelyReport {
    /// A number with no feebly amicable partner has no amicable partner,
    /// since amicable pairs are feebly amicable.
    pub fn no_amicable_partner(&self) -> bool {
        matches!(
            self.verdict,
            LonelyVerdict::ProvenLonely | LonelyVerdict::UnitNoPartner
        )
    }
}

impl fmt::Display for LonelyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.verdict, self.required_index) {
            (LonelyVerdict::ProvenLonely, Some(q)) => write!(
                f,
                "ProvenLonely; partner would need index {q} (outlaw); no amicable partner either"
            ),
            (LonelyVerdict::PartnerExists(w), Some(q)) => {
                write!(f, "PartnerExists({w}); partner index {q}")
            }
            (LonelyVerdict::Unknown(b), Some(q)) => write!(
                f,
                "Unknown; partner would need index {q}; none found up to {b} and no outlaw certificate"
            ),
            _ => write!(f, "UnitNoPartner; 1 cannot be feebly amicable with any number"),
        }
    }
}

/// `m < k < sigma(m)` for `q = k/m` in lowest terms.
pub fn outlaw_certificate(q: &Fraction) -> bool {
    let (k, m) = (q.numer(), q.denom());
    m < k && (k as u128) < sigma_wide(m)
}

fn require_above_one(q: &Fraction) -> Result<()> {
    if *q <= Fraction::one() {
        return Err(domain(format!(
            "{q} is not above 1; abundancy indices of n > 1 exceed 1"
        )));
    }
    Ok(())
}

/// Decides `q` as far as possible: certified outlaw, smallest witness up to
/// `search_bound`, or unknown.
pub fn is_outlaw(q: Fraction, search_bound: u64) -> Result<OutlawVerdict> {
    require_above_one(&q)?;
    if outlaw_certificate(&q) {
        return Ok(OutlawVerdict::ProvenOutlaw);
    }
    Ok(match smallest_witness(q, search_bound, None)? {
        Some(w) => OutlawVerdict::Index(w),
        None => OutlawVerdict::Unknown(search_bound),
    })
}

/// Smallest `w <= bound`, `w != exclude`, with `sigma(w)/w = q`.
pub(crate) fn smallest_witness(
    q: Fraction,
    bound: u64,
    exclude: Option<u64>,
) -> Result<Option<u64>> {
    if q.denom() >= SPARSE_DENOMINATOR {
        witness_by_multiples(q, bound, exclude)
    } else {
        witness_by_scan(q, bound, exclude)
    }
}

// sigma(w) * m = k * w forces m | w.
fn witness_by_multiples(q: Fraction, bound: u64, exclude: Option<u64>) -> Result<Option<u64>> {
    let (k, m) = (q.numer() as u128, q.denom());
    let mut w = m;
    while w <= bound {
        if Some(w) != exclude && sigma_wide(w) * m as u128 == k * w as u128 {
            return Ok(Some(w));
        }
        w = match w.checked_add(m) {
            Some(next) => next,
            None => break,
        };
    }
    Ok(None)
}

fn witness_by_scan(q: Fraction, bound: u64, exclude: Option<u64>) -> Result<Option<u64>> {
    if bound == 0 {
        return Ok(None);
    }
    let (k, m) = (q.numer() as u128, q.denom() as u128);
    let scan = SegmentedSigma::new(1..=bound)?;
    Ok(scan.find_first(|n, s| Some(n) != exclude && s as u128 * m == k * n as u128))
}

/// `a/(a-b)` where `lambda(n) = a/b`: the index a feebly amicable partner
/// of `n` must have. Already reduced since `gcd(a, a-b) = gcd(a, b) = 1`.
pub fn required_partner_index(n: u64) -> Result<Fraction> {
    if n == 1 {
        return Err(Error::UnitNoPartner);
    }
    let index = abundancy(n, None)?;
    let (a, b) = (index.numer(), index.denom());
    Fraction::new(a, a - b)
}

/// Whether `n` can have a feebly amicable partner, as far as can be
/// decided with a certificate or a witness up to `search_bound`.
pub fn lonely_verdict(n: u64, search_bound: u64) -> Result<LonelyReport> {
    assert!(n >= 1, "lonely_verdict requires n >= 1");
    if n == 1 {
        return Ok(LonelyReport {
            n,
            verdict: LonelyVerdict::UnitNoPartner,
            required_index: None,
        });
    }
    let required = required_partner_index(n)?;
    let verdict = if outlaw_certificate(&required) {
        LonelyVerdict::ProvenLonely
    } else {
        match smallest_witness(required, search_bound, Some(n))? {
            Some(w) => LonelyVerdict::PartnerExists(w),
            None => LonelyVerdict::Unknown(search_bound),
        }
    };
    Ok(LonelyReport {
        n,
        verdict,
        required_index: Some(required),
    })
}

fn open_interval(x: Fraction, eps: Fraction) -> Result<(Fraction, Fraction)> {
    if eps.is_zero() {
        return Err(domain("eps must be positive"));
    }
    let lo = x
        .checked_sub(&eps)
        .filter(|lo| *lo > Fraction::one())
        .ok_or_else(|| {
            domain(format!(
                "interval ({x} - {eps}, {x} + {eps}) not inside (1, inf)"
            ))
        })?;
    let hi = x.checked_add(&eps).ok_or(Error::Overflow("x + eps"))?;
    Ok((lo, hi))
}

/// Smallest `n <= bound` whose abundancy index lies strictly inside
/// `(x - eps, x + eps)`, with that index.
pub fn find_index_near(x: Fraction, eps: Fraction, bound: u64) -> Result<Option<(u64, Fraction)>> {
    let (lo, hi) = open_interval(x, eps)?;
    if bound == 0 {
        return Ok(None);
    }
    let (lo_n, lo_d) = (lo.numer() as u128, lo.denom() as u128);
    let (hi_n, hi_d) = (hi.numer() as u128, hi.denom() as u128);
    let scan = SegmentedSigma::new(1..=bound)?;
    let found = scan.find_first(|n, s| {
        let (n, s) = (n as u128, s as u128);
        s * lo_d > n * lo_n && s * hi_d < n * hi_n
    });
    found.map(|n| Ok((n, abundancy(n, None)?))).transpose()
}

/// An outlaw strictly inside `(x - eps, x + eps)`.
///
/// Picks the smallest `m` whose index is within `eps/2` of `x`, the
/// smallest prime `p > max{2m, (2x + eps)/eps, 4/eps}`, and the smallest
/// `k` in `1..=2m` with `sigma(pm) - k` coprime to `pm`; the answer is
/// `(sigma(pm) - k)/(pm)`. Among any `2m` consecutive integers one is
/// coprime to `pm` when `p > 2m`, so such a `k` always exists.
pub fn find_outlaw_near(x: Fraction, eps: Fraction) -> Result<Fraction> {
    let (lo, hi) = open_interval(x, eps)?;
    let half = eps
        .checked_div(&Fraction::integer(2))
        .ok_or(Error::Overflow("eps / 2"))?;
    let (m, _) = find_index_near(x, half, NEAR_INDEX_BOUND)?.ok_or_else(|| {
        Error::SearchExhausted(format!(
            "no abundancy index within {half} of {x} below {NEAR_INDEX_BOUND}"
        ))
    })?;

    let overflow = || Error::Overflow("outlaw construction");
    let two_m = Fraction::integer(2 * m);
    let ratio = x
        .checked_scale(2)
        .and_then(|t| t.checked_add(&eps))
        .and_then(|t| t.checked_div(&eps))
        .ok_or_else(overflow)?;
    let four_over_eps = Fraction::integer(4)
        .checked_div(&eps)
        .ok_or_else(overflow)?;
    let threshold = two_m.max(ratio).max(four_over_eps);
    // p > t  <=>  p > floor(t) for integer p
    let p = next_prime_above(threshold.floor()).ok_or_else(overflow)?;

    let pm = p.checked_mul(m).ok_or_else(overflow)?;
    let sigma_pm = u64::try_from(sigma_wide(pm)).map_err(|_| overflow())?;
    let k = (1..=2 * m)
        .find(|&k| (sigma_pm - k).gcd(&pm) == 1)
        .expect("a window of 2m integers holds one coprime to pm when p > 2m");

    let q = Fraction::new(sigma_pm - k, pm)?;
    debug_assert!(outlaw_certificate(&q) && lo < q && q < hi);
    Ok(q)
}
