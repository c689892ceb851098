//! Perfect / abundant / deficient classification, multiply-perfect orders,
//! even perfect numbers from Mersenne primes, and friendly clubs.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::prime::lucas_lehmer;
use crate::arith::{sigma_wide, SigmaTable};
use crate::error::{domain, Result};
use crate::{Fraction, Natural};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Classification {
    Perfect,
    Abundant,
    Deficient,
}

impl Classification {
    /// Exact comparison of `sigma` with `2n`.
    pub fn from_sigma(n: u64, sigma: u128) -> Self {
        let twice = 2 * n as u128;
        match sigma.cmp(&twice) {
            std::cmp::Ordering::Equal => Self::Perfect,
            std::cmp::Ordering::Greater => Self::Abundant,
            std::cmp::Ordering::Less => Self::Deficient,
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Self::Perfect => "Perfect",
            Self::Abundant => "Abundant",
            Self::Deficient => "Deficient",
        };
        f.write_str(name)
    }
}

/// `1` is deficient.
pub fn classify(n: u64) -> Classification {
    assert!(n >= 1, "classify requires n >= 1");
    Classification::from_sigma(n, sigma_wide(n))
}

/// `k` with `sigma(n) = k * n`, if any.
pub fn multiply_perfect_order(n: u64) -> Option<u64> {
    assert!(n >= 1, "multiply_perfect_order requires n >= 1");
    order_from_sigma(n, sigma_wide(n))
}

pub(crate) fn order_from_sigma(n: u64, sigma: u128) -> Option<u64> {
    let n = n as u128;
    (sigma % n == 0).then(|| (sigma / n) as u64)
}

/// `2^(p-1) * (2^p - 1)` when `2^p - 1` is prime, `None` when it is
/// composite. Errors for `p < 2` and for exponents whose perfect number
/// would not fit in 64 bits (`p >= 33`).
pub fn euclid_euler(p: u32) -> Result<Option<u64>> {
    if p < 2 {
        return Err(domain(format!("exponent {p} below 2")));
    }
    if p > 32 {
        return Err(domain(format!(
            "exponent {p}: 2^(p-1) * (2^p - 1) exceeds 64 bits"
        )));
    }
    if !lucas_lehmer(p) {
        return Ok(None);
    }
    let mersenne = (1u64 << p) - 1;
    Ok(Some((1u64 << (p - 1)) * mersenne))
}

/// Numbers sharing one abundancy index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FriendlyClub {
    pub index: Fraction,
    pub members: Vec<u64>,
}

/// Every club with at least two members among `1..=n_max`, ordered by
/// smallest member.
pub fn friendly_clubs<W: Natural>(n_max: u64, table: &SigmaTable<W>) -> Result<Vec<FriendlyClub>> {
    table.require(n_max)?;
    let mut by_index: HashMap<Fraction, Vec<u64>> = HashMap::new();
    for n in 1..=n_max {
        let index = Fraction::from_wide(table.sigma(n) as u128, n as u128)?;
        by_index.entry(index).or_default().push(n);
    }
    let mut clubs: Vec<FriendlyClub> = by_index
        .into_iter()
        .filter(|(_, members)| members.len() >= 2)
        .map(|(index, members)| FriendlyClub { index, members })
        .collect();
    clubs.sort_by_key(|c| c.members[0]);
    Ok(clubs)
}
