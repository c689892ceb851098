//! Exact non-negative rationals kept in lowest terms.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use num_integer::Integer;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Error, Result};
use crate::num::Natural;

/// A fraction `num/den` with `gcd(num, den) = 1` and `den >= 1`.
///
/// The canonical form makes the derived `Eq` and `Hash` exact, so fractions
/// can key hash maps directly. Ordering is by cross-multiplication in
/// `u128`; no floating point is involved anywhere.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReducedFraction<T: Natural> {
    num: T,
    den: T,
}

impl<T: Natural> ReducedFraction<T> {
    pub fn new(num: T, den: T) -> Result<Self> {
        if den.is_zero() {
            return Err(domain("fraction with zero denominator"));
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: T, den: T) -> Self {
        let g = num.gcd(&den);
        Self {
            num: num / g,
            den: den / g,
        }
    }

    /// Builds from `u128` parts, reducing before narrowing.
    pub fn from_wide(num: u128, den: u128) -> Result<Self> {
        if den == 0 {
            return Err(domain("fraction with zero denominator"));
        }
        let g = num.gcd(&den);
        match (T::narrow(num / g), T::narrow(den / g)) {
            (Some(num), Some(den)) => Ok(Self { num, den }),
            _ => Err(Error::Overflow("fraction does not fit the scalar type")),
        }
    }

    /// Caller guarantees the parts are already coprime and `den >= 1`.
    pub(crate) fn from_reduced_parts(num: T, den: T) -> Self {
        debug_assert!(!den.is_zero() && num.gcd(&den) == T::one());
        Self { num, den }
    }

    pub fn integer(value: T) -> Self {
        Self {
            num: value,
            den: T::one(),
        }
    }

    pub fn zero() -> Self {
        Self::integer(T::zero())
    }

    pub fn one() -> Self {
        Self::integer(T::one())
    }

    pub fn numer(&self) -> T {
        self.num
    }

    pub fn denom(&self) -> T {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den == T::one()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(domain("reciprocal of zero"));
        }
        Ok(Self {
            num: self.den,
            den: self.num,
        })
    }

    /// `1 - self` for `self <= 1`. The result of `(d - n)/d` is already
    /// reduced because `gcd(d - n, d) = gcd(n, d) = 1`.
    pub fn complement(&self) -> Option<Self> {
        let rest = self.den.checked_sub(&self.num)?;
        Some(Self::from_reduced_parts(rest, self.den))
    }

    pub fn checked_add(&self, rhs: &Self) -> Option<Self> {
        let num = self.num.widen() * rhs.den.widen() + rhs.num.widen() * self.den.widen();
        let den = self.den.widen() * rhs.den.widen();
        Self::from_wide(num, den).ok()
    }

    /// `None` when the difference would be negative or overflow `T`.
    pub fn checked_sub(&self, rhs: &Self) -> Option<Self> {
        let left = self.num.widen() * rhs.den.widen();
        let right = rhs.num.widen() * self.den.widen();
        let num = left.checked_sub(right)?;
        Self::from_wide(num, self.den.widen() * rhs.den.widen()).ok()
    }

    pub fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        Self::from_wide(
            self.num.widen() * rhs.num.widen(),
            self.den.widen() * rhs.den.widen(),
        )
        .ok()
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.num.is_zero() {
            return None;
        }
        Self::from_wide(
            self.num.widen() * rhs.den.widen(),
            self.den.widen() * rhs.num.widen(),
        )
        .ok()
    }

    /// Multiplies by a small natural.
    pub fn checked_scale(&self, factor: u64) -> Option<Self> {
        Self::from_wide(self.num.widen() * factor as u128, self.den.widen()).ok()
    }

    /// `floor(self)`.
    pub fn floor(&self) -> T {
        self.num / self.den
    }

    /// Presentation only.
    pub fn to_f64(&self) -> f64 {
        self.num.widen() as f64 / self.den.widen() as f64
    }

    /// Decimal rendering truncated (not rounded) to `places` digits.
    pub fn to_decimal(&self, places: usize) -> String {
        let den = self.den.widen();
        let mut out = (self.num.widen() / den).to_string();
        let mut rem = self.num.widen() % den;
        if places > 0 {
            out.push('.');
            for _ in 0..places {
                rem *= 10;
                out.push(char::from(b'0' + (rem / den) as u8));
                rem %= den;
            }
        }
        out
    }

    /// Converts to another scalar width.
    pub fn cast<U: Natural>(&self) -> Result<ReducedFraction<U>> {
        ReducedFraction::<U>::from_wide(self.num.widen(), self.den.widen())
    }
}

impl<T: Natural> Ord for ReducedFraction<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num.widen() * other.den.widen()).cmp(&(other.num.widen() * self.den.widen()))
    }
}

impl<T: Natural> PartialOrd for ReducedFraction<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Natural> Add for ReducedFraction<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("fraction addition overflow")
    }
}

impl<T: Natural> Sub for ReducedFraction<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs)
            .expect("fraction subtraction underflow or overflow")
    }
}

impl<T: Natural> fmt::Display for ReducedFraction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl<T: Natural> fmt::Debug for ReducedFraction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl<T: Natural> FromStr for ReducedFraction<T> {
    type Err = Error;

    /// Accepts `a/b` or a bare integer `a`.
    fn from_str(s: &str) -> Result<Self> {
        let parse = |part: &str| {
            part.trim()
                .parse::<T>()
                .map_err(|_| domain(format!("invalid fraction `{s}`")))
        };
        match s.split_once('/') {
            Some((num, den)) => Self::new(parse(num)?, parse(den)?),
            None => Ok(Self::integer(parse(s)?)),
        }
    }
}

impl<T: Natural> Serialize for ReducedFraction<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de, T: Natural> Deserialize<'de> for ReducedFraction<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}
