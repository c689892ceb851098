//! Unsigned integer scalars shared by fractions and sieve tables.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{NumCast, PrimInt, Unsigned};

/// An unsigned machine integer no wider than 64 bits.
///
/// Every product of two values fits in `u128`, which is what exact
/// comparison and addition of fractions rely on.
pub trait Natural:
    PrimInt + Unsigned + Integer + Hash + Debug + Display + FromStr + Send + Sync + 'static
{
    fn widen(self) -> u128 {
        // lossless for every implementor
        self.to_u128().expect("natural fits in u128")
    }

    fn narrow(value: u128) -> Option<Self> {
        <Self as NumCast>::from(value)
    }

    fn from_u64(value: u64) -> Option<Self> {
        <Self as NumCast>::from(value)
    }

    fn to_u64_lossless(self) -> u64 {
        self.to_u64().expect("natural fits in u64")
    }
}

impl Natural for u32 {}
impl Natural for u64 {}
