//! Divisor sums, exact abundancy indices, feebly amicable (harmonious)
//! pairs and k-tuples, and abundancy outlaws.
//!
//! Everything that compares abundancy indices does so with exact fractions.
//! The fraction and sieve-table types are generic over the unsigned word
//! they store; the aliases below fix the widths used throughout the crate.

pub mod arith;
pub mod classify;
pub mod cli;
mod error;
mod num;
pub mod outlaws;
pub mod pairs;
pub mod stats;

pub use arith::{
    abundancy, factorize, reciprocal_abundancy, sigma, sigma_sieve, Factorization, ReducedFraction,
    SegmentedSigma, SigmaLookup, SigmaTable,
};
pub use classify::{
    classify, euclid_euler, friendly_clubs, multiply_perfect_order, Classification, FriendlyClub,
};
pub use error::{Error, Result};
pub use num::Natural;
pub use outlaws::{
    find_index_near, find_outlaw_near, is_outlaw, lonely_verdict, required_partner_index,
    LonelyReport, LonelyVerdict, OutlawVerdict,
};
pub use pairs::{
    amicable_pairs, coprime_feebly_pairs, feebly_ktuples, feebly_ktuples_from, feebly_pairs,
    is_feebly_pair, KTupleRecord, PairFilters, PairRecord,
};
pub use stats::{abundancy_histogram, abundant_fraction, band_report, BandReport, HistogramBins};

/// Exact rational with 64-bit parts; every abundancy index in the crate.
pub type Fraction = ReducedFraction<u64>;
/// Exact rational with 32-bit parts.
pub type Fraction32 = ReducedFraction<u32>;
/// Sigma table with 64-bit entries; the on-disk cache format.
pub type Table = SigmaTable<u64>;
/// Sigma table with 32-bit entries, half the memory; valid while every
/// sigma(n) fits in 32 bits, which holds well past 10^8.
pub type CompactTable = SigmaTable<u32>;
