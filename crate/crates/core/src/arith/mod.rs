//! Exact integer and rational arithmetic: factorization, divisor sums,
//! the bulk sigma sieve and abundancy indices.

pub mod cache;
mod factor;
mod fraction;
pub mod prime;
mod sieve;
mod sigma;

pub use factor::{factorize, Factorization};
pub use fraction::ReducedFraction;
pub use sieve::{sigma_sieve, SegmentedSigma, SigmaTable, SEGMENTED_LIMIT};
pub use sigma::{abundancy, reciprocal_abundancy, sigma, sigma_wide, SigmaLookup};
