//! Density and distribution reports over a sigma table.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::arith::SigmaTable;
use crate::error::{domain, Result};
use crate::pairs::{feebly_pairs, PairFilters};
use crate::{Fraction, Natural};

/// Fraction of abundant numbers (`sigma(n) > 2n`) among `1..=n_max`.
pub fn abundant_fraction<W: Natural>(n_max: u64, table: &SigmaTable<W>) -> Result<Fraction> {
    if n_max == 0 {
        return Err(domain("abundant fraction needs n_max >= 1"));
    }
    table.require(n_max)?;
    let abundant = table
        .iter()
        .take(n_max as usize)
        .filter(|&(n, s)| s > 2 * n)
        .count() as u64;
    Fraction::new(abundant, n_max)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistogramBin {
    pub lower_edge: Fraction,
    pub count: u64,
}

/// Counts of abundancy indices in half-open bins `[1 + i*w, 1 + (i+1)*w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistogramBins {
    pub bin_width: Fraction,
    pub bins: Vec<HistogramBin>,
}

impl HistogramBins {
    pub fn total(&self) -> u64 {
        self.bins.iter().map(|b| b.count).sum()
    }

    pub fn write_csv<O: Write>(&self, out: O) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["lower_edge", "upper_edge", "count"])?;
        for bin in &self.bins {
            let upper = bin.lower_edge + self.bin_width;
            w.write_record([
                bin.lower_edge.to_string(),
                upper.to_string(),
                bin.count.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Histogram of `sigma(n)/n` for `1..=n_max`, bins from 1 up to the
/// largest index, empty bins included.
pub fn abundancy_histogram<W: Natural>(
    n_max: u64,
    table: &SigmaTable<W>,
    bin_width: Fraction,
) -> Result<HistogramBins> {
    if bin_width.is_zero() {
        return Err(domain("bin width must be positive"));
    }
    if n_max == 0 {
        return Err(domain("histogram needs n_max >= 1"));
    }
    table.require(n_max)?;
    let (wn, wd) = (bin_width.numer() as u128, bin_width.denom() as u128);
    // bin of sigma/n is floor((sigma/n - 1) / w) = floor((sigma - n) * wd / (n * wn))
    let mut counts: Vec<u64> = Vec::new();
    for (n, s) in table.iter().take(n_max as usize) {
        let bin = ((s - n) as u128 * wd / (n as u128 * wn)) as usize;
        if bin >= counts.len() {
            counts.resize(bin + 1, 0);
        }
        counts[bin] += 1;
    }
    let bins = counts
        .into_iter()
        .enumerate()
        .map(|(i, count)| {
            let lower_edge = bin_width
                .checked_scale(i as u64)
                .and_then(|x| x.checked_add(&Fraction::one()))
                .expect("bin edge fits");
            HistogramBin { lower_edge, count }
        })
        .collect();
    Ok(HistogramBins { bin_width, bins })
}

/// Membership rule used by [`band_report`], printed with every report.
pub const BAND_CONVENTION: &str = "a pair is counted in the band containing its larger member; \
     amicable pairs, pairs of perfect numbers and self-pairs are excluded";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandReport {
    pub band: (u64, u64),
    pub pair_count: u64,
    pub div10_count: u64,
    pub div10_fraction: Fraction,
}

impl BandReport {
    pub fn csv_header() -> [&'static str; 5] {
        ["lo", "hi", "pair_count", "div10_count", "div10_fraction"]
    }

    pub fn csv_row(&self) -> [String; 5] {
        [
            self.band.0.to_string(),
            self.band.1.to_string(),
            self.pair_count.to_string(),
            self.div10_count.to_string(),
            self.div10_fraction.to_string(),
        ]
    }
}

/// Per band `(lo, hi)` (inclusive), the feebly amicable pairs whose larger
/// member falls in the band and how many of them sum to a multiple of 10.
/// Amicable pairs and pairs of perfect numbers are left out.
pub fn band_report<W: Natural>(
    bands: &[(u64, u64)],
    table: &SigmaTable<W>,
) -> Result<Vec<BandReport>> {
    let mut sorted = bands.to_vec();
    sorted.sort_unstable();
    for &(lo, hi) in &sorted {
        if lo == 0 || lo > hi {
            return Err(domain(format!("invalid band ({lo}, {hi})")));
        }
    }
    if sorted.windows(2).any(|w| w[1].0 <= w[0].1) {
        return Err(domain("bands overlap"));
    }
    let top = sorted.last().map_or(1, |b| b.1);
    table.require(top)?;
    let pairs = feebly_pairs(top, table, PairFilters::proper())?;

    bands
        .iter()
        .map(|&(lo, hi)| {
            let (pair_count, div10_count) = pairs
                .iter()
                .filter(|p| (lo..=hi).contains(&p.large))
                .fold((0u64, 0u64), |(c, d), p| {
                    (c + 1, d + u64::from((p.small + p.large) % 10 == 0))
                });
            let div10_fraction = if pair_count == 0 {
                Fraction::zero()
            } else {
                Fraction::new(div10_count, pair_count)?
            };
            Ok(BandReport {
                band: (lo, hi),
                pair_count,
                div10_count,
                div10_fraction,
            })
        })
        .collect()
}
