//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arith::{cache, sigma_wide, SigmaTable};
use crate::classify::{euclid_euler, order_from_sigma, Classification};
use crate::error::{domain, Result};
use crate::outlaws::{self, DEFAULT_SEARCH_BOUND};
use crate::pairs::{self, KTupleRecord, PairFilters, PairRecord};
use crate::stats::{self, BandReport, BAND_CONVENTION};
use crate::{Fraction, Table};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Table,
    Csv,
    Jsonl,
}

#[derive(Debug, Parser)]
#[command(
    name = "abundancy",
    version,
    about = "Divisor sums, abundancy indices and feebly amicable pairs"
)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    pub format: OutputFormat,

    /// Directory for cached sigma tables.
    #[arg(long, global = true, env = "ABUNDANCY_CACHE_DIR")]
    pub cache: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FilterArgs {
    #[arg(long)]
    pub only_coprime: bool,
    #[arg(long)]
    pub exclude_amicable: bool,
    /// Drop pairs made of two perfect numbers.
    #[arg(long)]
    pub exclude_perfect_pairs: bool,
    /// Also list (n, n) for perfect n.
    #[arg(long)]
    pub include_self_pairs: bool,
    /// List amicable pairs only.
    #[arg(long, conflicts_with_all = ["only_coprime", "exclude_amicable", "include_self_pairs"])]
    pub only_amicable: bool,
}

impl FilterArgs {
    fn filters(&self) -> PairFilters {
        PairFilters {
            exclude_amicable: self.exclude_amicable,
            exclude_both_perfect: self.exclude_perfect_pairs,
            only_coprime: self.only_coprime,
            include_self_pairs: self.include_self_pairs,
        }
    }
}

fn positive(s: &str) -> std::result::Result<u64, String> {
    match s.parse::<u64>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn fraction(s: &str) -> std::result::Result<Fraction, String> {
    s.parse::<Fraction>().map_err(|e| e.to_string())
}

fn band(s: &str) -> std::result::Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once('-')
        .ok_or_else(|| format!("band `{s}` is not of the form LO-HI"))?;
    Ok((positive(lo.trim())?, positive(hi.trim())?))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build (or load from cache) a sigma table and summarize it.
    Sieve {
        #[arg(long, value_parser = positive)]
        max: u64,
    },
    /// Classify numbers as perfect, abundant or deficient.
    Classify {
        #[arg(required = true, value_parser = positive)]
        numbers: Vec<u64>,
    },
    /// Enumerate feebly amicable pairs with larger member up to --max.
    Pairs {
        #[arg(long, value_parser = positive)]
        max: u64,
        #[command(flatten)]
        filters: FilterArgs,
    },
    /// Enumerate feebly amicable k-tuples.
    Ktuples {
        #[arg(long, value_parser = positive)]
        max: u64,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 100)]
        limit: usize,
        /// Only tuples whose smallest member lies in LO-HI.
        #[arg(long, value_parser = band)]
        first: Option<(u64, u64)>,
    },
    /// Decide whether a fraction is an abundancy index, or build an outlaw
    /// near a target with --near and --eps.
    Outlaw {
        #[arg(value_parser = fraction, required_unless_present = "near", conflicts_with = "near")]
        fraction: Option<Fraction>,
        #[arg(long, value_parser = fraction, requires = "eps")]
        near: Option<Fraction>,
        #[arg(long, value_parser = fraction)]
        eps: Option<Fraction>,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        search_bound: u64,
    },
    /// Decide whether a number can have a feebly amicable partner.
    Lonely {
        #[arg(value_parser = positive)]
        n: u64,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BOUND)]
        search_bound: u64,
    },
    /// Abundant density, abundancy histogram and per-band pair statistics.
    Stats {
        #[arg(long, value_parser = positive, default_value_t = 100_000)]
        max: u64,
        #[arg(long, value_parser = fraction)]
        bin_width: Option<Fraction>,
        /// Comma-separated LO-HI bands, e.g. 1-5000,5001-10000.
        #[arg(long, value_parser = band, value_delimiter = ',')]
        bands: Vec<(u64, u64)>,
    },
    /// Recompute the published reference values and report each one.
    Check,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Success,
    /// `check` ran and at least one item failed.
    ChecksFailed,
}

fn table_for(config: &RunConfig, bound: u64) -> Result<Table> {
    cache::load_or_build(bound, config.cache.as_deref())
}

fn write_jsonl<T: Serialize, O: Write>(out: &mut O, records: &[T]) -> Result<()> {
    for rec in records {
        serde_json::to_writer(&mut *out, rec)?;
        writeln!(out)?;
    }
    Ok(())
}

fn write_csv<T: Serialize, O: Write>(out: &mut O, records: &[T]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for rec in records {
        w.serialize(rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn run<O: Write>(config: &RunConfig, out: &mut O) -> Result<Outcome> {
    match &config.command {
        Command::Sieve { max } => sieve(config, *max, out)?,
        Command::Classify { numbers } => classify(config, numbers, out)?,
        Command::Pairs { max, filters } => pairs(config, *max, filters, out)?,
        Command::Ktuples {
            max,
            k,
            limit,
            first,
        } => ktuples(config, *max, *k, *limit, *first, out)?,
        Command::Outlaw {
            fraction,
            near,
            eps,
            search_bound,
        } => outlaw(config, *fraction, near.zip(*eps), *search_bound, out)?,
        Command::Lonely { n, search_bound } => lonely(config, *n, *search_bound, out)?,
        Command::Stats {
            max,
            bin_width,
            bands,
        } => stats(config, *max, *bin_width, bands, out)?,
        Command::Check => return check(config, out),
    }
    Ok(Outcome::Success)
}

#[derive(Serialize)]
struct SieveSummary {
    bound: u64,
    abundant: u64,
    perfect: u64,
    deficient: u64,
    abundant_fraction: Fraction,
}

fn sieve<O: Write>(config: &RunConfig, max: u64, out: &mut O) -> Result<()> {
    let table = table_for(config, max)?;
    let mut counts = [0u64; 3];
    for (n, s) in table.iter().take(max as usize) {
        counts[Classification::from_sigma(n, s as u128) as usize] += 1;
    }
    let summary = SieveSummary {
        bound: max,
        perfect: counts[Classification::Perfect as usize],
        abundant: counts[Classification::Abundant as usize],
        deficient: counts[Classification::Deficient as usize],
        abundant_fraction: Fraction::new(counts[Classification::Abundant as usize], max)?,
    };
    match config.format {
        OutputFormat::Table => {
            writeln!(out, "sigma table 1..={}", summary.bound)?;
            writeln!(out, "perfect    {}", summary.perfect)?;
            writeln!(out, "abundant   {}", summary.abundant)?;
            writeln!(out, "deficient  {}", summary.deficient)?;
            writeln!(
                out,
                "abundant fraction {} = {}",
                summary.abundant_fraction,
                summary.abundant_fraction.to_decimal(7)
            )?;
        }
        OutputFormat::Csv => write_csv(out, &[summary])?,
        OutputFormat::Jsonl => write_jsonl(out, &[summary])?,
    }
    Ok(())
}

#[derive(Serialize)]
struct ClassifyRecord {
    n: u64,
    sigma: String,
    index: String,
    kind: Classification,
    multiply_perfect_order: Option<u64>,
}

fn classify<O: Write>(config: &RunConfig, numbers: &[u64], out: &mut O) -> Result<()> {
    let records: Vec<ClassifyRecord> = numbers
        .iter()
        .map(|&n| {
            let s = sigma_wide(n);
            let g = num_integer::gcd(s, n as u128);
            ClassifyRecord {
                n,
                sigma: s.to_string(),
                index: format!("{}/{}", s / g, n as u128 / g),
                kind: Classification::from_sigma(n, s),
                multiply_perfect_order: order_from_sigma(n, s),
            }
        })
        .collect();
    match config.format {
        OutputFormat::Table => {
            for r in &records {
                write!(
                    out,
                    "{}: {} (sigma {}, index {}",
                    r.n, r.kind, r.sigma, r.index
                )?;
                if let Some(k) = r.multiply_perfect_order.filter(|&k| k > 2) {
                    write!(out, ", multiply perfect of order {k}")?;
                }
                writeln!(out, ")")?;
            }
        }
        OutputFormat::Csv => write_csv(out, &records)?,
        OutputFormat::Jsonl => write_jsonl(out, &records)?,
    }
    Ok(())
}

fn write_pairs<O: Write>(format: OutputFormat, records: &[PairRecord], out: &mut O) -> Result<()> {
    match format {
        OutputFormat::Table => {
            writeln!(
                out,
                "{:>12} {:>12}  {:>24} {:>24}  flags",
                "small", "large", "r_small", "r_large"
            )?;
            for r in records {
                let mut flags = Vec::new();
                if r.is_amicable {
                    flags.push("amicable");
                }
                if r.is_coprime {
                    flags.push("coprime");
                }
                if r.both_perfect {
                    flags.push("perfect");
                }
                writeln!(
                    out,
                    "{:>12} {:>12}  {:>24} {:>24}  {}",
                    r.small,
                    r.large,
                    r.r_small.to_string(),
                    r.r_large.to_string(),
                    flags.join(",")
                )?;
            }
            Ok(())
        }
        OutputFormat::Csv => write_csv(out, records),
        OutputFormat::Jsonl => write_jsonl(out, records),
    }
}

fn pairs<O: Write>(config: &RunConfig, max: u64, filters: &FilterArgs, out: &mut O) -> Result<()> {
    let table = table_for(config, max)?;
    let records = if filters.only_amicable {
        let mut recs = pairs::amicable_pairs(max, &table)?;
        if filters.exclude_perfect_pairs {
            recs.retain(|r| !r.both_perfect);
        }
        recs
    } else {
        pairs::feebly_pairs(max, &table, filters.filters())?
    };
    write_pairs(config.format, &records, out)
}

fn ktuples<O: Write>(
    config: &RunConfig,
    max: u64,
    k: usize,
    limit: usize,
    first: Option<(u64, u64)>,
    out: &mut O,
) -> Result<()> {
    let table = table_for(config, max)?;
    let (lo, hi) = first.unwrap_or((2, max));
    let tuples = pairs::feebly_ktuples_from(max, k, &table, lo..=hi, limit)?;
    match config.format {
        OutputFormat::Table => {
            for t in &tuples {
                let members: Vec<String> = t.members.iter().map(u64::to_string).collect();
                let recips: Vec<String> = t.reciprocals.iter().map(Fraction::to_string).collect();
                writeln!(out, "{}  [{}]", members.join(" "), recips.join(" + "))?;
            }
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header: Vec<String> = (1..=k).map(|i| format!("member_{i}")).collect();
            header.extend((1..=k).map(|i| format!("reciprocal_{i}")));
            w.write_record(&header)?;
            for KTupleRecord {
                members,
                reciprocals,
            } in &tuples
            {
                let row = members
                    .iter()
                    .map(u64::to_string)
                    .chain(reciprocals.iter().map(Fraction::to_string));
                w.write_record(row)?;
            }
            w.flush()?;
        }
        OutputFormat::Jsonl => write_jsonl(out, &tuples)?,
    }
    Ok(())
}

#[derive(Serialize)]
struct OutlawRecord {
    fraction: Fraction,
    verdict: String,
}

fn outlaw<O: Write>(
    config: &RunConfig,
    fraction: Option<Fraction>,
    near: Option<(Fraction, Fraction)>,
    search_bound: u64,
    out: &mut O,
) -> Result<()> {
    let record = match (fraction, near) {
        (_, Some((x, eps))) => {
            let q = outlaws::find_outlaw_near(x, eps)?;
            let verdict = outlaws::is_outlaw(q, search_bound)?;
            OutlawRecord {
                fraction: q,
                verdict: format!("{verdict}; within {eps} of {x}"),
            }
        }
        (Some(q), None) => OutlawRecord {
            fraction: q,
            verdict: outlaws::is_outlaw(q, search_bound)?.to_string(),
        },
        (None, None) => return Err(domain("give a fraction or --near with --eps")),
    };
    match config.format {
        OutputFormat::Table => writeln!(out, "{}: {}", record.fraction, record.verdict)?,
        OutputFormat::Csv => write_csv(out, &[record])?,
        OutputFormat::Jsonl => write_jsonl(out, &[record])?,
    }
    Ok(())
}

#[derive(Serialize)]
struct LonelyRecord {
    n: u64,
    verdict: String,
    required_index: Option<Fraction>,
    no_amicable_partner: bool,
}

fn lonely<O: Write>(config: &RunConfig, n: u64, search_bound: u64, out: &mut O) -> Result<()> {
    let report = outlaws::lonely_verdict(n, search_bound)?;
    let record = LonelyRecord {
        n,
        verdict: report.verdict.to_string(),
        required_index: report.required_index,
        no_amicable_partner: report.no_amicable_partner(),
    };
    match config.format {
        OutputFormat::Table => writeln!(out, "{report}")?,
        OutputFormat::Csv => write_csv(out, &[record])?,
        OutputFormat::Jsonl => write_jsonl(out, &[record])?,
    }
    Ok(())
}

fn stats<O: Write>(
    config: &RunConfig,
    max: u64,
    bin_width: Option<Fraction>,
    bands: &[(u64, u64)],
    out: &mut O,
) -> Result<()> {
    let top = bands.iter().map(|b| b.1).max().unwrap_or(0).max(max);
    let table = table_for(config, top)?;
    let fraction = stats::abundant_fraction(max, &table)?;
    let histogram = bin_width
        .map(|w| stats::abundancy_histogram(max, &table, w))
        .transpose()?;
    let reports = if bands.is_empty() {
        Vec::new()
    } else {
        stats::band_report(bands, &table)?
    };

    match config.format {
        OutputFormat::Table => {
            writeln!(
                out,
                "abundant fraction 1..={max}: {fraction} = {}",
                fraction.to_decimal(7)
            )?;
            if let Some(h) = &histogram {
                writeln!(out, "abundancy histogram, bin width {}", h.bin_width)?;
                for bin in &h.bins {
                    writeln!(
                        out,
                        "  [{}, {})  {}",
                        bin.lower_edge,
                        bin.lower_edge + h.bin_width,
                        bin.count
                    )?;
                }
            }
            if !reports.is_empty() {
                write_band_table(&reports, out)?;
            }
        }
        OutputFormat::Csv => {
            if !reports.is_empty() {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(BandReport::csv_header())?;
                for r in &reports {
                    w.write_record(r.csv_row())?;
                }
                w.flush()?;
            } else if let Some(h) = &histogram {
                h.write_csv(out)?;
            } else {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["max", "abundant_fraction", "decimal"])?;
                w.write_record([
                    max.to_string(),
                    fraction.to_string(),
                    fraction.to_decimal(7),
                ])?;
                w.flush()?;
            }
        }
        OutputFormat::Jsonl => {
            if !reports.is_empty() {
                write_jsonl(out, &reports)?;
            } else if let Some(h) = &histogram {
                write_jsonl(out, &h.bins)?;
            } else {
                #[derive(Serialize)]
                struct Summary {
                    max: u64,
                    abundant_fraction: Fraction,
                }
                write_jsonl(
                    out,
                    &[Summary {
                        max,
                        abundant_fraction: fraction,
                    }],
                )?;
            }
        }
    }
    Ok(())
}

/// Reference band statistics: `(lo, hi, feebly amicable numbers, sums
/// divisible by 10)`. The reference counts numbers, two per pair.
pub const REFERENCE_BANDS: [(u64, u64, u64, u64); 3] = [
    (1, 5_000, 310, 11),
    (5_001, 10_000, 178, 8),
    (10_001, 15_000, 136, 4),
];

/// Renders band reports with the counting convention and, for bands that
/// have reference values, both counts side by side and a MATCH/MISMATCH flag.
pub fn write_band_table<O: Write>(reports: &[BandReport], out: &mut O) -> Result<()> {
    writeln!(out, "convention: {BAND_CONVENTION}")?;
    writeln!(
        out,
        "{:>7} {:>7} {:>6} {:>6} {:>9}  reference",
        "lo", "hi", "pairs", "div10", "fraction"
    )?;
    for r in reports {
        write!(
            out,
            "{:>7} {:>7} {:>6} {:>6} {:>9}",
            r.band.0,
            r.band.1,
            r.pair_count,
            r.div10_count,
            r.div10_fraction.to_decimal(3)
        )?;
        match REFERENCE_BANDS.iter().find(|b| (b.0, b.1) == r.band) {
            Some(&(_, _, numbers, div10)) => {
                let fraction = Fraction::new(div10, numbers)?;
                let matches = r.pair_count == numbers && r.div10_count == div10;
                writeln!(
                    out,
                    "  {numbers} numbers, {div10} div10 ({}) -> {}",
                    fraction.to_decimal(3),
                    if matches {
                        "MATCH"
                    } else {
                        "MISMATCH (flagged; reference convention differs)"
                    }
                )?;
            }
            None => writeln!(out, "  -")?,
        }
    }
    Ok(())
}

struct CheckItem {
    name: &'static str,
    status: CheckStatus,
    detail: String,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum CheckStatus {
    Pass,
    Fail,
    /// Reported for comparison only; the reference convention is unknown.
    Flagged,
}

#[rustfmt::skip]
const FIRST_TWENTY: [(u64, u64); 20] = [
    (4, 12), (14, 30), (10, 40), (20, 44), (8, 56), (15, 84), (26, 96), (60, 117),
    (2, 120), (42, 135), (14, 140), (66, 182), (88, 184), (102, 190), (45, 198),
    (10, 224), (4, 234), (174, 248), (153, 252), (164, 260),
];

fn item(name: &'static str, ok: bool, detail: String) -> CheckItem {
    CheckItem {
        name,
        status: if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
        detail,
    }
}

fn reproduction_checks(table: &SigmaTable<u64>) -> Result<Vec<CheckItem>> {
    let mut items = Vec::new();

    let first: Vec<(u64, u64)> = pairs::feebly_pairs(300, table, PairFilters::proper())?
        .iter()
        .take(20)
        .map(|r| (r.small, r.large))
        .collect();
    items.push(item(
        "first 20 proper feebly amicable pairs",
        first == FIRST_TWENTY,
        format!("first 20 end at {:?}", first.last()),
    ));

    let fraction = stats::abundant_fraction(100_000, table)?;
    let upper = Fraction::new(2_476_475, 10_000_000)?;
    let non_deficient = table
        .iter()
        .take(100_000)
        .filter(|&(n, s)| s >= 2 * n)
        .count();
    items.push(item(
        "abundant fraction below 100000 is 0.24799",
        fraction == Fraction::new(24_799, 100_000)?,
        format!(
            "sigma(n) > 2n gives {} = {}; sigma(n) >= 2n gives {non_deficient}",
            fraction,
            fraction.to_decimal(7)
        ),
    ));
    items.push(item(
        "abundant fraction above the density upper bound 0.2476475",
        fraction > upper,
        fraction.to_decimal(7),
    ));

    let coprime_5000 = pairs::coprime_feebly_pairs(5_000, table)?;
    let coprime_1000 = pairs::coprime_feebly_pairs(1_000, table)?;
    items.push(item(
        "first coprime pair is (868, 1485)",
        coprime_5000.first().map(|r| (r.small, r.large)) == Some((868, 1485)),
        format!("{:?}", coprime_5000.first().map(|r| (r.small, r.large))),
    ));
    items.push(item(
        "no coprime pair below 1000",
        coprime_1000.is_empty(),
        format!("{} found", coprime_1000.len()),
    ));
    let listed: Vec<String> = coprime_5000
        .iter()
        .map(|r| format!("({}, {})", r.small, r.large))
        .collect();
    items.push(item(
        "5 coprime pairs up to 5000",
        coprime_5000.len() == 5,
        format!(
            "{} with larger member <= 5000: {}",
            coprime_5000.len(),
            listed.join(" ")
        ),
    ));

    let lonely = outlaws::lonely_verdict(14_182_439_040, DEFAULT_SEARCH_BOUND)?;
    items.push(item(
        "14182439040 has no (feebly) amicable partner",
        lonely.verdict == outlaws::LonelyVerdict::ProvenLonely
            && lonely.required_index == Some(Fraction::new(5, 4)?)
            && lonely.no_amicable_partner(),
        lonely.to_string(),
    ));

    let perfect: Vec<u64> = [2, 3, 5, 7, 13]
        .iter()
        .filter_map(|&p| euclid_euler(p).ok().flatten())
        .collect();
    items.push(item(
        "even perfect numbers from Mersenne primes",
        perfect == [6, 28, 496, 8128, 33_550_336] && euclid_euler(11)?.is_none(),
        format!("{perfect:?}"),
    ));

    let bands: Vec<(u64, u64)> = REFERENCE_BANDS.iter().map(|b| (b.0, b.1)).collect();
    let reports = stats::band_report(&bands, table)?;
    let detail: Vec<String> = reports
        .iter()
        .zip(REFERENCE_BANDS)
        .map(|(r, (_, _, numbers, div10))| {
            format!(
                "{}-{}: {} pairs/{} div10 vs reference {}/{}",
                r.band.0, r.band.1, r.pair_count, r.div10_count, numbers, div10
            )
        })
        .collect();
    items.push(CheckItem {
        name: "band statistics",
        status: CheckStatus::Flagged,
        detail: format!("{}; {}", detail.join("; "), BAND_CONVENTION),
    });

    Ok(items)
}

fn check<O: Write>(config: &RunConfig, out: &mut O) -> Result<Outcome> {
    let table = table_for(config, 100_000)?;
    let items = reproduction_checks(&table)?;
    let status_word = |s: CheckStatus| match s {
        CheckStatus::Pass => "PASS",
        CheckStatus::Fail => "FAIL",
        CheckStatus::Flagged => "FLAG",
    };
    match config.format {
        OutputFormat::Table => {
            for it in &items {
                writeln!(
                    out,
                    "{}  {}: {}",
                    status_word(it.status),
                    it.name,
                    it.detail
                )?;
            }
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["status", "item", "detail"])?;
            for it in &items {
                w.write_record([status_word(it.status), it.name, &it.detail])?;
            }
            w.flush()?;
        }
        OutputFormat::Jsonl => {
            for it in &items {
                serde_json::to_writer(
                    &mut *out,
                    &serde_json::json!({
                        "status": status_word(it.status),
                        "item": it.name,
                        "detail": it.detail,
                    }),
                )?;
                writeln!(out)?;
            }
        }
    }
    Ok(if items.iter().any(|i| i.status == CheckStatus::Fail) {
        Outcome::ChecksFailed
    } else {
        Outcome::Success
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Outcome, String) {
        let config =
            RunConfig::try_parse_from(std::iter::once("abundancy").chain(args.iter().copied()))
                .unwrap();
        let mut buf = Vec::new();
        let outcome = run(&config, &mut buf).unwrap();
        (outcome, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn classify_one() {
        let (_, out) = run_args(&["classify", "1"]);
        assert!(out.starts_with("1: Deficient"));
    }

    #[test]
    fn classify_multiply_perfect() {
        let (_, out) = run_args(&["classify", "14182439040"]);
        assert!(out.contains("Abundant"));
        assert!(out.contains("multiply perfect of order 5"));
    }

    #[test]
    fn lonely_message() {
        let (_, out) = run_args(&["lonely", "14182439040"]);
        assert_eq!(
            out.trim(),
            "ProvenLonely; partner would need index 5/4 (outlaw); no amicable partner either"
        );
    }

    #[test]
    fn outlaw_forms() {
        let (_, out) = run_args(&["outlaw", "5/4"]);
        assert_eq!(out.trim(), "5/4: ProvenOutlaw");
        let (_, out) = run_args(&["outlaw", "--near", "2", "--eps", "1/2"]);
        assert!(out.starts_with("167/78: ProvenOutlaw"));
    }

    #[test]
    fn usage_errors_are_rejected_by_parser() {
        for bad in [
            vec!["pairs"],
            vec!["classify", "0"],
            vec!["outlaw"],
            vec!["stats", "--bands", "5"],
            vec!["bogus"],
        ] {
            let args = std::iter::once("abundancy").chain(bad.iter().copied());
            assert!(RunConfig::try_parse_from(args).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn domain_error_surfaces() {
        let config = RunConfig::try_parse_from(["abundancy", "outlaw", "1/2"]).unwrap();
        assert!(run(&config, &mut Vec::new()).is_err());
    }

    #[test]
    fn band_table_flags_mismatch() {
        let (_, out) = run_args(&[
            "stats",
            "--max",
            "100",
            "--bands",
            "1-5000,5001-10000,10001-15000",
        ]);
        assert!(out.contains("convention:"));
        assert_eq!(out.matches("MISMATCH").count(), 3);
    }
}
