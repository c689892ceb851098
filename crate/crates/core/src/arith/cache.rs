//! On-disk sigma tables.
//!
//! Layout: the 7 magic bytes `SIGMA1\0`, one version byte `0x01`, the bound
//! `N` as little-endian u64, then `N` little-endian u64 values
//! `sigma(1), ..., sigma(N)`.

use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Read, Write};
use std::path::{Path, PathBuf};

use super::sieve::{sigma_sieve, SigmaTable};
use super::sigma::sigma;
use crate::error::{Error, Result};
use crate::num::Natural;

pub const MAGIC: &[u8; 7] = b"SIGMA1\0";
pub const VERSION: u8 = 0x01;
const HEADER_LEN: u64 = 16;

pub fn write_table<W: Natural, O: Write>(table: &SigmaTable<W>, mut out: O) -> Result<()> {
    out.write_all(MAGIC)?;
    out.write_all(&[VERSION])?;
    out.write_all(&table.bound().to_le_bytes())?;
    for v in table.values() {
        out.write_all(&v.to_u64_lossless().to_le_bytes())?;
    }
    out.flush()?;
    Ok(())
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidCache(msg.into())
}

/// Reads and validates a table: magic, version, length, and spot checks of
/// `sigma(1)`, `sigma(2)` and `sigma(N)` against factorization.
pub fn read_table<W: Natural, I: Read>(mut input: I) -> Result<SigmaTable<W>> {
    let mut header = [0u8; HEADER_LEN as usize];
    input
        .read_exact(&mut header)
        .map_err(|_| invalid("truncated header"))?;
    if &header[..7] != MAGIC {
        return Err(invalid("bad magic bytes"));
    }
    if header[7] != VERSION {
        return Err(invalid(format!("unsupported version {}", header[7])));
    }
    let bound = u64::from_le_bytes(header[8..16].try_into().expect("8 bytes"));
    if bound == 0 || bound >= u32::MAX as u64 {
        return Err(invalid(format!("implausible bound {bound}")));
    }

    let mut values = Vec::new();
    values
        .try_reserve_exact(bound as usize + 1)
        .map_err(|_| Error::Allocation(bound))?;
    values.push(W::zero());
    let mut word = [0u8; 8];
    for n in 1..=bound {
        input
            .read_exact(&mut word)
            .map_err(|_| invalid(format!("truncated at entry {n} of {bound}")))?;
        let v = u64::from_le_bytes(word);
        values.push(W::from_u64(v).ok_or_else(|| invalid("value exceeds table word"))?);
    }
    if input.read(&mut word)? != 0 {
        return Err(invalid("trailing bytes after table"));
    }

    let table = SigmaTable::from_values(values);
    let mut probes = vec![1, bound];
    if bound >= 2 {
        probes.push(2);
    }
    for n in probes {
        if table.sigma(n) != sigma(n)? {
            return Err(invalid(format!("spot check failed at n = {n}")));
        }
    }
    Ok(table)
}

pub fn save<W: Natural>(table: &SigmaTable<W>, path: &Path) -> Result<()> {
    if let Some(dir) = path.parent() {
        fs::create_dir_all(dir)?;
    }
    // write to a sibling then rename, so readers never see a partial file
    let tmp = path.with_extension("tmp");
    write_table(table, BufWriter::new(File::create(&tmp)?))?;
    fs::rename(&tmp, path)?;
    Ok(())
}

pub fn load<W: Natural>(path: &Path) -> Result<SigmaTable<W>> {
    read_table(BufReader::new(File::open(path)?))
}

/// File name used for a table of the given bound inside a cache directory.
pub fn cache_file(dir: &Path, bound: u64) -> PathBuf {
    dir.join(format!("sigma-{bound}.bin"))
}

/// Returns a table covering at least `bound`, reusing the smallest adequate
/// cached table in `dir` and writing a new one when none exists. A cached
/// file that fails validation is rebuilt.
pub fn load_or_build(bound: u64, dir: Option<&Path>) -> Result<SigmaTable<u64>> {
    let Some(dir) = dir else {
        return sigma_sieve(bound);
    };
    if let Some(path) = best_cached(dir, bound) {
        match load(&path) {
            Ok(table) => return Ok(table),
            Err(Error::InvalidCache(_)) => {}
            Err(e) => return Err(e),
        }
    }
    let table = sigma_sieve(bound)?;
    save(&table, &cache_file(dir, bound))?;
    Ok(table)
}

fn best_cached(dir: &Path, bound: u64) -> Option<PathBuf> {
    let entries = fs::read_dir(dir).ok()?;
    entries
        .filter_map(|e| e.ok())
        .filter_map(|e| {
            let name = e.file_name().into_string().ok()?;
            let n: u64 = name
                .strip_prefix("sigma-")?
                .strip_suffix(".bin")?
                .parse()
                .ok()?;
            (n >= bound).then(|| (n, e.path()))
        })
        .min_by_key(|(n, _)| *n)
        .map(|(_, p)| p)
}
