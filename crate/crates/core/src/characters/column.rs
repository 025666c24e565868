//! A whole column of the character table, `chi^nu(alpha)` for every
//! `nu |- n`, built by adding border strips to the empty shape.
//!
//! Parts of `alpha` are added smallest-first so the early levels stay tiny.
//! Zero entries are dropped as soon as they appear; they contribute nothing
//! further.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use rustc_hash::FxHashMap;

use super::beads::{self, Mask};
use crate::error::{KronError, Result};
use crate::partition::Partition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterColumn {
    alpha: Partition,
    values: FxHashMap<Mask, i128>,
}

impl CharacterColumn {
    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    /// `chi^nu(alpha)`; zero when `nu` is absent or of the wrong size.
    pub fn get_mask(&self, nu: Mask) -> i128 {
        self.values.get(&nu).copied().unwrap_or(0)
    }

    pub fn get(&self, nu: &Partition) -> i128 {
        beads::partition_mask(nu).map_or(0, |m| self.get_mask(m))
    }

    /// Number of shapes with a nonzero value.
    pub fn support(&self) -> usize {
        self.values.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Mask, i128)> + '_ {
        self.values.iter().map(|(&m, &v)| (m, v))
    }
}

pub fn character_column(alpha: &Partition) -> Result<CharacterColumn> {
    let mut level: FxHashMap<Mask, i128> = FxHashMap::default();
    level.insert(0, 1);
    for &k in alpha.parts().iter().rev() {
        let mut next: FxHashMap<Mask, i128> =
            FxHashMap::with_capacity_and_hasher(level.len() * 2, Default::default());
        let mut overflow = false;
        for (&mask, &v) in &level {
            let fits = beads::add_strips(mask, k, |m, h| {
                let slot = next.entry(m).or_insert(0);
                let r = if h % 2 == 0 { slot.checked_add(v) } else { slot.checked_sub(v) };
                match r {
                    Some(x) => *slot = x,
                    None => overflow = true,
                }
            });
            if fits.is_none() {
                return Err(KronError::domain(
                    "character_column",
                    format!("shapes of size {} exceed the 128-bit bead encoding", alpha.size()),
                ));
            }
        }
        if overflow {
            return Err(KronError::Overflow("character_column"));
        }
        next.retain(|_, v| *v != 0);
        level = next;
    }
    Ok(CharacterColumn {
        alpha: alpha.clone(),
        values: level,
    })
}

// On-disk cache: "KRCH", version, n, parts, entries, all little-endian.
const MAGIC: &[u8; 4] = b"KRCH";
const VERSION: u32 = 1;

fn cache_path(dir: &Path, alpha: &Partition) -> PathBuf {
    let name: Vec<String> = alpha.parts().iter().map(u32::to_string).collect();
    dir.join(format!("chi-n{}-{}.bin", alpha.size(), name.join("_")))
}

fn encode(col: &CharacterColumn) -> Vec<u8> {
    let mut out = Vec::with_capacity(16 + col.values.len() * 32);
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&VERSION.to_le_bytes());
    out.extend_from_slice(&(col.alpha.size() as u32).to_le_bytes());
    out.extend_from_slice(&(col.alpha.len() as u32).to_le_bytes());
    for &p in col.alpha.parts() {
        out.extend_from_slice(&p.to_le_bytes());
    }
    let mut entries: Vec<_> = col.iter().collect();
    entries.sort_unstable();
    out.extend_from_slice(&(entries.len() as u64).to_le_bytes());
    for (m, v) in entries {
        out.extend_from_slice(&m.to_le_bytes());
        out.extend_from_slice(&v.to_le_bytes());
    }
    out
}

fn decode(bytes: &[u8], alpha: &Partition) -> Option<CharacterColumn> {
    let mut r = bytes;
    let mut take = |n: usize| -> Option<&[u8]> {
        if r.len() < n {
            return None;
        }
        let (a, b) = r.split_at(n);
        r = b;
        Some(a)
    };
    let u32_at = |b: &[u8]| u32::from_le_bytes(b.try_into().unwrap());
    if take(4)? != MAGIC || u32_at(take(4)?) != VERSION {
        return None;
    }
    if u32_at(take(4)?) as usize != alpha.size() {
        return None;
    }
    let len = u32_at(take(4)?) as usize;
    let mut parts = Vec::with_capacity(len);
    for _ in 0..len {
        parts.push(u32_at(take(4)?));
    }
    if parts != alpha.parts() {
        return None;
    }
    let count = u64::from_le_bytes(take(8)?.try_into().unwrap()) as usize;
    let mut values = FxHashMap::with_capacity_and_hasher(count, Default::default());
    for _ in 0..count {
        let m = u128::from_le_bytes(take(16)?.try_into().unwrap());
        let v = i128::from_le_bytes(take(16)?.try_into().unwrap());
        values.insert(m, v);
    }
    Some(CharacterColumn {
        alpha: alpha.clone(),
        values,
    })
}

fn read_cached(path: &Path, alpha: &Partition) -> io::Result<Option<CharacterColumn>> {
    let mut bytes = Vec::new();
    fs::File::open(path)?.read_to_end(&mut bytes)?;
    Ok(decode(&bytes, alpha))
}

fn write_cached(path: &Path, col: &CharacterColumn) -> io::Result<()> {
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::File::create(&tmp)?.write_all(&encode(col))?;
    fs::rename(tmp, path)
}

/// Like [`character_column`], reading and writing a per-cycle-type file in
/// `dir` when given. A missing, stale or corrupt file is recomputed; write
/// failures are ignored, since the cache is an optimisation only.
pub fn character_column_cached(alpha: &Partition, dir: Option<&Path>) -> Result<CharacterColumn> {
    let Some(dir) = dir else {
        return character_column(alpha);
    };
    let path = cache_path(dir, alpha);
    if let Ok(Some(col)) = read_cached(&path, alpha) {
        return Ok(col);
    }
    let col = character_column(alpha)?;
    let _ = fs::create_dir_all(dir).and_then(|_| write_cached(&path, &col));
    Ok(col)
}
