//! On-disk store of computed quotients.
//!
//! One file per `(k, n)` or `(k, weight)`, holding the reduced hit rows over
//! the active columns; everything else is rebuilt from the key. Layout, all
//! integers little-endian:
//!
//! ```text
//! magic "HITPROBQ" | version u32 | k u32 | n u32 | weight length u32
//! | weight entries u32... | active u64 | rank u64 | rows (rank x words u64)
//! | sha256 of everything before
//! ```
//!
//! Files from another format version, or that fail any check, are misses.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use hitprob_core::{BitVec, QuotientBasis, WeightVector};
use sha2::{Digest, Sha256};

pub const MAGIC: &[u8; 8] = b"HITPROBQ";
pub const FORMAT_VERSION: u32 = 1;
pub const ENV_VAR: &str = "HITPROB_CACHE";

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CacheKey {
    pub k: usize,
    pub n: u32,
    pub weight: Option<WeightVector>,
}

impl CacheKey {
    pub fn degree(k: usize, n: u32) -> Self {
        CacheKey { k, n, weight: None }
    }

    pub fn block(k: usize, w: &WeightVector) -> Self {
        CacheKey {
            k,
            n: w.degree() as u32,
            weight: Some(w.clone()),
        }
    }

    pub fn file_name(&self) -> String {
        match &self.weight {
            None => format!("k{}-n{}.bin", self.k, self.n),
            Some(w) => {
                let parts: Vec<String> = w.entries().iter().map(u32::to_string).collect();
                format!("k{}-n{}-w{}.bin", self.k, self.n, parts.join("."))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$HITPROB_CACHE`, else `$XDG_CACHE_HOME/hitprob`, else
    /// `$HOME/.cache/hitprob`.
    pub fn default_dir() -> Option<PathBuf> {
        if let Some(d) = std::env::var_os(ENV_VAR).filter(|d| !d.is_empty()) {
            return Some(PathBuf::from(d));
        }
        if let Some(d) = std::env::var_os("XDG_CACHE_HOME").filter(|d| !d.is_empty()) {
            return Some(PathBuf::from(d).join("hitprob"));
        }
        std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("hitprob"))
    }

    pub fn from_env() -> Option<Self> {
        Cache::default_dir().map(Cache::new)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(key.file_name())
    }

    pub fn get(&self, key: &CacheKey) -> Option<QuotientBasis> {
        let bytes = fs::read(self.path(key)).ok()?;
        decode(key, &bytes)
    }

    /// Writes through a temporary file so readers never see half a file.
    pub fn put(&self, key: &CacheKey, q: &QuotientBasis) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path(key);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        fs::write(&tmp, encode(key, q))?;
        fs::rename(&tmp, &path)
    }

    /// Cached files with their sizes, sorted by name.
    pub fn entries(&self) -> io::Result<Vec<(String, u64)>> {
        let mut out = Vec::new();
        let dir = match fs::read_dir(&self.dir) {
            Ok(d) => d,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(out),
            Err(e) => return Err(e),
        };
        for entry in dir {
            let entry = entry?;
            let name = entry.file_name().to_string_lossy().into_owned();
            if name.ends_with(".bin") {
                out.push((name, entry.metadata()?.len()));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Removes the cached files; returns how many were removed.
    pub fn clear(&self) -> io::Result<usize> {
        let entries = self.entries()?;
        for (name, _) in &entries {
            fs::remove_file(self.dir.join(name))?;
        }
        Ok(entries.len())
    }
}

pub fn encode(key: &CacheKey, q: &QuotientBasis) -> Vec<u8> {
    encode_with_version(key, q, FORMAT_VERSION)
}

fn encode_with_version(key: &CacheKey, q: &QuotientBasis, version: u32) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&version.to_le_bytes());
    out.extend_from_slice(&(key.k as u32).to_le_bytes());
    out.extend_from_slice(&key.n.to_le_bytes());
    let w: &[u32] = key.weight.as_ref().map_or(&[], |w| w.entries());
    out.extend_from_slice(&(w.len() as u32).to_le_bytes());
    for e in w {
        out.extend_from_slice(&e.to_le_bytes());
    }
    out.extend_from_slice(&(q.active() as u64).to_le_bytes());
    let rows = q.hit().canonical_rows();
    out.extend_from_slice(&(rows.len() as u64).to_le_bytes());
    for r in &rows {
        for word in r.words() {
            out.extend_from_slice(&word.to_le_bytes());
        }
    }
    let digest = Sha256::digest(&out);
    out.extend_from_slice(&digest);
    out
}

struct Reader<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl Reader<'_> {
    fn take(&mut self, n: usize) -> Option<&[u8]> {
        let s = self.bytes.get(self.at..self.at.checked_add(n)?)?;
        self.at += n;
        Some(s)
    }

    fn u32(&mut self) -> Option<u32> {
        Some(u32::from_le_bytes(self.take(4)?.try_into().ok()?))
    }

    fn u64(&mut self) -> Option<u64> {
        Some(u64::from_le_bytes(self.take(8)?.try_into().ok()?))
    }
}

pub fn decode(key: &CacheKey, bytes: &[u8]) -> Option<QuotientBasis> {
    let body_len = bytes.len().checked_sub(32)?;
    let (body, digest) = bytes.split_at(body_len);
    if Sha256::digest(body).as_slice() != digest {
        return None;
    }
    let mut r = Reader { bytes: body, at: 0 };
    if r.take(8)? != MAGIC || r.u32()? != FORMAT_VERSION {
        return None;
    }
    let k = r.u32()? as usize;
    let n = r.u32()?;
    let wlen = r.u32()? as usize;
    let w = (0..wlen).map(|_| r.u32()).collect::<Option<Vec<_>>>()?;
    let weight = (wlen > 0).then(|| WeightVector::new(w));
    if k != key.k || n != key.n || weight != key.weight {
        return None;
    }
    let active = usize::try_from(r.u64()?).ok()?;
    let rank = usize::try_from(r.u64()?).ok()?;
    let words = active.div_ceil(64);
    if rank > active || body.len() - r.at != rank.checked_mul(words)?.checked_mul(8)? {
        return None;
    }
    let rows = (0..rank)
        .map(|_| {
            let ws = (0..words).map(|_| r.u64()).collect::<Option<Vec<_>>>()?;
            BitVec::from_words(active, ws).ok()
        })
        .collect::<Option<Vec<_>>>()?;
    QuotientBasis::from_parts(k, n, weight, active, rows).ok()
}
