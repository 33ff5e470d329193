//! Reference lists shipped as text files, one monomial per line.
//!
//! A file starts with `# key: value` header lines (`id`, `kind`, `k`, `n`,
//! optional `weight`, `count`); other `#` lines are free comments. A
//! `polynomial` fixture is the sum of its lines, a `monomials` fixture is a
//! set.

use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};

use hitprob_core::text::{format_monomial, parse_monomial};
use hitprob_core::{Monomial, Polynomial, WeightVector};

#[derive(Debug)]
pub enum FixtureError {
    Missing(PathBuf),
    Io(PathBuf, std::io::Error),
    Corrupt { id: String, line: usize, reason: String },
}

impl fmt::Display for FixtureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixtureError::Missing(p) => write!(f, "fixture file {} not found", p.display()),
            FixtureError::Io(p, e) => write!(f, "reading {}: {e}", p.display()),
            FixtureError::Corrupt { id, line, reason } => write!(f, "fixture {id}, line {line}: {reason}"),
        }
    }
}

impl std::error::Error for FixtureError {}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixtureKind {
    Monomials,
    Polynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub id: String,
    pub kind: FixtureKind,
    pub k: usize,
    pub n: u32,
    pub weight: Option<WeightVector>,
    /// Free comment lines, without the leading `#`.
    pub notes: Vec<String>,
    pub terms: Vec<Monomial>,
}

impl Fixture {
    pub fn parse(id: &str, text: &str) -> Result<Fixture, FixtureError> {
        let corrupt = |line: usize, reason: String| FixtureError::Corrupt {
            id: id.to_string(),
            line,
            reason,
        };
        let mut header: Vec<(String, String, usize)> = Vec::new();
        let mut notes = Vec::new();
        let mut body: Vec<(usize, &str)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                let rest = rest.trim();
                match rest.split_once(':') {
                    Some((key, value)) if ["id", "kind", "k", "n", "weight", "count"].contains(&key.trim()) => {
                        header.push((key.trim().to_string(), value.trim().to_string(), i + 1));
                    }
                    _ => notes.push(rest.to_string()),
                }
            } else {
                body.push((i + 1, line));
            }
        }
        let get = |key: &str| header.iter().find(|(k, _, _)| k == key);
        let need = |key: &str| get(key).ok_or_else(|| corrupt(0, format!("missing header {key:?}")));

        let (_, declared_id, line) = need("id")?;
        if declared_id != id {
            return Err(corrupt(*line, format!("declares id {declared_id:?}")));
        }
        let (_, kind, line) = need("kind")?;
        let kind = match kind.as_str() {
            "monomials" => FixtureKind::Monomials,
            "polynomial" => FixtureKind::Polynomial,
            other => return Err(corrupt(*line, format!("unknown kind {other:?}"))),
        };
        let (_, k, line) = need("k")?;
        let k: usize = k.parse().map_err(|_| corrupt(*line, format!("bad k {k:?}")))?;
        let (_, n, line) = need("n")?;
        let n: u32 = n.parse().map_err(|_| corrupt(*line, format!("bad n {n:?}")))?;
        let weight = match get("weight") {
            Some((_, w, line)) => Some(w.parse::<WeightVector>().map_err(|e| corrupt(*line, e.to_string()))?),
            None => None,
        };
        let (_, count, line) = need("count")?;
        let count: usize = count
            .parse()
            .map_err(|_| corrupt(*line, format!("bad count {count:?}")))?;

        let mut terms = Vec::with_capacity(body.len());
        let mut seen = BTreeSet::new();
        for (line, text) in body {
            let m = parse_monomial(k, text).map_err(|e| corrupt(line, e.to_string()))?;
            if m.degree() != n {
                return Err(corrupt(line, format!("{text} has degree {}, expected {n}", m.degree())));
            }
            if !seen.insert(m) {
                return Err(corrupt(line, format!("{text} repeated")));
            }
            terms.push(m);
        }
        if terms.len() != count {
            return Err(corrupt(0, format!("declares {count} entries, has {}", terms.len())));
        }
        Ok(Fixture {
            id: id.to_string(),
            kind,
            k,
            n,
            weight,
            notes,
            terms,
        })
    }

    /// The canonical text form; `parse` reads it back unchanged.
    pub fn to_text(&self) -> String {
        let mut out = format!("# id: {}\n", self.id);
        let kind = match self.kind {
            FixtureKind::Monomials => "monomials",
            FixtureKind::Polynomial => "polynomial",
        };
        out += &format!("# kind: {kind}\n# k: {}\n# n: {}\n", self.k, self.n);
        if let Some(w) = &self.weight {
            out += &format!("# weight: {w}\n");
        }
        out += &format!("# count: {}\n", self.terms.len());
        for note in &self.notes {
            out += &format!("# {note}\n");
        }
        for m in &self.terms {
            out += &format_monomial(m);
            out.push('\n');
        }
        out
    }

    pub fn set(&self) -> BTreeSet<Monomial> {
        self.terms.iter().copied().collect()
    }

    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_terms(self.k, self.n, self.terms.iter().copied())
            .expect("terms were checked to share k and degree")
    }
}

/// A directory of `<id>.txt` fixture files.
#[derive(Clone, Debug)]
pub struct FixtureSet {
    dir: PathBuf,
}

impl FixtureSet {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        FixtureSet { dir: dir.into() }
    }

    /// The lists bundled with this crate.
    pub fn bundled() -> Self {
        FixtureSet::new(Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, id: &str) -> PathBuf {
        self.dir.join(format!("{id}.txt"))
    }

    pub fn load(&self, id: &str) -> Result<Fixture, FixtureError> {
        let path = self.path(id);
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Err(FixtureError::Missing(path)),
            Err(e) => return Err(FixtureError::Io(path, e)),
        };
        Fixture::parse(id, &text)
    }

    /// Ids of every `.txt` file in the directory, sorted.
    pub fn ids(&self) -> Result<Vec<String>, FixtureError> {
        let entries = std::fs::read_dir(&self.dir).map_err(|e| FixtureError::Io(self.dir.clone(), e))?;
        let mut ids = Vec::new();
        for entry in entries {
            let path = entry.map_err(|e| FixtureError::Io(self.dir.clone(), e))?.path();
            if path.extension().is_some_and(|x| x == "txt") {
                if let Some(stem) = path.file_stem().and_then(|s| s.to_str()) {
                    ids.push(stem.to_string());
                }
            }
        }
        ids.sort();
        Ok(ids)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "# id: t\n# kind: monomials\n# k: 3\n# n: 2\n# count: 2\n# a note\nx1 x2\nx_2x_3\n";

    #[test]
    fn parse_and_print() {
        let f = Fixture::parse("t", SAMPLE).unwrap();
        assert_eq!(f.terms.len(), 2);
        assert_eq!(f.notes, ["a note"]);
        let again = Fixture::parse("t", &f.to_text()).unwrap();
        assert_eq!(again, f);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(Fixture::parse("u", SAMPLE).is_err());
        let wrong_count = SAMPLE.replace("count: 2", "count: 3");
        assert!(Fixture::parse("t", &wrong_count).is_err());
        let wrong_degree = SAMPLE.replace("x1 x2", "x1^2 x2");
        assert!(Fixture::parse("t", &wrong_degree).is_err());
        let repeated = SAMPLE.replace("x_2x_3", "x2 x1");
        assert!(Fixture::parse("t", &repeated).is_err());
    }
}
