//! Generator files and the fixture manifest.
//!
//! A generator file is UTF-8 text: `#` starts a comment, the first
//! remaining line is `degree N`, and each later line is `gen <perm>` in cycle
//! or image-list notation. The file stem is the group label.
//!
//! The manifest `manifest.csv` lists `label, path, expected_order` per
//! fixture; loading a fixture through it checks the enumerated order.

use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::group::{generate_on, ElementSet};
use crate::perm::{parse_perm, Permutation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorFile {
    pub label: String,
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl GeneratorFile {
    pub fn parse(text: &str, label: &str) -> Result<Self> {
        let bad = |reason: String| Error::Fixture { label: label.to_string(), reason };
        let mut degree = None;
        let mut generators = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            match (keyword, degree) {
                ("degree", None) => {
                    let n: usize = rest
                        .trim()
                        .parse()
                        .map_err(|_| bad(format!("line {}: bad degree {rest:?}", lineno + 1)))?;
                    degree = Some(n);
                }
                ("gen", Some(n)) => generators.push(
                    parse_perm(rest, n).map_err(|e| bad(format!("line {}: {e}", lineno + 1)))?,
                ),
                (_, None) => return Err(bad(format!("line {}: expected `degree N` first", lineno + 1))),
                _ => return Err(bad(format!("line {}: expected `gen <perm>`", lineno + 1))),
            }
        }
        let degree = degree.ok_or_else(|| bad("missing `degree N` line".into()))?;
        Ok(GeneratorFile { label: label.to_string(), degree, generators })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).map_err(|e| Error::Fixture {
            label: path.display().to_string(),
            reason: e.to_string(),
        })?;
        let label = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        GeneratorFile::parse(&text, &label)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("degree {}\n", self.degree);
        for g in &self.generators {
            out.push_str(&format!("gen {g}\n"));
        }
        out
    }

    pub fn generate(&self, cap: u64) -> Result<ElementSet> {
        Ok(generate_on(self.degree, &self.generators, cap)?.with_label(self.label.clone()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct ManifestEntry {
    pub label: String,
    pub path: PathBuf,
    pub expected_order: u64,
}

/// Fixture directory with its `manifest.csv`.
#[derive(Debug, Clone)]
pub struct Fixtures {
    dir: PathBuf,
    entries: Vec<ManifestEntry>,
}

/// The fixtures shipped with this crate.
pub fn default_fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

impl Fixtures {
    /// Opens `dir`; a missing manifest means no order checks.
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self> {
        let dir = dir.into();
        let manifest = dir.join("manifest.csv");
        let mut entries = Vec::new();
        if manifest.exists() {
            let mut reader = csv::ReaderBuilder::new()
                .has_headers(false)
                .comment(Some(b'#'))
                .trim(csv::Trim::All)
                .from_path(&manifest)?;
            for row in reader.deserialize() {
                entries.push(row?);
            }
        }
        Ok(Fixtures { dir, entries })
    }

    pub fn shipped() -> Self {
        Fixtures::open(default_fixture_dir()).expect("shipped manifest is well formed")
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn entries(&self) -> &[ManifestEntry] {
        &self.entries
    }

    /// Resolves a label or a path (relative paths are tried against the
    /// fixture directory first).
    pub fn resolve(&self, name: &str) -> PathBuf {
        if let Some(e) = self.entries.iter().find(|e| e.label == name) {
            return self.dir.join(&e.path);
        }
        let in_dir = self.dir.join(name);
        if in_dir.exists() { in_dir } else { PathBuf::from(name) }
    }

    /// The manifest entry for a label or path, if any.
    pub fn entry(&self, name: &str) -> Option<&ManifestEntry> {
        let resolved = self.resolve(name);
        self.entries.iter().find(|e| e.label == name || self.dir.join(&e.path) == resolved)
    }

    pub fn expected_order(&self, name: &str) -> Option<u64> {
        self.entry(name).map(|e| e.expected_order)
    }

    pub fn read(&self, name: &str) -> Result<GeneratorFile> {
        GeneratorFile::read(&self.resolve(name))
    }

    /// Enumerates a fixture and checks its order against the manifest.
    pub fn load(&self, name: &str, cap: u64) -> Result<ElementSet> {
        let file = self.read(name)?;
        let group = file.generate(cap)?;
        if let Some(expected) = self.expected_order(name) {
            if group.order() != expected {
                return Err(Error::Fixture {
                    label: file.label,
                    reason: format!("enumerated order {} but manifest says {expected}", group.order()),
                });
            }
        }
        Ok(group)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let text = "# comment\ndegree 5\ngen (1,2,3)   # trailing\n\ngen [2,1,3,4,5]\n";
        let f = GeneratorFile::parse(text, "demo").unwrap();
        assert_eq!(f.degree, 5);
        assert_eq!(f.generators.len(), 2);
        assert_eq!(f.to_text(), "degree 5\ngen (1,2,3)\ngen (1,2)\n");
        assert_eq!(GeneratorFile::parse(&f.to_text(), "demo").unwrap(), f);
        assert!(GeneratorFile::parse("gen (1,2)\n", "x").is_err());
        assert!(GeneratorFile::parse("degree 3\ngen (1,4)\n", "x").is_err());
        assert!(GeneratorFile::parse("degree 3\ndegree 4\n", "x").is_err());
    }

    #[test]
    fn shipped_manifest() {
        let fx = Fixtures::shipped();
        assert_eq!(fx.expected_order("m10"), Some(720));
        assert_eq!(fx.expected_order("psl3_4.gens"), Some(20160));
        assert_eq!(fx.load("q8", 100).unwrap().order(), 8);
        assert_eq!(fx.load("m10", 10_000).unwrap().label(), "m10");
        for e in fx.entries() {
            assert!(fx.dir().join(&e.path).exists(), "{}", e.label);
        }
    }
}
