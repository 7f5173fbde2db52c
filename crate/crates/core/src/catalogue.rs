//! The embedded pattern catalogue.
//!
//! Patterns live in `data/patterns.txt` as plain matrices, each tagged with
//! a SHA-256 prefix of its text block so transcription drift is caught at
//! load time.

use std::sync::OnceLock;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::format::{grid_text, parse_grid};
use crate::graph::Violation;
use crate::pattern::Pattern;

const EMBEDDED: &str = include_str!("../data/patterns.txt");

/// Names of every catalogue entry, in file order.
pub const NAMES: [&str; 23] = [
    "A", "C", "D", "E", "3x3", "3x5", "3x9", "F", "G", "H1", "H2", "I", "J", "5x7", "5x8", "5x9",
    "5x13", "5x14", "5x19", "K", "L", "M", "11x11",
];

#[derive(Clone, Debug)]
pub struct CatalogueEntry {
    pub pattern: Pattern,
    pub checksum: String,
}

/// Result of re-checking one catalogue entry.
#[derive(Clone, Debug)]
pub struct EntryCheck {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    pub colors: u32,
    pub checksum_ok: bool,
    pub violations: Vec<Violation>,
}

impl EntryCheck {
    pub fn ok(&self) -> bool {
        self.checksum_ok && self.violations.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct PatternLibrary {
    entries: Vec<CatalogueEntry>,
}

/// First 16 hex digits of SHA-256 over the pattern's text block.
pub fn checksum(p: &Pattern) -> String {
    let digest = Sha256::digest(grid_text(p.rows(), p.cols(), p.cells()).as_bytes());
    format!("{digest:x}")[..16].to_string()
}

impl PatternLibrary {
    /// Parses a catalogue file. Checksums and validity are not enforced
    /// here; see [`PatternLibrary::check`].
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let mut lines = text.lines().peekable();
        while let Some(line) = lines.next() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tok = line.split_whitespace();
            let (Some("pattern"), Some(name), Some(sum), None) =
                (tok.next(), tok.next(), tok.next(), tok.next())
            else {
                return Err(Error::Parse(format!("expected `pattern <name> <checksum>`, got `{line}`")));
            };
            let mut block = String::new();
            while let Some(l) = lines.peek() {
                if l.trim().is_empty() || l.trim_start().starts_with("pattern ") {
                    break;
                }
                block.push_str(l);
                block.push('\n');
                lines.next();
            }
            let (p, q, cells) = parse_grid(&block).map_err(|e| Error::Catalogue {
                name: name.to_string(),
                reason: e.to_string(),
            })?;
            if entries.iter().any(|e: &CatalogueEntry| e.pattern.name() == name) {
                return Err(Error::Catalogue {
                    name: name.to_string(),
                    reason: "duplicate name".into(),
                });
            }
            entries.push(CatalogueEntry {
                pattern: Pattern::new(name, p, q, cells)?,
                checksum: sum.to_string(),
            });
        }
        Ok(Self { entries })
    }

    /// Parses the catalogue compiled into the crate without checking it.
    pub fn embedded() -> Result<Self> {
        Self::parse(EMBEDDED)
    }

    /// The catalogue compiled into the crate, loaded and checked once.
    pub fn builtin() -> &'static Self {
        static LIB: OnceLock<PatternLibrary> = OnceLock::new();
        LIB.get_or_init(|| {
            let lib = Self::parse(EMBEDDED).expect("embedded catalogue parses");
            if let Some(bad) = lib.check().into_iter().find(|c| !c.ok()) {
                panic!("embedded catalogue entry `{}` failed its check", bad.name);
            }
            lib
        })
    }

    pub fn get(&self, name: &str) -> Result<&Pattern> {
        self.entries
            .iter()
            .map(|e| &e.pattern)
            .find(|p| p.name() == name)
            .ok_or_else(|| Error::UnknownPattern(name.to_string()))
    }

    pub fn entries(&self) -> &[CatalogueEntry] {
        &self.entries
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.pattern.name())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Recomputes every checksum and verifies every entry on its own torus.
    pub fn check(&self) -> Vec<EntryCheck> {
        self.entries
            .iter()
            .map(|e| {
                let p = &e.pattern;
                let (colors, violations) = match p.to_coloring() {
                    Ok(c) => (c.k(), crate::graph::verify_coloring(&c).violations),
                    Err(_) => (0, Vec::new()),
                };
                EntryCheck {
                    name: p.name().to_string(),
                    rows: p.rows(),
                    cols: p.cols(),
                    colors,
                    checksum_ok: checksum(p) == e.checksum && colors > 0,
                    violations,
                }
            })
            .collect()
    }
}

/// Shorthand for a builtin catalogue pattern; panics on unknown names.
pub fn pattern(name: &str) -> &'static Pattern {
    PatternLibrary::builtin()
        .get(name)
        .unwrap_or_else(|_| panic!("no catalogue pattern `{name}`"))
}
