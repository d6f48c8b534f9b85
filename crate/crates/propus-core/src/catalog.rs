//! Line-oriented persistence for first-row data, with verification on load.
//!
//! Format, one entry per line:
//!
//! ```text
//! <kind> <n> <row>[ <row>[ <row>]] # <provenance>
//! ```
//!
//! Rows are strings over `+`, `-`, `0`. Lines starting with `#` are comments.
//! Every entry is checked against its kind's Gram identity when loaded;
//! entries that fail are rejected with their line number, never silently
//! kept, so no unverified data can enter the system.

use std::fs;
use std::io;
use std::path::Path;
use std::sync::OnceLock;

use thiserror::Error;

use crate::assembly::{additive_defect, PropusTriple};
use crate::constructions::{ConferencePair, DOptimalPair, TurynPair};
use crate::matrix::{circulant, CirculantType, FirstRow, MatrixError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("blank entry")]
    Empty,
    #[error("unknown kind {0:?}")]
    UnknownKind(String),
    #[error("missing or malformed order field")]
    BadOrder,
    #[error("{kind} entries carry {expected} rows, got {got}")]
    WrongRowCount {
        kind: EntryKind,
        expected: usize,
        got: usize,
    },
    #[error("row {index} has length {got}, expected {expected}")]
    WrongRowLength {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("row {index}: {source}")]
    BadRow { index: usize, source: MatrixError },
    #[error("verification failed: {0}")]
    Verify(String),
}

/// What a catalog entry stores, which fixes both the row count and the Gram
/// identity checked at load time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EntryKind {
    Propus,
    Turyn,
    Conference,
    DOptimal,
}

impl EntryKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EntryKind::Propus => "propus",
            EntryKind::Turyn => "turyn",
            EntryKind::Conference => "conference",
            EntryKind::DOptimal => "doptimal",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "propus" => Some(EntryKind::Propus),
            "turyn" => Some(EntryKind::Turyn),
            "conference" => Some(EntryKind::Conference),
            "doptimal" => Some(EntryKind::DOptimal),
            _ => None,
        }
    }

    pub fn row_count(self) -> usize {
        match self {
            EntryKind::Propus => 3,
            _ => 2,
        }
    }
}

impl std::fmt::Display for EntryKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A named, kind-tagged record of first rows with a free-text provenance.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CatalogEntry {
    pub kind: EntryKind,
    pub n: usize,
    pub rows: Vec<FirstRow>,
    pub provenance: String,
}

impl CatalogEntry {
    /// Syntax-level parse; does not verify the Gram identity.
    pub fn parse_line(line: &str) -> Result<Self, CatalogError> {
        let (data, provenance) = match line.find('#') {
            Some(pos) => (&line[..pos], line[pos + 1..].trim().to_string()),
            None => (line, String::new()),
        };
        let mut tokens = data.split_whitespace();
        let kind_token = tokens.next().ok_or(CatalogError::Empty)?;
        let kind =
            EntryKind::parse(kind_token).ok_or_else(|| CatalogError::UnknownKind(kind_token.into()))?;
        let n: usize = tokens
            .next()
            .and_then(|t| t.parse().ok())
            .filter(|&n| n >= 1)
            .ok_or(CatalogError::BadOrder)?;
        let row_tokens: Vec<&str> = tokens.collect();
        if row_tokens.len() != kind.row_count() {
            return Err(CatalogError::WrongRowCount {
                kind,
                expected: kind.row_count(),
                got: row_tokens.len(),
            });
        }
        let mut rows = Vec::with_capacity(row_tokens.len());
        for (index, token) in row_tokens.iter().enumerate() {
            if token.chars().count() != n {
                return Err(CatalogError::WrongRowLength {
                    index,
                    expected: n,
                    got: token.chars().count(),
                });
            }
            let row = FirstRow::parse_signs(token, CirculantType::Type1)
                .map_err(|source| CatalogError::BadRow { index, source })?;
            rows.push(row);
        }
        Ok(CatalogEntry {
            kind,
            n,
            rows,
            provenance,
        })
    }

    /// Renders the entry back to its line form; `parse_line` inverts this.
    pub fn to_line(&self) -> String {
        let rows: Vec<String> = self.rows.iter().map(FirstRow::to_signs).collect();
        if self.provenance.is_empty() {
            format!("{} {} {}", self.kind, self.n, rows.join(" "))
        } else {
            format!("{} {} {} # {}", self.kind, self.n, rows.join(" "), self.provenance)
        }
    }

    /// Checks the kind's Gram identity by constructing the typed object.
    pub fn verify(&self) -> Result<(), CatalogError> {
        let fail = |e: &dyn std::fmt::Display| CatalogError::Verify(e.to_string());
        match self.kind {
            EntryKind::Turyn => {
                TurynPair::from_rows(self.rows[0].clone(), self.rows[1].clone())
                    .map_err(|e| fail(&e))?;
            }
            EntryKind::Conference => {
                ConferencePair::from_rows(self.rows[0].clone(), self.rows[1].clone())
                    .map_err(|e| fail(&e))?;
            }
            EntryKind::DOptimal => {
                DOptimalPair::from_rows(self.rows[0].clone(), self.rows[1].clone())
                    .map_err(|e| fail(&e))?;
            }
            EntryKind::Propus => {
                let triple = PropusTriple::new(
                    circulant(&self.rows[0]),
                    circulant(&self.rows[1]),
                    circulant(&self.rows[2]),
                )
                .map_err(|e| fail(&e))?;
                if !additive_defect(&triple).is_zero() {
                    return Err(CatalogError::Verify(
                        "additive property AAᵀ + 2BBᵀ + DDᵀ = 4nI fails".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn turyn_pair(&self) -> Option<TurynPair> {
        (self.kind == EntryKind::Turyn)
            .then(|| TurynPair::from_rows(self.rows[0].clone(), self.rows[1].clone()).ok())
            .flatten()
    }

    pub fn conference_pair(&self) -> Option<ConferencePair> {
        (self.kind == EntryKind::Conference)
            .then(|| ConferencePair::from_rows(self.rows[0].clone(), self.rows[1].clone()).ok())
            .flatten()
    }

    pub fn d_optimal_pair(&self) -> Option<DOptimalPair> {
        (self.kind == EntryKind::DOptimal)
            .then(|| DOptimalPair::from_rows(self.rows[0].clone(), self.rows[1].clone()).ok())
            .flatten()
    }

    pub fn propus_triple(&self) -> Option<PropusTriple> {
        (self.kind == EntryKind::Propus)
            .then(|| {
                PropusTriple::new(
                    circulant(&self.rows[0]),
                    circulant(&self.rows[1]),
                    circulant(&self.rows[2]),
                )
                .ok()
            })
            .flatten()
    }
}

/// An immutable, verified, deduplicated entry set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

/// Result of loading a source: the verified entries plus a report of every
/// rejected line (1-based line number and reason).
#[derive(Debug, Clone)]
pub struct LoadOutcome {
    pub catalog: Catalog,
    pub rejected: Vec<(usize, String)>,
}

static BUILTIN: OnceLock<Catalog> = OnceLock::new();

impl Catalog {
    pub fn empty() -> Self {
        Catalog::default()
    }

    /// The catalog shipped with the crate: small verified ingredients
    /// generated by the search module and frozen.
    pub fn builtin() -> &'static Catalog {
        BUILTIN.get_or_init(|| {
            let outcome = Catalog::parse_str(include_str!("builtin.catalog"));
            assert!(
                outcome.rejected.is_empty(),
                "built-in catalog has invalid lines: {:?}",
                outcome.rejected
            );
            outcome.catalog
        })
    }

    /// Parses and verifies catalog text. Bad lines are reported, good lines
    /// are kept; duplicates (same kind, order and rows) collapse to the first
    /// occurrence.
    pub fn parse_str(text: &str) -> LoadOutcome {
        let mut entries = Vec::new();
        let mut rejected = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match CatalogEntry::parse_line(line).and_then(|e| e.verify().map(|_| e)) {
                Ok(entry) => entries.push(entry),
                Err(err) => rejected.push((idx + 1, err.to_string())),
            }
        }
        entries.sort_by(|a, b| {
            (a.kind, a.n, &a.rows).cmp(&(b.kind, b.n, &b.rows))
        });
        entries.dedup_by(|a, b| a.kind == b.kind && a.n == b.n && a.rows == b.rows);
        LoadOutcome {
            catalog: Catalog { entries },
            rejected,
        }
    }

    pub fn load_path(path: &Path) -> io::Result<LoadOutcome> {
        Ok(Self::parse_str(&fs::read_to_string(path)?))
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn find(&self, kind: EntryKind, n: usize) -> impl Iterator<Item = &CatalogEntry> {
        self.entries
            .iter()
            .filter(move |e| e.kind == kind && e.n == n)
    }

    /// Lexicographically least Turyn pair of order n, if present.
    pub fn turyn_pair(&self, n: usize) -> Option<TurynPair> {
        self.find(EntryKind::Turyn, n).find_map(CatalogEntry::turyn_pair)
    }

    pub fn conference_pair(&self, n: usize) -> Option<ConferencePair> {
        self.find(EntryKind::Conference, n)
            .find_map(CatalogEntry::conference_pair)
    }

    pub fn d_optimal_pair(&self, n: usize) -> Option<DOptimalPair> {
        self.find(EntryKind::DOptimal, n)
            .find_map(CatalogEntry::d_optimal_pair)
    }

    pub fn propus_triple(&self, n: usize) -> Option<PropusTriple> {
        self.find(EntryKind::Propus, n)
            .find_map(CatalogEntry::propus_triple)
    }

    /// Union with another catalog, deduplicated and re-sorted.
    pub fn merged(&self, other: &Catalog) -> Catalog {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        entries.sort_by(|a, b| (a.kind, a.n, &a.rows).cmp(&(b.kind, b.n, &b.rows)));
        entries.dedup_by(|a, b| a.kind == b.kind && a.n == b.n && a.rows == b.rows);
        Catalog { entries }
    }

    /// Renders every entry, one line each, trailing newline included.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&e.to_line());
            out.push('\n');
        }
        out
    }
}
