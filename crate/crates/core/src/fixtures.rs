//! Golden data: the appendix AR quiver grids and the printed example readings.
//!
//! Files are embedded at build time. Setting `ARQ_FIXTURE_DIR` makes
//! [`load_raw`] read `<dir>/<file>` instead when that file exists.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arquiver::{ARQuiver, DynkinQuiver};
use crate::error::{Error, Result};
use crate::rootsys::{Kind, RootSystem};

const EMBEDDED: &[(&str, &str, &str)] = &[
    ("e6-appendix", "e6_appendix.json", include_str!("../fixtures/e6_appendix.json")),
    ("e7-appendix", "e7_appendix.json", include_str!("../fixtures/e7_appendix.json")),
    ("e8-appendix", "e8_appendix.json", include_str!("../fixtures/e8_appendix.json")),
    ("a5-readings", "a5_readings.json", include_str!("../fixtures/a5_readings.json")),
    ("d4-readings", "d4_readings.json", include_str!("../fixtures/d4_readings.json")),
];

pub const ENV_DIR: &str = "ARQ_FIXTURE_DIR";

pub fn names() -> Vec<&'static str> {
    EMBEDDED.iter().map(|e| e.0).collect()
}

/// The text of a named fixture.
pub fn load_raw(name: &str) -> Result<String> {
    let entry = EMBEDDED
        .iter()
        .find(|e| e.0 == name || e.1 == name)
        .ok_or_else(|| Error::FixtureMissing(name.to_string()))?;
    if let Ok(dir) = std::env::var(ENV_DIR) {
        let path = std::path::Path::new(&dir).join(entry.1);
        if path.exists() {
            return std::fs::read_to_string(&path)
                .map_err(|_| Error::FixtureMissing(path.display().to_string()));
        }
    }
    Ok(entry.2.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridVertex {
    pub i: usize,
    pub p: i32,
    pub root: String,
}

/// A printed AR quiver: orientation plus the label at every coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridFixture {
    pub name: String,
    pub kind: Kind,
    pub rank: usize,
    pub orientation: String,
    pub vertices: Vec<GridVertex>,
}

impl GridFixture {
    pub fn load(name: &str) -> Result<Self> {
        Self::from_json(&load_raw(name)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            what: "grid fixture",
            text: e.to_string(),
        })
    }

    pub fn quiver(&self) -> Result<DynkinQuiver> {
        let sys = Arc::new(RootSystem::new(self.kind, self.rank)?);
        DynkinQuiver::parse(&sys, &self.orientation)
    }

    /// Coordinates whose labels differ between the fixture and `arq`.
    pub fn diff(&self, arq: &ARQuiver) -> GridDiff {
        let sys = arq.system();
        let mut entries = Vec::new();
        for v in &self.vertices {
            let found = (v.i >= 1)
                .then(|| arq.label(v.i - 1, v.p))
                .flatten()
                .map(|r| sys.format_root(r));
            if found.as_deref() != Some(v.root.as_str()) {
                entries.push(GridDiffEntry {
                    i: v.i,
                    p: v.p,
                    expected: Some(v.root.clone()),
                    found,
                });
            }
        }
        for (i, p, r) in arq.vertices() {
            if !self.vertices.iter().any(|v| v.i == i + 1 && v.p == p) {
                entries.push(GridDiffEntry {
                    i: i + 1,
                    p,
                    expected: None,
                    found: Some(sys.format_root(r)),
                });
            }
        }
        GridDiff { entries }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridDiffEntry {
    pub i: usize,
    pub p: i32,
    pub expected: Option<String>,
    pub found: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridDiff {
    pub entries: Vec<GridDiffEntry>,
}

impl GridDiff {
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for GridDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "no differences");
        }
        for e in &self.entries {
            writeln!(
                f,
                "({}, {}): expected {}, found {}",
                e.i,
                e.p,
                e.expected.as_deref().unwrap_or("nothing"),
                e.found.as_deref().unwrap_or("nothing")
            )?;
        }
        Ok(())
    }
}

/// Printed readings of an AR quiver, each a list of root names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReadingsFixture {
    pub name: String,
    pub kind: Kind,
    pub rank: usize,
    pub orientation: String,
    pub readings: Vec<Vec<String>>,
}

impl ReadingsFixture {
    pub fn load(name: &str) -> Result<Self> {
        serde_json::from_str(&load_raw(name)?).map_err(|e| Error::Parse {
            what: "readings fixture",
            text: e.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e6_grid_matches() {
        let fx = GridFixture::load("e6-appendix").unwrap();
        let arq = ARQuiver::build(&fx.quiver().unwrap());
        let diff = fx.diff(&arq);
        assert!(diff.is_empty(), "{diff}");
        assert_eq!(fx.vertices.len(), 36);
    }

    /// Checks that the only difference is one cell whose printed label is a
    /// repeat of another printed label, while the computed root is absent.
    fn assert_single_repeated_label(name: &str, i: usize, p: i32, printed: &str, computed: &str) {
        let fx = GridFixture::load(name).unwrap();
        let arq = ARQuiver::build(&fx.quiver().unwrap());
        let diff = fx.diff(&arq);
        assert_eq!(
            diff.entries,
            vec![GridDiffEntry {
                i,
                p,
                expected: Some(printed.to_string()),
                found: Some(computed.to_string()),
            }],
            "{name}"
        );
        assert_eq!(fx.vertices.iter().filter(|v| v.root == printed).count(), 2);
        assert!(fx.vertices.iter().all(|v| v.root != computed));
        assert_eq!(fx.vertices.len(), arq.system().len());
    }

    #[test]
    fn e7_grid_differs_only_at_a_repeated_label() {
        assert_single_repeated_label("e7-appendix", 5, -7, "(1223221)", "(1223211)");
    }

    #[test]
    fn e8_grid_differs_only_at_a_repeated_label() {
        assert_single_repeated_label("e8-appendix", 2, -17, "(11233210)", "(11232210)");
    }

    #[test]
    fn corrupted_grid_is_reported() {
        let mut fx = GridFixture::load("e6-appendix").unwrap();
        fx.vertices[3].root = "(111111)".to_string();
        let removed = fx.vertices.pop().unwrap();
        let arq = ARQuiver::build(&fx.quiver().unwrap());
        let diff = fx.diff(&arq);
        assert_eq!(diff.entries.len(), 2);
        assert!(diff.entries.iter().any(|e| e.i == removed.i && e.p == removed.p && e.expected.is_none()));
        assert!(diff.to_string().contains("(111111)"));
    }

    #[test]
    fn missing_fixture() {
        assert!(matches!(load_raw("nope"), Err(Error::FixtureMissing(_))));
    }
}
