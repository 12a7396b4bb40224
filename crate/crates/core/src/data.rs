//! Bundled dataset access.
//!
//! The workspace ships a `data/` directory containing facet lists (`.scx`)
//! and orbit presentations (`.orb`) together with a `manifest.json` mapping
//! dataset ids to file paths and SHA-256 checksums. Loading verifies the
//! checksum so silent data corruption is caught at the first read.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::Deserialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::io::{parse_orbit_file, parse_scx, sha256_hex, OrbitFile};

/// Environment variable overriding the default data directory.
pub const DATA_ENV: &str = "HOPFFORGE_DATA";

/// One manifest row.
#[derive(Debug, Clone, Deserialize)]
pub struct ManifestEntry {
    /// File name relative to the data directory.
    pub path: String,
    /// `"scx"` or `"orbit"`.
    pub format: String,
    /// Hex SHA-256 of the file contents.
    pub sha256: String,
    /// Human-readable description of the contents.
    pub note: String,
}

/// Parsed `manifest.json`: dataset id -> entry.
pub type Manifest = BTreeMap<String, ManifestEntry>;

/// Directory holding the bundled data files.
///
/// `HOPFFORGE_DATA` overrides the baked-in location (the `data/` directory
/// at the workspace root).
pub fn data_dir() -> PathBuf {
    if let Ok(dir) = std::env::var(DATA_ENV) {
        if !dir.is_empty() {
            return PathBuf::from(dir);
        }
    }
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data"))
}

/// Read and parse `manifest.json` from the data directory.
pub fn load_manifest() -> Result<Manifest> {
    let path = data_dir().join("manifest.json");
    let text = std::fs::read_to_string(&path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse {
        what: path.display().to_string(),
        detail: e.to_string(),
    })
}

/// A dataset in whichever form it is stored.
#[derive(Debug, Clone)]
pub enum Dataset {
    /// Explicit facet list.
    Complex(SimplicialComplex),
    /// Orbit presentation (seeds plus group).
    Orbits(OrbitFile),
}

/// Load a dataset by manifest id, verifying its checksum.
pub fn load_dataset(id: &str) -> Result<Dataset> {
    let manifest = load_manifest()?;
    let entry = manifest.get(id).ok_or_else(|| Error::Dataset {
        id: id.to_string(),
        detail: "not present in manifest.json".to_string(),
    })?;
    let path = data_dir().join(&entry.path);
    let text = std::fs::read_to_string(&path)?;
    let got = sha256_hex(text.as_bytes());
    if got != entry.sha256 {
        return Err(Error::Checksum {
            id: id.to_string(),
            expected: entry.sha256.clone(),
            got,
        });
    }
    match entry.format.as_str() {
        "scx" => Ok(Dataset::Complex(parse_scx(&text)?)),
        "orbit" => Ok(Dataset::Orbits(parse_orbit_file(&text)?)),
        other => Err(Error::Dataset {
            id: id.to_string(),
            detail: format!("unknown format {other:?}"),
        }),
    }
}

/// Per-seed orbit size cap when expanding bundled orbit presentations.
/// Far above any bundled dataset's orbit sizes; hitting it means the data
/// or the group is wrong.
pub const ORBIT_CAP: usize = 1 << 20;

/// Load a dataset and return it as a complex, expanding orbit
/// presentations as needed.
pub fn load_complex(id: &str) -> Result<SimplicialComplex> {
    match load_dataset(id)? {
        Dataset::Complex(c) => Ok(c),
        Dataset::Orbits(o) => o.expand(ORBIT_CAP),
    }
}

/// Load several datasets and return the union complex.
pub fn load_union(ids: &[&str]) -> Result<SimplicialComplex> {
    let mut acc = SimplicialComplex::empty();
    for id in ids {
        acc = acc.union(&load_complex(id)?);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_lists_every_bundled_dataset_with_valid_checksums() {
        let manifest = load_manifest().unwrap();
        assert!(manifest.len() >= 24);
        for id in manifest.keys() {
            load_dataset(id).unwrap();
        }
    }

    #[test]
    fn five_sphere_piece_union_has_two_hundred_facets() {
        // The three solid-torus pieces of the 15-vertex 5-sphere overlap in
        // lower-dimensional tori, so the facet count of the union is the sum
        // of the orbit expansions. One generator of piece 2 repeats with
        // period 5 under the shift, giving orbit length 5 instead of 15:
        // 5*15 + 4*15 - (15 - 5) + 5*15 = 200.
        let u = load_union(&["s5-200-h1", "s5-200-h2", "s5-200-h3"]).unwrap();
        assert_eq!(u.dim(), 5);
        assert_eq!(u.facet_count(), 200);
        assert_eq!(u.vertex_count(), 15);
    }

    #[test]
    fn seven_sphere_pieces_have_expected_facet_counts() {
        for (id, count) in [("s7-h1", 3937), ("s7-h2", 3100), ("s7-h3", 2635), ("s7-h4", 1271)] {
            let c = load_complex(id).unwrap();
            assert_eq!(c.facet_count(), count, "{id}");
            assert_eq!(c.dim(), 7, "{id}");
        }
    }

    #[test]
    fn explicit_facet_lists_load_directly() {
        let rp4 = load_complex("rp4-nice-21").unwrap();
        assert_eq!(rp4.f_vector(), vec![21, 180, 520, 600, 240]);
        let rp3 = load_complex("rp3-nice-12").unwrap();
        assert_eq!(rp3.f_vector(), vec![12, 60, 96, 48]);
    }

    #[test]
    fn orbit_presentations_with_permutation_groups_expand() {
        let p12 = load_complex("p12").unwrap();
        assert_eq!(p12.f_vector(), vec![12, 60, 96, 48]);
        let rp4 = load_complex("rp4-min-16").unwrap();
        assert_eq!(rp4.f_vector(), vec![16, 120, 330, 375, 150]);
    }
}
