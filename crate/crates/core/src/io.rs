//! Text formats: SCX complexes, orbit-generator files, and JSON mirrors.
//!
//! *SCX v1* — comment lines starting `#` and blank lines are ignored;
//! a header `scx dim=<d> n=<vertices>`; then one facet per line as
//! whitespace-separated vertex labels. The writer emits canonical form
//! (facets in the complex's canonical order, single spaces, no comments),
//! so parse→write round-trips are byte-exact.
//!
//! *Orbit v1* — header `orbits n=<modulus> group=<cyclic|perms>`;
//! for `perms`, one or more generator lines `perm: (a b c)(d e)…`;
//! then one seed simplex per line. `cyclic` means the shift `x ↦ x+1
//! (mod n)` on labels `0..n`.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::simplex::{Simplex, Vertex};
use crate::symmetry::{expand_orbits, GroupSpec, Permutation};
use serde::{Deserialize, Serialize};

// ----------------------------------------------------------------------
// SCX
// ----------------------------------------------------------------------

/// Serializes a complex in canonical SCX form.
pub fn write_scx(c: &SimplicialComplex) -> String {
    let mut out = format!("scx dim={} n={}\n", c.dim(), c.vertex_count());
    for f in c.facets() {
        let line: Vec<String> = f.vertices().iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses SCX text; the header's `dim` and `n` must match the content.
pub fn parse_scx(text: &str) -> Result<SimplicialComplex> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines.next().ok_or_else(|| parse_err("scx", 0, "empty input"))?;
    let (dim, n) = parse_scx_header(header).map_err(|d| parse_err("scx", lineno, &d))?;
    let mut facets = Vec::new();
    for (lineno, line) in lines {
        let verts = parse_label_line(line).map_err(|d| parse_err("scx", lineno, &d))?;
        facets.push(
            Simplex::new(verts).map_err(|e| parse_err("scx", lineno, &e.to_string()))?,
        );
    }
    let c = SimplicialComplex::from_facets(facets);
    if c.dim() != dim {
        return Err(parse_err(
            "scx",
            0,
            &format!("header dim={} but content has dimension {}", dim, c.dim()),
        ));
    }
    if c.vertex_count() != n {
        return Err(parse_err(
            "scx",
            0,
            &format!(
                "header n={} but content has {} vertices",
                n,
                c.vertex_count()
            ),
        ));
    }
    Ok(c)
}

fn parse_scx_header(line: &str) -> std::result::Result<(i64, usize), String> {
    let mut it = line.split_whitespace();
    if it.next() != Some("scx") {
        return Err("expected header starting with 'scx'".into());
    }
    let mut dim = None;
    let mut n = None;
    for tok in it {
        if let Some(v) = tok.strip_prefix("dim=") {
            dim = Some(v.parse::<i64>().map_err(|e| format!("bad dim: {e}"))?);
        } else if let Some(v) = tok.strip_prefix("n=") {
            n = Some(v.parse::<usize>().map_err(|e| format!("bad n: {e}"))?);
        } else {
            return Err(format!("unexpected header token '{tok}'"));
        }
    }
    match (dim, n) {
        (Some(d), Some(n)) => Ok((d, n)),
        _ => Err("header must carry dim= and n=".into()),
    }
}

/// JSON mirror of SCX: `{dim, n, facets}`.
#[derive(Serialize, Deserialize)]
pub struct ScxJson {
    pub dim: i64,
    pub n: usize,
    pub facets: Vec<Vec<Vertex>>,
}

pub fn write_scx_json(c: &SimplicialComplex) -> String {
    let doc = ScxJson {
        dim: c.dim(),
        n: c.vertex_count(),
        facets: c
            .facets()
            .iter()
            .map(|f| f.vertices().to_vec())
            .collect(),
    };
    serde_json::to_string(&doc).expect("serializable")
}

pub fn parse_scx_json(text: &str) -> Result<SimplicialComplex> {
    let doc: ScxJson = serde_json::from_str(text)
        .map_err(|e| parse_err("scx-json", 0, &e.to_string()))?;
    let c = SimplicialComplex::from_facet_lists(&doc.facets)?;
    if c.dim() != doc.dim || c.vertex_count() != doc.n {
        return Err(parse_err("scx-json", 0, "dim/n fields disagree with facets"));
    }
    Ok(c)
}

// ----------------------------------------------------------------------
// Orbit files
// ----------------------------------------------------------------------

/// A parsed orbit-generator file: seeds plus the acting group.
#[derive(Clone, Debug)]
pub struct OrbitFile {
    /// Label modulus (cyclic action) or label-space size hint (perms).
    pub modulus: u32,
    pub group: GroupSpec,
    pub seeds: Vec<Simplex>,
}

impl OrbitFile {
    /// Expands all seed orbits into one complex.
    pub fn expand(&self, cap: usize) -> Result<SimplicialComplex> {
        expand_orbits(&self.seeds, &self.group, cap)
    }
}

pub fn parse_orbit_file(text: &str) -> Result<OrbitFile> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| parse_err("orbit", 0, "empty input"))?;
    let (modulus, cyclic) = parse_orbit_header(header).map_err(|d| parse_err("orbit", lineno, &d))?;
    let mut gens: Vec<Permutation> = Vec::new();
    let mut seeds: Vec<Simplex> = Vec::new();
    for (lineno, line) in lines {
        if let Some(rest) = line.strip_prefix("perm:") {
            if cyclic {
                return Err(parse_err(
                    "orbit",
                    lineno,
                    "perm: lines are not allowed with group=cyclic",
                ));
            }
            gens.push(
                parse_cycle_notation(rest).map_err(|d| parse_err("orbit", lineno, &d))?,
            );
        } else {
            let verts = parse_label_line(line).map_err(|d| parse_err("orbit", lineno, &d))?;
            seeds.push(
                Simplex::new(verts).map_err(|e| parse_err("orbit", lineno, &e.to_string()))?,
            );
        }
    }
    let group = if cyclic {
        GroupSpec::Cyclic { modulus }
    } else {
        if gens.is_empty() {
            return Err(parse_err("orbit", 0, "group=perms requires perm: lines"));
        }
        GroupSpec::Generated { gens }
    };
    if seeds.is_empty() {
        return Err(parse_err("orbit", 0, "no seed simplices"));
    }
    Ok(OrbitFile {
        modulus,
        group,
        seeds,
    })
}

pub fn write_orbit_file(o: &OrbitFile) -> String {
    let mut out = String::new();
    match &o.group {
        GroupSpec::Cyclic { modulus } => {
            out.push_str(&format!("orbits n={modulus} group=cyclic\n"));
        }
        GroupSpec::Generated { gens } => {
            out.push_str(&format!("orbits n={} group=perms\n", o.modulus));
            for g in gens {
                out.push_str(&format!("perm: {}\n", cycle_notation(g)));
            }
        }
    }
    for s in &o.seeds {
        let line: Vec<String> = s.vertices().iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

fn parse_orbit_header(line: &str) -> std::result::Result<(u32, bool), String> {
    let mut it = line.split_whitespace();
    if it.next() != Some("orbits") {
        return Err("expected header starting with 'orbits'".into());
    }
    let mut n = None;
    let mut cyclic = None;
    for tok in it {
        if let Some(v) = tok.strip_prefix("n=") {
            n = Some(v.parse::<u32>().map_err(|e| format!("bad n: {e}"))?);
        } else if let Some(v) = tok.strip_prefix("group=") {
            cyclic = Some(match v {
                "cyclic" => true,
                "perms" => false,
                other => return Err(format!("unknown group kind '{other}'")),
            });
        } else {
            return Err(format!("unexpected header token '{tok}'"));
        }
    }
    match (n, cyclic) {
        (Some(n), Some(c)) => Ok((n, c)),
        _ => Err("header must carry n= and group=".into()),
    }
}

/// Parses disjoint-cycle notation like `(1 3 5)(2 4)`; singleton cycles
/// are accepted and ignored. Commas may separate entries.
pub fn parse_cycle_notation(s: &str) -> std::result::Result<Permutation, String> {
    let s = s.trim();
    if s.is_empty() || s == "()" || s.eq_ignore_ascii_case("id") {
        return Ok(Permutation::identity());
    }
    let mut cycles: Vec<Vec<Vertex>> = Vec::new();
    let mut rest = s;
    while !rest.is_empty() {
        let Some(open) = rest.find('(') else {
            return Err(format!("expected '(' in cycle notation near '{rest}'"));
        };
        if !rest[..open].trim().is_empty() {
            return Err(format!("stray text '{}' in cycle notation", &rest[..open]));
        }
        let Some(close_rel) = rest[open..].find(')') else {
            return Err("unbalanced '(' in cycle notation".into());
        };
        let body = &rest[open + 1..open + close_rel];
        let cyc: Vec<Vertex> = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<Vertex>().map_err(|e| format!("bad label '{t}': {e}")))
            .collect::<std::result::Result<_, _>>()?;
        if cyc.is_empty() {
            return Err("empty cycle '()' with content expected".into());
        }
        cycles.push(cyc);
        rest = &rest[open + close_rel + 1..];
        rest = rest.trim_start();
    }
    Permutation::from_cycles(&cycles).map_err(|e| e.to_string())
}

/// Canonical cycle notation; the identity prints as `()`.
pub fn cycle_notation(p: &Permutation) -> String {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "()".into();
    }
    cycles
        .iter()
        .map(|c| {
            let inner: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            format!("({})", inner.join(" "))
        })
        .collect::<Vec<_>>()
        .join("")
}

// ----------------------------------------------------------------------
// Shared helpers
// ----------------------------------------------------------------------

/// Iterator over (1-based line number, trimmed content) skipping comments
/// and blank lines.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_label_line(line: &str) -> std::result::Result<Vec<Vertex>, String> {
    line.split_whitespace()
        .map(|t| t.parse::<Vertex>().map_err(|e| format!("bad label '{t}': {e}")))
        .collect()
}

fn parse_err(what: &str, line: usize, detail: &str) -> Error {
    Error::Parse {
        what: if line > 0 {
            format!("{what} line {line}")
        } else {
            what.to_string()
        },
        detail: detail.to_string(),
    }
}

/// Hex SHA-256 of raw bytes (dataset checksums).
pub fn sha256_hex(bytes: &[u8]) -> String {
    use sha2::{Digest, Sha256};
    let mut h = Sha256::new();
    h.update(bytes);
    let out = h.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex;

    #[test]
    fn scx_round_trip() {
        let c = SimplicialComplex::simplex_boundary(&simplex![0, 1, 2, 3]);
        let text = write_scx(&c);
        assert!(text.starts_with("scx dim=2 n=4\n"));
        let back = parse_scx(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(write_scx(&back), text);
        // Comments and blank lines are tolerated.
        let with_comments = format!("# boundary of a tetrahedron\n\n{text}# trailing\n");
        assert_eq!(parse_scx(&with_comments).unwrap(), c);
        // Header mismatches are rejected.
        assert!(parse_scx("scx dim=1 n=4\n0 1 2\n").is_err());
        assert!(parse_scx("scx dim=2 n=5\n0 1 2\n").is_err());
        assert!(parse_scx("scx dim=2\n0 1 2\n").is_err());
    }

    #[test]
    fn scx_json_round_trip() {
        let c = SimplicialComplex::from_facet_lists(&[vec![0, 1, 2], vec![2, 5]]).unwrap();
        let j = write_scx_json(&c);
        assert_eq!(parse_scx_json(&j).unwrap(), c);
    }

    #[test]
    fn orbit_file_cyclic() {
        let text = "# a circle\norbits n=6 group=cyclic\n0 1\n";
        let o = parse_orbit_file(text).unwrap();
        assert_eq!(o.modulus, 6);
        let c = o.expand(1000).unwrap();
        assert_eq!(c.f_vector(), vec![6, 6]);
        assert_eq!(write_orbit_file(&o), "orbits n=6 group=cyclic\n0 1\n");
        // perm: line under cyclic is rejected.
        assert!(parse_orbit_file("orbits n=6 group=cyclic\nperm: (0 1)\n0 1\n").is_err());
    }

    #[test]
    fn orbit_file_perms() {
        let text = "orbits n=4 group=perms\nperm: (0 1 2 3)\nperm: (0 1)\n0 1\n";
        let o = parse_orbit_file(text).unwrap();
        let c = o.expand(1000).unwrap();
        assert_eq!(c.f_vector(), vec![4, 6]); // K₄ under S₄
        let round = parse_orbit_file(&write_orbit_file(&o)).unwrap();
        assert_eq!(round.expand(1000).unwrap(), c);
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = parse_cycle_notation("(1 3 5)(2 4)").unwrap();
        assert_eq!(p.apply(5), 1);
        assert_eq!(p.apply(4), 2);
        assert_eq!(cycle_notation(&p), "(1 3 5)(2 4)");
        // Singletons, commas, spacing.
        let q = parse_cycle_notation(" (1, 11) (2 10) (6) ").unwrap();
        assert_eq!(q.apply(6), 6);
        assert_eq!(q.apply(11), 1);
        assert_eq!(cycle_notation(&Permutation::identity()), "()");
        assert!(parse_cycle_notation("(1 2").is_err());
        assert!(parse_cycle_notation("(1 2)(2 3)").is_err()); // not disjoint
    }

    #[test]
    fn checksums_are_stable() {
        assert_eq!(
            sha256_hex(b""),
            "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
