//! Text and JSON serialization of families, complexes and relative pairs.
//!
//! Text format for a family or complex:
//!
//! ```text
//! n 3
//! faces
//! -
//! 1
//! 2
//! 1 2
//! ```
//!
//! The first line fixes the ambient, the keyword line is `faces` or
//! `facets` (a `facets` block is closed downward on load), then one face
//! per line as ascending vertex numbers with a lone `-` for the empty face.
//! Output is always canonical: `faces`, sorted by (cardinality, mask).
//!
//! A relative pair is two blocks separated by a `---` line, total first.
//!
//! JSON: `{"n": 3, "faces": [[], [1], [2], [1, 2]]}` and
//! `{"total": {...}, "sub": {...}}`.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::family::{ClosureMode, Family};
use crate::pair::RelativePair;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
struct FamilyJson {
    n: usize,
    faces: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct PairJson {
    total: FamilyJson,
    sub: FamilyJson,
}

/// Renders a family in the canonical text format.
pub fn family_to_text(f: &Family) -> String {
    let mut out = format!("n {}\nfaces\n", f.ambient());
    for face in f.faces() {
        out.push_str(&format!("{face}\n"));
    }
    out
}

pub fn complex_to_text(c: &SimplicialComplex) -> String {
    family_to_text(c.family())
}

pub fn pair_to_text(p: &RelativePair) -> String {
    format!(
        "{}---\n{}",
        complex_to_text(p.total()),
        complex_to_text(p.sub())
    )
}

/// Parses the text format into a family; a `facets` block is *not* closed
/// here (see [`parse_complex_text`]).
fn parse_family_block(lines: &[&str]) -> Result<(Family, bool)> {
    let mut it = lines.iter().filter(|l| !l.trim().is_empty());
    let header = it
        .next()
        .ok_or_else(|| Error::parse("missing 'n <int>' header"))?;
    let n: usize = header
        .trim()
        .strip_prefix("n ")
        .or_else(|| header.trim().strip_prefix("n\t"))
        .ok_or_else(|| Error::parse(format!("expected 'n <int>', got '{header}'")))?
        .trim()
        .parse()
        .map_err(|e| Error::parse(format!("bad ambient: {e}")))?;
    let keyword = it
        .next()
        .ok_or_else(|| Error::parse("missing 'faces' or 'facets' keyword"))?
        .trim();
    let as_facets = match keyword {
        "faces" => false,
        "facets" => true,
        other => {
            return Err(Error::parse(format!(
                "expected 'faces' or 'facets', got '{other}'"
            )))
        }
    };
    let mut faces: Vec<Vec<usize>> = Vec::new();
    for line in it {
        let line = line.trim();
        if line == "-" {
            faces.push(Vec::new());
            continue;
        }
        let verts = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|e| Error::parse(format!("bad vertex '{t}': {e}")))
            })
            .collect::<Result<Vec<usize>>>()?;
        faces.push(verts);
    }
    Ok((Family::from_faces(n, faces)?, as_facets))
}

pub fn parse_family_text(text: &str) -> Result<Family> {
    let lines: Vec<&str> = text.lines().collect();
    let (fam, as_facets) = parse_family_block(&lines)?;
    if as_facets {
        fam.closure(ClosureMode::Down)
    } else {
        Ok(fam)
    }
}

pub fn parse_complex_text(text: &str) -> Result<SimplicialComplex> {
    let lines: Vec<&str> = text.lines().collect();
    let (fam, as_facets) = parse_family_block(&lines)?;
    if as_facets {
        Ok(SimplicialComplex::from_family_unchecked(
            fam.closure(ClosureMode::Down)?,
        ))
    } else {
        SimplicialComplex::new(fam)
    }
}

pub fn parse_pair_text(text: &str) -> Result<RelativePair> {
    let parts: Vec<&str> = text.split("\n---").collect();
    if parts.len() != 2 {
        return Err(Error::parse(
            "a relative pair is two blocks separated by a '---' line",
        ));
    }
    let total = parse_complex_text(parts[0])?;
    let sub = parse_complex_text(parts[1].trim_start_matches('-'))?;
    RelativePair::new(total, sub)
}

pub fn family_to_json(f: &Family) -> String {
    let doc = FamilyJson {
        n: f.ambient(),
        faces: f.faces().map(|s| s.vertices().collect()).collect(),
    };
    serde_json::to_string(&doc).expect("family serializes")
}

pub fn complex_to_json(c: &SimplicialComplex) -> String {
    family_to_json(c.family())
}

pub fn pair_to_json(p: &RelativePair) -> String {
    let doc = PairJson {
        total: FamilyJson {
            n: p.ambient(),
            faces: p.total().faces().map(|s| s.vertices().collect()).collect(),
        },
        sub: FamilyJson {
            n: p.ambient(),
            faces: p.sub().faces().map(|s| s.vertices().collect()).collect(),
        },
    };
    serde_json::to_string(&doc).expect("pair serializes")
}

pub fn parse_family_json(text: &str) -> Result<Family> {
    let doc: FamilyJson =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("bad JSON: {e}")))?;
    Family::from_faces(doc.n, doc.faces)
}

pub fn parse_complex_json(text: &str) -> Result<SimplicialComplex> {
    SimplicialComplex::new(parse_family_json(text)?)
}

pub fn parse_pair_json(text: &str) -> Result<RelativePair> {
    let doc: PairJson =
        serde_json::from_str(text).map_err(|e| Error::parse(format!("bad JSON: {e}")))?;
    let total = SimplicialComplex::new(Family::from_faces(doc.total.n, doc.total.faces)?)?;
    let sub = SimplicialComplex::new(Family::from_faces(doc.sub.n, doc.sub.faces)?)?;
    RelativePair::new(total, sub)
}
