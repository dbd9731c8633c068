//! JSON space files. Indices are 1-based; scalars are exact strings.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{LieAlgebra, ReductiveSpace};
use crate::error::{Error, Result};
use crate::field::{FieldElem, Rational};
use crate::rep::{Family, GroupFactor};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceFile {
    name: String,
    dim: usize,
    structure_constants: Vec<(usize, usize, usize, String)>,
    h_basis: Vec<Vec<String>>,
    m_frame: Vec<Vec<String>>,
    c2: String,
    orientation: i32,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    factors: Vec<(String, usize)>,
}

fn parse_elem(s: &str, what: &str) -> Result<FieldElem> {
    s.parse().map_err(|e| Error::Parse(format!("{what}: `{s}`: {e}")))
}

fn parse_vectors(rows: &[Vec<String>], dim: usize, what: &str) -> Result<Vec<Vec<FieldElem>>> {
    rows.iter()
        .enumerate()
        .map(|(i, r)| {
            if r.len() != dim {
                return Err(Error::Parse(format!("{what}[{}] has {} coordinates, expected {dim}", i + 1, r.len())));
            }
            r.iter().map(|s| parse_elem(s, what)).collect()
        })
        .collect()
}

/// Parses and fully verifies a space given as JSON text.
pub fn space_from_json(text: &str) -> Result<ReductiveSpace> {
    let file: SpaceFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let dim = file.dim;
    let mut consts = Vec::with_capacity(file.structure_constants.len());
    for (i, j, k, c) in &file.structure_constants {
        if [*i, *j, *k].iter().any(|&x| x == 0 || x > dim) {
            return Err(Error::Parse(format!("structure constant index ({i},{j},{k}) outside 1..={dim}")));
        }
        consts.push((i - 1, j - 1, k - 1, parse_elem(c, "structure constant")?));
    }
    let g = LieAlgebra::new(dim, &consts)?;
    let h = parse_vectors(&file.h_basis, dim, "h_basis")?;
    let m = parse_vectors(&file.m_frame, dim, "m_frame")?;
    let c2: Rational = file.c2.parse().map_err(|e| Error::Parse(format!("c2 `{}`: {e}", file.c2)))?;
    let factors = file
        .factors
        .iter()
        .map(|(f, n)| Ok(GroupFactor::new(f.parse::<Family>()?, *n)))
        .collect::<Result<Vec<_>>>()?;
    ReductiveSpace::new(file.name, g, h, m, c2, file.orientation, factors)
}

pub fn load_space(path: impl AsRef<Path>) -> Result<ReductiveSpace> {
    space_from_json(&std::fs::read_to_string(path)?)
}

/// Canonical JSON encoding of a space.
pub fn space_to_json(space: &ReductiveSpace) -> Result<String> {
    let strings = |v: &[FieldElem]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    let file = SpaceFile {
        name: space.name.clone(),
        dim: space.dim(),
        structure_constants: space
            .g
            .structure_constants()
            .into_iter()
            .map(|(i, j, k, c)| (i + 1, j + 1, k + 1, c.to_string()))
            .collect(),
        h_basis: space.h_basis.iter().map(|v| strings(v)).collect(),
        m_frame: space.m_frame.iter().map(|v| strings(v)).collect(),
        c2: space.c2.to_string(),
        orientation: space.orientation,
        factors: space.factors.iter().map(|f| (f.family.to_string(), f.rank)).collect(),
    };
    Ok(serde_json::to_string_pretty(&file)? + "\n")
}
