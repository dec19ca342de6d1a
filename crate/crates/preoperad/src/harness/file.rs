//! JSON algebra files.
//!
//! ```json
//! {
//!   "name": "dual-numbers",
//!   "dim": 2,
//!   "basis": ["1", "eps"],
//!   "mul": [
//!     { "i": 0, "j": 0, "k": 0, "c": "1" },
//!     { "i": 0, "j": 1, "k": 1, "c": "1" },
//!     { "i": 1, "j": 0, "k": 1, "c": "1" }
//!   ]
//! }
//! ```
//!
//! Each `mul` record contributes the coefficient of `e_k` in `e_i * e_j`;
//! omitted triples are zero and duplicates are rejected. Coefficients are
//! exact base-10 rational literals, `"p"` or `"p/q"`.

use std::path::Path;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Deserialize;

use crate::algebra::AlgebraDef;
use crate::error::{Error, Result};
use crate::linalg::Rat;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    name: String,
    dim: i64,
    basis: Vec<String>,
    mul: Vec<MulEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MulEntry {
    i: i64,
    j: i64,
    k: i64,
    c: String,
}

/// Parse a rational literal `"p"` or `"p/q"`. A malformed literal is a parse
/// error; a zero denominator is a validation error.
pub fn parse_rational_literal(s: &str) -> Result<Rat> {
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let num: BigInt = num_str
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational literal \"{s}\"")))?;
    let den: BigInt = match den_str {
        Some(d) => d
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad rational literal \"{s}\"")))?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(Error::Validation(format!(
            "zero denominator in rational literal \"{s}\""
        )));
    }
    Ok(Rat::from_big_parts(num, den))
}

/// Parse an algebra description from JSON text.
pub fn parse_algebra_str(text: &str) -> Result<AlgebraDef> {
    let file: AlgebraFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if file.dim < 1 {
        return Err(Error::Validation(format!(
            "dimension must be at least 1, got {}",
            file.dim
        )));
    }
    let dim = file.dim as usize;
    if file.basis.len() != dim {
        return Err(Error::Validation(format!(
            "expected {dim} basis names, got {}",
            file.basis.len()
        )));
    }
    let mut entries = Vec::with_capacity(file.mul.len());
    for e in &file.mul {
        let index = |v: i64, label: &str| -> Result<usize> {
            if v < 0 || v >= file.dim {
                return Err(Error::Validation(format!(
                    "index {label} = {v} out of range 0..{dim}"
                )));
            }
            Ok(v as usize)
        };
        entries.push((
            index(e.i, "i")?,
            index(e.j, "j")?,
            index(e.k, "k")?,
            parse_rational_literal(&e.c)?,
        ));
    }
    AlgebraDef::from_entries(&file.name, file.basis, &entries)
}

/// Parse an algebra description from a file on disk.
pub fn parse_algebra(path: &Path) -> Result<AlgebraDef> {
    let text = std::fs::read_to_string(path)?;
    parse_algebra_str(&text)
}
