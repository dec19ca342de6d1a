//! Finite-dimensional algebras presented by structure constants.
//!
//! An [`AlgebraDef`] is a based module with a bilinear multiplication
//! `e_i * e_j = sum_k c[i][j][k] e_k`. Nothing here assumes associativity;
//! whether the multiplication is formally associative is a property that the
//! cohomology layer checks before building a complex.

use crate::error::{Error, Result};
use crate::linalg::Rat;
use crate::multimap::MultiMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDef {
    name: String,
    dim: usize,
    basis_names: Vec<String>,
    /// Flat `d^3` table, index `(i*d + j)*d + k`.
    struct_consts: Vec<Rat>,
}

impl AlgebraDef {
    /// Build from a full `d^3` structure-constant table.
    pub fn new(name: &str, basis_names: Vec<String>, struct_consts: Vec<Rat>) -> Result<Self> {
        let dim = basis_names.len();
        if dim == 0 {
            return Err(Error::Validation("dimension must be at least 1".into()));
        }
        for (a, name_a) in basis_names.iter().enumerate() {
            if basis_names[..a].contains(name_a) {
                return Err(Error::Validation(format!(
                    "duplicate basis name \"{name_a}\""
                )));
            }
        }
        if struct_consts.len() != dim * dim * dim {
            return Err(Error::Validation(format!(
                "expected {} structure constants, got {}",
                dim * dim * dim,
                struct_consts.len()
            )));
        }
        Ok(AlgebraDef {
            name: name.to_string(),
            dim,
            basis_names,
            struct_consts,
        })
    }

    /// Build from sparse entries `(i, j, k, c)`; unmentioned triples are zero
    /// and duplicate triples are rejected.
    pub fn from_entries(
        name: &str,
        basis_names: Vec<String>,
        entries: &[(usize, usize, usize, Rat)],
    ) -> Result<Self> {
        let dim = basis_names.len();
        let mut table = vec![Rat::zero(); dim * dim * dim];
        let mut seen = vec![false; dim * dim * dim];
        for &(i, j, k, ref c) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Validation(format!(
                    "structure constant index ({i},{j},{k}) out of range for dimension {dim}"
                )));
            }
            let idx = (i * dim + j) * dim + k;
            if seen[idx] {
                return Err(Error::Validation(format!(
                    "duplicate structure constant entry ({i},{j},{k})"
                )));
            }
            seen[idx] = true;
            table[idx] = c.clone();
        }
        AlgebraDef::new(name, basis_names, table)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    /// Coefficient of `e_k` in `e_i * e_j`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.struct_consts[(i * self.dim + j) * self.dim + k]
    }

    /// Coordinates of `e_i * e_j`.
    pub fn multiply_basis(&self, i: usize, j: usize) -> Vec<Rat> {
        (0..self.dim).map(|k| self.c(i, j, k).clone()).collect()
    }

    /// Bilinear extension of the multiplication to coordinate vectors.
    pub fn multiply(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        assert_eq!(u.len(), self.dim);
        assert_eq!(v.len(), self.dim);
        let mut out = vec![Rat::zero(); self.dim];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let uv = ui * vj;
                for k in 0..self.dim {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        out[k] += &uv * c;
                    }
                }
            }
        }
        out
    }

    /// The multiplication as a 2-cochain: `T[k; i, j] = c[i][j][k]`.
    pub fn mu_of(&self) -> MultiMap {
        let d = self.dim;
        let mut coeffs = vec![Rat::zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        coeffs[MultiMap::flatten(d, k, &[i, j])] = c.clone();
                    }
                }
            }
        }
        MultiMap::from_coeffs(2, d, coeffs).expect("table sized by construction")
    }
}
