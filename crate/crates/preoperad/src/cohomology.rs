//! The cochain complex of the pre-coboundary operator and the induced
//! graded structure on its cohomology.
//!
//! Building a complex is refused unless the formal associator `mu . mu`
//! vanishes; under that constraint the coboundary squares to zero (verified
//! exactly during assembly) and each degree gets a deterministic kernel
//! basis, image basis and set of cohomology representatives. Classes carry
//! coordinates over the chosen representative basis, so equality of classes
//! and well-definedness of the induced products are decided exactly.

use crate::error::{Error, Result};
use crate::linalg::{solve_in_span, Matrix, Rat};
use crate::multimap::MultiMap;
use crate::ops::{commutator, OperadContext};

/// Hard cap on coboundary matrix side length (`d^(N+2)` rows for the top
/// degree); degrees above this are refused rather than attempted.
pub const MAX_MATRIX_SIDE: usize = 65_536;

#[derive(Debug, Clone)]
pub struct CochainComplex {
    ctx: OperadContext,
    max_degree: usize,
    /// `d_mats[n]` is the coboundary `C^n -> C^(n+1)` in the canonical
    /// basis, `d^(n+2)` rows by `d^(n+1)` columns, for `0 <= n <= N`.
    d_mats: Vec<Matrix>,
    /// Kernel basis of `d_mats[n]` per degree.
    kernels: Vec<Vec<Vec<Rat>>>,
    /// Basis of the image of `d_mats[n-1]` inside degree `n` (empty at 0).
    images: Vec<Vec<Vec<Rat>>>,
    /// Cohomology representatives per degree: kernel basis vectors that
    /// complete the image to the kernel, chosen by deterministic pivoting.
    reps: Vec<Vec<Vec<Rat>>>,
}

/// An element of `H^n`: coordinates over the representative basis plus the
/// cocycle that was projected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyClass {
    pub degree: i64,
    pub coords: Vec<Rat>,
    pub representative: MultiMap,
}

impl CohomologyClass {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        CohomologyClass {
            degree: self.degree,
            coords: self.coords.iter().map(|x| x * c).collect(),
            representative: self.representative.scale(c),
        }
    }
}

impl CochainComplex {
    /// Assemble coboundary matrices for degrees `0..=max_degree`, verify
    /// exactly that consecutive coboundaries compose to zero, and compute
    /// kernel/image/representative bases per degree.
    pub fn build(ctx: OperadContext, max_degree: usize) -> Result<Self> {
        let d = ctx.dim();
        let mu_sq = ctx.mu_squared();
        if !mu_sq.is_zero() {
            let (flat, value) = mu_sq
                .coeffs()
                .iter()
                .enumerate()
                .find(|(_, v)| !v.is_zero())
                .expect("nonzero map has a nonzero coefficient");
            let (k, inputs) = MultiMap::unflatten(d, 3, flat);
            return Err(Error::NotFormallyAssociative {
                i: inputs[0],
                j: inputs[1],
                l: inputs[2],
                k,
                value: value.to_string(),
            });
        }
        let top_side = d
            .checked_pow(max_degree as u32 + 2)
            .unwrap_or(usize::MAX);
        if top_side > MAX_MATRIX_SIDE {
            return Err(Error::MatrixTooLarge {
                side: top_side,
                cap: MAX_MATRIX_SIDE,
            });
        }

        let mut d_mats = Vec::with_capacity(max_degree + 1);
        for n in 0..=max_degree {
            let cols = MultiMap::table_len(d, n);
            let mut columns = Vec::with_capacity(cols);
            for t in 0..cols {
                let e = MultiMap::basis(n, d, t);
                let de = ctx.delta(&e)?;
                // delta squared must vanish on every basis cochain
                if !ctx.delta(&de)?.is_zero() {
                    return Err(Error::InternalInconsistency(format!(
                        "coboundary fails to square to zero on basis cochain {t} of degree {n}"
                    )));
                }
                columns.push(de.coeffs().to_vec());
            }
            d_mats.push(Matrix::from_columns(
                MultiMap::table_len(d, n + 1),
                &columns,
            ));
        }

        let mut kernels = Vec::with_capacity(max_degree + 1);
        let mut images = Vec::with_capacity(max_degree + 1);
        let mut reps = Vec::with_capacity(max_degree + 1);
        for n in 0..=max_degree {
            let kernel = d_mats[n].kernel_basis();
            let image: Vec<Vec<Rat>> = if n == 0 {
                Vec::new() // nothing maps into degree 0
            } else {
                let prev = &d_mats[n - 1];
                prev.pivot_columns()
                    .into_iter()
                    .map(|c| prev.column(c))
                    .collect()
            };
            let rep = quotient_representatives(&image, &kernel);
            // the image sits inside the kernel, so the completion count is
            // pinned by rank bookkeeping
            if rep.len() + image.len() != kernel.len() {
                return Err(Error::InternalInconsistency(format!(
                    "degree {n}: {} representatives complete an image of dimension {} \
                     inside a kernel of dimension {}",
                    rep.len(),
                    image.len(),
                    kernel.len()
                )));
            }
            kernels.push(kernel);
            images.push(image);
            reps.push(rep);
        }

        Ok(CochainComplex {
            ctx,
            max_degree,
            d_mats,
            kernels,
            images,
            reps,
        })
    }

    pub fn ctx(&self) -> &OperadContext {
        &self.ctx
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn dim(&self) -> usize {
        self.ctx.dim()
    }

    pub fn delta_matrix(&self, n: usize) -> Result<&Matrix> {
        self.d_mats.get(n).ok_or(Error::DegreeOutOfRange {
            degree: n as i64,
            max: self.max_degree,
        })
    }

    fn degree_in_range(&self, n: usize) -> Result<()> {
        if n > self.max_degree {
            return Err(Error::DegreeOutOfRange {
                degree: n as i64,
                max: self.max_degree,
            });
        }
        Ok(())
    }

    /// `dim H^n = dim Ker(d_n) - dim Im(d_(n-1))`.
    pub fn cohomology_dim(&self, n: usize) -> Result<usize> {
        self.degree_in_range(n)?;
        Ok(self.kernels[n].len() - self.images[n].len())
    }

    /// Deterministic basis of `H^n` as classes with unit coordinate vectors.
    pub fn cohomology_basis(&self, n: usize) -> Result<Vec<CohomologyClass>> {
        self.degree_in_range(n)?;
        let dim_h = self.reps[n].len();
        Ok(self.reps[n]
            .iter()
            .enumerate()
            .map(|(idx, vec)| {
                let mut coords = vec![Rat::zero(); dim_h];
                coords[idx] = Rat::one();
                CohomologyClass {
                    degree: n as i64,
                    coords,
                    representative: self.vector_to_cochain(n, vec),
                }
            })
            .collect())
    }

    fn vector_to_cochain(&self, n: usize, v: &[Rat]) -> MultiMap {
        MultiMap::from_coeffs(n, self.dim(), v.to_vec()).expect("basis-sized vector")
    }

    /// The zero class in (possibly negative) degree `n`.
    pub fn zero_class(&self, degree: i64) -> CohomologyClass {
        let coords = if degree >= 0 && degree as usize <= self.max_degree {
            vec![Rat::zero(); self.reps[degree as usize].len()]
        } else {
            Vec::new()
        };
        CohomologyClass {
            degree,
            coords,
            representative: MultiMap::zero(degree, self.dim()),
        }
    }

    /// Express an exact cocycle as coordinates over the representative basis
    /// of its degree, modulo the image.
    pub fn project_to_class(&self, z: &MultiMap) -> Result<CohomologyClass> {
        if z.deg() < 0 {
            return Ok(self.zero_class(z.deg()));
        }
        let n = z.deg() as usize;
        self.degree_in_range(n)?;
        if z.dim() != self.dim() {
            return Err(Error::DimMismatch {
                expected: self.dim(),
                found: z.dim(),
            });
        }
        if !self.d_mats[n].mat_vec(z.coeffs()).iter().all(Rat::is_zero) {
            return Err(Error::NotACocycle);
        }
        let reps = &self.reps[n];
        let image = &self.images[n];
        let mut columns: Vec<Vec<Rat>> = reps.to_vec();
        columns.extend(image.iter().cloned());
        let span = Matrix::from_columns(z.coeffs().len(), &columns);
        let solution = solve_in_span(&span, z.coeffs()).ok_or_else(|| {
            Error::InternalInconsistency(
                "cocycle not expressible over representatives and image".into(),
            )
        })?;
        Ok(CohomologyClass {
            degree: z.deg(),
            coords: solution[..reps.len()].to_vec(),
            representative: z.clone(),
        })
    }

    /// Induced cup product of classes, of degree `deg a + deg b`.
    pub fn induced_cup(
        &self,
        a: &CohomologyClass,
        b: &CohomologyClass,
    ) -> Result<CohomologyClass> {
        let degree = a.degree + b.degree;
        if a.degree < 0 || b.degree < 0 {
            return Ok(self.zero_class(degree));
        }
        self.degree_in_range(degree.max(0) as usize)?;
        let product = self.ctx.cup(&a.representative, &b.representative)?;
        self.project_internal(&product)
    }

    /// Induced bracket of classes, of degree `deg a + deg b - 1`.
    pub fn induced_bracket(
        &self,
        a: &CohomologyClass,
        b: &CohomologyClass,
    ) -> Result<CohomologyClass> {
        let degree = a.degree + b.degree - 1;
        if a.degree < 0 || b.degree < 0 || degree < 0 {
            return Ok(self.zero_class(degree));
        }
        self.degree_in_range(degree as usize)?;
        let product = commutator(&a.representative, &b.representative)?;
        self.project_internal(&product)
    }

    fn project_internal(&self, product: &MultiMap) -> Result<CohomologyClass> {
        self.project_to_class(product).map_err(|e| match e {
            // products of cocycles are cocycles when mu^2 = 0
            Error::NotACocycle => Error::InternalInconsistency(
                "product of cocycles failed the cocycle check".into(),
            ),
            other => other,
        })
    }

    pub fn class_eq(&self, a: &CohomologyClass, b: &CohomologyClass) -> bool {
        a.degree == b.degree && a.coords == b.coords
    }

    /// Sum of two classes of equal degree (coordinatewise).
    pub fn class_add(&self, a: &CohomologyClass, b: &CohomologyClass) -> Result<CohomologyClass> {
        if a.degree != b.degree {
            return Err(Error::ArityMismatch {
                expected: a.degree,
                found: b.degree,
            });
        }
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .map(|(x, y)| x + y)
            .collect();
        let representative = if a.degree < 0 {
            MultiMap::zero(a.degree, self.dim())
        } else {
            a.representative.add(&b.representative)?
        };
        Ok(CohomologyClass {
            degree: a.degree,
            coords,
            representative,
        })
    }
}

/// Kernel-basis vectors that extend the image to a basis of the kernel:
/// run deterministic elimination over `[image | kernel]` and keep the kernel
/// columns that become pivots.
fn quotient_representatives(image: &[Vec<Rat>], kernel: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    if kernel.is_empty() {
        return Vec::new();
    }
    let rows = kernel[0].len();
    let mut columns: Vec<Vec<Rat>> = image.to_vec();
    columns.extend(kernel.iter().cloned());
    let stacked = Matrix::from_columns(rows, &columns);
    stacked
        .pivot_columns()
        .into_iter()
        .filter(|&c| c >= image.len())
        .map(|c| kernel[c - image.len()].clone())
        .collect()
}
