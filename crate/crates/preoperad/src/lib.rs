//! An exact-arithmetic workbench for linear pre-operads over
//! finite-dimensional algebras.
//!
//! The graded components are the multilinear maps `C^n = Hom(A^(x)n, A)` of a
//! based module `A`, with 0-based partial compositions carrying the graded
//! sign `(-1)^(i |g|)`. On top of those the crate builds the derived
//! operations — cup multiplication, total composition, tri- and tetrabraces,
//! the graded commutator and the pre-coboundary operator — and verifies the
//! identities relating them by exact seeded randomized checks. When the
//! multiplication is associative the coboundary squares to zero and the
//! crate computes the cohomology of the resulting complex together with its
//! induced graded-commutative cup product and graded Lie bracket.
//!
//! Everything runs over arbitrary-precision rationals: every reported
//! equality is exact and every dimension is unconditional.
//!
//! The `examples/` directory contains one runnable program per capability;
//! the `preoperad` binary exposes the same functionality as `axioms`,
//! `identities`, `cohomology` and `gerstenhaber` subcommands over JSON
//! algebra files.

pub mod algebra;
pub mod cohomology;
pub mod error;
pub mod fixtures;
pub mod harness;
pub mod linalg;
pub mod multimap;
pub mod ops;
pub mod rng;
pub mod scalar;

pub use algebra::AlgebraDef;
pub use cohomology::{CochainComplex, CohomologyClass};
pub use error::{Error, Result};
pub use linalg::{Matrix, Rat};
pub use multimap::MultiMap;
pub use ops::OperadContext;
pub use rng::SplitMix64;
