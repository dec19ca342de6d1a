//! File ingestion, the seeded check suites, and report assembly — the layer
//! the CLI and the runnable examples sit on.

pub mod checks;
pub mod commands;
pub mod file;
pub mod report;

pub use checks::{comp_case, run_axiom_suite, run_identity_suite, RelationCase, RunConfig};
pub use commands::{run_axioms, run_cohomology, run_gerstenhaber, run_identities, MuMode};
pub use file::{parse_algebra, parse_algebra_str, parse_rational_literal};
pub use report::{Report, Verdict};
