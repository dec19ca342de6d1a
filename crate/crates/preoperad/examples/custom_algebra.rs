//! Define an algebra by structure constants in the JSON input format,
//! then put it through the whole pipeline: associativity, identity checks,
//! and cohomology.
//!
//! Run with: `cargo run --example custom_algebra`

use preoperad::cohomology::CochainComplex;
use preoperad::harness::{parse_algebra_str, run_identity_suite, RunConfig};
use preoperad::ops::OperadContext;

// the truncated polynomial algebra on x with x^3 = 0, in the basis 1, x, x^2
const TRUNCATED: &str = r#"{
    "name": "truncated-cubic",
    "dim": 3,
    "basis": ["1", "x", "x2"],
    "mul": [
        { "i": 0, "j": 0, "k": 0, "c": "1" },
        { "i": 0, "j": 1, "k": 1, "c": "1" },
        { "i": 0, "j": 2, "k": 2, "c": "1" },
        { "i": 1, "j": 0, "k": 1, "c": "1" },
        { "i": 1, "j": 1, "k": 2, "c": "1" },
        { "i": 2, "j": 0, "k": 2, "c": "1" }
    ]
}"#;

fn main() -> preoperad::Result<()> {
    let alg = parse_algebra_str(TRUNCATED)?;
    println!("parsed \"{}\" with dimension {}", alg.name(), alg.dim());

    let ctx = OperadContext::new(alg.clone());
    println!(
        "formal associator is {}",
        if ctx.mu_squared().is_zero() {
            "zero (associative)"
        } else {
            "nonzero"
        }
    );

    let cfg = RunConfig {
        samples: 50,
        ..RunConfig::default()
    };
    let failed = run_identity_suite(&ctx, &cfg)?
        .into_iter()
        .filter(|v| !v.pass)
        .count();
    println!("identity catalog: {failed} failures across the catalog");

    let complex = CochainComplex::build(ctx, 3)?;
    let dims: Vec<String> = (0..=3)
        .map(|n| complex.cohomology_dim(n).map(|d| d.to_string()))
        .collect::<preoperad::Result<_>>()?;
    println!("cohomology dimensions: ({})", dims.join(", "));

    Ok(())
}
