//! Verify the pre-operad axioms on every shipped fixture algebra.
//!
//! For each algebra this checks, on seeded random cochains of arity 0..=3:
//! all three composition-relation cases of the graded partial compositions,
//! agreement of the two outer cases on identical sample streams, and both
//! unit axioms. Every comparison is an exact equality of full coefficient
//! tables.
//!
//! Run with: `cargo run --example axioms`

use preoperad::fixtures;
use preoperad::harness::{run_axiom_suite, RunConfig};
use preoperad::ops::OperadContext;

fn main() -> preoperad::Result<()> {
    let cfg = RunConfig {
        samples: 100,
        seed: 0,
        max_arity: 3,
        bound: 3,
    };
    println!(
        "axiom checks: {} samples per case, arities 0..={}, coefficients in [-{}, {}]\n",
        cfg.samples, cfg.max_arity, cfg.bound, cfg.bound
    );
    for alg in fixtures::all() {
        println!("{} (dim {})", alg.name(), alg.dim());
        let ctx = OperadContext::new(alg);
        for v in run_axiom_suite(&ctx, &cfg)? {
            println!(
                "  {:<34} {}   ({} exact checks)",
                v.name,
                if v.pass { "pass" } else { "FAIL" },
                v.checks
            );
        }
        println!();
    }
    Ok(())
}
