//! Cohomology dimension table for the associative fixtures, computed from
//! the coboundary operator over exact rationals, plus a look at the
//! degree-0 classes (the center of the algebra).
//!
//! Run with: `cargo run --example cohomology_table`

use preoperad::cohomology::CochainComplex;
use preoperad::fixtures;
use preoperad::ops::OperadContext;

fn main() -> preoperad::Result<()> {
    println!("dim H^n per degree (exact, Ker/Im over the rationals)\n");
    for alg in fixtures::associative() {
        // keep the top degree modest for the 4-dimensional fixture
        let top = if alg.dim() >= 4 { 2 } else { 3 };
        let name = alg.name().to_string();
        let complex = CochainComplex::build(OperadContext::new(alg), top)?;
        let dims: Vec<String> = (0..=top)
            .map(|n| complex.cohomology_dim(n).map(|d| d.to_string()))
            .collect::<preoperad::Result<_>>()?;
        println!("{name:<22} ({})", dims.join(", "));
    }

    println!("\ndegree-0 classes of the 2x2 matrix algebra (its center):");
    let complex = CochainComplex::build(OperadContext::new(fixtures::m2_rational()), 1)?;
    for class in complex.cohomology_basis(0)? {
        let coeffs = class.representative.dump_coeffs();
        println!("  representative coordinates over (e11, e12, e21, e22): [{}]", coeffs.join(", "));
    }

    println!("\na non-associative table is refused:");
    match CochainComplex::build(OperadContext::new(fixtures::nonassociative()), 2) {
        Err(e) => println!("  {e}"),
        Ok(_) => unreachable!("the fixture is not associative"),
    }
    Ok(())
}
