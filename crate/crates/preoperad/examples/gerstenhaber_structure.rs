//! The induced graded structure on the cohomology of the dual numbers:
//! basis classes per degree, their cup products and brackets, and the
//! graded-algebra laws verified exhaustively on all class tuples within
//! range (cup associativity and graded commutativity, bracket antisymmetry
//! and Jacobi, the Leibniz rule).
//!
//! Run with: `cargo run --example gerstenhaber_structure`

use preoperad::cohomology::CochainComplex;
use preoperad::fixtures;
use preoperad::harness::run_gerstenhaber;
use preoperad::ops::OperadContext;

fn main() -> preoperad::Result<()> {
    let alg = fixtures::dual_numbers();

    let complex = CochainComplex::build(OperadContext::new(alg.clone()), 4)?;
    println!("cohomology of the dual numbers:");
    for n in 0..=4usize {
        println!("  dim H^{n} = {}", complex.cohomology_dim(n)?);
    }

    // a taste of the products on explicit classes
    let h0 = complex.cohomology_basis(0)?;
    let h1 = complex.cohomology_basis(1)?;
    let cup = complex.induced_cup(&h1[0], &h1[0])?;
    println!(
        "\nH^1[0] u H^1[0] lands in degree {} with coordinates ({})",
        cup.degree,
        cup.coords
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );
    let bracket = complex.induced_bracket(&h1[0], &h0[1])?;
    println!(
        "[H^1[0], H^0[1]] lands in degree {} with coordinates ({})",
        bracket.degree,
        bracket
            .coords
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    );

    // the full tabulation plus the law checks
    let report = run_gerstenhaber(&alg, "built-in dual numbers", 4)?;
    print!("\n{}", report.render_text());
    Ok(())
}
