//! The brute-force side of the crate: deterministic enumeration of monic
//! polynomials, trial-division factorization, and the factor tables behind
//! the exhaustive counts.
//!
//! Run with: cargo run --example factorization_oracle

use cyclenum::ffpoly::{FactorTable, Factorizer, Field, GFPoly};

fn main() -> cyclenum::Result<()> {
    let f2 = Field::new(2, 1)?;

    // Enumeration order is the counter order on non-leading coefficients.
    let quadratics: Vec<String> = f2.enumerate_monic(2)?.map(|p| p.to_string()).collect();
    println!(
        "monic quadratics over GF(2), in order: {}",
        quadratics.join(", ")
    );

    // A factorization with multiplicities.
    let p = GFPoly::parse(&f2, "x^6+x^4+x^3+x")?;
    let mut factorizer = Factorizer::new(&f2);
    let factorization = factorizer.factorize(&p)?;
    println!("\n{p} = {factorization}");
    println!(
        "  degree-1 factors with multiplicity: {}",
        factorization.count_of_degree(1)
    );
    println!(
        "  degree-2 factors with multiplicity: {}",
        factorization.count_of_degree(2)
    );
    println!("  product of the factors: {}", factorization.product(&f2));

    // The factor table addresses every monic polynomial by (degree, index).
    let table = FactorTable::build(&f2, 4)?;
    println!("\nall monic quartics over GF(2) and their factorizations:");
    for index in 0..f2.monic_count(4) as u64 {
        let poly = f2.monic_from_index(4, index);
        let rendered: Vec<String> = table
            .factors(4, index)
            .iter()
            .map(|&(id, m)| {
                let s = table.irreducible(id);
                if m > 1 {
                    format!("({s})^{m}")
                } else {
                    format!("({s})")
                }
            })
            .collect();
        println!("  {poly} = {}", rendered.join(" * "));
    }

    // Extension fields work the same way.
    let f9 = Field::new(3, 2)?;
    println!("\nGF(9) built as GF(3)[x]/({})", f9.modulus_poly());
    let mut factorizer9 = Factorizer::new(&f9);
    println!(
        "  {} monic irreducible quadratics over GF(9)",
        factorizer9.irreducibles(2)?.len()
    );
    Ok(())
}
