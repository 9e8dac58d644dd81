//! Exhaustive irreducible polynomials versus the divisor-sum formula
//! `M(q,n) = (1/n) Σ_{k|n} μ(n/k) q^k`, numerically and with `q` symbolic.
//!
//! Run with: cargo run --example irreducible_census

use cyclenum::ffpoly::{Factorizer, Field};
use cyclenum::numtheory::{count_irreducibles, count_irreducibles_symbolic};

fn main() -> cyclenum::Result<()> {
    // The formula as polynomials in q.
    println!("symbolic counts:");
    for n in 1..=6u32 {
        println!(
            "  M(q,{n}) = {}",
            count_irreducibles_symbolic(n)?.render("q")
        );
    }
    println!();

    // Every monic irreducible over GF(2) up to degree 5, listed.
    let f2 = Field::new(2, 1)?;
    let mut factorizer = Factorizer::new(&f2);
    println!("monic irreducibles over GF(2):");
    for n in 1..=5u32 {
        let list = factorizer.irreducibles(n)?;
        let rendered: Vec<String> = list.iter().map(|p| p.to_string()).collect();
        println!(
            "  degree {n} ({} of them): {}",
            list.len(),
            rendered.join(", ")
        );
    }
    println!();

    // List length against the formula for larger fields, including the
    // extension fields GF(4), GF(8) and GF(9).
    println!("census vs formula:");
    for (p, k) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
        let field = Field::new(p, k)?;
        let mut factorizer = Factorizer::new(&field);
        print!("  GF({}):", field.designator());
        for n in 1..=4u32 {
            let listed = factorizer.irreducibles(n)?.len();
            let formula = count_irreducibles(field.q(), n)?;
            assert_eq!(num_bigint::BigInt::from(listed), formula);
            print!(" {listed}");
        }
        println!("   (degrees 1..4, all matching the formula)");
    }
    Ok(())
}
