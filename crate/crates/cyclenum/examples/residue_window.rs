//! Counts of tuples whose gcd multiplicities fall in a residue window
//! modulo m. The window (m=2, r=1) for one polynomial means every
//! multiplicity is even: the polynomial is a perfect square.
//!
//! Run with: cargo run --example residue_window

use cyclenum::counting::{alpha_of, closed_residue, QMode};
use cyclenum::ffpoly::{brute_alpha, Field};
use cyclenum::numtheory::DegreeVec;
use cyclenum::weights::WeightFn;

fn main() -> cyclenum::Result<()> {
    // Perfect squares: q^(n/2) of them in even degrees, none in odd ones.
    println!("perfect squares among monic polynomials (window m=2, r=1):");
    let w = WeightFn::residue_window(1, 2, 1)?;
    for n in 0..=8u32 {
        let nvec = DegreeVec::scalar(n);
        let count = alpha_of(&w, &nvec, QMode::Symbolic)?;
        println!("  n={n}: {count}");
    }

    // A window leaving multiplicities 0 or 1 modulo 3.
    println!("\nmultiplicities = 0,1 mod 3 (window m=3, r=2), symbolic:");
    let w = WeightFn::residue_window(1, 3, 2)?;
    for n in 0..=8u32 {
        let nvec = DegreeVec::scalar(n);
        let count = alpha_of(&w, &nvec, QMode::Symbolic)?;
        println!("  n={n}: {count}");
    }

    // Pairs: the window applies to the gcd, and the formula, series and
    // oracle agree.
    println!("\npairs with gcd multiplicities even (m=2, r=1), q=2:");
    let w = WeightFn::residue_window(2, 2, 1)?;
    let f2 = Field::new(2, 1)?;
    for (n1, n2) in [(2u32, 2u32), (3, 2), (4, 4)] {
        let nvec = DegreeVec::new(vec![n1, n2])?;
        let formula = closed_residue(&nvec, 1, 2)?.eval_int(2);
        let oracle = brute_alpha(&f2, &nvec, &w)?;
        assert_eq!(formula, oracle);
        println!("  ({n1},{n2}): {formula} (formula = oracle)");
    }
    Ok(())
}
