//! Expected number of degree-j irreducible factors of a random monic
//! polynomial, under the uniform distribution and under reweighted ones,
//! computed by coefficient extraction and confirmed exhaustively.
//!
//! Run with: cargo run --example expected_factors

use cyclenum::exact::Rat;
use cyclenum::ffpoly::{brute_expected_fj, Field};
use cyclenum::numtheory::DegreeVec;
use cyclenum::stats::{expected_factor_count, expected_factor_count_symbolic};
use cyclenum::weights::WeightFn;

fn main() -> cyclenum::Result<()> {
    let uniform = WeightFn::all_one(1)?;
    let square_free = WeightFn::min_lt_r(1, 2)?;
    let f2 = Field::new(2, 1)?;

    println!("expected linear factors of a uniform monic polynomial over GF(2):");
    for n in 1..=7u32 {
        let nvec = DegreeVec::scalar(n);
        let formula = expected_factor_count(&uniform, &nvec, 1, 2)?;
        let oracle = brute_expected_fj(&f2, &nvec, 1, &uniform)?;
        assert_eq!(formula, oracle);
        println!("  n={n}: {formula}");
    }

    println!("\nthe same conditioned on being square-free:");
    for n in 2..=7u32 {
        let nvec = DegreeVec::scalar(n);
        let formula = expected_factor_count(&square_free, &nvec, 1, 2)?;
        let oracle = brute_expected_fj(&f2, &nvec, 1, &square_free)?;
        assert_eq!(formula, oracle);
        println!("  n={n}: {formula}");
    }

    // Factor degrees must average out to the polynomial degree.
    println!("\nsum over j of j * E[f_j] at n=6, q=2 (uniform):");
    let nvec = DegreeVec::scalar(6);
    let mut total = Rat::zero();
    for j in 1..=6u32 {
        let e = expected_factor_count(&uniform, &nvec, j, 2)?;
        println!("  j={j}: E[f_j] = {e}");
        total += &(e * Rat::from_int(j as i64));
    }
    println!("  weighted sum: {total}");

    // Symbolically the expectation is a ratio of polynomials in q.
    let (numerator, denominator) = expected_factor_count_symbolic(&uniform, &nvec, 1)?;
    println!("\nE[f_1] at n=6 as a ratio of polynomials in q:");
    println!(
        "  ({}) / ({})",
        numerator.render("q"),
        denominator.render("q")
    );
    println!(
        "  at q=3: {}",
        numerator.eval_int(3) / denominator.eval_int(3)
    );
    Ok(())
}
