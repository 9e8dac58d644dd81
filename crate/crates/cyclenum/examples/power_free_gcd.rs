//! Tuples of monic polynomials whose gcd is free of r-th powers, counted
//! four independent ways: the closed form `q^N - q^{N+1-rd}`, the weighted
//! series engine, the multiplicity-profile oracle, and a Euclidean-gcd
//! oracle that never looks at multiplicity vectors.
//!
//! Run with: cargo run --example power_free_gcd

use cyclenum::counting::{alpha_of, closed_rfree_gcd, QMode};
use cyclenum::exact::Rat;
use cyclenum::ffpoly::{brute_alpha, brute_rfree_gcd_count, Field};
use cyclenum::numtheory::DegreeVec;
use cyclenum::weights::WeightFn;

fn main() -> cyclenum::Result<()> {
    // Single polynomials (d = 1): square-free and cube-free counts.
    println!("single polynomials of degree n, no r-th power factors:");
    for r in [2u32, 3] {
        for n in [3u32, 5] {
            let nvec = DegreeVec::scalar(n);
            let symbolic = closed_rfree_gcd(&nvec, r)?;
            println!("  r={r}, n={n}: {}", symbolic.render("q"));
        }
    }

    // Pairs (d = 2): coprime pairs are the r = 1 case.
    println!("\ncoprime pairs of degrees (n1,n2): q^N - q^(N-1)");
    let w = WeightFn::min_lt_r(2, 1)?;
    let f2 = Field::new(2, 1)?;
    for (n1, n2) in [(1u32, 1u32), (2, 3), (4, 2)] {
        let nvec = DegreeVec::new(vec![n1, n2])?;
        let engine = alpha_of(&w, &nvec, QMode::Numeric(2))?;
        let profile_oracle = brute_alpha(&f2, &nvec, &w)?;
        let gcd_oracle = brute_rfree_gcd_count(&f2, &nvec, 1)?;
        println!(
            "  ({n1},{n2}) over GF(2): engine {} [{}], oracle {}, gcd oracle {}",
            engine,
            engine.provenance.join("+"),
            profile_oracle,
            gcd_oracle
        );
        assert_eq!(engine.numeric.clone().unwrap(), profile_oracle);
        assert_eq!(profile_oracle, Rat::from_int(gcd_oracle));
    }

    // The same, symbolically: pairs with square-free gcd.
    println!("\npairs with square-free gcd (r=2), symbolic:");
    let w = WeightFn::min_lt_r(2, 2)?;
    for (n1, n2) in [(2u32, 2u32), (3, 2)] {
        let nvec = DegreeVec::new(vec![n1, n2])?;
        let count = alpha_of(&w, &nvec, QMode::Symbolic)?;
        println!("  ({n1},{n2}): {count}");
    }
    Ok(())
}
