//! Monic polynomials whose irreducible multiplicities lie in a numerical
//! monoid `<a,b>`: the representation-sum formula, its cancellation-free
//! form, and the special case of "no factor with multiplicity 1".
//!
//! Run with: cargo run --example monoid_multiplicities

use cyclenum::counting::{
    closed_monoid, closed_monoid_improved, closed_no_mult_one, residue_chain_check,
};
use cyclenum::ffpoly::{brute_alpha, Field};
use cyclenum::numtheory::DegreeVec;
use cyclenum::weights::{monoid_member, WeightFn};

fn main() -> cyclenum::Result<()> {
    // Membership in <2,3>: everything except 1.
    let members: Vec<u32> = (0..=8)
        .filter(|&n| monoid_member(2, 3, n).unwrap())
        .collect();
    println!("members of <2,3> up to 8: {members:?}");
    let members: Vec<u32> = (0..=16)
        .filter(|&n| monoid_member(3, 5, n).unwrap())
        .collect();
    println!("members of <3,5> up to 16: {members:?} (7 = Frobenius number is last gap)");

    // No irreducible factor of multiplicity exactly 1.
    println!("\nmonic polynomials of degree n with no simple irreducible factor:");
    let w = WeightFn::monoid_ab(2, 3)?;
    let f2 = Field::new(2, 1)?;
    for n in 2..=10u32 {
        let symbolic = closed_no_mult_one(n)?;
        let at2 = symbolic.eval_int(2);
        let oracle = brute_alpha(&f2, &DegreeVec::scalar(n), &w)?;
        assert_eq!(at2, oracle);
        println!(
            "  n={n:>2}: {} = {at2} at q=2 (oracle agrees)",
            symbolic.render("q")
        );
    }

    // The ladder the counts climb in steps of 6.
    for k in 0..=3u32 {
        assert!(residue_chain_check(k)?);
    }
    println!(
        "\nladder α(6k+2)=α(6k+3), qα(6k+3)=α(6k+4)=α(6k+5), qα(6k+5)=α(6k+7): holds for k <= 3"
    );

    // Two evaluation routes for a larger monoid.
    println!("\nmonoid <3,5>, two closed routes:");
    for n in 8..=20u32 {
        let sums = closed_monoid(n, 3, 5)?;
        let progressions = closed_monoid_improved(n, 3, 5)?;
        assert_eq!(sums, progressions);
        println!("  n={n:>2}: {}", sums.render("q"));
    }
    Ok(())
}
