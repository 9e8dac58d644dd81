//! Every power series with constant term 1 factors uniquely as
//! `Π_{i>0} (1/(1-z^i))^{a_i}`; the exponents come out of a truncated
//! logarithm followed by Möbius inversion, and the factorization is checked
//! by reconstructing the series.
//!
//! Run with: cargo run --example series_factorization

use cyclenum::exact::Rat;
use cyclenum::numtheory::DegreeVec;
use cyclenum::series::{extract_exponents, reconstruct_from_exponents, ExponentMap, MultiSeries};
use cyclenum::weights::WeightFn;

fn main() -> cyclenum::Result<()> {
    // 1 + z = (1 - z^2)/(1 - z): exponents a_1 = 1, a_2 = -1.
    let caps = DegreeVec::scalar(8);
    let mut g = MultiSeries::<Rat>::one(&caps);
    g.set_coeff(DegreeVec::scalar(1), Rat::one())?;
    let exponents = extract_exponents(&g)?;
    println!("series 1 + z factors with exponents:");
    for (i, a) in exponents.iter() {
        println!("  a_{i} = {a}");
    }
    assert_eq!(reconstruct_from_exponents(&exponents, &caps)?, g);
    println!("  reconstruction reproduces the series exactly");

    // The generating function of the monoid <2,3> factors as advertised:
    // (1 - z^6)/((1 - z^2)(1 - z^3)).
    let g = WeightFn::monoid_ab(2, 3)?.weight_series(&caps)?;
    let exponents = extract_exponents(&g)?;
    println!("\nmonoid <2,3> indicator series factors with exponents:");
    for (i, a) in exponents.iter() {
        println!("  a_{i} = {a}");
    }

    // Two variables: the coprimality indicator (min = 0).
    let caps2 = DegreeVec::new(vec![3, 3])?;
    let g2 = WeightFn::min_lt_r(2, 1)?.weight_series(&caps2)?;
    let exponents2 = extract_exponents(&g2)?;
    println!("\ncoprimality indicator in two variables factors with exponents:");
    for (i, a) in exponents2.iter() {
        println!("  a_{i} = {a}");
    }
    assert_eq!(reconstruct_from_exponents(&exponents2, &caps2)?, g2);

    // Rational exponents are fine too: a_1 = 1/2 is a square root of the
    // geometric series.
    let mut half = ExponentMap::new();
    half.insert(DegreeVec::scalar(1), Rat::ratio(1, 2))?;
    let root = reconstruct_from_exponents(&half, &caps)?;
    let squared = root.mul(&root)?;
    println!("\nsquare root of 1/(1-z) via a_1 = 1/2, first coefficients:");
    let rendered: Vec<String> = (0..=4)
        .map(|n| root.coeff(&DegreeVec::scalar(n)).map(|c| c.to_string()))
        .collect::<cyclenum::Result<_>>()?;
    println!("  [{}]", rendered.join(", "));
    for n in 0..=8u32 {
        assert_eq!(squared.coeff(&DegreeVec::scalar(n))?, Rat::one());
    }
    println!("  its square is the geometric series on the whole box");
    Ok(())
}
