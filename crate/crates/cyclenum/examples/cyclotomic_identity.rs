//! The cyclotomic identity, checked on the box:
//! `1/(1-qz) = Π_k (1/(1-z^k))^{M(q,k)}` as formal power series, where
//! `M(q,k)` counts the monic irreducibles of degree `k` over a field with
//! `q` elements.
//!
//! Run with: cargo run --example cyclotomic_identity

use cyclenum::exact::Rat;
use cyclenum::numtheory::{count_irreducibles, DegreeVec};
use cyclenum::series::cyclotomic_product;
use num_bigint::BigInt;

fn main() -> cyclenum::Result<()> {
    let cap = 12u32;
    for q in [2u64, 3, 5] {
        println!("q = {q}: exponents M(q,k) for k = 1..{cap}:");
        let exponents: Vec<String> = (1..=cap)
            .map(|k| count_irreducibles(q, k).map(|m| m.to_string()))
            .collect::<cyclenum::Result<_>>()?;
        println!("  [{}]", exponents.join(", "));

        let product = cyclotomic_product(q, cap)?;
        print!("  coefficients of the truncated product:");
        let mut all_match = true;
        for n in 0..=cap {
            let got = product.coeff(&DegreeVec::scalar(n))?;
            print!(" {got}");
            all_match &= got == Rat::from_int(BigInt::from(q).pow(n));
        }
        println!();
        println!(
            "  geometric series of 1/(1-{q}z)?  {}",
            if all_match {
                "yes, coefficient q^n exactly"
            } else {
                "NO"
            }
        );
        println!();
    }
    Ok(())
}
