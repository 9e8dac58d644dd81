//! The factor-count polynomial `Σ_p t^{f(p)}` over monic polynomials of
//! degree n, with the field size kept symbolic: a polynomial in q and t that
//! turns out to be symmetric under exchanging the two variables.
//!
//! Run with: cargo run --example qt_symmetry

use cyclenum::ffpoly::{brute_qt_polynomial, Field};
use cyclenum::stats::{qt_polynomial, qt_symmetry_check};

fn main() -> cyclenum::Result<()> {
    for n in 2..=4u32 {
        let p = qt_polynomial(n)?;
        println!("degree {n}: {}", p.render());
        println!("  grouped by powers of t:");
        for (te, row) in p.by_t_power() {
            println!("    t^{te}: {}", row.render("q"));
        }
        println!("  symmetric in q and t: {}", qt_symmetry_check(n)?);
        println!();
    }

    // Specializing q to an actual field size recovers the exhaustive count.
    let f2 = Field::new(2, 1)?;
    println!("specialized at q=2 vs exhaustive factor counting:");
    for n in 1..=6u32 {
        let specialized = qt_polynomial(n)?.eval_q(2);
        let brute = brute_qt_polynomial(&f2, n)?;
        assert_eq!(specialized, brute);
        println!("  n={n}: {}", specialized.render("t"));
    }

    // Setting t = 1 counts everything: q^n.
    println!("\nt = 1 collapses each polynomial to q^n:");
    for n in 0..=6u32 {
        println!("  n={n}: {}", qt_polynomial(n)?.eval_t_one().render("q"));
    }
    Ok(())
}
