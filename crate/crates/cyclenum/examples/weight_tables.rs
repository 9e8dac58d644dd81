//! The weight mini-language and bulk tabulation: the same interface the
//! command-line `table` subcommand uses, driven as a library.
//!
//! Run with: cargo run --example weight_tables

use cyclenum::table::{generate, parse_ranges, TableFormat, TableJob};
use cyclenum::weights::WeightFn;

fn main() -> cyclenum::Result<()> {
    // Specs round-trip through their canonical strings.
    for spec in [
        "rfree:r=2,d=1",
        "mod:m=3,r=1,d=2",
        "monoid:a=2,b=3",
        "all-one:d=1",
    ] {
        let w = WeightFn::parse(spec)?;
        println!(
            "{spec:<16} -> dimension {}, canonical {}",
            w.dim(),
            w.canonical_string()
        );
    }

    // Square-free counts in one variable, CSV.
    let job = TableJob {
        weights: WeightFn::parse("rfree:r=2,d=1")?,
        ranges: parse_ranges("0..8")?,
        q_values: vec![2, 3],
        include_brute: true,
        budget: None,
    };
    let table = generate(&job)?;
    println!("\nsquare-free counts, CSV with exhaustive confirmation columns:");
    print!("{}", table.render(TableFormat::Csv, &[2, 3], true));

    // A two-dimensional grid of coprimality counts, text format.
    let job = TableJob {
        weights: WeightFn::parse("rfree:r=1,d=2")?,
        ranges: parse_ranges("0..3,0..3")?,
        q_values: vec![3],
        include_brute: false,
        budget: None,
    };
    let table = generate(&job)?;
    println!("\ncoprime pairs over GF(3):");
    print!("{}", table.render(TableFormat::Text, &[3], false));

    // Arbitrary rational weights through the JSON table format.
    let json = r#"{"d":1,"entries":[{"n":[1],"w":"1/2"},{"n":[2],"w":"1/4"}]}"#;
    let w = WeightFn::from_table_json(json)?;
    let job = TableJob {
        weights: w,
        ranges: parse_ranges("0..5")?,
        q_values: vec![2],
        include_brute: true,
        budget: None,
    };
    let table = generate(&job)?;
    println!("\ngeometrically damped multiplicity weights (rational values):");
    print!("{}", table.render(TableFormat::Text, &[2], true));
    Ok(())
}
