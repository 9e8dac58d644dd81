use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use cyclenum::counting::{alpha_of, QMode};
use cyclenum::error::Error;
use cyclenum::ffpoly::{brute_alpha, field_for_size};
use cyclenum::numtheory::DegreeVec;
use cyclenum::table::{generate, parse_ranges, TableFormat, TableJob};
use cyclenum::verify::{run_suite, Suite};
use cyclenum::weights::WeightFn;

/// Exact counts of monic polynomial tuples over finite fields, weighted by
/// irreducible-factor multiplicities, with every value cross-checked along
/// independent routes.
#[derive(Parser)]
#[command(name = "cyclenum", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one weighted count, with provenance for every route taken.
    Count {
        /// Weight spec: rfree:r=2,d=1 | mod:m=3,r=1,d=2 | monoid:a=2,b=3 |
        /// all-one:d=1 | table:@file.json
        #[arg(long)]
        weights: String,
        /// Degree vector, comma separated: "5" or "3,2".
        #[arg(long)]
        n: String,
        /// Either an integer or "sym" for a polynomial answer.
        #[arg(long)]
        q: String,
        /// Output format: text, json or csv.
        #[arg(long, default_value = "text")]
        format: String,
        /// Enumeration budget override (also: CYCLENUM_BUDGET).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Run an agreement suite and report per-case results.
    Verify {
        /// cyclotomic | rfree | residue | monoid | qt | expected |
        /// roundtrip | all
        suite: String,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Tabulate counts over a degree grid.
    Table {
        #[arg(long)]
        weights: String,
        /// Inclusive per-dimension ranges: "2..12" or "0..4,0..4".
        #[arg(long = "n-range")]
        n_range: String,
        /// Comma-separated list of field sizes for numeric columns.
        #[arg(long, value_delimiter = ',')]
        q: Vec<u64>,
        #[arg(long, default_value = "csv")]
        format: String,
        /// Write the table to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Add exhaustively computed columns (budget applies).
        #[arg(long)]
        brute: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
}

const EXIT_PARSE: u8 = 1;
const EXIT_DISAGREE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Budget { .. } => EXIT_BUDGET,
        Error::Disagreement(_) | Error::Internal(_) => EXIT_DISAGREE,
        _ => EXIT_PARSE,
    }
}

fn effective_budget(flag: Option<u64>) -> Option<u64> {
    flag.or_else(|| {
        std::env::var("CYCLENUM_BUDGET")
            .ok()
            .and_then(|s| s.parse().ok())
    })
}

fn parse_degree_vec(s: &str) -> Result<DegreeVec, Error> {
    let entries = s
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad degree {part:?}")))
        })
        .collect::<Result<Vec<u32>, Error>>()?;
    DegreeVec::new(entries)
}

fn run_count(
    weights: &str,
    n: &str,
    q: &str,
    format: &str,
    budget: Option<u64>,
) -> Result<String, Error> {
    let w = WeightFn::parse(weights)?;
    let nvec = parse_degree_vec(n)?;
    let mode = if q == "sym" {
        QMode::Symbolic
    } else {
        QMode::Numeric(
            q.parse()
                .map_err(|_| Error::Parse(format!("bad field size {q:?}")))?,
        )
    };
    let result = alpha_of(&w, &nvec, mode)?;
    let mut provenance = result.provenance.clone();
    let mut brute_note = None;

    // Exhaustive confirmation for numeric counts, when the field exists and
    // the stream fits the budget.
    if let QMode::Numeric(q) = mode {
        match field_for_size(q) {
            Err(_) => brute_note = Some(format!("brute: skipped ({q} is not a small prime power)")),
            Ok(mut field) => {
                if let Some(b) = effective_budget(budget) {
                    field.set_stream_budget(b);
                }
                match brute_alpha(&field, &nvec, &w) {
                    Ok(value) => {
                        let series = result.numeric.clone().expect("numeric mode");
                        if value != series {
                            return Err(Error::Disagreement(format!(
                                "brute force gives {value} but the engine gives {series} \
                                 at {nvec}, q={q}"
                            )));
                        }
                        provenance.push("brute".to_string());
                    }
                    Err(Error::Budget { needed, budget }) => {
                        brute_note = Some(format!(
                            "brute: skipped (stream {needed} over budget {budget})"
                        ));
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }

    let value = result.value_string();
    let out = match format {
        "text" => {
            let mut s = format!("{value}\nprovenance: {}\n", provenance.join(", "));
            if let Some(note) = brute_note {
                s.push_str(&note);
                s.push('\n');
            }
            s
        }
        "json" => {
            let payload = serde_json::json!({
                "weights": w.canonical_string(),
                "n": nvec.entries(),
                "q": if q == "sym" {
                    serde_json::Value::String("sym".into())
                } else {
                    serde_json::Value::String(q.to_string())
                },
                "value": value,
                "provenance": provenance,
                "note": brute_note,
            });
            serde_json::to_string_pretty(&payload).expect("serializable") + "\n"
        }
        "csv" => {
            let n_cell = if nvec.dim() == 1 {
                nvec.to_string()
            } else {
                format!("\"{nvec}\"")
            };
            format!("n,q,value,provenance\n{n_cell},{q},{value},{}\n", provenance.join(";"))
        }
        other => return Err(Error::Parse(format!("unknown format {other:?}"))),
    };
    Ok(out)
}

fn run() -> Result<(String, u8), (Error, u8)> {
    let cli = Cli::parse();
    match cli.command {
        Command::Count {
            weights,
            n,
            q,
            format,
            budget,
        } => match run_count(&weights, &n, &q, &format, budget) {
            Ok(out) => Ok((out, 0)),
            Err(e) => {
                let code = exit_code_for(&e);
                Err((e, code))
            }
        },
        Command::Verify {
            suite,
            format,
            budget,
        } => {
            let suite = Suite::parse(&suite).map_err(|e| {
                let code = exit_code_for(&e);
                (e, code)
            })?;
            let report = run_suite(suite, effective_budget(budget));
            let out = match format.as_str() {
                "text" => report.render_text(),
                "json" => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
                other => {
                    let e = Error::Parse(format!("unknown format {other:?}"));
                    return Err((e, EXIT_PARSE));
                }
            };
            let code = if report.passed() { 0 } else { EXIT_DISAGREE };
            Ok((out, code))
        }
        Command::Table {
            weights,
            n_range,
            q,
            format,
            out,
            brute,
            budget,
        } => {
            let build = || -> Result<(String, Option<PathBuf>), Error> {
                let w = WeightFn::parse(&weights)?;
                let ranges = parse_ranges(&n_range)?;
                let format = TableFormat::parse(&format)?;
                let job = TableJob {
                    weights: w,
                    ranges,
                    q_values: q.clone(),
                    include_brute: brute,
                    budget: effective_budget(budget),
                };
                let table = generate(&job)?;
                Ok((table.render(format, &q, brute), out.clone()))
            };
            match build() {
                Err(e) => {
                    let code = exit_code_for(&e);
                    Err((e, code))
                }
                Ok((rendered, Some(path))) => {
                    if let Err(e) = std::fs::write(&path, &rendered) {
                        let e = Error::Parse(format!("cannot write {}: {e}", path.display()));
                        return Err((e, EXIT_PARSE));
                    }
                    Ok((format!("wrote {}\n", path.display()), 0))
                }
                Ok((rendered, None)) => Ok((rendered, 0)),
            }
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err((e, code)) => {
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
