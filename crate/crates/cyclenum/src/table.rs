//! Tabulation of weighted counts over degree ranges: one row per degree
//! vector, symbolic and numeric columns, rendered as text, CSV or JSON with
//! exact rationals serialized as strings.

use serde::Serialize;

use crate::counting::{alpha_of, QMode};
use crate::error::{Error, Result};
use crate::ffpoly::{brute_alpha, field_for_size};
use crate::numtheory::DegreeVec;
use crate::weights::WeightFn;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Csv,
    Json,
}

impl TableFormat {
    pub fn parse(s: &str) -> Result<TableFormat> {
        match s {
            "text" => Ok(TableFormat::Text),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(Error::Parse(format!(
                "unknown format {other:?}; expected text, csv or json"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TableJob {
    pub weights: WeightFn,
    /// Inclusive per-dimension degree ranges; the grid is their product.
    pub ranges: Vec<(u32, u32)>,
    pub q_values: Vec<u64>,
    /// Adds a brute-force column per `q`; within budget or the job fails.
    pub include_brute: bool,
    pub budget: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NumericCell {
    pub q: u64,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brute: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub n: Vec<u32>,
    pub symbolic: String,
    pub numeric: Vec<NumericCell>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub weights: String,
    pub rows: Vec<TableRow>,
}

/// Parses per-dimension inclusive ranges: `"2..12"` or `"0..4,0..4"`.
/// A single number is a one-point range.
pub fn parse_ranges(s: &str) -> Result<Vec<(u32, u32)>> {
    s.split(',')
        .map(|part| {
            let part = part.trim();
            match part.split_once("..") {
                None => {
                    let n: u32 = part
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad degree {part:?}")))?;
                    Ok((n, n))
                }
                Some((lo, hi)) => {
                    let lo: u32 = lo
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad range start in {part:?}")))?;
                    let hi: u32 = hi
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad range end in {part:?}")))?;
                    Ok((lo, hi))
                }
            }
        })
        .collect()
}

fn grid(ranges: &[(u32, u32)]) -> Vec<DegreeVec> {
    let mut out = Vec::new();
    if ranges.iter().any(|&(lo, hi)| lo > hi) {
        return out; // empty range: header-only table
    }
    let mut cur: Vec<u32> = ranges.iter().map(|&(lo, _)| lo).collect();
    loop {
        out.push(DegreeVec::new(cur.clone()).expect("d >= 1"));
        let mut i = ranges.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < ranges[i].1 {
                cur[i] += 1;
                for (j, slot) in cur.iter_mut().enumerate().skip(i + 1) {
                    *slot = ranges[j].0;
                }
                break;
            }
        }
    }
}

/// Computes the table. Every numeric cell goes through the agreeing
/// closed-form/series evaluation; brute columns re-enumerate exhaustively.
pub fn generate(job: &TableJob) -> Result<Table> {
    if job.ranges.len() != job.weights.dim() {
        return Err(Error::Shape(format!(
            "{} degree ranges given but the weights expect dimension {}",
            job.ranges.len(),
            job.weights.dim()
        )));
    }
    let mut rows = Vec::new();
    for nvec in grid(&job.ranges) {
        let symbolic = alpha_of(&job.weights, &nvec, QMode::Symbolic)?
            .symbolic
            .expect("symbolic mode")
            .render("q");
        let mut numeric = Vec::new();
        for &q in &job.q_values {
            let value = alpha_of(&job.weights, &nvec, QMode::Numeric(q))?
                .numeric
                .expect("numeric mode")
                .to_string();
            let brute = if job.include_brute {
                let mut field = field_for_size(q)?;
                if let Some(b) = job.budget {
                    field.set_stream_budget(b);
                }
                Some(brute_alpha(&field, &nvec, &job.weights)?.to_string())
            } else {
                None
            };
            numeric.push(NumericCell { q, value, brute });
        }
        rows.push(TableRow {
            n: nvec.entries().to_vec(),
            symbolic,
            numeric,
        });
    }
    Ok(Table {
        weights: job.weights.canonical_string(),
        rows,
    })
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Table {
    pub fn render(&self, format: TableFormat, q_values: &[u64], include_brute: bool) -> String {
        match format {
            TableFormat::Json => serde_json::to_string_pretty(self).expect("serializable") + "\n",
            TableFormat::Csv => {
                let mut header = vec!["n".to_string(), "symbolic".to_string()];
                for &q in q_values {
                    header.push(format!("q={q}"));
                    if include_brute {
                        header.push(format!("brute@q={q}"));
                    }
                }
                let mut out = header.join(",") + "\n";
                for row in &self.rows {
                    let mut cells = vec![
                        csv_escape(&render_degrees(&row.n)),
                        csv_escape(&row.symbolic),
                    ];
                    for cell in &row.numeric {
                        cells.push(csv_escape(&cell.value));
                        if include_brute {
                            cells.push(csv_escape(cell.brute.as_deref().unwrap_or("")));
                        }
                    }
                    out.push_str(&cells.join(","));
                    out.push('\n');
                }
                out
            }
            TableFormat::Text => {
                let mut out = format!("weights: {}\n", self.weights);
                for row in &self.rows {
                    out.push_str(&format!(
                        "n={} symbolic: {}",
                        render_degrees(&row.n),
                        row.symbolic
                    ));
                    for cell in &row.numeric {
                        out.push_str(&format!("  q={}: {}", cell.q, cell.value));
                        if let Some(brute) = &cell.brute {
                            out.push_str(&format!(" (brute {brute})"));
                        }
                    }
                    out.push('\n');
                }
                out
            }
        }
    }
}

fn render_degrees(n: &[u32]) -> String {
    if n.len() == 1 {
        n[0].to_string()
    } else {
        format!(
            "({})",
            n.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_parsing() {
        assert_eq!(parse_ranges("2..12").unwrap(), vec![(2, 12)]);
        assert_eq!(parse_ranges("0..4,0..4").unwrap(), vec![(0, 4), (0, 4)]);
        assert_eq!(parse_ranges("7").unwrap(), vec![(7, 7)]);
        assert!(parse_ranges("x..2").is_err());
    }

    #[test]
    fn empty_range_gives_header_only() {
        let job = TableJob {
            weights: WeightFn::all_one(1).unwrap(),
            ranges: vec![(3, 2)],
            q_values: vec![2],
            include_brute: false,
            budget: None,
        };
        let table = generate(&job).unwrap();
        assert!(table.rows.is_empty());
        let csv = table.render(TableFormat::Csv, &[2], false);
        assert_eq!(csv, "n,symbolic,q=2\n");
    }

    #[test]
    fn monoid_table_matches_closed_form() {
        let job = TableJob {
            weights: WeightFn::monoid_ab(2, 3).unwrap(),
            ranges: vec![(2, 12)],
            q_values: vec![2],
            include_brute: false,
            budget: None,
        };
        let table = generate(&job).unwrap();
        assert_eq!(table.rows.len(), 11);
        for row in &table.rows {
            let n = row.n[0];
            let expect = crate::counting::closed_no_mult_one(n)
                .unwrap()
                .eval_int(2)
                .to_string();
            assert_eq!(row.numeric[0].value, expect, "n={n}");
        }
    }

    #[test]
    fn grid_table_over_two_dimensions() {
        let job = TableJob {
            weights: WeightFn::min_lt_r(2, 1).unwrap(),
            ranges: vec![(0, 4), (0, 4)],
            q_values: vec![3],
            include_brute: false,
            budget: None,
        };
        let table = generate(&job).unwrap();
        assert_eq!(table.rows.len(), 25);
        for row in &table.rows {
            let (n1, n2) = (row.n[0] as i64, row.n[1] as i64);
            let total = n1 + n2;
            // Off the axes the count is q^N - q^{N-1}; on them it is q^N.
            let expect = if n1.min(n2) >= 1 {
                3i64.pow(total as u32) - 3i64.pow(total as u32 - 1)
            } else {
                3i64.pow(total as u32)
            };
            assert_eq!(row.numeric[0].value, expect.to_string(), "n=({n1},{n2})");
        }
    }

    #[test]
    fn csv_is_deterministic_and_quoted() {
        let job = TableJob {
            weights: WeightFn::min_lt_r(2, 1).unwrap(),
            ranges: vec![(1, 2), (1, 1)],
            q_values: vec![2],
            include_brute: true,
            budget: None,
        };
        let table = generate(&job).unwrap();
        let csv = table.render(TableFormat::Csv, &[2], true);
        let again = generate(&job).unwrap().render(TableFormat::Csv, &[2], true);
        assert_eq!(csv, again);
        assert!(csv.starts_with("n,symbolic,q=2,brute@q=2\n"));
        assert!(csv.contains("\"(1,1)\""));
    }
}
