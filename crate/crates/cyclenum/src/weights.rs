//! Weight functions on multiplicity vectors in `N^d`, with `w(0) = 1`, and
//! their box-truncated generating functions. The named kinds cover the
//! structured multiplicity constraints with closed-form counts; arbitrary
//! rational weights come in through finite tables.

use std::collections::BTreeMap;
use std::fmt;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exact::Rat;
use crate::numtheory::{gcd_u64, DegreeVec};
use crate::series::{box_points, MultiSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightKind {
    /// Every multiplicity vector allowed: `w = 1` everywhere.
    AllOne,
    /// `w(n) = 1` iff `min(n) < r`: the gcd of the tuple has no irreducible
    /// factor of multiplicity `r` or more.
    MinLtR { r: u32 },
    /// `w(n) = 1` iff `min(n) mod m` lies in `{0, .., r-1}`, with `r < m`.
    ResidueWindow { m: u32, r: u32 },
    /// `w(n) = 1` iff `n` lies in the monoid generated by coprime `a, b`.
    /// One dimension only.
    MonoidAb { a: u32, b: u32 },
    /// Finite table of rational weights; absent points weigh 0 and the
    /// origin always weighs 1.
    Table {
        entries: BTreeMap<DegreeVec, Rat>,
        source: Option<String>,
    },
}

/// A weight function `w: N^d -> Q` with `w(0, ..., 0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFn {
    d: usize,
    kind: WeightKind,
}

impl WeightFn {
    pub fn all_one(d: usize) -> Result<WeightFn> {
        Self::check_dim(d)?;
        Ok(WeightFn {
            d,
            kind: WeightKind::AllOne,
        })
    }

    /// Indicator of `min(n) < r`; for `d = 1` these are the polynomials
    /// free of `r`-th powers.
    pub fn min_lt_r(d: usize, r: u32) -> Result<WeightFn> {
        Self::check_dim(d)?;
        if r == 0 {
            return Err(Error::Domain("power-free order r must be positive".into()));
        }
        Ok(WeightFn {
            d,
            kind: WeightKind::MinLtR { r },
        })
    }

    /// Indicator of `min(n) mod m` falling in the window `{0, .., r-1}`.
    pub fn residue_window(d: usize, m: u32, r: u32) -> Result<WeightFn> {
        Self::check_dim(d)?;
        if r == 0 || r >= m {
            return Err(Error::Domain(format!(
                "residue window needs 1 <= r < m, got r={r}, m={m}"
            )));
        }
        Ok(WeightFn {
            d,
            kind: WeightKind::ResidueWindow { m, r },
        })
    }

    /// Indicator of membership in the numerical monoid generated by the
    /// coprime pair `a, b`.
    pub fn monoid_ab(a: u32, b: u32) -> Result<WeightFn> {
        if a == 0 || b == 0 || gcd_u64(a as u64, b as u64) != 1 {
            return Err(Error::Domain(format!(
                "monoid generators must be coprime positive integers, got ({a},{b})"
            )));
        }
        Ok(WeightFn {
            d: 1,
            kind: WeightKind::MonoidAb { a, b },
        })
    }

    /// Arbitrary rational weights with finite support. A stored origin
    /// entry must equal 1; if absent it is implied.
    pub fn table(d: usize, entries: BTreeMap<DegreeVec, Rat>) -> Result<WeightFn> {
        Self::check_dim(d)?;
        let mut clean = BTreeMap::new();
        for (n, w) in entries {
            if n.dim() != d {
                return Err(Error::Shape(format!(
                    "table key {n} has dimension {}, expected {d}",
                    n.dim()
                )));
            }
            if n.is_all_zero() {
                if !w.is_one() {
                    return Err(Error::Domain(format!(
                        "the weight at the origin must be 1, got {w}"
                    )));
                }
                continue;
            }
            if !w.is_zero() {
                clean.insert(n, w);
            }
        }
        Ok(WeightFn {
            d,
            kind: WeightKind::Table {
                entries: clean,
                source: None,
            },
        })
    }

    fn check_dim(d: usize) -> Result<()> {
        if d == 0 {
            Err(Error::Domain("weight dimension must be >= 1".into()))
        } else {
            Ok(())
        }
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn kind(&self) -> &WeightKind {
        &self.kind
    }

    /// The weight of a multiplicity vector.
    pub fn evaluate(&self, n: &DegreeVec) -> Result<Rat> {
        if n.dim() != self.d {
            return Err(Error::Shape(format!(
                "multiplicity vector {n} has dimension {}, weight function expects {}",
                n.dim(),
                self.d
            )));
        }
        Ok(self.evaluate_raw(n.entries()))
    }

    /// Same as [`WeightFn::evaluate`] for a raw slice of the right length.
    pub(crate) fn evaluate_raw(&self, n: &[u32]) -> Rat {
        debug_assert_eq!(n.len(), self.d);
        if n.iter().all(|&e| e == 0) {
            return Rat::one();
        }
        let min = *n.iter().min().expect("d >= 1");
        let indicator = |b: bool| if b { Rat::one() } else { Rat::zero() };
        match &self.kind {
            WeightKind::AllOne => Rat::one(),
            WeightKind::MinLtR { r } => indicator(min < *r),
            WeightKind::ResidueWindow { m, r } => indicator(min % m < *r),
            WeightKind::MonoidAb { a, b } => {
                indicator(monoid_member(*a, *b, n[0]).expect("generators validated"))
            }
            WeightKind::Table { entries, .. } => {
                let key = DegreeVec::new(n.to_vec()).expect("d >= 1");
                entries.get(&key).cloned().unwrap_or_else(Rat::zero)
            }
        }
    }

    /// The box-truncated generating function `g(z) = Σ w(n) z^n`.
    pub fn weight_series(&self, caps: &DegreeVec) -> Result<MultiSeries<Rat>> {
        if caps.dim() != self.d {
            return Err(Error::Shape(format!(
                "caps {caps} have dimension {}, weight function expects {}",
                caps.dim(),
                self.d
            )));
        }
        let mut g = MultiSeries::zero(caps);
        for point in box_points(caps) {
            let w = self.evaluate_raw(point.entries());
            g.set_coeff(point, w)?;
        }
        Ok(g)
    }

    /// Canonical spec string; parsing it back yields an equal weight
    /// function.
    pub fn canonical_string(&self) -> String {
        let d = self.d;
        match &self.kind {
            WeightKind::AllOne => format!("all-one:d={d}"),
            WeightKind::MinLtR { r } => format!("rfree:r={r},d={d}"),
            WeightKind::ResidueWindow { m, r } => format!("mod:m={m},r={r},d={d}"),
            WeightKind::MonoidAb { a, b } => format!("monoid:a={a},b={b}"),
            WeightKind::Table { source, .. } => match source {
                Some(path) => format!("table:@{path}"),
                None => "table:<inline>".to_string(),
            },
        }
    }

    /// Parses the weight mini-language:
    /// `rfree:r=2,d=1`, `mod:m=3,r=1,d=2`, `monoid:a=2,b=3`, `all-one:d=1`,
    /// `table:@file.json`.
    pub fn parse(spec: &str) -> Result<WeightFn> {
        let spec = spec.trim();
        let (head, rest) = spec
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("weight spec {spec:?} is missing ':'")))?;
        let params = |rest: &str| -> Result<BTreeMap<String, u64>> {
            let mut map = BTreeMap::new();
            for part in rest.split(',') {
                let (key, value) = part
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("bad parameter {part:?} in {spec:?}")))?;
                let value: u64 = value
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad value in {part:?}")))?;
                map.insert(key.trim().to_string(), value);
            }
            Ok(map)
        };
        let require = |map: &BTreeMap<String, u64>, key: &str| -> Result<u64> {
            map.get(key)
                .copied()
                .ok_or_else(|| Error::Parse(format!("weight spec {spec:?} is missing {key}=")))
        };
        match head {
            "all-one" => {
                let p = params(rest)?;
                WeightFn::all_one(require(&p, "d")? as usize)
            }
            "rfree" => {
                let p = params(rest)?;
                WeightFn::min_lt_r(require(&p, "d")? as usize, require(&p, "r")? as u32)
            }
            "mod" => {
                let p = params(rest)?;
                WeightFn::residue_window(
                    require(&p, "d")? as usize,
                    require(&p, "m")? as u32,
                    require(&p, "r")? as u32,
                )
            }
            "monoid" => {
                let p = params(rest)?;
                WeightFn::monoid_ab(require(&p, "a")? as u32, require(&p, "b")? as u32)
            }
            "table" => {
                let path = rest.strip_prefix('@').ok_or_else(|| {
                    Error::Parse("table weights need a file reference, e.g. table:@weights.json".to_string())
                })?;
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("cannot read weight table {path:?}: {e}")))?;
                let mut w = WeightFn::from_table_json(&text)?;
                if let WeightKind::Table { source, .. } = &mut w.kind {
                    *source = Some(path.to_string());
                }
                Ok(w)
            }
            other => Err(Error::Parse(format!("unknown weight kind {other:?}"))),
        }
    }

    /// Parses the JSON table format:
    /// `{"d":1,"entries":[{"n":[2],"w":"1/2"}, ...]}`.
    pub fn from_table_json(text: &str) -> Result<WeightFn> {
        #[derive(Deserialize)]
        struct TableEntry {
            n: Vec<u32>,
            w: String,
        }
        #[derive(Deserialize)]
        struct TableFile {
            d: usize,
            entries: Vec<TableEntry>,
        }
        let parsed: TableFile = serde_json::from_str(text)
            .map_err(|e| Error::Parse(format!("bad weight table JSON: {e}")))?;
        let mut entries = BTreeMap::new();
        for entry in parsed.entries {
            let key = DegreeVec::new(entry.n)?;
            let w: Rat = entry.w.parse()?;
            entries.insert(key, w);
        }
        WeightFn::table(parsed.d, entries)
    }
}

impl fmt::Display for WeightFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_string())
    }
}

/// Membership in the numerical monoid `{a i + b j : i, j >= 0}` for coprime
/// `a, b`. Every integer beyond the Frobenius number `ab - a - b` belongs.
pub fn monoid_member(a: u32, b: u32, n: u32) -> Result<bool> {
    if a == 0 || b == 0 || gcd_u64(a as u64, b as u64) != 1 {
        return Err(Error::Domain(format!(
            "monoid generators must be coprime positive integers, got ({a},{b})"
        )));
    }
    let mut rest = n as i64;
    while rest >= 0 {
        if rest % b as i64 == 0 {
            return Ok(true);
        }
        rest -= a as i64;
    }
    Ok(false)
}
