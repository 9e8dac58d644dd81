//! Agreement suites: every structured count is computed along every route
//! the crate offers (closed form, series engine, brute force, and where
//! available a second independent oracle) and the routes must coincide
//! exactly. Each suite returns a machine-readable report; a disagreement is
//! a failed case, never reconciled.

use num_bigint::BigInt;
use serde::Serialize;

use crate::counting::{
    closed_monoid, closed_monoid_improved, closed_no_mult_one, closed_residue, closed_rfree_gcd,
    residue_chain_check,
};
use crate::error::Result;
use crate::exact::{BiPoly, Rat, UniPoly};
use crate::ffpoly::{
    brute_alpha_with, brute_expected_fj_with, brute_qt_polynomial, brute_rfree_gcd_count_with,
    FactorTable, Factorizer, Field, DEFAULT_STREAM_BUDGET,
};
use crate::numtheory::{count_irreducibles, DegreeVec};
use crate::series::{
    alpha_series_numeric, alpha_series_product_numeric, alpha_series_product_symbolic,
    alpha_series_symbolic, box_points, cyclotomic_product, extract_exponents,
    reconstruct_from_exponents, ExponentMap, MultiSeries,
};
use crate::stats::{expected_factor_count, qt_polynomial, qt_symmetry_check};
use crate::weights::WeightFn;

#[derive(Clone, Debug, Serialize)]
pub struct CaseReport {
    pub id: String,
    pub inputs: String,
    pub expected_source: String,
    pub got: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseReport>,
    pub pass_count: usize,
    pub fail_count: usize,
}

impl SuiteReport {
    pub fn from_cases(suite: &str, cases: Vec<CaseReport>) -> SuiteReport {
        let pass_count = cases.iter().filter(|c| c.pass).count();
        let fail_count = cases.len() - pass_count;
        SuiteReport {
            suite: suite.to_string(),
            cases,
            pass_count,
            fail_count,
        }
    }

    pub fn passed(&self) -> bool {
        self.fail_count == 0
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for case in &self.cases {
            let status = if case.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "{status} {} [{}] expected({}) got: {}\n",
                case.id, case.inputs, case.expected_source, case.got
            ));
        }
        out.push_str(&format!(
            "suite {}: {} passed, {} failed\n",
            self.suite, self.pass_count, self.fail_count
        ));
        out
    }
}

fn case(
    id: String,
    inputs: String,
    expected_source: &str,
    body: impl FnOnce() -> Result<(String, bool)>,
) -> CaseReport {
    let (got, pass) = match body() {
        Ok((got, pass)) => (got, pass),
        Err(e) => (format!("error: {e}"), false),
    };
    CaseReport {
        id,
        inputs,
        expected_source: expected_source.to_string(),
        got,
        pass,
    }
}

fn dv(entries: &[u32]) -> DegreeVec {
    DegreeVec::new(entries.to_vec()).expect("nonempty")
}

fn field(q: u64, budget: u64) -> Result<Field> {
    let mut f = crate::ffpoly::field_for_size(q)?;
    f.set_stream_budget(budget);
    Ok(f)
}

/// Truncated product of cyclotomic factors vs. the geometric series:
/// coefficient `n` must be exactly `q^n` for `q` in {2,3,5}, `n <= 20`.
pub fn cyclotomic_identity_cases() -> Vec<CaseReport> {
    let cap = 20u32;
    [2u64, 3, 5]
        .iter()
        .map(|&q| {
            case(
                format!("cyclotomic/q={q}"),
                format!("q={q}, cap={cap}"),
                "geometric series coefficients q^n",
                || {
                    let series = cyclotomic_product(q, cap)?;
                    for n in 0..=cap {
                        let got = series.coeff(&dv(&[n]))?;
                        let expect = Rat::from_int(BigInt::from(q).pow(n));
                        if got != expect {
                            return Ok((format!("coefficient {n} is {got}, not {expect}"), false));
                        }
                    }
                    Ok((format!("all {} coefficients match", cap + 1), true))
                },
            )
        })
        .collect()
}

/// Exhaustive irreducible lists vs. the divisor-sum count formula, for all
/// prime powers up to 9 and degrees up to 8 that fit the budget.
pub fn irreducible_count_cases(budget: u64) -> Vec<CaseReport> {
    let mut cases = Vec::new();
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let Ok(f) = field(q, budget) else {
            continue;
        };
        let mut factorizer = Factorizer::new(&f);
        for n in 1..=8u32 {
            if f.monic_count(n) > budget as u128 {
                continue;
            }
            cases.push(case(
                format!("irreducible-count/q={q}/n={n}"),
                format!("q={q}, n={n}"),
                "divisor-sum count formula",
                || {
                    let listed = factorizer.irreducibles(n)?.len();
                    let formula = count_irreducibles(q, n)?;
                    let pass = BigInt::from(listed) == formula;
                    Ok((format!("{listed} listed, formula {formula}"), pass))
                },
            ));
        }
    }
    cases
}

/// Power-free single polynomials: brute force = `q^n - q^{n+1-r}` = series
/// coefficient, for r in {1,2,3} over GF(2) (n <= 12) and GF(3) (n <= 9).
pub fn rfree_cases(budget: u64) -> Vec<CaseReport> {
    let mut cases = Vec::new();
    for (q, n_max) in [(2u64, 12u32), (3, 9)] {
        let Ok(f) = field(q, budget) else { continue };
        let table = match FactorTable::build(&f, n_max) {
            Ok(t) => t,
            Err(e) => {
                cases.push(CaseReport {
                    id: format!("rfree/q={q}"),
                    inputs: format!("q={q}, n<={n_max}"),
                    expected_source: "factor table".into(),
                    got: format!("error: {e}"),
                    pass: false,
                });
                continue;
            }
        };
        for r in 1u32..=3 {
            for n in r..=n_max {
                let nvec = dv(&[n]);
                cases.push(case(
                    format!("rfree/q={q}/r={r}/n={n}"),
                    format!("q={q}, r={r}, n={n}"),
                    "closed form q^n - q^{n+1-r}; series; brute force",
                    || {
                        let w = WeightFn::min_lt_r(1, r)?;
                        let closed = closed_rfree_gcd(&nvec, r)?.eval_int(q as i64);
                        let series =
                            alpha_series_numeric(&w.weight_series(&nvec)?, q)?.coeff(&nvec)?;
                        let brute = brute_alpha_with(&table, &nvec, &w)?;
                        let pass = closed == series && series == brute;
                        Ok((
                            format!("closed={closed} series={series} brute={brute}"),
                            pass,
                        ))
                    },
                ));
            }
        }
    }
    cases
}

/// Pairs over GF(2) with power-free gcd: four routes (closed form, series,
/// multiplicity-profile brute force, Euclidean-gcd brute force) for every
/// degree pair with total at most 16.
pub fn tuple_gcd_cases(budget: u64) -> Vec<CaseReport> {
    let total_max = 16u32;
    let mut cases = Vec::new();
    let f = match field(2, budget) {
        Ok(f) => f,
        Err(e) => {
            return vec![CaseReport {
                id: "tuple-gcd/field".into(),
                inputs: "q=2".into(),
                expected_source: "field construction".into(),
                got: format!("error: {e}"),
                pass: false,
            }]
        }
    };
    let table = match FactorTable::build(&f, total_max) {
        Ok(t) => t,
        Err(e) => {
            return vec![CaseReport {
                id: "tuple-gcd/table".into(),
                inputs: format!("q=2, degrees <= {total_max}"),
                expected_source: "factor table".into(),
                got: format!("error: {e}"),
                pass: false,
            }]
        }
    };
    for r in 1u32..=2 {
        for total in 0..=total_max {
            cases.push(case(
                format!("tuple-gcd/r={r}/N={total}"),
                format!("q=2, d=2, r={r}, all (n1,n2) with n1+n2={total}"),
                "closed form; series; brute force; independent gcd oracle",
                || {
                    let w = WeightFn::min_lt_r(2, r)?;
                    for n1 in 0..=total {
                        let nvec = dv(&[n1, total - n1]);
                        let closed = closed_rfree_gcd(&nvec, r)?.eval_int(2);
                        let series =
                            alpha_series_numeric(&w.weight_series(&nvec)?, 2)?.coeff(&nvec)?;
                        let brute = brute_alpha_with(&table, &nvec, &w)?;
                        let gcd_oracle =
                            Rat::from_int(brute_rfree_gcd_count_with(&table, &nvec, r)?);
                        if !(closed == series && series == brute && brute == gcd_oracle) {
                            return Ok((
                                format!(
                                    "disagreement at {nvec}: closed={closed} series={series} \
                                     brute={brute} gcd-oracle={gcd_oracle}"
                                ),
                                false,
                            ));
                        }
                    }
                    Ok((
                        format!("{} degree pairs agree on all four routes", total + 1),
                        true,
                    ))
                },
            ));
        }
    }
    cases
}

/// Residue-window multiplicities: formula = series = brute force for
/// windows (m,r) in {(2,1),(3,1),(3,2)}, one and two variables, N <= 14,
/// over GF(2).
pub fn residue_cases(budget: u64) -> Vec<CaseReport> {
    let total_max = 14u32;
    let mut cases = Vec::new();
    let f = match field(2, budget) {
        Ok(f) => f,
        Err(e) => {
            return vec![CaseReport {
                id: "residue/field".into(),
                inputs: "q=2".into(),
                expected_source: "field construction".into(),
                got: format!("error: {e}"),
                pass: false,
            }]
        }
    };
    let table = match FactorTable::build(&f, total_max) {
        Ok(t) => t,
        Err(e) => {
            return vec![CaseReport {
                id: "residue/table".into(),
                inputs: format!("q=2, degrees <= {total_max}"),
                expected_source: "factor table".into(),
                got: format!("error: {e}"),
                pass: false,
            }]
        }
    };
    for (m, r) in [(2u32, 1u32), (3, 1), (3, 2)] {
        for d in [1usize, 2] {
            for total in 0..=total_max {
                cases.push(case(
                    format!("residue/m={m}/r={r}/d={d}/N={total}"),
                    format!("q=2, d={d}, m={m}, r={r}, degree total {total}"),
                    "closed form; series; brute force",
                    || {
                        let w = WeightFn::residue_window(d, m, r)?;
                        let nvecs: Vec<DegreeVec> = if d == 1 {
                            vec![dv(&[total])]
                        } else {
                            (0..=total).map(|n1| dv(&[n1, total - n1])).collect()
                        };
                        for nvec in &nvecs {
                            let closed = closed_residue(nvec, r, m)?.eval_int(2);
                            let series =
                                alpha_series_numeric(&w.weight_series(nvec)?, 2)?.coeff(nvec)?;
                            let brute = brute_alpha_with(&table, nvec, &w)?;
                            if !(closed == series && series == brute) {
                                return Ok((
                                    format!(
                                        "disagreement at {nvec}: closed={closed} \
                                         series={series} brute={brute}"
                                    ),
                                    false,
                                ));
                            }
                        }
                        Ok((format!("{} degree vectors agree", nvecs.len()), true))
                    },
                ));
            }
        }
    }
    cases
}

/// Monoid-multiplicity counts: the two closed forms agree as polynomial
/// identities up to degree 60, the no-multiplicity-1 specialization matches,
/// brute force confirms at q=2 up to degree 14, and the six-step ladder
/// holds.
pub fn monoid_cases(budget: u64) -> Vec<CaseReport> {
    let mut cases = Vec::new();
    for (a, b) in [(2u32, 3u32), (3, 5), (4, 7)] {
        let frobenius = a * b - a - b;
        cases.push(case(
            format!("monoid/identity/a={a}/b={b}"),
            format!("a={a}, b={b}, {} <= n <= 60", frobenius + 1),
            "representation sums vs cancellation-free progressions",
            || {
                for n in (frobenius + 1)..=60 {
                    let sums = closed_monoid(n, a, b)?;
                    let progressions = closed_monoid_improved(n, a, b)?;
                    if sums != progressions {
                        return Ok((
                            format!(
                                "mismatch at n={n}: sums {} vs progressions {}",
                                sums.render("q"),
                                progressions.render("q")
                            ),
                            false,
                        ));
                    }
                }
                Ok(("polynomial identity holds".to_string(), true))
            },
        ));
    }
    cases.push(case(
        "monoid/no-mult-one".to_string(),
        "2 <= n <= 60".to_string(),
        "floor-exponent form vs monoid <2,3> sums",
        || {
            for n in 2..=60u32 {
                if closed_no_mult_one(n)? != closed_monoid(n, 2, 3)? {
                    return Ok((format!("mismatch at n={n}"), false));
                }
            }
            Ok(("polynomial identity holds".to_string(), true))
        },
    ));
    let brute_setup = field(2, budget);
    match &brute_setup {
        Err(e) => cases.push(CaseReport {
            id: "monoid/brute/setup".into(),
            inputs: "q=2, n<=14".into(),
            expected_source: "field construction".into(),
            got: format!("error: {e}"),
            pass: false,
        }),
        Ok(f) => match FactorTable::build(f, 14) {
            Err(e) => cases.push(CaseReport {
                id: "monoid/brute/setup".into(),
                inputs: "q=2, n<=14".into(),
                expected_source: "factor table".into(),
                got: format!("error: {e}"),
                pass: false,
            }),
            Ok(table) => {
                for (a, b) in [(2u32, 3u32), (3, 5), (4, 7)] {
                    cases.push(case(
                        format!("monoid/brute/a={a}/b={b}"),
                        format!("q=2, a={a}, b={b}, n <= 14"),
                        "closed form; series; brute force",
                        || {
                            let w = WeightFn::monoid_ab(a, b)?;
                            for n in 0..=14u32 {
                                let nvec = dv(&[n]);
                                let closed = closed_monoid(n, a, b)?.eval_int(2);
                                let series = alpha_series_numeric(&w.weight_series(&nvec)?, 2)?
                                    .coeff(&nvec)?;
                                let brute = brute_alpha_with(&table, &nvec, &w)?;
                                if !(closed == series && series == brute) {
                                    return Ok((
                                        format!(
                                            "disagreement at n={n}: closed={closed} \
                                             series={series} brute={brute}"
                                        ),
                                        false,
                                    ));
                                }
                            }
                            Ok(("degrees 0..=14 agree on all routes".to_string(), true))
                        },
                    ));
                }
            }
        },
    }
    cases.push(case(
        "monoid/ladder".to_string(),
        "k <= 5".to_string(),
        "six-step ladder of no-multiplicity-1 counts",
        || {
            for k in 0..=5u32 {
                if !residue_chain_check(k)? {
                    return Ok((format!("ladder breaks at k={k}"), false));
                }
            }
            Ok(("ladder holds for k <= 5".to_string(), true))
        },
    ));
    cases
}

/// Expected factor counts: the coefficient-extraction formula equals the
/// exhaustive expectation for all-one and square-free weights, q in {2,3},
/// j in {1,2}, degrees up to 7.
pub fn expected_cases(budget: u64) -> Vec<CaseReport> {
    let mut cases = Vec::new();
    for q in [2u64, 3] {
        let Ok(f) = field(q, budget) else { continue };
        let table = match FactorTable::build(&f, 7) {
            Ok(t) => t,
            Err(e) => {
                cases.push(CaseReport {
                    id: format!("expected/q={q}/setup"),
                    inputs: format!("q={q}, n<=7"),
                    expected_source: "factor table".into(),
                    got: format!("error: {e}"),
                    pass: false,
                });
                continue;
            }
        };
        for (w, label) in [
            (WeightFn::all_one(1), "all-one"),
            (WeightFn::min_lt_r(1, 2), "square-free"),
        ] {
            let w = match w {
                Ok(w) => w,
                Err(e) => {
                    cases.push(CaseReport {
                        id: format!("expected/q={q}/{label}"),
                        inputs: label.to_string(),
                        expected_source: "weight construction".into(),
                        got: format!("error: {e}"),
                        pass: false,
                    });
                    continue;
                }
            };
            for j in [1u32, 2] {
                cases.push(case(
                    format!("expected/q={q}/{label}/j={j}"),
                    format!("q={q}, weights {label}, j={j}, n <= 7"),
                    "coefficient extraction vs exhaustive expectation",
                    || {
                        for n in 1..=7u32 {
                            let nvec = dv(&[n]);
                            let formula = expected_factor_count(&w, &nvec, j, q)?;
                            let brute = brute_expected_fj_with(&table, &nvec, j, &w)?;
                            if formula != brute {
                                return Ok((
                                    format!("mismatch at n={n}: formula={formula} brute={brute}"),
                                    false,
                                ));
                            }
                        }
                        Ok(("degrees 1..=7 agree".to_string(), true))
                    },
                ));
            }
        }
    }
    cases
}

/// The three factor-count polynomials a by-hand expansion gives for degrees
/// 2, 3 and 4, as `(q exponent, t exponent, numerator, denominator)` terms.
fn qt_reference(n: u32) -> Option<Vec<(u32, u32, i64, i64)>> {
    match n {
        2 => Some(vec![
            (2, 2, 1, 2),
            (1, 2, 1, 2),
            (2, 1, 1, 2),
            (1, 1, -1, 2),
        ]),
        3 => Some(vec![
            (3, 3, 1, 6),
            (2, 3, 3, 6),
            (1, 3, 2, 6),
            (3, 2, 3, 6),
            (2, 2, -3, 6),
            (3, 1, 2, 6),
            (1, 1, -2, 6),
        ]),
        4 => Some(vec![
            (4, 4, 1, 24),
            (3, 4, 6, 24),
            (2, 4, 11, 24),
            (1, 4, 6, 24),
            (4, 3, 6, 24),
            (2, 3, -6, 24),
            (4, 2, 11, 24),
            (3, 2, -6, 24),
            (2, 2, 1, 24),
            (1, 2, -6, 24),
            (4, 1, 6, 24),
            (2, 1, -6, 24),
        ]),
        _ => None,
    }
}

/// Factor-count polynomial checks: symmetry under exchanging q and t for
/// n <= 10, agreement with the reference polynomials for n in {2,3,4},
/// specialization to the exhaustive count at q=2 for n <= 8, and collapse
/// to q^n at t=1.
pub fn qt_cases(budget: u64) -> Vec<CaseReport> {
    let mut cases = Vec::new();
    cases.push(case(
        "qt/symmetry".to_string(),
        "n <= 10".to_string(),
        "swap invariance of the factor-count polynomial",
        || {
            for n in 0..=10u32 {
                if !qt_symmetry_check(n)? {
                    return Ok((format!("not symmetric at n={n}"), false));
                }
            }
            Ok(("symmetric for n <= 10".to_string(), true))
        },
    ));
    for n in [2u32, 3, 4] {
        cases.push(case(
            format!("qt/reference/n={n}"),
            format!("n={n}"),
            "reference expansion",
            || {
                let mut expect = BiPoly::zero();
                for (qe, te, num, den) in qt_reference(n).expect("reference degrees") {
                    expect.add_term(qe, te, &Rat::ratio(num, den));
                }
                let got = qt_polynomial(n)?;
                let pass = got == expect;
                Ok((got.render().to_string(), pass))
            },
        ));
    }
    cases.push(case(
        "qt/specialize-q2".to_string(),
        "q=2, n <= 8".to_string(),
        "exhaustive factor-count polynomial",
        || {
            let f = field(2, budget)?;
            for n in 0..=8u32 {
                let sym = qt_polynomial(n)?.eval_q(2);
                let brute = brute_qt_polynomial(&f, n)?;
                if sym != brute {
                    return Ok((
                        format!(
                            "mismatch at n={n}: symbolic {} vs brute {}",
                            sym.render("t"),
                            brute.render("t")
                        ),
                        false,
                    ));
                }
            }
            Ok(("matches for n <= 8".to_string(), true))
        },
    ));
    cases.push(case(
        "qt/t-equals-1".to_string(),
        "n <= 10".to_string(),
        "total count q^n",
        || {
            for n in 0..=10u32 {
                let collapsed = qt_polynomial(n)?.eval_t_one();
                if collapsed != UniPoly::monomial(Rat::one(), n) {
                    return Ok((
                        format!("t=1 gives {} at n={n}", collapsed.render("q")),
                        false,
                    ));
                }
            }
            Ok(("collapses to q^n for n <= 10".to_string(), true))
        },
    ));
    cases
}

/// Small deterministic generator for the randomized round-trip cases.
struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    fn rat(&mut self) -> Rat {
        let numerator = self.below(19) as i64 - 9;
        let denominator = self.below(6) as i64 + 1;
        Rat::ratio(numerator, denominator)
    }
}

/// Factorization round trip on 100 randomized constant-term-1 series:
/// reconstructing the extracted exponents reproduces the series, and
/// extracting from the reconstruction reproduces the exponents. Uniqueness
/// of the factorization is exactly this injectivity.
pub fn roundtrip_cases() -> Vec<CaseReport> {
    let mut rng = XorShift(0x5eed_cafe_f00d_1234);
    let mut cases = Vec::new();
    for trial in 0..100u32 {
        let d = 1 + rng.below(2) as usize;
        let caps = if d == 1 {
            dv(&[2 + rng.below(7) as u32])
        } else {
            dv(&[1 + rng.below(4) as u32, 1 + rng.below(4) as u32])
        };
        // Random constant-term-1 series.
        let points = box_points(&caps);
        let mut g = MultiSeries::<Rat>::one(&caps);
        let terms = 1 + rng.below(8) as usize;
        let mut summary = Vec::new();
        for _ in 0..terms {
            let key = points[1 + rng.below(points.len() as u64 - 1) as usize].clone();
            let value = rng.rat();
            summary.push(format!("{key}:{value}"));
            g.set_coeff(key, value).expect("key within caps");
        }
        // An independent random exponent map on the same box, so the second
        // identity is not implied by the first.
        let mut a0 = ExponentMap::new();
        for _ in 0..(1 + rng.below(6)) {
            let key = points[1 + rng.below(points.len() as u64 - 1) as usize].clone();
            a0.insert(key, rng.rat()).expect("nonzero key");
        }
        cases.push(case(
            format!("roundtrip/{trial:02}"),
            format!("caps={caps}, terms [{}]", summary.join(", ")),
            "reconstruct(extract(g)) = g and extract(reconstruct(a)) = a",
            || {
                let a = extract_exponents(&g)?;
                let series_ok = reconstruct_from_exponents(&a, g.caps())? == g;
                let exponents_ok =
                    extract_exponents(&reconstruct_from_exponents(&a0, &caps)?)? == a0;
                Ok((
                    format!(
                        "{} exponents; series round trip {series_ok}, \
                         exponent round trip {exponents_ok}",
                        a.len()
                    ),
                    series_ok && exponents_ok,
                ))
            },
        ));
    }
    cases
}

/// Log/exp route vs. explicit-product route of the weighted enumeration
/// series, on every structured weight kind with integer factor exponents.
pub fn path_equivalence_cases() -> Vec<CaseReport> {
    let mut setups: Vec<(String, WeightFn, DegreeVec)> = Vec::new();
    for r in [1u32, 2, 3] {
        setups.push((
            format!("rfree r={r} d=1"),
            WeightFn::min_lt_r(1, r).expect("valid"),
            dv(&[10]),
        ));
    }
    for r in [1u32, 2] {
        setups.push((
            format!("rfree r={r} d=2"),
            WeightFn::min_lt_r(2, r).expect("valid"),
            dv(&[5, 5]),
        ));
    }
    for (m, r) in [(2u32, 1u32), (3, 2)] {
        setups.push((
            format!("mod m={m} r={r} d=1"),
            WeightFn::residue_window(1, m, r).expect("valid"),
            dv(&[10]),
        ));
    }
    setups.push((
        "mod m=2 r=1 d=2".to_string(),
        WeightFn::residue_window(2, 2, 1).expect("valid"),
        dv(&[5, 5]),
    ));
    for (a, b) in [(2u32, 3u32), (3, 5)] {
        setups.push((
            format!("monoid a={a} b={b}"),
            WeightFn::monoid_ab(a, b).expect("valid"),
            dv(&[10]),
        ));
    }
    setups
        .into_iter()
        .map(|(label, w, caps)| {
            case(
                format!("path-equivalence/{}", label.replace(' ', "/")),
                format!("weights {label}, caps {caps}"),
                "log/exp route vs explicit product route",
                || {
                    let g = w.weight_series(&caps)?;
                    let exponents = extract_exponents(&g)?;
                    if !exponents.is_integer_valued() {
                        return Ok(("factor exponents are not integers".to_string(), false));
                    }
                    let sym_ok = alpha_series_symbolic(&g)? == alpha_series_product_symbolic(&g)?;
                    let num_ok =
                        alpha_series_numeric(&g, 2)? == alpha_series_product_numeric(&g, 2)?;
                    Ok((
                        format!("symbolic route equal: {sym_ok}, numeric route equal: {num_ok}"),
                        sym_ok && num_ok,
                    ))
                },
            )
        })
        .collect()
}

/// Named suites runnable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Cyclotomic,
    Rfree,
    Residue,
    Monoid,
    Qt,
    Expected,
    Roundtrip,
    All,
}

impl Suite {
    pub fn parse(name: &str) -> Result<Suite> {
        match name {
            "cyclotomic" => Ok(Suite::Cyclotomic),
            "rfree" => Ok(Suite::Rfree),
            "residue" => Ok(Suite::Residue),
            "monoid" => Ok(Suite::Monoid),
            "qt" => Ok(Suite::Qt),
            "expected" => Ok(Suite::Expected),
            "roundtrip" => Ok(Suite::Roundtrip),
            "all" => Ok(Suite::All),
            other => Err(crate::error::Error::Parse(format!(
                "unknown suite {other:?}; expected one of cyclotomic, rfree, residue, \
                 monoid, qt, expected, roundtrip, all"
            ))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Cyclotomic => "cyclotomic",
            Suite::Rfree => "rfree",
            Suite::Residue => "residue",
            Suite::Monoid => "monoid",
            Suite::Qt => "qt",
            Suite::Expected => "expected",
            Suite::Roundtrip => "roundtrip",
            Suite::All => "all",
        }
    }
}

/// Runs a suite with an optional enumeration budget override.
pub fn run_suite(suite: Suite, budget: Option<u64>) -> SuiteReport {
    let budget = budget.unwrap_or(DEFAULT_STREAM_BUDGET);
    let cases = match suite {
        Suite::Cyclotomic => {
            let mut cases = cyclotomic_identity_cases();
            cases.extend(irreducible_count_cases(budget));
            cases
        }
        Suite::Rfree => {
            let mut cases = rfree_cases(budget);
            cases.extend(tuple_gcd_cases(budget));
            cases
        }
        Suite::Residue => residue_cases(budget),
        Suite::Monoid => monoid_cases(budget),
        Suite::Qt => qt_cases(budget),
        Suite::Expected => expected_cases(budget),
        Suite::Roundtrip => {
            let mut cases = roundtrip_cases();
            cases.extend(path_equivalence_cases());
            cases
        }
        Suite::All => {
            let mut cases = Vec::new();
            for s in [
                Suite::Cyclotomic,
                Suite::Rfree,
                Suite::Residue,
                Suite::Monoid,
                Suite::Qt,
                Suite::Expected,
                Suite::Roundtrip,
            ] {
                cases.extend(run_suite(s, Some(budget)).cases);
            }
            return SuiteReport::from_cases("all", cases);
        }
    };
    SuiteReport::from_cases(suite.name(), cases)
}
