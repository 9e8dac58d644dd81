//! Statistics of irreducible factors under the weighted distribution: the
//! expected number of degree-`j` factors of the first tuple component, and
//! the factor-count polynomial `Σ_p t^{f(p)}`, which is symmetric in `q`
//! and `t`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact::{BiPoly, Rat, Ring, UniPoly};
use crate::ffpoly::Factorization;
use crate::numtheory::{count_irreducibles, count_irreducibles_symbolic, DegreeVec};
use crate::series::{alpha_series_numeric, alpha_series_symbolic, MultiSeries};
use crate::weights::WeightFn;

/// Factor counts of one polynomial by degree: `f_j` is the number of
/// degree-`j` irreducible factors counted with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorCountProfile {
    by_degree: BTreeMap<u32, u64>,
}

impl FactorCountProfile {
    pub fn of(factorization: &Factorization) -> FactorCountProfile {
        let mut by_degree = BTreeMap::new();
        for (s, m) in factorization.factors() {
            let j = s.degree().expect("irreducible factors are nonzero") as u32;
            *by_degree.entry(j).or_insert(0) += *m as u64;
        }
        FactorCountProfile { by_degree }
    }

    pub fn count_of_degree(&self, j: u32) -> u64 {
        self.by_degree.get(&j).copied().unwrap_or(0)
    }

    /// `f = Σ_j f_j`.
    pub fn total(&self) -> u64 {
        self.by_degree.values().sum()
    }

    /// `Σ_j j * f_j`, which must equal the degree of the polynomial.
    pub fn weighted_degree(&self) -> u64 {
        self.by_degree.iter().map(|(j, f)| *j as u64 * f).sum()
    }
}

/// The series `Σ n_1 w(n) z^n` on the same box as `g`.
fn first_component_weighted(g: &MultiSeries<Rat>) -> MultiSeries<Rat> {
    let mut out = MultiSeries::zero(g.caps());
    for (key, value) in g.iter() {
        let n1 = key.get(0);
        if n1 > 0 {
            out.set_coeff(key.clone(), value * &Rat::from_int(n1 as i64))
                .expect("key is in the box");
        }
    }
    out
}

/// Expected number of degree-`j` irreducible factors of the first component
/// of a random weighted tuple of degree `nvec`, at a concrete `q`:
/// `M(q,j)/α_q(n) * [z^n] (T_j / S_j) A(z)` with `S_j, T_j` the weight and
/// first-component-weighted series under `z -> z^j`, and `A` the weighted
/// enumeration series.
pub fn expected_factor_count(w: &WeightFn, nvec: &DegreeVec, j: u32, q: u64) -> Result<Rat> {
    if j == 0 {
        return Err(Error::Domain("factor degree j must be positive".into()));
    }
    let g = w.weight_series(nvec)?;
    let alpha_series = alpha_series_numeric(&g, q)?;
    let alpha = alpha_series.coeff(nvec)?;
    if alpha.is_zero() {
        return Err(Error::Domain(format!(
            "the weighted count at {nvec} is zero; the distribution is undefined"
        )));
    }
    let s_j = g.substitute_power(j)?;
    let t_j = first_component_weighted(&g).substitute_power(j)?;
    let ratio = t_j.mul(&s_j.inverse()?)?;
    let coeff = ratio.mul(&alpha_series)?.coeff(nvec)?;
    let m = Rat::from_int(count_irreducibles(q, j)?);
    Ok(m * coeff / alpha)
}

/// Symbolic-`q` variant. The expectation is a ratio of polynomials in `q`;
/// numerator and denominator are returned separately, unreduced. Evaluating
/// `numerator/denominator` at an integer `q` equals the numeric route.
pub fn expected_factor_count_symbolic(
    w: &WeightFn,
    nvec: &DegreeVec,
    j: u32,
) -> Result<(UniPoly, UniPoly)> {
    if j == 0 {
        return Err(Error::Domain("factor degree j must be positive".into()));
    }
    let g = w.weight_series(nvec)?;
    let alpha_series = alpha_series_symbolic(&g)?;
    let alpha = alpha_series.coeff(nvec)?;
    if alpha.is_zero() {
        return Err(Error::Domain(format!(
            "the weighted count at {nvec} is identically zero"
        )));
    }
    let lift = |s: &MultiSeries<Rat>| s.map_coeffs(UniPoly::from_rat);
    let s_j = lift(&g.substitute_power(j)?);
    let t_j = lift(&first_component_weighted(&g).substitute_power(j)?);
    let ratio = t_j.mul(&s_j.inverse()?)?;
    let coeff = ratio.mul(&alpha_series)?.coeff(nvec)?;
    let m = count_irreducibles_symbolic(j)?;
    Ok((m.mul(&coeff), alpha))
}

/// The polynomial `Σ_{deg p = n} t^{f(p)}` in `q` and `t`: the `z^n`
/// coefficient of `Π_k (1/(1 - t z^k))^{M(q,k)}` with the counts `M(q,k)`
/// kept symbolic. The symbolic exponents are handled in the log domain:
/// each factor contributes `M(q,k) Σ_m t^m z^{km} / m`.
pub fn qt_polynomial(n: u32) -> Result<BiPoly> {
    let caps = DegreeVec::scalar(n);
    let mut log_sum = MultiSeries::<BiPoly>::zero(&caps);
    for k in 1..=n {
        let m_sym = BiPoly::from_q_poly(&count_irreducibles_symbolic(k)?);
        let mut m = 1u32;
        while k * m <= n {
            let term = m_sym.mul(&BiPoly::monomial(Rat::ratio(1, m as i64), 0, m));
            let key = DegreeVec::scalar(k * m);
            let previous = log_sum.coeff(&key)?;
            log_sum.set_coeff(key, previous.add(&term))?;
            m += 1;
        }
    }
    log_sum.exp()?.coeff(&DegreeVec::scalar(n))
}

/// True when the factor-count polynomial is invariant under exchanging `q`
/// and `t`.
pub fn qt_symmetry_check(n: u32) -> Result<bool> {
    let p = qt_polynomial(n)?;
    Ok(p.swap() == p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::{brute_expected_fj, brute_qt_polynomial, Factorizer, Field, GFPoly};

    fn dv(entries: &[u32]) -> DegreeVec {
        DegreeVec::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn profile_tracks_degree() {
        let f2 = Field::new(2, 1).unwrap();
        let mut fac = Factorizer::new(&f2);
        let p = GFPoly::parse(&f2, "x^6+x^4+x^3+x").unwrap();
        let profile = FactorCountProfile::of(&fac.factorize(&p).unwrap());
        assert_eq!(profile.count_of_degree(1), 4);
        assert_eq!(profile.count_of_degree(2), 1);
        assert_eq!(profile.total(), 5);
        assert_eq!(profile.weighted_degree(), 6);
    }

    #[test]
    fn expected_linear_factors_of_quadratics() {
        let w = WeightFn::all_one(1).unwrap();
        assert_eq!(
            expected_factor_count(&w, &dv(&[2]), 1, 2).unwrap(),
            Rat::ratio(3, 2)
        );
        // No degree-5 factor fits in degree 2.
        assert_eq!(
            expected_factor_count(&w, &dv(&[2]), 5, 2).unwrap(),
            Rat::zero()
        );
        // A vanishing total weight leaves no distribution to average over.
        let empty = WeightFn::min_lt_r(1, 1).unwrap();
        assert!(expected_factor_count(&empty, &dv(&[2]), 1, 2).is_err());
    }

    #[test]
    fn expected_quadratic_factors_of_sextics() {
        // Over GF(2) the only irreducible quadratic is x^2+x+1, and
        // summing its multiplicity over the 64 sextics gives
        // 2^4 + 2^2 + 2^0 = 21 (one term per power dividing).
        let w = WeightFn::all_one(1).unwrap();
        let f2 = Field::new(2, 1).unwrap();
        let expect = Rat::ratio(21, 64);
        assert_eq!(brute_expected_fj(&f2, &dv(&[6]), 2, &w).unwrap(), expect);
        assert_eq!(expected_factor_count(&w, &dv(&[6]), 2, 2).unwrap(), expect);
    }

    #[test]
    fn expected_counts_match_oracle() {
        for q in [2u64, 3] {
            let field = Field::new(q, 1).unwrap();
            for (w, label) in [
                (WeightFn::all_one(1).unwrap(), "all-one"),
                (WeightFn::min_lt_r(1, 2).unwrap(), "square-free"),
            ] {
                for n in 1..=5u32 {
                    for j in [1u32, 2] {
                        let formula = expected_factor_count(&w, &dv(&[n]), j, q).unwrap();
                        let brute = brute_expected_fj(&field, &dv(&[n]), j, &w).unwrap();
                        assert_eq!(formula, brute, "{label} q={q} n={n} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn expected_count_closed_expression_for_linear_factors() {
        // With all-one weights the expectation of linear factors is
        // q (q^n - 1) / ((q - 1) q^n).
        let w = WeightFn::all_one(1).unwrap();
        for q in [2i64, 3] {
            for n in 1..=6u32 {
                let got = expected_factor_count(&w, &dv(&[n]), 1, q as u64).unwrap();
                let qr = Rat::from_int(q);
                let expect = (qr.pow(n + 1) - &qr) / ((&qr - &Rat::one()) * qr.pow(n));
                assert_eq!(got, expect, "q={q} n={n}");
            }
        }
    }

    #[test]
    fn symbolic_expectation_specializes() {
        let w = WeightFn::all_one(1).unwrap();
        for n in 1..=4u32 {
            let (numerator, denominator) =
                expected_factor_count_symbolic(&w, &dv(&[n]), 1).unwrap();
            for q in [2u64, 3] {
                let direct = expected_factor_count(&w, &dv(&[n]), 1, q).unwrap();
                let via_sym = numerator.eval_int(q as i64) / denominator.eval_int(q as i64);
                assert_eq!(via_sym, direct, "n={n} q={q}");
            }
        }
    }

    #[test]
    fn factor_degrees_sum_to_polynomial_degree() {
        // Σ_j j E[f_j] = n under all-one weights.
        let w = WeightFn::all_one(1).unwrap();
        for n in 1..=6u32 {
            let mut sum = Rat::zero();
            for j in 1..=n {
                let e = expected_factor_count(&w, &dv(&[n]), j, 2).unwrap();
                sum += &(e * Rat::from_int(j as i64));
            }
            assert_eq!(sum, Rat::from_int(n as i64), "n={n}");
        }
    }

    #[test]
    fn qt_polynomial_degree_two() {
        // (q^2+q)/2 t^2 + (q^2-q)/2 t.
        let p = qt_polynomial(2).unwrap();
        let mut expect = BiPoly::zero();
        expect.add_term(2, 2, &Rat::ratio(1, 2));
        expect.add_term(1, 2, &Rat::ratio(1, 2));
        expect.add_term(2, 1, &Rat::ratio(1, 2));
        expect.add_term(1, 1, &Rat::ratio(-1, 2));
        assert_eq!(p, expect);
    }

    #[test]
    fn qt_polynomial_degree_zero_and_three() {
        assert_eq!(qt_polynomial(0).unwrap(), BiPoly::one());
        // (1/6)(t^3(q^3+3q^2+2q) + t^2(3q^3-3q^2) + t(2q^3-2q)).
        let p = qt_polynomial(3).unwrap();
        let sixth = Rat::ratio(1, 6);
        let mut expect = BiPoly::zero();
        for (qe, te, c) in [
            (3u32, 3u32, 1i64),
            (2, 3, 3),
            (1, 3, 2),
            (3, 2, 3),
            (2, 2, -3),
            (3, 1, 2),
            (1, 1, -2),
        ] {
            expect.add_term(qe, te, &(Rat::from_int(c) * &sixth));
        }
        assert_eq!(p, expect);
    }

    #[test]
    fn qt_symmetry_and_specializations() {
        for n in 0..=6u32 {
            assert!(qt_symmetry_check(n).unwrap(), "n={n}");
        }
        let f2 = Field::new(2, 1).unwrap();
        for n in 0..=5u32 {
            let p = qt_polynomial(n).unwrap();
            assert_eq!(
                p.eval_q(2),
                brute_qt_polynomial(&f2, n).unwrap(),
                "specialization at q=2, n={n}"
            );
            assert_eq!(
                p.eval_t_one(),
                UniPoly::monomial(Rat::one(), n),
                "t=1 at n={n}"
            );
        }
    }
}
