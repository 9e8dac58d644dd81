//! Brute-force oracles: every weighted count is recomputed here by
//! exhaustively enumerating tuples of monic polynomials and factoring each
//! component. Nothing in this module touches the series engine or the
//! closed forms, so agreement with them is meaningful evidence.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{Rat, UniPoly};
use crate::ffpoly::{Field, GFPoly};
use crate::numtheory::DegreeVec;
use crate::weights::WeightFn;

/// Factorizations of every monic polynomial of degree up to a bound,
/// addressed by `(degree, enumeration index)`. Factors are stored as ids
/// into a registry of irreducibles, ordered by degree then index; each
/// factor list is sorted by id.
pub struct FactorTable<'f> {
    field: &'f Field,
    per_degree: Vec<Vec<Vec<(u32, u32)>>>,
    irreducibles: Vec<GFPoly>,
    irreducible_degrees: Vec<u32>,
    counts_up_to: Vec<usize>,
}

impl<'f> FactorTable<'f> {
    /// Factors all `Σ_{n<=max_degree} q^n` monic polynomials bottom-up: the
    /// smallest irreducible factor is found by trial division, the rest is
    /// looked up at a lower degree.
    pub fn build(field: &'f Field, max_degree: u32) -> Result<FactorTable<'f>> {
        field.check_budget(max_degree)?;
        let mut table = FactorTable {
            field,
            per_degree: vec![vec![vec![]]], // degree 0: the constant 1
            irreducibles: Vec::new(),
            irreducible_degrees: Vec::new(),
            counts_up_to: vec![0], // number of irreducibles of degree <= d
        };
        for n in 1..=max_degree {
            let count = field.monic_count(n) as u64;
            let mut lists: Vec<Vec<(u32, u32)>> = Vec::with_capacity(count as usize);
            let candidate_limit = table.counts_up_to[(n as usize) / 2];
            for index in 0..count {
                let p = field.monic_from_index(n, index);
                let mut smallest: Option<(u32, GFPoly)> = None;
                for id in 0..candidate_limit {
                    let s = &table.irreducibles[id];
                    let (quot, rem) = field.poly_div_rem(&p, s)?;
                    if rem.is_zero() {
                        smallest = Some((id as u32, quot));
                        break;
                    }
                }
                let factors = match smallest {
                    Some((id, quot)) => {
                        let qd = quot.degree().expect("proper divisor") as u32;
                        let qi = field.monic_index(&quot);
                        let rest = &table.per_degree[qd as usize][qi as usize];
                        // The quotient's factors are all >= id, so the merge
                        // touches only the front.
                        let mut merged = Vec::with_capacity(rest.len() + 1);
                        match rest.first() {
                            Some(&(first_id, m)) if first_id == id => {
                                merged.push((id, m + 1));
                                merged.extend_from_slice(&rest[1..]);
                            }
                            _ => {
                                merged.push((id, 1));
                                merged.extend_from_slice(rest);
                            }
                        }
                        merged
                    }
                    None => {
                        // No factor of degree <= n/2: irreducible.
                        let id = table.irreducibles.len() as u32;
                        table.irreducibles.push(p);
                        table.irreducible_degrees.push(n);
                        vec![(id, 1)]
                    }
                };
                lists.push(factors);
            }
            table.per_degree.push(lists);
            table.counts_up_to.push(table.irreducibles.len());
        }
        Ok(table)
    }

    pub fn max_degree(&self) -> u32 {
        (self.per_degree.len() - 1) as u32
    }

    /// Sorted `(irreducible id, multiplicity)` pairs for the monic
    /// polynomial with the given degree and enumeration index.
    pub fn factors(&self, degree: u32, index: u64) -> &[(u32, u32)] {
        &self.per_degree[degree as usize][index as usize]
    }

    pub fn irreducible(&self, id: u32) -> &GFPoly {
        &self.irreducibles[id as usize]
    }

    pub fn degree_of(&self, id: u32) -> u32 {
        self.irreducible_degrees[id as usize]
    }

    /// Total factor count (with multiplicity) of the polynomial at
    /// `(degree, index)`.
    pub fn total_factor_count(&self, degree: u32, index: u64) -> u64 {
        self.factors(degree, index)
            .iter()
            .map(|&(_, m)| m as u64)
            .sum()
    }
}

/// Odometer over the component indices of a tuple with per-component radix
/// `q^{n_c}`; visits all `q^N` tuples.
struct TupleIndices {
    radices: Vec<u64>,
    current: Vec<u64>,
    done: bool,
}

impl TupleIndices {
    fn new(field: &Field, nvec: &DegreeVec) -> TupleIndices {
        let radices: Vec<u64> = nvec
            .entries()
            .iter()
            .map(|&n| field.monic_count(n) as u64)
            .collect();
        TupleIndices {
            current: vec![0; radices.len()],
            radices,
            done: false,
        }
    }

    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        for i in (0..self.current.len()).rev() {
            self.current[i] += 1;
            if self.current[i] < self.radices[i] {
                return true;
            }
            self.current[i] = 0;
        }
        self.done = true;
        false
    }
}

fn check_tuple_budget(field: &Field, nvec: &DegreeVec) -> Result<()> {
    let total: u32 = nvec
        .total()
        .try_into()
        .map_err(|_| Error::Domain("degree total too large".into()))?;
    let needed = field.monic_count(total);
    if needed > field.stream_budget() as u128 {
        return Err(Error::Budget {
            needed,
            budget: field.stream_budget(),
        });
    }
    Ok(())
}

fn check_table_depth(table: &FactorTable, nvec: &DegreeVec) -> Result<()> {
    let max_entry = nvec.entries().iter().copied().max().unwrap_or(0);
    if max_entry > table.max_degree() {
        return Err(Error::Shape(format!(
            "factor table reaches degree {} but the degree vector {nvec} needs {max_entry}",
            table.max_degree()
        )));
    }
    Ok(())
}

/// Shared tuple sweep: for every `d`-tuple of monic polynomials with the
/// prescribed degrees, hands the visitor the merged multiplicity profile as
/// parallel arrays (`ids`, row-major `mults` of width `d`) plus the raw
/// component indices.
fn for_each_tuple(
    field: &Field,
    table: &FactorTable,
    nvec: &DegreeVec,
    mut visit: impl FnMut(&[u64], &[u32], &[u32]),
) {
    let d = nvec.dim();
    let mut indices = TupleIndices::new(field, nvec);
    let mut ids: Vec<u32> = Vec::new();
    let mut mults: Vec<u32> = Vec::new();
    loop {
        ids.clear();
        mults.clear();
        for (c, (&idx, &n)) in indices.current.iter().zip(nvec.entries()).enumerate() {
            for &(id, m) in table.factors(n, idx) {
                let pos = match ids.iter().position(|&x| x == id) {
                    Some(pos) => pos,
                    None => {
                        ids.push(id);
                        mults.resize(mults.len() + d, 0);
                        ids.len() - 1
                    }
                };
                mults[pos * d + c] = m;
            }
        }
        visit(&indices.current, &ids, &mults);
        if !indices.advance() {
            break;
        }
    }
}

/// Sum of tuple weights over all `d`-tuples of monic polynomials of degree
/// `nvec`, where a tuple's weight is the product of `w` over the
/// multiplicity vectors of the irreducibles dividing it. Exhaustive and
/// exact.
pub fn brute_alpha(field: &Field, nvec: &DegreeVec, w: &WeightFn) -> Result<Rat> {
    let max_degree = nvec.entries().iter().copied().max().unwrap_or(0);
    let table = FactorTable::build(field, max_degree)?;
    brute_alpha_with(&table, nvec, w)
}

/// [`brute_alpha`] against a prebuilt factor table, for sweeps.
pub fn brute_alpha_with(table: &FactorTable, nvec: &DegreeVec, w: &WeightFn) -> Result<Rat> {
    let field = table.field;
    if w.dim() != nvec.dim() {
        return Err(Error::Shape(format!(
            "degree vector {nvec} has dimension {}, weights expect {}",
            nvec.dim(),
            w.dim()
        )));
    }
    check_table_depth(table, nvec)?;
    check_tuple_budget(field, nvec)?;
    let d = nvec.dim();
    let mut sum = Rat::zero();
    for_each_tuple(field, table, nvec, |_, ids, mults| {
        let mut weight = Rat::one();
        for pos in 0..ids.len() {
            let factor = w.evaluate_raw(&mults[pos * d..(pos + 1) * d]);
            if factor.is_zero() {
                return;
            }
            weight *= &factor;
        }
        sum += &weight;
    });
    Ok(sum)
}

/// Independent second oracle for the power-free-gcd counts: computes the
/// polynomial gcd of each tuple by the Euclidean algorithm and inspects its
/// factorization directly, never touching multiplicity vectors.
pub fn brute_rfree_gcd_count(field: &Field, nvec: &DegreeVec, r: u32) -> Result<BigInt> {
    let max_degree = nvec.entries().iter().copied().max().unwrap_or(0);
    let table = FactorTable::build(field, max_degree)?;
    brute_rfree_gcd_count_with(&table, nvec, r)
}

/// [`brute_rfree_gcd_count`] against a prebuilt factor table.
pub fn brute_rfree_gcd_count_with(table: &FactorTable, nvec: &DegreeVec, r: u32) -> Result<BigInt> {
    let field = table.field;
    if r == 0 {
        return Err(Error::Domain("power-free order r must be positive".into()));
    }
    check_table_depth(table, nvec)?;
    check_tuple_budget(field, nvec)?;
    // Polynomial lists per component degree, built once.
    let polys: Vec<Vec<GFPoly>> = nvec
        .entries()
        .iter()
        .map(|&n| {
            (0..field.monic_count(n) as u64)
                .map(|i| field.monic_from_index(n, i))
                .collect()
        })
        .collect();
    let mut count = BigInt::zero();
    let mut indices = TupleIndices::new(field, nvec);
    loop {
        let mut gcd = polys[0][indices.current[0] as usize].clone();
        for c in 1..nvec.dim() {
            if gcd.is_one() {
                break;
            }
            gcd = field.poly_gcd_monic(&gcd, &polys[c][indices.current[c] as usize])?;
        }
        let gd = gcd.degree().expect("gcd of monic polynomials") as u32;
        let power_free = table
            .factors(gd, field.monic_index(&gcd))
            .iter()
            .all(|&(_, m)| m < r);
        if power_free {
            count += 1;
        }
        if !indices.advance() {
            break;
        }
    }
    Ok(count)
}

/// Expected number of degree-`j` irreducible factors of the first tuple
/// component, under the weight distribution: `Σ f_j(p_1) wt(p) / Σ wt(p)`.
pub fn brute_expected_fj(field: &Field, nvec: &DegreeVec, j: u32, w: &WeightFn) -> Result<Rat> {
    let max_degree = nvec.entries().iter().copied().max().unwrap_or(0);
    let table = FactorTable::build(field, max_degree)?;
    brute_expected_fj_with(&table, nvec, j, w)
}

/// [`brute_expected_fj`] against a prebuilt factor table.
pub fn brute_expected_fj_with(
    table: &FactorTable,
    nvec: &DegreeVec,
    j: u32,
    w: &WeightFn,
) -> Result<Rat> {
    let field = table.field;
    if j == 0 {
        return Err(Error::Domain("factor degree j must be positive".into()));
    }
    if w.dim() != nvec.dim() {
        return Err(Error::Shape(format!(
            "degree vector {nvec} has dimension {}, weights expect {}",
            nvec.dim(),
            w.dim()
        )));
    }
    check_table_depth(table, nvec)?;
    check_tuple_budget(field, nvec)?;
    let d = nvec.dim();
    let mut numerator = Rat::zero();
    let mut denominator = Rat::zero();
    for_each_tuple(field, table, nvec, |indices, ids, mults| {
        let mut weight = Rat::one();
        for pos in 0..ids.len() {
            let factor = w.evaluate_raw(&mults[pos * d..(pos + 1) * d]);
            if factor.is_zero() {
                return;
            }
            weight *= &factor;
        }
        let fj: u64 = table
            .factors(nvec.get(0), indices[0])
            .iter()
            .filter(|&&(id, _)| table.degree_of(id) == j)
            .map(|&(_, m)| m as u64)
            .sum();
        denominator += &weight;
        if fj > 0 {
            numerator += &(weight * Rat::from_int(fj));
        }
    });
    if denominator.is_zero() {
        return Err(Error::Domain(
            "total weight is zero; the distribution is undefined".into(),
        ));
    }
    Ok(numerator / denominator)
}

/// The factor-count polynomial `Σ_p t^{f(p)}` over monic polynomials of
/// degree `n`, where `f` counts irreducible factors with multiplicity.
/// Returned as a polynomial in `t` with integer coefficients.
pub fn brute_qt_polynomial(field: &Field, n: u32) -> Result<UniPoly> {
    field.check_budget(n)?;
    let table = FactorTable::build(field, n)?;
    let mut out = UniPoly::zero();
    for index in 0..field.monic_count(n) as u64 {
        let f = table.total_factor_count(n, index);
        out.add_term(
            f.try_into()
                .map_err(|_| Error::Internal("factor count overflow".into()))?,
            &Rat::one(),
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffpoly::Factorizer;
    use crate::numtheory::count_irreducibles;

    fn dv(entries: &[u32]) -> DegreeVec {
        DegreeVec::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn factor_table_agrees_with_factorizer() {
        let field = Field::new(2, 1).unwrap();
        let table = FactorTable::build(&field, 7).unwrap();
        let mut fac = Factorizer::new(&field);
        for n in 0..=7u32 {
            for index in 0..field.monic_count(n) as u64 {
                let p = field.monic_from_index(n, index);
                let expected = fac.factorize(&p).unwrap();
                let got: Vec<(GFPoly, u32)> = table
                    .factors(n, index)
                    .iter()
                    .map(|&(id, m)| (table.irreducible(id).clone(), m))
                    .collect();
                assert_eq!(got, expected.factors(), "p={p}");
            }
        }
    }

    #[test]
    fn registry_counts_match_formula() {
        let field = Field::new(3, 1).unwrap();
        let table = FactorTable::build(&field, 6).unwrap();
        for n in 1..=6u32 {
            let got = table
                .irreducible_degrees
                .iter()
                .filter(|&&d| d == n)
                .count();
            assert_eq!(
                BigInt::from(got),
                count_irreducibles(3, n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn alpha_with_all_one_weights_counts_everything() {
        for q in [2u64, 3] {
            let field = Field::new(q, 1).unwrap();
            for n in 0..=6u32 {
                let w = WeightFn::all_one(1).unwrap();
                let got = brute_alpha(&field, &dv(&[n]), &w).unwrap();
                assert_eq!(got, Rat::from_int(BigInt::from(q).pow(n)));
            }
            let w2 = WeightFn::all_one(2).unwrap();
            let got = brute_alpha(&field, &dv(&[2, 3]), &w2).unwrap();
            assert_eq!(got, Rat::from_int(BigInt::from(q).pow(5)));
        }
    }

    #[test]
    fn alpha_examples() {
        let f2 = Field::new(2, 1).unwrap();
        // Square-free monic quadratics over GF(2): q^2 - q = 2.
        let w = WeightFn::min_lt_r(1, 2).unwrap();
        assert_eq!(brute_alpha(&f2, &dv(&[2]), &w).unwrap(), Rat::from_int(2));
        // Coprime pairs of monic linear polynomials: q^2 - q = 2.
        let w = WeightFn::min_lt_r(2, 1).unwrap();
        assert_eq!(
            brute_alpha(&f2, &dv(&[1, 1]), &w).unwrap(),
            Rat::from_int(2)
        );
        // Multiplicities in the monoid <2,3>, degree 3: only the two cubes
        // of linears qualify.
        let w = WeightFn::monoid_ab(2, 3).unwrap();
        assert_eq!(brute_alpha(&f2, &dv(&[3]), &w).unwrap(), Rat::from_int(2));
    }

    #[test]
    fn gcd_oracle_matches_multiplicity_oracle() {
        let f2 = Field::new(2, 1).unwrap();
        for r in [1u32, 2] {
            let w = WeightFn::min_lt_r(2, r).unwrap();
            for n1 in 0..=4u32 {
                for n2 in 0..=4u32 {
                    let nvec = dv(&[n1, n2]);
                    let via_mults = brute_alpha(&f2, &nvec, &w).unwrap();
                    let via_gcd = brute_rfree_gcd_count(&f2, &nvec, r).unwrap();
                    assert_eq!(via_mults, Rat::from_int(via_gcd), "r={r} n=({n1},{n2})");
                }
            }
        }
    }

    #[test]
    fn expected_factor_count_by_hand() {
        let f2 = Field::new(2, 1).unwrap();
        let w = WeightFn::all_one(1).unwrap();
        // The four monic quadratics have 2, 2, 2 and 0 linear factors.
        assert_eq!(
            brute_expected_fj(&f2, &dv(&[2]), 1, &w).unwrap(),
            Rat::ratio(3, 2)
        );
        // No degree-3 factor fits in degree 2.
        assert_eq!(
            brute_expected_fj(&f2, &dv(&[2]), 3, &w).unwrap(),
            Rat::zero()
        );
    }

    #[test]
    fn expected_factor_count_rejects_zero_distribution() {
        let f2 = Field::new(2, 1).unwrap();
        // min < 1 in one dimension only admits the constant-1 polynomial,
        // so at degree 2 the total weight vanishes.
        let w = WeightFn::min_lt_r(1, 1).unwrap();
        assert!(matches!(
            brute_expected_fj(&f2, &dv(&[2]), 1, &w),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn qt_polynomial_small_degrees() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(brute_qt_polynomial(&f2, 0).unwrap().render("t"), "1");
        assert_eq!(brute_qt_polynomial(&f2, 1).unwrap().render("t"), "2*t");
        // Degree 2: three products of linears and one irreducible quadratic.
        assert_eq!(
            brute_qt_polynomial(&f2, 2).unwrap().render("t"),
            "3*t^2 + t"
        );
    }

    #[test]
    fn shallow_table_rejected() {
        let field = Field::new(2, 1).unwrap();
        let table = FactorTable::build(&field, 3).unwrap();
        let w = WeightFn::all_one(1).unwrap();
        assert!(matches!(
            brute_alpha_with(&table, &dv(&[5]), &w),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn budget_propagates() {
        let mut field = Field::new(2, 1).unwrap();
        field.set_stream_budget(16);
        let w = WeightFn::all_one(2).unwrap();
        assert!(matches!(
            brute_alpha(&field, &dv(&[3, 3]), &w),
            Err(Error::Budget { .. })
        ));
    }
}
