//! Closed-form count polynomials for the structured weight families, and
//! the bridge that evaluates a count through the series engine while
//! asserting agreement with the matching closed form.
//!
//! Every closed form here is an honest polynomial in `q`: case analysis on
//! the inputs guarantees all exponents are nonnegative before a term is
//! built, and violations are internal errors rather than silent wraps.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{Rat, UniPoly};
use crate::numtheory::{gcd_u64, DegreeVec};
use crate::series::{alpha_series_numeric, alpha_series_symbolic};
use crate::weights::{WeightFn, WeightKind};

fn monomial_checked(coeff: i64, exp: i64) -> Result<UniPoly> {
    let exp: u32 = exp
        .try_into()
        .map_err(|_| Error::Internal(format!("negative exponent {exp} in closed form")))?;
    Ok(UniPoly::monomial(Rat::from_int(coeff), exp))
}

/// Count of `d`-tuples of monic polynomials with degrees `nvec` whose gcd
/// has no irreducible factor of multiplicity `r` or more:
/// `q^N - q^{N+1-rd}` when `min(nvec) >= r`, else `q^N`.
pub fn closed_rfree_gcd(nvec: &DegreeVec, r: u32) -> Result<UniPoly> {
    if r == 0 {
        return Err(Error::Domain("power-free order r must be positive".into()));
    }
    let total = nvec.total() as i64;
    let d = nvec.dim() as i64;
    let mut out = monomial_checked(1, total)?;
    if nvec.min_entry() >= r {
        // min >= r forces N >= rd, so N + 1 - rd >= 1.
        out = out.sub(&monomial_checked(1, total + 1 - (r as i64) * d)?);
    }
    Ok(out)
}

/// Count of `d`-tuples whose gcd only has irreducible multiplicities
/// congruent to `0, .., r-1` modulo `m` (with `1 <= r < m`). Assembled
/// term-by-term from the two finite geometric progressions so that every
/// exponent stays a nonnegative integer.
pub fn closed_residue(nvec: &DegreeVec, r: u32, m: u32) -> Result<UniPoly> {
    if r == 0 || r >= m {
        return Err(Error::Domain(format!(
            "residue window needs 1 <= r < m, got r={r}, m={m}"
        )));
    }
    let total = nvec.total() as i64;
    let d = nvec.dim() as i64;
    let min = nvec.min_entry() as i64;
    let step = (m as i64) * d - 1; // exponent gap q^{-(md-1)} per term
    let mut out = UniPoly::zero();
    for t in 0..=(min / m as i64) {
        out = out.add(&monomial_checked(1, total - t * step)?);
    }
    if min >= r as i64 {
        let base = total - (r as i64) * d + 1;
        for t in 0..=((min - r as i64) / m as i64) {
            out = out.sub(&monomial_checked(1, base - t * step)?);
        }
    }
    Ok(out)
}

/// Count of monic polynomials of degree `n` whose irreducible
/// multiplicities all lie in the monoid generated by coprime `a, b`:
/// `Σ_{ai+bj=n} q^{i+j} - Σ_{ai+bj=n-ab} q^{i+j+1}`, empty sums being 0.
pub fn closed_monoid(n: u32, a: u32, b: u32) -> Result<UniPoly> {
    if a == 0 || b == 0 || gcd_u64(a as u64, b as u64) != 1 {
        return Err(Error::Domain(format!(
            "monoid generators must be coprime positive integers, got ({a},{b})"
        )));
    }
    let representation_sum = |target: i64, shift: i64| -> Result<UniPoly> {
        let mut out = UniPoly::zero();
        if target < 0 {
            return Ok(out);
        }
        let mut i = 0i64;
        while i * a as i64 <= target {
            let rest = target - i * a as i64;
            if rest % b as i64 == 0 {
                let j = rest / b as i64;
                out = out.add(&monomial_checked(1, i + j + shift)?);
            }
            i += 1;
        }
        Ok(out)
    };
    let positive = representation_sum(n as i64, 0)?;
    let negative = representation_sum(n as i64 - (a as i64) * (b as i64), 1)?;
    Ok(positive.sub(&negative))
}

/// Cancellation-free evaluation of the same monoid count, valid for
/// `a < b` with `a = b = 1 (mod b-a)` and `n` past the Frobenius number
/// `ab-a-b`. The two sums collapse into short arithmetic progressions of
/// exponents; the fractional parts become exact modular remainders.
pub fn closed_monoid_improved(n: u32, a: u32, b: u32) -> Result<UniPoly> {
    if a == 0 || b == 0 || gcd_u64(a as u64, b as u64) != 1 {
        return Err(Error::Domain(format!(
            "monoid generators must be coprime positive integers, got ({a},{b})"
        )));
    }
    if a >= b {
        return Err(Error::Domain(format!("need a < b, got ({a},{b})")));
    }
    let gap = b - a;
    if a % gap != 1 % gap || b % gap != 1 % gap {
        return Err(Error::Domain(format!(
            "need a = b = 1 (mod b-a), got ({a},{b})"
        )));
    }
    let frobenius = (a as i64) * (b as i64) - (a as i64) - (b as i64);
    if (n as i64) <= frobenius {
        return Err(Error::Domain(format!(
            "degree {n} not above the Frobenius number {frobenius} of <{a},{b}>"
        )));
    }
    let (n, a, b, gap) = (n as i64, a as i64, b as i64, gap as i64);

    // Least positive-residue inverses; the result does not depend on the
    // representative choice.
    let inv_mod = |x: i64, modulus: i64| -> i64 {
        if modulus == 1 {
            return 0;
        }
        (1..modulus)
            .find(|y| (x % modulus) * y % modulus == 1)
            .expect("coprime generators")
    };

    // Largest i + j with a i + b j = n: j0 is the least nonnegative j.
    let j0 = (inv_mod(b, a) * (n % a)) % a;
    debug_assert_eq!((n - b * j0).rem_euclid(a), 0);
    let top = (n - gap * j0) / a; // i0 + j0

    // Smallest surviving exponent of the subtracted sum.
    let u = (inv_mod(a, b) * (n % b)) % b;
    debug_assert_eq!((n + gap * u).rem_euclid(b), 0);
    let bottom = (n + gap * u) / b - a + 1; // i1 + j1 + 1

    let terms = (a - 1) / gap;
    let mut out = UniPoly::zero();
    for t in 0..=terms {
        out = out.add(&monomial_checked(1, top - t * gap)?);
    }
    for t in 0..terms {
        out = out.sub(&monomial_checked(1, bottom + t * gap)?);
    }
    Ok(out)
}

/// Count of monic polynomials of degree `n >= 2` with no irreducible factor
/// of multiplicity exactly 1: `q^{⌊n/2⌋} + q^{⌊n/2⌋-1} - q^{⌊(n-1)/3⌋}`.
pub fn closed_no_mult_one(n: u32) -> Result<UniPoly> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "the multiplicity-free-of-1 count needs degree >= 2, got {n}"
        )));
    }
    let half = (n / 2) as i64;
    let third = ((n - 1) / 3) as i64;
    Ok(monomial_checked(1, half)?
        .add(&monomial_checked(1, half - 1)?)
        .sub(&monomial_checked(1, third)?))
}

/// Checks the six-step ladder satisfied by the no-multiplicity-1 counts,
/// as polynomial identities:
/// `α(6k+2) = α(6k+3)`, `q α(6k+3) = α(6k+4)`, `α(6k+4) = α(6k+5)`,
/// `q α(6k+5) = α(6k+7)`.
pub fn residue_chain_check(k: u32) -> Result<bool> {
    let alpha = |n: u32| closed_no_mult_one(n);
    let q = UniPoly::var();
    let base = 6 * k;
    Ok(alpha(base + 2)? == alpha(base + 3)?
        && q.mul(&alpha(base + 3)?) == alpha(base + 4)?
        && alpha(base + 4)? == alpha(base + 5)?
        && q.mul(&alpha(base + 5)?) == alpha(base + 7)?)
}

/// How a count should be evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QMode {
    Symbolic,
    Numeric(u64),
}

/// A count together with the routes that produced it. When both a symbolic
/// and a numeric value are present, the numeric one is the evaluation of
/// the symbolic one.
#[derive(Clone, Debug)]
pub struct CountResult {
    pub symbolic: Option<UniPoly>,
    pub numeric: Option<Rat>,
    pub q: Option<u64>,
    /// Routes that were evaluated and agreed, e.g. `"series"`,
    /// `"closed:rfree(r=2)"`.
    pub provenance: Vec<String>,
}

impl CountResult {
    pub fn value_string(&self) -> String {
        match (&self.numeric, &self.symbolic) {
            (Some(v), _) => v.to_string(),
            (None, Some(p)) => p.render("q"),
            (None, None) => "?".to_string(),
        }
    }
}

impl fmt::Display for CountResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value_string())
    }
}

/// The closed form matching a weight kind, if one exists.
pub fn closed_form_for(w: &WeightFn, nvec: &DegreeVec) -> Result<Option<(String, UniPoly)>> {
    let form = match w.kind() {
        WeightKind::AllOne => Some((
            "closed:all-one".to_string(),
            monomial_checked(1, nvec.total() as i64)?,
        )),
        WeightKind::MinLtR { r } => {
            Some((format!("closed:rfree(r={r})"), closed_rfree_gcd(nvec, *r)?))
        }
        WeightKind::ResidueWindow { m, r } => Some((
            format!("closed:mod(m={m},r={r})"),
            closed_residue(nvec, *r, *m)?,
        )),
        WeightKind::MonoidAb { a, b } => Some((
            format!("closed:monoid(a={a},b={b})"),
            closed_monoid(nvec.get(0), *a, *b)?,
        )),
        WeightKind::Table { .. } => None,
    };
    Ok(form)
}

/// Reads the count `α_q(nvec)` off the weighted enumeration series, with the
/// truncation box set to `nvec` itself. When the weight kind has a closed
/// form, it is evaluated too and any mismatch is an error: route agreement
/// is the contract, never silently reconciled.
pub fn alpha_of(w: &WeightFn, nvec: &DegreeVec, mode: QMode) -> Result<CountResult> {
    let g = w.weight_series(nvec)?;
    let closed = closed_form_for(w, nvec)?;
    let mut provenance = vec!["series".to_string()];
    match mode {
        QMode::Symbolic => {
            let series_value = alpha_series_symbolic(&g)?.coeff(nvec)?;
            if let Some((name, form)) = closed {
                if form != series_value {
                    return Err(Error::Disagreement(format!(
                        "{name} gives {} but the series gives {} at {nvec}",
                        form.render("q"),
                        series_value.render("q")
                    )));
                }
                provenance.push(name);
            }
            Ok(CountResult {
                symbolic: Some(series_value),
                numeric: None,
                q: None,
                provenance,
            })
        }
        QMode::Numeric(q) => {
            let series_value = alpha_series_numeric(&g, q)?.coeff(nvec)?;
            let mut symbolic = None;
            if let Some((name, form)) = closed {
                let closed_value = form.eval_int(q as i64);
                if closed_value != series_value {
                    return Err(Error::Disagreement(format!(
                        "{name} gives {closed_value} but the series gives {series_value} \
                         at {nvec}, q={q}"
                    )));
                }
                provenance.push(name);
                symbolic = Some(form);
            }
            Ok(CountResult {
                symbolic,
                numeric: Some(series_value),
                q: Some(q),
                provenance,
            })
        }
    }
}
