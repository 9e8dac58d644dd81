//! Elementary number theory and the count of monic irreducible polynomials
//! of a given degree over a finite field with `q` elements, numeric and
//! symbolic in `q`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{Rat, UniPoly};

/// Möbius function. Trial division suffices: inputs stay below the series
/// truncation caps.
pub fn moebius(n: u64) -> Result<i32> {
    if n == 0 {
        return Err(Error::Domain("moebius(0) is undefined".into()));
    }
    let mut m = n;
    let mut distinct = 0u32;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return Ok(0); // not square-free
            }
            distinct += 1;
        }
        p += 1;
    }
    if m > 1 {
        distinct += 1;
    }
    Ok(if distinct.is_multiple_of(2) { 1 } else { -1 })
}

/// All divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::Domain("divisors(0) is undefined".into()));
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Degree vector `(n_1, ..., n_d)` of a tuple of polynomials, `d >= 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeVec(Vec<u32>);

impl DegreeVec {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Domain(
                "degree vector must have dimension >= 1".into(),
            ));
        }
        Ok(DegreeVec(entries))
    }

    pub fn scalar(n: u32) -> Self {
        DegreeVec(vec![n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Sum of the entries.
    pub fn total(&self) -> u64 {
        self.0.iter().map(|&n| n as u64).sum()
    }

    pub fn min_entry(&self) -> u32 {
        *self.0.iter().min().expect("dimension >= 1")
    }

    pub fn is_all_zero(&self) -> bool {
        self.0.iter().all(|&n| n == 0)
    }

    /// Gcd of the entries with `gcd(x, 0) = x`; rejected when every entry
    /// is zero.
    pub fn gcd(&self) -> Result<u32> {
        if self.is_all_zero() {
            return Err(Error::Domain("gcd of the all-zero degree vector".into()));
        }
        Ok(self.0.iter().fold(0u64, |acc, &n| gcd_u64(acc, n as u64)) as u32)
    }

    pub fn leq(&self, other: &DegreeVec) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise multiple `k * n`.
    pub fn scaled(&self, k: u32) -> DegreeVec {
        DegreeVec(self.0.iter().map(|&n| n * k).collect())
    }

    /// Componentwise quotient `n / k` when every entry is divisible.
    pub fn div_exact(&self, k: u32) -> Option<DegreeVec> {
        if k == 0 {
            return None;
        }
        self.0
            .iter()
            .map(|&n| (n % k == 0).then_some(n / k))
            .collect::<Option<Vec<_>>>()
            .map(DegreeVec)
    }

    pub fn checked_add(&self, other: &DegreeVec) -> Option<DegreeVec> {
        if self.dim() != other.dim() {
            return None;
        }
        Some(DegreeVec(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }
}

impl fmt::Display for DegreeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim() == 1 {
            write!(f, "{}", self.0[0])
        } else {
            let parts: Vec<String> = self.0.iter().map(|n| n.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

impl fmt::Debug for DegreeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Number of monic irreducible polynomials of degree `n` over a field with
/// `q` elements: `(1/n) * Σ_{k|n} μ(n/k) q^k`. The division is always exact
/// for integer `q >= 2`.
pub fn count_irreducibles(q: u64, n: u32) -> Result<BigInt> {
    if q < 2 {
        return Err(Error::Domain(format!("field size {q} < 2")));
    }
    if n == 0 {
        return Err(Error::Domain("degree must be positive".into()));
    }
    let mut sum = BigInt::zero();
    for k in divisors(n as u64)? {
        let mu = moebius(n as u64 / k)?;
        sum += BigInt::from(mu) * BigInt::from(q).pow(k as u32);
    }
    let (quot, rem) = num_integer_div_rem(&sum, &BigInt::from(n));
    if !rem.is_zero() {
        return Err(Error::Internal(format!(
            "irreducible count sum {sum} not divisible by {n}"
        )));
    }
    Ok(quot)
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    (a / b, a % b)
}

/// The same count as a polynomial in a symbolic `q`, with exact rational
/// coefficients: `(1/n) * Σ_{k|n} μ(n/k) q^k`.
pub fn count_irreducibles_symbolic(n: u32) -> Result<UniPoly> {
    if n == 0 {
        return Err(Error::Domain("degree must be positive".into()));
    }
    let inv_n = Rat::ratio(1, n as i64);
    let mut p = UniPoly::zero();
    for k in divisors(n as u64)? {
        let mu = moebius(n as u64 / k)?;
        p.add_term(k as u32, &(Rat::from_int(mu as i64) * &inv_n));
    }
    Ok(p)
}
