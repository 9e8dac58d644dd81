//! Finite-field polynomial arithmetic, exhaustive enumeration and
//! factorization. Everything here is deliberately elementary: fields are
//! small, elements are table-driven, and irreducibility comes down to
//! divisibility by smaller irreducibles. This module is the ground truth
//! the closed forms and the series engine are certified against.

mod oracle;

pub use oracle::{
    brute_alpha, brute_alpha_with, brute_expected_fj, brute_expected_fj_with, brute_qt_polynomial,
    brute_rfree_gcd_count, brute_rfree_gcd_count_with, FactorTable,
};

use std::fmt;

use crate::error::{Error, Result};

/// Largest field size `p^k` a field may be built with by default.
pub const DEFAULT_FIELD_BOUND: u64 = 16;
/// Default cap on the length of any exhaustive enumeration stream.
pub const DEFAULT_STREAM_BUDGET: u64 = 10_000_000;

/// A concrete finite field with `q = p^k` elements.
///
/// Elements are encoded as integers in `[0, q)`: the base-`p` digits of the
/// encoding are the coefficients of the residue polynomial modulo an
/// irreducible `modulus` of degree `k`. The encoding fixes the total order
/// used everywhere for deterministic enumeration. Arithmetic is performed
/// through tables built once at construction.
pub struct Field {
    p: u64,
    k: u32,
    q: u64,
    modulus: Vec<u64>,
    add_t: Vec<u64>,
    mul_t: Vec<u64>,
    neg_t: Vec<u64>,
    inv_t: Vec<u64>,
    budget: u64,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field(GF({}))", self.designator())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Plain polynomial arithmetic over the prime field GF(p), used only while
/// bootstrapping the extension-field tables.
mod prime_poly {
    /// Trims trailing zeros.
    pub fn norm(mut v: Vec<u64>) -> Vec<u64> {
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &ca) in a.iter().enumerate() {
            for (j, &cb) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + ca * cb) % p;
            }
        }
        norm(out)
    }

    /// Remainder of `a` modulo monic `m`.
    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        let dm = m.len() - 1;
        while r.len() > dm {
            let lead = r[r.len() - 1] % p;
            let shift = r.len() - 1 - dm;
            if lead != 0 {
                for (i, &mc) in m.iter().enumerate() {
                    let idx = shift + i;
                    r[idx] = (r[idx] + p * p - (lead * mc) % p) % p;
                }
            }
            r.pop();
        }
        norm(r)
    }

    /// Divisibility test for monic divisor `b`.
    pub fn divides(b: &[u64], a: &[u64], p: u64) -> bool {
        rem(a, b, p).is_empty()
    }
}

impl Field {
    /// Builds GF(p^k) with the default size bound of 16. The modulus is the
    /// least monic irreducible of degree `k` in the enumeration order.
    pub fn new(p: u64, k: u32) -> Result<Field> {
        Field::with_bound(p, k, DEFAULT_FIELD_BOUND)
    }

    pub fn with_bound(p: u64, k: u32, size_bound: u64) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::Domain(format!("{p} is not prime")));
        }
        if k == 0 {
            return Err(Error::Domain("extension degree must be positive".into()));
        }
        let q = p
            .checked_pow(k)
            .filter(|&q| q <= size_bound)
            .ok_or_else(|| {
                Error::Domain(format!("field size {p}^{k} exceeds the bound {size_bound}"))
            })?;

        let modulus = Self::least_irreducible_modulus(p, k);

        // Element tables. Digits of an encoding are residue-polynomial
        // coefficients, low degree first.
        let digits = |mut e: u64| -> Vec<u64> {
            let mut v = Vec::with_capacity(k as usize);
            for _ in 0..k {
                v.push(e % p);
                e /= p;
            }
            v
        };
        let encode = |v: &[u64]| -> u64 {
            let mut e = 0u64;
            for &c in v.iter().rev() {
                e = e * p + c;
            }
            e
        };

        let qs = q as usize;
        let mut add_t = vec![0u64; qs * qs];
        let mut mul_t = vec![0u64; qs * qs];
        let mut neg_t = vec![0u64; qs];
        for a in 0..q {
            let da = digits(a);
            neg_t[a as usize] = encode(&da.iter().map(|&c| (p - c) % p).collect::<Vec<_>>());
            for b in 0..q {
                let db = digits(b);
                let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add_t[(a * q + b) as usize] = encode(&sum);
                let prod = prime_poly::rem(
                    &prime_poly::mul(&prime_poly::norm(da.clone()), &prime_poly::norm(db), p),
                    &modulus,
                    p,
                );
                let mut padded = prod;
                padded.resize(k as usize, 0);
                mul_t[(a * q + b) as usize] = encode(&padded);
            }
        }
        let mut inv_t = vec![0u64; qs];
        for a in 1..q {
            for b in 1..q {
                if mul_t[(a * q + b) as usize] == 1 {
                    inv_t[a as usize] = b;
                    break;
                }
            }
        }

        Ok(Field {
            p,
            k,
            q,
            modulus,
            add_t,
            mul_t,
            neg_t,
            inv_t,
            budget: DEFAULT_STREAM_BUDGET,
        })
    }

    fn least_irreducible_modulus(p: u64, k: u32) -> Vec<u64> {
        if k == 1 {
            // Direct mod-p arithmetic; the modulus is just x.
            return vec![0, 1];
        }
        let count = p.pow(k - 1);
        // Walk monic degree-k polynomials in counter order; the first with
        // no monic factor of degree <= k/2 is the modulus.
        let mut idx = 0u64;
        loop {
            assert!(idx < count * p, "no irreducible of degree {k} found");
            let mut cand = Vec::with_capacity(k as usize + 1);
            let mut e = idx;
            for _ in 0..k {
                cand.push(e % p);
                e /= p;
            }
            cand.push(1);
            let mut irreducible = true;
            'outer: for d in 1..=(k / 2) {
                for di in 0..p.pow(d) {
                    let mut div = Vec::with_capacity(d as usize + 1);
                    let mut e = di;
                    for _ in 0..d {
                        div.push(e % p);
                        e /= p;
                    }
                    div.push(1);
                    if prime_poly::divides(&div, &cand, p) {
                        irreducible = false;
                        break 'outer;
                    }
                }
            }
            if irreducible {
                return cand;
            }
            idx += 1;
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.k
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The field modulus as a polynomial over GF(p).
    pub fn modulus_poly(&self) -> GFPoly {
        GFPoly::from_coeffs(self.modulus.clone())
    }

    pub fn stream_budget(&self) -> u64 {
        self.budget
    }

    /// Overrides the enumeration stream budget (default 10^7).
    pub fn set_stream_budget(&mut self, budget: u64) {
        self.budget = budget;
    }

    /// Field designator: `"2"` for prime fields, `"4=2^2"` for extensions.
    pub fn designator(&self) -> String {
        if self.k == 1 {
            format!("{}", self.q)
        } else {
            format!("{}={}^{}", self.q, self.p, self.k)
        }
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        self.add_t[(a * self.q + b) as usize]
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        self.neg_t[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.mul_t[(a * self.q + b) as usize]
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::Domain("inverse of zero".into()));
        }
        Ok(self.inv_t[a as usize])
    }

    // ---- polynomial arithmetic over this field ----

    pub fn poly_add(&self, a: &GFPoly, b: &GFPoly) -> GFPoly {
        let n = a.coeffs.len().max(b.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let ca = a.coeffs.get(i).copied().unwrap_or(0);
            let cb = b.coeffs.get(i).copied().unwrap_or(0);
            *slot = self.add(ca, cb);
        }
        GFPoly::from_coeffs(out)
    }

    pub fn poly_sub(&self, a: &GFPoly, b: &GFPoly) -> GFPoly {
        let n = a.coeffs.len().max(b.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, slot) in out.iter_mut().enumerate() {
            let ca = a.coeffs.get(i).copied().unwrap_or(0);
            let cb = b.coeffs.get(i).copied().unwrap_or(0);
            *slot = self.sub(ca, cb);
        }
        GFPoly::from_coeffs(out)
    }

    pub fn poly_mul(&self, a: &GFPoly, b: &GFPoly) -> GFPoly {
        if a.is_zero() || b.is_zero() {
            return GFPoly::zero();
        }
        let mut out = vec![0u64; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &ca) in a.coeffs.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (j, &cb) in b.coeffs.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(ca, cb));
            }
        }
        GFPoly::from_coeffs(out)
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn poly_div_rem(&self, a: &GFPoly, b: &GFPoly) -> Result<(GFPoly, GFPoly)> {
        let db = b
            .degree()
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let Some(da) = a.degree() else {
            return Ok((GFPoly::zero(), GFPoly::zero()));
        };
        if da < db {
            return Ok((GFPoly::zero(), a.clone()));
        }
        let lead_inv = self.inv(b.coeffs[db])?;
        let mut rem = a.coeffs.clone();
        let mut quot = vec![0u64; da - db + 1];
        for i in (db..=da).rev() {
            let coeff = self.mul(rem[i], lead_inv);
            if coeff == 0 {
                continue;
            }
            quot[i - db] = coeff;
            for (j, &bc) in b.coeffs.iter().enumerate() {
                rem[i - db + j] = self.sub(rem[i - db + j], self.mul(coeff, bc));
            }
        }
        Ok((GFPoly::from_coeffs(quot), GFPoly::from_coeffs(rem)))
    }

    pub fn poly_divides(&self, b: &GFPoly, a: &GFPoly) -> Result<bool> {
        Ok(self.poly_div_rem(a, b)?.1.is_zero())
    }

    /// Scales a nonzero polynomial to be monic.
    pub fn poly_make_monic(&self, a: &GFPoly) -> Result<GFPoly> {
        let d = a
            .degree()
            .ok_or_else(|| Error::Domain("cannot normalize the zero polynomial".into()))?;
        let inv = self.inv(a.coeffs[d])?;
        Ok(GFPoly::from_coeffs(
            a.coeffs.iter().map(|&c| self.mul(c, inv)).collect(),
        ))
    }

    /// Monic gcd by the Euclidean algorithm; `gcd(0, b) = monic(b)`.
    pub fn poly_gcd_monic(&self, a: &GFPoly, b: &GFPoly) -> Result<GFPoly> {
        let mut x = a.clone();
        let mut y = b.clone();
        while !y.is_zero() {
            let (_, r) = self.poly_div_rem(&x, &y)?;
            x = y;
            y = r;
        }
        if x.is_zero() {
            Ok(GFPoly::zero())
        } else {
            self.poly_make_monic(&x)
        }
    }

    /// The `index`-th monic polynomial of the given degree: non-leading
    /// coefficients are the base-`q` digits of `index`.
    pub fn monic_from_index(&self, degree: u32, index: u64) -> GFPoly {
        let mut coeffs = Vec::with_capacity(degree as usize + 1);
        let mut e = index;
        for _ in 0..degree {
            coeffs.push(e % self.q);
            e /= self.q;
        }
        debug_assert_eq!(e, 0, "index out of range for degree {degree}");
        coeffs.push(1);
        GFPoly { coeffs }
    }

    /// Inverse of [`Field::monic_from_index`].
    pub fn monic_index(&self, p: &GFPoly) -> u64 {
        debug_assert!(p.is_monic());
        let mut e = 0u64;
        for &c in p.coeffs[..p.coeffs.len() - 1].iter().rev() {
            e = e * self.q + c;
        }
        e
    }

    /// Number of monic polynomials of the given degree, `q^n`, as `u128`.
    pub fn monic_count(&self, degree: u32) -> u128 {
        (self.q as u128).pow(degree)
    }

    /// Checks `q^degree` against the stream budget.
    pub fn check_budget(&self, degree: u32) -> Result<u64> {
        let needed = self.monic_count(degree);
        if needed > self.budget as u128 {
            return Err(Error::Budget {
                needed,
                budget: self.budget,
            });
        }
        Ok(needed as u64)
    }

    /// All monic polynomials of the given degree in enumeration order;
    /// exactly `q^degree` items. Degree 0 yields the constant 1.
    pub fn enumerate_monic(&self, degree: u32) -> Result<impl Iterator<Item = GFPoly> + '_> {
        let count = self.check_budget(degree)?;
        Ok((0..count).map(move |i| self.monic_from_index(degree, i)))
    }
}

/// Polynomial over a [`Field`], in canonical form: coefficients low degree
/// first with no trailing zeros; the empty vector is the zero polynomial.
/// The derived order (degree, then coefficients from the top down) matches
/// the enumeration counter.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GFPoly {
    coeffs: Vec<u64>,
}

impl GFPoly {
    pub fn zero() -> GFPoly {
        GFPoly { coeffs: vec![] }
    }

    pub fn one() -> GFPoly {
        GFPoly { coeffs: vec![1] }
    }

    pub fn x() -> GFPoly {
        GFPoly { coeffs: vec![0, 1] }
    }

    pub fn constant(c: u64) -> GFPoly {
        GFPoly::from_coeffs(vec![c])
    }

    /// From low-to-high coefficients; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<u64>) -> GFPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        GFPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(1)
    }

    /// Parses the text form, validating coefficients against the field.
    pub fn parse(field: &Field, s: &str) -> Result<GFPoly> {
        let s = s.trim();
        if s == "0" {
            return Ok(GFPoly::zero());
        }
        let mut coeffs: Vec<u64> = vec![];
        for term in s.split('+') {
            let term = term.trim();
            let (coeff_str, exp) = if let Some(rest) = term.strip_prefix("x^") {
                ("1", rest)
            } else if term == "x" {
                ("1", "1")
            } else if let Some((c, x)) = term.split_once("*x^") {
                (c.trim(), x)
            } else if let Some(c) = term.strip_suffix("*x") {
                (c.trim(), "1")
            } else {
                (term, "0")
            };
            let c: u64 = coeff_str
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient in term {term:?}")))?;
            let e: usize = exp
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in term {term:?}")))?;
            if c >= field.q() {
                return Err(Error::Parse(format!(
                    "coefficient {c} out of range for GF({})",
                    field.designator()
                )));
            }
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            coeffs[e] = field.add(coeffs[e], c);
        }
        Ok(GFPoly::from_coeffs(coeffs))
    }
}

impl PartialOrd for GFPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GFPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for GFPoly {
    /// Text form: integer coefficients, descending degree, e.g.
    /// `x^6+x^4+x^3+x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (c, e) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, e) => write!(f, "x^{e}")?,
                (c, 1) => write!(f, "{c}*x")?,
                (c, e) => write!(f, "{c}*x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GFPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Factorization of a monic polynomial into monic irreducibles with
/// multiplicities, sorted in the polynomial order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    factors: Vec<(GFPoly, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(GFPoly, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Re-multiplies the factors.
    pub fn product(&self, field: &Field) -> GFPoly {
        let mut acc = GFPoly::one();
        for (s, m) in &self.factors {
            for _ in 0..*m {
                acc = field.poly_mul(&acc, s);
            }
        }
        acc
    }

    pub fn multiplicity_of(&self, s: &GFPoly) -> u32 {
        self.factors
            .iter()
            .find(|(f, _)| f == s)
            .map(|(_, m)| *m)
            .unwrap_or(0)
    }

    /// Number of degree-`j` irreducible factors, counted with multiplicity.
    pub fn count_of_degree(&self, j: usize) -> u64 {
        self.factors
            .iter()
            .filter(|(f, _)| f.degree() == Some(j))
            .map(|(_, m)| *m as u64)
            .sum()
    }

    /// Total number of irreducible factors, counted with multiplicity.
    pub fn total_count(&self) -> u64 {
        self.factors.iter().map(|(_, m)| *m as u64).sum()
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.factors.iter().map(|(_, m)| *m).max().unwrap_or(0)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (s, m) in &self.factors {
            if !first {
                write!(f, " * ")?;
            }
            first = false;
            let needs_parens = s.coeffs.iter().filter(|&&c| c != 0).count() > 1;
            if needs_parens {
                write!(f, "({s})")?;
            } else {
                write!(f, "{s}")?;
            }
            if *m > 1 {
                write!(f, "^{m}")?;
            }
        }
        Ok(())
    }
}

/// Cached lists of monic irreducibles by degree, plus trial-division
/// factorization against them.
pub struct Factorizer<'f> {
    field: &'f Field,
    by_degree: Vec<Vec<GFPoly>>,
}

impl<'f> Factorizer<'f> {
    pub fn new(field: &'f Field) -> Factorizer<'f> {
        Factorizer {
            field,
            by_degree: vec![vec![]], // degree 0: none
        }
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    /// All monic irreducibles of degree `n`, in enumeration order.
    ///
    /// Computed by marking composites: every product of an irreducible of
    /// degree `k <= n/2` with a monic polynomial of degree `n-k` is
    /// reducible, and every reducible polynomial has an irreducible factor
    /// of degree at most half its own. The unmarked remainder is the
    /// irreducible list.
    pub fn irreducibles(&mut self, n: u32) -> Result<&[GFPoly]> {
        self.ensure(n)?;
        Ok(&self.by_degree[n as usize])
    }

    fn ensure(&mut self, n: u32) -> Result<()> {
        let field = self.field;
        while self.by_degree.len() <= n as usize {
            let m = self.by_degree.len() as u32;
            let count = field.check_budget(m)?;
            let mut composite = vec![false; count as usize];
            for k in 1..=(m / 2) {
                for s in &self.by_degree[k as usize] {
                    for ti in 0..field.monic_count(m - k) as u64 {
                        let t = field.monic_from_index(m - k, ti);
                        let prod = field.poly_mul(s, &t);
                        composite[field.monic_index(&prod) as usize] = true;
                    }
                }
            }
            let irreducibles: Vec<GFPoly> = (0..count)
                .filter(|&i| !composite[i as usize])
                .map(|i| field.monic_from_index(m, i))
                .collect();
            self.by_degree.push(irreducibles);
        }
        Ok(())
    }

    pub fn is_irreducible(&mut self, p: &GFPoly) -> Result<bool> {
        let Some(d) = p.degree() else {
            return Ok(false);
        };
        if d == 0 {
            return Ok(false);
        }
        self.ensure(d as u32)?;
        Ok(self.by_degree[d].binary_search(p).is_ok())
    }

    /// Unique factorization of a monic polynomial into monic irreducibles,
    /// by repeated trial division in increasing order. Degree 0 gives the
    /// empty factorization.
    pub fn factorize(&mut self, p: &GFPoly) -> Result<Factorization> {
        if !p.is_monic() {
            return Err(Error::Domain(format!(
                "factorization requires a monic polynomial, got {p}"
            )));
        }
        let field = self.field;
        let mut factors: Vec<(GFPoly, u32)> = Vec::new();
        let mut rest = p.clone();
        let mut d = 1u32;
        loop {
            let rest_degree = rest.degree().expect("monic, hence nonzero");
            if rest_degree == 0 {
                break;
            }
            if d as usize > rest_degree / 2 {
                // No factor of degree <= half remains: the rest is irreducible.
                factors.push((rest, 1));
                break;
            }
            self.ensure(d)?;
            for s in &self.by_degree[d as usize] {
                if d as usize > rest.degree().unwrap() / 2 {
                    break;
                }
                let mut mult = 0u32;
                loop {
                    let (quot, rem) = field.poly_div_rem(&rest, s)?;
                    if !rem.is_zero() {
                        break;
                    }
                    rest = quot;
                    mult += 1;
                }
                if mult > 0 {
                    factors.push((s.clone(), mult));
                }
            }
            d += 1;
        }
        Ok(Factorization { factors })
    }
}

/// Parses a field designator: `"2"`, `"2^2"`, or `"4=2^2"`.
pub fn parse_field_designator(s: &str) -> Result<(u64, u32)> {
    let s = s.trim();
    let body = match s.split_once('=') {
        None => s,
        Some((q_str, rest)) => {
            let q: u64 = q_str
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad field size in {s:?}")))?;
            let (p, k) = parse_field_designator(rest)?;
            if p.checked_pow(k) != Some(q) {
                return Err(Error::Parse(format!(
                    "field designator {s:?} is inconsistent: {p}^{k} != {q}"
                )));
            }
            return Ok((p, k));
        }
    };
    match body.split_once('^') {
        None => {
            let p: u64 = body
                .parse()
                .map_err(|_| Error::Parse(format!("bad field designator {s:?}")))?;
            Ok((p, 1))
        }
        Some((p_str, k_str)) => {
            let p: u64 = p_str
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad field characteristic in {s:?}")))?;
            let k: u32 = k_str
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad extension degree in {s:?}")))?;
            Ok((p, k))
        }
    }
}

/// Builds the field for a given size `q` when `q` is a prime power.
pub fn field_for_size(q: u64) -> Result<Field> {
    if q < 2 {
        return Err(Error::Domain(format!("field size {q} < 2")));
    }
    let mut p = 2u64;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut k = 0u32;
            let mut rest = q;
            while rest.is_multiple_of(p) {
                rest /= p;
                k += 1;
            }
            if rest != 1 {
                return Err(Error::Domain(format!("{q} is not a prime power")));
            }
            return Field::new(p, k);
        }
        p += 1;
    }
    Field::new(q, 1) // q itself is prime
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::count_irreducibles;
    use num_bigint::BigInt;

    #[test]
    fn build_small_fields() {
        let f2 = Field::new(2, 1).unwrap();
        assert_eq!(f2.q(), 2);
        assert_eq!(f2.designator(), "2");
        let f4 = Field::new(2, 2).unwrap();
        assert_eq!(f4.q(), 4);
        assert_eq!(f4.modulus_poly().to_string(), "x^2+x+1");
        assert_eq!(f4.designator(), "4=2^2");
        let f9 = Field::new(3, 2).unwrap();
        assert_eq!(f9.modulus_poly().to_string(), "x^2+1");
        assert!(Field::new(4, 1).is_err());
        assert!(Field::new(2, 5).is_err()); // 32 over the default bound
        assert!(Field::with_bound(2, 5, 64).is_ok());
    }

    #[test]
    fn field_axioms_hold_in_gf9() {
        let f = Field::new(3, 2).unwrap();
        for a in 0..9 {
            for b in 0..9 {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..9 {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                }
            }
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            }
        }
    }

    #[test]
    fn enumeration_order_and_count() {
        let f2 = Field::new(2, 1).unwrap();
        let quads: Vec<String> = f2
            .enumerate_monic(2)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(quads, ["x^2", "x^2+1", "x^2+x", "x^2+x+1"]);
        let f3 = Field::new(3, 1).unwrap();
        let lines: Vec<String> = f3
            .enumerate_monic(1)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(lines, ["x", "x+1", "x+2"]);
        let consts: Vec<GFPoly> = f2.enumerate_monic(0).unwrap().collect();
        assert_eq!(consts, [GFPoly::one()]);
    }

    #[test]
    fn budget_exceeded_reports_cost() {
        let mut f = Field::new(2, 1).unwrap();
        f.set_stream_budget(100);
        match f.enumerate_monic(7).map(|_| ()) {
            Err(Error::Budget { needed, budget }) => {
                assert_eq!(needed, 128);
                assert_eq!(budget, 100);
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn irreducible_lists_match_formula() {
        let f2 = Field::new(2, 1).unwrap();
        let mut fac = Factorizer::new(&f2);
        assert_eq!(
            fac.irreducibles(2)
                .unwrap()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>(),
            ["x^2+x+1"]
        );
        assert_eq!(
            fac.irreducibles(3)
                .unwrap()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>(),
            ["x^3+x+1", "x^3+x^2+1"]
        );
        for q in [2u64, 3, 4] {
            let f = field_for_size(q).unwrap();
            let mut fac = Factorizer::new(&f);
            for n in 1..=6u32 {
                let got = fac.irreducibles(n).unwrap().len();
                assert_eq!(
                    BigInt::from(got),
                    count_irreducibles(q, n).unwrap(),
                    "q={q} n={n}"
                );
            }
        }
    }

    #[test]
    fn factorization_known_example() {
        // x^6+x^4+x^3+x over GF(2) factors as x * (x+1)^3 * (x^2+x+1).
        let f2 = Field::new(2, 1).unwrap();
        let p = GFPoly::parse(&f2, "x^6+x^4+x^3+x").unwrap();
        let mut fac = Factorizer::new(&f2);
        let factorization = fac.factorize(&p).unwrap();
        assert_eq!(factorization.to_string(), "x * (x+1)^3 * (x^2+x+1)");
        assert_eq!(factorization.product(&f2), p);
        assert_eq!(factorization.count_of_degree(1), 4);
        assert_eq!(factorization.count_of_degree(2), 1);
        assert_eq!(factorization.total_count(), 5);
        let x_plus_1 = GFPoly::parse(&f2, "x+1").unwrap();
        assert_eq!(factorization.multiplicity_of(&x_plus_1), 3);
        assert_eq!(factorization.multiplicity_of(&GFPoly::x()), 1);
        assert_eq!(factorization.max_multiplicity(), 3);
    }

    #[test]
    fn factorize_unit_and_irreducible() {
        let f2 = Field::new(2, 1).unwrap();
        let mut fac = Factorizer::new(&f2);
        assert!(fac.factorize(&GFPoly::one()).unwrap().is_empty());
        let s = GFPoly::parse(&f2, "x^2+x+1").unwrap();
        let fs = fac.factorize(&s).unwrap();
        assert_eq!(fs.factors(), &[(s.clone(), 1)]);
        assert!(fac.factorize(&GFPoly::zero()).is_err());
        // Non-monic inputs are rejected, not normalized.
        let f3 = Field::new(3, 1).unwrap();
        let mut fac3 = Factorizer::new(&f3);
        let doubled = GFPoly::parse(&f3, "2*x^2+x").unwrap();
        assert!(fac3.factorize(&doubled).is_err());
    }

    #[test]
    fn factorization_round_trip_sweep() {
        for q in [2u64, 3, 4] {
            let f = field_for_size(q).unwrap();
            let mut fac = Factorizer::new(&f);
            for n in 0..=8u32 {
                for p in f.enumerate_monic(n).unwrap().collect::<Vec<_>>() {
                    let fz = fac.factorize(&p).unwrap();
                    assert_eq!(fz.product(&f), p, "q={q} p={p}");
                    for (s, _) in fz.factors() {
                        assert!(fac.is_irreducible(s).unwrap(), "q={q} s={s}");
                    }
                    // Factors come out strictly sorted, hence distinct.
                    assert!(
                        fz.factors().windows(2).all(|w| w[0].0 < w[1].0),
                        "q={q} p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let f3 = Field::new(3, 1).unwrap();
        let all: Vec<GFPoly> = f3.enumerate_monic(3).unwrap().collect();
        assert_eq!(all.len(), 27);
        let set: std::collections::BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(set.len(), 27);
        // Sorted order matches enumeration order.
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(sorted, all);
    }

    #[test]
    fn poly_text_round_trip() {
        let f2 = Field::new(2, 1).unwrap();
        for s in ["0", "1", "x", "x^2+x+1", "x^6+x^4+x^3+x"] {
            assert_eq!(GFPoly::parse(&f2, s).unwrap().to_string(), s);
        }
        let f3 = Field::new(3, 1).unwrap();
        assert_eq!(
            GFPoly::parse(&f3, "2*x^2+x+2").unwrap().to_string(),
            "2*x^2+x+2"
        );
        assert!(GFPoly::parse(&f2, "3*x").is_err());
        assert!(GFPoly::parse(&f2, "y+1").is_err());
    }

    #[test]
    fn field_designator_parsing() {
        assert_eq!(parse_field_designator("2").unwrap(), (2, 1));
        assert_eq!(parse_field_designator("4=2^2").unwrap(), (2, 2));
        assert_eq!(parse_field_designator("3^2").unwrap(), (3, 2));
        assert!(parse_field_designator("4=3^2").is_err());
        assert!(parse_field_designator("abc").is_err());
    }

    #[test]
    fn gcd_examples() {
        let f2 = Field::new(2, 1).unwrap();
        let a = GFPoly::parse(&f2, "x^2+x").unwrap(); // x(x+1)
        let b = GFPoly::parse(&f2, "x^2+1").unwrap(); // (x+1)^2
        let g = f2.poly_gcd_monic(&a, &b).unwrap();
        assert_eq!(g.to_string(), "x+1");
        assert_eq!(
            f2.poly_gcd_monic(&a, &GFPoly::one()).unwrap(),
            GFPoly::one()
        );
    }
}
