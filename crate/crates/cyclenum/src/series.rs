//! Box-truncated formal power series in `d` variables over an exact
//! coefficient ring, together with the infinite-product factorization of a
//! constant-term-1 series and the weighted enumeration series built from it.
//!
//! A series carries a per-variable inclusive cap vector; coefficients outside
//! the box are unknown, never zero. Two series are equal iff they agree on
//! the whole box.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::exact::{Rat, Ring, UniPoly};
use crate::numtheory::{
    count_irreducibles, count_irreducibles_symbolic, divisors, moebius, DegreeVec,
};

#[derive(Clone, PartialEq, Eq)]
pub struct MultiSeries<R: Ring> {
    caps: DegreeVec,
    coeffs: BTreeMap<DegreeVec, R>,
}

impl<R: Ring> MultiSeries<R> {
    /// The zero series on the given box.
    pub fn zero(caps: &DegreeVec) -> Self {
        MultiSeries {
            caps: caps.clone(),
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant series 1.
    pub fn one(caps: &DegreeVec) -> Self {
        let mut s = MultiSeries::zero(caps);
        s.coeffs.insert(zero_key(caps.dim()), R::one());
        s
    }

    pub fn monomial(caps: &DegreeVec, key: DegreeVec, value: R) -> Result<Self> {
        let mut s = MultiSeries::zero(caps);
        s.set_coeff(key, value)?;
        Ok(s)
    }

    pub fn dim(&self) -> usize {
        self.caps.dim()
    }

    pub fn caps(&self) -> &DegreeVec {
        &self.caps
    }

    /// Coefficient at `key`; reading outside the box is a shape error
    /// because truncated coefficients are unknown, not zero.
    pub fn coeff(&self, key: &DegreeVec) -> Result<R> {
        if !key.leq(&self.caps) {
            return Err(Error::Shape(format!(
                "coefficient {key} outside truncation box {}",
                self.caps
            )));
        }
        Ok(self.coeffs.get(key).cloned().unwrap_or_else(R::zero))
    }

    pub fn set_coeff(&mut self, key: DegreeVec, value: R) -> Result<()> {
        if !key.leq(&self.caps) {
            return Err(Error::Shape(format!(
                "coefficient {key} outside truncation box {}",
                self.caps
            )));
        }
        if value.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, value);
        }
        Ok(())
    }

    fn add_coeff(&mut self, key: DegreeVec, value: &R) {
        if value.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(key.clone()).or_insert_with(R::zero);
        *entry = entry.add(value);
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DegreeVec, &R)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn constant_term(&self) -> R {
        self.coeffs
            .get(&zero_key(self.caps.dim()))
            .cloned()
            .unwrap_or_else(R::zero)
    }

    fn check_same_box(&self, rhs: &Self) -> Result<()> {
        if self.caps != rhs.caps {
            return Err(Error::Shape(format!(
                "truncation boxes differ: {} vs {}",
                self.caps, rhs.caps
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_same_box(rhs)?;
        let mut out = self.clone();
        for (k, v) in rhs.iter() {
            out.add_coeff(k.clone(), v);
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        MultiSeries {
            caps: self.caps.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), v.neg()))
                .collect(),
        }
    }

    /// Truncated product: the coefficient at `k` is `Σ_{a+b=k} f_a g_b` over
    /// box points; contributions landing outside the box are dropped.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_same_box(rhs)?;
        let mut out = MultiSeries::zero(&self.caps);
        for (ka, va) in self.iter() {
            for (kb, vb) in rhs.iter() {
                let Some(key) = ka.checked_add(kb) else {
                    continue;
                };
                if key.leq(&self.caps) {
                    out.add_coeff(key, &va.mul(vb));
                }
            }
        }
        Ok(out)
    }

    /// Scales every coefficient by a ring element.
    pub fn scale(&self, c: &R) -> Self {
        let mut out = MultiSeries::zero(&self.caps);
        for (k, v) in self.iter() {
            out.add_coeff(k.clone(), &v.mul(c));
        }
        out
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        let mut out = MultiSeries::zero(&self.caps);
        for (k, v) in self.iter() {
            out.add_coeff(k.clone(), &v.mul_rat(c));
        }
        out
    }

    /// Applies a coefficient-ring map (e.g. embedding rationals into
    /// polynomials in `q`).
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MultiSeries<S> {
        let mut out = MultiSeries::zero(&self.caps);
        for (k, v) in self.iter() {
            out.add_coeff(k.clone(), &f(v));
        }
        out
    }

    /// Multiplicative inverse on the box. The constant term must be a
    /// nonzero rational constant of the coefficient ring.
    pub fn inverse(&self) -> Result<Self> {
        let c = self
            .constant_term()
            .as_rat()
            .filter(|r| !r.is_zero())
            .ok_or_else(|| {
                Error::Domain("series inverse requires a nonzero rational constant term".into())
            })?;
        let c_inv = c.recip()?;
        // f = c (1 - u) with u having zero constant term; 1/f = (1/c) Σ u^k.
        let normalized = self.scale_rat(&c_inv);
        let u = MultiSeries::one(&self.caps).sub(&normalized)?;
        let mut acc = MultiSeries::one(&self.caps);
        let mut power = u.clone();
        while !power.is_zero() {
            acc = acc.add(&power)?;
            power = power.mul(&u)?;
        }
        Ok(acc.scale_rat(&c_inv))
    }

    /// Truncated logarithm `Σ_{k>=1} (-1)^{k+1} u^k / k` with `u = f - 1`.
    /// The sum is finite: `u` has zero constant term, so `u^k` leaves the
    /// box once `k` exceeds the cap total.
    pub fn log(&self) -> Result<Self> {
        if self.constant_term() != R::one() {
            return Err(Error::Domain(
                "series log requires constant term exactly 1".into(),
            ));
        }
        let u = self.sub(&MultiSeries::one(&self.caps))?;
        let mut acc = MultiSeries::zero(&self.caps);
        let mut power = u.clone();
        let mut k: i64 = 1;
        while !power.is_zero() {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&power.scale_rat(&Rat::ratio(sign, k)))?;
            power = power.mul(&u)?;
            k += 1;
        }
        Ok(acc)
    }

    /// Truncated exponential `Σ_{k>=0} f^k / k!`; requires zero constant
    /// term, which again makes the sum finite on the box.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::Domain(
                "series exp requires constant term exactly 0".into(),
            ));
        }
        let mut acc = MultiSeries::one(&self.caps);
        let mut power = MultiSeries::one(&self.caps);
        let mut inv_fact = Rat::one();
        let mut k: i64 = 1;
        loop {
            power = power.mul(self)?;
            if power.is_zero() {
                break;
            }
            inv_fact = inv_fact * Rat::ratio(1, k);
            acc = acc.add(&power.scale_rat(&inv_fact))?;
            k += 1;
        }
        Ok(acc)
    }

    /// Simultaneous substitution `z_i -> z_i^k`: the coefficient of
    /// `z^{k n}` becomes the old coefficient of `z^n`; images outside the
    /// box are dropped.
    pub fn substitute_power(&self, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("substitution power must be positive".into()));
        }
        let mut out = MultiSeries::zero(&self.caps);
        for (key, v) in self.iter() {
            let scaled = key.scaled(k);
            if scaled.leq(&self.caps) {
                out.add_coeff(scaled, v);
            }
        }
        Ok(out)
    }
}

impl<R: Ring> fmt::Debug for MultiSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "series[caps={}](", self.caps)?;
        for (i, (k, v)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({v:?})*z^{k}")?;
        }
        write!(f, ")")
    }
}

/// All lattice points of the box `[0, caps]`, in lexicographic order.
pub fn box_points(caps: &DegreeVec) -> Vec<DegreeVec> {
    let d = caps.dim();
    let mut out = Vec::new();
    let mut cur = vec![0u32; d];
    loop {
        out.push(DegreeVec::new(cur.clone()).expect("d >= 1"));
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < caps.get(i) {
                cur[i] += 1;
                for e in cur.iter_mut().skip(i + 1) {
                    *e = 0;
                }
                break;
            }
        }
    }
}

fn zero_key(d: usize) -> DegreeVec {
    DegreeVec::new(vec![0; d]).expect("d >= 1")
}

/// The exponents `a_i` of the unique factorization of a constant-term-1
/// series as `Π_{i>0} (1/(1-z^i))^{a_i}`. Keys have at least one positive
/// entry.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ExponentMap {
    map: BTreeMap<DegreeVec, Rat>,
}

impl ExponentMap {
    pub fn new() -> Self {
        ExponentMap::default()
    }

    pub fn insert(&mut self, key: DegreeVec, value: Rat) -> Result<()> {
        if key.is_all_zero() {
            return Err(Error::Domain(
                "exponent map keys must have a positive entry".into(),
            ));
        }
        if value.is_zero() {
            self.map.remove(&key);
        } else {
            self.map.insert(key, value);
        }
        Ok(())
    }

    pub fn get(&self, key: &DegreeVec) -> Rat {
        self.map.get(key).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DegreeVec, &Rat)> {
        self.map.iter()
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// True when every exponent is an integer, which is when the plain
    /// product form of the factorization makes sense without `exp`/`log`.
    pub fn is_integer_valued(&self) -> bool {
        self.map.values().all(|v| v.is_integer())
    }
}

/// Recovers the exponents `a_i` from a constant-term-1 series `g`:
/// with `b = log g`, Möbius inversion of `gcd(n) b_n = Σ_{k|gcd(n)}
/// gcd(n/k) a_{n/k}` gives `a_n = Σ_{k|gcd(n)} (μ(k)/k) b_{n/k}`.
pub fn extract_exponents(g: &MultiSeries<Rat>) -> Result<ExponentMap> {
    if !g.constant_term().is_one() {
        return Err(Error::Domain(
            "exponent extraction requires constant term exactly 1".into(),
        ));
    }
    let b = g.log()?;
    let mut out = ExponentMap::new();
    for n in box_points(g.caps()) {
        if n.is_all_zero() {
            continue;
        }
        let g_n = n.gcd()? as u64;
        let mut a = Rat::zero();
        for k in divisors(g_n)? {
            let mu = moebius(k)?;
            if mu == 0 {
                continue;
            }
            let inner = n.div_exact(k as u32).expect("k divides gcd(n)");
            let b_val = b.coeff(&inner)?;
            a += &(Rat::ratio(mu as i64, k as i64) * b_val);
        }
        out.insert(n, a)?;
    }
    Ok(out)
}

/// Rebuilds the box truncation of `Π_{i>0} (1/(1-z^i))^{a_i}` as
/// `exp(Σ_i a_i Σ_{k>=1} z^{k i}/k)`, which is also meaningful for
/// rational exponents.
pub fn reconstruct_from_exponents(a: &ExponentMap, caps: &DegreeVec) -> Result<MultiSeries<Rat>> {
    let mut log_sum = MultiSeries::<Rat>::zero(caps);
    for (i, a_i) in a.iter() {
        if i.dim() != caps.dim() {
            return Err(Error::Shape(format!(
                "exponent key {i} has dimension {} but the box has {}",
                i.dim(),
                caps.dim()
            )));
        }
        let mut k = 1u32;
        loop {
            let key = i.scaled(k);
            if !key.leq(caps) {
                break;
            }
            log_sum.add_coeff(key, &(a_i * &Rat::ratio(1, k as i64)));
            k += 1;
        }
    }
    log_sum.exp()
}

/// Truncation of `Π_{k=1}^{cap} (1/(1-z^k))^{M(q,k)}`, which telescopes to
/// the geometric series of `1/(1-qz)`: the coefficient of `z^n` is `q^n`.
pub fn cyclotomic_product(q: u64, cap: u32) -> Result<MultiSeries<Rat>> {
    if q < 2 {
        return Err(Error::Domain(format!("field size {q} < 2")));
    }
    let caps = DegreeVec::scalar(cap);
    let mut a = ExponentMap::new();
    for k in 1..=cap {
        a.insert(
            DegreeVec::scalar(k),
            Rat::from_int(count_irreducibles(q, k)?),
        )?;
    }
    reconstruct_from_exponents(&a, &caps)
}

/// Weighted enumeration series for `d`-tuples of monic polynomials: from the
/// weight generating function `g` (constant term 1) this produces
/// `Σ_n α_q(n) z^n = Π_{i>0} (1/(1 - q z^i))^{a_i}`, evaluated in the log
/// domain as `exp(Σ_{k=1..K} M(q,k) log(g(z^k)))` with `K` the largest cap.
/// Factors with `k > K` cannot touch the box.
fn alpha_series_with<R: Ring>(
    g: &MultiSeries<Rat>,
    irreducible_count: impl Fn(u32) -> Result<R>,
) -> Result<MultiSeries<R>> {
    if !g.constant_term().is_one() {
        return Err(Error::Domain(
            "weight series must have constant term exactly 1".into(),
        ));
    }
    let caps = g.caps().clone();
    let depth = caps.entries().iter().copied().max().unwrap_or(0);
    let mut log_sum = MultiSeries::<R>::zero(&caps);
    for k in 1..=depth {
        let substituted = g.substitute_power(k)?;
        let lifted = substituted.map_coeffs(|r| R::from_rat(r));
        let log_term = lifted.log()?;
        let m = irreducible_count(k)?;
        log_sum = log_sum.add(&log_term.scale(&m))?;
    }
    log_sum.exp()
}

/// Numeric-`q` weighted enumeration series over exact rationals.
pub fn alpha_series_numeric(g: &MultiSeries<Rat>, q: u64) -> Result<MultiSeries<Rat>> {
    alpha_series_with(g, |k| Ok(Rat::from_int(count_irreducibles(q, k)?)))
}

/// Symbolic-`q` weighted enumeration series; coefficients are polynomials
/// in `q`.
pub fn alpha_series_symbolic(g: &MultiSeries<Rat>) -> Result<MultiSeries<UniPoly>> {
    alpha_series_with(g, count_irreducibles_symbolic)
}

/// The same series evaluated through the explicit product
/// `Π_i (1/(1 - q z^i))^{a_i}`, which requires every `a_i` to be an
/// integer. Used as an independent route to cross-check the log/exp path.
fn alpha_series_product_with<R: Ring>(g: &MultiSeries<Rat>, q_elem: &R) -> Result<MultiSeries<R>> {
    let a = extract_exponents(g)?;
    if !a.is_integer_valued() {
        return Err(Error::Domain(
            "explicit product route requires integer factor exponents".into(),
        ));
    }
    let caps = g.caps().clone();
    let mut acc = MultiSeries::<R>::one(&caps);
    for (i, a_i) in a.iter() {
        let e: BigInt = a_i.to_integer().expect("checked integer");
        let reps = e.abs().to_u32().ok_or_else(|| {
            Error::Internal(format!("factor exponent {e} too large for product route"))
        })?;
        let factor = if e.is_negative() {
            // 1 - q z^i
            let mut f = MultiSeries::<R>::one(&caps);
            if i.leq(&caps) {
                f.add_coeff(i.clone(), &q_elem.neg());
            }
            f
        } else {
            // truncation of 1/(1 - q z^i): Σ_m q^m z^{m i}
            let mut f = MultiSeries::<R>::one(&caps);
            let mut q_pow = R::one();
            let mut m = 1u32;
            loop {
                let key = i.scaled(m);
                if !key.leq(&caps) {
                    break;
                }
                q_pow = q_pow.mul(q_elem);
                f.add_coeff(key, &q_pow);
                m += 1;
            }
            f
        };
        for _ in 0..reps {
            acc = acc.mul(&factor)?;
        }
    }
    Ok(acc)
}

pub fn alpha_series_product_numeric(g: &MultiSeries<Rat>, q: u64) -> Result<MultiSeries<Rat>> {
    alpha_series_product_with(g, &Rat::from_int(q))
}

pub fn alpha_series_product_symbolic(g: &MultiSeries<Rat>) -> Result<MultiSeries<UniPoly>> {
    alpha_series_product_with(g, &UniPoly::var())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(entries: &[u32]) -> DegreeVec {
        DegreeVec::new(entries.to_vec()).unwrap()
    }

    /// 1/(1-z) truncated: all coefficients 1.
    fn geometric(cap: u32) -> MultiSeries<Rat> {
        let caps = DegreeVec::scalar(cap);
        let mut s = MultiSeries::zero(&caps);
        for n in 0..=cap {
            s.set_coeff(dv(&[n]), Rat::one()).unwrap();
        }
        s
    }

    fn one_plus_z(cap: u32) -> MultiSeries<Rat> {
        let caps = DegreeVec::scalar(cap);
        let mut s = MultiSeries::one(&caps);
        s.set_coeff(dv(&[1]), Rat::one()).unwrap();
        s
    }

    fn one_minus_z(cap: u32) -> MultiSeries<Rat> {
        let caps = DegreeVec::scalar(cap);
        let mut s = MultiSeries::one(&caps);
        s.set_coeff(dv(&[1]), -Rat::one()).unwrap();
        s
    }

    #[test]
    fn mul_truncates_at_box() {
        // (1+z)(1-z) = 1 - z^2 with cap 3.
        let prod = one_plus_z(3).mul(&one_minus_z(3)).unwrap();
        let mut expect = MultiSeries::one(&DegreeVec::scalar(3));
        expect.set_coeff(dv(&[2]), -Rat::one()).unwrap();
        assert_eq!(prod, expect);
        // f * 1 = f.
        let f = one_plus_z(3);
        assert_eq!(f.mul(&MultiSeries::one(f.caps())).unwrap(), f);
        // A truncated geometric series times (1-z) is 1 on the box.
        let g = geometric(4).mul(&one_minus_z(4)).unwrap();
        assert_eq!(g, MultiSeries::one(&DegreeVec::scalar(4)));
    }

    #[test]
    fn mismatched_boxes_rejected() {
        assert!(matches!(
            one_plus_z(3).mul(&one_plus_z(4)),
            Err(Error::Shape(_))
        ));
        let d2 = MultiSeries::<Rat>::one(&dv(&[3, 3]));
        assert!(one_plus_z(3).add(&d2).is_err());
    }

    #[test]
    fn three_variable_round_trips() {
        let caps = dv(&[6, 6, 6]);
        let mut g = MultiSeries::<Rat>::one(&caps);
        g.set_coeff(dv(&[1, 0, 0]), Rat::ratio(1, 2)).unwrap();
        g.set_coeff(dv(&[0, 2, 1]), Rat::from_int(-3)).unwrap();
        g.set_coeff(dv(&[2, 2, 2]), Rat::ratio(5, 7)).unwrap();
        g.set_coeff(dv(&[0, 0, 5]), Rat::one()).unwrap();
        assert_eq!(g.log().unwrap().exp().unwrap(), g);
        let a = extract_exponents(&g).unwrap();
        assert_eq!(reconstruct_from_exponents(&a, &caps).unwrap(), g);
    }

    #[test]
    fn coefficients_outside_box_are_unknown() {
        let f = one_plus_z(3);
        assert!(matches!(f.coeff(&dv(&[4])), Err(Error::Shape(_))));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(one_minus_z(4).inverse().unwrap(), geometric(4));
        let one = MultiSeries::<Rat>::one(&DegreeVec::scalar(3));
        assert_eq!(one.inverse().unwrap(), one);
        // 1 - q z over polynomial coefficients inverts to Σ q^n z^n.
        let caps = DegreeVec::scalar(4);
        let mut f = MultiSeries::<UniPoly>::one(&caps);
        f.set_coeff(dv(&[1]), UniPoly::var().neg()).unwrap();
        let inv = f.inverse().unwrap();
        for n in 0..=4u32 {
            assert_eq!(
                inv.coeff(&dv(&[n])).unwrap(),
                UniPoly::monomial(Rat::one(), n)
            );
        }
        // Zero constant term has no inverse.
        let mut z = MultiSeries::<Rat>::zero(&caps);
        z.set_coeff(dv(&[1]), Rat::one()).unwrap();
        assert!(z.inverse().is_err());
        // Nor does a non-constant polynomial in the constant slot.
        let mut bad = MultiSeries::<UniPoly>::zero(&caps);
        bad.set_coeff(dv(&[0]), UniPoly::var()).unwrap();
        assert!(bad.inverse().is_err());
    }

    #[test]
    fn log_examples() {
        let caps = DegreeVec::scalar(5);
        assert!(MultiSeries::<Rat>::one(&caps).log().unwrap().is_zero());
        // log of the truncated geometric series is Σ z^k / k.
        let lg = geometric(5).log().unwrap();
        for k in 1..=5u32 {
            assert_eq!(lg.coeff(&dv(&[k])).unwrap(), Rat::ratio(1, k as i64));
        }
        // Constant term must be 1.
        assert!(one_plus_z(3).scale_rat(&Rat::from_int(2)).log().is_err());
    }

    #[test]
    fn exp_log_round_trip() {
        let caps = DegreeVec::scalar(4);
        assert_eq!(
            MultiSeries::<Rat>::zero(&caps).exp().unwrap(),
            MultiSeries::one(&caps)
        );
        // exp(-log(1-z)) reproduces the geometric series.
        assert_eq!(
            one_minus_z(4).log().unwrap().neg().exp().unwrap(),
            geometric(4)
        );
        // exp(log(1 + z + z^2)) = 1 + z + z^2.
        let mut f = one_plus_z(4);
        f.set_coeff(dv(&[2]), Rat::one()).unwrap();
        assert_eq!(f.log().unwrap().exp().unwrap(), f);
        // exp needs a vanishing constant term.
        assert!(f.exp().is_err());
    }

    #[test]
    fn exp_is_homomorphism_on_spot_check() {
        let caps = dv(&[3, 3]);
        let mut f = MultiSeries::<Rat>::zero(&caps);
        f.set_coeff(dv(&[1, 0]), Rat::ratio(1, 2)).unwrap();
        f.set_coeff(dv(&[1, 1]), Rat::from_int(-1)).unwrap();
        let mut g = MultiSeries::<Rat>::zero(&caps);
        g.set_coeff(dv(&[0, 1]), Rat::from_int(3)).unwrap();
        g.set_coeff(dv(&[2, 0]), Rat::ratio(2, 5)).unwrap();
        let lhs = f.add(&g).unwrap().exp().unwrap();
        let rhs = f.exp().unwrap().mul(&g.exp().unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_power_examples() {
        let f = one_plus_z(4);
        let sub = f.substitute_power(3).unwrap();
        let mut expect = MultiSeries::one(&DegreeVec::scalar(4));
        expect.set_coeff(dv(&[3]), Rat::one()).unwrap();
        assert_eq!(sub, expect);
        assert_eq!(f.substitute_power(1).unwrap(), f);
        let sub2 = geometric(5).substitute_power(2).unwrap();
        for n in 0..=5u32 {
            let expect = if n % 2 == 0 { Rat::one() } else { Rat::zero() };
            assert_eq!(sub2.coeff(&dv(&[n])).unwrap(), expect);
        }
        assert!(f.substitute_power(0).is_err());
    }

    #[test]
    fn extract_geometric() {
        let a = extract_exponents(&geometric(6)).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a.get(&dv(&[1])), Rat::one());
        // Extraction needs constant term exactly 1.
        let doubled = geometric(6).scale_rat(&Rat::from_int(2));
        assert!(extract_exponents(&doubled).is_err());
    }

    #[test]
    fn extract_monoid_generating_function() {
        // (1 - z^6) / ((1 - z^2)(1 - z^3)) has exponents {2:1, 3:1, 6:-1}.
        let caps = DegreeVec::scalar(8);
        let mut num = MultiSeries::<Rat>::one(&caps);
        num.set_coeff(dv(&[6]), -Rat::one()).unwrap();
        let mut d2 = MultiSeries::<Rat>::one(&caps);
        d2.set_coeff(dv(&[2]), -Rat::one()).unwrap();
        let mut d3 = MultiSeries::<Rat>::one(&caps);
        d3.set_coeff(dv(&[3]), -Rat::one()).unwrap();
        let g = num
            .mul(&d2.inverse().unwrap())
            .unwrap()
            .mul(&d3.inverse().unwrap())
            .unwrap();
        let a = extract_exponents(&g).unwrap();
        assert_eq!(a.get(&dv(&[2])), Rat::one());
        assert_eq!(a.get(&dv(&[3])), Rat::one());
        assert_eq!(a.get(&dv(&[6])), -Rat::one());
        assert_eq!(a.len(), 3);
        // Round trip confirms the factorization.
        assert_eq!(reconstruct_from_exponents(&a, &caps).unwrap(), g);
    }

    #[test]
    fn extract_one_plus_z() {
        // 1 + z = (1 - z^2)/(1 - z): exponents {1:1, 2:-1}.
        let a = extract_exponents(&one_plus_z(6)).unwrap();
        assert_eq!(a.get(&dv(&[1])), Rat::one());
        assert_eq!(a.get(&dv(&[2])), -Rat::one());
        assert_eq!(a.len(), 2);
        assert_eq!(
            reconstruct_from_exponents(&a, &DegreeVec::scalar(6)).unwrap(),
            one_plus_z(6)
        );
    }

    #[test]
    fn reconstruct_single_exponent() {
        let mut a = ExponentMap::new();
        a.insert(dv(&[1]), Rat::one()).unwrap();
        assert_eq!(
            reconstruct_from_exponents(&a, &DegreeVec::scalar(5)).unwrap(),
            geometric(5)
        );
    }

    #[test]
    fn extract_diagonal_geometric() {
        // 1/(1 - z1 z2) has b_(k,k) = 1/k, and the inversion over the key
        // gcd collapses everything to the single exponent a_(1,1) = 1.
        let caps = dv(&[6, 6]);
        let mut g = MultiSeries::<Rat>::zero(&caps);
        for k in 0..=6u32 {
            g.set_coeff(dv(&[k, k]), Rat::one()).unwrap();
        }
        let a = extract_exponents(&g).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a.get(&dv(&[1, 1])), Rat::one());
    }

    #[test]
    fn rational_exponent_square_root() {
        // The reconstruction of {a_1 = 1/2}, squared, is the geometric series.
        let mut a = ExponentMap::new();
        a.insert(dv(&[1]), Rat::ratio(1, 2)).unwrap();
        let half = reconstruct_from_exponents(&a, &DegreeVec::scalar(6)).unwrap();
        assert_eq!(half.mul(&half).unwrap(), geometric(6));
    }

    #[test]
    fn cyclotomic_small_caps() {
        let s = cyclotomic_product(2, 1).unwrap();
        assert_eq!(s.coeff(&dv(&[0])).unwrap(), Rat::one());
        assert_eq!(s.coeff(&dv(&[1])).unwrap(), Rat::from_int(2));
        assert!(cyclotomic_product(1, 4).is_err());
        for (q, cap) in [(2u64, 12u32), (5, 8)] {
            let s = cyclotomic_product(q, cap).unwrap();
            for n in 0..=cap {
                assert_eq!(
                    s.coeff(&dv(&[n])).unwrap(),
                    Rat::from_int(BigInt::from(q).pow(n)),
                    "q={q} n={n}"
                );
            }
        }
    }

    #[test]
    fn alpha_square_free_symbolic() {
        // Weights 1 for multiplicity < 2: g = 1 + z. Coefficients are
        // 1, q, then q^n - q^{n-1}.
        let alpha = alpha_series_symbolic(&one_plus_z(5)).unwrap();
        assert_eq!(alpha.coeff(&dv(&[0])).unwrap(), UniPoly::one());
        assert_eq!(alpha.coeff(&dv(&[1])).unwrap(), UniPoly::var());
        for n in 2..=5u32 {
            let expect =
                UniPoly::monomial(Rat::one(), n).sub(&UniPoly::monomial(Rat::one(), n - 1));
            assert_eq!(alpha.coeff(&dv(&[n])).unwrap(), expect, "n={n}");
        }
    }

    #[test]
    fn alpha_all_one_numeric() {
        // All-one weights give every monic polynomial weight 1: q^n.
        let alpha = alpha_series_numeric(&geometric(4), 3).unwrap();
        for n in 0..=4u32 {
            assert_eq!(
                alpha.coeff(&dv(&[n])).unwrap(),
                Rat::from_int(BigInt::from(3).pow(n))
            );
        }
        // The weight series must have constant term 1.
        let shifted = geometric(4).scale_rat(&Rat::ratio(1, 3));
        assert!(alpha_series_numeric(&shifted, 3).is_err());
    }

    #[test]
    fn alpha_coprime_pairs_symbolic() {
        // d=2, weights 1 when min = 0 (coprime pairs): at (2,2) the count is
        // q^4 - q^3.
        let caps = dv(&[3, 3]);
        let mut g = MultiSeries::<Rat>::zero(&caps);
        for p in box_points(&caps) {
            if p.min_entry() == 0 {
                g.set_coeff(p, Rat::one()).unwrap();
            }
        }
        let alpha = alpha_series_symbolic(&g).unwrap();
        let expect = UniPoly::monomial(Rat::one(), 4).sub(&UniPoly::monomial(Rat::one(), 3));
        assert_eq!(alpha.coeff(&dv(&[2, 2])).unwrap(), expect);
    }

    #[test]
    fn alpha_product_route_agrees() {
        let g = one_plus_z(6);
        let via_log = alpha_series_symbolic(&g).unwrap();
        let via_product = alpha_series_product_symbolic(&g).unwrap();
        assert_eq!(via_log, via_product);
        let via_log_num = alpha_series_numeric(&g, 2).unwrap();
        let via_product_num = alpha_series_product_numeric(&g, 2).unwrap();
        assert_eq!(via_log_num, via_product_num);
    }

    #[test]
    fn symbolic_alpha_specializes_to_numeric() {
        let g = one_plus_z(5);
        let sym = alpha_series_symbolic(&g).unwrap();
        for q in [2u64, 3] {
            let num = alpha_series_numeric(&g, q).unwrap();
            for n in 0..=5u32 {
                let key = dv(&[n]);
                assert_eq!(
                    sym.coeff(&key).unwrap().eval_int(q as i64),
                    num.coeff(&key).unwrap()
                );
            }
        }
        // Two variables, rational weights away from 0/1.
        let caps = dv(&[2, 2]);
        let mut g2 = MultiSeries::<Rat>::one(&caps);
        g2.set_coeff(dv(&[1, 0]), Rat::ratio(1, 2)).unwrap();
        g2.set_coeff(dv(&[1, 1]), Rat::ratio(-2, 3)).unwrap();
        g2.set_coeff(dv(&[0, 2]), Rat::from_int(3)).unwrap();
        let sym = alpha_series_symbolic(&g2).unwrap();
        for q in [2u64, 3, 5] {
            let num = alpha_series_numeric(&g2, q).unwrap();
            for key in box_points(&caps) {
                assert_eq!(
                    sym.coeff(&key).unwrap().eval_int(q as i64),
                    num.coeff(&key).unwrap(),
                    "q={q} key={key}"
                );
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_rat() -> impl Strategy<Value = Rat> {
            (-9i64..=9, 1i64..=6).prop_map(|(n, d)| Rat::ratio(n, d))
        }

        /// Sparse series on boxes small enough for fast log/exp.
        fn arb_caps() -> impl Strategy<Value = DegreeVec> {
            prop_oneof![
                (1u32..=6).prop_map(DegreeVec::scalar),
                (1u32..=4, 1u32..=4).prop_map(|(a, b)| DegreeVec::new(vec![a, b]).unwrap()),
                (1u32..=2, 1u32..=2, 1u32..=2)
                    .prop_map(|(a, b, c)| DegreeVec::new(vec![a, b, c]).unwrap()),
            ]
        }

        fn series_on(caps: DegreeVec, constant: Rat) -> impl Strategy<Value = MultiSeries<Rat>> {
            let points = box_points(&caps);
            proptest::collection::vec((0..points.len(), arb_rat()), 0..8).prop_map(move |terms| {
                let mut s = MultiSeries::zero(&caps);
                s.set_coeff(points[0].clone(), constant.clone()).unwrap();
                for (idx, c) in terms {
                    if idx > 0 {
                        s.set_coeff(points[idx].clone(), c).unwrap();
                    }
                }
                s
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn log_exp_identity(s in arb_caps().prop_flat_map(|c| series_on(c, Rat::one()))) {
                let round = s.log().unwrap().exp().unwrap();
                prop_assert_eq!(round, s);
            }

            #[test]
            fn exp_log_identity(s in arb_caps().prop_flat_map(|c| series_on(c, Rat::zero()))) {
                let round = s.exp().unwrap().log().unwrap();
                prop_assert_eq!(round, s);
            }

            #[test]
            fn extract_reconstruct_round_trip(
                s in arb_caps().prop_flat_map(|c| series_on(c, Rat::one()))
            ) {
                let a = extract_exponents(&s).unwrap();
                let back = reconstruct_from_exponents(&a, s.caps()).unwrap();
                prop_assert_eq!(back, s);
            }

            #[test]
            fn inverse_is_two_sided(s in arb_caps().prop_flat_map(|c| series_on(c, Rat::one()))) {
                let inv = s.inverse().unwrap();
                prop_assert_eq!(s.mul(&inv).unwrap(), MultiSeries::one(s.caps()));
            }
        }
    }
}
