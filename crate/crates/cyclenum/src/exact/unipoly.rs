use std::collections::BTreeMap;
use std::fmt;

use crate::exact::{Rat, Ring};

/// Sparse univariate polynomial with exact rational coefficients.
///
/// Exponents are nonnegative and zero coefficients are never stored, so two
/// polynomials are equal iff their coefficient maps are equal. The closed
/// forms produced elsewhere in the crate routinely have huge degrees and a
/// handful of terms, hence the sparse map.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct UniPoly {
    coeffs: BTreeMap<u32, Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly::default()
    }

    pub fn one() -> Self {
        UniPoly::monomial(Rat::one(), 0)
    }

    /// The variable itself, `q`.
    pub fn var() -> Self {
        UniPoly::monomial(Rat::one(), 1)
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::monomial(c, 0)
    }

    pub fn monomial(coeff: Rat, exp: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exp, coeff);
        }
        UniPoly { coeffs }
    }

    /// Builds `Σ c_i q^{e_i}` from `(exp, coeff)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (u32, Rat)>>(terms: I) -> Self {
        let mut p = UniPoly::zero();
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest stored exponent; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, exp: u32) -> Rat {
        self.coeffs.get(&exp).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rat)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn add_term(&mut self, exp: u32, coeff: &Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = UniPoly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                out.add_term(ea + eb, &(ca * cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = UniPoly::one();
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact evaluation at an integer point.
    pub fn eval_int(&self, x: i64) -> Rat {
        let point = Rat::from_int(x);
        let mut acc = Rat::zero();
        // Horner over the sparse exponent gaps, highest first.
        let mut prev_exp: Option<u32> = None;
        for (e, c) in self.coeffs.iter().rev() {
            if let Some(pe) = prev_exp {
                acc = acc * point.pow(pe - e);
            }
            acc += c;
            prev_exp = Some(*e);
        }
        match prev_exp {
            Some(e) => acc * point.pow(e),
            None => Rat::zero(),
        }
    }

    /// True when the polynomial is a constant (or zero).
    pub fn as_constant(&self) -> Option<Rat> {
        match self.degree() {
            None => Some(Rat::zero()),
            Some(0) => Some(self.coeff(0)),
            Some(_) => None,
        }
    }

    /// Canonical text form: descending exponents, explicit rational
    /// coefficients, e.g. `q^5 - q^4` or `1/2*q^2 - 1/2*q`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_part = (!mag.is_one() || *e == 0).then(|| mag.to_string());
            let var_part = match e {
                0 => None,
                1 => Some(var.to_string()),
                _ => Some(format!("{var}^{e}")),
            };
            match (coeff_part, var_part) {
                (Some(c), Some(v)) => {
                    out.push_str(&c);
                    out.push('*');
                    out.push_str(&v);
                }
                (Some(c), None) => out.push_str(&c),
                (None, Some(v)) => out.push_str(&v),
                (None, None) => unreachable!(),
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("q"))
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Ring for UniPoly {
    fn zero() -> Self {
        UniPoly::zero()
    }

    fn one() -> Self {
        UniPoly::one()
    }

    fn is_zero(&self) -> bool {
        self.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }

    fn neg(&self) -> Self {
        self.neg()
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }

    fn mul_rat(&self, r: &Rat) -> Self {
        self.scale(r)
    }

    fn from_rat(r: &Rat) -> Self {
        UniPoly::constant(r.clone())
    }

    fn as_rat(&self) -> Option<Rat> {
        self.as_constant()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> UniPoly {
        UniPoly::var()
    }

    #[test]
    fn difference_of_squares() {
        let a = q().add(&UniPoly::one()); // q + 1
        let b = q().sub(&UniPoly::one()); // q - 1
        let expect = q().mul(&q()).sub(&UniPoly::one());
        assert_eq!(a.mul(&b), expect);
    }

    #[test]
    fn eval_examples() {
        // q^2 - q at q = 2 counts the square-free monic quadratics over GF(2).
        let p = q().mul(&q()).sub(&q());
        assert_eq!(p.eval_int(2), Rat::from_int(2));
        assert_eq!(q().eval_int(5), Rat::from_int(5));
        // (q^2 - q)/2 at q = 3.
        assert_eq!(p.scale(&Rat::ratio(1, 2)).eval_int(3), Rat::from_int(3));
    }

    #[test]
    fn render_canonical() {
        let p = UniPoly::monomial(Rat::one(), 5).sub(&UniPoly::monomial(Rat::one(), 4));
        assert_eq!(p.render("q"), "q^5 - q^4");
        let half =
            UniPoly::monomial(Rat::ratio(1, 2), 2).sub(&UniPoly::monomial(Rat::ratio(1, 2), 1));
        assert_eq!(half.render("q"), "1/2*q^2 - 1/2*q");
        assert_eq!(UniPoly::zero().render("q"), "0");
        let c = UniPoly::from_terms([(1, Rat::from_int(2)), (0, Rat::from_int(-1))]);
        assert_eq!(c.render("t"), "2*t - 1");
    }

    #[test]
    fn zero_coefficients_never_stored() {
        let p = q().sub(&q());
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
    }
}
