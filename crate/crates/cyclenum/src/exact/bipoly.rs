use std::collections::BTreeMap;
use std::fmt;

use crate::exact::{Rat, Ring, UniPoly};

/// Sparse polynomial in the two variables `q` and `t` with exact rational
/// coefficients. Keys are `(q exponent, t exponent)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    coeffs: BTreeMap<(u32, u32), Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        BiPoly::monomial(Rat::one(), 0, 0)
    }

    pub fn monomial(coeff: Rat, q_exp: u32, t_exp: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert((q_exp, t_exp), coeff);
        }
        BiPoly { coeffs }
    }

    /// Embeds a polynomial in `q` as a `BiPoly` with no `t` dependence.
    pub fn from_q_poly(p: &UniPoly) -> Self {
        let mut out = BiPoly::zero();
        for (e, c) in p.terms() {
            out.add_term(e, 0, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, q_exp: u32, t_exp: u32) -> Rat {
        self.coeffs
            .get(&(q_exp, t_exp))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &Rat)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn add_term(&mut self, q_exp: u32, t_exp: u32, coeff: &Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((q_exp, t_exp)).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&(q_exp, t_exp));
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for ((qe, te), c) in rhs.terms() {
            out.add_term(qe, te, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = BiPoly::zero();
        for ((qa, ta), ca) in self.terms() {
            for ((qb, tb), cb) in rhs.terms() {
                out.add_term(qa + qb, ta + tb, &(ca * cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Exchanges the two variables; an involution on the representation.
    pub fn swap(&self) -> Self {
        BiPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|((qe, te), c)| ((*te, *qe), c.clone()))
                .collect(),
        }
    }

    /// Collects the polynomial in `t`: the coefficient of `t^k` as a
    /// polynomial in `q`, highest `t` power first.
    pub fn by_t_power(&self) -> Vec<(u32, UniPoly)> {
        let mut rows: BTreeMap<u32, UniPoly> = BTreeMap::new();
        for ((qe, te), c) in self.terms() {
            rows.entry(te).or_insert_with(UniPoly::zero).add_term(qe, c);
        }
        rows.into_iter().rev().collect()
    }

    /// Substitutes an integer for `q`, leaving a polynomial in `t`.
    pub fn eval_q(&self, q: i64) -> UniPoly {
        let mut out = UniPoly::zero();
        for ((qe, te), c) in self.terms() {
            out.add_term(te, &(c * Rat::from_int(q).pow(qe)));
        }
        out
    }

    /// Substitutes 1 for `t`, leaving a polynomial in `q`.
    pub fn eval_t_one(&self) -> UniPoly {
        let mut out = UniPoly::zero();
        for ((qe, _), c) in self.terms() {
            out.add_term(qe, c);
        }
        out
    }

    /// Canonical text form: terms grouped by descending `t` power, then
    /// descending `q` power.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (te, row) in self.by_t_power() {
            for (qe, c) in row.terms().collect::<Vec<_>>().into_iter().rev() {
                parts.push((te, qe, c.clone()));
            }
        }
        let mut out = String::new();
        for (i, (te, qe, c)) in parts.iter().enumerate() {
            let neg = c.is_negative();
            let mag = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (*qe == 0 && *te == 0) {
                factors.push(mag.to_string());
            }
            for (var, e) in [("q", qe), ("t", te)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Ring for BiPoly {
    fn zero() -> Self {
        BiPoly::zero()
    }

    fn one() -> Self {
        BiPoly::one()
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
        BiPoly::monomial(r.clone(), 0, 0)
    }

    fn as_rat(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.coeffs.len() == 1 {
            if let Some(c) = self.coeffs.get(&(0, 0)) {
                return Some(c.clone());
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_moves_exponents() {
        // q * t^2 swaps to t * q^2.
        let p = BiPoly::monomial(Rat::one(), 1, 2);
        assert_eq!(p.swap(), BiPoly::monomial(Rat::one(), 2, 1));
        assert_eq!(p.swap().swap(), p);
    }

    #[test]
    fn render_groups_by_t() {
        let mut p = BiPoly::monomial(Rat::ratio(1, 2), 2, 2);
        p.add_term(1, 2, &Rat::ratio(1, 2));
        p.add_term(2, 1, &Rat::ratio(1, 2));
        p.add_term(1, 1, &Rat::ratio(-1, 2));
        assert_eq!(p.render(), "1/2*q^2*t^2 + 1/2*q*t^2 + 1/2*q^2*t - 1/2*q*t");
    }

    #[test]
    fn eval_specializations() {
        // (q^2+q)/2 t^2 + (q^2-q)/2 t at q=2 gives 3t^2 + t.
        let mut p = BiPoly::zero();
        p.add_term(2, 2, &Rat::ratio(1, 2));
        p.add_term(1, 2, &Rat::ratio(1, 2));
        p.add_term(2, 1, &Rat::ratio(1, 2));
        p.add_term(1, 1, &Rat::ratio(-1, 2));
        let at2 = p.eval_q(2);
        assert_eq!(at2.render("t"), "3*t^2 + t");
        // Setting t = 1 collapses to q^2.
        assert_eq!(p.eval_t_one().render("q"), "q^2");
    }
}
