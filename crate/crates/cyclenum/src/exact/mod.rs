//! Exact coefficient rings: arbitrary-precision rationals, sparse
//! polynomials in a symbolic `q`, and sparse polynomials in `q` and `t`.

mod bipoly;
mod rational;
mod unipoly;

pub use bipoly::BiPoly;
pub use rational::Rat;
pub use unipoly::UniPoly;

use std::fmt::Debug;

/// Commutative ring with 1 admitting exact multiplication by arbitrary
/// rationals. The series engine is generic over this surface; the scalar
/// multiplication is what makes truncated `log`/`exp` possible.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Exact scalar multiplication by a rational.
    fn mul_rat(&self, r: &Rat) -> Self;
    /// Embedding of the rationals.
    fn from_rat(r: &Rat) -> Self;
    /// The rational value of a constant element, if it is one.
    fn as_rat(&self) -> Option<Rat>;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
}

impl Ring for Rat {
    fn zero() -> Self {
        Rat::zero()
    }

    fn one() -> Self {
        Rat::one()
    }

    fn is_zero(&self) -> bool {
        self.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn neg(&self) -> Self {
        -self
    }

    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn mul_rat(&self, r: &Rat) -> Self {
        self * r
    }

    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn as_rat(&self) -> Option<Rat> {
        Some(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rat::ratio(n, d))
    }

    fn arb_unipoly() -> impl Strategy<Value = UniPoly> {
        proptest::collection::vec((0u32..6, arb_rat()), 0..5).prop_map(UniPoly::from_terms)
    }

    fn arb_bipoly() -> impl Strategy<Value = BiPoly> {
        proptest::collection::vec(((0u32..4, 0u32..4), arb_rat()), 0..5).prop_map(|terms| {
            let mut p = BiPoly::zero();
            for ((qe, te), c) in terms {
                p.add_term(qe, te, &c);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn rat_ring_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!((&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &(-&a), Rat::zero());
        }

        #[test]
        fn unipoly_ring_axioms(a in arb_unipoly(), b in arb_unipoly(), c in arb_unipoly()) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn eval_is_ring_homomorphism(a in arb_unipoly(), b in arb_unipoly(), x in -5i64..=5) {
            prop_assert_eq!(a.mul(&b).eval_int(x), a.eval_int(x) * b.eval_int(x));
            prop_assert_eq!(a.add(&b).eval_int(x), a.eval_int(x) + b.eval_int(x));
        }

        #[test]
        fn bipoly_swap_involution(a in arb_bipoly(), b in arb_bipoly()) {
            prop_assert_eq!(a.swap().swap(), a.clone());
            // swap is a ring map.
            prop_assert_eq!(a.mul(&b).swap(), a.swap().mul(&b.swap()));
        }
    }
}
