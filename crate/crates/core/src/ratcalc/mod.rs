//! Exact rationals and univariate rational functions in the genus `g`.
//!
//! Every other module computes over one of these two carriers. Formulas that
//! should work both at a fixed genus and symbolically in `g` are written once
//! against the [`Scalar`] trait.

mod poly;
mod rat;
mod ratfunc;

use std::cmp::Ordering;
use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

pub use poly::Poly;
pub use rat::Rat;
pub use ratfunc::RatFunc;

use crate::error::Result;

/// A commutative field element usable in the slope formulas.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_rat(r: Rat) -> Self;

    fn is_zero(&self) -> bool;

    fn try_div(&self, rhs: &Self) -> Result<Self>;

    /// Sign when it is determined, `None` for a non-constant function.
    fn sign(&self) -> Option<Ordering>;

    fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_int(n))
    }

    fn frac(p: i64, q: i64) -> Self {
        Self::from_rat(Rat::new(p, q).expect("nonzero literal denominator"))
    }
}

impl Scalar for Rat {
    fn from_rat(r: Rat) -> Self {
        r
    }

    fn is_zero(&self) -> bool {
        Rat::is_zero(self)
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.checked_div(rhs)
    }

    fn sign(&self) -> Option<Ordering> {
        Some(self.signum())
    }
}

impl Scalar for RatFunc {
    fn from_rat(r: Rat) -> Self {
        RatFunc::constant(r)
    }

    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }

    fn try_div(&self, rhs: &Self) -> Result<Self> {
        self.checked_div(rhs)
    }

    fn sign(&self) -> Option<Ordering> {
        self.as_constant().map(|c| c.signum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-40i64..40, 1i64..12).prop_map(|(p, q)| Rat::new(p, q).unwrap())
    }

    fn small_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec(small_rat(), 0..=max_deg + 1).prop_map(Poly::new)
    }

    fn ratfunc() -> impl Strategy<Value = RatFunc> {
        (small_poly(3), small_poly(2))
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn normalization_is_idempotent(f in ratfunc()) {
            let again = RatFunc::new(f.numer().clone(), f.denom().clone()).unwrap();
            prop_assert_eq!(again.numer(), f.numer());
            prop_assert_eq!(again.denom(), f.denom());
        }

        #[test]
        fn eval_matches_unnormalized_substitution(
            n in small_poly(3), d in small_poly(2), g in -30i64..30
        ) {
            prop_assume!(!d.is_zero());
            let g = Rat::from_int(g);
            let raw_den = d.eval(&g);
            prop_assume!(!raw_den.is_zero());
            let f = RatFunc::new(n.clone(), d).unwrap();
            prop_assert_eq!(f.eval(&g).unwrap(), n.eval(&g).checked_div(&raw_den).unwrap());
        }

        #[test]
        fn eval_commutes_with_arithmetic(a in ratfunc(), b in ratfunc(), g in -30i64..30) {
            let g = Rat::from_int(g);
            if let (Ok(x), Ok(y)) = (a.eval(&g), b.eval(&g)) {
                prop_assert_eq!((&a + &b).eval(&g).unwrap(), &x + &y);
                prop_assert_eq!((&a - &b).eval(&g).unwrap(), &x - &y);
                prop_assert_eq!((&a * &b).eval(&g).unwrap(), &x * &y);
                if !y.is_zero() {
                    if let Ok(v) = a.checked_div(&b).unwrap().eval(&g) {
                        prop_assert_eq!(v, x.checked_div(&y).unwrap());
                    }
                }
            }
        }

        #[test]
        fn composition_evaluates_pointwise(f in ratfunc(), h in ratfunc(), g in -30i64..30) {
            let g = Rat::from_int(g);
            let Ok(inner) = h.eval(&g) else { return Ok(()) };
            let Ok(outer) = f.eval(&inner) else { return Ok(()) };
            if let Ok(c) = f.compose(&h) {
                // removable singularities may have been cancelled; where both
                // sides are defined they agree
                if let Ok(v) = c.eval(&g) {
                    prop_assert_eq!(v, outer);
                }
            }
        }

        #[test]
        fn equality_agrees_with_sampled_evaluation(a in ratfunc(), b in ratfunc()) {
            let deg = |f: &RatFunc| f.numer().degree().unwrap_or(0) + f.denom().degree().unwrap_or(0);
            let needed = deg(&a) + deg(&b) + 1;
            let mut agree = true;
            let mut seen = 0;
            let mut g = 0i64;
            while seen < needed {
                g += 1;
                if let (Ok(x), Ok(y)) = (a.eval_int(g), b.eval_int(g)) {
                    seen += 1;
                    agree &= x == y;
                }
            }
            prop_assert_eq!(agree, a == b);
        }

        #[test]
        fn field_axioms(a in small_rat(), b in small_rat(), c in small_rat()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !b.is_zero() {
                prop_assert_eq!(a.checked_div(&b).unwrap() * &b, a.clone());
            }
        }
    }
}
