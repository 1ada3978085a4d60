use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Poly, Rat};
use crate::error::{Error, Result};

/// A univariate rational function in the genus variable `g`.
///
/// Canonical form: numerator and denominator are coprime, and the
/// denominator is a primitive integer polynomial with positive leading
/// coefficient. Common factors are cancelled eagerly, so a pole removed by
/// cancellation is treated as removable.
#[derive(Clone)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc {
                num: Poly::zero(),
                den: Poly::from_ints(&[1]),
            };
        }
        let common = Poly::gcd(&num, &den);
        let (num, _) = num.div_rem(&common).expect("gcd is nonzero");
        let (den, _) = den.div_rem(&common).expect("gcd is nonzero");

        let clear = Rat::from_bigint(den.denom_lcm());
        let den = den.scale(&clear);
        let mut content = Rat::from_bigint(den.numer_gcd());
        if den.leading_coeff().is_some_and(Rat::is_negative) {
            content = -content;
        }
        let factor = clear.checked_div(&content).expect("nonzero content");
        RatFunc {
            num: num.scale(&factor),
            den: den.scale(&content.recip().expect("nonzero content")),
        }
    }

    pub fn from_polys(num: &[i64], den: &[i64]) -> Result<Self> {
        RatFunc::new(Poly::from_ints(num), Poly::from_ints(den))
    }

    pub fn poly(p: Poly) -> Self {
        Self::normalize(p, Poly::from_ints(&[1]))
    }

    pub fn constant(c: Rat) -> Self {
        Self::poly(Poly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rat::from_int(n))
    }

    /// The genus variable `g`.
    pub fn var() -> Self {
        Self::poly(Poly::var())
    }

    /// `a g + b`.
    pub fn affine(a: Rat, b: Rat) -> Self {
        Self::poly(Poly::new(vec![b, a]))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(c)` when the function is the constant `c`.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(
                self.num
                    .constant_term()
                    .checked_div(&self.den.constant_term())
                    .expect("denominator is a nonzero constant"),
            )
        } else {
            None
        }
    }

    pub fn eval(&self, g: &Rat) -> Result<Rat> {
        let d = self.den.eval(g);
        if d.is_zero() {
            return Err(Error::Pole(g.clone()));
        }
        self.num.eval(g).checked_div(&d)
    }

    pub fn eval_int(&self, g: i64) -> Result<Rat> {
        self.eval(&Rat::from_int(g))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// `self(inner(g))`.
    pub fn compose(&self, inner: &RatFunc) -> Result<RatFunc> {
        let horner = |p: &Poly| {
            p.coeffs()
                .iter()
                .rev()
                .fold(RatFunc::zero(), |acc, c| &(&acc * inner) + &RatFunc::constant(c.clone()))
        };
        let den = horner(&self.den);
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        horner(&self.num).checked_div(&den)
    }

    /// Limit as `g` tends to +infinity, `None` when unbounded.
    pub fn limit_at_infinity(&self) -> Option<Rat> {
        let dn = self.num.degree();
        let dd = self.den.degree().expect("nonzero denominator");
        match dn {
            None => Some(Rat::zero()),
            Some(d) if d < dd => Some(Rat::zero()),
            Some(d) if d == dd => Some(
                self.num
                    .leading_coeff()
                    .unwrap()
                    .checked_div(self.den.leading_coeff().unwrap())
                    .unwrap(),
            ),
            _ => None,
        }
    }

    /// Sign for all sufficiently large `g`.
    pub fn eventual_sign(&self) -> Ordering {
        match self.num.leading_coeff() {
            None => Ordering::Equal,
            Some(c) => c.signum(),
        }
    }

    pub fn display_in(&self, var: &str) -> String {
        let n = self.num.display_in(var);
        if self.den.is_constant() {
            let d = self.den.constant_term();
            if d == Rat::one() {
                return n;
            }
            return format!("({n})/{d}");
        }
        let wrap = |p: &Poly, s: String| {
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!(
            "{}/{}",
            wrap(&self.num, n),
            wrap(&self.den, self.den.display_in(var))
        )
    }
}

/// Equality by cross-multiplied polynomial identity.
impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("g"))
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::normalize(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! owned_ops {
    ($trait:ident, $method:ident) => {
        impl $trait for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl From<Rat> for RatFunc {
    fn from(c: Rat) -> Self {
        RatFunc::constant(c)
    }
}
