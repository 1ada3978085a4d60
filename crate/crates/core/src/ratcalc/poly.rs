use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rat;
use crate::error::{Error, Result};

/// Dense univariate polynomial over the rationals, coefficients stored from
/// the constant term upward. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate itself.
    pub fn var() -> Self {
        Poly::from_ints(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn constant_term(&self) -> Rat {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let lead = divisor.leading_coeff().ok_or(Error::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() < divisor.coeffs.len() {
            return Ok((Poly::zero(), self.clone()));
        }
        let lead_inv = lead.recip()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] = &rem[k + i] - &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip().expect("nonzero leading coefficient")),
            None => Poly::zero(),
        }
    }

    /// Monic greatest common divisor (Euclid over the rationals).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut p, mut q) = (a.clone(), b.clone());
        while !q.is_zero() {
            let (_, r) = p.div_rem(&q).expect("nonzero divisor");
            p = q;
            // keep coefficient growth in check
            q = r.monic();
        }
        p.monic()
    }

    /// Least common multiple of coefficient denominators.
    pub(crate) fn denom_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Gcd of the numerators; meaningful once all coefficients are integers.
    pub(crate) fn numer_gcd(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c.numer()))
    }

    /// `self(inner)` by Horner's rule.
    pub fn compose(&self, inner: &Poly) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * inner) + &Poly::constant(c.clone()))
    }

    /// Formats with the given variable name, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match deg {
                0 => String::new(),
                1 => var.to_string(),
                d => format!("{var}^{d}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag == Rat::one() {
                out.push_str(&mono);
            } else if mag.is_integer() {
                out.push_str(&format!("{mag}{mono}"));
            } else {
                out.push_str(&format!("({mag}){mono}"));
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("g"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Rat::zero();
        Poly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_trailing_zeros() {
        let p = Poly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Poly::from_ints(&[0, 0]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn division_with_remainder() {
        // g^2 - 1 = (g - 1)(g + 1)
        let a = Poly::from_ints(&[-1, 0, 1]);
        let b = Poly::from_ints(&[-1, 1]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, Poly::from_ints(&[1, 1]));
        assert!(r.is_zero());

        let (q, r) = Poly::from_ints(&[3, 0, 2]).div_rem(&Poly::from_ints(&[1, 1])).unwrap();
        assert_eq!(&(&q * &Poly::from_ints(&[1, 1])) + &r, Poly::from_ints(&[3, 0, 2]));
        assert!(Poly::var().div_rem(&Poly::zero()).is_err());
    }

    #[test]
    fn gcd_is_monic() {
        let a = &Poly::from_ints(&[-2, 2]) * &Poly::from_ints(&[3, 1]);
        let b = &Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[5, 7]);
        assert_eq!(Poly::gcd(&a, &b), Poly::from_ints(&[-1, 1]));
        assert_eq!(Poly::gcd(&Poly::from_ints(&[4]), &Poly::var()), Poly::from_ints(&[1]));
    }

    #[test]
    fn eval_and_compose() {
        let p = Poly::from_ints(&[-3, 5]);
        assert_eq!(p.eval(&Rat::from_int(11)), Rat::from_int(52));
        let sq = Poly::from_ints(&[0, 0, 1]);
        assert_eq!(sq.compose(&p), &p * &p);
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_ints(&[-3, 5]).to_string(), "5g - 3");
        assert_eq!(Poly::from_ints(&[0, -1, 1]).to_string(), "g^2 - g");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
