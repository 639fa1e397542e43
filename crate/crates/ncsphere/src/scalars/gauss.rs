use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{ParseScalar, Rational, Ring};
use crate::error::{Error, Result};

/// `re + im·i` with exact rational parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussRational { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        GaussRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(GaussRational { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = GaussRational::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc * base.clone();
        }
        Ok(acc)
    }
}

impl Add for GaussRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GaussRational { re: self.re + o.re, im: self.im + o.im }
    }
}

impl Sub for GaussRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GaussRational { re: self.re - o.re, im: self.im - o.im }
    }
}

impl Mul for GaussRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        GaussRational { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }
}

impl Neg for GaussRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussRational { re: -self.re, im: -self.im }
    }
}

impl Zero for GaussRational {
    fn zero() -> Self {
        GaussRational::real(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussRational {
    fn one() -> Self {
        GaussRational::real(Rational::one())
    }
}

impl fmt::Display for GaussRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im = if self.im.is_one() {
            "i".to_string()
        } else if (-&self.im).is_one() {
            "-i".to_string()
        } else {
            format!("{}*i", self.im)
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{im}"),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{} - {}", self.re, im.trim_start_matches('-'))
                } else {
                    write!(f, "{} + {}", self.re, im)
                }
            }
        }
    }
}

impl Ring for GaussRational {
    fn conj(&self) -> Self {
        GaussRational { re: self.re.clone(), im: -self.im.clone() }
    }

    fn from_rational(r: Rational) -> Self {
        GaussRational::real(r)
    }

    fn is_compound(&self) -> bool {
        !self.re.is_zero() && !self.im.is_zero()
    }

    fn as_rational(&self) -> Option<Rational> {
        self.im.is_zero().then(|| self.re.clone())
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        d.inv().ok().map(|i| self.clone() * i)
    }
}

impl ParseScalar for GaussRational {
    fn imaginary_unit() -> Option<Self> {
        Some(GaussRational::i())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn inverse_of_pythagorean_point_is_conjugate() {
        let z = GaussRational::new(rat(3, 5), rat(4, 5));
        assert_eq!(z.inv().unwrap(), z.conj());
        assert_eq!(z.norm_sqr(), rat(1, 1));
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussRational::i().to_string(), "i");
        assert_eq!((-GaussRational::i()).to_string(), "-i");
        assert_eq!(GaussRational::new(rat(1, 2), rat(-3, 2)).to_string(), "1/2 - 3/2*i");
    }

    #[test]
    fn zero_is_not_invertible() {
        assert_eq!(GaussRational::zero().inv(), Err(Error::DivisionByZero));
    }
}
