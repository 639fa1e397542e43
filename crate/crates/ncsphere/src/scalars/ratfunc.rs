use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{Float, One, ToPrimitive, Zero};

use super::{QLaurent, Rational, Ring};
use crate::error::{Error, Result};

/// Dense polynomial in `t = q^{-1}`, ascending powers.
type TPoly = Vec<Rational>;

fn trim(p: &mut TPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Split a Laurent polynomial as `q^M · P(q^{-1})` with `P(0) ≠ 0`.
fn to_tpoly(l: &QLaurent) -> (i32, TPoly) {
    let top = l.max_exp().expect("nonzero Laurent polynomial");
    let low = l.min_exp().unwrap();
    let mut p = vec![Rational::zero(); (top - low) as usize + 1];
    for (e, c) in l.terms() {
        p[(top - e) as usize] = c.clone();
    }
    (top, p)
}

fn from_tpoly(shift: i32, p: &TPoly) -> QLaurent {
    let mut out = QLaurent::zero();
    for (i, c) in p.iter().enumerate() {
        out.add_term(shift - i as i32, c.clone());
    }
    out
}

fn divrem(a: &TPoly, b: &TPoly) -> (TPoly, TPoly) {
    let mut r = a.clone();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if r.len() < b.len() {
        return (vec![], r);
    }
    let mut quo = vec![Rational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let k = r.len() - 1 - db;
        let c = r.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            r[k + i] -= &c * bc;
        }
        quo[k] = c;
        r.pop();
        trim(&mut r);
    }
    (quo, r)
}

fn gcd(a: &TPoly, b: &TPoly) -> TPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    x
}

/// Exact rational function `num / den` of `q` in lowest terms.
///
/// The denominator is normalized to a polynomial in `q^{-1}` with constant term 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRatFunc {
    num: QLaurent,
    den: QLaurent,
}

impl QRatFunc {
    pub fn new(num: QLaurent, den: QLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (a, n) = to_tpoly(&num);
        let (b, d) = to_tpoly(&den);
        let g = gcd(&n, &d);
        let (mut n, _) = divrem(&n, &g);
        let (mut d, _) = divrem(&d, &g);
        let c = d[0].clone();
        for x in n.iter_mut().chain(d.iter_mut()) {
            *x /= &c;
        }
        Ok(QRatFunc { num: from_tpoly(a - b, &n), den: from_tpoly(0, &d) })
    }

    pub fn from_laurent(p: QLaurent) -> Self {
        QRatFunc { num: p, den: QLaurent::one() }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_laurent(QLaurent::constant(r))
    }

    pub fn num(&self) -> &QLaurent {
        &self.num
    }

    pub fn den(&self) -> &QLaurent {
        &self.den
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = acc * base.clone();
        }
        Ok(acc)
    }

    /// The value when `self` is a rational constant.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_rational()
        } else {
            None
        }
    }

    pub fn evaluate_exact(&self, q: &Rational) -> Result<Rational> {
        let d = self.den.evaluate_exact(q)?;
        if d.is_zero() {
            return Err(Error::PoleAtValue(q.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(self.num.evaluate_exact(q)? / d)
    }

    pub fn evaluate_numeric<F: Float>(&self, q: F) -> Result<F> {
        let qf = q.to_f64().unwrap_or(f64::NAN);
        let exact = Rational::from_float(qf).ok_or(Error::PoleAtValue(qf))?;
        let v = self.evaluate_exact(&exact).map_err(|_| Error::PoleAtValue(qf))?;
        Ok(F::from(v.to_f64().unwrap_or(f64::NAN)).unwrap())
    }

    /// Factor the denominator as a product of `(1 - q^{-m})^k`, if possible.
    fn den_factors(&self) -> Option<Vec<(u32, u32)>> {
        let (_, mut d) = to_tpoly(&self.den);
        let mut out = Vec::new();
        let mut m = d.len().saturating_sub(1);
        while d.len() > 1 {
            if m == 0 {
                return None;
            }
            let mut f = vec![Rational::zero(); m + 1];
            f[0] = Rational::one();
            f[m] = -Rational::one();
            let mut k = 0;
            loop {
                let (quo, r) = divrem(&d, &f);
                if !r.is_empty() {
                    break;
                }
                d = quo;
                k += 1;
            }
            if k > 0 {
                out.push((m as u32, k));
            }
            m -= 1;
        }
        out.reverse();
        Some(out)
    }
}

impl Zero for QRatFunc {
    fn zero() -> Self {
        QRatFunc { num: QLaurent::zero(), den: QLaurent::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for QRatFunc {
    fn one() -> Self {
        Self::from_laurent(QLaurent::one())
    }
}

impl Add for QRatFunc {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num + o.num, self.den).unwrap();
        }
        Self::new(self.num * o.den.clone() + o.num * self.den.clone(), self.den * o.den).unwrap()
    }
}

impl Sub for QRatFunc {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for QRatFunc {
    type Output = Self;
    fn neg(self) -> Self {
        QRatFunc { num: -self.num, den: self.den }
    }
}

impl Mul for QRatFunc {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self::new(self.num * o.num, self.den * o.den).unwrap()
    }
}

impl Div for QRatFunc {
    type Output = Result<Self>;
    fn div(self, o: Self) -> Result<Self> {
        Ok(self * o.inv()?)
    }
}

impl fmt::Display for QRatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let num = if self.num.is_compound() { format!("({})", self.num.compact()) } else { self.num.compact() };
        match self.den_factors() {
            Some(fs) => {
                let parts: Vec<String> = fs
                    .iter()
                    .map(|&(m, k)| {
                        let base = if m == 1 { "(1-q^-1)".to_string() } else { format!("(1-q^-{m})") };
                        if k == 1 {
                            base
                        } else {
                            format!("{base}^{k}")
                        }
                    })
                    .collect();
                if parts.len() == 1 {
                    write!(f, "{num}/{}", parts[0])
                } else {
                    write!(f, "{num}/({})", parts.join("*"))
                }
            }
            None => write!(f, "{num}/({})", self.den.compact()),
        }
    }
}

impl Ring for QRatFunc {
    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_rational(r: Rational) -> Self {
        QRatFunc::from_rational(r)
    }

    fn is_compound(&self) -> bool {
        !self.den.is_one() || self.num.is_compound()
    }

    fn as_rational(&self) -> Option<Rational> {
        QRatFunc::as_rational(self)
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        (self.clone() / d.clone()).ok()
    }
}
