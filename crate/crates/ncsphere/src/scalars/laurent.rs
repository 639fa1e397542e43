use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Float, One, ToPrimitive, Zero};

use super::{join_terms, GaussRational, ParseScalar, Rational, Ring};
use crate::error::{Error, Result};

/// Laurent polynomial `Σ c_e q^e` with coefficients in `R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent<R> {
    terms: BTreeMap<i32, R>,
}

pub type QLaurent = Laurent<Rational>;
pub type GLaurent = Laurent<GaussRational>;

fn add_exp(a: i32, b: i32) -> i32 {
    a.checked_add(b).expect("Laurent exponent overflow")
}

impl<R: Ring> Laurent<R> {
    pub fn monomial(c: R, e: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Laurent { terms }
    }

    pub fn constant(c: R) -> Self {
        Self::monomial(c, 0)
    }

    /// `q^e`.
    pub fn q(e: i32) -> Self {
        Self::monomial(R::one(), e)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &R)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i32) -> R {
        self.terms.get(&e).cloned().unwrap_or_else(R::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    pub fn add_term(&mut self, e: i32, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero();
        for (e, a) in self.terms() {
            out.add_term(e, a.clone() * c.clone());
        }
        out
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (add_exp(*e, k), c.clone())).collect() }
    }

    /// Substitute `q ↦ q^{-1}`.
    pub fn invert_q(&self) -> Self {
        Laurent { terms: self.terms.iter().map(|(e, c)| (-*e, c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Laurent<S> {
        let mut out = Laurent::<S>::zero();
        for (e, c) in self.terms() {
            out.add_term(e, f(c));
        }
        out
    }

    /// Value of `dp/dq` at `q = 1`, i.e. `Σ e·c_e`.
    pub fn q_derivative_at_1(&self) -> R {
        let mut acc = R::zero();
        for (e, c) in self.terms() {
            acc = acc + R::from_int(e as i64) * c.clone();
        }
        acc
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> R {
        let mut acc = R::zero();
        for (_, c) in self.terms() {
            acc = acc + c.clone();
        }
        acc
    }
}

impl QLaurent {
    /// Exact value at a nonzero rational `q`.
    pub fn evaluate_exact(&self, q: &Rational) -> Result<Rational> {
        if q.is_zero() && self.min_exp().is_some_and(|e| e < 0) {
            return Err(Error::PoleAtValue(0.0));
        }
        let mut acc = Rational::zero();
        for (e, c) in self.terms() {
            let p = if e >= 0 {
                num_traits::pow(q.clone(), e as usize)
            } else {
                num_traits::pow(q.recip(), e.unsigned_abs() as usize)
            };
            acc += c * p;
        }
        Ok(acc)
    }

    /// Floating value at `q`; computed exactly from the binary value of `q` and rounded once.
    pub fn evaluate_numeric<F: Float>(&self, q: F) -> Result<F> {
        let qf = q.to_f64().unwrap_or(f64::NAN);
        let exact = Rational::from_float(qf).ok_or(Error::PoleAtValue(qf))?;
        let v = self.evaluate_exact(&exact).map_err(|_| Error::PoleAtValue(qf))?;
        Ok(F::from(v.to_f64().unwrap_or(f64::NAN)).unwrap())
    }
}

impl<R: Ring> Zero for Laurent<R> {
    fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Ring> One for Laurent<R> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Ring> Add for Laurent<R> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (e, c) in o.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl<R: Ring> Sub for Laurent<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<R: Ring> Neg for Laurent<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Laurent { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl<R: Ring> Mul for Laurent<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(add_exp(*a, *b), x.clone() * y.clone());
            }
        }
        out
    }
}

fn q_part(e: i32) -> String {
    match e {
        1 => "q".to_string(),
        _ => format!("q^{e}"),
    }
}

impl<R: Ring> fmt::Display for Laurent<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let s = if *e == 0 {
                c.to_string()
            } else if c.is_one() {
                q_part(*e)
            } else if (-c.clone()).is_one() {
                format!("-{}", q_part(*e))
            } else if c.is_compound() {
                format!("({})*{}", c.compact(), q_part(*e))
            } else {
                format!("{}*{}", c, q_part(*e))
            };
            parts.push(s);
        }
        write!(f, "{}", join_terms(parts))
    }
}

impl<R: Ring> Ring for Laurent<R> {
    fn conj(&self) -> Self {
        self.map(|c| c.conj())
    }

    fn from_rational(r: Rational) -> Self {
        Self::constant(R::from_rational(r))
    }

    fn is_compound(&self) -> bool {
        self.terms.len() > 1 || self.terms.values().any(|c| c.is_compound())
    }

    fn negative_part(&self) -> Option<Self> {
        if self.terms.len() == 1 && self.to_string().starts_with('-') {
            Some(-self.clone())
        } else {
            None
        }
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            self.coeff(0).as_rational()
        } else {
            None
        }
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        let (dmax, dmin) = (d.max_exp()?, d.min_exp()?);
        let lead = d.coeff(dmax);
        let mut rem = self.clone();
        let mut quo = Self::zero();
        let steps = match (self.max_exp(), self.min_exp()) {
            (Some(a), Some(b)) => (a - b) - (dmax - dmin) + 1,
            _ => return Some(Self::zero()),
        };
        for _ in 0..steps.max(0) {
            let Some(top) = rem.max_exp() else { break };
            let c = rem.coeff(top).try_div(&lead)?;
            let t = Self::monomial(c, top - dmax);
            rem = rem - t.clone() * d.clone();
            quo = quo + t;
        }
        rem.is_zero().then_some(quo)
    }
}

impl<R: ParseScalar> ParseScalar for Laurent<R> {
    fn q_power(e: i32) -> Option<Self> {
        Some(Self::q(e))
    }

    fn imaginary_unit() -> Option<Self> {
        R::imaginary_unit().map(Self::constant)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, rat};

    fn one_minus_q(e: i32) -> QLaurent {
        QLaurent::one() - QLaurent::q(e)
    }

    #[test]
    fn representation_of_one_minus_q_inverse_square() {
        let p = one_minus_q(-2);
        let terms: Vec<_> = p.terms().map(|(e, c)| (e, c.clone())).collect();
        assert_eq!(terms, vec![(-2, int(-1)), (0, int(1))]);
        assert_eq!(p.to_string(), "1 - q^-2");
    }

    #[test]
    fn q_derivative_examples() {
        let p = QLaurent::q(1) - QLaurent::q(-1);
        assert_eq!(p.q_derivative_at_1(), int(2));
        assert_eq!(QLaurent::constant(int(5)).q_derivative_at_1(), int(0));
        assert_eq!(one_minus_q(-2).q_derivative_at_1(), int(2));
    }

    #[test]
    fn q_derivative_matches_finite_difference() {
        let p = one_minus_q(-2) * QLaurent::q(3) + QLaurent::constant(rat(1, 3)) * QLaurent::q(-5);
        let h = 1e-6;
        let fd = (p.evaluate_numeric(1.0 + h).unwrap() - p.evaluate_numeric(1.0 - h).unwrap()) / (2.0 * h);
        let exact = p.q_derivative_at_1().to_f64().unwrap();
        assert!((fd - exact).abs() < 1e-6, "{fd} vs {exact}");
    }

    #[test]
    fn numeric_evaluation_of_half_square() {
        let p = (QLaurent::q(-1) - QLaurent::one()).pow(2).scale(&rat(1, 2));
        assert_eq!(p.evaluate_numeric(2.0).unwrap(), 0.125);
        assert_eq!(p.evaluate_exact(&int(2)).unwrap(), rat(1, 8));
    }

    #[test]
    fn display_of_mixed_terms() {
        let p = QLaurent::q(2).scale(&int(3)) - QLaurent::q(1) + QLaurent::constant(rat(1, 2));
        assert_eq!(p.to_string(), "3*q^2 - q + 1/2");
        assert_eq!(QLaurent::zero().to_string(), "0");
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn exponent_overflow_is_fatal() {
        let _ = QLaurent::q(i32::MAX) * QLaurent::q(1);
    }
}
