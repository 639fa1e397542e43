use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{join_terms, GaussRational, ParseScalar, Rational, Ring};
use crate::error::{Error, Result};

/// Exponent vector of a phase monomial `Π λ_jk^{e_jk/2}` (stored doubled, `j < k`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PhaseExp(Vec<(u8, u8, i32)>);

impl PhaseExp {
    pub fn unit() -> Self {
        PhaseExp(Vec::new())
    }

    /// `λ_jk^{doubled/2}`, normalizing `λ_kj = λ_jk^{-1}` and `λ_jj = 1`.
    pub fn single(j: u8, k: u8, doubled: i32) -> Self {
        match j.cmp(&k) {
            std::cmp::Ordering::Equal => Self::unit(),
            _ if doubled == 0 => Self::unit(),
            std::cmp::Ordering::Less => PhaseExp(vec![(j, k, doubled)]),
            std::cmp::Ordering::Greater => PhaseExp(vec![(k, j, -doubled)]),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[(u8, u8, i32)] {
        &self.0
    }

    /// Doubled exponent of `λ_jk`.
    pub fn get(&self, j: u8, k: u8) -> i32 {
        let (a, b, s) = if j < k { (j, k, 1) } else { (k, j, -1) };
        self.0.iter().find(|e| e.0 == a && e.1 == b).map_or(0, |e| s * e.2)
    }

    pub fn add(&self, o: &PhaseExp) -> PhaseExp {
        let mut m: BTreeMap<(u8, u8), i32> = BTreeMap::new();
        for &(j, k, e) in self.0.iter().chain(o.0.iter()) {
            *m.entry((j, k)).or_default() += e;
        }
        PhaseExp(m.into_iter().filter(|(_, e)| *e != 0).map(|((j, k), e)| (j, k, e)).collect())
    }

    pub fn neg(&self) -> PhaseExp {
        PhaseExp(self.0.iter().map(|&(j, k, e)| (j, k, -e)).collect())
    }

    pub fn scale(&self, n: i32) -> PhaseExp {
        if n == 0 {
            return Self::unit();
        }
        PhaseExp(self.0.iter().map(|&(j, k, e)| (j, k, e * n)).collect())
    }
}

impl fmt::Display for PhaseExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(j, k, e)| {
                let exp = if e % 2 == 0 {
                    match e / 2 {
                        1 => String::new(),
                        h => format!("^{h}"),
                    }
                } else {
                    format!("^({e}/2)")
                };
                format!("L{j}{k}{exp}")
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Element of the group ring of phase monomials over the Gaussian rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Phase {
    terms: BTreeMap<PhaseExp, GaussRational>,
}

impl Phase {
    pub fn monomial(c: GaussRational, e: PhaseExp) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Phase { terms }
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::monomial(c, PhaseExp::unit())
    }

    /// `λ_jk^{doubled/2}`.
    pub fn lambda(j: u8, k: u8, doubled: i32) -> Self {
        Self::monomial(GaussRational::one(), PhaseExp::single(j, k, doubled))
    }

    pub fn from_exp(e: PhaseExp) -> Self {
        Self::monomial(GaussRational::one(), e)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PhaseExp, &GaussRational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, e: PhaseExp, c: GaussRational) {
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

    pub fn inv(&self) -> Result<Self> {
        match self.terms.len() {
            0 => Err(Error::DivisionByZero),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                Ok(Self::monomial(c.inv()?, e.neg()))
            }
            _ => Err(Error::NotInvertible(self.to_string())),
        }
    }

    /// Specialize every `λ_jk` to 1.
    pub fn at_classical_point(&self) -> GaussRational {
        self.terms.values().fold(GaussRational::zero(), |a, c| a + c.clone())
    }
}

impl Zero for Phase {
    fn zero() -> Self {
        Phase { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Phase {
    fn one() -> Self {
        Self::constant(GaussRational::one())
    }
}

impl Add for Phase {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (e, c) in o.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for Phase {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for Phase {
    type Output = Self;
    fn neg(self) -> Self {
        Phase { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Mul for Phase {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.add_term(a.add(b), x.clone() * y.clone());
            }
        }
        out
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            let s = if e.is_unit() {
                c.to_string()
            } else if c.is_one() {
                e.to_string()
            } else if (-c.clone()).is_one() {
                format!("-{e}")
            } else if c.is_compound() {
                format!("({})*{e}", c.compact())
            } else {
                format!("{c}*{e}")
            };
            parts.push(s);
        }
        write!(f, "{}", join_terms(parts))
    }
}

impl Ring for Phase {
    fn conj(&self) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(e.neg(), c.conj());
        }
        out
    }

    fn from_rational(r: Rational) -> Self {
        Self::constant(GaussRational::real(r))
    }

    fn is_compound(&self) -> bool {
        self.terms.len() > 1 || self.terms.values().any(|c| c.is_compound())
    }

    fn negative_part(&self) -> Option<Self> {
        if self.terms.len() == 1 && !self.is_compound() && self.to_string().starts_with('-') {
            Some(-self.clone())
        } else {
            None
        }
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        match self.terms.iter().next() {
            Some((e, c)) if self.terms.len() == 1 && e.is_unit() => c.as_rational(),
            _ => None,
        }
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        self.quotient(d)
    }
}

impl Phase {
    fn quotient(&self, d: &Self) -> Option<Self> {
        d.inv().ok().map(|i| self.clone() * i)
    }
}

impl ParseScalar for Phase {
    fn phase(j: u8, k: u8, doubled: i32) -> Option<Self> {
        Some(Self::lambda(j, k, doubled))
    }

    fn imaginary_unit() -> Option<Self> {
        Some(Self::constant(GaussRational::i()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_of_lambda_is_inverse() {
        let l = Phase::lambda(1, 2, 2);
        assert_eq!(l.conj(), Phase::lambda(1, 2, -2));
        assert_eq!(l.conj(), l.inv().unwrap());
        assert_eq!(Phase::lambda(2, 1, 2), l.inv().unwrap());
        assert_eq!(Phase::lambda(3, 3, 2), Phase::one());
    }

    #[test]
    fn half_exponents_print() {
        assert_eq!(Phase::lambda(1, 2, 1).to_string(), "L12^(1/2)");
        assert_eq!(Phase::lambda(1, 2, -2).to_string(), "L12^-1");
        assert_eq!((Phase::lambda(1, 2, 1) * Phase::lambda(1, 2, 1)).to_string(), "L12");
    }

    #[test]
    fn multi_term_inverse_fails() {
        let p = Phase::one() + Phase::lambda(1, 2, 2);
        assert!(matches!(p.inv(), Err(Error::NotInvertible(_))));
    }
}
