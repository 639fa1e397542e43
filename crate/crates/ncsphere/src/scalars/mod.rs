//! Exact coefficient rings.
//!
//! Every symbolic computation in the crate is generic over [`Ring`], with
//! concrete instances for rationals, Gaussian rationals, Laurent polynomials
//! in `q` and phase monomials in the deformation parameters `λ_jk`.

mod gauss;
mod laurent;
mod phase;
mod ratfunc;

use std::fmt;
use std::ops::{Mul, Neg, Sub};

use num_traits::{One, Zero};

pub use gauss::GaussRational;
pub use laurent::{GLaurent, Laurent, QLaurent};
pub use phase::{Phase, PhaseExp};
pub use ratfunc::QRatFunc;

pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Commutative coefficient ring with an involution.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Sub<Output = Self>
    + Neg<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn conj(&self) -> Self;

    fn from_rational(r: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    /// True when printing as a factor needs parentheses.
    fn is_compound(&self) -> bool;

    /// Printed form without spaces, used inside products.
    fn compact(&self) -> String {
        self.to_string().replace(' ', "")
    }

    /// `Some(-x)` when the printed form of `self` starts with a minus sign.
    fn negative_part(&self) -> Option<Self> {
        if !self.is_compound() && self.to_string().starts_with('-') {
            Some(-self.clone())
        } else {
            None
        }
    }

    /// Coefficient of the empty monomial when it is the only term, if any.
    fn as_rational(&self) -> Option<Rational>;

    /// Exact quotient `self / d` when it exists in the ring.
    fn try_div(&self, _d: &Self) -> Option<Self> {
        None
    }
}

impl Ring for Rational {
    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_rational(r: Rational) -> Self {
        r
    }

    fn is_compound(&self) -> bool {
        false
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn try_div(&self, d: &Self) -> Option<Self> {
        (!d.is_zero()).then(|| self / d)
    }
}

/// Ring that can be built from the scalar syntax of the expression grammar.
pub trait ParseScalar: Ring {
    fn q_power(_e: i32) -> Option<Self> {
        None
    }

    fn phase(_j: u8, _k: u8, _doubled: i32) -> Option<Self> {
        None
    }

    fn imaginary_unit() -> Option<Self> {
        None
    }
}

impl ParseScalar for Rational {}

pub(crate) fn join_terms(parts: Vec<String>) -> String {
    let mut out = String::new();
    for (i, p) in parts.into_iter().enumerate() {
        if i == 0 {
            out.push_str(&p);
        } else if let Some(rest) = p.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&p);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
