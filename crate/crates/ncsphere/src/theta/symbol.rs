//! Formal algebra of bigraded operators `c · J^k · x_1⋯x_m · λ^{Q(p)}`, where `λ = λ_12`,
//! `p = (p_1, p_2)` are the torus generators and `Q` is quadratic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalars::{Phase, Ring};

/// `Q(p) = ½(a11 p1² + a22 p2² + a12 p1p2 + b1 p1 + b2 p2)`; all coefficients stored doubled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QExp {
    pub a11: i64,
    pub a22: i64,
    pub a12: i64,
    pub b1: i64,
    pub b2: i64,
}

impl QExp {
    /// `a p1 + b p2` with integer `a, b`.
    pub fn linear(a: i64, b: i64) -> Self {
        QExp { b1: 2 * a, b2: 2 * b, ..Default::default() }
    }

    /// `c p1 p2`.
    pub fn mixed(c: i64) -> Self {
        QExp { a12: 2 * c, ..Default::default() }
    }

    pub fn is_zero(&self) -> bool {
        *self == Self::default()
    }

    pub fn add(&self, o: &Self) -> Self {
        QExp {
            a11: self.a11 + o.a11,
            a22: self.a22 + o.a22,
            a12: self.a12 + o.a12,
            b1: self.b1 + o.b1,
            b2: self.b2 + o.b2,
        }
    }

    pub fn neg(&self) -> Self {
        QExp { a11: -self.a11, a22: -self.a22, a12: -self.a12, b1: -self.b1, b2: -self.b2 }
    }

    /// `-Q(-p)`: the exponent after moving `λ^Q` across `J`.
    pub fn j_flip(&self) -> Self {
        QExp { a11: -self.a11, a22: -self.a22, a12: -self.a12, ..*self }
    }

    /// `Q(p + n) = Q'(p) + c`, returning `(Q', doubled c)`.
    pub fn shifted(&self, n: (i64, i64)) -> (Self, i64) {
        let (n1, n2) = n;
        let q = QExp {
            b1: self.b1 + 2 * self.a11 * n1 + self.a12 * n2,
            b2: self.b2 + 2 * self.a22 * n2 + self.a12 * n1,
            ..*self
        };
        let c = self.a11 * n1 * n1 + self.a22 * n2 * n2 + self.a12 * n1 * n2 + self.b1 * n1 + self.b2 * n2;
        (q, c)
    }
}

impl fmt::Display for QExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (c, m) in [(self.a11, "p1^2"), (self.a22, "p2^2"), (self.a12, "p1p2"), (self.b1, "p1"), (self.b2, "p2")] {
            if c == 0 {
                continue;
            }
            let coef = match (c % 2 == 0, c / 2) {
                (true, 1) => String::new(),
                (true, -1) => "-".into(),
                (true, h) => h.to_string(),
                (false, _) => format!("({c}/2)"),
            };
            parts.push(format!("{coef}{m}"));
        }
        write!(f, "{}", parts.join("+").replace("+-", "-"))
    }
}

/// An atomic homogeneous operator, possibly adjoined and/or conjugated by `J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Atom {
    pub jconj: bool,
    pub name: String,
    pub dagger: bool,
    /// Bidegree of the underlying plain operator.
    pub base: (i64, i64),
}

impl Atom {
    pub fn new(name: &str, bidegree: (i64, i64)) -> Self {
        Atom { jconj: false, name: name.to_string(), dagger: false, base: bidegree }
    }

    pub fn bidegree(&self) -> (i64, i64) {
        if self.jconj != self.dagger {
            (-self.base.0, -self.base.1)
        } else {
            self.base
        }
    }

    fn j_conjugated(&self) -> Self {
        Atom { jconj: !self.jconj, ..self.clone() }
    }

    fn adjoint(&self) -> Self {
        Atom { dagger: !self.dagger, ..self.clone() }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = if self.dagger { "*" } else { "" };
        if self.jconj {
            write!(f, "J{}{d}J^-1", self.name)
        } else {
            write!(f, "{}{d}", self.name)
        }
    }
}

/// Which atoms may be swapped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Commutation {
    #[default]
    Free,
    AllCommute,
    /// Plain atoms commute with `J`-conjugated ones.
    PlainWithConjugated,
}

impl Commutation {
    fn commute(self, a: &Atom, b: &Atom) -> bool {
        match self {
            Commutation::Free => false,
            Commutation::AllCommute => true,
            Commutation::PlainWithConjugated => a.jconj != b.jconj,
        }
    }

    /// Lexicographic normal form of a word in the partially commutative monoid.
    fn canonical(self, mut w: Vec<Atom>) -> Vec<Atom> {
        let mut changed = true;
        while changed {
            changed = false;
            for i in 1..w.len() {
                if w[i] < w[i - 1] && self.commute(&w[i - 1], &w[i]) {
                    w.swap(i - 1, i);
                    changed = true;
                }
            }
        }
        w
    }
}

type Key = (i32, Vec<Atom>, QExp);

/// A linear combination of normal-form terms `c · J^k · atoms · λ^{Q(p)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedSymbol {
    policy: Commutation,
    terms: BTreeMap<Key, Phase>,
}

fn lambda_pow(doubled: i64) -> Phase {
    Phase::lambda(1, 2, doubled as i32)
}

fn conj_pow(c: &Phase, k: i32) -> Phase {
    if k % 2 == 0 {
        c.clone()
    } else {
        c.conj()
    }
}

impl BigradedSymbol {
    pub fn zero(policy: Commutation) -> Self {
        BigradedSymbol { policy, terms: BTreeMap::new() }
    }

    pub fn scalar(policy: Commutation, c: Phase) -> Self {
        Self::term(policy, c, 0, vec![], QExp::default())
    }

    pub fn one(policy: Commutation) -> Self {
        Self::scalar(policy, Phase::one())
    }

    pub fn atom(policy: Commutation, a: Atom) -> Self {
        Self::term(policy, Phase::one(), 0, vec![a], QExp::default())
    }

    pub fn j_power(policy: Commutation, k: i32) -> Self {
        Self::term(policy, Phase::one(), k, vec![], QExp::default())
    }

    /// `λ^{Q(p)}`.
    pub fn lambda(policy: Commutation, q: QExp) -> Self {
        Self::term(policy, Phase::one(), 0, vec![], q)
    }

    pub fn term(policy: Commutation, c: Phase, k: i32, atoms: Vec<Atom>, q: QExp) -> Self {
        let mut s = Self::zero(policy);
        s.add_term((k, policy.canonical(atoms), q), c);
        s
    }

    pub fn policy(&self) -> Commutation {
        self.policy
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Key, &Phase)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, key: Key, c: Phase) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(key, v);
        }
    }

    pub fn scale(&self, c: &Phase) -> Self {
        let mut out = Self::zero(self.policy);
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone() * c.clone());
        }
        out
    }

    fn mul_terms(policy: Commutation, (k1, a1, q1): &Key, c1: &Phase, (k2, a2, q2): &Key, c2: &Phase) -> (Key, Phase) {
        let odd = k2 % 2 != 0;
        let mut coef = c1.clone() * conj_pow(c2, *k1);
        let mut atoms: Vec<Atom> = if odd { a1.iter().map(Atom::j_conjugated).collect() } else { a1.clone() };
        let moving = if odd { q1.j_flip() } else { *q1 };
        let total = a2.iter().fold((0, 0), |(x, y), a| {
            let (n1, n2) = a.bidegree();
            (x + n1, y + n2)
        });
        let (moved, c) = moving.shifted(total);
        coef = coef * conj_pow(&lambda_pow(c), k1 + k2);
        atoms.extend(a2.iter().cloned());
        ((k1 + k2, policy.canonical(atoms), moved.add(q2)), coef)
    }

    /// Bidegree of each term: `(-1)^k` times the total atom bidegree.
    pub fn term_bidegree((k, atoms, _): &Key) -> (i64, i64) {
        let s = if k % 2 == 0 { 1 } else { -1 };
        atoms.iter().fold((0, 0), |(x, y), a| {
            let (n1, n2) = a.bidegree();
            (x + s * n1, y + s * n2)
        })
    }

    /// The single bidegree of a homogeneous symbol.
    pub fn bidegree(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys().map(Self::term_bidegree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    fn termwise(&self, f: impl Fn(&Key, (i64, i64)) -> (Self, Self)) -> Self {
        let mut out = Self::zero(self.policy);
        for (key, c) in &self.terms {
            let (left, right) = f(key, Self::term_bidegree(key));
            let single = Self::term(self.policy, c.clone(), key.0, key.1.clone(), key.2);
            out = out + &(&(&left * &single) * &right);
        }
        out
    }

    /// `l(T) = T λ^{n_2 p_1}` for `T` of bidegree `(n_1, n_2)`.
    pub fn twist_left(&self) -> Self {
        let p = self.policy;
        self.termwise(|_, (_, n2)| (Self::one(p), Self::lambda(p, QExp::linear(n2, 0))))
    }

    /// `r(T) = λ^{n_1 p_2} T`.
    pub fn twist_right(&self) -> Self {
        let p = self.policy;
        self.termwise(|_, (n1, _)| (Self::lambda(p, QExp::linear(0, n1)), Self::one(p)))
    }

    /// `x ∗ y = λ^{n'_1 n_2} x y`, bilinear over homogeneous terms.
    pub fn star_product(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.policy);
        for (ka, ca) in &self.terms {
            let (_, n2) = Self::term_bidegree(ka);
            for (kb, cb) in &o.terms {
                let (m1, _) = Self::term_bidegree(kb);
                let (key, c) = Self::mul_terms(self.policy, ka, ca, kb, cb);
                out.add_term(key, c * lambda_pow(2 * m1 * n2));
            }
        }
        out
    }

    /// The adjoint: `(c J^k A λ^Q)* = λ^{-Q} A* J^{-k} c̄`.
    pub fn adjoint(&self) -> Self {
        let p = self.policy;
        let mut out = Self::zero(p);
        for ((k, atoms, q), c) in &self.terms {
            let mut t = Self::lambda(p, q.neg());
            for a in atoms.iter().rev() {
                t = &t * &Self::atom(p, a.adjoint());
            }
            t = &t * &Self::j_power(p, -k);
            t = &t * &Self::scalar(p, c.conj());
            out = out + &t;
        }
        out
    }

    /// `J̃ = J λ^{-p_1 p_2}`.
    pub fn jtilde(policy: Commutation) -> Self {
        &Self::j_power(policy, 1) * &Self::lambda(policy, QExp::mixed(-1))
    }

    /// `J̃^{-1} = λ^{p_1 p_2} J^{-1}`.
    pub fn jtilde_inv(policy: Commutation) -> Self {
        &Self::lambda(policy, QExp::mixed(1)) * &Self::j_power(policy, -1)
    }

    /// `J̃ x J̃^{-1}`.
    pub fn jtwist_conjugate(&self) -> Self {
        let p = self.policy;
        &(&Self::jtilde(p) * self) * &Self::jtilde_inv(p)
    }

    /// `J x J^{-1}`.
    pub fn j_conjugate(&self) -> Self {
        let p = self.policy;
        &(&Self::j_power(p, 1) * self) * &Self::j_power(p, -1)
    }

    /// The same element with a different commutation policy.
    pub fn with_policy(&self, policy: Commutation) -> Self {
        let mut out = Self::zero(policy);
        for ((k, a, q), c) in &self.terms {
            out.add_term((*k, policy.canonical(a.clone()), *q), c.clone());
        }
        out
    }

    /// Rebuild every term as a product of its factors and normalize again.
    pub fn renormalized(&self) -> Self {
        let p = self.policy;
        let mut out = Self::zero(p);
        for ((k, atoms, q), c) in &self.terms {
            let mut t = &Self::scalar(p, c.clone()) * &Self::j_power(p, *k);
            for a in atoms {
                t = &t * &Self::atom(p, a.clone());
            }
            out = out + &(&t * &Self::lambda(p, *q));
        }
        out
    }
}

impl<'a> Add<&'a BigradedSymbol> for BigradedSymbol {
    type Output = BigradedSymbol;
    fn add(mut self, o: &'a BigradedSymbol) -> BigradedSymbol {
        for (k, c) in &o.terms {
            self.add_term(k.clone(), c.clone());
        }
        self
    }
}

impl<'a> Sub<&'a BigradedSymbol> for BigradedSymbol {
    type Output = BigradedSymbol;
    fn sub(self, o: &'a BigradedSymbol) -> BigradedSymbol {
        self + &(-o.clone())
    }
}

impl Neg for BigradedSymbol {
    type Output = BigradedSymbol;
    fn neg(self) -> BigradedSymbol {
        self.scale(&-Phase::one())
    }
}

impl<'a> Mul<&'a BigradedSymbol> for &'a BigradedSymbol {
    type Output = BigradedSymbol;
    fn mul(self, o: &'a BigradedSymbol) -> BigradedSymbol {
        let mut out = BigradedSymbol::zero(self.policy);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &o.terms {
                let (key, c) = BigradedSymbol::mul_terms(self.policy, ka, ca, kb, cb);
                out.add_term(key, c);
            }
        }
        out
    }
}

impl fmt::Display for BigradedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((k, atoms, q), c)| {
                let mut s = vec![format!("({c})")];
                if *k != 0 {
                    s.push(format!("J^{k}"));
                }
                s.extend(atoms.iter().map(|a| a.to_string()));
                if !q.is_zero() {
                    s.push(format!("L^({q})"));
                }
                s.join("*")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
