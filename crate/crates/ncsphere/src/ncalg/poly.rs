use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::scalars::Ring;

pub type GenId = u16;

/// Monomial in the generators; the empty word is the unit.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<GenId>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letter(g: GenId) -> Self {
        Word(vec![g])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + o.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&o.0);
        Word(v)
    }

    pub fn count(&self, g: GenId) -> usize {
        self.0.iter().filter(|&&x| x == g).count()
    }
}

impl From<Vec<GenId>> for Word {
    fn from(v: Vec<GenId>) -> Self {
        Word(v)
    }
}

/// Finite linear combination of words.
///
/// Values produced by a presentation hold normal-form words only.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NCPoly<S> {
    terms: BTreeMap<Word, S>,
}

impl<S: Ring> NCPoly<S> {
    pub fn constant(c: S) -> Self {
        Self::term(c, Word::unit())
    }

    pub fn term(c: S, w: Word) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn word(w: Word) -> Self {
        Self::term(S::one(), w)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &S)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, S)> {
        self.terms.into_iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    /// Coefficient of the unit word.
    pub fn unit_coeff(&self) -> S {
        self.coeff(&Word::unit())
    }

    /// The element with its unit-word component removed.
    pub fn reduced(&self) -> Self {
        let mut out = self.clone();
        out.terms.remove(&Word::unit());
        out
    }

    pub fn add_term(&mut self, w: Word, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&w) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(w, s);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add_scaled(&mut self, o: &NCPoly<S>, c: &S) {
        for (w, a) in o.terms() {
            self.add_term(w.clone(), a.clone() * c.clone());
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn map_scalars<T: Ring>(&self, f: impl Fn(&S) -> T) -> NCPoly<T> {
        let mut out = NCPoly::<T>::zero();
        for (w, c) in self.terms() {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Apply `f` to each word, keeping coefficients.
    pub fn map_words(&self, f: impl Fn(&Word) -> Word) -> Self {
        let mut out = Self::zero();
        for (w, c) in self.terms() {
            out.add_term(f(w), c.clone());
        }
        out
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }
}

impl<S: Ring> Zero for NCPoly<S> {
    fn zero() -> Self {
        NCPoly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Ring> NCPoly<S> {
    pub fn one() -> Self {
        Self::constant(S::one())
    }
}

impl<S: Ring> Add for NCPoly<S> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        for (w, c) in o.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl<S: Ring> Sub for NCPoly<S> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<S: Ring> Neg for NCPoly<S> {
    type Output = Self;
    fn neg(self) -> Self {
        NCPoly { terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect() }
    }
}
