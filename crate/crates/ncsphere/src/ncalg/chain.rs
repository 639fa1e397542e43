use std::collections::BTreeMap;

use num_traits::Zero;

use super::poly::{NCPoly, Word};
use super::presentation::Presentation;
use crate::error::{Error, Result};
use crate::scalars::Ring;

/// Element of `A ⊗ Ā^{⊗k}` with `Ā = A / C·1`.
///
/// Keys are tuples of `k + 1` normal words; unit words never occur in slots `1..=k`.
#[derive(Clone, Debug, PartialEq)]
pub struct CyclicChain<S> {
    degree: usize,
    terms: BTreeMap<Vec<Word>, S>,
}

impl<S: Ring> CyclicChain<S> {
    pub fn zero(degree: usize) -> Self {
        CyclicChain { degree, terms: BTreeMap::new() }
    }

    /// `p_0 ⊗ p_1 ⊗ … ⊗ p_k`, expanded multilinearly.
    pub fn tensor(slots: &[&NCPoly<S>]) -> Self {
        let mut out = Self::zero(slots.len().saturating_sub(1));
        let mut acc: Vec<(Vec<Word>, S)> = vec![(Vec::new(), S::one())];
        for (i, p) in slots.iter().enumerate() {
            let mut next = Vec::new();
            for (key, c) in &acc {
                for (w, a) in p.terms() {
                    if i > 0 && w.is_unit() {
                        continue;
                    }
                    let mut k = key.clone();
                    k.push(w.clone());
                    next.push((k, c.clone() * a.clone()));
                }
            }
            acc = next;
        }
        for (k, c) in acc {
            out.add_term(k, c);
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &S)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[Word]) -> S {
        self.terms.get(key).cloned().unwrap_or_else(S::zero)
    }

    /// Add `c · key`; keys with a unit word in a slot `≥ 1` vanish.
    pub fn add_term(&mut self, key: Vec<Word>, c: S) {
        debug_assert_eq!(key.len(), self.degree + 1);
        if c.is_zero() || key[1..].iter().any(Word::is_unit) {
            return;
        }
        match self.terms.remove(&key) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(key, s);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add_chain(&mut self, o: &Self, c: &S) {
        for (k, a) in o.terms() {
            self.add_term(k.clone(), a.clone() * c.clone());
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.degree);
        out.add_chain(self, c);
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_chain(o, &S::one());
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_chain(o, &-S::one());
        out
    }

    pub fn map_scalars<T: Ring>(&self, f: impl Fn(&S) -> T) -> CyclicChain<T> {
        let mut out = CyclicChain::zero(self.degree);
        for (k, c) in self.terms() {
            out.add_term(k.clone(), f(c));
        }
        out
    }

    /// Multilinear image of each slot under `f`.
    pub fn map_slots(&self, f: impl Fn(&Word) -> NCPoly<S>) -> Self {
        let mut out = Self::zero(self.degree);
        for (k, c) in self.terms() {
            let images: Vec<NCPoly<S>> = k.iter().map(&f).collect();
            let refs: Vec<&NCPoly<S>> = images.iter().collect();
            out.add_chain(&Self::tensor(&refs), c);
        }
        out
    }

    pub fn show(&self, pres: &Presentation<S>) -> String {
        let parts = self
            .terms()
            .map(|(k, c)| {
                let t: Vec<String> = k.iter().map(|w| pres.show_word(w)).collect();
                let t = t.join("⊗");
                if c.is_one() {
                    t
                } else if c.is_compound() {
                    format!("({})*{t}", c.compact())
                } else {
                    format!("{}*{t}", c.compact())
                }
            })
            .collect();
        crate::scalars::join_terms(parts)
    }
}

impl<S: Ring> Zero for CyclicChain<S> {
    fn zero() -> Self {
        CyclicChain::zero(0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Ring> std::ops::Add for CyclicChain<S> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        CyclicChain::add(&self, &o)
    }
}

fn sign<S: Ring>(odd: bool) -> S {
    if odd {
        -S::one()
    } else {
        S::one()
    }
}

fn word_poly<S: Ring>(w: &Word) -> NCPoly<S> {
    NCPoly::word(w.clone())
}

/// Hochschild boundary on the normalized complex.
pub fn hochschild_b<S: Ring>(pres: &Presentation<S>, c: &CyclicChain<S>) -> Result<CyclicChain<S>> {
    let n = c.degree();
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    let mut out = CyclicChain::zero(n - 1);
    for (key, coef) in c.terms() {
        for i in 0..=n {
            let (prod, rest): (NCPoly<S>, Vec<&Word>) = if i < n {
                let p = pres.nf_word(&key[i].concat(&key[i + 1]));
                let mut slots: Vec<&Word> = key[..i].iter().collect();
                slots.push(&key[i]);
                slots.extend(key[i + 2..].iter());
                (p, slots)
            } else {
                let p = pres.nf_word(&key[n].concat(&key[0]));
                (p, key[..n].iter().collect())
            };
            let s = sign::<S>(i % 2 == 1) * coef.clone();
            let pos = if i < n { i } else { 0 };
            for (w, a) in prod.terms() {
                let mut k: Vec<Word> = rest.iter().map(|x| (*x).clone()).collect();
                k[pos] = w.clone();
                out.add_term(k, a.clone() * s.clone());
            }
        }
    }
    Ok(out)
}

/// Connes' operator `B(a_0 ⊗ … ⊗ a_n) = Σ_j (-1)^{nj} 1 ⊗ a_j ⊗ … ⊗ a_n ⊗ a_0 ⊗ … ⊗ a_{j-1}`.
pub fn connes_b<S: Ring>(c: &CyclicChain<S>) -> CyclicChain<S> {
    let n = c.degree();
    let mut out = CyclicChain::zero(n + 1);
    for (key, coef) in c.terms() {
        for j in 0..=n {
            let mut k = Vec::with_capacity(n + 2);
            k.push(Word::unit());
            k.extend(key[j..].iter().cloned());
            k.extend(key[..j].iter().cloned());
            out.add_term(k, sign::<S>(n * j % 2 == 1) * coef.clone());
        }
    }
    out
}

/// Tensor chain `p ⊗ q ⊗ …` built from words (helper for fixtures).
pub fn chain_of_words<S: Ring>(words: &[Word]) -> CyclicChain<S> {
    let polys: Vec<NCPoly<S>> = words.iter().map(word_poly).collect();
    let refs: Vec<&NCPoly<S>> = polys.iter().collect();
    CyclicChain::tensor(&refs)
}
