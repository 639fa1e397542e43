use std::collections::HashMap;
use std::sync::RwLock;

use num_traits::Zero;

use super::poly::{GenId, NCPoly, Word};
use crate::scalars::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub index: u32,
    pub starred: bool,
    pub name: String,
    pub self_adjoint: bool,
}

/// Termination certificate data: generators are compared first by the count
/// vector over levels (highest level first), then by number of inversions
/// with respect to the generator order.
#[derive(Clone, Debug)]
struct Certificate {
    levels: Vec<u32>,
}

impl Certificate {
    fn key(&self, w: &[GenId]) -> (Vec<usize>, usize) {
        let top = self.levels.iter().copied().max().unwrap_or(0) as usize;
        let mut counts = vec![0usize; top + 1];
        for &g in w {
            counts[top - self.levels[g as usize] as usize] += 1;
        }
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        (counts, inv)
    }

    fn less(&self, a: &[GenId], b: &[GenId]) -> bool {
        self.key(a) < self.key(b)
    }
}

pub struct Presentation<S> {
    name: String,
    gens: Vec<Generator>,
    star_of: Vec<GenId>,
    table: Vec<Option<NCPoly<S>>>,
    rules: Vec<((GenId, GenId), NCPoly<S>)>,
    cert: Certificate,
    relations_doc: String,
    cache: RwLock<HashMap<Word, NCPoly<S>>>,
}

impl<S: Ring> Clone for Presentation<S> {
    fn clone(&self) -> Self {
        Presentation {
            name: self.name.clone(),
            gens: self.gens.clone(),
            star_of: self.star_of.clone(),
            table: self.table.clone(),
            rules: self.rules.clone(),
            cert: self.cert.clone(),
            relations_doc: self.relations_doc.clone(),
            cache: RwLock::new(HashMap::new()),
        }
    }
}

impl<S: Ring> std::fmt::Debug for Presentation<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Presentation")
            .field("name", &self.name)
            .field("generators", &self.gens.len())
            .field("rules", &self.rules.len())
            .finish()
    }
}

/// Reduction order used by [`Presentation::reduce_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

pub struct PresentationBuilder<S> {
    name: String,
    gens: Vec<Generator>,
    star_of: Vec<GenId>,
    levels: Vec<u32>,
    rules: Vec<((GenId, GenId), NCPoly<S>)>,
    relations_doc: String,
}

impl<S: Ring> PresentationBuilder<S> {
    pub fn new(name: &str) -> Self {
        PresentationBuilder {
            name: name.to_string(),
            gens: Vec::new(),
            star_of: Vec::new(),
            levels: Vec::new(),
            rules: Vec::new(),
            relations_doc: String::new(),
        }
    }

    pub fn doc(mut self, text: &str) -> Self {
        self.relations_doc = text.to_string();
        self
    }

    /// Adds `name'` then `name`; the starred one sorts first.
    pub fn pair(&mut self, name: &str, index: u32, level: u32) -> (GenId, GenId) {
        let s = self.gens.len() as GenId;
        let g = s + 1;
        self.gens.push(Generator { index, starred: true, name: format!("{name}'"), self_adjoint: false });
        self.gens.push(Generator { index, starred: false, name: name.to_string(), self_adjoint: false });
        self.star_of.extend([g, s]);
        self.levels.extend([level, level]);
        (s, g)
    }

    pub fn self_adjoint(&mut self, name: &str, index: u32, level: u32) -> GenId {
        let g = self.gens.len() as GenId;
        self.gens.push(Generator { index, starred: false, name: name.to_string(), self_adjoint: true });
        self.star_of.push(g);
        self.levels.push(level);
        g
    }

    pub fn rule(&mut self, a: GenId, b: GenId, rhs: NCPoly<S>) {
        self.rules.retain(|(k, _)| *k != (a, b));
        self.rules.push(((a, b), rhs));
    }

    /// Build without verifying the certificate.
    pub fn build_unchecked(self) -> Presentation<S> {
        let n = self.gens.len();
        let mut table = vec![None; n * n];
        for ((a, b), rhs) in &self.rules {
            table[*a as usize * n + *b as usize] = Some(rhs.clone());
        }
        Presentation {
            name: self.name,
            gens: self.gens,
            star_of: self.star_of,
            table,
            rules: self.rules,
            cert: Certificate { levels: self.levels },
            relations_doc: self.relations_doc,
            cache: RwLock::new(HashMap::new()),
        }
    }

    /// Build and verify that every replacement is in normal form and strictly
    /// smaller than its pattern in the certificate order.
    pub fn build(self) -> Result<Presentation<S>, String> {
        let p = self.build_unchecked();
        p.check_certificate()?;
        Ok(p)
    }
}

const CACHE_LIMIT: usize = 1 << 21;

impl<S: Ring> Presentation<S> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn relations_doc(&self) -> &str {
        &self.relations_doc
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn num_generators(&self) -> usize {
        self.gens.len()
    }

    pub fn rules(&self) -> &[((GenId, GenId), NCPoly<S>)] {
        &self.rules
    }

    pub fn gen_by_name(&self, name: &str) -> Option<GenId> {
        self.gens.iter().position(|g| g.name == name).map(|i| i as GenId)
    }

    /// Generator id by name; panics on unknown names.
    pub fn g(&self, name: &str) -> GenId {
        self.gen_by_name(name).unwrap_or_else(|| panic!("no generator {name} in {}", self.name))
    }

    pub fn star_gen(&self, g: GenId) -> GenId {
        self.star_of[g as usize]
    }

    pub fn gen_poly(&self, name: &str) -> NCPoly<S> {
        NCPoly::word(Word::letter(self.g(name)))
    }

    pub fn rule_for(&self, a: GenId, b: GenId) -> Option<&NCPoly<S>> {
        self.table[a as usize * self.gens.len() + b as usize].as_ref()
    }

    fn redex(&self, w: &[GenId], strategy: Strategy) -> Option<usize> {
        let n = w.len();
        if n < 2 {
            return None;
        }
        match strategy {
            Strategy::Leftmost => (0..n - 1).find(|&i| self.rule_for(w[i], w[i + 1]).is_some()),
            Strategy::Rightmost => (0..n - 1).rev().find(|&i| self.rule_for(w[i], w[i + 1]).is_some()),
        }
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.redex(&w.0, Strategy::Leftmost).is_none()
    }

    pub fn check_certificate(&self) -> Result<(), String> {
        for ((a, b), rhs) in &self.rules {
            let lhs = [*a, *b];
            for (w, _) in rhs.terms() {
                if !self.is_normal(w) {
                    return Err(format!(
                        "replacement word {} of rule {} is not normal",
                        self.show_word(w),
                        self.show_word(&Word(lhs.to_vec()))
                    ));
                }
                if !self.cert.less(&w.0, &lhs) {
                    return Err(format!(
                        "rule {} -> {} does not decrease the monomial order",
                        self.show_word(&Word(lhs.to_vec())),
                        self.show_word(w)
                    ));
                }
            }
        }
        Ok(())
    }

    fn splice(w: &[GenId], i: usize, r: &Word) -> Word {
        let mut v = Vec::with_capacity(w.len() + r.len());
        v.extend_from_slice(&w[..i]);
        v.extend_from_slice(&r.0);
        v.extend_from_slice(&w[i + 2..]);
        Word(v)
    }

    /// Normal form of a single word (memoized).
    pub fn nf_word(&self, w: &Word) -> NCPoly<S> {
        let Some(i) = self.redex(&w.0, Strategy::Leftmost) else {
            return NCPoly::word(w.clone());
        };
        if let Some(hit) = self.cache.read().unwrap().get(w) {
            return hit.clone();
        }
        let rhs = self.rule_for(w.0[i], w.0[i + 1]).unwrap();
        let mut out = NCPoly::zero();
        for (r, c) in rhs.terms() {
            let sub = self.nf_word(&Self::splice(&w.0, i, r));
            out.add_scaled(&sub, c);
        }
        let mut cache = self.cache.write().unwrap();
        if cache.len() > CACHE_LIMIT {
            cache.clear();
        }
        cache.insert(w.clone(), out.clone());
        out
    }

    /// Normal form of an arbitrary linear combination of words.
    pub fn normal_form(&self, p: &NCPoly<S>) -> NCPoly<S> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.nf_word(w), c);
        }
        out
    }

    /// Rewrite without memoization, always contracting the redex chosen by `strategy`.
    pub fn reduce_with(&self, p: &NCPoly<S>, strategy: Strategy) -> NCPoly<S> {
        let mut done = NCPoly::zero();
        let mut pending = p.clone();
        while !pending.is_zero() {
            let mut next = NCPoly::zero();
            for (w, c) in pending.into_terms() {
                match self.redex(&w.0, strategy) {
                    None => done.add_term(w, c),
                    Some(i) => {
                        let rhs = self.rule_for(w.0[i], w.0[i + 1]).unwrap();
                        for (r, a) in rhs.terms() {
                            next.add_term(Self::splice(&w.0, i, r), a.clone() * c.clone());
                        }
                    }
                }
            }
            pending = next;
        }
        done
    }

    pub fn mul(&self, a: &NCPoly<S>, b: &NCPoly<S>) -> NCPoly<S> {
        let mut out = NCPoly::zero();
        for (u, x) in a.terms() {
            for (v, y) in b.terms() {
                let c = x.clone() * y.clone();
                out.add_scaled(&self.nf_word(&u.concat(v)), &c);
            }
        }
        out
    }

    pub fn mul_all(&self, factors: &[&NCPoly<S>]) -> NCPoly<S> {
        let mut acc = NCPoly::one();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn pow(&self, a: &NCPoly<S>, n: u32) -> NCPoly<S> {
        let mut acc = NCPoly::one();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn commutator(&self, a: &NCPoly<S>, b: &NCPoly<S>) -> NCPoly<S> {
        self.mul(a, b) - self.mul(b, a)
    }

    pub fn star_word(&self, w: &Word) -> Word {
        Word(w.0.iter().rev().map(|&g| self.star_of[g as usize]).collect())
    }

    /// The involution: `(c·w)* = conj(c)·w*` with `(ab)* = b*a*`.
    pub fn star(&self, p: &NCPoly<S>) -> NCPoly<S> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            out.add_scaled(&self.nf_word(&self.star_word(w)), &c.conj());
        }
        out
    }

    /// Substitute each generator by a polynomial (in the target presentation).
    pub fn substitute<T: Ring>(
        &self,
        p: &NCPoly<S>,
        target: &Presentation<T>,
        images: &[NCPoly<T>],
        coeff: impl Fn(&S) -> T,
    ) -> NCPoly<T> {
        let mut out = NCPoly::zero();
        for (w, c) in p.terms() {
            let mut acc = NCPoly::constant(coeff(c));
            for &g in &w.0 {
                acc = target.mul(&acc, &images[g as usize]);
                if acc.is_zero() {
                    break;
                }
            }
            out = out + acc;
        }
        out
    }

    pub fn map_scalars<T: Ring>(&self, f: impl Fn(&S) -> T) -> Presentation<T> {
        let rules: Vec<_> = self.rules.iter().map(|(k, r)| (*k, r.map_scalars(&f))).collect();
        let n = self.gens.len();
        let mut table = vec![None; n * n];
        for ((a, b), rhs) in &rules {
            table[*a as usize * n + *b as usize] = Some(rhs.clone());
        }
        Presentation {
            name: self.name.clone(),
            gens: self.gens.clone(),
            star_of: self.star_of.clone(),
            table,
            rules,
            cert: self.cert.clone(),
            relations_doc: self.relations_doc.clone(),
            cache: RwLock::new(HashMap::new()),
        }
    }

    /// A copy with one rule replaced (the result is not re-certified).
    pub fn with_rule(&self, a: GenId, b: GenId, rhs: NCPoly<S>) -> Presentation<S> {
        let mut rules = self.rules.clone();
        rules.retain(|(k, _)| *k != (a, b));
        rules.push(((a, b), rhs));
        let n = self.gens.len();
        let mut table = vec![None; n * n];
        for ((x, y), r) in &rules {
            table[*x as usize * n + *y as usize] = Some(r.clone());
        }
        Presentation {
            name: self.name.clone(),
            gens: self.gens.clone(),
            star_of: self.star_of.clone(),
            table,
            rules,
            cert: self.cert.clone(),
            relations_doc: self.relations_doc.clone(),
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn show_word(&self, w: &Word) -> String {
        if w.is_unit() {
            return "1".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < w.0.len() {
            let g = w.0[i];
            let mut j = i;
            while j < w.0.len() && w.0[j] == g {
                j += 1;
            }
            let name = &self.gens[g as usize].name;
            if j - i == 1 {
                parts.push(name.clone());
            } else {
                parts.push(format!("{name}^{}", j - i));
            }
            i = j;
        }
        parts.join("*")
    }

    /// Printed form: longer words first, then descending generator order.
    pub fn show(&self, p: &NCPoly<S>) -> String {
        let mut terms: Vec<(&Word, &S)> = p.terms().collect();
        terms.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| b.0.cmp(a.0)));
        let parts = terms
            .into_iter()
            .map(|(w, c)| match c.negative_part() {
                Some(m) => format!("-{}", self.show_term(w, &m)),
                None => self.show_term(w, c),
            })
            .collect();
        crate::scalars::join_terms(parts)
    }

    fn show_term(&self, w: &Word, c: &S) -> String {
        if w.is_unit() {
            return if c.is_compound() { format!("({})", c.compact()) } else { c.to_string() };
        }
        let ws = self.show_word(w);
        if c.is_one() {
            ws
        } else if c.is_compound() {
            format!("({})*{ws}", c.compact())
        } else {
            format!("{}*{ws}", c.compact())
        }
    }
}
