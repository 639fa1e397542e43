use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::rep::{Family, IndexDomain, ShiftRep, State};
use crate::error::{Error, Result};
use crate::ncalg::{GenId, Word};
use crate::qspheres::QPoly;

/// Numeric view of a representation on the box of states with one-sided
/// indices `< K` and the two-sided index in `(-K, K)`.
#[derive(Clone, Debug)]
pub struct Truncation<'a> {
    rep: &'a ShiftRep,
    q: f64,
    cutoff: i64,
    lambda: Complex64,
}

pub fn truncate(rep: &ShiftRep, q: f64, cutoff: usize) -> Result<Truncation<'_>> {
    if !(q > 1.0) {
        return Err(Error::InvalidParameter(format!("q must exceed 1, got {q}")));
    }
    let lambda = rep
        .lambda()
        .map(|l| Complex64::new(l.re.to_f64().unwrap_or(f64::NAN), l.im.to_f64().unwrap_or(f64::NAN)))
        .unwrap_or(Complex64::new(1.0, 0.0));
    Ok(Truncation { rep, q, cutoff: cutoff as i64, lambda })
}

/// Sparse matrix of `ψ(p)` restricted to the box; entries keyed by `(row, column)`.
#[derive(Clone, Debug)]
pub struct TruncatedOperator {
    pub cutoff: usize,
    pub q: f64,
    pub entries: BTreeMap<(State, State), Complex64>,
    tail_bound: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NumericTrace {
    pub value: Complex64,
    /// Bound on `|Tr ψ(p) - value|`.
    pub tail_bound: f64,
}

impl TruncatedOperator {
    pub fn get(&self, row: &State, col: &State) -> Complex64 {
        self.entries.get(&(row.clone(), col.clone())).copied().unwrap_or_else(Complex64::zero)
    }
}

pub fn numeric_trace(op: &TruncatedOperator) -> NumericTrace {
    let value = op.entries.iter().filter(|((r, c), _)| r == c).map(|(_, v)| *v).sum();
    NumericTrace { value, tail_bound: op.tail_bound }
}

impl<'a> Truncation<'a> {
    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff as usize
    }

    fn range(&self, d: IndexDomain, margin: i64) -> std::ops::Range<i64> {
        match d {
            IndexDomain::Natural => 0..self.cutoff - margin,
            IndexDomain::Integer => -(self.cutoff - 1 - margin)..self.cutoff - margin,
        }
    }

    fn in_box(&self, k: &[i64]) -> bool {
        k.iter().zip(&self.rep.lattice().domains).all(|(x, d)| self.range(*d, 0).contains(x))
    }

    /// All states in the box, shrunk by `margin` on every side except the zero boundary.
    pub fn states(&self, margin: i64) -> Vec<State> {
        let mut out = vec![vec![]];
        for d in &self.rep.lattice().domains {
            let r = self.range(*d, margin);
            out = out.into_iter().flat_map(|s| r.clone().map(move |x| [s.clone(), vec![x]].concat())).collect();
        }
        out
    }

    /// `ψ(w)|k⟩` numerically; with `clip`, paths leaving the box are dropped.
    pub fn apply_word(&self, w: &Word, k: &[i64], clip: bool) -> Option<(State, Complex64)> {
        let mut cur = k.to_vec();
        let mut v = Complex64::new(1.0, 0.0);
        for &g in w.0.iter().rev() {
            let a = self.rep.action(g);
            if a.weight.vanishes_at(&cur) {
                return None;
            }
            v *= a.weight.eval(&cur, self.q, self.lambda);
            for (x, s) in cur.iter_mut().zip(&a.shift) {
                *x += s;
            }
            if !self.rep.lattice().contains(&cur) || (clip && !self.in_box(&cur)) {
                return None;
            }
        }
        Some((cur, v))
    }

    fn numeric_coeffs(&self, p: &QPoly) -> Result<Vec<(Word, f64)>> {
        p.terms().map(|(w, c)| Ok((w.clone(), c.evaluate_numeric(self.q)?))).collect()
    }

    /// `ψ(p)|k⟩` without clipping, as a sparse vector.
    pub fn apply_poly(&self, p: &QPoly, k: &[i64]) -> Result<BTreeMap<State, Complex64>> {
        Ok(self.apply_terms(&self.numeric_coeffs(p)?, k))
    }

    fn apply_terms(&self, terms: &[(Word, f64)], k: &[i64]) -> BTreeMap<State, Complex64> {
        let mut out: BTreeMap<State, Complex64> = BTreeMap::new();
        for (w, c) in terms {
            if let Some((s, v)) = self.apply_word(w, k, false) {
                *out.entry(s).or_insert_with(Complex64::zero) += v * c;
            }
        }
        out
    }

    pub fn operator(&self, p: &QPoly) -> Result<TruncatedOperator> {
        let tail_bound = self.tail_bound(p)?;
        let coeffs = self.numeric_coeffs(p)?;
        let cols: Vec<Vec<((State, State), Complex64)>> = self
            .states(0)
            .into_par_iter()
            .map(|k| {
                let mut col: BTreeMap<State, Complex64> = BTreeMap::new();
                for (w, c) in &coeffs {
                    if let Some((s, v)) = self.apply_word(w, &k, true) {
                        *col.entry(s).or_insert_with(Complex64::zero) += v * c;
                    }
                }
                col.into_iter().map(|(s, v)| ((s, k.clone()), v)).collect()
            })
            .collect();
        let entries = cols.into_iter().flatten().filter(|(_, v)| !v.is_zero()).collect();
        Ok(TruncatedOperator { cutoff: self.cutoff as usize, q: self.q, entries, tail_bound })
    }

    /// Closed-form bound on the part of `Tr ψ(p)` missed by the box.
    fn tail_bound(&self, p: &QPoly) -> Result<f64> {
        let mut bound = 0.0;
        for (w, c) in p.terms() {
            let a = self.rep.word_action(w);
            if a.shift.iter().any(|s| *s != 0) {
                continue;
            }
            if self.rep.family() == Family::OddFourier {
                return Err(Error::NotTraceClass("the two-sided index has infinite support".into()));
            }
            // states whose path can leave the box have some index >= cut
            let cut = self.cutoff - w.len() as i64;
            let sums: Vec<(f64, f64)> =
                (0..self.rep.arity()).map(|i| a.weight.index_abs_sums(i, self.q, cut)).collect::<Result<_>>()?;
            let mut union = 0.0;
            for (i, (_, tail)) in sums.iter().enumerate() {
                union += tail * sums.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, s)| s.0).product::<f64>();
            }
            let pre = a.weight.prefactor().evaluate_numeric(self.q)?.abs();
            bound += c.evaluate_numeric(self.q)?.abs() * pre * union;
        }
        Ok(bound)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationFailure {
    pub relation: String,
    pub state: State,
    pub residual: f64,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct RelationReport {
    pub checked: usize,
    pub skipped: usize,
    pub max_residual: f64,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check every defining relation on every interior state (indices `≤ K - 3`).
pub fn relation_check(rep: &ShiftRep, q: f64, cutoff: usize, tol: f64) -> Result<RelationReport> {
    if cutoff < 4 {
        return Err(Error::InvalidParameter(format!("cutoff must be at least 4, got {cutoff}")));
    }
    let t = truncate(rep, q, cutoff)?;
    let pres = rep.sphere().pres();
    let rels: Vec<(String, Vec<(Word, f64)>)> = pres
        .rules()
        .iter()
        .map(|((a, b), rhs)| {
            let w = Word(vec![*a, *b]);
            let name = format!("{} = {}", pres.show_word(&w), pres.show(rhs));
            Ok((name, t.numeric_coeffs(&(QPoly::word(w) - rhs.clone()))?))
        })
        .collect::<Result<_>>()?;
    let interior = t.states(2);
    let total = t.states(0).len();
    let per_state: Vec<(f64, Vec<RelationFailure>)> = interior
        .par_iter()
        .map(|k| {
            let mut worst = 0.0f64;
            let mut fails = Vec::new();
            for (name, rel) in &rels {
                let r = t.apply_terms(rel, k).values().map(|v| v.norm()).fold(0.0, f64::max);
                worst = worst.max(r);
                if !(r <= tol) {
                    fails.push(RelationFailure { relation: name.clone(), state: k.clone(), residual: r });
                }
            }
            (worst, fails)
        })
        .collect();
    let mut report = RelationReport { checked: interior.len(), skipped: total - interior.len(), ..Default::default() };
    for (w, f) in per_state {
        report.max_residual = report.max_residual.max(w);
        report.failures.extend(f);
    }
    Ok(report)
}

/// `⟨s'|ψ(g)|s⟩ = conj⟨s|ψ(g*)|s'⟩` for every generator on interior states.
pub fn adjointness_numeric(rep: &ShiftRep, q: f64, cutoff: usize, tol: f64) -> Result<std::result::Result<(), String>> {
    let t = truncate(rep, q, cutoff)?;
    let pres = rep.sphere().pres();
    for k in t.states(2) {
        for g in 0..pres.num_generators() as GenId {
            let gs = pres.star_gen(g);
            let Some((s, v)) = t.apply_word(&Word::letter(g), &k, false) else { continue };
            let back = t.apply_word(&Word::letter(gs), &s, false);
            let ok = matches!(&back, Some((k2, v2)) if *k2 == k && (v2.conj() - v).norm() <= tol);
            if !ok {
                return Ok(Err(format!("{} at {:?}", pres.show_word(&Word::letter(g)), k)));
            }
        }
    }
    Ok(Ok(()))
}
