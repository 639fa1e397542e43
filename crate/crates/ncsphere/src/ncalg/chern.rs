use num_traits::Zero;
use rayon::prelude::*;

use super::chain::{connes_b, hochschild_b, CyclicChain};
use super::matrix::MatNC;
use super::poly::{NCPoly, Word};
use super::presentation::Presentation;
use crate::error::Result;
use crate::scalars::{rat, Ring};

type Partial<S> = Vec<(Vec<Word>, S)>;

fn extend<S: Ring>(acc: &Partial<S>, p: &NCPoly<S>) -> Partial<S> {
    let mut out = Vec::with_capacity(acc.len() * p.len());
    for (k, c) in acc {
        for (w, a) in p.terms() {
            if w.is_unit() {
                continue;
            }
            let mut key = k.clone();
            key.push(w.clone());
            out.push((key, c.clone() * a.clone()));
        }
    }
    out
}

fn merge<S: Ring>(parts: Partial<S>) -> Partial<S> {
    let mut m: std::collections::BTreeMap<Vec<Word>, S> = std::collections::BTreeMap::new();
    for (k, c) in parts {
        let e = m.entry(k).or_insert_with(S::zero);
        *e = e.clone() + c;
    }
    m.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// `Σ_{i_0…i_k} (m_0)_{i_0 i_1} ⊗ (m_1)_{i_1 i_2} ⊗ ⋯ ⊗ (m_k)_{i_k i_0}` in `A ⊗ Ā^{⊗k}`.
pub fn cyclic_trace<S: Ring>(mats: &[&MatNC<S>]) -> CyclicChain<S> {
    let r = mats[0].size();
    let k = mats.len() - 1;
    let per_start: Vec<CyclicChain<S>> = (0..r)
        .into_par_iter()
        .map(|i0| {
            // partial[j]: chains ending at row index j
            let mut partial: Vec<Partial<S>> = (0..r)
                .map(|j| mats[0].get(i0, j).terms().map(|(w, c)| (vec![w.clone()], c.clone())).collect())
                .collect();
            for (step, m) in mats.iter().enumerate().skip(1) {
                let last = step == k;
                let mut next: Vec<Partial<S>> = vec![Vec::new(); r];
                for (i, acc) in partial.iter().enumerate() {
                    if acc.is_empty() {
                        continue;
                    }
                    for (j, slot) in next.iter_mut().enumerate() {
                        if last && j != i0 {
                            continue;
                        }
                        let e = m.get(i, j);
                        if !e.is_zero() {
                            slot.extend(extend(acc, e));
                        }
                    }
                }
                partial = next.into_iter().map(merge).collect();
            }
            let mut out = CyclicChain::zero(k);
            for (key, c) in &partial[i0] {
                out.add_term(key.clone(), c.clone());
            }
            out
        })
        .collect();
    let mut out = CyclicChain::zero(k);
    for c in per_start {
        out.add_chain(&c, &S::one());
    }
    out
}

/// `ch_k(e) = ⟨(e - ½) ⊗ e ⊗ ⋯ ⊗ e⟩` with `2k` copies of `e` after the first slot.
pub fn chern_even<S: Ring>(e: &MatNC<S>, k: usize) -> Result<CyclicChain<S>> {
    let half = S::from_rational(rat(1, 2));
    let first = e.sub(&MatNC::scalar(e.size(), half));
    let mut mats = vec![&first];
    mats.extend(std::iter::repeat(e).take(2 * k));
    Ok(cyclic_trace(&mats))
}

/// `ch_{k+½}(u) = λ_k ⟨u ⊗ u* ⊗ ⋯ ⊗ u* - u* ⊗ u ⊗ ⋯ ⊗ u⟩` with `2k + 2` slots,
/// `λ_0 = ½` and `λ_k = 1` otherwise.
pub fn chern_odd<S: Ring>(pres: &Presentation<S>, u: &MatNC<S>, k: usize) -> Result<CyclicChain<S>> {
    let us = u.star(pres);
    let a: Vec<&MatNC<S>> = (0..2 * k + 2).map(|i| if i % 2 == 0 { u } else { &us }).collect();
    let b: Vec<&MatNC<S>> = (0..2 * k + 2).map(|i| if i % 2 == 0 { &us } else { u }).collect();
    let lam = if k == 0 { S::from_rational(rat(1, 2)) } else { S::one() };
    Ok(cyclic_trace(&a).sub(&cyclic_trace(&b)).scale(&lam))
}

#[derive(Clone, Debug, PartialEq)]
pub enum CycleRatio<S> {
    /// `B ch_k = c · b ch_{k+1}` with both sides nonzero.
    Ratio(S),
    ProportionalToZero,
    NotProportional,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChernKind {
    Even,
    Odd,
}

/// Compare `B ch_k` with `b ch_{k+1}` (even) or `B ch_{k+½}` with `b ch_{k+3/2}` (odd).
pub fn cycle_ratio<S: Ring>(pres: &Presentation<S>, x: &MatNC<S>, kind: ChernKind, k: usize) -> Result<CycleRatio<S>> {
    let (lo, hi) = match kind {
        ChernKind::Even => (chern_even(x, k)?, chern_even(x, k + 1)?),
        ChernKind::Odd => (chern_odd(pres, x, k)?, chern_odd(pres, x, k + 1)?),
    };
    let bl = connes_b(&lo);
    let bh = hochschild_b(pres, &hi)?;
    Ok(proportion(&bl, &bh))
}

/// The scalar `c` with `a = c·b`, if any.
pub fn proportion<S: Ring>(a: &CyclicChain<S>, b: &CyclicChain<S>) -> CycleRatio<S> {
    match (a.is_empty(), b.is_empty()) {
        (true, true) => return CycleRatio::ProportionalToZero,
        (true, false) | (false, true) => return CycleRatio::NotProportional,
        _ => {}
    }
    let (key, bc) = b.terms().next().unwrap();
    let Some(c) = a.coeff(key).try_div(bc) else {
        return CycleRatio::NotProportional;
    };
    if a.sub(&b.scale(&c)).is_empty() {
        CycleRatio::Ratio(c)
    } else {
        CycleRatio::NotProportional
    }
}
