use num_traits::Zero;
use rayon::prelude::*;

use super::poly::NCPoly;
use super::presentation::Presentation;
use crate::error::{Error, Result};
use crate::scalars::Ring;

/// Square matrix with entries in a presented algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct MatNC<S> {
    size: usize,
    entries: Vec<NCPoly<S>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatKind {
    Idempotent,
    SelfAdjoint,
    Unipotent,
    Unitary,
}

/// Outcome of [`mat_check`]; `witness` names the first failing entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatCheck {
    pub ok: bool,
    pub witness: Option<String>,
}

impl<S: Ring> MatNC<S> {
    /// Build from row-major entries.
    pub fn from_rows(rows: Vec<Vec<NCPoly<S>>>) -> Result<Self> {
        let size = rows.len();
        for r in &rows {
            if r.len() != size {
                return Err(Error::NotSquare { rows: size, cols: r.len() });
            }
        }
        Ok(MatNC { size, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(size: usize, f: impl Fn(usize, usize) -> NCPoly<S>) -> Self {
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            for j in 0..size {
                entries.push(f(i, j));
            }
        }
        MatNC { size, entries }
    }

    pub fn zeros(size: usize) -> Self {
        Self::from_fn(size, |_, _| NCPoly::zero())
    }

    pub fn identity(size: usize) -> Self {
        Self::scalar(size, S::one())
    }

    pub fn scalar(size: usize, c: S) -> Self {
        Self::from_fn(size, |i, j| if i == j { NCPoly::constant(c.clone()) } else { NCPoly::zero() })
    }

    /// `((a, b), (c, d))` from four equally sized blocks.
    pub fn blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let m = a.size;
        Self::from_fn(2 * m, |i, j| {
            let blk = match (i < m, j < m) {
                (true, true) => a,
                (true, false) => b,
                (false, true) => c,
                (false, false) => d,
            };
            blk.get(i % m, j % m).clone()
        })
    }

    /// The `m×m` block starting at `(r, c)`.
    pub fn block(&self, r: usize, c: usize, m: usize) -> Self {
        Self::from_fn(m, |i, j| self.get(r + i, c + j).clone())
    }

    /// `diag(self, 0)` with `extra` zero rows and columns.
    pub fn pad_zero(&self, extra: usize) -> Self {
        Self::from_fn(self.size + extra, |i, j| {
            if i < self.size && j < self.size {
                self.get(i, j).clone()
            } else {
                NCPoly::zero()
            }
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &NCPoly<S> {
        &self.entries[i * self.size + j]
    }

    pub fn entries(&self) -> &[NCPoly<S>] {
        &self.entries
    }

    pub fn map(&self, f: impl Fn(&NCPoly<S>) -> NCPoly<S>) -> Self {
        MatNC { size: self.size, entries: self.entries.iter().map(f).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_fn(self.size, |i, j| self.get(i, j).clone() + o.get(i, j).clone())
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::from_fn(self.size, |i, j| self.get(i, j).clone() - o.get(i, j).clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|p| p.scale(c))
    }

    /// Conjugate by a permutation: entry `(i, j)` becomes `(perm[i], perm[j])`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                out.entries[perm[i] * self.size + perm[j]] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn mul(&self, pres: &Presentation<S>, o: &Self) -> Self {
        let n = self.size;
        let entries = (0..n * n)
            .into_par_iter()
            .map(|ij| {
                let (i, j) = (ij / n, ij % n);
                let mut acc = NCPoly::zero();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), o.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + pres.mul(a, b);
                    }
                }
                acc
            })
            .collect();
        MatNC { size: n, entries }
    }

    /// Conjugate transpose.
    pub fn star(&self, pres: &Presentation<S>) -> Self {
        Self::from_fn(self.size, |i, j| pres.star(self.get(j, i)))
    }

    pub fn trace(&self) -> NCPoly<S> {
        (0..self.size).fold(NCPoly::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn normal_form(&self, pres: &Presentation<S>) -> Self {
        self.map(|p| pres.normal_form(p))
    }

    pub fn show(&self, pres: &Presentation<S>) -> String {
        let rows: Vec<String> = (0..self.size)
            .map(|i| {
                let cells: Vec<String> = (0..self.size).map(|j| pres.show(self.get(i, j))).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

fn first_residual<S: Ring>(pres: &Presentation<S>, lhs: &MatNC<S>, rhs: &MatNC<S>, what: &str) -> Option<String> {
    for i in 0..lhs.size() {
        for j in 0..lhs.size() {
            let r = lhs.get(i, j).clone() - rhs.get(i, j).clone();
            if !r.is_zero() {
                return Some(format!("{what}: entry ({i},{j}) residual {}", pres.show(&r)));
            }
        }
    }
    None
}

/// Check a defining matrix identity entrywise after normal form.
pub fn mat_check<S: Ring>(pres: &Presentation<S>, m: &MatNC<S>, kind: MatKind) -> MatCheck {
    let id = MatNC::identity(m.size());
    let witness = match kind {
        MatKind::Idempotent => first_residual(pres, &m.mul(pres, m), m, "e^2 - e"),
        MatKind::SelfAdjoint => first_residual(pres, &m.star(pres), m, "m* - m"),
        MatKind::Unipotent => first_residual(pres, &m.mul(pres, m), &id, "u^2 - 1"),
        MatKind::Unitary => {
            let s = m.star(pres);
            first_residual(pres, &m.mul(pres, &s), &id, "u u* - 1")
                .or_else(|| first_residual(pres, &s.mul(pres, m), &id, "u* u - 1"))
        }
    };
    MatCheck { ok: witness.is_none(), witness }
}
