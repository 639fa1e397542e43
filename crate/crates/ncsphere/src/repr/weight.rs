use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::{int, QLaurent, QRatFunc};

/// Closed-form matrix coefficient of a weighted shift, as a function of the state `k`:
///
/// `coef · λ^phase · q^{-(⟨lin, k⟩ + c)} · Π (1 - q^{-2(k_i + d)})^{h/2}`
///
/// where `roots` maps `(i, d)` to the half-exponent `h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpectralWeight {
    pub coef: i64,
    pub lin: Vec<i64>,
    pub c: i64,
    pub roots: BTreeMap<(usize, i64), i32>,
    pub phase: i64,
}

impl SpectralWeight {
    pub fn one(arity: usize) -> Self {
        SpectralWeight { coef: 1, lin: vec![0; arity], c: 0, roots: BTreeMap::new(), phase: 0 }
    }

    pub fn arity(&self) -> usize {
        self.lin.len()
    }

    pub fn with_lin(mut self, idx: impl IntoIterator<Item = usize>) -> Self {
        for i in idx {
            self.lin[i] += 1;
        }
        self
    }

    pub fn with_root(mut self, i: usize, d: i64) -> Self {
        self.add_root(i, d, 1);
        self
    }

    fn add_root(&mut self, i: usize, d: i64, h: i32) {
        let e = self.roots.entry((i, d)).or_insert(0);
        *e += h;
        if *e == 0 {
            self.roots.remove(&(i, d));
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.coef *= o.coef;
        for (a, b) in out.lin.iter_mut().zip(&o.lin) {
            *a += b;
        }
        out.c += o.c;
        out.phase += o.phase;
        for (&(i, d), &h) in &o.roots {
            out.add_root(i, d, h);
        }
        out
    }

    /// The weight as a function of `k` when evaluated at `k + s`.
    pub fn shifted(&self, s: &[i64]) -> Self {
        let mut out = self.clone();
        out.c += self.lin.iter().zip(s).map(|(m, x)| m * x).sum::<i64>();
        out.roots = BTreeMap::new();
        for (&(i, d), &h) in &self.roots {
            out.add_root(i, d + s[i], h);
        }
        out
    }

    /// Complex conjugate, for real `q` and unimodular `λ`.
    pub fn conj(&self) -> Self {
        SpectralWeight { phase: -self.phase, ..self.clone() }
    }

    /// True when every root factor appears to an integer power.
    pub fn is_paired(&self) -> bool {
        self.roots.values().all(|h| h % 2 == 0)
    }

    /// Whether the weight is zero at `k` (some root factor with `k_i + d ≤ 0`).
    pub fn vanishes_at(&self, k: &[i64]) -> bool {
        self.roots.iter().any(|(&(i, d), &h)| h > 0 && k[i] + d <= 0)
    }

    pub fn eval(&self, k: &[i64], q: f64, lambda: Complex64) -> Complex64 {
        if self.vanishes_at(k) {
            return Complex64::zero();
        }
        let e = self.lin.iter().zip(k).map(|(m, x)| m * x).sum::<i64>() + self.c;
        let mut v = self.coef as f64 * q.powf(-(e as f64));
        for (&(i, d), &h) in &self.roots {
            let base = 1.0 - q.powf(-2.0 * (k[i] + d) as f64);
            v *= if h % 2 == 0 { base.powi(h / 2) } else { base.sqrt().powi(h) };
        }
        lambda.powi(self.phase as i32) * v
    }

    /// Coefficients of the factor belonging to index `i`, as a polynomial in
    /// `y = q^{-k_i}`: `y^{lin_i} Π_d (1 - q^{-2d} y^2)^{h/2}`.
    pub fn index_polynomial(&self, i: usize) -> BTreeMap<u32, QLaurent> {
        let mut poly: BTreeMap<u32, QLaurent> = BTreeMap::new();
        poly.insert(self.lin[i] as u32, QLaurent::one());
        for (&(j, d), &h) in &self.roots {
            if j != i {
                continue;
            }
            assert!(h >= 0 && h % 2 == 0, "unpaired root factor ({j}, {d}) in a diagonal weight");
            let factor = QLaurent::monomial(int(-1), -2 * d as i32);
            for _ in 0..h / 2 {
                let mut next: BTreeMap<u32, QLaurent> = BTreeMap::new();
                for (e, c) in &poly {
                    for (k, v) in [(*e, c.clone()), (e + 2, c.clone() * factor.clone())] {
                        let t = next.entry(k).or_insert_with(QLaurent::zero);
                        *t = t.clone() + v;
                    }
                }
                next.retain(|_, c| !c.is_zero());
                poly = next;
            }
        }
        poly
    }

    /// `Σ_{k ≥ 0}` over index `i` of its factor, summed as geometric series.
    pub fn index_sum(&self, i: usize) -> Result<QRatFunc> {
        let mut acc = QRatFunc::zero();
        for (a, c) in self.index_polynomial(i) {
            if a == 0 {
                return Err(Error::NotTraceClass(format!("constant term {c} in q^(-k_{i})")));
            }
            let den = QLaurent::one() - QLaurent::q(-(a as i32));
            acc = acc + QRatFunc::new(c, den)?;
        }
        Ok(acc)
    }

    /// The constant part `coef · q^{-c}`.
    pub fn prefactor(&self) -> QLaurent {
        QLaurent::monomial(int(self.coef), -self.c as i32)
    }

    /// Numeric pair `(Σ_{k≥0} |P_i|, Σ_{k≥cut} |P_i|)` bounding the factor of index `i`.
    pub fn index_abs_sums(&self, i: usize, q: f64, cut: i64) -> Result<(f64, f64)> {
        let (mut full, mut tail) = (0.0, 0.0);
        for (a, c) in self.index_polynomial(i) {
            if a == 0 {
                return Err(Error::NotTraceClass(format!("constant term {c} in q^(-k_{i})")));
            }
            let c = c.evaluate_numeric(q)?.abs();
            let r = q.powi(-(a as i32));
            full += c / (1.0 - r);
            tail += c * r.powi(cut.max(0) as i32) / (1.0 - r);
        }
        Ok((full, tail))
    }
}

impl fmt::Display for SpectralWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coef)?;
        if self.phase != 0 {
            write!(f, "*L^{}", self.phase)?;
        }
        let lin: Vec<String> = self
            .lin
            .iter()
            .enumerate()
            .filter(|(_, m)| **m != 0)
            .map(|(i, m)| if *m == 1 { format!("k{i}") } else { format!("{m}k{i}") })
            .collect();
        if !lin.is_empty() || self.c != 0 {
            let mut e = lin.join("+");
            if self.c != 0 {
                if !e.is_empty() {
                    e.push('+');
                }
                e.push_str(&self.c.to_string());
            }
            write!(f, "*q^-({e})")?;
        }
        for (&(i, d), &h) in &self.roots {
            let arg = match d {
                0 => format!("k{i}"),
                d if d > 0 => format!("k{i}+{d}"),
                d => format!("k{i}{d}"),
            };
            if h % 2 == 0 {
                write!(f, "*(1-q^-2({arg}))^{}", h / 2)?;
            } else {
                write!(f, "*(1-q^-2({arg}))^({h}/2)")?;
            }
        }
        Ok(())
    }
}
