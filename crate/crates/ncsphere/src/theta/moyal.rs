use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rayon::prelude::*;

use super::algebras::{ThetaPoly, ThetaPresentation};
use crate::scalars::{Phase, PhaseExp};

/// A finitely supported function on `ℤ^n`, `f = Σ f_r e_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourierFunction {
    n: usize,
    coeffs: BTreeMap<Vec<i64>, Phase>,
}

impl FourierFunction {
    pub fn zero(n: usize) -> Self {
        FourierFunction { n, coeffs: BTreeMap::new() }
    }

    /// The character `e_r`.
    pub fn basis(r: &[i64]) -> Self {
        let mut f = Self::zero(r.len());
        f.add_term(r.to_vec(), Phase::one());
        f
    }

    /// `e_0`, the unit of `⋆`.
    pub fn unit(n: usize) -> Self {
        Self::basis(&vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, r: &[i64]) -> Phase {
        self.coeffs.get(r).cloned().unwrap_or_else(Phase::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Phase)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, r: Vec<i64>, c: Phase) {
        assert_eq!(r.len(), self.n, "frequency of the wrong length");
        let e = self.coeffs.entry(r).or_insert_with(Phase::zero);
        *e = e.clone() + c;
        if e.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (r, c) in &o.coeffs {
            out.add_term(r.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Phase) -> Self {
        let mut out = Self::zero(self.n);
        for (r, v) in &self.coeffs {
            out.add_term(r.clone(), v.clone() * c.clone());
        }
        out
    }
}

/// `ρ(r, s) = exp(πi Σ_{j,k} r_j θ_{jk} s_k) = Π_{j<k} λ_jk^{(r_j s_k - r_k s_j)/2}`.
pub fn rho(r: &[i64], s: &[i64]) -> Phase {
    let mut e = PhaseExp::unit();
    for j in 0..r.len() {
        for k in j + 1..r.len() {
            let d = r[j] * s[k] - r[k] * s[j];
            e = e.add(&PhaseExp::single((j + 1) as u8, (k + 1) as u8, d as i32));
        }
    }
    Phase::from_exp(e)
}

/// `(f ⋆ g)_t = Σ_{r+s=t} ρ(r, s) f_r g_s`.
pub fn moyal_star(f: &FourierFunction, g: &FourierFunction) -> FourierFunction {
    assert_eq!(f.n, g.n, "Moyal product of functions on different tori");
    let mut out = FourierFunction::zero(f.n);
    for (r, a) in &f.coeffs {
        for (s, b) in &g.coeffs {
            let t: Vec<i64> = r.iter().zip(s).map(|(x, y)| x + y).collect();
            out.add_term(t, rho(r, s) * a.clone() * b.clone());
        }
    }
    out
}

/// `u^r = Π_{j<k} λ_jk^{-r_j r_k / 2} · u_1^{r_1} ⋯ u_n^{r_n}`, with `u_j^{-1} = u_j*`.
pub fn weyl_monomial(torus: &ThetaPresentation, r: &[i64]) -> ThetaPoly {
    let p = torus.pres();
    let mut acc = ThetaPoly::one();
    for (j, &e) in r.iter().enumerate() {
        let g = if e >= 0 { torus.z(j + 1) } else { torus.zs(j + 1) };
        for _ in 0..e.abs() {
            acc = p.mul(&acc, &g);
        }
    }
    let mut e = PhaseExp::unit();
    for j in 0..r.len() {
        for k in j + 1..r.len() {
            e = e.add(&PhaseExp::single((j + 1) as u8, (k + 1) as u8, -(r[j] * r[k]) as i32));
        }
    }
    acc.scale(&Phase::from_exp(e))
}

/// The torus element of a Fourier function under `e_r ↦ u^r`.
pub fn to_torus(torus: &ThetaPresentation, f: &FourierFunction) -> ThetaPoly {
    let mut out = ThetaPoly::zero();
    for (r, c) in f.terms() {
        out = out + weyl_monomial(torus, r).scale(c);
    }
    out
}

/// All `r ∈ ℤ^n` with `Σ |r_j| ≤ bound`.
pub fn frequencies(n: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|r: Vec<i64>| {
                let used: i64 = r.iter().map(|x| x.abs()).sum();
                let left = bound - used;
                (-left..=left).map(move |x| [r.clone(), vec![x]].concat())
            })
            .collect();
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MoyalReport {
    pub n: usize,
    pub bound: i64,
    pub intertwiner_checked: usize,
    pub associativity_checked: usize,
    pub failures: Vec<String>,
}

impl MoyalReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Check that `e_r ↦ u^r` carries `⋆` to the torus product, and that `⋆` is
/// associative, on all frequencies with `Σ |r_j| ≤ bound`.
pub fn moyal_torus_iso_check(n: usize, bound: i64) -> crate::Result<MoyalReport> {
    let torus = super::torus_algebra(n)?;
    let freqs = frequencies(n, bound);
    let weyl: BTreeMap<Vec<i64>, ThetaPoly> = freqs.iter().map(|r| (r.clone(), weyl_monomial(&torus, r))).collect();
    let mut failures: Vec<String> = freqs
        .par_iter()
        .flat_map_iter(|r| {
            let torus = &torus;
            let weyl = &weyl;
            freqs.iter().filter_map(move |s| {
                let lhs = torus.mul(&weyl[r], &weyl[s]);
                let rhs = to_torus(torus, &moyal_star(&FourierFunction::basis(r), &FourierFunction::basis(s)));
                (lhs != rhs).then(|| format!("u^{r:?} u^{s:?} != image of e_r * e_s"))
            })
        })
        .collect();
    let basis: Vec<FourierFunction> = freqs.iter().map(|r| FourierFunction::basis(r)).collect();
    failures.extend(
        basis
            .par_iter()
            .flat_map_iter(|a| {
                let basis = &basis;
                basis.iter().flat_map(move |b| {
                    let ab = moyal_star(a, b);
                    basis.iter().filter_map(move |c| {
                        let left = moyal_star(&ab, c);
                        let right = moyal_star(a, &moyal_star(b, c));
                        (left != right).then(|| format!("associativity fails at {:?}", (a, b, c)))
                    })
                })
            })
            .collect::<Vec<_>>(),
    );
    let m = freqs.len();
    Ok(MoyalReport { n, bound, intertwiner_checked: m * m, associativity_checked: m * m * m, failures })
}
