use num_traits::Zero;

use super::cochain::Cochain;
use crate::error::{Error, Result};
use crate::ncalg::Word;
use crate::qspheres::{sigma_auto, QPoly, Sphere};
use crate::repr::{build_rep, trace_exact, Family, ShiftRep, SpectralWeight};
use crate::scalars::{int, QLaurent, QRatFunc};

/// `τ⁰(a)`: the `λ⁰` part of the classical point `x_n ↦ λ`, `x_n* ↦ λ̄`.
pub fn tau0(sphere: &Sphere, a: &QPoly) -> QRatFunc {
    let pres = sphere.pres();
    let n = sphere.n() as u32;
    let mut acc = QLaurent::zero();
    'words: for (w, c) in a.terms() {
        let mut charge = 0i64;
        for &g in &w.0 {
            let gen = &pres.generators()[g as usize];
            if gen.index != n || gen.self_adjoint {
                continue 'words;
            }
            charge += if gen.starred { -1 } else { 1 };
        }
        if charge == 0 {
            acc = acc + c.clone();
        }
    }
    QRatFunc::from_laurent(acc)
}

pub fn tau0_cochain(sphere: &Sphere) -> Cochain {
    let s = sphere.clone();
    Cochain::new(sphere, 0, "tau0", move |a| Ok(tau0(&s, &a[0])))
}

/// `ψ₊ ⊕ ψ₋` on `S_q^{2n}` with grading `γ = diag(1, -1)` and `F` the swap.
#[derive(Clone, Debug)]
pub struct EvenModule {
    pub n: usize,
    pub plus: ShiftRep,
    pub minus: ShiftRep,
}

impl EvenModule {
    pub fn new(n: usize) -> Result<Self> {
        Ok(EvenModule { n, plus: build_rep(Family::EvenPlus, n, None)?, minus: build_rep(Family::EvenMinus, n, None)? })
    }

    pub fn sphere(&self) -> &Sphere {
        self.plus.sphere()
    }

    /// `τ¹(a) = Tr(ψ₊(a) - ψ₋(a)) = Tr ψ₊(a - σ(a))`.
    pub fn tau1(&self, a: &QPoly) -> Result<QRatFunc> {
        let d = a.clone() - sigma_auto(self.sphere(), a)?;
        let t = trace_exact(&self.plus, &d)?;
        t.scalar().ok_or_else(|| Error::WrongAlgebra(format!("unexpected phase in trace {t}")))
    }

    pub fn tau1_cochain(&self) -> Cochain {
        let m = self.clone();
        Cochain::new(self.sphere(), 0, "tau1", move |a| m.tau1(&a[0]))
    }

    /// `∫ a` over `S_q^{2n}`.
    pub fn integral(&self, a: &QPoly) -> Result<QRatFunc> {
        self.tau1(a)
    }
}

/// One monomial of `[F, ψ(b)]`: nonzero only on the band `k_0 ∈ band`, where it is
/// `coeff · ψ(word)` times `factor = χ(k_0 + s) - χ(k_0) = ±2`.
#[derive(Clone, Debug, PartialEq)]
pub struct CommutatorTerm {
    pub word: Word,
    pub coeff: QLaurent,
    pub shift: Vec<i64>,
    pub band: (i64, i64),
    pub factor: i64,
    pub weight: SpectralWeight,
}

/// Fourier model over `S_q^{2n+1}` with `F|k_0, …⟩ = χ(k_0)|k_0, …⟩`, `χ(m) = 1` for `m > 0`, else `-1`.
#[derive(Clone, Debug)]
pub struct OddModule {
    pub n: usize,
    pub rep: ShiftRep,
}

pub fn chi(m: i64) -> i64 {
    if m > 0 {
        1
    } else {
        -1
    }
}

impl OddModule {
    pub fn new(n: usize) -> Result<Self> {
        Ok(OddModule { n, rep: build_rep(Family::OddFourier, n, None)? })
    }

    pub fn sphere(&self) -> &Sphere {
        self.rep.sphere()
    }

    /// `[F, ψ(b)]` as a finite list of banded weighted shifts.
    pub fn commutator_f(&self, b: &QPoly) -> Vec<CommutatorTerm> {
        let mut out = Vec::new();
        for (w, c) in b.terms() {
            let a = self.rep.word_action(w);
            let s = a.shift[0];
            if s == 0 {
                continue;
            }
            let (band, factor) = if s > 0 { ((1 - s, 0), 2) } else { ((1, -s), -2) };
            debug_assert!((band.0..=band.1).all(|k| chi(k + s) - chi(k) == factor));
            out.push(CommutatorTerm {
                word: w.clone(),
                coeff: c.clone(),
                shift: a.shift,
                band,
                factor,
                weight: a.weight,
            });
        }
        out
    }

    /// `φ(a, b) = ½ Tr(ψ(a)[F, ψ(b)])`, summed exactly over the `k_0` band.
    pub fn phi(&self, a: &QPoly, b: &QPoly) -> Result<QRatFunc> {
        let comm = self.commutator_f(b);
        let mut acc = QRatFunc::zero();
        for (wa, ca) in a.terms() {
            let act = self.rep.word_action(wa);
            for t in &comm {
                if act.shift.iter().zip(&t.shift).any(|(x, y)| x + y != 0) {
                    continue;
                }
                let weight = act.weight.shifted(&t.shift).mul(&t.weight);
                let fiber = self.rep.fiber_sum(&weight)?;
                let band = t.band.1 - t.band.0 + 1;
                let c = ca.clone() * t.coeff.clone();
                acc = acc + fiber * QRatFunc::from_laurent(c.scale(&int(band * t.factor / 2)));
            }
        }
        Ok(acc)
    }

    pub fn phi_cochain(&self) -> Cochain {
        let m = self.clone();
        Cochain::new(self.sphere(), 1, "phi", move |a| m.phi(&a[0], &a[1]))
    }

    /// `∫ a db` over `S_q^{2n+1}`, normalized so that `∫ x_1 dx_1* = (1 - q^{-2})^{-n}`.
    pub fn integral(&self, a: &QPoly, b: &QPoly) -> Result<QRatFunc> {
        self.phi(b, a)
    }
}
