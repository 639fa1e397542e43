use std::sync::Arc;

use num_traits::{One, Zero};

use super::algebras::{half, lam, lit, word2, ThetaMat, ThetaPoly, ThetaPresentation};
use crate::error::{Error, Result};
use crate::ncalg::{GenId, Presentation, PresentationBuilder, Word};
use crate::scalars::{Phase, Ring};

/// How the mixed relation between `Γ^j` and `Γ^{k*}` is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliffordReading {
    /// `Γ^j Γ^{k*} + λ^{jk} Γ^{k*} Γ^j = δ^{jk}`.
    Car,
    /// `Γ^j Γ^{k*} + λ^{jk} Γ^k Γ^{j*} = δ^{jk}`, literally.
    Printed,
}

impl Default for CliffordReading {
    fn default() -> Self {
        if cfg!(feature = "clifford-printed-reading") {
            CliffordReading::Printed
        } else {
            CliffordReading::Car
        }
    }
}

/// The λ-Clifford algebra on `Γ^1, …, Γ^n` with its chirality `γ`.
#[derive(Clone, Debug)]
pub struct CliffordPresentation {
    pub n: usize,
    pub reading: CliffordReading,
    pres: Arc<Presentation<Phase>>,
    gamma: ThetaPoly,
}

impl CliffordPresentation {
    pub fn pres(&self) -> &Presentation<Phase> {
        &self.pres
    }

    pub fn g(&self, j: usize) -> ThetaPoly {
        lit(self.pres.g(&format!("G{j}")))
    }

    pub fn gs(&self, j: usize) -> ThetaPoly {
        lit(self.pres.g(&format!("G{j}'")))
    }

    /// `γ = [Γ^{1*}, Γ^1] ⋯ [Γ^{n*}, Γ^n]` in normal form.
    pub fn gamma(&self) -> &ThetaPoly {
        &self.gamma
    }

    /// `γ* = γ`, `γ² = 1` and `γΓ^j + Γ^jγ = 0` for all `j`.
    pub fn check_chirality(&self) -> std::result::Result<(), String> {
        let p = self.pres();
        let g = &self.gamma;
        if p.star(g) != *g {
            return Err("gamma is not self-adjoint".into());
        }
        if p.mul(g, g) != ThetaPoly::one() {
            return Err(format!("gamma^2 = {}", p.show(&p.mul(g, g))));
        }
        for j in 1..=self.n {
            for x in [self.g(j), self.gs(j)] {
                let anti = p.mul(g, &x) + p.mul(&x, g);
                if !anti.is_zero() {
                    return Err(format!("gamma does not anticommute with {}", p.show(&x)));
                }
            }
        }
        Ok(())
    }
}

pub fn clifford_algebra(n: usize) -> Result<CliffordPresentation> {
    clifford_algebra_with(n, CliffordReading::default())
}

pub fn clifford_algebra_with(n: usize, reading: CliffordReading) -> Result<CliffordPresentation> {
    if n == 0 {
        return Err(Error::InvalidParameter("Clifford algebra needs n >= 1".into()));
    }
    let mut b = PresentationBuilder::<Phase>::new(&format!("Cliff{n}"));
    let ids: Vec<(GenId, GenId)> = (1..=n).map(|j| b.pair(&format!("G{j}"), j as u32, j as u32)).collect();
    let z = |j: usize| ids[j - 1];
    for k in 1..=n {
        let (sk, gk) = z(k);
        b.rule(gk, gk, ThetaPoly::zero());
        b.rule(sk, sk, ThetaPoly::zero());
        match reading {
            CliffordReading::Car => b.rule(gk, sk, ThetaPoly::one() - word2(sk, gk)),
            CliffordReading::Printed => b.rule(gk, sk, ThetaPoly::constant(half())),
        }
        for j in 1..k {
            let (sj, gj) = z(j);
            b.rule(gk, gj, -word2(gj, gk).scale(&lam(j, k)));
            b.rule(sk, sj, -word2(sj, sk).scale(&lam(j, k)));
            match reading {
                CliffordReading::Car => {
                    b.rule(gk, sj, -word2(sj, gk).scale(&lam(k, j)));
                    b.rule(sk, gj, -word2(gj, sk).scale(&lam(k, j)));
                }
                CliffordReading::Printed => b.rule(gk, sj, -word2(gj, sk).scale(&lam(k, j))),
            }
        }
    }
    let doc = match reading {
        CliffordReading::Car => "G^j G^k + L^kj G^k G^j = 0, G^j G^k* + L^jk G^k* G^j = delta^jk",
        CliffordReading::Printed => "G^j G^k + L^kj G^k G^j = 0, G^j G^k* + L^jk G^k G^j* = delta^jk",
    };
    let pres = b.doc(doc).build().map_err(|e| Error::WrongAlgebra(format!("Clifford certificate: {e}")))?;
    let mut gamma = ThetaPoly::one();
    for j in 1..=n {
        let (s, g) = z(j);
        let c = pres.commutator(&lit(s), &lit(g));
        gamma = pres.mul(&gamma, &c);
    }
    Ok(CliffordPresentation { n, reading, pres: Arc::new(pres), gamma })
}

/// Scalar `2^n × 2^n` matrices representing a Clifford algebra.
#[derive(Clone, Debug)]
pub struct CliffordModel {
    pub n: usize,
    /// `Γ^j`, `j = 1..n`, in the block basis.
    pub gammas: Vec<ThetaMat>,
    pub gamma_stars: Vec<ThetaMat>,
    pub chirality: ThetaMat,
    /// `σ^j`: upper-right block of `Γ^j`.
    pub sigma: Vec<ThetaMat>,
    /// `σ̄^j`: upper-right block of `Γ^{j*}`.
    pub sigma_bar: Vec<ThetaMat>,
}

/// Generator-free presentation for scalar matrix arithmetic.
pub(crate) fn scalars() -> Presentation<Phase> {
    PresentationBuilder::<Phase>::new("C").build_unchecked()
}

fn chirality_sign(n: usize, s: usize) -> i32 {
    (0..n).map(|m| if s >> m & 1 == 1 { 1 } else { -1 }).product()
}

/// Order of natural basis states in the block basis: `γ = +1` first.
pub fn block_order(n: usize) -> Vec<usize> {
    let dim = 1 << n;
    let plus = (0..dim).filter(|&s| chirality_sign(n, s) == 1);
    let minus = (0..dim).filter(|&s| chirality_sign(n, s) == -1);
    plus.chain(minus).collect()
}

/// Twisted Jordan–Wigner model: `Γ^k = ⊗_{m<k} diag(1, -λ^{km}) ⊗ |0⟩⟨1| ⊗ 𝕀`, verified
/// against every relation of the default Clifford presentation.
pub fn clifford_matrices(n: usize) -> Result<CliffordModel> {
    if !(1..=3).contains(&n) {
        return Err(Error::InvalidParameter(format!("matrix models exist for 1 <= n <= 3, got {n}")));
    }
    let cliff = clifford_algebra(n)?;
    let order = block_order(n);
    let dim = 1 << n;
    let gamma_nat = |k: usize, row: usize, col: usize| -> Phase {
        let bit = 1 << (k - 1);
        if col & bit == 0 || row != col ^ bit {
            return Phase::zero();
        }
        (1..k).filter(|m| col >> (m - 1) & 1 == 1).fold(Phase::one(), |acc, m| acc * -lam(k, m))
    };
    let in_block =
        |f: &dyn Fn(usize, usize) -> Phase| ThetaMat::from_fn(dim, |i, j| ThetaPoly::constant(f(order[i], order[j])));
    let gammas: Vec<ThetaMat> = (1..=n).map(|k| in_block(&|r, c| gamma_nat(k, r, c))).collect();
    let gamma_stars: Vec<ThetaMat> = (1..=n).map(|k| in_block(&|r, c| gamma_nat(k, c, r).conj())).collect();
    let chirality = in_block(&|r, c| if r == c { Phase::from_int(chirality_sign(n, r) as i64) } else { Phase::zero() });
    let half_dim = dim / 2;
    let sigma = gammas.iter().map(|m| m.block(0, half_dim, half_dim)).collect();
    let sigma_bar = gamma_stars.iter().map(|m| m.block(0, half_dim, half_dim)).collect();
    let model = CliffordModel { n, gammas, gamma_stars, chirality, sigma, sigma_bar };
    verify_model(&cliff, &model)?;
    Ok(model)
}

impl CliffordModel {
    /// Image of a Clifford polynomial.
    pub fn eval(&self, cliff: &CliffordPresentation, p: &ThetaPoly) -> ThetaMat {
        let sc = scalars();
        let dim = 1 << self.n;
        let mut out = ThetaMat::zeros(dim);
        for (w, c) in p.terms() {
            let mut m = ThetaMat::identity(dim);
            for &g in &w.0 {
                let gen = &cliff.pres().generators()[g as usize];
                let j = gen.index as usize - 1;
                let f = if gen.starred { &self.gamma_stars[j] } else { &self.gammas[j] };
                m = m.mul(&sc, f);
            }
            out = out.add(&m.scale(c));
        }
        out
    }
}

/// Every rewriting rule and the chirality must hold on the matrices.
pub fn verify_model(cliff: &CliffordPresentation, model: &CliffordModel) -> Result<()> {
    let p = cliff.pres();
    for ((a, b), rhs) in p.rules() {
        let lhs = model.eval(cliff, &word2(*a, *b));
        if lhs != model.eval(cliff, rhs) {
            return Err(Error::ModelVerificationFailed(format!(
                "{} = {}",
                p.show_word(&Word(vec![*a, *b])),
                p.show(rhs)
            )));
        }
    }
    if model.eval(cliff, cliff.gamma()) != model.chirality {
        return Err(Error::ModelVerificationFailed("chirality".into()));
    }
    Ok(())
}

/// `e = ½(𝕀 + Σ_j (Γ^{j*} z^j + Γ^j z^{j*}) + γ x)` over `S_θ^{2n}`, in the block basis.
pub fn theta_projection(n: usize) -> Result<(ThetaPresentation, ThetaMat)> {
    let model = clifford_matrices(n)?;
    let alg = super::theta_sphere(2 * n + 1)?;
    let dim = 1 << n;
    let mut e = ThetaMat::identity(dim).add(&tensor(&model.chirality, &alg.x()));
    for j in 1..=n {
        e = e.add(&tensor(&model.gamma_stars[j - 1], &alg.z(j))).add(&tensor(&model.gammas[j - 1], &alg.zs(j)));
    }
    Ok((alg, e.scale(&half())))
}

/// `u = Σ_j (σ̄^j z^j + σ^j z^{j*})` over `S_θ^{2n-1}`.
pub fn theta_unitary(n: usize) -> Result<(ThetaPresentation, ThetaMat)> {
    let model = clifford_matrices(n)?;
    let alg = super::theta_sphere(2 * n)?;
    let mut u = ThetaMat::zeros(1 << (n - 1));
    for j in 1..=n {
        u = u.add(&tensor(&model.sigma_bar[j - 1], &alg.z(j))).add(&tensor(&model.sigma[j - 1], &alg.zs(j)));
    }
    Ok((alg, u))
}

/// Scalar matrix times an algebra element.
fn tensor(m: &ThetaMat, x: &ThetaPoly) -> ThetaMat {
    m.map(|c| if c.is_zero() { ThetaPoly::zero() } else { x.scale(&c.unit_coeff()) })
}
