use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ncalg::{GenId, MatNC, NCPoly, Presentation, PresentationBuilder, Word};
use crate::scalars::{rat, Phase, Ring};

pub type ThetaPoly = NCPoly<Phase>;
pub type ThetaMat = MatNC<Phase>;

/// `λ^{jk}` with `λ^{kj} = (λ^{jk})^{-1}` and `λ^{jj} = 1`.
pub fn lam(j: usize, k: usize) -> Phase {
    Phase::lambda(j as u8, k as u8, 2)
}

pub(crate) fn half() -> Phase {
    Phase::from_rational(rat(1, 2))
}

pub(crate) fn lit(g: GenId) -> ThetaPoly {
    NCPoly::word(Word::letter(g))
}

pub(crate) fn word2(a: GenId, b: GenId) -> ThetaPoly {
    NCPoly::word(Word(vec![a, b]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaKind {
    Torus,
    Plane,
    Sphere,
}

/// A θ-deformed algebra presented over phase coefficients.
#[derive(Clone, Debug)]
pub struct ThetaPresentation {
    kind: ThetaKind,
    n: usize,
    /// Whether a central self-adjoint generator `x` is present.
    has_x: bool,
    names: Vec<String>,
    x_name: String,
    pres: Arc<Presentation<Phase>>,
}

impl ThetaPresentation {
    pub fn kind(&self) -> ThetaKind {
        self.kind
    }

    /// Number of complex (or unitary) generators.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `true` for even spheres and planes with a central real coordinate.
    pub fn is_even(&self) -> bool {
        self.has_x
    }

    pub fn name(&self) -> &str {
        self.pres.name()
    }

    pub fn pres(&self) -> &Presentation<Phase> {
        &self.pres
    }

    pub fn pres_arc(&self) -> Arc<Presentation<Phase>> {
        self.pres.clone()
    }

    /// The `j`-th generator (1-based).
    pub fn z(&self, j: usize) -> ThetaPoly {
        lit(self.pres.g(&self.names[j - 1]))
    }

    pub fn zs(&self, j: usize) -> ThetaPoly {
        lit(self.pres.g(&format!("{}'", self.names[j - 1])))
    }

    /// The central generator; zero when absent.
    pub fn x(&self) -> ThetaPoly {
        if self.has_x {
            lit(self.pres.g(&self.x_name))
        } else {
            ThetaPoly::zero()
        }
    }

    pub fn el(&self, src: &str) -> ThetaPoly {
        self.pres.el(src)
    }

    pub fn parse(&self, src: &str) -> Result<ThetaPoly> {
        self.pres.parse(src)
    }

    pub fn mul(&self, a: &ThetaPoly, b: &ThetaPoly) -> ThetaPoly {
        self.pres.mul(a, b)
    }

    pub fn star(&self, a: &ThetaPoly) -> ThetaPoly {
        self.pres.star(a)
    }

    pub fn show(&self, a: &ThetaPoly) -> String {
        self.pres.show(a)
    }

    /// The same presentation with every `λ_jk` set to 1.
    pub fn classical(&self) -> Presentation<Phase> {
        self.pres.map_scalars(|c| Phase::constant(c.at_classical_point()))
    }
}

/// `C^∞(𝕋_θ^n)`: unitaries with `u_j u_k = λ^{jk} u_k u_j`.
///
/// Generators are registered from `u_n` down to `u_1`, so normal words list
/// higher indices first.
pub fn torus_algebra(n: usize) -> Result<ThetaPresentation> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("torus algebra needs n >= 2, got {n}")));
    }
    let mut b = PresentationBuilder::<Phase>::new(&format!("T{n}"));
    let mut ids = vec![(0, 0); n + 1];
    for j in (1..=n).rev() {
        ids[j] = b.pair(&format!("u{j}"), j as u32, 0);
    }
    for j in 1..=n {
        let (sj, gj) = ids[j];
        b.rule(gj, sj, ThetaPoly::one());
        b.rule(sj, gj, ThetaPoly::one());
        for k in j + 1..=n {
            let (sk, gk) = ids[k];
            b.rule(gj, gk, word2(gk, gj).scale(&lam(j, k)));
            b.rule(gj, sk, word2(sk, gj).scale(&lam(k, j)));
            b.rule(sj, gk, word2(gk, sj).scale(&lam(k, j)));
            b.rule(sj, sk, word2(sk, sj).scale(&lam(j, k)));
        }
    }
    let pres = b
        .doc("u_j u_j* = u_j* u_j = 1, u_j u_k = L_jk u_k u_j")
        .build()
        .map_err(|e| Error::WrongAlgebra(format!("torus certificate: {e}")))?;
    Ok(ThetaPresentation {
        kind: ThetaKind::Torus,
        n,
        has_x: false,
        names: (1..=n).map(|j| format!("u{j}")).collect(),
        x_name: String::new(),
        pres: Arc::new(pres),
    })
}

fn build_theta(name: &str, kind: ThetaKind, names: &[&str], x_name: Option<&str>) -> ThetaPresentation {
    let n = names.len();
    let mut b = PresentationBuilder::<Phase>::new(name);
    let x = x_name.map(|s| b.self_adjoint(s, 0, 0));
    let ids: Vec<(GenId, GenId)> =
        names.iter().enumerate().map(|(i, s)| b.pair(s, (i + 1) as u32, (i + 1) as u32)).collect();
    let z = |j: usize| ids[j - 1];
    for k in 1..=n {
        let (sk, gk) = z(k);
        if let Some(x) = x {
            b.rule(gk, x, word2(x, gk));
            b.rule(sk, x, word2(x, sk));
        }
        for j in 1..k {
            let (sj, gj) = z(j);
            b.rule(gk, gj, word2(gj, gk).scale(&lam(k, j)));
            b.rule(sk, sj, word2(sj, sk).scale(&lam(k, j)));
            b.rule(gk, sj, word2(sj, gk).scale(&lam(j, k)));
            b.rule(sk, gj, word2(gj, sk).scale(&lam(j, k)));
        }
    }
    for j in 1..=n {
        let (sj, gj) = z(j);
        if kind == ThetaKind::Sphere && j == n {
            let mut rhs = ThetaPoly::one();
            if let Some(x) = x {
                rhs = rhs - word2(x, x);
            }
            for i in 1..n {
                let (si, gi) = z(i);
                rhs = rhs - word2(si, gi);
            }
            b.rule(gj, sj, rhs.clone());
            b.rule(sj, gj, rhs);
        } else {
            b.rule(gj, sj, word2(sj, gj));
        }
    }
    let doc = match kind {
        ThetaKind::Sphere => "z^j z^k = L^jk z^k z^j, z^j* z^k = L^kj z^k z^j*, x central, sum z^j z^j* + x^2 = 1",
        _ => "z^j z^k = L^jk z^k z^j, z^j* z^k = L^kj z^k z^j*, x central, [z^j, z^j*] = 0",
    };
    let pres = b.doc(doc).build().expect("theta presentation certificate");
    ThetaPresentation {
        kind,
        n,
        has_x: x.is_some(),
        names: names.iter().map(|s| s.to_string()).collect(),
        x_name: x_name.unwrap_or_default().to_string(),
        pres: Arc::new(pres),
    }
}

fn z_names(n: usize) -> Vec<String> {
    (1..=n).map(|j| format!("z{j}")).collect()
}

/// `ℂ^n_θ`, or `ℝ^{2n+1}_θ` with `with_x`.
pub fn theta_plane(n: usize, with_x: bool) -> ThetaPresentation {
    let names = z_names(n);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let label = if with_x { format!("R{}theta", 2 * n + 1) } else { format!("C{n}theta") };
    build_theta(&label, ThetaKind::Plane, &refs, with_x.then_some("x"))
}

/// `A(S_θ^{N-1})` for `N ≥ 2`: `n = ⌊N/2⌋` complex generators, plus `x` when `N` is odd.
pub fn theta_sphere(big_n: usize) -> Result<ThetaPresentation> {
    if big_n < 2 {
        return Err(Error::InvalidParameter(format!("sphere needs N >= 2, got {big_n}")));
    }
    let n = big_n / 2;
    let names = z_names(n);
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let even = big_n % 2 == 1;
    Ok(build_theta(&format!("St{}", big_n - 1), ThetaKind::Sphere, &refs, even.then_some("x")))
}

/// `S_θ⁴` with generators `a = α`, `b = β` and the central `z`.
pub fn s_theta4() -> ThetaPresentation {
    build_theta("Stheta4", ThetaKind::Sphere, &["a", "b"], Some("z"))
}

/// `S_θ³` with generators `a = α`, `b = β` and `αα* + ββ* = 1`.
pub fn s_theta3() -> ThetaPresentation {
    build_theta("Stheta3", ThetaKind::Sphere, &["a", "b"], None)
}

/// `q = (α, β; -λβ*, α*)` over either `S_θ³` or `S_θ⁴`.
pub fn theta_q(alg: &ThetaPresentation) -> ThetaMat {
    let l = lam(1, 2);
    MatNC::from_rows(vec![vec![alg.z(1), alg.z(2)], vec![-alg.zs(2).scale(&l), alg.zs(1)]]).expect("square matrix")
}

/// The instanton projection `e = ½(1+z, q; q*, 1-z)` on `S_θ⁴`.
pub fn s_theta4_projection(alg: &ThetaPresentation) -> ThetaMat {
    let q = theta_q(alg);
    let qs = q.star(alg.pres());
    let one = ThetaMat::identity(2);
    let z = ThetaMat::from_fn(2, |i, j| if i == j { alg.x() } else { ThetaPoly::zero() });
    ThetaMat::blocks(&one.add(&z), &q, &qs, &one.sub(&z)).scale(&half())
}

/// The `2×2` unitary `q` over `S_θ³`.
pub fn s_theta3_unitary() -> (ThetaPresentation, ThetaMat) {
    let alg = s_theta3();
    let q = theta_q(&alg);
    (alg, q)
}

/// Carry a matrix over `S_θ⁴` to `A(S_θ⁴)` in the coordinates of `theta_projection(2)`:
/// `α ↦ z^{1*}`, `β ↦ z^{2*}`, `z ↦ x`.
pub fn match_s_theta4(src: &ThetaPresentation, dst: &ThetaPresentation, m: &ThetaMat) -> ThetaMat {
    let images: Vec<ThetaPoly> = src
        .pres()
        .generators()
        .iter()
        .map(|g| match g.name.as_str() {
            "z" => dst.x(),
            "a" => dst.zs(1),
            "a'" => dst.z(1),
            "b" => dst.zs(2),
            "b'" => dst.z(2),
            other => panic!("unexpected generator {other}"),
        })
        .collect();
    m.map(|p| src.pres().substitute(p, dst.pres(), &images, |c| c.clone()))
}
