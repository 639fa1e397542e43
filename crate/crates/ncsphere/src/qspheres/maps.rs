use num_traits::{One, Zero};

use super::algebra::{QPoly, Sphere};
use super::ktheory::QMat;
use crate::error::{Error, Result};
use crate::ncalg::{NCPoly, Presentation, Word};
use crate::scalars::{GLaurent, GaussRational, QLaurent, Ring};

/// `σ(x_0) = -x_0`, `σ(x_j) = x_j` on an even sphere.
pub fn sigma_auto(sphere: &Sphere, p: &QPoly) -> Result<QPoly> {
    if !sphere.is_even() {
        return Err(Error::WrongAlgebra(format!("sigma needs an even sphere, got {}", sphere.name())));
    }
    let x0 = sphere.pres().g("x0");
    let mut out = QPoly::zero();
    for (w, c) in p.terms() {
        let c = if w.count(x0) % 2 == 1 { -c.clone() } else { c.clone() };
        out.add_term(w.clone(), c);
    }
    Ok(out)
}

/// `#x_1 - #x_1*` in a word.
pub fn x1_charge(sphere: &Sphere, w: &Word) -> i64 {
    let pres = sphere.pres();
    let (g, s) = (pres.g("x1"), pres.g("x1'"));
    w.count(g) as i64 - w.count(s) as i64
}

/// `ρ_λ(x_1) = λ x_1`, other generators fixed, on an odd sphere.
pub fn t_action(sphere: &Sphere, p: &QPoly, lambda: &GaussRational) -> Result<NCPoly<GLaurent>> {
    if sphere.is_even() {
        return Err(Error::WrongAlgebra(format!("the circle action needs an odd sphere, got {}", sphere.name())));
    }
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let k = x1_charge(sphere, w);
        let f = if k >= 0 { lambda.pow(k)? } else { lambda.conj().pow(-k)? };
        out.add_term(w.clone(), c.map(|r| GaussRational::real(r.clone()) * f.clone()));
    }
    Ok(out)
}

/// Presentation of `sphere` with coefficients extended to Gaussian rationals.
pub fn complexified(sphere: &Sphere) -> Presentation<GLaurent> {
    sphere.pres().map_scalars(|c| c.map(|r| GaussRational::real(r.clone())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureMap {
    /// `A(S_q^{2n}) → A(S_q^{2n-1})`, killing `x_0`.
    Equator,
    /// `A(S_q^{2n+1}) → A(S_q^{2n})`, `x_1, x_1* ↦ x_0` and `x_i ↦ x_{i-1}`.
    SuspendEvenInOdd,
    /// `A(S_q^{N-1}) → A(S_{1/q}^{N-1})`.
    InversionIso,
}

/// Target algebra of a structure map, together with the generator images.
pub struct MapData {
    pub target: Presentation<QLaurent>,
    pub images: Vec<QPoly>,
}

/// Sphere at parameter `1/q`: same generators, every coefficient `c(q) ↦ c(1/q)`.
pub fn inverted_presentation(sphere: &Sphere) -> Presentation<QLaurent> {
    sphere.pres().map_scalars(QLaurent::invert_q)
}

pub fn map_data(sphere: &Sphere, map: StructureMap) -> Result<MapData> {
    let pres = sphere.pres();
    let n = sphere.n();
    match map {
        StructureMap::Equator => {
            if !sphere.is_even() {
                return Err(Error::WrongAlgebra(format!("equator needs an even sphere, got {}", sphere.name())));
            }
            let tgt = Sphere::odd(n);
            let images = pres
                .generators()
                .iter()
                .map(|g| if g.self_adjoint { QPoly::zero() } else { tgt.el(&g.name) })
                .collect();
            Ok(MapData { target: tgt.pres().clone(), images })
        }
        StructureMap::SuspendEvenInOdd => {
            if sphere.is_even() || n < 2 {
                return Err(Error::WrongAlgebra(format!("suspension needs S_q^(2n+1), n >= 1, got {}", sphere.name())));
            }
            let tgt = Sphere::even(n - 1);
            let images = pres
                .generators()
                .iter()
                .map(|g| match g.index {
                    1 => tgt.x(0),
                    i if g.starred => tgt.xs(i as usize - 1),
                    i => tgt.x(i as usize - 1),
                })
                .collect();
            Ok(MapData { target: tgt.pres().clone(), images })
        }
        StructureMap::InversionIso => {
            let tgt = inverted_presentation(sphere);
            let mq = QLaurent::q(1).scale(&crate::scalars::int(-1));
            let images = pres
                .generators()
                .iter()
                .map(|g| {
                    let i = g.index as usize;
                    let c = mq.pow((n - i) as u32);
                    let name = if g.self_adjoint {
                        g.name.clone()
                    } else if g.starred {
                        format!("x{i}")
                    } else {
                        format!("x{i}'")
                    };
                    tgt.el(&name).scale(&c)
                })
                .collect();
            Ok(MapData { target: tgt, images })
        }
    }
}

/// Apply a structure map to an element.
pub fn structure_map(sphere: &Sphere, p: &QPoly, map: StructureMap) -> Result<(QPoly, Presentation<QLaurent>)> {
    let d = map_data(sphere, map)?;
    let out = sphere.pres().substitute(p, &d.target, &d.images, |c| c.clone());
    Ok((out, d.target))
}

/// Images of every defining relation `lhs - rhs` under `map`; all must vanish.
pub fn relation_images(sphere: &Sphere, map: StructureMap) -> Result<Vec<(String, QPoly)>> {
    let d = map_data(sphere, map)?;
    let pres = sphere.pres();
    let mut out = Vec::new();
    for ((a, b), rhs) in pres.rules() {
        let lhs = QPoly::word(Word(vec![*a, *b]));
        let rel = lhs - rhs.clone();
        let img = pres.substitute(&rel, &d.target, &d.images, |c| c.clone());
        out.push((pres.show_word(&Word(vec![*a, *b])), img));
    }
    Ok(out)
}

/// Apply a substitution entrywise to a matrix.
pub fn map_matrix(sphere: &Sphere, m: &QMat, map: StructureMap) -> Result<(QMat, Presentation<QLaurent>)> {
    let d = map_data(sphere, map)?;
    let pres = sphere.pres();
    let out = m.map(|p| pres.substitute(p, &d.target, &d.images, |c| c.clone()));
    Ok((out, d.target))
}

/// `u'` obtained from `u_{(2n)}` by doubling every entry: entries containing
/// `x_0` become `x_0 ⊗ σ_x`, the others `p ⊗ 1`.
pub fn doubled_unipotent(sphere: &Sphere, u: &QMat) -> QMat {
    let x0 = sphere.pres().gen_by_name("x0");
    let m = u.size();
    QMat::from_fn(2 * m, |i, j| {
        let (bi, a) = (i / 2, i % 2);
        let (bj, b) = (j / 2, j % 2);
        let p = u.get(bi, bj);
        let has_x0 = x0.is_some_and(|g| p.terms().any(|(w, _)| w.count(g) > 0));
        let keep = if has_x0 { a != b } else { a == b };
        if keep {
            p.clone()
        } else {
            QPoly::zero()
        }
    })
}

/// `ψ_λ`: the one-dimensional representation `x_n ↦ λ`, `x_n* ↦ λ̄`, other generators `↦ 0`.
#[derive(Clone, Debug)]
pub struct ClassicalPoint {
    sphere: Sphere,
    lambda: GaussRational,
}

pub fn classical_point(sphere: &Sphere, lambda: GaussRational) -> Result<ClassicalPoint> {
    if !lambda.norm_sqr().is_one() {
        return Err(Error::NotUnitModulus(lambda.to_string()));
    }
    Ok(ClassicalPoint { sphere: sphere.clone(), lambda })
}

impl ClassicalPoint {
    pub fn eval(&self, p: &QPoly) -> GLaurent {
        let pres = self.sphere.pres();
        let n = self.sphere.n();
        let mut acc = GLaurent::zero();
        'words: for (w, c) in p.terms() {
            let mut v = GaussRational::one();
            for &g in &w.0 {
                let gen = &pres.generators()[g as usize];
                if gen.index as usize != n || gen.self_adjoint {
                    continue 'words;
                }
                v = v * if gen.starred { self.lambda.conj() } else { self.lambda.clone() };
            }
            acc = acc + c.map(|r| GaussRational::real(r.clone())).scale(&v);
        }
        acc
    }
}
