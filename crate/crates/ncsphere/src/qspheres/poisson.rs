use super::algebra::{QPoly, Sphere};
use super::maps::complexified;
use crate::ncalg::{NCPoly, Presentation};
use crate::scalars::{GLaurent, GaussRational};

/// Polynomial on the classical sphere, in the normal words of the `q = 1` presentation.
pub type ClassicalPoly = NCPoly<GaussRational>;

/// The semiclassical limit of a sphere algebra together with its quantization.
#[derive(Debug)]
pub struct PoissonSphere {
    quantum: Presentation<GLaurent>,
    classical: Presentation<GaussRational>,
}

impl PoissonSphere {
    pub fn new(sphere: &Sphere) -> Self {
        let quantum = complexified(sphere);
        let classical = quantum.map_scalars(GLaurent::at_one);
        PoissonSphere { quantum, classical }
    }

    pub fn classical(&self) -> &Presentation<GaussRational> {
        &self.classical
    }

    /// Classical image of a quantum element (`q = 1`).
    pub fn at_one(&self, p: &QPoly) -> ClassicalPoly {
        let lifted = p.map_scalars(|c| GaussRational::real(c.at_one()));
        self.classical.normal_form(&lifted)
    }

    /// `{f, g} = -i d/dq|_{q=1} (f g - g f)` for quantum elements.
    pub fn bracket_q(&self, f: &NCPoly<GLaurent>, g: &NCPoly<GLaurent>) -> ClassicalPoly {
        let c = self.quantum.commutator(f, g);
        let mi = -GaussRational::i();
        let raw = c.map_scalars(|l| l.q_derivative_at_1() * mi.clone());
        self.classical.normal_form(&raw)
    }

    /// Bracket of classical polynomials, lifted along normal words.
    pub fn bracket(&self, f: &ClassicalPoly, g: &ClassicalPoly) -> ClassicalPoly {
        let lf = f.map_scalars(|c| GLaurent::constant(c.clone()));
        let lg = g.map_scalars(|c| GLaurent::constant(c.clone()));
        self.bracket_q(&lf, &lg)
    }

    pub fn mul(&self, a: &ClassicalPoly, b: &ClassicalPoly) -> ClassicalPoly {
        self.classical.mul(a, b)
    }

    pub fn generator(&self, name: &str) -> ClassicalPoly {
        self.classical.gen_poly(name)
    }
}

/// `{f, g}` for elements of a sphere algebra.
pub fn poisson_bracket(sphere: &Sphere, f: &QPoly, g: &QPoly) -> ClassicalPoly {
    let ps = PoissonSphere::new(sphere);
    let lift = |p: &QPoly| p.map_scalars(|c| c.map(|r| GaussRational::real(r.clone())));
    ps.bracket_q(&lift(f), &lift(g))
}
