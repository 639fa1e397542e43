use num_traits::Zero;

use super::algebra::{QPoly, Sphere};
use crate::ncalg::{mat_check, MatKind, MatNC};
use crate::scalars::{rat, QLaurent, Ring};

pub type QMat = MatNC<QLaurent>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KKind {
    Idempotent,
    Unitary,
    Unit,
}

#[derive(Clone, Debug)]
pub struct KTheoryElement {
    pub kind: KKind,
    pub matrix: QMat,
    pub sphere: Sphere,
}

impl KTheoryElement {
    /// Run the defining matrix identities for this kind.
    pub fn verify(&self) -> Result<(), String> {
        let pres = self.sphere.pres();
        let kinds: &[MatKind] = match self.kind {
            KKind::Idempotent | KKind::Unit => &[MatKind::Idempotent, MatKind::SelfAdjoint],
            KKind::Unitary => &[MatKind::Unitary],
        };
        for &k in kinds {
            let c = mat_check(pres, &self.matrix, k);
            if !c.ok {
                return Err(c.witness.unwrap_or_default());
            }
        }
        Ok(())
    }
}

fn scalar_block(size: usize, p: &QPoly) -> QMat {
    QMat::from_fn(size, |i, j| if i == j { p.clone() } else { QPoly::zero() })
}

/// `u_{(2n)}` on even spheres and `u_{(2n-1)}` (with `x_0 = 0`) on odd ones.
pub fn unipotent(sphere: &Sphere) -> QMat {
    let mut u = QMat::from_fn(1, |_, _| sphere.x(0));
    for k in 1..=sphere.n() {
        let m = u.size();
        let a = u.scale(&QLaurent::q(-1));
        let b = scalar_block(m, &sphere.x(k));
        let c = scalar_block(m, &sphere.xs(k));
        let d = u.scale(&QLaurent::from_int(-1));
        u = QMat::blocks(&a, &b, &c, &d);
    }
    u
}

/// `e_{(2n)} = ½(1 + u_{(2n)})` over `S_q^{2n}`.
pub fn idempotent_even(n: usize) -> KTheoryElement {
    let sphere = Sphere::even(n);
    let u = unipotent(&sphere);
    let e = QMat::identity(u.size()).add(&u).scale(&QLaurent::constant(rat(1, 2)));
    KTheoryElement { kind: KKind::Idempotent, matrix: e, sphere }
}

/// The class of `1` over any sphere.
pub fn unit_class(sphere: &Sphere) -> KTheoryElement {
    KTheoryElement { kind: KKind::Unit, matrix: QMat::identity(1), sphere: sphere.clone() }
}

/// `V_{(2n+1)}` over `S_q^{2n+1}`, built recursively from `V_{(1)} = x_1`.
pub fn unitary_odd(n: usize) -> KTheoryElement {
    let sphere = Sphere::odd(n + 1);
    KTheoryElement { kind: KKind::Unitary, matrix: unitary_matrix(&sphere, n), sphere }
}

/// `V_{(2k+1)}` written in the generators of `sphere` (which needs `n ≥ k + 1`).
pub fn unitary_matrix(sphere: &Sphere, k: usize) -> QMat {
    let pres = sphere.pres();
    let mut v = QMat::from_fn(1, |_, _| sphere.x(1));
    for j in 1..=k {
        let m = v.size();
        let a = scalar_block(m, &sphere.x(j + 1));
        let b = v.scale(&QLaurent::q(-1));
        let c = v.star(pres).scale(&QLaurent::from_int(-1));
        let d = scalar_block(m, &sphere.xs(j + 1));
        v = QMat::blocks(&a, &b, &c, &d);
    }
    v
}
