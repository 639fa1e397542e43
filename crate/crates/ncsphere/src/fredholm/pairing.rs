use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::cochain::Cochain;
use super::modules::{tau0_cochain, EvenModule, OddModule};
use crate::error::{Error, Result};
use crate::ncalg::{chern_odd, CyclicChain};
use crate::qspheres::{idempotent_even, unit_class, unitary_odd, QMat, QPoly};
use crate::scalars::{QLaurent, QRatFunc};

/// `Σ c · φ(slot_0, …, slot_k)` over the terms of a chain.
pub fn pair(cocycle: &Cochain, chain: &CyclicChain<QLaurent>) -> Result<QRatFunc> {
    if chain.degree() != cocycle.degree() {
        return Err(Error::DegreeMismatch { cocycle: cocycle.degree(), chain: chain.degree() });
    }
    let mut acc = QRatFunc::zero();
    for (slots, c) in chain.terms() {
        let args: Vec<QPoly> = slots.iter().map(|w| QPoly::word(w.clone())).collect();
        acc = acc + cocycle.eval(&args)? * QRatFunc::from_laurent(c.clone());
    }
    Ok(acc)
}

/// Degree-zero pairing with an idempotent, evaluated on `tr(e)`.
pub fn pair_k0(cocycle: &Cochain, e: &QMat) -> Result<QRatFunc> {
    if cocycle.degree() != 0 {
        return Err(Error::DegreeMismatch { cocycle: cocycle.degree(), chain: 0 });
    }
    cocycle.eval(&[e.trace()])
}

fn integer(v: &QRatFunc) -> Result<i64> {
    v.as_rational()
        .filter(|r| r.is_integer())
        .and_then(|r| r.to_integer().to_i64())
        .ok_or_else(|| Error::NonIntegerPairing(v.to_string()))
}

/// Rows `[ε], [μ_ev]`, columns `[1], [e_{(2n)}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingMatrix {
    pub n: usize,
    pub matrix: [[i64; 2]; 2],
    pub determinant: i64,
}

pub fn pairing_matrix(n: usize) -> Result<PairingMatrix> {
    let module = EvenModule::new(n)?;
    let sphere = module.sphere().clone();
    let cocycles = [tau0_cochain(&sphere), module.tau1_cochain()];
    let classes = [unit_class(&sphere).matrix, idempotent_even(n).matrix];
    let mut matrix = [[0i64; 2]; 2];
    for (i, c) in cocycles.iter().enumerate() {
        for (j, e) in classes.iter().enumerate() {
            matrix[i][j] = integer(&pair_k0(c, e)?)?;
        }
    }
    let det = BigInt::from(matrix[0][0]) * matrix[1][1] - BigInt::from(matrix[0][1]) * matrix[1][0];
    Ok(PairingMatrix { n, matrix, determinant: det.to_i64().expect("small determinant") })
}

/// `⟨μ_odd, V_{(2n+1)}⟩ = φ(ch_{1/2}(V_{(2n+1)}))`.
pub fn odd_pairing(n: usize) -> Result<i64> {
    let module = OddModule::new(n)?;
    let v = unitary_odd(n);
    let ch = chern_odd(v.sphere.pres(), &v.matrix, 0)?;
    integer(&pair(&module.phi_cochain(), &ch)?)
}
