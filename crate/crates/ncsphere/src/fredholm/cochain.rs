use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qspheres::{QPoly, Sphere};
use crate::scalars::{rat, QRatFunc};

type EvalFn = dyn Fn(&[QPoly]) -> Result<QRatFunc> + Send + Sync;

/// A multilinear functional of `degree + 1` arguments over a sphere algebra.
#[derive(Clone)]
pub struct Cochain {
    degree: usize,
    tag: String,
    sphere: Sphere,
    f: Arc<EvalFn>,
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cochain({}, degree {}, {})", self.tag, self.degree, self.sphere.name())
    }
}

impl Cochain {
    pub fn new(
        sphere: &Sphere,
        degree: usize,
        tag: impl Into<String>,
        f: impl Fn(&[QPoly]) -> Result<QRatFunc> + Send + Sync + 'static,
    ) -> Self {
        Cochain { degree, tag: tag.into(), sphere: sphere.clone(), f: Arc::new(f) }
    }

    pub fn zero(sphere: &Sphere, degree: usize) -> Self {
        Self::new(sphere, degree, "0", |_| Ok(QRatFunc::zero()))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn sphere(&self) -> &Sphere {
        &self.sphere
    }

    pub fn eval(&self, args: &[QPoly]) -> Result<QRatFunc> {
        if args.len() != self.degree + 1 {
            return Err(Error::DegreeMismatch { cocycle: self.degree, chain: args.len().saturating_sub(1) });
        }
        (self.f)(args)
    }

    fn prod(&self, xs: &[QPoly]) -> QPoly {
        xs.iter().fold(QPoly::one(), |acc, x| self.sphere.mul(&acc, x))
    }
}

/// `(bφ)(a_0, …, a_{n+1}) = Σ_j (-1)^j φ(…, a_j a_{j+1}, …) + (-1)^{n+1} φ(a_{n+1} a_0, a_1, …, a_n)`.
pub fn cochain_b(phi: &Cochain) -> Cochain {
    let inner = phi.clone();
    let n = phi.degree;
    Cochain::new(&phi.sphere, n + 1, format!("b({})", phi.tag), move |a| {
        let mut acc = QRatFunc::zero();
        for j in 0..=n {
            let mut args: Vec<QPoly> = a[..j].to_vec();
            args.push(inner.prod(&a[j..j + 2]));
            args.extend_from_slice(&a[j + 2..]);
            let v = inner.eval(&args)?;
            acc = if j % 2 == 0 { acc + v } else { acc - v };
        }
        let mut args = vec![inner.prod(&[a[n + 1].clone(), a[0].clone()])];
        args.extend_from_slice(&a[1..=n]);
        let v = inner.eval(&args)?;
        Ok(if (n + 1) % 2 == 0 { acc + v } else { acc - v })
    })
}

/// `(λφ)(a_0, …, a_n) = (-1)^n φ(a_n, a_0, …, a_{n-1})`.
pub fn cyclic_rotation(phi: &Cochain) -> Cochain {
    let inner = phi.clone();
    let n = phi.degree;
    Cochain::new(&phi.sphere, n, format!("λ({})", phi.tag), move |a| {
        let mut args = vec![a[n].clone()];
        args.extend_from_slice(&a[..n]);
        let v = inner.eval(&args)?;
        Ok(if n % 2 == 0 { v } else { -v })
    })
}

/// Whether `λφ = φ` on every sample tuple.
pub fn cyclicity_check(phi: &Cochain, samples: &[Vec<QPoly>]) -> Result<bool> {
    let rot = cyclic_rotation(phi);
    for s in samples {
        if rot.eval(s)? != phi.eval(s)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The periodicity operator `S`, taking a cochain of degree `n-1` to degree `n+1`:
///
/// `Sφ(a_0, …, a_{n+1}) = -1/(n(n+1)) Σ_{j=1}^{n} φ(…, a_{j-1} a_j a_{j+1}, …)
///                       - 1/(n(n+1)) Σ_{1≤i<j≤n} (-1)^{i+j} φ(…, a_{i-1} a_i, …, a_j a_{j+1}, …)`.
pub fn periodicity_s(phi: &Cochain) -> Cochain {
    let inner = phi.clone();
    let n = phi.degree + 1;
    let norm = QRatFunc::from_rational(rat(-1, (n * (n + 1)) as i64));
    Cochain::new(&phi.sphere, n + 1, format!("S({})", phi.tag), move |a| {
        let mut acc = QRatFunc::zero();
        for j in 1..=n {
            let mut args: Vec<QPoly> = a[..j - 1].to_vec();
            args.push(inner.prod(&a[j - 1..j + 2]));
            args.extend_from_slice(&a[j + 2..]);
            acc = acc + inner.eval(&args)?;
        }
        for i in 1..=n {
            for j in i + 1..=n {
                let mut args: Vec<QPoly> = a[..i - 1].to_vec();
                args.push(inner.prod(&a[i - 1..i + 1]));
                args.extend_from_slice(&a[i + 1..j]);
                args.push(inner.prod(&a[j..j + 2]));
                args.extend_from_slice(&a[j + 2..]);
                let v = inner.eval(&args)?;
                acc = if (i + j) % 2 == 0 { acc + v } else { acc - v };
            }
        }
        Ok(acc * norm.clone())
    })
}
