//! Exact computations on quantum and θ-deformed spheres: rewriting presentations,
//! Chern characters, representations, Fredholm modules and index pairings.

pub mod error;
pub mod fredholm;
pub mod ncalg;
pub mod qspheres;
pub mod repr;
pub mod scalars;
pub mod theta;

pub use error::{Error, Result};
pub use qspheres::{QMat, QPoly};
pub use theta::{ThetaMat, ThetaPoly};

/// Presented algebras over `ℤ[q, q^{-1}]`-coefficients.
pub type QPresentation = ncalg::Presentation<scalars::QLaurent>;
/// Presented algebras over phase coefficients.
pub type ThetaAlgebra = ncalg::Presentation<scalars::Phase>;
