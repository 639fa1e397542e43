//! θ-deformations: noncommutative tori and the Moyal product, θ-planes and spheres,
//! the instanton projection, λ-Clifford algebras and the bigraded symbol algebra.

mod algebras;
mod clifford;
mod lemmas;
mod moyal;
mod symbol;

pub use algebras::{
    lam, match_s_theta4, s_theta3, s_theta3_unitary, s_theta4, s_theta4_projection, theta_plane, theta_q, theta_sphere,
    torus_algebra, ThetaKind, ThetaMat, ThetaPoly, ThetaPresentation,
};
pub use clifford::{
    block_order, clifford_algebra, clifford_algebra_with, clifford_matrices, theta_projection, theta_unitary,
    verify_model, CliffordModel, CliffordPresentation, CliffordReading,
};
pub use lemmas::{
    check_commutant, check_engine, check_real_structure, check_twisted_products, twist_lemmas, TwistReport,
};
pub use moyal::{
    frequencies, moyal_star, moyal_torus_iso_check, rho, to_torus, weyl_monomial, FourierFunction, MoyalReport,
};
pub use symbol::{Atom, BigradedSymbol, Commutation, QExp};
