//! Fredholm modules over the q-spheres, their character cocycles and the index pairings.

mod cochain;
mod modules;
mod pairing;

pub use cochain::{cochain_b, cyclic_rotation, cyclicity_check, periodicity_s, Cochain};
pub use modules::{chi, tau0, tau0_cochain, CommutatorTerm, EvenModule, OddModule};
pub use pairing::{odd_pairing, pair, pair_k0, pairing_matrix, PairingMatrix};
