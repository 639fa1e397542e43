//! Quantum Euclidean spheres `S_q^{N-1}`, their structure maps and K-theory generators.

mod algebra;
mod ktheory;
mod maps;
mod poisson;

pub use algebra::{QPoly, Sphere};
pub use ktheory::{idempotent_even, unipotent, unit_class, unitary_matrix, unitary_odd, KKind, KTheoryElement, QMat};
pub use maps::{
    classical_point, complexified, doubled_unipotent, inverted_presentation, map_data, map_matrix, relation_images,
    sigma_auto, structure_map, t_action, x1_charge, ClassicalPoint, MapData, StructureMap,
};
pub use poisson::{poisson_bracket, ClassicalPoly, PoissonSphere};

/// `A(S_q^{N-1})`.
pub fn sphere_algebra(big_n: usize) -> Sphere {
    Sphere::new(big_n)
}
