//! Finite Coxeter groups: types, root systems in their standard realizations, and group elements.

mod group;
mod root_system;
mod types;

pub use group::{coxeter_length, GroupElement, GroupElementSet};
pub use root_system::{
    axpy, dihedral_field, dihedral_root, dot, poincare_from_degrees, project_to_mirror, reflection_matrix, scale_vector, Component,
    Matrix, RootSystem, Vector,
};
pub use types::{CoxeterType, Family, MAX_GROUP_ORDER};
