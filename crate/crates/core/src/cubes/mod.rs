//! Bhargava cubes: associated forms, involutions, companion cubes, form
//! products, the cube–triple correspondence, the group law, dual cubes and
//! the cube composition identity.

mod composition;
mod cube;
mod group;
mod lemmermeyer;
mod triple;

pub use composition::{form_product, verify_cube_composition, verify_cube_composition_with, BilinearConvention};
pub use cube::{
    assoc_forms, companion_cube, cube_disc, cube_variants, gamma_act, identity_cube, is_projective, Cube, Mat,
};
pub use group::{cube_class_compose, cube_class_equal, cube_class_sum_is_identity, dual_cubes_solve, DualWitness};
pub use lemmermeyer::{lemmermeyer_identity, LemmermeyerInstance};
pub use triple::{cube_to_triple, triple_to_cube, BalancedTriple};
