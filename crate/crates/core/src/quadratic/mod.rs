//! The oriented quadratic ring S(D), its fraction field K and oriented
//! fractional ideals.

mod ideal;
mod ring;

pub use ideal::{ideal_class_equal, ideal_mul, ideal_norm, principal_generator, OrientedIdeal};
pub use ring::{kelem_cube_root, ring_of_discriminant, KElem, QuadraticRing};
