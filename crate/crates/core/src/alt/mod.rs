//! Pairs of quaternary alternating 2-forms and senary alternating 3-forms,
//! reached from cubes by skew-symmetrisation.

mod quaternary;
mod senary;

pub use quaternary::{
    pair_companion, pair_disc, pair_form_product, pair_pfaffian_form, pfaffian, phi, verify_quaternary_composition,
    AltMatrix, QuatAltPair,
};
pub use senary::{
    senary_identity_pair, verify_senary_identity, verify_senary_with, wedge222, SenaryAlt3, SenaryConvention,
};
