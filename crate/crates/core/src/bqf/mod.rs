//! Binary quadratic forms: SL2 action, reduction, Dirichlet composition,
//! class groups, the form–ideal correspondence and Gauss composition
//! identities.

mod classgroup;
mod compose;
mod correspondence;
mod form;
mod gauss;
mod reduce;

pub use classgroup::{enumerate_class_group, ClassGroupTable};
pub use compose::{compose_dirichlet, represent_coprime};
pub use correspondence::{bqf_to_ideal, ideal_to_bqf};
pub use form::{principal_form, sl2_act, Bqf};
pub use gauss::{verify_gauss_identity, GaussBilinearData};
pub use reduce::{is_reduced, reduce, reduced_cycle, Reduction};
