//! Binary cubic forms and pairs of binary quadratic forms, both realised
//! as symmetric cubes.

mod cubic;
mod cubic_class;
mod pair;

pub use cubic::{
    cubic_companion, cubic_disc, cubic_embed, cubic_identity, cubicovariant, syzygy_check, verify_cubic_composition,
    verify_cubic_polarized, BinaryCubic,
};
pub use cubic_class::{cubic_class_compose, cubic_class_sum_is_identity, cubic_triple, CubicClassVerdict, CubicTriple};
pub use pair::{
    pair_companion, pair_disc, pair_embed, pair_identity, verify_pair_composition, verify_pair_composition_with,
    PairBqf, PairConvention,
};
