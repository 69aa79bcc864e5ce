pub mod alt;
pub mod bqf;
pub mod cli;
pub mod cubes;
pub mod error;
pub mod exact;
pub mod quadratic;
pub mod sym;
pub mod verify;
pub mod wire;

pub use error::{Error, Result};
pub use verify::{Check, Verification};
