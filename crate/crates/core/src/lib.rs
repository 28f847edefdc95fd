pub mod arith;
pub mod census;
pub mod cli;
pub mod error;
pub mod expr;
pub mod families;
pub mod field;
pub mod gensfile;
pub mod group;
pub mod perm;
pub mod spectrum;

pub use error::{Error, Result};
