pub mod bits;
pub mod catalog;
pub mod error;
pub mod holonomy;
pub mod lattice;
pub mod lie;
pub mod matroid;

pub use error::{Error, Result};
