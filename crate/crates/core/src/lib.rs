//! Symbolic Bruhat-Tits buildings of `PGL(2)` and `PGL(3)` over local
//! fields of dimension at most two, restricted to apartments of diagonal
//! lattice classes.

pub mod chain;
pub mod cli;
pub mod complex;
pub mod error;
pub mod export;
pub mod gamma;
pub mod lattice;
pub mod parse;
pub mod spherical;
pub mod weyl;

pub use error::{Error, Result};
