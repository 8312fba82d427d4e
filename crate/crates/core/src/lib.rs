//! A_α spectral radius computation and exhaustive extremal search over
//! small graphs with a prescribed independence number.

pub mod enumeration;
pub mod error;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod quotient;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::Graph;
