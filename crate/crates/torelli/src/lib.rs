pub mod error;
mod linalg;
pub mod symplectic;

pub use error::{Error, Result};
pub mod surface;
pub mod chain;
pub mod tau;
pub mod sigma;
pub mod span;
pub mod checks;
pub mod cli;
