pub mod body;
pub mod cli;
pub mod error;
pub mod hull;
pub mod mixed;
mod linalg;
pub mod random;
pub mod special;
pub mod verifier;

pub use error::{Error, Result};
