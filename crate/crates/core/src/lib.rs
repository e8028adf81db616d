pub mod cores;
pub mod cumulants;
pub mod error;
pub mod numeric;
pub mod repcore;
pub mod rootsystem;
pub mod typea;
pub mod verifier;

pub use error::{Error, Result};
