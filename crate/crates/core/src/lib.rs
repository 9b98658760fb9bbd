pub mod braid;
pub mod cli;
pub mod cyclo;
pub mod error;
pub mod families;
pub mod homfly;
pub mod obstruct;
pub mod poly;

pub use error::{Error, Result};
