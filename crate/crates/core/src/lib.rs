pub mod algebraic;
pub mod cli;
pub mod error;
pub mod factorization;
pub mod families;
pub mod poly;
pub mod realroots;
mod search;
pub mod valuation;

pub use error::{Error, Result};
