//! Psyquandle colorings and polynomial invariants of singular links and
//! pseudolinks.

pub mod coloring;
pub mod diagram;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod psyquandle;

pub use error::{Error, Result};
pub mod cli;
pub mod corpus;
pub mod invariants;
