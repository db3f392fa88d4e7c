//! Corpus enumeration and verification campaigns.

pub mod campaign;
pub mod corpus;

pub use campaign::*;
pub use corpus::*;
