pub mod algebra;
pub mod bethe;
pub mod error;
pub mod fock;
pub mod miwa;
pub mod partitions;
pub mod phase_model;
pub mod qboson_model;
pub mod suite;
pub mod symfunc;

pub use error::{Error, Result};
