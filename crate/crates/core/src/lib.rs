//! Real del Pezzo surfaces of degree 1 with a Bertini-fixed fibration:
//! geometric lattices, tritangent classification, the fiberwise mapping
//! class group and the Mordell–Weil action on homology.

pub mod cli;
pub mod error;
pub mod h1;
pub mod intlin;
pub mod lattice;
pub mod mapping_class;
pub mod mod2;
pub mod mw;
pub mod reference;
pub mod report;
pub mod tables;
pub mod tritangent;
pub mod types;
pub mod verify;

pub use error::{Error, Result};
