//! Finitely presented simplicial sets and their exact invariants: integral
//! (co)homology by Smith normal form, exact sequences, chain-level operators,
//! horn filling, edge-path groups and finite covers.

pub mod chain;
pub mod covers;
pub mod error;
pub mod io;
pub mod operators;
pub mod sset;

pub use chain::{AbelianGroup, ChainComplex, ChainMap, HomologyGroup, IntegerMatrix};
pub use error::{Error, Result};
pub use sset::{GenId, Simplex, SimplicialMap, SimplicialSet};
