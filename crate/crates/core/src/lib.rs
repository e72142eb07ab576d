//! Binary matroids over GF(2): standard-form representations, minors,
//! non-separating cocircuits, canonical forms, minor tests and single-element
//! coextension enumeration.

pub mod cli;
pub mod drivers;
pub mod error;
pub mod extend;
pub mod gf2;
pub mod iso;
pub mod matroid;
pub mod minors;
pub mod nsc;
pub mod zoo;

pub use error::{Error, Result};
pub use gf2::{BitMatrix, Bits};
pub use matroid::{element_set, BinaryMatroid, ElementSet, Label};
