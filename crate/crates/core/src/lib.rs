//! Finite models of sup-lattices, quantales and Frobenius structures.
//!
//! Everything here is finite and exhaustive: lattices are small, hom-sets and
//! tensor products are enumerated outright, and every law is checked on every
//! element rather than sampled.

#![allow(clippy::needless_range_loop)]

pub mod caps;
pub mod error;
pub mod io;
pub mod lab;
pub mod lattice;
pub mod par;
pub mod quantale;
pub mod rel;
pub mod slatt;

pub use caps::Caps;
pub use error::{Error, Result};
pub use lattice::{BinRel, FamilySpec, Lattice};
