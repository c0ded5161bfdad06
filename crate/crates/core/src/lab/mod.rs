//! The main theorems as executable constructions, and the sweep that checks
//! them on every small lattice.

mod affine;
mod ops;
mod sweep;
mod tight;

pub use affine::{pseudo_affine_witness, PseudoAffine};
pub use ops::{tensor_mult, tensor_pairing};
pub use sweep::{sweep_lattice, theorem_sweep, SweepRow, SweepSummary};
pub use tight::{
    endo_frobenius, endo_frobenius_with, is_tight, tight_frobenius, tight_maps, tight_pairing,
    TightQuantale,
};
