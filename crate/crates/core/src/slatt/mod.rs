//! The finite fragment of the category of complete lattices and
//! sup-preserving maps.

pub mod hom;
pub mod mix;
pub mod pairing;
pub mod supmap;
pub mod tensor;

pub use hom::{hom_lattice, sup_maps, HomLattice};
pub use mix::{adjunction_unit, is_nuclear, mix, mix_space, mix_values, triangle_identities, Mix};
pub use pairing::{chu_transpose, pairing_llop, DualPairing};
pub use supmap::{
    compose, image_factorization, is_sup_preserving, one_step_values, right_adjoint,
    Factorization, SupMap,
};
pub use tensor::{
    elementary_tensor, hom_to_tensor, tensor_lattice, tensor_to_hom, BiIdealSpace, TensorElement,
    TensorLattice,
};
