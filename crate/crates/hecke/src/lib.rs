//! Algebra of braids on r parallel strands modulo the quadratic
//! relation S_i^2 = z S_i + 1, with its permutation basis,
//! symmetrizers and Young idempotents at specialized parameters, the
//! commuting L_r family, characters, and the bridge to endomorphisms
//! of parallel up-strands in the diagram category.

pub mod algebra;
pub mod bridge;
pub mod perm;

pub use algebra::{
    basis_inverse, interchange_perm, jm_l, sign_character, standard_basis, symmetrizers,
    trivial_character, young_idempotent, HeckeElement, HeckeError,
};
pub use bridge::{from_endomorphism, iota, positive_lift};
pub use perm::{all_elements, Permutation};
