//! Amalgamated products: oracle-driven normal forms, free-group
//! instantiations, and the decompositions of elements of `KB_n` used to
//! straighten sections `S_n → VB_n`.

pub mod engine;
pub mod free;
pub mod kb;

pub use engine::{amalgam_normal_form, normal_form_of, swap_fixed_check, twisted_decompose, Amalgam, NormalForm, SwapCheck};
pub use free::{FreeAmalgam, FreeWord};
pub use kb::{
    hexagon_decompose, hexagon_lhs, s1_twisted_decompose, sk_twisted_decompose, split_fixed_pair,
    straighten_symmetric_section, KbPairAmalgam,
};
