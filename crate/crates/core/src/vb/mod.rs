//! `VB_n` via the decomposition `VB_n = KB_n ⋊ S_n`.

pub mod abelian;
pub mod catalog;
pub mod relations;
pub mod semidirect;
pub mod word;

pub use abelian::{kb_abelianize, transposition_image, vb_abelianize, KbAbelianClasses};
pub use catalog::{eval_catalog_hom, CatalogHom, HomName, Source, Target, Value};
pub use relations::{sym_relators, vb_relators};
pub use semidirect::{
    expand_delta, from_semidirect, perm_act_kb, sd_inverse, sd_multiply, to_semidirect, SemidirectElement,
};
pub use word::{KbLetter, KbWord, VbLetter, VbWord};
