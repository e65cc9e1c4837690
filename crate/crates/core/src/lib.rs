//! Computational toolkit for the virtual singular braid monoid VSB_n and
//! its pure submonoid VSP_n.
//!
//! The crate provides:
//!
//! - [`words`]: generator alphabets, free-monoid words, parsing and
//!   formatting, free reduction of invertible pairs;
//! - [`presentations`]: the five relation catalogs (standard,
//!   reduced-standard, fusing, reduced-fusing, pure), instantiable for any
//!   strand count;
//! - [`morphisms`]: the permutation homomorphism π onto S_n, the
//!   translations between the standard and fusing alphabets, detour-move
//!   reduction to subscript-1 generators, and expansion of generalized
//!   fusing strings;
//! - [`schreier`]: the Schreier coset system Λ_n, the rewriting of pure
//!   words into generalized fusing strings, and the semidirect
//!   decomposition word = pure · representative;
//! - [`equivalence`]: a bounded bidirectional rewriting search that
//!   semi-decides word equality and returns a replayable trace;
//! - [`cyclotomic`] and [`representation`]: exact arithmetic in ℤ\[ξ\]/Φ_p
//!   and the monomial representation used to verify every relation family
//!   and to fingerprint words.

pub mod cyclotomic;
pub mod equivalence;
pub mod morphisms;
pub mod presentations;
pub mod representation;
pub mod schreier;
pub mod words;

pub use cyclotomic::{CycInt, CycRing};
pub use equivalence::{search_equivalent, SearchBudget, Verdict};
pub use morphisms::{permutation_of, Permutation};
pub use presentations::{catalog, CatalogName, PresentationCatalog, Relation};
pub use representation::{apply_word, rep_equal, BasisState, MonomialImage};
pub use schreier::{decompose, rewrite_pure};
pub use words::{Generator, Word};
