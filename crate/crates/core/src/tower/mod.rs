//! The tower `R_n = C_n(R,S) = R ⊗_S ⋯ ⊗_S R` above `S = Q[H] ⊆ R = Q[G]`.
//!
//! `R` is free as a right `S`-module on a left transversal `g_1 = 1, …, g_m`,
//! so every element of `R_n` is uniquely a combination of basis tensors
//! `g_{i_1} ⊗ ⋯ ⊗ g_{i_{n-1}} ⊗ g` with `g ∈ G`. The ring structure is the
//! `E`-multiplication coming from the iterated endomorphism rings; all
//! arithmetic is exact over `Q`.

mod algebra;
mod element;
mod linalg;
mod ops;
mod system;
mod verify;

pub use algebra::{GroupAlgebraElement, Rational};
pub use element::TowerElement;
pub use ops::Side;
pub use system::{CentralizerElement, FrobeniusSystem, GeneratorCriterion, TowerError};
pub use verify::{
    verify_relations, CheckStatus, IdentityCheck, VerificationReport, VerifyOptions,
    DEFAULT_SAMPLE_LIMIT,
};
