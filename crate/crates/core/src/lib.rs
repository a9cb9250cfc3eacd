//! Depth computations for subring pairs of semisimple algebras and the
//! tensor tower above a group-algebra Frobenius extension.
//!
//! The crate is organised bottom-up:
//!
//! * [`matrix`]: exact nonnegative integer matrices and their boolean supports,
//!   with bracketed powers `M^[2k] = (M Mᵗ)^k`, `M^[2k+1] = M^[2k] M`.
//! * [`depth`]: minimum (odd/even) depth and ideal depth from an inclusion matrix.
//! * [`bigraph`]: the bipartite inclusion graph, diameter-based depth and DOT export.
//! * [`sym`]: partitions and branching matrices of `S_n ⊂ S_{n+1}`, permutation
//!   groups, normalizers and brute-force combinatorial depth.
//! * [`tower`]: the rings `C_n(R,S) = R ⊗_S ⋯ ⊗_S R` for `Q[H] ⊆ Q[G]`, with
//!   their multiplication, inclusions, Frobenius maps and Temperley–Lieb
//!   generators, and an exact verifier for the identities they satisfy.
//! * [`io`]: text formats for matrices and subgroup pairs.

pub mod bigraph;
pub mod depth;
pub mod io;
pub mod matrix;
pub mod sym;
pub mod tower;

pub use bigraph::InclusionGraph;
pub use depth::{DepthError, DepthReport, IdealSpec};
pub use matrix::{MatrixError, NonNegMatrix, SupportMatrix};
