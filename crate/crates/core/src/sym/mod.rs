//! Symmetric-group branching and combinatorial subgroup depth.

mod combinatorial;
mod group;
mod partition;
mod perm;

pub use combinatorial::{
    combinatorial_depth, normalizer_bound, CombinatorialDepth, DepthBound, DEFAULT_GROUP_LIMIT,
};
pub use group::{GroupError, PermGroup};
pub use partition::{branching_matrix, partitions, sym_depth, Partition};
pub use perm::{ParsePermError, Permutation};

pub use group::normalizer;
