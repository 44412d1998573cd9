//! Graph transformations and recognizers for the decomposition classes the
//! depth rules are phrased in.

mod blocks;
mod chain;
mod ops;

pub use blocks::{block_profile, BlockKind, BlockProfile};
pub use chain::{chain_of_cliques, ChainOfCliques};
pub use ops::{
    clique_sum, clique_sum_mapped, delete_edge, delete_vertex, is_decomposable, is_unicyclic, ohtani_completion,
    Decomposition, Part,
};
