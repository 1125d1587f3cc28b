//! Sequential triangle counting kernels.
//!
//! Every function takes the graph by shared reference, allocates its own
//! scratch, and returns the exact triangle count.

mod cetc;
mod edge;
mod forward;
mod linalg;
mod treelist;
mod triples;
mod wedge;

pub use cetc::{
    cetc_listing, split_by_level, tc_cetc, tc_cetc_degree, tc_cetc_fe, tc_cetc_fe_with,
    tc_cetc_split, tc_cetc_split_degree, tc_cetc_split_recursive, tc_cetc_split_recursive_with,
    tc_cetc_with_levels, CetcConfig,
};
pub use edge::{
    edge_iterator, edge_iterator_do, tc_edge_binary, tc_edge_binary_do, tc_edge_hash,
    tc_edge_hash_do, tc_edge_merge, tc_edge_merge_do, tc_edge_partition, tc_edge_partition_do,
};
pub use forward::{tc_forward, tc_forward_hashed, tc_forward_hashed_degree};
pub use linalg::{tc_linear_algebra, tc_tri_simple};
pub use treelist::tc_treelist;
pub use triples::tc_triples;
pub use wedge::{tc_wedge, tc_wedge_do};
