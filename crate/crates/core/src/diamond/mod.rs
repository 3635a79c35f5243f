//! The diamond fundamental set, the 40-cell partition of the plane, and
//! the map `f♦`.

mod map;
mod sets;
mod verify;

pub use map::{branch_of, classify_cell, f_diamond, Branch, PartitionCell};
pub use sets::{diamond_sets, DiamondSets};
pub use verify::{
    cell_branch, check_cover, check_w2_images, partition_rows, verify_partition_lemma, PartitionRow,
};
