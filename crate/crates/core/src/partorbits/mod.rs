//! Partition shapes, packed partial partitions, fixed-point counting, and orbit counts of
//! permutation groups on set partitions and subsets.

mod counting;
mod half_affine;
mod orbits;
mod partial;
mod shape;

pub use counting::{
    burnside_from_histogram, burnside_orbit_count, fixed_count, fixed_subsets, subset_orbit_count_burnside,
    FixedCounter,
};
pub use half_affine::{half_affine_check, half_affine_group, HalfAffineCounts};
pub use orbits::{
    burnside_report, enumerate_orbits, is_k_homogeneous, subset_orbit_count, Method, OrbitEntry, OrbitReport,
    DEFAULT_CAP, DIRECT_SUBSET_LIMIT,
};
pub use partial::{enumerate_partials, PartialPartition, MAX_BLOCKS, MAX_PARTIAL_DEGREE, MAX_SUPPORT};
pub use shape::{integer_partitions, partition_number, PartitionShape};

pub(crate) use orbits::ShapeOrbits;
