//! Permutations, stabilizer chains, and orbit computations.

mod chain;
mod group;
mod orbit;
mod perm;

pub use chain::StabilizerChain;
pub use group::{naive_closure, CycleHistogram, PermGroup};
pub use orbit::{on_points, on_sets, orbit, Orbit};
pub use perm::{CycleType, Permutation, MAX_DEGREE};
