//! Transformation semigroups generated by a singular map together with a permutation group.

mod checks;
mod generation;
mod semigroup;
mod transform;

pub use checks::{
    canonical_map, characterization_check, greedy_closure, greens_check, hypotheses, idempotent_match,
    kernel_witness, sandwich_check, sandwich_sets, verify, with_group, with_symmetric, Checks, GreensReport,
    Hypotheses, KernelWitness, Outcome, ReportHypotheses, Sandwich, Sizes, VerificationReport,
    EXHAUSTIVE_GREENS_DEGREE, MAX_GREENS_DEGREE, MAX_VERIFY_DEGREE,
};
pub use generation::{
    normalizer_of_semigroup_scan, required_generator_count, required_generator_count_in, two_generation_in,
    two_generation_witness, GeneratorCount, TwoGeneration, DEFAULT_TWO_GEN_BUDGET, MAX_SCAN_DEGREE,
    MAX_TWO_GEN_DEGREE,
};
pub use semigroup::{SemigroupSet, DEFAULT_SEMIGROUP_CAP};
pub use transform::{full_monoid_size, idempotent_from, idempotent_power, TransformationMap, MAX_T_DEGREE};
