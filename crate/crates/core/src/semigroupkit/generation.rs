use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::semigroup::SemigroupSet;
use crate::catalog::{build, next_permutation, GroupSpec};
use crate::error::{Error, Result};
use crate::partorbits::{burnside_orbit_count, is_k_homogeneous, PartitionShape};
use crate::permcore::{CycleType, PermGroup, Permutation, StabilizerChain};
use crate::report::big;

/// Default number of candidate pairs tried by the two-generation search.
pub const DEFAULT_TWO_GEN_BUDGET: usize = 400;
/// Largest degree accepted by the two-generation search.
pub const MAX_TWO_GEN_DEGREE: usize = 24;
/// Seeds tried in turn, each with an equal share of the budget.
const SEED_SCHEDULE: usize = 4;
/// Redraws spent looking for a first element of an untried cycle type.
const DIVERSITY_TRIES: usize = 8;

/// Result of the two-generation search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoGeneration {
    /// `⟨a, b⟩` has the order of the group; `attempts` pairs were tested.
    Found {
        a: Permutation,
        b: Permutation,
        attempts: usize,
    },
    NotTwoHomogeneous,
    BudgetExhausted {
        attempts: usize,
    },
}

/// Searches for a generating pair of the catalog group `spec` from seeded random elements.
/// The first element of each pair favours cycle types not tried before. Every reported pair
/// is verified by comparing the order of `⟨a, b⟩` with the group order.
pub fn two_generation_witness(spec: &GroupSpec, seed: u64, budget: usize) -> Result<TwoGeneration> {
    if spec.degree() > MAX_TWO_GEN_DEGREE {
        return Err(Error::Unsupported(format!(
            "degree {} exceeds {MAX_TWO_GEN_DEGREE}",
            spec.degree()
        )));
    }
    let g = build(spec)?;
    two_generation_in(&g, seed, budget)
}

/// [`two_generation_witness`] for an explicit group.
pub fn two_generation_in(g: &PermGroup, seed: u64, budget: usize) -> Result<TwoGeneration> {
    if g.degree() > 1 && !is_k_homogeneous(g, 2)? {
        return Ok(TwoGeneration::NotTwoHomogeneous);
    }
    let order = g.order();
    let n = g.degree();
    let per_seed = budget.div_ceil(SEED_SCHEDULE).max(1);
    let mut attempts = 0;
    for round in 0..SEED_SCHEDULE as u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(round));
        let mut tried: HashSet<CycleType> = HashSet::new();
        for _ in 0..per_seed {
            if attempts == budget {
                return Ok(TwoGeneration::BudgetExhausted { attempts });
            }
            attempts += 1;
            let mut a = g.chain().random_element(&mut rng);
            for _ in 0..DIVERSITY_TRIES {
                if !tried.contains(&a.cycle_type()) {
                    break;
                }
                a = g.chain().random_element(&mut rng);
            }
            tried.insert(a.cycle_type());
            let b = g.chain().random_element(&mut rng);
            if StabilizerChain::build(n, &[a.clone(), b.clone()]).order() == order {
                return Ok(TwoGeneration::Found { a, b, attempts });
            }
        }
    }
    Ok(TwoGeneration::BudgetExhausted { attempts })
}

/// Orbit counts of a group on every partition shape of one rank; their sum is the least
/// number of rank-`r` maps that generate all rank-`r` maps together with the group.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorCount {
    pub group: String,
    pub rank: usize,
    pub per_shape: Vec<(String, u64)>,
    #[serde(serialize_with = "big::serialize")]
    pub total: BigUint,
}

pub fn required_generator_count(spec: &GroupSpec, rank: usize) -> Result<GeneratorCount> {
    let g = build(spec)?;
    required_generator_count_in(&g, rank)
}

/// [`required_generator_count`] for an explicit group.
pub fn required_generator_count_in(g: &PermGroup, rank: usize) -> Result<GeneratorCount> {
    let n = g.degree();
    if rank == 0 || rank >= n || 2 * rank < n {
        return Err(Error::InvalidInput(format!(
            "rank {rank} outside n/2..n for degree {n}"
        )));
    }
    let mut per_shape = Vec::new();
    let mut total = BigUint::zero();
    for shape in PartitionShape::all_of_rank(n, rank) {
        let c = burnside_orbit_count(g, &shape)?;
        per_shape.push((shape.to_string(), u64::try_from(&c).unwrap_or(u64::MAX)));
        total += c;
    }
    Ok(GeneratorCount {
        group: g.name().to_string(),
        rank,
        per_shape,
        total,
    })
}

/// Largest degree for the normalizer scan.
pub const MAX_SCAN_DEGREE: usize = 8;

/// The permutations `g` with `g⁻¹Sg = S`, found by scanning `Sₙ`. Conjugation is an
/// automorphism of `Tₙ`, so it suffices that the conjugates of the generators lie in `S`.
pub fn normalizer_of_semigroup_scan(s: &SemigroupSet) -> Result<PermGroup> {
    let n = s.degree();
    if n > MAX_SCAN_DEGREE {
        return Err(Error::Unsupported(format!(
            "degree {n} exceeds {MAX_SCAN_DEGREE}"
        )));
    }
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current = PermGroup::trivial(n);
    let mut images: Vec<u16> = (0..n as u16).collect();
    loop {
        let x = Permutation::from_images0(images.clone())?;
        if !current.has(&x) && s.generators().iter().all(|t| s.contains(&t.conjugate_by(&x))) {
            gens.push(x);
            current = PermGroup::new("N", n, gens.clone());
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    Ok(current.with_name("N(S)"))
}
