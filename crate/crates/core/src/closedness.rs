//! Fusion of group orbits on partitions under the normalizer, and closed pairs.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::catalog::{build, normalizer_in_sym, Family, GroupSpec};
use crate::error::{Error, Result};
use crate::partorbits::{PartitionShape, ShapeOrbits, DEFAULT_CAP};
use crate::permcore::{PermGroup, Permutation};

/// Largest quotient `N/G` handled by the coset transversal.
pub const MAX_QUOTIENT: usize = 1024;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusedOrbit {
    /// One-based representative.
    pub rep: String,
    pub size: u64,
    /// Index of the normalizer orbit this orbit belongs to.
    pub n_orbit: usize,
    /// Order of the stabilizer of the orbit in `N/G`.
    pub stabilizer_index: usize,
}

/// How the normalizer permutes the orbits of a group on one partition type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FusionReport {
    pub group: String,
    pub normalizer: String,
    pub shape: String,
    pub closed: bool,
    pub quotient_order: usize,
    pub group_orbits: usize,
    pub normalizer_orbits: usize,
    pub orbits: Vec<FusedOrbit>,
    /// Number of orbits per stabilizer, labelled `G` or `G:k` with `k` the order in `N/G`.
    pub census: BTreeMap<String, usize>,
}

impl FusionReport {
    pub fn census_count(&self, label: &str) -> usize {
        self.census.get(label).copied().unwrap_or(0)
    }
}

/// Stabilizer label for an orbit whose stabilizer in `N/G` has order `k`.
pub fn stabilizer_label(k: usize) -> String {
    if k == 1 {
        "G".to_string()
    } else {
        format!("G:{k}")
    }
}

/// Representatives of the cosets of `g` in `n`, identity first. Requires `g` normal in `n`.
pub fn coset_transversal(g: &PermGroup, n: &PermGroup) -> Result<Vec<Permutation>> {
    let mut reps = vec![Permutation::identity(n.degree())];
    let mut inverses = vec![Permutation::identity(n.degree())];
    let mut head = 0;
    while head < reps.len() {
        for x in n.generators() {
            let y = reps[head].mul(x);
            if !inverses.iter().any(|inv| g.has(&y.mul(inv))) {
                if reps.len() >= MAX_QUOTIENT {
                    return Err(Error::CapExceeded {
                        needed: reps.len() as u128 + 1,
                        cap: MAX_QUOTIENT as u128,
                    });
                }
                inverses.push(y.inverse());
                reps.push(y);
            }
        }
        head += 1;
    }
    Ok(reps)
}

/// Computes the `g`-orbits on partitions of type `shape` and how `n` fuses them.
pub fn fuse(g: &PermGroup, n: &PermGroup, shape: &PartitionShape, cap: u128) -> Result<FusionReport> {
    if g.degree() != n.degree() {
        return Err(Error::DegreeMismatch(g.degree(), n.degree()));
    }
    if !g.is_normal_in(n) {
        return Err(Error::NotNormal(format!("{} in {}", g.name(), n.name())));
    }
    let cosets = coset_transversal(g, n)?;
    let orbits = ShapeOrbits::compute(g, shape, cap)?;
    let count = orbits.count();
    // images[c][i]: the orbit that coset c sends orbit i to.
    let images: Vec<Vec<usize>> = cosets
        .iter()
        .map(|c| (0..count).map(|i| orbits.image_orbit(i, c)).collect())
        .collect();
    let mut n_orbit = vec![usize::MAX; count];
    let mut next = 0;
    for i in 0..count {
        if n_orbit[i] == usize::MAX {
            for img in &images {
                n_orbit[img[i]] = next;
            }
            next += 1;
        }
    }
    let mut census = BTreeMap::new();
    let fused: Vec<FusedOrbit> = orbits
        .rep_strings()
        .into_iter()
        .zip(orbits.sizes())
        .enumerate()
        .map(|(i, (rep, &size))| {
            let stab = images.iter().filter(|img| img[i] == i).count();
            *census.entry(stabilizer_label(stab)).or_insert(0) += 1;
            FusedOrbit {
                rep,
                size,
                n_orbit: n_orbit[i],
                stabilizer_index: stab,
            }
        })
        .collect();
    Ok(FusionReport {
        group: g.name().to_string(),
        normalizer: n.name().to_string(),
        shape: shape.to_string(),
        closed: next == count,
        quotient_order: cosets.len(),
        group_orbits: count,
        normalizer_orbits: next,
        orbits: fused,
        census,
    })
}

/// Fusion of the catalog group `spec` under its normalizer in `S_n`.
pub fn is_closed(spec: &GroupSpec, shape: &PartitionShape) -> Result<FusionReport> {
    is_closed_with_cap(spec, shape, DEFAULT_CAP)
}

pub fn is_closed_with_cap(spec: &GroupSpec, shape: &PartitionShape, cap: u128) -> Result<FusionReport> {
    let g = build(spec)?;
    let n = normalizer_in_sym(spec)?;
    fuse(&g, &n, shape, cap)
}

/// Default object cap for the probe.
pub const PROBE_CAP: u128 = 80_000_000;

/// Result of the `PXL(2,q)` closedness probe on `(4,1,…)` partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub q: u32,
    pub complete: bool,
    pub objects: String,
    pub cap: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fusion: Option<FusionReport>,
}

/// Decides closedness of `(PXL(2,q), (4,1,…))` by fusing orbits on 4-subsets, or reports
/// that the object count exceeds `cap`.
pub fn pxl_probe(q: u32, cap: u128) -> Result<ProbeReport> {
    let spec = GroupSpec::new(Family::PXL2, q)?;
    let shape = PartitionShape::from_support(spec.degree(), &[4])?;
    let objects: BigUint = shape.total_count();
    let mut report = ProbeReport {
        q,
        complete: false,
        objects: objects.to_string(),
        cap: cap.to_string(),
        fusion: None,
    };
    if objects.to_u128().is_none_or(|o| o > cap) {
        return Ok(report);
    }
    report.fusion = Some(is_closed_with_cap(&spec, &shape, cap)?);
    report.complete = true;
    Ok(report)
}
