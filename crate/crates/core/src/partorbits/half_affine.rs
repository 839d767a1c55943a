use num_traits::ToPrimitive;
use serde::Serialize;

use super::counting::burnside_orbit_count;
use super::shape::PartitionShape;
use crate::catalog::{affine_field_map, field::is_prime, FiniteField};
use crate::error::{Error, Result};
use crate::permcore::PermGroup;

/// Orbit counts of the index-2 subgroup of `AGL(1,p)` on `(3,1,…)` and `(2,2,1,…)` partitions,
/// next to the closed forms `(p−2)/3`, `(p−2)(p−3)/4` and `(3p²−11p+10)/12`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HalfAffineCounts {
    pub p: u64,
    pub counts: [u64; 2],
    pub total: u64,
    pub expected: [u64; 2],
    pub expected_total: u64,
    pub pass: bool,
}

/// The subgroup `{x ↦ ax + b : a a nonzero square}` of `AGL(1,p)`.
pub fn half_affine_group(p: u32) -> Result<PermGroup> {
    let f = FiniteField::new(p, 1)?;
    let w = f.primitive_element();
    let gens = vec![
        affine_field_map(&f, 1, 1, 0),
        affine_field_map(&f, f.mul(w, w), 0, 0),
    ];
    Ok(PermGroup::new(format!("ASL(1,{p})"), p as usize, gens))
}

pub fn half_affine_check(p: u32) -> Result<HalfAffineCounts> {
    if !is_prime(p as u64) || p % 12 != 11 || p > 59 {
        return Err(Error::InvalidInput(format!(
            "p must be a prime ≡ 11 (mod 12) up to 59, got {p}"
        )));
    }
    let g = half_affine_group(p)?;
    let n = p as usize;
    let count = |support: &[usize]| -> Result<u64> {
        let s = PartitionShape::from_support(n, support)?;
        Ok(burnside_orbit_count(&g, &s)?.to_u64().unwrap())
    };
    let counts = [count(&[3])?, count(&[2, 2])?];
    let p = p as u64;
    let expected = [(p - 2) / 3, (p - 2) * (p - 3) / 4];
    let expected_total = (3 * p * p - 11 * p + 10) / 12;
    let total = counts[0] + counts[1];
    Ok(HalfAffineCounts {
        p,
        counts,
        total,
        expected,
        expected_total,
        pass: counts == expected && total == expected_total,
    })
}
