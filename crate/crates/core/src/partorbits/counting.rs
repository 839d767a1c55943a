use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use super::shape::PartitionShape;
use crate::error::{Error, Result};
use crate::permcore::{CycleHistogram, CycleType, PermGroup};

type Key = (Vec<(u16, u16)>, Vec<u16>);

/// Counts partial partitions fixed by a permutation of a given cycle type.
///
/// The count depends only on which cycles are covered, so intermediate results are memoized
/// on `(multiset of covered cycle lengths, remaining block sizes)` and shared across calls.
#[derive(Default)]
pub struct FixedCounter {
    memo: Mutex<HashMap<Key, u128>>,
}

impl FixedCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of partial partitions with block sizes `support` fixed by any permutation of
    /// cycle type `t`.
    pub fn fixed_count(&self, t: &CycleType, support: &[usize]) -> BigUint {
        let need: usize = support.iter().sum();
        if need > t.degree() {
            return BigUint::zero();
        }
        let mut mu: Vec<u16> = support.iter().map(|&s| s as u16).collect();
        mu.sort_unstable();
        let counts = t.counts();
        let lengths: Vec<(u16, u16)> = (1..counts.len())
            .filter(|&l| counts[l] > 0)
            .map(|l| (l as u16, counts[l] as u16))
            .collect();
        let mut total = BigUint::zero();
        let mut chosen = Vec::with_capacity(lengths.len());
        self.choose_cycles(
            &lengths,
            0,
            need,
            BigUint::from(1u32),
            &mut chosen,
            &mu,
            &mut total,
        );
        total
    }

    #[allow(clippy::too_many_arguments)]
    fn choose_cycles(
        &self,
        lengths: &[(u16, u16)],
        i: usize,
        need: usize,
        mult: BigUint,
        chosen: &mut Vec<(u16, u16)>,
        mu: &[u16],
        total: &mut BigUint,
    ) {
        if need == 0 {
            let w = self.arrangements(chosen, mu);
            if w > 0 {
                *total += mult * BigUint::from(w);
            }
            return;
        }
        if i == lengths.len() {
            return;
        }
        let (l, c) = lengths[i];
        let max_use = (c as usize).min(need / l as usize);
        for u in 0..=max_use {
            if u > 0 {
                chosen.push((l, u as u16));
            }
            let m = &mult * binomial(c as u64, u as u64);
            self.choose_cycles(lengths, i + 1, need - u * l as usize, m, chosen, mu, total);
            if u > 0 {
                chosen.pop();
            }
        }
    }

    /// Ways to split the labelled cycles `cycles` into block orbits realizing exactly `mu`.
    fn arrangements(&self, cycles: &[(u16, u16)], mu: &[u16]) -> u128 {
        if cycles.is_empty() {
            return u128::from(mu.is_empty());
        }
        if mu.is_empty() {
            return 0;
        }
        let key = (cycles.to_vec(), mu.to_vec());
        if let Some(&v) = self.memo.lock().unwrap().get(&key) {
            return v;
        }
        // Fix one cycle of the first length and choose the other cycles sharing its block orbit.
        let (l0, _) = cycles[0];
        let mut rest = cycles.to_vec();
        rest[0].1 -= 1;
        let mut total = 0u128;
        let mut companions = vec![0u16; rest.len()];
        self.companions(&rest, 0, &mut companions, l0, mu, &mut total);
        self.memo.lock().unwrap().insert(key, total);
        total
    }

    fn companions(
        &self,
        rest: &[(u16, u16)],
        i: usize,
        pick: &mut Vec<u16>,
        l0: u16,
        mu: &[u16],
        total: &mut u128,
    ) {
        if i < rest.len() {
            for v in 0..=rest[i].1 {
                pick[i] = v;
                self.companions(rest, i + 1, pick, l0, mu, total);
            }
            pick[i] = 0;
            return;
        }
        let mut group_len = l0 as u32;
        let mut m = 1u32;
        let mut g = l0 as u32;
        let mut mult = 1u128;
        for (j, &(l, c)) in rest.iter().enumerate() {
            let v = pick[j];
            if v > 0 {
                group_len += l as u32 * v as u32;
                m += v as u32;
                g = gcd(g, l as u32);
                mult *= binomial(c as u64, v as u64).to_u128().unwrap();
            }
        }
        let remaining: Vec<(u16, u16)> = rest
            .iter()
            .zip(pick.iter())
            .map(|(&(l, c), &v)| (l, c - v))
            .filter(|&(_, c)| c > 0)
            .collect();
        for d in (1..=g).filter(|d| g.is_multiple_of(*d)) {
            let s = group_len / d;
            if s < 2 {
                continue;
            }
            let Some(mu_left) = remove_copies(mu, s as u16, d as usize) else {
                continue;
            };
            let sub = self.arrangements(&remaining, &mu_left);
            if sub > 0 {
                *total += mult * (d as u128).pow(m - 1) * sub;
            }
        }
    }
}

fn remove_copies(mu: &[u16], s: u16, d: usize) -> Option<Vec<u16>> {
    let have = mu.iter().filter(|&&x| x == s).count();
    if have < d {
        return None;
    }
    let mut out = Vec::with_capacity(mu.len() - d);
    let mut skip = d;
    for &x in mu {
        if x == s && skip > 0 {
            skip -= 1;
        } else {
            out.push(x);
        }
    }
    Some(out)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut r = BigUint::from(1u32);
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Number of partial partitions with block sizes `support` fixed by a permutation of type `t`.
pub fn fixed_count(t: &CycleType, support: &[usize]) -> BigUint {
    FixedCounter::new().fixed_count(t, support)
}

/// Burnside sum over a cycle-type histogram, divided by the group order.
pub fn burnside_from_histogram(
    hist: &CycleHistogram,
    order: &BigUint,
    shape: &PartitionShape,
    counter: &FixedCounter,
) -> Result<BigUint> {
    let support = shape.support();
    let mut sum = BigUint::zero();
    for (t, &count) in hist {
        if t.degree() != shape.degree() {
            return Err(Error::DegreeMismatch(shape.degree(), t.degree()));
        }
        sum += counter.fixed_count(t, &support) * count;
    }
    let (q, r) = (&sum / order, &sum % order);
    if !r.is_zero() {
        return Err(Error::Integrity(format!(
            "Burnside sum {sum} is not divisible by the group order {order}"
        )));
    }
    Ok(q)
}

/// Orbits of `g` on partitions of type `shape`, by the counting lemma.
pub fn burnside_orbit_count(g: &PermGroup, shape: &PartitionShape) -> Result<BigUint> {
    burnside_from_histogram(g.cycle_type_histogram(), &g.order(), shape, &FixedCounter::new())
}

/// Number of `k`-subsets fixed by a permutation of type `t`: the coefficient of `x^k` in
/// `∏ (1 + x^l)` over cycles.
pub fn fixed_subsets(t: &CycleType, k: usize) -> BigUint {
    let mut coeffs = vec![BigUint::zero(); k + 1];
    coeffs[0] = BigUint::from(1u32);
    for &l in t.parts() {
        let l = l as usize;
        for j in (l..=k).rev() {
            let add = coeffs[j - l].clone();
            coeffs[j] += add;
        }
    }
    coeffs.swap_remove(k)
}

/// Orbits of `g` on `k`-subsets by the counting lemma over its cycle-type histogram.
pub fn subset_orbit_count_burnside(g: &PermGroup, k: usize) -> Result<BigUint> {
    let mut sum = BigUint::zero();
    for (t, &count) in g.cycle_type_histogram() {
        sum += fixed_subsets(t, k) * count;
    }
    let order = g.order();
    if !(&sum % &order).is_zero() {
        return Err(Error::Integrity(format!(
            "{}: subset Burnside sum not divisible by the order",
            g.name()
        )));
    }
    Ok(sum / order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partorbits::enumerate_partials;
    use crate::permcore::Permutation;

    fn brute(t: &CycleType, support: &[usize]) -> u64 {
        let g: Permutation = t.representative();
        enumerate_partials(t.degree(), support, u128::MAX)
            .unwrap()
            .into_iter()
            .filter(|p| p.act(&g) == *p)
            .count() as u64
    }

    fn ct(parts: &[u16]) -> CycleType {
        CycleType::from_parts(parts.to_vec())
    }

    #[test]
    fn spot_values() {
        assert_eq!(fixed_count(&ct(&[5]), &[2, 2]), BigUint::zero());
        assert_eq!(
            fixed_count(&ct(&[2, 2]), &[2, 2]),
            BigUint::from(brute(&ct(&[2, 2]), &[2, 2]))
        );
        assert_eq!(fixed_count(&ct(&[2, 2]), &[2, 2]), BigUint::from(3u32));
        assert_eq!(
            fixed_count(&ct(&[3, 3]), &[3, 3]),
            BigUint::from(brute(&ct(&[3, 3]), &[3, 3]))
        );
        let id = ct(&[1; 9]);
        let shape = PartitionShape::from_support(9, &[3, 2]).unwrap();
        assert_eq!(fixed_count(&id, &[3, 2]), shape.total_count());
    }

    #[test]
    fn agrees_with_brute_force_up_to_degree_eight() {
        let counter = FixedCounter::new();
        for n in 2..=8 {
            for t in CycleType::all(n) {
                for support in [
                    &[2][..],
                    &[3],
                    &[2, 2],
                    &[3, 2],
                    &[4],
                    &[2, 2, 2],
                    &[4, 2],
                    &[3, 3],
                ] {
                    if support.iter().sum::<usize>() > n {
                        continue;
                    }
                    assert_eq!(
                        counter.fixed_count(&t, support),
                        BigUint::from(brute(&t, support)),
                        "{t} {support:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn fixed_subsets_by_brute_force() {
        for t in CycleType::all(7) {
            let g = t.representative();
            for k in 0..=7 {
                let mut count = 0u32;
                for mask in 0u32..1 << 7 {
                    if mask.count_ones() as usize != k {
                        continue;
                    }
                    let img: u32 = (0..7)
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| 1 << g.apply0(i))
                        .sum();
                    count += u32::from(img == mask);
                }
                assert_eq!(fixed_subsets(&t, k), BigUint::from(count), "{t} k={k}");
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
        assert_eq!(binomial(3, 5), BigUint::zero());
        assert_eq!(binomial(290, 0), BigUint::from(1u32));
    }
}
