use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;

use super::chain::StabilizerChain;
use super::perm::{cycle_lengths_into, CycleType, Permutation};
use crate::error::{Error, Result};

/// Number of elements of each cycle type.
pub type CycleHistogram = BTreeMap<CycleType, u64>;

/// A permutation group given by generators, with a lazily built stabilizer chain.
pub struct PermGroup {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
    histogram: OnceLock<CycleHistogram>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let g = PermGroup::new(self.name.clone(), self.degree, self.generators.clone());
        if let Some(c) = self.chain.get() {
            let _ = g.chain.set(c.clone());
        }
        if let Some(h) = self.histogram.get() {
            let _ = g.histogram.set(h.clone());
        }
        g
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("name", &self.name)
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn new(name: impl Into<String>, degree: usize, generators: Vec<Permutation>) -> Self {
        PermGroup {
            name: name.into(),
            degree,
            generators,
            chain: OnceLock::new(),
            histogram: OnceLock::new(),
        }
    }

    /// Checks generator degrees before constructing.
    pub fn try_new(name: impl Into<String>, degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
        }
        Ok(Self::new(name, degree, generators))
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new("1", degree, Vec::new())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::build(self.degree, &self.generators))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn order_u128(&self) -> u128 {
        self.chain().order_u128()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, p.degree()));
        }
        Ok(self.chain().contains(p))
    }

    /// Membership for a permutation already known to have the right degree.
    pub fn has(&self, p: &Permutation) -> bool {
        self.chain().contains(p)
    }

    pub fn elements(&self) -> Vec<Permutation> {
        self.chain().elements()
    }

    /// Whether every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.has(g))
    }

    /// Equality as sets of permutations.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other) && self.order() == other.order()
    }

    /// Whether conjugation by `g` maps the group into itself.
    pub fn is_normalized_by(&self, g: &Permutation) -> bool {
        let inv = g.inverse();
        self.generators.iter().all(|y| self.has(&inv.mul(y).mul(g)))
    }

    pub fn is_normal_in(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other) && other.generators.iter().all(|x| self.is_normalized_by(x))
    }

    /// Whether the group is transitive on its points.
    pub fn is_transitive(&self) -> bool {
        if self.degree <= 1 {
            return true;
        }
        let chain = self.chain();
        match chain.base().first() {
            Some(_) => chain.transversal_lengths()[0] == self.degree,
            None => false,
        }
    }

    /// Cycle-type histogram over all elements, computed once and cached.
    pub fn cycle_type_histogram(&self) -> &CycleHistogram {
        self.histogram.get_or_init(|| self.compute_histogram(1))
    }

    /// Cycle-type histogram computed with `threads` workers splitting the top transversal.
    pub fn cycle_type_histogram_threaded(&self, threads: usize) -> &CycleHistogram {
        self.histogram.get_or_init(|| self.compute_histogram(threads))
    }

    fn compute_histogram(&self, threads: usize) -> CycleHistogram {
        if let Some(h) = self.class_histogram() {
            return h;
        }
        let chain = self.chain();
        let top = chain.top_transversal_len();
        let threads = threads.clamp(1, top.max(1));
        let weights = packed_weights(self.degree);
        let sweep = |range: std::ops::Range<usize>| match &weights {
            Some(w) => self.sweep_packed(range, w),
            None => self.sweep_general(range),
        };
        let parts: Vec<HashMap<CycleType, u64>> = if threads == 1 {
            vec![sweep(0..top)]
        } else {
            let chunk = top.div_ceil(threads);
            std::thread::scope(|s| {
                let handles: Vec<_> = (0..threads)
                    .map(|t| {
                        let range = t * chunk..((t + 1) * chunk).min(top);
                        let sweep = &sweep;
                        s.spawn(move || sweep(range))
                    })
                    .collect();
                handles.into_iter().map(|h| h.join().unwrap()).collect()
            })
        };
        let mut merged = CycleHistogram::new();
        for part in parts {
            for (k, v) in part {
                *merged.entry(k).or_insert(0) += v;
            }
        }
        merged
    }

    /// For `S_n` and `A_n` the histogram is the list of class sizes `n!/z_λ`.
    fn class_histogram(&self) -> Option<CycleHistogram> {
        let n = self.degree;
        if !(2..=20).contains(&n) {
            return None;
        }
        let fact = |k: usize| (1..=k as u64).product::<u64>();
        let full = fact(n);
        let order = self.order_u128();
        let even_only = if order == full as u128 {
            false
        } else if order * 2 == full as u128 {
            true
        } else {
            return None;
        };
        let mut h = CycleHistogram::new();
        for t in CycleType::all(n) {
            let even = t.parts().iter().filter(|&&l| l % 2 == 0).count() % 2 == 0;
            if even_only && !even {
                continue;
            }
            let z: u64 = t
                .counts()
                .iter()
                .enumerate()
                .skip(1)
                .map(|(l, &c)| (l as u64).pow(c as u32) * fact(c))
                .product();
            h.insert(t, full / z);
        }
        Some(h)
    }

    fn sweep_general(&self, range: std::ops::Range<usize>) -> HashMap<CycleType, u64> {
        let mut local: HashMap<CycleType, u64> = HashMap::new();
        let mut seen = vec![false; self.degree];
        let mut buf: Vec<u16> = Vec::with_capacity(self.degree);
        self.chain().for_each_element_in(range, |imgs| {
            cycle_lengths_into(imgs, &mut seen, &mut buf);
            match local.get_mut(buf.as_slice()) {
                Some(c) => *c += 1,
                None => {
                    local.insert(CycleType::from_parts(buf.clone()), 1);
                }
            }
        });
        local
    }

    /// Sweep for degree ≤ 64: points tracked in a bit mask, cycle types keyed by a
    /// mixed-radix packing of the cycle counts.
    fn sweep_packed(&self, range: std::ops::Range<usize>, weights: &[u64]) -> HashMap<CycleType, u64> {
        let n = self.degree;
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut by_key: HashMap<u64, u64, BuildMix> = HashMap::default();
        self.chain().for_each_element_in(range, |imgs| {
            let mut left = full;
            let mut key = 0u64;
            while left != 0 {
                let start = left.trailing_zeros() as usize;
                let mut x = start;
                let mut len = 0usize;
                loop {
                    left &= !(1u64 << x);
                    len += 1;
                    x = imgs[x] as usize;
                    if x == start {
                        break;
                    }
                }
                key += weights[len];
            }
            *by_key.entry(key).or_insert(0) += 1;
        });
        by_key
            .into_iter()
            .map(|(key, count)| (unpack_cycle_type(key, weights, n), count))
            .collect()
    }
}

/// `weights[l]` is the place value of the count of `l`-cycles, or `None` if the packing
/// overflows 64 bits.
fn packed_weights(n: usize) -> Option<Vec<u64>> {
    if n == 0 || n > 64 {
        return None;
    }
    let mut w = vec![0u64; n + 1];
    let mut place = 1u64;
    for (l, slot) in w.iter_mut().enumerate().skip(1) {
        *slot = place;
        place = place.checked_mul((n / l + 1) as u64)?;
    }
    Some(w)
}

fn unpack_cycle_type(mut key: u64, weights: &[u64], n: usize) -> CycleType {
    let mut parts = Vec::new();
    for l in (1..=n).rev() {
        let c = key / weights[l];
        key %= weights[l];
        parts.extend(std::iter::repeat_n(l as u16, c as usize));
    }
    CycleType::from_parts(parts)
}

/// Multiplicative hashing for `u64` keys.
#[derive(Clone, Copy, Default)]
struct BuildMix;

struct Mix(u64);

impl std::hash::BuildHasher for BuildMix {
    type Hasher = Mix;
    fn build_hasher(&self) -> Mix {
        Mix(0)
    }
}

impl std::hash::Hasher for Mix {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.write_u64(b as u64);
        }
    }
    fn write_u64(&mut self, x: u64) {
        self.0 = (self.0 ^ x).wrapping_mul(0x9e37_79b9_7f4a_7c15).rotate_left(29);
    }
}

/// All products of the generators, by breadth-first closure. Oracle for small groups.
pub fn naive_closure(degree: usize, gens: &[Permutation]) -> HashSet<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermGroup {
        PermGroup::new(
            "S3",
            3,
            vec![
                Permutation::parse_cycles(3, "(1,2)").unwrap(),
                Permutation::parse_cycles(3, "(1,2,3)").unwrap(),
            ],
        )
    }

    #[test]
    fn histogram_of_s3() {
        let h = s3().cycle_type_histogram().clone();
        let want: Vec<(Vec<u16>, u64)> = vec![(vec![1, 1, 1], 1), (vec![2, 1], 3), (vec![3], 2)];
        let got: Vec<(Vec<u16>, u64)> = h.iter().map(|(k, v)| (k.parts().to_vec(), *v)).collect();
        let mut want = want;
        want.sort();
        let mut got = got;
        got.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn histogram_of_c5() {
        let g = PermGroup::new(
            "C5",
            5,
            vec![Permutation::parse_cycles(5, "(1,2,3,4,5)").unwrap()],
        );
        let h = g.cycle_type_histogram();
        assert_eq!(h.len(), 2);
        assert_eq!(h[&CycleType::from_parts(vec![5])], 4);
        assert_eq!(h[&CycleType::from_parts(vec![1; 5])], 1);
    }

    #[test]
    fn threaded_histogram_matches() {
        let n = 7;
        let gens = vec![
            Permutation::parse_cycles(n, "(1,2)").unwrap(),
            Permutation::parse_cycles(n, "(1,2,3,4,5,6,7)").unwrap(),
        ];
        let a = PermGroup::new("S7", n, gens.clone());
        let b = PermGroup::new("S7", n, gens);
        assert_eq!(a.cycle_type_histogram(), b.cycle_type_histogram_threaded(3));
        assert_eq!(a.cycle_type_histogram().values().sum::<u64>(), 5040);
    }

    #[test]
    fn packed_and_general_sweeps_agree() {
        let g = PermGroup::new(
            "G",
            9,
            vec![
                Permutation::parse_cycles(9, "(1,2,3)(4,5)").unwrap(),
                Permutation::parse_cycles(9, "(1,4,7)(2,5,8)(3,6,9)").unwrap(),
            ],
        );
        let top = g.chain().top_transversal_len();
        let a: CycleHistogram = g.sweep_general(0..top).into_iter().collect();
        let b: CycleHistogram = g
            .sweep_packed(0..top, &packed_weights(9).unwrap())
            .into_iter()
            .collect();
        assert_eq!(a, b);
        assert!(packed_weights(33).is_some());
        assert!(packed_weights(65).is_none());
    }

    #[test]
    fn class_sizes_match_the_sweep() {
        let cycle = |n: usize| Permutation::from_images(&(2..=n).chain([1]).collect::<Vec<_>>()).unwrap();
        for n in [5, 6, 7] {
            let sym = PermGroup::new(
                "S",
                n,
                vec![Permutation::parse_cycles(n, "(1,2)").unwrap(), cycle(n)],
            );
            let three = |a: usize| Permutation::parse_cycles(n, &format!("(1,2,{a})")).unwrap();
            let alt = PermGroup::new("A", n, (3..=n).map(three).collect());
            for g in [sym, alt] {
                let top = g.chain().top_transversal_len();
                let swept: CycleHistogram = g.sweep_general(0..top).into_iter().collect();
                assert_eq!(g.class_histogram().unwrap(), swept);
            }
        }
        assert!(s3().class_histogram().is_some());
        let c5 = PermGroup::new("C5", 5, vec![cycle(5)]);
        assert!(c5.class_histogram().is_none());
    }

    #[test]
    fn contains_checks_degree() {
        assert!(s3().contains(&Permutation::identity(4)).is_err());
        assert!(s3().contains(&Permutation::identity(3)).unwrap());
    }

    #[test]
    fn naive_closure_agrees_with_chain() {
        let g = s3();
        let set = naive_closure(3, g.generators());
        let els: HashSet<_> = g.elements().into_iter().collect();
        assert_eq!(set, els);
    }
}
