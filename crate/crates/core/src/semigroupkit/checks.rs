use std::collections::HashMap;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::semigroup::{Codec, SemigroupSet};
use super::transform::{full_monoid_size, TransformationMap, MAX_T_DEGREE};
use crate::error::{Error, Result};
use crate::partorbits::{enumerate_orbits, is_k_homogeneous, PartitionShape, DEFAULT_CAP};
use crate::permcore::{on_sets, orbit, PermGroup, Permutation};

/// Largest degree for the checks that scan or close inside `Tₙ`.
pub const MAX_VERIFY_DEGREE: usize = 7;
/// Largest degree for the principal-ideal checks.
pub const MAX_GREENS_DEGREE: usize = 7;
/// Degrees up to this bound compare principal ideals for every element.
pub const EXHAUSTIVE_GREENS_DEGREE: usize = 5;

/// A check that ran, or the reason it was not run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Checked(T),
    HypothesisFailed(String),
}

impl<T> Outcome<T> {
    pub fn checked(self) -> Option<T> {
        match self {
            Outcome::Checked(t) => Some(t),
            Outcome::HypothesisFailed(_) => None,
        }
    }
}

/// Hypotheses on a pair `(G, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    /// `G` has one orbit on partitions of the kernel type of `t`.
    pub one_orbit: bool,
    /// `G` is `rank(t)`-homogeneous.
    pub homogeneous: bool,
    /// `2·rank(t) ≥ n`.
    pub rank_bound: bool,
}

fn singular(t: &TransformationMap) -> Result<()> {
    if t.is_permutation() {
        return Err(Error::InvalidInput(format!("{t} is a permutation")));
    }
    Ok(())
}

fn check_degree(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::Unsupported(format!("degree {n} exceeds {limit}")));
    }
    Ok(())
}

pub fn hypotheses(g: &PermGroup, t: &TransformationMap) -> Result<Hypotheses> {
    if g.degree() != t.degree() {
        return Err(Error::DegreeMismatch(g.degree(), t.degree()));
    }
    singular(t)?;
    let shape = t.kernel_type();
    let orbits = enumerate_orbits(g, &shape, DEFAULT_CAP)?.count;
    Ok(Hypotheses {
        one_orbit: orbits == BigUint::from(1u32),
        homogeneous: is_k_homogeneous(g, t.rank())?,
        rank_bound: 2 * t.rank() >= t.degree(),
    })
}

fn group_maps(g: &PermGroup) -> Vec<TransformationMap> {
    g.generators()
        .iter()
        .map(|p| TransformationMap::from_permutation(p).expect("degree checked"))
        .collect()
}

fn sym_maps(n: usize) -> Vec<TransformationMap> {
    let mut out = Vec::new();
    if n > 1 {
        let mut swap: Vec<u8> = (0..n as u8).collect();
        swap.swap(0, 1);
        out.push(TransformationMap::from_images0(&swap).unwrap());
        let cycle: Vec<u8> = (0..n as u8).map(|i| (i + 1) % n as u8).collect();
        out.push(TransformationMap::from_images0(&cycle).unwrap());
    }
    out
}

/// `⟨t, G⟩` as a set; its non-bijective part is `⟨t, G⟩ ∖ G`.
pub fn with_group(t: &TransformationMap, g: &PermGroup, cap: usize) -> Result<SemigroupSet> {
    let mut gens = group_maps(g);
    gens.push(*t);
    SemigroupSet::generate(&gens, cap)
}

/// `⟨t, Sₙ⟩` as a set.
pub fn with_symmetric(t: &TransformationMap, cap: usize) -> Result<SemigroupSet> {
    let mut gens = sym_maps(t.degree());
    gens.push(*t);
    SemigroupSet::generate(&gens, cap)
}

/// Closes `first` together with `extra`, adding only the members of `extra` not yet
/// generated, in the given order.
pub fn greedy_closure(
    first: &[TransformationMap],
    extra: &[TransformationMap],
    cap: usize,
) -> Result<SemigroupSet> {
    let mut s = SemigroupSet::generate(first, cap)?;
    for e in extra {
        if !s.contains(e) {
            s.add_generator(e)?;
        }
    }
    Ok(s)
}

/// The three sets compared by the sandwich check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sandwich {
    /// `|⟨t,G⟩ ∖ G|`.
    pub group_part: usize,
    /// `|⟨t,Sₙ⟩ ∖ Sₙ|`.
    pub symmetric_part: usize,
    /// `|⟨E,t⟩|` with `E` the idempotents of `⟨t,G⟩ ∖ G`.
    pub idempotent_generated: usize,
    pub idempotents: usize,
    pub equal: bool,
}

/// Compares `⟨t,G⟩∖G`, `⟨t,Sₙ⟩∖Sₙ` and `⟨E,t⟩` as element sets.
pub fn sandwich_sets(g: &PermGroup, t: &TransformationMap, cap: usize) -> Result<Sandwich> {
    check_degree(t.degree(), MAX_VERIFY_DEGREE)?;
    singular(t)?;
    let a = with_group(t, g, cap)?.singular_codes();
    let b = with_symmetric(t, cap)?.singular_codes();
    let mut e: Vec<TransformationMap> = a
        .iter()
        .map(|&c| TransformationMap::unpack(t.degree(), c))
        .filter(TransformationMap::is_idempotent)
        .collect();
    e.sort_by_key(|x| std::cmp::Reverse(x.rank()));
    let c_set = greedy_closure(&[*t], &e, cap)?;
    let mut c: Vec<u32> = c_set.iter().map(|x| x.pack()).collect();
    c.sort_unstable();
    Ok(Sandwich {
        group_part: a.len(),
        symmetric_part: b.len(),
        idempotent_generated: c.len(),
        idempotents: e.len(),
        equal: a == b && b == c,
    })
}

/// The sandwich equality, run only when `rank(t) ≥ n/2` and `G` has one orbit on the
/// kernel type of `t`.
pub fn sandwich_check(g: &PermGroup, t: &TransformationMap, cap: usize) -> Result<Outcome<Sandwich>> {
    check_degree(t.degree(), MAX_VERIFY_DEGREE)?;
    let h = hypotheses(g, t)?;
    if !h.rank_bound {
        return Ok(Outcome::HypothesisFailed(format!(
            "rank {} is below n/2",
            t.rank()
        )));
    }
    if !h.one_orbit {
        return Ok(Outcome::HypothesisFailed(format!(
            "{} has several orbits on kernel type {}",
            g.name(),
            t.kernel_type()
        )));
    }
    sandwich_sets(g, t, cap).map(Outcome::Checked)
}

/// Whether the parts of `fine` can be grouped so that the group sums are the parts of `coarse`.
fn coarsens(fine: &[usize], coarse: &[usize]) -> bool {
    fn place(fine: &[usize], bins: &mut [usize]) -> bool {
        let Some((&x, rest)) = fine.split_first() else {
            return bins.iter().all(|&b| b == 0);
        };
        for i in 0..bins.len() {
            if bins[i] >= x && !bins[..i].contains(&bins[i]) {
                bins[i] -= x;
                let ok = place(rest, bins);
                bins[i] += x;
                if ok {
                    return true;
                }
            }
        }
        false
    }
    let mut bins = coarse.to_vec();
    place(fine, &mut bins)
}

/// Compares `⟨t,Sₙ⟩∖Sₙ` with `{b ∈ Tₙ : ker(t)g ⊆ ker(b) for some g ∈ Sₙ}`, scanning `Tₙ`.
pub fn characterization_check(t: &TransformationMap, cap: usize) -> Result<bool> {
    let n = t.degree();
    check_degree(n, MAX_VERIFY_DEGREE)?;
    singular(t)?;
    let s = with_symmetric(t, cap)?;
    let fine = t.kernel_type().parts().to_vec();
    let mut verdict: HashMap<Vec<usize>, bool> = HashMap::new();
    let mut all_match = true;
    for c in 0..full_monoid_size(n) as u32 {
        let b = TransformationMap::unpack(n, c);
        let ty = b.kernel_type().parts().to_vec();
        let rhs = *verdict.entry(ty).or_insert_with_key(|ty| coarsens(&fine, ty));
        let lhs = s.contains(&b) && !b.is_permutation();
        if lhs != rhs {
            all_match = false;
            break;
        }
    }
    Ok(all_match)
}

/// Outcome of the principal-ideal and H-class checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GreensReport {
    pub exhaustive: bool,
    /// Elements whose principal ideals were computed.
    pub elements: usize,
    /// `aS = bS ⟺ ker a = ker b`.
    pub right: bool,
    /// `Sa = Sb ⟺ image a = image b`.
    pub left: bool,
    /// `SaS = SbS ⟺ rank a = rank b`.
    pub two_sided: bool,
    /// Every idempotent of rank `r` has an H-class of size `r!` closed under products.
    pub h_classes: bool,
}

impl GreensReport {
    pub fn holds(&self) -> bool {
        self.right && self.left && self.two_sided && self.h_classes
    }
}

/// Principal ideals of the singular part of a semigroup with a known generating set, by
/// search over words: a word lies in the singular part iff it uses a singular generator.
struct IdealSearch {
    codec: Codec,
    gens: Vec<([u8; MAX_T_DEGREE], bool)>,
    seen: Vec<u8>,
}

impl IdealSearch {
    fn new(m: &SemigroupSet) -> Self {
        let n = m.degree();
        let codec = Codec::new(n);
        let gens = m
            .generators()
            .iter()
            .map(|g| (codec.decode(g.pack()), !g.is_permutation()))
            .collect();
        IdealSearch {
            codec,
            gens,
            seen: vec![0; full_monoid_size(n)],
        }
    }

    /// Sorted codes of `Sa`, `aS` or `SaS` for `left`/`right` flags.
    fn ideal(&mut self, a: u32, left: bool, right: bool) -> Vec<u32> {
        let want = u8::from(left) | u8::from(right) << 1;
        let mut touched = vec![a];
        let mut stack = vec![(a, 0u8)];
        self.seen[a as usize] = 1 << 0;
        let mut out = Vec::new();
        while let Some((x, flags)) = stack.pop() {
            if flags == want {
                out.push(x);
            }
            let xd = self.codec.decode(x);
            for (gd, sing) in &self.gens {
                let mut moves = [(0u32, 0u8); 2];
                let mut k = 0;
                if left {
                    moves[k] = (self.codec.mul(gd, &xd), flags | u8::from(*sing));
                    k += 1;
                }
                if right {
                    moves[k] = (self.codec.mul(&xd, gd), flags | u8::from(*sing) << 1);
                    k += 1;
                }
                for &(y, f) in &moves[..k] {
                    let bit = 1u8 << f;
                    let slot = &mut self.seen[y as usize];
                    if *slot & bit == 0 {
                        if *slot == 0 {
                            touched.push(y);
                        }
                        *slot |= bit;
                        stack.push((y, f));
                    }
                }
            }
        }
        for y in touched {
            self.seen[y as usize] = 0;
        }
        out.sort_unstable();
        out
    }
}

/// Whether `key` and the ideal classes induce the same partition of `elements`.
fn same_relation<K: std::hash::Hash + Eq + Clone>(
    elements: &[u32],
    mut ideal: impl FnMut(u32) -> Vec<u32>,
    key: impl Fn(u32) -> K,
) -> bool {
    let mut ideal_ids: HashMap<Vec<u32>, usize> = HashMap::new();
    let mut id_to_key: HashMap<usize, K> = HashMap::new();
    let mut key_to_id: HashMap<K, usize> = HashMap::new();
    for &a in elements {
        let next = ideal_ids.len();
        let id = *ideal_ids.entry(ideal(a)).or_insert(next);
        let k = key(a);
        if *id_to_key.entry(id).or_insert_with(|| k.clone()) != k {
            return false;
        }
        if *key_to_id.entry(k).or_insert(id) != id {
            return false;
        }
    }
    true
}

/// Checks the principal-ideal characterizations of Green's relations and the H-classes of
/// idempotents on the singular part `S` of `m`, where `m` is generated by permutations and
/// singular maps. Exhaustive for `n ≤ 5`; above that on a seeded sample of elements together
/// with partners sharing their kernel, image or rank.
pub fn greens_check(m: &SemigroupSet, seed: u64) -> Result<GreensReport> {
    let n = m.degree();
    check_degree(n, MAX_GREENS_DEGREE)?;
    let s = m.singular_codes();
    if s.is_empty() {
        return Err(Error::InvalidInput("no singular elements".into()));
    }
    let exhaustive = n <= EXHAUSTIVE_GREENS_DEGREE;
    let sample: Vec<u32> = if exhaustive {
        s.clone()
    } else {
        let codec = Codec::new(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<u8> = (0..n as u8).collect();
        let mut random_perm = |rng: &mut ChaCha8Rng| {
            perm.shuffle(rng);
            let mut d = [0u8; MAX_T_DEGREE];
            d[..n].copy_from_slice(&perm);
            d
        };
        let mut out = Vec::new();
        for _ in 0..24 {
            let a = s[rng.gen_range(0..s.len())];
            let ad = codec.decode(a);
            let (p, q) = (random_perm(&mut rng), random_perm(&mut rng));
            let same_kernel = codec.mul(&ad, &p);
            let same_image = codec.mul(&p, &ad);
            let same_rank = codec.mul(&codec.decode(same_image), &q);
            out.extend([a, same_kernel, same_image, same_rank]);
        }
        out.sort_unstable();
        out.dedup();
        out
    };
    let mut search = IdealSearch::new(m);
    let kernel = |c: u32| TransformationMap::unpack(n, c).kernel_key();
    let rank = |c: u32| TransformationMap::unpack(n, c).rank();
    let right = same_relation(&sample, |a| search.ideal(a, false, true), kernel);
    let image = |c: u32| TransformationMap::unpack(n, c).image();
    let left = same_relation(&sample, |a| search.ideal(a, true, false), image);
    let two_sided = same_relation(&sample, |a| search.ideal(a, true, true), rank);

    let mut classes: HashMap<([u8; MAX_T_DEGREE], Vec<u8>), Vec<TransformationMap>> = HashMap::new();
    for &c in &s {
        let x = TransformationMap::unpack(n, c);
        classes.entry((x.kernel_key(), x.image())).or_default().push(x);
    }
    let h_classes = s.iter().all(|&c| {
        let e = TransformationMap::unpack(n, c);
        if !e.is_idempotent() {
            return true;
        }
        let h = &classes[&(e.kernel_key(), e.image())];
        let factorial: usize = (1..=e.rank()).product();
        h.len() == factorial
            && h.iter().all(|x| {
                h.iter()
                    .all(|y| h.binary_search_by_key(&x.mul(y).pack(), |z| z.pack()).is_ok())
            })
    });
    Ok(GreensReport {
        exhaustive,
        elements: sample.len(),
        right,
        left,
        two_sided,
        h_classes,
    })
}

/// Compares the idempotents of `⟨t,G⟩∖G` with those of `⟨g⁻¹tg : g ∈ G⟩`.
pub fn idempotent_match(g: &PermGroup, t: &TransformationMap, cap: usize) -> Result<bool> {
    check_degree(t.degree(), MAX_VERIFY_DEGREE)?;
    singular(t)?;
    let a = with_group(t, g, cap)?;
    let mut conjugates: Vec<TransformationMap> = g.elements().iter().map(|x| t.conjugate_by(x)).collect();
    conjugates.sort_unstable_by_key(TransformationMap::pack);
    conjugates.dedup();
    let d = greedy_closure(&conjugates[..1], &conjugates[1..], cap)?;
    let ea: Vec<TransformationMap> = a
        .idempotents()
        .into_iter()
        .filter(|e| !e.is_permutation())
        .collect();
    Ok(ea == d.idempotents())
}

/// A pair `g, h` with `ker(g⁻¹th) = Q` and `image(g⁻¹th) = Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelWitness {
    pub g: Permutation,
    pub h: Permutation,
    pub product: TransformationMap,
}

/// Finds `g, h ∈ G` with `ker(g⁻¹th) = Q` and `image(g⁻¹th) = Y` from orbit transversals.
/// `classes` and `target` are one-based.
pub fn kernel_witness(
    g: &PermGroup,
    t: &TransformationMap,
    classes: &[Vec<usize>],
    target: &[usize],
) -> Result<Outcome<KernelWitness>> {
    let n = t.degree();
    let h = hypotheses(g, t)?;
    let mut q_images = vec![usize::MAX; n];
    for class in classes {
        for &p in class {
            if p == 0 || p > n || q_images[p - 1] != usize::MAX {
                return Err(Error::InvalidInput("Q must partition 1..=n".into()));
            }
            q_images[p - 1] = class[0];
        }
    }
    if q_images.contains(&usize::MAX) {
        return Err(Error::InvalidInput("Q must partition 1..=n".into()));
    }
    let q = TransformationMap::from_images(&q_images)?;
    let mut y: Vec<u16> = target.iter().map(|&p| p as u16 - 1).collect();
    y.sort_unstable();
    y.dedup();
    if target.iter().any(|&p| p == 0 || p > n) || y.len() != target.len() {
        return Err(Error::InvalidInput("Y must be a set of points in 1..=n".into()));
    }
    if q.kernel_type() != t.kernel_type() {
        return Ok(Outcome::HypothesisFailed(
            "Q does not have the kernel type of t".into(),
        ));
    }
    if y.len() != t.rank() {
        return Ok(Outcome::HypothesisFailed("|Y| differs from rank(t)".into()));
    }
    if !h.one_orbit || !h.homogeneous {
        return Ok(Outcome::HypothesisFailed(format!(
            "{} fails the orbit hypotheses (one orbit: {}, {}-homogeneous: {})",
            g.name(),
            h.one_orbit,
            t.rank(),
            h.homogeneous
        )));
    }
    let gens = g.generators();
    // ker(g⁻¹t) = ker(t)g
    let kernels = orbit(t.kernel_partial(), gens, |x, p| x.act(p), usize::MAX)?;
    let i = kernels
        .position(&q.kernel_partial())
        .ok_or_else(|| Error::Integrity("kernel orbit misses Q".into()))?;
    let gk = kernels.transversal_element(i, gens);
    let image: Vec<u16> = t.image().into_iter().map(u16::from).collect();
    let images = orbit(image, gens, on_sets, usize::MAX)?;
    let j = images
        .position(&y)
        .ok_or_else(|| Error::Integrity("image orbit misses Y".into()))?;
    let hk = images.transversal_element(j, gens);
    let product = TransformationMap::from_permutation(&gk.inverse())?
        .mul(t)
        .mul(&TransformationMap::from_permutation(&hk)?);
    if product.kernel_key() != q.kernel_key()
        || product.image() != y.iter().map(|&p| p as u8).collect::<Vec<_>>()
    {
        return Err(Error::Integrity("kernel witness failed verification".into()));
    }
    Ok(Outcome::Checked(KernelWitness {
        g: gk,
        h: hk,
        product,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportHypotheses {
    pub one_orbit: bool,
    pub homogeneous: bool,
}

/// `None` marks a check whose hypotheses failed or that is out of range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Checks {
    pub sandwich: Option<bool>,
    pub characterization: Option<bool>,
    pub greens: Option<bool>,
    pub idempotent_match: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sizes {
    /// `|⟨t,G⟩ ∖ G|`.
    pub semigroup: usize,
    /// Idempotents of `⟨t,G⟩ ∖ G`.
    pub idempotents: usize,
}

/// All semigroup checks for one pair `(G, t)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub group: String,
    pub degree: usize,
    pub kernel_type: String,
    pub hypotheses: ReportHypotheses,
    pub checks: Checks,
    pub sizes: Sizes,
}

impl VerificationReport {
    /// False when any check that ran failed.
    pub fn passed(&self) -> bool {
        let c = &self.checks;
        [c.sandwich, c.characterization, c.greens, c.idempotent_match]
            .iter()
            .all(|x| x.unwrap_or(true))
    }

    /// Whether the hypotheses held, so that the sandwich check ran.
    pub fn applicable(&self) -> bool {
        self.checks.sandwich.is_some()
    }
}

/// Runs every applicable check on `(G, t)`. Checks on `⟨t,Sₙ⟩` need `rank(t) ≥ n/2`; checks
/// involving `G` also need one orbit on the kernel type.
pub fn verify(g: &PermGroup, t: &TransformationMap, seed: u64, cap: usize) -> Result<VerificationReport> {
    let n = t.degree();
    check_degree(n, MAX_VERIFY_DEGREE)?;
    let h = hypotheses(g, t)?;
    let a = with_group(t, g, cap)?;
    let part = a.singular_codes();
    let idempotents = part
        .iter()
        .filter(|&&c| TransformationMap::unpack(n, c).is_idempotent())
        .count();
    let group_ok = h.rank_bound && h.one_orbit;
    let sandwich = if group_ok {
        Some(sandwich_sets(g, t, cap)?.equal)
    } else {
        None
    };
    let idem = if group_ok {
        Some(idempotent_match(g, t, cap)?)
    } else {
        None
    };
    let characterization = if h.rank_bound {
        Some(characterization_check(t, cap)?)
    } else {
        None
    };
    let greens = if h.rank_bound && n <= MAX_GREENS_DEGREE {
        Some(greens_check(&with_symmetric(t, cap)?, seed)?.holds())
    } else {
        None
    };
    Ok(VerificationReport {
        group: g.name().to_string(),
        degree: n,
        kernel_type: t.kernel_type().to_string(),
        hypotheses: ReportHypotheses {
            one_orbit: h.one_orbit,
            homogeneous: h.homogeneous,
        },
        checks: Checks {
            sandwich,
            characterization,
            greens,
            idempotent_match: idem,
        },
        sizes: Sizes {
            semigroup: part.len(),
            idempotents,
        },
    })
}

/// A transformation whose kernel is the canonical partition of `shape` (blocks of consecutive
/// points, largest first), each block sent to its least point.
pub fn canonical_map(shape: &PartitionShape) -> Result<TransformationMap> {
    let n = shape.degree();
    let mut images = Vec::with_capacity(n);
    let mut start = 0;
    for &p in shape.parts() {
        images.extend(std::iter::repeat_n(start as u8, p));
        start += p;
    }
    TransformationMap::from_images0(&images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, GroupSpec};
    use crate::semigroupkit::DEFAULT_SEMIGROUP_CAP as CAP;

    fn tm(v: &[usize]) -> TransformationMap {
        TransformationMap::from_images(v).unwrap()
    }

    fn cyclic(n: usize) -> PermGroup {
        let c: Vec<usize> = (2..=n).chain([1]).collect();
        PermGroup::new(format!("C{n}"), n, vec![Permutation::from_images(&c).unwrap()])
    }

    #[test]
    fn merge_test() {
        assert!(coarsens(&[2, 1, 1], &[2, 2]));
        assert!(coarsens(&[2, 1, 1], &[4]));
        assert!(!coarsens(&[2, 2], &[3, 1]));
        assert!(coarsens(&[3, 2, 2], &[4, 3]));
        assert!(!coarsens(&[3, 3], &[4, 2]));
    }

    #[test]
    fn sandwich_for_s6() {
        let s6 = build(&GroupSpec::sym(6)).unwrap();
        let t = tm(&[1, 1, 3, 3, 5, 6]);
        let r = sandwich_check(&s6, &t, CAP).unwrap().checked().unwrap();
        assert!(r.equal);
        assert_eq!(r.group_part, r.symmetric_part);
    }

    #[test]
    fn sandwich_hypothesis_failure_for_c7() {
        let c7 = cyclic(7);
        let t = tm(&[1, 1, 3, 4, 5, 6, 7]);
        assert!(matches!(
            sandwich_check(&c7, &t, CAP).unwrap(),
            Outcome::HypothesisFailed(_)
        ));
    }

    #[test]
    fn characterization_small() {
        assert!(characterization_check(&tm(&[1, 1, 3, 4]), CAP).unwrap());
        assert!(characterization_check(&tm(&[1, 1, 1, 4, 4]), CAP).unwrap());
        assert!(characterization_check(&tm(&[1, 1, 3, 4, 5, 6]), CAP).unwrap());
    }

    #[test]
    fn greens_small() {
        let m = with_symmetric(&tm(&[1, 1, 3, 4]), CAP).unwrap();
        let r = greens_check(&m, 1).unwrap();
        assert!(r.exhaustive && r.holds(), "{r:?}");
        let m = with_symmetric(&tm(&[1, 1, 1, 4, 5]), CAP).unwrap();
        assert!(greens_check(&m, 1).unwrap().holds());
    }

    #[test]
    fn greens_detects_a_broken_relation() {
        // inside a cyclic group plus one map the kernel classes do not determine the right ideals
        let c4: Vec<TransformationMap> = vec![tm(&[2, 3, 4, 1]), tm(&[1, 1, 3, 4])];
        let m = SemigroupSet::generate(&c4, CAP).unwrap();
        assert!(!greens_check(&m, 1).unwrap().holds());
    }

    #[test]
    fn witnesses() {
        let s6 = build(&GroupSpec::sym(6)).unwrap();
        let t = tm(&[1, 1, 3, 3, 5, 6]);
        let w = kernel_witness(
            &s6,
            &t,
            &[vec![2, 6], vec![1, 4], vec![3], vec![5]],
            &[1, 2, 5, 6],
        )
        .unwrap()
        .checked()
        .unwrap();
        assert_eq!(w.product.image(), vec![0, 1, 4, 5]);
        let c6 = cyclic(6);
        let t = tm(&[1, 1, 3, 4, 5, 6]);
        let r = kernel_witness(
            &c6,
            &t,
            &[vec![1, 3], vec![2], vec![4], vec![5], vec![6]],
            &[1, 2, 3, 4, 5],
        )
        .unwrap();
        assert!(matches!(r, Outcome::HypothesisFailed(_)));
    }

    #[test]
    fn idempotents_agree_for_a5() {
        let a5 = build(&GroupSpec::alt(5)).unwrap();
        assert!(idempotent_match(&a5, &tm(&[1, 1, 3, 4, 5]), CAP).unwrap());
    }

    #[test]
    fn canonical_maps() {
        let s = PartitionShape::new(vec![2, 2, 1]).unwrap();
        assert_eq!(canonical_map(&s).unwrap(), tm(&[1, 1, 3, 3, 5]));
    }

    #[test]
    fn full_report() {
        let s5 = build(&GroupSpec::sym(5)).unwrap();
        let r = verify(&s5, &tm(&[1, 1, 3, 4, 5]), 7, CAP).unwrap();
        assert!(r.passed() && r.applicable());
        assert_eq!(r.sizes.semigroup, 3125 - 120);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["checks"]["greens"], true);
        assert_eq!(json["hypotheses"]["one_orbit"], true);
    }
}
