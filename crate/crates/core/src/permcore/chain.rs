//! Stabilizer chains (bases and strong generating sets).
//!
//! Construction runs a randomized Schreier–Sims phase, then a deterministic
//! pass that sifts every Schreier generator at every level, bottom up. The
//! random phase only saves work: the resulting chain is exact regardless of
//! the random stream.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::perm::Permutation;

const NONE: u32 = u32::MAX;

/// Consecutive successful random sifts before the random phase stops.
const RANDOM_QUIT_AFTER: usize = 24;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub(crate) base_point: usize,
    pub(crate) generators: Vec<Permutation>,
    /// Orbit of the base point under `generators`, in discovery order.
    pub(crate) orbit: Vec<u16>,
    /// `pos[x]` is the index of point `x` in `orbit`, or `NONE`.
    pos: Vec<u32>,
    /// `reps[k]` maps the base point to `orbit[k]`.
    pub(crate) reps: Vec<Permutation>,
    inv_reps: Vec<Permutation>,
}

impl Level {
    fn new(degree: usize, base_point: usize, generators: Vec<Permutation>) -> Self {
        let mut level = Level {
            base_point,
            generators,
            orbit: Vec::new(),
            pos: vec![NONE; degree],
            reps: Vec::new(),
            inv_reps: Vec::new(),
        };
        level.rebuild(degree);
        level
    }

    fn rebuild(&mut self, degree: usize) {
        self.orbit.clear();
        self.reps.clear();
        self.inv_reps.clear();
        self.pos.iter_mut().for_each(|p| *p = NONE);
        let id = Permutation::identity(degree);
        self.pos[self.base_point] = 0;
        self.orbit.push(self.base_point as u16);
        self.reps.push(id.clone());
        self.inv_reps.push(id);
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head] as usize;
            for s in &self.generators {
                let y = s.apply0(x);
                if self.pos[y] == NONE {
                    let rep = self.reps[head].mul(s);
                    self.pos[y] = self.orbit.len() as u32;
                    self.orbit.push(y as u16);
                    self.inv_reps.push(rep.inverse());
                    self.reps.push(rep);
                }
            }
            head += 1;
        }
    }

    #[inline]
    pub(crate) fn index_of(&self, point: usize) -> Option<usize> {
        match self.pos[point] {
            NONE => None,
            k => Some(k as usize),
        }
    }
}

/// A base and strong generating set with explicit coset representatives.
#[derive(Clone, Debug)]
pub struct StabilizerChain {
    degree: usize,
    pub(crate) levels: Vec<Level>,
}

impl StabilizerChain {
    /// Builds a chain for `⟨generators⟩` on `degree` points.
    pub fn build(degree: usize, generators: &[Permutation]) -> Self {
        Self::build_with(degree, generators, &[], 0x5eed)
    }

    /// Builds a chain whose base starts with `base_prefix` (zero-based points),
    /// using `seed` for the random phase.
    pub fn build_with(degree: usize, generators: &[Permutation], base_prefix: &[usize], seed: u64) -> Self {
        let gens: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
        }
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for &b in base_prefix {
            let level_gens = if chain.levels.is_empty() {
                gens.clone()
            } else {
                Vec::new()
            };
            chain.levels.push(Level::new(degree, b, level_gens));
        }
        if gens.is_empty() {
            return chain;
        }
        if chain.levels.is_empty() {
            let b = first_moved(&gens).expect("non-identity generator");
            chain.levels.push(Level::new(degree, b, gens.clone()));
        }
        chain.random_phase(&gens, seed);
        chain.verify_phase();
        chain
    }

    fn random_phase(&mut self, gens: &[Permutation], seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut pool = ProductReplacement::new(gens, &mut rng);
        let mut streak = 0;
        let mut rounds = 0;
        while streak < RANDOM_QUIT_AFTER && rounds < 10_000 {
            rounds += 1;
            let g = pool.next(&mut rng);
            let (residue, depth) = self.sift(&g);
            if residue.is_identity() {
                streak += 1;
            } else {
                streak = 0;
                self.add_strong_generator(residue, depth);
            }
        }
    }

    fn verify_phase(&mut self) {
        'restart: loop {
            for i in (0..self.levels.len()).rev() {
                let level = &self.levels[i];
                let mut found: Option<(Permutation, usize)> = None;
                'scan: for k in 0..level.orbit.len() {
                    for s in &level.generators {
                        let img = s.apply0(level.orbit[k] as usize);
                        let j = level.index_of(img).expect("orbit closed");
                        let schreier = level.reps[k].mul(s).mul(&level.inv_reps[j]);
                        if schreier.is_identity() {
                            continue;
                        }
                        let (residue, depth) = self.sift_from(&schreier, i + 1);
                        if !residue.is_identity() {
                            found = Some((residue, depth));
                            break 'scan;
                        }
                    }
                }
                if let Some((residue, depth)) = found {
                    self.add_strong_generator_from(residue, i + 1, depth);
                    continue 'restart;
                }
            }
            break;
        }
    }

    fn add_strong_generator(&mut self, h: Permutation, depth: usize) {
        self.add_strong_generator_from(h, 0, depth)
    }

    /// Adds `h` (which fixes the first `depth` base points) to levels `from..=depth`.
    fn add_strong_generator_from(&mut self, h: Permutation, from: usize, depth: usize) {
        if depth == self.levels.len() {
            let b = h.moved_points0().next().expect("non-identity residue");
            self.levels.push(Level::new(self.degree, b, Vec::new()));
        }
        for i in from..=depth {
            self.levels[i].generators.push(h.clone());
            self.levels[i].rebuild(self.degree);
        }
    }

    /// Sifts `g` through the chain: returns the residue and the level where sifting stopped.
    pub fn sift(&self, g: &Permutation) -> (Permutation, usize) {
        self.sift_from(g, 0)
    }

    fn sift_from(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut g = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let beta = g.apply0(level.base_point);
            match level.index_of(beta) {
                None => return (g, i),
                Some(k) => {
                    if k != 0 {
                        g = g.mul(&level.inv_reps[k]);
                    }
                }
            }
        }
        let depth = self.levels.len();
        (g, depth)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g).0.is_identity()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Zero-based base points.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn transversal_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Order as `u128`; every group in scope fits.
    pub fn order_u128(&self) -> u128 {
        self.levels
            .iter()
            .try_fold(1u128, |acc, l| acc.checked_mul(l.orbit.len() as u128))
            .expect("group order overflows u128")
    }

    /// All strong generators, deduplicated.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for level in &self.levels {
            for g in &level.generators {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Generators of the pointwise stabilizer of the first `depth` base points.
    pub fn stabilizer_generators(&self, depth: usize) -> Vec<Permutation> {
        self.levels
            .get(depth)
            .map(|l| l.generators.clone())
            .unwrap_or_default()
    }

    /// A uniformly random element.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut g = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let k = rng.gen_range(0..level.reps.len());
            g = g.mul(&level.reps[k]);
        }
        g
    }

    /// A coset representative at `level` mapping its base point to `point` (zero-based).
    pub fn transversal_element(&self, level: usize, point: usize) -> Option<&Permutation> {
        let l = self.levels.get(level)?;
        l.index_of(point).map(|k| &l.reps[k])
    }

    /// Size of the top-level transversal; element sweeps may be split on it.
    pub fn top_transversal_len(&self) -> usize {
        self.levels.first().map_or(1, |l| l.orbit.len())
    }

    /// Visits every element exactly once as a zero-based image slice.
    ///
    /// Elements are the products `u_{r-1} ⋯ u_1 u_0` with `u_i` drawn from the
    /// level-`i` transversal, walked depth first with the deepest level varying
    /// fastest. `top_range` restricts `u_0` to a sub-range of the top-level
    /// transversal so that disjoint ranges partition the sweep.
    pub fn for_each_element_in<F: FnMut(&[u16])>(&self, top_range: std::ops::Range<usize>, mut f: F) {
        let n = self.degree;
        let r = self.levels.len();
        if r == 0 {
            if top_range.contains(&0) {
                let id: Vec<u16> = (0..n as u16).collect();
                f(&id);
            }
            return;
        }
        // scratch[i] holds u_i ⋯ u_0 for the current choices.
        let mut scratch: Vec<Vec<u16>> = vec![vec![0u16; n]; r];
        let end = top_range.end.min(self.levels[0].reps.len());
        for k in top_range.start..end {
            scratch[0].copy_from_slice(self.levels[0].reps[k].images0());
            if r == 1 {
                f(&scratch[0]);
            } else {
                self.descend(1, &mut scratch, &mut f);
            }
        }
    }

    fn descend<F: FnMut(&[u16])>(&self, level: usize, scratch: &mut [Vec<u16>], f: &mut F) {
        let last = level + 1 == self.levels.len();
        for rep in &self.levels[level].reps {
            {
                let (before, after) = scratch.split_at_mut(level);
                let prev = &before[level - 1];
                let u = rep.images0();
                for (out, &ux) in after[0].iter_mut().zip(u) {
                    *out = prev[ux as usize];
                }
            }
            if last {
                f(&scratch[level]);
            } else {
                self.descend(level + 1, scratch, f);
            }
        }
    }

    pub fn for_each_element<F: FnMut(&[u16])>(&self, f: F) {
        self.for_each_element_in(0..usize::MAX, f)
    }

    /// Every element, in the sweep order of [`for_each_element`](Self::for_each_element).
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        self.for_each_element(|imgs| out.push(Permutation::from_raw(imgs.into())));
        out
    }
}

fn first_moved(gens: &[Permutation]) -> Option<usize> {
    gens.iter().filter_map(|g| g.moved_points0().next()).min()
}

/// Product-replacement random element generator with an accumulator.
struct ProductReplacement {
    slots: Vec<Permutation>,
    acc: Permutation,
}

impl ProductReplacement {
    fn new<R: Rng>(gens: &[Permutation], rng: &mut R) -> Self {
        let mut slots: Vec<Permutation> = gens.to_vec();
        while slots.len() < 10 {
            let k = slots.len() % gens.len();
            slots.push(gens[k].clone());
        }
        let acc = Permutation::identity(gens[0].degree());
        let mut pr = ProductReplacement { slots, acc };
        for _ in 0..50 {
            pr.next(rng);
        }
        pr
    }

    fn next<R: Rng>(&mut self, rng: &mut R) -> Permutation {
        let len = self.slots.len();
        let s = rng.gen_range(0..len);
        let mut t = rng.gen_range(0..len - 1);
        if t >= s {
            t += 1;
        }
        let other = if rng.gen_bool(0.5) {
            self.slots[t].clone()
        } else {
            self.slots[t].inverse()
        };
        self.slots[s] = if rng.gen_bool(0.5) {
            self.slots[s].mul(&other)
        } else {
            other.mul(&self.slots[s])
        };
        self.acc = self.acc.mul(&self.slots[s]);
        self.acc.clone()
    }
}
