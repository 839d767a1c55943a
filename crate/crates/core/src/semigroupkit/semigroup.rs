use super::transform::{full_monoid_size, TransformationMap, MAX_T_DEGREE};
use crate::error::{Error, Result};

/// Default cap on the number of semigroup elements.
pub const DEFAULT_SEMIGROUP_CAP: usize = 20_000_000;

/// Dense membership over all `nⁿ` codes.
#[derive(Clone)]
pub(crate) struct CodeSet {
    bits: Vec<u64>,
}

impl CodeSet {
    pub(crate) fn new(n: usize) -> Self {
        CodeSet {
            bits: vec![0; full_monoid_size(n).div_ceil(64)],
        }
    }

    pub(crate) fn contains(&self, c: u32) -> bool {
        self.bits[(c >> 6) as usize] >> (c & 63) & 1 == 1
    }

    /// Inserts `c`; true when it was absent.
    pub(crate) fn insert(&mut self, c: u32) -> bool {
        let w = &mut self.bits[(c >> 6) as usize];
        let m = 1u64 << (c & 63);
        let fresh = *w & m == 0;
        *w |= m;
        fresh
    }
}

/// Decoded images plus packing weights, for fast products on codes.
#[derive(Clone)]
pub(crate) struct Codec {
    n: usize,
    weights: [u32; MAX_T_DEGREE],
}

impl Codec {
    pub(crate) fn new(n: usize) -> Self {
        let mut weights = [0u32; MAX_T_DEGREE];
        let mut w = 1u32;
        for x in weights.iter_mut().take(n) {
            *x = w;
            w = w.wrapping_mul(n as u32);
        }
        Codec { n, weights }
    }

    pub(crate) fn decode(&self, mut c: u32) -> [u8; MAX_T_DEGREE] {
        let mut img = [0u8; MAX_T_DEGREE];
        for x in img.iter_mut().take(self.n) {
            *x = (c % self.n as u32) as u8;
            c /= self.n as u32;
        }
        img
    }

    /// Code of `a` followed by `b`.
    pub(crate) fn mul(&self, a: &[u8; MAX_T_DEGREE], b: &[u8; MAX_T_DEGREE]) -> u32 {
        (0..self.n)
            .map(|i| b[a[i] as usize] as u32 * self.weights[i])
            .sum()
    }
}

/// A finite transformation semigroup given by generators, stored as the explicit set of
/// packed elements.
#[derive(Clone)]
pub struct SemigroupSet {
    degree: usize,
    generators: Vec<TransformationMap>,
    decoded: Vec<[u8; MAX_T_DEGREE]>,
    elements: Vec<u32>,
    member: CodeSet,
    codec: Codec,
    cap: usize,
}

impl SemigroupSet {
    /// The semigroup generated by `gens`, failing once it exceeds `cap` elements.
    pub fn generate(gens: &[TransformationMap], cap: usize) -> Result<Self> {
        let degree = gens
            .first()
            .map(TransformationMap::degree)
            .ok_or_else(|| Error::InvalidInput("no generators".into()))?;
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        let mut s = SemigroupSet {
            degree,
            generators: Vec::new(),
            decoded: Vec::new(),
            elements: Vec::new(),
            member: CodeSet::new(degree),
            codec: Codec::new(degree),
            cap,
        };
        for g in gens {
            s.add_generator(g)?;
        }
        Ok(s)
    }

    /// Adds a generator and closes again. Only products involving the new generator are
    /// formed: `e`, every `s·e`, and their right multiples.
    pub fn add_generator(&mut self, e: &TransformationMap) -> Result<bool> {
        if e.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, e.degree()));
        }
        if self.generators.contains(e) {
            return Ok(false);
        }
        self.generators.push(*e);
        self.decoded.push(self.codec.decode(e.pack()));
        let before = self.elements.len();
        let ed = *self.decoded.last().unwrap();
        let mut head = before;
        self.push(e.pack())?;
        for i in 0..before {
            let s = self.codec.decode(self.elements[i]);
            self.push(self.codec.mul(&s, &ed))?;
        }
        // old elements times old generators are already present
        while head < self.elements.len() {
            let x = self.codec.decode(self.elements[head]);
            for k in 0..self.decoded.len() {
                let y = self.codec.mul(&x, &self.decoded[k]);
                self.push(y)?;
            }
            head += 1;
        }
        Ok(self.elements.len() > before)
    }

    fn push(&mut self, c: u32) -> Result<()> {
        if self.member.insert(c) {
            if self.elements.len() >= self.cap {
                return Err(Error::CapExceeded {
                    needed: self.elements.len() as u128 + 1,
                    cap: self.cap as u128,
                });
            }
            self.elements.push(c);
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn generators(&self) -> &[TransformationMap] {
        &self.generators
    }

    pub fn contains(&self, t: &TransformationMap) -> bool {
        t.degree() == self.degree && self.member.contains(t.pack())
    }

    pub fn iter(&self) -> impl Iterator<Item = TransformationMap> + '_ {
        self.elements
            .iter()
            .map(|&c| TransformationMap::unpack(self.degree, c))
    }

    /// Sorted codes of the non-bijective elements.
    pub fn singular_codes(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .elements
            .iter()
            .copied()
            .filter(|&c| !TransformationMap::unpack(self.degree, c).is_permutation())
            .collect();
        v.sort_unstable();
        v
    }

    /// Idempotents, sorted by code.
    pub fn idempotents(&self) -> Vec<TransformationMap> {
        let mut v: Vec<TransformationMap> = self.iter().filter(TransformationMap::is_idempotent).collect();
        v.sort_unstable_by_key(TransformationMap::pack);
        v
    }
}
