use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partorbits::{PartialPartition, PartitionShape};
use crate::permcore::Permutation;

/// Largest degree of a transformation.
pub const MAX_T_DEGREE: usize = 8;

/// A full transformation of `{0..n}`, acting on the right: `x(ab) = (xa)b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TransformationMap {
    n: u8,
    img: [u8; MAX_T_DEGREE],
}

impl TransformationMap {
    /// From zero-based images.
    pub fn from_images0(images: &[u8]) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_T_DEGREE {
            return Err(Error::InvalidInput(format!(
                "transformation degree {n} outside 1..={MAX_T_DEGREE}"
            )));
        }
        if images.iter().any(|&x| x as usize >= n) {
            return Err(Error::InvalidInput(format!("image out of range in {images:?}")));
        }
        let mut img = [0u8; MAX_T_DEGREE];
        img[..n].copy_from_slice(images);
        Ok(TransformationMap { n: n as u8, img })
    }

    /// From one-based images, e.g. `[1, 1, 3, 4]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let zero: Vec<u8> = images
            .iter()
            .map(|&x| {
                if x == 0 || x > images.len() {
                    Err(Error::InvalidInput(format!("image {x} out of range")))
                } else {
                    Ok((x - 1) as u8)
                }
            })
            .collect::<Result<_>>()?;
        Self::from_images0(&zero)
    }

    pub fn identity(n: usize) -> Self {
        Self::from_images0(&(0..n as u8).collect::<Vec<_>>()).expect("degree in range")
    }

    pub fn from_permutation(p: &Permutation) -> Result<Self> {
        let imgs: Vec<u8> = p.images0().iter().map(|&x| x as u8).collect();
        Self::from_images0(&imgs)
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    pub fn images0(&self) -> &[u8] {
        &self.img[..self.n as usize]
    }

    pub fn apply0(&self, x: usize) -> usize {
        self.img[x] as usize
    }

    /// `self` followed by `other`.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "degree mismatch");
        let mut img = [0u8; MAX_T_DEGREE];
        for (i, o) in img.iter_mut().enumerate().take(self.n as usize) {
            *o = other.img[self.img[i] as usize];
        }
        TransformationMap { n: self.n, img }
    }

    /// Sorted image set.
    pub fn image(&self) -> Vec<u8> {
        let mut seen = [false; MAX_T_DEGREE];
        for &x in self.images0() {
            seen[x as usize] = true;
        }
        (0..self.n).filter(|&x| seen[x as usize]).collect()
    }

    pub fn rank(&self) -> usize {
        self.image().len()
    }

    /// Kernel classes, each sorted, ordered by least element.
    pub fn kernel(&self) -> Vec<Vec<u8>> {
        let mut classes: Vec<Vec<u8>> = Vec::new();
        let mut slot = [usize::MAX; MAX_T_DEGREE];
        for (x, &y) in self.images0().iter().enumerate() {
            if slot[y as usize] == usize::MAX {
                slot[y as usize] = classes.len();
                classes.push(Vec::new());
            }
            classes[slot[y as usize]].push(x as u8);
        }
        classes
    }

    /// Kernel as a bit pattern: for each point, the least point of its class.
    pub fn kernel_key(&self) -> [u8; MAX_T_DEGREE] {
        let mut first = [u8::MAX; MAX_T_DEGREE];
        let mut key = [0u8; MAX_T_DEGREE];
        for (x, &y) in self.images0().iter().enumerate() {
            if first[y as usize] == u8::MAX {
                first[y as usize] = x as u8;
            }
            key[x] = first[y as usize];
        }
        key
    }

    pub fn kernel_type(&self) -> PartitionShape {
        PartitionShape::new(self.kernel().iter().map(Vec::len).collect()).expect("kernel is a partition")
    }

    /// Non-singleton kernel classes as a packed partial partition.
    pub fn kernel_partial(&self) -> PartialPartition {
        let blocks: Vec<Vec<u16>> = self
            .kernel()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| c.into_iter().map(u16::from).collect())
            .collect();
        PartialPartition::from_blocks(&blocks).expect("kernel of a small transformation fits")
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    pub fn is_permutation(&self) -> bool {
        self.rank() == self.degree()
    }

    /// Radix-`n` code: `Σ img[i]·nⁱ`.
    pub fn pack(&self) -> u32 {
        let n = self.n as u32;
        self.images0()
            .iter()
            .rev()
            .fold(0u32, |acc, &x| acc * n + x as u32)
    }

    pub fn unpack(n: usize, mut code: u32) -> Self {
        let mut img = [0u8; MAX_T_DEGREE];
        for o in img.iter_mut().take(n) {
            *o = (code % n as u32) as u8;
            code /= n as u32;
        }
        TransformationMap { n: n as u8, img }
    }

    /// The conjugate `g⁻¹ self g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Self {
        let p = Self::from_permutation(g).expect("degree in range");
        let inv = Self::from_permutation(&g.inverse()).expect("degree in range");
        inv.mul(self).mul(&p)
    }
}

impl fmt::Debug for TransformationMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TransformationMap {
    /// One-based image list, e.g. `[1,1,3,4]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images0().iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Number of transformations of degree `n`, `nⁿ`.
pub fn full_monoid_size(n: usize) -> usize {
    n.pow(n as u32)
}

/// The idempotent with kernel classes `classes` (one-based, covering `1..=n`) sending each
/// class to its unique member of `transversal`.
pub fn idempotent_from(classes: &[Vec<usize>], transversal: &[usize]) -> Result<TransformationMap> {
    let n: usize = classes.iter().map(Vec::len).sum();
    let bad = |why: &str| Err(Error::InvalidInput(format!("idempotent_from: {why}")));
    if transversal.len() != classes.len() {
        return bad("transversal size differs from the number of classes");
    }
    let mut images = vec![0usize; n];
    let mut covered = vec![false; n];
    for class in classes {
        let reps: Vec<usize> = class
            .iter()
            .copied()
            .filter(|p| transversal.contains(p))
            .collect();
        if reps.len() != 1 {
            return bad("not a transversal");
        }
        for &p in class {
            if p == 0 || p > n || std::mem::replace(&mut covered[p - 1], true) {
                return bad("classes must partition 1..=n");
            }
            images[p - 1] = reps[0];
        }
    }
    TransformationMap::from_images(&images)
}

/// The idempotent power of `t`, found by detecting the cycle of `t, t², t³, …`.
pub fn idempotent_power(t: &TransformationMap) -> TransformationMap {
    let mut seen: HashMap<TransformationMap, usize> = HashMap::new();
    let mut powers = vec![*t];
    seen.insert(*t, 1);
    let (index, period) = loop {
        let next = powers.last().unwrap().mul(t);
        let k = powers.len() + 1;
        if let Some(&first) = seen.get(&next) {
            break (first, k - first);
        }
        seen.insert(next, k);
        powers.push(next);
    };
    let omega = index.div_ceil(period) * period;
    powers[omega - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tm(v: &[usize]) -> TransformationMap {
        TransformationMap::from_images(v).unwrap()
    }

    #[test]
    fn basics() {
        let t = tm(&[2, 3, 4, 5, 5]);
        assert_eq!(t.rank(), 4);
        assert_eq!(t.kernel(), vec![vec![0], vec![1], vec![2], vec![3, 4]]);
        assert_eq!(t.kernel_type().parts(), &[2, 1, 1, 1]);
        assert_eq!(TransformationMap::unpack(5, t.pack()), t);
        assert_eq!(t.to_string(), "[2,3,4,5,5]");
        assert!(TransformationMap::from_images(&[0, 1]).is_err());
        assert!(TransformationMap::from_images(&[1; 9]).is_err());
    }

    #[test]
    fn composition_is_right_action() {
        let a = tm(&[2, 1, 3]);
        let b = tm(&[3, 3, 1]);
        assert_eq!(a.mul(&b), tm(&[3, 3, 1]));
        assert_eq!(b.mul(&a), tm(&[3, 3, 2]));
    }

    #[test]
    fn idempotents_from_pairs() {
        let e = idempotent_from(&[vec![1, 2], vec![3], vec![4]], &[1, 3, 4]).unwrap();
        assert_eq!(e, tm(&[1, 1, 3, 4]));
        assert!(e.is_idempotent());
        let id = idempotent_from(&[vec![1], vec![2], vec![3]], &[1, 2, 3]).unwrap();
        assert_eq!(id, TransformationMap::identity(3));
        assert!(idempotent_from(&[vec![1, 2], vec![3]], &[1, 2]).is_err());
        assert!(idempotent_from(&[vec![1, 2], vec![3]], &[1]).is_err());
    }

    #[test]
    fn idempotent_powers() {
        let t = tm(&[2, 3, 4, 5, 5]);
        let e = idempotent_power(&t);
        assert!(e.is_idempotent());
        assert_eq!(e, tm(&[5, 5, 5, 5, 5]));
        let p = tm(&[2, 3, 1, 5, 4]);
        assert_eq!(idempotent_power(&p), TransformationMap::identity(5));
        let e2 = tm(&[1, 1, 3]);
        assert_eq!(idempotent_power(&e2), e2);
        // index 2, period 2: t = (1 2) on {1,2} with 3 ↦ 1
        let q = tm(&[2, 1, 1]);
        let w = idempotent_power(&q);
        assert!(w.is_idempotent());
        assert_eq!(w.rank(), 2);
    }

    #[test]
    fn conjugation() {
        let t = tm(&[1, 1, 3]);
        let g = Permutation::parse_cycles(3, "(1,3)").unwrap();
        assert_eq!(t.conjugate_by(&g), tm(&[1, 3, 3]));
    }
}
