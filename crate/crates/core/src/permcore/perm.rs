use std::fmt;

use crate::error::{Error, Result};

/// Largest degree handled by the toolkit. Points are stored as `u16`.
pub const MAX_DEGREE: usize = 1 << 15;

/// A permutation of the points `1..=n`.
///
/// Internally points are zero-based: `images[i]` is the image of point `i + 1`
/// minus one. Products act left to right: `(i)(p * q) = ((i)p)q`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from zero-based images, checking bijectivity.
    pub fn from_images0(images: Vec<u16>) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::InvalidInput(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation from one-based images (`images[i]` is the image of `i + 1`).
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let zero: Vec<u16> = images
            .iter()
            .map(|&x| {
                if x == 0 || x > images.len() {
                    Err(Error::NotAPermutation(format!("{images:?}")))
                } else {
                    Ok((x - 1) as u16)
                }
            })
            .collect::<Result<_>>()?;
        Self::from_images0(zero)
    }

    /// Unchecked constructor for hot paths that already guarantee bijectivity.
    pub(crate) fn from_raw(images: Box<[u16]>) -> Self {
        debug_assert!(Self::from_images0(images.to_vec()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of the given degree from one-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                let y = cycle[(k + 1) % cycle.len()];
                if x == 0 || x > degree || y == 0 || y > degree || touched[x - 1] {
                    return Err(Error::NotAPermutation(format!("bad cycle {cycle:?}")));
                }
                touched[x - 1] = true;
                images[x - 1] = (y - 1) as u16;
            }
        }
        Self::from_images0(images)
    }

    /// Parses cycle notation such as `(1,2,3)(4,5)`; the empty string or `()` is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for chunk in text.split('(').skip(1) {
            let body = chunk
                .split(')')
                .next()
                .ok_or_else(|| Error::InvalidInput(text.to_string()))?;
            if body.trim().is_empty() {
                continue;
            }
            let cycle = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| Error::InvalidInput(format!("bad point {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            cycles.push(cycle);
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(degree, &refs)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Zero-based image table.
    #[inline]
    pub fn images0(&self) -> &[u16] {
        &self.images
    }

    /// One-based image table.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// Image of a zero-based point.
    #[inline]
    pub fn apply0(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// Image of a one-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.mul(other))
    }

    /// Left-to-right product; panics on degree mismatch.
    #[inline]
    pub fn mul(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        let imgs = self.images.iter().map(|&x| other.images[x as usize]).collect();
        Permutation { images: imgs }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `h⁻¹ self h`.
    pub fn conjugate_by(&self, h: &Permutation) -> Permutation {
        h.inverse().mul(self).mul(h)
    }

    /// Zero-based cycles including fixed points, each starting at its least point.
    pub fn cycles0(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply0(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply0(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let mut parts = Vec::new();
        cycle_lengths_into(&self.images, &mut vec![false; self.degree()], &mut parts);
        CycleType::from_parts(parts)
    }

    pub fn order(&self) -> u64 {
        self.cycle_type()
            .parts()
            .iter()
            .fold(1u64, |acc, &l| lcm(acc, l as u64))
    }

    pub fn is_even(&self) -> bool {
        let n = self.degree();
        let cycles = self.cycle_type().parts().len();
        (n - cycles).is_multiple_of(2)
    }

    pub fn moved_points0(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &x)| *i != x as usize)
            .map(|(i, _)| i)
    }
}

/// Collects the cycle lengths of a zero-based image table, sorted non-increasing.
/// `seen` must have the table's length; it is left cleared.
#[inline]
pub(crate) fn cycle_lengths_into(images: &[u16], seen: &mut [bool], out: &mut Vec<u16>) {
    out.clear();
    for start in 0..images.len() {
        if seen[start] {
            continue;
        }
        let mut len = 1u16;
        seen[start] = true;
        let mut x = images[start] as usize;
        while x != start {
            seen[x] = true;
            len += 1;
            x = images[x] as usize;
        }
        out.push(len);
    }
    seen.iter_mut().for_each(|s| *s = false);
    out.sort_unstable_by(|a, b| b.cmp(a));
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles0() {
            if cycle.len() > 1 {
                let pts: Vec<String> = cycle.iter().map(|x| (x + 1).to_string()).collect();
                write!(f, "({})", pts.join(","))?;
                wrote = true;
            }
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Cycle lengths of a permutation, including fixed points, sorted non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType(Box<[u16]>);

impl CycleType {
    pub fn from_parts(mut parts: Vec<u16>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType(parts.into_boxed_slice())
    }

    pub fn parts(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&x| x as usize).sum()
    }

    /// `counts[l]` is the number of cycles of length `l`.
    pub fn counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.degree() + 1];
        for &l in self.0.iter() {
            counts[l as usize] += 1;
        }
        counts
    }

    /// A permutation with this cycle type, cycles laid out on consecutive points.
    pub fn representative(&self) -> Permutation {
        let n = self.degree();
        let mut images = vec![0u16; n];
        let mut start = 0usize;
        for &l in self.0.iter() {
            let l = l as usize;
            for k in 0..l {
                images[start + k] = (start + (k + 1) % l) as u16;
            }
            start += l;
        }
        Permutation::from_raw(images.into_boxed_slice())
    }

    /// Every cycle type of the given degree (the integer partitions of `n`).
    pub fn all(n: usize) -> Vec<CycleType> {
        crate::partorbits::integer_partitions(n, n)
            .into_iter()
            .map(|p| CycleType::from_parts(p.into_iter().map(|x| x as u16).collect()))
            .collect()
    }
}

impl std::borrow::Borrow<[u16]> for CycleType {
    fn borrow(&self) -> &[u16] {
        &self.0
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_identity_and_square() {
        let id = Permutation::identity(5);
        let t = Permutation::parse_cycles(5, "(1,2)").unwrap();
        assert_eq!(id.compose(&t).unwrap(), t);
        let c = Permutation::parse_cycles(5, "(1,2,3)").unwrap();
        assert_eq!(
            c.compose(&c).unwrap(),
            Permutation::parse_cycles(5, "(1,3,2)").unwrap()
        );
    }

    #[test]
    fn compose_is_left_to_right() {
        let p = Permutation::parse_cycles(3, "(1,2)").unwrap();
        let q = Permutation::parse_cycles(3, "(2,3)").unwrap();
        // 1 -> 2 -> 3
        assert_eq!(p.mul(&q).apply(1), 3);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let p = Permutation::identity(3);
        let q = Permutation::identity(4);
        assert_eq!(p.compose(&q), Err(Error::DegreeMismatch(3, 4)));
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[2, 3, 1]).is_ok());
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(6).cycle_type().parts(), &[1; 6]);
        let p = Permutation::parse_cycles(6, "(1,2)(3,4,5)").unwrap();
        assert_eq!(p.cycle_type().parts(), &[3, 2, 1]);
        assert_eq!(p.order(), 6);
        assert!(!p.is_even());
    }

    #[test]
    fn representative_has_its_type() {
        for t in CycleType::all(7) {
            assert_eq!(t.representative().cycle_type(), t);
        }
        assert_eq!(CycleType::all(7).len(), 15);
    }

    #[test]
    fn display_round_trips() {
        let p = Permutation::parse_cycles(8, "(1,5,2)(3,8)").unwrap();
        assert_eq!(Permutation::parse_cycles(8, &p.to_string()).unwrap(), p);
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }
}
