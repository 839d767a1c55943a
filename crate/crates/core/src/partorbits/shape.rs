use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Integer partitions of `n` with parts at most `max_part`, each non-increasing.
pub fn integer_partitions(n: usize, max_part: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, max_part, &mut cur, &mut out);
    out
}

/// `p(k)`, the number of partitions of `k`.
pub fn partition_number(k: usize) -> u64 {
    let mut ways = vec![0u64; k + 1];
    ways[0] = 1;
    for part in 1..=k {
        for m in part..=k {
            ways[m] += ways[m - part];
        }
    }
    ways[k]
}

/// A partition type of `n`: non-increasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionShape {
    parts: Vec<usize>,
}

impl PartitionShape {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidInput(format!("bad partition {parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(PartitionShape { parts })
    }

    /// The shape of degree `n` whose non-singleton parts are `support`.
    pub fn from_support(n: usize, support: &[usize]) -> Result<Self> {
        let used: usize = support.iter().sum();
        if support.iter().any(|&l| l < 2) || used > n {
            return Err(Error::InvalidInput(format!(
                "support {support:?} does not fit degree {n}"
            )));
        }
        let mut parts = support.to_vec();
        parts.resize(support.len() + n - used, 1);
        Self::new(parts)
    }

    /// Parses `4,1...`, `3,2,1,1`, `(2,2,2,1^16)` or `2^3` against degree `n`; a trailing
    /// `...` or a missing remainder is filled with ones.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("cannot parse shape `{text}`"));
        let body = text
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim_end_matches('…')
            .trim_end_matches("...")
            .trim_end_matches(',');
        let mut parts = Vec::new();
        for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b, e.parse::<usize>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let base = base.parse::<usize>().map_err(|_| bad())?;
            parts.extend(std::iter::repeat_n(base, exp));
        }
        let support: Vec<usize> = parts.iter().copied().filter(|&l| l > 1).collect();
        let ones = parts.len() - support.len();
        let shape = Self::from_support(n, &support)?;
        if ones > shape.parts.len() - support.len() {
            return Err(bad());
        }
        Ok(shape)
    }

    /// All shapes of degree `n` with exactly `rank` parts.
    pub fn all_of_rank(n: usize, rank: usize) -> Vec<PartitionShape> {
        if rank == 0 || rank > n {
            return Vec::new();
        }
        integer_partitions(n - rank, n - rank)
            .into_iter()
            .filter(|excess| excess.len() <= rank)
            .map(|excess| {
                let support: Vec<usize> = excess.iter().map(|e| e + 1).collect();
                Self::from_support(n, &support).unwrap()
            })
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    /// The parts of size at least two.
    pub fn support(&self) -> Vec<usize> {
        self.parts.iter().copied().filter(|&l| l > 1).collect()
    }

    pub fn support_size(&self) -> usize {
        self.support().iter().sum()
    }

    /// Number of set partitions of this shape: `n! / (∏ lᵢ! ∏ mⱼ!)`.
    pub fn total_count(&self) -> BigUint {
        let fact = |k: usize| -> BigUint { (1..=k as u64).map(BigUint::from).product() };
        let mut denom = BigUint::from(1u32);
        let mut i = 0;
        while i < self.parts.len() {
            let l = self.parts[i];
            let m = self.parts[i..].iter().take_while(|&&x| x == l).count();
            denom *= fact(l).pow(m as u32) * fact(m);
            i += m;
        }
        fact(self.degree()) / denom
    }
}

impl fmt::Display for PartitionShape {
    /// Compact form such as `(3,2,1^15)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let l = self.parts[i];
            let m = self.parts[i..].iter().take_while(|&&x| x == l).count();
            if l == 1 && m > 1 {
                items.push(format!("1^{m}"));
            } else {
                items.extend(std::iter::repeat_n(l.to_string(), m));
            }
            i += m;
        }
        write!(f, "({})", items.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_counts() {
        let a = PartitionShape::from_support(11, &[3]).unwrap().total_count();
        let b = PartitionShape::from_support(11, &[2, 2]).unwrap().total_count();
        assert_eq!(a, BigUint::from(165u32));
        assert_eq!(b, BigUint::from(990u32));
        assert_eq!(
            PartitionShape::new(vec![1; 7]).unwrap().total_count(),
            BigUint::from(1u32)
        );
        assert_eq!(
            PartitionShape::new(vec![2, 2, 2]).unwrap().total_count(),
            BigUint::from(15u32)
        );
    }

    #[test]
    fn matchings_on_six_points_by_brute_force() {
        fn count(points: &mut Vec<usize>) -> u64 {
            if points.is_empty() {
                return 1;
            }
            let first = points.remove(0);
            let mut total = 0;
            for i in 0..points.len() {
                let partner = points.remove(i);
                total += count(points);
                points.insert(i, partner);
            }
            points.insert(0, first);
            total
        }
        assert_eq!(count(&mut (0..6).collect()), 15);
    }

    #[test]
    fn parsing() {
        let s = PartitionShape::parse("4,1...", 22).unwrap();
        assert_eq!(s.support(), vec![4]);
        assert_eq!(s.rank(), 19);
        assert_eq!(
            PartitionShape::parse("(2,2,2,1^16)", 22).unwrap().support(),
            vec![2, 2, 2]
        );
        assert_eq!(PartitionShape::parse("2^3", 8).unwrap().rank(), 5);
        assert_eq!(
            PartitionShape::parse("2,2,1,1", 6).unwrap().to_string(),
            "(2,2,1^2)"
        );
        assert!(PartitionShape::parse("3,3", 5).is_err());
        assert!(PartitionShape::parse("2,1,1,1,1", 4).is_err());
        assert!(PartitionShape::parse("x", 4).is_err());
    }

    #[test]
    fn shapes_of_rank() {
        for n in 10..=14 {
            for k in 1..=5 {
                assert_eq!(
                    PartitionShape::all_of_rank(n, n - k).len() as u64,
                    partition_number(k)
                );
            }
        }
        assert_eq!(PartitionShape::all_of_rank(4, 2).len(), 2);
    }

    #[test]
    fn partition_numbers() {
        let want = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (k, w) in want.iter().enumerate() {
            assert_eq!(partition_number(k), *w);
            assert_eq!(integer_partitions(k, k).len() as u64, *w);
        }
    }
}
