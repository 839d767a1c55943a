use std::fmt;

use crate::error::{Error, Result};
use crate::permcore::Permutation;

/// Most points a partial partition may cover.
pub const MAX_SUPPORT: usize = 12;
/// Most non-singleton blocks.
pub const MAX_BLOCKS: usize = 6;
/// Largest degree whose points fit the 8-bit encoding.
pub const MAX_PARTIAL_DEGREE: usize = 256;

const SIZE_BITS: u32 = 24;

/// The non-singleton blocks of a set partition, packed into one `u128`.
///
/// Points (zero-based, 8 bits each) of the canonical block list are stored from the most
/// significant byte down; block sizes occupy the low 24 bits as nibbles, first block highest.
/// Canonical form: blocks sorted ascending, ordered by their least point. Comparing codes
/// compares the concatenated point sequences first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialPartition(u128);

impl PartialPartition {
    /// Canonicalizes `blocks` (zero-based points).
    pub fn from_blocks(blocks: &[Vec<u16>]) -> Result<Self> {
        let bad = |why: &str| {
            Err(Error::InvalidInput(format!(
                "partial partition {blocks:?}: {why}"
            )))
        };
        if blocks.len() > MAX_BLOCKS {
            return bad("too many blocks");
        }
        let total: usize = blocks.iter().map(Vec::len).sum();
        if total > MAX_SUPPORT {
            return bad("support too large");
        }
        let mut seen = [false; MAX_PARTIAL_DEGREE];
        for b in blocks {
            if b.len() < 2 || b.len() > 15 {
                return bad("block sizes must lie in 2..=15");
            }
            for &p in b {
                if p as usize >= MAX_PARTIAL_DEGREE || std::mem::replace(&mut seen[p as usize], true) {
                    return bad("blocks must be disjoint with points below 256");
                }
            }
        }
        let mut pts = [0u16; MAX_SUPPORT];
        let mut sizes = [0u8; MAX_BLOCKS];
        let mut at = 0;
        for (j, b) in blocks.iter().enumerate() {
            pts[at..at + b.len()].copy_from_slice(b);
            sizes[j] = b.len() as u8;
            at += b.len();
        }
        Ok(canonical(&mut pts, &sizes[..blocks.len()]))
    }

    /// One-based block lists.
    pub fn from_blocks1(blocks: &[Vec<usize>]) -> Result<Self> {
        let zero: Vec<Vec<u16>> = blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&p| {
                        if p == 0 {
                            Err(Error::InvalidInput("points are one-based".into()))
                        } else {
                            Ok((p - 1) as u16)
                        }
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Self::from_blocks(&zero)
    }

    pub fn code(self) -> u128 {
        self.0
    }

    pub fn from_code(code: u128) -> Self {
        PartialPartition(code)
    }

    pub fn block_sizes(self) -> Vec<usize> {
        (0..MAX_BLOCKS)
            .map(|j| ((self.0 >> (SIZE_BITS - 4 - 4 * j as u32)) & 0xf) as usize)
            .take_while(|&s| s > 0)
            .collect()
    }

    pub fn support_size(self) -> usize {
        self.block_sizes().iter().sum()
    }

    fn point(self, i: usize) -> u16 {
        ((self.0 >> (120 - 8 * i as u32)) & 0xff) as u16
    }

    /// Zero-based blocks in canonical order.
    pub fn blocks(self) -> Vec<Vec<u16>> {
        let mut at = 0;
        self.block_sizes()
            .into_iter()
            .map(|s| {
                let b = (at..at + s).map(|i| self.point(i)).collect();
                at += s;
                b
            })
            .collect()
    }

    /// Image under `g`, re-canonicalized.
    pub fn act(self, g: &Permutation) -> Self {
        let imgs = g.images0();
        let mut pts = [0u16; MAX_SUPPORT];
        let mut sizes = [0u8; MAX_BLOCKS];
        let mut nb = 0;
        let mut total = 0;
        while nb < MAX_BLOCKS {
            let s = ((self.0 >> (SIZE_BITS - 4 - 4 * nb as u32)) & 0xf) as u8;
            if s == 0 {
                break;
            }
            sizes[nb] = s;
            nb += 1;
            total += s as usize;
        }
        for (i, p) in pts.iter_mut().enumerate().take(total) {
            *p = imgs[self.point(i) as usize];
        }
        canonical(&mut pts, &sizes[..nb])
    }
}

fn canonical(pts: &mut [u16; MAX_SUPPORT], sizes: &[u8]) -> PartialPartition {
    let mut spans = [(0u16, 0usize, 0usize); MAX_BLOCKS];
    let mut at = 0;
    for (j, &s) in sizes.iter().enumerate() {
        let s = s as usize;
        pts[at..at + s].sort_unstable();
        spans[j] = (pts[at], at, s);
        at += s;
    }
    let spans = &mut spans[..sizes.len()];
    spans.sort_unstable();
    let mut code = 0u128;
    let mut i = 0u32;
    for (j, &(_, start, len)) in spans.iter().enumerate() {
        for &p in &pts[start..start + len] {
            code |= (p as u128) << (120 - 8 * i);
            i += 1;
        }
        code |= (len as u128) << (SIZE_BITS - 4 - 4 * j as u32);
    }
    PartialPartition(code)
}

impl fmt::Debug for PartialPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PartialPartition {
    /// One-based, e.g. `{1,2}{3,5,7}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.blocks() {
            let pts: Vec<String> = b.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "{{{}}}", pts.join(","))?;
        }
        Ok(())
    }
}

/// Every canonical partial partition of `{0..n}` with block-size multiset `support`,
/// sorted by code. Fails once more than `cap` objects would be produced.
pub fn enumerate_partials(n: usize, support: &[usize], cap: u128) -> Result<Vec<PartialPartition>> {
    let total: usize = support.iter().sum();
    if total > n || support.iter().any(|&s| s < 2) {
        return Err(Error::InvalidInput(format!(
            "support {support:?} does not fit degree {n}"
        )));
    }
    if n > MAX_PARTIAL_DEGREE || total > MAX_SUPPORT || support.len() > MAX_BLOCKS {
        return Err(Error::Unsupported(format!(
            "support {support:?} at degree {n} is outside the packed range"
        )));
    }
    let needed = super::shape::PartitionShape::from_support(n, support)?.total_count();
    if needed > cap.into() {
        return Err(Error::CapExceeded {
            needed: u128::try_from(&needed).unwrap_or(u128::MAX),
            cap,
        });
    }
    let mut sizes = support.to_vec();
    sizes.sort_unstable();
    let mut out = Vec::with_capacity(u128::try_from(&needed).unwrap() as usize);
    let mut used = vec![false; n];
    let mut blocks: Vec<Vec<u16>> = Vec::new();
    gen(n, &mut sizes, &mut used, &mut blocks, 0, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn gen(
    n: usize,
    sizes: &mut Vec<usize>,
    used: &mut [bool],
    blocks: &mut Vec<Vec<u16>>,
    min_from: usize,
    out: &mut Vec<PartialPartition>,
) {
    if sizes.is_empty() {
        out.push(PartialPartition::from_blocks(blocks).unwrap());
        return;
    }
    for m in min_from..n {
        if used[m] {
            continue;
        }
        let mut k = 0;
        while k < sizes.len() {
            let s = sizes[k];
            let next = sizes[k..].iter().take_while(|&&x| x == s).count() + k;
            sizes.remove(k);
            used[m] = true;
            let free: Vec<usize> = (m + 1..n).filter(|&p| !used[p]).collect();
            for_each_combination(&free, s - 1, &mut |rest| {
                let mut b = vec![m as u16];
                b.extend(rest.iter().map(|&p| p as u16));
                for &p in rest {
                    used[p] = true;
                }
                blocks.push(b);
                gen(n, sizes, used, blocks, m + 1, out);
                blocks.pop();
                for &p in rest {
                    used[p] = false;
                }
            });
            used[m] = false;
            sizes.insert(k, s);
            k = next;
        }
    }
}

fn for_each_combination(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let need = k - cur.len();
        for i in start..=items.len().saturating_sub(need) {
            if items.len() < need {
                return;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), f);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(blocks: &[&[usize]]) -> PartialPartition {
        PartialPartition::from_blocks1(&blocks.iter().map(|b| b.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn canonical_form() {
        let a = pp(&[&[5, 3], &[2, 1, 7]]);
        assert_eq!(a.to_string(), "{1,2,7}{3,5}");
        assert_eq!(a.blocks(), vec![vec![0, 1, 6], vec![2, 4]]);
        assert_eq!(a.block_sizes(), vec![3, 2]);
        assert_eq!(a, pp(&[&[1, 7, 2], &[3, 5]]));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(PartialPartition::from_blocks(&[vec![0, 1], vec![1, 2]]).is_err());
        assert!(PartialPartition::from_blocks(&[vec![0]]).is_err());
        assert!(PartialPartition::from_blocks(&[(0..13).collect()]).is_err());
        assert!(PartialPartition::from_blocks(&[vec![0, 300]]).is_err());
    }

    #[test]
    fn action() {
        let p = pp(&[&[1, 2]]);
        let g = Permutation::parse_cycles(4, "(2,3)").unwrap();
        assert_eq!(p.act(&g), pp(&[&[1, 3]]));
        assert_eq!(p.act(&Permutation::identity(4)), p);
        let h = Permutation::parse_cycles(4, "(1,4,2)").unwrap();
        assert_eq!(p.act(&g).act(&h), p.act(&g.mul(&h)));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partials(4, &[2], 1000).unwrap().len(), 6);
        assert_eq!(enumerate_partials(6, &[2, 2], 1000).unwrap().len(), 45);
        assert_eq!(enumerate_partials(5, &[3, 2], 1000).unwrap().len(), 10);
        assert_eq!(enumerate_partials(9, &[3, 2, 2], 100_000).unwrap().len(), 3780);
        assert!(matches!(
            enumerate_partials(10, &[2, 2], 10),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let v = enumerate_partials(8, &[3, 2, 2], 1 << 20).unwrap();
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        for p in &v {
            assert_eq!(PartialPartition::from_blocks(&p.blocks()).unwrap(), *p);
        }
    }
}
