use std::collections::HashMap;
use std::hash::Hash;

use super::perm::Permutation;
use crate::error::{Error, Result};

/// A breadth-first orbit with a Schreier tree back to the seed.
#[derive(Clone, Debug)]
pub struct Orbit<T> {
    elements: Vec<T>,
    index: HashMap<T, usize>,
    /// `(parent index, generator index)`; the seed points to itself.
    parent: Vec<(usize, usize)>,
}

/// Computes the orbit of `seed` under `⟨gens⟩` for a right action.
///
/// Fails with [`Error::CapExceeded`] once more than `cap` objects are found.
pub fn orbit<T, F>(seed: T, gens: &[Permutation], action: F, cap: usize) -> Result<Orbit<T>>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &Permutation) -> T,
{
    let mut elements = vec![seed.clone()];
    let mut index = HashMap::new();
    index.insert(seed, 0usize);
    let mut parent = vec![(0usize, usize::MAX)];
    let mut head = 0;
    while head < elements.len() {
        for (gi, g) in gens.iter().enumerate() {
            let img = action(&elements[head], g);
            if !index.contains_key(&img) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded {
                        needed: elements.len() as u128 + 1,
                        cap: cap as u128,
                    });
                }
                index.insert(img.clone(), elements.len());
                elements.push(img);
                parent.push((head, gi));
            }
        }
        head += 1;
    }
    Ok(Orbit {
        elements,
        index,
        parent,
    })
}

impl<T: Clone + Eq + Hash> Orbit<T> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn position(&self, x: &T) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.index.contains_key(x)
    }

    /// Generator indices whose product maps the seed to member `i`.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut word = Vec::new();
        while i != 0 {
            let (p, g) = self.parent[i];
            word.push(g);
            i = p;
        }
        word.reverse();
        word
    }

    /// The group element spelled by [`word`](Self::word).
    pub fn transversal_element(&self, i: usize, gens: &[Permutation]) -> Permutation {
        let degree = gens.first().map_or(0, |g| g.degree());
        self.word(i)
            .into_iter()
            .fold(Permutation::identity(degree), |acc, g| acc.mul(&gens[g]))
    }
}

/// Action of a permutation on a zero-based point.
pub fn on_points(x: &usize, g: &Permutation) -> usize {
    g.apply0(*x)
}

/// Action on sorted sets of zero-based points.
#[allow(clippy::ptr_arg)]
pub fn on_sets(x: &Vec<u16>, g: &Permutation) -> Vec<u16> {
    let mut img: Vec<u16> = x.iter().map(|&p| g.apply0(p as usize) as u16).collect();
    img.sort_unstable();
    img
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::StabilizerChain;

    #[test]
    fn two_subsets_under_s4() {
        let gens = vec![
            Permutation::parse_cycles(4, "(1,2)").unwrap(),
            Permutation::parse_cycles(4, "(1,2,3,4)").unwrap(),
        ];
        let o = orbit(vec![0u16, 1], &gens, on_sets, 100).unwrap();
        assert_eq!(o.len(), 6);
        for i in 0..o.len() {
            let g = o.transversal_element(i, &gens);
            assert_eq!(on_sets(&vec![0, 1], &g), o.elements()[i]);
        }
    }

    #[test]
    fn point_orbit_of_cyclic_group() {
        let gens = vec![Permutation::parse_cycles(5, "(1,2,3,4,5)").unwrap()];
        let o = orbit(0usize, &gens, on_points, 100).unwrap();
        let mut pts = o.elements().to_vec();
        pts.sort();
        assert_eq!(pts, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn cap_is_enforced() {
        let gens = vec![Permutation::parse_cycles(5, "(1,2,3,4,5)").unwrap()];
        assert!(matches!(
            orbit(0usize, &gens, on_points, 3),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn orbit_size_divides_order() {
        let gens = vec![
            Permutation::parse_cycles(6, "(1,2,3)").unwrap(),
            Permutation::parse_cycles(6, "(4,5)(1,2)").unwrap(),
        ];
        let order = StabilizerChain::build(6, &gens).order_u128();
        for k in 1..=4u16 {
            let seed: Vec<u16> = (0..k).collect();
            let o = orbit(seed, &gens, on_sets, 1000).unwrap();
            assert_eq!(order % o.len() as u128, 0);
        }
    }
}
