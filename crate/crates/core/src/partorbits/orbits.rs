use std::time::Instant;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::counting::{binomial, burnside_orbit_count, subset_orbit_count_burnside};
use super::partial::{enumerate_partials, PartialPartition, MAX_PARTIAL_DEGREE, MAX_SUPPORT};
use super::shape::PartitionShape;
use crate::error::{Error, Result};
use crate::permcore::{PermGroup, Permutation};
use crate::report::{big, render_table, OutputFormat};

/// Default object cap for explicit enumeration.
pub const DEFAULT_CAP: u128 = 200_000_000;

/// A finite set of objects with a ranking, acted on by permutations.
pub(crate) trait Domain {
    type Item: Copy;
    fn len(&self) -> usize;
    fn item(&self, i: usize) -> Self::Item;
    fn index(&self, x: &Self::Item) -> usize;
    fn act(&self, x: &Self::Item, g: &Permutation) -> Self::Item;
    /// Sort key used to pick orbit representatives.
    fn key(&self, x: &Self::Item) -> u128;
    /// One-based rendering of an object.
    fn render(&self, x: &Self::Item) -> String;
}

/// All canonical partial partitions of one shape, sorted by code.
pub(crate) struct PartialDomain(Vec<PartialPartition>);

impl Domain for PartialDomain {
    type Item = PartialPartition;

    fn len(&self) -> usize {
        self.0.len()
    }
    fn item(&self, i: usize) -> PartialPartition {
        self.0[i]
    }
    fn index(&self, x: &PartialPartition) -> usize {
        self.0
            .binary_search(x)
            .expect("domain is closed under the action")
    }
    fn act(&self, x: &PartialPartition, g: &Permutation) -> PartialPartition {
        x.act(g)
    }
    fn key(&self, x: &PartialPartition) -> u128 {
        x.code()
    }
    fn render(&self, x: &PartialPartition) -> String {
        x.to_string()
    }
}

/// The `k`-subsets of `{0..n}`, ranked in colex order.
pub(crate) struct SubsetDomain {
    n: usize,
    k: usize,
    len: usize,
    binom: Vec<Vec<u64>>,
}

pub(crate) type Subset = [u16; MAX_SUPPORT];

impl SubsetDomain {
    pub(crate) fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidInput(format!("{k}-subsets of {n} points")));
        }
        if k > MAX_SUPPORT || n > u16::MAX as usize {
            return Err(Error::Unsupported(format!("{k}-subsets of {n} points")));
        }
        let len = binomial(n as u64, k as u64)
            .to_usize()
            .ok_or(Error::CapExceeded {
                needed: u128::MAX,
                cap: usize::MAX as u128,
            })?;
        let binom = (0..=n as u64)
            .map(|a| {
                (0..=k as u64)
                    .map(|j| binomial(a, j).to_u64().unwrap_or(u64::MAX))
                    .collect()
            })
            .collect();
        Ok(SubsetDomain { n, k, len, binom })
    }
}

impl Domain for SubsetDomain {
    type Item = Subset;

    fn len(&self) -> usize {
        self.len
    }
    fn item(&self, i: usize) -> Subset {
        let mut r = i as u64;
        let mut out = [0u16; MAX_SUPPORT];
        let mut top = self.n;
        for j in (0..self.k).rev() {
            let mut a = top - 1;
            while self.binom[a][j + 1] > r {
                a -= 1;
            }
            r -= self.binom[a][j + 1];
            out[j] = a as u16;
            top = a;
        }
        out
    }
    fn index(&self, x: &Subset) -> usize {
        (0..self.k).map(|j| self.binom[x[j] as usize][j + 1]).sum::<u64>() as usize
    }
    fn act(&self, x: &Subset, g: &Permutation) -> Subset {
        let imgs = g.images0();
        let mut out = [0u16; MAX_SUPPORT];
        for j in 0..self.k {
            out[j] = imgs[x[j] as usize];
        }
        out[..self.k].sort_unstable();
        out
    }
    fn key(&self, x: &Subset) -> u128 {
        x[..self.k].iter().fold(0u128, |acc, &p| (acc << 9) | p as u128) << (9 * (MAX_SUPPORT - self.k))
    }
    fn render(&self, x: &Subset) -> String {
        let pts: Vec<String> = x[..self.k].iter().map(|p| (p + 1).to_string()).collect();
        format!("{{{}}}", pts.join(","))
    }
}

/// An orbit labelling of a domain.
pub(crate) struct Labelling<T> {
    pub labels: Vec<u32>,
    pub sizes: Vec<u64>,
    pub reps: Vec<T>,
}

const UNSEEN: u32 = u32::MAX;

/// Labels every object by its orbit under `⟨gens⟩`, searching from the lowest
/// unlabelled index; representatives are the members with the least key.
pub(crate) fn label_orbits<D: Domain>(domain: &D, gens: &[Permutation]) -> Labelling<D::Item> {
    let mut labels = vec![UNSEEN; domain.len()];
    let mut sizes = Vec::new();
    let mut reps = Vec::new();
    let mut queue: Vec<D::Item> = Vec::new();
    for start in 0..domain.len() {
        if labels[start] != UNSEEN {
            continue;
        }
        let id = sizes.len() as u32;
        let first = domain.item(start);
        labels[start] = id;
        queue.push(first);
        let mut size = 0u64;
        let mut best = (domain.key(&first), first);
        while let Some(x) = queue.pop() {
            size += 1;
            for g in gens {
                let y = domain.act(&x, g);
                let j = domain.index(&y);
                if labels[j] == UNSEEN {
                    labels[j] = id;
                    let k = domain.key(&y);
                    if k < best.0 {
                        best = (k, y);
                    }
                    queue.push(y);
                }
            }
        }
        sizes.push(size);
        reps.push(best.1);
    }
    Labelling { labels, sizes, reps }
}

/// How an orbit count was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Burnside,
    Enumeration,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Burnside => "burnside",
            Method::Enumeration => "enumeration",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitEntry {
    /// One-based canonical representative.
    pub rep: String,
    pub size: u64,
    #[serde(serialize_with = "big::serialize")]
    pub stabilizer_order: BigUint,
}

/// Orbit count of a group on partitions of one shape, with optional orbit details.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    pub group: String,
    pub degree: usize,
    pub shape: String,
    #[serde(serialize_with = "big::serialize")]
    pub count: BigUint,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbits: Option<Vec<OrbitEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed: Option<f64>,
}

impl OrbitReport {
    pub const HEADERS: [&'static str; 5] = ["group", "degree", "shape", "count", "method"];

    pub fn row(&self) -> Vec<String> {
        let mut r = vec![
            self.group.clone(),
            self.degree.to_string(),
            self.shape.clone(),
            self.count.to_string(),
            self.method.to_string(),
        ];
        if let Some(e) = self.elapsed {
            r.push(format!("{e:.3}"));
        }
        r
    }

    /// Renders several reports as one table; JSON gives an array of records.
    pub fn render(reports: &[OrbitReport], format: OutputFormat) -> String {
        if format == OutputFormat::Json {
            return serde_json::to_string_pretty(reports).expect("reports serialize") + "\n";
        }
        let mut headers = Self::HEADERS.to_vec();
        if reports.iter().any(|r| r.elapsed.is_some()) {
            headers.push("elapsed");
        }
        let rows: Vec<Vec<String>> = reports.iter().map(OrbitReport::row).collect();
        render_table(&headers, &rows, format)
    }

    /// Records wall-clock time since `start`.
    pub fn timed(mut self, start: Instant) -> Self {
        self.elapsed = Some(start.elapsed().as_secs_f64());
        self
    }
}

/// Orbit count by the counting lemma, as a report.
pub fn burnside_report(g: &PermGroup, shape: &PartitionShape) -> Result<OrbitReport> {
    check_degree(g, shape)?;
    Ok(OrbitReport {
        group: g.name().to_string(),
        degree: g.degree(),
        shape: shape.to_string(),
        count: burnside_orbit_count(g, shape)?,
        method: Method::Burnside,
        orbits: None,
        elapsed: None,
    })
}

fn check_degree(g: &PermGroup, shape: &PartitionShape) -> Result<()> {
    if g.degree() != shape.degree() {
        return Err(Error::DegreeMismatch(g.degree(), shape.degree()));
    }
    Ok(())
}

/// Orbits on the objects of a shape, with the labelling exposed for fusion.
pub(crate) enum ShapeOrbits {
    Partials(PartialDomain, Labelling<PartialPartition>),
    Subsets(SubsetDomain, Labelling<Subset>),
}

impl ShapeOrbits {
    /// Labels the objects of `shape` under `g`. Single-block shapes use the subset domain.
    pub(crate) fn compute(g: &PermGroup, shape: &PartitionShape, cap: u128) -> Result<Self> {
        check_degree(g, shape)?;
        let n = shape.degree();
        let support = shape.support();
        let total = shape.total_count();
        if total > BigUint::from(cap) {
            return Err(Error::CapExceeded {
                needed: total.to_u128().unwrap_or(u128::MAX),
                cap,
            });
        }
        if support.len() == 1 {
            let d = SubsetDomain::new(n, support[0])?;
            let l = label_orbits(&d, g.generators());
            Ok(ShapeOrbits::Subsets(d, l))
        } else {
            if n > MAX_PARTIAL_DEGREE {
                return Err(Error::Unsupported(format!(
                    "degree {n} exceeds the packed encoding"
                )));
            }
            let d = PartialDomain(enumerate_partials(n, &support, cap)?);
            let l = label_orbits(&d, g.generators());
            Ok(ShapeOrbits::Partials(d, l))
        }
    }

    pub(crate) fn count(&self) -> usize {
        self.sizes().len()
    }

    pub(crate) fn sizes(&self) -> &[u64] {
        match self {
            ShapeOrbits::Partials(_, l) => &l.sizes,
            ShapeOrbits::Subsets(_, l) => &l.sizes,
        }
    }

    /// One-based representatives, lexicographically least in each orbit.
    pub(crate) fn rep_strings(&self) -> Vec<String> {
        match self {
            ShapeOrbits::Partials(d, l) => l.reps.iter().map(|x| d.render(x)).collect(),
            ShapeOrbits::Subsets(d, l) => l.reps.iter().map(|x| d.render(x)).collect(),
        }
    }

    #[cfg(test)]
    fn reps(&self) -> Vec<PartialPartition> {
        match self {
            ShapeOrbits::Partials(_, l) => l.reps.clone(),
            ShapeOrbits::Subsets(d, l) => l
                .reps
                .iter()
                .map(|x| PartialPartition::from_blocks(&[x[..d.k].to_vec()]).unwrap())
                .collect(),
        }
    }

    /// The orbit containing the image of orbit `i`'s representative under `h`.
    pub(crate) fn image_orbit(&self, i: usize, h: &Permutation) -> usize {
        match self {
            ShapeOrbits::Partials(d, l) => l.labels[d.index(&d.act(&l.reps[i], h))] as usize,
            ShapeOrbits::Subsets(d, l) => l.labels[d.index(&d.act(&l.reps[i], h))] as usize,
        }
    }
}

/// Explicit orbits of `g` on partitions of type `shape`, with lexicographically least
/// representatives, sizes, and stabilizer orders.
pub fn enumerate_orbits(g: &PermGroup, shape: &PartitionShape, cap: u128) -> Result<OrbitReport> {
    let orbits = ShapeOrbits::compute(g, shape, cap)?;
    let order = g.order();
    let entries: Vec<OrbitEntry> = orbits
        .rep_strings()
        .into_iter()
        .zip(orbits.sizes())
        .map(|(rep, &size)| OrbitEntry {
            rep,
            size,
            stabilizer_order: &order / size,
        })
        .collect();
    Ok(OrbitReport {
        group: g.name().to_string(),
        degree: g.degree(),
        shape: shape.to_string(),
        count: BigUint::from(entries.len()),
        method: Method::Enumeration,
        orbits: Some(entries),
        elapsed: None,
    })
}

/// Subset counts up to this bound are labelled directly.
pub const DIRECT_SUBSET_LIMIT: u64 = 10_000_000;

/// Orbits on `k`-subsets, directly when the domain is small, by the counting lemma otherwise.
pub fn subset_orbit_count(g: &PermGroup, k: usize) -> Result<BigUint> {
    let n = g.degree();
    if k > n {
        return Err(Error::InvalidInput(format!("k = {k} exceeds degree {n}")));
    }
    if k == 0 || k == n {
        return Ok(BigUint::from(1u32));
    }
    let k = k.min(n - k);
    if k <= MAX_SUPPORT && binomial(n as u64, k as u64) <= BigUint::from(DIRECT_SUBSET_LIMIT) {
        let d = SubsetDomain::new(n, k)?;
        return Ok(BigUint::from(label_orbits(&d, g.generators()).sizes.len()));
    }
    subset_orbit_count_burnside(g, k)
}

/// Whether `g` has one orbit on `k`-subsets.
pub fn is_k_homogeneous(g: &PermGroup, k: usize) -> Result<bool> {
    Ok(subset_orbit_count(g, k)? == BigUint::from(1u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build, GroupSpec};

    fn shape(n: usize, support: &[usize]) -> PartitionShape {
        PartitionShape::from_support(n, support).unwrap()
    }

    #[test]
    fn subset_ranking_round_trips() {
        let d = SubsetDomain::new(9, 4).unwrap();
        assert_eq!(d.len(), 126);
        for i in 0..d.len() {
            let x = d.item(i);
            assert!(x[..4].windows(2).all(|w| w[0] < w[1]));
            assert_eq!(d.index(&x), i);
        }
    }

    #[test]
    fn a4_on_matchings() {
        let a4 = build(&GroupSpec::alt(4)).unwrap();
        let r = enumerate_orbits(&a4, &shape(4, &[2, 2]), DEFAULT_CAP).unwrap();
        assert_eq!(r.count, BigUint::from(1u32));
        assert_eq!(r.orbits.unwrap()[0].size, 3);
    }

    #[test]
    fn m11_sizes_sum_to_total() {
        let m11 = build(&"M11".parse().unwrap()).unwrap();
        let s = shape(11, &[2, 2]);
        let r = enumerate_orbits(&m11, &s, DEFAULT_CAP).unwrap();
        let orbits = r.orbits.as_ref().unwrap();
        assert_eq!(orbits.iter().map(|o| o.size).sum::<u64>(), 990);
        for o in orbits {
            assert_eq!(7920 % o.size, 0);
        }
        assert_eq!(r.count, burnside_orbit_count(&m11, &s).unwrap());
    }

    #[test]
    fn representatives_are_least_members() {
        let g = build(&"PGL2(7)".parse().unwrap()).unwrap();
        for support in [&[4][..], &[3, 2], &[2, 2, 2]] {
            let s = shape(8, support);
            let orbits = ShapeOrbits::compute(&g, &s, DEFAULT_CAP).unwrap();
            for (i, rep) in orbits.reps().into_iter().enumerate() {
                for x in g.elements() {
                    let img = rep.act(&x);
                    assert!(img >= rep);
                    assert_eq!(orbits.image_orbit(i, &x), i);
                }
            }
        }
    }

    #[test]
    fn sym_and_trivial_groups() {
        let s7 = build(&GroupSpec::sym(7)).unwrap();
        let triv = PermGroup::trivial(7);
        for support in [&[2][..], &[3, 2], &[2, 2, 2]] {
            let s = shape(7, support);
            assert_eq!(burnside_orbit_count(&s7, &s).unwrap(), BigUint::from(1u32));
            assert_eq!(burnside_orbit_count(&triv, &s).unwrap(), s.total_count());
            assert_eq!(
                enumerate_orbits(&triv, &s, DEFAULT_CAP).unwrap().count,
                s.total_count()
            );
        }
    }

    #[test]
    fn homogeneity() {
        let m24 = build(&"M24".parse().unwrap()).unwrap();
        assert!(is_k_homogeneous(&m24, 5).unwrap());
        let d7 = build(&"D7".parse().unwrap()).unwrap();
        assert_eq!(subset_orbit_count(&d7, 2).unwrap(), BigUint::from(3u32));
        let c7 = build(&"C7".parse().unwrap()).unwrap();
        assert_eq!(
            subset_orbit_count(&c7, 2).unwrap(),
            subset_orbit_count_burnside(&c7, 2).unwrap()
        );
        let g = crate::catalog::pgl2_field_extension(16, 2).unwrap();
        assert_eq!(subset_orbit_count(&g, 4).unwrap(), BigUint::from(3u32));
        let g = crate::catalog::pgl2_field_extension(16, 4).unwrap();
        assert_eq!(subset_orbit_count(&g, 4).unwrap(), BigUint::from(2u32));
    }

    #[test]
    fn report_formats() {
        let g = build(&"PSL2(7)".parse().unwrap()).unwrap();
        let r = burnside_report(&g, &shape(8, &[4])).unwrap();
        let json = OrbitReport::render(std::slice::from_ref(&r), OutputFormat::Json);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v[0]["count"], 3);
        assert_eq!(v[0]["method"], "burnside");
        assert!(v[0].get("elapsed").is_none());
        let csv = OrbitReport::render(&[r], OutputFormat::Csv);
        assert_eq!(csv.lines().next().unwrap(), "group,degree,shape,count,method");
    }
}
