//! The group catalog: finite fields, projective and affine constructions, sporadic generator
//! data, normalizers in the symmetric group, and cross ratios.

mod data;
pub mod field;
pub mod projective;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::permcore::{PermGroup, Permutation};

pub use data::GeneratorData;
pub use field::FiniteField;
pub use projective::{affine_field_map, agl_d2_generators, ProjectiveLine};

/// Group families known to the catalog.
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Sym,
    Alt,
    Cyclic,
    Dihedral,
    AGL1,
    AGammaL1,
    PSL2,
    PGL2,
    PSigmaL2,
    PXL2,
    PGammaL2,
    AGLd2,
    Mathieu11,
    Mathieu11on12,
    Mathieu12,
    Mathieu22,
    Mathieu22c2,
    Mathieu23,
    Mathieu24,
    TwoFour_A7,
}

impl Family {
    /// Record name in the generator data file, for data-backed families.
    pub fn data_name(self) -> Option<&'static str> {
        use Family::*;
        Some(match self {
            Mathieu11 => "Mathieu11",
            Mathieu11on12 => "Mathieu11on12",
            Mathieu12 => "Mathieu12",
            Mathieu22 => "Mathieu22",
            Mathieu22c2 => "Mathieu22c2",
            Mathieu23 => "Mathieu23",
            Mathieu24 => "Mathieu24",
            TwoFour_A7 => "TwoFour_A7",
            _ => return None,
        })
    }

    fn sporadic(self) -> Option<(usize, u64)> {
        use Family::*;
        Some(match self {
            Mathieu11 => (11, 7920),
            Mathieu11on12 => (12, 7920),
            Mathieu12 => (12, 95040),
            Mathieu22 => (22, 443520),
            Mathieu22c2 => (22, 887040),
            Mathieu23 => (23, 10200960),
            Mathieu24 => (24, 244823040),
            TwoFour_A7 => (16, 40320),
            _ => return None,
        })
    }

    fn is_projective(self) -> bool {
        matches!(
            self,
            Family::PSL2 | Family::PGL2 | Family::PSigmaL2 | Family::PXL2 | Family::PGammaL2
        )
    }
}

/// A family together with its parameter: `n` for `Sym`/`Alt`, `p` for `Cyclic`/`Dihedral`,
/// `q` for the field families, `d` for `AGLd2`, unused for sporadic groups.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    family: Family,
    param: u32,
}

impl GroupSpec {
    pub fn new(family: Family, param: u32) -> Result<Self> {
        use Family::*;
        let bad = |why: String| Err(Error::Inadmissible(why));
        let q_ok = |q: u32| (2..=1 << 16).contains(&q) && field::prime_power(q as u64).is_some();
        match family {
            Sym | Alt if param == 0 || param as usize > crate::permcore::MAX_DEGREE => {
                return bad(format!("degree {param}"))
            }
            Cyclic if !field::is_prime(param as u64) => {
                return bad(format!("cyclic degree {param} is not prime"))
            }
            Dihedral if param < 3 || !field::is_prime(param as u64) => {
                return bad(format!("dihedral degree {param} is not an odd prime"))
            }
            AGL1 | AGammaL1 | PSL2 | PGL2 | PSigmaL2 | PGammaL2 if !q_ok(param) => {
                return bad(format!("{param} is not a prime power below 2^16"))
            }
            PXL2 => {
                let odd_square = q_ok(param)
                    && param % 2 == 1
                    && field::prime_power(param as u64).is_some_and(|(_, s)| s % 2 == 0);
                if !odd_square {
                    return bad(format!("PXL(2,q) needs q an odd square, got {param}"));
                }
            }
            AGLd2 if param == 0 || param > 10 => return bad(format!("AGL({param},2)")),
            _ => {}
        }
        let param = if family.sporadic().is_some() { 0 } else { param };
        Ok(GroupSpec { family, param })
    }

    pub fn sym(n: u32) -> Self {
        Self::new(Family::Sym, n).expect("valid degree")
    }

    pub fn alt(n: u32) -> Self {
        Self::new(Family::Alt, n).expect("valid degree")
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn param(&self) -> u32 {
        self.param
    }

    pub fn degree(&self) -> usize {
        use Family::*;
        match self.family {
            Sym | Alt | Cyclic | Dihedral | AGL1 | AGammaL1 => self.param as usize,
            PSL2 | PGL2 | PSigmaL2 | PXL2 | PGammaL2 => self.param as usize + 1,
            AGLd2 => 1 << self.param,
            f => f.sporadic().unwrap().0,
        }
    }

    /// The family's order formula.
    pub fn expected_order(&self) -> BigUint {
        use Family::*;
        let x = self.param as u64;
        let s = || field::prime_power(x).map_or(1, |(_, s)| s as u64);
        let pgl = || BigUint::from(x * (x * x - 1));
        let psl = || pgl() / BigUint::from(if x % 2 == 1 { 2u32 } else { 1 });
        match self.family {
            Sym => (1..=x).map(BigUint::from).product(),
            Alt => {
                let f: BigUint = (1..=x).map(BigUint::from).product();
                if x >= 2 {
                    f / 2u32
                } else {
                    f
                }
            }
            Cyclic => BigUint::from(x),
            Dihedral => BigUint::from(2 * x),
            AGL1 => BigUint::from(x * (x - 1)),
            AGammaL1 => BigUint::from(x * (x - 1) * s()),
            PSL2 => psl(),
            PGL2 => pgl(),
            PSigmaL2 | PXL2 => psl() * s(),
            PGammaL2 => pgl() * s(),
            AGLd2 => {
                let n = 1u64 << x;
                (0..x).fold(BigUint::from(n), |acc, i| acc * (n - (1u64 << i)))
            }
            f => BigUint::from(f.sporadic().unwrap().1),
        }
    }

    /// The spec whose group is `N_{S_n}(G)` in the catalog labeling.
    pub fn normalizer_spec(&self) -> GroupSpec {
        use Family::*;
        let (family, param) = match self.family {
            Alt => (Sym, self.param),
            Cyclic | Dihedral => (AGL1, self.param),
            AGL1 => (AGammaL1, self.param),
            PSL2 | PGL2 | PSigmaL2 | PXL2 => (PGammaL2, self.param),
            Mathieu22 => (Mathieu22c2, 0),
            _ => return *self,
        };
        GroupSpec { family, param }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Family::*;
        let x = self.param;
        match self.family {
            Sym => write!(f, "S{x}"),
            Alt => write!(f, "A{x}"),
            Cyclic => write!(f, "C{x}"),
            Dihedral => write!(f, "D{x}"),
            AGL1 => write!(f, "AGL(1,{x})"),
            AGammaL1 => write!(f, "AGammaL(1,{x})"),
            PSL2 => write!(f, "PSL(2,{x})"),
            PGL2 => write!(f, "PGL(2,{x})"),
            PSigmaL2 => write!(f, "PSigmaL(2,{x})"),
            PXL2 if x == 9 => write!(f, "M10"),
            PXL2 => write!(f, "PXL(2,{x})"),
            PGammaL2 => write!(f, "PGammaL(2,{x})"),
            AGLd2 => write!(f, "AGL({x},2)"),
            Mathieu11 => write!(f, "M11"),
            Mathieu11on12 => write!(f, "M11@12"),
            Mathieu12 => write!(f, "M12"),
            Mathieu22 => write!(f, "M22"),
            Mathieu22c2 => write!(f, "M22:2"),
            Mathieu23 => write!(f, "M23"),
            Mathieu24 => write!(f, "M24"),
            TwoFour_A7 => write!(f, "2^4:A7"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Accepts the display names plus common variants: `PSL2(8)`, `PSL(2,8)`, `PΓL(2,32)`,
    /// `AGL1(8)`, `AGL(3,2)`, `M11on12`, `M22.2`, `2^4.A7`, `Sym(6)`, `Alt(6)`.
    fn from_str(s: &str) -> Result<Self> {
        use Family::*;
        let t: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .replace('Γ', "GAMMA")
            .replace('Σ', "SIGMA")
            .to_uppercase();
        let sporadic = match t.as_str() {
            "M11" => Some(Mathieu11),
            "M11@12" | "M11ON12" | "M11(12)" => Some(Mathieu11on12),
            "M12" => Some(Mathieu12),
            "M22" => Some(Mathieu22),
            "M22:2" | "M22.2" => Some(Mathieu22c2),
            "M23" => Some(Mathieu23),
            "M24" => Some(Mathieu24),
            "2^4:A7" | "2^4.A7" | "2^4A7" => Some(TwoFour_A7),
            "M10" => return GroupSpec::new(PXL2, 9),
            _ => None,
        };
        if let Some(f) = sporadic {
            return GroupSpec::new(f, 0);
        }
        let bad = || Error::InvalidInput(format!("unknown group `{s}`"));
        let split = t
            .find('(')
            .or_else(|| t.find(|c: char| c.is_ascii_digit()))
            .ok_or_else(bad)?;
        let (head, rest) = t.split_at(split);
        let args: Vec<u32> = rest
            .trim_start_matches('(')
            .trim_end_matches(')')
            .split(',')
            .map(|a| a.parse::<u32>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let family = match (head, args.as_slice()) {
            ("S" | "SYM", [_]) => Sym,
            ("A" | "ALT", [_]) => Alt,
            ("C" | "CYCLIC", [_]) => Cyclic,
            ("D" | "DIHEDRAL", [_]) => Dihedral,
            ("AGL1", [_]) | ("AGL", [1, _]) => AGL1,
            ("AGAMMAL1", [_]) | ("AGAMMAL", [1, _]) => AGammaL1,
            ("PSL2", [_]) | ("PSL", [2, _]) => PSL2,
            ("PGL2", [_]) | ("PGL", [2, _]) => PGL2,
            ("PSIGMAL2", [_]) | ("PSIGMAL", [2, _]) => PSigmaL2,
            ("PXL2", [_]) | ("PXL", [2, _]) => PXL2,
            ("PGAMMAL2", [_]) | ("PGAMMAL", [2, _]) => PGammaL2,
            ("AGL", [_, 2]) => AGLd2,
            _ => return Err(bad()),
        };
        let param = *args.last().unwrap();
        let param = if family == AGLd2 { args[0] } else { param };
        GroupSpec::new(family, param)
    }
}

fn sym_generators(n: usize) -> Vec<Permutation> {
    if n < 2 {
        return Vec::new();
    }
    let long = Permutation::from_images0((0..n).map(|i| ((i + 1) % n) as u16).collect()).unwrap();
    if n == 2 {
        return vec![long];
    }
    let swap = Permutation::from_cycles(n, &[&[1, 2]]).unwrap();
    vec![swap, long]
}

fn alt_generators(n: usize) -> Vec<Permutation> {
    if n < 3 {
        return Vec::new();
    }
    let three = Permutation::from_cycles(n, &[&[1, 2, 3]]).unwrap();
    if n == 3 {
        return vec![three];
    }
    let cycle: Vec<usize> = if n % 2 == 1 {
        (1..=n).collect()
    } else {
        (2..=n).collect()
    };
    vec![three, Permutation::from_cycles(n, &[&cycle]).unwrap()]
}

fn projective_generators(family: Family, q: u32) -> Result<Vec<Permutation>> {
    let f = FiniteField::of_order(q)?;
    let w = f.primitive_element();
    let line = ProjectiveLine::new(f);
    let f = line.field();
    let mut gens = vec![
        line.mobius(1, 1, 0, 1),
        line.mobius(f.mul(w, w), 0, 0, 1),
        line.mobius(0, f.neg(1), 1, 0),
    ];
    let diagonal = || line.mobius(w, 0, 0, 1);
    let frobenius = || line.semilinear_map(1, 0, 0, 1, 1);
    match family {
        Family::PSL2 => {}
        Family::PGL2 => gens.push(diagonal()),
        Family::PSigmaL2 => gens.push(frobenius()),
        Family::PXL2 => gens.push(line.semilinear_map(w, 0, 0, 1, 1)),
        Family::PGammaL2 => {
            gens.push(diagonal());
            gens.push(frobenius());
        }
        _ => unreachable!(),
    }
    Ok(gens)
}

fn generators(spec: &GroupSpec, data: &GeneratorData) -> Result<Vec<Permutation>> {
    use Family::*;
    let x = spec.param;
    Ok(match spec.family {
        Sym => sym_generators(x as usize),
        Alt => alt_generators(x as usize),
        Cyclic | Dihedral | AGL1 | AGammaL1 => {
            let f = FiniteField::of_order(x)?;
            let mut gens = vec![affine_field_map(&f, 1, 1, 0)];
            match spec.family {
                Dihedral => gens.push(affine_field_map(&f, f.neg(1), 0, 0)),
                AGL1 => gens.push(affine_field_map(&f, f.primitive_element(), 0, 0)),
                AGammaL1 => {
                    gens.push(affine_field_map(&f, f.primitive_element(), 0, 0));
                    gens.push(affine_field_map(&f, 1, 0, 1));
                }
                _ => {}
            }
            gens
        }
        f if f.is_projective() => projective_generators(f, x)?,
        AGLd2 => agl_d2_generators(x),
        f => data.generators(f.data_name().unwrap(), spec.degree())?,
    })
}

/// Builds the group of `spec` and checks its order against the family formula.
pub fn build(spec: &GroupSpec) -> Result<PermGroup> {
    build_with(spec, GeneratorData::bundled())
}

/// As [`build`], taking sporadic generators from `data`.
pub fn build_with(spec: &GroupSpec, data: &GeneratorData) -> Result<PermGroup> {
    let gens = generators(spec, data)?;
    let group = PermGroup::try_new(spec.to_string(), spec.degree(), gens)?;
    let (got, want) = (group.order(), spec.expected_order());
    if got != want {
        return Err(Error::Integrity(format!(
            "{spec}: chain order {got}, expected {want}"
        )));
    }
    Ok(group)
}

/// `PGL(2,q)` extended by the field automorphism group of order `e` (`e` divides `s`).
pub fn pgl2_field_extension(q: u32, e: u32) -> Result<PermGroup> {
    let f = FiniteField::of_order(q)?;
    let s = f.degree();
    if e == 0 || s % e != 0 {
        return Err(Error::Inadmissible(format!("{e} does not divide {s}")));
    }
    let mut gens = projective_generators(Family::PGL2, q)?;
    let line = ProjectiveLine::new(f);
    if e > 1 {
        gens.push(line.semilinear_map(1, 0, 0, 1, s / e));
    }
    let name = if e == 1 {
        format!("PGL(2,{q})")
    } else {
        format!("PGL(2,{q}):{e}")
    };
    let g = PermGroup::new(name, q as usize + 1, gens);
    let want = q as u128 * (q as u128 * q as u128 - 1) * e as u128;
    if g.order_u128() != want {
        return Err(Error::Integrity(format!("{}: wrong order", g.name())));
    }
    Ok(g)
}

/// `N_{S_n}(G)` built from the catalog, with containment and normalization checked.
pub fn normalizer_in_sym(spec: &GroupSpec) -> Result<PermGroup> {
    normalizer_in_sym_with(spec, GeneratorData::bundled())
}

/// As [`normalizer_in_sym`], taking sporadic generators from `data`.
pub fn normalizer_in_sym_with(spec: &GroupSpec, data: &GeneratorData) -> Result<PermGroup> {
    let g = build_with(spec, data)?;
    let n = build_with(&spec.normalizer_spec(), data)?;
    if !g.is_normal_in(&n) {
        return Err(Error::Integrity(format!(
            "{} does not normalize {spec}",
            n.name()
        )));
    }
    Ok(n)
}

/// Largest degree accepted by [`brute_normalizer`].
pub const BRUTE_NORMALIZER_MAX_DEGREE: usize = 9;

/// `N_{S_n}(G)` by scanning every element of `S_n`.
pub fn brute_normalizer(g: &PermGroup) -> Result<PermGroup> {
    let n = g.degree();
    if n > BRUTE_NORMALIZER_MAX_DEGREE {
        return Err(Error::Unsupported(format!(
            "brute-force normalizer refused at degree {n}"
        )));
    }
    let mut gens: Vec<Permutation> = g.generators().to_vec();
    let mut current = PermGroup::new("N", n, gens.clone());
    let mut images: Vec<u16> = (0..n as u16).collect();
    loop {
        let x = Permutation::from_images0(images.clone()).unwrap();
        if !current.has(&x) && g.is_normalized_by(&x) {
            gens.push(x);
            current = PermGroup::new("N", n, gens.clone());
        }
        if !next_permutation(&mut images) {
            break;
        }
    }
    Ok(current.with_name(format!("N({})", g.name())))
}

pub(crate) fn next_permutation(v: &mut [u16]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// The images of `z` under the six maps permuting cross ratios of a 4-set.
pub fn cross_ratio_class(field: &FiniteField, z: u32) -> Result<BTreeSet<u32>> {
    if z <= 1 || z >= field.order() {
        return Err(Error::InvalidInput(format!(
            "cross ratio {z} must lie outside {{0,1}}"
        )));
    }
    let f = field;
    let one_minus = |x: u32| f.sub(1, x);
    let inv = |x: u32| f.inv(x).unwrap();
    Ok([
        z,
        inv(z),
        one_minus(z),
        inv(one_minus(z)),
        f.div(z, f.sub(z, 1)).unwrap(),
        f.div(f.sub(z, 1), z).unwrap(),
    ]
    .into_iter()
    .collect())
}

/// Number of cross-ratio classes in `GF(q) \ {0,1}`, i.e. `PGL(2,q)`-orbits on 4-sets.
pub fn pgl2_four_subset_orbit_count(q: u32) -> Result<u64> {
    let f = FiniteField::of_order(q)?;
    let mut seen = vec![false; q as usize];
    let mut classes = 0;
    for z in 2..q {
        if !seen[z as usize] {
            classes += 1;
            for y in cross_ratio_class(&f, z)? {
                seen[y as usize] = true;
            }
        }
    }
    Ok(classes)
}

/// The groups the catalog is exercised on: every group appearing in the reproduced tables
/// plus small members of each family.
pub fn roster() -> Vec<GroupSpec> {
    use Family::*;
    let mut v = Vec::new();
    let mut push = |f: Family, x: u32| v.push(GroupSpec::new(f, x).unwrap());
    for n in [4, 5, 6, 7, 8] {
        push(Sym, n);
        push(Alt, n);
    }
    for p in [5, 7] {
        push(Cyclic, p);
        push(Dihedral, p);
        push(AGL1, p);
    }
    push(AGL1, 8);
    push(AGammaL1, 8);
    push(AGL1, 9);
    push(AGammaL1, 9);
    for q in [4, 5, 7, 8] {
        push(PSL2, q);
        push(PGL2, q);
        push(PGammaL2, q);
    }
    push(PSigmaL2, 8);
    for f in [PSL2, PGL2, PSigmaL2, PXL2, PGammaL2] {
        push(f, 9);
    }
    push(PSL2, 11);
    push(PSL2, 16);
    push(PGammaL2, 16);
    push(PXL2, 25);
    push(PGammaL2, 32);
    for d in [2, 3, 4, 5] {
        push(AGLd2, d);
    }
    for f in [
        Mathieu11,
        Mathieu11on12,
        Mathieu12,
        TwoFour_A7,
        Mathieu22,
        Mathieu22c2,
        Mathieu23,
        Mathieu24,
    ] {
        push(f, 0);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_and_display_round_trip() {
        for s in roster() {
            assert_eq!(spec(&s.to_string()), s);
        }
        assert_eq!(spec("PSL2(8)"), spec("PSL(2,8)"));
        assert_eq!(spec("PΓL(2,32)"), spec("PGammaL2(32)"));
        assert_eq!(spec("M10"), GroupSpec::new(Family::PXL2, 9).unwrap());
        assert_eq!(spec("AGL(3,2)").degree(), 8);
        assert_eq!(spec("AGL1(8)").degree(), 8);
        assert!("PXL2(27)".parse::<GroupSpec>().is_err());
        assert!("PXL2(16)".parse::<GroupSpec>().is_err());
        assert!("PSL2(6)".parse::<GroupSpec>().is_err());
        assert!("Q8".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn every_roster_group_builds_with_its_order() {
        for s in roster() {
            let g = build(&s).unwrap();
            assert_eq!(g.degree(), s.degree(), "{s}");
            assert_eq!(g.order(), s.expected_order(), "{s}");
        }
    }

    #[test]
    fn selected_orders() {
        assert_eq!(build(&spec("PSL2(8)")).unwrap().order_u128(), 504);
        assert_eq!(build(&spec("M24")).unwrap().order_u128(), 244_823_040);
        assert_eq!(build(&spec("AGL(3,2)")).unwrap().order_u128(), 1344);
        assert_eq!(build(&spec("PGammaL2(16)")).unwrap().order_u128(), 16_320);
    }

    #[test]
    fn m24_order_from_two_builds() {
        let data = GeneratorData::bundled();
        let gens = data.generators("Mathieu24", 24).unwrap();
        let a = crate::permcore::StabilizerChain::build_with(24, &gens, &[], 1);
        let b = crate::permcore::StabilizerChain::build_with(24, &gens, &[23, 22, 21], 99);
        assert_eq!(a.order_u128(), b.order_u128());
        // |M24| = 2^10 3^3 5 7 11 23
        assert_eq!(a.order_u128(), 1024 * 27 * 5 * 7 * 11 * 23);
    }

    #[test]
    fn pxl_is_neither_pgl_nor_psigmal() {
        let m10 = build(&spec("M10")).unwrap();
        assert_eq!(m10.order_u128(), 720);
        let pgl = build(&spec("PGL2(9)")).unwrap();
        let psigma = build(&spec("PSigmaL2(9)")).unwrap();
        assert!(!m10.is_subgroup_of(&pgl));
        assert!(!m10.is_subgroup_of(&psigma));
        for q in [9, 25, 49] {
            let g = build(&GroupSpec::new(Family::PXL2, q).unwrap()).unwrap();
            let line = ProjectiveLine::new(FiniteField::of_order(q).unwrap());
            let w = line.field().primitive_element();
            let diagonal = line.mobius(w, 0, 0, 1);
            let frobenius = line.semilinear_map(1, 0, 0, 1, 1);
            assert!(!g.has(&diagonal));
            assert!(!g.has(&frobenius));
            assert!(g.has(&diagonal.mul(&frobenius)));
        }
    }

    #[test]
    fn mathieu_transitivity() {
        for (name, k) in [("M11", 4), ("M12", 5), ("M22", 3), ("M23", 4), ("M24", 5)] {
            let g = build(&spec(name)).unwrap();
            let chain = g.chain();
            let lens = chain.transversal_lengths();
            let n = g.degree();
            for (i, len) in lens.iter().take(k).enumerate() {
                assert_eq!(*len, n - i, "{name} level {i}");
            }
        }
    }

    #[test]
    fn normalizers_from_the_catalog() {
        let m22 = build(&spec("M22")).unwrap();
        let n = normalizer_in_sym(&spec("M22")).unwrap();
        assert_eq!(n.order_u128(), 2 * m22.order_u128());
        let m24 = normalizer_in_sym(&spec("M24")).unwrap();
        assert_eq!(m24.order_u128(), 244_823_040);
        let n16 = normalizer_in_sym(&spec("PSL2(16)")).unwrap();
        assert_eq!(n16.order_u128(), 16_320);
        for s in roster() {
            normalizer_in_sym(&s).unwrap();
        }
    }

    #[test]
    fn brute_normalizer_small_cases() {
        let a4 = build(&GroupSpec::alt(4)).unwrap();
        assert_eq!(brute_normalizer(&a4).unwrap().order_u128(), 24);
        let agl = build(&spec("AGL1(8)")).unwrap();
        assert_eq!(brute_normalizer(&agl).unwrap().order_u128(), 168);
        let s10 = build(&GroupSpec::sym(10)).unwrap();
        assert!(matches!(brute_normalizer(&s10), Err(Error::Unsupported(_))));
    }

    #[test]
    fn next_permutation_counts() {
        let mut v: Vec<u16> = (0..5).collect();
        let mut count = 1;
        while next_permutation(&mut v) {
            count += 1;
        }
        assert_eq!(count, 120);
    }

    #[test]
    fn cross_ratio_classes_are_closed() {
        for q in [5, 7, 8, 9, 16, 25, 27, 32] {
            let f = FiniteField::of_order(q).unwrap();
            for z in 2..q {
                let class = cross_ratio_class(&f, z).unwrap();
                assert_eq!(6 % class.len(), 0);
                for &y in &class {
                    assert_eq!(cross_ratio_class(&f, y).unwrap(), class);
                }
            }
        }
        let f = FiniteField::of_order(7).unwrap();
        assert!(cross_ratio_class(&f, 0).is_err());
        assert!(cross_ratio_class(&f, 1).is_err());
    }

    #[test]
    fn sixth_root_class_is_small() {
        for q in [7, 13, 16, 19, 25] {
            let f = FiniteField::of_order(q).unwrap();
            let z = (2..q)
                .find(|&z| f.mul(z, z) == f.sub(z, 1))
                .expect("z^2 = z - 1 has a root");
            assert!(cross_ratio_class(&f, z).unwrap().len() < 6);
        }
    }

    #[test]
    fn four_set_orbit_counts() {
        assert_eq!(pgl2_four_subset_orbit_count(8).unwrap(), 1);
        assert_eq!(pgl2_four_subset_orbit_count(16).unwrap(), 3);
        assert_eq!(pgl2_four_subset_orbit_count(5).unwrap(), 1);
    }

    #[test]
    fn field_extensions_of_pgl_16() {
        assert_eq!(pgl2_field_extension(16, 2).unwrap().order_u128(), 8160);
        assert_eq!(pgl2_field_extension(16, 4).unwrap().order_u128(), 16_320);
        assert!(pgl2_field_extension(16, 3).is_err());
    }
}
