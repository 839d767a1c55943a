//! Point labelings for projective lines and affine spaces, and the maps acting on them.

use super::field::FiniteField;
use crate::permcore::Permutation;

/// `PG(1,q)`: field element `z` is point index `z` (zero-based), `∞` is index `q`.
#[derive(Clone, Debug)]
pub struct ProjectiveLine {
    field: FiniteField,
}

impl ProjectiveLine {
    pub fn new(field: FiniteField) -> Self {
        ProjectiveLine { field }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn size(&self) -> usize {
        self.field.order() as usize + 1
    }

    /// Zero-based index of `∞`.
    pub fn infinity(&self) -> usize {
        self.field.order() as usize
    }

    /// `z ↦ (a·φ(z) + b) / (c·φ(z) + d)` where `φ` is the `frobenius`-th power of Frobenius.
    pub fn semilinear_map(&self, a: u32, b: u32, c: u32, d: u32, frobenius: u32) -> Permutation {
        let f = &self.field;
        let det = f.sub(f.mul(a, d), f.mul(b, c));
        assert!(det != 0, "singular fractional linear map");
        let inf = self.infinity();
        let images: Vec<u16> = (0..self.size())
            .map(|z| {
                let img = if z == inf {
                    if c == 0 {
                        inf
                    } else {
                        f.div(a, c).unwrap() as usize
                    }
                } else {
                    let w = f.frobenius_power(z as u32, frobenius);
                    let num = f.add(f.mul(a, w), b);
                    let den = f.add(f.mul(c, w), d);
                    match f.div(num, den) {
                        Some(v) => v as usize,
                        None => inf,
                    }
                };
                img as u16
            })
            .collect();
        Permutation::from_images0(images).expect("fractional linear maps are bijective")
    }

    /// `z ↦ (az + b) / (cz + d)`.
    pub fn mobius(&self, a: u32, b: u32, c: u32, d: u32) -> Permutation {
        self.semilinear_map(a, b, c, d, 0)
    }
}

/// Affine maps `z ↦ a·φ(z) + b` on the `q` field elements (point index = element code).
pub fn affine_field_map(field: &FiniteField, a: u32, b: u32, frobenius: u32) -> Permutation {
    let images: Vec<u16> = field
        .elements()
        .map(|z| field.add(field.mul(a, field.frobenius_power(z, frobenius)), b) as u16)
        .collect();
    Permutation::from_images0(images).expect("affine maps with a ≠ 0 are bijective")
}

/// Generators of `AGL(d,2)` on the `2^d` vectors (point index = bit vector):
/// a transvection, a cyclic shift of the basis, and a translation.
pub fn agl_d2_generators(d: u32) -> Vec<Permutation> {
    let n = 1usize << d;
    let mask = n - 1;
    let translation = Permutation::from_images0((0..n).map(|v| (v ^ 1) as u16).collect()).unwrap();
    if d == 1 {
        return vec![translation];
    }
    let transvection =
        Permutation::from_images0((0..n).map(|v| (v ^ ((v & 1) << 1)) as u16).collect()).unwrap();
    let shift = Permutation::from_images0(
        (0..n)
            .map(|v| (((v << 1) | (v >> (d - 1))) & mask) as u16)
            .collect(),
    )
    .unwrap();
    vec![transvection, shift, translation]
}
