//! Prime-power finite fields with table-driven multiplication.

use crate::error::{Error, Result};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u32 = 1 << 16;

/// `GF(p^s)`, elements encoded as integers `Σ cᵢ pⁱ` over their polynomial coefficients.
///
/// The modulus is the lexicographically smallest monic irreducible polynomial of
/// degree `s`. Element `0` is zero and element `1` is one.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u32,
    s: u32,
    q: u32,
    /// Non-leading coefficients `c_0..c_{s-1}` of the monic modulus.
    modulus: Vec<u32>,
    primitive: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits a prime power `q` into `(p, s)`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    let f = prime_factors(q);
    if f.len() != 1 {
        return None;
    }
    let p = f[0];
    let mut s = 0;
    let mut m = q;
    while m > 1 {
        m /= p;
        s += 1;
    }
    Some((p as u32, s))
}

// Dense polynomials over GF(p), lowest coefficient first, no trailing zeros.

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let dr = r.len() - 1;
        let factor = (r[dr] * lead_inv) % p;
        let shift = dr - dm;
        for (i, &c) in m.iter().enumerate() {
            r[i + shift] = (r[i + shift] + p - (factor * c) % p) % p;
        }
        r = trim(r);
    }
    r
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

fn monic_from_code(code: u32, deg: u32, p: u32) -> Vec<u32> {
    let mut coeffs = digits(code, deg, p);
    coeffs.push(1);
    coeffs
}

fn digits(mut code: u32, len: u32, p: u32) -> Vec<u32> {
    (0..len)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}

/// Irreducibility by trial division with every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = (f.len() - 1) as u32;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d) {
            let g = monic_from_code(code, d, p);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    pub fn new(p: u32, s: u32) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidInput(format!("{p} is not prime")));
        }
        if s == 0 {
            return Err(Error::InvalidInput("extension degree must be positive".into()));
        }
        let q = (p as u64)
            .checked_pow(s)
            .filter(|&q| q <= MAX_FIELD_SIZE as u64)
            .ok_or_else(|| Error::InvalidInput(format!("{p}^{s} exceeds 2^16")))? as u32;
        let modulus_code = (0..p.pow(s))
            .find(|&code| is_irreducible(&monic_from_code(code, s, p), p))
            .expect("an irreducible polynomial exists in every degree");
        let modulus = digits(modulus_code, s, p);
        let mut field = FiniteField {
            p,
            s,
            q,
            modulus,
            primitive: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_tables();
        Ok(field)
    }

    /// `GF(q)` for a prime power `q`.
    pub fn of_order(q: u32) -> Result<Self> {
        let (p, s) =
            prime_power(q as u64).ok_or_else(|| Error::InvalidInput(format!("{q} is not a prime power")))?;
        Self::new(p, s)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let (p, s) = (self.p, self.s);
        let da = digits(a, s, p);
        let db = digits(b, s, p);
        let mut prod = vec![0u32; 2 * s as usize];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        let mut m = self.modulus.clone();
        m.push(1);
        let r = poly_rem(&prod, &m, p);
        r.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    fn build_tables(&mut self) {
        let order = (self.q - 1) as u64;
        let factors = prime_factors(order);
        let slow_pow = |f: &Self, mut b: u32, mut e: u64| {
            let mut r = 1u32;
            while e > 0 {
                if e & 1 == 1 {
                    r = f.slow_mul(r, b);
                }
                b = f.slow_mul(b, b);
                e >>= 1;
            }
            r
        };
        let g = (1..self.q)
            .find(|&g| factors.iter().all(|&r| slow_pow(self, g, order / r) != 1))
            .expect("multiplicative group is cyclic");
        self.primitive = g;
        self.exp = Vec::with_capacity(self.q as usize - 1);
        self.log = vec![u32::MAX; self.q as usize];
        let mut x = 1u32;
        for k in 0..self.q - 1 {
            self.exp.push(x);
            self.log[x as usize] = k;
            x = self.slow_mul(x, g);
        }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.s
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    /// Monic modulus coefficients, lowest first, including the leading 1.
    pub fn modulus(&self) -> Vec<u32> {
        let mut m = self.modulus.clone();
        m.push(1);
        m
    }

    /// The least generator of the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        self.primitive
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.q
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.s {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.s {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let k = (self.log[a as usize] + self.log[b as usize]) % (self.q - 1);
        self.exp[k as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let k = (self.q - 1 - self.log[a as usize]) % (self.q - 1);
        Some(self.exp[k as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Option<u32> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let k = (self.log[a as usize] as u64 * e) % (self.q as u64 - 1);
        self.exp[k as usize]
    }

    /// `x ↦ x^p`.
    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p as u64)
    }

    /// `x ↦ x^(p^k)`.
    pub fn frobenius_power(&self, a: u32, k: u32) -> u32 {
        (0..k).fold(a, |x, _| self.frobenius(x))
    }

    /// Whether `a` is a nonzero square.
    pub fn is_square(&self, a: u32) -> bool {
        if a == 0 {
            return false;
        }
        self.p == 2 || self.log[a as usize].is_multiple_of(2)
    }

    /// Discrete logarithm to the primitive element.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn from_int(&self, n: i64) -> u32 {
        (n.rem_euclid(self.p as i64)) as u32
    }
}
