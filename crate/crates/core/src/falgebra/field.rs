//! Table-driven arithmetic in GF(p^e).
//!
//! Elements are encoded as integers `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`
//! where `c_i` is the coefficient of `x^i` in the polynomial representative
//! modulo the defining polynomial. Zero encodes as 0 and one as 1.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field order for which addition and multiplication tables are built.
pub const MAX_FIELD_ORDER: u32 = 1024;

/// An element of a [`Field`]. Only meaningful together with its field.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fe(pub u16);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Tables {
    p: u32,
    e: u32,
    q: u32,
    /// Coefficients `c_0..c_e` of the monic defining polynomial.
    modulus: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

/// The finite field GF(p^e). Cloning is cheap.
#[derive(Clone)]
pub struct Field(Arc<Tables>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.p == other.0.p && self.0.e == other.0.e && self.0.modulus == other.0.modulus
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.0.p, self.0.e)
    }
}

pub fn is_prime(n: u32) -> bool {
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

/// Digits of `x` in base `p`, least significant first, padded to `len`.
fn digits(mut x: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = x % p;
        x /= p;
    }
    out
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Multiplies two polynomials over GF(p) and reduces modulo the monic `modulus`.
fn polymulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for k in (e..prod.len()).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        for (i, &m) in modulus.iter().enumerate() {
            let idx = k - e + i;
            prod[idx] = (prod[idx] + (p - c) * m % p) % p;
        }
    }
    prod.truncate(e);
    prod.resize(e, 0);
    prod
}

/// True when the monic polynomial (coefficients low to high) has no monic
/// factor of degree between 1 and deg/2 over GF(p).
fn is_irreducible_prime_field(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut div = digits(low, p, d);
            div.push(1);
            if poly_divides(&div, poly, p) {
                return false;
            }
        }
    }
    true
}

fn poly_divides(div: &[u32], poly: &[u32], p: u32) -> bool {
    let mut rem = poly.to_vec();
    let dd = div.len() - 1;
    while rem.len() > dd {
        let lead = *rem.last().unwrap();
        let shift = rem.len() - 1 - dd;
        if lead != 0 {
            for (i, &c) in div.iter().enumerate() {
                rem[shift + i] = (rem[shift + i] + (p - lead) * c % p) % p;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c == 0)
}

impl Field {
    /// Builds GF(p^e) using the first monic irreducible polynomial of degree
    /// `e` when the lower coefficients are read as a base-p integer.
    pub fn new(p: u32, e: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidInput("extension degree must be at least 1".into()));
        }
        let q = p.checked_pow(e).filter(|&q| q <= MAX_FIELD_ORDER).ok_or(Error::FieldTooLarge { p, e })?;
        let e_us = e as usize;
        let modulus = (0..p.pow(e))
            .map(|low| {
                let mut m = digits(low, p, e_us);
                m.push(1);
                m
            })
            .find(|m| is_irreducible_prime_field(m, p))
            .expect("an irreducible polynomial of every degree exists");

        let qs = q as usize;
        let mut add = vec![0u16; qs * qs];
        let mut mul = vec![0u16; qs * qs];
        let all: Vec<Vec<u32>> = (0..q).map(|x| digits(x, p, e_us)).collect();
        for a in 0..qs {
            for b in a..qs {
                let s: Vec<u32> = all[a].iter().zip(&all[b]).map(|(x, y)| (x + y) % p).collect();
                let s = undigits(&s, p) as u16;
                add[a * qs + b] = s;
                add[b * qs + a] = s;
                let m = undigits(&polymulmod(&all[a], &all[b], &modulus, p), p) as u16;
                mul[a * qs + b] = m;
                mul[b * qs + a] = m;
            }
        }
        let mut neg = vec![0u16; qs];
        let mut inv = vec![0u16; qs];
        for a in 0..qs {
            neg[a] = (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as u16;
            if a != 0 {
                inv[a] = (1..qs).find(|&b| mul[a * qs + b] == 1).unwrap() as u16;
            }
        }
        Ok(Field(Arc::new(Tables { p, e, q, modulus, add, mul, neg, inv })))
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.e
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Defining polynomial, coefficients low to high (monic).
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    #[inline]
    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    #[inline]
    pub fn one(&self) -> Fe {
        Fe::ONE
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        Fe(self.0.add[a.0 as usize * self.0.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        Fe(self.0.mul[a.0 as usize * self.0.q as usize + b.0 as usize])
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        Fe(self.0.neg[a.0 as usize])
    }

    /// Multiplicative inverse. Panics on zero.
    #[inline]
    pub fn inv(&self, a: Fe) -> Fe {
        assert!(!a.is_zero(), "inverse of zero");
        Fe(self.0.inv[a.0 as usize])
    }

    #[inline]
    pub fn div(&self, a: Fe, b: Fe) -> Fe {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Fe, mut n: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fe {
        let p = self.0.p as i64;
        Fe(n.rem_euclid(p) as u16)
    }

    /// The element with the given integer encoding.
    pub fn element(&self, code: u32) -> Fe {
        assert!(code < self.0.q, "element code out of range");
        Fe(code as u16)
    }

    /// Smallest element (by encoding) generating the multiplicative group.
    pub fn primitive_element(&self) -> Fe {
        let q = self.0.q as u64;
        (1..self.0.q).map(|c| Fe(c as u16)).find(|&a| multiplicative_order(self, a) == q - 1).unwrap()
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.0.q).map(|c| Fe(c as u16))
    }
}

fn multiplicative_order(f: &Field, a: Fe) -> u64 {
    let mut x = a;
    let mut k = 1;
    while x != Fe::ONE {
        x = f.mul(x, a);
        k += 1;
    }
    k
}
