//! Arithmetic in GF(q) for prime powers q ≤ 256.
//!
//! Elements are identified by an index in `[0, q)`. For q = p^m the index is
//! the base-p encoding `c_0 + c_1 p + ... + c_{m-1} p^{m-1}` of the polynomial
//! representative `c_0 + c_1 x + ... + c_{m-1} x^{m-1}` modulo a fixed Conway
//! polynomial, so index 0 is zero, index 1 is one, and index `p` is the
//! primitive element `x`. For prime q the index arithmetic is plain integer
//! arithmetic mod q.
//!
//! All four operations are table lookups; tables are built once per field.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_FIELD_ORDER: u32 = 256;

/// Conway polynomials for every non-prime prime power up to 256,
/// coefficients listed from the constant term upwards (monic).
const CONWAY_POLYNOMIALS: &[(u32, u32, &[u8])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (5, 2, &[2, 4, 1]),
    (5, 3, &[3, 3, 0, 1]),
    (7, 2, &[3, 6, 1]),
    (11, 2, &[2, 7, 1]),
    (13, 2, &[2, 12, 1]),
];

/// An element of some GF(q), stored as its index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElem(u8);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub(crate) const fn from_index(v: u8) -> Self {
        FieldElem(v)
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.0 as u32
    }

    #[inline]
    pub(crate) fn idx(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Splits `q` into its prime factorization, smallest prime first.
fn factorize(mut q: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= q {
        let mut e = 0;
        while q.is_multiple_of(p) {
            q /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if q > 1 {
        out.push((q, 1));
    }
    out
}

fn describe_factorization(q: u32, factors: &[(u32, u32)]) -> String {
    let parts: Vec<String> = factors
        .iter()
        .map(|&(p, e)| if e == 1 { p.to_string() } else { format!("{p}^{e}") })
        .collect();
    format!("{q} = {}", parts.join(" · "))
}

/// A finite field descriptor. Immutable once built.
#[derive(Clone)]
pub struct Field {
    q: u32,
    p: u32,
    m: u32,
    modulus: Vec<u8>,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    exp: Vec<u8>,
    log: Vec<u32>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q
    }
}

impl Eq for Field {}

impl Field {
    pub fn new(q: u32) -> Result<Self> {
        if !(2..=MAX_FIELD_ORDER).contains(&q) {
            return Err(Error::FieldOrderOutOfRange(q));
        }
        let factors = factorize(q);
        if factors.len() != 1 {
            return Err(Error::NotPrimePower {
                q,
                factorization: describe_factorization(q, &factors),
            });
        }
        let (p, m) = factors[0];
        let modulus: Vec<u8> = if m == 1 {
            vec![0, 1]
        } else {
            CONWAY_POLYNOMIALS
                .iter()
                .find(|(pp, mm, _)| *pp == p && *mm == m)
                .map(|(_, _, c)| c.to_vec())
                .expect("every prime power up to 256 has a tabulated polynomial")
        };

        let qs = q as usize;
        let ps = p as usize;

        // Digit-wise addition mod p on base-p indices.
        let mut add = vec![0u8; qs * qs];
        for a in 0..qs {
            for b in 0..qs {
                let (mut x, mut y, mut pw, mut s) = (a, b, 1usize, 0usize);
                for _ in 0..m {
                    s += ((x % ps + y % ps) % ps) * pw;
                    x /= ps;
                    y /= ps;
                    pw *= ps;
                }
                add[a * qs + b] = s as u8;
            }
        }
        let mut neg = vec![0u8; qs];
        for a in 0..qs {
            neg[a] = (0..qs).find(|&b| add[a * qs + b] == 0).unwrap() as u8;
        }

        let generator = if m == 1 { smallest_primitive_root(p) } else { ps };
        let mut exp = vec![0u8; qs - 1];
        let mut log = vec![u32::MAX; qs];
        let mut cur = 1usize;
        for (i, slot) in exp.iter_mut().enumerate() {
            if log[cur] != u32::MAX {
                return Err(Error::InvalidParameters(format!(
                    "field polynomial for GF({q}) is not primitive"
                )));
            }
            *slot = cur as u8;
            log[cur] = i as u32;
            cur = if m == 1 {
                cur * generator % qs
            } else {
                times_x(cur, ps, m as usize, &modulus)
            };
        }
        if cur != 1 {
            return Err(Error::InvalidParameters(format!(
                "field polynomial for GF({q}) is not primitive"
            )));
        }

        let mut mul = vec![0u8; qs * qs];
        for a in 1..qs {
            for b in 1..qs {
                let e = (log[a] + log[b]) as usize % (qs - 1);
                mul[a * qs + b] = exp[e];
            }
        }
        let mut inv = vec![0u8; qs];
        for a in 1..qs {
            let e = (qs - 1 - log[a] as usize) % (qs - 1);
            inv[a] = exp[e];
        }

        Ok(Field { q, p, m, modulus, add, mul, neg, inv, exp, log })
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    pub fn elem(&self, value: u32) -> Result<FieldElem> {
        if value >= self.q {
            return Err(Error::ElementOutOfRange { value, q: self.q });
        }
        Ok(FieldElem(value as u8))
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.q).map(|v| FieldElem(v as u8))
    }

    /// The generator of the multiplicative group used for the log tables.
    pub fn primitive_element(&self) -> FieldElem {
        FieldElem(self.exp[1 % self.exp.len()])
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.add[a.idx() * self.q as usize + b.idx()])
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        FieldElem(self.neg[a.idx()])
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        FieldElem(self.mul[a.idx() * self.q as usize + b.idx()])
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::InverseOfZero);
        }
        Ok(FieldElem(self.inv[a.idx()]))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElem) -> Result<u32> {
        if a.is_zero() {
            return Err(Error::InverseOfZero);
        }
        let n = self.q - 1;
        let l = self.log[a.idx()];
        Ok(n / gcd(n, l))
    }

    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return FieldElem::ONE;
        }
        if a.is_zero() {
            return FieldElem::ZERO;
        }
        let n = (self.q - 1) as u64;
        let l = self.log[a.idx()] as u64;
        FieldElem(self.exp[((l * (e % n)) % n) as usize])
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn smallest_primitive_root(p: u32) -> usize {
    if p == 2 {
        return 1;
    }
    let phi = p - 1;
    let primes: Vec<u32> = factorize(phi).into_iter().map(|(f, _)| f).collect();
    (2..p)
        .find(|&g| primes.iter().all(|&f| pow_mod(g, phi / f, p) != 1))
        .expect("prime fields have primitive roots") as usize
}

fn pow_mod(b: u32, mut e: u32, m: u32) -> u32 {
    let m = m as u64;
    let mut acc = 1u64;
    let mut base = b as u64 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc as u32
}

/// Multiplies the polynomial encoded by `idx` by x modulo the monic `modulus`.
fn times_x(idx: usize, p: usize, m: usize, modulus: &[u8]) -> usize {
    let mut coeffs = vec![0usize; m + 1];
    let mut x = idx;
    for c in coeffs.iter_mut().take(m) {
        *c = x % p;
        x /= p;
    }
    coeffs.rotate_right(1);
    let top = coeffs[m];
    if top != 0 {
        for i in 0..m {
            coeffs[i] = (coeffs[i] + p * p - top * modulus[i] as usize) % p;
        }
    }
    let mut out = 0;
    let mut pw = 1;
    for &c in coeffs.iter().take(m) {
        out += c * pw;
        pw *= p;
    }
    out
}
