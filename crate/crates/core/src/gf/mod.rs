//! Finite fields `F_{p^l}` for odd `p`, and dense polynomials over them.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{l-1} p^{l-1}`
//! where `c_i` are its coordinates in the basis `1, t, ..., t^{l-1}` and `t`
//! is a root of the field's modulus. The modulus is the first monic
//! irreducible of degree `l` in ascending order of that same encoding, so a
//! given `(p, l)` always produces identical encodings.

mod ext;
mod poly;

pub use ext::{ExtElem, ExtensionField};
pub use poly::Poly;

use std::fmt;

use crate::arith::{factorize, is_prime};
use crate::error::{Error, Result};

/// Largest coordinate count supported (`3^40 > 2^63`).
const MAX_DEGREE: usize = 40;

/// Fields up to this size get log/antilog tables.
const TABLE_LIMIT: u64 = 1 << 20;

/// An element of a [`GaloisField`], by its base-`p` coordinate encoding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub u64);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn encoding(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone)]
struct Tables {
    /// `exp[i] = g^i` for `i < 2(q-1)`, doubled so products skip a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// `F_{p^l}` with its canonical modulus.
#[derive(Clone)]
pub struct GaloisField {
    p: u64,
    degree: usize,
    order: u64,
    modulus: Vec<u64>,
    tables: Option<Tables>,
}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GaloisField")
            .field("p", &self.p)
            .field("degree", &self.degree)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.modulus == other.modulus
    }
}

impl Eq for GaloisField {}

type Digits = [u64; MAX_DEGREE];

pub fn build_field(p: u64, l: u32) -> Result<GaloisField> {
    GaloisField::new(p, l)
}

impl GaloisField {
    pub fn new(p: u64, l: u32) -> Result<Self> {
        if p.is_multiple_of(2) || !is_prime(p) {
            return Err(Error::domain(format!("{p} is not an odd prime")));
        }
        if l == 0 {
            return Err(Error::domain("extension degree must be positive"));
        }
        let order = (0..l)
            .try_fold(1u64, |acc, _| acc.checked_mul(p))
            .filter(|&q| q < 1 << 63 && (l as usize) <= MAX_DEGREE)
            .ok_or_else(|| Error::domain(format!("{p}^{l} is too large")))?;
        let prime = Self::with_modulus(p, vec![0, 1]);
        let modulus = if l == 1 {
            vec![0, 1]
        } else {
            prime
                .first_irreducible(l as usize)?
                .coeffs()
                .iter()
                .map(|c| c.0)
                .collect()
        };
        let mut field = Self::with_modulus(p, modulus);
        debug_assert_eq!(field.order, order);
        if order <= TABLE_LIMIT {
            field.tables = Some(field.build_tables()?);
        }
        Ok(field)
    }

    fn with_modulus(p: u64, modulus: Vec<u64>) -> Self {
        let degree = modulus.len() - 1;
        Self {
            p,
            degree,
            order: p.pow(degree as u32),
            modulus,
            tables: None,
        }
    }

    fn build_tables(&self) -> Result<Tables> {
        let q = self.order;
        let generator = self.find_primitive()?;
        let n = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * n];
        let mut log = vec![0u32; q as usize];
        let mut x = Elem::ONE;
        for i in 0..n {
            exp[i] = x.0 as u32;
            exp[i + n] = x.0 as u32;
            log[x.0 as usize] = i as u32;
            x = self.mul_schoolbook(x, generator);
        }
        Ok(Tables { exp, log })
    }

    /// Smallest-encoding generator of the multiplicative group.
    fn find_primitive(&self) -> Result<Elem> {
        let n = self.order - 1;
        let primes: Vec<u64> = factorize(n)?.primes().collect();
        (1..self.order)
            .map(Elem)
            .find(|&g| {
                primes
                    .iter()
                    .all(|&r| self.pow_schoolbook(g, n / r) != Elem::ONE)
            })
            .ok_or_else(|| Error::Internal("no primitive element found".into()))
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// `l` in `F_{p^l}`.
    pub fn degree(&self) -> u32 {
        self.degree as u32
    }

    /// Number of elements `p^l`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Coefficients of the defining modulus, ascending; `[0, 1]` for prime fields.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order).map(Elem)
    }

    /// Element from its coordinates (missing high coordinates are zero).
    pub fn from_coords(&self, coords: &[u64]) -> Result<Elem> {
        if coords.len() > self.degree {
            return Err(Error::domain("too many coordinates for this field"));
        }
        Ok(Elem(
            coords
                .iter()
                .rev()
                .fold(0, |acc, &c| acc * self.p + c % self.p),
        ))
    }

    pub fn coords(&self, x: Elem) -> Vec<u64> {
        let d = self.digits(x);
        d[..self.degree].to_vec()
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p as i64) as u64)
    }

    pub fn contains(&self, x: Elem) -> bool {
        x.0 < self.order
    }

    fn digits(&self, x: Elem) -> Digits {
        let mut out = [0u64; MAX_DEGREE];
        let mut v = x.0;
        for slot in out.iter_mut().take(self.degree) {
            *slot = v % self.p;
            v /= self.p;
        }
        out
    }

    fn encode(&self, d: &[u64]) -> Elem {
        Elem(
            d[..self.degree]
                .iter()
                .rev()
                .fold(0, |acc, &c| acc * self.p + c),
        )
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.degree == 1 {
            return Elem((a.0 + b.0) % self.p);
        }
        let (x, y) = (self.digits(a), self.digits(b));
        let mut out = [0u64; MAX_DEGREE];
        for i in 0..self.degree {
            out[i] = (x[i] + y[i]) % self.p;
        }
        self.encode(&out)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.degree == 1 {
            return Elem((self.p - a.0) % self.p);
        }
        let x = self.digits(a);
        let mut out = [0u64; MAX_DEGREE];
        for i in 0..self.degree {
            out[i] = (self.p - x[i]) % self.p;
        }
        self.encode(&out)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let i = t.log[a.0 as usize] as usize + t.log[b.0 as usize] as usize;
                Elem(t.exp[i] as u64)
            }
            None => self.mul_schoolbook(a, b),
        }
    }

    fn mul_schoolbook(&self, a: Elem, b: Elem) -> Elem {
        let p = self.p as u128;
        if self.degree == 1 {
            return Elem((a.0 as u128 * b.0 as u128 % p) as u64);
        }
        let (x, y) = (self.digits(a), self.digits(b));
        let l = self.degree;
        let mut prod = [0u128; 2 * MAX_DEGREE];
        for i in 0..l {
            if x[i] == 0 {
                continue;
            }
            for j in 0..l {
                prod[i + j] = (prod[i + j] + x[i] as u128 * y[j] as u128) % p;
            }
        }
        for k in (l..2 * l - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for j in 0..l {
                let sub = c * self.modulus[j] as u128 % p;
                prod[k - l + j] = (prod[k - l + j] + p - sub) % p;
            }
        }
        let mut out = [0u64; MAX_DEGREE];
        for i in 0..l {
            out[i] = prod[i] as u64;
        }
        self.encode(&out)
    }

    fn pow_schoolbook(&self, mut a: Elem, mut e: u64) -> Elem {
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_schoolbook(acc, a);
            }
            a = self.mul_schoolbook(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        match &self.tables {
            Some(t) => {
                let n = (self.order - 1) as u128;
                let i = (t.log[a.0 as usize] as u128 * e as u128 % n) as usize;
                Elem(t.exp[i] as u64)
            }
            None => self.pow_schoolbook(a, e),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::domain("0 has no inverse"));
        }
        Ok(match &self.tables {
            Some(t) => {
                let n = (self.order - 1) as usize;
                Elem(t.exp[n - t.log[a.0 as usize] as usize] as u64)
            }
            None => self.pow_schoolbook(a, self.order - 2),
        })
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// The absolute Frobenius `x -> x^p`.
    pub fn frobenius(&self, a: Elem) -> Elem {
        self.pow(a, self.p)
    }

    /// `x -> x^{p^{l/2}}`, the involution fixing the half-degree subfield.
    pub fn conjugate(&self, a: Elem) -> Result<Elem> {
        if !self.degree.is_multiple_of(2) {
            return Err(Error::domain(format!(
                "conjugation needs an even-degree field, this one is F_{}^{}",
                self.p, self.degree
            )));
        }
        Ok(self.pow(a, self.p.pow(self.degree as u32 / 2)))
    }

    /// Is `a` in the subfield `F_{p^k}` (`k` dividing the degree)?
    pub fn in_subfield(&self, a: Elem, k: u32) -> bool {
        self.pow(a, self.p.pow(k)) == a
    }
}
