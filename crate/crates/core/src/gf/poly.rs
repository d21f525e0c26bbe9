use std::cmp::Ordering;

use num_bigint::BigUint;

use super::{Elem, GaloisField};
use crate::error::{Error, Result};

/// Dense polynomial, coefficients in ascending degree.
///
/// The zero polynomial has no coefficients and no degree. Polynomials order
/// by degree first, then by coefficients from the leading one down, which is
/// the ascending order of the base-`q` encoding `sum c_i q^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Elem::ONE)
    }

    pub fn constant(c: Elem) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Elem, k: usize) -> Self {
        let mut coeffs = vec![Elem::ZERO; k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(Elem::ONE, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn constant_term(&self) -> Elem {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Elem::ONE)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [Elem::ONE]
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl GaloisField {
    pub fn poly_from_ints(&self, coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| self.from_int(c)).collect())
    }

    /// `x^n + 1`.
    pub fn x_pow_plus_one(&self, n: usize) -> Poly {
        let mut coeffs = vec![Elem::ZERO; n + 1];
        coeffs[0] = Elem::ONE;
        coeffs[n] = self.add(coeffs[n], Elem::ONE);
        Poly::new(coeffs)
    }

    pub fn poly_add(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.coeffs.len().max(b.coeffs.len());
        Poly::new((0..n).map(|i| self.add(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn poly_neg(&self, a: &Poly) -> Poly {
        Poly::new(a.coeffs.iter().map(|&c| self.neg(c)).collect())
    }

    pub fn poly_sub(&self, a: &Poly, b: &Poly) -> Poly {
        let n = a.coeffs.len().max(b.coeffs.len());
        Poly::new((0..n).map(|i| self.sub(a.coeff(i), b.coeff(i))).collect())
    }

    pub fn poly_scale(&self, a: &Poly, c: Elem) -> Poly {
        Poly::new(a.coeffs.iter().map(|&x| self.mul(x, c)).collect())
    }

    /// Applies a field map to every coefficient.
    pub fn poly_map(&self, a: &Poly, f: impl Fn(Elem) -> Elem) -> Poly {
        Poly::new(a.coeffs.iter().map(|&x| f(x)).collect())
    }

    pub fn poly_mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Elem::ZERO; a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        Poly::new(out)
    }

    pub fn poly_pow(&self, a: &Poly, mut e: u64) -> Poly {
        let mut base = a.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.poly_mul(&base, &base);
            }
        }
        acc
    }

    /// `(q, r)` with `a = q b + r` and `deg r < deg b`.
    pub fn poly_divmod(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
        let db = b
            .degree()
            .ok_or_else(|| Error::domain("division by the zero polynomial"))?;
        let lead_inv = self.inv(b.coeffs[db])?;
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(), a.clone()));
        }
        let mut quot = vec![Elem::ZERO; rem.len() - db];
        for k in (db..rem.len()).rev() {
            let c = rem[k];
            if c.is_zero() {
                continue;
            }
            let t = self.mul(c, lead_inv);
            quot[k - db] = t;
            for (j, &bj) in b.coeffs.iter().enumerate() {
                rem[k - db + j] = self.sub(rem[k - db + j], self.mul(t, bj));
            }
        }
        rem.truncate(db);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn poly_rem(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        Ok(self.poly_divmod(a, b)?.1)
    }

    /// Exact quotient; fails if `b` does not divide `a`.
    pub fn poly_div_exact(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        let (q, r) = self.poly_divmod(a, b)?;
        if !r.is_zero() {
            return Err(Error::domain("polynomial does not divide"));
        }
        Ok(q)
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn poly_monic(&self, a: &Poly) -> Poly {
        match a.leading() {
            Some(c) if c != Elem::ONE => self.poly_scale(a, self.inv(c).expect("nonzero")),
            _ => a.clone(),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn poly_gcd(&self, a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.poly_rem(&a, &b).expect("b is nonzero");
            a = b;
            b = r;
        }
        self.poly_monic(&a)
    }

    pub fn poly_eval(&self, a: &Poly, x: Elem) -> Elem {
        a.coeffs
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| self.add(self.mul(acc, x), c))
    }

    pub fn poly_derivative(&self, a: &Poly) -> Poly {
        Poly::new(
            a.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul(c, self.from_int((i as u64 % self.p) as i64)))
                .collect(),
        )
    }

    /// `a^e mod m`.
    pub fn poly_pow_mod(&self, a: &Poly, e: u64, m: &Poly) -> Result<Poly> {
        self.poly_pow_mod_big(a, &BigUint::from(e), m)
    }

    pub fn poly_pow_mod_big(&self, a: &Poly, e: &BigUint, m: &Poly) -> Result<Poly> {
        let mut acc = self.poly_rem(&Poly::one(), m)?;
        let base = self.poly_rem(a, m)?;
        for i in (0..e.bits()).rev() {
            acc = self.poly_rem(&self.poly_mul(&acc, &acc), m)?;
            if e.bit(i) {
                acc = self.poly_rem(&self.poly_mul(&acc, &base), m)?;
            }
        }
        Ok(acc)
    }

    /// `f*(x) = f_0^{-1} x^k f(1/x)`: coefficients reversed, scaled by the
    /// inverse of the constant term. The result is always monic.
    pub fn reciprocal(&self, f: &Poly) -> Result<Poly> {
        let c0 = f.constant_term();
        if c0.is_zero() {
            return Err(Error::domain("reciprocal needs a nonzero constant term"));
        }
        let inv = self.inv(c0)?;
        Ok(Poly::new(
            f.coeffs.iter().rev().map(|&c| self.mul(c, inv)).collect(),
        ))
    }

    /// `f†(x) = f_0^{-p^l} x^k sum f_i^{p^l} x^{-i}` over `F_{p^{2l}}`.
    pub fn conj_reciprocal(&self, f: &Poly) -> Result<Poly> {
        let c0 = f.constant_term();
        if c0.is_zero() {
            return Err(Error::domain(
                "conjugate reciprocal needs a nonzero constant term",
            ));
        }
        let inv = self.inv(self.conjugate(c0)?)?;
        let mut coeffs = Vec::with_capacity(f.coeffs.len());
        for &c in f.coeffs.iter().rev() {
            coeffs.push(self.mul(self.conjugate(c)?, inv));
        }
        Ok(Poly::new(coeffs))
    }

    /// Ben-Or's test: `f` is irreducible iff `gcd(x^{q^i} - x, f) = 1` for
    /// every `i <= deg f / 2`.
    pub fn is_irreducible(&self, f: &Poly) -> Result<bool> {
        let n = match f.degree() {
            Some(n) if n >= 1 => n,
            _ => return Err(Error::domain("irreducibility of a constant is undefined")),
        };
        if n == 1 {
            return Ok(true);
        }
        let f = self.poly_monic(f);
        let x = Poly::x();
        let mut h = x.clone();
        for _ in 1..=n / 2 {
            h = self.poly_pow_mod(&h, self.order, &f)?;
            let g = self.poly_gcd(&self.poly_sub(&h, &x), &f);
            if !g.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First monic irreducible of the given degree in ascending encoding order.
    pub fn first_irreducible(&self, degree: usize) -> Result<Poly> {
        if degree == 0 {
            return Err(Error::domain("degree must be positive"));
        }
        let mut index: u128 = 0;
        loop {
            let mut coeffs = Vec::with_capacity(degree + 1);
            let mut rest = index;
            for _ in 0..degree {
                coeffs.push(Elem((rest % self.order as u128) as u64));
                rest /= self.order as u128;
            }
            if rest != 0 {
                return Err(Error::Internal(format!(
                    "no irreducible polynomial of degree {degree}"
                )));
            }
            coeffs.push(Elem::ONE);
            let f = Poly::new(coeffs);
            if self.is_irreducible(&f)? {
                return Ok(f);
            }
            index += 1;
        }
    }

    /// Text form: ascending coefficients, `[3,1]` for `x + 3` over a prime
    /// field; over extensions each coefficient is its coordinate vector.
    pub fn render_poly(&self, f: &Poly) -> String {
        let parts: Vec<String> = f.coeffs.iter().map(|&c| self.render_elem(c)).collect();
        format!("[{}]", parts.join(","))
    }

    pub fn render_elem(&self, c: Elem) -> String {
        if self.degree == 1 {
            c.0.to_string()
        } else {
            let coords: Vec<String> = self.coords(c).iter().map(u64::to_string).collect();
            format!("[{}]", coords.join(","))
        }
    }
}
