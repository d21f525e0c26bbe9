use num_bigint::BigUint;

use super::{Elem, GaloisField, Poly};
use crate::error::{Error, Result};

/// Element of an [`ExtensionField`]: coordinates over the base field.
pub type ExtElem = Vec<Elem>;

/// `F_{q^m} = F_q[z] / (h(z))` with `h` the first monic irreducible of
/// degree `m` over `F_q`. Used as a splitting field, so only the operations
/// needed to locate roots of unity and multiply out linear factors exist.
#[derive(Debug, Clone)]
pub struct ExtensionField<'a> {
    base: &'a GaloisField,
    modulus: Poly,
    degree: usize,
}

impl<'a> ExtensionField<'a> {
    pub fn new(base: &'a GaloisField, degree: usize) -> Result<Self> {
        let modulus = base.first_irreducible(degree)?;
        Ok(Self {
            base,
            modulus,
            degree,
        })
    }

    pub fn base(&self) -> &GaloisField {
        self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// `q^m`.
    pub fn order(&self) -> BigUint {
        BigUint::from(self.base.order()).pow(self.degree as u32)
    }

    pub fn zero(&self) -> ExtElem {
        vec![Elem::ZERO; self.degree]
    }

    pub fn one(&self) -> ExtElem {
        self.embed(Elem::ONE)
    }

    pub fn embed(&self, c: Elem) -> ExtElem {
        let mut v = self.zero();
        v[0] = c;
        v
    }

    /// The base-field value of `x`, if `x` lies in `F_q`.
    pub fn project(&self, x: &[Elem]) -> Option<Elem> {
        x[1..].iter().all(|c| c.is_zero()).then_some(x[0])
    }

    /// Element whose coordinates are the base-`q` digits of `index`.
    pub fn from_index(&self, mut index: u64) -> ExtElem {
        let q = self.base.order();
        let mut v = self.zero();
        for slot in v.iter_mut() {
            *slot = Elem(index % q);
            index /= q;
        }
        v
    }

    pub fn add(&self, a: &[Elem], b: &[Elem]) -> ExtElem {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.base.add(x, y))
            .collect()
    }

    pub fn sub(&self, a: &[Elem], b: &[Elem]) -> ExtElem {
        a.iter()
            .zip(b)
            .map(|(&x, &y)| self.base.sub(x, y))
            .collect()
    }

    pub fn neg(&self, a: &[Elem]) -> ExtElem {
        a.iter().map(|&x| self.base.neg(x)).collect()
    }

    pub fn mul(&self, a: &[Elem], b: &[Elem]) -> ExtElem {
        let f = self.base;
        let m = self.degree;
        let mut prod = vec![Elem::ZERO; 2 * m - 1];
        for (i, &x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = f.add(prod[i + j], f.mul(x, y));
            }
        }
        let h = self.modulus.coeffs();
        for k in (m..2 * m - 1).rev() {
            let c = prod[k];
            if c.is_zero() {
                continue;
            }
            for j in 0..m {
                prod[k - m + j] = f.sub(prod[k - m + j], f.mul(c, h[j]));
            }
        }
        prod.truncate(m);
        prod
    }

    pub fn pow(&self, a: &[Elem], e: &BigUint) -> ExtElem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    pub fn pow_u64(&self, a: &[Elem], e: u64) -> ExtElem {
        self.pow(a, &BigUint::from(e))
    }

    pub fn is_one(&self, a: &[Elem]) -> bool {
        a[0] == Elem::ONE && a[1..].iter().all(|c| c.is_zero())
    }

    /// Product of `(x - r)` over the given roots, as a polynomial with
    /// extension-field coefficients (ascending).
    pub fn product_of_linear(&self, roots: &[ExtElem]) -> Vec<ExtElem> {
        let mut poly = vec![self.one()];
        for r in roots {
            let neg_r = self.neg(r);
            let mut next = vec![self.zero(); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] = self.add(&next[i + 1], c);
                next[i] = self.add(&next[i], &self.mul(c, &neg_r));
            }
            poly = next;
        }
        poly
    }

    /// Maps an extension-coefficient polynomial back to `F_q[x]`.
    pub fn descend(&self, poly: &[ExtElem]) -> Result<Poly> {
        poly.iter()
            .map(|c| {
                self.project(c)
                    .ok_or_else(|| Error::Internal("coefficient outside the base field".into()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Poly::new)
    }
}
