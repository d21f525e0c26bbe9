//! Brute-force checkers, kept independent of the fast paths they verify:
//! exponent search for goodness, polynomial factoring without roots of
//! unity, and exhaustive search over divisors of `x^n + 1`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::{Elem, GaloisField, Poly};
use crate::goodint::{GoodParams, GoodnessVerdict, Reason};
use crate::negacyclic::{DualKind, NegacyclicProfile};

/// Default cap on the number of exponent vectors tried by [`brute_count_self_dual`].
pub const DEFAULT_COMBO_CAP: u64 = 1_000_000;

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn residue(x: i64, m: u64) -> u64 {
    x.rem_euclid(m as i64) as u64
}

/// First odd and first even `k` with `m | a^k + b^k` among `1..=bound`.
fn scan(a: u64, b: u64, m: u64, bound: u64) -> (Option<u64>, Option<u64>) {
    let (mut ak, mut bk) = (1 % m, 1 % m);
    let (mut odd, mut even) = (None, None);
    for k in 1..=bound {
        ak = mulmod(ak, a, m);
        bk = mulmod(bk, b, m);
        if (ak + bk) % m == 0 {
            let slot = if k % 2 == 1 { &mut odd } else { &mut even };
            slot.get_or_insert(k);
            if odd.is_some() && even.is_some() {
                break;
            }
        }
    }
    (odd, even)
}

/// Goodness of `d` by direct search over exponents `k`.
///
/// With `m = 2^beta d` and `u = a/b` of order `o` mod `m`, `m | a^k + b^k`
/// iff `u^k = -1`, which holds exactly on one residue class mod `o`. So
/// every witness is `k0 + j o`, and the first witness of each realizable
/// parity lies in `1..=2o`. If `m` shares a prime with `ab` there are no
/// witnesses at all.
pub fn brute_good(a: i64, b: i64, beta: u32, d: u64) -> Result<GoodnessVerdict> {
    GoodParams::new(a, b, beta)?;
    if d == 0 {
        return Err(Error::domain("d must be positive"));
    }
    let m = 1u64
        .checked_shl(beta)
        .filter(|_| beta < 63)
        .and_then(|t| t.checked_mul(d))
        .filter(|&m| m < 1 << 62)
        .ok_or_else(|| Error::domain("2^beta d is too large"))?;
    let (ra, rb) = (residue(a, m), residue(b, m));

    let shares_factor = {
        let (mut x, mut y) = (m, (ra as u128 * rb as u128 % m as u128) as u64);
        while y != 0 {
            (x, y) = (y, x % y);
        }
        x > 1
    };
    let (odd, even) = if shares_factor {
        (None, None)
    } else {
        // order of a/b: least o with a^o = b^o
        let (mut ao, mut bo, mut o) = (ra % m, rb % m, 1u64);
        while ao != bo {
            ao = mulmod(ao, ra, m);
            bo = mulmod(bo, rb, m);
            o += 1;
        }
        let found = scan(ra, rb, m, 2 * o);
        if cfg!(debug_assertions) && o <= 1 << 20 {
            assert_eq!(
                scan(ra, rb, m, 4 * o),
                found,
                "witness bound failed for m = {m}"
            );
        }
        found
    };
    Ok(GoodnessVerdict {
        is_good: odd.is_some() || even.is_some(),
        is_oddly_good: odd.is_some(),
        is_evenly_good: even.is_some(),
        odd_witness: odd,
        even_witness: even,
        uniform_s: None,
        reason: Reason::ExhaustiveSearch,
    })
}

/// Irreducible factorization of `f` as sorted `(monic factor, multiplicity)`.
///
/// Square-free split, then distinct-degree split, then randomized
/// equal-degree splitting with a fixed seed.
pub fn brute_factor(field: &GaloisField, f: &Poly) -> Result<Vec<(Poly, u64)>> {
    if f.degree().is_none_or(|d| d == 0) {
        return Err(Error::domain("cannot factor a constant"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e65_6761);
    let mut out: BTreeMap<Poly, u64> = BTreeMap::new();
    for (sq_free, mult) in square_free(field, &field.poly_monic(f))? {
        for (part, k) in distinct_degree(field, &sq_free)? {
            for g in equal_degree(field, &part, k, &mut rng)? {
                *out.entry(g).or_default() += mult;
            }
        }
    }
    Ok(out.into_iter().collect())
}

fn square_free(field: &GaloisField, f: &Poly) -> Result<Vec<(Poly, u64)>> {
    let p = field.characteristic();
    let mut out = Vec::new();
    let mut c = field.poly_gcd(f, &field.poly_derivative(f));
    let mut w = field.poly_div_exact(f, &c)?;
    let mut i = 1u64;
    while !w.is_one() {
        let y = field.poly_gcd(&w, &c);
        let fac = field.poly_div_exact(&w, &y)?;
        if !fac.is_one() {
            out.push((fac, i));
        }
        c = field.poly_div_exact(&c, &y)?;
        w = y;
        i += 1;
    }
    if !c.is_one() {
        // c is now a polynomial in x^p
        let root_exp = field.order() / p;
        let root = Poly::new(
            c.coeffs()
                .iter()
                .step_by(p as usize)
                .map(|&a| field.pow(a, root_exp))
                .collect(),
        );
        for (g, m) in square_free(field, &root)? {
            out.push((g, m * p));
        }
    }
    Ok(out)
}

fn distinct_degree(field: &GaloisField, f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let q = field.order();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = Poly::x();
    let mut k = 1;
    while rest.degree().unwrap_or(0) >= 2 * k {
        h = field.poly_pow_mod(&h, q, &rest)?;
        let g = field.poly_gcd(&field.poly_sub(&h, &Poly::x()), &rest);
        if !g.is_one() {
            rest = field.poly_div_exact(&rest, &g)?;
            h = field.poly_rem(&h, &rest)?;
            out.push((g, k));
        }
        k += 1;
    }
    if let Some(d) = rest.degree().filter(|&d| d > 0) {
        out.push((rest, d));
    }
    Ok(out)
}

fn equal_degree(
    field: &GaloisField,
    f: &Poly,
    k: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Poly>> {
    let n = f.degree().unwrap_or(0);
    if n <= k {
        return Ok(vec![f.clone()]);
    }
    let q = field.order();
    let e = (BigUint::from(q).pow(k as u32) - 1u32) / 2u32;
    loop {
        let a = Poly::new((0..n).map(|_| Elem(rng.gen_range(0..q))).collect());
        if a.degree().is_none_or(|d| d == 0) {
            continue;
        }
        let b = field.poly_sub(&field.poly_pow_mod_big(&a, &e, f)?, &Poly::one());
        let g = field.poly_gcd(&b, f);
        let dg = g.degree().unwrap_or(0);
        if dg > 0 && dg < n {
            let mut left = equal_degree(field, &g, k, rng)?;
            left.extend(equal_degree(field, &field.poly_div_exact(f, &g)?, k, rng)?);
            return Ok(left);
        }
    }
}

/// Factorization by trial division with monic candidates in ascending
/// degree; `budget` bounds the number of candidates tried.
pub fn trial_factor(field: &GaloisField, f: &Poly, budget: u64) -> Result<Vec<(Poly, u64)>> {
    if f.degree().is_none_or(|d| d == 0) {
        return Err(Error::domain("cannot factor a constant"));
    }
    let q = field.order();
    let mut rest = field.poly_monic(f);
    let mut out = Vec::new();
    let mut tried = 0u64;
    let mut k = 1usize;
    while rest.degree().unwrap_or(0) >= 2 * k {
        let count = q.checked_pow(k as u32).unwrap_or(u64::MAX);
        for idx in 0..count {
            tried += 1;
            if tried > budget {
                return Err(Error::TooMany {
                    what: "trial divisors",
                    count: BigUint::from(tried),
                    cap: budget,
                });
            }
            let mut coeffs = Vec::with_capacity(k + 1);
            let mut i = idx;
            for _ in 0..k {
                coeffs.push(Elem(i % q));
                i /= q;
            }
            coeffs.push(Elem::ONE);
            let cand = Poly::new(coeffs);
            let mut mult = 0;
            loop {
                let (quo, rem) = field.poly_divmod(&rest, &cand)?;
                if !rem.is_zero() {
                    break;
                }
                rest = quo;
                mult += 1;
            }
            if mult > 0 {
                out.push((cand, mult));
            }
            if rest.degree().unwrap_or(0) < 2 * k {
                break;
            }
        }
        k += 1;
    }
    if rest.degree().is_some_and(|d| d > 0) {
        // rest is irreducible, but may equal a factor already found
        match out.iter_mut().find(|(g, _)| *g == rest) {
            Some((_, m)) => *m += 1,
            None => out.push((rest, 1)),
        }
    }
    out.sort();
    Ok(out)
}

/// Number of divisors `g` of `x^n + 1` with `g = h*` (or `h†`),
/// `h = (x^n + 1) / g`, found by trying every exponent vector.
pub fn brute_count_self_dual(profile: &NegacyclicProfile, combo_cap: u64) -> Result<BigUint> {
    let field = profile.alphabet()?;
    let n = profile.n() as usize;
    let modulus = field.x_pow_plus_one(n);
    let factors = brute_factor(&field, &modulus)?;
    let combos = factors
        .iter()
        .fold(BigUint::from(1u32), |acc, (_, m)| acc * (m + 1));
    if combos > BigUint::from(combo_cap) {
        return Err(Error::TooMany {
            what: "divisor combinations",
            count: combos,
            cap: combo_cap,
        });
    }
    if n % 2 == 1 {
        return Ok(BigUint::from(0u32));
    }
    let search = Search {
        field: &field,
        dual: profile.dual(),
        modulus: &modulus,
        target: n / 2,
        factors: &factors,
    };
    Ok(BigUint::from(search.count(0, &Poly::one(), 0)?))
}

struct Search<'a> {
    field: &'a GaloisField,
    dual: DualKind,
    modulus: &'a Poly,
    target: usize,
    factors: &'a [(Poly, u64)],
}

impl Search<'_> {
    /// Depth-first over exponents, pruning products of degree above `n/2`.
    fn count(&self, idx: usize, g: &Poly, deg: usize) -> Result<u64> {
        if idx == self.factors.len() {
            if deg != self.target {
                return Ok(0);
            }
            let f = self.field;
            let h = f.poly_div_exact(self.modulus, g)?;
            let dual = match self.dual {
                DualKind::Euclidean => f.reciprocal(&h)?,
                DualKind::Hermitian => f.conj_reciprocal(&h)?,
            };
            return Ok(u64::from(dual == *g));
        }
        let (factor, mult) = &self.factors[idx];
        let step = factor.degree().unwrap_or(0);
        let mut total = 0;
        let mut acc = g.clone();
        let mut d = deg;
        for e in 0..=*mult {
            if d > self.target {
                break;
            }
            total += self.count(idx + 1, &acc, d)?;
            if e < *mult {
                acc = self.field.poly_mul(&acc, factor);
                d += step;
            }
        }
        Ok(total)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn brute_good_examples() {
        let v = brute_good(3, 1, 0, 5).unwrap();
        assert!(v.is_evenly_good && !v.is_oddly_good);
        assert_eq!(v.even_witness, Some(2));
        let v = brute_good(3, 1, 0, 7).unwrap();
        assert!(v.is_oddly_good && !v.is_evenly_good);
        assert_eq!(v.odd_witness, Some(3));
        assert!(!brute_good(3, 1, 0, 35).unwrap().is_good);
        assert!(!brute_good(3, 1, 0, 3).unwrap().is_good);
        let one = brute_good(3, 1, 0, 1).unwrap();
        assert_eq!((one.odd_witness, one.even_witness), (Some(1), Some(2)));
        assert!(brute_good(2, 1, 0, 1).is_err());
        assert!(brute_good(3, -3, 0, 1).is_err());
    }

    #[test]
    fn factor_examples() {
        let f5 = GaloisField::new(5, 1).unwrap();
        assert_eq!(
            brute_factor(&f5, &f5.poly_from_ints(&[1, 0, 1])).unwrap(),
            vec![
                (f5.poly_from_ints(&[2, 1]), 1),
                (f5.poly_from_ints(&[3, 1]), 1)
            ]
        );
        let f3 = GaloisField::new(3, 1).unwrap();
        assert_eq!(
            brute_factor(&f3, &f3.poly_from_ints(&[1, 0, 1])).unwrap(),
            vec![(f3.poly_from_ints(&[1, 0, 1]), 1)]
        );
        assert_eq!(
            brute_factor(&f3, &f3.poly_from_ints(&[1, 2, 1])).unwrap(),
            vec![(f3.poly_from_ints(&[1, 1]), 2)]
        );
        assert!(brute_factor(&f3, &Poly::one()).is_err());
    }

    #[test]
    fn factor_with_p_th_powers() {
        let f3 = GaloisField::new(3, 1).unwrap();
        // x^12 + 1 = (x^4 + 1)^3 over F_3
        let got = brute_factor(&f3, &f3.x_pow_plus_one(12)).unwrap();
        assert!(got.iter().all(|(_, m)| *m == 3));
        assert_eq!(
            got.iter().map(|(g, _)| g.degree().unwrap()).sum::<usize>(),
            4
        );
        assert_eq!(
            got,
            trial_factor(&f3, &f3.x_pow_plus_one(12), 10_000).unwrap()
        );
    }

    #[test]
    fn trial_budget() {
        let f11 = GaloisField::new(11, 1).unwrap();
        let hard = f11.first_irreducible(8).unwrap();
        assert!(matches!(
            trial_factor(&f11, &hard, 100),
            Err(Error::TooMany { .. })
        ));
    }

    #[test]
    fn count_examples() {
        let pr = |p, nu, r| NegacyclicProfile::new(p, 1, DualKind::Euclidean, nu, r, 1).unwrap();
        let c = |p, nu, r| brute_count_self_dual(&pr(p, nu, r), DEFAULT_COMBO_CAP).unwrap();
        assert_eq!(c(5, 1, 0), BigUint::from(2u32));
        assert_eq!(c(3, 1, 0), BigUint::from(0u32));
        assert_eq!(c(5, 1, 1), BigUint::from(6u32));
        let h = NegacyclicProfile::new(5, 1, DualKind::Hermitian, 2, 0, 1).unwrap();
        assert_eq!(
            brute_count_self_dual(&h, DEFAULT_COMBO_CAP).unwrap(),
            BigUint::from(4u32)
        );
        assert!(matches!(
            brute_count_self_dual(&pr(5, 1, 1), 10),
            Err(Error::TooMany { .. })
        ));
    }

    fn small_poly() -> impl Strategy<Value = (u64, Vec<i64>)> {
        (
            prop_oneof![Just(3u64), Just(5), Just(7)],
            prop::collection::vec(0i64..7, 2..9),
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn factorizations_agree((p, coeffs) in small_poly()) {
            let f = GaloisField::new(p, 1).unwrap();
            let mut c = coeffs;
            c.push(1);
            let g = f.poly_from_ints(&c);
            let fast = brute_factor(&f, &g).unwrap();
            prop_assert_eq!(&fast, &trial_factor(&f, &g, 1_000_000).unwrap());
            let back = fast
                .iter()
                .fold(Poly::one(), |acc, (h, m)| f.poly_mul(&acc, &f.poly_pow(h, *m)));
            prop_assert_eq!(back, f.poly_monic(&g));
            for (h, _) in &fast {
                prop_assert!(f.is_irreducible(h).unwrap());
            }
        }
    }
}
