//! Negacyclic codes: factoring `x^n + 1`, building self-dual codes and
//! checking self-duality.
//!
//! Write `n = 2^nu p^r n'` with `n'` odd and prime to `p`. Over a field of
//! characteristic `p`, `x^n + 1 = (x^{2^nu n'} + 1)^{p^r}`, and the roots of
//! `x^{2^nu n'} + 1` are the odd powers of a primitive `M`-th root of unity,
//! `M = 2^{nu+1} n'`. Grouping the odd residues modulo `M` into `q`-cyclotomic
//! cosets gives the irreducible factors; a root `zeta^j` has order
//! `2^{nu+1} d` with `d = n' / gcd(j, n')`, so the cosets with the same `d`
//! multiply out to the cyclotomic polynomial of order `2^{nu+1} d`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::arith::{euler_phi, factorize, gcd, is_prime, mod_pow, mult_order};
use crate::error::{Error, Result};
use crate::gf::{Elem, ExtElem, ExtensionField, GaloisField, Poly};
use crate::goodint::{classify, GoodParams};

/// Default cap on the splitting-field degree `ord_M(q)`.
pub const DEFAULT_SPLIT_CAP: u64 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DualKind {
    Euclidean,
    Hermitian,
}

impl DualKind {
    pub fn tag(&self) -> &'static str {
        match self {
            DualKind::Euclidean => "euclidean",
            DualKind::Hermitian => "hermitian",
        }
    }
}

impl fmt::Display for DualKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for DualKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "euclidean" | "e" => Ok(DualKind::Euclidean),
            "hermitian" | "h" => Ok(DualKind::Hermitian),
            _ => Err(Error::domain(format!(
                "unknown duality {s:?}, expected euclidean or hermitian"
            ))),
        }
    }
}

/// Length `n = 2^nu p^r n'` over `F_{p^l}` (Euclidean) or `F_{p^{2l}}` (Hermitian).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NegacyclicProfile {
    p: u64,
    l: u32,
    dual: DualKind,
    nu: u32,
    r: u32,
    n_prime: u64,
}

impl NegacyclicProfile {
    pub fn new(p: u64, l: u32, dual: DualKind, nu: u32, r: u32, n_prime: u64) -> Result<Self> {
        if p.is_multiple_of(2) || !is_prime(p) {
            return Err(Error::domain(format!("p = {p} is not an odd prime")));
        }
        if l == 0 {
            return Err(Error::domain("l must be positive"));
        }
        if n_prime.is_multiple_of(2) {
            return Err(Error::domain(format!("n' = {n_prime} must be odd")));
        }
        if gcd(p, n_prime) != 1 {
            return Err(Error::domain(format!("p = {p} divides n' = {n_prime}")));
        }
        let profile = Self {
            p,
            l,
            dual,
            nu,
            r,
            n_prime,
        };
        let alphabet_degree = match dual {
            DualKind::Euclidean => l,
            DualKind::Hermitian => 2 * l,
        };
        let fits = |base: u64, e: u32| base.checked_pow(e).filter(|&v| v < 1 << 62).is_some();
        if !fits(p, alphabet_degree) || !fits(p, r) {
            return Err(Error::domain("field or multiplicity too large"));
        }
        let n = 1u64
            .checked_shl(nu + 1)
            .and_then(|t| t.checked_mul(p.pow(r)))
            .and_then(|t| t.checked_mul(n_prime))
            .filter(|&v| v < 1 << 40);
        if n.is_none() {
            return Err(Error::domain("length 2^(nu+1) p^r n' is too large"));
        }
        Ok(profile)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn dual(&self) -> DualKind {
        self.dual
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n_prime(&self) -> u64 {
        self.n_prime
    }

    /// Code length `2^nu p^r n'`.
    pub fn n(&self) -> u64 {
        (1u64 << self.nu) * self.p.pow(self.r) * self.n_prime
    }

    /// `p^l`, the base of the good-integer conditions in both cases.
    pub fn base_order(&self) -> u64 {
        self.p.pow(self.l)
    }

    pub fn alphabet_degree(&self) -> u32 {
        match self.dual {
            DualKind::Euclidean => self.l,
            DualKind::Hermitian => 2 * self.l,
        }
    }

    /// Size `q` of the code alphabet.
    pub fn alphabet_order(&self) -> u64 {
        self.p.pow(self.alphabet_degree())
    }

    /// Multiplicity `p^r` of every irreducible factor of `x^n + 1`.
    pub fn multiplicity(&self) -> u64 {
        self.p.pow(self.r)
    }

    /// `2^{nu+1} n'`.
    pub fn root_order(&self) -> u64 {
        (2u64 << self.nu) * self.n_prime
    }

    pub fn alphabet(&self) -> Result<GaloisField> {
        GaloisField::new(self.p, self.alphabet_degree())
    }

    pub fn with_nu(&self, nu: u32) -> Result<Self> {
        Self::new(self.p, self.l, self.dual, nu, self.r, self.n_prime)
    }
}

/// `f*` for Euclidean duality, `f†` for Hermitian.
pub fn partner(field: &GaloisField, dual: DualKind, f: &Poly) -> Result<Poly> {
    match dual {
        DualKind::Euclidean => field.reciprocal(f),
        DualKind::Hermitian => field.conj_reciprocal(f),
    }
}

/// The irreducible factors of `x^{2^nu n'} + 1` whose roots have order `2^{nu+1} d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorBlock {
    pub d: u64,
    /// `phi(2^{nu+1} d)`, the degree of the block.
    pub totient: u64,
    /// `ord_{2^{nu+1} d}(q)`, the degree of each factor.
    pub order: u64,
    /// Factors equal to their own partner.
    pub singletons: Vec<Poly>,
    /// `(g, partner(g))` with `g` the smaller of the two.
    pub pairs: Vec<(Poly, Poly)>,
}

impl FactorBlock {
    pub fn factors(&self) -> impl Iterator<Item = &Poly> {
        self.singletons
            .iter()
            .chain(self.pairs.iter().flat_map(|(g, h)| [g, h]))
    }
}

#[derive(Debug, Clone)]
pub struct FactorStructure {
    pub profile: NegacyclicProfile,
    pub field: Arc<GaloisField>,
    /// `m = ord_M(q)`: the roots live in `F_{q^m}`.
    pub splitting_degree: u64,
    pub multiplicity: u64,
    /// One block per divisor of `n'`, ascending.
    pub blocks: Vec<FactorBlock>,
}

impl FactorStructure {
    /// Every distinct irreducible factor, in canonical order.
    pub fn distinct_factors(&self) -> Vec<Poly> {
        let mut out: Vec<Poly> = self
            .blocks
            .iter()
            .flat_map(|b| b.factors().cloned())
            .collect();
        out.sort();
        out
    }

    pub fn singleton_count(&self) -> usize {
        self.blocks.iter().map(|b| b.singletons.len()).sum()
    }

    pub fn pair_count(&self) -> usize {
        self.blocks.iter().map(|b| b.pairs.len()).sum()
    }

    /// Product of all factors raised to the multiplicity.
    pub fn reconstruct(&self) -> Poly {
        let f = &self.field;
        let base = self
            .distinct_factors()
            .iter()
            .fold(Poly::one(), |acc, g| f.poly_mul(&acc, g));
        f.poly_pow(&base, self.multiplicity)
    }

    pub fn singletons(&self) -> impl Iterator<Item = &Poly> {
        self.blocks.iter().flat_map(|b| b.singletons.iter())
    }

    pub fn pairs(&self) -> impl Iterator<Item = &(Poly, Poly)> {
        self.blocks.iter().flat_map(|b| b.pairs.iter())
    }

    /// The code generated by `prod f^{s_i} prod g^{a_j} partner(g)^{b_j}`,
    /// exponents listed in the order of [`Self::singletons`] and [`Self::pairs`].
    pub fn code(
        &self,
        singleton_exponents: &[u64],
        pair_exponents: &[(u64, u64)],
    ) -> Result<CodeSpec> {
        if singleton_exponents.len() != self.singleton_count()
            || pair_exponents.len() != self.pair_count()
        {
            return Err(Error::domain(
                "exponent vector does not match the factor structure",
            ));
        }
        let mult = self.multiplicity;
        let in_range = singleton_exponents.iter().all(|&e| e <= mult)
            && pair_exponents.iter().all(|&(a, b)| a <= mult && b <= mult);
        if !in_range {
            return Err(Error::domain(format!("exponents must lie in [0, {mult}]")));
        }
        let f = &self.field;
        let mut g = Poly::one();
        for (s, &e) in self.singletons().zip(singleton_exponents) {
            g = f.poly_mul(&g, &f.poly_pow(s, e));
        }
        for ((a, b), &(ea, eb)) in self.pairs().zip(pair_exponents) {
            g = f.poly_mul(&g, &f.poly_pow(a, ea));
            g = f.poly_mul(&g, &f.poly_pow(b, eb));
        }
        Ok(CodeSpec {
            profile: self.profile,
            field: Arc::clone(&self.field),
            singleton_exponents: singleton_exponents.to_vec(),
            pair_exponents: pair_exponents.to_vec(),
            generator: g,
        })
    }
}

/// A primitive `order`-th root of unity, from the first candidate (in index
/// order) whose `(|F^*| / order)`-th power has exact order `order`.
fn primitive_root_of_unity(ext: &ExtensionField, order: u64) -> Result<ExtElem> {
    let group = ext.order() - BigUint::one();
    if &group % order != BigUint::from(0u32) {
        return Err(Error::Internal(format!("{order} does not divide |F*|")));
    }
    let cofactor = group / order;
    let primes: Vec<u64> = factorize(order)?.primes().collect();
    let candidates = ext.order().to_u64().unwrap_or(u64::MAX);
    for idx in 2..candidates {
        let z = ext.pow(&ext.from_index(idx), &cofactor);
        if primes
            .iter()
            .all(|&r| !ext.is_one(&ext.pow_u64(&z, order / r)))
        {
            return Ok(z);
        }
    }
    Err(Error::Internal(format!(
        "no primitive {order}-th root of unity"
    )))
}

pub fn factor_xn_plus_one(profile: &NegacyclicProfile) -> Result<FactorStructure> {
    factor_xn_plus_one_capped(profile, DEFAULT_SPLIT_CAP)
}

pub fn factor_xn_plus_one_capped(
    profile: &NegacyclicProfile,
    split_cap: u64,
) -> Result<FactorStructure> {
    let field = profile.alphabet()?;
    let q = field.order();
    let big_m = profile.root_order();
    let m = mult_order((q % big_m) as i64, big_m)?;
    if m > split_cap {
        return Err(Error::SplittingDegree {
            required: m,
            cap: split_cap,
        });
    }
    let ext = ExtensionField::new(&field, m as usize)?;
    let zeta = primitive_root_of_unity(&ext, big_m)?;
    let mut powers = Vec::with_capacity(big_m as usize);
    let mut acc = ext.one();
    for _ in 0..big_m {
        powers.push(acc.clone());
        acc = ext.mul(&acc, &zeta);
    }

    let n_prime = profile.n_prime();
    let mut by_block: BTreeMap<u64, Vec<Poly>> = BTreeMap::new();
    let mut seen = vec![false; big_m as usize];
    for j in (1..big_m).step_by(2) {
        if seen[j as usize] {
            continue;
        }
        let mut roots = Vec::new();
        let mut k = j;
        while !seen[k as usize] {
            seen[k as usize] = true;
            roots.push(powers[k as usize].clone());
            k = ((k as u128 * q as u128) % big_m as u128) as u64;
        }
        let factor = ext.descend(&ext.product_of_linear(&roots))?;
        by_block
            .entry(n_prime / gcd(j, n_prime))
            .or_default()
            .push(factor);
    }

    let two_power = 2u64 << profile.nu();
    let mut blocks = Vec::with_capacity(by_block.len());
    for (d, mut factors) in by_block {
        factors.sort();
        let modulus = two_power * d;
        let order = mult_order((q % modulus) as i64, modulus)?;
        let totient = euler_phi(modulus)?;
        let (singletons, pairs) = pair_up(&field, profile.dual(), factors)?;
        blocks.push(FactorBlock {
            d,
            totient,
            order,
            singletons,
            pairs,
        });
    }

    Ok(FactorStructure {
        profile: *profile,
        field: Arc::new(field),
        splitting_degree: m,
        multiplicity: profile.multiplicity(),
        blocks,
    })
}

/// Self-partnered factors and partner pairs.
type Partition = (Vec<Poly>, Vec<(Poly, Poly)>);

/// Splits sorted factors into self-partnered ones and partner pairs.
fn pair_up(field: &GaloisField, dual: DualKind, factors: Vec<Poly>) -> Result<Partition> {
    let mut singletons = Vec::new();
    let mut pairs = Vec::new();
    let mut used = vec![false; factors.len()];
    for i in 0..factors.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let other = partner(field, dual, &factors[i])?;
        if other == factors[i] {
            singletons.push(other);
            continue;
        }
        let j = factors
            .iter()
            .position(|g| *g == other)
            .filter(|&j| !used[j])
            .ok_or_else(|| Error::Internal("partner factor missing from its block".into()))?;
        used[j] = true;
        pairs.push((factors[i].clone(), other));
    }
    Ok((singletons, pairs))
}

/// Closed-form existence test: `nu > 0` and `2^{nu+1}` does not divide `p^l + 1`.
pub fn exists_self_dual(profile: &NegacyclicProfile) -> bool {
    if profile.nu() == 0 {
        return false;
    }
    let modulus = 2u64 << profile.nu();
    !(mod_pow(profile.p(), profile.l() as u64, modulus) + 1).is_multiple_of(modulus)
}

/// Divisor-by-divisor existence test: `nu > 0` and no `d | n'` is
/// `2^{nu+1}`-good (Euclidean) or `2^{nu+1}`-oddly-good (Hermitian)
/// with respect to `(p^l, 1)`.
pub fn exists_self_dual_by_divisors(profile: &NegacyclicProfile) -> Result<bool> {
    if profile.nu() == 0 {
        return Ok(false);
    }
    let params = GoodParams::new(profile.base_order() as i64, 1, profile.nu() + 1)?;
    for d in factorize(profile.n_prime())?.divisors() {
        let v = classify(&params, d)?;
        let blocked = match profile.dual() {
            DualKind::Euclidean => v.is_good,
            DualKind::Hermitian => v.is_oddly_good,
        };
        if blocked {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A negacyclic code by its generator and the exponents that built it.
#[derive(Debug, Clone)]
pub struct CodeSpec {
    pub profile: NegacyclicProfile,
    pub field: Arc<GaloisField>,
    pub singleton_exponents: Vec<u64>,
    pub pair_exponents: Vec<(u64, u64)>,
    pub generator: Poly,
}

impl CodeSpec {
    /// A code from a bare generator, with no exponent bookkeeping.
    pub fn from_generator(
        profile: NegacyclicProfile,
        field: Arc<GaloisField>,
        generator: Poly,
    ) -> Self {
        Self {
            profile,
            field,
            singleton_exponents: Vec::new(),
            pair_exponents: Vec::new(),
            generator,
        }
    }

    pub fn dimension(&self) -> u64 {
        self.profile.n() - self.generator.degree().unwrap_or(0) as u64
    }
}

/// Generator of the dual code: `h*` (or `h†`) with `h = (x^n + 1) / g`.
pub fn dual_generator(spec: &CodeSpec) -> Result<Poly> {
    let f = &spec.field;
    let modulus = f.x_pow_plus_one(spec.profile.n() as usize);
    let (h, rem) = f.poly_divmod(&modulus, &spec.generator)?;
    if !rem.is_zero() {
        return Err(Error::domain("generator does not divide x^n + 1"));
    }
    partner(f, spec.profile.dual(), &h)
}

pub fn is_self_dual(spec: &CodeSpec) -> Result<bool> {
    Ok(dual_generator(spec)? == spec.generator)
}

/// Outcome of [`construct_all_self_dual`].
#[derive(Debug, Clone)]
pub enum SelfDualCodes {
    /// No self-dual code of this length exists.
    Nonexistent,
    Codes(Vec<CodeSpec>),
}

impl SelfDualCodes {
    pub fn codes(&self) -> &[CodeSpec] {
        match self {
            SelfDualCodes::Nonexistent => &[],
            SelfDualCodes::Codes(c) => c,
        }
    }
}

/// Every self-dual code: for each partner pair `(g, g')` choose
/// `g^a g'^{p^r - a}` with `0 <= a <= p^r`.
pub fn construct_all_self_dual(profile: &NegacyclicProfile, cap: u64) -> Result<SelfDualCodes> {
    if !exists_self_dual(profile) {
        return Ok(SelfDualCodes::Nonexistent);
    }
    let structure = factor_xn_plus_one(profile)?;
    construct_from_structure(&structure, cap)
}

pub fn construct_from_structure(structure: &FactorStructure, cap: u64) -> Result<SelfDualCodes> {
    if !exists_self_dual(&structure.profile) {
        return Ok(SelfDualCodes::Nonexistent);
    }
    if structure.singleton_count() != 0 {
        return Err(Error::Internal(
            "self-partnered factor present although self-dual codes exist".into(),
        ));
    }
    let mult = structure.multiplicity;
    let pairs = structure.pair_count();
    let count = BigUint::from(mult + 1).pow(pairs as u32);
    if count > BigUint::from(cap) {
        return Err(Error::TooMany {
            what: "self-dual codes",
            count,
            cap,
        });
    }
    let f = &structure.field;
    // per pair: g^a * g'^{mult - a} for a = 0..=mult
    let choices: Vec<Vec<Poly>> = structure
        .pairs()
        .map(|(g, h)| {
            (0..=mult)
                .map(|a| f.poly_mul(&f.poly_pow(g, a), &f.poly_pow(h, mult - a)))
                .collect()
        })
        .collect();
    let total = count.to_u64().expect("bounded by cap");
    let mut codes = Vec::with_capacity(total as usize);
    let mut digits = vec![0u64; pairs];
    for _ in 0..total {
        let generator = choices
            .iter()
            .zip(&digits)
            .fold(Poly::one(), |acc, (c, &a)| f.poly_mul(&acc, &c[a as usize]));
        codes.push(CodeSpec {
            profile: structure.profile,
            field: Arc::clone(f),
            singleton_exponents: Vec::new(),
            pair_exponents: digits.iter().map(|&a| (a, mult - a)).collect(),
            generator,
        });
        for digit in digits.iter_mut().rev() {
            *digit += 1;
            if *digit <= mult {
                break;
            }
            *digit = 0;
        }
    }
    Ok(SelfDualCodes::Codes(codes))
}

/// Codeword-level check: the `n` negacyclic shifts of the generator's
/// coefficient vector span the code; the code is self-dual iff all pairs of
/// shifts are orthogonal and the span has dimension `n / 2`.
pub fn self_dual_by_inner_products(spec: &CodeSpec) -> Result<bool> {
    let f = &spec.field;
    let n = spec.profile.n() as usize;
    if n % 2 == 1 {
        return Ok(false);
    }
    let conj = |x: Elem| -> Result<Elem> {
        match spec.profile.dual() {
            DualKind::Euclidean => Ok(x),
            DualKind::Hermitian => f.conjugate(x),
        }
    };
    let mut row: Vec<Elem> = (0..n).map(|i| spec.generator.coeff(i)).collect();
    if spec.generator.degree().is_none_or(|d| d >= n) {
        return Err(Error::domain(
            "generator must be a proper divisor of x^n + 1",
        ));
    }
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        rows.push(row.clone());
        let last = f.neg(row[n - 1]);
        row.rotate_right(1);
        row[0] = last;
    }
    for u in &rows {
        let u_bar: Vec<Elem> = u.iter().map(|&x| conj(x)).collect::<Result<_>>()?;
        for v in &rows {
            let ip = v
                .iter()
                .zip(&u_bar)
                .fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
            if !ip.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(rank(f, rows)? == n / 2)
}

fn rank(f: &GaloisField, mut rows: Vec<Vec<Elem>>) -> Result<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = f.inv(rows[rank][col])?;
        let pivot_row: Vec<Elem> = rows[rank].iter().map(|&x| f.mul(x, inv)).collect();
        for (i, r) in rows.iter_mut().enumerate() {
            if i == rank || r[col].is_zero() {
                continue;
            }
            let c = r[col];
            for (x, &y) in r.iter_mut().zip(&pivot_row) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(p: u64, l: u32, dual: DualKind, nu: u32, r: u32, n_prime: u64) -> NegacyclicProfile {
        NegacyclicProfile::new(p, l, dual, nu, r, n_prime).unwrap()
    }

    fn ints(field: &GaloisField, c: &[i64]) -> Poly {
        field.poly_from_ints(c)
    }

    #[test]
    fn profile_validation() {
        assert!(NegacyclicProfile::new(4, 1, DualKind::Euclidean, 1, 0, 1).is_err());
        assert!(NegacyclicProfile::new(5, 1, DualKind::Euclidean, 1, 0, 2).is_err());
        assert!(NegacyclicProfile::new(5, 1, DualKind::Euclidean, 1, 0, 15).is_err());
        assert!(NegacyclicProfile::new(5, 0, DualKind::Euclidean, 1, 0, 1).is_err());
        let p = profile(5, 1, DualKind::Euclidean, 2, 1, 3);
        assert_eq!(p.n(), 4 * 5 * 3);
    }

    #[test]
    fn x2_plus_1_over_f5_is_a_pair() {
        let s = factor_xn_plus_one(&profile(5, 1, DualKind::Euclidean, 1, 0, 1)).unwrap();
        let f = &s.field;
        assert_eq!(s.blocks.len(), 1);
        assert!(s.blocks[0].singletons.is_empty());
        assert_eq!(
            s.blocks[0].pairs,
            vec![(ints(f, &[2, 1]), ints(f, &[3, 1]))]
        );
    }

    #[test]
    fn x2_plus_1_over_f3_is_a_singleton() {
        let s = factor_xn_plus_one(&profile(3, 1, DualKind::Euclidean, 1, 0, 1)).unwrap();
        assert_eq!(s.blocks[0].singletons, vec![ints(&s.field, &[1, 0, 1])]);
        assert!(s.blocks[0].pairs.is_empty());
    }

    #[test]
    fn x4_plus_1_over_f5() {
        let s = factor_xn_plus_one(&profile(5, 1, DualKind::Euclidean, 2, 0, 1)).unwrap();
        let f = &s.field;
        assert_eq!(
            s.blocks[0].pairs,
            vec![(ints(f, &[2, 0, 1]), ints(f, &[3, 0, 1]))]
        );
    }

    #[test]
    fn reconstruction_with_repeated_roots() {
        let pr = profile(3, 1, DualKind::Euclidean, 2, 1, 5);
        let s = factor_xn_plus_one(&pr).unwrap();
        assert_eq!(s.multiplicity, 3);
        assert_eq!(s.reconstruct(), s.field.x_pow_plus_one(pr.n() as usize));
        assert_eq!(s.blocks.iter().map(|b| b.d).collect::<Vec<_>>(), vec![1, 5]);
    }

    #[test]
    fn splitting_cap_is_enforced() {
        let pr = profile(3, 1, DualKind::Euclidean, 1, 0, 7);
        let err = factor_xn_plus_one_capped(&pr, 2).unwrap_err();
        assert_eq!(
            err,
            Error::SplittingDegree {
                required: 6,
                cap: 2
            }
        );
        assert!(err.is_resource());
    }

    #[test]
    fn existence_examples() {
        assert!(!exists_self_dual(&profile(
            3,
            1,
            DualKind::Euclidean,
            1,
            0,
            1
        )));
        assert!(exists_self_dual(&profile(
            5,
            1,
            DualKind::Euclidean,
            1,
            0,
            1
        )));
        assert!(exists_self_dual(&profile(
            3,
            1,
            DualKind::Euclidean,
            2,
            0,
            1
        )));
        assert!(!exists_self_dual(&profile(
            5,
            1,
            DualKind::Euclidean,
            0,
            0,
            3
        )));
    }

    #[test]
    fn existence_forms_agree() {
        for p in [3u64, 5, 7, 11, 13, 17] {
            for l in 1..=3 {
                for nu in 0..=5 {
                    for n_prime in [1u64, 3, 5, 7, 9, 15, 21, 35, 45] {
                        for dual in [DualKind::Euclidean, DualKind::Hermitian] {
                            let Ok(pr) = NegacyclicProfile::new(p, l, dual, nu, 0, n_prime) else {
                                continue;
                            };
                            assert_eq!(
                                exists_self_dual(&pr),
                                exists_self_dual_by_divisors(&pr).unwrap(),
                                "{pr:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn construct_examples() {
        let codes =
            construct_all_self_dual(&profile(5, 1, DualKind::Euclidean, 1, 0, 1), 100).unwrap();
        let f = GaloisField::new(5, 1).unwrap();
        let gens: Vec<Poly> = codes.codes().iter().map(|c| c.generator.clone()).collect();
        assert_eq!(gens, vec![ints(&f, &[3, 1]), ints(&f, &[2, 1])]);

        let codes =
            construct_all_self_dual(&profile(5, 1, DualKind::Euclidean, 1, 1, 1), 100).unwrap();
        assert_eq!(codes.codes().len(), 6);
        for c in codes.codes() {
            assert_eq!(c.generator.degree(), Some(5));
            assert!(is_self_dual(c).unwrap());
            assert!(self_dual_by_inner_products(c).unwrap());
        }

        let none =
            construct_all_self_dual(&profile(3, 1, DualKind::Euclidean, 1, 0, 1), 100).unwrap();
        assert!(matches!(none, SelfDualCodes::Nonexistent));
    }

    #[test]
    fn construct_cap() {
        let err =
            construct_all_self_dual(&profile(5, 1, DualKind::Euclidean, 1, 1, 1), 5).unwrap_err();
        match err {
            Error::TooMany { count, cap, .. } => {
                assert_eq!(count, BigUint::from(6u32));
                assert_eq!(cap, 5);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn self_duality_examples() {
        let pr = profile(5, 1, DualKind::Euclidean, 1, 0, 1);
        let f = Arc::new(GaloisField::new(5, 1).unwrap());
        let spec = |g: Poly| CodeSpec::from_generator(pr, Arc::clone(&f), g);
        assert!(is_self_dual(&spec(ints(&f, &[2, 1]))).unwrap());
        assert_eq!(
            dual_generator(&spec(ints(&f, &[2, 1]))).unwrap(),
            ints(&f, &[2, 1])
        );
        assert_eq!(
            dual_generator(&spec(ints(&f, &[3, 1]))).unwrap(),
            ints(&f, &[3, 1])
        );
        assert!(!is_self_dual(&spec(ints(&f, &[1, 0, 1]))).unwrap());
        assert_eq!(
            dual_generator(&spec(Poly::one())).unwrap(),
            ints(&f, &[1, 0, 1])
        );
        assert!(dual_generator(&spec(ints(&f, &[1, 1]))).is_err());

        let pr4 = profile(5, 1, DualKind::Euclidean, 2, 0, 1);
        let g = ints(&f, &[2, 0, 1]);
        assert!(is_self_dual(&CodeSpec::from_generator(pr4, Arc::clone(&f), g)).unwrap());
    }

    #[test]
    fn hermitian_x4_plus_1_over_f25() {
        let pr = profile(5, 1, DualKind::Hermitian, 2, 0, 1);
        let s = factor_xn_plus_one(&pr).unwrap();
        assert_eq!(s.field.order(), 25);
        assert_eq!(s.pair_count(), 2);
        assert_eq!(s.singleton_count(), 0);
        let codes = construct_from_structure(&s, 100).unwrap();
        assert_eq!(codes.codes().len(), 4);
        for c in codes.codes() {
            assert!(is_self_dual(c).unwrap());
            assert!(self_dual_by_inner_products(c).unwrap());
        }
    }

    #[test]
    fn inner_product_check_rejects_non_self_dual() {
        let pr = profile(5, 1, DualKind::Euclidean, 2, 0, 1);
        let f = Arc::new(GaloisField::new(5, 1).unwrap());
        let whole = CodeSpec::from_generator(pr, Arc::clone(&f), Poly::one());
        assert!(!self_dual_by_inner_products(&whole).unwrap());
        let zero = CodeSpec::from_generator(pr, Arc::clone(&f), f.x_pow_plus_one(4));
        assert!(self_dual_by_inner_products(&zero).is_err());
        let g = f.poly_from_ints(&[2, 0, 1]);
        let dual = CodeSpec::from_generator(pr, Arc::clone(&f), g);
        assert!(self_dual_by_inner_products(&dual).unwrap());
    }
}
