//! Existence and exact counts of self-dual negacyclic codes.
//!
//! The count is `(p^r + 1)^t` where `t` is half the number of irreducible
//! factors of `x^{2^nu n'} + 1` (all of which come in partner pairs when
//! self-dual codes exist). The factor count is a divisor sum of
//! `phi(2^{nu+1} d) / ord_{2^{nu+1} d}(q)`.

use num_bigint::BigUint;

use crate::arith::{euler_phi, factorize, gcd, mod_pow, mult_order};
use crate::error::{Error, Result};
use crate::negacyclic::{exists_self_dual, DualKind, NegacyclicProfile};

/// `p = sign * 5^alpha (mod 2^{nu+1})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlphaP {
    pub p: u64,
    pub nu: u32,
    pub alpha: u64,
    pub sign: i8,
}

/// Discrete logarithm of `+-p` to base 5 modulo `2^{nu+1}`.
///
/// Solved one bit at a time: `5^{2^i} = 1 + 2^{i+2} (mod 2^{i+3})`, so each
/// bit of `alpha` is fixed by one more power of two in the modulus.
pub fn alpha_p(p: u64, nu: u32) -> Result<AlphaP> {
    if p.is_multiple_of(2) {
        return Err(Error::domain(format!("p = {p} must be odd")));
    }
    if nu == 0 || nu > 62 {
        return Err(Error::domain(format!("nu = {nu} out of range [1, 62]")));
    }
    let modulus = 2u64 << nu;
    let mask = modulus - 1;
    let sign: i8 = if p % 4 == 1 { 1 } else { -1 };
    let target = if sign == 1 {
        p & mask
    } else {
        (modulus - (p & mask)) & mask
    };
    let mut alpha = 0u64;
    for i in 0..nu - 1 {
        let check = (8u64 << i) - 1;
        if mod_pow(5, alpha, modulus) & check != target & check {
            alpha |= 1 << i;
        }
    }
    debug_assert_eq!(mod_pow(5, alpha, modulus), target);
    Ok(AlphaP { p, nu, alpha, sign })
}

/// `ord_{2^{nu+1}}(p^l)` in closed form.
///
/// For `nu >= 2` the order of `5^{alpha l}` is `2^{nu-1} / gcd(2^{nu-1}, alpha l)`;
/// when `p^l = -5^{alpha l}` the extra sign forces the order to be even.
pub fn ord_two_power(p: u64, l: u32, nu: u32) -> Result<u64> {
    if l == 0 {
        return Err(Error::domain("l must be positive"));
    }
    let a = alpha_p(p, nu)?;
    let negative = a.sign == -1 && l % 2 == 1;
    if nu == 1 {
        return Ok(if negative { 2 } else { 1 });
    }
    let half = 1u64 << (nu - 1);
    let base = half / gcd_with_zero(half, a.alpha.wrapping_mul(l as u64) % half);
    Ok(if negative { base.max(2) } else { base })
}

/// `gcd(x, 0) = x`.
fn gcd_with_zero(x: u64, y: u64) -> u64 {
    if y == 0 {
        x
    } else {
        gcd(x, y)
    }
}

/// `sum_{d | n'} phi(2^{nu+1} d) / ord_{2^{nu+1} d}(p^{k})`: the number of
/// irreducible factors of `x^{2^nu n'} + 1` over `F_{p^k}`.
pub fn factor_count(profile: &NegacyclicProfile, k: u32) -> Result<u64> {
    let q = profile
        .p()
        .checked_pow(k)
        .ok_or_else(|| Error::domain("field too large"))?;
    let two_power = 2u64 << profile.nu();
    let mut total = 0u64;
    for d in factorize(profile.n_prime())?.divisors() {
        let modulus = two_power * d;
        let phi = euler_phi(modulus)?;
        let ord = mult_order((q % modulus) as i64, modulus)?;
        total += phi / ord;
    }
    Ok(total)
}

fn half_sum(profile: &NegacyclicProfile, k: u32, exists: bool) -> Result<u64> {
    let total = factor_count(profile, k)?;
    if total % 2 == 0 {
        return Ok(total / 2);
    }
    if exists {
        Err(Error::Internal(format!(
            "odd factor count {total} although self-dual codes exist"
        )))
    } else {
        Err(Error::domain(format!("factor count {total} is odd")))
    }
}

/// Half the number of irreducible factors of `x^{2^nu n'} + 1` over `F_{p^l}`.
pub fn t_exponent(profile: &NegacyclicProfile) -> Result<u64> {
    let as_euclidean = NegacyclicProfile::new(
        profile.p(),
        profile.l(),
        DualKind::Euclidean,
        profile.nu(),
        profile.r(),
        profile.n_prime(),
    )?;
    half_sum(profile, profile.l(), exists_self_dual(&as_euclidean))
}

/// Half the number of irreducible factors of `x^{2^nu n'} + 1` over `F_{p^{2l}}`.
pub fn tau_exponent(profile: &NegacyclicProfile) -> Result<u64> {
    half_sum(profile, 2 * profile.l(), exists_self_dual(profile))
}

/// `gcd(2^{nu-1}, alpha_p l)`: the exponent when `n' = 1`.
pub fn t_closed_form(p: u64, l: u32, nu: u32) -> Result<u64> {
    let a = alpha_p(p, nu)?;
    Ok(gcd_with_zero(1 << (nu - 1), a.alpha * l as u64))
}

/// `gcd(2^{nu-1}, 2 alpha_p l)`.
pub fn tau_closed_form(p: u64, l: u32, nu: u32) -> Result<u64> {
    let a = alpha_p(p, nu)?;
    Ok(gcd_with_zero(1 << (nu - 1), 2 * a.alpha * l as u64))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    pub exists: bool,
    /// `t` or `tau`; `None` only when no code exists and the factor count is odd.
    pub exponent: Option<u64>,
    pub count: BigUint,
    pub dual_kind: DualKind,
}

pub fn count_self_dual(profile: &NegacyclicProfile) -> Result<CensusResult> {
    let exists = exists_self_dual(profile);
    let k = profile.alphabet_degree();
    let exponent = match half_sum(profile, k, exists) {
        Ok(e) => Some(e),
        Err(Error::Domain(_)) => None,
        Err(e) => return Err(e),
    };
    let count = match (exists, exponent) {
        (true, Some(e)) => {
            let e = u32::try_from(e).map_err(|_| Error::domain("exponent too large"))?;
            BigUint::from(profile.multiplicity() + 1).pow(e)
        }
        _ => BigUint::from(0u32),
    };
    Ok(CensusResult {
        exists,
        exponent,
        count,
        dual_kind: profile.dual(),
    })
}
