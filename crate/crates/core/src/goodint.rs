//! Classification of generalized good integers.
//!
//! For coprime odd `a`, `b` and a shift `beta`, a positive `d` is
//! `2^beta`-good when `2^beta * d` divides `a^k + b^k` for some `k >= 1`,
//! oddly-good when such a `k` can be odd and evenly-good when it can be even.
//!
//! Classification never searches for `k`. Writing `d = 2^i * D` with `D` odd
//! and `e = beta + i`, membership depends only on `e`, on `gamma` (the exact
//! power of two in `a + b`) and on the 2-adic valuations of `ord_p(a/b)` for
//! the primes `p | D`. The witnesses reported alongside the verdict are built
//! from the orders modulo the prime powers of `D` and re-checked by modular
//! exponentiation before they are returned.

use std::fmt;

use crate::arith::{factorize, gcd, lcm, mod_pow, ratio_order, reduce};
use crate::error::{Error, Result};

/// Coprime odd pair `(a, b)` with a shift `beta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GoodParams {
    a: i64,
    b: i64,
    beta: u32,
    gamma: u32,
}

/// Exact 2-adic valuation of `|a + b|` for odd `a`, `b`.
pub fn gamma(a: i64, b: i64) -> Result<u32> {
    let sum = a as i128 + b as i128;
    if sum == 0 {
        return Err(Error::domain(format!(
            "a + b = 0 for (a, b) = ({a}, {b}); the pair is degenerate"
        )));
    }
    Ok(sum.unsigned_abs().trailing_zeros())
}

impl GoodParams {
    pub fn new(a: i64, b: i64, beta: u32) -> Result<Self> {
        if a % 2 == 0 || b % 2 == 0 {
            return Err(Error::domain(format!(
                "a and b must both be odd, got ({a}, {b})"
            )));
        }
        if gcd(a.unsigned_abs(), b.unsigned_abs()) != 1 {
            return Err(Error::domain(format!(
                "a and b must be coprime, got ({a}, {b})"
            )));
        }
        let gamma = gamma(a, b)?;
        Ok(Self { a, b, beta, gamma })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    /// `2^gamma || a + b`.
    pub fn gamma(&self) -> u32 {
        self.gamma
    }

    pub fn with_beta(&self, beta: u32) -> Self {
        Self { beta, ..*self }
    }
}

/// Which rule decided a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    /// `d` shares a prime with `ab`; no power sum can be divisible by it.
    SharedFactorWithAb,
    /// `2^beta * d` is 1 or 2, which divides every `a^k + b^k`.
    TrivialModulus,
    /// `2^beta * d` is a power of two at least 4: good iff it divides `a + b`.
    PowerOfTwo,
    /// The power of two in `2^beta * d` exceeds the one in `a + b`.
    ExceedsGamma,
    /// Odd part decided by a common valuation `s` of `ord_p(a/b)`.
    UniformOrderValuation,
    /// Odd part decided by `2 || ord_p(a/b)` for every prime `p`.
    OrderValuationOne,
    /// Decided by exhaustive exponent search.
    ExhaustiveSearch,
}

impl Reason {
    pub fn tag(&self) -> &'static str {
        match self {
            Reason::SharedFactorWithAb => "shares-factor-with-ab",
            Reason::TrivialModulus => "trivial-modulus",
            Reason::PowerOfTwo => "power-of-two",
            Reason::ExceedsGamma => "exceeds-gamma",
            Reason::UniformOrderValuation => "uniform-order-valuation",
            Reason::OrderValuationOne => "order-valuation-one",
            Reason::ExhaustiveSearch => "exhaustive-search",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodnessVerdict {
    pub is_good: bool,
    pub is_oddly_good: bool,
    pub is_evenly_good: bool,
    /// Smallest odd `k` with `2^beta d | a^k + b^k`.
    pub odd_witness: Option<u64>,
    /// Smallest even `k` with `2^beta d | a^k + b^k`.
    pub even_witness: Option<u64>,
    /// Common exact 2-adic valuation of `ord_p(a/b)` over primes `p` of the odd part.
    pub uniform_s: Option<u32>,
    pub reason: Reason,
}

impl GoodnessVerdict {
    fn bad(reason: Reason) -> Self {
        Self {
            is_good: false,
            is_oddly_good: false,
            is_evenly_good: false,
            odd_witness: None,
            even_witness: None,
            uniform_s: None,
            reason,
        }
    }

    /// Same membership flags, ignoring witnesses and reason.
    pub fn same_membership(&self, other: &Self) -> bool {
        self.is_good == other.is_good
            && self.is_oddly_good == other.is_oddly_good
            && self.is_evenly_good == other.is_evenly_good
    }
}

/// The three families of generalized good integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GoodSet {
    Good,
    OddlyGood,
    EvenlyGood,
}

impl GoodSet {
    pub fn tag(&self) -> &'static str {
        match self {
            GoodSet::Good => "G",
            GoodSet::OddlyGood => "OG",
            GoodSet::EvenlyGood => "EG",
        }
    }

    pub fn contains(&self, verdict: &GoodnessVerdict) -> bool {
        match self {
            GoodSet::Good => verdict.is_good,
            GoodSet::OddlyGood => verdict.is_oddly_good,
            GoodSet::EvenlyGood => verdict.is_evenly_good,
        }
    }
}

impl std::str::FromStr for GoodSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "G" => Ok(GoodSet::Good),
            "OG" => Ok(GoodSet::OddlyGood),
            "EG" => Ok(GoodSet::EvenlyGood),
            _ => Err(Error::domain(format!(
                "unknown set {s:?}, expected G, OG or EG"
            ))),
        }
    }
}

/// Does `2^beta * d` divide `a^k + b^k`?
fn divides_power_sum(params: &GoodParams, d: u64, k: u64) -> Result<bool> {
    let modulus = 1u64
        .checked_shl(params.beta)
        .and_then(|t| t.checked_mul(d))
        .filter(|&m| m < 1 << 63)
        .ok_or_else(|| Error::domain("2^beta * d does not fit in 63 bits"))?;
    let ak = mod_pow(reduce(params.a, modulus), k, modulus);
    let bk = mod_pow(reduce(params.b, modulus), k, modulus);
    Ok((ak as u128 + bk as u128).is_multiple_of(modulus as u128))
}

pub fn classify(params: &GoodParams, d: u64) -> Result<GoodnessVerdict> {
    if d == 0 {
        return Err(Error::domain("d must be positive"));
    }
    if gcd(d, params.a.unsigned_abs()) != 1 || gcd(d, params.b.unsigned_abs()) != 1 {
        return Ok(GoodnessVerdict::bad(Reason::SharedFactorWithAb));
    }
    let i = d.trailing_zeros();
    let odd = d >> i;
    let level = params.beta + i;

    let verdict = if odd == 1 {
        if level <= 1 {
            GoodnessVerdict {
                is_good: true,
                is_oddly_good: true,
                is_evenly_good: true,
                odd_witness: Some(1),
                even_witness: Some(2),
                uniform_s: None,
                reason: Reason::TrivialModulus,
            }
        } else if level <= params.gamma {
            GoodnessVerdict {
                is_good: true,
                is_oddly_good: true,
                is_evenly_good: false,
                odd_witness: Some(1),
                even_witness: None,
                uniform_s: None,
                reason: Reason::PowerOfTwo,
            }
        } else {
            GoodnessVerdict::bad(Reason::PowerOfTwo)
        }
    } else if level >= 2 && level > params.gamma {
        GoodnessVerdict::bad(Reason::ExceedsGamma)
    } else {
        classify_odd_part(params, odd, level)?
    };

    for (witness, parity) in [(verdict.odd_witness, 1), (verdict.even_witness, 0)] {
        if let Some(k) = witness {
            if k % 2 != parity || !divides_power_sum(params, d, k)? {
                return Err(Error::Internal(format!(
                    "witness k={k} fails for (a,b,beta,d)=({},{},{},{d})",
                    params.a, params.b, params.beta
                )));
            }
        }
    }
    Ok(verdict)
}

/// Odd part `D > 1` at effective level `level`, with `level <= gamma` when `level >= 2`.
fn classify_odd_part(params: &GoodParams, odd: u64, level: u32) -> Result<GoodnessVerdict> {
    let factors = factorize(odd)?;
    let mut valuations = Vec::with_capacity(factors.factors().len());
    // half-orders modulo each prime power: ord_{p^e}(a/b) / 2 when even
    let mut half_lcm = 1u64;
    let mut halves_exist = true;
    for &(p, e) in factors.factors() {
        let ord_p = ratio_order(params.a, params.b, p)?;
        valuations.push(ord_p.trailing_zeros());
        let ord_pe = ratio_order(params.a, params.b, p.pow(e))?;
        if ord_pe % 2 == 0 {
            half_lcm = lcm(half_lcm, ord_pe / 2);
        } else {
            halves_exist = false;
        }
    }
    let uniform_s = match valuations.split_first() {
        Some((&s, rest)) if s >= 1 && rest.iter().all(|&t| t == s) => Some(s),
        _ => None,
    };
    let witness = if halves_exist && uniform_s.is_some() {
        Some(half_lcm)
    } else {
        None
    };

    let (oddly, evenly, reason) = if level >= 2 {
        (uniform_s == Some(1), false, Reason::OrderValuationOne)
    } else {
        (
            uniform_s == Some(1),
            uniform_s.is_some_and(|s| s >= 2),
            Reason::UniformOrderValuation,
        )
    };
    Ok(GoodnessVerdict {
        is_good: oddly || evenly,
        is_oddly_good: oddly,
        is_evenly_good: evenly,
        odd_witness: if oddly { witness } else { None },
        even_witness: if evenly { witness } else { None },
        uniform_s,
        reason,
    })
}

/// All `d <= limit` in the requested set, ascending.
pub fn enumerate_set(params: &GoodParams, which: GoodSet, limit: u64) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for d in 1..=limit {
        if which.contains(&classify(params, d)?) {
            out.push(d);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: i64, b: i64, beta: u32) -> GoodParams {
        GoodParams::new(a, b, beta).unwrap()
    }

    #[test]
    fn parameter_validation() {
        assert!(GoodParams::new(2, 1, 0).is_err());
        assert!(GoodParams::new(3, 9, 0).is_err());
        assert!(GoodParams::new(1, -1, 0).is_err());
        assert!(GoodParams::new(-1, 1, 0).is_err());
        assert!(GoodParams::new(-3, 1, 0).is_ok());
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(params(3, 1, 0).gamma(), 2);
        assert_eq!(params(5, 1, 0).gamma(), 1);
        assert_eq!(params(7, 1, 0).gamma(), 3);
        assert_eq!(params(-9, 1, 0).gamma(), 3);
        let err = gamma(1, -1).unwrap_err();
        assert!(err.to_string().contains("(1, -1)"));
    }

    #[test]
    fn worked_examples() {
        let v = classify(&params(3, 1, 0), 5).unwrap();
        assert!(v.is_good && v.is_evenly_good && !v.is_oddly_good);
        assert_eq!(v.even_witness, Some(2));
        assert_eq!(v.uniform_s, Some(2));

        let v = classify(&params(3, 1, 0), 7).unwrap();
        assert!(v.is_good && v.is_oddly_good && !v.is_evenly_good);
        assert_eq!(v.odd_witness, Some(3));

        assert!(!classify(&params(3, 1, 0), 35).unwrap().is_good);
        for d in [5, 7] {
            assert!(classify(&params(3, 1, 1), d).unwrap().is_good);
        }
        assert!(!classify(&params(3, 1, 1), 35).unwrap().is_good);
    }

    #[test]
    fn powers_of_two() {
        let v = classify(&params(3, 1, 2), 1).unwrap();
        assert!(v.is_good && v.is_oddly_good && !v.is_evenly_good);
        assert_eq!(v.odd_witness, Some(1));
        assert_eq!(v.reason, Reason::PowerOfTwo);

        let v = classify(&params(3, 1, 3), 1).unwrap();
        assert!(!v.is_good);
    }

    #[test]
    fn shared_factor_is_bad() {
        let v = classify(&params(3, 1, 0), 9).unwrap();
        assert!(!v.is_good);
        assert_eq!(v.reason, Reason::SharedFactorWithAb);
        assert!(classify(&params(3, 1, 0), 0).is_err());
    }

    #[test]
    fn even_d_at_level_one_can_be_evenly_good() {
        // 10 | 3^2 + 1
        let v = classify(&params(3, 1, 0), 10).unwrap();
        assert!(v.is_evenly_good && !v.is_oddly_good);
        assert_eq!(v.even_witness, Some(2));
    }

    #[test]
    fn enumerate_examples() {
        assert!(enumerate_set(&params(3, 1, 3), GoodSet::Good, 100)
            .unwrap()
            .is_empty());
        assert_eq!(
            enumerate_set(&params(3, 1, 2), GoodSet::Good, 10).unwrap(),
            vec![1, 7]
        );
        for (a, b) in [(3, 1), (5, 1), (7, 1), (9, 5), (-5, 3)] {
            let g = params(a, b, 0).gamma();
            for beta in 0..=g {
                let set = enumerate_set(&params(a, b, beta), GoodSet::Good, 20).unwrap();
                assert_eq!(set.first(), Some(&1));
            }
        }
    }

    #[test]
    fn set_names_parse() {
        assert_eq!("g".parse::<GoodSet>().unwrap(), GoodSet::Good);
        assert_eq!("OG".parse::<GoodSet>().unwrap(), GoodSet::OddlyGood);
        assert_eq!("eg".parse::<GoodSet>().unwrap(), GoodSet::EvenlyGood);
        assert!("X".parse::<GoodSet>().is_err());
    }
}
