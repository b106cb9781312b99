//! Closed forms for L(m).
//!
//! For an odd prime p with n the largest odd divisor of p−1:
//! L(p) = ord_n(2), L(p²) = lcm(L(p), ord_p(2)), L(p^n) = p^{n−2}·L(p²) for
//! n ≥ 3, and L(m) is the lcm of L over the prime-power factors of m.
//! Fermat primes admit the special forms L(F_k) = 1 and L(F_k²) = 2^{k+1};
//! those are kept as redundant checks, the generic path handles them too.

use serde::Serialize;

use crate::num_core::{
    factorize, fermat_index, fermat_prime, is_prime, is_primitive_root, lcm, lcm_all,
    multiplicative_order, odd_part,
};
use crate::{Error, Result};

/// Which derivation produced an L value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Route {
    #[serde(rename = "prime")]
    Prime,
    #[serde(rename = "prime-square")]
    PrimeSquare,
    #[serde(rename = "prime-power")]
    PrimePower,
    #[serde(rename = "composite-lcm")]
    CompositeLcm,
    #[serde(rename = "fermat-special")]
    FermatSpecial,
    #[serde(rename = "brute-force")]
    BruteForce,
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Route::Prime => "prime",
            Route::PrimeSquare => "prime-square",
            Route::PrimePower => "prime-power",
            Route::CompositeLcm => "composite-lcm",
            Route::FermatSpecial => "fermat-special",
            Route::BruteForce => "brute-force",
        };
        f.write_str(s)
    }
}

/// L(m) plus the route that derived it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LValue {
    pub modulus: u64,
    pub value: u64,
    pub route: Route,
}

/// L(p) = ord_n(2) for n the odd part of p−1; L(2) = 1.
pub fn l_prime(p: u64) -> Result<LValue> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let value = if p == 2 {
        1
    } else {
        multiplicative_order(2, odd_part(p - 1))?
    };
    Ok(LValue {
        modulus: p,
        value,
        route: Route::Prime,
    })
}

/// L(p²) = lcm(L(p), ord_p(2)); L(4) = 1.
pub fn l_prime_square(p: u64) -> Result<LValue> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let value = if p == 2 {
        1
    } else {
        lcm(l_prime(p)?.value, multiplicative_order(2, p)?)?
    };
    Ok(LValue {
        modulus: p * p,
        value,
        route: Route::PrimeSquare,
    })
}

/// L(p^n) = p^{n−2}·L(p²) for n ≥ 3 and odd p; all powers of 2 give 1.
pub fn l_prime_power(p: u64, n: u32) -> Result<LValue> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let modulus = p
        .checked_pow(n)
        .ok_or_else(|| Error::Overflow(format!("{p}^{n}")))?;
    let (value, route) = match (p, n) {
        (2, _) => (1, Route::PrimePower),
        (_, 1) => (l_prime(p)?.value, Route::Prime),
        (_, 2) => (l_prime_square(p)?.value, Route::PrimeSquare),
        _ => {
            let scale = p
                .checked_pow(n - 2)
                .ok_or_else(|| Error::Overflow(format!("{p}^{}", n - 2)))?;
            let v = scale
                .checked_mul(l_prime_square(p)?.value)
                .ok_or_else(|| Error::Overflow(format!("L({p}^{n})")))?;
            (v, Route::PrimePower)
        }
    };
    Ok(LValue {
        modulus,
        value,
        route,
    })
}

/// Generic dispatch: lcm of L over the prime-power factors of m.
pub fn l_of(m: u64) -> Result<LValue> {
    if m == 0 {
        return Err(Error::ZeroInput);
    }
    let f = factorize(m)?;
    match f.factors.as_slice() {
        [] => Ok(LValue {
            modulus: 1,
            value: 1,
            route: Route::CompositeLcm,
        }),
        [(p, e)] => {
            let mut lv = l_prime_power(*p, *e)?;
            lv.modulus = m;
            Ok(lv)
        }
        parts => {
            let values: Vec<u64> = parts
                .iter()
                .map(|&(p, e)| l_prime_power(p, e).map(|lv| lv.value))
                .collect::<Result<_>>()?;
            Ok(LValue {
                modulus: m,
                value: lcm_all(&values)?,
                route: Route::CompositeLcm,
            })
        }
    }
}

/// L(F_k) = 1 for the known Fermat primes.
pub fn fermat_l(k: u32) -> Result<LValue> {
    let p = fermat_prime(k)?;
    Ok(LValue {
        modulus: p,
        value: 1,
        route: Route::FermatSpecial,
    })
}

/// L(F_k²) = 2^{k+1} for the known Fermat primes.
pub fn fermat_l_square(k: u32) -> Result<LValue> {
    let p = fermat_prime(k)?;
    Ok(LValue {
        modulus: p * p,
        value: 1 << (k + 1),
        route: Route::FermatSpecial,
    })
}

/// Both sides of the (p−3)/2 criterion. For non-Fermat odd primes,
/// L(p) = (p−3)/2 iff q = (p−1)/2 is prime and 2 generates the units mod q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub lhs: bool,
    pub rhs: bool,
}

pub fn theorem_43_check(p: u64) -> Result<TheoremCheck> {
    if p == 2 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if fermat_index(p).is_some() {
        return Err(Error::FermatPrime(p));
    }
    let q = (p - 1) / 2;
    let lhs = l_prime(p)?.value == (p - 3) / 2;
    let rhs = is_prime(q) && is_primitive_root(2, q)?;
    Ok(TheoremCheck { lhs, rhs })
}

/// L(p²) ≤ (p−1)·L(p).
pub fn bound_45_check(p: u64) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(l_prime_square(p)?.value <= (p - 1) * l_prime(p)?.value)
}

/// (p, L(p), L(p²), k) with k·L(p²) = (p−1)·L(p) exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrimeClassRecord {
    pub p: u64,
    pub l_p: u64,
    pub l_p2: u64,
    pub k: u64,
}

/// The ratio class k with L(p²) = (p−1)·L(p)/k. Divisibility is guaranteed
/// because L(p²) = lcm(L(p), ord_p(2)) and ord_p(2) divides p−1; a non-exact
/// division would mean the arithmetic underneath is broken.
pub fn classify_ratio(p: u64) -> Result<PrimeClassRecord> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let l_p = l_prime(p)?.value;
    let l_p2 = l_prime_square(p)?.value;
    let num = (p - 1)
        .checked_mul(l_p)
        .ok_or_else(|| Error::Overflow(format!("(p-1)*L(p) for p={p}")))?;
    if num % l_p2 != 0 {
        return Err(Error::Inconsistency(format!(
            "(p-1)*L(p) = {num} not divisible by L(p^2) = {l_p2} for p = {p}"
        )));
    }
    Ok(PrimeClassRecord {
        p,
        l_p,
        l_p2,
        k: num / l_p2,
    })
}
