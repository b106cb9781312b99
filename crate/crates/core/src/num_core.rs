//! Exact modular and multiplicative arithmetic on 64-bit integers.
//!
//! Everything here is exact for moduli up to 2^63: products go through a
//! 128-bit widening multiply, primality is a deterministic Miller-Rabin with
//! a witness set that covers all of u64, and factorization is trial division
//! below 10^6 followed by Brent's variant of Pollard rho.

use crate::{Error, Result};

/// (a·b) mod m with a 128-bit intermediate. Inputs are reduced first.
pub fn mod_mul(a: u64, b: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    Ok(mulmod(a % m, b % m, m))
}

/// Unchecked widening multiply-reduce; callers guarantee m ≥ 1.
#[inline]
pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// base^exp mod m by square-and-multiply. mod_pow(x, 0, m) = 1 mod m.
pub fn mod_pow(base: u64, exp: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    Ok(powmod(base, exp, m))
}

#[inline]
pub(crate) fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// lcm(a, b); zero inputs give zero. Overflow is an error, never a wrap.
pub fn lcm(a: u64, b: u64) -> Result<u64> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    (a / gcd(a, b))
        .checked_mul(b)
        .ok_or_else(|| Error::Overflow(format!("lcm({a}, {b})")))
}

/// lcm over a slice; the empty product is 1. Zero entries are rejected.
pub fn lcm_all(values: &[u64]) -> Result<u64> {
    let mut acc = 1u64;
    for &v in values {
        if v == 0 {
            return Err(Error::ZeroInput);
        }
        acc = lcm(acc, v)?;
    }
    Ok(acc)
}

const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic Miller-Rabin, exact for every 64-bit input.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in MR_WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in MR_WITNESSES {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Multiset of (prime, exponent) pairs, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Reconstructs the factored integer.
    pub fn value(&self) -> u64 {
        self.factors
            .iter()
            .fold(1u64, |acc, &(p, e)| acc * p.pow(e))
    }

    /// The prime-power parts p^e, in prime order.
    pub fn prime_powers(&self) -> Vec<u64> {
        self.factors.iter().map(|&(p, e)| p.pow(e)).collect()
    }
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Trial division below 10^6, then Brent-rho splitting with Miller-Rabin
/// certification of every emitted factor.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let mut n = n;
    let mut factors: Vec<(u64, u32)> = Vec::new();
    let push = |factors: &mut Vec<(u64, u32)>, p: u64, e: u32| {
        if let Some(last) = factors.last_mut() {
            if last.0 == p {
                last.1 += e;
                return;
            }
        }
        factors.push((p, e));
    };

    for d in std::iter::once(2).chain((3..).step_by(2)) {
        if d > TRIAL_LIMIT || d * d > n {
            break;
        }
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            push(&mut factors, d, e);
        }
    }

    if n > 1 {
        // Any surviving cofactor has no prime factor below 10^6.
        let mut stack = vec![n];
        let mut large: Vec<u64> = Vec::new();
        while let Some(v) = stack.pop() {
            if is_prime(v) {
                large.push(v);
            } else {
                let d = brent_rho(v);
                stack.push(d);
                stack.push(v / d);
            }
        }
        large.sort_unstable();
        for p in large {
            push(&mut factors, p, 1);
        }
    }

    factors.sort_unstable();
    Ok(Factorization { factors })
}

/// Brent's cycle-based Pollard rho. Input is composite with no small factors;
/// polynomial offsets are tried deterministically until a split is found.
fn brent_rho(n: u64) -> u64 {
    debug_assert!(n > 1 && !is_prime(n) && n % 2 == 1);
    for c in 1u64.. {
        let f = |x: u64| (mulmod(x, x, n) + c) % n;
        let mut y = 2u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut x = 0u64;
        let mut ys = 0u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0u64;
            while k < r && g == 1 {
                ys = y;
                let block = 128.min(r - k);
                for _ in 0..block {
                    y = f(y);
                    q = mulmod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += block;
            }
            r *= 2;
        }
        if g == n {
            // gcd batch overshot; retry one step at a time from the save point
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

/// Euler's totient from the factorization: φ(p^e) = (p−1)p^{e−1}, multiplied
/// over the distinct primes.
pub fn euler_phi(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    Ok(f.factors
        .iter()
        .fold(1u64, |acc, &(p, e)| acc * (p - 1) * p.pow(e - 1)))
}

/// Largest odd divisor of n.
pub fn odd_part(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    n >> n.trailing_zeros()
}

/// Smallest e ≥ 1 with a^e ≡ 1 (mod m). Computed by stripping prime factors
/// from φ(m), so moduli near 2^32 stay fast. ord mod 1 is 1 by convention.
pub fn multiplicative_order(a: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    if m == 1 {
        return Ok(1);
    }
    let a = a % m;
    if gcd(a, m) != 1 {
        return Err(Error::NotCoprime { a, m });
    }
    let phi = euler_phi(m)?;
    let mut e = phi;
    for &(q, _) in &factorize(phi)?.factors {
        while e % q == 0 && powmod(a, e / q, m) == 1 {
            e /= q;
        }
    }
    Ok(e)
}

/// Euler's criterion: a is a square mod the odd prime p iff
/// a^{(p−1)/2} ≡ 1 (mod p).
pub fn is_quadratic_residue(a: u64, p: u64) -> Result<bool> {
    if p < 3 || p % 2 == 0 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if a % p == 0 {
        return Err(Error::NotCoprime { a: a % p, m: p });
    }
    Ok(powmod(a % p, (p - 1) / 2, p) == 1)
}

/// True iff ord_m(a) = φ(m).
pub fn is_primitive_root(a: u64, m: u64) -> Result<bool> {
    let ord = multiplicative_order(a, m)?;
    Ok(ord == euler_phi(m.max(1))?)
}

/// Index k with p = 2^{2^k} + 1 prime. Only k = 0..4 exist within 64 bits.
pub fn fermat_index(p: u64) -> Option<u32> {
    match p {
        3 => Some(0),
        5 => Some(1),
        17 => Some(2),
        257 => Some(3),
        65537 => Some(4),
        _ => None,
    }
}

/// The k-th Fermat prime, k = 0..4.
pub fn fermat_prime(k: u32) -> Result<u64> {
    match k {
        0 => Ok(3),
        1 => Ok(5),
        2 => Ok(17),
        3 => Ok(257),
        4 => Ok(65537),
        _ => Err(Error::FermatIndexOutOfRange(k)),
    }
}

/// m ∈ {1, 2, 4, p^a, 2p^a} for an odd prime p.
pub fn has_primitive_root(m: u64) -> bool {
    if m == 0 {
        return false;
    }
    if m <= 4 {
        return true;
    }
    let f = match factorize(m) {
        Ok(f) => f,
        Err(_) => return false,
    };
    match f.factors.as_slice() {
        [(p, _)] => *p != 2,
        [(2, 1), _] => true,
        _ => false,
    }
}

/// Number of solutions to x^d ≡ 1 (mod m): gcd(d, φ(m)) when m has a
/// primitive root. Other moduli are rejected; the graph oracle covers them.
pub fn count_dth_roots_of_unity(d: u64, m: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::ZeroInput);
    }
    if !has_primitive_root(m) {
        return Err(Error::NoPrimitiveRoot(m));
    }
    Ok(gcd(d, euler_phi(m)?))
}

/// Solvability of x^d ≡ a (mod m): a^{φ(m)/gcd(d, φ(m))} ≡ 1.
pub fn is_dth_power_residue(a: u64, d: u64, m: u64) -> Result<bool> {
    if d == 0 {
        return Err(Error::ZeroInput);
    }
    if !has_primitive_root(m) {
        return Err(Error::NoPrimitiveRoot(m));
    }
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    let a = a % m.max(1);
    if gcd(a, m) != 1 && m > 1 {
        return Err(Error::NotCoprime { a, m });
    }
    let phi = euler_phi(m)?;
    let e = phi / gcd(d, phi);
    Ok(powmod(a, e, m) == 1 % m)
}

/// Primes up to and including n, by sieve.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut p = 2usize;
    while p * p <= n {
        if sieve[p] {
            for q in (p * p..=n).step_by(p) {
                sieve[q] = false;
            }
        }
        p += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i as u64))
        .collect()
}
