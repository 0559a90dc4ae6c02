//! Word-size integer number theory: factorization, primality, Euler's
//! totient and multiplicative orders.

use crate::{Error, Result};

/// Largest input accepted by [`factorize`].
pub const FACTORIZE_LIMIT: u64 = (1 << 63) - 1;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut base = base % m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factorization with multiplicity, in ascending order.
///
/// `factorize(1)` is the empty product.
pub fn factorize(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::invalid("cannot factorize 0"));
    }
    if n > FACTORIZE_LIMIT {
        return Err(Error::invalid(format!(
            "{n} exceeds the factorization limit {FACTORIZE_LIMIT}"
        )));
    }
    let mut rest = n;
    let mut factors = Vec::new();
    for d in [2u64, 3] {
        while rest.is_multiple_of(d) {
            factors.push(d);
            rest /= d;
        }
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= rest {
        for c in [d, d + 2] {
            while rest.is_multiple_of(c) {
                factors.push(c);
                rest /= c;
            }
        }
        d += 6;
    }
    if rest > 1 {
        factors.push(rest);
    }
    Ok(factors)
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(n: u64) -> Result<Vec<u64>> {
    let mut f = factorize(n)?;
    f.dedup();
    Ok(f)
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let mut divs = vec![1u64];
    let factors = factorize(n)?;
    let mut i = 0;
    while i < factors.len() {
        let r = factors[i];
        let mut mult = 0;
        while i < factors.len() && factors[i] == r {
            mult += 1;
            i += 1;
        }
        let base = divs.clone();
        let mut pw = 1u64;
        for _ in 0..mult {
            pw *= r;
            divs.extend(base.iter().map(|d| d * pw));
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

pub fn euler_phi(n: u64) -> Result<u64> {
    let mut phi = n;
    for r in prime_divisors(n)? {
        phi = phi / r * (r - 1);
    }
    Ok(phi)
}

/// Largest squarefree divisor of `n`.
pub fn radical(n: u64) -> Result<u64> {
    Ok(prime_divisors(n)?.into_iter().product())
}

/// Multiplicative order of `a` modulo `k`.
///
/// Starts from the group order `phi(k)` and strips prime factors while the
/// power stays at 1.
pub fn mult_order(a: u64, k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::invalid("modulus must be positive"));
    }
    if gcd(a % k, k) != 1 && k != 1 {
        return Err(Error::invalid(format!("gcd({a}, {k}) != 1")));
    }
    if k == 1 {
        return Ok(1);
    }
    let mut order = euler_phi(k)?;
    for r in prime_divisors(order)? {
        while order % r == 0 && pow_mod(a, order / r, k) == 1 {
            order /= r;
        }
    }
    Ok(order)
}
