//! Multimodular resultants: `Res(a, b)` modulo word-size primes, combined
//! by the Chinese remainder theorem once the modulus product exceeds twice
//! a known bound on the absolute value.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::finite_field::{is_prime, mul_mod, pow_mod};

const PRIME_CEILING: u64 = (1 << 31) - 1;

/// Distinct primes below 2^31, descending, extended on demand.
fn modular_prime(i: usize) -> u64 {
    static PRIMES: OnceLock<Mutex<Vec<u64>>> = OnceLock::new();
    let mut primes = PRIMES.get_or_init(Default::default).lock().unwrap();
    while primes.len() <= i {
        let mut c = primes.last().map_or(PRIME_CEILING, |&p| p - 2);
        while !is_prime(c) {
            c -= 2;
        }
        primes.push(c);
    }
    primes[i]
}

fn reduce(f: &[BigInt], l: u64) -> Vec<u64> {
    let lb = BigInt::from(l);
    let mut out: Vec<u64> = f
        .iter()
        .map(|c| c.mod_floor(&lb).to_u64().expect("residue fits"))
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn rem(f: &[u64], g: &[u64], l: u64) -> Vec<u64> {
    let dg = g.len() - 1;
    let inv = pow_mod(g[dg], l - 2, l);
    let mut r = f.to_vec();
    while r.len() > dg {
        let top = r.len() - 1;
        let c = mul_mod(r[top], inv, l);
        if c != 0 {
            let shift = top - dg;
            for (i, &gi) in g.iter().enumerate() {
                r[shift + i] = (r[shift + i] + l - mul_mod(c, gi, l)) % l;
            }
        }
        r.pop();
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

/// `Res(a, b) = lc(a)^deg(b) * prod_{a(x)=0} b(x)` over `F_l`, for nonzero
/// `a` and `b` given with trimmed leading coefficients.
fn resultant_mod(a: &[u64], b: &[u64], l: u64) -> u64 {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    let mut acc = 1u64;
    loop {
        if b.is_empty() {
            return 0;
        }
        let (da, db) = (a.len() - 1, b.len() - 1);
        if da == 0 {
            return mul_mod(acc, pow_mod(a[0], db as u64, l), l);
        }
        if db == 0 {
            return mul_mod(acc, pow_mod(b[0], da as u64, l), l);
        }
        let r = rem(&b, &a, l);
        if r.is_empty() {
            return 0;
        }
        let dr = r.len() - 1;
        acc = mul_mod(acc, pow_mod(a[da], (db - dr) as u64, l), l);
        if (da * dr) % 2 == 1 {
            acc = (l - acc) % l;
        }
        b = a;
        a = r;
    }
}

/// Exact `Res(a, b)` for a monic `a`, given `|Res(a, b)| <= bound`.
pub fn resultant_monic(a: &[BigInt], b: &[BigInt], bound: &BigInt) -> BigInt {
    debug_assert!(a.last().is_some_and(One::is_one));
    if b.iter().all(Zero::is_zero) {
        return BigInt::zero();
    }
    let target = bound * 2u32;
    let mut modulus = BigInt::one();
    let mut value = BigInt::zero();
    let mut i = 0;
    while modulus <= target {
        let l = modular_prime(i);
        i += 1;
        let bl = reduce(b, l);
        // a is monic, so its reduction keeps its degree.
        let r = if bl.is_empty() {
            0
        } else {
            resultant_mod(&reduce(a, l), &bl, l)
        };
        // Garner step: value += modulus * ((r - value) * modulus^-1 mod l).
        let lb = BigInt::from(l);
        let cur = value.mod_floor(&lb).to_u64().unwrap();
        let m_inv = pow_mod(modulus.mod_floor(&lb).to_u64().unwrap(), l - 2, l);
        let t = mul_mod((r + l - cur) % l, m_inv, l);
        value += &modulus * t;
        modulus *= l;
    }
    // Symmetric representative in (-M/2, M/2].
    if &value * 2u32 > modulus {
        value -= &modulus;
    }
    debug_assert!(value.abs() <= *bound);
    value
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn primes_are_distinct_primes() {
        let ps: Vec<u64> = (0..10).map(modular_prime).collect();
        assert_eq!(ps[0], PRIME_CEILING);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(ps.iter().all(|&p| is_prime(p)));
    }

    #[test]
    fn linear_factors() {
        // Res(x - 2, b) = b(2).
        let b = z(&[5, -3, 1]);
        assert_eq!(resultant_monic(&z(&[-2, 1]), &b, &BigInt::from(100)), BigInt::from(3));
        // Res((x-1)(x-3), x - 2) = (1-2)(3-2) = -1
        let a = z(&[3, -4, 1]);
        assert_eq!(resultant_monic(&a, &z(&[-2, 1]), &BigInt::from(10)), BigInt::from(-1));
    }

    #[test]
    fn large_values_need_several_primes() {
        // Res(x - c, x^5) = c^5 with c near 2^40.
        let c: i64 = (1 << 40) + 15;
        let bound = BigInt::from(c).pow(5);
        let b = z(&[0, 0, 0, 0, 0, 1]);
        assert_eq!(resultant_monic(&z(&[-c, 1]), &b, &bound), bound);
        let neg = resultant_monic(&z(&[c, 1]), &b, &bound);
        assert_eq!(neg, -bound);
    }
}
