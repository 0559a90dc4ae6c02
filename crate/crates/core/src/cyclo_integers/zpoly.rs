//! Dense integer polynomials, low degree first, and cyclotomic polynomials.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::finite_field::divisors;

pub type ZPoly = Vec<BigInt>;

pub fn trim(f: &mut ZPoly) {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder of `f` by a monic `g`.
pub fn divrem_monic(f: &[BigInt], g: &[BigInt]) -> (ZPoly, ZPoly) {
    debug_assert!(g.last().is_some_and(One::is_one), "divisor must be monic");
    let dg = g.len() - 1;
    let mut r: ZPoly = f.to_vec();
    trim(&mut r);
    if r.len() <= dg {
        return (Vec::new(), r);
    }
    let mut quot = vec![BigInt::zero(); r.len() - dg];
    for top in (dg..r.len()).rev() {
        let c = std::mem::take(&mut r[top]);
        if c.is_zero() {
            continue;
        }
        let shift = top - dg;
        for (i, gi) in g[..dg].iter().enumerate() {
            if !gi.is_zero() {
                r[shift + i] -= &c * gi;
            }
        }
        quot[shift] = c;
    }
    r.truncate(dg);
    trim(&mut r);
    trim(&mut quot);
    (quot, r)
}

pub fn rem_monic(f: &[BigInt], g: &[BigInt]) -> ZPoly {
    divrem_monic(f, g).1
}

fn cache() -> &'static Mutex<HashMap<u64, Arc<ZPoly>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<ZPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `k`-th cyclotomic polynomial, obtained by dividing `x^k - 1` by
/// `Phi_d` for every proper divisor `d` of `k`.
pub fn cyclotomic_poly(k: u64) -> Arc<ZPoly> {
    assert!(k >= 1, "cyclotomic polynomials are indexed from 1");
    if let Some(hit) = cache().lock().unwrap().get(&k) {
        return Arc::clone(hit);
    }
    let mut num = vec![BigInt::zero(); k as usize + 1];
    num[0] = BigInt::from(-1);
    num[k as usize] = BigInt::one();
    for d in divisors(k).expect("k >= 1") {
        if d == k {
            continue;
        }
        let phi_d = cyclotomic_poly(d);
        let (quot, rem) = divrem_monic(&num, &phi_d);
        debug_assert!(rem.is_empty(), "Phi_{d} must divide x^{k} - 1");
        num = quot;
    }
    let phi = Arc::new(num);
    cache().lock().unwrap().insert(k, Arc::clone(&phi));
    phi
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> ZPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(*cyclotomic_poly(1), z(&[-1, 1]));
        assert_eq!(*cyclotomic_poly(2), z(&[1, 1]));
        assert_eq!(*cyclotomic_poly(3), z(&[1, 1, 1]));
        assert_eq!(*cyclotomic_poly(6), z(&[1, -1, 1]));
        assert_eq!(*cyclotomic_poly(12), z(&[1, 0, -1, 0, 1]));
        assert_eq!(*cyclotomic_poly(30), z(&[1, 1, 0, -1, -1, -1, 0, 1, 1]));
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        let phi = cyclotomic_poly(105);
        assert_eq!(phi.len(), 49);
        assert_eq!(phi[7], BigInt::from(-2));
        assert_eq!(phi[41], BigInt::from(-2));
    }

    #[test]
    fn product_over_divisors_is_x_k_minus_one() {
        for k in 1..=60u64 {
            let prod = divisors(k)
                .unwrap()
                .into_iter()
                .fold(z(&[1]), |acc, d| mul(&acc, &cyclotomic_poly(d)));
            let mut expected = vec![BigInt::zero(); k as usize + 1];
            expected[0] = BigInt::from(-1);
            expected[k as usize] = BigInt::one();
            assert_eq!(prod, expected, "k = {k}");
        }
    }

    #[test]
    fn division_identity() {
        let f = z(&[3, -2, 0, 5, 1, 7]);
        let g = z(&[1, 1, 1]);
        let (quot, rem) = divrem_monic(&f, &g);
        let mut back = mul(&quot, &g);
        back.resize(f.len(), BigInt::zero());
        for (i, r) in rem.iter().enumerate() {
            back[i] += r;
        }
        assert_eq!(back, f);
        assert!(rem.len() < 3);
    }
}
