//! Oracles shared by the integration tests. Nothing here calls into the
//! crate's own norm, determinant or cyclotomic-polynomial code.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::Rng;

use cyclonum_core::finite_field::{divisors, factorize};

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n).unwrap();
    for w in f.windows(2) {
        if w[0] == w[1] {
            return 0;
        }
    }
    if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `Phi_k` as the product of `(x^d - 1)^mu(k/d)` over `d | k`.
pub fn phi_poly(k: u64) -> Vec<i128> {
    let mut num: Vec<i128> = vec![1];
    let mut den: Vec<i128> = vec![1];
    for d in divisors(k).unwrap() {
        let mu = mobius(k / d);
        if mu == 0 {
            continue;
        }
        let mut t = vec![0i128; d as usize + 1];
        t[0] = -1;
        t[d as usize] = 1;
        let target = if mu == 1 { &mut num } else { &mut den };
        *target = poly_mul(target, &t);
    }
    let (q, r) = poly_div(&num, &den);
    assert!(r.iter().all(|&c| c == 0));
    q
}

fn poly_mul(a: &[i128], b: &[i128]) -> Vec<i128> {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Division by a polynomial with leading coefficient `+-1`.
fn poly_div(a: &[i128], b: &[i128]) -> (Vec<i128>, Vec<i128>) {
    let mut r = a.to_vec();
    let lead = *b.last().unwrap();
    assert!(lead == 1 || lead == -1);
    if a.len() < b.len() {
        return (vec![0], r);
    }
    let mut q = vec![0i128; a.len() - b.len() + 1];
    for i in (0..q.len()).rev() {
        let c = r[i + b.len() - 1] * lead;
        q[i] = c;
        for (j, &y) in b.iter().enumerate() {
            r[i + j] -= c * y;
        }
    }
    r.truncate(b.len() - 1);
    (q, r)
}

/// Determinant by Gaussian elimination over the rationals.
pub fn det_rational(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigInt::zero();
        };
        if piv != c {
            m.swap(piv, c);
            det = -det;
        }
        det *= m[c][c].clone();
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &m[c][c];
            let (top, rest) = m.split_at_mut(r);
            for (x, y) in rest[0][c..].iter_mut().zip(&top[c][c..]) {
                *x -= &f * y;
            }
        }
    }
    assert!(det.is_integer());
    det.to_integer()
}

/// `N(f(zeta_k))` as the determinant of multiplication by `f` on the basis
/// `1, x, ..., x^(phi - 1)` of `Z[x] / Phi_k`.
pub fn norm_oracle(k: u64, coeffs: &[i64]) -> BigInt {
    let phi = phi_poly(k);
    let d = phi.len() - 1;
    let f: Vec<i128> = coeffs.iter().map(|&c| c as i128).collect();
    let (_, mut h) = poly_div(&f, &phi);
    h.resize(d, 0);
    let mut cols = Vec::with_capacity(d);
    for _ in 0..d {
        cols.push(h.clone());
        // h <- x h mod Phi_k
        let top = h[d - 1];
        h.rotate_right(1);
        h[0] = 0;
        for i in 0..d {
            h[i] -= top * phi[i];
        }
    }
    let rows: Vec<Vec<BigInt>> = (0..d)
        .map(|i| (0..d).map(|j| BigInt::from(cols[j][i])).collect())
        .collect();
    det_rational(&rows)
}

pub fn random_coeffs(rng: &mut StdRng, k: u64, bound: i64) -> Vec<i64> {
    (0..k).map(|_| rng.gen_range(-bound..=bound)).collect()
}

pub fn prime_powers(q_max: u64) -> Vec<(u64, u32)> {
    (2..=q_max)
        .filter_map(|q| {
            let f = factorize(q).ok()?;
            f.iter().all(|&r| r == f[0]).then(|| (f[0], f.len() as u32))
        })
        .collect()
}

/// Fixed-point complex arithmetic with `BITS` fractional bits, about 216
/// decimal digits.
pub const BITS: u64 = 720;

fn one() -> BigInt {
    BigInt::one() << BITS
}

fn fx_mul(a: &BigInt, b: &BigInt) -> BigInt {
    (a * b) >> BITS
}

fn atan_inv(x: u64) -> BigInt {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut power = one() / &x;
    let mut sum = BigInt::zero();
    let mut n = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * n + 1);
        if n.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        n += 1;
    }
    sum
}

pub fn pi() -> BigInt {
    atan_inv(5) * 16 - atan_inv(239) * 4
}

/// `(cos t, sin t)` by Taylor series.
fn cis(t: &BigInt) -> (BigInt, BigInt) {
    let mut c = one();
    let mut s = BigInt::zero();
    let mut term = one();
    let mut i = 1u64;
    loop {
        term = fx_mul(&term, t) / BigInt::from(i);
        if term.is_zero() {
            break;
        }
        match i % 4 {
            1 => s += &term,
            2 => c -= &term,
            3 => s -= &term,
            _ => c += &term,
        }
        i += 1;
    }
    (c, s)
}

/// Powers `zeta_m^j`, `j < m`, in fixed point.
pub fn root_powers(m: u64) -> Vec<(BigInt, BigInt)> {
    let (c, s) = cis(&(pi() * 2 / BigInt::from(m)));
    let mut out = Vec::with_capacity(m as usize);
    let mut cur = (one(), BigInt::zero());
    for _ in 0..m {
        out.push(cur.clone());
        cur = (
            fx_mul(&cur.0, &c) - fx_mul(&cur.1, &s),
            fx_mul(&cur.0, &s) + fx_mul(&cur.1, &c),
        );
    }
    out
}

/// Whether `|sum c zeta^e| < 10^-100`, evaluated in fixed point.
pub fn numerically_vanishes(powers: &[(BigInt, BigInt)], terms: &[(BigRational, u64)]) -> bool {
    let mut re = BigInt::zero();
    let mut im = BigInt::zero();
    for (c, e) in terms {
        let (x, y) = &powers[*e as usize];
        re += x * c.numer() / c.denom();
        im += y * c.numer() / c.denom();
    }
    let mag2 = &re * &re + &im * &im;
    // mag2 / 2^(2 BITS) < 10^-200
    mag2.abs() * num_traits::pow(BigInt::from(10), 200) < BigInt::one() << (2 * BITS)
}
