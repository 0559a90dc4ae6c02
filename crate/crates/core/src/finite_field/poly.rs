// Dense polynomials over F_p, low degree first. Only what the field
// construction needs: products mod a monic modulus, remainders, gcds and
// the distinct-degree irreducibility test.

use super::arith::{mul_mod as mulm, pow_mod};

fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

/// Remainder of `f` modulo `g` (`g` nonzero, not necessarily monic).
pub(super) fn rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let g = trim(g.to_vec());
    let dg = g.len() - 1;
    let lead_inv = pow_mod(g[dg], p - 2, p);
    let mut r = trim(f.to_vec());
    while r.len() > dg {
        let top = r.len() - 1;
        let c = mulm(r[top], lead_inv, p);
        let shift = top - dg;
        for (i, &gi) in g.iter().enumerate() {
            let t = mulm(c, gi, p);
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        r = trim(r);
    }
    r
}

/// `a * b mod m` for `a, b` of length `deg m`, result padded to that length.
pub(super) fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let n = m.len() - 1;
    let mut prod = vec![0u64; 2 * n - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + mulm(x, y, p)) % p;
        }
    }
    // m is monic: x^n = -(m_0 + ... + m_{n-1} x^{n-1}).
    for top in (n..prod.len()).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        prod[top] = 0;
        for i in 0..n {
            let t = mulm(c, m[i], p);
            prod[top - n + i] = (prod[top - n + i] + p - t) % p;
        }
    }
    prod.truncate(n);
    prod
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Distinct-degree test: a monic `f` of degree `n` is irreducible iff
/// `gcd(x^{p^d} - x, f) = 1` for every `1 <= d <= n/2`.
pub(super) fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    if n == 1 {
        return true;
    }
    let mut x = vec![0u64; n];
    x[1] = 1;
    let mut h = x.clone();
    for _ in 1..=n / 2 {
        h = pow_poly(&h, p, f, p);
        let mut diff = h.clone();
        diff[1] = (diff[1] + p - 1) % p;
        if gcd(f, &diff, p).len() > 1 {
            return false;
        }
    }
    true
}

fn pow_poly(base: &[u64], mut exp: u64, m: &[u64], p: u64) -> Vec<u64> {
    let n = m.len() - 1;
    let mut acc = vec![0u64; n];
    acc[0] = 1;
    let mut b = base.to_vec();
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(&acc, &b, m, p);
        }
        exp >>= 1;
        if exp > 0 {
            b = mul_mod(&b, &b, m, p);
        }
    }
    acc
}
