//! Arithmetic in `F_p` and `F_{p^n}`.
//!
//! Elements of `F_{p^n}` are coefficient vectors over `F_p` modulo a fixed
//! monic irreducible polynomial. The modulus is always the smallest monic
//! irreducible of degree `n` when polynomials are ordered by the base-`p`
//! integer `sum a_i p^i`, and the primitive element is the smallest element
//! of order `q - 1` under the same encoding. Both choices are deterministic,
//! so discrete logs and class indices are reproducible.

mod arith;
mod dlog;
mod poly;

use std::fmt;

pub use arith::{
    divisors, euler_phi, factorize, gcd, is_prime, lcm, mul_mod, mult_order, pow_mod, prime_divisors,
    radical, FACTORIZE_LIMIT,
};
pub use dlog::{DlogTable, DEFAULT_MEMORY_CAP};

use crate::{Error, Result};

/// Characteristics are kept below 2^32 so products of residues fit in `u64`.
pub const MAX_CHARACTERISTIC: u64 = u32::MAX as u64;

/// A finite field `F_q`, `q = p^n`, together with its defining modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    p: u64,
    n: u32,
    q: u64,
    /// Monic modulus, low degree first, length `n + 1`. `None` for prime fields.
    modulus: Option<Vec<u64>>,
}

/// An element of `F_{p^n}` as `n` residues mod `p`, low degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut wrote = false;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if wrote {
                f.write_str("+")?;
            }
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, c) => write!(f, "{c}x^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl FieldSpec {
    /// Builds `F_{p^n}` with its canonical modulus.
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::invalid(format!("{p} is not prime")));
        }
        if p > MAX_CHARACTERISTIC {
            return Err(Error::invalid(format!(
                "characteristic {p} exceeds {MAX_CHARACTERISTIC}"
            )));
        }
        if n == 0 {
            return Err(Error::invalid("extension degree must be at least 1"));
        }
        let q = p
            .checked_pow(n)
            .filter(|&q| q <= FACTORIZE_LIMIT)
            .ok_or_else(|| Error::invalid(format!("{p}^{n} is too large")))?;
        let modulus = if n == 1 {
            None
        } else {
            Some(find_irreducible(p, n)?)
        };
        Ok(FieldSpec { p, n, q, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Monic modulus, low degree first, or `None` for a prime field.
    pub fn modulus(&self) -> Option<&[u64]> {
        self.modulus.as_deref()
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: vec![0; self.n as usize],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    /// Image of an integer under `Z -> F_p -> F_q`.
    pub fn from_int(&self, v: i64) -> FieldElement {
        let mut e = self.zero();
        e.coeffs[0] = v.rem_euclid(self.p as i64) as u64;
        e
    }

    pub fn element(&self, coeffs: Vec<u64>) -> Result<FieldElement> {
        if coeffs.len() != self.n as usize {
            return Err(Error::invalid(format!(
                "expected {} coefficients, got {}",
                self.n,
                coeffs.len()
            )));
        }
        if let Some(c) = coeffs.iter().find(|&&c| c >= self.p) {
            return Err(Error::invalid(format!("coefficient {c} not reduced mod {}", self.p)));
        }
        Ok(FieldElement { coeffs })
    }

    fn check(&self, x: &FieldElement) {
        debug_assert_eq!(x.coeffs.len(), self.n as usize, "element from another field");
    }

    /// Base-`p` encoding `sum c_i p^i`, a bijection onto `[0, q)`.
    pub fn encode(&self, x: &FieldElement) -> u64 {
        self.check(x);
        x.coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn decode(&self, mut code: u64) -> FieldElement {
        debug_assert!(code < self.q);
        let mut coeffs = vec![0; self.n as usize];
        for c in coeffs.iter_mut() {
            *c = code % self.p;
            code /= self.p;
        }
        FieldElement { coeffs }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        self.check(a);
        let coeffs = a
            .coeffs
            .iter()
            .map(|&x| if x == 0 { 0 } else { self.p - x })
            .collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        let coeffs = match &self.modulus {
            None => vec![arith::mul_mod(a.coeffs[0], b.coeffs[0], self.p)],
            Some(m) => poly::mul_mod(&a.coeffs, &b.coeffs, m, self.p),
        };
        FieldElement { coeffs }
    }

    pub fn pow(&self, a: &FieldElement, mut exp: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::invalid("zero has no inverse"));
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: &FieldElement) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::invalid("zero has no multiplicative order"));
        }
        let one = self.one();
        let mut order = self.q - 1;
        for r in prime_divisors(self.q - 1)? {
            while order.is_multiple_of(r) && self.pow(a, order / r) == one {
                order /= r;
            }
        }
        Ok(order)
    }
}

/// Smallest monic irreducible polynomial of degree `n >= 2` over `F_p`,
/// low degree first, ordered by the base-`p` value of its lower coefficients.
pub fn find_irreducible(p: u64, n: u32) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    if n < 2 {
        return Err(Error::invalid("irreducible search needs degree >= 2"));
    }
    let n = n as usize;
    let mut lower = vec![0u64; n];
    loop {
        // A zero constant term means x divides the candidate.
        if lower[0] != 0 {
            let mut cand = lower.clone();
            cand.push(1);
            if poly::is_irreducible(&cand, p) {
                return Ok(cand);
            }
        }
        // Increment `lower` as a base-p counter, least significant first.
        let mut i = 0;
        loop {
            if i == n {
                unreachable!("an irreducible polynomial exists in every degree");
            }
            lower[i] += 1;
            if lower[i] < p {
                break;
            }
            lower[i] = 0;
            i += 1;
        }
    }
}

/// Smallest element of order `q - 1` in the base-`p` encoding order.
pub fn find_primitive(spec: &FieldSpec) -> Result<FieldElement> {
    let q = spec.q();
    let exps: Vec<u64> = prime_divisors(q - 1)?
        .into_iter()
        .map(|r| (q - 1) / r)
        .collect();
    let one = spec.one();
    (1..q)
        .map(|code| spec.decode(code))
        .find(|g| exps.iter().all(|&e| spec.pow(g, e) != one))
        .ok_or_else(|| Error::invalid("no primitive element found"))
}
