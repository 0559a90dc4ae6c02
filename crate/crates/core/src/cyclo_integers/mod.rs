//! Cyclotomic integers `f(zeta_k)`, their absolute norms, and the norm
//! bounds that drive the transfer criteria.
//!
//! A [`CycInt`] is a raw coefficient vector `(a_0, ..., a_{k-1})`; no
//! reduction modulo `Phi_k` is implied. Norms carry their sign. Every bound
//! is checked as an integer inequality after clearing fractional exponents.

mod matrix;
mod resultant;
mod zpoly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub use matrix::{circulant, det_exact, schinzel_bound, IntMatrix};
pub use zpoly::{cyclotomic_poly, divrem_monic, rem_monic, ZPoly};

use crate::finite_field::{euler_phi, is_prime};
use crate::{Error, Result};

/// An element `f(zeta_k)` of `Z[zeta_k]` given by `f = sum a_i x^i`, `i < k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycInt {
    k: u64,
    coeffs: Vec<BigInt>,
}

/// JSON form `{"k": ..., "coeffs": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycIntJson {
    pub k: u64,
    pub coeffs: Vec<i64>,
}

impl CycInt {
    pub fn new(k: u64, coeffs: Vec<BigInt>) -> Result<Self> {
        if k < 2 {
            return Err(Error::invalid(format!("order k = {k} must be at least 2")));
        }
        if coeffs.len() as u64 != k {
            return Err(Error::invalid(format!(
                "expected {k} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(CycInt { k, coeffs })
    }

    pub fn from_i64(k: u64, coeffs: &[i64]) -> Result<Self> {
        Self::new(k, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Zero-pads a polynomial of degree `< k`.
    pub fn from_poly(k: u64, f: &[BigInt]) -> Result<Self> {
        if f.len() as u64 > k {
            return Err(Error::invalid(format!(
                "polynomial of length {} does not fit order {k}",
                f.len()
            )));
        }
        let mut coeffs = f.to_vec();
        coeffs.resize(k as usize, BigInt::zero());
        Self::new(k, coeffs)
    }

    /// `sum_{i in support} x^i` with the given signs, e.g. `1 + x^a - x^b`.
    pub fn from_terms(k: u64, terms: &[(i64, u64)]) -> Result<Self> {
        let mut coeffs = vec![BigInt::zero(); k as usize];
        for &(c, e) in terms {
            coeffs[(e % k) as usize] += c;
        }
        Self::new(k, coeffs)
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero_poly(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// `f(1) = sum a_i`.
    pub fn coeff_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `S = sum a_i^2`.
    pub fn sum_of_squares(&self) -> BigInt {
        self.coeffs.iter().map(|a| a * a).sum()
    }

    /// `A = max(A+, A-)`, the larger of the positive-part and
    /// negative-part sums of the coefficients.
    pub fn sign_split_max(&self) -> (BigInt, BigInt, BigInt) {
        let pos: BigInt = self.coeffs.iter().filter(|a| a.is_positive()).sum();
        let neg: BigInt = self.coeffs.iter().filter(|a| a.is_negative()).map(|a| -a).sum();
        let a = pos.clone().max(neg.clone());
        (pos, neg, a)
    }

    /// Whether `f(zeta_k) = 0`, i.e. `Phi_k` divides `f`.
    pub fn vanishes(&self) -> bool {
        rem_monic(&self.coeffs, &cyclotomic_poly(self.k)).is_empty()
    }

    pub fn to_json(&self) -> Result<CycIntJson> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                c.to_i64()
                    .ok_or_else(|| Error::invalid(format!("coefficient {c} exceeds 64 bits")))
            })
            .collect::<Result<_>>()?;
        Ok(CycIntJson { k: self.k, coeffs })
    }

    pub fn from_json(j: &CycIntJson) -> Result<Self> {
        Self::from_i64(j.k, &j.coeffs)
    }
}

fn phi(k: u64) -> u64 {
    euler_phi(k).expect("k >= 1")
}

fn require_prime(k: u64) -> Result<()> {
    if is_prime(k) {
        Ok(())
    } else {
        Err(Error::invalid(format!("k = {k} is not prime")))
    }
}

/// `(sum |a_i|)^phi(k)`, the triangle-inequality bound on `|N(f(zeta_k))|`.
pub fn trivial_norm_bound(f: &CycInt) -> BigInt {
    let l1: BigInt = f.coeffs.iter().map(Signed::abs).sum();
    Pow::pow(l1, phi(f.k))
}

/// The signed absolute norm `N(f(zeta_k)) = Res(Phi_k, f)`, the product of
/// `f` over all primitive `k`-th roots of unity.
///
/// Computed modulo enough word-size primes to exceed twice
/// [`trivial_norm_bound`], then reconstructed exactly.
pub fn norm(f: &CycInt) -> BigInt {
    let bound = trivial_norm_bound(f);
    resultant::resultant_monic(&cyclotomic_poly(f.k), &f.coeffs, &bound)
}

/// Outcome of the AM-GM norm bound
/// `|N| <= (k S / phi(k))^(phi(k)/2)`, checked as
/// `N^2 phi^phi <= k^phi S^phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralNormBound {
    pub norm: BigInt,
    pub sum_sq: BigInt,
    pub phi: u64,
    /// `N^2 * phi^phi`.
    pub lhs: BigInt,
    /// `k^phi * S^phi`.
    pub rhs: BigInt,
    pub holds: bool,
    /// `N^2 <= S^k`, evaluated only when `S >= 3`.
    pub weak_holds: Option<bool>,
}

impl GeneralNormBound {
    /// `(k S / phi)^phi`, the square of the bound.
    pub fn bound_squared(&self, k: u64) -> BigRational {
        let base = BigRational::new(BigInt::from(k) * &self.sum_sq, BigInt::from(self.phi));
        Pow::pow(base, self.phi)
    }

    /// The bound itself when it is rational, i.e. when `phi` is even.
    pub fn bound(&self, k: u64) -> Option<BigRational> {
        self.phi.is_multiple_of(2).then(|| {
            let base = BigRational::new(BigInt::from(k) * &self.sum_sq, BigInt::from(self.phi));
            Pow::pow(base, self.phi / 2)
        })
    }
}

pub fn norm_bound_general(f: &CycInt) -> GeneralNormBound {
    let n = norm(f);
    let s = f.sum_of_squares();
    let ph = phi(f.k);
    let lhs = &n * &n * Pow::pow(BigInt::from(ph), ph);
    let rhs = Pow::pow(BigInt::from(f.k), ph) * Pow::pow(s.clone(), ph);
    let holds = lhs <= rhs;
    let weak_holds = (s >= BigInt::from(3)).then(|| &n * &n <= Pow::pow(s.clone(), f.k));
    GeneralNormBound {
        norm: n,
        sum_sq: s,
        phi: ph,
        lhs,
        rhs,
        holds,
        weak_holds,
    }
}

/// Circulant matrix whose first row is the coefficient vector of `f`.
pub fn circulant_of(f: &CycInt) -> IntMatrix {
    circulant(&f.coeffs).expect("k >= 2")
}

/// For prime `k`: `det(M) / sum a_i` when the coefficient sum is nonzero,
/// otherwise `k * det(N)` with `N` the circulant minus its first row and
/// column.
pub fn norm_via_circulant(f: &CycInt) -> Result<BigInt> {
    require_prime(f.k)?;
    let m = circulant_of(f);
    let sum = f.coeff_sum();
    if sum.is_zero() {
        let minor = m.minor(0, 0)?;
        Ok(BigInt::from(f.k) * det_exact(&minor))
    } else {
        let det = det_exact(&m);
        assert!(
            (&det % &sum).is_zero(),
            "circulant determinant {det} not divisible by f(1) = {sum}"
        );
        Ok(det / sum)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrimeBoundCase {
    /// `sum a_i = 0`: bound `k A^(k-1)`.
    ZeroSum,
    /// `sum a_i != 0`: bound `A^k / |sum a_i|`.
    NonzeroSum,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeNormBound {
    pub case: PrimeBoundCase,
    pub a_plus: BigInt,
    pub a_minus: BigInt,
    pub a: BigInt,
    pub coeff_sum: BigInt,
    pub bound: BigRational,
    pub norm: BigInt,
    pub holds: bool,
}

/// The determinant-based bound for prime `k`, using `A = max(A+, A-)`.
pub fn norm_bound_prime(f: &CycInt) -> Result<PrimeNormBound> {
    require_prime(f.k)?;
    let (a_plus, a_minus, a) = f.sign_split_max();
    let sum = f.coeff_sum();
    let n = norm(f);
    let (case, bound) = if sum.is_zero() {
        let b = BigInt::from(f.k) * Pow::pow(a.clone(), f.k - 1);
        (PrimeBoundCase::ZeroSum, BigRational::from_integer(b))
    } else {
        let b = BigRational::new(Pow::pow(a.clone(), f.k), sum.abs());
        (PrimeBoundCase::NonzeroSum, b)
    };
    let holds = BigRational::from_integer(n.abs()) <= bound;
    Ok(PrimeNormBound {
        case,
        a_plus,
        a_minus,
        a,
        coeff_sum: sum,
        bound,
        norm: n,
        holds,
    })
}

/// `f * g` reduced modulo `Phi_k`, zero-padded to length `k`.
pub fn mul_mod_phi(f: &CycInt, g: &CycInt) -> Result<CycInt> {
    if f.k != g.k {
        return Err(Error::invalid(format!(
            "orders differ: {} vs {}",
            f.k, g.k
        )));
    }
    let prod = zpoly::mul(&f.coeffs, &g.coeffs);
    let r = rem_monic(&prod, &cyclotomic_poly(f.k));
    CycInt::from_poly(f.k, &r)
}

/// `f` reduced modulo `Phi_k`, zero-padded.
pub fn reduce_mod_phi(f: &CycInt) -> CycInt {
    let r = rem_monic(&f.coeffs, &cyclotomic_poly(f.k));
    CycInt::from_poly(f.k, &r).expect("remainder has degree < phi(k) <= k")
}

/// Whether `|det M| <= schinzel_bound(M)`; returns both sides.
pub fn schinzel_check(m: &IntMatrix) -> (BigInt, BigInt, bool) {
    let det = det_exact(m);
    let bound = schinzel_bound(m);
    let holds = det.abs() <= bound;
    (det, bound, holds)
}

impl std::fmt::Display for CycInt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let cells: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        write!(f, "k={} [{}]", self.k, cells.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn ci(k: u64, c: &[i64]) -> CycInt {
        CycInt::from_i64(k, c).unwrap()
    }

    fn padded(k: u64, c: &[i64]) -> CycInt {
        let mut v = c.to_vec();
        v.resize(k as usize, 0);
        ci(k, &v)
    }

    #[test]
    fn norm_examples() {
        for k in 2..12 {
            assert_eq!(norm(&padded(k, &[1])), BigInt::one());
            assert_eq!(norm(&padded(k, &[])), BigInt::zero());
        }
        assert_eq!(norm(&ci(3, &[1, -1, 0])), BigInt::from(3));
        assert_eq!(norm(&ci(3, &[1, 1, 0])), BigInt::one());
        // N(1 - zeta_k) = Phi_k(1): p for prime powers, 1 otherwise.
        assert_eq!(norm(&padded(8, &[1, -1])), BigInt::from(2));
        assert_eq!(norm(&padded(9, &[1, -1])), BigInt::from(3));
        assert_eq!(norm(&padded(6, &[1, -1])), BigInt::one());
        // Constants: N(c) = c^phi(k).
        assert_eq!(norm(&padded(5, &[-2])), BigInt::from(16));
        assert_eq!(norm(&padded(2, &[-2])), BigInt::from(-2));
    }

    #[test]
    fn norm_zero_iff_phi_divides() {
        let phi12 = cyclotomic_poly(12);
        let mut f: Vec<BigInt> = zpoly::mul(&phi12, &[BigInt::from(3), BigInt::from(-1)]);
        f.resize(12, BigInt::zero());
        let f = CycInt::new(12, f).unwrap();
        assert!(f.vanishes());
        assert_eq!(norm(&f), BigInt::zero());
        let g = padded(12, &[1, 0, 0, 1]);
        assert!(!g.vanishes());
        assert_ne!(norm(&g), BigInt::zero());
    }

    #[test]
    fn general_bound_examples() {
        let r = norm_bound_general(&ci(3, &[1, -1, 0]));
        assert_eq!(r.lhs, BigInt::from(36));
        assert_eq!(r.rhs, BigInt::from(36));
        assert!(r.holds);
        assert_eq!(r.weak_holds, None);
        assert_eq!(r.bound(3), Some(BigRational::from_integer(3.into())));
        let r = norm_bound_general(&padded(5, &[1]));
        assert_eq!(r.lhs, BigInt::from(256));
        assert_eq!(r.rhs, BigInt::from(625));
        assert!(r.holds);
        let r = norm_bound_general(&ci(2, &[1, 2]));
        assert_eq!(r.bound(2), None);
        assert_eq!(r.bound_squared(2), BigRational::from_integer(10.into()));
        assert_eq!(r.weak_holds, Some(true));
    }

    #[test]
    fn circulant_route_examples() {
        assert_eq!(norm_via_circulant(&ci(3, &[1, 1, 0])).unwrap(), BigInt::one());
        assert_eq!(norm_via_circulant(&ci(3, &[1, -1, 0])).unwrap(), BigInt::from(3));
        assert_eq!(norm_via_circulant(&padded(5, &[1])).unwrap(), BigInt::one());
        assert!(matches!(
            norm_via_circulant(&padded(4, &[1])),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn prime_bound_examples() {
        let r = norm_bound_prime(&ci(3, &[1, -1, 0])).unwrap();
        assert_eq!(r.case, PrimeBoundCase::ZeroSum);
        assert_eq!(r.a, BigInt::one());
        assert_eq!(r.bound, BigRational::from_integer(3.into()));
        assert!(r.holds);
        let r = norm_bound_prime(&ci(3, &[1, 1, 0])).unwrap();
        assert_eq!(r.case, PrimeBoundCase::NonzeroSum);
        assert_eq!(r.a, BigInt::from(2));
        assert_eq!(r.bound, BigRational::from_integer(4.into()));
        for c in 1..6 {
            let r = norm_bound_prime(&padded(5, &[c])).unwrap();
            assert_eq!(r.bound, BigRational::from_integer(BigInt::from(c).pow(4u32)));
            assert_eq!(BigRational::from_integer(r.norm.clone()), r.bound);
        }
        assert!(norm_bound_prime(&padded(6, &[1])).is_err());
    }

    #[test]
    fn sign_split_uses_negative_parts() {
        let (pos, neg, a) = ci(5, &[2, -3, 0, 1, -1]).sign_split_max();
        assert_eq!((pos, neg, a), (3.into(), 4.into(), 4.into()));
    }

    #[test]
    fn ring_multiplication() {
        let f = ci(3, &[1, -1, 0]);
        let g = ci(3, &[1, 0, -1]);
        assert_eq!(mul_mod_phi(&f, &padded(3, &[1])).unwrap(), reduce_mod_phi(&f));
        let fg = mul_mod_phi(&f, &g).unwrap();
        assert_eq!(norm(&fg), BigInt::from(9));
        assert!(mul_mod_phi(&f, &padded(3, &[])).unwrap().is_zero_poly());
        assert!(mul_mod_phi(&f, &padded(4, &[1])).is_err());
    }

    #[test]
    fn construction_errors() {
        assert!(CycInt::from_i64(1, &[1]).is_err());
        assert!(CycInt::from_i64(3, &[1, 2]).is_err());
        assert!(CycInt::from_poly(2, &[1, 2, 3].map(BigInt::from)).is_err());
        let f = CycInt::from_terms(5, &[(1, 0), (1, 2), (-1, 7)]).unwrap();
        assert_eq!(f, ci(5, &[1, 0, 0, 0, 0]));
    }

    #[test]
    fn json_shape() {
        let f = ci(3, &[1, -1, 0]);
        let s = serde_json::to_string(&f.to_json().unwrap()).unwrap();
        assert_eq!(s, r#"{"k":3,"coeffs":[1,-1,0]}"#);
        let back: CycIntJson = serde_json::from_str(&s).unwrap();
        assert_eq!(CycInt::from_json(&back).unwrap(), f);
    }
}
