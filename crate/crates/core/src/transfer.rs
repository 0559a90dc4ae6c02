//! When a relation `f(g^e) = 0` over `F_q` lifts to `f(zeta_k) = 0` over
//! the complex numbers: exact premise checks and empirical comparison.

use num_bigint::{BigInt, BigUint};
use num_traits::{Pow, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::cyclo_integers::{norm, CycInt};
use crate::cyclotomy::CyclotomyConfig;
use crate::finite_field::{euler_phi, gcd, is_prime, mult_order};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PremiseVariant {
    General,
    PrimeZeroSum,
    PrimeNonzeroSum,
}

/// A lifting premise with the integers it was decided from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferPremise {
    pub variant: PremiseVariant,
    pub p: u64,
    pub k: u64,
    pub ord: u64,
    #[serde(serialize_with = "crate::util::as_string")]
    pub sum_sq: BigInt,
    #[serde(serialize_with = "crate::util::as_string")]
    pub a: BigInt,
    #[serde(serialize_with = "crate::util::as_string")]
    pub coeff_sum: BigInt,
    pub verdict: bool,
    /// For the general variant with `S >= 3`: the simpler sufficient
    /// condition `p^(2 ord) > S^k`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sufficient: Option<bool>,
}

impl TransferPremise {
    /// Recomputes the verdict from the stored integers.
    pub fn recheck(&self) -> bool {
        let pb = Pow::pow(BigInt::from(self.p), self.ord);
        match self.variant {
            PremiseVariant::General => {
                let phi = euler_phi(self.k).expect("k >= 2");
                &pb * &pb * Pow::pow(BigInt::from(phi), phi)
                    > Pow::pow(BigInt::from(self.k) * &self.sum_sq, phi)
            }
            PremiseVariant::PrimeZeroSum => pb > BigInt::from(self.k) * Pow::pow(self.a.clone(), self.k - 1),
            PremiseVariant::PrimeNonzeroSum => pb * self.coeff_sum.abs() > Pow::pow(self.a.clone(), self.k),
        }
    }
}

fn order_of(p: u64, k: u64) -> Result<u64> {
    if gcd(p, k) != 1 {
        return Err(Error::invalid(format!("gcd({p}, {k}) != 1")));
    }
    mult_order(p % k, k)
}

/// `p^(2 ord) phi^phi > k^phi S^phi`, with `S` the sum of squared
/// coefficients.
pub fn premise_general(p: u64, k: u64, f: &CycInt) -> Result<TransferPremise> {
    check_k(k, f)?;
    let ord = order_of(p, k)?;
    let s = f.sum_of_squares();
    let (_, _, a) = f.sign_split_max();
    let mut premise = TransferPremise {
        variant: PremiseVariant::General,
        p,
        k,
        ord,
        sum_sq: s.clone(),
        a,
        coeff_sum: f.coeff_sum(),
        verdict: false,
        sufficient: None,
    };
    premise.verdict = premise.recheck();
    if s >= BigInt::from(3) {
        let p2 = Pow::pow(BigInt::from(p), 2 * ord);
        premise.sufficient = Some(p2 > Pow::pow(s, k));
    }
    Ok(premise)
}

/// For prime `k`: `p^ord > k A^(k-1)` when the coefficients sum to zero,
/// otherwise `p^ord |sum a_i| > A^k`.
pub fn premise_prime_k(p: u64, k: u64, f: &CycInt) -> Result<TransferPremise> {
    if !is_prime(k) {
        return Err(Error::invalid(format!("k = {k} is not prime")));
    }
    check_k(k, f)?;
    let ord = order_of(p, k)?;
    let (_, _, a) = f.sign_split_max();
    let sum = f.coeff_sum();
    let variant = if sum.is_zero() {
        PremiseVariant::PrimeZeroSum
    } else {
        PremiseVariant::PrimeNonzeroSum
    };
    let mut premise = TransferPremise {
        variant,
        p,
        k,
        ord,
        sum_sq: f.sum_of_squares(),
        a,
        coeff_sum: sum,
        verdict: false,
        sufficient: None,
    };
    premise.verdict = premise.recheck();
    Ok(premise)
}

fn check_k(k: u64, f: &CycInt) -> Result<()> {
    if f.k() != k {
        return Err(Error::invalid(format!("coefficient vector has k = {}, expected {k}", f.k())));
    }
    Ok(())
}

/// `f(g^e)` in `F_q`, by Horner's rule.
pub fn eval_at_root(cfg: &CyclotomyConfig, f: &CycInt) -> bool {
    let spec = cfg.spec();
    let p = BigInt::from(cfg.p());
    let x = cfg.root_of_unity();
    let mut acc = spec.zero();
    for c in f.coeffs().iter().rev() {
        let r = ((c % &p) + &p) % &p;
        let c = spec.from_int(r.to_i64().expect("reduced below p"));
        acc = spec.add(&spec.mul(&acc, &x), &c);
    }
    acc.is_zero()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub fq_zero: bool,
    pub c_zero: bool,
    pub premise: TransferPremise,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prime_premise: Option<TransferPremise>,
    /// Every premise that holds agrees with `fq_zero == c_zero`.
    pub consistent: bool,
}

/// Compares `f(g^e) = 0` with `f(zeta_k) = 0`. The direction
/// `f(zeta_k) = 0 => f(g^e) = 0` holds unconditionally and its failure is
/// reported as a counterexample.
pub fn check_equivalence(cfg: &CyclotomyConfig, f: &CycInt) -> Result<Equivalence> {
    if cfg.k() != f.k() {
        return Err(Error::invalid(format!("config has k = {}, f has k = {}", cfg.k(), f.k())));
    }
    let fq_zero = eval_at_root(cfg, f);
    let c_zero = f.vanishes();
    if c_zero && !fq_zero {
        return Err(Error::Counterexample(format!(
            "f = {f} vanishes at zeta_{} but not at g^e in F_{}",
            f.k(),
            cfg.q()
        )));
    }
    let premise = premise_general(cfg.p(), cfg.k(), f)?;
    let prime_premise = if is_prime(cfg.k()) {
        Some(premise_prime_k(cfg.p(), cfg.k(), f)?)
    } else {
        None
    };
    let agree = fq_zero == c_zero;
    let consistent = [Some(&premise), prime_premise.as_ref()]
        .into_iter()
        .flatten()
        .all(|pr| !pr.verdict || agree);
    Ok(Equivalence {
        fq_zero,
        c_zero,
        premise,
        prime_premise,
        consistent,
    })
}

/// Given `f(g^e) = 0`, whether `p^ord` divides the norm of `f(zeta_k)`.
pub fn norm_congruence_check(cfg: &CyclotomyConfig, f: &CycInt) -> Result<bool> {
    if cfg.k() != f.k() {
        return Err(Error::invalid(format!("config has k = {}, f has k = {}", cfg.k(), f.k())));
    }
    if !eval_at_root(cfg, f) {
        return Err(Error::invalid(format!("f = {f} does not vanish at g^e")));
    }
    let ord = order_of(cfg.p(), cfg.k())?;
    let pb = BigInt::from(Pow::pow(BigUint::from(cfg.p()), ord));
    Ok((norm(f) % pb).is_zero())
}

/// Multiplicative order helper exposed for reports: `ord_k(p)`.
pub fn ord_k(p: u64, k: u64) -> Result<u64> {
    order_of(p, k)
}
