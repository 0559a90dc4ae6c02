//! Exact decisions about sums `sum c_i zeta_m^(e_i)` of roots of unity with
//! nonzero rational coefficients: vanishing, minimality, similarity, the
//! classification of short vanishing sums, and rotation onto squarefree
//! order.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclo_integers::{cyclotomic_poly, rem_monic};
use crate::finite_field::{gcd, lcm, radical};
use crate::{Error, Result};

/// Longest sum accepted by subset enumeration.
pub const MAX_SUBSUM_LENGTH: usize = 12;
/// Longest sum accepted by the similarity search.
pub const MAX_SIMILARITY_LENGTH: usize = 8;
/// Largest common order accepted by the similarity and rotation searches.
pub const MAX_ORDER: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigRational,
    pub exp: u64,
}

/// A formal sum of `m`-th roots of unity with distinct exponents and
/// nonzero rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSum {
    m: u64,
    terms: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub num: i64,
    pub den: i64,
    pub exp: u64,
}

/// JSON form `{"m": ..., "terms": [{"num", "den", "exp"}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSumJson {
    pub m: u64,
    pub terms: Vec<TermJson>,
}

impl RootSum {
    pub fn new(m: u64, terms: Vec<(BigRational, u64)>) -> Result<Self> {
        if m == 0 {
            return Err(Error::invalid("root order m must be positive"));
        }
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::with_capacity(terms.len());
        for (coeff, exp) in terms {
            if exp >= m {
                return Err(Error::invalid(format!("exponent {exp} not in [0, {m})")));
            }
            if coeff.is_zero() {
                return Err(Error::invalid(format!("zero coefficient at exponent {exp}")));
            }
            if !seen.insert(exp) {
                return Err(Error::invalid(format!("repeated exponent {exp}")));
            }
            out.push(Term { coeff, exp });
        }
        Ok(RootSum { m, terms: out })
    }

    /// Integer coefficients; `(c, e)` stands for `c * zeta_m^e`.
    pub fn from_ints(m: u64, terms: &[(i64, u64)]) -> Result<Self> {
        Self::new(
            m,
            terms
                .iter()
                .map(|&(c, e)| (BigRational::from_integer(c.into()), e))
                .collect(),
        )
    }

    /// Parses `"c:e,c:e,..."` where each `c` is an integer or `num/den`.
    pub fn parse(m: u64, spec: &str) -> Result<Self> {
        let mut terms = Vec::new();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (c, e) = item
                .split_once(':')
                .ok_or_else(|| Error::invalid(format!("term {item:?} is not of the form c:e")))?;
            let coeff = BigRational::from_str(c.trim())
                .map_err(|_| Error::invalid(format!("bad coefficient {c:?}")))?;
            let exp = e
                .trim()
                .parse::<u64>()
                .map_err(|_| Error::invalid(format!("bad exponent {e:?}")))?;
            terms.push((coeff, exp));
        }
        Self::new(m, terms)
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `e(S)`: the lcm of the orders of the roots that occur.
    pub fn exponent(&self) -> u64 {
        self.terms
            .iter()
            .map(|t| self.m / gcd(t.exp, self.m))
            .fold(1, lcm)
    }

    pub fn subsum(&self, indices: &[usize]) -> RootSum {
        RootSum {
            m: self.m,
            terms: indices.iter().map(|&i| self.terms[i].clone()).collect(),
        }
    }

    /// `zeta_m^t * S`.
    pub fn rotate(&self, t: u64) -> RootSum {
        let terms = self
            .terms
            .iter()
            .map(|x| Term {
                coeff: x.coeff.clone(),
                exp: (x.exp + t % self.m) % self.m,
            })
            .collect();
        RootSum { m: self.m, terms }
    }

    /// Image under `zeta_m -> zeta_m^j`, `gcd(j, m) = 1`.
    pub fn galois(&self, j: u64) -> Result<RootSum> {
        if gcd(j % self.m, self.m) != 1 && self.m != 1 {
            return Err(Error::invalid(format!("{j} is not a unit mod {}", self.m)));
        }
        let terms = self
            .terms
            .iter()
            .map(|x| Term {
                coeff: x.coeff.clone(),
                exp: ((x.exp as u128 * j as u128) % self.m as u128) as u64,
            })
            .collect();
        Ok(RootSum { m: self.m, terms })
    }

    /// The same sum written over `zeta_l`, `m | l`.
    pub fn lift(&self, l: u64) -> Result<RootSum> {
        if !l.is_multiple_of(self.m) {
            return Err(Error::invalid(format!("{} does not divide {l}", self.m)));
        }
        let f = l / self.m;
        let terms = self
            .terms
            .iter()
            .map(|x| Term {
                coeff: x.coeff.clone(),
                exp: x.exp * f,
            })
            .collect();
        Ok(RootSum { m: l, terms })
    }

    /// Writes the coefficients as `scale * v` with `v` a primitive integer
    /// vector and `scale` a positive rational.
    pub fn integer_form(&self) -> (BigRational, Vec<BigInt>) {
        if self.terms.is_empty() {
            return (BigRational::one(), Vec::new());
        }
        let den = self
            .terms
            .iter()
            .fold(BigInt::one(), |acc, t| acc.lcm(t.coeff.denom()));
        let ints: Vec<BigInt> = self
            .terms
            .iter()
            .map(|t| t.coeff.numer() * (&den / t.coeff.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let v: Vec<BigInt> = ints.iter().map(|c| c / &g).collect();
        (BigRational::new(g, den), v)
    }

    pub fn to_json(&self) -> Result<RootSumJson> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let num = t.coeff.numer().to_i64();
                let den = t.coeff.denom().to_i64();
                match (num, den) {
                    (Some(num), Some(den)) => Ok(TermJson { num, den, exp: t.exp }),
                    _ => Err(Error::invalid(format!("coefficient {} exceeds 64 bits", t.coeff))),
                }
            })
            .collect::<Result<_>>()?;
        Ok(RootSumJson { m: self.m, terms })
    }

    pub fn from_json(j: &RootSumJson) -> Result<Self> {
        let terms = j
            .terms
            .iter()
            .map(|t| {
                if t.den == 0 {
                    Err(Error::invalid("zero denominator"))
                } else {
                    Ok((BigRational::new(t.num.into(), t.den.into()), t.exp))
                }
            })
            .collect::<Result<_>>()?;
        Self::new(j.m, terms)
    }
}

impl fmt::Display for RootSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| format!("{}*z{}^{}", t.coeff, self.m, t.exp))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Whether the sum is exactly zero: clear denominators and test whether
/// `Phi_{e(S)}` divides the resulting integer polynomial.
pub fn is_vanishing(s: &RootSum) -> bool {
    if s.is_empty() {
        return true;
    }
    let order = s.exponent();
    let step = s.m / order;
    let (_, ints) = s.integer_form();
    let mut poly = vec![BigInt::zero(); order as usize];
    for (t, c) in s.terms.iter().zip(ints) {
        poly[(t.exp / step) as usize] += c;
    }
    rem_monic(&poly, &cyclotomic_poly(order)).is_empty()
}

/// Fast vanishing test for many integer sums over one fixed order `m`,
/// using precomputed reductions of `x^j` modulo `Phi_m`.
#[derive(Debug, Clone)]
pub struct VanishingTester {
    m: u64,
    reductions: Vec<Vec<i64>>,
}

impl VanishingTester {
    pub fn new(m: u64) -> Result<Self> {
        if m == 0 || m > MAX_ORDER {
            return Err(Error::limit(format!("tester order {m}"), MAX_ORDER));
        }
        let phi = cyclotomic_poly(m);
        let deg = phi.len() - 1;
        let reductions = (0..m as usize)
            .map(|j| {
                let mut mono = vec![BigInt::zero(); j + 1];
                mono[j] = BigInt::one();
                let mut r: Vec<i64> = rem_monic(&mono, &phi)
                    .iter()
                    .map(|c| c.to_i64().expect("small cyclotomic remainders"))
                    .collect();
                r.resize(deg, 0);
                r
            })
            .collect();
        Ok(VanishingTester { m, reductions })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Reduction of `x^j` modulo `Phi_m`, padded to degree `phi(m)`.
    pub fn reduction(&self, j: u64) -> &[i64] {
        &self.reductions[(j % self.m) as usize]
    }

    pub fn is_vanishing(&self, terms: &[(i64, u64)]) -> bool {
        let deg = self.reductions[0].len();
        let mut acc = vec![0i64; deg];
        for &(c, e) in terms {
            for (a, r) in acc.iter_mut().zip(self.reduction(e)) {
                *a += c * r;
            }
        }
        acc.iter().all(|&a| a == 0)
    }
}

/// Index sets of all nonempty proper subsums that vanish.
pub fn vanishing_subsums(s: &RootSum) -> Result<Vec<Vec<usize>>> {
    let l = s.len();
    if l > MAX_SUBSUM_LENGTH {
        return Err(Error::limit(format!("subsum enumeration of length {l}"), MAX_SUBSUM_LENGTH as u64));
    }
    let full = (1u32 << l) - 1;
    let mut out = Vec::new();
    for mask in 1..full {
        let idx: Vec<usize> = (0..l).filter(|&i| mask >> i & 1 == 1).collect();
        if is_vanishing(&s.subsum(&idx)) {
            out.push(idx);
        }
    }
    Ok(out)
}

/// A nonempty vanishing sum with no vanishing proper subsum.
pub fn is_minimal(s: &RootSum) -> Result<bool> {
    if s.is_empty() || !is_vanishing(s) {
        return Err(Error::invalid(format!("{s} is not a nonempty vanishing sum")));
    }
    Ok(vanishing_subsums(s)?.is_empty())
}

/// Canonical multiset of terms over `zeta_l` (`l` even): the term
/// `c * zeta_l^e` with `e >= l/2` is rewritten as `(-c) * zeta_l^(e - l/2)`,
/// so sign flips of a root together with its coefficient are absorbed.
fn canonical_terms(s: &RootSum, l: u64, rot: u64, scale: &BigRational) -> Vec<(u64, BigRational)> {
    let f = l / s.m;
    let half = l / 2;
    let mut out: Vec<(u64, BigRational)> = s
        .terms
        .iter()
        .map(|t| {
            let e = (t.exp * f + rot) % l;
            let c = &t.coeff * scale;
            if e >= half {
                (e - half, -c)
            } else {
                (e, c)
            }
        })
        .collect();
    out.sort();
    out
}

/// Whether `s = k * beta * s''` for a nonzero rational `k`, a root of unity
/// `beta`, and `s''` obtained from `other` by flipping the sign of some
/// roots together with their coefficients.
pub fn is_similar(s: &RootSum, other: &RootSum) -> Result<bool> {
    for x in [s, other] {
        if x.len() > MAX_SIMILARITY_LENGTH {
            return Err(Error::limit(format!("similarity test of length {}", x.len()), MAX_SIMILARITY_LENGTH as u64));
        }
    }
    let l = lcm(s.m, other.m);
    if l > MAX_ORDER {
        return Err(Error::limit(format!("common order {l}"), MAX_ORDER));
    }
    if s.len() != other.len() {
        return Ok(false);
    }
    if s.is_empty() {
        return Ok(true);
    }
    // Work over zeta_{2l} so that -1 is available as a root.
    let l2 = lcm(l, 2);
    let target = canonical_terms(s, l2, 0, &BigRational::one());
    let lead = &other.terms[0];
    let lead_exp = lead.exp * (l2 / other.m);
    // Rotations by t and t + l2/2 differ by the sign of k.
    for t in 0..l2 / 2 {
        let e0 = (lead_exp + t) % l2;
        let (e0, sign) = if e0 >= l2 / 2 { (e0 - l2 / 2, -1) } else { (e0, 1) };
        for (e, c) in &target {
            if *e != e0 {
                continue;
            }
            let k = c / &lead.coeff * BigInt::from(sign);
            if canonical_terms(other, l2, t, &k) == target {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Tags for vanishing sums of length at most 6.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShortSumClass {
    /// Contains a subsum similar to `1 + (-1)`.
    HasPairSubsum,
    /// Contains a subsum similar to `1 + zeta_3 + zeta_3^2`.
    HasR3Subsum,
    /// Similar to `1 + zeta_5 + ... + zeta_5^4`.
    SimilarR5,
    /// Similar to `-zeta_3 - zeta_3^2 + zeta_5 + ... + zeta_5^4`.
    SimilarR3R5,
    /// None of the above. Never produced for a genuine vanishing sum.
    Violation,
}

impl ShortSumClass {
    pub fn as_str(self) -> &'static str {
        match self {
            ShortSumClass::HasPairSubsum => "has-pair-subsum",
            ShortSumClass::HasR3Subsum => "has-R3-subsum",
            ShortSumClass::SimilarR5 => "similar-R5",
            ShortSumClass::SimilarR3R5 => "similar-R3R5",
            ShortSumClass::Violation => "violation",
        }
    }
}

impl fmt::Display for ShortSumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `1 + (-1)`.
pub fn pair_sum() -> RootSum {
    RootSum::from_ints(2, &[(1, 0), (1, 1)]).unwrap()
}

/// `1 + zeta_3 + zeta_3^2`.
pub fn r3() -> RootSum {
    RootSum::from_ints(3, &[(1, 0), (1, 1), (1, 2)]).unwrap()
}

/// `1 + zeta_5 + ... + zeta_5^4`.
pub fn r5() -> RootSum {
    RootSum::from_ints(5, &[(1, 0), (1, 1), (1, 2), (1, 3), (1, 4)]).unwrap()
}

/// `-zeta_3 - zeta_3^2 + zeta_5 + ... + zeta_5^4`, written over `zeta_15`.
pub fn r3r5() -> RootSum {
    RootSum::from_ints(15, &[(-1, 5), (-1, 10), (1, 3), (1, 6), (1, 9), (1, 12)]).unwrap()
}

fn subsets_of_size(l: usize, size: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << l)
        .filter(move |m| m.count_ones() as usize == size)
        .map(move |m| (0..l).filter(|&i| m >> i & 1 == 1).collect())
}

/// Classifies a nonempty vanishing sum of length at most 6. Subsum
/// conditions are tested before global similarity.
pub fn classify_up_to_6(s: &RootSum) -> Result<ShortSumClass> {
    if s.is_empty() || s.len() > 6 {
        return Err(Error::invalid(format!("length {} not in [1, 6]", s.len())));
    }
    if !is_vanishing(s) {
        return Err(Error::invalid(format!("{s} does not vanish")));
    }
    let pair = pair_sum();
    for idx in subsets_of_size(s.len(), 2) {
        if is_similar(&s.subsum(&idx), &pair)? {
            return Ok(ShortSumClass::HasPairSubsum);
        }
    }
    let triple = r3();
    for idx in subsets_of_size(s.len(), 3) {
        if is_similar(&s.subsum(&idx), &triple)? {
            return Ok(ShortSumClass::HasR3Subsum);
        }
    }
    if s.len() == 5 && is_similar(s, &r5())? {
        return Ok(ShortSumClass::SimilarR5);
    }
    if s.len() == 6 && is_similar(s, &r3r5())? {
        return Ok(ShortSumClass::SimilarR3R5);
    }
    Ok(ShortSumClass::Violation)
}

/// Whether the terms split into disjoint vanishing pairs.
pub fn cancels_in_pairs(s: &RootSum) -> bool {
    fn go(s: &RootSum, used: &mut Vec<bool>) -> bool {
        let Some(i) = used.iter().position(|&u| !u) else {
            return true;
        };
        used[i] = true;
        for j in i + 1..s.len() {
            if !used[j] && is_vanishing(&s.subsum(&[i, j])) {
                used[j] = true;
                if go(s, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        used[i] = false;
        false
    }
    s.len().is_multiple_of(2) && go(s, &mut vec![false; s.len()])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeReduction {
    /// `t` with `zeta_m^t * S` supported on `m_0`-th roots of unity.
    pub rotation: u64,
    /// The rotated sum written over `zeta_{m_0}`, `m_0 = rad(m)`.
    pub reduced: RootSum,
}

/// Finds a rotation of a minimal vanishing sum whose terms all have order
/// dividing the radical of `m`. Tries `t = 0`, then rotations that send
/// some term to `1`, then every `t`. `None` means no rotation exists.
pub fn squarefree_reduce(s: &RootSum) -> Result<Option<SquarefreeReduction>> {
    if s.m > MAX_ORDER {
        return Err(Error::limit(format!("rotation search over order {}", s.m), MAX_ORDER));
    }
    if !is_minimal(s)? {
        return Err(Error::invalid(format!("{s} is not minimal")));
    }
    let m0 = radical(s.m)?;
    let step = s.m / m0;
    let fits = |t: u64| s.terms.iter().all(|x| ((x.exp + t) % s.m).is_multiple_of(step));
    let candidates = std::iter::once(0)
        .chain(s.terms.iter().map(|x| (s.m - x.exp) % s.m))
        .chain(0..s.m);
    for t in candidates {
        if fits(t) {
            let terms = s
                .terms
                .iter()
                .map(|x| (x.coeff.clone(), (x.exp + t) % s.m / step))
                .collect();
            return Ok(Some(SquarefreeReduction {
                rotation: t,
                reduced: RootSum::new(m0, terms)?,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(m: u64, t: &[(i64, u64)]) -> RootSum {
        RootSum::from_ints(m, t).unwrap()
    }

    #[test]
    fn construction_checks() {
        assert!(RootSum::from_ints(0, &[]).is_err());
        assert!(RootSum::from_ints(4, &[(1, 4)]).is_err());
        assert!(RootSum::from_ints(4, &[(0, 1)]).is_err());
        assert!(RootSum::from_ints(4, &[(1, 1), (2, 1)]).is_err());
        let s = RootSum::parse(6, "1:0, -3/2:3,2:1").unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.terms()[1].coeff, BigRational::new((-3).into(), 2.into()));
        assert!(RootSum::parse(6, "1").is_err());
        assert!(RootSum::parse(6, "x:1").is_err());
    }

    #[test]
    fn exponent_of_sum() {
        assert_eq!(rs(12, &[(1, 0), (1, 4), (1, 6)]).exponent(), 6);
        assert_eq!(rs(12, &[(1, 0)]).exponent(), 1);
        assert_eq!(rs(30, &[(1, 6), (1, 10)]).exponent(), 15);
    }

    #[test]
    fn vanishing_examples() {
        assert!(is_vanishing(&rs(2, &[(1, 0), (1, 1)])));
        assert!(is_vanishing(&r5()));
        assert!(!is_vanishing(&rs(3, &[(1, 0), (1, 1)])));
        assert!(is_vanishing(&r3r5()));
        let half = RootSum::parse(4, "1/2:0,1/2:2").unwrap();
        assert!(is_vanishing(&half));
        assert!(!is_vanishing(&RootSum::parse(4, "1/2:0,1/3:2").unwrap()));
    }

    #[test]
    fn tester_agrees_with_exact_path() {
        let t = VanishingTester::new(30).unwrap();
        let mut state = 99u64;
        for _ in 0..2_000 {
            let mut terms: Vec<(i64, u64)> = Vec::new();
            for _ in 0..5 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                let e = (state >> 40) % 30;
                let c = ((state >> 20) % 5) as i64 - 2;
                if c != 0 && terms.iter().all(|&(_, f)| f != e) {
                    terms.push((c, e));
                }
            }
            assert_eq!(t.is_vanishing(&terms), is_vanishing(&rs(30, &terms)));
        }
        assert!(t.is_vanishing(&[(1, 0), (1, 15)]));
        assert!(t.is_vanishing(&[(1, 0), (1, 10), (1, 20)]));
    }

    #[test]
    fn subsum_examples() {
        assert!(vanishing_subsums(&r5()).unwrap().is_empty());
        // (1 + zeta_2) + zeta_3 (1 + zeta_2) over zeta_6.
        let s = rs(6, &[(1, 0), (1, 3), (1, 2), (1, 5)]);
        let subs = vanishing_subsums(&s).unwrap();
        assert!(subs.contains(&vec![0, 1]));
        assert!(subs.contains(&vec![2, 3]));
        assert!(vanishing_subsums(&rs(7, &[(1, 3)])).unwrap().is_empty());
        let long = RootSum::from_ints(13, &(0..13).map(|e| (1, e)).collect::<Vec<_>>()).unwrap();
        assert!(matches!(vanishing_subsums(&long), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn minimality() {
        assert!(is_minimal(&r5()).unwrap());
        assert!(is_minimal(&pair_sum()).unwrap());
        // 1 + zeta_2 + zeta_3 + zeta_3^2 over zeta_6 does not vanish; the
        // vanishing version is (1 + zeta_6^3) + (zeta_6^2 + zeta_6^5).
        assert!(is_minimal(&rs(6, &[(1, 0), (1, 3), (1, 2), (1, 4)])).is_err());
        assert!(!is_minimal(&rs(6, &[(1, 0), (1, 3), (1, 2), (1, 5)])).unwrap());
        assert!(is_minimal(&rs(3, &[(1, 0)])).is_err());
    }

    #[test]
    fn similarity_examples() {
        assert!(is_similar(&r5(), &r5()).unwrap());
        let rotated = r5().lift(35).unwrap().rotate(5);
        assert!(is_similar(&rotated, &r5()).unwrap());
        assert!(is_similar(&r5(), &rotated).unwrap());
        assert!(!is_similar(&pair_sum(), &r5()).unwrap());
        // 3 * (-zeta_4) * (1 + zeta_3 + zeta_3^2) with one sign flip.
        let s = RootSum::parse(12, "-3:3,-3:7,3:5").unwrap();
        assert!(is_similar(&s, &r3()).unwrap());
        assert!(!is_similar(&rs(3, &[(1, 0), (1, 1), (2, 2)]), &r3()).unwrap());
        let big = rs(10_007, &[(1, 0)]);
        assert!(matches!(is_similar(&big, &rs(2, &[(1, 0)])), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_up_to_6(&r5()).unwrap(), ShortSumClass::SimilarR5);
        assert_eq!(classify_up_to_6(&r3r5()).unwrap(), ShortSumClass::SimilarR3R5);
        assert_eq!(classify_up_to_6(&rs(6, &[(1, 0), (1, 3)])).unwrap(), ShortSumClass::HasPairSubsum);
        assert_eq!(
            classify_up_to_6(&rs(9, &[(1, 0), (1, 3), (1, 6)])).unwrap(),
            ShortSumClass::HasR3Subsum
        );
        assert!(classify_up_to_6(&rs(3, &[(1, 0), (1, 1)])).is_err());
        let seven = RootSum::from_ints(7, &(0..7).map(|e| (1, e)).collect::<Vec<_>>()).unwrap();
        assert!(classify_up_to_6(&seven).is_err());
        assert_eq!(ShortSumClass::SimilarR3R5.to_string(), "similar-R3R5");
    }

    #[test]
    fn pair_cancellation() {
        assert!(cancels_in_pairs(&pair_sum()));
        assert!(!cancels_in_pairs(&r5()));
        assert!(cancels_in_pairs(&rs(6, &[(1, 0), (1, 3), (1, 1), (1, 4)])));
        assert!(!cancels_in_pairs(&rs(6, &[(1, 0), (1, 2), (1, 4), (1, 3)])));
        assert!(cancels_in_pairs(&rs(4, &[])));
    }

    #[test]
    fn squarefree_examples() {
        let r = squarefree_reduce(&rs(4, &[(1, 1), (1, 3)])).unwrap().unwrap();
        assert_eq!(r.rotation, 3);
        assert_eq!(r.reduced, rs(2, &[(1, 0), (1, 1)]));
        let r = squarefree_reduce(&rs(6, &[(1, 1), (1, 4)])).unwrap().unwrap();
        assert_eq!(r.rotation, 0);
        let r = squarefree_reduce(&rs(9, &[(1, 0), (1, 3), (1, 6)])).unwrap().unwrap();
        assert_eq!(r.rotation, 0);
        assert_eq!(r.reduced, r3());
        assert!(squarefree_reduce(&rs(6, &[(1, 0), (1, 3), (1, 2), (1, 5)])).is_err());
    }

    #[test]
    fn squarefree_on_rotated_minimal_sums() {
        for (base, m) in [(r5(), 25u64), (r3(), 27), (r3r5(), 45), (pair_sum(), 8)] {
            let lifted = base.lift(m).unwrap();
            for t in 0..m {
                let s = lifted.rotate(t);
                let r = squarefree_reduce(&s).unwrap().expect("minimal sums rotate onto rad(m)");
                assert!(is_vanishing(&r.reduced));
                assert!(is_similar(&r.reduced, &base).unwrap());
            }
        }
    }

    #[test]
    fn json_shape() {
        let s = RootSum::parse(6, "1:0,-1/2:3").unwrap();
        let j = serde_json::to_string(&s.to_json().unwrap()).unwrap();
        assert_eq!(j, r#"{"m":6,"terms":[{"num":1,"den":1,"exp":0},{"num":-1,"den":2,"exp":3}]}"#);
        let back: RootSumJson = serde_json::from_str(&j).unwrap();
        assert_eq!(RootSum::from_json(&back).unwrap(), s);
    }

    #[test]
    fn integer_form_is_primitive() {
        let s = RootSum::parse(6, "2/3:0,-4/9:1,2:2").unwrap();
        let (scale, v) = s.integer_form();
        assert_eq!(scale, BigRational::new(2.into(), 9.into()));
        assert_eq!(v, vec![BigInt::from(3), BigInt::from(-2), BigInt::from(9)]);
    }
}
