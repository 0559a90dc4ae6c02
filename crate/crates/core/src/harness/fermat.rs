use num_bigint::BigUint;
use num_traits::Pow;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::cyclotomy::class_size;
use crate::finite_field::{is_prime, pow_mod};
use crate::{Error, Result};

/// Witnesses kept in a report before truncation.
const MAX_WITNESSES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FermatMode {
    /// All pairs `x, y` in `[1, p)`.
    Exhaustive,
    /// `samples` uniformly random pairs from a seeded generator.
    Sampled { samples: u64, seed: u64 },
}

/// For `p = e k + 1` with `p^2 > 3^k` and 2 not an `e`-th power mod `p`:
/// `x^e + y^e` is never a nonzero `e`-th power for `x, y` prime to `p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FermatReport {
    pub p: u64,
    pub e: u64,
    pub k: u64,
    pub premise: bool,
    pub two_is_eth_power: bool,
    /// With `6 | k` the exact value of `(0,0)` is 2 or 3, so solutions
    /// with `xyz != 0` exist whenever `(0,0)`'s premise holds.
    pub six_divides_k: bool,
    pub mode: String,
    pub pairs_checked: u64,
    pub conclusion_checked: bool,
    pub conclusion_holds: bool,
    /// Pairs `(x, y)` with `x^e + y^e` a nonzero `e`-th power; truncated.
    pub witnesses: Vec<[u64; 2]>,
}

pub fn fermat_check(p: u64, e: u64, mode: FermatMode) -> Result<FermatReport> {
    if !is_prime(p) {
        return Err(Error::invalid(format!("{p} is not prime")));
    }
    let k = class_size(p, e)?;
    let premise = Pow::pow(BigUint::from(p), 2u32) > Pow::pow(BigUint::from(3u32), k);
    // t is an e-th power mod p iff t^k = 1.
    let two_is_eth_power = p != 2 && pow_mod(2, k, p) == 1;
    let mut report = FermatReport {
        p,
        e,
        k,
        premise,
        two_is_eth_power,
        six_divides_k: k % 6 == 0,
        mode: match mode {
            FermatMode::Exhaustive => "exhaustive".into(),
            FermatMode::Sampled { samples, seed } => format!("sampled:{samples}:{seed}"),
        },
        pairs_checked: 0,
        conclusion_checked: false,
        conclusion_holds: true,
        witnesses: Vec::new(),
    };
    if !premise || two_is_eth_power {
        return Ok(report);
    }

    let powers: Vec<u64> = (0..p).map(|x| pow_mod(x, e, p)).collect();
    let mut residue = vec![false; p as usize];
    for &v in &powers[1..] {
        residue[v as usize] = true;
    }
    let mut check = |x: u64, y: u64| {
        let s = (powers[x as usize] + powers[y as usize]) % p;
        if s != 0 && residue[s as usize] && report.witnesses.len() < MAX_WITNESSES {
            report.witnesses.push([x, y]);
        }
        s == 0 || !residue[s as usize]
    };
    let mut holds = true;
    let pairs = match mode {
        FermatMode::Exhaustive => {
            for x in 1..p {
                for y in 1..p {
                    holds &= check(x, y);
                }
            }
            (p - 1) * (p - 1)
        }
        FermatMode::Sampled { samples, seed } => {
            let mut rng = StdRng::seed_from_u64(seed);
            for _ in 0..samples {
                let x = rng.gen_range(1..p);
                let y = rng.gen_range(1..p);
                holds &= check(x, y);
            }
            samples
        }
    };
    report.pairs_checked = pairs;
    report.conclusion_checked = true;
    report.conclusion_holds = holds;
    Ok(report)
}
