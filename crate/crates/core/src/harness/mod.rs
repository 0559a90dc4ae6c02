//! Checks of the bounds on cyclotomic numbers over concrete tables, the
//! Fermat-type residue statement, and the grid driver.

mod fermat;
mod grid;

use std::fmt;

use num_bigint::BigUint;
use num_traits::Pow;
use serde::{Deserialize, Serialize};

use crate::cyclotomy::{uniformity_stats, CyclotomicTable, CyclotomyConfig};
use crate::finite_field::{euler_phi, gcd, is_prime, mult_order};
use crate::{Error, Result};

pub use fermat::{fermat_check, FermatMode, FermatReport};
pub use grid::{
    csv_summary, csv_summary_header, grid_configs, grid_search, GridParams, GridSummary, ResultsCache,
};

/// Statements verified per configuration. Indices `a, b` range over
/// `[0, e)`; "distinct" means `a != b`, both nonzero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// `p^(2 ord) > 14^k` implies every entry is at most 3.
    #[serde(rename = "all-le-3")]
    AllLe3,
    /// Prime `k`, `p^ord > 3^(k-1) k` implies every entry is at most 2.
    #[serde(rename = "prime-all-le-2")]
    PrimeAllLe2,
    /// Exact value of `(0,0)` from `6 | k` and `2 in C_0`.
    ZeroZeroExact,
    /// `(0,a) <= 3` if `2 in C_a`, else `<= 2`.
    ZeroA,
    /// `(a,0)` bounded by the parity of `k` and `2 in C_a`.
    AZero,
    /// `(a,a)`, same bounds as `(a,0)`, tested literally with `2 in C_a`.
    AA,
    /// `(a,a)` with the branch on `2 in C_{-a}`, which is what the
    /// identity `(a,a) = (-a,0)` gives.
    AAReflected,
    /// `(a,b) <= 2` for distinct nonzero `a, b`.
    ADistinctB,
    /// Prime `k`: `(0,0)` is 1 or 0 by `2 in C_0`.
    PrimeZeroZero,
    /// Prime `k`: `(a,0) <= 2` and `(a,a) <= 2`.
    PrimeAZeroAA,
    /// Prime `k`: `(0,a) <= 2`.
    PrimeZeroA,
    /// Prime `k`: `(a,b) <= 2` for distinct nonzero `a, b`.
    PrimeAB,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::AllLe3,
        TheoremId::PrimeAllLe2,
        TheoremId::ZeroZeroExact,
        TheoremId::ZeroA,
        TheoremId::AZero,
        TheoremId::AA,
        TheoremId::AAReflected,
        TheoremId::ADistinctB,
        TheoremId::PrimeZeroZero,
        TheoremId::PrimeAZeroAA,
        TheoremId::PrimeZeroA,
        TheoremId::PrimeAB,
    ];

    pub const CASES: [TheoremId; 6] = [
        TheoremId::ZeroZeroExact,
        TheoremId::ZeroA,
        TheoremId::AZero,
        TheoremId::AA,
        TheoremId::AAReflected,
        TheoremId::ADistinctB,
    ];

    pub const PRIME_CASES: [TheoremId; 4] = [
        TheoremId::PrimeZeroZero,
        TheoremId::PrimeAZeroAA,
        TheoremId::PrimeZeroA,
        TheoremId::PrimeAB,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::AllLe3 => "all-le-3",
            TheoremId::PrimeAllLe2 => "prime-all-le-2",
            TheoremId::ZeroZeroExact => "zero-zero-exact",
            TheoremId::ZeroA => "zero-a",
            TheoremId::AZero => "a-zero",
            TheoremId::AA => "a-a",
            TheoremId::AAReflected => "a-a-reflected",
            TheoremId::ADistinctB => "a-distinct-b",
            TheoremId::PrimeZeroZero => "prime-zero-zero",
            TheoremId::PrimeAZeroAA => "prime-a-zero-a-a",
            TheoremId::PrimeZeroA => "prime-zero-a",
            TheoremId::PrimeAB => "prime-a-b",
        }
    }

    pub fn needs_prime_k(self) -> bool {
        matches!(
            self,
            TheoremId::PrimeAllLe2
                | TheoremId::PrimeZeroZero
                | TheoremId::PrimeAZeroAA
                | TheoremId::PrimeZeroA
                | TheoremId::PrimeAB
        )
    }

    /// Theorems that apply to a configuration with class size `k`.
    pub fn applicable(k: u64) -> Vec<TheoremId> {
        let prime = is_prime(k);
        Self::ALL
            .into_iter()
            .filter(|t| prime || !t.needs_prime_k())
            .collect()
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

/// `p^exp > num^power / den^power`, decided as
/// `p^exp * den^power > num^power`.
fn power_exceeds(p: u64, exp: u64, num: BigUint, den: u64, power: u64) -> bool {
    Pow::pow(big(p), exp) * Pow::pow(big(den), power) > Pow::pow(num, power)
}

/// Exact premise of a statement for characteristic `p` and class size `k`.
pub fn premise(id: TheoremId, p: u64, k: u64) -> Result<bool> {
    if k < 2 {
        return Err(Error::invalid(format!("class size k = {k} is trivial")));
    }
    if gcd(p, k) != 1 {
        return Err(Error::invalid(format!("gcd({p}, {k}) != 1")));
    }
    if id.needs_prime_k() && !is_prime(k) {
        return Err(Error::invalid(format!("{id} needs prime k, got {k}")));
    }
    let ord = mult_order(p % k, k)?;
    let phi = euler_phi(k)?;
    // p > (c k / phi)^(phi / (2 ord)).
    let ratio_form = |c: u64| power_exceeds(p, 2 * ord, big(c * k), phi, phi);
    Ok(match id {
        TheoremId::AllLe3 => power_exceeds(p, 2 * ord, big(14), 1, k),
        TheoremId::PrimeAllLe2 | TheoremId::PrimeAB => {
            power_exceeds(p, ord, Pow::pow(big(3), k - 1) * big(k), 1, 1)
        }
        TheoremId::ZeroZeroExact | TheoremId::PrimeZeroZero => ratio_form(3),
        TheoremId::ZeroA
        | TheoremId::AZero
        | TheoremId::AA
        | TheoremId::AAReflected
        | TheoremId::PrimeAZeroAA => ratio_form(4),
        TheoremId::ADistinctB => ratio_form(14),
        TheoremId::PrimeZeroA => power_exceeds(p, ord, Pow::pow(big(2), k - 1) * big(k), 1, 1),
    })
}

/// `p^(2 ord_k(p)) > 14^k`.
pub fn premise_main1(p: u64, k: u64) -> Result<bool> {
    premise(TheoremId::AllLe3, p, k)
}

/// `p^(ord_k(p)) > 3^(k-1) k`, for prime `k`.
pub fn premise_main2(p: u64, k: u64) -> Result<bool> {
    premise(TheoremId::PrimeAllLe2, p, k)
}

/// Outcome of one statement on one table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremRecord {
    pub theorem: TheoremId,
    pub premise: bool,
    /// False whenever the premise fails: vacuous records confirm nothing.
    pub conclusion_checked: bool,
    /// False only for a counterexample.
    pub conclusion_holds: bool,
    /// Offending cells `(a, b)`.
    pub witnesses: Vec<[u64; 2]>,
    /// Predicted value, for the exact `(0,0)` statements.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub predicted: Option<u64>,
    /// The premise holds but the statement is undefined here (`p = 2`).
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub unsupported: bool,
}

/// Pass, fail or vacuous, as used in summaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Vacuous,
    Unsupported,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Vacuous => "vacuous",
            Outcome::Unsupported => "unsupported",
        }
    }
}

impl TheoremRecord {
    fn vacuous(theorem: TheoremId) -> Self {
        TheoremRecord {
            theorem,
            premise: false,
            conclusion_checked: false,
            conclusion_holds: true,
            witnesses: Vec::new(),
            predicted: None,
            unsupported: false,
        }
    }

    fn checked(theorem: TheoremId, witnesses: Vec<[u64; 2]>, predicted: Option<u64>) -> Self {
        TheoremRecord {
            theorem,
            premise: true,
            conclusion_checked: true,
            conclusion_holds: witnesses.is_empty(),
            witnesses,
            predicted,
            unsupported: false,
        }
    }

    fn unsupported(theorem: TheoremId) -> Self {
        TheoremRecord {
            premise: true,
            unsupported: true,
            ..Self::vacuous(theorem)
        }
    }

    pub fn outcome(&self) -> Outcome {
        if self.unsupported {
            Outcome::Unsupported
        } else if !self.conclusion_checked {
            Outcome::Vacuous
        } else if self.conclusion_holds {
            Outcome::Pass
        } else {
            Outcome::Fail
        }
    }
}

/// Class index of 2, undefined in characteristic 2.
pub fn class_of_two(cfg: &CyclotomyConfig) -> Result<u64> {
    if cfg.p() == 2 {
        return Err(Error::UnsupportedCase(format!(
            "2 = 0 in F_{}, so 2 lies in no cyclotomic class",
            cfg.q()
        )));
    }
    cfg.class_index(&cfg.spec().from_int(2))
}

/// Cells of `cells` whose entry exceeds `bound(a, b)`.
fn violations(
    table: &CyclotomicTable,
    cells: impl Iterator<Item = (u64, u64)>,
    mut bound: impl FnMut(u64, u64) -> u64,
) -> Vec<[u64; 2]> {
    cells
        .filter(|&(a, b)| table.counts()[a as usize][b as usize] > bound(a, b))
        .map(|(a, b)| [a, b])
        .collect()
}

fn all_cells(e: u64) -> impl Iterator<Item = (u64, u64)> {
    (0..e).flat_map(move |a| (0..e).map(move |b| (a, b)))
}

fn distinct_nonzero(e: u64) -> impl Iterator<Item = (u64, u64)> {
    (1..e).flat_map(move |a| (1..e).filter(move |&b| b != a).map(move |b| (a, b)))
}

/// Value predicted for `(0,0)` and whether its premise holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Prediction00 {
    pub value: u64,
    pub premise: bool,
}

/// `(0,0)` is `[6 | k] * 2 + [2 in C_0]` under its premise.
pub fn predicted_00(cfg: &CyclotomyConfig) -> Result<Prediction00> {
    let two_in_c0 = class_of_two(cfg)? == 0;
    let value = if cfg.k().is_multiple_of(6) { 2 } else { 0 } + u64::from(two_in_c0);
    Ok(Prediction00 {
        value,
        premise: premise(TheoremId::ZeroZeroExact, cfg.p(), cfg.k())?,
    })
}

/// Checks one statement against a computed table.
pub fn check_theorem(table: &CyclotomicTable, id: TheoremId) -> Result<TheoremRecord> {
    let cfg = table.config();
    let (e, k) = (cfg.e(), cfg.k());
    if !premise(id, cfg.p(), k)? {
        return Ok(TheoremRecord::vacuous(id));
    }
    let at = |a: u64, b: u64| table.counts()[a as usize][b as usize];
    let record = match id {
        TheoremId::AllLe3 => TheoremRecord::checked(id, violations(table, all_cells(e), |_, _| 3), None),
        TheoremId::PrimeAllLe2 => TheoremRecord::checked(id, violations(table, all_cells(e), |_, _| 2), None),
        TheoremId::ZeroZeroExact | TheoremId::PrimeZeroZero => {
            let pred = predicted_00(cfg)?.value;
            let bad = if at(0, 0) == pred { vec![] } else { vec![[0, 0]] };
            TheoremRecord::checked(id, bad, Some(pred))
        }
        TheoremId::ZeroA => {
            let two = class_of_two(cfg)?;
            let cells = (1..e).map(|a| (0, a));
            TheoremRecord::checked(id, violations(table, cells, |_, a| if a == two { 3 } else { 2 }), None)
        }
        TheoremId::AZero | TheoremId::AA | TheoremId::AAReflected => {
            let two = if k % 2 == 0 { Some(class_of_two(cfg)?) } else { None };
            let bound = |a: u64| if two == Some(a) { 3 } else { 2 };
            let w = match id {
                TheoremId::AZero => violations(table, (1..e).map(|a| (a, 0)), |a, _| bound(a)),
                TheoremId::AA => violations(table, (1..e).map(|a| (a, a)), |a, _| bound(a)),
                _ => violations(table, (1..e).map(|a| (a, a)), |a, _| bound(e - a)),
            };
            TheoremRecord::checked(id, w, None)
        }
        TheoremId::ADistinctB | TheoremId::PrimeAB => {
            TheoremRecord::checked(id, violations(table, distinct_nonzero(e), |_, _| 2), None)
        }
        TheoremId::PrimeAZeroAA => {
            let cells = (1..e).flat_map(|a| [(a, 0), (a, a)]);
            TheoremRecord::checked(id, violations(table, cells, |_, _| 2), None)
        }
        TheoremId::PrimeZeroA => {
            TheoremRecord::checked(id, violations(table, (1..e).map(|a| (0, a)), |_, _| 2), None)
        }
    };
    Ok(record)
}

pub fn verify_main1(table: &CyclotomicTable) -> Result<TheoremRecord> {
    check_theorem(table, TheoremId::AllLe3)
}

pub fn verify_main2(table: &CyclotomicTable) -> Result<TheoremRecord> {
    check_theorem(table, TheoremId::PrimeAllLe2)
}

/// The statements on `(0,0)`, `(0,a)`, `(a,0)`, `(a,a)` and `(a,b)`.
pub fn verify_case_theorems(table: &CyclotomicTable) -> Result<Vec<TheoremRecord>> {
    TheoremId::CASES.iter().map(|&id| check_theorem(table, id)).collect()
}

/// The refinements for prime `k`.
pub fn verify_prime_k_theorems(table: &CyclotomicTable) -> Result<Vec<TheoremRecord>> {
    let k = table.config().k();
    if !is_prime(k) {
        return Err(Error::invalid(format!("k = {k} is not prime")));
    }
    TheoremId::PRIME_CASES.iter().map(|&id| check_theorem(table, id)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportStats {
    pub min: u64,
    pub max: u64,
    /// Largest `|(a,b) - q/e^2|`, as an exact fraction.
    pub max_deviation: String,
}

/// Every applicable statement on one configuration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub p: u64,
    pub n: u32,
    pub q: u64,
    pub e: u64,
    pub k: u64,
    pub records: Vec<TheoremRecord>,
    pub stats: ReportStats,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.records.iter().all(|r| r.conclusion_holds)
    }

    pub fn record(&self, id: TheoremId) -> Option<&TheoremRecord> {
        self.records.iter().find(|r| r.theorem == id)
    }
}

/// Runs every applicable statement; statements undefined in
/// characteristic 2 are recorded as unsupported.
pub fn verify_table(table: &CyclotomicTable) -> Result<VerificationReport> {
    let cfg = table.config();
    let mut records = Vec::new();
    for id in TheoremId::applicable(cfg.k()) {
        match check_theorem(table, id) {
            Ok(r) => records.push(r),
            Err(Error::UnsupportedCase(_)) => records.push(TheoremRecord::unsupported(id)),
            Err(e) => return Err(e),
        }
    }
    let s = uniformity_stats(table);
    Ok(VerificationReport {
        p: cfg.p(),
        n: cfg.n(),
        q: cfg.q(),
        e: cfg.e(),
        k: cfg.k(),
        records,
        stats: ReportStats {
            min: s.min,
            max: s.max,
            max_deviation: s.max_deviation.to_string(),
        },
        timing_ms: None,
    })
}
