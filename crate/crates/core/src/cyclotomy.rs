//! Cyclotomic classes and cyclotomic numbers.
//!
//! For `q = e k + 1` and a primitive element `g`, the class `C_a` is the
//! coset `{g^(a + r e) : 0 <= r < k}` and the cyclotomic number `(a, b)`
//! counts `x in C_a` with `1 + x in C_b`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::finite_field::{find_primitive, DlogTable, FieldElement, FieldSpec, DEFAULT_MEMORY_CAP};
use crate::{Error, Result};

/// A validated cyclotomy instance `q = e k + 1` with `e, k >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomyConfig {
    spec: FieldSpec,
    e: u64,
    k: u64,
    g: FieldElement,
}

impl CyclotomyConfig {
    pub fn new(spec: FieldSpec, e: u64) -> Result<Self> {
        let g = find_primitive(&spec)?;
        Self::with_primitive(spec, e, g)
    }

    /// Uses a caller-supplied primitive element; for reusing one field
    /// across several orders `e`.
    pub fn with_primitive(spec: FieldSpec, e: u64, g: FieldElement) -> Result<Self> {
        let k = class_size(spec.q(), e)?;
        Ok(CyclotomyConfig { spec, e, k, g })
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn p(&self) -> u64 {
        self.spec.p()
    }

    pub fn n(&self) -> u32 {
        self.spec.n()
    }

    pub fn q(&self) -> u64 {
        self.spec.q()
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn g(&self) -> &FieldElement {
        &self.g
    }

    /// `g^e`, a primitive `k`-th root of unity in `F_q`.
    pub fn root_of_unity(&self) -> FieldElement {
        self.spec.pow(&self.g, self.e)
    }

    /// Index `a in [0, e)` with `x in C_a`.
    ///
    /// Uses `x^k = (g^k)^a`, which needs no discrete-log table.
    pub fn class_index(&self, x: &FieldElement) -> Result<u64> {
        if x.is_zero() {
            return Err(Error::invalid("0 lies in no cyclotomic class"));
        }
        let target = self.spec.pow(x, self.k);
        let h = self.spec.pow(&self.g, self.k);
        let mut acc = self.spec.one();
        for a in 0..self.e {
            if acc == target {
                return Ok(a);
            }
            acc = self.spec.mul(&acc, &h);
        }
        unreachable!("x^k always lies in the subgroup generated by g^k")
    }

    /// Whether `x` is a nonzero `e`-th power, i.e. lies in `C_0`.
    pub fn is_eth_power(&self, x: &FieldElement) -> bool {
        !x.is_zero() && self.spec.pow(x, self.k) == self.spec.one()
    }
}

/// `k = (q - 1) / e`, requiring both `e` and `k` to be nontrivial divisors.
pub fn class_size(q: u64, e: u64) -> Result<u64> {
    if e < 2 {
        return Err(Error::invalid(format!("order e = {e} is trivial")));
    }
    if !(q - 1).is_multiple_of(e) {
        return Err(Error::invalid(format!("e = {e} does not divide q - 1 = {}", q - 1)));
    }
    let k = (q - 1) / e;
    if k < 2 {
        return Err(Error::invalid(format!("class size k = {k} is trivial")));
    }
    Ok(k)
}

/// Builds the configuration for `q = p^n` with order `e`.
pub fn make_config(p: u64, n: u32, e: u64) -> Result<CyclotomyConfig> {
    let spec = FieldSpec::new(p, n)?;
    class_size(spec.q(), e)?;
    CyclotomyConfig::new(spec, e)
}

/// The `e x e` table of cyclotomic numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicTable {
    config: CyclotomyConfig,
    counts: Vec<Vec<u64>>,
}

impl CyclotomicTable {
    /// Wraps externally supplied counts, e.g. a table read back from JSON.
    pub fn from_counts(config: CyclotomyConfig, counts: Vec<Vec<u64>>) -> Result<Self> {
        let e = config.e as usize;
        if counts.len() != e || counts.iter().any(|r| r.len() != e) {
            return Err(Error::invalid(format!("counts must form a {e} x {e} matrix")));
        }
        Ok(CyclotomicTable { config, counts })
    }

    pub fn config(&self) -> &CyclotomyConfig {
        &self.config
    }

    pub fn counts(&self) -> &[Vec<u64>] {
        &self.counts
    }

    /// `(a, b)` for arbitrary integers; indices are reduced mod `e`.
    pub fn get(&self, a: i64, b: i64) -> u64 {
        let e = self.config.e as i64;
        self.counts[a.rem_euclid(e) as usize][b.rem_euclid(e) as usize]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }

    pub fn max_entry(&self) -> u64 {
        self.counts.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Rows `a`, columns `b`, no header.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.counts {
            let line: Vec<String> = row.iter().map(u64::to_string).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> TableJson {
        TableJson {
            p: self.config.p(),
            n: self.config.n(),
            e: self.config.e,
            k: self.config.k,
            counts: self.counts.clone(),
        }
    }

    /// Right-aligned grid with row and column labels.
    pub fn to_pretty(&self) -> String {
        let width = self.max_entry().to_string().len().max((self.config.e - 1).to_string().len());
        let mut out = format!("{:>w$} |", "", w = width);
        for b in 0..self.config.e {
            out.push_str(&format!(" {b:>width$}"));
        }
        out.push('\n');
        out.push_str(&"-".repeat(out.len() - 1));
        out.push('\n');
        for (a, row) in self.counts.iter().enumerate() {
            out.push_str(&format!("{a:>width$} |"));
            for c in row {
                out.push_str(&format!(" {c:>width$}"));
            }
            out.push('\n');
        }
        out
    }
}

/// JSON form of a table: `{"p", "n", "e", "k", "counts"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub p: u64,
    pub n: u32,
    pub e: u64,
    pub k: u64,
    pub counts: Vec<Vec<u64>>,
}

/// Computes the table with the default discrete-log memory cap.
pub fn compute_table(cfg: &CyclotomyConfig) -> Result<CyclotomicTable> {
    compute_table_capped(cfg, DEFAULT_MEMORY_CAP)
}

pub fn compute_table_capped(cfg: &CyclotomyConfig, memory_cap: u64) -> Result<CyclotomicTable> {
    let dlog = DlogTable::build(&cfg.spec, &cfg.g, memory_cap)?;
    Ok(compute_table_with(cfg, &dlog))
}

/// One sweep over `F_q^*`: `x = g^i` lies in `C_{i mod e}`, and the class of
/// `1 + x` is read from the log table. `x = -1` is the only element with no
/// partner.
///
/// `dlog` must have been built from `cfg`'s field and primitive element.
pub fn compute_table_with(cfg: &CyclotomyConfig, dlog: &DlogTable) -> CyclotomicTable {
    assert_eq!(dlog.q(), cfg.q(), "log table belongs to another field");
    let e = cfg.e as usize;
    let mut counts = vec![vec![0u64; e]; e];
    let mut a = 0usize;
    for &x in dlog.powers() {
        let y = dlog.succ_code(x);
        if let Some(j) = dlog.log_code(y as u64) {
            counts[a][(j % cfg.e) as usize] += 1;
        }
        a += 1;
        if a == e {
            a = 0;
        }
    }
    CyclotomicTable {
        config: cfg.clone(),
        counts,
    }
}

fn check_cell(cfg: &CyclotomyConfig, a: u64, b: u64) -> Result<()> {
    if a >= cfg.e || b >= cfg.e {
        return Err(Error::invalid(format!(
            "cell ({a}, {b}) outside [0, {})^2",
            cfg.e
        )));
    }
    Ok(())
}

/// Class `C_a` computed element by element with explicit exponentiation.
fn class_codes(cfg: &CyclotomyConfig, a: u64) -> Vec<u64> {
    (0..cfg.k)
        .map(|r| cfg.spec.encode(&cfg.spec.pow(&cfg.g, a + r * cfg.e)))
        .collect()
}

/// Number of pairs `(r, s)` in `[0, k)^2` with `1 + g^(a + r e) = g^(b + s e)`,
/// by direct double loop.
pub fn brute_force_entry(cfg: &CyclotomyConfig, a: u64, b: u64) -> Result<u64> {
    check_cell(cfg, a, b)?;
    let one = cfg.spec.one();
    let ys = class_codes(cfg, b);
    let mut count = 0;
    for r in 0..cfg.k {
        let x = cfg.spec.pow(&cfg.g, a + r * cfg.e);
        let lhs = cfg.spec.encode(&cfg.spec.add(&one, &x));
        count += ys.iter().filter(|&&y| y == lhs).count() as u64;
    }
    Ok(count)
}

/// All cells by the brute-force route. The class members are computed once
/// per class; each cell is still the literal `k^2` comparison loop.
pub fn brute_force_table(cfg: &CyclotomyConfig) -> CyclotomicTable {
    let one = cfg.spec.one();
    let classes: Vec<Vec<u32>> = (0..cfg.e)
        .map(|a| class_codes(cfg, a).into_iter().map(|c| c as u32).collect())
        .collect();
    let shifted: Vec<Vec<u32>> = (0..cfg.e)
        .map(|a| {
            (0..cfg.k)
                .map(|r| {
                    let x = cfg.spec.pow(&cfg.g, a + r * cfg.e);
                    cfg.spec.encode(&cfg.spec.add(&one, &x)) as u32
                })
                .collect()
        })
        .collect();
    let counts = shifted
        .iter()
        .map(|xs| {
            classes
                .iter()
                .map(|ys| {
                    let mut c = 0u64;
                    for &x in xs {
                        for &y in ys {
                            c += (x == y) as u64;
                        }
                    }
                    c
                })
                .collect()
        })
        .collect();
    CyclotomicTable {
        config: cfg.clone(),
        counts,
    }
}

/// Extremes of a table and its largest deviation from the mean value `q/e^2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UniformityStats {
    pub min: u64,
    pub max: u64,
    #[serde(serialize_with = "crate::util::as_string")]
    pub max_deviation: BigRational,
}

pub fn uniformity_stats(table: &CyclotomicTable) -> UniformityStats {
    let cfg = &table.config;
    let mean = BigRational::new(BigInt::from(cfg.q()), BigInt::from(cfg.e * cfg.e));
    let cells = table.counts.iter().flatten();
    let min = cells.clone().copied().min().unwrap_or(0);
    let max = cells.clone().copied().max().unwrap_or(0);
    let max_deviation = [min, max]
        .into_iter()
        .map(|v| (BigRational::from_integer(BigInt::from(v)) - &mean).abs())
        .max()
        .unwrap_or_default();
    UniformityStats {
        min,
        max,
        max_deviation,
    }
}
