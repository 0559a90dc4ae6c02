use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;

use super::{verify_table, Outcome, TheoremId, VerificationReport};
use crate::cyclotomy::{compute_table_with, CyclotomyConfig};
use crate::finite_field::{divisors, factorize, find_primitive, DlogTable, FieldSpec, DEFAULT_MEMORY_CAP};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridParams {
    pub p_max: u64,
    pub q_max: u64,
    pub k_max: u64,
    /// Worker threads; 0 or 1 runs on the calling thread.
    pub jobs: usize,
    pub memory_cap: u64,
    /// Fill `timing_ms`; off by default so reports are reproducible.
    pub timing: bool,
    /// Continue past failed reports instead of stopping at the first.
    pub keep_going: bool,
}

impl GridParams {
    pub fn new(q_max: u64, k_max: u64) -> Self {
        GridParams {
            p_max: q_max,
            q_max,
            k_max,
            jobs: 1,
            memory_cap: DEFAULT_MEMORY_CAP,
            timing: false,
            keep_going: false,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GridSummary {
    pub configs: u64,
    pub cached: u64,
    pub passed: u64,
    pub vacuous: u64,
    pub unsupported: u64,
    pub failed: u64,
    /// `(q, e, theorem)` for each failed record, in emission order.
    pub failures: Vec<(u64, u64, TheoremId)>,
}

/// Fields `F_q`, ascending in `q`, with their admissible orders `e`
/// ascending: `e, k >= 2`, `k <= k_max`, `p <= p_max`, `q <= q_max`.
pub fn grid_configs(p_max: u64, q_max: u64, k_max: u64) -> Result<Vec<(FieldSpec, Vec<u64>)>> {
    let mut out = Vec::new();
    for q in 5..=q_max {
        let f = factorize(q)?;
        let p = f[0];
        if f.iter().any(|&r| r != p) || p > p_max {
            continue;
        }
        let es: Vec<u64> = divisors(q - 1)?
            .into_iter()
            .filter(|&e| e >= 2 && (q - 1) / e >= 2 && (q - 1) / e <= k_max)
            .collect();
        if !es.is_empty() {
            out.push((FieldSpec::new(p, f.len() as u32)?, es));
        }
    }
    Ok(out)
}

fn verify_field(
    spec: &FieldSpec,
    es: &[u64],
    params: &GridParams,
    cache: &ResultsCache,
) -> Result<Vec<(VerificationReport, bool)>> {
    let mut pending = Vec::new();
    let mut out: Vec<Option<(VerificationReport, bool)>> = Vec::with_capacity(es.len());
    for &e in es {
        let k = (spec.q() - 1) / e;
        match cache.lookup(spec.p(), spec.n(), e, k) {
            Some(r) => out.push(Some((r.clone(), true))),
            None => {
                pending.push((out.len(), e));
                out.push(None);
            }
        }
    }
    if !pending.is_empty() {
        let g = find_primitive(spec)?;
        let dlog = DlogTable::build(spec, &g, params.memory_cap)?;
        for (slot, e) in pending {
            let start = Instant::now();
            let cfg = CyclotomyConfig::with_primitive(spec.clone(), e, g.clone())?;
            let mut report = verify_table(&compute_table_with(&cfg, &dlog))?;
            if params.timing {
                report.timing_ms = Some(start.elapsed().as_millis() as u64);
            }
            out[slot] = Some((report, false));
        }
    }
    Ok(out.into_iter().map(|r| r.expect("every slot filled")).collect())
}

/// Verifies every configuration of the grid and passes each report to
/// `sink` in enumeration order, whatever the number of workers. Unless
/// `keep_going` is set, the first report with a failed conclusion is
/// emitted and then returned as a counterexample error.
pub fn grid_search(
    params: &GridParams,
    mut cache: Option<&mut ResultsCache>,
    mut sink: impl FnMut(&VerificationReport) -> Result<()>,
) -> Result<GridSummary> {
    if params.p_max == 0 || params.q_max == 0 || params.k_max == 0 {
        return Err(Error::invalid("grid bounds must be positive"));
    }
    let fields = grid_configs(params.p_max, params.q_max, params.k_max)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(params.jobs.max(1))
        .build()
        .map_err(|e| Error::invalid(format!("cannot start workers: {e}")))?;
    let empty = ResultsCache::default();
    let window = params.jobs.max(1) * 4;
    let mut summary = GridSummary::default();
    for chunk in fields.chunks(window) {
        let results: Vec<Result<Vec<(VerificationReport, bool)>>> = {
            let lookup: &ResultsCache = cache.as_deref().unwrap_or(&empty);
            pool.install(|| {
                chunk
                    .par_iter()
                    .map(|(spec, es)| verify_field(spec, es, params, lookup))
                    .collect()
            })
        };
        for batch in results {
            for (report, was_cached) in batch? {
                sink(&report)?;
                summary.configs += 1;
                summary.cached += u64::from(was_cached);
                for r in &report.records {
                    match r.outcome() {
                        Outcome::Pass => summary.passed += 1,
                        Outcome::Vacuous => summary.vacuous += 1,
                        Outcome::Unsupported => summary.unsupported += 1,
                        Outcome::Fail => {
                            summary.failed += 1;
                            summary.failures.push((report.q, report.e, r.theorem));
                        }
                    }
                }
                if !report.is_clean() {
                    if params.keep_going {
                        continue;
                    }
                    return Err(Error::Counterexample(serde_json::to_string(&report)?));
                }
                if let (Some(c), false) = (cache.as_deref_mut(), was_cached) {
                    c.insert(report)?;
                }
            }
        }
    }
    Ok(summary)
}

/// Previously verified records keyed by `(p, n, e, k, theorem)`, stored as
/// report JSON lines. Only clean reports are stored.
#[derive(Debug, Default)]
pub struct ResultsCache {
    path: Option<PathBuf>,
    reports: BTreeMap<(u64, u32, u64, u64), VerificationReport>,
}

impl ResultsCache {
    /// Opens a cache file, creating an empty cache if it does not exist.
    pub fn open(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref().to_path_buf();
        let mut cache = ResultsCache {
            path: Some(path.clone()),
            reports: BTreeMap::new(),
        };
        if path.exists() {
            for line in BufReader::new(File::open(&path)?).lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let r: VerificationReport = serde_json::from_str(&line)?;
                cache.reports.insert((r.p, r.n, r.e, r.k), r);
            }
        }
        Ok(cache)
    }

    pub fn len(&self) -> usize {
        self.reports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reports.is_empty()
    }

    /// A cached report covering every theorem that applies to `k`.
    pub fn lookup(&self, p: u64, n: u32, e: u64, k: u64) -> Option<&VerificationReport> {
        let r = self.reports.get(&(p, n, e, k))?;
        TheoremId::applicable(k)
            .into_iter()
            .all(|id| r.record(id).is_some())
            .then_some(r)
    }

    pub fn insert(&mut self, report: VerificationReport) -> Result<()> {
        if !report.is_clean() {
            return Err(Error::invalid("refusing to cache a failed report"));
        }
        if let Some(path) = &self.path {
            let mut f = OpenOptions::new().create(true).append(true).open(path)?;
            writeln!(f, "{}", serde_json::to_string(&report)?)?;
        }
        self.reports.insert((report.p, report.n, report.e, report.k), report);
        Ok(())
    }
}

pub fn csv_summary_header() -> String {
    let mut cols = vec!["p", "n", "q", "e", "k"];
    cols.extend(TheoremId::ALL.iter().map(|t| t.as_str()));
    cols.join(",")
}

/// One CSV row: the configuration, then pass / fail / vacuous /
/// unsupported / na per theorem in [`TheoremId::ALL`] order.
pub fn csv_summary(report: &VerificationReport) -> String {
    let mut cols = vec![
        report.p.to_string(),
        report.n.to_string(),
        report.q.to_string(),
        report.e.to_string(),
        report.k.to_string(),
    ];
    for id in TheoremId::ALL {
        cols.push(
            report
                .record(id)
                .map_or("na", |r| r.outcome().as_str())
                .to_string(),
        );
    }
    cols.join(",")
}
