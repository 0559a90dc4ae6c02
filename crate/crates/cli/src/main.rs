use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cyclonum_core::cyclo_integers::{
    norm, norm_bound_general, norm_bound_prime, norm_via_circulant, CycInt, PrimeBoundCase,
};
use cyclonum_core::cyclotomy::{compute_table_capped, make_config};
use cyclonum_core::finite_field::{is_prime, DEFAULT_MEMORY_CAP};
use cyclonum_core::harness::{
    csv_summary, csv_summary_header, fermat_check, grid_search, FermatMode, GridParams, ResultsCache,
};
use cyclonum_core::transfer::{check_equivalence, norm_congruence_check};
use cyclonum_core::vanishing_sums::{classify_up_to_6, is_minimal, is_vanishing, RootSum};
use cyclonum_core::{Error, Result};
use num_bigint::BigInt;
use serde_json::{json, Value};

const EXIT_COUNTEREXAMPLE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;

/// Exhaustive Fermat sweeps above this prime need `--exhaustive`.
const FERMAT_EXHAUSTIVE_LIMIT: u64 = 2000;

#[derive(Parser)]
#[command(name = "cyclonum", version, about = "Cyclotomic numbers over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the table of cyclotomic numbers of order e over F_{p^n}.
    Table(TableArgs),
    /// Norm of f(zeta_k) with its upper bounds.
    Norm(NormArgs),
    /// Decide properties of a sum of roots of unity.
    Rootsum(RootsumArgs),
    /// Compare f(g^e) = 0 over F_q with f(zeta_k) = 0.
    Transfer(TransferArgs),
    /// Verify all bounds over a grid of fields and orders.
    Verify(VerifyArgs),
    /// Check x^e + y^e against e-th power residues mod p.
    Fermat(FermatArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    n: u32,
    #[arg(long)]
    e: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct NormArgs {
    #[arg(long)]
    k: u64,
    /// Comma-separated integers a_0,...,a_{k-1}.
    #[arg(long, allow_hyphen_values = true)]
    coeffs: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum RootsumOp {
    Vanishing,
    Minimal,
    Classify,
}

#[derive(Args)]
struct RootsumArgs {
    #[arg(long)]
    m: u64,
    /// Terms "c:e,..." standing for sum c * zeta_m^e; c may be a fraction.
    #[arg(long, allow_hyphen_values = true)]
    terms: String,
    #[arg(long, value_enum)]
    op: RootsumOp,
}

#[derive(Args)]
struct TransferArgs {
    #[arg(long)]
    p: u64,
    #[arg(long, default_value_t = 1)]
    n: u32,
    #[arg(long)]
    e: u64,
    #[arg(long, allow_hyphen_values = true)]
    coeffs: String,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    qmax: u64,
    #[arg(long)]
    kmax: u64,
    /// Largest characteristic; defaults to qmax.
    #[arg(long)]
    pmax: Option<u64>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// JSON Lines file of previously verified reports, appended to.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Write reports here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a CSV summary.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Record wall-clock time per configuration.
    #[arg(long)]
    timing: bool,
    /// Report every failing configuration instead of stopping at the first.
    #[arg(long)]
    keep_going: bool,
}

#[derive(Args)]
struct FermatArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    e: u64,
    /// Check all pairs; required for an exhaustive sweep when p > 2000.
    #[arg(long)]
    exhaustive: bool,
    #[arg(long, default_value_t = 1_000_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Counterexample(_) => EXIT_COUNTEREXAMPLE,
                Error::ResourceLimit { .. } => EXIT_LIMIT,
                _ => EXIT_USAGE,
            })
        }
    }
}

fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Table(a) => table(a),
        Command::Norm(a) => norm_cmd(a),
        Command::Rootsum(a) => rootsum(a),
        Command::Transfer(a) => transfer(a),
        Command::Verify(a) => verify(a),
        Command::Fermat(a) => fermat(a),
    }
}

fn memory_cap() -> Result<u64> {
    match std::env::var("CYCLONUM_MEMORY_CAP") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("CYCLONUM_MEMORY_CAP={v:?} is not an integer"))),
        Err(_) => Ok(DEFAULT_MEMORY_CAP),
    }
}

fn output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn print_json(v: &Value) -> Result<()> {
    let mut out = output(None)?;
    writeln!(out, "{}", serde_json::to_string_pretty(v)?)?;
    out.flush()?;
    Ok(())
}

fn parse_coeffs(k: u64, s: &str) -> Result<CycInt> {
    let coeffs: Vec<BigInt> = s
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::InvalidArgument(format!("bad coefficient {c:?}")))
        })
        .collect::<Result<_>>()?;
    if coeffs.len() as u64 != k {
        return Err(Error::InvalidArgument(format!(
            "expected exactly k = {k} coefficients, got {}",
            coeffs.len()
        )));
    }
    CycInt::new(k, coeffs)
}

fn table(a: TableArgs) -> Result<u8> {
    let cfg = make_config(a.p, a.n, a.e)?;
    let t = compute_table_capped(&cfg, memory_cap()?)?;
    let text = match a.format {
        Format::Csv => t.to_csv(),
        Format::Pretty => t.to_pretty(),
        Format::Json => serde_json::to_string(&t.to_json())? + "\n",
    };
    let mut out = output(a.out.as_ref())?;
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(0)
}

fn norm_cmd(a: NormArgs) -> Result<u8> {
    let f = parse_coeffs(a.k, &a.coeffs)?;
    let n = norm(&f);
    let general = norm_bound_general(&f);
    let (prime, circulant) = if is_prime(a.k) {
        (Some(norm_bound_prime(&f)?), Some(norm_via_circulant(&f)?))
    } else {
        (None, None)
    };
    let ok = general.holds
        && prime.as_ref().is_none_or(|b| b.holds)
        && circulant.as_ref().is_none_or(|c| *c == n);

    match a.format {
        Format::Pretty => {
            let mut out = output(None)?;
            writeln!(out, "norm: {n}")?;
            match general.bound(a.k) {
                Some(b) => writeln!(out, "general bound: {b} (holds: {})", general.holds)?,
                None => writeln!(
                    out,
                    "general bound squared: {} (holds: {})",
                    general.bound_squared(a.k),
                    general.holds
                )?,
            }
            if let Some(b) = &prime {
                writeln!(out, "prime-k bound: {} (holds: {})", b.bound, b.holds)?;
            }
            if let Some(c) = &circulant {
                writeln!(out, "circulant norm: {c}")?;
            }
            out.flush()?;
        }
        Format::Json | Format::Csv => {
            let v = json!({
                "k": a.k,
                "coeffs": f.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "norm": n.to_string(),
                "general_bound": {
                    "sum_sq": general.sum_sq.to_string(),
                    "phi": general.phi,
                    "bound_squared": general.bound_squared(a.k).to_string(),
                    "bound": general.bound(a.k).map(|b| b.to_string()),
                    "holds": general.holds,
                    "weak_holds": general.weak_holds,
                },
                "prime_bound": prime.as_ref().map(|b| json!({
                    "case": match b.case {
                        PrimeBoundCase::ZeroSum => "zero-sum",
                        PrimeBoundCase::NonzeroSum => "nonzero-sum",
                    },
                    "a_plus": b.a_plus.to_string(),
                    "a_minus": b.a_minus.to_string(),
                    "a": b.a.to_string(),
                    "coeff_sum": b.coeff_sum.to_string(),
                    "bound": b.bound.to_string(),
                    "holds": b.holds,
                })),
                "circulant_norm": circulant.map(|c| c.to_string()),
            });
            print_json(&v)?;
        }
    }
    if ok {
        Ok(0)
    } else {
        eprintln!("counterexample: a norm bound or identity failed");
        Ok(EXIT_COUNTEREXAMPLE)
    }
}

fn rootsum(a: RootsumArgs) -> Result<u8> {
    let s = RootSum::parse(a.m, &a.terms)?;
    let (op, result) = match a.op {
        RootsumOp::Vanishing => ("vanishing", json!(is_vanishing(&s))),
        RootsumOp::Minimal => ("minimal", json!(is_minimal(&s)?)),
        RootsumOp::Classify => ("classify", json!(classify_up_to_6(&s)?.as_str())),
    };
    print_json(&json!({ "sum": s.to_json()?, "op": op, "result": result }))?;
    Ok(0)
}

fn transfer(a: TransferArgs) -> Result<u8> {
    let cfg = make_config(a.p, a.n, a.e)?;
    let f = parse_coeffs(cfg.k(), &a.coeffs)?;
    let eq = check_equivalence(&cfg, &f)?;
    let divisible = if eq.fq_zero {
        Some(norm_congruence_check(&cfg, &f)?)
    } else {
        None
    };
    let mut v = serde_json::to_value(&eq)?;
    v["norm_divisible"] = json!(divisible);
    print_json(&v)?;
    if eq.consistent && divisible != Some(false) {
        Ok(0)
    } else {
        eprintln!("counterexample: transfer property failed");
        Ok(EXIT_COUNTEREXAMPLE)
    }
}

fn verify(a: VerifyArgs) -> Result<u8> {
    let params = GridParams {
        p_max: a.pmax.unwrap_or(a.qmax),
        q_max: a.qmax,
        k_max: a.kmax,
        jobs: a.jobs,
        memory_cap: memory_cap()?,
        timing: a.timing,
        keep_going: a.keep_going,
    };
    let mut cache = a.cache.as_ref().map(ResultsCache::open).transpose()?;
    let mut out = output(a.out.as_ref())?;
    let mut csv = a.csv.as_ref().map(|p| File::create(p).map(BufWriter::new)).transpose()?;
    if let Some(c) = csv.as_mut() {
        writeln!(c, "{}", csv_summary_header())?;
    }
    let result = grid_search(&params, cache.as_mut(), |r| {
        writeln!(out, "{}", serde_json::to_string(r)?)?;
        if let Some(c) = csv.as_mut() {
            writeln!(c, "{}", csv_summary(r))?;
        }
        Ok(())
    });
    out.flush()?;
    if let Some(c) = csv.as_mut() {
        c.flush()?;
    }
    let s = result?;
    eprintln!(
        "configs {}, passed {}, failed {}, vacuous {}, unsupported {}, cached {}",
        s.configs, s.passed, s.failed, s.vacuous, s.unsupported, s.cached
    );
    for (q, e, id) in &s.failures {
        eprintln!("counterexample: q = {q}, e = {e}, {id}");
    }
    Ok(if s.failed == 0 { 0 } else { EXIT_COUNTEREXAMPLE })
}

fn fermat(a: FermatArgs) -> Result<u8> {
    let mode = if a.exhaustive || a.p <= FERMAT_EXHAUSTIVE_LIMIT {
        FermatMode::Exhaustive
    } else {
        FermatMode::Sampled {
            samples: a.samples,
            seed: a.seed,
        }
    };
    let r = fermat_check(a.p, a.e, mode)?;
    print_json(&serde_json::to_value(&r)?)?;
    if r.two_is_eth_power {
        eprintln!("2 is an e-th power mod {} for e = {}; nothing to check", a.p, a.e);
    } else if !r.premise {
        eprintln!("premise p^2 > 3^k fails; nothing asserted");
    } else if !r.conclusion_holds {
        eprintln!("counterexample: x^e + y^e is a nonzero e-th power");
        return Ok(EXIT_COUNTEREXAMPLE);
    } else {
        eprintln!("2 is not an e-th power mod {} for e = {}; all pairs pass", a.p, a.e);
    }
    Ok(0)
}
