//! The `schurforge` command-line front end.
//!
//! Exit codes: 0 on success or consistency, 1 on a failed fact or a verified
//! inconsistency, 2 on usage, configuration, bound or I/O errors. Every JSON
//! report is an envelope `{version, command, config, result}`; the embedded
//! config leaves out the worker count, which never changes a result, so JSON
//! output is byte-identical across worker counts.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::irred::{
    self, specialization_certificate, survey_with, theorem_conditions, SearchOptions, Strategy, SurveyRecord,
    VerdictKind,
};
use crate::mpoly::MPoly;
use crate::schur::{ck_biv, schur_poly, vandermonde, ExponentSequence};
use crate::structure::{self, FactReport, Status, Witness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `b` in the expansion grid of `verify-facts`.
pub const MAX_GRID_B: u32 = 12;
/// Largest `k` for the mirror check.
pub const MAX_GRID_MIRROR_K: u32 = 12;
/// Largest `k` for the root check.
pub const MAX_GRID_ROOTS_K: u32 = 10;
/// Largest `k` for the squarefree check.
pub const MAX_GRID_SQUAREFREE_K: u32 = 30;
/// Largest number of variables in the min/max grid.
pub const MAX_GRID_N: usize = 5;
/// Largest last exponent in the min/max grid.
pub const MAX_GRID_C_LAST: u32 = 10;
/// Largest prime accepted by the grid.
pub const MAX_GRID_PRIME: u32 = 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactKind {
    Expansion,
    Mirror,
    CkRoots,
    CkSquarefree,
    Minmax,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StrategyArg {
    Layered,
    Naive,
}

#[derive(Debug, Parser)]
#[command(name = "schurforge", version, about = "Schur polynomials over finite fields and the rationals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; survey defaults to csv, everything else to text
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write the report here instead of standard output
    #[arg(short = 'o', long, global = true)]
    pub output: Option<PathBuf>,

    /// Seed for every pseudo-random choice
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads for grid loops
    #[arg(long, global = true, env = "SCHURFORGE_WORKERS", default_value_t = 1,
          value_parser = clap::value_parser!(u16).range(1..=256))]
    pub workers: u16,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print S_c with its determinant, degree, partition and gaps
    Show {
        /// Exponent sequence, e.g. 0,2,5
        #[arg(short = 'c', long = "exponents")]
        c: ExponentSequence,
        /// Field spec: p, p:m or Q
        #[arg(short = 'f', long = "field", default_value = "Q")]
        field: String,
    },
    /// Expand S_c (n = 3) in one variable and annotate each coefficient
    Expand {
        /// Exponent sequence of length 3, e.g. 0,2,5
        #[arg(short = 'c', long = "exponents")]
        c: ExponentSequence,
        /// Field spec: p, p:m or Q
        #[arg(short = 'f', long = "field", default_value = "Q")]
        field: String,
        /// Expansion variable
        #[arg(long, default_value_t = 0)]
        var: usize,
    },
    /// Check the structural identities over a parameter grid
    VerifyFacts {
        /// Identities to check; all by default
        #[arg(long, value_enum, value_delimiter = ',')]
        facts: Option<Vec<FactKind>>,
        /// Primes of the finite fields in the grid
        #[arg(long, value_delimiter = ',', default_values_t = [2u32, 3, 5, 7, 11])]
        primes: Vec<u32>,
        /// Leave the rationals out of the grid
        #[arg(long)]
        no_rationals: bool,
        /// Largest b in the expansion grid
        #[arg(long, default_value_t = MAX_GRID_B)]
        bmax: u32,
        /// Largest k in the mirror grid
        #[arg(long, default_value_t = MAX_GRID_MIRROR_K)]
        mirror_kmax: u32,
        /// Largest k in the root grid
        #[arg(long, default_value_t = MAX_GRID_ROOTS_K)]
        roots_kmax: u32,
        /// Largest k in the squarefree grid
        #[arg(long, default_value_t = MAX_GRID_SQUAREFREE_K)]
        squarefree_kmax: u32,
        /// Largest number of variables in the min/max grid
        #[arg(long, default_value_t = MAX_GRID_N)]
        nmax: usize,
        /// Largest last exponent in the min/max grid
        #[arg(long, default_value_t = MAX_GRID_C_LAST)]
        cmax: u32,
        /// Self-test: perturb the leading coefficient of every S_c first
        #[arg(long)]
        inject_mutation: bool,
    },
    /// Compare the hypothesis predicate with the exhaustive oracle
    Irred {
        /// Exponent sequence, e.g. 0,2,5
        #[arg(short = 'c', long = "exponents")]
        c: ExponentSequence,
        /// Finite field spec: p or p:m
        #[arg(short = 'f', long = "field")]
        field: String,
        /// Largest candidate degree to search
        #[arg(long)]
        cap: Option<u32>,
        /// Also try a specialization certificate
        #[arg(long)]
        certificate: bool,
        /// Divisor search: layered lifting or plain enumeration
        #[arg(long, value_enum, default_value_t = StrategyArg::Layered)]
        strategy: StrategyArg,
    },
    /// Run the predicate-versus-oracle survey over (0, a, b)
    Survey {
        /// Largest b
        #[arg(long, default_value_t = 9)]
        amax: u32,
        /// Primes of the fields surveyed
        #[arg(long, value_delimiter = ',', default_values_t = [2u32, 3, 5, 7])]
        primes: Vec<u32>,
        /// Largest candidate degree to search
        #[arg(long)]
        cap: Option<u32>,
        /// Record wall time per instance (breaks byte-identical output)
        #[arg(long)]
        timing: bool,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Show { .. } => "show",
            Command::Expand { .. } => "expand",
            Command::VerifyFacts { .. } => "verify-facts",
            Command::Irred { .. } => "irred",
            Command::Survey { .. } => "survey",
        }
    }
}

/// Everything that determines a report, as embedded in JSON output.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub c: Option<ExponentSequence>,
    pub field: Option<String>,
    pub degree_cap: Option<u32>,
    pub format: Format,
    pub output: Option<String>,
    pub seed: u64,
    /// Subcommand-specific parameters.
    pub params: Value,
    #[serde(skip)]
    pub workers: usize,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Self {
        let default_format = match cli.command {
            Command::Survey { .. } => Format::Csv,
            _ => Format::Text,
        };
        let mut cfg = RunConfig {
            command: cli.command.name().to_string(),
            c: None,
            field: None,
            degree_cap: None,
            format: cli.format.unwrap_or(default_format),
            output: cli.output.as_ref().map(|p| p.display().to_string()),
            seed: cli.seed,
            params: Value::Null,
            workers: cli.workers as usize,
        };
        match &cli.command {
            Command::Show { c, field } => {
                cfg.c = Some(c.clone());
                cfg.field = Some(field.clone());
            }
            Command::Expand { c, field, var } => {
                cfg.c = Some(c.clone());
                cfg.field = Some(field.clone());
                cfg.params = json!({ "var": var });
            }
            Command::VerifyFacts {
                facts,
                primes,
                no_rationals,
                bmax,
                mirror_kmax,
                roots_kmax,
                squarefree_kmax,
                nmax,
                cmax,
                inject_mutation,
            } => {
                cfg.params = json!({
                    "facts": facts.clone().unwrap_or_else(all_facts),
                    "primes": primes,
                    "rationals": !no_rationals,
                    "bmax": bmax,
                    "mirror_kmax": mirror_kmax,
                    "roots_kmax": roots_kmax,
                    "squarefree_kmax": squarefree_kmax,
                    "nmax": nmax,
                    "cmax": cmax,
                    "inject_mutation": inject_mutation,
                });
            }
            Command::Irred {
                c,
                field,
                cap,
                certificate,
                strategy,
            } => {
                cfg.c = Some(c.clone());
                cfg.field = Some(field.clone());
                cfg.degree_cap = *cap;
                cfg.params = json!({ "certificate": certificate, "strategy": strategy });
            }
            Command::Survey {
                amax,
                primes,
                cap,
                timing,
            } => {
                cfg.degree_cap = *cap;
                cfg.params = json!({ "amax": amax, "primes": primes, "timing": timing });
            }
        }
        cfg
    }
}

fn all_facts() -> Vec<FactKind> {
    FactKind::value_variants().to_vec()
}

/// Failure of a subcommand, mapped onto the exit-code contract.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parse `args` (program name first) and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let cfg = RunConfig::from_cli(&cli);
    let result = match &cli.command {
        Command::Show { c, field } => cmd_show(&cfg, c, field),
        Command::Expand { c, field, var } => cmd_expand(&cfg, c, field, *var),
        Command::VerifyFacts { .. } => cmd_verify_facts(&cfg, &cli.command),
        Command::Irred {
            c,
            field,
            cap,
            certificate,
            strategy,
        } => cmd_irred(&cfg, c, field, *cap, *certificate, *strategy),
        Command::Survey {
            amax,
            primes,
            cap,
            timing,
        } => cmd_survey(&cfg, *amax, primes, *cap, *timing),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn parse_field(spec: &str) -> std::result::Result<FieldCtx, Failure> {
    spec.parse::<FieldCtx>().map_err(Failure::from)
}

fn parse_finite_field(spec: &str) -> std::result::Result<FieldCtx, Failure> {
    let ctx = parse_field(spec)?;
    if !ctx.is_finite() {
        return Err(Failure::Usage(format!("field '{spec}' is not finite; this command needs p or p:m")));
    }
    Ok(ctx)
}

fn reject_format(cfg: &RunConfig, allowed: &[Format]) -> std::result::Result<(), Failure> {
    if allowed.contains(&cfg.format) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("format {:?} is not available for {}", cfg.format, cfg.command).to_lowercase()))
    }
}

fn envelope(cfg: &RunConfig, result: Value) -> Value {
    json!({
        "version": crate::VERSION,
        "command": cfg.command,
        "config": cfg,
        "result": result,
    })
}

/// Write the report to the configured destination.
fn emit(cfg: &RunConfig, body: &str) -> io::Result<()> {
    match &cfg.output {
        Some(path) => {
            let mut f = File::create(path)?;
            f.write_all(body.as_bytes())?;
            f.flush()
        }
        None => {
            let mut out = io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()
        }
    }
}

fn emit_json(cfg: &RunConfig, result: Value) -> io::Result<()> {
    let mut body = serde_json::to_string_pretty(&envelope(cfg, result)).expect("serializable");
    body.push('\n');
    emit(cfg, &body)
}

/// Side messages go to standard output when the report goes to a file and
/// to standard error otherwise, so piped reports stay clean.
fn note(cfg: &RunConfig, line: &str) {
    if cfg.output.is_some() {
        println!("{line}");
    } else {
        eprintln!("{line}");
    }
}

fn join(xs: &[u32]) -> String {
    xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_show(cfg: &RunConfig, c: &ExponentSequence, field: &str) -> Outcome {
    reject_format(cfg, &[Format::Text, Format::Json])?;
    let ctx = parse_field(field)?;
    let s = schur_poly(c, &ctx)?;
    let v = vandermonde(c, &ctx)?;
    let degree = c.schur_degree();
    let lambda = c.partition();
    let gaps = c.gaps();
    match cfg.format {
        Format::Json => emit_json(
            cfg,
            json!({
                "c": c,
                "field": ctx.to_string(),
                "schur": s.to_string(),
                "vandermonde": v.to_string(),
                "total_degree": degree,
                "partition": lambda.parts(),
                "gaps": gaps,
            }),
        )?,
        _ => {
            let body = format!(
                "{s}\nc: {c}\nfield: {ctx}\nV_c: {v}\ntotal_degree: {degree}\npartition: {}\ngaps: {}\nversion: {}\n",
                join(lambda.parts()),
                join(&gaps),
                crate::VERSION
            );
            emit(cfg, &body)?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct ExpansionRow {
    i: u32,
    coefficient: String,
    assoc_c_a: bool,
    assoc_c_b_minus_a: bool,
    div_c_a: bool,
    div_c_b_minus_a: bool,
}

fn divides(p: &MPoly, q: &MPoly) -> Result<bool> {
    Ok(p.exact_divide(q)?.is_some())
}

fn associate(p: &MPoly, q: &MPoly) -> Result<bool> {
    if p.is_zero() {
        return Ok(false);
    }
    Ok(p.monomial_associate(q)?.is_some())
}

fn cmd_expand(cfg: &RunConfig, c: &ExponentSequence, field: &str, var: usize) -> Outcome {
    reject_format(cfg, &[Format::Text, Format::Json])?;
    if c.len() != 3 {
        return Err(Failure::Usage(format!("expand needs n = 3 (got n = {})", c.len())));
    }
    if var > 2 {
        return Err(Failure::Usage(format!("variable x{var} out of range for n = 3")));
    }
    let ctx = parse_field(field)?;
    let a = c.get(1) - c.get(0);
    let gap = c.get(2) - c.get(1);
    let table = structure::expand_schur(c, &ctx, var)?;
    let (y, z) = match var {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let ca = ck_biv(a, &ctx, 3, (y, z))?;
    let cg = ck_biv(gap, &ctx, 3, (y, z))?;
    let mut rows = Vec::with_capacity(table.coeffs.len());
    for (i, p) in table.coeffs.iter().enumerate() {
        rows.push(ExpansionRow {
            i: table.offset + i as u32,
            coefficient: p.to_string(),
            assoc_c_a: associate(p, &ca)?,
            assoc_c_b_minus_a: associate(p, &cg)?,
            div_c_a: divides(p, &ca)?,
            div_c_b_minus_a: divides(p, &cg)?,
        });
    }
    match cfg.format {
        Format::Json => emit_json(
            cfg,
            json!({
                "c": c,
                "field": ctx.to_string(),
                "var": var,
                "a": a,
                "b_minus_a": gap,
                "rows": rows,
            }),
        )?,
        _ => {
            let mut body = format!("S_({c}) over {ctx} in powers of x{var}; C_a = C_{a}, C_(b-a) = C_{gap} on (x{y}, x{z})\n");
            for r in &rows {
                body.push_str(&format!(
                    "i={}: assoc_C_{a}={} assoc_C_{gap}={} div_C_{a}={} div_C_{gap}={}  P = {}\n",
                    r.i, r.assoc_c_a, r.assoc_c_b_minus_a, r.div_c_a, r.div_c_b_minus_a, r.coefficient
                ));
            }
            emit(cfg, &body)?;
        }
    }
    Ok(EXIT_OK)
}

/// One grid cell of `verify-facts`.
#[derive(Debug, Clone)]
enum Job {
    Expansion(u32, u32, FieldCtx),
    Mirror(u32, FieldCtx),
    Roots(u32, u32),
    Squarefree(u32, u32),
    Minmax(ExponentSequence, FieldCtx),
}

/// Strictly increasing sequences `(0, c_1, ..., c_{n-1})` with `c_{n-1} <= cmax`.
pub fn minmax_grid(n: usize, cmax: u32) -> Vec<ExponentSequence> {
    fn rec(prefix: &mut Vec<u32>, n: usize, cmax: u32, out: &mut Vec<ExponentSequence>) {
        if prefix.len() == n {
            out.push(ExponentSequence::new(prefix.clone()).expect("strictly increasing"));
            return;
        }
        let start = prefix.last().map_or(0, |&x| x + 1);
        let room = (n - prefix.len() - 1) as u32;
        for x in start..=cmax.saturating_sub(room) {
            if prefix.is_empty() && x > 0 {
                break;
            }
            prefix.push(x);
            rec(prefix, n, cmax, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, cmax, &mut out);
    out
}

/// In mutation mode a verifier that rejects the corrupted input has caught
/// the corruption too, so the error becomes a failed report.
fn run_job(job: &Job, mutate: bool) -> Result<FactReport> {
    let report = run_job_inner(job, mutate);
    match report {
        Err(e) if mutate => Ok(FactReport {
            fact: job.fact().into(),
            params: job.params(),
            status: Status::Fail,
            checks: 1,
            witness: Some(Witness {
                check: "verifier accepts the perturbed input".into(),
                left: e.to_string(),
                right: "a report".into(),
            }),
        }),
        other => other,
    }
}

impl Job {
    fn fact(&self) -> &'static str {
        match self {
            Job::Expansion(..) => "expansion",
            Job::Mirror(..) => "mirror",
            Job::Roots(..) => "ck_roots",
            Job::Squarefree(..) => "ck_squarefree",
            Job::Minmax(..) => "minmax",
        }
    }

    fn params(&self) -> Value {
        match self {
            Job::Expansion(a, b, ctx) => json!({ "a": a, "b": b, "field": ctx }),
            Job::Mirror(k, ctx) => json!({ "k": k, "field": ctx }),
            Job::Roots(k, p) | Job::Squarefree(k, p) => json!({ "k": k, "p": p }),
            Job::Minmax(c, ctx) => json!({ "c": c, "field": ctx }),
        }
    }
}

fn run_job_inner(job: &Job, mutate: bool) -> Result<FactReport> {
    match job {
        Job::Expansion(a, b, ctx) => {
            if mutate {
                let c = ExponentSequence::new(vec![0, *a, *b])?;
                let s = schur_poly(&c, ctx)?.perturb_leading();
                structure::verify_expansion_fact_with(&s, *a, *b, ctx)
            } else {
                structure::verify_expansion_fact(*a, *b, ctx)
            }
        }
        Job::Mirror(k, ctx) => structure::verify_mirror(*k, ctx),
        Job::Roots(k, p) => structure::verify_ck_roots(*k, *p),
        Job::Squarefree(k, p) => {
            let got = structure::ck_squarefree(*k, *p)?;
            let expected = k % p != 0;
            Ok(FactReport {
                fact: "ck_squarefree".into(),
                params: json!({ "k": k, "p": p }),
                status: if got == expected { Status::Pass } else { Status::Fail },
                checks: 1,
                witness: (got != expected).then(|| Witness {
                    check: "C_k squarefree iff p does not divide k".into(),
                    left: got.to_string(),
                    right: expected.to_string(),
                }),
            })
        }
        Job::Minmax(c, ctx) => {
            if mutate {
                let s = schur_poly(c, ctx)?.perturb_leading();
                structure::verify_minmax_fact_with(&s, c, ctx)
            } else {
                structure::verify_minmax_fact(c, ctx)
            }
        }
    }
}

fn cmd_verify_facts(cfg: &RunConfig, cmd: &Command) -> Outcome {
    let Command::VerifyFacts {
        facts,
        primes,
        no_rationals,
        bmax,
        mirror_kmax,
        roots_kmax,
        squarefree_kmax,
        nmax,
        cmax,
        inject_mutation,
    } = cmd
    else {
        unreachable!("dispatched on VerifyFacts");
    };
    reject_format(cfg, &[Format::Text, Format::Json])?;
    let bound = |name: &str, got: u64, max: u64| {
        if got > max {
            Err(Failure::Usage(format!("{name} = {got} exceeds the grid bound {max}")))
        } else {
            Ok(())
        }
    };
    bound("bmax", *bmax as u64, MAX_GRID_B as u64)?;
    bound("mirror-kmax", *mirror_kmax as u64, MAX_GRID_MIRROR_K as u64)?;
    bound("roots-kmax", *roots_kmax as u64, MAX_GRID_ROOTS_K as u64)?;
    bound("squarefree-kmax", *squarefree_kmax as u64, MAX_GRID_SQUAREFREE_K as u64)?;
    bound("nmax", *nmax as u64, MAX_GRID_N as u64)?;
    bound("cmax", *cmax as u64, MAX_GRID_C_LAST as u64)?;
    let mut fields = Vec::new();
    for &p in primes {
        bound("prime", p as u64, MAX_GRID_PRIME as u64)?;
        fields.push(FieldCtx::prime(p)?);
    }
    if !no_rationals {
        fields.push(FieldCtx::rationals());
    }
    let facts = facts.clone().unwrap_or_else(all_facts);

    let mut jobs = Vec::new();
    let mut skipped = Vec::new();
    for fact in &facts {
        match fact {
            FactKind::Expansion => {
                for ctx in &fields {
                    for b in 4..=*bmax {
                        for a in 2..b - 1 {
                            jobs.push(Job::Expansion(a, b, ctx.clone()));
                        }
                    }
                }
            }
            FactKind::Mirror => {
                for ctx in &fields {
                    for k in 1..=*mirror_kmax {
                        jobs.push(Job::Mirror(k, ctx.clone()));
                    }
                }
            }
            FactKind::CkRoots => {
                for &p in primes {
                    for k in 1..=*roots_kmax {
                        if k % p == 0 {
                            continue;
                        }
                        let m = structure::multiplicative_order(p, k).expect("p is a unit mod k");
                        if (p as u64).checked_pow(m).is_none_or(|q| q > crate::field::MAX_ORDER) {
                            skipped.push(json!({
                                "fact": "ck_roots",
                                "params": { "k": k, "p": p },
                                "reason": format!("splitting field GF({p}^{m}) exceeds the field size bound"),
                            }));
                            continue;
                        }
                        jobs.push(Job::Roots(k, p));
                    }
                }
            }
            FactKind::CkSquarefree => {
                for &p in primes {
                    for k in 1..=*squarefree_kmax {
                        jobs.push(Job::Squarefree(k, p));
                    }
                }
            }
            FactKind::Minmax => {
                for ctx in &fields {
                    for n in 3..=*nmax {
                        for c in minmax_grid(n, *cmax) {
                            jobs.push(Job::Minmax(c, ctx.clone()));
                        }
                    }
                }
            }
        }
    }

    let mutate = *inject_mutation;
    let results: Vec<Result<FactReport>> = if cfg.workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| Failure::Usage(format!("thread pool: {e}")))?;
        pool.install(|| jobs.par_iter().map(|j| run_job(j, mutate)).collect())
    } else {
        jobs.iter().map(|j| run_job(j, mutate)).collect()
    };
    let reports = results.into_iter().collect::<Result<Vec<_>>>()?;
    let failed: Vec<&FactReport> = reports.iter().filter(|r| !r.passed()).collect();
    let code = if failed.is_empty() { EXIT_OK } else { EXIT_FAILED };

    match cfg.format {
        Format::Json => emit_json(
            cfg,
            json!({
                "passed": reports.len() - failed.len(),
                "failed": failed.len(),
                "skipped": skipped,
                "reports": reports,
            }),
        )?,
        _ => {
            let mut body = String::new();
            for r in &failed {
                body.push_str(&format!("FAIL {} {}", r.fact, r.params));
                if let Some(w) = &r.witness {
                    body.push_str(&format!(": {}: {} != {}", w.check, w.left, w.right));
                }
                body.push('\n');
            }
            for s in &skipped {
                body.push_str(&format!("SKIP {} {}: {}\n", s["fact"].as_str().unwrap_or(""), s["params"], s["reason"].as_str().unwrap_or("")));
            }
            body.push_str(&format!(
                "{} reports, {} passed, {} failed, {} skipped\n",
                reports.len(),
                reports.len() - failed.len(),
                failed.len(),
                skipped.len()
            ));
            emit(cfg, &body)?;
        }
    }
    Ok(code)
}

fn cmd_irred(
    cfg: &RunConfig,
    c: &ExponentSequence,
    field: &str,
    cap: Option<u32>,
    certificate: bool,
    strategy: StrategyArg,
) -> Outcome {
    reject_format(cfg, &[Format::Text, Format::Json])?;
    let ctx = parse_finite_field(field)?;
    let s = schur_poly(c, &ctx)?;
    let theorem = theorem_conditions(c, ctx.characteristic());
    let opts = SearchOptions {
        degree_cap: cap,
        strategy: match strategy {
            StrategyArg::Layered => Strategy::Layered,
            StrategyArg::Naive => Strategy::Naive,
        },
        parallel: cfg.workers > 1,
    };
    let verdict = if cfg.workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| Failure::Usage(format!("thread pool: {e}")))?;
        pool.install(|| irred::brute_force_verdict_with(&s, &opts))?
    } else {
        irred::brute_force_verdict_with(&s, &opts)?
    };
    let cert = if certificate && c.len() >= 3 {
        Some(specialization_certificate(&s, cfg.seed)?)
    } else {
        None
    };
    let mut contradictions = Vec::new();
    if theorem.applies && verdict.kind == VerdictKind::Reducible {
        contradictions.push("hypotheses hold but the oracle found a factor");
    }
    if !theorem.only_if_holds && verdict.kind == VerdictKind::Irreducible {
        contradictions.push("c_0 > 0 or gcd(c) > 1 but the oracle found no factor");
    }
    if cert.as_ref().is_some_and(|x| x.is_certified()) && verdict.kind == VerdictKind::Reducible {
        contradictions.push("certificate and oracle disagree");
    }
    let consistent = contradictions.is_empty();

    match cfg.format {
        Format::Json => emit_json(
            cfg,
            json!({
                "c": c,
                "field": ctx.to_string(),
                "total_degree": c.schur_degree(),
                "theorem": theorem,
                "verdict": verdict,
                "certificate": cert,
                "consistent": consistent,
                "contradictions": contradictions,
            }),
        )?,
        _ => {
            let failures: Vec<&str> = theorem.failures.iter().map(|f| f.name()).collect();
            let mut body = format!(
                "S_({c}) over {ctx}, total degree {}\nprediction: applies={} only_if_holds={} failures=[{}]\nverdict: {}\n",
                c.schur_degree(),
                theorem.applies,
                theorem.only_if_holds,
                failures.join(","),
                verdict.kind.as_str()
            );
            if let Some((a, q)) = &verdict.witness {
                body.push_str(&format!("witness: {a}\ncofactor: {q}\n"));
            }
            body.push_str(&format!(
                "searched_degree: {}\ncandidates_tested: {}\n",
                verdict.searched_degree, verdict.candidates_tested
            ));
            match &cert {
                Some(irred::Certificate::Certified { attempt, image, .. }) => {
                    body.push_str(&format!("certificate: certified at attempt {attempt}, image {image}\n"));
                }
                Some(irred::Certificate::Unknown { attempts }) => {
                    body.push_str(&format!("certificate: unknown after {attempts} attempts\n"));
                }
                None => {}
            }
            body.push_str(if consistent { "consistent\n" } else { "INCONSISTENT\n" });
            for m in &contradictions {
                body.push_str(&format!("  {m}\n"));
            }
            emit(cfg, &body)?;
        }
    }
    Ok(if consistent { EXIT_OK } else { EXIT_FAILED })
}

fn survey_json_record(r: &SurveyRecord) -> Value {
    json!({
        "a": r.a,
        "b": r.b,
        "p": r.p,
        "total_degree": r.total_degree,
        "theorem_applies": r.theorem_applies,
        "verdict": r.verdict.kind.as_str(),
        "witness": r.witness_text(),
        "candidates_tested": r.verdict.candidates_tested,
        "elapsed_ms": r.elapsed_ms,
    })
}

fn cmd_survey(cfg: &RunConfig, amax: u32, primes: &[u32], cap: Option<u32>, timing: bool) -> Outcome {
    let records = survey_with(amax, primes, cap, cfg.workers, timing)?;
    let applicable = records.iter().filter(|r| r.theorem_applies).count();
    let inconsistent = records.iter().filter(|r| !r.consistent).count();
    match cfg.format {
        Format::Json => emit_json(
            cfg,
            json!({
                "instances": records.len(),
                "theorem_applicable": applicable,
                "inconsistencies": inconsistent,
                "records": records.iter().map(survey_json_record).collect::<Vec<_>>(),
            }),
        )?,
        _ => {
            let mut buf = Vec::new();
            irred::write_csv(&records, &mut buf)?;
            emit(cfg, &String::from_utf8(buf).expect("csv is utf-8"))?;
        }
    }
    for r in records.iter().filter(|r| !r.consistent) {
        note(cfg, &format!("inconsistent: c=({}) p={} verdict={}", r.c, r.p, r.verdict.kind.as_str()));
    }
    note(
        cfg,
        &format!("{} instances, {applicable} theorem-applicable, {inconsistent} inconsistencies", records.len()),
    );
    Ok(if inconsistent == 0 { EXIT_OK } else { EXIT_FAILED })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_global_flags_after_subcommand() {
        let cli = Cli::try_parse_from(["schurforge", "show", "-c", "0,2,3", "--format", "json", "--seed", "7"]).unwrap();
        let cfg = RunConfig::from_cli(&cli);
        assert_eq!(cfg.format, Format::Json);
        assert_eq!(cfg.seed, 7);
        assert_eq!(cfg.field.as_deref(), Some("Q"));
    }

    #[test]
    fn minmax_grid_counts() {
        // C(10, n - 1) sequences once c_0 = 0 is fixed
        assert_eq!(minmax_grid(3, 10).len(), 45);
        assert_eq!(minmax_grid(4, 10).len(), 120);
        assert_eq!(minmax_grid(5, 10).len(), 210);
        assert!(minmax_grid(3, 10).iter().all(|c| c.get(0) == 0));
    }

    #[test]
    fn perturbation_changes_the_polynomial() {
        let f = FieldCtx::prime(2).unwrap();
        let s = schur_poly(&ExponentSequence::new(vec![0, 2, 5]).unwrap(), &f).unwrap();
        assert_ne!(s.perturb_leading(), s);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["schurforge", "bogus"]), EXIT_USAGE);
        assert_eq!(run(["schurforge", "irred", "-c", "0,2,5", "-f", "Q"]), EXIT_USAGE);
        assert_eq!(run(["schurforge", "expand", "-c", "0,2,5,7", "-f", "Q"]), EXIT_USAGE);
        assert_eq!(run(["schurforge", "--help"]), EXIT_OK);
    }
}
