//! Hypothesis-versus-oracle survey over three-variable sequences `(0, a, b)`.

use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{brute_force_verdict_with, theorem_conditions, SearchOptions, TheoremCheck, Verdict, VerdictKind};
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::schur::{schur_poly, ExponentSequence};

pub const CSV_HEADER: &str = "a,b,p,total_degree,theorem_applies,verdict,witness,candidates_tested,elapsed_ms";

pub const MAX_SURVEY_B: u32 = 12;
pub const MAX_SURVEY_PRIME: u32 = 11;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRecord {
    pub a: u32,
    pub b: u32,
    pub c: ExponentSequence,
    pub p: u32,
    pub total_degree: u32,
    pub theorem: TheoremCheck,
    pub theorem_applies: bool,
    pub verdict: Verdict,
    pub consistent: bool,
    /// Wall time of the oracle call; 0 unless timing was requested.
    pub elapsed_ms: u64,
}

impl SurveyRecord {
    pub fn witness_text(&self) -> String {
        self.verdict.witness.as_ref().map(|(a, _)| a.to_string()).unwrap_or_default()
    }
}

/// Survey with the default search options, serial, without timing.
pub fn survey(a_max: u32, primes: &[u32], degree_cap: Option<u32>) -> Result<Vec<SurveyRecord>> {
    survey_with(a_max, primes, degree_cap, 1, false)
}

/// Records for every `(0, a, b)` with `1 < a < b - 1`, `b <= a_max`, and
/// every listed prime, in `(b, a, prime list)` order. The order and content
/// of the output do not depend on `workers`.
pub fn survey_with(
    a_max: u32,
    primes: &[u32],
    degree_cap: Option<u32>,
    workers: usize,
    timing: bool,
) -> Result<Vec<SurveyRecord>> {
    if a_max > MAX_SURVEY_B {
        return Err(Error::Size(format!("a_max = {a_max} exceeds {MAX_SURVEY_B}")));
    }
    let mut fields = Vec::with_capacity(primes.len());
    for &p in primes {
        if p > MAX_SURVEY_PRIME {
            return Err(Error::Size(format!("prime {p} exceeds {MAX_SURVEY_PRIME}")));
        }
        fields.push(FieldCtx::prime(p)?);
    }
    let mut jobs = Vec::new();
    for b in 4..=a_max {
        for a in 2..b - 1 {
            for f in &fields {
                jobs.push((a, b, f.clone()));
            }
        }
    }
    let run = |(a, b, f): &(u32, u32, FieldCtx)| record(*a, *b, f, degree_cap, timing);
    let results: Vec<Result<SurveyRecord>> = if workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| Error::BadParameter(format!("thread pool: {e}")))?;
        pool.install(|| jobs.par_iter().map(run).collect())
    } else {
        jobs.iter().map(run).collect()
    };
    results.into_iter().collect()
}

fn record(a: u32, b: u32, f: &FieldCtx, degree_cap: Option<u32>, timing: bool) -> Result<SurveyRecord> {
    let c = ExponentSequence::new(vec![0, a, b])?;
    let p = f.characteristic();
    let s = schur_poly(&c, f)?;
    let theorem = theorem_conditions(&c, p);
    let start = Instant::now();
    let verdict = brute_force_verdict_with(
        &s,
        &SearchOptions {
            degree_cap,
            ..SearchOptions::default()
        },
    )?;
    let elapsed_ms = if timing { start.elapsed().as_millis() as u64 } else { 0 };
    let consistent = !(theorem.applies && verdict.kind == VerdictKind::Reducible
        || !theorem.only_if_holds && verdict.kind == VerdictKind::Irreducible);
    Ok(SurveyRecord {
        a,
        b,
        total_degree: s.total_degree()? as u32,
        c,
        p,
        theorem_applies: theorem.applies,
        theorem,
        verdict,
        consistent,
        elapsed_ms,
    })
}

/// Write the survey CSV, one line per record after the header.
pub fn write_csv<W: Write>(records: &[SurveyRecord], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER.split(','))
        .map_err(|e| Error::Parse(e.to_string()))?;
    for r in records {
        w.write_record([
            r.a.to_string(),
            r.b.to_string(),
            r.p.to_string(),
            r.total_degree.to_string(),
            r.theorem_applies.to_string(),
            r.verdict.kind.as_str().to_string(),
            r.witness_text(),
            r.verdict.candidates_tested.to_string(),
            r.elapsed_ms.to_string(),
        ])
        .map_err(|e| Error::Parse(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(())
}
