//! Irreducibility of Schur polynomials over finite fields.
//!
//! [`brute_force_verdict`] is a ground-truth oracle: it enumerates every
//! homogeneous divisor of each candidate degree and assumes nothing about
//! the input beyond homogeneity. [`theorem_conditions`] evaluates the
//! sufficient hypotheses for irreducibility and the necessary conditions
//! `c0 = 0`, `gcd(c) = 1`; the two reducibility witnesses realize the
//! necessary direction explicitly.

mod binary;
mod certificate;
mod linalg;
mod search;
mod survey;
mod unipoly;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::mpoly::{Exponents, MPoly};
use crate::schur::{ck_biv, schur_poly, ExponentSequence};

pub use certificate::{specialization_certificate, Certificate, CERTIFICATE_ATTEMPTS};
pub use survey::{survey, survey_with, write_csv, SurveyRecord, CSV_HEADER};

/// Named violations reported by [`theorem_conditions`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    C0Nonzero,
    GapLe1,
    AdjacentGcd,
    PDividesGap,
    GcdCNot1,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::C0Nonzero => "c0_nonzero",
            Condition::GapLe1 => "gap_le_1",
            Condition::AdjacentGcd => "adjacent_gcd",
            Condition::PDividesGap => "p_divides_gap",
            Condition::GcdCNot1 => "gcd_c_not_1",
        }
    }

    /// Whether the condition belongs to the sufficient hypothesis set.
    pub fn is_hypothesis(self) -> bool {
        !matches!(self, Condition::GcdCNot1)
    }
}

/// Serialized by [`Condition::name`]; derived snake case would split digits wrongly.
impl Serialize for Condition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremCheck {
    pub applies: bool,
    pub only_if_holds: bool,
    pub failures: Vec<Condition>,
}

/// Evaluate the irreducibility hypotheses for `c` in characteristic `p`
/// (`p = 0` for characteristic zero).
pub fn theorem_conditions(c: &ExponentSequence, p: u32) -> TheoremCheck {
    let gaps = c.gaps();
    let mut failures = Vec::new();
    let c0 = c.get(0);
    if c0 != 0 {
        failures.push(Condition::C0Nonzero);
    }
    if gaps.iter().any(|&d| d <= 1) {
        failures.push(Condition::GapLe1);
    }
    if gaps.windows(2).any(|w| w[0].gcd(&w[1]) != 1) {
        failures.push(Condition::AdjacentGcd);
    }
    if p != 0 && gaps.iter().any(|&d| d % p == 0) {
        failures.push(Condition::PDividesGap);
    }
    let g = c.gcd();
    if g != 1 {
        failures.push(Condition::GcdCNot1);
    }
    TheoremCheck {
        applies: failures.iter().all(|f| !f.is_hypothesis()),
        only_if_holds: c0 == 0 && g == 1,
        failures,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VerdictKind {
    Irreducible,
    Reducible,
    Inconclusive,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::Irreducible => "Irreducible",
            VerdictKind::Reducible => "Reducible",
            VerdictKind::Inconclusive => "Inconclusive",
        }
    }
}

/// Outcome of the exhaustive divisor search.
///
/// `witness` is `(A, Q)` with `A * Q = P`, `A` monic and non-monomial, and
/// `deg A <= deg Q`; it is present exactly when the kind is `Reducible`.
/// `searched_degree` is the largest candidate degree fully exhausted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub witness: Option<(MPoly, MPoly)>,
    pub searched_degree: u32,
    pub candidates_tested: u64,
}

impl Serialize for Verdict {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Verdict", 4)?;
        st.serialize_field("kind", self.kind.as_str())?;
        let witness = self
            .witness
            .as_ref()
            .map(|(a, q)| serde_json::json!({"factor": a.to_string(), "cofactor": q.to_string()}));
        st.serialize_field("witness", &witness)?;
        st.serialize_field("searched_degree", &self.searched_degree)?;
        st.serialize_field("candidates_tested", &self.candidates_tested)?;
        st.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Layer-by-layer lifting with linear solving; complete and fast.
    #[default]
    Layered,
    /// Every monic coefficient vector in order; only for tiny inputs.
    Naive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchOptions {
    pub degree_cap: Option<u32>,
    pub strategy: Strategy,
    pub parallel: bool,
}

fn check_oracle_input(p: &MPoly) -> Result<u32> {
    if !p.ctx().is_finite() {
        return Err(Error::BadParameter("the oracle needs a finite field".into()));
    }
    if p.is_zero() {
        return Err(Error::BadParameter("zero polynomial".into()));
    }
    if !p.is_homogeneous() {
        return Err(Error::BadParameter("polynomial is not homogeneous".into()));
    }
    let total = p.total_degree()? as u32;
    if total == 0 {
        return Err(Error::BadParameter("constant polynomial".into()));
    }
    for i in 0..p.nvars() {
        if p.mindeg(i)? > 0 {
            return Err(Error::BadParameter(format!("x{i} divides the polynomial")));
        }
    }
    Ok(total)
}

/// Decide irreducibility of a form by exhaustive divisor search up to
/// `degree_cap`.
pub fn brute_force_verdict(p: &MPoly, degree_cap: Option<u32>) -> Result<Verdict> {
    brute_force_verdict_with(
        p,
        &SearchOptions {
            degree_cap,
            ..SearchOptions::default()
        },
    )
}

pub fn brute_force_verdict_with(p: &MPoly, opts: &SearchOptions) -> Result<Verdict> {
    let total = check_oracle_input(p)?;
    let full = total / 2;
    let limit = opts.degree_cap.map_or(full, |cap| cap.min(full));
    let mut tested = 0u64;
    for d in 1..=limit {
        let first = match opts.strategy {
            Strategy::Layered => {
                let found = search::layered_divisors(p, d, opts.parallel);
                tested += found.tested;
                found.divisors.into_iter().next()
            }
            Strategy::Naive => {
                let (first, count) = search::naive_first_divisor(p, d);
                tested += count;
                first
            }
        };
        if let Some(a) = first {
            let q = p.exact_divide(&a)?.expect("search confirms every divisor");
            return Ok(Verdict {
                kind: VerdictKind::Reducible,
                witness: Some((a, q)),
                searched_degree: d,
                candidates_tested: tested,
            });
        }
    }
    let kind = if limit == full { VerdictKind::Irreducible } else { VerdictKind::Inconclusive };
    Ok(Verdict {
        kind,
        witness: None,
        searched_degree: limit,
        candidates_tested: tested,
    })
}

/// Every monic non-monomial divisor of `p` of total degree `d`, sorted in
/// witness order.
pub fn divisors_of_degree(p: &MPoly, d: u32) -> Result<Vec<MPoly>> {
    check_oracle_input(p)?;
    Ok(search::layered_divisors(p, d, false).divisors)
}

/// `prod_{i<j} C_g(x_j, x_i)` for `g = gcd(c) > 1`, checked to divide `S_c`.
pub fn gcd_reducibility_witness(c: &ExponentSequence, ctx: &FieldCtx) -> Result<MPoly> {
    let g = c.gcd();
    if g <= 1 {
        return Err(Error::BadParameter(format!("gcd({c}) = {g}, no gcd witness")));
    }
    if c.get(0) != 0 {
        return Err(Error::BadParameter(format!("{c} has c0 > 0")));
    }
    let n = c.len();
    let mut w = MPoly::one(ctx, n);
    for i in 0..n {
        for j in i + 1..n {
            w = w.mul(&ck_biv(g, ctx, n, (j, i))?)?;
        }
    }
    let s = schur_poly(c, ctx)?;
    if !s.is_divisible_by(&w)? {
        return Err(Error::Construction(format!("gcd witness does not divide S_({c})")));
    }
    Ok(w)
}

/// `(x_0 ... x_{n-1})^{c0}` for `c0 > 0`, checked to divide `S_c`.
pub fn shifted_reducibility_witness(c: &ExponentSequence, ctx: &FieldCtx) -> Result<MPoly> {
    let c0 = c.get(0);
    if c0 == 0 {
        return Err(Error::BadParameter(format!("{c} has c0 = 0")));
    }
    let n = c.len();
    let w = MPoly::one(ctx, n).mul_monomial(&Exponents::new(vec![c0; n]));
    let s = schur_poly(c, ctx)?;
    if !s.is_divisible_by(&w)? {
        return Err(Error::Construction(format!("monomial witness does not divide S_({c})")));
    }
    Ok(w)
}
