//! Verifiers for the structural identities of Schur polynomials: the roots
//! of `C_k`, the single-variable expansion of `S_(0,a,b)` with its closed
//! form and reversal relation, and the min/max-part identities.
//!
//! Every verifier recomputes both sides independently and reports the first
//! mismatch with full polynomials in canonical text.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};
use crate::mpoly::{Exponents, MPoly};
use crate::schur::{ck_biv, schur_poly, ExponentSequence};
use crate::upoly;

/// Expansion `S = sum_k coeffs[k] * x_var^(offset + k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExpansionTable {
    pub var: usize,
    pub offset: u32,
    pub coeffs: Vec<MPoly>,
    pub source: Option<ExponentSequence>,
}

impl ExpansionTable {
    pub fn width(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn reconstruct(&self) -> MPoly {
        let first = &self.coeffs[0];
        let mut acc = MPoly::zero(first.ctx(), first.nvars());
        for (k, coeff) in self.coeffs.iter().enumerate() {
            let mut e = Exponents::zeros(first.nvars());
            e.set(self.var, self.offset + k as u32);
            acc = acc.add(&coeff.mul_monomial(&e)).expect("same ring");
        }
        acc
    }
}

/// Group the terms of `s` by their `x_i`-degree.
pub fn expand_in_var(s: &MPoly, i: usize) -> Result<ExpansionTable> {
    let offset = s.mindeg(i)?;
    let coeffs = s.coefficients_in(i)?.split_off(offset as usize);
    Ok(ExpansionTable {
        var: i,
        offset,
        coeffs,
        source: None,
    })
}

/// Expansion of `S_c` in `x_i`, tagged with its source sequence.
pub fn expand_schur(c: &ExponentSequence, ctx: &FieldCtx, i: usize) -> Result<ExpansionTable> {
    let mut table = expand_in_var(&schur_poly(c, ctx)?, i)?;
    table.source = Some(c.clone());
    Ok(table)
}

/// One coefficient of the expansion of `S_(0,a,b)` in closed form:
/// `P_d = C_l(y,z) * C_gap(y,z) * y^i0 * z^z_exp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosedFormTerm {
    pub d: u32,
    pub l: u32,
    pub gap: u32,
    pub i0: u32,
    pub j0: u32,
    /// `a + b - 2`
    pub big_d: u32,
    /// exponents of `(y, z)` in the monomial factor
    pub mono_shift: (u32, u32),
}

impl ClosedFormTerm {
    pub fn polynomial(&self, ctx: &FieldCtx, nvars: usize, y: usize, z: usize) -> Result<MPoly> {
        let mut e = Exponents::zeros(nvars);
        e.set(y, self.mono_shift.0);
        e.set(z, self.mono_shift.1);
        Ok(ck_biv(self.l, ctx, nvars, (y, z))?
            .mul(&ck_biv(self.gap, ctx, nvars, (y, z))?)?
            .mul_monomial(&e))
    }
}

/// Closed-form data for every `d` in `0..=b-2`, valid when `1 < a <= b - a`.
///
/// The two index windows are `i in [max(0, D-d-b+1), min(a-1, D-d-a)]` and
/// `j in [max(a, D-d-a+1), min(b-1, D-d)]`; they always have equal length.
pub fn closed_form_terms(a: u32, b: u32) -> Result<Vec<ClosedFormTerm>> {
    if a <= 1 || b < a + 2 {
        return Err(Error::BadParameter(format!("need 1 < a < b - 1 (a = {a}, b = {b})")));
    }
    if a > b - a {
        return Err(Error::Case { a, b });
    }
    let (ai, bi) = (a as i64, b as i64);
    let big_d = ai + bi - 2;
    let mut out = Vec::with_capacity(b as usize - 1);
    for d in 0..=(bi - 2) {
        let s = big_d - d;
        let i0 = 0.max(s - bi + 1);
        let i1 = (ai - 1).min(s - ai);
        let j0 = ai.max(s - ai + 1);
        let j1 = (bi - 1).min(s);
        let (li, lj) = (i1 - i0 + 1, j1 - j0 + 1);
        if li != lj || li < 1 || j0 < i0 {
            return Err(Error::BadParameter(format!(
                "index windows disagree at (a, b, d) = ({a}, {b}, {d}): {li} vs {lj}"
            )));
        }
        out.push(ClosedFormTerm {
            d: d as u32,
            l: li as u32,
            gap: (j0 - i0) as u32,
            i0: i0 as u32,
            j0: j0 as u32,
            big_d: big_d as u32,
            mono_shift: (i0 as u32, (s - j0 - li + 1) as u32),
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// The first failed sub-check of a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub check: String,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactReport {
    pub fact: String,
    pub params: Value,
    pub status: Status,
    pub checks: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl FactReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Default)]
struct Checker {
    checks: usize,
    failure: Option<Witness>,
}

impl Checker {
    fn holds(&mut self, check: impl FnOnce() -> String, ok: bool, left: impl FnOnce() -> String, right: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(Witness {
                check: check(),
                left: left(),
                right: right(),
            });
        }
    }

    fn equal(&mut self, check: impl FnOnce() -> String, left: &MPoly, right: &MPoly) {
        self.holds(check, left == right, || left.to_string(), || right.to_string());
    }

    fn associate(&mut self, check: impl FnOnce() -> String, left: &MPoly, right: &MPoly) {
        let ok = matches!(left.monomial_associate(right), Ok(Some(_)));
        self.holds(check, ok, || left.to_string(), || right.to_string());
    }

    fn finish(self, fact: &str, params: Value) -> FactReport {
        FactReport {
            fact: fact.to_string(),
            params,
            status: if self.failure.is_none() { Status::Pass } else { Status::Fail },
            checks: self.checks,
            witness: self.failure,
        }
    }
}

fn other_two(x: usize) -> (usize, usize) {
    match x {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// Check the expansion identities for `S_(0,a,b)` over `ctx`.
pub fn verify_expansion_fact(a: u32, b: u32, ctx: &FieldCtx) -> Result<FactReport> {
    if a <= 1 || b < a + 2 {
        return Err(Error::BadParameter(format!("need 1 < a < b - 1 (a = {a}, b = {b})")));
    }
    let c = ExponentSequence::new(vec![0, a, b])?;
    let s = schur_poly(&c, ctx)?;
    verify_expansion_fact_with(&s, a, b, ctx)
}

/// Expansion checks against a caller-supplied `S`; used by harness
/// self-tests that feed a corrupted polynomial.
pub fn verify_expansion_fact_with(s: &MPoly, a: u32, b: u32, ctx: &FieldCtx) -> Result<FactReport> {
    let c = ExponentSequence::new(vec![0, a, b])?;
    let mirror = c.reflect();
    let s_bar = schur_poly(&mirror, ctx)?;
    let closed = if a <= b - a { Some(closed_form_terms(a, b)?) } else { None };
    let top = (b - 2) as usize;
    let mut chk = Checker::default();

    for x in 0..3 {
        let (y, z) = other_two(x);
        let table = expand_in_var(s, x)?;
        chk.equal(|| format!("x{x}: reconstruction"), &table.reconstruct(), s);
        chk.holds(
            || format!("x{x}: expansion range"),
            table.offset == 0 && table.coeffs.len() == top + 1,
            || format!("degrees {}..={}", table.offset, table.offset + table.width()),
            || format!("degrees 0..={top}"),
        );
        if table.offset != 0 || table.coeffs.len() != top + 1 {
            continue;
        }
        let p = &table.coeffs;
        let c_a = ck_biv(a, ctx, 3, (y, z))?;
        let c_ba = ck_biv(b - a, ctx, 3, (y, z))?;

        let assoc = |f: &MPoly, g: &MPoly| -> bool {
            !f.is_zero() && matches!(f.monomial_associate(g), Ok(Some(_)))
        };
        chk.holds(
            || format!("x{x}: P_0 ~ C_{}", b - a),
            assoc(&p[0], &c_ba),
            || p[0].to_string(),
            || c_ba.to_string(),
        );
        chk.holds(
            || format!("x{x}: P_{top} ~ C_{a}"),
            assoc(&p[top], &c_a),
            || p[top].to_string(),
            || c_a.to_string(),
        );
        for (i, pi) in p.iter().enumerate().take(a as usize) {
            chk.holds(
                || format!("x{x}: C_{} | P_{i}", b - a),
                pi.is_divisible_by(&c_ba)?,
                || pi.to_string(),
                || c_ba.to_string(),
            );
        }
        for (i, pi) in p.iter().enumerate().skip(a as usize - 1) {
            chk.holds(
                || format!("x{x}: C_{a} | P_{i}"),
                pi.is_divisible_by(&c_a)?,
                || pi.to_string(),
                || c_a.to_string(),
            );
        }

        match &closed {
            Some(terms) => {
                for t in terms {
                    let built = t.polynomial(ctx, 3, y, z)?;
                    chk.equal(
                        || format!("x{x}: closed form P_{} (l = {}, gap = {})", t.d, t.l, t.gap),
                        &p[t.d as usize],
                        &built,
                    );
                }
            }
            None => {
                let bar = expand_in_var(&s_bar, x)?;
                let mut bounds = [0u32; 3];
                bounds[y] = b - 2;
                bounds[z] = b - 2;
                for (i, pi) in p.iter().enumerate() {
                    let source = bar.coeffs.get(top - i);
                    let reversed = source.map(|q| q.exponent_reverse(&bounds));
                    match reversed {
                        Some(Ok(r)) => chk.equal(
                            || format!("x{x}: P_{i} = reverse(Pbar_{})", top - i),
                            pi,
                            &r,
                        ),
                        other => chk.holds(
                            || format!("x{x}: reverse(Pbar_{}) defined", top - i),
                            false,
                            || pi.to_string(),
                            || format!("{other:?}"),
                        ),
                    }
                }
            }
        }
    }
    Ok(chk.finish(
        "expansion",
        json!({
            "c": c,
            "field": ctx,
            "path": if closed.is_some() { "closed_form" } else { "reversal" },
        }),
    ))
}

/// `exponent_reverse(C_k(x0, x1), (k-1, k-1)) = C_k(x0, x1)`.
pub fn verify_mirror(k: u32, ctx: &FieldCtx) -> Result<FactReport> {
    let ck = ck_biv(k, ctx, 2, (0, 1))?;
    let mut chk = Checker::default();
    chk.equal(
        || format!("C_{k} mirror"),
        &ck.exponent_reverse(&[k - 1, k - 1])?,
        &ck,
    );
    Ok(chk.finish("mirror", json!({"k": k, "field": ctx})))
}

/// `gcd(x^k - 1, k x^(k-1)) = 1` over GF(p), by the Euclidean algorithm.
pub fn ck_squarefree(k: u32, p: u32) -> Result<bool> {
    if k < 1 {
        return Err(Error::BadParameter("k must be >= 1".into()));
    }
    FieldCtx::prime(p)?;
    let mut f = vec![0u32; k as usize + 1];
    f[0] = p - 1;
    f[k as usize] = 1;
    let df = upoly::derivative(&f, p);
    Ok(upoly::gcd(&f, &df, p) == vec![1])
}

/// Multiplicative order of `p` modulo `k` (1 when `k = 1`).
pub fn multiplicative_order(p: u32, k: u32) -> Option<u32> {
    if k == 1 {
        return Some(1);
    }
    let (p, k) = (p as u64 % k as u64, k as u64);
    let mut x = p;
    for m in 1..=k as u32 {
        if x == 1 {
            return Some(m);
        }
        x = x * p % k;
    }
    None
}

/// Roots of `C_k` found by exhaustive evaluation over its splitting field.
#[derive(Debug, Clone)]
pub struct CkRoots {
    pub field: FieldCtx,
    pub roots: Vec<FieldElement>,
}

pub fn roots_of_ck(k: u32, p: u32) -> Result<CkRoots> {
    if k < 1 {
        return Err(Error::BadParameter("k must be >= 1".into()));
    }
    FieldCtx::prime(p)?;
    if k.is_multiple_of(p) {
        return Err(Error::BadParameter(format!("p = {p} divides k = {k}")));
    }
    let m = multiplicative_order(p, k).expect("p is a unit mod k");
    let order = (p as u64).checked_pow(m);
    if order.is_none_or(|q| q > crate::field::MAX_ORDER) {
        return Err(Error::Size(format!("splitting field GF({p}^{m}) exceeds 2^20")));
    }
    let field = FieldCtx::extension(p, m)?;
    let roots = field
        .elements()?
        .filter(|x| {
            // Horner evaluation of 1 + x + ... + x^(k-1)
            let mut acc = field.zero();
            for _ in 0..k {
                acc = field.add_raw(&field.mul_raw(&acc, x), &field.one());
            }
            acc.is_zero()
        })
        .collect();
    Ok(CkRoots { field, roots })
}

/// Root count, distinctness, `alpha^k = 1`, `alpha != 1` and squarefreeness.
pub fn verify_ck_roots(k: u32, p: u32) -> Result<FactReport> {
    let found = roots_of_ck(k, p)?;
    let f = &found.field;
    let mut chk = Checker::default();
    chk.holds(
        || format!("C_{k} has k - 1 roots"),
        found.roots.len() == k as usize - 1,
        || found.roots.len().to_string(),
        || (k - 1).to_string(),
    );
    let distinct: std::collections::BTreeSet<_> = found.roots.iter().collect();
    chk.holds(
        || "roots pairwise distinct".into(),
        distinct.len() == found.roots.len(),
        || distinct.len().to_string(),
        || found.roots.len().to_string(),
    );
    for r in &found.roots {
        chk.holds(
            || format!("{r}^{k} = 1"),
            f.pow_raw(r, k as u64).is_one(),
            || f.pow_raw(r, k as u64).to_string(),
            || "1".into(),
        );
        chk.holds(|| format!("{r} != 1"), !r.is_one(), || r.to_string(), || "1".into());
    }
    let sf = ck_squarefree(k, p)?;
    chk.holds(|| "x^k - 1 squarefree".into(), sf, || sf.to_string(), || "true".into());
    Ok(chk.finish(
        "ck_roots",
        json!({
            "k": k,
            "p": p,
            "field": f,
            "roots": found.roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        }),
    ))
}

fn hat_power(nvars: usize, skip: usize, k: u32) -> Exponents {
    let mut e = Exponents::zeros(nvars);
    for v in (0..nvars).filter(|&v| v != skip) {
        e.set(v, k);
    }
    e
}

/// Check the min/max-part identities of `S_c` for every variable and the
/// two corollaries for every ordered pair of distinct variables.
pub fn verify_minmax_fact(c: &ExponentSequence, ctx: &FieldCtx) -> Result<FactReport> {
    let s = schur_poly(c, ctx)?;
    verify_minmax_fact_with(&s, c, ctx)
}

pub fn verify_minmax_fact_with(s: &MPoly, c: &ExponentSequence, ctx: &FieldCtx) -> Result<FactReport> {
    let n = c.len();
    if n < 2 || c.get(0) != 0 {
        return Err(Error::BadParameter(format!("need c_0 = 0 and n >= 2 (c = {c})")));
    }
    let c1 = c.get(1);
    // x_i-degree of S_c, carried by the maximal part
    let top = c.get(n - 1) - (n as u32 - 1);
    let low = ExponentSequence::from_signed(&c.remove(&[0])?.shift(c1 as i64))?;
    let high = c.remove(&[n - 1])?;
    let mid = ExponentSequence::from_signed(&c.remove(&[0, n - 1])?.shift(c1 as i64))?;
    let mut chk = Checker::default();
    // each quotient is built once and embedded on every variable subset
    let low_poly = schur_poly(&low, ctx)?;
    let high_base = schur_poly(&high, ctx)?;
    let mid_base = schur_poly(&mid, ctx)?;
    let mins = (0..n).map(|i| s.min_part(i)).collect::<Result<Vec<_>>>()?;
    let maxes = (0..n).map(|i| s.max_part(i)).collect::<Result<Vec<_>>>()?;

    for i in 0..n {
        chk.holds(
            || format!("mindeg_x{i} S = 0"),
            s.mindeg(i)? == 0,
            || s.mindeg(i).map(|d| d.to_string()).unwrap_or_default(),
            || "0".into(),
        );
        let others: Vec<usize> = (0..n).filter(|&v| v != i).collect();
        let min_rhs = low_poly.embed(n, &others)?.mul_monomial(&hat_power(n, i, c1 - 1));
        chk.equal(|| format!("min_x{i} S"), &mins[i], &min_rhs);
        let high_poly = high_base.embed(n, &others)?;
        let mut lift = Exponents::zeros(n);
        lift.set(i, top);
        let max_rhs = high_poly.mul_monomial(&lift);
        chk.equal(|| format!("max_x{i} S"), &maxes[i], &max_rhs);
        chk.associate(|| format!("max_x{i} S ~ S_hat"), &maxes[i], &high_poly);
    }

    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let others: Vec<usize> = (0..n).filter(|&v| v != i && v != j).collect();
            let mid_poly = mid_base.embed(n, &others)?;
            let mut shift = hat_power(n, i, c1 - 1);
            shift.set(j, top);
            let middle = mid_poly.mul_monomial(&shift);
            let literal = mid_poly.mul_monomial(&hat_power(n, i, c1 - 1));
            chk.associate(|| format!("min_x{i} max_x{j} S ~ literal form"), &middle, &literal);
            let min_of_max = maxes[j].min_part(i)?;
            let max_of_min = mins[i].max_part(j)?;
            chk.equal(|| format!("min_x{i} max_x{j} S"), &min_of_max, &middle);
            chk.equal(|| format!("max_x{j} min_x{i} S"), &max_of_min, &middle);
            let (lhs, rhs) = (maxes[j].mindeg(i)?, s.mindeg(i)?);
            chk.holds(
                || format!("mindeg_x{i} max_x{j} S = mindeg_x{i} S"),
                lhs == rhs,
                || lhs.to_string(),
                || rhs.to_string(),
            );
            let (lhs, rhs) = (mins[j].deg(i)?, s.deg(i)?);
            chk.holds(
                || format!("deg_x{i} min_x{j} S = deg_x{i} S"),
                lhs == rhs,
                || lhs.to_string(),
                || rhs.to_string(),
            );
        }
    }
    Ok(chk.finish("minmax", json!({"c": c, "field": ctx})))
}
