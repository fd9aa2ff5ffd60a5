//! Exponent sequences, generalized Vandermonde determinants, Schur
//! polynomials, the SSYT oracle, and the truncated geometric sums `C_k`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::mpoly::{Exponents, MPoly};

/// Largest sequence length accepted by the determinant path.
pub const MAX_DET_VARS: usize = 6;
/// Enumeration bounds for the tableau oracle.
pub const MAX_SSYT_VARS: usize = 5;
pub const MAX_SSYT_ROW: u32 = 12;

/// A strictly increasing sequence of non-negative exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ExponentSequence(Vec<u32>);

/// Weakly decreasing partition `lambda_j = c_{n-1-j} - (n-1-j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }
}

impl ExponentSequence {
    pub fn new(c: Vec<u32>) -> Result<Self> {
        if let Some(w) = c.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::BadSequence(format!(
                "{c:?} is not strictly increasing ({} >= {})",
                w[0], w[1]
            )));
        }
        Ok(ExponentSequence(c))
    }

    /// Re-normalize an integer sequence (e.g. the output of [`shift`](Self::shift)).
    pub fn from_signed(c: &[i64]) -> Result<Self> {
        let mut out = Vec::with_capacity(c.len());
        for &x in c {
            let v = u32::try_from(x)
                .map_err(|_| Error::BadSequence(format!("{c:?} has an entry outside [0, 2^32)")))?;
            out.push(v);
        }
        Self::new(out)
    }

    /// `e_n = (0, 1, ..., n-1)`.
    pub fn standard(n: usize) -> Self {
        ExponentSequence((0..n as u32).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// Gaps `d_i = c_{i+1} - c_i`.
    pub fn gaps(&self) -> Vec<u32> {
        self.0.windows(2).map(|w| w[1] - w[0]).collect()
    }

    /// gcd of all entries (0 for an all-zero or empty sequence).
    pub fn gcd(&self) -> u32 {
        self.0.iter().fold(0, |g, &x| g.gcd(&x))
    }

    pub fn partition(&self) -> Partition {
        let n = self.0.len();
        Partition((0..n).map(|j| self.0[n - 1 - j] - (n - 1 - j) as u32).collect())
    }

    /// Total degree of `S_c`: `sum(c) - n(n-1)/2`.
    pub fn schur_degree(&self) -> u64 {
        self.partition().size()
    }

    /// Drop the entries at the given positions.
    pub fn remove(&self, indices: &[usize]) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i >= self.0.len()) {
            return Err(Error::BadParameter(format!(
                "index {bad} out of range for a sequence of length {}",
                self.0.len()
            )));
        }
        let kept = self
            .0
            .iter()
            .enumerate()
            .filter(|(i, _)| !indices.contains(i))
            .map(|(_, &x)| x)
            .collect();
        Ok(ExponentSequence(kept))
    }

    /// `c - b`, possibly with negative entries.
    pub fn shift(&self, b: i64) -> Vec<i64> {
        self.0.iter().map(|&x| x as i64 - b).collect()
    }

    /// `(c_{n-1} - c_{n-1-i})_i`, so `(0, a, b)` maps to `(0, b-a, b)`.
    pub fn reflect(&self) -> Self {
        let Some(top) = self.last() else {
            return self.clone();
        };
        ExponentSequence(self.0.iter().rev().map(|&x| top - x).collect())
    }
}

impl fmt::Display for ExponentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Comma-separated text, e.g. `0,2,5`.
impl FromStr for ExponentSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(ExponentSequence(Vec::new()));
        }
        let c = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent '{t}' in '{s}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(c)
    }
}

fn cofactor(ctx: &FieldCtx, nvars: usize, rows: &[usize], cols: &[u32]) -> MPoly {
    let Some((&row, rest)) = rows.split_first() else {
        return MPoly::one(ctx, nvars);
    };
    let mut acc = MPoly::zero(ctx, nvars);
    for (j, &c) in cols.iter().enumerate() {
        let minor_cols: Vec<u32> = cols
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != j)
            .map(|(_, &x)| x)
            .collect();
        let minor = cofactor(ctx, nvars, rest, &minor_cols);
        let mut e = Exponents::zeros(nvars);
        e.set(row, c);
        let mut term = minor.mul_monomial(&e);
        if j % 2 == 1 {
            term = term.neg();
        }
        acc = acc.add(&term).expect("same ring");
    }
    acc
}

/// `det[x_i^{c_j}]` by cofactor expansion along the first row.
pub fn vandermonde(c: &ExponentSequence, ctx: &FieldCtx) -> Result<MPoly> {
    let n = c.len();
    if n > MAX_DET_VARS {
        return Err(Error::Size(format!(
            "determinant of size {n} exceeds {MAX_DET_VARS}"
        )));
    }
    let rows: Vec<usize> = (0..n).collect();
    Ok(cofactor(ctx, n, &rows, c.as_slice()))
}

/// `S_c = V_c / V_(0..n-1)`.
///
/// `V_(0..n-1) = prod_{i<j} (x_j - x_i)`, so the quotient is taken one
/// binomial at a time; dividing by the expanded determinant is far slower.
pub fn schur_poly(c: &ExponentSequence, ctx: &FieldCtx) -> Result<MPoly> {
    let n = c.len();
    let mut quotient = vandermonde(c, ctx)?;
    for j in 1..n {
        for i in 0..j {
            let factor = MPoly::var(ctx, n, j).sub(&MPoly::var(ctx, n, i))?;
            quotient = quotient
                .exact_divide(&factor)?
                .unwrap_or_else(|| panic!("V_c / V_e not exact for c = {c} over {ctx}"));
        }
    }
    Ok(quotient)
}

/// Schur polynomial from semistandard Young tableaux of shape `lambda(c)`
/// with entries in `1..=n`, counted over the integers and mapped into `ctx`.
pub fn schur_ssyt(c: &ExponentSequence, ctx: &FieldCtx) -> Result<MPoly> {
    let n = c.len();
    let lambda = c.partition();
    let widest = lambda.parts().first().copied().unwrap_or(0);
    if n > MAX_SSYT_VARS || widest > MAX_SSYT_ROW {
        return Err(Error::Size(format!(
            "tableau enumeration bound exceeded (n = {n}, lambda_0 = {widest})"
        )));
    }
    let shape: Vec<usize> = lambda.parts().iter().filter(|&&x| x > 0).map(|&x| x as usize).collect();
    let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    let mut filler = TableauFiller::new(&shape, n as u32);
    filler.fill(0, 0, &mut |content| {
        *counts.entry(content.to_vec()).or_insert(0) += 1;
    });
    let terms = counts.into_iter().map(|(content, count)| {
        (
            Exponents::new(content),
            ctx.from_integer(i64::try_from(count).expect("tableau count fits in i64")),
        )
    });
    MPoly::from_terms(ctx, n, terms)
}

struct TableauFiller<'a> {
    shape: &'a [usize],
    /// column heights, used to cap entries so lower cells stay fillable
    heights: Vec<usize>,
    max_entry: u32,
    grid: Vec<Vec<u32>>,
    content: Vec<u32>,
}

impl<'a> TableauFiller<'a> {
    fn new(shape: &'a [usize], max_entry: u32) -> Self {
        let width = shape.first().copied().unwrap_or(0);
        let heights = (0..width)
            .map(|col| shape.iter().filter(|&&len| len > col).count())
            .collect();
        TableauFiller {
            shape,
            heights,
            max_entry,
            grid: shape.iter().map(|&len| vec![0; len]).collect(),
            content: vec![0; max_entry as usize],
        }
    }

    fn fill(&mut self, row: usize, col: usize, emit: &mut dyn FnMut(&[u32])) {
        if row == self.shape.len() {
            emit(&self.content);
            return;
        }
        if col == self.shape[row] {
            self.fill(row + 1, 0, emit);
            return;
        }
        let left = if col > 0 { self.grid[row][col - 1] } else { 1 };
        let above = if row > 0 { self.grid[row - 1][col] + 1 } else { 1 };
        let below = (self.heights[col] - 1 - row) as u32;
        let lo = left.max(above);
        let hi = self.max_entry.saturating_sub(below);
        for v in lo..=hi {
            self.grid[row][col] = v;
            self.content[v as usize - 1] += 1;
            self.fill(row, col + 1, emit);
            self.content[v as usize - 1] -= 1;
        }
    }
}

/// `C_k(x0) = 1 + x0 + ... + x0^(k-1)` in a one-variable ring.
pub fn ck_uni(k: u32, ctx: &FieldCtx) -> Result<MPoly> {
    if k < 1 {
        return Err(Error::BadParameter("C_k needs k >= 1".into()));
    }
    MPoly::from_terms(ctx, 1, (0..k).map(|i| (Exponents::new([i]), ctx.one())))
}

/// `C_k(x_i, x_j) = sum_t x_i^t x_j^(k-1-t)` in an `nvars`-variable ring.
pub fn ck_biv(k: u32, ctx: &FieldCtx, nvars: usize, vars: (usize, usize)) -> Result<MPoly> {
    if k < 1 {
        return Err(Error::BadParameter("C_k needs k >= 1".into()));
    }
    let (i, j) = vars;
    if i == j || i >= nvars || j >= nvars {
        return Err(Error::BadParameter(format!(
            "bad variable pair ({i}, {j}) in a {nvars}-variable ring"
        )));
    }
    let terms = (0..k).map(|t| {
        let mut e = Exponents::zeros(nvars);
        e.set(i, t);
        e.set(j, k - 1 - t);
        (e, ctx.one())
    });
    MPoly::from_terms(ctx, nvars, terms)
}

/// `S_c` evaluated on the listed variables of an `nvars`-variable ring.
pub fn schur_poly_on(
    c: &ExponentSequence,
    ctx: &FieldCtx,
    nvars: usize,
    vars: &[usize],
) -> Result<MPoly> {
    schur_poly(c, ctx)?.embed(nvars, vars)
}
