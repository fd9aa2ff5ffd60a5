//! Sparse multivariate polynomials over a [`FieldCtx`].
//!
//! Terms are kept in a `BTreeMap` keyed by [`Exponents`], whose order is
//! graded lexicographic with `x0 > x1 > ... > x_{n-1}`. The zero polynomial
//! has no terms; no stored coefficient is ever zero.

mod text;

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};

/// Practical per-variable exponent bound.
pub const MAX_EXPONENT: u32 = 1 << 31;

/// Exponent vector of a monomial, one entry per variable.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Exponents(SmallVec<[u32; 6]>);

impl Exponents {
    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        Exponents(exps.into_iter().collect())
    }

    pub fn zeros(n: usize) -> Self {
        Exponents(SmallVec::from_elem(0, n))
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = Self::zeros(n);
        e.0[i] = 1;
        e
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

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub(crate) fn set(&mut self, i: usize, v: u32) {
        self.0[i] = v;
    }

    pub fn mul(&self, other: &Exponents) -> Exponents {
        Exponents(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Exponents) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Exponents) -> Option<Exponents> {
        self.divides(other)
            .then(|| Exponents(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Witness of `F = scalar * x^shift * G`; shift entries may be negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialAssociate {
    pub scalar: FieldElement,
    pub shift: Vec<i64>,
}

#[derive(Clone, Debug)]
pub struct MPoly {
    nvars: usize,
    ctx: FieldCtx,
    terms: BTreeMap<Exponents, FieldElement>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.ctx == other.ctx && self.terms == other.terms
    }
}

impl Eq for MPoly {}

impl MPoly {
    pub fn zero(ctx: &FieldCtx, nvars: usize) -> Self {
        MPoly {
            nvars,
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &FieldCtx, nvars: usize, c: FieldElement) -> Result<Self> {
        Self::monomial(ctx, Exponents::zeros(nvars), c)
    }

    pub fn one(ctx: &FieldCtx, nvars: usize) -> Self {
        Self::from_map(ctx, nvars, BTreeMap::from([(Exponents::zeros(nvars), ctx.one())]))
    }

    pub fn var(ctx: &FieldCtx, nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable x{i} outside a {nvars}-variable ring");
        Self::from_map(ctx, nvars, BTreeMap::from([(Exponents::unit(nvars, i), ctx.one())]))
    }

    /// `coeff * x^exps`; a zero coefficient gives the zero polynomial.
    pub fn monomial(ctx: &FieldCtx, exps: Exponents, coeff: FieldElement) -> Result<Self> {
        if !ctx.contains(&coeff) {
            return Err(Error::Context(format!("coefficient {coeff} not in {ctx}")));
        }
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        Ok(MPoly {
            nvars,
            ctx: ctx.clone(),
            terms,
        })
    }

    /// Sum of the given terms; repeated exponents are combined.
    pub fn from_terms(
        ctx: &FieldCtx,
        nvars: usize,
        terms: impl IntoIterator<Item = (Exponents, FieldElement)>,
    ) -> Result<Self> {
        let mut acc = MPoly::zero(ctx, nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::Context(format!(
                    "exponent vector of length {} in a {nvars}-variable ring",
                    e.len()
                )));
            }
            if !ctx.contains(&c) {
                return Err(Error::Context(format!("coefficient {c} not in {ctx}")));
            }
            if e.as_slice().iter().any(|&x| x > MAX_EXPONENT) {
                return Err(Error::BadParameter("exponent exceeds 2^31".into()));
            }
            acc.add_term(e, c);
        }
        Ok(acc)
    }

    pub(crate) fn from_map(ctx: &FieldCtx, nvars: usize, terms: BTreeMap<Exponents, FieldElement>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        MPoly {
            nvars,
            ctx: ctx.clone(),
            terms,
        }
    }

    pub(crate) fn add_term(&mut self, e: Exponents, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = self.ctx.add_raw(o.get(), &c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.degree() == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &FieldElement)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, e: &Exponents) -> FieldElement {
        self.terms.get(e).cloned().unwrap_or_else(|| self.ctx.zero())
    }

    pub fn leading_term(&self) -> Option<(&Exponents, &FieldElement)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Result<u64> {
        self.leading_term()
            .map(|(e, _)| e.degree())
            .ok_or(Error::ZeroPolynomial)
    }

    fn same_ring(&self, other: &MPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::Context(format!(
                "{} variables vs {} variables",
                self.nvars, other.nvars
            )));
        }
        if self.ctx != other.ctx {
            return Err(Error::Context(format!("{} vs {}", self.ctx, other.ctx)));
        }
        Ok(())
    }

    fn check_var(&self, i: usize) -> Result<()> {
        if i < self.nvars {
            Ok(())
        } else {
            Err(Error::BadParameter(format!(
                "variable x{i} outside a {}-variable ring",
                self.nvars
            )))
        }
    }

    pub fn add(&self, other: &MPoly) -> Result<MPoly> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> MPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), self.ctx.neg_raw(c)))
            .collect();
        MPoly::from_map(&self.ctx, self.nvars, terms)
    }

    pub fn sub(&self, other: &MPoly) -> Result<MPoly> {
        self.add(&other.neg())
    }

    pub fn scale(&self, e: &FieldElement) -> Result<MPoly> {
        if !self.ctx.contains(e) {
            return Err(Error::Context(format!("scalar {e} not in {}", self.ctx)));
        }
        Ok(self.scale_raw(e))
    }

    pub(crate) fn scale_raw(&self, e: &FieldElement) -> MPoly {
        if e.is_zero() {
            return MPoly::zero(&self.ctx, self.nvars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), self.ctx.mul_raw(c, e)))
            .collect();
        MPoly::from_map(&self.ctx, self.nvars, terms)
    }

    pub fn mul(&self, other: &MPoly) -> Result<MPoly> {
        self.same_ring(other)?;
        Ok(self.mul_raw(other))
    }

    pub(crate) fn mul_raw(&self, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero(&self.ctx, self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.mul(e2), self.ctx.mul_raw(c1, c2));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MPoly {
        let mut acc = MPoly::one(&self.ctx, self.nvars);
        for _ in 0..k {
            acc = acc.mul_raw(self);
        }
        acc
    }

    /// Multiply by the monomial `x^e`.
    pub fn mul_monomial(&self, e: &Exponents) -> MPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.mul(e), c.clone())).collect();
        MPoly::from_map(&self.ctx, self.nvars, terms)
    }

    /// Exact division by a single divisor under graded-lex order.
    ///
    /// Returns `Ok(None)` when `divisor` does not divide `self`.
    pub fn exact_divide(&self, divisor: &MPoly) -> Result<Option<MPoly>> {
        self.same_ring(divisor)?;
        let Some((lead_e, lead_c)) = divisor.leading_term() else {
            return Err(Error::DivisionByZero);
        };
        let lead_inv = self.ctx.inv_raw(lead_c)?;
        let tail: Vec<(&Exponents, &FieldElement)> = divisor.terms.iter().rev().skip(1).collect();
        let mut rem = self.terms.clone();
        let mut quotient = BTreeMap::new();
        while let Some((e, c)) = rem.pop_last() {
            let Some(qe) = lead_e.quotient_of(&e) else {
                return Ok(None);
            };
            let qc = self.ctx.mul_raw(&c, &lead_inv);
            for (te, tc) in &tail {
                let target = te.mul(&qe);
                let delta = self.ctx.mul_raw(&qc, tc);
                match rem.entry(target) {
                    Entry::Vacant(v) => {
                        v.insert(self.ctx.neg_raw(&delta));
                    }
                    Entry::Occupied(mut o) => {
                        let diff = self.ctx.sub_raw(o.get(), &delta);
                        if diff.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = diff;
                        }
                    }
                }
            }
            quotient.insert(qe, qc);
        }
        Ok(Some(MPoly::from_map(&self.ctx, self.nvars, quotient)))
    }

    /// True when `divisor` divides `self` exactly.
    pub fn is_divisible_by(&self, divisor: &MPoly) -> Result<bool> {
        Ok(self.exact_divide(divisor)?.is_some())
    }

    pub fn deg(&self, i: usize) -> Result<u32> {
        self.check_var(i)?;
        self.terms.keys().map(|e| e.get(i)).max().ok_or(Error::ZeroPolynomial)
    }

    pub fn mindeg(&self, i: usize) -> Result<u32> {
        self.check_var(i)?;
        self.terms.keys().map(|e| e.get(i)).min().ok_or(Error::ZeroPolynomial)
    }

    pub fn width(&self, i: usize) -> Result<u32> {
        Ok(self.deg(i)? - self.mindeg(i)?)
    }

    fn part_at(&self, i: usize, degree: u32) -> MPoly {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.get(i) == degree)
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        MPoly::from_map(&self.ctx, self.nvars, terms)
    }

    /// Sum of the terms of minimal `x_i`-degree.
    pub fn min_part(&self, i: usize) -> Result<MPoly> {
        let d = self.mindeg(i)?;
        Ok(self.part_at(i, d))
    }

    /// Sum of the terms of maximal `x_i`-degree.
    pub fn max_part(&self, i: usize) -> Result<MPoly> {
        let d = self.deg(i)?;
        Ok(self.part_at(i, d))
    }

    /// Coefficients `P_0, ..., P_deg` of the expansion `sum_k P_k x_i^k`; each
    /// `P_k` lives in the same ring and does not involve `x_i`.
    pub fn coefficients_in(&self, i: usize) -> Result<Vec<MPoly>> {
        let top = self.deg(i)?;
        let mut out = vec![MPoly::zero(&self.ctx, self.nvars); top as usize + 1];
        for (e, c) in &self.terms {
            let k = e.get(i) as usize;
            let mut stripped = e.clone();
            stripped.set(i, 0);
            out[k].terms.insert(stripped, c.clone());
        }
        Ok(out)
    }

    /// Image under `x_src -> alpha * x_dst`.
    pub fn substitute_var(&self, src: usize, alpha: &FieldElement, dst: usize) -> Result<MPoly> {
        self.check_var(src)?;
        self.check_var(dst)?;
        if src == dst {
            return Err(Error::BadSubstitution(src));
        }
        if !self.ctx.contains(alpha) {
            return Err(Error::Context(format!("{alpha} not in {}", self.ctx)));
        }
        let mut out = MPoly::zero(&self.ctx, self.nvars);
        for (e, c) in &self.terms {
            let k = e.get(src);
            let mut moved = e.clone();
            moved.set(src, 0);
            moved.set(dst, e.get(dst) + k);
            out.add_term(moved, self.ctx.mul_raw(c, &self.ctx.pow_raw(alpha, k as u64)));
        }
        Ok(out)
    }

    /// Replace each variable `x_j` by `images[j]`, all in a common target ring.
    pub fn compose(&self, images: &[MPoly]) -> Result<MPoly> {
        if images.len() != self.nvars {
            return Err(Error::Context(format!(
                "{} images for {} variables",
                images.len(),
                self.nvars
            )));
        }
        let Some(first) = images.first() else {
            return Ok(self.clone());
        };
        for img in images {
            first.same_ring(img)?;
        }
        if first.ctx != self.ctx {
            return Err(Error::Context(format!("{} vs {}", first.ctx, self.ctx)));
        }
        let mut powers: Vec<Vec<MPoly>> = images
            .iter()
            .map(|img| vec![MPoly::one(&self.ctx, img.nvars), img.clone()])
            .collect();
        let mut out = MPoly::zero(&self.ctx, first.nvars);
        for (e, c) in &self.terms {
            let mut term = MPoly::constant(&self.ctx, first.nvars, c.clone())?;
            for (j, &k) in e.as_slice().iter().enumerate() {
                let cache = &mut powers[j];
                while cache.len() <= k as usize {
                    let next = cache.last().unwrap().mul_raw(&images[j]);
                    cache.push(next);
                }
                term = term.mul_raw(&cache[k as usize]);
            }
            for (te, tc) in term.terms {
                out.add_term(te, tc);
            }
        }
        Ok(out)
    }

    /// Move the polynomial into an `nvars`-variable ring, sending `x_j` to
    /// `x_{targets[j]}`.
    pub fn embed(&self, nvars: usize, targets: &[usize]) -> Result<MPoly> {
        if targets.len() != self.nvars || targets.iter().any(|&t| t >= nvars) {
            return Err(Error::BadParameter(format!(
                "cannot embed {} variables via {targets:?} into {nvars}",
                self.nvars
            )));
        }
        let mut seen = vec![false; nvars];
        for &t in targets {
            if std::mem::replace(&mut seen[t], true) {
                return Err(Error::BadParameter(format!("embedding {targets:?} repeats a target")));
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut out = Exponents::zeros(nvars);
                for (j, &t) in targets.iter().enumerate() {
                    out.set(t, e.get(j));
                }
                (out, c.clone())
            })
            .collect();
        Ok(MPoly::from_map(&self.ctx, nvars, terms))
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.nvars {
            return Err(Error::Context(format!(
                "point of length {} for {} variables",
                point.len(),
                self.nvars
            )));
        }
        if let Some(bad) = point.iter().find(|x| !self.ctx.contains(x)) {
            return Err(Error::Context(format!("{bad} not in {}", self.ctx)));
        }
        let mut acc = self.ctx.zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e.as_slice()) {
                if k > 0 {
                    term = self.ctx.mul_raw(&term, &self.ctx.pow_raw(x, k as u64));
                }
            }
            acc = self.ctx.add_raw(&acc, &term);
        }
        Ok(acc)
    }

    /// Apply `x_i -> x_{sigma[i]}`.
    pub fn permute_vars(&self, sigma: &[usize]) -> Result<MPoly> {
        if sigma.len() != self.nvars {
            return Err(Error::BadPermutation(format!(
                "length {} for {} variables",
                sigma.len(),
                self.nvars
            )));
        }
        let mut seen = vec![false; self.nvars];
        for &s in sigma {
            if s >= self.nvars || std::mem::replace(&mut seen[s], true) {
                return Err(Error::BadPermutation(format!("{sigma:?}")));
            }
        }
        self.embed(self.nvars, sigma)
    }

    /// Decide `self ~ other` by aligning leading terms and checking every term.
    pub fn monomial_associate(&self, other: &MPoly) -> Result<Option<MonomialAssociate>> {
        self.same_ring(other)?;
        let (Some((fe, fc)), Some((ge, gc))) = (self.leading_term(), other.leading_term()) else {
            return Err(Error::ZeroPolynomial);
        };
        if self.terms.len() != other.terms.len() {
            return Ok(None);
        }
        let shift: Vec<i64> = fe
            .as_slice()
            .iter()
            .zip(ge.as_slice())
            .map(|(&a, &b)| a as i64 - b as i64)
            .collect();
        let scalar = self.ctx.mul_raw(fc, &self.ctx.inv_raw(gc)?);
        for (e, c) in &other.terms {
            let mut shifted = Exponents::zeros(self.nvars);
            for (i, (&x, &s)) in e.as_slice().iter().zip(&shift).enumerate() {
                let v = x as i64 + s;
                if v < 0 {
                    return Ok(None);
                }
                shifted.set(i, v as u32);
            }
            match self.terms.get(&shifted) {
                Some(fc) if *fc == self.ctx.mul_raw(&scalar, c) => {}
                _ => return Ok(None),
            }
        }
        Ok(Some(MonomialAssociate { scalar, shift }))
    }

    pub fn homogeneous_components(&self) -> BTreeMap<u64, MPoly> {
        let mut out: BTreeMap<u64, MPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            out.entry(e.degree())
                .or_insert_with(|| MPoly::zero(&self.ctx, self.nvars))
                .terms
                .insert(e.clone(), c.clone());
        }
        out
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Exponents::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    /// Term `x^e -> x^(bounds - e)`, coefficients unchanged.
    pub fn exponent_reverse(&self, bounds: &[u32]) -> Result<MPoly> {
        if bounds.len() != self.nvars {
            return Err(Error::BadBounds(format!(
                "{} bounds for {} variables",
                bounds.len(),
                self.nvars
            )));
        }
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut r = Exponents::zeros(self.nvars);
            for (i, (&x, &b)) in e.as_slice().iter().zip(bounds).enumerate() {
                if x > b {
                    return Err(Error::BadBounds(format!("x{i}-degree {x} exceeds bound {b}")));
                }
                r.set(i, b - x);
            }
            terms.insert(r, c.clone());
        }
        Ok(MPoly::from_map(&self.ctx, self.nvars, terms))
    }

    /// Scale so the graded-lex leading coefficient is 1.
    pub fn monic(&self) -> Result<MPoly> {
        let (_, lead) = self.leading_term().ok_or(Error::ZeroPolynomial)?;
        let inv = self.ctx.inv_raw(lead)?;
        Ok(self.scale_raw(&inv))
    }

    /// Drop `x_var^k` from every term (caller guarantees `k <= mindeg`).
    pub(crate) fn shift_down(&self, var: usize, k: u32) -> MPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut s = e.clone();
                s.set(var, e.get(var) - k);
                (s, c.clone())
            })
            .collect();
        MPoly::from_map(&self.ctx, self.nvars, terms)
    }

    /// Change a coefficient in place; used to build deliberately corrupted
    /// inputs for harness self-tests.
    pub fn perturb_leading(&self) -> MPoly {
        let mut out = self.clone();
        let e = self
            .leading_term()
            .map(|(e, _)| e.clone())
            .unwrap_or_else(|| Exponents::zeros(self.nvars));
        out.add_term(e, self.ctx.one());
        out
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format(self))
    }
}

impl MPoly {
    /// Parse the canonical text form in a given ring.
    pub fn parse(ctx: &FieldCtx, nvars: usize, s: &str) -> Result<MPoly> {
        text::parse(ctx, nvars, s)
    }
}
