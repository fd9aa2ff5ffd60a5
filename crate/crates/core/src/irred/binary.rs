//! Divisors of binary forms through exhaustive univariate factorization.
//!
//! A binary form `R(x_hi, x_lo)` with no monomial factor corresponds to the
//! univariate `r(x) = R(x, 1)` of the same degree, so the divisors of `R` are
//! the homogenized products of sub-multisets of the irreducible factors of
//! `r`, times powers of the two variables.

use crate::field::{FieldCtx, FieldElement};
use crate::mpoly::{Exponents, MPoly};

use super::unipoly::{factor, Uni};

fn homogenize(ctx: &FieldCtx, nvars: usize, hi: usize, lo: usize, f: &[FieldElement]) -> MPoly {
    let deg = f.len() as u32 - 1;
    let terms = f.iter().enumerate().map(|(i, c)| {
        let mut e = Exponents::zeros(nvars);
        e.set(hi, i as u32);
        e.set(lo, deg - i as u32);
        (e, c.clone())
    });
    MPoly::from_terms(ctx, nvars, terms).expect("valid terms")
}

/// Every monic divisor of total degree `d` of the nonzero binary form `r`
/// in the variables `x_hi`, `x_lo`.
pub(crate) fn binary_divisors(r: &MPoly, hi: usize, lo: usize, d: u32, tested: &mut u64) -> Vec<MPoly> {
    let ctx = r.ctx();
    let nvars = r.nvars();
    let s = r.mindeg(hi).expect("nonzero form");
    let t = r.mindeg(lo).expect("nonzero form");
    let core = r.shift_down(hi, s).shift_down(lo, t);
    let g = core.total_degree().expect("nonzero form") as u32;
    let uni: Uni = (0..=g)
        .map(|i| {
            let mut e = Exponents::zeros(nvars);
            e.set(hi, i);
            e.set(lo, g - i);
            core.coeff(&e)
        })
        .collect();
    let factors = if g == 0 { Vec::new() } else { factor(ctx, &uni, tested) };
    let forms: Vec<(MPoly, u32, u32)> = factors
        .iter()
        .map(|(f, mult)| (homogenize(ctx, nvars, hi, lo, f), f.len() as u32 - 1, *mult))
        .collect();

    let mut out = Vec::new();
    let mut exps = vec![0u32; forms.len()];
    loop {
        let delta: u32 = forms.iter().zip(&exps).map(|((_, deg, _), e)| deg * e).sum();
        if delta <= d {
            let mono_deg = d - delta;
            for i in 0..=s.min(mono_deg) {
                let j = mono_deg - i;
                if j > t {
                    continue;
                }
                let mut e = Exponents::zeros(nvars);
                e.set(hi, i);
                e.set(lo, j);
                let mut prod = MPoly::one(ctx, nvars).mul_monomial(&e);
                for ((form, _, _), &k) in forms.iter().zip(&exps) {
                    prod = prod.mul(&form.pow(k)).expect("same ring");
                }
                out.push(prod.monic().expect("nonzero"));
            }
        }
        // odometer over multiplicities
        let mut pos = 0;
        loop {
            if pos == forms.len() {
                return out;
            }
            if exps[pos] < forms[pos].2 {
                exps[pos] += 1;
                break;
            }
            exps[pos] = 0;
            pos += 1;
        }
    }
}
