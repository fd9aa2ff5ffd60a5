//! Dense univariate polynomials over a finite field context and their
//! complete factorization: squarefree decomposition, then Berlekamp
//! splitting of each squarefree part.
//!
//! Coefficients are little-endian; a polynomial is kept trimmed, so the zero
//! polynomial is the empty vector.

use super::linalg::solve;
use crate::field::{FieldCtx, FieldElement};

pub(crate) type Uni = Vec<FieldElement>;

fn trim(mut a: Uni) -> Uni {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn deg(a: &[FieldElement]) -> usize {
    a.len().saturating_sub(1)
}

pub(crate) fn monic(ctx: &FieldCtx, a: &[FieldElement]) -> Uni {
    let inv = ctx.inv_raw(a.last().expect("nonzero")).expect("nonzero lead");
    a.iter().map(|c| ctx.mul_raw(c, &inv)).collect()
}

fn sub(ctx: &FieldCtx, a: &[FieldElement], b: &[FieldElement]) -> Uni {
    let n = a.len().max(b.len());
    let zero = ctx.zero();
    let out = (0..n)
        .map(|i| ctx.sub_raw(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect();
    trim(out)
}

fn mul(ctx: &FieldCtx, a: &[FieldElement], b: &[FieldElement]) -> Uni {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![ctx.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = ctx.add_raw(&out[i + j], &ctx.mul_raw(x, y));
        }
    }
    trim(out)
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(ctx: &FieldCtx, a: &[FieldElement], b: &[FieldElement]) -> (Uni, Uni) {
    let db = deg(b);
    let lead_inv = ctx.inv_raw(b.last().expect("nonzero divisor")).expect("nonzero lead");
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), trim(r));
    }
    let mut q = vec![ctx.zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let factor = ctx.mul_raw(&r[k + db], &lead_inv);
        if factor.is_zero() {
            continue;
        }
        for (i, bc) in b.iter().enumerate() {
            r[k + i] = ctx.sub_raw(&r[k + i], &ctx.mul_raw(&factor, bc));
        }
        q[k] = factor;
    }
    r.truncate(db);
    (trim(q), trim(r))
}

fn rem(ctx: &FieldCtx, a: &[FieldElement], b: &[FieldElement]) -> Uni {
    divrem(ctx, a, b).1
}

fn div_exact(ctx: &FieldCtx, a: &[FieldElement], b: &[FieldElement]) -> Uni {
    let (q, r) = divrem(ctx, a, b);
    debug_assert!(r.is_empty());
    q
}

/// Monic gcd; `gcd(0, 0) = 0`.
fn gcd(ctx: &FieldCtx, a: &[FieldElement], b: &[FieldElement]) -> Uni {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(ctx, &a, &b);
        a = std::mem::replace(&mut b, r);
    }
    if a.is_empty() {
        a
    } else {
        monic(ctx, &a)
    }
}

fn derivative(ctx: &FieldCtx, a: &[FieldElement]) -> Uni {
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| ctx.mul_raw(c, &ctx.from_integer(i as i64)))
        .collect();
    trim(out)
}

/// `a(x)^(1/p)` for a polynomial whose exponents are all multiples of `p`.
fn pth_root(ctx: &FieldCtx, a: &[FieldElement]) -> Uni {
    let p = ctx.characteristic() as usize;
    let q = ctx.order().expect("finite field");
    a.iter()
        .step_by(p)
        .map(|c| ctx.pow_raw(c, q / p as u64))
        .collect()
}

fn is_one(a: &[FieldElement]) -> bool {
    a.len() == 1 && a[0].is_one()
}

/// Squarefree parts with multiplicities of a monic `f`.
fn squarefree(ctx: &FieldCtx, f: &[FieldElement]) -> Vec<(Uni, u32)> {
    let p = ctx.characteristic();
    let mut out = Vec::new();
    let df = derivative(ctx, f);
    if df.is_empty() {
        for (h, m) in squarefree(ctx, &pth_root(ctx, f)) {
            out.push((h, m * p));
        }
        return out;
    }
    let mut c = gcd(ctx, f, &df);
    let mut w = div_exact(ctx, f, &c);
    let mut i = 1;
    while !is_one(&w) {
        let y = gcd(ctx, &w, &c);
        let z = div_exact(ctx, &w, &y);
        if deg(&z) > 0 {
            out.push((z, i));
        }
        i += 1;
        c = div_exact(ctx, &c, &y);
        w = y;
    }
    if !is_one(&c) {
        for (h, m) in squarefree(ctx, &pth_root(ctx, &c)) {
            out.push((h, m * p));
        }
    }
    out
}

fn mulmod(ctx: &FieldCtx, a: &[FieldElement], b: &[FieldElement], m: &[FieldElement]) -> Uni {
    rem(ctx, &mul(ctx, a, b), m)
}

/// Monic irreducible factors of a monic squarefree `f`.
fn berlekamp(ctx: &FieldCtx, f: &[FieldElement], work: &mut u64) -> Vec<Uni> {
    let n = deg(f);
    if n <= 1 {
        return vec![f.to_vec()];
    }
    let q = ctx.order().expect("finite field");
    // x^q mod f by square-and-multiply
    let x = vec![ctx.zero(), ctx.one()];
    let mut xq = vec![ctx.one()];
    let mut base = rem(ctx, &x, f);
    let mut e = q;
    while e > 0 {
        if e & 1 == 1 {
            xq = mulmod(ctx, &xq, &base, f);
        }
        base = mulmod(ctx, &base, &base, f);
        e >>= 1;
    }
    // column i holds x^(iq) - x^i mod f
    let mut columns = Vec::with_capacity(n);
    let mut power = vec![ctx.one()];
    for i in 0..n {
        let mut col: Uni = power.clone();
        col.resize(n, ctx.zero());
        col[i] = ctx.sub_raw(&col[i], &ctx.one());
        columns.push(col);
        power = mulmod(ctx, &power, &xq, f);
    }
    let matrix: Vec<Vec<FieldElement>> = (0..n).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    let zero = vec![ctx.zero(); n];
    let kernel = solve(ctx, &matrix, &zero, n).expect("homogeneous system").kernel;
    *work += 1;
    let r = kernel.len();
    if r == 1 {
        return vec![f.to_vec()];
    }
    let elems: Vec<FieldElement> = (0..q as u32).map(|c| ctx.from_code(c).expect("in range")).collect();
    let mut factors = vec![f.to_vec()];
    for h in &kernel {
        let h = trim(h.clone());
        if deg(&h) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for u in factors {
            if deg(&u) <= 1 {
                next.push(u);
                continue;
            }
            let mut rest = u;
            for s in &elems {
                if deg(&rest) <= 1 {
                    break;
                }
                let shifted = sub(ctx, &h, std::slice::from_ref(s));
                let g = gcd(ctx, &rest, &shifted);
                *work += 1;
                if deg(&g) > 0 && deg(&g) < deg(&rest) {
                    rest = div_exact(ctx, &rest, &g);
                    next.push(g);
                }
            }
            next.push(rest);
        }
        factors = next;
        if factors.len() == r {
            break;
        }
    }
    debug_assert_eq!(factors.len(), r);
    factors
}

/// Complete factorization of a nonzero polynomial into monic irreducibles
/// with multiplicities, sorted by degree then coefficients.
pub(crate) fn factor(ctx: &FieldCtx, f: &[FieldElement], work: &mut u64) -> Vec<(Uni, u32)> {
    let f = monic(ctx, &trim(f.to_vec()));
    let mut out = Vec::new();
    for (part, m) in squarefree(ctx, &f) {
        for g in berlekamp(ctx, &part, work) {
            out.push((g, m));
        }
    }
    out.sort_by(|a, b| {
        let key = |u: &Uni| (u.len(), u.iter().rev().map(|c| c.code()).collect::<Vec<_>>());
        key(&a.0).cmp(&key(&b.0))
    });
    // equal factors can only come from distinct squarefree layers after p-th roots
    let mut merged: Vec<(Uni, u32)> = Vec::new();
    for (g, m) in out {
        match merged.last_mut() {
            Some((h, k)) if *h == g => *k += m,
            _ => merged.push((g, m)),
        }
    }
    merged
}
