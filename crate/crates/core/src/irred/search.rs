//! Complete enumeration of homogeneous divisors of a fixed degree.
//!
//! The layered strategy applies an invertible shear
//! `x_v -> x_v + sum_u beta_u x_u` and writes the result as
//! `F = sum_k F_k x_v^k`. A factorization `F = A * B` restricts to a
//! factorization `F_0 = A_0 * B_0` of the bottom layer, a form in one
//! variable fewer whose divisors are found recursively. Higher layers solve
//! the linear equations
//! `A_0 * B_k + A_k * B_0 = F_k - sum_{i,j >= 1, i+j=k} A_i B_j`,
//! and the full affine solution set is enumerated. When `A_0` and `B_0` are
//! coprime the solution is unique, which is what the shear is chosen for.
//! Every leaf is confirmed by exact division, so the enumeration is
//! complete and sound for every choice of shear.
//!
//! The naive strategy enumerates every monic coefficient vector and is kept
//! as an independent cross-check for small inputs.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::binary::binary_divisors;
use super::linalg::solve;
use crate::field::{FieldCtx, FieldElement};
use crate::mpoly::{Exponents, MPoly};

/// All exponent vectors of total degree `t` supported on `vars`, ascending
/// in graded-lex order.
pub(crate) fn monomials(nvars: usize, vars: &[usize], t: u32) -> Vec<Exponents> {
    fn rec(vars: &[usize], t: u32, cur: &mut Exponents, out: &mut Vec<Exponents>) {
        match vars {
            [] => {
                if t == 0 {
                    out.push(cur.clone());
                }
            }
            [last] => {
                cur.set(*last, t);
                out.push(cur.clone());
                cur.set(*last, 0);
            }
            [first, rest @ ..] => {
                for k in 0..=t {
                    cur.set(*first, k);
                    rec(rest, t - k, cur, out);
                }
                cur.set(*first, 0);
            }
        }
    }
    let mut out = Vec::new();
    rec(vars, t, &mut Exponents::zeros(nvars), &mut out);
    out.sort();
    out
}

/// Ordering key of a monic candidate of degree `d`: its coefficient codes
/// listed over all degree-`d` monomials in ascending graded-lex order.
pub(crate) fn canonical_key(a: &MPoly, d: u32) -> Vec<u32> {
    let all: Vec<usize> = (0..a.nvars()).collect();
    monomials(a.nvars(), &all, d)
        .iter()
        .map(|e| a.coeff(e).code().expect("finite field"))
        .collect()
}

fn is_monomial(a: &MPoly) -> bool {
    a.num_terms() == 1
}

/// Result of one complete divisor enumeration.
pub(crate) struct DegreeSearch {
    pub divisors: Vec<MPoly>,
    pub tested: u64,
}

/// Every monic, non-monomial divisor of `p` of total degree `d`, sorted by
/// canonical key. `p` must be a nonzero form over a finite field.
pub(crate) fn layered_divisors(p: &MPoly, d: u32, parallel: bool) -> DegreeSearch {
    let vars: Vec<usize> = (0..p.nvars()).collect();
    let mut search = Search { parallel, tested: 0 };
    let found = search.divisors(p, &vars, d);
    let mut keyed: Vec<(Vec<u32>, MPoly)> = found
        .into_iter()
        .filter(|a| !is_monomial(a))
        .map(|a| (canonical_key(&a, d), a))
        .collect();
    keyed.sort_by(|x, y| x.0.cmp(&y.0));
    keyed.dedup_by(|x, y| x.0 == y.0);
    DegreeSearch {
        divisors: keyed.into_iter().map(|(_, a)| a).collect(),
        tested: search.tested,
    }
}

/// First monic non-monomial divisor of degree `d` in the naive enumeration
/// order, with the number of candidates tried.
pub(crate) fn naive_first_divisor(p: &MPoly, d: u32) -> (Option<MPoly>, u64) {
    let ctx = p.ctx();
    let order = ctx.order().expect("finite field") as u32;
    let all: Vec<usize> = (0..p.nvars()).collect();
    let monos = monomials(p.nvars(), &all, d);
    let elems: Vec<FieldElement> = (0..order).map(|c| ctx.from_code(c).expect("in range")).collect();
    let mut codes = vec![0u32; monos.len()];
    let mut tested = 0;
    loop {
        let nonzero = codes.iter().filter(|&&c| c != 0).count();
        let lead = codes.iter().rev().find(|&&c| c != 0);
        if nonzero >= 2 && lead.is_some_and(|&c| elems[c as usize].is_one()) {
            tested += 1;
            let terms = monos.iter().zip(&codes).filter(|(_, &c)| c != 0).map(|(e, &c)| (e.clone(), elems[c as usize].clone()));
            let a = MPoly::from_terms(ctx, p.nvars(), terms).expect("valid terms");
            if p.is_divisible_by(&a).expect("same ring") {
                return (Some(a), tested);
            }
        }
        // the last position is least significant
        let mut pos = codes.len();
        loop {
            if pos == 0 {
                return (None, tested);
            }
            pos -= 1;
            codes[pos] += 1;
            if codes[pos] < order {
                break;
            }
            codes[pos] = 0;
        }
    }
}

/// Candidate sections probed before settling for the cheapest one seen.
const SECTION_TRIES: usize = 24;

struct Search {
    parallel: bool,
    tested: u64,
}

/// A form after the shear `x_v -> x_v + sum_u beta_u x_u`, split into
/// layers by powers of `x_v`, with every divisor of its bottom layer.
struct Section {
    v: usize,
    rest: Vec<usize>,
    beta: Vec<FieldElement>,
    core: MPoly,
    layers: Vec<MPoly>,
    bottom_divisors: Vec<MPoly>,
}

enum Plan {
    Lift(Section),
    /// The linear form `x_v - sum_u beta_u x_u` divides the input.
    Linear(MPoly),
}

struct LiftFrame<'a> {
    ctx: &'a FieldCtx,
    nvars: usize,
    v: usize,
    rest: &'a [usize],
    layers: &'a [MPoly],
    a_degs: Vec<u32>,
    b_degs: Vec<u32>,
}

/// Images of the variables under `x_v -> x_v + sign * sum_u beta_u x_u`.
fn shear_images(ctx: &FieldCtx, nvars: usize, v: usize, rest: &[usize], beta: &[FieldElement], negate: bool) -> Vec<MPoly> {
    (0..nvars)
        .map(|u| {
            let mut img = MPoly::var(ctx, nvars, u);
            if u == v {
                for (&r, b) in rest.iter().zip(beta) {
                    let coeff = if negate { ctx.neg_raw(b) } else { b.clone() };
                    img.add_term(Exponents::unit(nvars, r), coeff);
                }
            }
            img
        })
        .collect()
}

impl Search {
    fn divisors(&mut self, f: &MPoly, vars: &[usize], d: u32) -> Vec<MPoly> {
        let ctx = f.ctx();
        let nvars = f.nvars();
        let total = f.total_degree().expect("nonzero form") as u32;
        if d > total {
            return Vec::new();
        }
        if d == 0 {
            return vec![MPoly::one(ctx, nvars)];
        }
        if d == total {
            return vec![f.monic().expect("nonzero")];
        }
        let active: Vec<usize> = vars.iter().copied().filter(|&u| f.deg(u).expect("valid var") > 0).collect();
        match active.as_slice() {
            [] => Vec::new(),
            [u] => {
                let mut e = Exponents::zeros(nvars);
                e.set(*u, d);
                vec![MPoly::one(ctx, nvars).mul_monomial(&e)]
            }
            [hi, lo] => binary_divisors(f, *hi, *lo, d, &mut self.tested),
            _ if 2 * d > total => {
                // the complementary degree is smaller; divisors pair with cofactors
                self.divisors(f, &active, total - d)
                    .into_iter()
                    .map(|b| {
                        let q = f.exact_divide(&b).expect("same ring").expect("divisor");
                        q.monic().expect("nonzero")
                    })
                    .collect()
            }
            _ => match self.plan(f, &active, d) {
                Plan::Linear(l) => {
                    let g = f.exact_divide(&l).expect("same ring").expect("linear factor");
                    let mut out = self.divisors(&g, &active, d);
                    for a in self.divisors(&g, &active, d - 1) {
                        out.push(a.mul_raw(&l).monic().expect("nonzero"));
                    }
                    dedup_polys(out)
                }
                Plan::Lift(section) => self.lift_section(f, d, section),
            },
        }
    }

    /// Pick the pivot variable and shear. Candidates are visited in a fixed
    /// order; the first whose bottom splits all lift uniquely wins, otherwise
    /// the cheapest of the first few.
    fn plan(&mut self, f: &MPoly, vars: &[usize], d: u32) -> Plan {
        let ctx = f.ctx();
        let nvars = f.nvars();
        let order = ctx.order().expect("finite field");
        let total = f.total_degree().expect("nonzero") as u32;
        let mut best: Option<(u64, Section)> = None;
        let mut tries = 0;
        for &v in vars {
            let rest: Vec<usize> = vars.iter().copied().filter(|&u| u != v).collect();
            let count = order.saturating_pow(rest.len() as u32);
            for index in 0..count {
                if tries == SECTION_TRIES {
                    break;
                }
                let mut digits = index;
                let beta: Vec<FieldElement> = rest
                    .iter()
                    .map(|_| {
                        let c = ctx.from_code((digits % order) as u32).expect("in range");
                        digits /= order;
                        c
                    })
                    .collect();
                let images = shear_images(ctx, nvars, v, &rest, &beta, false);
                let core = f.compose(&images).expect("same ring");
                let layers = core.coefficients_in(v).expect("valid var");
                if layers[0].is_zero() {
                    let back = shear_images(ctx, nvars, v, &rest, &beta, true);
                    return Plan::Linear(back[v].clone());
                }
                tries += 1;
                let w = layers.len() as u32 - 1;
                let bottom_divisors = self.divisors(&layers[0], &rest, d);
                let mut cost = 0u64;
                for a0 in &bottom_divisors {
                    let b0 = layers[0].exact_divide(a0).expect("same ring").expect("divisor");
                    let a_deg = (d.min(w) >= 1).then(|| d - 1);
                    let b_deg = ((total - d).min(w) >= 1).then(|| total - d - 1);
                    let sys = LayerSystem::new(ctx, nvars, &rest, a0, &b0, a_deg, b_deg);
                    let zero = vec![ctx.zero(); sys.rows];
                    let dim = solve(ctx, &sys.matrix, &zero, sys.ncols).map_or(0, |s| s.kernel.len());
                    cost = cost.saturating_add(order.saturating_pow(dim as u32));
                }
                let unique = cost == bottom_divisors.len() as u64;
                let section = Section {
                    v,
                    rest: rest.clone(),
                    beta,
                    core,
                    layers,
                    bottom_divisors,
                };
                if unique {
                    return Plan::Lift(section);
                }
                if best.as_ref().is_none_or(|(c, _)| cost < *c) {
                    best = Some((cost, section));
                }
            }
        }
        Plan::Lift(best.expect("some section has a nonzero bottom").1)
    }

    fn lift_section(&mut self, f: &MPoly, d: u32, section: Section) -> Vec<MPoly> {
        let ctx = f.ctx();
        let nvars = f.nvars();
        let total = f.total_degree().expect("nonzero") as u32;
        let w = section.layers.len() as u32 - 1;
        let frame = LiftFrame {
            ctx,
            nvars,
            v: section.v,
            rest: &section.rest,
            layers: &section.layers,
            a_degs: (0..=d.min(w)).map(|k| d - k).collect(),
            b_degs: (0..=(total - d).min(w)).map(|k| total - d - k).collect(),
        };
        let run = |a0: &MPoly| -> (Vec<MPoly>, u64) {
            let b0 = section.layers[0].exact_divide(a0).expect("same ring").expect("divisor");
            let mut tested = 0u64;
            let mut out = Vec::new();
            frame.lift(1, &mut vec![a0.clone()], &mut vec![b0], &section.core, &mut tested, &mut out);
            (out, tested)
        };
        let results: Vec<(Vec<MPoly>, u64)> = if self.parallel && section.bottom_divisors.len() > 1 {
            section.bottom_divisors.par_iter().map(run).collect()
        } else {
            section.bottom_divisors.iter().map(run).collect()
        };
        let back = shear_images(ctx, nvars, section.v, &section.rest, &section.beta, true);
        let mut out = Vec::new();
        for (divs, tested) in results {
            self.tested += tested;
            for a in divs {
                out.push(a.compose(&back).expect("same ring").monic().expect("nonzero"));
            }
        }
        dedup_polys(out)
    }
}

fn dedup_polys(mut polys: Vec<MPoly>) -> Vec<MPoly> {
    let mut seen = HashSet::new();
    polys.retain(|p| seen.insert(p.to_string()));
    polys
}

/// The linear map `(A_k, B_k) -> A0 * B_k + A_k * B0` in coordinates.
struct LayerSystem {
    a_monos: Vec<Exponents>,
    b_monos: Vec<Exponents>,
    row_monos: Vec<Exponents>,
    matrix: Vec<Vec<FieldElement>>,
    rows: usize,
    ncols: usize,
}

impl LayerSystem {
    fn new(
        ctx: &FieldCtx,
        nvars: usize,
        rest: &[usize],
        a0: &MPoly,
        b0: &MPoly,
        a_deg: Option<u32>,
        b_deg: Option<u32>,
    ) -> Self {
        let a_monos = a_deg.map_or_else(Vec::new, |t| monomials(nvars, rest, t));
        let b_monos = b_deg.map_or_else(Vec::new, |t| monomials(nvars, rest, t));
        let a0_deg = a0.total_degree().expect("nonzero") as u32;
        let b0_deg = b0.total_degree().expect("nonzero") as u32;
        let row_deg = match (a_deg, b_deg) {
            (Some(t), _) => t + b0_deg,
            (_, Some(t)) => t + a0_deg,
            _ => a0_deg + b0_deg,
        };
        let row_monos = monomials(nvars, rest, row_deg);
        let row_of: HashMap<&Exponents, usize> = row_monos.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let ncols = a_monos.len() + b_monos.len();
        let mut matrix = vec![vec![ctx.zero(); ncols]; row_monos.len()];
        for (col, m) in a_monos.iter().enumerate() {
            for (e, c) in b0.terms() {
                matrix[row_of[&m.mul(e)]][col] = c.clone();
            }
        }
        for (j, m) in b_monos.iter().enumerate() {
            for (e, c) in a0.terms() {
                matrix[row_of[&m.mul(e)]][a_monos.len() + j] = c.clone();
            }
        }
        let rows = row_monos.len();
        LayerSystem {
            a_monos,
            b_monos,
            row_monos,
            matrix,
            rows,
            ncols,
        }
    }
}

impl LiftFrame<'_> {
    fn lift(
        &self,
        k: usize,
        a_parts: &mut Vec<MPoly>,
        b_parts: &mut Vec<MPoly>,
        core: &MPoly,
        tested: &mut u64,
        out: &mut Vec<MPoly>,
    ) {
        let w = self.layers.len() - 1;
        let has_a = k < self.a_degs.len();
        let has_b = k < self.b_degs.len();
        if k > w || (!has_a && !has_b) {
            let a = self.assemble(a_parts);
            *tested += 1;
            if core.is_divisible_by(&a).expect("same ring") {
                out.push(a);
            }
            return;
        }
        let mut rhs = self.layers[k].clone();
        for i in 1..k {
            let j = k - i;
            if i < a_parts.len() && j < b_parts.len() {
                rhs = rhs.sub(&a_parts[i].mul_raw(&b_parts[j])).expect("same ring");
            }
        }
        let sys = LayerSystem::new(
            self.ctx,
            self.nvars,
            self.rest,
            &a_parts[0],
            &b_parts[0],
            has_a.then(|| self.a_degs[k]),
            has_b.then(|| self.b_degs[k]),
        );
        let row_set: HashSet<&Exponents> = sys.row_monos.iter().collect();
        if rhs.terms().any(|(e, _)| !row_set.contains(e)) {
            return;
        }
        let rhs_vec: Vec<FieldElement> = sys.row_monos.iter().map(|e| rhs.coeff(e)).collect();
        let Some(sol) = solve(self.ctx, &sys.matrix, &rhs_vec, sys.ncols) else {
            return;
        };
        let order = self.ctx.order().expect("finite field") as u32;
        let elems: Vec<FieldElement> = (0..order).map(|c| self.ctx.from_code(c).expect("in range")).collect();
        let build = |monos: &[Exponents], coeffs: &[FieldElement]| {
            let terms = monos.iter().zip(coeffs).map(|(e, c)| (e.clone(), c.clone()));
            MPoly::from_terms(self.ctx, self.nvars, terms).expect("valid terms")
        };
        let split = sys.a_monos.len();
        let mut lambdas = vec![0u32; sol.kernel.len()];
        loop {
            let mut x = sol.particular.clone();
            for (lam, kv) in lambdas.iter().zip(&sol.kernel) {
                if *lam == 0 {
                    continue;
                }
                for (xi, ki) in x.iter_mut().zip(kv) {
                    *xi = self.ctx.add_raw(xi, &self.ctx.mul_raw(&elems[*lam as usize], ki));
                }
            }
            if has_a {
                a_parts.push(build(&sys.a_monos, &x[..split]));
            }
            if has_b {
                b_parts.push(build(&sys.b_monos, &x[split..]));
            }
            self.lift(k + 1, a_parts, b_parts, core, tested, out);
            if has_a {
                a_parts.pop();
            }
            if has_b {
                b_parts.pop();
            }
            let mut pos = 0;
            loop {
                if pos == lambdas.len() {
                    return;
                }
                lambdas[pos] += 1;
                if lambdas[pos] < order {
                    break;
                }
                lambdas[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Reassemble `A = sum_k A_k x_v^k`.
    fn assemble(&self, a_parts: &[MPoly]) -> MPoly {
        let mut acc = MPoly::zero(self.ctx, self.nvars);
        for (k, part) in a_parts.iter().enumerate() {
            let mut shift = Exponents::zeros(self.nvars);
            shift.set(self.v, k as u32);
            acc = acc.add(&part.mul_monomial(&shift)).expect("same ring");
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schur::schur_poly;
    use crate::ExponentSequence;

    fn seq(c: &[u32]) -> ExponentSequence {
        ExponentSequence::new(c.to_vec()).unwrap()
    }

    #[test]
    fn monomials_ascend() {
        let m = monomials(3, &[0, 1, 2], 1);
        let text: Vec<String> = m.iter().map(|e| format!("{:?}", e.as_slice())).collect();
        assert_eq!(text, ["[0, 0, 1]", "[0, 1, 0]", "[1, 0, 0]"]);
        assert_eq!(monomials(4, &[0, 2, 3], 3).len(), 10);
    }

    #[test]
    fn finds_all_linear_factors_of_0_2_4() {
        let f = FieldCtx::prime(3).unwrap();
        let s = schur_poly(&seq(&[0, 2, 4]), &f).unwrap();
        let found = layered_divisors(&s, 1, false);
        let names: Vec<String> = found.divisors.iter().map(|a| a.to_string()).collect();
        assert_eq!(names, ["x0 + x1", "x0 + x2", "x1 + x2"]);
        let quad = layered_divisors(&s, 2, false);
        assert_eq!(quad.divisors.len(), 3);
    }

    #[test]
    fn layered_agrees_with_naive_on_small_products() {
        let f = FieldCtx::prime(2).unwrap();
        let cases = [
            "x0^2 + x0*x1 + x1^2",
            "x0^3 + x1^2*x2 + x2^3",
            "x0^2*x1 + x0*x2^2 + x1^3",
        ];
        for (i, a) in cases.iter().enumerate() {
            for b in &cases[i..] {
                let p = MPoly::parse(&f, 3, a).unwrap().mul(&MPoly::parse(&f, 3, b).unwrap()).unwrap();
                let total = p.total_degree().unwrap() as u32;
                for d in 1..=total / 2 {
                    let layered = layered_divisors(&p, d, false).divisors;
                    let (naive, _) = naive_first_divisor(&p, d);
                    assert_eq!(layered.first(), naive.as_ref(), "{p} at degree {d}");
                    for div in &layered {
                        assert!(p.is_divisible_by(div).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn parallel_and_serial_match() {
        let f = FieldCtx::prime(3).unwrap();
        let s = schur_poly(&seq(&[0, 3, 6]), &f).unwrap();
        for d in 1..=3 {
            let a = layered_divisors(&s, d, false);
            let b = layered_divisors(&s, d, true);
            assert_eq!(a.divisors, b.divisors);
            assert_eq!(a.tested, b.tested);
        }
    }
}
