//! Cross-oracle invariants over whole grids: certificates never contradict
//! the exhaustive search, and products of certified factors are always
//! found reducible with a witness that reconstructs the product.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schurforge::irred::{brute_force_verdict, specialization_certificate, survey, VerdictKind};
use schurforge::schur::schur_poly;
use schurforge::{Exponents, FieldCtx, MPoly};

const NVARS: usize = 3;

#[test]
fn certificates_never_contradict_the_survey_oracle() {
    let records = survey(9, &[2, 3, 5, 7], None).unwrap();
    assert_eq!(records.len(), 84);
    let mut reducible = 0;
    let mut certified = 0;
    for r in &records {
        assert_ne!(r.verdict.kind, VerdictKind::Inconclusive);
        let s = schur_poly(&r.c, &FieldCtx::prime(r.p).unwrap()).unwrap();
        if r.verdict.kind == VerdictKind::Reducible {
            reducible += 1;
        }
        for seed in 0..4 {
            if specialization_certificate(&s, seed).unwrap().is_certified() {
                certified += 1;
                assert_eq!(r.verdict.kind, VerdictKind::Irreducible, "c = {:?} over GF({}), seed {seed}", r.c, r.p);
            }
        }
    }
    // both sides of the implication are exercised
    assert!(reducible > 0 && certified > 0, "{reducible} reducible, {certified} certified");
}

/// Random form of degree `d` in three variables with no variable dividing it.
fn random_form(ctx: &FieldCtx, d: u32, rng: &mut ChaCha8Rng) -> MPoly {
    let q = ctx.order().unwrap();
    loop {
        let mut terms = Vec::new();
        for i in 0..=d {
            for j in 0..=d - i {
                let code = rng.gen_range(0..q) as u32;
                terms.push((Exponents::new([i, j, d - i - j]), ctx.from_code(code).unwrap()));
            }
        }
        let f = MPoly::from_terms(ctx, NVARS, terms).unwrap();
        if !f.is_zero() && (0..NVARS).all(|v| f.mindeg(v).unwrap() == 0) {
            return f;
        }
    }
}

/// A factor known irreducible without the exhaustive oracle: linear forms
/// trivially, higher degrees through a specialization certificate.
fn certified_factor(ctx: &FieldCtx, d: u32, rng: &mut ChaCha8Rng) -> MPoly {
    loop {
        let f = random_form(ctx, d, rng);
        if d == 1 || specialization_certificate(&f, rng.gen()).unwrap().is_certified() {
            return f;
        }
    }
}

#[test]
fn products_of_certified_factors_are_reducible() {
    let fields = [
        FieldCtx::prime(2).unwrap(),
        FieldCtx::prime(3).unwrap(),
        FieldCtx::prime(5).unwrap(),
        FieldCtx::extension(2, 2).unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for ctx in &fields {
        for (da, db) in [(1, 1), (1, 2), (2, 2), (1, 3), (2, 3), (3, 3)] {
            for _ in 0..8 {
                let a = certified_factor(ctx, da, &mut rng);
                let b = certified_factor(ctx, db, &mut rng);
                let p = a.mul(&b).unwrap();
                let v = brute_force_verdict(&p, None).unwrap();
                assert_eq!(v.kind, VerdictKind::Reducible, "({a}) * ({b}) over {ctx}");
                let (w, cofactor) = v.witness.unwrap();
                assert_eq!(w.mul(&cofactor).unwrap(), p);
                // the smallest factor degree is found first
                assert_eq!(w.total_degree().unwrap() as u32, da.min(db), "({a}) * ({b}) over {ctx}");
            }
        }
    }
}
