//! Generators and law checks shared by the property suite and the
//! acceptance harness.
#![allow(dead_code)]

use proptest::prelude::*;
use schurforge::{Exponents, FieldCtx, FieldElement, MPoly};

pub const CASES: u32 = 1000;
pub const NVARS: usize = 3;

/// Raw material for one polynomial: exponent triples with a coefficient seed
/// and a denominator used only over the rationals.
pub type RawPoly = Vec<([u32; NVARS], u32, i64, i64)>;

pub fn raw_poly() -> impl Strategy<Value = RawPoly> {
    prop::collection::vec(
        (prop::array::uniform3(0u32..4), any::<u32>(), -6i64..7, 1i64..5),
        1..7,
    )
}

pub fn element(ctx: &FieldCtx, code: u32, num: i64, den: i64) -> FieldElement {
    match ctx.order() {
        Some(q) => ctx.from_code((code as u64 % q) as u32).unwrap(),
        None => ctx.div(&ctx.from_integer(num), &ctx.from_integer(den)).unwrap(),
    }
}

pub fn build(ctx: &FieldCtx, raw: &RawPoly) -> MPoly {
    let terms = raw
        .iter()
        .map(|(e, code, num, den)| (Exponents::new(e.iter().copied()), element(ctx, *code, *num, *den)));
    MPoly::from_terms(ctx, NVARS, terms).unwrap()
}

pub fn prime_fields() -> Vec<FieldCtx> {
    [2, 3, 5, 7, 11].into_iter().map(|p| FieldCtx::prime(p).unwrap()).collect()
}

pub fn extension_fields() -> Vec<FieldCtx> {
    [(2, 2), (2, 3), (3, 2), (5, 2)]
        .into_iter()
        .map(|(p, m)| FieldCtx::extension(p, m).unwrap())
        .collect()
}

/// Min/max parts multiply; deg, mindeg and width add.
pub fn check_product_laws(a: &MPoly, b: &MPoly) -> Result<(), TestCaseError> {
    let ab = a.mul(b).unwrap();
    prop_assert!(!ab.is_zero(), "product of nonzero polynomials vanished");
    for i in 0..NVARS {
        prop_assert_eq!(ab.min_part(i).unwrap(), a.min_part(i).unwrap().mul(&b.min_part(i).unwrap()).unwrap());
        prop_assert_eq!(ab.max_part(i).unwrap(), a.max_part(i).unwrap().mul(&b.max_part(i).unwrap()).unwrap());
        prop_assert_eq!(ab.deg(i).unwrap(), a.deg(i).unwrap() + b.deg(i).unwrap());
        prop_assert_eq!(ab.mindeg(i).unwrap(), a.mindeg(i).unwrap() + b.mindeg(i).unwrap());
        prop_assert_eq!(ab.width(i).unwrap(), a.width(i).unwrap() + b.width(i).unwrap());
    }
    Ok(())
}

/// Field axioms plus Frobenius on one triple.
pub fn check_axioms(ctx: &FieldCtx, a: &FieldElement, b: &FieldElement, c: &FieldElement) -> Result<(), TestCaseError> {
    let add = |x: &FieldElement, y: &FieldElement| ctx.add(x, y).unwrap();
    let mul = |x: &FieldElement, y: &FieldElement| ctx.mul(x, y).unwrap();
    prop_assert_eq!(add(&add(a, b), c), add(a, &add(b, c)));
    prop_assert_eq!(mul(&mul(a, b), c), mul(a, &mul(b, c)));
    prop_assert_eq!(add(a, b), add(b, a));
    prop_assert_eq!(mul(a, b), mul(b, a));
    prop_assert_eq!(mul(a, &add(b, c)), add(&mul(a, b), &mul(a, c)));
    prop_assert_eq!(add(a, &ctx.zero()), a.clone());
    prop_assert_eq!(mul(a, &ctx.one()), a.clone());
    prop_assert!(add(a, &ctx.neg(a).unwrap()).is_zero());
    prop_assert_eq!(ctx.sub(a, b).unwrap(), add(a, &ctx.neg(b).unwrap()));
    if a.is_zero() {
        prop_assert!(ctx.inv(a).is_err());
    } else {
        let inv = ctx.inv(a).unwrap();
        prop_assert!(mul(a, &inv).is_one());
        prop_assert_eq!(ctx.div(b, a).unwrap(), mul(b, &inv));
    }
    if let Some(q) = ctx.order() {
        // Frobenius fixes every element of GF(q)
        prop_assert_eq!(ctx.pow(a, q).unwrap(), a.clone());
    }
    Ok(())
}

