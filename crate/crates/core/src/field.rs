//! Exact coefficient fields: GF(p), GF(p^m) and the rationals.
//!
//! A [`FieldCtx`] is a cheap, immutable handle. Elements carry a
//! [`FieldTag`] naming the field they belong to; the checked operations on
//! the context refuse to mix tags.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::upoly;

/// Largest supported prime modulus (exclusive).
pub const MAX_PRIME: u32 = 1 << 16;
/// Largest supported finite field order.
pub const MAX_ORDER: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldKind {
    Prime,
    Extension,
    Rational,
}

/// Identity of a field: characteristic and extension degree.
/// The rationals are `p = 0, m = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldTag {
    p: u32,
    m: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    /// Canonical code of a finite field element: the power-basis coefficients
    /// read as base-p digits, constant term least significant.
    Finite(u32),
    Rational(BigRational),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    tag: FieldTag,
    repr: Repr,
}

impl FieldElement {
    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    /// Canonical code for finite field elements (`None` for rationals).
    pub fn code(&self) -> Option<u32> {
        match self.repr {
            Repr::Finite(v) => Some(v),
            Repr::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(r) => Some(r),
            Repr::Finite(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Finite(v) => *v == 0,
            Repr::Rational(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Finite(v) => *v == 1,
            Repr::Rational(r) => r.is_one(),
        }
    }

    /// True when the text form needs parentheses inside a product.
    pub(crate) fn is_compound(&self) -> bool {
        match &self.repr {
            Repr::Finite(v) => {
                self.tag.m > 1 && decode(*v, self.tag.p, self.tag.m).iter().filter(|&&d| d != 0).count() > 1
            }
            Repr::Rational(_) => false,
        }
    }

    /// Negative rationals print with a leading minus sign.
    pub(crate) fn is_negative(&self) -> bool {
        matches!(&self.repr, Repr::Rational(r) if r.is_negative())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Repr::Finite(v) if self.tag.m == 1 => write!(f, "{v}"),
            Repr::Finite(v) => {
                let digits = decode(*v, self.tag.p, self.tag.m);
                let mut parts = Vec::new();
                for (i, &c) in digits.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    parts.push(match (i, c) {
                        (0, c) => format!("{c}"),
                        (1, 1) => "t".to_string(),
                        (1, c) => format!("{c}*t"),
                        (i, 1) => format!("t^{i}"),
                        (i, c) => format!("{c}*t^{i}"),
                    });
                }
                if parts.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", parts.join("+"))
                }
            }
        }
    }
}

#[derive(Debug)]
struct FieldInner {
    kind: FieldKind,
    p: u32,
    m: u32,
    q: u64,
    /// Monic modulus, little-endian, length m + 1 (extension kind only).
    modulus: Vec<u32>,
}

/// A computational field context.
#[derive(Debug, Clone)]
pub struct FieldCtx {
    inner: Arc<FieldInner>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.tag() == other.tag()
    }
}

impl Eq for FieldCtx {}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn decode(mut v: u32, p: u32, m: u32) -> Vec<u32> {
    let mut digits = Vec::with_capacity(m as usize);
    for _ in 0..m {
        digits.push(v % p);
        v /= p;
    }
    digits
}

fn encode(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p + d)
}

impl FieldCtx {
    /// GF(p) for a prime `p < 2^16`.
    pub fn prime(p: u32) -> Result<Self> {
        if !(2..MAX_PRIME).contains(&p) {
            return Err(Error::Construction(format!("prime {p} outside [2, 2^16)")));
        }
        if !is_prime(p) {
            return Err(Error::Construction(format!("{p} is not prime")));
        }
        Ok(FieldCtx {
            inner: Arc::new(FieldInner {
                kind: FieldKind::Prime,
                p,
                m: 1,
                q: p as u64,
                modulus: Vec::new(),
            }),
        })
    }

    /// GF(p^m) built on the lexicographically least monic irreducible
    /// polynomial of degree `m` over GF(p).
    ///
    /// Candidates are ordered by their lower coefficients read as a base-p
    /// number with the constant term least significant.
    pub fn extension(p: u32, m: u32) -> Result<Self> {
        if !(2..MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::Construction(format!("{p} is not a prime below 2^16")));
        }
        if m == 0 {
            return Err(Error::Construction("extension degree must be >= 1".into()));
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_ORDER);
        let Some(q) = q else {
            return Err(Error::Construction(format!("{p}^{m} exceeds 2^20")));
        };
        let count = q; // p^m candidates for the m lower coefficients
        let modulus = (0..count)
            .map(|index| upoly::monic_from_index(m as usize, index, p))
            .find(|f| upoly::is_irreducible_by_trial(f, p))
            .ok_or_else(|| {
                Error::Construction(format!("no irreducible polynomial of degree {m} over GF({p})"))
            })?;
        Ok(FieldCtx {
            inner: Arc::new(FieldInner {
                kind: FieldKind::Extension,
                p,
                m,
                q,
                modulus,
            }),
        })
    }

    /// The rationals.
    pub fn rationals() -> Self {
        FieldCtx {
            inner: Arc::new(FieldInner {
                kind: FieldKind::Rational,
                p: 0,
                m: 1,
                q: 0,
                modulus: Vec::new(),
            }),
        }
    }

    pub fn kind(&self) -> FieldKind {
        self.inner.kind
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.m
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        self.is_finite().then_some(self.inner.q)
    }

    pub fn is_finite(&self) -> bool {
        self.inner.kind != FieldKind::Rational
    }

    /// Modulus coefficients, constant term first (extension kind only).
    pub fn modulus(&self) -> Option<&[u32]> {
        (self.inner.kind == FieldKind::Extension).then_some(self.inner.modulus.as_slice())
    }

    pub fn tag(&self) -> FieldTag {
        FieldTag {
            p: self.inner.p,
            m: self.inner.m,
        }
    }

    pub fn contains(&self, e: &FieldElement) -> bool {
        e.tag == self.tag()
    }

    fn finite(&self, v: u32) -> FieldElement {
        FieldElement {
            tag: self.tag(),
            repr: Repr::Finite(v),
        }
    }

    fn rational(&self, r: BigRational) -> FieldElement {
        FieldElement {
            tag: self.tag(),
            repr: Repr::Rational(r),
        }
    }

    pub fn zero(&self) -> FieldElement {
        match self.inner.kind {
            FieldKind::Rational => self.rational(BigRational::zero()),
            _ => self.finite(0),
        }
    }

    pub fn one(&self) -> FieldElement {
        match self.inner.kind {
            FieldKind::Rational => self.rational(BigRational::one()),
            _ => self.finite(1),
        }
    }

    /// Image of an integer under the canonical ring homomorphism.
    pub fn from_integer(&self, n: i64) -> FieldElement {
        match self.inner.kind {
            FieldKind::Rational => self.rational(BigRational::from_integer(BigInt::from(n))),
            _ => {
                let p = self.inner.p as i64;
                self.finite(n.rem_euclid(p) as u32)
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self.inner.kind {
            FieldKind::Rational => self.rational(BigRational::from_integer(n.clone())),
            _ => {
                let p = BigInt::from(self.inner.p);
                let r = n.mod_floor(&p);
                self.finite(r.to_u32().expect("residue fits in u32"))
            }
        }
    }

    /// Element with the given canonical code (finite fields only).
    pub fn from_code(&self, code: u32) -> Result<FieldElement> {
        if !self.is_finite() {
            return Err(Error::NotFinite);
        }
        if code as u64 >= self.inner.q {
            return Err(Error::BadParameter(format!("code {code} out of range")));
        }
        Ok(self.finite(code))
    }

    /// The generator `t` of the power basis (equals 0 in GF(p) viewed as a
    /// degree-1 extension with modulus `t`).
    pub fn generator(&self) -> Result<FieldElement> {
        if !self.is_finite() {
            return Err(Error::NotFinite);
        }
        if self.inner.m == 1 {
            let root = (self.inner.p - self.inner.modulus.first().copied().unwrap_or(0)) % self.inner.p;
            return Ok(self.finite(root));
        }
        Ok(self.finite(self.inner.p))
    }

    /// Every element exactly once, in code order.
    pub fn elements(&self) -> Result<impl Iterator<Item = FieldElement> + '_> {
        if !self.is_finite() {
            return Err(Error::NotFinite);
        }
        Ok((0..self.inner.q as u32).map(move |v| self.finite(v)))
    }

    fn check(&self, e: &FieldElement) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::Context(format!("element of {:?} used in {}", e.tag, self)))
        }
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add_raw(a, b))
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub_raw(a, b))
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul_raw(a, b))
    }

    pub fn neg(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        Ok(self.neg_raw(a))
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check(a)?;
        self.inv_raw(a)
    }

    pub fn pow(&self, a: &FieldElement, e: u64) -> Result<FieldElement> {
        self.check(a)?;
        Ok(self.pow_raw(a, e))
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        let inv = self.inv(b)?;
        self.mul(a, &inv)
    }

    // Unchecked arithmetic for callers that already guarantee membership.

    pub(crate) fn add_raw(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (&a.repr, &b.repr) {
            (Repr::Finite(x), Repr::Finite(y)) => {
                let p = self.inner.p;
                if self.inner.m == 1 {
                    self.finite(((*x as u64 + *y as u64) % p as u64) as u32)
                } else if p == 2 {
                    self.finite(x ^ y)
                } else {
                    let (mut dx, dy) = (decode(*x, p, self.inner.m), decode(*y, p, self.inner.m));
                    for (u, v) in dx.iter_mut().zip(dy) {
                        *u = (*u + v) % p;
                    }
                    self.finite(encode(&dx, p))
                }
            }
            (Repr::Rational(x), Repr::Rational(y)) => self.rational(x + y),
            _ => unreachable!("mixed representations"),
        }
    }

    pub(crate) fn neg_raw(&self, a: &FieldElement) -> FieldElement {
        match &a.repr {
            Repr::Finite(x) => {
                let p = self.inner.p;
                if self.inner.m == 1 {
                    self.finite((p - x % p) % p)
                } else if p == 2 {
                    a.clone()
                } else {
                    let dx: Vec<u32> = decode(*x, p, self.inner.m)
                        .into_iter()
                        .map(|u| (p - u) % p)
                        .collect();
                    self.finite(encode(&dx, p))
                }
            }
            Repr::Rational(x) => self.rational(-x),
        }
    }

    pub(crate) fn sub_raw(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add_raw(a, &self.neg_raw(b))
    }

    pub(crate) fn mul_raw(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        match (&a.repr, &b.repr) {
            (Repr::Finite(x), Repr::Finite(y)) => {
                let p = self.inner.p;
                let m = self.inner.m as usize;
                if m == 1 {
                    return self.finite((*x as u64 * *y as u64 % p as u64) as u32);
                }
                let (dx, dy) = (decode(*x, p, m as u32), decode(*y, p, m as u32));
                let p64 = p as u64;
                let mut prod = vec![0u64; 2 * m - 1];
                for (i, &u) in dx.iter().enumerate() {
                    if u == 0 {
                        continue;
                    }
                    for (j, &v) in dy.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + u as u64 * v as u64) % p64;
                    }
                }
                // reduce with the monic modulus: t^m = -(c_0 + ... + c_{m-1} t^{m-1})
                let modulus = &self.inner.modulus;
                for k in (m..prod.len()).rev() {
                    let lead = prod[k];
                    if lead == 0 {
                        continue;
                    }
                    prod[k] = 0;
                    for (i, &c) in modulus[..m].iter().enumerate() {
                        let slot = &mut prod[k - m + i];
                        *slot = (*slot + p64 - lead * c as u64 % p64) % p64;
                    }
                }
                let digits: Vec<u32> = prod[..m].iter().map(|&v| v as u32).collect();
                self.finite(encode(&digits, p))
            }
            (Repr::Rational(x), Repr::Rational(y)) => self.rational(x * y),
            _ => unreachable!("mixed representations"),
        }
    }

    pub(crate) fn inv_raw(&self, a: &FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        match &a.repr {
            Repr::Finite(x) if self.inner.m == 1 => Ok(self.finite(upoly::inv_mod(*x, self.inner.p))),
            Repr::Finite(_) => Ok(self.pow_raw(a, self.inner.q - 2)),
            Repr::Rational(x) => Ok(self.rational(x.recip())),
        }
    }

    pub(crate) fn pow_raw(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul_raw(&base, &base);
            }
        }
        acc
    }

    /// Parse the text form of an element: a decimal residue (or any integer),
    /// `a/b` for rationals, or `c0+c1*t+...` for extensions.
    pub fn parse_element(&self, text: &str) -> Result<FieldElement> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let s = s.trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Err(Error::Parse("empty coefficient".into()));
        }
        let bad = || Error::Parse(format!("bad field element '{text}'"));
        match self.inner.kind {
            FieldKind::Rational => {
                let (num, den) = match s.split_once('/') {
                    Some((n, d)) => (n, d),
                    None => (s, "1"),
                };
                let num: BigInt = num.parse().map_err(|_| bad())?;
                let den: BigInt = den.parse().map_err(|_| bad())?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                Ok(self.rational(BigRational::new(num, den)))
            }
            _ => {
                let mut acc = self.zero();
                let mut rest = s;
                let mut sign = 1i64;
                if let Some(r) = rest.strip_prefix('-') {
                    sign = -1;
                    rest = r;
                }
                for part in rest.split('+') {
                    let (coeff, power) = if let Some((c, t)) = part.split_once('*') {
                        (c.parse::<i64>().map_err(|_| bad())?, parse_t_power(t).ok_or_else(bad)?)
                    } else if let Some(pw) = parse_t_power(part) {
                        (1, pw)
                    } else {
                        (part.parse::<i64>().map_err(|_| bad())?, 0)
                    };
                    if power >= self.inner.m && power > 0 {
                        return Err(bad());
                    }
                    let term = if power == 0 {
                        self.from_integer(coeff)
                    } else {
                        let t = self.finite(self.inner.p.pow(power));
                        self.mul_raw(&self.from_integer(coeff), &t)
                    };
                    acc = self.add_raw(&acc, &term);
                }
                Ok(if sign < 0 { self.neg_raw(&acc) } else { acc })
            }
        }
    }
}

fn parse_t_power(s: &str) -> Option<u32> {
    let rest = s.strip_prefix('t')?;
    if rest.is_empty() {
        return Some(1);
    }
    rest.strip_prefix('^')?.parse().ok()
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.inner.kind {
            FieldKind::Prime => write!(f, "GF({})", self.inner.p),
            FieldKind::Extension => write!(f, "GF({}^{})", self.inner.p, self.inner.m),
            FieldKind::Rational => write!(f, "Q"),
        }
    }
}

impl Serialize for FieldCtx {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("FieldCtx", 4)?;
        st.serialize_field("kind", &self.inner.kind)?;
        st.serialize_field("p", &self.inner.p)?;
        st.serialize_field("m", &self.inner.m)?;
        st.serialize_field("modulus", &self.modulus())?;
        st.end()
    }
}

/// Field spec grammar: `p`, `p:m` or `Q`.
impl FromStr for FieldCtx {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldCtx::rationals());
        }
        let bad = || Error::Parse(format!("bad field spec '{s}' (expected p, p:m or Q)"));
        match s.split_once(':') {
            Some((p, m)) => {
                let p = p.parse().map_err(|_| bad())?;
                let m = m.parse().map_err(|_| bad())?;
                FieldCtx::extension(p, m)
            }
            None => FieldCtx::prime(s.parse().map_err(|_| bad())?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_construction() {
        assert_eq!(FieldCtx::prime(7).unwrap().order(), Some(7));
        assert_eq!(FieldCtx::prime(2).unwrap().order(), Some(2));
        assert!(matches!(FieldCtx::prime(4), Err(Error::Construction(_))));
        assert!(matches!(FieldCtx::prime(1), Err(Error::Construction(_))));
        assert!(matches!(FieldCtx::prime(65537), Err(Error::Construction(_))));
    }

    #[test]
    fn gf4_modulus_is_lex_least() {
        let gf4 = FieldCtx::extension(2, 2).unwrap();
        assert_eq!(gf4.modulus(), Some(&[1, 1, 1][..]));
        // brute check: t^2, t^2+1, t^2+t all have a root in GF(2)
        for lower in [[0u32, 0], [1, 0], [0, 1]] {
            let has_root = (0..2u32).any(|x| (lower[0] + lower[1] * x + x * x) % 2 == 0);
            assert!(has_root);
        }
    }

    #[test]
    fn extension_bound() {
        assert!(matches!(FieldCtx::extension(2, 21), Err(Error::Construction(_))));
        assert!(FieldCtx::extension(2, 20).is_ok());
    }

    #[test]
    fn degree_one_extension_matches_prime_field() {
        let a = FieldCtx::prime(5).unwrap();
        let b = FieldCtx::extension(5, 1).unwrap();
        for x in 0..5 {
            for y in 0..5 {
                let (ax, ay) = (a.from_integer(x), a.from_integer(y));
                let (bx, by) = (b.from_integer(x), b.from_integer(y));
                assert_eq!(a.mul(&ax, &ay).unwrap(), b.mul(&bx, &by).unwrap());
                assert_eq!(a.add(&ax, &ay).unwrap(), b.add(&bx, &by).unwrap());
            }
        }
    }

    #[test]
    fn inverse_in_gf7() {
        let f = FieldCtx::prime(7).unwrap();
        let three = f.from_integer(3);
        let inv = f.inv(&three).unwrap();
        assert_eq!(inv, f.from_integer(5));
        // scan oracle
        let scanned = (0..7).find(|&r| (3 * r) % 7 == 1).unwrap();
        assert_eq!(inv.code(), Some(scanned as u32));
    }

    #[test]
    fn rational_sum() {
        let q = FieldCtx::rationals();
        let a = q.parse_element("1/3").unwrap();
        let b = q.parse_element("1/6").unwrap();
        assert_eq!(q.add(&a, &b).unwrap(), q.parse_element("1/2").unwrap());
        assert_eq!(q.add(&a, &b).unwrap().to_string(), "1/2");
    }

    #[test]
    fn from_integer_reduces() {
        let f = FieldCtx::prime(2).unwrap();
        assert_eq!(f.from_integer(3), f.one());
        let gf9 = FieldCtx::extension(3, 2).unwrap();
        assert!(gf9.from_integer(3).is_zero());
        assert_eq!(gf9.from_integer(-1), gf9.from_integer(2));
    }

    #[test]
    fn errors() {
        let f = FieldCtx::prime(7).unwrap();
        let g = FieldCtx::prime(5).unwrap();
        assert_eq!(f.inv(&f.zero()), Err(Error::DivisionByZero));
        assert!(matches!(f.add(&f.one(), &g.one()), Err(Error::Context(_))));
        assert!(matches!(FieldCtx::rationals().elements().map(|_| ()), Err(Error::NotFinite)));
    }

    #[test]
    fn enumeration() {
        let f = FieldCtx::prime(3).unwrap();
        let codes: Vec<u32> = f.elements().unwrap().map(|e| e.code().unwrap()).collect();
        assert_eq!(codes, vec![0, 1, 2]);
        let gf4 = FieldCtx::extension(2, 2).unwrap();
        let all: Vec<_> = gf4.elements().unwrap().collect();
        assert_eq!(all.len(), 4);
        let distinct: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 4);
    }

    #[test]
    fn extension_text_roundtrip() {
        let gf9 = FieldCtx::extension(3, 2).unwrap();
        for e in gf9.elements().unwrap() {
            let text = e.to_string();
            assert_eq!(gf9.parse_element(&text).unwrap(), e, "{text}");
        }
        let t = gf9.generator().unwrap();
        assert_eq!(t.to_string(), "t");
    }

    #[test]
    fn generator_satisfies_modulus() {
        for (p, m) in [(2, 3), (3, 2), (5, 2), (2, 1), (7, 1)] {
            let f = FieldCtx::extension(p, m).unwrap();
            let t = f.generator().unwrap();
            let modulus = f.modulus().unwrap().to_vec();
            let mut acc = f.zero();
            for &c in modulus.iter().rev() {
                acc = f.add(&f.mul(&acc, &t).unwrap(), &f.from_integer(c as i64)).unwrap();
            }
            assert!(acc.is_zero(), "GF({p}^{m})");
        }
    }

    #[test]
    fn spec_strings() {
        assert_eq!("7".parse::<FieldCtx>().unwrap().to_string(), "GF(7)");
        assert_eq!("2:3".parse::<FieldCtx>().unwrap().to_string(), "GF(2^3)");
        assert_eq!("Q".parse::<FieldCtx>().unwrap().kind(), FieldKind::Rational);
        assert!("x".parse::<FieldCtx>().is_err());
        let json = serde_json::to_value("2:2".parse::<FieldCtx>().unwrap()).unwrap();
        assert_eq!(json, serde_json::json!({"kind": "extension", "p": 2, "m": 2, "modulus": [1, 1, 1]}));
    }
}
