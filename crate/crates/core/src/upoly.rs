//! Dense univariate polynomials over a prime field GF(p).
//!
//! Coefficients are stored little-endian (index = degree) with no trailing
//! zeros; the zero polynomial is the empty vector.

pub(crate) fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p as u64 - 2, p)
}

pub(crate) fn pow_mod(a: u32, mut e: u64, p: u32) -> u32 {
    let p64 = p as u64;
    let mut base = a as u64 % p64;
    let mut acc = 1 % p64;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p64;
        }
        base = base * base % p64;
        e >>= 1;
    }
    acc as u32
}

/// Remainder of `a` modulo nonzero `b`.
pub(crate) fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let p64 = p as u64;
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p) as u64;
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = r[dr] as u64 * lead_inv % p64;
        let shift = dr - db;
        for (i, &bc) in b.iter().enumerate() {
            let sub = factor * bc as u64 % p64;
            let slot = &mut r[shift + i];
            *slot = ((*slot as u64 + p64 - sub) % p64) as u32;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn make_monic(a: Vec<u32>, p: u32) -> Vec<u32> {
    match a.last() {
        None => a,
        Some(&lead) => {
            let inv = inv_mod(lead, p) as u64;
            a.into_iter()
                .map(|c| (c as u64 * inv % p as u64) as u32)
                .collect()
        }
    }
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    make_monic(x, p)
}

pub(crate) fn derivative(a: &[u32], p: u32) -> Vec<u32> {
    let p64 = p as u64;
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| ((i as u64 % p64) * c as u64 % p64) as u32)
            .collect(),
    )
}

/// The monic polynomial of degree `deg` whose lower coefficients are the
/// base-p digits of `index` (least significant digit = constant term).
pub(crate) fn monic_from_index(deg: usize, mut index: u64, p: u32) -> Vec<u32> {
    let mut coeffs = Vec::with_capacity(deg + 1);
    for _ in 0..deg {
        coeffs.push((index % p as u64) as u32);
        index /= p as u64;
    }
    coeffs.push(1);
    coeffs
}

/// Irreducibility by exhaustive trial division with every monic polynomial
/// of degree 1..=deg/2.
pub(crate) fn is_irreducible_by_trial(f: &[u32], p: u32) -> bool {
    let deg = f.len().saturating_sub(1);
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for index in 0..count {
            let g = monic_from_index(d, index, p);
            if rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}
