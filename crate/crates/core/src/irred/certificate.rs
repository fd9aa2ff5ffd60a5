//! One-sided irreducibility certificates through binary specializations.
//!
//! If `P = A * B` with both factors of positive degree, any linear
//! substitution that keeps the total degree of `P` keeps both degrees, so
//! the image is reducible too. An irreducible image therefore proves `P`
//! irreducible; a reducible image proves nothing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::binary::binary_divisors;
use crate::error::{Error, Result};
use crate::mpoly::MPoly;

/// Substitutions tried before giving up.
pub const CERTIFICATE_ATTEMPTS: u32 = 32;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status")]
pub enum Certificate {
    /// `x_i -> alpha_i x0 + beta_i x1` for `i >= 2` maps `P` to an
    /// irreducible binary form of the same degree.
    Certified {
        attempt: u32,
        alpha: Vec<String>,
        beta: Vec<String>,
        image: String,
    },
    Unknown {
        attempts: u32,
    },
}

impl Certificate {
    pub fn is_certified(&self) -> bool {
        matches!(self, Certificate::Certified { .. })
    }
}

pub fn specialization_certificate(p: &MPoly, seed: u64) -> Result<Certificate> {
    let ctx = p.ctx();
    let n = p.nvars();
    if !ctx.is_finite() {
        return Err(Error::BadParameter("certificates need a finite field".into()));
    }
    if n < 3 {
        return Err(Error::BadParameter("certificates need at least three variables".into()));
    }
    if p.is_zero() || !p.is_homogeneous() {
        return Err(Error::BadParameter("polynomial is not a nonzero form".into()));
    }
    let total = p.total_degree()? as u32;
    let order = ctx.order().expect("finite field");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..CERTIFICATE_ATTEMPTS {
        let mut alpha = Vec::with_capacity(n - 2);
        let mut beta = Vec::with_capacity(n - 2);
        let mut images = vec![MPoly::var(ctx, n, 0), MPoly::var(ctx, n, 1)];
        for _ in 2..n {
            let a = ctx.from_code(rng.gen_range(0..order) as u32)?;
            let b = ctx.from_code(rng.gen_range(0..order) as u32)?;
            let img = MPoly::var(ctx, n, 0).scale(&a)?.add(&MPoly::var(ctx, n, 1).scale(&b)?)?;
            images.push(img);
            alpha.push(a);
            beta.push(b);
        }
        let image = p.compose(&images)?;
        if image.is_zero() || image.total_degree()? as u32 != total {
            continue;
        }
        // a monomial factor makes the image reducible unless it is the whole form
        if total >= 2 && (image.mindeg(0)? > 0 || image.mindeg(1)? > 0) {
            continue;
        }
        let mut tested = 0;
        let irreducible = (1..=total / 2).all(|d| binary_divisors(&image, 0, 1, d, &mut tested).is_empty());
        if irreducible {
            return Ok(Certificate::Certified {
                attempt,
                alpha: alpha.iter().map(|a| a.to_string()).collect(),
                beta: beta.iter().map(|b| b.to_string()).collect(),
                image: image.to_string(),
            });
        }
    }
    Ok(Certificate::Unknown {
        attempts: CERTIFICATE_ATTEMPTS,
    })
}
