//! Canonical text form: `2*x0^3*x1 + x1*x2^2 + 1`.
//!
//! Terms appear in descending graded-lex order. Extension-field
//! coefficients with more than one power-basis term are parenthesized,
//! e.g. `(1+t)*x0`.

use super::{Exponents, MPoly};
use crate::error::{Error, Result};
use crate::field::FieldCtx;

fn monomial_text(e: &Exponents) -> String {
    e.as_slice()
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| if k == 1 { format!("x{i}") } else { format!("x{i}^{k}") })
        .collect::<Vec<_>>()
        .join("*")
}

pub(super) fn format(poly: &MPoly) -> String {
    if poly.is_zero() {
        return "0".to_string();
    }
    let ctx = poly.ctx();
    let mut out = String::new();
    for (idx, (e, c)) in poly.terms().enumerate() {
        let negative = c.is_negative();
        let magnitude = if negative { ctx.neg_raw(c) } else { c.clone() };
        let mono = monomial_text(e);
        let coeff = if magnitude.is_compound() {
            format!("({magnitude})")
        } else {
            magnitude.to_string()
        };
        let body = match (mono.is_empty(), magnitude.is_one()) {
            (true, _) => coeff,
            (false, true) => mono,
            (false, false) => format!("{coeff}*{mono}"),
        };
        match (idx, negative) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

/// Split at top-level `+`/`-` into signed pieces.
fn split_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut pieces = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut negative = false;
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse("unbalanced ')'".into()));
                }
                current.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if current.trim().is_empty() {
                    if !pieces.is_empty() || ch == '+' {
                        return Err(Error::Parse(format!("dangling '{ch}' in '{s}'")));
                    }
                    negative = ch == '-';
                } else {
                    pieces.push((negative, std::mem::take(&mut current)));
                    negative = ch == '-';
                }
            }
            c if c.is_whitespace() => {}
            c => current.push(c),
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced '('".into()));
    }
    if current.is_empty() {
        return Err(Error::Parse(format!("missing term in '{s}'")));
    }
    pieces.push((negative, current));
    Ok(pieces)
}

fn split_factors(term: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, ch) in term.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => {
                out.push(&term[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&term[start..]);
    out
}

pub(super) fn parse(ctx: &FieldCtx, nvars: usize, s: &str) -> Result<MPoly> {
    let mut acc = MPoly::zero(ctx, nvars);
    for (negative, term) in split_terms(s)? {
        let mut coeff = ctx.one();
        let mut exps = Exponents::zeros(nvars);
        for factor in split_factors(&term) {
            if factor.is_empty() {
                return Err(Error::Parse(format!("empty factor in '{term}'")));
            }
            if let Some(rest) = factor.strip_prefix('x') {
                let (idx, pow) = match rest.split_once('^') {
                    Some((i, k)) => (i, k),
                    None => (rest, "1"),
                };
                let idx: usize = idx
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad variable '{factor}'")))?;
                let pow: u32 = pow
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in '{factor}'")))?;
                if idx >= nvars {
                    return Err(Error::Parse(format!(
                        "variable x{idx} outside a {nvars}-variable ring"
                    )));
                }
                exps.set(idx, exps.get(idx) + pow);
            } else {
                let c = ctx.parse_element(factor)?;
                coeff = ctx.mul_raw(&coeff, &c);
            }
        }
        if negative {
            coeff = ctx.neg_raw(&coeff);
        }
        acc.add_term(exps, coeff);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rendering() {
        let f = FieldCtx::prime(7).unwrap();
        let p = parse(&f, 3, "1 + x1*x2^2 + 2*x0^3*x1").unwrap();
        assert_eq!(format(&p), "2*x0^3*x1 + x1*x2^2 + 1");
    }

    #[test]
    fn rational_signs() {
        let q = FieldCtx::rationals();
        let p = parse(&q, 2, "-x0^2 + 1/2*x1 - 3").unwrap();
        assert_eq!(format(&p), "-x0^2 + 1/2*x1 - 3");
        assert_eq!(parse(&q, 2, &format(&p)).unwrap(), p);
    }

    #[test]
    fn extension_coefficients() {
        let f = FieldCtx::extension(2, 2).unwrap();
        let p = parse(&f, 2, "(1+t)*x0 + t*x1 + 1").unwrap();
        assert_eq!(format(&p), "(1+t)*x0 + t*x1 + 1");
        assert_eq!(parse(&f, 2, &format(&p)).unwrap(), p);
    }

    #[test]
    fn residues_reduce_and_cancel() {
        let f = FieldCtx::prime(3).unwrap();
        assert_eq!(format(&parse(&f, 1, "4*x0 + 2*x0").unwrap()), "0");
        assert_eq!(format(&parse(&f, 1, "x0 - x0^2").unwrap()), "2*x0^2 + x0");
    }

    #[test]
    fn rejects_garbage() {
        let q = FieldCtx::rationals();
        assert!(parse(&q, 2, "x2").is_err());
        assert!(parse(&q, 2, "x0 +").is_err());
        assert!(parse(&q, 2, "(x0").is_err());
        assert!(parse(&q, 2, "y").is_err());
    }
}
