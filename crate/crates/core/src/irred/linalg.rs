//! Dense linear algebra over a field context: affine solution sets.

use crate::field::{FieldCtx, FieldElement};

/// Solution set `particular + span(kernel)` of `matrix * x = rhs`.
pub(crate) struct AffineSolutions {
    pub particular: Vec<FieldElement>,
    pub kernel: Vec<Vec<FieldElement>>,
}

/// Gauss-Jordan elimination; `None` when the system is inconsistent.
pub(crate) fn solve(
    ctx: &FieldCtx,
    matrix: &[Vec<FieldElement>],
    rhs: &[FieldElement],
    ncols: usize,
) -> Option<AffineSolutions> {
    let nrows = matrix.len();
    let mut rows: Vec<Vec<FieldElement>> = matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(sel) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, sel);
        let inv = ctx.inv_raw(&rows[rank][col]).expect("nonzero pivot");
        for v in rows[rank].iter_mut() {
            *v = ctx.mul_raw(v, &inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, pv) in row[col..=ncols].iter_mut().zip(&pivot_row[col..=ncols]) {
                let delta = ctx.mul_raw(&factor, pv);
                *v = ctx.sub_raw(v, &delta);
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    if rows[rank..].iter().any(|r| !r[ncols].is_zero()) {
        return None;
    }
    let mut particular = vec![ctx.zero(); ncols];
    for (r, &col) in pivots.iter().enumerate() {
        particular[col] = rows[r][ncols].clone();
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![ctx.zero(); ncols];
            v[f] = ctx.one();
            for (r, &col) in pivots.iter().enumerate() {
                v[col] = ctx.neg_raw(&rows[r][f]);
            }
            v
        })
        .collect();
    Some(AffineSolutions { particular, kernel })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_and_spans_kernel() {
        let f = FieldCtx::prime(5).unwrap();
        let e = |x: i64| f.from_integer(x);
        // x + y = 3, 2x + 2y = 2 -> inconsistent
        let m = vec![vec![e(1), e(1)], vec![e(2), e(2)]];
        assert!(solve(&f, &m, &[e(3), e(2)], 2).is_none());
        // x + y = 3 alone: particular (3, 0), kernel (-1, 1)
        let sol = solve(&f, &m[..1], &[e(3)], 2).unwrap();
        assert_eq!(sol.particular, vec![e(3), e(0)]);
        assert_eq!(sol.kernel, vec![vec![e(4), e(1)]]);
    }

    #[test]
    fn empty_system() {
        let f = FieldCtx::prime(3).unwrap();
        let sol = solve(&f, &[], &[], 2).unwrap();
        assert_eq!(sol.kernel.len(), 2);
        assert!(solve(&f, &[vec![]], &[f.one()], 0).is_none());
        assert!(solve(&f, &[vec![]], &[f.zero()], 0).is_some());
    }
}
