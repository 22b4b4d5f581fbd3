//! Exact phase-one simplex: decides feasibility of `A x = b, x >= 0`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Returns whether `{x >= 0 : a x = b}` is nonempty. Uses Bland's rule, so it
/// terminates on degenerate problems.
pub fn is_feasible(a: &[Vec<BigInt>], b: &[BigInt]) -> bool {
    let rows = a.len();
    if rows == 0 {
        return true;
    }
    let vars = a[0].len();
    // Columns: original vars, then one artificial per row, then the rhs.
    let width = vars + rows + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(rows + 1);
    for (r, (row, rhs)) in a.iter().zip(b).enumerate() {
        let flip = rhs.is_negative();
        let mut line = vec![BigRational::zero(); width];
        for (c, v) in row.iter().enumerate() {
            let v = BigRational::from_integer(v.clone());
            line[c] = if flip { -v } else { v };
        }
        line[vars + r] = BigRational::from_integer(1.into());
        let rhs = BigRational::from_integer(rhs.clone());
        line[width - 1] = if flip { -rhs } else { rhs };
        t.push(line);
    }
    // Objective: minimise the sum of artificials, written in terms of the
    // non-basic columns.
    let mut obj = vec![BigRational::zero(); width];
    for line in &t {
        for c in 0..vars {
            obj[c] -= &line[c];
        }
        obj[width - 1] -= &line[width - 1];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (vars..vars + rows).collect();

    while let Some(enter) = (0..vars + rows).find(|&c| t[rows][c].is_negative()) {
        let mut leave: Option<(usize, BigRational)> = None;
        for r in 0..rows {
            if t[r][enter].is_positive() {
                let ratio = &t[r][width - 1] / &t[r][enter];
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && basis[r] < basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
        }
        // Phase one is bounded below by zero, so an entering column always
        // has a positive entry.
        let (pr, _) = leave.expect("phase-one objective is bounded");
        let pivot = t[pr][enter].clone();
        for v in t[pr].iter_mut() {
            *v /= &pivot;
        }
        let prow = t[pr].clone();
        for (r, line) in t.iter_mut().enumerate() {
            if r == pr || line[enter].is_zero() {
                continue;
            }
            let f = line[enter].clone();
            for (v, p) in line.iter_mut().zip(&prow) {
                *v -= &f * p;
            }
        }
        basis[pr] = enter;
    }
    t[rows][width - 1].is_zero()
}
