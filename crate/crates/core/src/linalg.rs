//! Exact integer linear algebra: fraction-free (Bareiss) elimination for
//! ranks, determinants and square solves.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Bareiss elimination in place, pivoting only in the first `ncols` columns.
/// Returns the pivot columns and the number of row swaps. After the call, rows
/// `0..rank` are in echelon form.
fn bareiss(m: &mut [Vec<BigInt>], ncols: usize) -> (Vec<usize>, usize) {
    let nrows = m.len();
    let width = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let Some(p) = (row..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        if p != row {
            m.swap(p, row);
            swaps += 1;
        }
        for r in row + 1..nrows {
            for c in col + 1..width {
                let v = &m[row][col] * &m[r][c] - &m[r][col] * &m[row][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        pivots.push(col);
        row += 1;
    }
    (pivots, swaps)
}

pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let Some(ncols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut m = rows.to_vec();
    bareiss(&mut m, ncols).0.len()
}

/// Dimension of the affine hull of `points` (-1 is reported as 0 for an empty
/// set; callers never ask).
pub fn affine_rank<'a, I>(points: I) -> usize
where
    I: IntoIterator<Item = &'a [u32]>,
{
    let mut it = points.into_iter();
    let Some(base) = it.next() else {
        return 0;
    };
    let rows: Vec<Vec<BigInt>> = it
        .map(|p| {
            p.iter()
                .zip(base)
                .map(|(&a, &b)| BigInt::from(i64::from(a) - i64::from(b)))
                .collect()
        })
        .collect();
    rank(&rows)
}

pub fn determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = rows.to_vec();
    let (pivots, swaps) = bareiss(&mut m, n);
    if pivots.len() < n {
        return BigInt::zero();
    }
    let det = m[n - 1][n - 1].clone();
    if swaps % 2 == 1 {
        -det
    } else {
        det
    }
}

/// Solves the square system `a x = b` exactly; `None` if `a` is singular.
pub fn solve(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (pivots, _) = bareiss(&mut m, n);
    if pivots.len() < n {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for r in (0..n).rev() {
        let mut acc = BigRational::from_integer(m[r][n].clone());
        for c in r + 1..n {
            acc -= BigRational::from_integer(m[r][c].clone()) * &x[c];
        }
        x[r] = acc / BigRational::from_integer(m[r][r].clone());
    }
    Some(x)
}
