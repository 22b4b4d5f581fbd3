//! Lengths `λ(G_ij)` of the graded pieces
//! `G_ij = (m^i I^j + I^(j+1)) / (m^(i+1) I^j + I^(j+1))`.
//!
//! Write `N = m^i I^j + I^(j+1)` and `D = m^(i+1) I^j + I^(j+1)`. Since
//! `m N ⊆ D`, a monomial of `N` that is a proper multiple of a minimal
//! generator of `N` already lies in `D`. So the monomials of `N \ D`, which
//! form a basis of `G_ij`, are exactly the minimal generators of `N` outside
//! `D`.
//!
//! For a whole column `j` at once: a monomial `u` of `I^j` lies in `m^k I^j`
//! iff `|u| - δ(u) >= k`, where `δ(u)` is the least degree of a generator of
//! `I^j` dividing `u`. Hence `λ(G_ij)` counts the monomials `u ∉ I^(j+1)`
//! with `|u| - δ(u) = i`. Each such `u` is `g + e` with `g` a generator and
//! `|e| = i`, so a box around the generators holds all of them, and `δ` and
//! membership in `I^(j+1)` are both computed by a sweep over that box.

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};

fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::ResourceCap { what, size, cap })
    } else {
        Ok(())
    }
}

/// `λ(G_ij)` through the generator sets of `N` and `D`.
pub(super) fn cell_by_generators(
    ideal: &MonomialIdeal,
    i: u32,
    j: u32,
    gen_cap: usize,
) -> Result<u64> {
    let pj = ideal.power(j)?;
    check_cap("generator set of I^j", pj.gens().len(), gen_cap)?;
    let next = pj.product(ideal)?;
    check_cap("generator set of I^(j+1)", next.gens().len(), gen_cap)?;
    let inner = pj.times_maximal_power(i)?;
    check_cap("generator set of m^i I^j", inner.gens().len(), gen_cap)?;
    let n = inner.sum(&next)?;
    let d = inner.times_maximal_power(1)?.sum(&next)?;
    let mut count = 0;
    for g in n.gens() {
        if !d.contains(g)? {
            count += 1;
        }
    }
    Ok(count)
}

/// `[λ(G_0j), ..., λ(G_{max_i,j})]` given the generators of `I^j` and
/// `I^(j+1)`.
pub(super) fn column(current: &[ExponentVector], next: &[ExponentVector], max_i: u32) -> Vec<u64> {
    let mut counts = vec![0u64; max_i as usize + 1];
    let Some(first) = current.first() else {
        return counts;
    };
    let d = first.len();
    let lo: Vec<u32> = (0..d)
        .map(|k| current.iter().map(|g| g.as_slice()[k]).min().unwrap_or(0))
        .collect();
    let hi: Vec<u32> = (0..d)
        .map(|k| current.iter().map(|g| g.as_slice()[k]).max().unwrap_or(0) + max_i)
        .collect();

    // The box is swept one layer (fixed first coordinate) at a time; the
    // remaining coordinates are flattened row-major into a layer index.
    let extent: Vec<usize> = (0..d).map(|k| (hi[k] - lo[k]) as usize + 1).collect();
    let mut stride = vec![0usize; d];
    let mut layer_len = 1usize;
    for k in (1..d).rev() {
        stride[k] = layer_len;
        layer_len *= extent[k];
    }
    let layer_index = |v: &[u32]| -> Option<usize> {
        let mut idx = 0;
        for k in 1..d {
            if v[k] > hi[k] {
                return None;
            }
            idx += (v[k] - lo[k]) as usize * stride[k];
        }
        Some(idx)
    };
    let mut seeds_current: Vec<Vec<(usize, u32)>> = vec![Vec::new(); extent[0]];
    for g in current {
        let v = g.as_slice();
        if let Some(idx) = layer_index(v) {
            seeds_current[(v[0] - lo[0]) as usize].push((idx, g.degree() as u32));
        }
    }
    let mut seeds_next: Vec<Vec<usize>> = vec![Vec::new(); extent[0]];
    for g in next {
        let v = g.as_slice();
        // generators of I^(j+1) are multiples of generators of I^j, so they
        // never fall below the box
        if v[0] > hi[0] {
            continue;
        }
        if let Some(idx) = layer_index(v) {
            seeds_next[(v[0] - lo[0]) as usize].push(idx);
        }
    }

    // Divisors of a cell have smaller degree, so cells above the largest
    // degree that can still be counted are never needed.
    let degree_cap = current.iter().map(|g| g.degree() as u32).max().unwrap_or(0) + max_i;

    const NONE: u32 = u32::MAX;
    let mut prev_best = vec![NONE; layer_len];
    let mut prev_in = vec![false; layer_len];
    let mut best = vec![NONE; layer_len];
    let mut inside = vec![false; layer_len];
    // Coordinates 1..d-1 pick a row of the layer; the last coordinate runs
    // along it. With d = 1 the layer is a single cell.
    let last = d - 1;
    let outer = if d >= 2 { 1..last } else { 1..1 };
    let mut coords = vec![0u32; d];
    let mut row_offsets: Vec<usize> = Vec::with_capacity(d);
    for x0 in 0..extent[0] {
        let layer_degree = lo[0] + x0 as u32;
        if layer_degree > degree_cap {
            break;
        }
        best.fill(NONE);
        inside.fill(false);
        for &(idx, deg) in &seeds_current[x0] {
            best[idx] = best[idx].min(deg);
        }
        for &idx in &seeds_next[x0] {
            inside[idx] = true;
        }
        let has_prev = x0 > 0;

        if d == 1 {
            let mut b = best[0];
            let mut n = inside[0];
            if has_prev {
                b = b.min(prev_best[0]);
                n |= prev_in[0];
            }
            best[0] = b;
            inside[0] = n;
            if b != NONE && !n && layer_degree - b <= max_i {
                counts[(layer_degree - b) as usize] += 1;
            }
        } else {
            coords[outer.clone()].copy_from_slice(&lo[outer.clone()]);
            'rows: loop {
                let mut row_degree = layer_degree;
                let mut row_start = 0;
                row_offsets.clear();
                for k in outer.clone() {
                    row_degree += coords[k];
                    row_start += (coords[k] - lo[k]) as usize * stride[k];
                    if coords[k] > lo[k] {
                        row_offsets.push(stride[k]);
                    }
                }
                row_degree += lo[last];
                if row_degree <= degree_cap {
                    let run = (hi[last] - lo[last]).min(degree_cap - row_degree) as usize;
                    for x in 0..=run {
                        let idx = row_start + x;
                        let mut b = best[idx];
                        let mut n = inside[idx];
                        if has_prev {
                            b = b.min(prev_best[idx]);
                            n |= prev_in[idx];
                        }
                        if x > 0 {
                            b = b.min(best[idx - 1]);
                            n |= inside[idx - 1];
                        }
                        for &off in &row_offsets {
                            b = b.min(best[idx - off]);
                            n |= inside[idx - off];
                        }
                        best[idx] = b;
                        inside[idx] = n;
                        if b != NONE && !n {
                            let ord = row_degree + x as u32 - b;
                            if ord <= max_i {
                                counts[ord as usize] += 1;
                            }
                        }
                    }
                }
                // next row: odometer over coordinates 1..last
                let mut k = last;
                loop {
                    if k == 1 {
                        break 'rows;
                    }
                    k -= 1;
                    if coords[k] < hi[k] {
                        coords[k] += 1;
                        break;
                    }
                    coords[k] = lo[k];
                }
            }
        }
        std::mem::swap(&mut prev_best, &mut best);
        std::mem::swap(&mut prev_in, &mut inside);
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::RingSpec;

    fn ideal(names: &[&str], pts: &[&[u32]]) -> MonomialIdeal {
        let r = RingSpec::new(names.iter().copied()).unwrap();
        MonomialIdeal::minimalize(pts.iter().map(|p| ExponentVector::new(p.to_vec())), &r).unwrap()
    }

    fn column_of(a: &MonomialIdeal, j: u32, max_i: u32) -> Vec<u64> {
        let pj = a.power(j).unwrap();
        let next = pj.product(a).unwrap();
        column(pj.gens(), next.gens(), max_i)
    }

    #[test]
    fn maximal_ideal_closed_form() {
        let m = ideal(&["x", "y"], &[&[1, 0], &[0, 1]]);
        for j in 0..6u32 {
            let col = column_of(&m, j, 5);
            assert_eq!(col[0], u64::from(j) + 1);
            assert!(col[1..].iter().all(|&v| v == 0));
            for i in 0..4 {
                assert_eq!(
                    cell_by_generators(&m, i, j, usize::MAX).unwrap(),
                    col[i as usize]
                );
            }
        }
    }

    #[test]
    fn x2_xy_closed_form() {
        let a = ideal(&["x", "y"], &[&[2, 0], &[1, 1]]);
        for j in 0..6u64 {
            let col = column_of(&a, j as u32, 6);
            assert_eq!(col[0], j + 1);
            assert_eq!(col[1], j + 2);
            assert!(col[2..].iter().all(|&v| v == 1));
            for i in 0..5 {
                assert_eq!(
                    cell_by_generators(&a, i, j as u32, usize::MAX).unwrap(),
                    col[i as usize]
                );
            }
        }
    }

    #[test]
    fn one_variable() {
        let a = ideal(&["x"], &[&[3]]);
        for j in 0..4 {
            assert_eq!(column_of(&a, j, 5), vec![1, 1, 1, 0, 0, 0]);
        }
    }

    #[test]
    fn origin_cell_is_one() {
        let a = ideal(&["a", "b", "c"], &[&[1, 2, 0], &[0, 0, 3], &[2, 0, 1]]);
        assert_eq!(column_of(&a, 0, 0), vec![1]);
        assert_eq!(cell_by_generators(&a, 0, 0, usize::MAX).unwrap(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let a = ideal(&["x", "y"], &[&[1, 0], &[0, 1]]);
        assert!(matches!(
            cell_by_generators(&a, 3, 5, 4),
            Err(Error::ResourceCap { .. })
        ));
    }
}
