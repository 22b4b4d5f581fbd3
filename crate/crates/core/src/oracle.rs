//! Brute-force reference computations, used to certify the fast paths in
//! tests. Nothing here shares code with the generator lemma of the Hilbert
//! module or with the polyhedral kernels: only ideal arithmetic and
//! membership tests are used.

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};

/// Upper bound on the number of monomials any single oracle call enumerates.
pub const ENUMERATION_CAP: usize = 20_000_000;

/// Calls `visit` on every exponent vector of length `d` and total degree at
/// most `max_degree` that lies in the box `prod [0, bounds_k]`.
fn for_each_monomial(
    d: usize,
    max_degree: u64,
    bounds: &[u32],
    mut visit: impl FnMut(&ExponentVector) -> Result<()>,
) -> Result<()> {
    let volume = bounds
        .iter()
        .try_fold(1usize, |acc, &b| acc.checked_mul(b as usize + 1));
    match volume {
        Some(v) if v <= ENUMERATION_CAP => {}
        _ => {
            return Err(Error::ResourceCap {
                what: "monomial enumeration",
                size: volume.unwrap_or(usize::MAX),
                cap: ENUMERATION_CAP,
            })
        }
    }
    let mut point = vec![0u32; d];
    loop {
        let v = ExponentVector::new(point.clone());
        if v.degree() <= max_degree {
            visit(&v)?;
        }
        let mut k = d;
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            if point[k] < bounds[k] {
                point[k] += 1;
                break;
            }
            point[k] = 0;
        }
    }
}

/// `λ(G_ij)` by counting every monomial of `N = m^i I^j + I^(j+1)` outside
/// `D = m^(i+1) I^j + I^(j+1)`.
///
/// Every such monomial is a minimal generator of `N`, so it has degree at
/// most the largest generator degree of `N` and sits inside the box spanned
/// by the generators' exponents; the enumeration covers exactly that region.
pub fn brute_lambda(ideal: &MonomialIdeal, i: u32, j: u32) -> Result<u64> {
    ideal.require_proper_nonzero()?;
    let pj = ideal.power(j)?;
    let next = ideal.power(j + 1)?;
    let n = pj.times_maximal_power(i)?.sum(&next)?;
    let d_ideal = pj.times_maximal_power(i + 1)?.sum(&next)?;
    let dim = ideal.dim();
    let max_degree = n
        .gens()
        .iter()
        .map(ExponentVector::degree)
        .max()
        .unwrap_or(0);
    let bounds: Vec<u32> = (0..dim)
        .map(|k| n.gens().iter().map(|g| g.as_slice()[k]).max().unwrap_or(0))
        .collect();
    let mut count = 0;
    for_each_monomial(dim, max_degree, &bounds, |u| {
        if n.contains(u)? && !d_ideal.contains(u)? {
            count += 1;
        }
        Ok(())
    })?;
    Ok(count)
}

/// Number of minimal generators of `I^n` for `n = 1..=n_max`.
pub fn generator_counts(ideal: &MonomialIdeal, n_max: u32) -> Result<Vec<u64>> {
    ideal.require_proper_nonzero()?;
    let mut out = Vec::with_capacity(n_max as usize);
    let mut p = ideal.clone();
    for n in 1..=n_max {
        if n > 1 {
            p = p.product(ideal)?;
        }
        out.push(p.gens().len() as u64);
    }
    Ok(out)
}

/// Analytic spread from the growth of `μ(I^n)`, a polynomial in `n` of degree
/// `ℓ(I) - 1` for large `n`.
///
/// Returns `e + 1` for the least `e` whose `e`-th differences are positive
/// and constant on the last three terms.
pub fn mu_growth_spread(ideal: &MonomialIdeal, n_max: u32) -> Result<usize> {
    let d = ideal.dim();
    if (n_max as usize) < d + 3 {
        return Err(Error::Inconclusive(n_max as usize));
    }
    let mut seq: Vec<i128> = generator_counts(ideal, n_max)?
        .into_iter()
        .map(i128::from)
        .collect();
    for e in 0..d {
        if seq.len() < 3 {
            break;
        }
        let tail = &seq[seq.len() - 3..];
        if tail[0] > 0 && tail.iter().all(|&v| v == tail[0]) {
            return Ok(e + 1);
        }
        seq = seq.windows(2).map(|w| w[1] - w[0]).collect();
    }
    Err(Error::Inconclusive(n_max as usize))
}

/// Number of monomials of degree at most `degree_cap` outside the ideal.
pub fn standard_monomial_count(ideal: &MonomialIdeal, degree_cap: u32) -> Result<u64> {
    ideal.require_proper_nonzero()?;
    let d = ideal.dim();
    let bounds = vec![degree_cap; d];
    let mut count = 0;
    for_each_monomial(d, u64::from(degree_cap), &bounds, |u| {
        if !ideal.contains(u)? {
            count += 1;
        }
        Ok(())
    })?;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::RingSpec;

    fn ideal(names: &[&str], pts: &[&[u32]]) -> MonomialIdeal {
        let r = RingSpec::new(names.iter().copied()).unwrap();
        MonomialIdeal::minimalize(pts.iter().map(|p| ExponentVector::new(p.to_vec())), &r).unwrap()
    }

    #[test]
    fn brute_lambda_examples() {
        let m = ideal(&["x", "y"], &[&[1, 0], &[0, 1]]);
        assert_eq!(brute_lambda(&m, 0, 3).unwrap(), 4);
        assert_eq!(brute_lambda(&m, 2, 1).unwrap(), 0);
        let a = ideal(&["x", "y"], &[&[2, 0], &[1, 1]]);
        assert_eq!(brute_lambda(&a, 2, 0).unwrap(), 1);
    }

    #[test]
    fn brute_lambda_closed_forms() {
        let a = ideal(&["x", "y"], &[&[2, 0], &[1, 1]]);
        for j in 0..5u64 {
            assert_eq!(brute_lambda(&a, 0, j as u32).unwrap(), j + 1);
            assert_eq!(brute_lambda(&a, 1, j as u32).unwrap(), j + 2);
            assert_eq!(brute_lambda(&a, 3, j as u32).unwrap(), 1);
        }
    }

    #[test]
    fn spread_by_growth() {
        let m = ideal(&["x", "y"], &[&[1, 0], &[0, 1]]);
        assert_eq!(mu_growth_spread(&m, 6).unwrap(), 2);
        let x = ideal(&["x", "y"], &[&[1, 0]]);
        assert_eq!(mu_growth_spread(&x, 6).unwrap(), 1);
        let p = ideal(
            &["a", "b", "c", "d"],
            &[&[1, 2, 0, 0], &[0, 1, 3, 0], &[0, 0, 1, 4], &[5, 0, 0, 1]],
        );
        assert_eq!(mu_growth_spread(&p, 8).unwrap(), 4);
        assert_eq!(mu_growth_spread(&m, 3), Err(Error::Inconclusive(3)));
    }

    #[test]
    fn standard_monomials() {
        let m = ideal(&["x", "y"], &[&[1, 0], &[0, 1]]);
        assert_eq!(standard_monomial_count(&m, 10).unwrap(), 1);
        let b = ideal(&["x", "y"], &[&[2, 0], &[0, 2]]);
        assert_eq!(standard_monomial_count(&b, 10).unwrap(), 4);
        let x = ideal(&["x", "y"], &[&[1, 0]]);
        assert_eq!(standard_monomial_count(&x, 3).unwrap(), 4);
    }
}
