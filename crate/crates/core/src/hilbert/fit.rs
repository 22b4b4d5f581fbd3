use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::MultiplicitySequence;
use crate::error::{Error, Result};
use crate::linalg;

/// Polynomial in `(m, n)` with rational coefficients and total degree at most
/// `degree_bound`. Keys are exponent pairs `(a, b)` of `m^a n^b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariatePolynomial {
    degree_bound: u32,
    coeffs: BTreeMap<(u32, u32), BigRational>,
}

impl BivariatePolynomial {
    pub fn new(degree_bound: u32, coeffs: BTreeMap<(u32, u32), BigRational>) -> Result<Self> {
        if let Some(&(a, b)) = coeffs.keys().find(|&&(a, b)| a + b > degree_bound) {
            return Err(Error::InvalidFitWindow(format!(
                "term m^{a} n^{b} exceeds degree bound {degree_bound}"
            )));
        }
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Self {
            degree_bound,
            coeffs,
        })
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    /// Coefficient of `m^a n^b`.
    pub fn coeff(&self, a: u32, b: u32) -> BigRational {
        self.coeffs
            .get(&(a, b))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.coeffs.iter()
    }

    pub fn eval(&self, m: u64, n: u64) -> BigRational {
        let m = BigInt::from(m);
        let n = BigInt::from(n);
        self.coeffs
            .iter()
            .map(|(&(a, b), c)| c * BigRational::from_integer(m.pow(a) * n.pow(b)))
            .fold(BigRational::zero(), |acc, t| acc + t)
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        // highest total degree first
        let mut terms: Vec<_> = self.coeffs.iter().collect();
        terms.sort_by_key(|(k, _)| std::cmp::Reverse((k.0 + k.1, k.0)));
        for (i, (&(a, b), c)) in terms.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})")?;
            if a > 0 {
                write!(f, "*m^{a}")?;
            }
            if b > 0 {
                write!(f, "*n^{b}")?;
            }
        }
        Ok(())
    }
}

/// Inclusive rectangle `[m_lo, m_hi] x [n_lo, n_hi]` of grid indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FitWindow {
    pub m_lo: usize,
    pub m_hi: usize,
    pub n_lo: usize,
    pub n_hi: usize,
}

impl FitWindow {
    pub fn points(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (self.m_lo..=self.m_hi).flat_map(move |m| (self.n_lo..=self.n_hi).map(move |n| (m, n)))
    }
}

/// Interpolates a polynomial of total degree `<= degree` through the values
/// `h[m][n]` on the triangle `{(m_hi - a, n_hi - b) : a + b <= degree}` at the
/// top-right corner of `window`. The triangle is unisolvent for that space;
/// should the solve still fail, the corner is shifted diagonally inward.
pub fn fit_bivariate(
    h: &[Vec<u64>],
    degree: u32,
    window: FitWindow,
) -> Result<BivariatePolynomial> {
    let deg = degree as usize;
    let width = h.first().map_or(0, Vec::len);
    if window.m_lo > window.m_hi
        || window.n_lo > window.n_hi
        || window.m_hi >= h.len()
        || window.n_hi >= width
    {
        return Err(Error::InvalidFitWindow(format!(
            "{window:?} does not fit in a {}x{width} grid",
            h.len()
        )));
    }
    let span = (window.m_hi - window.m_lo).min(window.n_hi - window.n_lo);
    if span < deg {
        return Err(Error::InvalidFitWindow(format!(
            "{window:?} holds fewer than {} interpolation points",
            (deg + 1) * (deg + 2) / 2
        )));
    }

    let basis: Vec<(u32, u32)> = (0..=degree)
        .flat_map(|t| (0..=t).map(move |b| (t - b, b)))
        .collect();
    for shift in 0..=span - deg {
        let (mc, nc) = (window.m_hi - shift, window.n_hi - shift);
        let points: Vec<(usize, usize)> = (0..=deg)
            .flat_map(|t| (0..=t).map(move |b| (mc - (t - b), nc - b)))
            .collect();
        let a: Vec<Vec<BigInt>> = points
            .iter()
            .map(|&(m, n)| {
                basis
                    .iter()
                    .map(|&(ea, eb)| BigInt::from(m).pow(ea) * BigInt::from(n).pow(eb))
                    .collect()
            })
            .collect();
        let rhs: Vec<BigInt> = points.iter().map(|&(m, n)| BigInt::from(h[m][n])).collect();
        if let Some(x) = linalg::solve(&a, &rhs) {
            return BivariatePolynomial::new(degree, basis.into_iter().zip(x).collect());
        }
    }
    Err(Error::SingularSystem)
}

fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Reads `c_i = (d-i)! i! * [m^(d-i) n^i] P` for `0 <= i <= d`.
pub fn extract_coefficients(p: &BivariatePolynomial, d: u32) -> Result<MultiplicitySequence> {
    let mut c = Vec::with_capacity(d as usize + 1);
    for i in 0..=d {
        let value = p.coeff(d - i, i) * BigRational::from_integer(factorial(d - i) * factorial(i));
        let index = i as usize;
        if !value.is_integer() {
            return Err(Error::NonIntegralCoefficient {
                index,
                value: value.to_string(),
            });
        }
        if value.is_negative() {
            return Err(Error::NegativeCoefficient {
                index,
                value: value.to_string(),
            });
        }
        let v = value
            .to_integer()
            .to_u64()
            .ok_or_else(|| Error::CoefficientOverflow {
                index,
                value: value.to_string(),
            })?;
        c.push(v);
    }
    Ok(MultiplicitySequence::new(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn grid(size: usize, f: impl Fn(u64, u64) -> u64) -> Vec<Vec<u64>> {
        (0..size)
            .map(|m| (0..size).map(|n| f(m as u64, n as u64)).collect())
            .collect()
    }

    fn whole(size: usize) -> FitWindow {
        FitWindow {
            m_lo: 0,
            m_hi: size - 1,
            n_lo: 0,
            n_hi: size - 1,
        }
    }

    #[test]
    fn fits_triangular_numbers() {
        let h = grid(8, |_, n| (n + 1) * (n + 2) / 2);
        let p = fit_bivariate(&h, 2, whole(8)).unwrap();
        assert_eq!(p.coeff(0, 2), q(1, 2));
        assert_eq!(p.coeff(0, 1), q(3, 2));
        assert_eq!(p.coeff(0, 0), q(1, 1));
        assert_eq!(p.terms().count(), 3);
        for m in 0..8 {
            for n in 0..8 {
                assert_eq!(
                    p.eval(m, n),
                    BigRational::from_integer(h[m as usize][n as usize].into())
                );
            }
        }
    }

    #[test]
    fn fits_constant_and_product() {
        let p = fit_bivariate(&grid(3, |_, _| 1), 0, whole(3)).unwrap();
        assert_eq!(p.coeff(0, 0), q(1, 1));
        assert_eq!(p.terms().count(), 1);

        let p = fit_bivariate(&grid(6, |m, n| (m + 1) * (n + 1)), 2, whole(6)).unwrap();
        assert_eq!(p.coeff(1, 1), q(1, 1));
        assert_eq!(p.coeff(1, 0), q(1, 1));
        assert_eq!(p.coeff(0, 1), q(1, 1));
        assert_eq!(p.coeff(0, 0), q(1, 1));
        assert_eq!(p.terms().count(), 4);
    }

    #[test]
    fn window_must_hold_enough_points() {
        let h = grid(4, |m, n| m + n);
        let narrow = FitWindow {
            m_lo: 2,
            m_hi: 3,
            n_lo: 0,
            n_hi: 3,
        };
        assert!(matches!(
            fit_bivariate(&h, 2, narrow),
            Err(Error::InvalidFitWindow(_))
        ));
        let outside = FitWindow {
            m_lo: 0,
            m_hi: 4,
            n_lo: 0,
            n_hi: 3,
        };
        assert!(matches!(
            fit_bivariate(&h, 1, outside),
            Err(Error::InvalidFitWindow(_))
        ));
    }

    fn poly(d: u32, terms: &[((u32, u32), BigRational)]) -> BivariatePolynomial {
        BivariatePolynomial::new(d, terms.iter().cloned().collect()).unwrap()
    }

    #[test]
    fn extraction_examples() {
        let p = poly(2, &[((0, 2), q(1, 2))]);
        assert_eq!(extract_coefficients(&p, 2).unwrap().as_slice(), &[0, 0, 1]);

        let p = poly(
            2,
            &[((0, 2), q(1, 1)), ((1, 1), q(1, 1)), ((0, 1), q(3, 1))],
        );
        assert_eq!(extract_coefficients(&p, 2).unwrap().as_slice(), &[0, 1, 2]);

        let p = poly(1, &[]);
        assert_eq!(extract_coefficients(&p, 1).unwrap().as_slice(), &[0, 0]);
    }

    #[test]
    fn extraction_rejects_bad_fits() {
        let p = poly(2, &[((1, 1), q(1, 3))]);
        assert!(matches!(
            extract_coefficients(&p, 2),
            Err(Error::NonIntegralCoefficient { index: 1, .. })
        ));
        let p = poly(2, &[((2, 0), q(-1, 2))]);
        assert!(matches!(
            extract_coefficients(&p, 2),
            Err(Error::NegativeCoefficient { index: 0, .. })
        ));
    }

    #[test]
    fn degree_bound_is_enforced() {
        let terms: BTreeMap<_, _> = [((2, 1), q(1, 1))].into_iter().collect();
        assert!(BivariatePolynomial::new(2, terms).is_err());
    }
}
