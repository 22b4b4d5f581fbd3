//! Multiplicity sequence through the bivariate Hilbert polynomial of
//! `G = gr_m(gr_I(R))`.
//!
//! The lengths `λ(G_ij)` are counted combinatorially, summed into
//! `h(m, n) = Σ_{i<=m, j<=n} λ(G_ij)`, and a polynomial of total degree `d` is
//! interpolated from the top-right corner of the grid and validated against
//! every other point of a surrounding window. When validation fails the grid
//! is doubled. The multiplicity sequence is then
//! `c_i = (d-i)! i! [m^(d-i) n^i] P`.

mod fit;
mod lambda;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;

pub use fit::{extract_coefficients, fit_bivariate, BivariatePolynomial, FitWindow};

/// Resource limits for the Hilbert driver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertConfig {
    /// Side of the first grid; `None` means `2d + 4`.
    pub initial_grid: Option<usize>,
    /// Largest grid side the driver may try.
    pub grid_cap: usize,
    /// Largest generator set any intermediate power may have.
    pub gen_cap: usize,
}

impl Default for HilbertConfig {
    fn default() -> Self {
        Self {
            initial_grid: None,
            grid_cap: 64,
            gen_cap: 2_000_000,
        }
    }
}

/// `values[i][j] = λ(G_ij)` for `i <= max_i`, `j <= max_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaTable {
    ideal: MonomialIdeal,
    values: Vec<Vec<u64>>,
}

impl LambdaTable {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn max_i(&self) -> usize {
        self.values.len() - 1
    }

    pub fn max_j(&self) -> usize {
        self.values[0].len() - 1
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.values[i][j]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.values
    }
}

/// The multiplicity sequence `c_0, ..., c_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicitySequence {
    c: Vec<u64>,
}

impl MultiplicitySequence {
    pub(crate) fn new(c: Vec<u64>) -> Self {
        Self { c }
    }

    /// Ambient dimension `d`; the sequence has `d + 1` entries.
    pub fn dim(&self) -> usize {
        self.c.len() - 1
    }

    pub fn get(&self, i: usize) -> u64 {
        self.c[i]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.c
    }

    /// `(i, c_i)` for the nonzero entries.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.c.iter().copied().enumerate().filter(|&(_, v)| v != 0)
    }

    /// `c_d`, the j-multiplicity.
    pub fn j_multiplicity(&self) -> u64 {
        self.c[self.dim()]
    }
}

/// A successful driver run: the sequence, the fitted polynomial and the grid
/// side it was validated on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceReport {
    pub sequence: MultiplicitySequence,
    pub polynomial: BivariatePolynomial,
    pub grid: usize,
}

/// `λ(G_ij)` for a single cell, from the minimal generators of
/// `N = m^i I^j + I^(j+1)` that lie outside `D = m^(i+1) I^j + I^(j+1)`.
pub fn lambda_cell(ideal: &MonomialIdeal, i: u32, j: u32) -> Result<u64> {
    ideal.require_proper_nonzero()?;
    lambda::cell_by_generators(ideal, i, j, HilbertConfig::default().gen_cap)
}

pub fn lambda_table(ideal: &MonomialIdeal, max_i: u32, max_j: u32) -> Result<LambdaTable> {
    lambda_table_with(ideal, max_i, max_j, &HilbertConfig::default())
}

/// Builds the table column by column; columns are independent and are
/// evaluated on the current rayon pool.
pub fn lambda_table_with(
    ideal: &MonomialIdeal,
    max_i: u32,
    max_j: u32,
    config: &HilbertConfig,
) -> Result<LambdaTable> {
    ideal.require_proper_nonzero()?;
    let mut powers = Vec::with_capacity(max_j as usize + 2);
    powers.push(MonomialIdeal::unit(ideal.ring()));
    for _ in 0..=max_j {
        let next = powers.last().expect("nonempty").product(ideal)?;
        if next.gens().len() > config.gen_cap {
            return Err(Error::ResourceCap {
                what: "generator set of a power of I",
                size: next.gens().len(),
                cap: config.gen_cap,
            });
        }
        powers.push(next);
    }
    let columns: Vec<Vec<u64>> = (0..=max_j as usize)
        .into_par_iter()
        .map(|j| lambda::column(powers[j].gens(), powers[j + 1].gens(), max_i))
        .collect();
    let values = (0..=max_i as usize)
        .map(|i| columns.iter().map(|col| col[i]).collect())
        .collect();
    Ok(LambdaTable {
        ideal: ideal.clone(),
        values,
    })
}

/// Two-dimensional prefix sums: `h[m][n] = Σ_{i<=m, j<=n} λ(G_ij)`.
pub fn sum_transform(table: &LambdaTable) -> Vec<Vec<u64>> {
    let rows = table.values.len();
    let cols = table.values[0].len();
    let mut h = vec![vec![0u64; cols]; rows];
    for m in 0..rows {
        let mut row_sum = 0;
        for (n, &v) in table.values[m].iter().enumerate() {
            row_sum += v;
            h[m][n] = row_sum + if m > 0 { h[m - 1][n] } else { 0 };
        }
    }
    h
}

/// Multiplicity sequence with the default configuration, memoized per ideal
/// for the life of the process.
pub fn multiplicity_sequence(ideal: &MonomialIdeal) -> Result<MultiplicitySequence> {
    static CACHE: OnceLock<SequenceCache> = OnceLock::new();
    let cache = CACHE.get_or_init(SequenceCache::default);
    cache
        .get_or_compute(ideal, &HilbertConfig::default())
        .map(|r| r.sequence)
}

/// `c_d(I)` computed through the Hilbert polynomial.
pub fn j_multiplicity(ideal: &MonomialIdeal) -> Result<u64> {
    Ok(multiplicity_sequence(ideal)?.j_multiplicity())
}

/// Memo of successful driver runs keyed by the canonical ideal.
#[derive(Debug, Default)]
pub struct SequenceCache {
    entries: Mutex<HashMap<MonomialIdeal, SequenceReport>>,
}

impl SequenceCache {
    pub fn get_or_compute(
        &self,
        ideal: &MonomialIdeal,
        config: &HilbertConfig,
    ) -> Result<SequenceReport> {
        if let Some(hit) = self.lock().get(ideal) {
            return Ok(hit.clone());
        }
        let report = multiplicity_sequence_with(ideal, config)?;
        self.lock().insert(ideal.clone(), report.clone());
        Ok(report)
    }

    pub fn len(&self) -> usize {
        self.lock().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, HashMap<MonomialIdeal, SequenceReport>> {
        // a panic while holding the lock cannot leave a half-written entry
        self.entries.lock().unwrap_or_else(|e| e.into_inner())
    }
}

/// The adaptive driver, uncached.
pub fn multiplicity_sequence_with(
    ideal: &MonomialIdeal,
    config: &HilbertConfig,
) -> Result<SequenceReport> {
    ideal.require_proper_nonzero()?;
    let d = ideal.dim();
    let margin = d + 2;
    let mut grid = config.initial_grid.unwrap_or(2 * d + 4).max(d + margin);
    loop {
        if grid > config.grid_cap {
            return Err(Error::GridCapExceeded {
                cap: config.grid_cap,
                last_grid: grid,
                detail: "initial grid already exceeds the cap".into(),
            });
        }
        let detail = match attempt(ideal, grid, margin, config)? {
            Ok(report) => return Ok(report),
            Err(detail) => detail,
        };
        if grid >= config.grid_cap {
            return Err(Error::GridCapExceeded {
                cap: config.grid_cap,
                last_grid: grid,
                detail,
            });
        }
        grid = (2 * grid).min(config.grid_cap);
    }
}

/// One fit on a `(grid+1) x (grid+1)` table. The inner `Err` describes why
/// the grid was not large enough.
fn attempt(
    ideal: &MonomialIdeal,
    grid: usize,
    margin: usize,
    config: &HilbertConfig,
) -> Result<std::result::Result<SequenceReport, String>> {
    let d = ideal.dim();
    let table = lambda_table_with(ideal, grid as u32, grid as u32, config)?;
    let h = sum_transform(&table);
    let lo = grid - (d + margin);
    let window = FitWindow {
        m_lo: lo,
        m_hi: grid,
        n_lo: lo,
        n_hi: grid,
    };
    let poly = match fit_bivariate(&h, d as u32, window) {
        Ok(p) => p,
        Err(Error::SingularSystem) => return Ok(Err("interpolation system is singular".into())),
        Err(e) => return Err(e),
    };
    let failing: Vec<String> = window
        .points()
        .filter(|&(m, n)| {
            poly.eval(m as u64, n as u64) != BigRational::from_integer(BigInt::from(h[m][n]))
        })
        .take(4)
        .map(|(m, n)| {
            format!(
                "h({m},{n})={} but P={}",
                h[m][n],
                poly.eval(m as u64, n as u64)
            )
        })
        .collect();
    if !failing.is_empty() {
        return Ok(Err(format!("validation failed: {}", failing.join("; "))));
    }
    match extract_coefficients(&poly, d as u32) {
        Ok(sequence) => Ok(Ok(SequenceReport {
            sequence,
            polynomial: poly,
            grid,
        })),
        Err(e @ (Error::NonIntegralCoefficient { .. } | Error::NegativeCoefficient { .. })) => {
            Ok(Err(e.to_string()))
        }
        Err(e) => Err(e),
    }
}
