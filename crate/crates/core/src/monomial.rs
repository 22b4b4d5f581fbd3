//! Monomials and monomial ideals of a polynomial ring `k[x_1, ..., x_d]`.
//!
//! The coefficient field never enters: every quantity computed downstream is a
//! count of monomials. An ideal is stored as its unique antichain of minimal
//! exponent vectors, sorted canonically, so structural equality is ideal
//! equality.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

pub type Exponent = u32;

/// Ordered, named variables of the ambient polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    names: Arc<[String]>,
}

impl RingSpec {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing(
                "at least one variable is required".into(),
            ));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!(
                    "variable name {name:?} is not an identifier"
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("duplicate variable {name:?}")));
            }
        }
        Ok(Self {
            names: names.into(),
        })
    }

    /// Ring with variables `x1, ..., xd`.
    pub fn with_dimension(d: usize) -> Result<Self> {
        Self::new((1..=d).map(|i| format!("x{i}")))
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub(crate) fn check(&self, v: &ExponentVector) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_alphanumeric() || c == '_')
}

/// Exponent vector of a monomial.
///
/// Ordered by total degree first; within a degree the lexicographically larger
/// vector comes first, so `x^2 < x*y < y^2` in two variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<Exponent>);

impl ExponentVector {
    pub fn new(exps: Vec<Exponent>) -> Self {
        Self(exps)
    }

    pub fn zero(d: usize) -> Self {
        Self(vec![0; d])
    }

    pub fn unit(d: usize, k: usize) -> Self {
        let mut v = vec![0; d];
        v[k] = 1;
        Self(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Exponent] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// `self | other`, i.e. componentwise `self <= other`.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    pub fn checked_scale(&self, k: Exponent) -> Result<Self> {
        self.0
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }

    /// Indices of variables with a positive exponent, as a bit mask.
    pub(crate) fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (k, _)| m | (1 << k))
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<Exponent>> for ExponentVector {
    fn from(v: Vec<Exponent>) -> Self {
        Self(v)
    }
}

impl<const N: usize> From<[Exponent; N]> for ExponentVector {
    fn from(v: [Exponent; N]) -> Self {
        Self(v.to_vec())
    }
}

/// Monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: RingSpec,
    gens: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// The ideal generated by `points`, reduced to its minimal generators.
    pub fn minimalize<I>(points: I, ring: &RingSpec) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        let points = points
            .into_iter()
            .map(|p| ring.check(&p).map(|_| p))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            ring: ring.clone(),
            gens: minimal_elements(points),
        })
    }

    pub fn zero(ring: &RingSpec) -> Self {
        Self {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &RingSpec) -> Self {
        Self {
            ring: ring.clone(),
            gens: vec![ExponentVector::zero(ring.dim())],
        }
    }

    /// The homogeneous maximal ideal `(x_1, ..., x_d)`.
    pub fn maximal(ring: &RingSpec) -> Self {
        let d = ring.dim();
        let mut gens: Vec<_> = (0..d).map(|k| ExponentVector::unit(d, k)).collect();
        gens.sort();
        Self {
            ring: ring.clone(),
            gens,
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.ring.dim()
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    /// Errors unless the ideal is proper and nonzero.
    pub fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_unit() {
            Err(Error::UnitIdeal)
        } else {
            Ok(())
        }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(Self {
            ring: self.ring.clone(),
            gens: minimal_elements(self.gens.iter().chain(&other.gens).cloned().collect()),
        })
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut points = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                points.push(a.checked_add(b)?);
            }
        }
        Ok(Self {
            ring: self.ring.clone(),
            gens: minimal_elements(points),
        })
    }

    pub fn power(&self, k: u32) -> Result<Self> {
        let mut acc = Self::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `m^i * self` where `m` is the maximal ideal.
    pub fn times_maximal_power(&self, i: u32) -> Result<Self> {
        let d = self.dim();
        let mut gens = self.gens.clone();
        for _ in 0..i {
            let mut next = Vec::with_capacity(gens.len() * d);
            for g in &gens {
                for k in 0..d {
                    let mut e = g.0.clone();
                    e[k] = e[k].checked_add(1).ok_or(Error::ExponentOverflow)?;
                    next.push(ExponentVector(e));
                }
            }
            gens = minimal_elements(next);
        }
        Ok(Self {
            ring: self.ring.clone(),
            gens,
        })
    }

    pub fn contains(&self, v: &ExponentVector) -> Result<bool> {
        self.ring.check(v)?;
        Ok(self.gens.iter().any(|g| g.divides(v)))
    }

    /// Equality that refuses to compare ideals of different rings.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.same_ring(other)?;
        Ok(self.gens == other.gens)
    }

    /// Whether `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Self) -> Result<bool> {
        self.same_ring(other)?;
        Ok(other
            .gens
            .iter()
            .all(|v| self.gens.iter().any(|g| g.divides(v))))
    }

    /// True iff a pure power of every variable is among the generators.
    pub fn is_m_primary(&self) -> Result<bool> {
        self.require_proper_nonzero()?;
        let d = self.dim();
        let mut seen = vec![false; d];
        for g in &self.gens {
            let mut support = g.0.iter().enumerate().filter(|(_, &e)| e > 0);
            if let (Some((k, _)), None) = (support.next(), support.next()) {
                seen[k] = true;
            }
        }
        Ok(seen.into_iter().all(|s| s))
    }

    /// Krull dimension of `R / self`: the largest set of variables that
    /// contains the support of no generator.
    pub fn dim_quotient(&self) -> Result<usize> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let d = self.dim();
        if d > 24 {
            return Err(Error::ResourceCap {
                what: "variable subsets",
                size: d,
                cap: 24,
            });
        }
        let supports: Vec<u64> = self.gens.iter().map(ExponentVector::support_mask).collect();
        let best = (0u64..1 << d)
            .filter(|&s| supports.iter().all(|&g| g & !s != 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0);
        Ok(best)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write_monomial(f, g, self.ring.var_names())?;
        }
        f.write_str(")")
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, g: &ExponentVector, names: &[String]) -> fmt::Result {
    if g.is_zero() {
        return f.write_str("1");
    }
    let mut first = true;
    for (name, &e) in names.iter().zip(g.as_slice()) {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(name)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Componentwise-minimal elements of `points`, deduplicated and sorted.
pub(crate) fn minimal_elements(mut points: Vec<ExponentVector>) -> Vec<ExponentVector> {
    points.sort_unstable();
    points.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(points.len());
    for p in points {
        // Every earlier point has degree <= deg(p) and differs from p, so a
        // divisor among them is a proper divisor.
        if !kept.iter().any(|k| k.divides(&p)) {
            kept.push(p);
        }
    }
    kept
}
