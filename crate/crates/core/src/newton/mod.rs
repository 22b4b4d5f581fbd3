//! Newton polyhedron `NP(I) = conv(exponents of I) + R^d_{>=0}` of a monomial
//! ideal and the invariants read off from it: monomial reduction, integral
//! closure, analytic spread and j-multiplicity.
//!
//! All arithmetic is exact. Vertices are detected by linear-programming
//! feasibility, facets by double description.

mod faces;
mod hull;
pub(crate) mod lp;
mod volume;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Exponent, ExponentVector, MonomialIdeal, RingSpec};

pub use volume::Pivot;

/// The closed halfspace `{x : normal . x >= offset}`, scaled to coprime
/// integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    normal: Vec<BigInt>,
    offset: BigInt,
}

impl Halfspace {
    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    /// `normal . v - offset` for a lattice point.
    pub fn slack(&self, v: &[Exponent]) -> BigInt {
        self.normal
            .iter()
            .zip(v)
            .map(|(a, &x)| a * BigInt::from(x))
            .sum::<BigInt>()
            - &self.offset
    }

    pub fn contains_lattice_point(&self, v: &[Exponent]) -> bool {
        !self.slack(v).is_negative()
    }

    pub fn contains_point(&self, v: &[BigRational]) -> bool {
        let lhs: BigRational = self
            .normal
            .iter()
            .zip(v)
            .map(|(a, x)| x * a)
            .fold(BigRational::zero(), |acc, t| acc + t);
        lhs >= BigRational::from_integer(self.offset.clone())
    }

    /// A facet is bounded iff its normal is strictly positive in every
    /// coordinate.
    pub fn is_bounded(&self) -> bool {
        self.normal.iter().all(Signed::is_positive)
    }
}

/// Exact vertex and facet description of a Newton polyhedron.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    ring: RingSpec,
    vertices: Vec<ExponentVector>,
    facets: Vec<Halfspace>,
    // For each facet, the indices of the vertices lying on it.
    tight: Vec<Vec<usize>>,
}

impl NewtonPolyhedron {
    pub fn of(ideal: &MonomialIdeal) -> Result<Self> {
        ideal.require_proper_nonzero()?;
        let gens = ideal.gens();
        let vertices: Vec<ExponentVector> = (0..gens.len())
            .filter(|&i| !in_hull_of_others(gens, i))
            .map(|i| gens[i].clone())
            .collect();
        let mut facets = hull::orthant_hull_facets(&vertices);
        facets.sort();
        facets.dedup();
        let tight = facets
            .iter()
            .map(|f| {
                (0..vertices.len())
                    .filter(|&i| f.slack(vertices[i].as_slice()).is_zero())
                    .collect()
            })
            .collect();
        Ok(Self {
            ring: ideal.ring().clone(),
            vertices,
            facets,
            tight,
        })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.ring.dim()
    }

    pub fn vertices(&self) -> &[ExponentVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    /// Vertices lying on facet `f`.
    pub fn facet_vertices(&self, f: usize) -> impl Iterator<Item = &ExponentVector> {
        self.tight[f].iter().map(|&i| &self.vertices[i])
    }

    pub fn contains_point(&self, v: &[BigRational]) -> Result<bool> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(self.facets.iter().all(|f| f.contains_point(v)))
    }

    pub fn contains_lattice_point(&self, v: &ExponentVector) -> Result<bool> {
        self.ring.check(v)?;
        Ok(self
            .facets
            .iter()
            .all(|f| f.contains_lattice_point(v.as_slice())))
    }

    /// One more than the largest dimension of a compact face.
    pub fn analytic_spread(&self) -> usize {
        faces::max_compact_face_dim(self) + 1
    }

    /// `d!` times the volume of the union of the pyramids from the origin over
    /// the bounded facets.
    pub fn pyramid_volume(&self) -> Result<u64> {
        self.pyramid_volume_with(Pivot::LexMin)
    }

    pub fn pyramid_volume_with(&self, pivot: Pivot) -> Result<u64> {
        volume::pyramid_volume(self, pivot)
    }
}

impl fmt::Display for Halfspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} >= {}", self.normal, self.offset)
    }
}

/// Whether `gens[i]` lies in `conv(others) + R^d_{>=0}`:
/// feasibility of `sum l_j w_j + s = v`, `sum l_j = 1`, `l, s >= 0`.
fn in_hull_of_others(gens: &[ExponentVector], i: usize) -> bool {
    let others: Vec<&ExponentVector> = gens
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, g)| g)
        .collect();
    if others.is_empty() {
        return false;
    }
    let d = gens[i].len();
    let cols = others.len() + d;
    let mut a = Vec::with_capacity(d + 1);
    for k in 0..d {
        let mut row = vec![BigInt::zero(); cols];
        for (j, w) in others.iter().enumerate() {
            row[j] = BigInt::from(w.as_slice()[k]);
        }
        row[others.len() + k] = BigInt::from(1);
        a.push(row);
    }
    let mut ones = vec![BigInt::zero(); cols];
    for v in ones.iter_mut().take(others.len()) {
        *v = BigInt::from(1);
    }
    a.push(ones);
    let b: Vec<BigInt> = gens[i]
        .as_slice()
        .iter()
        .map(|&e| BigInt::from(e))
        .chain(std::iter::once(BigInt::from(1)))
        .collect();
    lp::is_feasible(&a, &b)
}

/// The ideal generated by the vertices of the Newton polyhedron: the smallest
/// monomial ideal with the same Newton polyhedron.
pub fn mon_reduction(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let np = NewtonPolyhedron::of(ideal)?;
    MonomialIdeal::minimalize(np.vertices.iter().cloned(), ideal.ring())
}

/// Integral closure, generated by the lattice points of the Newton
/// polyhedron.
///
/// A minimal lattice point `v` of `NP(I)` has `v_k <= max_k`, the largest
/// `k`-th exponent among the generators: otherwise `v - e_k` still dominates
/// the convex combination that `v` dominates. So the box `prod [0, max_k]`
/// holds every minimal generator.
pub fn integral_closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    let np = NewtonPolyhedron::of(ideal)?;
    let d = ideal.dim();
    let bounds: Vec<Exponent> = (0..d)
        .map(|k| {
            ideal
                .gens()
                .iter()
                .map(|g| g.as_slice()[k])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut inside = Vec::new();
    let mut point = vec![0 as Exponent; d];
    loop {
        if np.facets.iter().all(|f| f.contains_lattice_point(&point)) {
            inside.push(ExponentVector::new(point.clone()));
        }
        // odometer step
        let mut k = d;
        loop {
            if k == 0 {
                return MonomialIdeal::minimalize(inside, ideal.ring());
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

/// Analytic spread via the compact faces of the Newton polyhedron.
pub fn mon_analytic_spread(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(NewtonPolyhedron::of(ideal)?.analytic_spread())
}

/// j-multiplicity as the normalized volume of the pyramids over the bounded
/// facets of the Newton polyhedron.
pub fn mon_j_mult(ideal: &MonomialIdeal) -> Result<u64> {
    NewtonPolyhedron::of(ideal)?.pyramid_volume()
}

/// Hilbert-Samuel multiplicity of an m-primary ideal: `d!` times the volume
/// of the region below the Newton polyhedron.
pub fn normalized_covolume(ideal: &MonomialIdeal) -> Result<u64> {
    if !ideal.is_m_primary()? {
        return Err(Error::NotMPrimary);
    }
    NewtonPolyhedron::of(ideal)?.pyramid_volume()
}
