use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::NewtonPolyhedron;
use crate::error::{Error, Result};
use crate::linalg::{affine_rank, determinant};

/// Which vertex of a face is used as the apex when coning off its boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pivot {
    LexMin,
    LexMax,
}

/// Sum of `|det(v_1, ..., v_d)|` over a triangulation of every bounded facet.
pub(super) fn pyramid_volume(np: &NewtonPolyhedron, pivot: Pivot) -> Result<u64> {
    let d = np.dim();
    let mut total = BigInt::zero();
    for (f, facet) in np.facets.iter().enumerate() {
        if !facet.is_bounded() {
            continue;
        }
        for simplex in triangulate(np, &np.tight[f], d - 1, pivot) {
            let rows: Vec<Vec<BigInt>> = simplex
                .iter()
                .map(|&i| {
                    np.vertices[i]
                        .as_slice()
                        .iter()
                        .map(|&e| BigInt::from(e))
                        .collect()
                })
                .collect();
            let det = determinant(&rows);
            if det.is_zero() {
                return Err(Error::DegenerateSimplex);
            }
            total += det.abs();
        }
    }
    total.to_u64().ok_or_else(|| Error::CoefficientOverflow {
        index: d,
        value: total.to_string(),
    })
}

/// Triangulates the `dim`-dimensional face with vertex set `face` by coning
/// from a pivot vertex over the triangulated faces of one lower dimension
/// that avoid it.
fn triangulate(np: &NewtonPolyhedron, face: &[usize], dim: usize, pivot: Pivot) -> Vec<Vec<usize>> {
    if dim == 0 {
        return vec![vec![face[0]]];
    }
    let key = |&&i: &&usize| np.vertices[i].as_slice();
    let apex = *match pivot {
        Pivot::LexMin => face.iter().min_by_key(key),
        Pivot::LexMax => face.iter().max_by_key(key),
    }
    .expect("faces are nonempty");

    // Every codimension-one face of a face is its intersection with a single
    // facet of the polyhedron.
    let mut boundary: BTreeSet<Vec<usize>> = BTreeSet::new();
    for t in &np.tight {
        let meet: Vec<usize> = face
            .iter()
            .copied()
            .filter(|i| t.binary_search(i).is_ok())
            .collect();
        if meet.len() < dim || meet.contains(&apex) {
            continue;
        }
        if affine_rank(meet.iter().map(|&i| np.vertices[i].as_slice())) == dim - 1 {
            boundary.insert(meet);
        }
    }

    let mut out = Vec::new();
    for sub in &boundary {
        for mut simplex in triangulate(np, sub, dim - 1, pivot) {
            simplex.insert(0, apex);
            out.push(simplex);
        }
    }
    out
}
