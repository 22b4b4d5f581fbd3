use std::collections::{BTreeSet, HashSet};

use num_traits::Signed;

use super::NewtonPolyhedron;
use crate::linalg::affine_rank;

/// Largest dimension of a compact face.
///
/// Faces are enumerated by their vertex sets, the closure under intersection
/// of the facets' vertex sets. For a vertex set `V`, the smallest face
/// containing `V` is cut out by every facet through `V`; it is compact iff
/// those facet normals together are positive on every coordinate (the
/// normals are nonnegative, so this kills every recession direction), and
/// its dimension is the affine rank of `V`.
pub(super) fn max_compact_face_dim(np: &NewtonPolyhedron) -> usize {
    let d = np.dim();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue: Vec<Vec<usize>> = Vec::new();
    let all: Vec<usize> = (0..np.vertices.len()).collect();
    for set in std::iter::once(&all).chain(&np.tight) {
        if !set.is_empty() && seen.insert(set.clone()) {
            queue.push(set.clone());
        }
    }
    while let Some(set) = queue.pop() {
        let members: BTreeSet<usize> = set.iter().copied().collect();
        for t in &np.tight {
            let meet: Vec<usize> = t.iter().copied().filter(|i| members.contains(i)).collect();
            if !meet.is_empty() && seen.insert(meet.clone()) {
                queue.push(meet);
            }
        }
    }

    let mut best = 0;
    for set in &seen {
        let mut covered = vec![false; d];
        for (f, t) in np.facets.iter().zip(&np.tight) {
            if set.iter().all(|i| t.binary_search(i).is_ok()) {
                for (c, a) in covered.iter_mut().zip(&f.normal) {
                    *c |= a.is_positive();
                }
            }
        }
        if covered.into_iter().all(|c| c) {
            let dim = affine_rank(set.iter().map(|&i| np.vertices[i].as_slice()));
            best = best.max(dim);
        }
    }
    best
}
