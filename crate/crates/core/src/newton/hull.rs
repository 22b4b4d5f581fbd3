//! Facet enumeration for `conv(V) + R^d_{>=0}` by the double description
//! method applied to the homogenized cone.
//!
//! The cone `C` is generated by `(1, v)` for each vertex and `(0, e_k)` for
//! each coordinate direction. Its facets are the extreme rays of the dual cone
//! `{y : y . g >= 0 for every generator g}`, which we build by inserting the
//! generator constraints one at a time.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Halfspace;
use crate::monomial::ExponentVector;

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Self(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_superset_of(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| b & !a == 0)
    }
}

struct Ray {
    y: Vec<BigInt>,
    zeros: Bits,
}

fn dot(g: &[BigInt], y: &[BigInt]) -> BigInt {
    g.iter().zip(y).map(|(a, b)| a * b).sum()
}

fn primitive(mut y: Vec<BigInt>) -> Vec<BigInt> {
    let g = y.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() && !g.is_one() {
        for v in &mut y {
            *v /= &g;
        }
    }
    y
}

/// Facets of `conv(vertices) + R^d_{>=0}`, unsorted. `vertices` must be
/// nonempty and of common length `d >= 1`.
pub(crate) fn orthant_hull_facets(vertices: &[ExponentVector]) -> Vec<Halfspace> {
    let d = vertices[0].len();
    let n = d + 1;
    let nv = vertices.len();
    let total = nv + d;

    let mut gens: Vec<Vec<BigInt>> = vertices
        .iter()
        .map(|v| {
            std::iter::once(BigInt::one())
                .chain(v.as_slice().iter().map(|&e| BigInt::from(e)))
                .collect()
        })
        .collect();
    for k in 0..d {
        let mut g = vec![BigInt::zero(); n];
        g[k + 1] = BigInt::one();
        gens.push(g);
    }

    // The generators (1, v0), (0, e_1), ..., (0, e_d) form a basis; the dual
    // basis gives the initial simplicial cone.
    let v0 = &gens[0];
    let mut initial: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    let mut r0 = vec![BigInt::zero(); n];
    r0[0] = BigInt::one();
    initial.push(r0);
    for k in 1..n {
        let mut r = vec![BigInt::zero(); n];
        r[0] = -v0[k].clone();
        r[k] = BigInt::one();
        initial.push(r);
    }
    let mut processed: Vec<usize> = std::iter::once(0).chain(nv..total).collect();
    let mut rays: Vec<Ray> = initial
        .into_iter()
        .map(|y| {
            let mut zeros = Bits::new(total);
            for &c in &processed {
                if dot(&gens[c], &y).is_zero() {
                    zeros.set(c);
                }
            }
            Ray { y, zeros }
        })
        .collect();

    for (c, g) in gens.iter().enumerate().take(nv).skip(1) {
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(g, &r.y)).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, v) in rays.iter_mut().zip(&vals) {
                if v.is_zero() {
                    r.zeros.set(c);
                }
            }
            processed.push(c);
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();

        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if common.count() + 2 < n {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(i, r)| i == p || i == q || !r.zeros.is_superset_of(&common));
                if !adjacent {
                    continue;
                }
                let y: Vec<BigInt> = rays[q]
                    .y
                    .iter()
                    .zip(&rays[p].y)
                    .map(|(yq, yp)| &vals[p] * yq - &vals[q] * yp)
                    .collect();
                let mut zeros = common;
                zeros.set(c);
                fresh.push(Ray {
                    y: primitive(y),
                    zeros,
                });
            }
        }

        let mut next = Vec::with_capacity(rays.len() + fresh.len());
        for (mut r, v) in rays.into_iter().zip(&vals) {
            if v.is_negative() {
                continue;
            }
            if v.is_zero() {
                r.zeros.set(c);
            }
            next.push(r);
        }
        next.extend(fresh);
        rays = next;
        processed.push(c);
    }

    rays.into_iter()
        .filter(|r| r.y[1..].iter().any(|v| !v.is_zero()))
        .map(|r| Halfspace {
            normal: r.y[1..].to_vec(),
            offset: -r.y[0].clone(),
        })
        .collect()
}
