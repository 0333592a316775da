//! Double description method over exact rationals.
//!
//! Computes a minimal generator description (lineality basis plus extreme
//! rays) of a cone given by homogeneous inequalities `c . x >= 0`. Both
//! polyhedron conversion directions reduce to this via homogenization and
//! cone duality.
//!
//! The insertion loop follows the classic Fukuda–Prodon scheme: constraints
//! are added one at a time; while the lineality space is cut, a basis vector
//! is promoted to a ray; once the lineality lies on the hyperplane, positive
//! and negative rays are combined along adjacent pairs, with the
//! combinatorial adjacency test on tight-constraint sets.

use std::cmp::Ordering;

use num_traits::Zero;

use crate::rat::{dot, lex_cmp, primitive, Q};

#[derive(Debug, Clone)]
pub struct ConeGenerators {
    pub dim: usize,
    pub lineality: Vec<Vec<Q>>,
    pub rays: Vec<Vec<Q>>,
}

#[derive(Clone)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn new(nbits: usize) -> Self {
        ZeroSet(vec![0; (nbits + 63) / 64])
    }

    fn full_below(nbits: usize, upto: usize) -> Self {
        let mut z = ZeroSet::new(nbits);
        for i in 0..upto {
            z.set(i);
        }
        z
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1u64 << (i % 64);
    }

    fn intersect(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset_of(&self, other: &ZeroSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

struct Ray {
    v: Vec<Q>,
    zeros: ZeroSet,
}

/// Minimal generators of the cone `{x | c . x >= 0 for all c in constraints}`.
pub fn extreme_rays(dim: usize, constraints: &[Vec<Q>]) -> ConeGenerators {
    let m = constraints.len();
    let mut lineality: Vec<Vec<Q>> = (0..dim).map(|j| crate::rat::unit(dim, j)).collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (t, a) in constraints.iter().enumerate() {
        debug_assert_eq!(a.len(), dim);
        // A basis vector off the hyperplane: cut the lineality space.
        if let Some(idx) = lineality.iter().position(|v| !dot(a, v).is_zero()) {
            let mut v = lineality.remove(idx);
            let av = dot(a, &v);
            if av < Q::zero() {
                for x in &mut v {
                    *x = -x.clone();
                }
            }
            let av = dot(a, &v);
            for w in &mut lineality {
                let f = dot(a, w) / &av;
                if !f.is_zero() {
                    for (wj, vj) in w.iter_mut().zip(&v) {
                        *wj -= &f * vj;
                    }
                    *w = primitive(w);
                }
            }
            for r in &mut rays {
                let f = dot(a, &r.v) / &av;
                if !f.is_zero() {
                    for (rj, vj) in r.v.iter_mut().zip(&v) {
                        *rj -= &f * vj;
                    }
                    r.v = primitive(&r.v);
                }
                r.zeros.set(t);
            }
            // v was in the lineality space, so it is tight at every earlier
            // constraint and strictly positive on this one.
            rays.push(Ray {
                v: primitive(&v),
                zeros: ZeroSet::full_below(m, t),
            });
            continue;
        }

        let signs: Vec<Ordering> = rays.iter().map(|r| dot(a, &r.v).cmp(&Q::zero())).collect();
        if signs.iter().all(|s| *s != Ordering::Less) {
            for (r, s) in rays.iter_mut().zip(&signs) {
                if *s == Ordering::Equal {
                    r.zeros.set(t);
                }
            }
            continue;
        }

        let mut next: Vec<Ray> = Vec::new();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| signs[i] == Ordering::Greater).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| signs[i] == Ordering::Less).collect();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.intersect(&rays[n].zeros);
                let adjacent = !rays.iter().enumerate().any(|(i, r)| {
                    i != p && i != n && common.is_subset_of(&r.zeros)
                });
                if !adjacent {
                    continue;
                }
                let ap = dot(a, &rays[p].v);
                let an = dot(a, &rays[n].v);
                // ap > 0 > an, so this is a conic combination tight at `a`.
                let w: Vec<Q> = rays[n]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(nj, pj)| &ap * nj - &an * pj)
                    .collect();
                let mut zeros = common;
                zeros.set(t);
                next.push(Ray { v: primitive(&w), zeros });
            }
        }
        for (i, r) in rays.into_iter().enumerate() {
            match signs[i] {
                Ordering::Greater => next.push(r),
                Ordering::Equal => {
                    let mut r = r;
                    r.zeros.set(t);
                    next.push(r);
                }
                Ordering::Less => {}
            }
        }
        next.sort_by(|x, y| lex_cmp(&x.v, &y.v));
        next.dedup_by(|x, y| x.v == y.v);
        rays = next;
    }

    let mut ray_vecs: Vec<Vec<Q>> = rays.into_iter().map(|r| r.v).collect();
    ray_vecs.sort_by(|x, y| lex_cmp(x, y));
    ray_vecs.dedup();
    ConeGenerators {
        dim,
        lineality: reduced_basis(lineality),
        rays: ray_vecs,
    }
}

/// Reduced row echelon form of a basis, rows primitive and sorted.
fn reduced_basis(mut rows: Vec<Vec<Q>>) -> Vec<Vec<Q>> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(p) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, p);
        let inv = rows[pivot_row][col].clone();
        for c in 0..ncols {
            rows[pivot_row][c] = &rows[pivot_row][c] / &inv;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in 0..ncols {
                    let delta = &f * &rows[pivot_row][c];
                    rows[r][c] -= delta;
                }
            }
        }
        pivot_row += 1;
    }
    rows.truncate(pivot_row);
    let mut rows: Vec<Vec<Q>> = rows.iter().map(|r| primitive(r)).collect();
    rows.sort_by(|x, y| lex_cmp(x, y));
    rows
}
