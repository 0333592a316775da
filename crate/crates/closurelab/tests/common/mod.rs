//! Shared helpers for the integration suite: an independent brute-force
//! vertex-enumeration oracle and the seeded fuzz corpus.

use closurelab::catalog::{random_well_behaved, Instance, Kind};
use closurelab::rat::{dot, lex_cmp, Q};
use num_traits::Zero;

/// Solves the square system `rows . x = rhs` by Gaussian elimination;
/// `None` when singular.
pub fn solve_square(rows: &[Vec<Q>], rhs: &[Q]) -> Option<Vec<Q>> {
    let n = rows.len();
    let mut a: Vec<Vec<Q>> = rows.to_vec();
    let mut b: Vec<Q> = rhs.to_vec();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        b[col] /= &p;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let t = &a[col][c] * &f;
                    a[r][c] -= t;
                }
                let t = &b[col] * &f;
                b[r] -= t;
            }
        }
    }
    Some(b)
}

/// Independent vertex enumeration: every vertex of `{x : rows.x <= rhs}` is
/// the unique solution of some `dim`-subset of tight rows, so all subsets
/// are solved and filtered for feasibility. Pure combinatorics, no
/// double-description machinery.
pub fn oracle_vertices(dim: usize, le_rows: &[(Vec<Q>, Q)]) -> Vec<Vec<Q>> {
    let m = le_rows.len();
    let mut out: Vec<Vec<Q>> = Vec::new();
    let mut idx: Vec<usize> = (0..dim).collect();
    if dim == 0 || m < dim {
        return out;
    }
    loop {
        let rows: Vec<Vec<Q>> = idx.iter().map(|&i| le_rows[i].0.clone()).collect();
        let rhs: Vec<Q> = idx.iter().map(|&i| le_rows[i].1.clone()).collect();
        if let Some(x) = solve_square(&rows, &rhs) {
            if le_rows.iter().all(|(a, b)| dot(a, &x) <= *b) && !out.contains(&x) {
                out.push(x);
            }
        }
        // next dim-combination of {0..m}
        let mut j = dim;
        loop {
            if j == 0 {
                out.sort_by(|a, b| lex_cmp(a, b));
                return out;
            }
            j -= 1;
            if idx[j] + 1 <= m - (dim - j) {
                idx[j] += 1;
                for t in j + 1..dim {
                    idx[t] = idx[t - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Seeded corpus of small well-behaved instances, shared by the structural
/// and approximation suites. Sizes lean toward 2D where exhaustive split
/// families are cheap.
#[allow(dead_code)] // not every integration target draws on the corpus
pub fn corpus(kind: Kind, n2: usize, n3: usize, n4: usize) -> Vec<(String, Instance)> {
    let mut out = Vec::new();
    let push = |n: usize, count: usize, out: &mut Vec<(String, Instance)>| {
        for i in 0..count {
            let seed = 1000 * n as u64 + i as u64;
            let m = 2 + (i % 2);
            let coeff_max = 2 + (i % 3) as i64;
            let inst = random_well_behaved(kind, n, m, coeff_max, seed)
                .expect("corpus generation");
            out.push((format!("{kind:?}-{n}d-{i}"), inst));
        }
    };
    push(2, n2, &mut out);
    push(3, n3, &mut out);
    push(4, n4, &mut out);
    out
}
