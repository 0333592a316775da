//! Disjunctive hulls and their finite-family closures, plus the classical
//! cut machinery: CG cuts from explicit multipliers, one-parameter
//! aggregation relaxations of two-row instances, and exact integer hulls.
//!
//! The true closures intersect over infinitely many strict lattice-free
//! sets; everything here works over an explicitly enumerated finite family
//! and is flagged `restricted`. Restricted closures always contain the true
//! closure, so closure values are over-approximations, while per-disjunction
//! approximation checks remain exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::geom::{
    closed_convex_hull_union, intersection, LinearInequality, Objective, Outcome, Polyhedron, VRep,
};
use crate::models::{
    lattice_points, CoveringPolyhedron, CutInequality, LatticeFreeBody, LatticeFreeSet,
    MultiBranchSplit, PackingPolyhedron, Provenance, SplitSet,
};
use crate::rat::{ceil_int, dot, floor_int, from_int, lex_cmp, primitive, Q};

/// Hull of `p` minus the removed open set: union of `p` restricted to each
/// disjunction piece, empty pieces dropped.
pub fn disjunctive_hull(p: &Polyhedron, set: &LatticeFreeSet) -> Result<Polyhedron, Error> {
    if set.dim() != p.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: set.dim() });
    }
    let mut pieces = Vec::new();
    for rows in set.pieces() {
        pieces.push(p.with_le_rows(&rows)?);
    }
    closed_convex_hull_union(&pieces.iter().collect::<Vec<_>>())
}

pub fn split_hull(p: &Polyhedron, s: &SplitSet) -> Result<Polyhedron, Error> {
    disjunctive_hull(p, &LatticeFreeSet::Split(s.clone()))
}

pub fn kbranch_hull(p: &Polyhedron, m: &MultiBranchSplit) -> Result<Polyhedron, Error> {
    disjunctive_hull(p, &LatticeFreeSet::MultiBranch(m.clone()))
}

pub fn latticefree_hull(p: &Polyhedron, l: &LatticeFreeBody) -> Result<Polyhedron, Error> {
    disjunctive_hull(p, &LatticeFreeSet::Body(l.clone()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Split,
    KBranch(usize),
    LatticeFree(usize),
}

/// Finite surrogate for a closure's family of strict lattice-free sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    /// Max-norm bound on multiplier entries.
    pub coeff_bound: i64,
    /// Bound on |offset|; `None` derives the range from the instance.
    pub offset_bound: Option<i64>,
    /// Canonicalize away the (pi,pi0) ~ (-pi,-pi0-1) symmetry.
    pub dedup: bool,
}

impl FamilySpec {
    pub fn split(coeff_bound: i64) -> Self {
        FamilySpec { kind: FamilyKind::Split, coeff_bound, offset_bound: None, dedup: true }
    }

    pub fn kbranch(k: usize, coeff_bound: i64) -> Self {
        FamilySpec { kind: FamilyKind::KBranch(k), coeff_bound, offset_bound: None, dedup: true }
    }

    pub fn latticefree(k: usize, coeff_bound: i64) -> Self {
        FamilySpec { kind: FamilyKind::LatticeFree(k), coeff_bound, offset_bound: None, dedup: true }
    }
}

/// All integer vectors with max-norm at most `bound`, excluding zero; with
/// `canonical`, only those whose first nonzero entry is positive.
fn enumerate_multipliers(dim: usize, bound: i64, canonical: bool) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut cur = vec![-bound; dim];
    loop {
        if cur.iter().any(|&x| x != 0) {
            let first = cur.iter().find(|&&x| x != 0).copied().unwrap_or(0);
            if !canonical || first > 0 {
                out.push(cur.iter().map(|&x| BigInt::from(x)).collect());
            }
        }
        let mut j = dim;
        loop {
            if j == 0 {
                return out;
            }
            j -= 1;
            if cur[j] < bound {
                cur[j] += 1;
                for c in cur.iter_mut().skip(j + 1) {
                    *c = -bound;
                }
                break;
            }
        }
    }
}

/// Exact range of `pi . x` over `p` as closed rational bounds; unbounded
/// directions fall back to the vertex extreme plus a unit margin (splits
/// beyond it are simply absent from the restricted family).
fn direction_range(p: &Polyhedron, pi: &[Q]) -> Result<Option<(Q, Q)>, Error> {
    let lo = match p.optimize(pi, Objective::Min)? {
        Outcome::Infeasible => return Ok(None),
        Outcome::Optimal { value, .. } => value,
        Outcome::Unbounded { .. } => {
            let min = p
                .vrep()
                .vertices
                .iter()
                .map(|v| dot(pi, v))
                .min()
                .expect("nonempty");
            min - Q::one()
        }
    };
    let hi = match p.optimize(pi, Objective::Max)? {
        Outcome::Infeasible => unreachable!(),
        Outcome::Optimal { value, .. } => value,
        Outcome::Unbounded { .. } => {
            let max = p
                .vrep()
                .vertices
                .iter()
                .map(|v| dot(pi, v))
                .max()
                .expect("nonempty");
            max + Q::one()
        }
    };
    Ok(Some((lo, hi)))
}

fn base_splits(p: &Polyhedron, f: &FamilySpec) -> Result<Vec<SplitSet>, Error> {
    if f.coeff_bound < 1 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for pi in enumerate_multipliers(p.dim(), f.coeff_bound, f.dedup) {
        let pi_q: Vec<Q> = pi.iter().map(from_int).collect();
        let Some((lo, hi)) = direction_range(p, &pi_q)? else {
            return Ok(Vec::new()); // empty polyhedron: nothing to cut
        };
        // The strip (pi0, pi0+1) meets [lo, hi] iff pi0 < hi and pi0+1 > lo.
        let mut pi0 = floor_int(&lo) - BigInt::one();
        let stop = ceil_int(&hi);
        while pi0 <= stop {
            let meets = from_int(&pi0) < hi && from_int(&pi0) + Q::one() > lo;
            let within = f
                .offset_bound
                .map_or(true, |b| pi0.magnitude() <= BigInt::from(b).magnitude());
            if meets && within {
                out.push(SplitSet::new(pi.clone(), pi0.clone()));
            }
            pi0 += BigInt::one();
        }
    }
    Ok(out)
}

/// Whether the closed body `{pi_j . x <= b_j}` provably contains no integer
/// point in its interior. Bounded bodies are certified exactly by lattice
/// enumeration over their own bounding box; unbounded bodies are admitted
/// only when two opposite rows confine them to an integer-width <= 1 strip.
fn certify_lattice_free(body: &LatticeFreeBody, cap: u64) -> Result<bool, Error> {
    let n = body.dim;
    for (j, (aj, bj)) in body.rows.iter().enumerate() {
        for (al, bl) in body.rows.iter().skip(j + 1) {
            let opposite = aj.iter().zip(al).all(|(x, y)| *x == -y);
            if opposite && aj.iter().any(|x| !x.is_zero()) && bj + bl <= BigInt::one() {
                // pi.x ranges over an open interval between integers of
                // length <= 1 on the interior.
                return Ok(true);
            }
        }
    }
    let rows: Vec<(Vec<Q>, Q)> = (0..body.k()).map(|j| body.row_q(j)).collect();
    let poly = Polyhedron::from_le_rows(n, rows, false)?;
    if poly.is_empty() || poly.affine_dim() != Some(n) {
        return Ok(true); // empty interior
    }
    if !poly.vrep().rays.is_empty() {
        return Ok(false); // unbounded without a strip certificate: not admitted
    }
    let bounds: Vec<(BigInt, BigInt)> = (0..n)
        .map(|j| {
            let lo = poly.vrep().vertices.iter().map(|v| v[j].clone()).min().unwrap();
            let hi = poly.vrep().vertices.iter().map(|v| v[j].clone()).max().unwrap();
            (floor_int(&lo), ceil_int(&hi))
        })
        .collect();
    for z in lattice_points(&bounds, cap)? {
        let x: Vec<Q> = z.iter().map(from_int).collect();
        if body.interior_contains(&x) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn latticefree_bodies(
    p: &Polyhedron,
    f: &FamilySpec,
    k: usize,
    cap: u64,
) -> Result<Vec<LatticeFreeBody>, Error> {
    // Candidate rows use primitive multipliers in both orientations.
    let mut rows: Vec<(Vec<BigInt>, BigInt)> = Vec::new();
    for pi in enumerate_multipliers(p.dim(), f.coeff_bound, false) {
        let pi_q: Vec<Q> = pi.iter().map(from_int).collect();
        if primitive(&pi_q) != pi_q {
            continue;
        }
        let Some((lo, hi)) = direction_range(p, &pi_q)? else {
            return Ok(Vec::new());
        };
        let mut b = floor_int(&lo);
        let stop = ceil_int(&hi) + BigInt::one();
        while b <= stop {
            let within = f
                .offset_bound
                .map_or(true, |ob| b.magnitude() <= BigInt::from(ob).magnitude());
            if within {
                rows.push((pi.clone(), b.clone()));
            }
            b += BigInt::one();
        }
    }

    let mut out = Vec::new();
    let mut idx = vec![0usize; k];
    // All k-subsets of candidate rows, skipping repeated directions.
    fn rec(
        rows: &[(Vec<BigInt>, BigInt)],
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<LatticeFreeBody>,
        dim: usize,
        cap: u64,
    ) -> Result<(), Error> {
        if chosen.len() == k {
            let body = LatticeFreeBody {
                dim,
                rows: chosen.iter().map(|&i| rows[i].clone()).collect(),
            };
            if certify_lattice_free(&body, cap)? {
                out.push(body);
            }
            return Ok(());
        }
        for i in start..rows.len() {
            if chosen.iter().any(|&c| rows[c].0 == rows[i].0) {
                continue; // same direction twice is a redundant row
            }
            chosen.push(i);
            rec(rows, k, i + 1, chosen, out, dim, cap)?;
            chosen.pop();
        }
        Ok(())
    }
    idx.clear();
    rec(&rows, k, 0, &mut idx, &mut out, p.dim(), cap)?;
    if out.len() as u64 > cap {
        return Err(Error::CapExceeded { needed: out.len() as u64, cap });
    }
    Ok(out)
}

/// The finite family of strict lattice-free sets described by `f`, derived
/// from the geometry of `p`.
pub fn enumerate_family(
    p: &Polyhedron,
    f: &FamilySpec,
    cap: u64,
) -> Result<Vec<LatticeFreeSet>, Error> {
    let members: Vec<LatticeFreeSet> = match f.kind {
        FamilyKind::Split => base_splits(p, f)?
            .into_iter()
            .map(LatticeFreeSet::Split)
            .collect(),
        FamilyKind::KBranch(k) => {
            if k == 0 {
                return Err(Error::BadParam("k-branch family needs k >= 1".into()));
            }
            let splits = base_splits(p, f)?;
            let mut out = Vec::new();
            let mut chosen: Vec<usize> = Vec::new();
            fn rec(
                splits: &[SplitSet],
                k: usize,
                start: usize,
                chosen: &mut Vec<usize>,
                out: &mut Vec<LatticeFreeSet>,
            ) {
                if !chosen.is_empty() {
                    let members = chosen.iter().map(|&i| splits[i].clone()).collect();
                    out.push(LatticeFreeSet::MultiBranch(MultiBranchSplit { splits: members }));
                }
                if chosen.len() == k {
                    return;
                }
                for i in start..splits.len() {
                    chosen.push(i);
                    rec(splits, k, i + 1, chosen, out);
                    chosen.pop();
                }
            }
            rec(&splits, k, 0, &mut chosen, &mut out);
            out
        }
        FamilyKind::LatticeFree(k) => {
            if k < 2 {
                return Err(Error::BadParam("lattice-free family needs k >= 2".into()));
            }
            latticefree_bodies(p, f, k, cap)?
                .into_iter()
                .map(LatticeFreeSet::Body)
                .collect()
        }
    };
    if members.len() as u64 > cap {
        return Err(Error::CapExceeded { needed: members.len() as u64, cap });
    }
    Ok(members)
}

/// Intersection of per-disjunction hulls over an enumerated family; always a
/// superset of the true closure, hence of the integer hull.
#[derive(Debug, Clone)]
pub struct ClosureResult {
    pub polyhedron: Polyhedron,
    pub family: FamilySpec,
    pub disjunctions_used: usize,
    pub restricted: bool,
}

pub fn closure_over(
    p: &Polyhedron,
    family: &FamilySpec,
    members: &[LatticeFreeSet],
) -> Result<ClosureResult, Error> {
    let mut hulls = Vec::with_capacity(members.len() + 1);
    hulls.push(p.clone());
    for m in members {
        hulls.push(disjunctive_hull(p, m)?);
    }
    let polyhedron = intersection(&hulls.iter().collect::<Vec<_>>())?;
    Ok(ClosureResult {
        polyhedron,
        family: family.clone(),
        disjunctions_used: members.len(),
        restricted: true,
    })
}

pub fn enumerated_closure(p: &Polyhedron, f: &FamilySpec) -> Result<ClosureResult, Error> {
    let members = enumerate_family(p, f, crate::enumeration_cap())?;
    closure_over(p, f, &members)
}

fn check_lambda(m: usize, lambda: &[Q]) -> Result<(), Error> {
    if lambda.len() != m {
        return Err(Error::DimensionMismatch { expected: m, found: lambda.len() });
    }
    if lambda.iter().any(|l| l.is_negative()) {
        return Err(Error::NegativeMultiplier);
    }
    Ok(())
}

fn aggregate(a: &[Vec<Q>], b: &[Q], lambda: &[Q]) -> (Vec<Q>, Q) {
    let n = a.first().map_or(0, |r| r.len());
    let mut coeffs = crate::rat::zeros(n);
    for (row, l) in a.iter().zip(lambda) {
        for (c, x) in coeffs.iter_mut().zip(row) {
            *c += l * x;
        }
    }
    (coeffs, dot(lambda, b))
}

/// Floors coefficients and rhs of the aggregated `<=` row.
pub fn cg_cut_packing(p: &PackingPolyhedron, lambda: &[Q]) -> Result<CutInequality, Error> {
    check_lambda(p.m(), lambda)?;
    let (coeffs, rhs) = aggregate(p.matrix(), p.rhs(), lambda);
    let coeffs = coeffs.iter().map(|c| from_int(&floor_int(c))).collect();
    Ok(CutInequality {
        ineq: LinearInequality::le(coeffs, from_int(&floor_int(&rhs))),
        provenance: Provenance::ChvatalGomory { lambda: lambda.to_vec() },
    })
}

/// Ceils coefficients and rhs of the aggregated `>=` row.
pub fn cg_cut_covering(p: &CoveringPolyhedron, lambda: &[Q]) -> Result<CutInequality, Error> {
    check_lambda(p.m(), lambda)?;
    let (coeffs, rhs) = aggregate(p.matrix(), p.rhs(), lambda);
    let coeffs = coeffs.iter().map(|c| from_int(&ceil_int(c))).collect();
    Ok(CutInequality {
        ineq: LinearInequality::ge(coeffs, from_int(&ceil_int(&rhs))),
        provenance: Provenance::ChvatalGomory { lambda: lambda.to_vec() },
    })
}

/// Exact integer hull. Works for bounded polyhedra and for those whose
/// recession cone is generated by unit vectors: every integer point then
/// reduces into the vertex bounding box by subtracting recession rays, so
/// the hull is conv(lattice points of the box in `p`) plus the same rays.
pub fn integer_hull(p: &Polyhedron, cap: u64) -> Result<Polyhedron, Error> {
    let n = p.dim();
    if p.is_empty() {
        return Ok(Polyhedron::empty(n));
    }
    for r in &p.vrep().rays {
        let is_unit = r.iter().filter(|x| !x.is_zero()).count() == 1
            && r.iter().all(|x| !x.is_negative())
            && r.iter().any(|x| x.is_one());
        if !is_unit {
            return Err(Error::NonAxisRecession);
        }
    }
    let bounds: Vec<(BigInt, BigInt)> = (0..n)
        .map(|j| {
            let lo = p.vrep().vertices.iter().map(|v| v[j].clone()).min().unwrap();
            let hi = p.vrep().vertices.iter().map(|v| v[j].clone()).max().unwrap();
            (floor_int(&lo), ceil_int(&hi))
        })
        .collect();
    let mut vertices = Vec::new();
    for z in lattice_points(&bounds, cap)? {
        let x: Vec<Q> = z.iter().map(from_int).collect();
        if p.contains_point(&x) {
            vertices.push(x);
        }
    }
    if vertices.is_empty() {
        return Ok(Polyhedron::empty(n));
    }
    vertices.sort_by(|a, b| lex_cmp(a, b));
    Polyhedron::from_vrep(&VRep { dim: n, vertices, rays: p.vrep().rays.clone() })
}

fn check_alpha_unit(alpha: &Q) -> Result<(), Error> {
    if alpha.is_negative() || *alpha > Q::one() {
        return Err(Error::BadParam(format!("alpha {alpha} outside [0,1]")));
    }
    Ok(())
}

fn aggregated_row(a: &[Vec<Q>], b: &[Q], alpha: &Q) -> Result<(Vec<Q>, Q), Error> {
    if a.len() != 2 {
        return Err(Error::WrongRowCount(a.len()));
    }
    check_alpha_unit(alpha)?;
    let lambda = vec![Q::one() - alpha, alpha.clone()];
    Ok(aggregate(a, b, &lambda))
}

/// Integer hull of the single-row relaxation with row
/// `(1-alpha) row_1 + alpha row_2` of a two-row packing instance.
pub fn aggregation_relaxation_packing(
    p: &PackingPolyhedron,
    alpha: &Q,
    cap: u64,
) -> Result<Polyhedron, Error> {
    let (coeffs, rhs) = aggregated_row(p.matrix(), p.rhs(), alpha)?;
    let relaxed = PackingPolyhedron::new(p.n(), vec![coeffs], vec![rhs])?;
    integer_hull(relaxed.polyhedron(), cap)
}

/// Covering counterpart of `aggregation_relaxation_packing`.
pub fn aggregation_relaxation_covering(
    p: &CoveringPolyhedron,
    alpha: &Q,
    cap: u64,
) -> Result<Polyhedron, Error> {
    let (coeffs, rhs) = aggregated_row(p.matrix(), p.rhs(), alpha)?;
    let relaxed = CoveringPolyhedron::new(p.n(), vec![coeffs], vec![rhs])?;
    integer_hull(relaxed.polyhedron(), cap)
}
