//! Exact polyhedral primitives: dual representations, conversion, containment,
//! intersection, scaling, hulls of unions, and exact linear optimization.
//!
//! A `Polyhedron` always carries both representations in canonical form: the
//! H-representation is irredundant (facets of the homogenization, primitive
//! integer data, sorted), the V-representation is minimal. Conversion in both
//! directions goes through the cone engine in `dd`: inequalities are
//! homogenized with an extra coordinate, generators are dualized.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::dd::extreme_rays;
use crate::error::Error;
use crate::rat::{dot, lex_cmp, primitive, q, unit, zeros, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sense {
    Le,
    Ge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearInequality {
    pub coeffs: Vec<Q>,
    pub rhs: Q,
    pub sense: Sense,
}

impl LinearInequality {
    pub fn le(coeffs: Vec<Q>, rhs: Q) -> Self {
        LinearInequality { coeffs, rhs, sense: Sense::Le }
    }

    pub fn ge(coeffs: Vec<Q>, rhs: Q) -> Self {
        LinearInequality { coeffs, rhs, sense: Sense::Ge }
    }

    /// The row as `a . x <= b`.
    pub fn le_form(&self) -> (Vec<Q>, Q) {
        match self.sense {
            Sense::Le => (self.coeffs.clone(), self.rhs.clone()),
            Sense::Ge => (
                self.coeffs.iter().map(|c| -c.clone()).collect(),
                -self.rhs.clone(),
            ),
        }
    }

    /// The row as `a . x >= b`.
    pub fn ge_form(&self) -> (Vec<Q>, Q) {
        match self.sense {
            Sense::Ge => (self.coeffs.clone(), self.rhs.clone()),
            Sense::Le => (
                self.coeffs.iter().map(|c| -c.clone()).collect(),
                -self.rhs.clone(),
            ),
        }
    }

    pub fn satisfied_by(&self, x: &[Q]) -> bool {
        let lhs = dot(&self.coeffs, x);
        match self.sense {
            Sense::Le => lhs <= self.rhs,
            Sense::Ge => lhs >= self.rhs,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    pub dim: usize,
    pub rows: Vec<LinearInequality>,
    /// Adds `x_j >= 0` for every coordinate without storing explicit rows.
    pub nonneg: bool,
}

impl HRep {
    pub fn new(dim: usize, rows: Vec<LinearInequality>, nonneg: bool) -> Self {
        HRep { dim, rows, nonneg }
    }

    /// All rows in `a . x <= b` form, including the implied sign constraints.
    pub fn all_le_rows(&self) -> Vec<(Vec<Q>, Q)> {
        let mut out: Vec<(Vec<Q>, Q)> = self.rows.iter().map(|r| r.le_form()).collect();
        if self.nonneg {
            for j in 0..self.dim {
                let mut a = zeros(self.dim);
                a[j] = -q(1);
                out.push((a, Q::zero()));
            }
        }
        out
    }

    pub fn satisfied_by(&self, x: &[Q]) -> bool {
        if self.nonneg && x.iter().any(|c| c.is_negative()) {
            return false;
        }
        self.rows.iter().all(|r| r.satisfied_by(x))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VRep {
    pub dim: usize,
    pub vertices: Vec<Vec<Q>>,
    pub rays: Vec<Vec<Q>>,
}

impl VRep {
    pub fn empty(dim: usize) -> Self {
        VRep { dim, vertices: Vec::new(), rays: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

fn check_rows(h: &HRep) -> Result<(), Error> {
    for r in &h.rows {
        if r.coeffs.len() != h.dim {
            return Err(Error::DimensionMismatch { expected: h.dim, found: r.coeffs.len() });
        }
    }
    Ok(())
}

/// H-representation to minimal generators (vertices and extreme rays).
pub fn dd_convert(h: &HRep) -> Result<VRep, Error> {
    check_rows(h)?;
    let n = h.dim;
    // Homogenize: (x, t) with a.x <= b*t becomes (-a, b).(x,t) >= 0, plus t >= 0.
    let mut cons: Vec<Vec<Q>> = Vec::new();
    for (a, b) in h.all_le_rows() {
        let mut c: Vec<Q> = a.iter().map(|x| -x.clone()).collect();
        c.push(b);
        cons.push(c);
    }
    cons.push(unit(n + 1, n));
    let gens = extreme_rays(n + 1, &cons);

    let mut vertices: Vec<Vec<Q>> = Vec::new();
    let mut rays: Vec<Vec<Q>> = Vec::new();
    for l in &gens.lineality {
        // t >= 0 is tight on the lineality space, so these are lines of the set.
        debug_assert!(l[n].is_zero());
        let u = primitive(&l[..n]);
        rays.push(u.iter().map(|x| -x.clone()).collect());
        rays.push(u);
    }
    for r in &gens.rays {
        let t = &r[n];
        match t.cmp(&Q::zero()) {
            Ordering::Greater => vertices.push(r[..n].iter().map(|x| x / t).collect()),
            Ordering::Equal => rays.push(primitive(&r[..n])),
            Ordering::Less => unreachable!("t >= 0 is a cone constraint"),
        }
    }
    if vertices.is_empty() {
        return Ok(VRep::empty(n));
    }
    vertices.sort_by(|a, b| lex_cmp(a, b));
    vertices.dedup();
    rays.sort_by(|a, b| lex_cmp(a, b));
    rays.dedup();
    Ok(VRep { dim: n, vertices, rays })
}

/// Generators to an irredundant H-representation of their closed convex hull.
pub fn dd_convert_back(v: &VRep) -> Result<HRep, Error> {
    let n = v.dim;
    for g in v.vertices.iter().chain(&v.rays) {
        if g.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: g.len() });
        }
    }
    if v.vertices.is_empty() {
        // Canonical empty set.
        return Ok(HRep::new(n, vec![LinearInequality::le(zeros(n), -q(1))], false));
    }
    // Dual cone of the homogenization cone( {(v,1)} + {(r,0)} ): one homogeneous
    // constraint per generator; its extreme rays are the facets, its lineality
    // the implicit equalities.
    let mut cons: Vec<Vec<Q>> = Vec::new();
    for vert in &v.vertices {
        let mut c = vert.clone();
        c.push(q(1));
        cons.push(c);
    }
    for ray in &v.rays {
        let mut c = ray.clone();
        c.push(Q::zero());
        cons.push(c);
    }
    let gens = extreme_rays(n + 1, &cons);

    let mut rows: Vec<LinearInequality> = Vec::new();
    let mut push_row = |a: &[Q], b: Q| {
        let mut full: Vec<Q> = a.iter().map(|x| -x.clone()).collect();
        full.push(b);
        let full = primitive(&full);
        let b = full[a.len()].clone();
        rows.push(LinearInequality::le(full[..a.len()].to_vec(), b));
    };
    for l in &gens.lineality {
        let (a, c) = (&l[..n], &l[n]);
        debug_assert!(!a.iter().all(|x| x.is_zero()));
        // a.x + c = 0 on the whole set: two opposite rows.
        push_row(a, c.clone());
        let neg: Vec<Q> = a.iter().map(|x| -x.clone()).collect();
        push_row(&neg, -c.clone());
    }
    for r in &gens.rays {
        let (a, c) = (&r[..n], &r[n]);
        if a.iter().all(|x| x.is_zero()) {
            debug_assert!(c.is_positive());
            continue; // the dual artifact of t >= 0
        }
        // a.x + c >= 0 valid, i.e. (-a).x <= c.
        push_row(a, c.clone());
    }
    rows.sort_by(|x, y| lex_cmp(&x.coeffs, &y.coeffs).then_with(|| x.rhs.cmp(&y.rhs)));
    rows.dedup();
    Ok(HRep::new(n, rows, false))
}

#[derive(Debug, Clone)]
pub struct Polyhedron {
    dim: usize,
    hrep: HRep,
    vrep: VRep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    Max,
    Min,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Optimal { value: Q, vertex: Vec<Q> },
    Unbounded { ray: Vec<Q> },
    Infeasible,
}

impl Polyhedron {
    pub fn from_hrep(h: &HRep) -> Result<Polyhedron, Error> {
        let vrep = dd_convert(h)?;
        if vrep.is_empty() {
            return Ok(Polyhedron::empty(h.dim));
        }
        let hrep = dd_convert_back(&vrep)?;
        Ok(Polyhedron { dim: h.dim, hrep, vrep })
    }

    pub fn from_vrep(v: &VRep) -> Result<Polyhedron, Error> {
        let hrep = dd_convert_back(v)?;
        let vrep = dd_convert(&hrep)?;
        Ok(Polyhedron { dim: v.dim, hrep, vrep })
    }

    pub fn from_le_rows(dim: usize, rows: Vec<(Vec<Q>, Q)>, nonneg: bool) -> Result<Polyhedron, Error> {
        let rows = rows.into_iter().map(|(a, b)| LinearInequality::le(a, b)).collect();
        Polyhedron::from_hrep(&HRep::new(dim, rows, nonneg))
    }

    pub fn empty(dim: usize) -> Polyhedron {
        Polyhedron {
            dim,
            hrep: HRep::new(dim, vec![LinearInequality::le(zeros(dim), -q(1))], false),
            vrep: VRep::empty(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn hrep(&self) -> &HRep {
        &self.hrep
    }

    pub fn vrep(&self) -> &VRep {
        &self.vrep
    }

    pub fn is_empty(&self) -> bool {
        self.vrep.is_empty()
    }

    pub fn contains_point(&self, x: &[Q]) -> bool {
        x.len() == self.dim && self.hrep.satisfied_by(x)
    }

    /// Whether `r` lies in the recession cone.
    pub fn recession_contains(&self, r: &[Q]) -> bool {
        if self.is_empty() {
            return false;
        }
        self.hrep.rows.iter().all(|row| {
            let (a, _) = row.le_form();
            !dot(&a, r).is_positive()
        })
    }

    /// Dimension of the affine hull; `None` for the empty set.
    pub fn affine_dim(&self) -> Option<usize> {
        if self.is_empty() {
            return None;
        }
        let v0 = &self.vrep.vertices[0];
        let mut dirs: Vec<Vec<Q>> = self
            .vrep
            .vertices
            .iter()
            .skip(1)
            .map(|v| v.iter().zip(v0).map(|(a, b)| a - b).collect())
            .collect();
        dirs.extend(self.vrep.rays.iter().cloned());
        Some(crate::rat::rank(&dirs))
    }

    /// Intersection with extra rows, given in `a . x <= b` form.
    pub fn with_le_rows(&self, extra: &[(Vec<Q>, Q)]) -> Result<Polyhedron, Error> {
        let mut rows = self.hrep.rows.clone();
        for (a, b) in extra {
            rows.push(LinearInequality::le(a.clone(), b.clone()));
        }
        Polyhedron::from_hrep(&HRep::new(self.dim, rows, false))
    }

    pub fn optimize(&self, c: &[Q], obj: Objective) -> Result<Outcome, Error> {
        if c.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: c.len() });
        }
        if self.is_empty() {
            return Ok(Outcome::Infeasible);
        }
        let improving = |v: &Q| match obj {
            Objective::Max => v.is_positive(),
            Objective::Min => v.is_negative(),
        };
        for r in &self.vrep.rays {
            if improving(&dot(c, r)) {
                return Ok(Outcome::Unbounded { ray: r.clone() });
            }
        }
        let mut best: Option<(Q, &Vec<Q>)> = None;
        for v in &self.vrep.vertices {
            let val = dot(c, v);
            let better = match &best {
                None => true,
                Some((bv, bx)) => {
                    let cmp = val.cmp(bv);
                    let strictly = match obj {
                        Objective::Max => cmp == Ordering::Greater,
                        Objective::Min => cmp == Ordering::Less,
                    };
                    strictly || (cmp == Ordering::Equal && lex_cmp(v, bx) == Ordering::Less)
                }
            };
            if better {
                best = Some((val, v));
            }
        }
        let (value, vertex) = best.expect("nonempty polyhedron has a vertex");
        Ok(Outcome::Optimal { value, vertex: vertex.clone() })
    }
}

/// True iff `inner` is a subset of `outer`, checked exactly on generators.
pub fn contains_polyhedron(outer: &Polyhedron, inner: &Polyhedron) -> Result<bool, Error> {
    if outer.dim() != inner.dim() {
        return Err(Error::DimensionMismatch { expected: outer.dim(), found: inner.dim() });
    }
    if inner.is_empty() {
        return Ok(true);
    }
    if outer.is_empty() {
        return Ok(false);
    }
    for v in &inner.vrep.vertices {
        if !outer.contains_point(v) {
            return Ok(false);
        }
    }
    for r in &inner.vrep.rays {
        if !outer.recession_contains(r) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn set_eq(a: &Polyhedron, b: &Polyhedron) -> Result<bool, Error> {
    Ok(contains_polyhedron(a, b)? && contains_polyhedron(b, a)?)
}

/// `{alpha * x | x in p}` for `alpha > 0`.
pub fn scale(p: &Polyhedron, alpha: &Q) -> Result<Polyhedron, Error> {
    if !alpha.is_positive() {
        return Err(Error::NonPositiveScale);
    }
    if p.is_empty() {
        return Ok(p.clone());
    }
    if alpha.is_one() {
        return Ok(p.clone());
    }
    let rows = p
        .hrep
        .rows
        .iter()
        .map(|r| {
            let (a, b) = r.le_form();
            let mut full = a;
            full.push(b * alpha);
            let full = primitive(&full);
            let b = full[p.dim].clone();
            LinearInequality::le(full[..p.dim].to_vec(), b)
        })
        .collect();
    let vertices = p
        .vrep
        .vertices
        .iter()
        .map(|v| v.iter().map(|x| x * alpha).collect())
        .collect();
    let mut hrep = HRep::new(p.dim, rows, false);
    hrep.rows
        .sort_by(|x, y| lex_cmp(&x.coeffs, &y.coeffs).then_with(|| x.rhs.cmp(&y.rhs)));
    Ok(Polyhedron {
        dim: p.dim,
        hrep,
        vrep: VRep { dim: p.dim, vertices, rays: p.vrep.rays.clone() },
    })
}

/// Closed convex hull of the union: generators of all nonempty pieces are
/// pooled and reduced. All-empty input yields the empty polyhedron.
pub fn closed_convex_hull_union(pieces: &[&Polyhedron]) -> Result<Polyhedron, Error> {
    let dims: Vec<usize> = pieces.iter().map(|p| p.dim()).collect();
    if let Some(&d0) = dims.first() {
        for &d in &dims {
            if d != d0 {
                return Err(Error::DimensionMismatch { expected: d0, found: d });
            }
        }
    }
    let nonempty: Vec<&&Polyhedron> = pieces.iter().filter(|p| !p.is_empty()).collect();
    let Some(first) = nonempty.first() else {
        return Ok(Polyhedron::empty(dims.first().copied().unwrap_or(0)));
    };
    let dim = first.dim();
    let mut gens = VRep::empty(dim);
    for p in &nonempty {
        gens.vertices.extend(p.vrep.vertices.iter().cloned());
        gens.rays.extend(p.vrep.rays.iter().cloned());
    }
    gens.vertices.sort_by(|a, b| lex_cmp(a, b));
    gens.vertices.dedup();
    gens.rays.sort_by(|a, b| lex_cmp(a, b));
    gens.rays.dedup();
    Polyhedron::from_vrep(&gens)
}

/// Intersection of finitely many polyhedra of equal dimension.
pub fn intersection(polys: &[&Polyhedron]) -> Result<Polyhedron, Error> {
    let Some(first) = polys.first() else {
        return Err(Error::BadParam("intersection of an empty list".into()));
    };
    let dim = first.dim();
    let mut rows: Vec<(Vec<Q>, Q)> = Vec::new();
    for p in polys {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: p.dim() });
        }
        if p.is_empty() {
            return Ok(Polyhedron::empty(dim));
        }
        rows.extend(p.hrep.rows.iter().map(|r| r.le_form()));
    }
    rows.sort_by(|x, y| lex_cmp(&x.0, &y.0).then_with(|| x.1.cmp(&y.1)));
    rows.dedup();
    Polyhedron::from_le_rows(dim, rows, false)
}
