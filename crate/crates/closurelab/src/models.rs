//! Structured problem classes and the strict lattice-free objects used to
//! build disjunctive hulls: packing/covering polyhedra with their
//! well-behavedness normal form, split sets, multi-branch splits, general
//! lattice-free bodies, and the breve/restriction machinery.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::geom::{HRep, LinearInequality, Polyhedron};
use crate::rat::{dot, from_int, unit, Q};

fn check_nonneg_rows(n: usize, a: &[Vec<Q>], b: &[Q]) -> Result<(), Error> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch { expected: a.len(), found: b.len() });
    }
    for row in a {
        if row.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: row.len() });
        }
        if let Some(bad) = row.iter().find(|x| x.is_negative()) {
            return Err(Error::NegativeData(format!("coefficient {bad}")));
        }
    }
    if let Some(bad) = b.iter().find(|x| x.is_negative()) {
        return Err(Error::NegativeData(format!("right-hand side {bad}")));
    }
    Ok(())
}

/// `{x >= 0 : Ax <= b}` with nonnegative data; downward closed in the orthant.
#[derive(Debug, Clone)]
pub struct PackingPolyhedron {
    n: usize,
    a: Vec<Vec<Q>>,
    b: Vec<Q>,
    poly: Polyhedron,
}

/// `{x >= 0 : Ax >= b}` with nonnegative data; upward closed in the orthant.
#[derive(Debug, Clone)]
pub struct CoveringPolyhedron {
    n: usize,
    a: Vec<Vec<Q>>,
    b: Vec<Q>,
    poly: Polyhedron,
}

impl PackingPolyhedron {
    pub fn new(n: usize, a: Vec<Vec<Q>>, b: Vec<Q>) -> Result<Self, Error> {
        check_nonneg_rows(n, &a, &b)?;
        let rows = a
            .iter()
            .zip(&b)
            .map(|(row, rhs)| LinearInequality::le(row.clone(), rhs.clone()))
            .collect();
        let poly = Polyhedron::from_hrep(&HRep::new(n, rows, true))?;
        Ok(PackingPolyhedron { n, a, b, poly })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn matrix(&self) -> &[Vec<Q>] {
        &self.a
    }

    pub fn rhs(&self) -> &[Q] {
        &self.b
    }

    pub fn polyhedron(&self) -> &Polyhedron {
        &self.poly
    }

    /// Every unit vector feasible; equivalent to `A_ij <= b_i` entrywise.
    pub fn is_well_behaved(&self) -> bool {
        (0..self.n).all(|j| self.poly.contains_point(&unit(self.n, j)))
    }

    /// Fixes to zero every variable whose unit vector is infeasible and
    /// eliminates it; the integer points are unchanged. Returns the reduced
    /// instance together with the (sorted) fixed coordinate indices.
    pub fn normalize_well_behaved(&self) -> Result<(PackingPolyhedron, Vec<usize>), Error> {
        let fixed: Vec<usize> = (0..self.n)
            .filter(|&j| !self.poly.contains_point(&unit(self.n, j)))
            .collect();
        if fixed.is_empty() {
            return Ok((self.clone(), fixed));
        }
        let keep: Vec<usize> = (0..self.n).filter(|j| !fixed.contains(j)).collect();
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (row, rhs) in self.a.iter().zip(&self.b) {
            let reduced: Vec<Q> = keep.iter().map(|&j| row[j].clone()).collect();
            if reduced.iter().all(|x| x.is_zero()) {
                continue; // 0 <= b_i with b_i >= 0
            }
            a.push(reduced);
            b.push(rhs.clone());
        }
        let reduced = PackingPolyhedron::new(keep.len(), a, b)?;
        Ok((reduced, fixed))
    }
}

impl CoveringPolyhedron {
    pub fn new(n: usize, a: Vec<Vec<Q>>, b: Vec<Q>) -> Result<Self, Error> {
        check_nonneg_rows(n, &a, &b)?;
        let rows = a
            .iter()
            .zip(&b)
            .map(|(row, rhs)| LinearInequality::ge(row.clone(), rhs.clone()))
            .collect();
        let poly = Polyhedron::from_hrep(&HRep::new(n, rows, true))?;
        Ok(CoveringPolyhedron { n, a, b, poly })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn matrix(&self) -> &[Vec<Q>] {
        &self.a
    }

    pub fn rhs(&self) -> &[Q] {
        &self.b
    }

    pub fn polyhedron(&self) -> &Polyhedron {
        &self.poly
    }

    pub fn is_well_behaved(&self) -> bool {
        self.a
            .iter()
            .zip(&self.b)
            .all(|(row, rhs)| row.iter().all(|x| x <= rhs))
    }

    /// Clamps every coefficient to its row's right-hand side; the integer
    /// points are unchanged.
    pub fn normalize_well_behaved(&self) -> Result<CoveringPolyhedron, Error> {
        if self.is_well_behaved() {
            return Ok(self.clone());
        }
        let a = self
            .a
            .iter()
            .zip(&self.b)
            .map(|(row, rhs)| {
                row.iter()
                    .map(|x| if x > rhs { rhs.clone() } else { x.clone() })
                    .collect()
            })
            .collect();
        CoveringPolyhedron::new(self.n, a, self.b.clone())
    }
}

/// Coordinates in `t` zeroed, others copied.
pub fn breve(u: &[Q], t: &[usize]) -> Vec<Q> {
    u.iter()
        .enumerate()
        .map(|(j, x)| if t.contains(&j) { Q::zero() } else { x.clone() })
        .collect()
}

fn breve_int(u: &[BigInt], t: &[usize]) -> Vec<BigInt> {
    u.iter()
        .enumerate()
        .map(|(j, x)| if t.contains(&j) { BigInt::zero() } else { x.clone() })
        .collect()
}

/// The open strip `{pi0 < pi.x < pi0 + 1}`; contains no integer point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitSet {
    pub pi: Vec<BigInt>,
    pub pi0: BigInt,
}

impl SplitSet {
    pub fn new(pi: Vec<BigInt>, pi0: BigInt) -> Self {
        SplitSet { pi, pi0 }
    }

    pub fn from_i64(pi: &[i64], pi0: i64) -> Self {
        SplitSet {
            pi: pi.iter().map(|&x| BigInt::from(x)).collect(),
            pi0: BigInt::from(pi0),
        }
    }

    pub fn dim(&self) -> usize {
        self.pi.len()
    }

    pub fn pi_q(&self) -> Vec<Q> {
        self.pi.iter().map(from_int).collect()
    }

    /// The side `pi.x <= pi0` in `a.x <= b` form.
    pub fn lower_rows(&self) -> Vec<(Vec<Q>, Q)> {
        vec![(self.pi_q(), from_int(&self.pi0))]
    }

    /// The side `pi.x >= pi0 + 1` in `a.x <= b` form.
    pub fn upper_rows(&self) -> Vec<(Vec<Q>, Q)> {
        let neg: Vec<Q> = self.pi_q().iter().map(|x| -x.clone()).collect();
        vec![(neg, -from_int(&(&self.pi0 + BigInt::one())))]
    }

    pub fn contains_open(&self, x: &[Q]) -> bool {
        let v = dot(&self.pi_q(), x);
        let lo = from_int(&self.pi0);
        let hi = &lo + Q::one();
        lo < v && v < hi
    }

    /// `S(breve(pi), pi0)`; `None` when the zeroed multiplier vanishes.
    pub fn restrict(&self, t: &[usize]) -> Option<SplitSet> {
        let pi = breve_int(&self.pi, t);
        if pi.iter().all(|x| x.is_zero()) {
            return None;
        }
        Some(SplitSet { pi, pi0: self.pi0.clone() })
    }

    /// The same strip as a closed two-row body with open interior.
    pub fn as_body(&self) -> LatticeFreeBody {
        let neg: Vec<BigInt> = self.pi.iter().map(|x| -x).collect();
        LatticeFreeBody {
            dim: self.dim(),
            rows: vec![
                (neg, -self.pi0.clone()),
                (self.pi.clone(), &self.pi0 + BigInt::one()),
            ],
        }
    }
}

/// Union of at most `k` split sets, removed simultaneously.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiBranchSplit {
    pub splits: Vec<SplitSet>,
}

impl MultiBranchSplit {
    pub fn new(splits: Vec<SplitSet>) -> Result<Self, Error> {
        if splits.is_empty() {
            return Err(Error::BadParam("multi-branch split needs at least one member".into()));
        }
        let dim = splits[0].dim();
        for s in &splits {
            if s.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: s.dim() });
            }
        }
        Ok(MultiBranchSplit { splits })
    }

    pub fn dim(&self) -> usize {
        self.splits[0].dim()
    }

    pub fn k(&self) -> usize {
        self.splits.len()
    }

    pub fn contains_open(&self, x: &[Q]) -> bool {
        self.splits.iter().any(|s| s.contains_open(x))
    }

    pub fn restrict(&self, t: &[usize]) -> Option<MultiBranchSplit> {
        let splits: Vec<SplitSet> = self.splits.iter().filter_map(|s| s.restrict(t)).collect();
        if splits.is_empty() {
            return None;
        }
        Some(MultiBranchSplit { splits })
    }
}

/// Closed body `{x : a_j . x <= b_j}` with integer data whose open interior
/// `{a_j . x < b_j for all j}` contains no integer point; the hull operation
/// removes the interior.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeFreeBody {
    pub dim: usize,
    pub rows: Vec<(Vec<BigInt>, BigInt)>,
}

impl LatticeFreeBody {
    pub fn new(dim: usize, rows: Vec<(Vec<BigInt>, BigInt)>) -> Result<Self, Error> {
        if rows.is_empty() {
            return Err(Error::BadParam("lattice-free body needs at least one row".into()));
        }
        for (a, _) in &rows {
            if a.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: a.len() });
            }
        }
        Ok(LatticeFreeBody { dim, rows })
    }

    pub fn from_i64(dim: usize, rows: &[(&[i64], i64)]) -> Self {
        LatticeFreeBody {
            dim,
            rows: rows
                .iter()
                .map(|(a, b)| {
                    (a.iter().map(|&x| BigInt::from(x)).collect(), BigInt::from(*b))
                })
                .collect(),
        }
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn row_q(&self, j: usize) -> (Vec<Q>, Q) {
        let (a, b) = &self.rows[j];
        (a.iter().map(from_int).collect(), from_int(b))
    }

    pub fn interior_contains(&self, x: &[Q]) -> bool {
        (0..self.k()).all(|j| {
            let (a, b) = self.row_q(j);
            dot(&a, x) < b
        })
    }

    /// Zeroes the `t` coordinates in every row. A row that degenerates to
    /// `0 . x < b` is dropped when trivially true (`b > 0`) and empties the
    /// interior otherwise, in which case `None` (nothing to remove) results.
    pub fn restrict(&self, t: &[usize]) -> Option<LatticeFreeBody> {
        let mut rows = Vec::new();
        for (a, b) in &self.rows {
            let a = breve_int(a, t);
            if a.iter().all(|x| x.is_zero()) {
                if b.is_positive() {
                    continue;
                }
                return None;
            }
            rows.push((a, b.clone()));
        }
        Some(LatticeFreeBody { dim: self.dim, rows })
    }
}

/// Any of the three disjunction shapes, as removed from a polyhedron.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeFreeSet {
    Split(SplitSet),
    MultiBranch(MultiBranchSplit),
    Body(LatticeFreeBody),
}

impl LatticeFreeSet {
    pub fn dim(&self) -> usize {
        match self {
            LatticeFreeSet::Split(s) => s.dim(),
            LatticeFreeSet::MultiBranch(m) => m.dim(),
            LatticeFreeSet::Body(l) => l.dim,
        }
    }

    /// Membership in the removed open set.
    pub fn contains_open(&self, x: &[Q]) -> bool {
        match self {
            LatticeFreeSet::Split(s) => s.contains_open(x),
            LatticeFreeSet::MultiBranch(m) => m.contains_open(x),
            LatticeFreeSet::Body(l) => l.interior_contains(x),
        }
    }

    /// The disjunction pieces as row lists (each in `a.x <= b` form); the
    /// hull of `p` minus the set is the hull of the union of `p` intersected
    /// with each piece.
    pub fn pieces(&self) -> Vec<Vec<(Vec<Q>, Q)>> {
        match self {
            LatticeFreeSet::Split(s) => vec![s.lower_rows(), s.upper_rows()],
            LatticeFreeSet::MultiBranch(m) => {
                // All sign patterns over the member splits.
                let k = m.k();
                let mut out = Vec::with_capacity(1 << k);
                for mask in 0u32..(1u32 << k) {
                    let mut rows = Vec::with_capacity(k);
                    for (i, s) in m.splits.iter().enumerate() {
                        if mask & (1 << i) == 0 {
                            rows.extend(s.lower_rows());
                        } else {
                            rows.extend(s.upper_rows());
                        }
                    }
                    out.push(rows);
                }
                out
            }
            LatticeFreeSet::Body(l) => (0..l.k())
                .map(|j| {
                    let (a, b) = l.row_q(j);
                    let neg: Vec<Q> = a.iter().map(|x| -x.clone()).collect();
                    vec![(neg, -b)]
                })
                .collect(),
        }
    }

    pub fn restrict(&self, t: &[usize]) -> Option<LatticeFreeSet> {
        match self {
            LatticeFreeSet::Split(s) => s.restrict(t).map(LatticeFreeSet::Split),
            LatticeFreeSet::MultiBranch(m) => m.restrict(t).map(LatticeFreeSet::MultiBranch),
            LatticeFreeSet::Body(l) => l.restrict(t).map(LatticeFreeSet::Body),
        }
    }
}

/// All integer points of the box, or an error when their number exceeds `cap`.
pub fn lattice_points(bounds: &[(BigInt, BigInt)], cap: u64) -> Result<Vec<Vec<BigInt>>, Error> {
    let mut count = BigInt::one();
    for (lo, hi) in bounds {
        if hi < lo {
            return Ok(Vec::new());
        }
        count *= hi - lo + BigInt::one();
    }
    if count > BigInt::from(cap) {
        let needed = u64::try_from(&count).unwrap_or(u64::MAX);
        return Err(Error::CapExceeded { needed, cap });
    }
    let mut out = Vec::new();
    let mut cur: Vec<BigInt> = bounds.iter().map(|(lo, _)| lo.clone()).collect();
    'outer: loop {
        out.push(cur.clone());
        for j in (0..bounds.len()).rev() {
            if cur[j] < bounds[j].1 {
                cur[j] += BigInt::one();
                for i in j + 1..bounds.len() {
                    cur[i] = bounds[i].0.clone();
                }
                continue 'outer;
            }
        }
        break;
    }
    Ok(out)
}

/// True iff no integer point of the box lies in the removed open set.
pub fn is_strict_lattice_free(
    set: &LatticeFreeSet,
    bounds: &[(BigInt, BigInt)],
    cap: u64,
) -> Result<bool, Error> {
    if bounds.len() != set.dim() {
        return Err(Error::DimensionMismatch { expected: set.dim(), found: bounds.len() });
    }
    for p in lattice_points(bounds, cap)? {
        let x: Vec<Q> = p.iter().map(from_int).collect();
        if set.contains_open(&x) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Provenance of a derived inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    ChvatalGomory { lambda: Vec<Q> },
    Disjunction(LatticeFreeSet),
    Aggregation { alpha: Q },
}

#[derive(Debug, Clone)]
pub struct CutInequality {
    pub ineq: LinearInequality,
    pub provenance: Provenance,
}

impl CutInequality {
    pub fn is_trivial(&self) -> bool {
        self.ineq.is_trivial()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{q, qr};

    fn qm(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    fn qv(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    fn ibox(b: &[(i64, i64)]) -> Vec<(BigInt, BigInt)> {
        b.iter().map(|&(l, h)| (BigInt::from(l), BigInt::from(h))).collect()
    }

    #[test]
    fn well_behaved_checks() {
        let tight = PackingPolyhedron::new(2, qm(&[&[1, 3], &[3, 1]]), qv(&[3, 3])).unwrap();
        assert!(tight.is_well_behaved());

        let cov = CoveringPolyhedron::new(2, qm(&[&[3, 1]]), qv(&[2])).unwrap();
        assert!(!cov.is_well_behaved());

        let stable4 = PackingPolyhedron::new(
            4,
            qm(&[
                &[1, 1, 0, 0],
                &[1, 0, 1, 0],
                &[1, 0, 0, 1],
                &[0, 1, 1, 0],
                &[0, 1, 0, 1],
                &[0, 0, 1, 1],
            ]),
            qv(&[1, 1, 1, 1, 1, 1]),
        )
        .unwrap();
        assert!(stable4.is_well_behaved());
    }

    #[test]
    fn normalize_covering_clamps() {
        let cov = CoveringPolyhedron::new(2, qm(&[&[3, 1]]), qv(&[2])).unwrap();
        let norm = cov.normalize_well_behaved().unwrap();
        assert_eq!(norm.matrix(), &qm(&[&[2, 1]])[..]);
        assert!(norm.is_well_behaved());
        // Integer points are unchanged (checked on a small box).
        for p in lattice_points(&ibox(&[(0, 4), (0, 4)]), 1000).unwrap() {
            let x: Vec<Q> = p.iter().map(from_int).collect();
            assert_eq!(
                cov.polyhedron().contains_point(&x),
                norm.polyhedron().contains_point(&x)
            );
        }
        let again = norm.normalize_well_behaved().unwrap();
        assert_eq!(again.matrix(), norm.matrix());
    }

    #[test]
    fn normalize_packing_fixes_variables() {
        let p = PackingPolyhedron::new(2, qm(&[&[2, 1]]), qv(&[1])).unwrap();
        let (norm, fixed) = p.normalize_well_behaved().unwrap();
        assert_eq!(fixed, vec![0]);
        assert_eq!(norm.n(), 1);
        assert_eq!(norm.matrix(), &qm(&[&[1]])[..]);
        assert_eq!(norm.rhs(), &qv(&[1])[..]);
        assert!(norm.is_well_behaved());

        let tight = PackingPolyhedron::new(2, qm(&[&[1, 3], &[3, 1]]), qv(&[3, 3])).unwrap();
        let (same, fixed) = tight.normalize_well_behaved().unwrap();
        assert!(fixed.is_empty());
        assert_eq!(same.matrix(), tight.matrix());
    }

    #[test]
    fn breve_examples() {
        let u = vec![q(1), q(-2), q(3)];
        assert_eq!(breve(&u, &[1]), vec![q(1), q(0), q(3)]);
        assert_eq!(breve(&u, &[]), u);
        assert_eq!(breve(&u, &[0, 1, 2]), vec![q(0), q(0), q(0)]);
        // Idempotent and linear.
        assert_eq!(breve(&breve(&u, &[1]), &[1]), breve(&u, &[1]));
        let v = vec![qr(1, 2), q(5), q(0)];
        let sum: Vec<Q> = u.iter().zip(&v).map(|(a, b)| a + b).collect();
        let breve_sum: Vec<Q> = breve(&u, &[1]).iter().zip(breve(&v, &[1])).map(|(a, b)| a + b).collect();
        assert_eq!(breve(&sum, &[1]), breve_sum);
    }

    #[test]
    fn restrict_examples() {
        let s = SplitSet::from_i64(&[2, 1], 0);
        assert_eq!(s.restrict(&[1]), Some(SplitSet::from_i64(&[2, 0], 0)));
        assert_eq!(s.restrict(&[]), Some(s.clone()));

        let axis = SplitSet::from_i64(&[0, 1], 0);
        assert_eq!(axis.restrict(&[1]), None);

        let mb = MultiBranchSplit::new(vec![s.clone(), axis.clone()]).unwrap();
        let r = mb.restrict(&[1]).unwrap();
        assert_eq!(r.splits, vec![SplitSet::from_i64(&[2, 0], 0)]);
        assert_eq!(MultiBranchSplit::new(vec![axis]).unwrap().restrict(&[1]), None);

        // x1 <= 0 and x1 >= 1: restricting away x1 empties the interior.
        let l = LatticeFreeBody::from_i64(2, &[(&[1, 0], 0), (&[-1, 0], -1)]);
        assert_eq!(l.restrict(&[0]), None);
        // A positive-rhs degenerate row is simply dropped.
        let strip = LatticeFreeBody::from_i64(2, &[(&[-1, 0], 1), (&[0, 1], 1)]);
        let r = strip.restrict(&[0]).unwrap();
        assert_eq!(r.rows, LatticeFreeBody::from_i64(2, &[(&[0, 1], 1)]).rows);
    }

    #[test]
    fn strict_lattice_free_examples() {
        let cap = 100_000;
        let s = LatticeFreeSet::Split(SplitSet::from_i64(&[1, 1], 1));
        assert!(is_strict_lattice_free(&s, &ibox(&[(0, 5), (0, 5)]), cap).unwrap());

        let s2 = LatticeFreeSet::Split(SplitSet::from_i64(&[2, 0], 1));
        assert!(is_strict_lattice_free(&s2, &ibox(&[(0, 3), (0, 3)]), cap).unwrap());

        let strip = LatticeFreeSet::Body(LatticeFreeBody::from_i64(
            2,
            &[(&[-1, 0], 0), (&[1, 0], 1)],
        ));
        assert!(is_strict_lattice_free(&strip, &ibox(&[(-2, 2), (-2, 2)]), cap).unwrap());

        // A fat strip is not lattice-free.
        let fat = LatticeFreeSet::Body(LatticeFreeBody::from_i64(
            2,
            &[(&[-1, 0], 1), (&[1, 0], 2)],
        ));
        assert!(!is_strict_lattice_free(&fat, &ibox(&[(-2, 2), (-2, 2)]), cap).unwrap());

        let err = is_strict_lattice_free(&s, &ibox(&[(0, 1000), (0, 1000)]), 100);
        assert!(matches!(err, Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn lattice_points_enumerates_boxes() {
        let pts = lattice_points(&ibox(&[(0, 1), (2, 4)]), 100).unwrap();
        assert_eq!(pts.len(), 6);
        assert_eq!(pts[0], vec![BigInt::from(0), BigInt::from(2)]);
        assert_eq!(pts[5], vec![BigInt::from(1), BigInt::from(4)]);
        assert!(lattice_points(&ibox(&[(3, 2)]), 100).unwrap().is_empty());
    }

    #[test]
    fn split_pieces_and_membership() {
        let s = SplitSet::from_i64(&[1, 1], 1);
        assert!(s.contains_open(&[qr(3, 4), qr(3, 4)]));
        assert!(!s.contains_open(&[q(1), q(0)]));
        assert!(!s.contains_open(&[q(1), q(1)]));

        let set = LatticeFreeSet::Split(s.clone());
        let pieces = set.pieces();
        assert_eq!(pieces.len(), 2);
        assert_eq!(pieces[0], vec![(qv(&[1, 1]), q(1))]);
        assert_eq!(pieces[1], vec![(qv(&[-1, -1]), q(-2))]);

        // A split written as a two-row body removes the same open set.
        let body = LatticeFreeSet::Body(s.as_body());
        for x in [vec![qr(3, 4), qr(3, 4)], vec![q(1), q(0)], vec![qr(5, 2), q(0)]] {
            assert_eq!(set.contains_open(&x), body.contains_open(&x));
        }

        let mb = MultiBranchSplit::new(vec![
            SplitSet::from_i64(&[1, 0], 0),
            SplitSet::from_i64(&[0, 1], 0),
        ])
        .unwrap();
        assert_eq!(LatticeFreeSet::MultiBranch(mb).pieces().len(), 4);
    }
}
