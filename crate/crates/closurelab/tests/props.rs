//! Property-based invariants of the geometry kernel and the closure
//! machinery, driven by seeded random well-behaved instances.

mod common;

use proptest::prelude::*;

use closurelab::catalog::{random_well_behaved, Instance, Kind};
use closurelab::closures::{closure_over, enumerate_family, split_hull, FamilySpec};
use closurelab::geom::{
    contains_polyhedron, intersection, scale, set_eq, Objective, Outcome, Polyhedron,
};
use closurelab::models::{breve, SplitSet};
use closurelab::rat::{dot, format_rational, lex_cmp, parse_rational, q, qr, Q};
use num_traits::Zero;

const CAP: u64 = 1_000_000;

fn arb_instance() -> impl Strategy<Value = Instance> {
    (
        prop_oneof![Just(Kind::Packing), Just(Kind::Covering)],
        2usize..=3,
        1usize..=3,
        1i64..=4,
        any::<u64>(),
    )
        .prop_map(|(kind, n, m, coeff_max, seed)| {
            random_well_behaved(kind, n, m, coeff_max, seed).expect("generator is total")
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    /// Converting H -> V -> H -> V reaches a fixpoint describing the same
    /// set.
    #[test]
    fn representation_round_trip(inst in arb_instance()) {
        let p = inst.polyhedron();
        let again = Polyhedron::from_vrep(p.vrep()).unwrap();
        prop_assert!(set_eq(p, &again).unwrap());
        let once_more = Polyhedron::from_hrep(again.hrep()).unwrap();
        prop_assert_eq!(p.vrep(), once_more.vrep());
        prop_assert_eq!(p.hrep(), once_more.hrep());
    }

    /// Scaling by alpha and back by 1/alpha is the identity.
    #[test]
    fn scaling_round_trip(inst in arb_instance(), num in 1i64..=5, den in 1i64..=5) {
        let alpha = qr(num, den);
        let p = inst.polyhedron();
        let there = scale(p, &alpha).unwrap();
        let back = scale(&there, &(Q::from_integer(1.into()) / &alpha)).unwrap();
        prop_assert!(set_eq(p, &back).unwrap());
    }

    /// Optimization agrees with direct evaluation over the generators: an
    /// optimal value is attained at a vertex and not improvable along any
    /// ray; an unbounded verdict exhibits an improving ray.
    #[test]
    fn optimize_matches_generators(inst in arb_instance(), c0 in 0i64..=3, c1 in 0i64..=3, c2 in 0i64..=3) {
        let p = inst.polyhedron();
        let c: Vec<Q> = [c0, c1, c2][..p.dim()].iter().map(|&x| q(x)).collect();
        match p.optimize(&c, Objective::Max).unwrap() {
            Outcome::Optimal { value, vertex } => {
                prop_assert!(p.contains_point(&vertex));
                prop_assert_eq!(dot(&c, &vertex), value.clone());
                for v in &p.vrep().vertices {
                    prop_assert!(dot(&c, v) <= value);
                }
                for r in &p.vrep().rays {
                    prop_assert!(dot(&c, r) <= Q::zero());
                }
            }
            Outcome::Unbounded { ray } => {
                prop_assert!(p.recession_contains(&ray));
                prop_assert!(dot(&c, &ray) > Q::zero());
            }
            Outcome::Infeasible => prop_assert!(p.is_empty()),
        }
    }

    /// Containment is reflexive, and an intersection is contained in both
    /// arguments.
    #[test]
    fn containment_and_intersection(a in arb_instance(), b in arb_instance()) {
        prop_assume!(a.n() == b.n());
        let (pa, pb) = (a.polyhedron(), b.polyhedron());
        prop_assert!(contains_polyhedron(pa, pa).unwrap());
        let both = intersection(&[pa, pb]).unwrap();
        prop_assert!(contains_polyhedron(pa, &both).unwrap());
        prop_assert!(contains_polyhedron(pb, &both).unwrap());
    }

    /// Zeroing a coordinate set is idempotent and commutes with addition.
    #[test]
    fn breve_is_projection(v in prop::collection::vec(-20i64..=20, 2..=4), t0 in 0usize..4, t1 in 0usize..4) {
        let u: Vec<Q> = v.iter().map(|&x| q(x)).collect();
        let t: Vec<usize> = [t0, t1].iter().copied().filter(|&i| i < u.len()).collect();
        let once = breve(&u, &t);
        prop_assert_eq!(breve(&once, &t), once.clone());
        for &i in &t {
            prop_assert!(once[i].is_zero());
        }
        let w: Vec<Q> = u.iter().map(|x| x + x).collect();
        let sum: Vec<Q> = once.iter().zip(breve(&w, &t)).map(|(a, b)| a + b).collect();
        let direct: Vec<Q> = u.iter().zip(&w).map(|(a, b)| a + b).collect();
        prop_assert_eq!(breve(&direct, &t), sum);
    }

    /// A split hull is sandwiched between the instance and its integer
    /// points, and the disjunction member order cannot change the closure.
    #[test]
    fn closure_determinism_and_sandwich(inst in arb_instance(), seed in any::<u64>()) {
        let p = inst.polyhedron();
        let f = FamilySpec::split(1);
        let mut members = enumerate_family(p, &f, CAP).unwrap();
        let fwd = closure_over(p, &f, &members).unwrap().polyhedron;
        members.reverse();
        let rev = closure_over(p, &f, &members).unwrap().polyhedron;
        prop_assert_eq!(fwd.hrep(), rev.hrep());
        prop_assert!(contains_polyhedron(p, &fwd).unwrap());
        // Integer points of p survive in the closure.
        let probe = (seed % 4) as i64;
        let z: Vec<Q> = (0..p.dim()).map(|j| q(((probe + j as i64) % 3).abs())).collect();
        if p.contains_point(&z) {
            prop_assert!(fwd.contains_point(&z));
        }
    }

    /// Vertex enumeration agrees with the brute-force oracle on everything
    /// the oracle can handle.
    #[test]
    fn oracle_agreement(inst in arb_instance()) {
        let p = inst.polyhedron();
        let expected = common::oracle_vertices(p.dim(), &p.hrep().all_le_rows());
        let mut got = p.vrep().vertices.clone();
        got.sort_by(|a, b| lex_cmp(a, b));
        prop_assert_eq!(got, expected);
    }

    /// Rational literals round-trip through formatting.
    #[test]
    fn rational_text_round_trip(n in any::<i32>(), d in 1i32..=1000) {
        let x = qr(n as i64, d as i64);
        prop_assert_eq!(parse_rational(&format_rational(&x)).unwrap(), x);
    }

    /// A split strip disjoint from the instance removes nothing.
    #[test]
    fn distant_split_is_inert(inst in arb_instance()) {
        let p = inst.polyhedron();
        let pi = vec![1i64; p.dim()];
        let hull = split_hull(p, &SplitSet::from_i64(&pi, -1000)).unwrap();
        prop_assert!(set_eq(&hull, p).unwrap());
    }
}
