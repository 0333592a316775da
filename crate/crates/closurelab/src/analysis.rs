//! Integrality gaps, rank bounds from gap growth rates, iterated restricted
//! closures, and per-disjunction verification of the scaled-containment
//! approximation guarantees.

use num_traits::{One, Signed, Zero};

use crate::catalog::{ones, tight_covering, tight_packing, Instance, Kind};
use crate::closures::{
    disjunctive_hull, enumerate_family, enumerated_closure, integer_hull, split_hull, FamilyKind,
    FamilySpec,
};
use crate::error::Error;
use crate::geom::{contains_polyhedron, scale, set_eq, Objective, Outcome, Polyhedron};
use crate::models::{LatticeFreeSet, PackingPolyhedron, SplitSet};
use crate::rat::{ceil_log_ratio, q, Q};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GapValue {
    Finite(Q),
    Infinite,
}

#[derive(Debug, Clone)]
pub struct GapReport {
    pub cost: Vec<Q>,
    pub z_lp: Q,
    pub z_int: Q,
    pub z_closure: Option<Q>,
    pub gap: GapValue,
    pub family: Option<FamilySpec>,
}

#[derive(Debug, Clone)]
pub struct RankBoundReport {
    pub lower: u32,
    pub upper: Option<u32>,
    pub alpha_used: Q,
    pub formula: String,
}

#[derive(Debug, Clone)]
pub struct ApproxVerdict {
    pub alpha: Q,
    pub holds: bool,
    pub witness: Option<Vec<Q>>,
    pub disjunction: Option<LatticeFreeSet>,
}

fn optimal_value(p: &Polyhedron, c: &[Q], obj: Objective) -> Result<Q, Error> {
    match p.optimize(c, obj)? {
        Outcome::Optimal { value, .. } => Ok(value),
        Outcome::Unbounded { .. } => Err(Error::BadParam("objective is unbounded".into())),
        Outcome::Infeasible => Err(Error::BadParam("polyhedron is empty".into())),
    }
}

fn objective(kind: Kind) -> Objective {
    match kind {
        Kind::Packing => Objective::Max,
        Kind::Covering => Objective::Min,
    }
}

/// Exact LP and integer optima with their ratio (always >= 1, oriented by
/// the problem type).
pub fn integrality_gap(
    p: &Polyhedron,
    kind: Kind,
    c: &[Q],
    cap: u64,
) -> Result<GapReport, Error> {
    if c.iter().any(|x| x.is_negative()) {
        return Err(Error::NegativeData("cost vector".into()));
    }
    let obj = objective(kind);
    let z_lp = optimal_value(p, c, obj)?;
    let hull = integer_hull(p, cap)?;
    let z_int = optimal_value(&hull, c, obj)?;
    let gap = match kind {
        Kind::Packing => {
            if !z_int.is_zero() {
                GapValue::Finite(&z_lp / &z_int)
            } else if z_lp.is_zero() {
                GapValue::Finite(Q::one())
            } else {
                GapValue::Infinite
            }
        }
        Kind::Covering => {
            if !z_lp.is_zero() {
                GapValue::Finite(&z_int / &z_lp)
            } else if z_int.is_zero() {
                GapValue::Finite(Q::one())
            } else {
                GapValue::Infinite
            }
        }
    };
    Ok(GapReport { cost: c.to_vec(), z_lp, z_int, z_closure: None, gap, family: None })
}

/// The guaranteed per-family approximation factor for an n-variable packing
/// instance: 2 for splits, min{2^k, n}+1 for k-branch splits, min{k, n}+1
/// for k-row lattice-free bodies.
pub fn approximation_factor(kind: FamilyKind, n: usize) -> Q {
    match kind {
        FamilyKind::Split => q(2),
        FamilyKind::KBranch(k) => {
            let pow = 1usize.checked_shl(k as u32).unwrap_or(usize::MAX);
            q(pow.min(n) as i64 + 1)
        }
        FamilyKind::LatticeFree(k) => q(k.min(n) as i64 + 1),
    }
}

/// Finite-cost lower bound on the closure rank: the gap shrinks by at most
/// the approximation factor per closure round, so at least
/// `ceil(log(gap) / log(alpha))` rounds are needed. The supremum over all
/// costs is approximated by the supplied list.
pub fn rank_lower_bound(
    p: &Polyhedron,
    kind: Kind,
    costs: &[Vec<Q>],
    alpha: &Q,
    formula: &str,
    cap: u64,
) -> Result<RankBoundReport, Error> {
    if *alpha <= Q::one() {
        return Err(Error::BadParam(format!("alpha must exceed 1, got {alpha}")));
    }
    let mut lower = 0u32;
    for c in costs {
        let report = integrality_gap(p, kind, c, cap)?;
        let gap = match report.gap {
            GapValue::Finite(g) => g,
            GapValue::Infinite => {
                return Err(Error::BadParam("infinite gap admits no finite rank bound".into()))
            }
        };
        let t = ceil_log_ratio(&gap, alpha)
            .ok_or_else(|| Error::BadParam("gap too large for rank bound".into()))?;
        lower = lower.max(t);
    }
    Ok(RankBoundReport {
        lower,
        upper: None,
        alpha_used: alpha.clone(),
        formula: formula.to_string(),
    })
}

/// Iterates the restricted closure until it matches the integer hull;
/// returns the round count, or `None` when `max_iter` rounds do not
/// converge. Because every restricted closure contains the true closure,
/// a convergent count is a valid upper bound on the true rank.
pub fn iterated_closure_rank(
    p: &Polyhedron,
    f: &FamilySpec,
    max_iter: u32,
    cap: u64,
) -> Result<Option<u32>, Error> {
    let hull = integer_hull(p, cap)?;
    let mut cur = p.clone();
    for t in 0..=max_iter {
        if set_eq(&cur, &hull)? {
            return Ok(Some(t));
        }
        if t == max_iter {
            break;
        }
        cur = enumerated_closure(&cur, f)?.polyhedron;
    }
    Ok(None)
}

/// Per-disjunction scaled containment over precomputed family members: `p`
/// lies inside `alpha` times each hull. Packing uses alpha > 1 (the hull may
/// shrink by at most that factor); covering uses alpha < 1 (scaling a
/// covering set down enlarges it, so the hull may tighten by at most 1/alpha
/// in objective value).
pub fn verify_alpha_members(
    inst: &Instance,
    members: &[LatticeFreeSet],
    alpha: &Q,
) -> Result<Vec<ApproxVerdict>, Error> {
    if !inst.is_well_behaved() {
        return Err(Error::NotWellBehaved);
    }
    let p = inst.polyhedron();
    let mut out = Vec::with_capacity(members.len());
    for m in members {
        let hull = disjunctive_hull(p, m)?;
        let scaled = scale(&hull, alpha)?;
        let holds = contains_polyhedron(&scaled, p)?;
        let witness = if holds {
            None
        } else {
            p.vrep()
                .vertices
                .iter()
                .find(|v| !scaled.contains_point(v))
                .cloned()
        };
        out.push(ApproxVerdict {
            alpha: alpha.clone(),
            holds,
            witness,
            disjunction: Some(m.clone()),
        });
    }
    Ok(out)
}

pub fn verify_alpha_per_disjunction(
    inst: &Instance,
    f: &FamilySpec,
    alpha: &Q,
) -> Result<Vec<ApproxVerdict>, Error> {
    let members = enumerate_family(inst.polyhedron(), f, crate::enumeration_cap())?;
    verify_alpha_members(inst, &members, alpha)
}

/// Reproduces the parameterized worst-case families: the single all-ones
/// split certifies the closure value, and the LP/closure ratio approaches 2
/// as the parameter grows.
pub fn tightness_experiment(kind: Kind, param: i64) -> Result<GapReport, Error> {
    let cap = crate::enumeration_cap();
    match kind {
        Kind::Packing => {
            let p = tight_packing(param)?;
            let c = ones(2);
            let z_lp = optimal_value(p.polyhedron(), &c, Objective::Max)?;
            let hull = split_hull(p.polyhedron(), &SplitSet::from_i64(&[1, 1], 1))?;
            let z_closure = optimal_value(&hull, &c, Objective::Max)?;
            let z_int = optimal_value(&integer_hull(p.polyhedron(), cap)?, &c, Objective::Max)?;
            let gap = GapValue::Finite(&z_lp / &z_int);
            Ok(GapReport {
                cost: c,
                z_lp,
                z_int,
                z_closure: Some(z_closure),
                gap,
                family: Some(FamilySpec::split(1)),
            })
        }
        Kind::Covering => {
            let n = usize::try_from(param)
                .map_err(|_| Error::BadParam("covering parameter out of range".into()))?;
            let c = tight_covering(n)?;
            let cost = ones(n);
            let z_lp = optimal_value(c.polyhedron(), &cost, Objective::Min)?;
            let split = SplitSet::from_i64(&vec![1i64; n], 1);
            let hull = split_hull(c.polyhedron(), &split)?;
            let z_closure = optimal_value(&hull, &cost, Objective::Min)?;
            let z_int = optimal_value(&integer_hull(c.polyhedron(), cap)?, &cost, Objective::Min)?;
            let gap = GapValue::Finite(&z_int / &z_lp);
            Ok(GapReport {
                cost,
                z_lp,
                z_int,
                z_closure: Some(z_closure),
                gap,
                family: Some(FamilySpec::split(1)),
            })
        }
    }
}

/// The LP relaxation of a well-behaved packing instance is within factor
/// `min{m, n} + 1` of its integer hull, both per supplied cost and as a
/// scaled-set containment.
pub fn verify_int_gap_bound(
    p: &PackingPolyhedron,
    costs: &[Vec<Q>],
    cap: u64,
) -> Result<ApproxVerdict, Error> {
    if !p.is_well_behaved() {
        return Err(Error::NotWellBehaved);
    }
    let factor = q(p.m().min(p.n()) as i64 + 1);
    let hull = integer_hull(p.polyhedron(), cap)?;
    let scaled = scale(&hull, &factor)?;
    let mut holds = contains_polyhedron(&scaled, p.polyhedron())?;
    let mut witness = if holds {
        None
    } else {
        p.polyhedron()
            .vrep()
            .vertices
            .iter()
            .find(|v| !scaled.contains_point(v))
            .cloned()
    };
    for c in costs {
        let z_lp = optimal_value(p.polyhedron(), c, Objective::Max)?;
        let z_int = optimal_value(&hull, c, Objective::Max)?;
        if z_lp > &factor * &z_int {
            holds = false;
            witness.get_or_insert_with(|| c.clone());
        }
    }
    Ok(ApproxVerdict { alpha: factor, holds, witness, disjunction: None })
}

/// Facets of a covering-type polyhedron in `beta . x >= delta` form, with
/// the plain sign constraints `x_j >= 0` filtered out.
pub fn covering_facets(p: &Polyhedron) -> Vec<(Vec<Q>, Q)> {
    p.hrep()
        .rows
        .iter()
        .map(|r| r.ge_form())
        .filter(|(beta, delta)| {
            let unit_nonneg = delta.is_zero()
                && beta.iter().filter(|x| !x.is_zero()).count() == 1
                && beta.iter().all(|x| !x.is_negative());
            !unit_nonneg
        })
        .collect()
}

/// Whether every facet has nonnegative coefficients and rhs.
pub fn is_covering_type(p: &Polyhedron) -> bool {
    covering_facets(p)
        .iter()
        .all(|(beta, delta)| beta.iter().all(|x| !x.is_negative()) && !delta.is_negative())
}

/// Whether every structural facet `beta . x >= delta` satisfies
/// `beta_j <= delta`.
pub fn facets_well_behaved_covering(p: &Polyhedron) -> bool {
    covering_facets(p)
        .iter()
        .all(|(beta, delta)| beta.iter().all(|x| x <= delta))
}

/// Open-question probe: searches enumerated lattice-free closures of
/// covering instances for a well-behavedness violation. Findings are
/// returned as messages, never asserted.
pub fn search_covering_latticefree_wellbehaved(
    instances: &[crate::models::CoveringPolyhedron],
    f: &FamilySpec,
) -> Result<Vec<String>, Error> {
    let mut findings = Vec::new();
    for (i, c) in instances.iter().enumerate() {
        let closure = enumerated_closure(c.polyhedron(), f)?;
        if !facets_well_behaved_covering(&closure.polyhedron) {
            for (beta, delta) in covering_facets(&closure.polyhedron) {
                if beta.iter().any(|x| x > &delta) {
                    findings.push(format!(
                        "instance {i}: facet with coefficients {beta:?} exceeds rhs {delta}"
                    ));
                }
            }
        }
    }
    Ok(findings)
}
