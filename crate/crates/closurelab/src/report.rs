//! JSON documents exchanged with the command-line tool: instance files and
//! result reports. Every number is serialized as an exact rational string
//! (`"p/q"` or an integer literal), never as a float, so reports round-trip
//! losslessly and can serve as golden fixtures.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::analysis::{ApproxVerdict, GapReport, GapValue, RankBoundReport};
use crate::catalog::{Instance, Kind};
use crate::closures::{FamilyKind, FamilySpec};
use crate::error::Error;
use crate::models::{CoveringPolyhedron, LatticeFreeSet, PackingPolyhedron};
use crate::rat::{format_rational, parse_rational, Q};

pub fn format_vec(v: &[Q]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

pub fn parse_vec(v: &[String]) -> Result<Vec<Q>, Error> {
    v.iter().map(|s| parse_rational(s)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowFile {
    pub coeffs: Vec<String>,
    pub rhs: String,
}

/// On-disk instance: the row sense is fixed by `kind` (`<=` for packing,
/// `>=` for covering) and nonnegativity of the variables is implicit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub dim: usize,
    pub kind: Kind,
    pub rows: Vec<RowFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl InstanceFile {
    pub fn from_instance(inst: &Instance, name: Option<String>) -> Self {
        let rows = inst
            .matrix()
            .iter()
            .zip(inst.rhs())
            .map(|(row, rhs)| RowFile { coeffs: format_vec(row), rhs: format_rational(rhs) })
            .collect();
        InstanceFile { dim: inst.n(), kind: inst.kind(), rows, name }
    }

    pub fn to_instance(&self) -> Result<Instance, Error> {
        let mut a = Vec::with_capacity(self.rows.len());
        let mut b = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            a.push(parse_vec(&row.coeffs)?);
            b.push(parse_rational(&row.rhs)?);
        }
        Ok(match self.kind {
            Kind::Packing => Instance::Packing(PackingPolyhedron::new(self.dim, a, b)?),
            Kind::Covering => Instance::Covering(CoveringPolyhedron::new(self.dim, a, b)?),
        })
    }
}

/// Family metadata recorded in every closure-derived report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInfo {
    pub kind: String,
    pub k: usize,
    pub coeff_bound: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub offset_bound: Option<i64>,
    pub count: usize,
}

impl FamilyInfo {
    pub fn from_spec(f: &FamilySpec, count: usize) -> Self {
        let (kind, k) = match f.kind {
            FamilyKind::Split => ("split".to_string(), 1),
            FamilyKind::KBranch(k) => ("kbranch".to_string(), k),
            FamilyKind::LatticeFree(k) => ("latticefree".to_string(), k),
        };
        FamilyInfo { kind, k, coeff_bound: f.coeff_bound, offset_bound: f.offset_bound, count }
    }
}

/// One inequality of a dumped H-representation, in the sense implied by
/// `sense` (`"<="` or `">="`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacetFile {
    pub coeffs: Vec<String>,
    pub sense: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ResultRecord {
    Gap {
        cost: Vec<String>,
        z_lp: String,
        z_int: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        z_closure: Option<String>,
        /// `"inf"` when the integer program is infeasible in the relevant
        /// orientation.
        gap: String,
    },
    Rank {
        lower: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        upper: Option<u32>,
        alpha_used: String,
        formula: String,
    },
    Verdict {
        alpha: String,
        holds: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witness: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        disjunction: Option<String>,
    },
    Value {
        label: String,
        value: String,
    },
    Hull {
        label: String,
        facets: Vec<FacetFile>,
    },
}

/// Compact single-line rendering of a disjunction, for report provenance.
pub fn describe_disjunction(set: &LatticeFreeSet) -> String {
    match set {
        LatticeFreeSet::Split(s) => format!("split pi={:?} pi0={}", s.pi, s.pi0),
        LatticeFreeSet::MultiBranch(m) => {
            let parts: Vec<String> = m
                .splits
                .iter()
                .map(|s| format!("pi={:?} pi0={}", s.pi, s.pi0))
                .collect();
            format!("kbranch [{}]", parts.join("; "))
        }
        LatticeFreeSet::Body(b) => {
            let parts: Vec<String> = b
                .rows
                .iter()
                .map(|(a, c)| format!("{a:?}.x <= {c}"))
                .collect();
            format!("body [{}]", parts.join("; "))
        }
    }
}

impl ResultRecord {
    pub fn from_gap(r: &GapReport) -> Self {
        ResultRecord::Gap {
            cost: format_vec(&r.cost),
            z_lp: format_rational(&r.z_lp),
            z_int: format_rational(&r.z_int),
            z_closure: r.z_closure.as_ref().map(format_rational),
            gap: match &r.gap {
                GapValue::Finite(g) => format_rational(g),
                GapValue::Infinite => "inf".to_string(),
            },
        }
    }

    pub fn from_rank(r: &RankBoundReport) -> Self {
        ResultRecord::Rank {
            lower: r.lower,
            upper: r.upper,
            alpha_used: format_rational(&r.alpha_used),
            formula: r.formula.clone(),
        }
    }

    pub fn from_verdict(v: &ApproxVerdict) -> Self {
        ResultRecord::Verdict {
            alpha: format_rational(&v.alpha),
            holds: v.holds,
            witness: v.witness.as_ref().map(|w| format_vec(w)),
            disjunction: v.disjunction.as_ref().map(describe_disjunction),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub command: String,
    pub instance: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<FamilyInfo>,
    pub results: Vec<ResultRecord>,
    /// Closure-derived values come from a finite enumerated family and are
    /// therefore upper approximations of the true closure; always `true`.
    pub restricted: bool,
    pub versions: BTreeMap<String, String>,
}

impl ReportFile {
    pub fn new(command: &str, instance: &str) -> Self {
        let mut versions = BTreeMap::new();
        versions.insert("closurelab".to_string(), env!("CARGO_PKG_VERSION").to_string());
        versions.insert("format".to_string(), "1".to_string());
        ReportFile {
            command: command.to_string(),
            instance: instance.to_string(),
            family: None,
            results: Vec::new(),
            restricted: true,
            versions,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}
