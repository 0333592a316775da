//! Exact rational polyhedral laboratory for disjunctive cutting-plane
//! closures of packing and covering integer programs.

pub mod analysis;
pub mod catalog;
pub mod closures;
pub mod dd;
pub mod error;
pub mod geom;
pub mod models;
pub mod rat;
pub mod report;

/// Cap on enumerated lattice points / family members; `CLOSURELAB_CAP`
/// overrides the default of one million.
pub fn enumeration_cap() -> u64 {
    std::env::var("CLOSURELAB_CAP")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(1_000_000)
}

pub use error::Error;
pub use geom::{
    closed_convex_hull_union, contains_polyhedron, dd_convert, dd_convert_back, intersection,
    scale, set_eq, HRep, LinearInequality, Objective, Outcome, Polyhedron, Sense, VRep,
};
pub use rat::{format_rational, parse_rational, Q};
