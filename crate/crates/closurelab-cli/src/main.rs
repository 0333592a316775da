//! Command-line front end: loads or constructs instances, runs restricted
//! closures and verifications, and prints an exact-rational JSON report on
//! stdout (human log lines go to stderr).
//!
//! Exit codes: 0 success / all verdicts hold, 1 verification failure,
//! 2 parse error, 3 enumeration cap exceeded, 4 precondition violation.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_traits::One;

use closurelab::analysis::{
    approximation_factor, integrality_gap, iterated_closure_rank, rank_lower_bound,
    tightness_experiment, verify_alpha_members, GapValue,
};
use closurelab::catalog::{Instance, InstanceDescriptor, Kind};
use closurelab::closures::{
    aggregation_relaxation_covering, aggregation_relaxation_packing, closure_over,
    enumerate_family, split_hull, FamilyKind, FamilySpec,
};
use closurelab::error::Error;
use closurelab::geom::{Objective, Outcome, Polyhedron, Sense};
use closurelab::models::SplitSet;
use closurelab::rat::{ceil_log_ratio, q, qr};
use closurelab::report::{
    FacetFile, FamilyInfo, InstanceFile, ReportFile, ResultRecord,
};
use closurelab::{format_rational, parse_rational, Q};

#[derive(Parser)]
#[command(name = "closurelab", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a restricted closure and objective values over it.
    Closure(ClosureCmd),
    /// Check the per-disjunction scaled-containment guarantee for a factor.
    Verify(VerifyCmd),
    /// Gap-based rank lower bound and iterated-closure upper bound.
    Rank(RankCmd),
    /// Re-run a named built-in experiment and check its expected outcome.
    Reproduce(ReproduceCmd),
}

#[derive(Args, Clone)]
struct InstanceArgs {
    /// Catalog instance name: tight-packing, tight-covering, stable-set,
    /// appendix-packing, appendix-covering, random.
    #[arg(long, conflicts_with = "instance")]
    catalog: Option<String>,
    /// Path to an instance JSON file.
    #[arg(long)]
    instance: Option<String>,
    /// Parameter M (tight-packing).
    #[arg(long = "M")]
    m_upper: Option<i64>,
    /// Parameter n (tight-covering, stable-set, random).
    #[arg(long)]
    n: Option<i64>,
    /// Row count m (random).
    #[arg(long)]
    m: Option<i64>,
    /// Coefficient range bound (random).
    #[arg(long)]
    coeff_max: Option<i64>,
    /// RNG seed; required for randomized instances.
    #[arg(long)]
    seed: Option<i64>,
    /// Problem kind for random instances: packing or covering.
    #[arg(long)]
    kind: Option<String>,
}

#[derive(Args, Clone)]
struct FamilyArgs {
    /// Disjunction family: split, kbranch, latticefree.
    #[arg(long, default_value = "split")]
    family: String,
    /// Branch count / row count for kbranch and latticefree families.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Max-norm bound on multiplier entries.
    #[arg(long, default_value_t = 1)]
    coeff_bound: i64,
    /// Optional bound on split offsets.
    #[arg(long)]
    offset_bound: Option<i64>,
}

#[derive(Args)]
struct ClosureCmd {
    #[command(flatten)]
    instance: InstanceArgs,
    #[command(flatten)]
    family: FamilyArgs,
    /// Cost vector as comma-separated rationals; repeatable. Defaults to
    /// the all-ones cost.
    #[arg(long = "cost")]
    costs: Vec<String>,
    /// Include the closure H-representation in the report.
    #[arg(long)]
    dump_hrep: bool,
}

#[derive(Args)]
struct VerifyCmd {
    #[command(flatten)]
    instance: InstanceArgs,
    #[command(flatten)]
    family: FamilyArgs,
    /// Scaling factor to verify (packing: > 1, covering: < 1).
    #[arg(long)]
    alpha: String,
}

#[derive(Args)]
struct RankCmd {
    #[command(flatten)]
    instance: InstanceArgs,
    #[command(flatten)]
    family: FamilyArgs,
    /// Semicolon-separated list of comma-separated cost vectors.
    #[arg(long)]
    costs: Option<String>,
    /// Iteration cap for the upper bound.
    #[arg(long, default_value_t = 5)]
    max_iter: u32,
}

#[derive(Args)]
struct ReproduceCmd {
    /// Claim id: tight-packing, tight-covering, obs1-appendix,
    /// obs2-appendix, clique-rank.
    claim: String,
    #[arg(long = "M")]
    m_upper: Option<i64>,
    #[arg(long)]
    n: Option<i64>,
}

fn exit_for(e: &Error) -> ExitCode {
    let code = match e {
        Error::Parse(_) => 2u8,
        Error::CapExceeded { .. } => 3,
        _ => 4,
    };
    eprintln!("error: {e}");
    ExitCode::from(code)
}

fn build_instance(args: &InstanceArgs) -> Result<(Instance, String), Error> {
    if let Some(path) = &args.instance {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?;
        let file: InstanceFile =
            serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
        let name = file.name.clone().unwrap_or_else(|| path.clone());
        return Ok((file.to_instance()?, name));
    }
    let Some(name) = &args.catalog else {
        return Err(Error::BadParam("pass --catalog NAME or --instance FILE".into()));
    };
    let mut params: Vec<(&str, i64)> = Vec::new();
    let kind = match args.kind.as_deref() {
        Some("covering") => Kind::Covering,
        Some("packing") | None => Kind::Packing,
        Some(other) => return Err(Error::BadParam(format!("unknown kind `{other}`"))),
    };
    match name.as_str() {
        "tight-packing" => params.push(("M", args.m_upper.unwrap_or(3))),
        "tight-covering" | "stable-set" => params.push(("n", args.n.unwrap_or(2))),
        "appendix-packing" | "appendix-covering" => {}
        "random" => {
            let seed = args
                .seed
                .ok_or_else(|| Error::BadParam("--seed is required for random instances".into()))?;
            params.push(("n", args.n.unwrap_or(2)));
            params.push(("m", args.m.unwrap_or(2)));
            params.push(("coeff_max", args.coeff_max.unwrap_or(5)));
            params.push(("seed", seed));
        }
        other => return Err(Error::BadParam(format!("unknown catalog instance `{other}`"))),
    }
    let desc = InstanceDescriptor::new(name, kind, &params);
    let label = if params.is_empty() {
        name.clone()
    } else {
        let ps: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{name} {}", ps.join(" "))
    };
    Ok((desc.build()?, label))
}

fn build_family(args: &FamilyArgs) -> Result<FamilySpec, Error> {
    let kind = match args.family.as_str() {
        "split" => FamilyKind::Split,
        "kbranch" => FamilyKind::KBranch(args.k),
        "latticefree" => FamilyKind::LatticeFree(args.k),
        other => return Err(Error::BadParam(format!("unknown family `{other}`"))),
    };
    Ok(FamilySpec { kind, coeff_bound: args.coeff_bound, offset_bound: args.offset_bound, dedup: true })
}

fn parse_cost(s: &str, dim: usize) -> Result<Vec<Q>, Error> {
    let v: Vec<Q> = s
        .split(',')
        .map(|x| parse_rational(x.trim()))
        .collect::<Result<_, _>>()?;
    if v.len() != dim {
        return Err(Error::DimensionMismatch { expected: dim, found: v.len() });
    }
    Ok(v)
}

fn optimal(p: &Polyhedron, c: &[Q], obj: Objective) -> Result<Q, Error> {
    match p.optimize(c, obj)? {
        Outcome::Optimal { value, .. } => Ok(value),
        Outcome::Unbounded { .. } => Err(Error::BadParam("objective unbounded".into())),
        Outcome::Infeasible => Err(Error::BadParam("polyhedron is empty".into())),
    }
}

fn objective(kind: Kind) -> Objective {
    match kind {
        Kind::Packing => Objective::Max,
        Kind::Covering => Objective::Min,
    }
}

fn hull_record(label: &str, p: &Polyhedron) -> ResultRecord {
    let facets = p
        .hrep()
        .rows
        .iter()
        .map(|r| {
            let (coeffs, rhs, sense) = match r.sense {
                Sense::Le => (r.coeffs.clone(), r.rhs.clone(), "<="),
                Sense::Ge => (r.coeffs.clone(), r.rhs.clone(), ">="),
            };
            FacetFile {
                coeffs: coeffs.iter().map(format_rational).collect(),
                sense: sense.to_string(),
                rhs: format_rational(&rhs),
            }
        })
        .collect();
    ResultRecord::Hull { label: label.to_string(), facets }
}

fn emit(report: &ReportFile) {
    println!("{}", report.to_json());
}

fn cmd_closure(cmd: &ClosureCmd) -> Result<ExitCode, Error> {
    let (inst, label) = build_instance(&cmd.instance)?;
    let family = build_family(&cmd.family)?;
    let cap = closurelab::enumeration_cap();
    let members = enumerate_family(inst.polyhedron(), &family, cap)?;
    eprintln!("enumerated {} disjunctions for {label}", members.len());
    let closure = closure_over(inst.polyhedron(), &family, &members)?;

    let mut report = ReportFile::new("closure", &label);
    report.family = Some(FamilyInfo::from_spec(&family, members.len()));
    let costs: Vec<Vec<Q>> = if cmd.costs.is_empty() {
        vec![vec![Q::one(); inst.n()]]
    } else {
        cmd.costs
            .iter()
            .map(|s| parse_cost(s, inst.n()))
            .collect::<Result<_, _>>()?
    };
    for c in &costs {
        let mut gap = integrality_gap(inst.polyhedron(), inst.kind(), c, cap)?;
        gap.z_closure = Some(optimal(&closure.polyhedron, c, objective(inst.kind()))?);
        report.results.push(ResultRecord::from_gap(&gap));
    }
    if cmd.dump_hrep {
        report.results.push(hull_record("closure", &closure.polyhedron));
    }
    emit(&report);
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(cmd: &VerifyCmd) -> Result<ExitCode, Error> {
    let (inst, label) = build_instance(&cmd.instance)?;
    let family = build_family(&cmd.family)?;
    let alpha = parse_rational(&cmd.alpha)?;
    let cap = closurelab::enumeration_cap();
    let members = enumerate_family(inst.polyhedron(), &family, cap)?;
    eprintln!("verifying alpha = {alpha} over {} disjunctions", members.len());
    let verdicts = verify_alpha_members(&inst, &members, &alpha)?;

    let mut report = ReportFile::new("verify", &label);
    report.family = Some(FamilyInfo::from_spec(&family, members.len()));
    let all_hold = verdicts.iter().all(|v| v.holds);
    for v in &verdicts {
        // Keep the report compact: successes are summarized, failures are
        // listed with their witnesses.
        if !v.holds {
            report.results.push(ResultRecord::from_verdict(v));
        }
    }
    report.results.push(ResultRecord::Value {
        label: "verdicts_checked".into(),
        value: verdicts.len().to_string(),
    });
    report.results.push(ResultRecord::Value {
        label: "all_hold".into(),
        value: all_hold.to_string(),
    });
    emit(&report);
    Ok(if all_hold { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_rank(cmd: &RankCmd) -> Result<ExitCode, Error> {
    let (inst, label) = build_instance(&cmd.instance)?;
    let family = build_family(&cmd.family)?;
    let cap = closurelab::enumeration_cap();
    let costs: Vec<Vec<Q>> = match &cmd.costs {
        None => vec![vec![Q::one(); inst.n()]],
        Some(s) => s
            .split(';')
            .map(|part| parse_cost(part, inst.n()))
            .collect::<Result<_, _>>()?,
    };
    let alpha = approximation_factor(family.kind, inst.n());
    let formula = match family.kind {
        FamilyKind::Split => "gap shrinks by at most 2 per round".to_string(),
        FamilyKind::KBranch(k) => format!("gap shrinks by at most min(2^{k}, n)+1 per round"),
        FamilyKind::LatticeFree(k) => format!("gap shrinks by at most min({k}, n)+1 per round"),
    };
    let mut rank =
        rank_lower_bound(inst.polyhedron(), inst.kind(), &costs, &alpha, &formula, cap)?;
    rank.upper = iterated_closure_rank(inst.polyhedron(), &family, cmd.max_iter, cap)?;
    if rank.upper.is_none() {
        eprintln!("upper bound did not converge within {} rounds", cmd.max_iter);
    }

    let mut report = ReportFile::new("rank", &label);
    report.family = Some(FamilyInfo::from_spec(&family, 0));
    report.results.push(ResultRecord::from_rank(&rank));
    emit(&report);
    Ok(ExitCode::SUCCESS)
}

/// Checks one expectation, recording it and folding failures into `ok`.
fn expect(report: &mut ReportFile, ok: &mut bool, label: &str, holds: bool, value: String) {
    if !holds {
        *ok = false;
    }
    report.results.push(ResultRecord::Value {
        label: format!("{label}{}", if holds { "" } else { " (FAILED)" }),
        value,
    });
}

fn cmd_reproduce(cmd: &ReproduceCmd) -> Result<ExitCode, Error> {
    let cap = closurelab::enumeration_cap();
    let mut ok = true;
    let report = match cmd.claim.as_str() {
        "tight-packing" => {
            let m = cmd.m_upper.unwrap_or(100);
            let r = tightness_experiment(Kind::Packing, m)?;
            let mut report = ReportFile::new("reproduce tight-packing", &format!("tight-packing M={m}"));
            let expected = qr(2 * m, m + 1);
            expect(
                &mut report,
                &mut ok,
                "lp_over_closure_ratio",
                r.gap == GapValue::Finite(expected.clone()),
                format_rational(&expected),
            );
            expect(
                &mut report,
                &mut ok,
                "closure_value_at_most_one",
                r.z_closure.as_ref().is_some_and(|z| *z <= Q::one()),
                r.z_closure.as_ref().map(format_rational).unwrap_or_default(),
            );
            report.results.push(ResultRecord::from_gap(&r));
            report
        }
        "tight-covering" => {
            let n = cmd.n.unwrap_or(10);
            let r = tightness_experiment(Kind::Covering, n)?;
            let mut report =
                ReportFile::new("reproduce tight-covering", &format!("tight-covering n={n}"));
            let expected = q(2) - q(1) / q(n);
            expect(
                &mut report,
                &mut ok,
                "closure_over_lp_ratio",
                r.gap == GapValue::Finite(expected.clone()),
                format_rational(&expected),
            );
            expect(
                &mut report,
                &mut ok,
                "closure_value_exactly_two",
                r.z_closure == Some(q(2)),
                "2".into(),
            );
            report.results.push(ResultRecord::from_gap(&r));
            report
        }
        "obs1-appendix" => {
            let p = closurelab::catalog::appendix_packing();
            let mut report = ReportFile::new("reproduce obs1-appendix", "appendix-packing");
            let step = qr(1, 100);
            let at = |alpha: &Q, pt: &[Q]| -> Result<bool, Error> {
                Ok(aggregation_relaxation_packing(&p, alpha, cap)?.contains_point(pt))
            };
            let p02 = [q(0), q(2)];
            let p11 = [q(1), q(1)];
            let t1 = qr(5, 6);
            let t2 = qr(1, 4);
            expect(
                &mut report,
                &mut ok,
                "threshold_point_0_2",
                at(&t1, &p02)? && !at(&(&t1 + &step), &p02)?,
                format_rational(&t1),
            );
            expect(
                &mut report,
                &mut ok,
                "threshold_point_1_1",
                at(&t2, &p11)? && !at(&(&t2 - &step), &p11)?,
                format_rational(&t2),
            );
            let hull = split_hull(p.polyhedron(), &SplitSet::from_i64(&[1, 0], 0))?;
            let facet = hull
                .hrep()
                .rows
                .iter()
                .any(|r| r.sense == Sense::Le && r.coeffs == vec![q(7), q(4)] && r.rhs == q(7));
            expect(&mut report, &mut ok, "split_cut_facet", facet, "7x1+4x2 <= 7".into());
            report
        }
        "obs2-appendix" => {
            let c = closurelab::catalog::appendix_covering();
            let mut report = ReportFile::new("reproduce obs2-appendix", "appendix-covering");
            let at = |alpha: &Q, pt: &[Q]| -> Result<bool, Error> {
                Ok(aggregation_relaxation_covering(&c, alpha, cap)?.contains_point(pt))
            };
            let p06 = [q(0), q(6)];
            let p11 = [q(1), q(1)];
            let t1 = qr(1, 18);
            let t2 = qr(1, 4);
            expect(
                &mut report,
                &mut ok,
                "threshold_point_0_6",
                at(&t1, &p06)? && !at(&(&t1 - &qr(1, 1000)), &p06)?,
                format_rational(&t1),
            );
            expect(
                &mut report,
                &mut ok,
                "threshold_point_1_1",
                at(&t2, &p11)? && !at(&(&t2 + &qr(1, 100)), &p11)?,
                format_rational(&t2),
            );
            let hull = split_hull(c.polyhedron(), &SplitSet::from_i64(&[1, 0], 0))?;
            let facet = hull
                .hrep()
                .rows
                .iter()
                .any(|r| r.sense == Sense::Le && r.coeffs == vec![q(-21), q(-4)] && r.rhs == q(-28));
            expect(&mut report, &mut ok, "split_cut_facet", facet, "21x1+4x2 >= 28".into());
            report
        }
        "clique-rank" => {
            let n = usize::try_from(cmd.n.unwrap_or(8))
                .map_err(|_| Error::BadParam("n out of range".into()))?;
            let s = closurelab::catalog::stable_set_relaxation(n)?;
            let mut report = ReportFile::new("reproduce clique-rank", &format!("stable-set n={n}"));
            let rank = rank_lower_bound(
                s.polyhedron(),
                Kind::Packing,
                &[vec![Q::one(); n]],
                &q(2),
                "gap shrinks by at most 2 per round",
                cap,
            )?;
            let expected = ceil_log_ratio(&qr(n as i64, 2), &q(2)).unwrap_or(0);
            expect(
                &mut report,
                &mut ok,
                "split_rank_lower_bound",
                rank.lower == expected,
                expected.to_string(),
            );
            // Classical rounding-based reference rank for the same
            // relaxation: ceil(log2(n-1)).
            let cg_ref = (n as f64 - 1.0).log2().ceil() as u32;
            report.results.push(ResultRecord::Value {
                label: "cg_rank_reference".into(),
                value: cg_ref.to_string(),
            });
            report.results.push(ResultRecord::from_rank(&rank));
            report
        }
        other => return Err(Error::BadParam(format!("unknown claim `{other}`"))),
    };
    emit(&report);
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Closure(c) => cmd_closure(c),
        Cmd::Verify(c) => cmd_verify(c),
        Cmd::Rank(c) => cmd_rank(c),
        Cmd::Reproduce(c) => cmd_reproduce(c),
    };
    match result {
        Ok(code) => code,
        Err(e) => exit_for(&e),
    }
}
