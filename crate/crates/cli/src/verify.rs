//! Formula-versus-search sweeps. Cells run in parallel; records come out in
//! grid order.

use clap::Args;
use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::{json, Value};

use negacensus_core::census::count_self_dual;
use negacensus_core::goodint::{classify, GoodParams};
use negacensus_core::negacyclic::{
    construct_all_self_dual, factor_xn_plus_one, is_self_dual, self_dual_by_inner_products,
    DualKind, NegacyclicProfile, SelfDualCodes,
};
use negacensus_core::oracle::{brute_count_self_dual, brute_factor, brute_good};
use negacensus_core::Error;

use crate::commands::profile_json;
use crate::record::Record;
use crate::values::Values;
use crate::{env_cap, Failure, Output};

const FAMILIES: [&str; 5] = ["goodness", "count", "factor", "blocks", "construct"];

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, default_value = "3,5,7,11,13")]
    pub p: Values<u64>,
    /// Defaults to 1,2 for Euclidean and 1 for Hermitian cells.
    #[arg(long)]
    pub l: Option<Values<u32>>,
    #[arg(long, default_value = "1..3")]
    pub nu: Values<u32>,
    #[arg(long, default_value = "0..1")]
    pub r: Values<u32>,
    #[arg(long, default_value = "1,3,5,7")]
    pub nprime: Values<u64>,
    /// Restrict to one duality; both by default.
    #[arg(long)]
    pub dual: Option<DualKind>,
    /// Comma-separated subset of goodness,count,factor,blocks,construct.
    #[arg(long, value_delimiter = ',')]
    pub family: Vec<String>,
    /// Goodness sweep: odd coprime a, b with |a|, |b| up to this bound.
    #[arg(long, default_value_t = 15)]
    pub ab_max: i64,
    #[arg(long, default_value_t = 5)]
    pub beta_max: u32,
    #[arg(long, default_value_t = 200)]
    pub d_max: u64,
}

enum Status {
    Agree,
    Disagree(String),
    Skipped,
}

impl Status {
    fn tag(&self) -> &'static str {
        match self {
            Status::Agree => "agree",
            Status::Disagree(_) => "disagree",
            Status::Skipped => "skipped:resource",
        }
    }
}

enum Task {
    Goodness {
        a: i64,
        b: i64,
        beta: u32,
    },
    Profile {
        family: &'static str,
        profile: NegacyclicProfile,
    },
}

impl Task {
    fn family(&self) -> &'static str {
        match self {
            Task::Goodness { .. } => "goodness",
            Task::Profile { family, .. } => family,
        }
    }

    fn input(&self) -> Value {
        match self {
            Task::Goodness { a, b, beta } => json!({"a": a, "b": b, "beta": beta}),
            Task::Profile { profile, .. } => profile_json(profile),
        }
    }
}

fn families(args: &VerifyArgs) -> Result<Vec<&'static str>, Failure> {
    if args.family.is_empty() {
        return Ok(FAMILIES.to_vec());
    }
    let mut out = Vec::new();
    for f in &args.family {
        let known = FAMILIES
            .iter()
            .find(|k| **k == f.trim())
            .ok_or_else(|| Failure::Usage(format!("unknown family {f:?}")))?;
        if !out.contains(known) {
            out.push(*known);
        }
    }
    Ok(FAMILIES
        .iter()
        .copied()
        .filter(|f| out.contains(f))
        .collect())
}

fn profiles(args: &VerifyArgs) -> Result<Vec<NegacyclicProfile>, Failure> {
    let duals = match args.dual {
        Some(d) => vec![d],
        None => vec![DualKind::Euclidean, DualKind::Hermitian],
    };
    let mut out = Vec::new();
    for dual in duals {
        let ls = match (&args.l, dual) {
            (Some(ls), _) => ls.0.clone(),
            (None, DualKind::Euclidean) => vec![1, 2],
            (None, DualKind::Hermitian) => vec![1],
        };
        for &p in args.p.iter() {
            for &l in &ls {
                for &nu in args.nu.iter() {
                    for &r in args.r.iter() {
                        for &n_prime in args.nprime.iter() {
                            if n_prime % p == 0 {
                                continue;
                            }
                            out.push(NegacyclicProfile::new(p, l, dual, nu, r, n_prime)?);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn tasks(args: &VerifyArgs, fams: &[&'static str]) -> Result<Vec<Task>, Failure> {
    let mut out = Vec::new();
    for &family in fams {
        if family == "goodness" {
            for a in -args.ab_max..=args.ab_max {
                for b in -args.ab_max..=args.ab_max {
                    if GoodParams::new(a, b, 0).is_err() {
                        continue;
                    }
                    for beta in 0..=args.beta_max {
                        out.push(Task::Goodness { a, b, beta });
                    }
                }
            }
        } else {
            for profile in profiles(args)? {
                out.push(Task::Profile { family, profile });
            }
        }
    }
    Ok(out)
}

fn resource_or(e: Error) -> Result<Status, Error> {
    if e.is_resource() {
        Ok(Status::Skipped)
    } else {
        Err(e)
    }
}

fn check_goodness(a: i64, b: i64, beta: u32, d_max: u64) -> Result<Status, Error> {
    let params = GoodParams::new(a, b, beta)?;
    let mut bad = Vec::new();
    for d in 1..=d_max {
        if !classify(&params, d)?.same_membership(&brute_good(a, b, beta, d)?) {
            bad.push(d);
        }
    }
    Ok(if bad.is_empty() {
        Status::Agree
    } else {
        Status::Disagree(format!("d = {bad:?}"))
    })
}

fn check_count(profile: &NegacyclicProfile, cap: u64) -> Result<Status, Error> {
    let formula = count_self_dual(profile)?.count;
    match brute_count_self_dual(profile, cap) {
        Ok(n) if n == formula => Ok(Status::Agree),
        Ok(n) => Ok(Status::Disagree(format!("formula {formula}, search {n}"))),
        Err(e) => resource_or(e),
    }
}

fn check_factor(profile: &NegacyclicProfile) -> Result<Status, Error> {
    let s = match factor_xn_plus_one(profile) {
        Ok(s) => s,
        Err(e) => return resource_or(e),
    };
    let expected = brute_factor(&s.field, &s.field.x_pow_plus_one(profile.n() as usize))?;
    let got: Vec<_> = s
        .distinct_factors()
        .into_iter()
        .map(|g| (g, s.multiplicity))
        .collect();
    Ok(if got == expected {
        Status::Agree
    } else {
        Status::Disagree(format!(
            "{} factors vs {} by search",
            got.len(),
            expected.len()
        ))
    })
}

fn check_blocks(profile: &NegacyclicProfile) -> Result<Status, Error> {
    let s = match factor_xn_plus_one(profile) {
        Ok(s) => s,
        Err(e) => return resource_or(e),
    };
    let params = GoodParams::new(profile.base_order() as i64, 1, profile.nu() + 1)?;
    for block in &s.blocks {
        let v = classify(&params, block.d)?;
        let member = match profile.dual() {
            DualKind::Euclidean => v.is_good,
            DualKind::Hermitian => v.is_oddly_good,
        };
        if block.pairs.is_empty() != member || block.singletons.is_empty() == member {
            return Ok(Status::Disagree(format!("block d = {}", block.d)));
        }
    }
    Ok(Status::Agree)
}

fn check_construct(profile: &NegacyclicProfile, cap: u64) -> Result<Status, Error> {
    let count = count_self_dual(profile)?.count;
    // every factor is paired, so the search space has count^2 exponent vectors
    if &count * &count > BigUint::from(cap) {
        return Ok(Status::Skipped);
    }
    let codes = match construct_all_self_dual(profile, cap) {
        Ok(SelfDualCodes::Nonexistent) => {
            return Ok(if count == BigUint::from(0u32) {
                Status::Agree
            } else {
                Status::Disagree(format!("nonexistent but census counts {count}"))
            })
        }
        Ok(SelfDualCodes::Codes(c)) => c,
        Err(e) => return resource_or(e),
    };
    if BigUint::from(codes.len()) != count {
        return Ok(Status::Disagree(format!(
            "built {} codes, census {count}",
            codes.len()
        )));
    }
    let small = profile.n() <= 12 && profile.alphabet_order() <= 9;
    for (i, code) in codes.iter().enumerate() {
        if !is_self_dual(code)? || (small && !self_dual_by_inner_products(code)?) {
            return Ok(Status::Disagree(format!("code {i} is not self-dual")));
        }
    }
    Ok(Status::Agree)
}

fn run_task(task: &Task, args: &VerifyArgs, cap: u64) -> Result<Status, Error> {
    match task {
        Task::Goodness { a, b, beta } => check_goodness(*a, *b, *beta, args.d_max),
        Task::Profile { family, profile } => match *family {
            "count" => check_count(profile, cap),
            "factor" => check_factor(profile),
            "blocks" => check_blocks(profile),
            _ => check_construct(profile, cap),
        },
    }
}

pub fn verify(args: &VerifyArgs) -> Result<Output, Failure> {
    let cap = env_cap()?;
    let fams = families(args)?;
    let tasks = tasks(args, &fams)?;
    let statuses: Vec<Result<Status, Error>> =
        tasks.par_iter().map(|t| run_task(t, args, cap)).collect();

    let mut records = Vec::with_capacity(tasks.len() + fams.len());
    let mut tallies = vec![[0u64; 3]; fams.len()];
    for (task, status) in tasks.iter().zip(statuses) {
        let status = status?;
        let slot = fams
            .iter()
            .position(|f| *f == task.family())
            .expect("known family");
        let idx = match status {
            Status::Agree => 0,
            Status::Disagree(_) => 1,
            Status::Skipped => 2,
        };
        tallies[slot][idx] += 1;
        let mut rec = Record::new("verify")
            .with("family", task.family())
            .with("input", task.input())
            .with("status", status.tag())
            .with(
                "provenance",
                if matches!(status, Status::Agree) {
                    "both-agree"
                } else {
                    "formula"
                },
            );
        if let Status::Disagree(detail) = status {
            rec.set("detail", detail);
        }
        records.push(rec);
    }
    let mut disagreements = 0;
    for (family, [agree, disagree, skipped]) in fams.iter().zip(&tallies) {
        disagreements += disagree;
        records.push(
            Record::new("verify")
                .with("family", *family)
                .with(
                    "summary",
                    json!({
                        "agree": agree.to_string(),
                        "disagree": disagree.to_string(),
                        "skipped": skipped.to_string(),
                    }),
                )
                .with(
                    "provenance",
                    if *disagree == 0 {
                        "both-agree"
                    } else {
                        "formula"
                    },
                ),
        );
    }
    Ok(Output {
        records,
        note: (disagreements > 0).then(|| format!("negacensus: {disagreements} cells disagree")),
        status: if disagreements > 0 { 3 } else { 0 },
    })
}
