use serde_json::{json, Value};

use negacensus_core::census::count_self_dual;
use negacensus_core::goodint::{
    classify as classify_d, enumerate_set, GoodParams, GoodnessVerdict,
};
use negacensus_core::negacyclic::{
    construct_all_self_dual, factor_xn_plus_one, FactorStructure, NegacyclicProfile, SelfDualCodes,
};
use negacensus_core::oracle::{brute_count_self_dual, brute_factor, brute_good};
use negacensus_core::Error;

use crate::record::Record;
use crate::{
    env_cap, CensusArgs, ClassifyArgs, ConstructArgs, EnumerateArgs, Failure, Output, ProfileArgs,
};

pub fn verdict_json(v: &GoodnessVerdict) -> Value {
    json!({
        "good": v.is_good,
        "oddly_good": v.is_oddly_good,
        "evenly_good": v.is_evenly_good,
        "odd_witness": v.odd_witness,
        "even_witness": v.even_witness,
        "uniform_s": v.uniform_s,
        "reason": v.reason.tag(),
    })
}

pub fn profile_json(p: &NegacyclicProfile) -> Value {
    json!({
        "p": p.p(),
        "l": p.l(),
        "nu": p.nu(),
        "r": p.r(),
        "nprime": p.n_prime(),
        "n": p.n().to_string(),
        "dual": p.dual().tag(),
    })
}

pub fn classify(args: &ClassifyArgs) -> Result<Output, Failure> {
    let params = GoodParams::new(args.a, args.b, args.beta)?;
    let mut records = Vec::new();
    let mut mismatches = Vec::new();
    for &d in args.d.iter() {
        let v = classify_d(&params, d)?;
        let mut rec = Record::new("classify")
            .with(
                "input",
                json!({"a": args.a, "b": args.b, "beta": args.beta, "d": d}),
            )
            .with("result", verdict_json(&v))
            .with("provenance", "formula");
        if args.oracle {
            let o = brute_good(args.a, args.b, args.beta, d)?;
            if v.same_membership(&o) {
                rec.set("provenance", "both-agree");
            } else {
                rec.set("oracle", verdict_json(&o));
                mismatches.push(d);
            }
        }
        records.push(rec);
    }
    Ok(with_mismatches(records, "d", &mismatches))
}

fn with_mismatches<T: std::fmt::Debug>(records: Vec<Record>, what: &str, bad: &[T]) -> Output {
    if bad.is_empty() {
        return records.into();
    }
    Output {
        records,
        note: Some(format!(
            "negacensus: formula and search disagree at {what} = {bad:?}"
        )),
        status: 3,
    }
}

pub fn enumerate(args: &EnumerateArgs) -> Result<Output, Failure> {
    let params = GoodParams::new(args.a, args.b, args.beta)?;
    let members = enumerate_set(&params, args.set, args.limit)?;
    let set = args.set.tag();
    let rec = Record::new("enumerate")
        .with(
            "input",
            json!({"a": args.a, "b": args.b, "beta": args.beta, "set": set, "limit": args.limit}),
        )
        .with(
            "result",
            json!({"count": members.len().to_string(), "members": members}),
        )
        .with("provenance", "formula");
    Ok(vec![rec].into())
}

pub fn census(args: &CensusArgs) -> Result<Output, Failure> {
    let cap = if args.oracle { env_cap()? } else { 0 };
    let mut records = Vec::new();
    let mut mismatches = Vec::new();
    for &p in args.p.iter() {
        for &l in args.l.iter() {
            for &nu in args.nu.iter() {
                for &r in args.r.iter() {
                    for &n_prime in args.nprime.iter() {
                        let profile = NegacyclicProfile::new(p, l, args.dual, nu, r, n_prime)?;
                        let c = count_self_dual(&profile)?;
                        let mut rec = Record::new("census")
                            .with("input", profile_json(&profile))
                            .with(
                                "result",
                                json!({
                                    "exists": c.exists,
                                    "exponent": c.exponent,
                                    "count": c.count.to_string(),
                                }),
                            )
                            .with("provenance", "formula");
                        if args.oracle {
                            match brute_count_self_dual(&profile, cap) {
                                Ok(n) if n == c.count => rec.set("provenance", "both-agree"),
                                Ok(n) => {
                                    rec.set("oracle", n.to_string());
                                    mismatches.push(profile.n());
                                }
                                Err(e) if e.is_resource() => rec.set("oracle", "skipped:resource"),
                                Err(e) => return Err(e.into()),
                            }
                        }
                        records.push(rec);
                    }
                }
            }
        }
    }
    Ok(with_mismatches(records, "n", &mismatches))
}

fn profile_of(args: &ProfileArgs) -> Result<NegacyclicProfile, Error> {
    NegacyclicProfile::new(args.p, args.l, args.dual, args.nu, args.r, args.nprime)
}

pub fn structure_json(s: &FactorStructure) -> Value {
    let f = &s.field;
    let blocks: Vec<Value> = s
        .blocks
        .iter()
        .map(|b| {
            json!({
                "d": b.d,
                "totient": b.totient,
                "order": b.order,
                "singletons": b.singletons.iter().map(|g| f.render_poly(g)).collect::<Vec<_>>(),
                "pairs": b.pairs.iter().map(|(g, h)| vec![f.render_poly(g), f.render_poly(h)]).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "field_order": f.order().to_string(),
        "splitting_degree": s.splitting_degree,
        "multiplicity": s.multiplicity.to_string(),
        "blocks": blocks,
    })
}

pub fn factor(args: &ProfileArgs) -> Result<Output, Failure> {
    let profile = profile_of(args)?;
    let s = factor_xn_plus_one(&profile)?;
    let mut rec = Record::new("factor")
        .with("input", profile_json(&profile))
        .with("result", structure_json(&s))
        .with("provenance", "formula");
    let mut mismatches = Vec::new();
    if args.oracle {
        let expected = brute_factor(&s.field, &s.field.x_pow_plus_one(profile.n() as usize))?;
        let agree = expected.len() == s.distinct_factors().len()
            && expected
                .iter()
                .zip(s.distinct_factors())
                .all(|((g, m), h)| *g == h && *m == s.multiplicity);
        if agree {
            rec.set("provenance", "both-agree");
        } else {
            mismatches.push(profile.n());
        }
    }
    Ok(with_mismatches(vec![rec], "n", &mismatches))
}

pub fn construct(args: &ConstructArgs) -> Result<Output, Failure> {
    let profile = profile_of(&args.profile)?;
    let cap = match args.cap {
        Some(c) => c,
        None => env_cap()?,
    };
    let codes = match construct_all_self_dual(&profile, cap)? {
        SelfDualCodes::Nonexistent => {
            return Ok(Output {
                records: Vec::new(),
                note: Some("nonexistent".into()),
                status: 0,
            })
        }
        SelfDualCodes::Codes(c) => c,
    };
    let records = codes
        .iter()
        .enumerate()
        .map(|(i, code)| {
            Record::new("construct")
                .with("input", profile_json(&profile))
                .with(
                    "result",
                    json!({
                        "index": i,
                        "generator": code.field.render_poly(&code.generator),
                        "degree": code.generator.degree(),
                        "pair_exponents": code.pair_exponents.iter().map(|&(a, b)| vec![a, b]).collect::<Vec<_>>(),
                    }),
                )
                .with("provenance", "formula")
        })
        .collect::<Vec<_>>();
    Ok(records.into())
}
