use std::ops::ControlFlow;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use semiclass_core::coeff::CoefficientDomain;
use semiclass_core::graded::class_group_criterion;
use semiclass_core::ideals::{
    class_mul, class_reduce, for_each_canonical_generator_set, search_nonprincipal_t_invertible,
    FractionalIdeal, MonoidClass,
};
use semiclass_core::oracle::{dp_membership, ideal_op_disagreement, IdealOp};
use semiclass_core::report::{Check, Outcome};
use semiclass_core::semigroup::{MonoidDescriptor, NumericalSemigroup};
use semiclass_core::{Error, Result};

use crate::{IdealOpArg, Run, SgpCommand};

pub(crate) fn run(command: &SgpCommand, domain: Option<&str>) -> Result<Run> {
    let domain = domain.map(str::parse::<CoefficientDomain>).transpose()?;
    match command {
        SgpCommand::Info { sgp, bound } => info(sgp, *bound, domain.as_ref()),
        SgpCommand::Ideal {
            sgp,
            gens,
            with,
            op,
        } => ideal(sgp, gens, with.as_deref(), *op),
        SgpCommand::Class { sgp, gens, with } => class(sgp, gens, with.as_deref()),
        SgpCommand::Search { sgp, bound } => search(sgp, *bound),
    }
}

fn numerical(sgp: &str) -> Result<Arc<NumericalSemigroup>> {
    let desc: MonoidDescriptor = sgp.parse()?;
    Ok(Arc::clone(desc.as_numerical()?))
}

fn info(sgp: &str, bound: i64, domain: Option<&CoefficientDomain>) -> Result<Run> {
    let desc: MonoidDescriptor = sgp.parse()?;
    let mut results = Map::new();
    let mut checks = Vec::new();
    results.insert("semigroup".into(), json!(desc.to_text()));
    results.insert(
        "integrally_closed".into(),
        json!(desc.is_integrally_closed()),
    );
    results.insert(
        "ideal_arithmetic".into(),
        json!(desc.capabilities().supports_ideal_arithmetic),
    );
    if let MonoidDescriptor::Numerical(s) = &desc {
        let m = s.multiplicity();
        let apery = s.apery_set(m)?;
        results.insert("scale".into(), json!(s.scale()));
        results.insert("generators".into(), json!(s.generators()));
        results.insert("multiplicity".into(), json!(m));
        results.insert("gaps".into(), json!(s.gaps()));
        results.insert("frobenius".into(), json!(s.frobenius()));
        results.insert("conductor".into(), json!(s.conductor()));
        results.insert("apery_set".into(), json!(apery));

        let limit = s.conductor() + s.max_generator();
        let dp = dp_membership(s.generators(), limit);
        let dp_gaps: Vec<i64> = (0..=limit).filter(|&g| !dp[g as usize]).collect();
        checks.push(Check::new(
            "gaps match reachability",
            dp_gaps == s.gaps(),
            format!("{} gaps", dp_gaps.len()),
        ));
        let apery_ok = apery.iter().enumerate().all(|(r, &w)| {
            (w as usize) <= dp.len()
                && (0..=limit)
                    .filter(|&g| dp[g as usize] && g.rem_euclid(m) == r as i64)
                    .min()
                    == Some(w)
        });
        checks.push(Check::new(
            "Apery set entries are the least members of each residue",
            apery_ok,
            format!("modulo {m}"),
        ));
    }
    if let Some(d) = domain {
        let report = class_group_criterion(d, &desc, bound)?;
        results.insert("domain".into(), json!(d.to_text()));
        results.insert(
            "criterion".into(),
            serde_json::to_value(&report).expect("plain data"),
        );
    }
    Ok(Run {
        command: "sgp info".into(),
        inputs: json!({
            "sgp": desc.to_text(),
            "domain": domain.map(|d| d.to_text()),
            "bound": bound,
        }),
        outcome: Outcome {
            results: Value::Object(results),
            checks,
        },
    })
}

fn op_name(op: IdealOpArg) -> &'static str {
    match op {
        IdealOpArg::Sum => "sum",
        IdealOpArg::Colon => "colon",
        IdealOpArg::Inverse => "inverse",
        IdealOpArg::V => "v",
        IdealOpArg::T => "t",
        IdealOpArg::Flags => "flags",
    }
}

fn oracle_check(
    op: IdealOp,
    y: &FractionalIdeal,
    z: &FractionalIdeal,
    result: &FractionalIdeal,
) -> Check {
    let (diff, lo, hi) = ideal_op_disagreement(op, y, z, result);
    Check::new(
        format!("{} agrees with window set arithmetic", op.name()),
        diff.is_none(),
        match diff {
            None => format!("window [{lo}, {hi})"),
            Some(x) => format!("differs at {x} in window [{lo}, {hi})"),
        },
    )
}

fn ideal(sgp: &str, gens: &str, with: Option<&str>, op: IdealOpArg) -> Result<Run> {
    let gamma = numerical(sgp)?;
    let y = FractionalIdeal::parse_generators(&gamma, gens)?;
    let z = with
        .map(|w| FractionalIdeal::parse_generators(&gamma, w))
        .transpose()?;
    let second = || {
        z.clone()
            .ok_or_else(|| Error::Parse(format!("--op {} needs --with", op_name(op))))
    };
    let (result, checks) = match op {
        IdealOpArg::Sum => {
            let z = second()?;
            let r = y.sum(&z)?;
            let c = oracle_check(IdealOp::Sum, &y, &z, &r);
            (r, vec![c])
        }
        IdealOpArg::Colon => {
            let z = second()?;
            let r = y.colon(&z)?;
            let c = oracle_check(IdealOp::Colon, &y, &z, &r);
            (r, vec![c])
        }
        IdealOpArg::Inverse => {
            let r = y.inverse();
            let c = oracle_check(IdealOp::Inverse, &y, &y, &r);
            (r, vec![c])
        }
        IdealOpArg::V => {
            let r = y.v_closure();
            let c = oracle_check(IdealOp::V, &y, &y, &r);
            (r, vec![c])
        }
        IdealOpArg::T => {
            let r = y.t_closure();
            let by_definition = y.t_closure_definitional()?;
            let c = Check::new(
                "t-closure equals the union over finitely generated subideals",
                r == by_definition,
                by_definition.to_text(),
            );
            (r, vec![c])
        }
        IdealOpArg::Flags => {
            let v = y.v_closure();
            let c = oracle_check(IdealOp::V, &y, &y, &v);
            (y.clone(), vec![c])
        }
    };
    let mut results = Map::new();
    results.insert("ideal".into(), json!(y.to_text()));
    results.insert("op".into(), json!(op_name(op)));
    if let Some(z) = &z {
        results.insert("with".into(), json!(z.to_text()));
    }
    results.insert("result".into(), json!(result.to_text()));
    results.insert(
        "summary".into(),
        serde_json::to_value(result.summary()).expect("plain data"),
    );
    results.insert("unchanged".into(), json!(result == y));
    Ok(Run {
        command: "sgp ideal".into(),
        inputs: json!({
            "sgp": gamma.to_text(),
            "gens": gens,
            "with": with,
            "op": op_name(op),
        }),
        outcome: Outcome {
            results: Value::Object(results),
            checks,
        },
    })
}

fn class_json(c: &MonoidClass) -> Value {
    json!({
        "representative": c.representative().to_text(),
        "invertible": c.invertible(),
        "trivial": c.is_trivial(),
    })
}

fn class(sgp: &str, gens: &str, with: Option<&str>) -> Result<Run> {
    let gamma = numerical(sgp)?;
    let y = FractionalIdeal::parse_generators(&gamma, gens)?;
    let cy = class_reduce(&y);
    let rep = cy.representative();
    let mut checks = vec![Check::new(
        "representative is divisorial with minimum 0",
        rep.is_divisorial() && rep.min() == 0,
        rep.to_text(),
    )];
    let mut results = Map::new();
    results.insert("class".into(), class_json(&cy));
    if let Some(w) = with {
        let z = FractionalIdeal::parse_generators(&gamma, w)?;
        let product = class_mul(&cy, &class_reduce(&z))?;
        let direct = class_reduce(&y.sum(&z)?);
        checks.push(Check::new(
            "class of the sum equals the product of classes",
            direct == product,
            direct.representative().to_text(),
        ));
        results.insert("with".into(), class_json(&class_reduce(&z)));
        results.insert("product".into(), class_json(&product));
    }
    Ok(Run {
        command: "sgp class".into(),
        inputs: json!({ "sgp": gamma.to_text(), "gens": gens, "with": with }),
        outcome: Outcome {
            results: Value::Object(results),
            checks,
        },
    })
}

fn search(sgp: &str, bound: i64) -> Result<Run> {
    let gamma = numerical(sgp)?;
    let found = search_nonprincipal_t_invertible(&gamma, bound)?;
    let mut examined = 0usize;
    let mut principal = 0usize;
    for_each_canonical_generator_set::<()>(&gamma, bound, |gens| {
        examined += 1;
        if gens.len() == 1 {
            principal += 1;
        }
        ControlFlow::Continue(())
    });
    let check = match &found {
        Some(y) => Check::new(
            "witness is non-principal and t-invertible",
            !y.is_principal() && y.is_t_invertible(),
            y.to_text(),
        ),
        None => Check::new(
            "no non-principal t-invertible ideal in range",
            true,
            format!("{examined} generator sets, {principal} principal"),
        ),
    };
    Ok(Run {
        command: "sgp search".into(),
        inputs: json!({ "sgp": gamma.to_text(), "bound": bound }),
        outcome: Outcome {
            results: json!({
                "bound": bound,
                "generator_sets": examined,
                "principal": principal,
                "found": found.as_ref().map(FractionalIdeal::to_text),
            }),
            checks: vec![check],
        },
    })
}
