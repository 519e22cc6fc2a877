//! End-to-end acceptance run against the built binary. Prints one line per
//! criterion and exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use serde_json::Value;

const EX112_LIMIT: Duration = Duration::from_secs(1);
const EX218_LIMIT: Duration = Duration::from_secs(10);
const EX111_LIMIT: Duration = Duration::from_secs(1);
const NORTHCOTT_LIMIT: Duration = Duration::from_secs(60);
const PROBES_PER_IDENTITY: u64 = 100;

type Criterion = fn() -> Result<String, String>;

struct Run {
    report: Value,
    code: i32,
    elapsed: Duration,
}

fn semiclass(args: &[&str]) -> Result<Run, String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_semiclass"))
        .args(args)
        .arg("--json")
        .env_remove("SEMICLASS_SEED")
        .output()
        .map_err(|e| format!("cannot run semiclass: {e}"))?;
    let elapsed = start.elapsed();
    let report = serde_json::from_slice(&out.stdout).map_err(|e| {
        format!(
            "{args:?}: bad JSON ({e}); stderr: {}",
            String::from_utf8_lossy(&out.stderr)
        )
    })?;
    Ok(Run {
        report,
        code: out.status.code().unwrap_or(-1),
        elapsed,
    })
}

fn checks(run: &Run) -> &[Value] {
    run.report["checks"].as_array().map_or(&[], Vec::as_slice)
}

fn check<'a>(run: &'a Run, name: &str) -> Result<&'a Value, String> {
    checks(run)
        .iter()
        .find(|c| c["name"] == name)
        .ok_or_else(|| format!("missing check {name:?}"))
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_pass(run: &Run) -> Result<(), String> {
    require(!checks(run).is_empty(), || "no checks reported".into())?;
    if let Some(bad) = checks(run).iter().find(|c| c["status"] == "fail") {
        return Err(format!("{}: {}", bad["name"], bad["detail"]));
    }
    require(run.code == 0, || format!("exit code {}", run.code))
}

fn within(run: &Run, limit: Duration) -> Result<(), String> {
    require(run.elapsed < limit, || {
        format!("took {:.2?}, limit {limit:?}", run.elapsed)
    })
}

/// `"k/n agree"` detail of a tally check.
fn agreement(c: &Value) -> Option<(u64, u64)> {
    let detail = c["detail"].as_str()?;
    let (k, rest) = detail.split_once('/')?;
    let n = rest.split_whitespace().next()?;
    Some((k.parse().ok()?, n.parse().ok()?))
}

fn full_agreement(run: &Run, name: &str, at_least: u64) -> Result<u64, String> {
    let c = check(run, name)?;
    match agreement(c) {
        Some((k, n)) if k == n && n >= at_least => Ok(n),
        _ => Err(format!("{name}: {}", c["detail"])),
    }
}

fn class_group_of_sqrt_minus_five() -> Result<String, String> {
    let run = semiclass(&["demo", "ex112"])?;
    all_pass(&run)?;
    let forms = run.report["results"]["reduced_forms"]
        .as_array()
        .map_or(0, Vec::len);
    require(forms == 2, || format!("{forms} reduced forms"))?;
    require(run.report["results"]["structure"] == "Z/2Z", || {
        format!("structure {}", run.report["results"]["structure"])
    })?;
    check(&run, "nontrivial class squares to the identity")?;
    within(&run, EX112_LIMIT)?;
    Ok(format!(
        "discriminant -20 has 2 reduced forms, group Z/2Z ({:.2?})",
        run.elapsed
    ))
}

fn two_three_semigroup() -> Result<String, String> {
    let run = semiclass(&["demo", "ex218", "--bound", "20"])?;
    all_pass(&run)?;
    for name in [
        "every ideal is divisorial",
        "every non-principal ideal is n + Y0",
        "t-invertible implies principal (Cl = Pic = 0)",
    ] {
        check(&run, name)?;
    }
    within(&run, EX218_LIMIT)?;
    Ok(format!(
        "{} ideals of <2,3> with generators in [0, 20]: all divisorial, no non-principal t-invertible ({:.2?})",
        run.report["results"]["ideals_examined"], run.elapsed
    ))
}

fn invertible_counterexample() -> Result<String, String> {
    let run = semiclass(&["demo", "ex111"])?;
    all_pass(&run)?;
    require(run.report["results"]["identity"] == "1", || {
        format!("identity normal form {}", run.report["results"]["identity"])
    })?;
    let products = checks(&run)
        .iter()
        .filter(|c| {
            let n = c["name"].as_str().unwrap_or("");
            n.ends_with(" in R") && !n.contains(" not ")
        })
        .count();
    require(products == 9, || format!("{products} product checks"))?;
    check(&run, "x not in R")?;
    within(&run, EX111_LIMIT)?;
    Ok(format!(
        "identity normal form is 1, 9/9 products in R, x not in R ({:.2?})",
        run.elapsed
    ))
}

fn componentwise_identities() -> Result<String, String> {
    let run = semiclass(&["demo", "lemma23", "--trials", "200", "--seed", "7"])?;
    all_pass(&run)?;
    require(run.report["results"]["trials"] == 200, || {
        format!("trials {}", run.report["results"]["trials"])
    })?;
    let probes = run.report["results"]["min_probes_per_identity"]
        .as_u64()
        .unwrap_or(0);
    require(probes >= PROBES_PER_IDENTITY, || {
        format!("only {probes} probes")
    })?;
    for name in [
        "(I[Y]:J[Z]) = (I:J)[(Y:Z)] on homogeneous probes",
        "(I[Y])_v = I_v[Y_v] on homogeneous probes",
        "(I[Y])_t = I_t[Y_t]",
        "at least 100 probes per identity",
    ] {
        full_agreement(&run, name, 200)?;
    }
    Ok(format!(
        "200/200 tuples agree for colon, v and t; at least {probes} probes per identity per tuple"
    ))
}

fn oracle_equivalence() -> Result<String, String> {
    let run = semiclass(&[
        "suite", "--only", "ideals", "--trials", "500", "--seed", "1",
    ])?;
    all_pass(&run)?;
    let ops = full_agreement(
        &run,
        "ideals: sum/colon/inverse/v match window set arithmetic",
        500,
    )?;
    for law in ["extensive", "monotone", "idempotent"] {
        full_agreement(&run, &format!("ideals: v-closure is {law}"), 500)?;
    }
    Ok(format!(
        "{ops}/{ops} operations match window sets; v-closure extensive, monotone, idempotent"
    ))
}

fn content_formula() -> Result<String, String> {
    let run = semiclass(&["demo", "northcott"])?;
    all_pass(&run)?;
    let zero = full_agreement(&run, "N = 0 over Q and Z", 200)?;
    full_agreement(&run, "N <= terms(y) - 1 over quadratic orders", 200)?;
    let fixture = &run.report["results"]["fixture"];
    let n = fixture["n"].as_u64().unwrap_or(0);
    require(n >= 1, || format!("fixture {fixture}"))?;
    check(&run, "Z[sqrt(-3)] search finds N >= 1")?;
    within(&run, NORTHCOTT_LIMIT)?;
    Ok(format!(
        "N = 0 on {zero} pairs over Q and Z; Z[sqrt(-3)] fixture x = {}, y = {} has N = {n} ({:.2?})",
        fixture["x"].as_str().unwrap_or("?"),
        fixture["y"].as_str().unwrap_or("?"),
        run.elapsed
    ))
}

fn decomposition_maps() -> Result<String, String> {
    let run = semiclass(&["demo", "decomposition", "--trials", "100"])?;
    all_pass(&run)?;
    full_agreement(&run, "phi(J) trivial iff J principal", 100)?;
    full_agreement(&run, "psi(psi'(m)) = m", 100)?;
    full_agreement(
        &run,
        "decompose(phi(J)) = (class of J, trivial) and psi(phi(J)) trivial",
        100,
    )?;
    let criterion = semiclass(&["demo", "ex217"])?;
    all_pass(&criterion)?;
    for name in [
        "A integrally closed",
        "Γ integrally closed",
        "Cl(Γ) = 0",
        "Cl(A[Γ]) = Cl(A) = Z/2Z",
    ] {
        check(&criterion, name)?;
    }
    let conclusion = criterion.report["results"]["conclusion"]
        .as_str()
        .unwrap_or("");
    require(conclusion.ends_with("Z/2Z"), || conclusion.to_string())?;
    Ok(format!(
        "phi injective, psi o psi' = id, decompose o phi = (id, trivial) on 100 each; {conclusion}"
    ))
}

fn determinism() -> Result<String, String> {
    let demos = [
        "ex111",
        "ex112",
        "ex216",
        "ex217",
        "ex218",
        "lemma23",
        "northcott",
        "decomposition",
    ];
    for name in demos {
        let args = ["demo", name, "--seed", "13"];
        let mut a = semiclass(&args)?.report;
        let mut b = semiclass(&args)?.report;
        for r in [&mut a, &mut b] {
            r.as_object_mut()
                .and_then(|m| m.remove("elapsed_ms"))
                .ok_or_else(|| format!("{name}: no elapsed_ms"))?;
        }
        require(a == b, || format!("{name} differs between runs"))?;
    }
    Ok(format!(
        "{} demos produce identical JSON on re-run",
        demos.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("class group of Z[sqrt(-5)]", class_group_of_sqrt_minus_five),
        ("ideals of <2,3>", two_three_semigroup),
        (
            "invertible non-homogeneous ideal",
            invertible_counterexample,
        ),
        ("componentwise J[Y] identities", componentwise_identities),
        ("ideal oracle equivalence", oracle_equivalence),
        ("content formula exponent", content_formula),
        ("class group decomposition", decomposition_maps),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
