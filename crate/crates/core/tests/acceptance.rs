//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use glmcr::dwpf::partition_function;
use glmcr::harness::{draw_parameters, run_suite, CaseRecord, Report, Status, Suite, SuiteConfig};
use glmcr::{Coupling, Rat};

type Outcome = Result<String, String>;
/// Name, check and runtime limit in seconds.
type Criterion = (&'static str, fn() -> Outcome, u64);

fn cfg(suite: Suite, sites: usize, max_set_size: usize, draws: usize, seed: u64) -> SuiteConfig {
    SuiteConfig {
        sites,
        max_set_size,
        draws,
        seed,
        ..SuiteConfig::new(suite)
    }
}

fn run(cfg: &SuiteConfig) -> Result<Report, String> {
    run_suite(cfg).map_err(|e| e.to_string())
}

fn param(r: &CaseRecord, key: &str) -> String {
    r.params.get(key).cloned().unwrap_or_default()
}

/// Case id with the trailing draw index removed.
fn configuration(r: &CaseRecord) -> String {
    match r.case_id.rsplit_once("/d") {
        Some((stem, _)) => stem.to_string(),
        None => r.case_id.clone(),
    }
}

/// All selected records pass, every required configuration is present, and
/// each has at least `min_draws` draws.
fn require(records: &[&CaseRecord], expected: &[String], min_draws: usize) -> Outcome {
    if let Some(bad) = records.iter().find(|r| r.status != Status::Pass) {
        return Err(format!("{} {:?}: {}", bad.case_id, bad.status, bad.detail));
    }
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for r in records {
        *counts.entry(configuration(r)).or_default() += 1;
    }
    for e in expected {
        let n = counts.get(e).copied().unwrap_or(0);
        if n < min_draws {
            return Err(format!("{e}: {n} draws, need {min_draws}"));
        }
    }
    Ok(format!(
        "{} cases over {} configurations",
        records.len(),
        counts.len()
    ))
}

fn select(report: &Report, pred: impl Fn(&CaseRecord) -> bool) -> Vec<&CaseRecord> {
    report.cases.iter().filter(|r| pred(r)).collect()
}

fn rtt() -> Outcome {
    let report = run(&cfg(Suite::Rtt, 3, 4, 10, 101))?;
    let recs = select(&report, |r| r.equation_ref == "monodromy:rtt");
    let expected: Vec<String> = (1..=3).map(|l| format!("rtt/L{l}/rtt")).collect();
    let mut msg = require(&recs, &expected, 10)?;
    let other = select(&report, |r| r.equation_ref != "monodromy:rtt");
    require(&other, &[], 0)?;
    msg.push_str(&format!("; {} further rtt-suite cases pass", other.len()));
    Ok(msg)
}

fn commutators() -> Outcome {
    let report = run(&cfg(Suite::Rtt, 2, 4, 5, 102))?;
    let recs = select(&report, |r| {
        r.equation_ref == "monodromy:graded-commutator" && param(r, "L") == "2"
    });
    let msg = require(&recs, &["rtt/L2/commutators".into()], 5)?;
    if recs.iter().any(|r| !r.detail.contains("(162 terms)")) {
        return Err("a commutator case did not cover 81 quadruples in both forms".into());
    }
    Ok(msg)
}

/// `Δ'(u)Δ(v) h(u,v) det[g(u_j,v_k)/h(u_j,v_k)]` by the Leibniz formula.
fn k_oracle(u: &[Rat], v: &[Rat], c: &Rat) -> Rat {
    let one = Rat::from_integer(1.into());
    let g = |x: &Rat, y: &Rat| c.clone() / (x.clone() - y.clone());
    let h = |x: &Rat, y: &Rat| (x.clone() - y.clone() + c.clone()) / c.clone();
    let n = u.len();
    let mut pref = one.clone();
    for j in 0..n {
        for k in j + 1..n {
            pref *= g(&u[j], &u[k]) * g(&v[k], &v[j]);
        }
        for vk in v {
            pref *= h(&u[j], vk);
        }
    }
    let mut det = Rat::from_integer(0.into());
    let mut perm: Vec<usize> = (0..n).collect();
    heap_permutations(n, &mut perm, &mut |p| {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        let mut term = if inversions.is_multiple_of(2) {
            one.clone()
        } else {
            -one.clone()
        };
        for (j, &k) in p.iter().enumerate() {
            term *= g(&u[j], &v[k]) / h(&u[j], &v[k]);
        }
        det += term;
    });
    pref * det
}

fn heap_permutations(k: usize, p: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        f(p);
        return;
    }
    for i in 0..k {
        heap_permutations(k - 1, p, f);
        let j = if k.is_multiple_of(2) { i } else { 0 };
        p.swap(j, k - 1);
    }
}

fn dwpf() -> Outcome {
    let report = run(&cfg(Suite::Dwpf, 1, 5, 20, 103))?;
    let mut expected = Vec::new();
    for n in 1..=5 {
        expected.push(format!("dwpf/symmetry/n{n}"));
        if n <= 4 {
            for part in ["shift", "cauchy", "residue"] {
                expected.push(format!("dwpf/{part}/n{n}"));
            }
        }
    }
    let recs = select(&report, |_| true);
    let msg = require(&recs, &expected, 20)?;
    for r in select(&report, |r| r.equation_ref == "dwpf:residue") {
        let n = param(r, "u").matches(',').count() + 1;
        let ok = r.detail.contains("numerator degree zero")
            || (0..n).any(|d| r.detail.contains(&format!("numerator degree {d}")));
        if !ok {
            return Err(format!("{}: {}", r.case_id, r.detail));
        }
    }
    let c = Coupling::new(Rat::new(3.into(), 2.into())).map_err(|e| e.to_string())?;
    for seed in 0..20 {
        for n in 1..=4 {
            let s = draw_parameters(1000 + seed, 2 * n, &c, &[]).map_err(|e| e.to_string())?;
            let (u, v) = s.split_at(n);
            let k = partition_function(u, v, &c).map_err(|e| e.to_string())?;
            if k != k_oracle(u, v, c.value()) {
                return Err(format!("K({u:?}|{v:?}) disagrees with the Leibniz oracle"));
            }
        }
    }
    Ok(format!(
        "{msg}; K matches an independent Leibniz expansion on 80 draws"
    ))
}

fn lemmas() -> Outcome {
    let report = run(&cfg(Suite::Lemmas, 1, 6, 20, 104))?;
    let mut expected = Vec::new();
    for name in ["cauchy-sum", "dwpf-sum"] {
        for m1 in 0..=6 {
            for m2 in 0..=6 - m1 {
                if m1 + m2 > 0 {
                    expected.push(format!("lemmas/{name}/m{m1}-{m2}"));
                }
            }
        }
    }
    for name in ["one-out-u", "one-out-v", "contour"] {
        for n in 1..=6 {
            expected.push(format!("lemmas/{name}/m{n}-0"));
        }
    }
    require(&select(&report, |_| true), &expected, 20)
}

fn mcr_rows() -> Outcome {
    let report = run(&cfg(Suite::McrRows, 3, 4, 5, 105))?;
    let recs = select(&report, |r| param(r, "L") != "1");
    let mut configs: Vec<String> = recs.iter().map(|r| configuration(r)).collect();
    configs.dedup();
    for l in [2, 3] {
        for sizes in ["n1m1", "n1m2", "n2m1", "n2m2", "n1m3"] {
            let hits = configs
                .iter()
                .filter(|c| c.starts_with(&format!("mcr-rows/L{l}/")) && c.ends_with(sizes))
                .count();
            // 8 + 4 + 4 + 4 + 2 + 2 index choices across the six identities
            if hits != 24 {
                return Err(format!(
                    "L{l} {sizes}: {hits} index configurations, need 24"
                ));
            }
        }
    }
    require(&recs, &configs, 5)
}

fn mcr_columns() -> Outcome {
    let report = run(&cfg(Suite::McrColumns, 3, 3, 5, 106))?;
    let recs = select(&report, |r| param(r, "L") != "1");
    let mut expected = Vec::new();
    for l in [2, 3] {
        for eq in ["T22vT12u", "T23uT13v"] {
            for b in 1..=2 {
                expected.push(format!("mcr-columns/L{l}/{eq}/n{b}m1"));
            }
        }
    }
    let msg = require(&recs, &expected, 5)?;
    let literal: Vec<&&CaseRecord> = recs
        .iter()
        .filter(|r| r.equation_ref.contains("T23(u)T13(v)"))
        .collect();
    let fails = literal
        .iter()
        .filter(|r| r.detail.contains("T13(v) reading fails"))
        .count();
    let holds = literal
        .iter()
        .filter(|r| r.detail.contains("T13(v) reading holds"))
        .count();
    if fails + holds != literal.len() {
        return Err("a T23T13 case lacks the literal-reading verdict".into());
    }
    Ok(format!(
        "{msg}; literal T13(v) reading fails in {fails} of {} cases",
        literal.len()
    ))
}

fn xy() -> Outcome {
    let report = run(&cfg(Suite::Xy, 3, 4, 3, 107))?;
    let recs = select(&report, |r| !r.equation_ref.starts_with("commutator:"));
    let mut expected = Vec::new();
    for l in 1..=3 {
        for a in 0..=4usize {
            for b in 0..=4 - a {
                expected.push(format!("xy/L{l}/equivalence/a{a}b{b}"));
                if a >= 1 {
                    expected.push(format!("xy/L{l}/recursion-X/a{a}b{b}"));
                    expected.push(format!("xy/L{l}/recursion-Y/a{a}b{b}"));
                }
            }
        }
        for b in 0..=3 {
            expected.push(format!("xy/L{l}/base/b{b}"));
        }
    }
    require(&recs, &expected, 3)
}

fn bethe() -> Outcome {
    let mut msgs = Vec::new();
    for (suite, seed) in [(Suite::Bethe, 108), (Suite::DualBethe, 109)] {
        let report = run(&cfg(suite, 3, 4, 3, seed))?;
        let recs = select(&report, |r| param(r, "L") != "1");
        let mut expected = Vec::new();
        for l in [2, 3] {
            for (a, b) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
                expected.push(format!("{suite}/L{l}/a{a}b{b}"));
            }
        }
        msgs.push(format!("{suite}: {}", require(&recs, &expected, 3)?));
    }
    Ok(msgs.join("; "))
}

fn comm_a1() -> Outcome {
    let report = run(&cfg(Suite::Xy, 2, 4, 5, 110))?;
    let recs = select(&report, |r| {
        r.equation_ref.starts_with("commutator:") && param(r, "L") == "2"
    });
    let expected: Vec<String> = (1..=3).map(|b| format!("xy/L2/comm-a1/b{b}")).collect();
    require(&recs, &expected, 5)
}

fn determinism() -> Outcome {
    let once = || -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_verify"))
            .args([
                "--suite", "all", "--sites", "2", "--seed", "7", "--format", "json",
            ])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("verify exited with {}", out.status));
        }
        Ok(out.stdout)
    };
    let (a, b) = (once()?, once()?);
    if a != b {
        return Err("the two JSON reports differ".into());
    }
    let records: serde_json::Value = serde_json::from_slice(&a).map_err(|e| e.to_string())?;
    let n = records.as_array().map_or(0, Vec::len);
    Ok(format!("{} identical bytes, {n} records", a.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 rtt relation, L = 1..3", rtt, 30),
        ("2 graded commutators, 81 quadruples", commutators, 60),
        ("3 domain-wall partition function", dwpf, 60),
        ("4 partition-sum lemmas", lemmas, 120),
        ("5 row multiple commutation relations", mcr_rows, 300),
        ("6 column special relations", mcr_columns, 60),
        ("7 X = Y, recursions, base case", xy, 600),
        ("8 Bethe and dual Bethe representations", bethe, 600),
        ("9 a = 1 commutator", comm_a1, 30),
        ("10 deterministic reports", determinism, 120),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(m) if elapsed > Duration::from_secs(limit) => {
                Err(format!("{m}; took {elapsed:.1?}, limit {limit} s"))
            }
            other => other,
        };
        match outcome {
            Ok(m) => println!("PASS criterion {name} ({elapsed:.1?}): {m}"),
            Err(m) => {
                failed += 1;
                println!("FAIL criterion {name} ({elapsed:.1?}): {m}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
