//! Acceptance suite: one line per criterion, exact equality throughout.
//!
//! Runs without the libtest harness so every PASS/FAIL line is printed even
//! when everything passes. Exits non-zero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cayley_core::arith::power;
use cayley_core::counting::{binomial_collapse, count_total_trees, recursion_t};
use cayley_core::enumeration::{
    enumerate_all_trees, enumerate_all_trees_by_edges, enumerate_trees_with_degrees,
};
use cayley_core::sampling::{sample_tree_with_degrees, sample_uniform_tree, SamplerConfig};
use cayley_core::verifier::{
    verify_double_count, verify_lemma1, verify_recursion_and_collapse, verify_theorem1,
    IdentityReport, Verifier,
};
use cayley_core::{DegreeSequence, ExactCount, LabeledTree};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(started: Instant, budget: Duration) -> Result<Duration, String> {
    let took = started.elapsed();
    ensure(took < budget, || {
        format!("took {took:.2?}, budget {budget:?}")
    })?;
    Ok(took)
}

fn passed(r: &IdentityReport) -> Result<(), String> {
    ensure(r.passed(), || {
        format!("{} failed: {:?}", r.identity_id, r.failures)
    })
}

fn cayley_totals() -> Outcome {
    let start = Instant::now();
    for n in 2..=9 {
        let mut masks: Vec<u128> = enumerate_all_trees(n)
            .unwrap()
            .map(|t| t.edge_mask().unwrap())
            .collect();
        let total = masks.len();
        masks.sort_unstable();
        masks.dedup();
        let expected = power(n, n - 2);
        ensure(ExactCount::from(total) == expected, || {
            format!("n = {n}: {total} trees, expected {expected}")
        })?;
        ensure(masks.len() == total, || {
            format!("n = {n}: {} duplicates", total - masks.len())
        })?;
        ensure(count_total_trees(n).unwrap() == expected, || {
            format!("n = {n}: closed form")
        })?;
    }
    let took = within(start, Duration::from_secs(60))?;
    Ok(format!(
        "n in 2..=9, 4782969 distinct trees at n = 9, {took:.2?}"
    ))
}

fn oracle_agreement() -> Outcome {
    let start = Instant::now();
    for n in 1..=6 {
        let sweep: Vec<LabeledTree> = enumerate_all_trees(n).unwrap().collect();
        let by_prufer: BTreeSet<LabeledTree> = sweep.iter().cloned().collect();
        let by_edges: BTreeSet<LabeledTree> = enumerate_all_trees_by_edges(n).unwrap().collect();
        ensure(by_prufer.len() == sweep.len(), || {
            format!("n = {n}: sweep repeats a tree")
        })?;
        ensure(by_prufer == by_edges, || {
            format!(
                "n = {n}: sets differ ({} vs {} trees)",
                by_prufer.len(),
                by_edges.len()
            )
        })?;
    }
    let took = within(start, Duration::from_secs(5))?;
    Ok(format!(
        "n in 1..=6, Prüfer sweep = edge-subset oracle, {took:.2?}"
    ))
}

fn theorem1() -> Outcome {
    let start = Instant::now();
    let r = verify_theorem1(7).unwrap();
    passed(&r)?;
    let took = within(start, Duration::from_secs(30))?;
    Ok(format!(
        "{} degree sequences for n in 2..=7, {took:.2?}",
        r.checked
    ))
}

fn lemma1() -> Outcome {
    let start = Instant::now();
    let r = verify_lemma1(8).unwrap();
    passed(&r)?;
    ensure(r.checked == (2..=8).map(|n| n as u64 - 1).sum(), || {
        format!("checked {}", r.checked)
    })?;
    let took = within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{} (n, k) points, four routes each, {took:.2?}",
        r.checked
    ))
}

fn double_count() -> Outcome {
    let start = Instant::now();
    let r = verify_double_count(6).unwrap();
    passed(&r)?;
    ensure(r.checked == (2..=6).sum::<u64>(), || {
        format!("checked {}", r.checked)
    })?;
    let took = within(start, Duration::from_secs(30))?;
    Ok(format!(
        "{} (m, k) points, assemblies hit each pair k! times, {took:.2?}",
        r.checked
    ))
}

fn l3_expansion() -> Outcome {
    let start = Instant::now();
    let v = Verifier::default();
    let l3 = v.l3_expansion(5, 10).unwrap();
    passed(&l3)?;
    // positive compositions of m into k parts for k in 2..=5, m in k..=10
    let expected: u64 = (2..=5u64)
        .flat_map(|k| {
            (k..=10)
                .map(move |m| cayley_core::arith::binomial(m as usize - 1, k as usize - 1).unwrap())
        })
        .map(|c| c.to_u64().unwrap())
        .sum();
    ensure(l3.checked == expected, || {
        format!("checked {} compositions, expected {expected}", l3.checked)
    })?;
    let marginal = v.supervertex_marginal(5, 10).unwrap();
    passed(&marginal)?;
    let took = within(start, Duration::from_secs(10))?;
    Ok(format!(
        "{} compositions, expansion and marginal sum, {took:.2?}",
        l3.checked
    ))
}

fn recursion_and_collapse() -> Outcome {
    let start = Instant::now();
    for n in 2..=30 {
        let closed = power(n, n - 2);
        let rec = recursion_t(n).unwrap();
        let col = binomial_collapse(n).unwrap();
        ensure(rec == closed && col == closed, || {
            format!("n = {n}: recursion {rec}, collapse {col}, n^(n-2) {closed}")
        })?;
    }
    let [rec, col] = verify_recursion_and_collapse(30).unwrap();
    passed(&rec)?;
    passed(&col)?;
    let took = within(start, Duration::from_secs(5))?;
    Ok(format!("n in 2..=30, {took:.2?}"))
}

fn codec_round_trip() -> Outcome {
    let start = Instant::now();
    let r = Verifier::default().prufer_roundtrip(7).unwrap();
    passed(&r)?;
    let took = within(start, Duration::from_secs(10))?;
    Ok(format!(
        "all trees and all words for n in 2..=7, {took:.2?}"
    ))
}

/// Half-width of the 5-sigma band for a binomial count.
fn five_sigma(samples: u64, p: f64) -> f64 {
    5.0 * (samples as f64 * p * (1.0 - p)).sqrt()
}

fn sampler_uniformity() -> Outcome {
    let seed = 20_240_601;
    let mut freq: BTreeMap<LabeledTree, u64> = BTreeMap::new();
    for t in sample_uniform_tree(
        4,
        SamplerConfig {
            seed,
            count: 16_000,
        },
    )
    .unwrap()
    {
        *freq.entry(t).or_default() += 1;
    }
    let band = five_sigma(16_000, 1.0 / 16.0);
    ensure(band <= 155.0, || {
        format!("recomputed band {band:.1} exceeds 155")
    })?;
    ensure(freq.len() == 16, || {
        format!("{} distinct trees seen", freq.len())
    })?;
    let worst = freq
        .values()
        .map(|&c| (c as f64 - 1000.0).abs())
        .fold(0.0, f64::max);
    ensure(worst <= band, || {
        format!(
            "uniform: max deviation {worst} > {band:.1}: {:?}",
            freq.values()
        )
    })?;

    let d = DegreeSequence::new(vec![2, 2, 1, 1]).unwrap();
    let support: BTreeSet<LabeledTree> = enumerate_trees_with_degrees(&d).unwrap().collect();
    let mut dfreq: BTreeMap<LabeledTree, u64> = BTreeMap::new();
    for t in sample_tree_with_degrees(&d, SamplerConfig { seed, count: 2_000 }) {
        *dfreq.entry(t).or_default() += 1;
    }
    let dband = five_sigma(2_000, 0.5);
    ensure(dband <= 112.0, || {
        format!("recomputed band {dband:.1} exceeds 112")
    })?;
    ensure(
        dfreq.keys().cloned().collect::<BTreeSet<_>>() == support,
        || "degree sampler support".into(),
    )?;
    let dworst = dfreq
        .values()
        .map(|&c| (c as f64 - 1000.0).abs())
        .fold(0.0, f64::max);
    ensure(dworst <= dband, || {
        format!("degrees: max deviation {dworst} > {dband:.1}")
    })?;
    Ok(format!(
        "seed {seed}: max deviation {worst} within ±{band:.1}; degrees (2,2,1,1): {dworst} within ±{dband:.1}"
    ))
}

fn cli_contract() -> Outcome {
    for case in common::GOLDEN {
        common::check_golden(case)?;
    }
    let exits: [(&[&str], i32); 4] = [
        (&["count", "total", "-n", "4"], 0),
        (
            &[
                "verify",
                "theorem1",
                "--max-n",
                "5",
                "--inject-fault",
                "THEOREM_1",
            ],
            1,
        ),
        (&["count", "degrees", "-d", "3,1"], 2),
        (&["enumerate", "-n", "10"], 3),
    ];
    for (args, want) in exits {
        let got = common::run(args, "").status.code();
        ensure(got == Some(want), || {
            format!("{args:?}: exit {got:?}, expected {want}")
        })?;
    }
    let args = ["sample", "-n", "4", "--count", "5", "--seed", "42"];
    let (a, b) = (common::run(&args, ""), common::run(&args, ""));
    ensure(!a.stdout.is_empty() && a.stdout == b.stdout, || {
        "sample output differs between runs".into()
    })?;
    Ok(format!(
        "{} golden files, exit codes 0/1/2/3, sample byte-identical",
        common::GOLDEN.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Cayley totals", cayley_totals),
        ("Prüfer vs edge-subset oracle", oracle_agreement),
        ("degree-sequence count", theorem1),
        ("deg(v1) four-way agreement", lemma1),
        ("marked-edge double count", double_count),
        ("join-factor expansion", l3_expansion),
        ("recursion and binomial collapse", recursion_and_collapse),
        ("codec round trip", codec_round_trip),
        ("sampler uniformity", sampler_uniformity),
        ("CLI contract", cli_contract),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Err(msg)
        });
        match outcome {
            Ok(detail) => println!("acceptance {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("acceptance {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
