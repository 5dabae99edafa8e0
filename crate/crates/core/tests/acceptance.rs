//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use degree_indices::closed_forms::{dw_closed_form, hanoi_closed_form};
use degree_indices::generators::{double_wheel, hanoi};
use degree_indices::indices::{compute_from_partition, compute_index, edge_term};
use degree_indices::partition::{degree_partition, neighbor_sum_partition, partition};
use degree_indices::verify::{relative_error, verify_all, DEFAULT_TOLERANCE};
use degree_indices::{FormulaVariant, Graph, IndexKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;
const PARTITION_TOL: f64 = 1e-12;
const ERRATUM_GAP: f64 = 0.10;
const DW_RUNTIME: Duration = Duration::from_secs(1);
const HANOI_RUNTIME: Duration = Duration::from_secs(10);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pow3(k: u32) -> u64 {
    3u64.pow(k)
}

/// 1. DW closed forms for randic, sum_connectivity, abc, ga, ga5 over n in [3, 64].
fn dw_agreement() -> Outcome {
    let start = Instant::now();
    let kinds = [IndexKind::Randic, IndexKind::SumConnectivity, IndexKind::Abc, IndexKind::Ga, IndexKind::Ga5];
    let mut worst = 0.0f64;
    for n in 3..=64u32 {
        let g = double_wheel(n as usize).map_err(|e| e.to_string())?;
        for kind in kinds {
            let oracle = compute_index(&g, kind);
            let closed = dw_closed_form(kind, n, FormulaVariant::ProofDerived).map_err(|e| e.to_string())?.value;
            let err = relative_error(closed, oracle);
            worst = worst.max(err);
            check(err <= TOL, || format!("{kind} n={n}: closed {closed} oracle {oracle} rel {err:e}"))?;
        }
    }
    let elapsed = start.elapsed();
    check(elapsed < DW_RUNTIME, || format!("runtime {elapsed:?} >= {DW_RUNTIME:?}"))?;
    Ok(format!("310 checks, max rel error {worst:.2e}, {elapsed:.2?}"))
}

/// 2. ABC4(DW_n): proof-derived matches, as-stated misses by > 10 %.
fn dw_abc4_erratum() -> Outcome {
    let mut min_gap = f64::INFINITY;
    let mut at_three = (0.0, 0.0);
    for n in 3..=64u32 {
        let g = double_wheel(n as usize).map_err(|e| e.to_string())?;
        let oracle = compute_index(&g, IndexKind::Abc4);
        let derived = dw_closed_form(IndexKind::Abc4, n, FormulaVariant::ProofDerived).unwrap().value;
        let stated = dw_closed_form(IndexKind::Abc4, n, FormulaVariant::AsStated).unwrap().value;
        let err = relative_error(derived, oracle);
        check(err <= TOL, || format!("proof-derived n={n}: rel {err:e}"))?;
        let gap = relative_error(stated, oracle);
        check(gap > ERRATUM_GAP, || format!("as-stated n={n}: gap {gap} not > {ERRATUM_GAP}"))?;
        min_gap = min_gap.min(gap);
        if n == 3 {
            at_three = (stated, oracle);
        }
    }
    check((at_three.0 - 7.7417).abs() < 1e-4 && (at_three.1 - 4.5055).abs() < 1e-4, || {
        format!("n=3 anchor: as-stated {} oracle {}", at_three.0, at_three.1)
    })?;
    Ok(format!(
        "n=3 as-stated {:.4} vs oracle {:.4}; smallest as-stated gap {:.1}%",
        at_three.0,
        at_three.1,
        100.0 * min_gap
    ))
}

/// 3. Hanoi closed forms: degree kinds n in [2, 8], S kinds n in [3, 8].
fn hanoi_agreement() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut checks = 0;
    for n in 2..=8u32 {
        let g = hanoi(n).map_err(|e| e.to_string())?;
        for kind in IndexKind::ALL {
            if n < 3 && matches!(kind, IndexKind::Abc4 | IndexKind::Ga5) {
                continue;
            }
            let oracle = compute_index(&g, kind);
            let closed = hanoi_closed_form(kind, n).map_err(|e| e.to_string())?.value;
            let err = relative_error(closed, oracle);
            worst = worst.max(err);
            checks += 1;
            check(err <= TOL, || format!("{kind} n={n}: closed {closed} oracle {oracle} rel {err:e}"))?;
        }
    }
    let anchor = compute_index(&hanoi(3).unwrap(), IndexKind::Abc);
    check((anchor - (3.0 * 2f64.sqrt() + 22.0)).abs() < 1e-12 * anchor, || format!("ABC(H_3) = {anchor}"))?;
    check((anchor - 26.2426407).abs() < 1e-7, || format!("ABC(H_3) = {anchor}"))?;
    let elapsed = start.elapsed();
    check(elapsed < HANOI_RUNTIME, || format!("runtime {elapsed:?} >= {HANOI_RUNTIME:?}"))?;
    Ok(format!("{checks} checks, max rel error {worst:.2e}, ABC(H_3) = {anchor:.7}, {elapsed:.2?}"))
}

/// 4. Partition tables, exact integer counts.
fn partition_tables() -> Outcome {
    for n in 3..=64u64 {
        let g = double_wheel(n as usize).unwrap();
        let rows: Vec<_> = degree_partition(&g).iter().map(|(k, c)| (k.lo, k.hi, c)).collect();
        check(rows == [(3, 3, 2 * n), (3, 2 * n, 2 * n)], || format!("DW degree n={n}: {rows:?}"))?;
        let rows: Vec<_> = neighbor_sum_partition(&g).iter().map(|(k, c)| (k.lo, k.hi, c)).collect();
        let expected = [(2 * n + 6, 2 * n + 6, 2 * n), (2 * n + 6, 6 * n, 2 * n)];
        check(rows == expected, || format!("DW neighbor-sum n={n}: {rows:?}"))?;
    }
    for n in 2..=8u32 {
        let g = hanoi(n).unwrap();
        let numerator = pow3(n + 1) - 15;
        check(numerator.is_multiple_of(2), || format!("3^{}-15 odd", n + 1))?;
        let rows: Vec<_> = degree_partition(&g).iter().map(|(k, c)| (k.lo, k.hi, c)).collect();
        check(rows == [(2, 3, 6), (3, 3, numerator / 2)], || format!("H degree n={n}: {rows:?}"))?;
        if n >= 3 {
            let numerator = pow3(n + 1) - 33;
            check(numerator.is_multiple_of(2), || format!("3^{}-33 odd", n + 1))?;
            let rows: Vec<_> = neighbor_sum_partition(&g).iter().map(|(k, c)| (k.lo, k.hi, c)).collect();
            let expected = [(6, 8, 6), (8, 8, 3), (8, 9, 6), (9, 9, numerator / 2)];
            check(rows == expected, || format!("H neighbor-sum n={n}: {rows:?}"))?;
        }
    }
    Ok("DW n in [3,64], H degree n in [2,8], H neighbor-sum n in [3,8] incl. E(9,9)".into())
}

/// 5. Vertex and edge counts of both families.
fn cardinalities() -> Outcome {
    for n in 1..=10u32 {
        let g = hanoi(n).unwrap();
        let (v, e) = (pow3(n) as usize, (3 * (pow3(n) - 1) / 2) as usize);
        check(g.vertex_count() == v && g.edge_count() == e && g.edges().len() == e, || {
            format!("H_{n}: |V|={} |E|={}", g.vertex_count(), g.edge_count())
        })?;
    }
    for n in 3..=200usize {
        let g = double_wheel(n).unwrap();
        check(
            g.vertex_count() == 2 * n + 1 && g.edge_count() == 4 * n && g.degree(0).unwrap() == 2 * n,
            || format!("DW_{n}: |V|={} |E|={}", g.vertex_count(), g.edge_count()),
        )?;
    }
    Ok("H_n n in [1,10], DW_n n in [3,200]".into())
}

fn graph_properties(g: &Graph, label: &str) -> Result<(), String> {
    let m = g.edge_count();
    for kind in IndexKind::ALL {
        let p = partition(g, kind.labeling());
        check(p.total_edges() as usize == m, || format!("{label}: partition sum {} != {m}", p.total_edges()))?;
        let direct = compute_index(g, kind);
        let grouped = compute_from_partition(&p, kind).map_err(|e| e.to_string())?;
        check((direct - grouped).abs() <= PARTITION_TOL * direct.abs(), || {
            format!("{label} {kind}: edge {direct} vs partition {grouped}")
        })?;
        check(direct >= 0.0 && direct.is_finite(), || format!("{label} {kind}: value {direct}"))?;
        if matches!(kind, IndexKind::Ga | IndexKind::Ga5) {
            check(direct <= m as f64 * (1.0 + 1e-15), || format!("{label} {kind}: {direct} > |E| = {m}"))?;
        }
    }
    let degrees = g.degrees();
    for e in g.edges() {
        let (a, b) = (degrees[e.u] as u64, degrees[e.v] as u64);
        for kind in IndexKind::ALL {
            check(edge_term(kind, a, b).unwrap() == edge_term(kind, b, a).unwrap(), || {
                format!("{label}: edge_term({kind}, {a}, {b}) asymmetric")
            })?;
        }
    }
    Ok(())
}

/// 6. Property suite on both families and 100 random connected graphs.
fn property_suite() -> Outcome {
    for n in 3..=64 {
        graph_properties(&double_wheel(n).unwrap(), &format!("DW_{n}"))?;
    }
    for n in 1..=8 {
        graph_properties(&hanoi(n).unwrap(), &format!("H_{n}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..100 {
        let n = rng.gen_range(1..=50);
        let extra = rng.gen_range(0..=2 * n);
        let g = common::random_connected_graph(&mut rng, n, extra);
        g.validate().map_err(|e| format!("random #{i}: {e}"))?;
        graph_properties(&g, &format!("random #{i} ({n} vertices)"))?;
    }
    Ok("DW_3..DW_64, H_1..H_8, 100 random connected graphs (<= 50 vertices)".into())
}

/// 7. Two full verification runs serialize to identical bytes.
fn determinism() -> Outcome {
    let first = verify_all(DEFAULT_TOLERANCE, FormulaVariant::ProofDerived).map_err(|e| e.to_string())?;
    let second = verify_all(DEFAULT_TOLERANCE, FormulaVariant::ProofDerived).map_err(|e| e.to_string())?;
    let (a, b) = (first.to_json(), second.to_json());
    check(a == b, || "JSON reports differ".into())?;
    check(first.summary.failed == 0, || format!("{} failed entries", first.summary.failed))?;
    Ok(format!("{} entries, {} bytes, all passed", first.summary.total, a.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("AC1 DW closed-form agreement", dw_agreement),
        ("AC2 DW ABC4 erratum (proof-derived matches, as-stated misses)", dw_abc4_erratum),
        ("AC3 Hanoi closed-form agreement", hanoi_agreement),
        ("AC4 partition-table reproduction", partition_tables),
        ("AC5 structural cardinalities", cardinalities),
        ("AC6 property suite", property_suite),
        ("AC7 report determinism", determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("[PASS] {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
