//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use gallai_edmonds::io::{
    emit_decomposition_json, enumerate_labeled_graphs, labeled_graph_count, random_graph,
};
use gallai_edmonds::oracle::{self, clause};
use gallai_edmonds::*;

/// Number of labeled graphs on 0..=6 and 0..=5 vertices.
const GRAPHS_UP_TO_6: u64 = 33_868;
const GRAPHS_UP_TO_5: u64 = 1_100;

const EXHAUSTIVE_BUDGET: Duration = Duration::from_secs(120);
const RANDOM_BUDGET: Duration = Duration::from_secs(600);

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn all_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (0..=max_n).flat_map(|n| enumerate_labeled_graphs(n).unwrap())
}

fn within(budget: Duration, start: Instant) -> (bool, String) {
    let elapsed = start.elapsed();
    (
        elapsed <= budget,
        format!(
            "{:.1}s of {}s budget",
            elapsed.as_secs_f64(),
            budget.as_secs()
        ),
    )
}

fn nu_equivalence() -> Outcome {
    let start = Instant::now();
    let mut graphs = 0u64;
    let mut failures = Vec::new();
    for g in all_graphs(6) {
        graphs += 1;
        if maximum_matching(&g).size() != oracle::brute_nu(&g).unwrap() {
            failures.push(g);
        }
    }
    let (fast, time) = within(EXHAUSTIVE_BUDGET, start);
    let count_ok = graphs == GRAPHS_UP_TO_6;
    outcome(
        failures.is_empty() && fast && count_ok,
        format!(
            "{graphs} graphs, {} failures, {time}{}",
            failures.len(),
            first(&failures)
        ),
    )
}

fn first(failures: &[Graph]) -> String {
    failures
        .first()
        .map(|g| format!(", first {g:?}"))
        .unwrap_or_default()
}

fn structure_theorem() -> Outcome {
    let start = Instant::now();
    let mut graphs = 0u64;
    let mut failures = 0;
    let mut witness = String::new();
    for g in all_graphs(5) {
        graphs += 1;
        let report = oracle::verify_structure_theorem(&g).unwrap();
        if !report.passed() {
            if failures == 0 {
                witness = format!(", first failure:\n{report}");
            }
            failures += 1;
        }
    }
    let (fast, time) = within(EXHAUSTIVE_BUDGET, start);
    outcome(
        failures == 0 && fast && graphs == GRAPHS_UP_TO_5,
        format!("{graphs} graphs, {failures} failures, {time}{witness}"),
    )
}

fn tutte_corollary() -> Outcome {
    let mut failures = Vec::new();
    let mut graphs = 0u64;
    for g in all_graphs(6) {
        graphs += 1;
        if oracle::tutte_check(&g).unwrap() != has_perfect_matching(&g) {
            failures.push(g);
        }
    }
    outcome(
        failures.is_empty() && graphs == GRAPHS_UP_TO_6,
        format!(
            "{graphs} graphs, {} failures{}",
            failures.len(),
            first(&failures)
        ),
    )
}

fn surplus_equivalence() -> Outcome {
    let mut minors = 0u64;
    let mut failures = 0u64;
    for g in all_graphs(5) {
        for mask in 0u64..1 << g.n() {
            let s = VertexSet::from_mask(mask, g.n());
            let Ok(h) = bipartite_minor(&g, &s) else {
                continue;
            };
            minors += 1;
            if hall_condition(&h, Surplus::One) != oracle::hall_by_enumeration(&h, 1).unwrap() {
                failures += 1;
            }
        }
        // The theorem report cross-checks the same minors for this graph.
        if oracle::verify_structure_theorem(&g)
            .unwrap()
            .clause(clause::SURPLUS)
            != Some(true)
        {
            failures += 1;
        }
    }
    outcome(
        failures == 0,
        format!("{minors} minors, {failures} disagreements"),
    )
}

fn randomized_consistency() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for i in 0..1000u64 {
        let g = random_graph(30, 1, 10, 42 + i).unwrap();
        let report = gallai_edmonds(&g).check_invariants(&g);
        if !report.passed() {
            failures.push(format!("seed {}: {report}", 42 + i));
        }
    }
    let mut oracle_failures = Vec::new();
    for i in 0..100u64 {
        let g = random_graph(16, 1, 10, 42 + i).unwrap();
        let extremal = oracle::extremal_set(&g).unwrap();
        let a = gallai_edmonds(&g).a;
        if !extremal.unique() || extremal.candidates[0] != a {
            oracle_failures.push(format!(
                "seed {}: extremal {:?} vs A {a:?}",
                42 + i,
                extremal.candidates
            ));
        }
    }
    let (fast, time) = within(RANDOM_BUDGET, start);
    let mut detail = format!(
        "1000 graphs n=30: {} failures; 100 graphs n=16 vs oracle: {} failures; {time}",
        failures.len(),
        oracle_failures.len()
    );
    if let Some(f) = failures.first().or(oracle_failures.first()) {
        detail.push_str(&format!("\n{f}"));
    }
    outcome(
        failures.is_empty() && oracle_failures.is_empty() && fast,
        detail,
    )
}

fn named_instances() -> Outcome {
    let mut problems = Vec::new();

    let petersen = gallai_edmonds(&Graph::petersen());
    if petersen.nu != 5 || !petersen.d.is_empty() {
        problems.push(format!("Petersen: nu={} D={:?}", petersen.nu, petersen.d));
    }
    let c5 = gallai_edmonds(&Graph::cycle(5));
    if c5.d != Graph::cycle(5).all_vertices() || !c5.a.is_empty() {
        problems.push(format!("C5: D={:?} A={:?}", c5.d, c5.a));
    }
    let star = gallai_edmonds(&Graph::star(3));
    if star.d != VertexSet::from_iter([1, 2, 3])
        || star.a != VertexSet::from_iter([0])
        || star.deficiency != 2
    {
        problems.push(format!(
            "K1,3: D={:?} A={:?} deficiency={}",
            star.d, star.a, star.deficiency
        ));
    }
    // The named values must also be what exhaustive search says.
    for g in [Graph::petersen(), Graph::cycle(5), Graph::star(3)] {
        let a = oracle::extremal_set(&g).unwrap().candidates[0].clone();
        if a != gallai_edmonds(&g).a || oracle::brute_nu(&g).unwrap() != gallai_edmonds(&g).nu {
            problems.push(format!("oracle disagrees on {g:?}"));
        }
    }
    let golden = include_str!("golden/p3_decomposition.json").trim_end();
    let json = emit_decomposition_json(&gallai_edmonds(&Graph::path(3)));
    if json != golden {
        problems.push(format!("P3 JSON {json} != golden {golden}"));
    }
    outcome(
        problems.is_empty(),
        if problems.is_empty() {
            "Petersen, C5, K1,3, P3 golden".into()
        } else {
            problems.join("; ")
        },
    )
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_gallai-edmonds");
    let input = concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/golden/random_n8_p1-2_seed42.txt"
    );
    let run = |args: &[&str]| Command::new(bin).args(args).output().expect("binary runs");
    let d1 = run(&["decompose", "--input", input]);
    let d2 = run(&["decompose", "--input", input]);
    let o1 = run(&["oracle", "--max-n", "4"]);
    let o2 = run(&["oracle", "--max-n", "4"]);
    let ok = d1.status.success()
        && o1.status.success()
        && !d1.stdout.is_empty()
        && d1.stdout == d2.stdout
        && o1.stdout == o2.stdout;
    outcome(
        ok,
        format!(
            "decompose {} bytes, oracle {} bytes",
            d1.stdout.len(),
            o1.stdout.len()
        ),
    )
}

fn main() -> ExitCode {
    assert_eq!(
        (0..=6).map(labeled_graph_count).sum::<u64>(),
        GRAPHS_UP_TO_6
    );
    assert_eq!(
        (0..=5).map(labeled_graph_count).sum::<u64>(),
        GRAPHS_UP_TO_5
    );

    let criteria: [Criterion; 7] = [
        ("1 exhaustive nu-equivalence, n <= 6", nu_equivalence),
        ("2 exhaustive structure theorem, n <= 5", structure_theorem),
        ("3 Tutte corollary, n <= 6", tutte_corollary),
        (
            "4 surplus-check equivalence on run-2 minors",
            surplus_equivalence,
        ),
        (
            "5 randomized consistency, n=30 p=1/10 seed=42",
            randomized_consistency,
        ),
        ("6 named instances", named_instances),
        (
            "7 determinism of decompose and oracle --max-n 4",
            determinism,
        ),
    ];
    let mut all = true;
    for (name, check) in criteria {
        let result = check();
        all &= result.passed;
        println!(
            "{} [{name}] {}",
            if result.passed { "PASS" } else { "FAIL" },
            result.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
