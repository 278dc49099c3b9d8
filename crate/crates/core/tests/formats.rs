use gallai_edmonds::io::*;
use gallai_edmonds::{gallai_edmonds, Graph, VertexSet};
use proptest::prelude::*;

const GOLDEN_RANDOM: &str = include_str!("golden/random_n8_p1-2_seed42.txt");

#[test]
fn random_graph_golden() {
    let g = random_graph(8, 1, 2, 42).unwrap();
    assert_eq!(emit_edgelist(&g), GOLDEN_RANDOM);
}

#[test]
fn first_draws_for_seed_42() {
    // Computed with an independent SplitMix64 implementation.
    let mut rng = SplitMix64::new(42);
    assert_eq!(rng.next_u64(), 0xBDD7_3226_2FEB_6E95);
    assert_eq!(rng.next_u64(), 0x28EF_E333_B266_F103);
    assert_eq!(rng.next_u64(), 0x4752_6757_130F_9F52);
    // Odd, odd, even: slots (0,1), (0,2) dropped and (0,3) kept at p = 1/2.
    let g = random_graph(8, 1, 2, 42).unwrap();
    assert!(!g.has_edge(0, 1) && !g.has_edge(0, 2) && g.has_edge(0, 3));
}

fn vertex_lists(v: &serde_json::Value, key: &str) -> Vec<usize> {
    v[key]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap() as usize)
        .collect()
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (0usize..12, any::<u64>(), 0u64..=10)
        .prop_map(|(n, seed, num)| random_graph(n, num, 10, seed).unwrap())
}

proptest! {
    #[test]
    fn edgelist_round_trip(g in arb_graph()) {
        let text = emit_edgelist(&g);
        let doc = parse_edgelist(&text).unwrap();
        prop_assert_eq!(&doc.graph, &g);
        prop_assert_eq!(emit_edgelist(&doc.graph), text);
    }

    #[test]
    fn dimacs_round_trip(g in arb_graph()) {
        let text = emit_dimacs(&g);
        prop_assert_eq!(detect_format(&text), SourceFormat::Dimacs);
        prop_assert_eq!(parse_dimacs(&text).unwrap().graph, g);
    }

    #[test]
    fn json_reconstructs_partition(g in arb_graph()) {
        let d = gallai_edmonds(&g);
        let v: serde_json::Value = serde_json::from_str(&emit_decomposition_json(&d)).unwrap();
        prop_assert_eq!(VertexSet::from_iter(vertex_lists(&v, "D")), d.d.clone());
        prop_assert_eq!(VertexSet::from_iter(vertex_lists(&v, "A")), d.a.clone());
        prop_assert_eq!(VertexSet::from_iter(vertex_lists(&v, "C")), d.c.clone());
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        let mut expected = vec!["n", "nu", "deficiency", "D", "A", "C", "odd_components", "even_components"];
        expected.sort_unstable();
        prop_assert_eq!(keys, expected);
    }

    #[test]
    fn generator_is_deterministic(n in 0usize..20, seed in any::<u64>(), num in 0u64..=7) {
        prop_assert_eq!(random_graph(n, num, 7, seed).unwrap(), random_graph(n, num, 7, seed).unwrap());
    }
}
