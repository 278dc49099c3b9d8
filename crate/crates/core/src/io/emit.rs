use std::fmt::Write as _;

use serde::Serialize;

use crate::decomposition::Decomposition;
use crate::graph::{Graph, VertexSet};

#[derive(Serialize)]
struct DecompositionJson<'a> {
    n: usize,
    nu: usize,
    deficiency: usize,
    #[serde(rename = "D")]
    d: &'a VertexSet,
    #[serde(rename = "A")]
    a: &'a VertexSet,
    #[serde(rename = "C")]
    c: &'a VertexSet,
    odd_components: &'a [VertexSet],
    even_components: &'a [VertexSet],
}

/// Compact JSON with a fixed key order; identical input gives identical bytes.
pub fn emit_decomposition_json(d: &Decomposition) -> String {
    serde_json::to_string(&DecompositionJson {
        n: d.n,
        nu: d.nu,
        deficiency: d.deficiency,
        d: &d.d,
        a: &d.a,
        c: &d.c,
        odd_components: &d.split.odd_components,
        even_components: &d.split.even_components,
    })
    .expect("plain data serializes")
}

/// Human-readable summary.
pub fn emit_decomposition_text(d: &Decomposition) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "n = {}, nu = {}, deficiency = {}",
        d.n, d.nu, d.deficiency
    )
    .unwrap();
    writeln!(out, "D = {:?}", d.d.as_slice()).unwrap();
    writeln!(out, "A = {:?}", d.a.as_slice()).unwrap();
    writeln!(out, "C = {:?}", d.c.as_slice()).unwrap();
    for comp in &d.split.odd_components {
        writeln!(out, "odd component {:?}", comp.as_slice()).unwrap();
    }
    for comp in &d.split.even_components {
        writeln!(out, "even component {:?}", comp.as_slice()).unwrap();
    }
    out
}

/// Graphviz rendering: one cluster per `A`-component (odd first, then even,
/// each by minimum vertex), `A` vertices outside any cluster, and every node
/// tagged with `class=D|A|C`.
pub fn emit_dot(g: &Graph, d: &Decomposition) -> String {
    let mut out = String::from("graph G {\n");
    let clusters = d
        .split
        .odd_components
        .iter()
        .map(|c| ("odd", c))
        .chain(d.split.even_components.iter().map(|c| ("even", c)));
    for (i, (parity, comp)) in clusters.enumerate() {
        let class = if parity == "odd" { "D" } else { "C" };
        writeln!(out, "  subgraph cluster_{i} {{").unwrap();
        writeln!(out, "    label=\"{parity}\";").unwrap();
        for v in comp.iter() {
            writeln!(out, "    {v} [class={class}];").unwrap();
        }
        out.push_str("  }\n");
    }
    for v in d.a.iter() {
        writeln!(out, "  {v} [class=A];").unwrap();
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Canonical edgelist: `n m` then one sorted `u v` line per edge.
pub fn emit_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn emit_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// `{"n":..,"edges":[[u,v],..]}` on one line.
pub fn emit_graph_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::gallai_edmonds;

    #[test]
    fn json_examples() {
        assert_eq!(
            emit_decomposition_json(&gallai_edmonds(&Graph::path(3))),
            r#"{"n":3,"nu":1,"deficiency":1,"D":[0,2],"A":[1],"C":[],"odd_components":[[0],[2]],"even_components":[]}"#
        );
        assert_eq!(
            emit_decomposition_json(&gallai_edmonds(&Graph::complete(2))),
            r#"{"n":2,"nu":1,"deficiency":0,"D":[],"A":[],"C":[0,1],"odd_components":[],"even_components":[[0,1]]}"#
        );
        assert_eq!(
            emit_decomposition_json(&gallai_edmonds(&Graph::cycle(5))),
            r#"{"n":5,"nu":2,"deficiency":1,"D":[0,1,2,3,4],"A":[],"C":[],"odd_components":[[0,1,2,3,4]],"even_components":[]}"#
        );
    }

    #[test]
    fn dot_examples() {
        let k1 = Graph::empty(1);
        let dot = emit_dot(&k1, &gallai_edmonds(&k1));
        assert_eq!(dot.matches("[class=").count(), 1);
        assert!(dot.contains("0 [class=D];"));

        let p3 = Graph::path(3);
        let dot = emit_dot(&p3, &gallai_edmonds(&p3));
        assert!(dot.contains("0 [class=D];"));
        assert!(dot.contains("2 [class=D];"));
        assert!(dot.contains("1 [class=A];"));
        assert!(dot.contains("0 -- 1;"));

        let k2 = Graph::complete(2);
        let dot = emit_dot(&k2, &gallai_edmonds(&k2));
        assert_eq!(dot.matches("subgraph cluster_").count(), 1);
        assert!(dot.contains("    0 [class=C];\n    1 [class=C];\n"));
    }

    #[test]
    fn edgelist_and_dimacs() {
        assert_eq!(emit_edgelist(&Graph::path(3)), "3 2\n0 1\n1 2\n");
        assert_eq!(emit_dimacs(&Graph::path(3)), "p edge 3 2\ne 1 2\ne 2 3\n");
        assert_eq!(
            emit_graph_json(&Graph::path(3)),
            r#"{"n":3,"edges":[[0,1],[1,2]]}"#
        );
    }
}
