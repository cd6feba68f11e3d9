use arbor_cli::commands::{coerce, compute};
use arbor_cli::format::{emit, from_json, parse, to_json, Instance};
use arbor_cli::verify::verify_document;
use arbor_core::graph::{Digraph, Graph, MixedGraph};
use arbor_core::hypergraph::{Dypergraph, Hypergraph};
use proptest::prelude::*;
use serde_json::{json, Value};

fn pairs(n: usize, max: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((0..n, 0..n), 0..max)
        .prop_map(|v| v.into_iter().filter(|(u, w)| u != w).collect())
}

fn graph() -> impl Strategy<Value = Graph> {
    (2usize..7).prop_flat_map(|n| pairs(n, 14).prop_map(move |e| Graph::from_edges(n, e).unwrap()))
}

fn digraph() -> impl Strategy<Value = Digraph> {
    (2usize..6).prop_flat_map(|n| pairs(n, 12).prop_map(move |e| Digraph::from_arcs(n, e).unwrap()))
}

fn member_sets(n: usize) -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::collection::btree_set(0..n, 2..=n.min(4)), 0..7)
        .prop_map(|v| v.into_iter().map(|s| s.into_iter().collect()).collect())
}

fn hypergraph() -> impl Strategy<Value = Hypergraph> {
    (3usize..6)
        .prop_flat_map(|n| member_sets(n).prop_map(move |z| Hypergraph::from_edges(n, z).unwrap()))
}

fn instance() -> impl Strategy<Value = Instance> {
    prop_oneof![
        graph().prop_map(Instance::Graph),
        digraph().prop_map(Instance::Digraph),
        hypergraph().prop_map(Instance::Hypergraph),
        (3usize..6).prop_flat_map(|n| (member_sets(n), prop::collection::vec(0usize..4, 7))
            .prop_map(move |(z, picks)| {
                let mut dy = Dypergraph::new(n);
                for (members, p) in z.iter().zip(picks) {
                    dy.add_edge(members, members[p % members.len()]).unwrap();
                }
                Instance::Dypergraph(dy)
            })),
        (2usize..6).prop_flat_map(|n| (pairs(n, 6), pairs(n, 6)).prop_map(move |(a, e)| {
            Instance::Mixed(
                MixedGraph::new(
                    Digraph::from_arcs(n, a).unwrap(),
                    Graph::from_edges(n, e).unwrap(),
                )
                .unwrap(),
            )
        })),
    ]
}

proptest! {
    #[test]
    fn parse_inverts_emit(inst in instance()) {
        let text = emit(&inst);
        let back = parse(&text).unwrap();
        prop_assert_eq!(back.kind(), inst.kind());
        prop_assert_eq!(emit(&back), text.clone());
        prop_assert_eq!(emit(&from_json(&to_json(&inst)).unwrap()), text);
    }
}

fn run(command: &str, params: Value, inst: Instance) -> Result<(), TestCaseError> {
    let inst = coerce(command, inst).map_err(|f| TestCaseError::fail(f.message()))?;
    let report = match compute(command, &params, &inst) {
        Ok(r) => r,
        // a rejected parameter combination emits no certificate
        Err(_) => return Ok(()),
    };
    let mut doc = Value::Object(report.body);
    doc["command"] = json!(command);
    doc["params"] = params;
    doc["instance"] = to_json(&inst);
    verify_document(&doc).map_err(|e| TestCaseError::fail(format!("{command}: {e}\n{doc}")))
}

fn connected(g: &Graph) -> bool {
    g.is_connected()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn graph_certificates_reverify(g in graph(), k in 1usize..4, l in 0usize..3) {
        let i = || Instance::Graph(g.clone());
        run("pack-trees", json!({"k": k}), i())?;
        run("decompose-forests", json!({"k": k}), i())?;
        run("decompose-forests", json!({"k": 2, "caps": [k, 3]}), i())?;
        run("arboricity", json!({}), i())?;
        run("deficiency", json!({"k": k}), i())?;
        run("augment", json!({"k": k, "mode": "star"}), i())?;
        run("augment", json!({"k": k, "mode": "parallel", "budget": 2}), i())?;
        run("check-pc", json!({"k": k, "l": l}), i())?;
        if l < k {
            run("check-sparse", json!({"k": k, "l": l, "tight": l == 1}), i())?;
        }
        run("check-sparse", json!({"laman": true}), i())?;
        run("check-sparse", json!({"body_bar": 1}), i())?;
        run("certify-kec", json!({"k": k, "root": 0}), i())?;
        run("orient", json!({"k": k, "root": 0}), i())?;
        run("orient", json!({"k": k, "l": l, "root": 1}), i())?;
        run("hyper-rank", json!({}), i())?;
        if connected(&g) && g.node_count() >= 3 && g.edge_count() <= 9 {
            for (variant, first) in [("global", "short"), ("global", "cut"), ("st", "short"), ("st", "cut")] {
                let p = json!({"variant": variant, "first": first, "s": 0, "t": 1});
                run("game-analyze", p.clone(), i())?;
                let mut play = p;
                play["short"] = json!("engine");
                play["cut"] = json!("heuristic");
                run("game-play", play, i())?;
            }
        }
    }

    #[test]
    fn digraph_certificates_reverify(d in digraph(), k in 1usize..3) {
        let i = || Instance::Digraph(d.clone());
        run("pack-arbs", json!({"k": k, "root": 0}), i())?;
        run("cover-branchings", json!({"k": k}), i())?;
        if d.arcs().iter().all(|&(_, h)| h != 0) {
            run("cover-arbs", json!({"k": k, "root": 0}), i())?;
        }
    }

    #[test]
    fn hypergraph_certificates_reverify(h in hypergraph(), k in 1usize..3, l in 0usize..3) {
        let i = || Instance::Hypergraph(h.clone());
        run("hyper-rank", json!({}), i())?;
        run("hyper-pack", json!({"k": k}), i())?;
        run("hyper-cover", json!({"k": k}), i())?;
        run("hyper-orient", json!({"k": k, "root": 0}), i())?;
        run("hyper-orient", json!({"k": k, "l": l, "root": 0}), i())?;
        let mut dy = Dypergraph::new(h.node_count());
        for z in h.edges() {
            dy.add_edge(z, z[z.len() - 1]).unwrap();
        }
        run("check-dyper", json!({"k": k, "root": 0}), Instance::Dypergraph(dy))?;
    }

    #[test]
    fn mixed_certificates_reverify(a in pairs(4, 5), e in pairs(4, 5), k in 1usize..3) {
        let m = MixedGraph::new(Digraph::from_arcs(4, a).unwrap(), Graph::from_edges(4, e).unwrap()).unwrap();
        run("check-mixed", json!({"k": k, "root": 0}), Instance::Mixed(m))?;
    }
}

#[test]
fn seeded_arborescence_packing_reverifies() {
    // doubled 4-cycle, first arborescence seeded with arc 0 (0 -> 1)
    let d = Digraph::from_arcs(
        4,
        [
            (0, 1),
            (1, 0),
            (1, 2),
            (2, 1),
            (2, 3),
            (3, 2),
            (3, 0),
            (0, 3),
        ],
    )
    .unwrap();
    run(
        "pack-arbs",
        json!({"k": 2, "root": 0, "seeds": [[0], []]}),
        Instance::Digraph(d.clone()),
    )
    .unwrap();
    run(
        "pack-arbs",
        json!({"k": 2, "root": 0, "seeds": [[0, 2], [7]]}),
        Instance::Digraph(d),
    )
    .unwrap();
}
