//! Subcommand execution. Each checker is a pure function of (command, params,
//! instance); the same triple is what `--embed` writes out for later rechecking.

use std::path::Path;

use arbor_core::arborescence::{
    certify_k_edge_connectivity, check_arborescence_cover, check_branching_cover,
    check_dypergraph_decomposition, check_mixed_arborescence_packing, pack_arborescences,
    ArborescenceCover, ArborescencePacking, BranchingCover, DypergraphCheck,
    EdgeConnectivityCertificate, MixedPacking,
};
use arbor_core::forest::{
    arboricity, augment_to_k_tree_connected, check_body_bar, check_forest_sparse,
    check_forest_tight, check_laman, check_partition_connected, decompose_forests,
    pack_spanning_trees, partition_deficiency, AugmentMode, Augmentation, ForestDecomposition,
    PartitionConnectivity, Sparsity, TreePacking,
};
use arbor_core::game::{
    analyze, play_out, Certificate, Game, Player, Policy, StrategyCore, Variant,
};
use arbor_core::graph::{Digraph, Graph};
use arbor_core::hypergraph::{
    cover_by_hyperforests, hypergraphic_rank, is_hyperforest, pack_hypertrees, HyperforestCheck,
    HyperforestCover, Hypergraph, HypertreePacking,
};
use arbor_core::orientation::{
    check_hyper_orientation, check_orientation_kl, orient_hypergraph_rooted_k, orient_rooted_k,
    HyperOrientation, HyperOrientationCheck, KlOrientation, RootedOrientation,
};
use arbor_testkit::{gen_kl_pinch, gen_kv, gen_mader, gen_pinch_2k};
use serde_json::{json, Map, Value};

use crate::format::{self, Instance};
use crate::report::{pairs_json, partition_json, sorted, Emission, Failure, Report, FAILS, HOLDS};
use crate::{
    Cli, Command, GameOp, GameSetup, GenFamily, HyperOp, Mode, PlayerArg, PolicyArg, VariantArg,
};

/// Which instance kind a command reads.
pub fn expected_kind(command: &str) -> &'static str {
    match command {
        "pack-arbs" | "cover-arbs" | "cover-branchings" => "digraph",
        "check-mixed" => "mixed",
        "hyper-rank" | "hyper-pack" | "hyper-cover" | "hyper-orient" => "hypergraph",
        "check-dyper" => "dypergraph",
        _ => "graph",
    }
}

pub fn read_instance(path: &Path) -> Result<Instance, Failure> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    format::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Coerces `instance` to the kind `command` needs; plain graphs are accepted where
/// hypergraphs are expected.
pub fn coerce(command: &str, instance: Instance) -> Result<Instance, Failure> {
    let want = expected_kind(command);
    match (want, instance) {
        ("hypergraph", Instance::Graph(g)) => {
            let edges: Vec<[usize; 2]> = g.edges().iter().map(|&(u, v)| [u, v]).collect();
            Ok(Instance::Hypergraph(Hypergraph::from_edges(
                g.node_count(),
                edges,
            )?))
        }
        (want, inst) if inst.kind() == want => Ok(inst),
        (want, inst) => Err(Failure::Usage(format!(
            "{command} expects a {want}, got a {}",
            inst.kind()
        ))),
    }
}

fn param(params: &Value, key: &str) -> Result<usize, Failure> {
    params
        .get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| Failure::Usage(format!("missing parameter {key}")))
}

fn opt_param(params: &Value, key: &str) -> Option<usize> {
    params.get(key).and_then(Value::as_u64).map(|x| x as usize)
}

fn lists(params: &Value, key: &str) -> Result<Option<Vec<Vec<usize>>>, Failure> {
    match params.get(key) {
        None | Some(Value::Null) => Ok(None),
        Some(Value::Array(items)) => items
            .iter()
            .map(|x| format::usize_list(x, key).map_err(Failure::Usage))
            .collect::<Result<Vec<_>, _>>()
            .map(Some),
        Some(_) => Err(Failure::Usage(format!(
            "{key}: expected an array of arrays"
        ))),
    }
}

fn graph(instance: &Instance) -> &Graph {
    match instance {
        Instance::Graph(g) => g,
        _ => unreachable!("coerced"),
    }
}

fn digraph(instance: &Instance) -> &Digraph {
    match instance {
        Instance::Digraph(d) => d,
        _ => unreachable!("coerced"),
    }
}

fn hypergraph(instance: &Instance) -> &Hypergraph {
    match instance {
        Instance::Hypergraph(h) => h,
        _ => unreachable!("coerced"),
    }
}

fn fails(result: &str, summary: impl Into<String>) -> Report {
    Report::result(FAILS, result, summary)
}

fn holds(result: &str, summary: impl Into<String>) -> Report {
    Report::result(HOLDS, result, summary)
}

fn tree_packing(packing: TreePacking, k: usize) -> Report {
    match packing {
        TreePacking::Packed { trees } => {
            holds("packed", format!("{k} disjoint spanning trees")).with("trees", json!(trees))
        }
        TreePacking::Deficient {
            partition, deficit, ..
        } => fails(
            "deficient",
            format!("no {k} disjoint spanning trees: partition with deficit {deficit}"),
        )
        .with("partition", partition_json(&partition))
        .with("deficit", deficit),
    }
}

fn sparsity(s: Sparsity) -> Report {
    match s {
        Sparsity::Holds => holds("covered", "sparse"),
        Sparsity::Dense {
            nodes,
            induced,
            bound,
        } => fails(
            "dense",
            format!("{} nodes induce {induced} > {bound} edges", nodes.len()),
        )
        .with("nodes", json!(nodes))
        .with("induced", induced)
        .with("bound", bound),
        Sparsity::WrongCount { edges, required } => fails(
            "infeasible",
            format!("sparse, but {edges} edges instead of {required}"),
        )
        .with("edges", edges)
        .with("required", required),
    }
}

/// Greedy basis of the hypergraphic matroid.
pub fn hyper_basis(h: &Hypergraph) -> Result<Vec<usize>, Failure> {
    let mut basis = Vec::new();
    for e in 0..h.edge_count() {
        basis.push(e);
        if matches!(is_hyperforest(h, &basis)?, HyperforestCheck::Violated(_)) {
            basis.pop();
        }
    }
    Ok(basis)
}

pub fn player_name(p: Player) -> &'static str {
    p.name()
}

pub fn parse_player(s: &str) -> Option<Player> {
    match s {
        "short" => Some(Player::Short),
        "cut" => Some(Player::Cut),
        _ => None,
    }
}

/// Variant and first mover from game params.
pub fn game_setup(params: &Value) -> Result<(Variant, Player), Failure> {
    let first = params
        .get("first")
        .and_then(Value::as_str)
        .unwrap_or("short");
    let first =
        parse_player(first).ok_or_else(|| Failure::Usage(format!("unknown player {first:?}")))?;
    let variant = match params
        .get("variant")
        .and_then(Value::as_str)
        .unwrap_or("global")
    {
        "global" => Variant::Global,
        "st" => Variant::St {
            s: param(params, "s")?,
            t: param(params, "t")?,
        },
        other => return Err(Failure::Usage(format!("unknown variant {other:?}"))),
    };
    Ok((variant, first))
}

pub fn certificate_json(c: &Certificate) -> Value {
    match c {
        Certificate::SpanningTrees { trees, shared } => {
            json!({"kind": "spanning_trees", "trees": trees, "shared": shared})
        }
        Certificate::Block {
            nodes,
            trees,
            shared,
        } => {
            json!({"kind": "block", "nodes": nodes, "trees": trees, "shared": shared})
        }
        Certificate::DeficientPartition {
            partition,
            cross,
            deficit,
        } => json!({
            "kind": "deficient_partition",
            "partition": partition_json(partition),
            "cross": cross,
            "deficit": deficit,
        }),
        Certificate::SeparatingPartition { partition, forests } => json!({
            "kind": "separating_partition",
            "partition": partition_json(partition),
            "forests": forests,
        }),
        Certificate::DualBases { support, bases } => {
            json!({"kind": "dual_bases", "support": support, "bases": bases})
        }
    }
}

pub fn core_json(core: &StrategyCore) -> Value {
    match core {
        StrategyCore::Bases { bases } => json!({"kind": "bases", "bases": bases}),
        StrategyCore::Partition { partition } => {
            json!({"kind": "partition", "partition": partition_json(partition)})
        }
        StrategyCore::None => json!({"kind": "none"}),
    }
}

fn policy(name: &str) -> Result<Policy, Failure> {
    match name {
        "engine" => Ok(Policy::Engine),
        "heuristic" => Ok(Policy::Heuristic),
        "lowest" => Ok(Policy::Lowest),
        other => Err(Failure::Usage(format!("unknown policy {other:?}"))),
    }
}

/// Runs one checker on an already coerced instance.
pub fn compute(command: &str, params: &Value, instance: &Instance) -> Result<Report, Failure> {
    let report = match command {
        "pack-trees" => {
            let k = param(params, "k")?;
            if k == 0 {
                holds("packed", "0 spanning trees").with("trees", json!([]))
            } else {
                tree_packing(pack_spanning_trees(graph(instance), k)?, k)
            }
        }
        "decompose-forests" => {
            let k = param(params, "k")?;
            let caps = params.get("caps").filter(|c| !c.is_null());
            let caps = caps.map(|c| format::usize_list(c, "caps")).transpose()?;
            if let Some(c) = &caps {
                if c.len() != k {
                    return Err(Failure::Usage(format!(
                        "{} caps given for {k} forests",
                        c.len()
                    )));
                }
            }
            match decompose_forests(graph(instance), k, caps.as_deref())? {
                ForestDecomposition::Decomposed { forests } => {
                    holds("covered", format!("edges split into {k} forests"))
                        .with("forests", json!(forests))
                }
                ForestDecomposition::Dense {
                    nodes,
                    induced,
                    bound,
                } => fails(
                    "dense",
                    format!("{} nodes induce {induced} > {bound} edges", nodes.len()),
                )
                .with("nodes", json!(nodes))
                .with("induced", induced)
                .with("bound", bound),
                ForestDecomposition::OverCapacity {
                    edges,
                    size,
                    capacity,
                } => fails(
                    "infeasible",
                    format!("{size} edges exceed capacity {capacity}"),
                )
                .with("edges", json!(sorted(edges)))
                .with("size", size)
                .with("capacity", capacity),
            }
        }
        "arboricity" => {
            let g = graph(instance);
            let (a, forests) = arboricity(g)?;
            // a set that needs `a` forests: it induces more than (a - 1)(|X| - 1) edges
            let dense = match a {
                0 => Vec::new(),
                1 => {
                    let (u, v) = g.edge(0);
                    sorted(vec![u, v])
                }
                _ => match decompose_forests(g, a - 1, None)? {
                    ForestDecomposition::Dense { nodes, .. } => nodes,
                    _ => {
                        return Err(Failure::Core(arbor_core::Error::Inconsistent(
                            "arboricity not tight".into(),
                        )))
                    }
                },
            };
            Report::new(HOLDS, format!("arboricity {a}"))
                .with("arboricity", a)
                .with("forests", json!(forests))
                .with("dense_set", json!(dense))
        }
        "deficiency" => {
            let k = param(params, "k")?;
            let d = partition_deficiency(graph(instance), k)?;
            if d.value == 0 {
                Report::new(HOLDS, format!("{k}-tree-connected, deficiency 0"))
                    .with("deficiency", 0)
                    .with("partition", partition_json(&d.partition))
            } else {
                fails("deficient", format!("deficiency {}", d.value))
                    .with("deficiency", d.value)
                    .with("partition", partition_json(&d.partition))
            }
        }
        "augment" => {
            let k = param(params, "k")?;
            let g = graph(instance);
            let mode = match params.get("mode").and_then(Value::as_str).unwrap_or("star") {
                "star" => AugmentMode::Star,
                "parallel" => AugmentMode::Parallel,
                other => return Err(Failure::Usage(format!("unknown mode {other:?}"))),
            };
            match augment_to_k_tree_connected(g, k, opt_param(params, "budget"), mode)? {
                Augmentation::Added { edges } => {
                    let mut bigger = g.clone();
                    for &(u, v) in &edges {
                        bigger.add_edge(u, v)?;
                    }
                    let trees = match k {
                        0 => Vec::new(),
                        _ => match pack_spanning_trees(&bigger, k)? {
                            TreePacking::Packed { trees } => trees,
                            TreePacking::Deficient { .. } => {
                                return Err(Failure::Core(arbor_core::Error::Inconsistent(
                                    "augmented graph does not pack".into(),
                                )))
                            }
                        },
                    };
                    let witness = partition_deficiency(g, k)?;
                    holds("packed", format!("{} new edges", edges.len()))
                        .with("added", pairs_json(&edges))
                        .with("trees", json!(trees))
                        .with("partition", partition_json(&witness.partition))
                }
                Augmentation::Infeasible {
                    needed,
                    budget,
                    partition,
                } => fails(
                    "infeasible",
                    format!("needs {needed} new edges, budget {budget}"),
                )
                .with("needed", needed)
                .with("budget", budget)
                .with("partition", partition_json(&partition)),
            }
        }
        "check-pc" => {
            let (k, l) = (param(params, "k")?, param(params, "l")?);
            match check_partition_connected(graph(instance), k, l)? {
                PartitionConnectivity::Holds => {
                    holds("packed", format!("({k}, {l})-partition-connected"))
                }
                PartitionConnectivity::Violated {
                    partition,
                    cross,
                    required,
                    deleted,
                } => fails(
                    "deficient",
                    format!("partition with {cross} < {required} cross edges"),
                )
                .with("partition", partition_json(&partition))
                .with("cross", cross)
                .with("required", required)
                .with("deleted", json!(sorted(deleted))),
            }
        }
        "check-sparse" => {
            let g = graph(instance);
            if let Some(d) = opt_param(params, "body_bar") {
                tree_packing(check_body_bar(g, d)?, d * (d + 1) / 2)
            } else if params.get("laman").and_then(Value::as_bool) == Some(true) {
                sparsity(check_laman(g)?)
            } else {
                let (k, l) = (param(params, "k")?, param(params, "l")?);
                if params.get("tight").and_then(Value::as_bool) == Some(true) {
                    sparsity(check_forest_tight(g, k, l)?)
                } else {
                    sparsity(check_forest_sparse(g, k, l)?)
                }
            }
        }
        "pack-arbs" => {
            let (k, root) = (param(params, "k")?, param(params, "root")?);
            let seeds = lists(params, "seeds")?;
            match pack_arborescences(digraph(instance), root, k, seeds.as_deref())? {
                ArborescencePacking::Packed { arborescences } => {
                    holds("packed", format!("{k} disjoint arborescences"))
                        .with("arborescences", json!(arborescences))
                }
                ArborescencePacking::Deficient {
                    set,
                    entering,
                    seeds_entering,
                    required,
                } => fails(
                    "cut",
                    format!("set entered {entering} + {seeds_entering} < {required} times"),
                )
                .with("set", json!(set))
                .with("entering", entering)
                .with("seeds_entering", seeds_entering)
                .with("required", required),
            }
        }
        "certify-kec" => {
            let (k, root) = (param(params, "k")?, param(params, "root")?);
            match certify_k_edge_connectivity(graph(instance), k, root)? {
                EdgeConnectivityCertificate::Arborescences(arbs) => {
                    holds("packed", format!("{k}-edge-connected"))
                        .with("arborescences", json!(arbs))
                }
                EdgeConnectivityCertificate::Cut { set, degree } => {
                    fails("cut", format!("cut of degree {degree} < {k}"))
                        .with("set", json!(set))
                        .with("degree", degree)
                }
            }
        }
        "cover-arbs" => {
            let (k, root) = (param(params, "k")?, param(params, "root")?);
            match check_arborescence_cover(digraph(instance), root, k)? {
                ArborescenceCover::Holds => {
                    holds("covered", format!("arcs covered by {k} arborescences"))
                }
                ArborescenceCover::InDegree { node, in_degree } => fails(
                    "infeasible",
                    format!("node {node} has in-degree {in_degree} > {k}"),
                )
                .with("node", node)
                .with("in_degree", in_degree),
                ArborescenceCover::Subset { set, lhs, rhs } => {
                    fails("cut", format!("subset condition fails: {lhs} > {rhs}"))
                        .with("set", json!(set))
                        .with("lhs", lhs)
                        .with("rhs", rhs)
                }
            }
        }
        "cover-branchings" => {
            let k = param(params, "k")?;
            match check_branching_cover(digraph(instance), k)? {
                BranchingCover::Holds => {
                    holds("covered", format!("arcs covered by {k} branchings"))
                }
                BranchingCover::InDegree { node, in_degree } => fails(
                    "infeasible",
                    format!("node {node} has in-degree {in_degree} > {k}"),
                )
                .with("node", node)
                .with("in_degree", in_degree),
                BranchingCover::Dense {
                    nodes,
                    induced,
                    bound,
                } => fails(
                    "dense",
                    format!("{} nodes induce {induced} > {bound} arcs", nodes.len()),
                )
                .with("nodes", json!(nodes))
                .with("induced", induced)
                .with("bound", bound),
            }
        }
        "check-mixed" => {
            let (k, root) = (param(params, "k")?, param(params, "root")?);
            let Instance::Mixed(m) = instance else {
                unreachable!("coerced")
            };
            match check_mixed_arborescence_packing(m, root, k)? {
                MixedPacking::Holds => {
                    holds("packed", format!("{k} disjoint mixed arborescences exist"))
                }
                MixedPacking::Violated {
                    partition,
                    cross,
                    required,
                } => fails(
                    "deficient",
                    format!("{cross} undirected cross edges, {required} needed"),
                )
                .with("partition", json!(partition))
                .with("cross", cross)
                .with("required", required),
            }
        }
        "orient" => {
            let (k, root) = (param(params, "k")?, param(params, "root")?);
            let g = graph(instance);
            match opt_param(params, "l").unwrap_or(0) {
                0 => match orient_rooted_k(g, root, k)? {
                    RootedOrientation::Oriented(d) => {
                        holds("packed", format!("rooted {k}-arc-connected orientation"))
                            .with("orientation", pairs_json(d.arcs()))
                    }
                    RootedOrientation::Deficient { partition, cross } => {
                        fails("deficient", format!("partition with {cross} cross edges"))
                            .with("partition", partition_json(&partition))
                            .with("cross", cross)
                    }
                },
                l => match check_orientation_kl(g, root, k, l, true)? {
                    KlOrientation::Holds { orientation } => holds(
                        "packed",
                        format!("rooted ({k}, {l})-arc-connected orientation exists"),
                    )
                    .with(
                        "orientation",
                        orientation.map_or(Value::Null, |d| pairs_json(d.arcs())),
                    ),
                    KlOrientation::Violated {
                        partition,
                        cross,
                        required,
                    } => fails(
                        "deficient",
                        format!("partition with {cross} < {required} cross edges"),
                    )
                    .with("partition", partition_json(&partition))
                    .with("cross", cross)
                    .with("required", required),
                },
            }
        }
        "hyper-rank" => {
            let h = hypergraph(instance);
            let (rank, partition) = hypergraphic_rank(h);
            Report::new(HOLDS, format!("rank {rank}"))
                .with("rank", rank)
                .with("basis", json!(hyper_basis(h)?))
                .with("partition", partition_json(&partition))
        }
        "hyper-pack" => {
            let k = param(params, "k")?;
            match pack_hypertrees(hypergraph(instance), k)? {
                HypertreePacking::Packed {
                    hypertrees,
                    trimmings,
                } => {
                    let trimmings: Vec<Value> = trimmings.iter().map(|t| pairs_json(t)).collect();
                    holds("packed", format!("{k} disjoint spanning hypertrees"))
                        .with("hypertrees", json!(hypertrees))
                        .with("trimmings", Value::Array(trimmings))
                }
                HypertreePacking::Deficient { partition, cross } => fails(
                    "deficient",
                    format!("partition with {cross} cross hyperedges"),
                )
                .with("partition", partition_json(&partition))
                .with("cross", cross),
            }
        }
        "hyper-cover" => {
            let k = param(params, "k")?;
            match cover_by_hyperforests(hypergraph(instance), k)? {
                HyperforestCover::Covered { hyperforests } => {
                    holds("covered", format!("hyperedges split into {k} hyperforests"))
                        .with("hyperforests", json!(hyperforests))
                }
                HyperforestCover::Dense { nodes, induced } => fails(
                    "dense",
                    format!("{} nodes induce {induced} hyperedges", nodes.len()),
                )
                .with("nodes", json!(nodes))
                .with("induced", induced),
            }
        }
        "hyper-orient" => {
            let (k, root) = (param(params, "k")?, param(params, "root")?);
            let h = hypergraph(instance);
            match opt_param(params, "l").unwrap_or(0) {
                0 => match orient_hypergraph_rooted_k(h, root, k)? {
                    HyperOrientation::Oriented(dy) => {
                        let heads: Vec<usize> = dy.edges().iter().map(|(_, head)| *head).collect();
                        holds(
                            "packed",
                            format!("out-rooted {k}-arc-connected orientation"),
                        )
                        .with("heads", json!(heads))
                    }
                    HyperOrientation::Deficient { partition, cross } => fails(
                        "deficient",
                        format!("partition with {cross} cross hyperedges"),
                    )
                    .with("partition", partition_json(&partition))
                    .with("cross", cross),
                },
                l => match check_hyper_orientation(h, root, k, l)? {
                    HyperOrientationCheck::Holds => holds(
                        "packed",
                        format!("rooted ({k}, {l})-arc-connected orientation exists"),
                    ),
                    HyperOrientationCheck::CrossDeficient {
                        partition,
                        cross,
                        required,
                    } => fails(
                        "deficient",
                        format!("partition with {cross} < {required} cross hyperedges"),
                    )
                    .with("partition", partition_json(&partition))
                    .with("cross", cross)
                    .with("required", required),
                    HyperOrientationCheck::WeakDeficient {
                        partition,
                        total,
                        required,
                    } => fails(
                        "deficient",
                        format!("partition with weak count {total} < {required}"),
                    )
                    .with("partition", partition_json(&partition))
                    .with("total", total)
                    .with("required", required),
                },
            }
        }
        "check-dyper" => {
            let (k, root) = (param(params, "k")?, param(params, "root")?);
            let Instance::Dypergraph(dy) = instance else {
                unreachable!("coerced")
            };
            match check_dypergraph_decomposition(dy, root, k)? {
                DypergraphCheck::Holds => holds("packed", format!("out-rooted {k}-arc-connected")),
                DypergraphCheck::Deficient { set, in_degree } => fails(
                    "cut",
                    format!("set entered by {in_degree} < {k} dyperedges"),
                )
                .with("set", json!(set))
                .with("in_degree", in_degree),
            }
        }
        "game-analyze" => {
            let (variant, first) = game_setup(params)?;
            let a = analyze(graph(instance), variant, first)?;
            Report::new(HOLDS, format!("{} wins", a.winner.name()))
                .with("winner", a.winner.name())
                .with("certificate", certificate_json(&a.certificate))
        }
        "game-play" => {
            let (variant, first) = game_setup(params)?;
            let g = graph(instance);
            let predicted = analyze(g, variant, first)?.winner;
            let short = policy(
                params
                    .get("short")
                    .and_then(Value::as_str)
                    .unwrap_or("engine"),
            )?;
            let cut = policy(
                params
                    .get("cut")
                    .and_then(Value::as_str)
                    .unwrap_or("engine"),
            )?;
            let mut game = Game::new(g.clone(), variant, first)?;
            let winner = play_out(&mut game, short, cut)?;
            let moves: Vec<Value> = game
                .history()
                .iter()
                .map(|&(p, e)| json!([p.name(), e]))
                .collect();
            Report::new(
                HOLDS,
                format!("{} wins after {} moves", winner.name(), moves.len()),
            )
            .with("winner", winner.name())
            .with("predicted", predicted.name())
            .with("moves", Value::Array(moves))
        }
        other => return Err(Failure::Usage(format!("unknown command {other:?}"))),
    };
    Ok(report)
}

/// A checker invocation resolved from the command line.
struct Job {
    command: &'static str,
    params: Value,
    input: std::path::PathBuf,
}

fn job(command: &'static str, params: Value, input: &Path) -> Job {
    Job {
        command,
        params,
        input: input.to_path_buf(),
    }
}

fn read_seeds(path: &Path) -> Result<Vec<Vec<usize>>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let bad = |msg: &str| Failure::Usage(format!("{}: {msg}", path.display()));
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header: Vec<&str> = lines
        .next()
        .ok_or_else(|| bad("empty seeds file"))?
        .split_whitespace()
        .collect();
    let count = match header.as_slice() {
        ["seeds", k] => k.parse::<usize>().map_err(|_| bad("bad seeds header"))?,
        _ => return Err(bad("expected `seeds k` header")),
    };
    let seeds = lines
        .map(|l| {
            let nums = l
                .split_whitespace()
                .map(str::parse::<usize>)
                .collect::<Result<Vec<_>, _>>();
            match nums {
                Ok(nums) if !nums.is_empty() && nums[0] + 1 == nums.len() => Ok(nums[1..].to_vec()),
                _ => Err(bad(&format!("bad seed line {l:?}"))),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    if seeds.len() != count {
        return Err(bad(&format!(
            "header announces {count} seeds, found {}",
            seeds.len()
        )));
    }
    Ok(seeds)
}

fn rooted(command: &'static str, r: &crate::Rooted) -> Job {
    job(command, json!({"k": r.k, "root": r.root}), &r.file.input)
}

fn setup_params(s: &GameSetup) -> Value {
    let variant = match s.variant {
        VariantArg::Global => "global",
        VariantArg::St => "st",
    };
    let first = match s.first {
        PlayerArg::Short => "short",
        PlayerArg::Cut => "cut",
    };
    let mut p = json!({"variant": variant, "first": first});
    if let Some(s) = s.s {
        p["s"] = json!(s);
    }
    if let Some(t) = s.t {
        p["t"] = json!(t);
    }
    p
}

fn policy_name(p: PolicyArg) -> &'static str {
    match p {
        PolicyArg::Engine => "engine",
        PolicyArg::Heuristic => "heuristic",
        PolicyArg::Lowest => "lowest",
    }
}

fn text(code: i32, stdout: String, stderr: String) -> Emission {
    Emission {
        code,
        stdout,
        stderr,
    }
}

fn failure(f: Failure) -> Emission {
    text(f.code(), String::new(), format!("error: {}\n", f.message()))
}

/// Serializes a report, embedding the job when asked.
pub fn emit_report(mut report: Report, embed: Option<(&str, &Value, &Instance)>) -> Emission {
    if let Some((command, params, instance)) = embed {
        report.body.insert("command".into(), json!(command));
        report.body.insert("params".into(), params.clone());
        report
            .body
            .insert("instance".into(), format::to_json(instance));
    }
    let body = serde_json::to_string(&Value::Object(report.body)).expect("json values serialize");
    text(report.code, body + "\n", report.summary + "\n")
}

pub fn run_job(command: &str, params: &Value, instance: Instance, embed: bool) -> Emission {
    let instance = match coerce(command, instance) {
        Ok(i) => i,
        Err(f) => return failure(f),
    };
    match compute(command, params, &instance) {
        Ok(report) => emit_report(report, embed.then_some((command, params, &instance))),
        Err(f) => failure(f),
    }
}

fn generate(family: &GenFamily) -> Result<String, Failure> {
    let check_kl = |k: usize, l: usize, strict: bool| {
        if (strict && l >= k) || (!strict && l > k) {
            Err(Failure::Usage(format!(
                "need l {} k, got k = {k}, l = {l}",
                if strict { "<" } else { "<=" }
            )))
        } else {
            Ok(())
        }
    };
    let (header, body) = match family {
        GenFamily::Pinch { args } => {
            let g = gen_pinch_2k(args.seed, args.steps, args.k);
            (g.header(), format::emit(&Instance::Graph(g.value)))
        }
        GenFamily::Mader { args } => {
            let d = gen_mader(args.seed, args.steps, args.k);
            (d.header(), format::emit(&Instance::Digraph(d.value)))
        }
        GenFamily::KlPinch { args, l } => {
            check_kl(args.k, *l, true)?;
            let g = gen_kl_pinch(args.seed, args.steps, args.k, *l);
            (g.header(), format::emit(&Instance::Graph(g.value)))
        }
        GenFamily::Kv { args, l } => {
            check_kl(args.k, *l, false)?;
            let d = gen_kv(args.seed, args.steps, args.k, *l);
            (d.header(), format::emit(&Instance::Digraph(d.value)))
        }
    };
    Ok(format!("{header}\n{body}"))
}

pub fn execute(cli: Cli) -> Emission {
    let job = match &cli.command {
        Command::PackTrees { k, file } => job("pack-trees", json!({"k": k}), &file.input),
        Command::DecomposeForests { k, caps, file } => job(
            "decompose-forests",
            json!({"k": k, "caps": caps}),
            &file.input,
        ),
        Command::Arboricity { file } => job("arboricity", json!({}), &file.input),
        Command::Deficiency { k, file } => job("deficiency", json!({"k": k}), &file.input),
        Command::Augment {
            k,
            budget,
            mode,
            file,
        } => {
            let mode = match mode {
                Mode::Star => "star",
                Mode::Parallel => "parallel",
            };
            job(
                "augment",
                json!({"k": k, "budget": budget, "mode": mode}),
                &file.input,
            )
        }
        Command::CheckPc { k, l, file } => job("check-pc", json!({"k": k, "l": l}), &file.input),
        Command::CheckSparse {
            k,
            l,
            tight,
            laman,
            body_bar,
            file,
        } => {
            if !laman && body_bar.is_none() && (k.is_none() || l.is_none()) {
                return failure(Failure::Usage(
                    "check-sparse needs -k and -l unless --laman or --body-bar".into(),
                ));
            }
            let mut p = Map::new();
            if let Some(d) = body_bar {
                p.insert("body_bar".into(), json!(d));
            } else if *laman {
                p.insert("laman".into(), json!(true));
            } else {
                p.insert("k".into(), json!(k));
                p.insert("l".into(), json!(l));
                p.insert("tight".into(), json!(tight));
            }
            job("check-sparse", Value::Object(p), &file.input)
        }
        Command::PackArbs { rooted: r, seeds } => {
            let mut j = rooted("pack-arbs", r);
            if let Some(path) = seeds {
                match read_seeds(path) {
                    Ok(s) => j.params["seeds"] = json!(s),
                    Err(f) => return failure(f),
                }
            }
            j
        }
        Command::CertifyKec { rooted: r } => rooted("certify-kec", r),
        Command::CoverArbs { rooted: r } => rooted("cover-arbs", r),
        Command::CoverBranchings { k, file } => {
            job("cover-branchings", json!({"k": k}), &file.input)
        }
        Command::CheckMixed { rooted: r } => rooted("check-mixed", r),
        Command::Orient { rooted: r, l } => {
            let mut j = rooted("orient", r);
            if let Some(l) = l {
                j.params["l"] = json!(l);
            }
            j
        }
        Command::Hyper { op } => match op {
            HyperOp::Rank { file } => job("hyper-rank", json!({}), &file.input),
            HyperOp::Pack { k, file } => job("hyper-pack", json!({"k": k}), &file.input),
            HyperOp::Cover { k, file } => job("hyper-cover", json!({"k": k}), &file.input),
            HyperOp::Orient { rooted: r, l } => {
                let mut j = rooted("hyper-orient", r);
                if let Some(l) = l {
                    j.params["l"] = json!(l);
                }
                j
            }
        },
        Command::CheckDyper { rooted: r } => rooted("check-dyper", r),
        Command::Game { op } => match op {
            GameOp::Analyze { setup } => {
                job("game-analyze", setup_params(setup), &setup.file.input)
            }
            GameOp::Play { setup, short, cut } => {
                let mut p = setup_params(setup);
                p["short"] = json!(policy_name(*short));
                p["cut"] = json!(policy_name(*cut));
                job("game-play", p, &setup.file.input)
            }
            GameOp::Serve {
                port,
                host,
                static_dir,
            } => {
                return match crate::serve::serve_blocking(host, *port, static_dir.clone()) {
                    Ok(()) => text(HOLDS, String::new(), String::new()),
                    Err(e) => failure(Failure::Usage(e)),
                };
            }
        },
        Command::Gen { family } => {
            return match generate(family) {
                Ok(out) => text(HOLDS, out, String::new()),
                Err(f) => failure(f),
            };
        }
        Command::Selftest { verify } => {
            return match verify {
                Some(path) => crate::verify::verify_file(path),
                None => crate::verify::selftest(),
            };
        }
    };
    match read_instance(&job.input) {
        Ok(instance) => run_job(job.command, &job.params, instance, cli.embed),
        Err(f) => failure(f),
    }
}
