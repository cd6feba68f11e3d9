//! Rechecks emitted certificates from their embedded instance using only counting
//! on the instance, and runs the built-in example suite.

use std::path::Path;

use arbor_core::arborescence::{
    check_dypergraph_decomposition, is_spanning_arborescence, DypergraphCheck,
};
use arbor_core::game::{Game, Player};
use arbor_core::graph::{Digraph, Graph, Partition};
use arbor_core::hypergraph::{
    is_hyperforest, partition_rank_bound, Dypergraph, HyperforestCheck, Hypergraph,
};
use arbor_core::orientation::rooted_kl_violation;
use serde_json::{json, Value};

use crate::commands::{coerce, compute, game_setup, parse_player};
use crate::format::{self, Instance};
use crate::report::{Emission, FAILS, HOLDS, USAGE};

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn field<'a>(doc: &'a Value, key: &str) -> Result<&'a Value, String> {
    doc.get(key).ok_or_else(|| format!("missing key {key:?}"))
}

fn num(doc: &Value, key: &str) -> Result<usize, String> {
    field(doc, key)?
        .as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| format!("{key}: expected a count"))
}

fn int(doc: &Value, key: &str) -> Result<i64, String> {
    field(doc, key)?
        .as_i64()
        .ok_or_else(|| format!("{key}: expected an integer"))
}

fn ids(doc: &Value, key: &str) -> Result<Vec<usize>, String> {
    format::usize_list(field(doc, key)?, key)
}

fn id_lists(v: &Value, key: &str) -> Result<Vec<Vec<usize>>, String> {
    v.as_array()
        .ok_or_else(|| format!("{key}: expected an array"))?
        .iter()
        .map(|x| format::usize_list(x, key))
        .collect()
}

fn lists(doc: &Value, key: &str) -> Result<Vec<Vec<usize>>, String> {
    id_lists(field(doc, key)?, key)
}

fn pairs(v: &Value, key: &str) -> Result<Vec<(usize, usize)>, String> {
    id_lists(v, key)?
        .into_iter()
        .map(|p| match p.as_slice() {
            [a, b] => Ok((*a, *b)),
            _ => Err(format!("{key}: expected pairs")),
        })
        .collect()
}

fn partition(doc: &Value, key: &str, n: usize) -> Result<Partition, String> {
    Partition::new(n, lists(doc, key)?).map_err(|e| format!("{key}: {e}"))
}

fn node_set(doc: &Value, key: &str, n: usize) -> Result<Vec<bool>, String> {
    let mut inside = vec![false; n];
    for v in ids(doc, key)? {
        ensure(v < n, || format!("{key}: node {v} out of range"))?;
        inside[v] = true;
    }
    Ok(inside)
}

fn in_range(sets: &[Vec<usize>], m: usize, what: &str) -> Check {
    for s in sets {
        if let Some(&e) = s.iter().find(|&&e| e >= m) {
            return Err(format!("{what}: id {e} out of range"));
        }
    }
    Ok(())
}

/// Pairwise disjoint, ignoring one id allowed to repeat.
fn disjoint(sets: &[Vec<usize>], m: usize, allowed: Option<usize>) -> Check {
    let mut seen = vec![false; m];
    for s in sets {
        for &e in s {
            ensure(!seen[e] || Some(e) == allowed, || {
                format!("id {e} used twice")
            })?;
            seen[e] = true;
        }
    }
    Ok(())
}

fn covers_all(sets: &[Vec<usize>], m: usize) -> Check {
    let total: usize = sets.iter().map(Vec::len).sum();
    ensure(total == m, || format!("{total} ids listed, {m} expected"))
}

fn rank(g: &Graph, edges: &[usize]) -> usize {
    g.node_count() - g.component_count(edges.iter().copied())
}

fn spanning_trees(g: &Graph, trees: &[Vec<usize>], k: usize, shared: Option<usize>) -> Check {
    ensure(trees.len() == k, || {
        format!("{} trees, {k} expected", trees.len())
    })?;
    in_range(trees, g.edge_count(), "trees")?;
    for (i, t) in trees.iter().enumerate() {
        ensure(g.is_spanning_tree(t), || {
            format!("tree {i} is not a spanning tree")
        })?;
    }
    disjoint(trees, g.edge_count(), shared)
}

fn deficit_matches(g: &Graph, p: &Partition, k: usize, deficit: i64) -> Check {
    let actual = p.deficit(g, k);
    ensure(actual == deficit, || {
        format!("partition deficit is {actual}, claimed {deficit}")
    })
}

fn dense(induced_now: usize, doc: &Value, size: usize, bound: i64) -> Check {
    if let Some(claimed) = doc.get("induced").and_then(Value::as_u64) {
        ensure(claimed as usize == induced_now, || {
            format!("induced count is {induced_now}, claimed {claimed}")
        })?;
    }
    ensure(size >= 2, || "dense set needs two nodes".into())?;
    ensure(induced_now as i64 > bound, || {
        format!("{induced_now} induced, bound {bound}: not dense")
    })
}

fn rooted_set(doc: &Value, key: &str, n: usize, root: usize) -> Result<Vec<bool>, String> {
    let inside = node_set(doc, key, n)?;
    ensure(!inside[root], || "set contains the root".into())?;
    ensure(inside.iter().any(|&b| b), || "set is empty".into())?;
    Ok(inside)
}

/// Nodes of each seed arborescence, root included.
fn seed_cover(d: &Digraph, root: usize, seed: &[usize]) -> Vec<bool> {
    let mut cover = vec![false; d.node_count()];
    cover[root] = true;
    for &a in seed {
        cover[d.arc(a).1] = true;
    }
    cover
}

fn tree_packing(g: &Graph, doc: &Value, result: &str, k: usize) -> Check {
    match result {
        "packed" => spanning_trees(g, &lists(doc, "trees")?, k, None),
        "deficient" => {
            let p = partition(doc, "partition", g.node_count())?;
            let deficit = int(doc, "deficit")?;
            ensure(deficit > 0, || "deficit must be positive".into())?;
            deficit_matches(g, &p, k, deficit)
        }
        other => Err(format!("unexpected result {other:?}")),
    }
}

/// Checks `doc` (a report with embedded command, params and instance).
pub fn verify_document(doc: &Value) -> Check {
    let command = field(doc, "command")?
        .as_str()
        .ok_or("command: expected a string")?;
    let params = field(doc, "params")?;
    let instance = format::from_json(field(doc, "instance")?)?;
    let instance = coerce(command, instance).map_err(|f| f.message())?;
    let result = doc.get("result").and_then(Value::as_str).unwrap_or("");
    let k = || num(params, "k");
    let root = || num(params, "root");
    match (command, &instance) {
        ("pack-trees", Instance::Graph(g)) => tree_packing(g, doc, result, k()?),
        ("decompose-forests", Instance::Graph(g)) => {
            let k = k()?;
            let m = g.edge_count();
            match result {
                "covered" => {
                    let forests = lists(doc, "forests")?;
                    ensure(forests.len() == k, || {
                        format!("{} forests, {k} expected", forests.len())
                    })?;
                    in_range(&forests, m, "forests")?;
                    disjoint(&forests, m, None)?;
                    covers_all(&forests, m)?;
                    for (i, f) in forests.iter().enumerate() {
                        ensure(g.is_forest(f), || format!("class {i} has a cycle"))?;
                    }
                    if let Some(caps) = params.get("caps").filter(|c| !c.is_null()) {
                        let caps = format::usize_list(caps, "caps")?;
                        for (i, (f, c)) in forests.iter().zip(&caps).enumerate() {
                            ensure(f.len() <= *c, || format!("forest {i} exceeds its cap"))?;
                        }
                    }
                    Ok(())
                }
                "dense" => {
                    let inside = node_set(doc, "nodes", g.node_count())?;
                    let size = inside.iter().filter(|&&b| b).count();
                    dense(
                        g.induced_count(&inside),
                        doc,
                        size,
                        (k * size.saturating_sub(1)) as i64,
                    )
                }
                "infeasible" => {
                    let edges = ids(doc, "edges")?;
                    in_range(std::slice::from_ref(&edges), m, "edges")?;
                    let caps = format::usize_list(field(params, "caps")?, "caps")?;
                    let r = rank(g, &edges);
                    let capacity: usize = caps.iter().map(|&c| c.min(r)).sum();
                    ensure(edges.len() > capacity, || {
                        format!("{} edges fit capacity {capacity}", edges.len())
                    })
                }
                other => Err(format!("unexpected result {other:?}")),
            }
        }
        ("arboricity", Instance::Graph(g)) => {
            let a = num(doc, "arboricity")?;
            let forests = lists(doc, "forests")?;
            let m = g.edge_count();
            ensure(forests.len() == a, || {
                format!("{} forests for arboricity {a}", forests.len())
            })?;
            in_range(&forests, m, "forests")?;
            disjoint(&forests, m, None)?;
            covers_all(&forests, m)?;
            for (i, f) in forests.iter().enumerate() {
                ensure(g.is_forest(f), || format!("class {i} has a cycle"))?;
            }
            if a > 0 {
                let inside = node_set(doc, "dense_set", g.node_count())?;
                let size = inside.iter().filter(|&&b| b).count();
                dense(
                    g.induced_count(&inside),
                    &json!({}),
                    size,
                    ((a - 1) * size.saturating_sub(1)) as i64,
                )?;
            }
            Ok(())
        }
        ("deficiency", Instance::Graph(g)) => {
            let p = partition(doc, "partition", g.node_count())?;
            deficit_matches(g, &p, k()?, num(doc, "deficiency")? as i64)
        }
        ("augment", Instance::Graph(g)) => {
            let k = k()?;
            let p = partition(doc, "partition", g.node_count())?;
            match result {
                "packed" => {
                    let added = pairs(field(doc, "added")?, "added")?;
                    let mut bigger = g.clone();
                    for &(u, v) in &added {
                        bigger.add_edge(u, v).map_err(|e| e.to_string())?;
                    }
                    if k > 0 {
                        spanning_trees(&bigger, &lists(doc, "trees")?, k, None)?;
                    }
                    // every augmentation needs at least the deficit of any partition
                    let lower = p.deficit(g, k).max(0) as usize;
                    ensure(added.len() == lower, || {
                        format!(
                            "{} edges added, partition shows {lower} needed",
                            added.len()
                        )
                    })
                }
                "infeasible" => {
                    let needed = num(doc, "needed")?;
                    deficit_matches(g, &p, k, needed as i64)?;
                    ensure(needed > num(doc, "budget")?, || "budget suffices".into())
                }
                other => Err(format!("unexpected result {other:?}")),
            }
        }
        ("check-pc", Instance::Graph(g)) => match result {
            "packed" => Ok(()),
            "deficient" => {
                let (k, l) = (k()?, num(params, "l")?);
                let p = partition(doc, "partition", g.node_count())?;
                ensure(p.len() >= 2, || "partition needs two blocks".into())?;
                let cross = p.cross_count(g);
                let required = k * (p.len() - 1) + l;
                ensure(cross == num(doc, "cross")?, || {
                    format!("cross count is {cross}")
                })?;
                ensure(cross < required, || {
                    format!("{cross} cross edges meet the bound {required}")
                })
            }
            other => Err(format!("unexpected result {other:?}")),
        },
        ("check-sparse", Instance::Graph(g)) => {
            if let Some(d) = params.get("body_bar").and_then(Value::as_u64) {
                let d = d as usize;
                return tree_packing(g, doc, result, d * (d + 1) / 2);
            }
            let (k, l) = if params.get("laman").and_then(Value::as_bool) == Some(true) {
                (2, 1)
            } else {
                (k()?, num(params, "l")?)
            };
            match result {
                "covered" => Ok(()),
                "dense" => {
                    let inside = node_set(doc, "nodes", g.node_count())?;
                    let size = inside.iter().filter(|&&b| b).count();
                    dense(
                        g.induced_count(&inside),
                        doc,
                        size,
                        (k * size.saturating_sub(1)) as i64 - l as i64,
                    )
                }
                "infeasible" => {
                    let required = (k * g.node_count().saturating_sub(1)) as i64 - l as i64;
                    ensure(int(doc, "required")? == required, || {
                        "wrong required count".into()
                    })?;
                    ensure(g.edge_count() as i64 != required, || {
                        "edge count is right".into()
                    })
                }
                other => Err(format!("unexpected result {other:?}")),
            }
        }
        ("pack-arbs", Instance::Digraph(d)) => {
            let (k, root) = (k()?, root()?);
            let seeds = match params.get("seeds").filter(|s| !s.is_null()) {
                Some(s) => id_lists(s, "seeds")?,
                None => vec![Vec::new(); k],
            };
            in_range(&seeds, d.arc_count(), "seeds")?;
            match result {
                "packed" => {
                    let arbs = lists(doc, "arborescences")?;
                    ensure(arbs.len() == k, || {
                        format!("{} arborescences, {k} expected", arbs.len())
                    })?;
                    in_range(&arbs, d.arc_count(), "arborescences")?;
                    disjoint(&arbs, d.arc_count(), None)?;
                    for (i, (a, s)) in arbs.iter().zip(&seeds).enumerate() {
                        ensure(is_spanning_arborescence(d, root, a), || {
                            format!("arborescence {i} does not span")
                        })?;
                        ensure(s.iter().all(|x| a.contains(x)), || {
                            format!("arborescence {i} drops its seed")
                        })?;
                    }
                    Ok(())
                }
                "cut" => {
                    let inside = rooted_set(doc, "set", d.node_count(), root)?;
                    let used: Vec<bool> = {
                        let mut u = vec![false; d.arc_count()];
                        seeds.iter().flatten().for_each(|&a| u[a] = true);
                        u
                    };
                    let entering = d
                        .arcs()
                        .iter()
                        .enumerate()
                        .filter(|&(a, &(u, v))| !used[a] && inside[v] && !inside[u])
                        .count();
                    let meeting = seeds
                        .iter()
                        .filter(|s| {
                            seed_cover(d, root, s)
                                .iter()
                                .zip(&inside)
                                .any(|(&c, &x)| c && x)
                        })
                        .count();
                    ensure(entering == num(doc, "entering")?, || {
                        format!("{entering} free arcs enter the set")
                    })?;
                    ensure(meeting == num(doc, "seeds_entering")?, || {
                        format!("{meeting} seeds meet the set")
                    })?;
                    ensure(entering + meeting < k, || {
                        format!("set is entered {} times", entering + meeting)
                    })
                }
                other => Err(format!("unexpected result {other:?}")),
            }
        }
        ("certify-kec", Instance::Graph(g)) => {
            let (k, root) = (k()?, root()?);
            match result {
                "packed" => {
                    let d = g.doubled();
                    let arbs = lists(doc, "arborescences")?;
                    ensure(arbs.len() == k, || {
                        format!("{} arborescences, {k} expected", arbs.len())
                    })?;
                    in_range(&arbs, d.arc_count(), "arborescences")?;
                    disjoint(&arbs, d.arc_count(), None)?;
                    for (i, a) in arbs.iter().enumerate() {
                        ensure(is_spanning_arborescence(&d, root, a), || {
                            format!("arborescence {i} does not span")
                        })?;
                    }
                    Ok(())
                }
                "cut" => {
                    let inside = rooted_set(doc, "set", g.node_count(), root)?;
                    let degree = g.cut_degree(&inside);
                    ensure(degree == num(doc, "degree")?, || {
                        format!("cut degree is {degree}")
                    })?;
                    ensure(degree < k, || {
                        format!("cut degree {degree} is not below {k}")
                    })
                }
                other => Err(format!("unexpected result {other:?}")),
            }
        }
        ("cover-arbs", Instance::Digraph(d)) => {
            let (k, root) = (k()?, root()?);
            match result {
                "covered" => Ok(()),
                "infeasible" => in_degree_over(d, doc, k),
                "cut" => {
                    let inside = rooted_set(doc, "set", d.node_count(), root)?;
                    let mut heads = vec![false; d.node_count()];
                    let mut rho = 0i64;
                    for &(u, v) in d.arcs() {
                        if inside[v] && !inside[u] {
                            rho += 1;
                            heads[v] = true;
                        }
                    }
                    let lhs = k as i64 - rho;
                    let rhs: i64 = (0..d.node_count())
                        .filter(|&v| heads[v])
                        .map(|v| k as i64 - d.in_degree(v) as i64)
                        .sum();
                    ensure(lhs == int(doc, "lhs")? && rhs == int(doc, "rhs")?, || {
                        format!("counts are {lhs}, {rhs}")
                    })?;
                    ensure(lhs > rhs, || format!("{lhs} <= {rhs}: condition holds"))
                }
                other => Err(format!("unexpected result {other:?}")),
            }
        }
        ("cover-branchings", Instance::Digraph(d)) => {
            let k = k()?;
            match result {
                "covered" => Ok(()),
                "infeasible" => in_degree_over(d, doc, k),
                "dense" => {
                    let inside = node_set(doc, "nodes", d.node_count())?;
                    let size = inside.iter().filter(|&&b| b).count();
                    dense(
                        d.induced_count(&inside),
                        doc,
                        size,
                        (k * size.saturating_sub(1)) as i64,
                    )
                }
                other => Err(format!("unexpected result {other:?}")),
            }
        }
        ("check-mixed", Instance::Mixed(mixed)) => match result {
            "packed" => Ok(()),
            "deficient" => {
                let (k, root) = (k()?, root()?);
                let n = mixed.node_count();
                let blocks = lists(doc, "partition")?;
                ensure(blocks.first().is_some_and(|b| b.contains(&root)), || {
                    "root block must come first".into()
                })?;
                let p = Partition::new(n, blocks.clone()).map_err(|e| e.to_string())?;
                let cross = p.cross_count(&mixed.edges);
                let mut required = 0i64;
                for block in &blocks[1..] {
                    let mut inside = vec![false; n];
                    block.iter().for_each(|&v| inside[v] = true);
                    required += k as i64 - mixed.arcs.in_cut(&inside) as i64;
                }
                ensure(
                    cross == num(doc, "cross")? && required == int(doc, "required")?,
                    || format!("counts are {cross}, {required}"),
                )?;
                ensure((cross as i64) < required, || {
                    "partition condition holds".into()
                })
            }
            other => Err(format!("unexpected result {other:?}")),
        },
        ("orient", Instance::Graph(g)) => {
            let (k, root) = (k()?, root()?);
            let l = params.get("l").and_then(Value::as_u64).unwrap_or(0) as usize;
            match result {
                "packed" => {
                    let orientation = field(doc, "orientation")?;
                    if orientation.is_null() {
                        return Ok(());
                    }
                    let arcs = pairs(orientation, "orientation")?;
                    ensure(arcs.len() == g.edge_count(), || {
                        "one arc per edge expected".into()
                    })?;
                    for (e, (&(u, v), &(a, b))) in g.edges().iter().zip(&arcs).enumerate() {
                        ensure((u, v) == (a, b) || (u, v) == (b, a), || {
                            format!("arc {e} does not orient edge {e}")
                        })?;
                    }
                    let d = Digraph::from_arcs(g.node_count(), arcs).map_err(|e| e.to_string())?;
                    match rooted_kl_violation(&d, root, k, l).map_err(|e| e.to_string())? {
                        None => Ok(()),
                        Some(set) => Err(format!("set {set:?} violates the orientation bounds")),
                    }
                }
                "deficient" => {
                    let p = partition(doc, "partition", g.node_count())?;
                    let cross = p.cross_count(g);
                    ensure(cross == num(doc, "cross")?, || {
                        format!("cross count is {cross}")
                    })?;
                    let bound = |a: usize, b: usize| a * (p.len() - 1) + b;
                    let required = if l == 0 {
                        bound(k, 0)
                    } else {
                        num(doc, "required")?
                    };
                    let legal =
                        l == 0 || required == bound(k, l) || (l > k && required == bound(l, k));
                    ensure(legal && p.len() >= 2, || {
                        "bound does not match the parameters".into()
                    })?;
                    ensure(cross < required, || {
                        format!("{cross} cross edges meet the bound {required}")
                    })
                }
                other => Err(format!("unexpected result {other:?}")),
            }
        }
        ("hyper-rank", Instance::Hypergraph(h)) => {
            let r = num(doc, "rank")?;
            let basis = ids(doc, "basis")?;
            in_range(std::slice::from_ref(&basis), h.edge_count(), "basis")?;
            ensure(basis.len() == r, || "basis size differs from rank".into())?;
            is_forest_family(h, &basis)?;
            let p = partition(doc, "partition", h.node_count())?;
            let bound = partition_rank_bound(h, &p);
            ensure(bound == r, || {
                format!("partition bounds the rank by {bound}")
            })
        }
        ("hyper-pack", Instance::Hypergraph(h)) => {
            let k = k()?;
            match result {
                "packed" => {
                    let trees = lists(doc, "hypertrees")?;
                    let trimmings = field(doc, "trimmings")?
                        .as_array()
                        .ok_or("trimmings: expected an array")?;
                    ensure(trees.len() == k && trimmings.len() == k, || {
                        format!("{k} hypertrees expected")
                    })?;
                    in_range(&trees, h.edge_count(), "hypertrees")?;
                    disjoint(&trees, h.edge_count(), None)?;
                    for (i, (t, trim)) in trees.iter().zip(trimmings).enumerate() {
                        let trim = pairs(trim, "trimmings")?;
                        ensure(trim.len() == t.len(), || {
                            format!("trimming {i} has the wrong length")
                        })?;
                        for (&e, &(u, v)) in t.iter().zip(&trim) {
                            let z = h.edge(e);
                            ensure(u != v && z.contains(&u) && z.contains(&v), || {
                                format!("pair {u} {v} is not inside hyperedge {e}")
                            })?;
                        }
                        let g =
                            Graph::from_edges(h.node_count(), trim).map_err(|e| e.to_string())?;
                        let all: Vec<usize> = (0..g.edge_count()).collect();
                        ensure(g.is_spanning_tree(&all), || {
                            format!("trimming {i} is not a spanning tree")
                        })?;
                    }
                    Ok(())
                }
                "deficient" => hyper_cross(h, doc, k, 0),
                other => Err(format!("unexpected result {other:?}")),
            }
        }
        ("hyper-cover", Instance::Hypergraph(h)) => {
            let k = k()?;
            match result {
                "covered" => {
                    let classes = lists(doc, "hyperforests")?;
                    ensure(classes.len() <= k, || "too many classes".into())?;
                    in_range(&classes, h.edge_count(), "hyperforests")?;
                    disjoint(&classes, h.edge_count(), None)?;
                    covers_all(&classes, h.edge_count())?;
                    classes.iter().try_for_each(|c| is_forest_family(h, c))
                }
                "dense" => {
                    let inside = node_set(doc, "nodes", h.node_count())?;
                    let size = inside.iter().filter(|&&b| b).count();
                    dense(
                        h.induced_count(&inside),
                        doc,
                        size,
                        (k * size.saturating_sub(1)) as i64,
                    )
                }
                other => Err(format!("unexpected result {other:?}")),
            }
        }
        ("hyper-orient", Instance::Hypergraph(h)) => {
            let (k, root) = (k()?, root()?);
            let l = params.get("l").and_then(Value::as_u64).unwrap_or(0) as usize;
            match result {
                "packed" if l == 0 => {
                    let heads = ids(doc, "heads")?;
                    ensure(heads.len() == h.edge_count(), || {
                        "one head per hyperedge expected".into()
                    })?;
                    let mut dy = Dypergraph::new(h.node_count());
                    for (z, &head) in h.edges().iter().zip(&heads) {
                        dy.add_edge(z, head).map_err(|e| e.to_string())?;
                    }
                    match check_dypergraph_decomposition(&dy, root, k).map_err(|e| e.to_string())? {
                        DypergraphCheck::Holds => Ok(()),
                        DypergraphCheck::Deficient { set, .. } => {
                            Err(format!("set {set:?} is entered too rarely"))
                        }
                    }
                }
                "packed" => Ok(()),
                "deficient" if doc.get("total").is_some() => {
                    let p = partition(doc, "partition", h.node_count())?;
                    let total: usize = h
                        .edges()
                        .iter()
                        .map(|z| {
                            let mut blocks: Vec<usize> = z.iter().map(|&v| p.block_of(v)).collect();
                            blocks.sort_unstable();
                            blocks.dedup();
                            blocks.len() - 1
                        })
                        .sum();
                    let required = l * (p.len() - 1) + k;
                    ensure(
                        total == num(doc, "total")? && required == num(doc, "required")?,
                        || "counts differ".into(),
                    )?;
                    ensure(p.len() >= 2 && total < required, || {
                        "weak condition holds".into()
                    })
                }
                "deficient" => hyper_cross(h, doc, k, l),
                other => Err(format!("unexpected result {other:?}")),
            }
        }
        ("check-dyper", Instance::Dypergraph(dy)) => {
            let (k, root) = (k()?, root()?);
            match result {
                "packed" => Ok(()),
                "cut" => {
                    let inside = rooted_set(doc, "set", dy.node_count(), root)?;
                    let entering = dy.in_cut(&inside);
                    ensure(entering == num(doc, "in_degree")?, || {
                        format!("{entering} dyperedges enter the set")
                    })?;
                    ensure(entering < k, || "set is entered often enough".into())
                }
                other => Err(format!("unexpected result {other:?}")),
            }
        }
        ("game-analyze", Instance::Graph(g)) => {
            let (variant, first) = game_setup(params).map_err(|f| f.message())?;
            let winner =
                parse_player(field(doc, "winner")?.as_str().unwrap_or("")).ok_or("bad winner")?;
            crate::serve::check_game_certificate(
                g,
                variant,
                first,
                winner,
                field(doc, "certificate")?,
            )
        }
        ("game-play", Instance::Graph(g)) => {
            let (variant, first) = game_setup(params).map_err(|f| f.message())?;
            let mut game = Game::new(g.clone(), variant, first).map_err(|e| e.to_string())?;
            for mv in field(doc, "moves")?
                .as_array()
                .ok_or("moves: expected an array")?
            {
                let player = mv
                    .get(0)
                    .and_then(Value::as_str)
                    .and_then(parse_player)
                    .ok_or("bad move")?;
                let edge = mv.get(1).and_then(Value::as_u64).ok_or("bad move")? as usize;
                game.play(player, edge).map_err(|e| e.to_string())?;
            }
            let winner = game.winner().map(Player::name);
            ensure(winner == field(doc, "winner")?.as_str(), || {
                format!("replay ends with winner {winner:?}")
            })
        }
        (command, _) => Err(format!("no verifier for {command:?}")),
    }
}

fn in_degree_over(d: &Digraph, doc: &Value, k: usize) -> Check {
    let v = num(doc, "node")?;
    ensure(v < d.node_count(), || "node out of range".into())?;
    let deg = d.in_degree(v);
    ensure(deg == num(doc, "in_degree")? && deg > k, || {
        format!("node {v} has in-degree {deg}")
    })
}

fn is_forest_family(h: &Hypergraph, family: &[usize]) -> Check {
    match is_hyperforest(h, family).map_err(|e| e.to_string())? {
        HyperforestCheck::Trimming(_) => Ok(()),
        HyperforestCheck::Violated(j) => Err(format!("hyperedges {j:?} are not a hyperforest")),
    }
}

fn hyper_cross(h: &Hypergraph, doc: &Value, k: usize, l: usize) -> Check {
    let p = partition(doc, "partition", h.node_count())?;
    ensure(p.len() >= 2, || "partition needs two blocks".into())?;
    let cross = h.cross_count(&p);
    ensure(cross == num(doc, "cross")?, || {
        format!("cross count is {cross}")
    })?;
    let required = k * (p.len() - 1) + l;
    ensure(cross < required, || {
        format!("{cross} cross hyperedges meet the bound {required}")
    })
}

pub fn verify_file(path: &Path) -> Emission {
    let doc: Result<Value, String> = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {e}", path.display()))
        .and_then(|t| serde_json::from_str(&t).map_err(|e| format!("{}: {e}", path.display())));
    let doc = match doc {
        Ok(d) => d,
        Err(e) => {
            return Emission {
                code: USAGE,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    if doc.get("instance").is_none() {
        return Emission {
            code: USAGE,
            stdout: String::new(),
            stderr: "error: certificate has no embedded instance; rerun the command with --embed\n"
                .into(),
        };
    }
    let (code, out, summary) = match verify_document(&doc) {
        Ok(()) => (
            HOLDS,
            json!({"verified": true}),
            "certificate verified".to_string(),
        ),
        Err(e) => (
            FAILS,
            json!({"verified": false, "reason": e}),
            format!("certificate rejected: {e}"),
        ),
    };
    Emission {
        code,
        stdout: format!("{out}\n"),
        stderr: summary + "\n",
    }
}

fn example(text: &str) -> Instance {
    format::parse(text).expect("built-in example parses")
}

/// Runs `command` on `text`, checks the result and rechecks the certificate.
fn case(
    command: &str,
    params: Value,
    text: &str,
    expect: impl Fn(&Value) -> bool,
) -> Result<(), String> {
    let instance = coerce(command, example(text)).map_err(|f| f.message())?;
    let report = compute(command, &params, &instance).map_err(|f| f.message())?;
    let mut body = Value::Object(report.body);
    if !expect(&body) {
        return Err(format!("unexpected output {body}"));
    }
    body["command"] = json!(command);
    body["params"] = params;
    body["instance"] = format::to_json(&instance);
    verify_document(&body)
}

const TRIANGLE: &str = "graph 3 3\n0 1\n1 2\n0 2\n";
const K4: &str = "graph 4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const C4: &str = "graph 4 4\n0 1\n1 2\n2 3\n3 0\n";
const PATH3: &str = "graph 3 2\n0 1\n1 2\n";

pub fn selftest() -> Emission {
    let r = |v: &Value| v["result"].as_str().map(str::to_string);
    let cases: Vec<(&str, Result<(), String>)> = vec![
        (
            "triangle has deficit 1 for two trees",
            case("pack-trees", json!({"k": 2}), TRIANGLE, |v| {
                *v == json!({"result": "deficient", "partition": [[0], [1], [2]], "deficit": 1})
            }),
        ),
        (
            "K4 holds two spanning trees",
            case("pack-trees", json!({"k": 2}), K4, |v| {
                r(v).as_deref() == Some("packed")
            }),
        ),
        (
            "zero trees always pack",
            case("pack-trees", json!({"k": 0}), TRIANGLE, |v| {
                v["trees"] == json!([])
            }),
        ),
        (
            "K4 has arboricity 2",
            case("arboricity", json!({}), K4, |v| v["arboricity"] == 2),
        ),
        (
            "triangle deficiency 1",
            case("deficiency", json!({"k": 2}), TRIANGLE, |v| {
                v["deficiency"] == 1
            }),
        ),
        (
            "triangle needs one edge",
            case("augment", json!({"k": 2, "mode": "star"}), TRIANGLE, |v| {
                v["added"].as_array().map(Vec::len) == Some(1)
            }),
        ),
        (
            "K4 is not (2,1)-partition-connected",
            case("check-pc", json!({"k": 2, "l": 1}), K4, |v| {
                r(v).as_deref() == Some("deficient")
            }),
        ),
        (
            "K4 is not Laman",
            case("check-sparse", json!({"laman": true}), K4, |v| {
                r(v).as_deref() == Some("dense")
            }),
        ),
        (
            "triangle is Laman",
            case("check-sparse", json!({"laman": true}), TRIANGLE, |v| {
                r(v).as_deref() == Some("covered")
            }),
        ),
        (
            "C4 is 2-edge-connected",
            case("certify-kec", json!({"k": 2, "root": 0}), C4, |v| {
                r(v).as_deref() == Some("packed")
            }),
        ),
        (
            "a path is not 2-edge-connected",
            case("certify-kec", json!({"k": 2, "root": 0}), PATH3, |v| {
                r(v).as_deref() == Some("cut") && v["degree"] == 1
            }),
        ),
        (
            "K4 has three arborescences",
            case("certify-kec", json!({"k": 3, "root": 0}), K4, |v| {
                r(v).as_deref() == Some("packed")
            }),
        ),
        (
            "directed 2-cycle needs two branchings",
            case(
                "cover-branchings",
                json!({"k": 1}),
                "digraph 2 2\n0 1\n1 0\n",
                |v| r(v).as_deref() == Some("dense"),
            ),
        ),
        (
            "mixed triangle packs",
            case(
                "check-mixed",
                json!({"k": 1, "root": 0}),
                "mixed 3 1 2\n0 1\n1 2\n2 0\n",
                |v| r(v).as_deref() == Some("packed"),
            ),
        ),
        (
            "K4 orients 2-arc-connected",
            case("orient", json!({"k": 2, "root": 0}), K4, |v| {
                r(v).as_deref() == Some("packed")
            }),
        ),
        (
            "triangle cannot orient 2-arc-connected",
            case("orient", json!({"k": 2, "root": 0}), TRIANGLE, |v| {
                r(v).as_deref() == Some("deficient")
            }),
        ),
        (
            "two copies of a triple have rank 2",
            case(
                "hyper-rank",
                json!({}),
                "hypergraph 3 2\n3 0 1 2\n3 0 1 2\n",
                |v| v["rank"] == 2,
            ),
        ),
        (
            "one triple is not partition-connected",
            case(
                "hyper-orient",
                json!({"k": 1, "root": 0}),
                "hypergraph 3 1\n3 0 1 2\n",
                |v| r(v).as_deref() == Some("deficient"),
            ),
        ),
        (
            "one triple has a (0,1) orientation",
            case(
                "hyper-orient",
                json!({"k": 0, "l": 1, "root": 0}),
                "hypergraph 3 1\n3 0 1 2\n",
                |v| r(v).as_deref() == Some("packed"),
            ),
        ),
        (
            "dyperedge headed away misses a node",
            case(
                "check-dyper",
                json!({"k": 1, "root": 0}),
                "dypergraph 3 1\n3 1 0 2\n",
                |v| r(v).as_deref() == Some("cut"),
            ),
        ),
        (
            "Cut wins the triangle",
            case(
                "game-analyze",
                json!({"variant": "global", "first": "cut"}),
                TRIANGLE,
                |v| v["winner"] == "cut",
            ),
        ),
        (
            "Short wins K4",
            case(
                "game-analyze",
                json!({"variant": "global", "first": "cut"}),
                K4,
                |v| v["winner"] == "short",
            ),
        ),
        (
            "engines on K4 end with Short",
            case(
                "game-play",
                json!({"variant": "global", "first": "cut"}),
                K4,
                |v| v["winner"] == "short",
            ),
        ),
    ];
    let failed: Vec<Value> = cases
        .iter()
        .filter_map(|(name, res)| {
            res.as_ref()
                .err()
                .map(|e| json!({"name": name, "reason": e}))
        })
        .collect();
    let total = cases.len();
    let summary = format!("{} of {total} examples passed", total - failed.len());
    let code = if failed.is_empty() { HOLDS } else { FAILS };
    let out = json!({"examples": total, "failed": failed});
    Emission {
        code,
        stdout: format!("{out}\n"),
        stderr: summary + "\n",
    }
}
