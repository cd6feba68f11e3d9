//! Acceptance suite: each criterion prints one PASS/FAIL line; any failure makes the
//! process exit non-zero.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::Instant;

use arbor_core::arborescence::{
    is_spanning_arborescence, pack_arborescences, rooted_connectivity, ArborescencePacking,
};
use arbor_core::forest::{
    arboricity, augment_to_k_tree_connected, check_partition_connected, decompose_forests,
    pack_spanning_trees, partition_deficiency, AugmentMode, Augmentation, ForestDecomposition,
    TreePacking,
};
use arbor_core::game::{analyze, Certificate, Engine, Game, Player, Variant};
use arbor_core::graph::{Digraph, EdgeId, Graph, NodeId, UnionFind};
use arbor_core::hypergraph::{
    hypergraphic_rank, is_hyperforest, pack_hypertrees, partition_rank_bound, HyperforestCheck,
    Hypergraph, HypergraphicMatroid, HypertreePacking,
};
use arbor_core::matroid::{matroid_union, GraphicMatroid, Matroid, PartitionMatroid, Truncation};
use arbor_core::orientation::{
    check_hyper_orientation, check_orientation_kl, orient_hypergraph_rooted_k, orient_rooted_k,
    rooted_kl_violation, HyperOrientation, HyperOrientationCheck, KlOrientation, RootedOrientation,
};
use arbor_testkit::enumerate::connected_graphs;
use arbor_testkit::oracle;
use arbor_testkit::random::{self, rng};
use arbor_testkit::{gen_kl_pinch, gen_kv, gen_mader, gen_pinch_2k};
use rand::Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn disjoint(sets: &[Vec<usize>]) -> bool {
    let mut all: Vec<usize> = sets.iter().flatten().copied().collect();
    let len = all.len();
    all.sort_unstable();
    all.dedup();
    all.len() == len
}

fn nodes_to_set(n: usize, nodes: &[NodeId]) -> Vec<bool> {
    let mut inside = vec![false; n];
    for &v in nodes {
        inside[v] = true;
    }
    inside
}

fn simple_upto_six() -> Vec<Graph> {
    let mut gs = vec![Graph::new(1)];
    gs.extend(connected_graphs(6, 15, false));
    gs
}

fn criterion_1() -> Outcome {
    let graphs = simple_upto_six();
    let mut checked = 0;
    for g in &graphs {
        for k in 1..=3 {
            let (want, _) = oracle::max_deficit(g, k);
            let trees = oracle::disjoint_trees(g, k);
            ensure!(
                trees.is_some() == (want == 0),
                "oracles disagree on {:?} k={k}",
                g.edges()
            );
            match pack_spanning_trees(g, k).map_err(|e| e.to_string())? {
                TreePacking::Packed { trees } => {
                    ensure!(
                        want == 0,
                        "packed but oracle deficit {want}: {:?} k={k}",
                        g.edges()
                    );
                    ensure!(
                        trees.len() == k && disjoint(&trees),
                        "bad packing {:?}",
                        g.edges()
                    );
                    ensure!(
                        trees.iter().all(|t| g.is_spanning_tree(t)),
                        "non-tree in packing"
                    );
                }
                TreePacking::Deficient {
                    partition,
                    cross,
                    deficit,
                } => {
                    ensure!(want > 0, "deficient but oracle packs {:?} k={k}", g.edges());
                    ensure!(partition.cross_count(g) == cross, "cross count mismatch");
                    ensure!(
                        partition.deficit(g, k) == deficit as i64 && deficit > 0,
                        "deficit not verified"
                    );
                }
            }
            let d = partition_deficiency(g, k).map_err(|e| e.to_string())?;
            ensure!(
                d.value == want,
                "Π_{k} {} vs oracle {want} on {:?}",
                d.value,
                g.edges()
            );
            checked += 1;
        }
    }
    Ok(format!(
        "{} graphs, {checked} (graph, k) pairs",
        graphs.len()
    ))
}

fn criterion_2() -> Outcome {
    let mut graphs: Vec<Graph> = connected_graphs(5, 10, false);
    let mut r = rng(2);
    for _ in 0..400 {
        let n = r.gen_range(2..=8);
        let m = r.gen_range(0..=3 * (n - 1) + 3);
        graphs.push(random::multigraph(&mut r, n, m));
    }
    for g in &graphs {
        for k in 1..=3 {
            let violation = oracle::sparsity_violation(g, k, 0);
            match decompose_forests(g, k, None).map_err(|e| e.to_string())? {
                ForestDecomposition::Decomposed { forests } => {
                    ensure!(
                        violation.is_none(),
                        "decomposed a dense graph {:?} k={k}",
                        g.edges()
                    );
                    ensure!(
                        disjoint(&forests)
                            && forests.iter().map(Vec::len).sum::<usize>() == g.edge_count(),
                        "not a partition of E"
                    );
                    ensure!(
                        forests.iter().all(|f| g.is_forest(f)),
                        "class is not a forest"
                    );
                }
                ForestDecomposition::Dense {
                    nodes,
                    induced,
                    bound,
                } => {
                    ensure!(
                        violation.is_some(),
                        "dense witness on a sparse graph {:?} k={k}",
                        g.edges()
                    );
                    let inside = nodes_to_set(g.node_count(), &nodes);
                    ensure!(
                        g.induced_count(&inside) == induced
                            && bound == k * (nodes.len() - 1)
                            && induced > bound,
                        "witness does not verify"
                    );
                }
                ForestDecomposition::OverCapacity { .. } => {
                    return Err("capacity outcome without caps".into())
                }
            }
        }
        let (a, forests) = arboricity(g).map_err(|e| e.to_string())?;
        ensure!(
            a == oracle::arboricity(g),
            "arboricity {a} vs oracle {} on {:?}",
            oracle::arboricity(g),
            g.edges()
        );
        ensure!(
            forests.len() == a && forests.iter().all(|f| g.is_forest(f)),
            "arboricity forests invalid"
        );
    }
    Ok(format!("{} graphs x k in 1..=3", graphs.len()))
}

fn criterion_3() -> Outcome {
    let mut r = rng(3);
    let trials = 300;
    for trial in 0..trials {
        let size = r.gen_range(1..=12);
        let n = r.gen_range(2..=6);
        let g = random::multigraph(&mut r, n, size);
        let h = random::hypergraph(&mut r, n, size, 4);
        let graphic = GraphicMatroid::new(&g);
        let classes: Vec<usize> = (0..size).map(|_| r.gen_range(0..3)).collect();
        let caps: Vec<usize> = (0..3).map(|_| r.gen_range(0..3)).collect();
        let partition = PartitionMatroid::new(classes, caps).map_err(|e| e.to_string())?;
        let truncated = Truncation {
            inner: GraphicMatroid::new(&g),
            cap: r.gen_range(0..n),
        };
        let hyper = HypergraphicMatroid::new(&h);
        let pool: [&dyn Matroid; 4] = [&graphic, &partition, &truncated, &hyper];
        let count = r.gen_range(1..=3);
        let ms: Vec<&dyn Matroid> = (0..count).map(|_| pool[r.gen_range(0..4)]).collect();
        let elements: Vec<usize> = (0..size).filter(|_| r.gen_bool(0.85)).collect();
        let out = matroid_union(&ms, &elements).map_err(|e| e.to_string())?;
        let want = oracle::union_rank(&ms, &elements);
        ensure!(
            out.rank == want,
            "trial {trial}: union rank {} vs formula {want}",
            out.rank
        );
        ensure!(
            out.labeling.is_valid_for(&ms) && out.labeling.labeled_count() == out.rank,
            "trial {trial}: labeling invalid"
        );
        for x in [&out.certificate, &out.closed_certificate] {
            let value = elements.len() - x.len() + ms.iter().map(|m| m.rank(x)).sum::<usize>();
            ensure!(
                value == want,
                "trial {trial}: certificate value {value} vs {want}"
            );
        }
    }
    Ok(format!("{trials} random matroid families, |S| <= 12"))
}

fn criterion_4() -> Outcome {
    let mut graphs: Vec<Graph> = connected_graphs(5, 8, false);
    let mut r = rng(4);
    for _ in 0..250 {
        let n = r.gen_range(2..=8);
        let m = r.gen_range(0..=2 * n);
        graphs.push(random::multigraph(&mut r, n, m));
    }
    for g in &graphs {
        for k in 1..=3 {
            let (want, _) = oracle::max_deficit(g, k);
            let d = partition_deficiency(g, k).map_err(|e| e.to_string())?;
            ensure!(
                d.value == want,
                "Π_{k} = {} vs oracle {want} on {:?}",
                d.value,
                g.edges()
            );
            ensure!(
                d.value == 0 || d.partition.deficit(g, k) == want as i64,
                "argmax partition does not attain Π_{k}"
            );
            for mode in [AugmentMode::Star, AugmentMode::Parallel] {
                let Augmentation::Added { edges } =
                    augment_to_k_tree_connected(g, k, None, mode).map_err(|e| e.to_string())?
                else {
                    return Err("unbudgeted augmentation reported infeasible".into());
                };
                ensure!(
                    edges.len() == want,
                    "{mode:?} added {} edges, Π = {want}",
                    edges.len()
                );
                if mode == AugmentMode::Star {
                    ensure!(
                        edges.iter().all(|&(u, v)| u == 0 || v == 0),
                        "star edges miss node 0"
                    );
                } else if g.is_connected() {
                    ensure!(
                        edges.iter().all(|&(u, v)| g
                            .edges()
                            .iter()
                            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))),
                        "parallel mode added a non-parallel edge"
                    );
                }
                let mut h = g.clone();
                for (u, v) in edges {
                    h.add_edge(u, v).map_err(|e| e.to_string())?;
                }
                ensure!(
                    oracle::max_deficit(&h, k).0 == 0,
                    "augmented graph still deficient"
                );
                if let Some(budget) = want.checked_sub(1) {
                    let res = augment_to_k_tree_connected(g, k, Some(budget), mode)
                        .map_err(|e| e.to_string())?;
                    ensure!(
                        matches!(res, Augmentation::Infeasible { .. }),
                        "budget below Π accepted"
                    );
                }
            }
        }
    }
    Ok(format!(
        "{} graphs x k in 1..=3, star and parallel",
        graphs.len()
    ))
}

/// Random partial arborescences from the root, pairwise arc-disjoint.
fn random_seeds(r: &mut impl Rng, d: &Digraph, root: NodeId, k: usize) -> Vec<Vec<EdgeId>> {
    let mut used = vec![false; d.arc_count()];
    let mut seeds = Vec::new();
    for _ in 0..k {
        let mut covered = nodes_to_set(d.node_count(), &[root]);
        let mut seed = Vec::new();
        let steps = r.gen_range(0..d.node_count());
        for _ in 0..steps {
            let options: Vec<EdgeId> = (0..d.arc_count())
                .filter(|&a| {
                    let (u, v) = d.arc(a);
                    !used[a] && covered[u] && !covered[v]
                })
                .collect();
            if options.is_empty() {
                break;
            }
            let a = options[r.gen_range(0..options.len())];
            used[a] = true;
            covered[d.arc(a).1] = true;
            seed.push(a);
        }
        seeds.push(seed);
    }
    seeds
}

fn criterion_5() -> Outcome {
    let mut r = rng(5);
    let mut digraphs: Vec<Digraph> = Vec::new();
    for _ in 0..500 {
        let n = r.gen_range(2..=7);
        let m = r.gen_range(0..=3 * n);
        digraphs.push(random::digraph(&mut r, n, m));
    }
    let mut mader = 0;
    for seed in 0..200 {
        for k in 1..=3 {
            let d = gen_mader(seed, r.gen_range(0..10), k).value;
            if d.node_count() <= 7 {
                let conn = rooted_connectivity(&d, 0).map_err(|e| e.to_string())?;
                ensure!(conn.map_or(true, |c| c.value >= k), "mader output below k");
                match pack_arborescences(&d, 0, k, None).map_err(|e| e.to_string())? {
                    ArborescencePacking::Packed { arborescences } => {
                        ensure!(
                            disjoint(&arborescences)
                                && arborescences
                                    .iter()
                                    .all(|a| is_spanning_arborescence(&d, 0, a)),
                            "mader packing invalid"
                        );
                    }
                    ArborescencePacking::Deficient { .. } => {
                        return Err(format!("mader seed {seed} k={k} not packed"))
                    }
                }
                mader += 1;
            }
        }
    }
    for d in &digraphs {
        let want = oracle::min_in_degree(d, 0);
        let got = rooted_connectivity(d, 0).map_err(|e| e.to_string())?;
        ensure!(
            got.as_ref().map(|c| c.value) == want,
            "rooted connectivity {:?} vs oracle {want:?}",
            got.map(|c| c.value)
        );
        if let Some(c) = &got {
            ensure!(
                d.in_cut(&nodes_to_set(d.node_count(), &c.set)) == c.value && !c.set.contains(&0),
                "in-cut witness invalid"
            );
        }
        for k in 1..=3 {
            let holds = want.map_or(true, |w| w >= k);
            match pack_arborescences(d, 0, k, None).map_err(|e| e.to_string())? {
                ArborescencePacking::Packed { arborescences } => {
                    ensure!(holds, "packed below connectivity");
                    ensure!(
                        arborescences.len() == k && disjoint(&arborescences),
                        "packing not disjoint"
                    );
                    ensure!(
                        arborescences
                            .iter()
                            .all(|a| is_spanning_arborescence(d, 0, a)),
                        "not spanning arborescences"
                    );
                }
                ArborescencePacking::Deficient { set, entering, .. } => {
                    ensure!(!holds, "deficient although rooted {k}-connected");
                    let inside = nodes_to_set(d.node_count(), &set);
                    ensure!(
                        !inside[0]
                            && !set.is_empty()
                            && d.in_cut(&inside) == entering
                            && entering < k,
                        "deficient set invalid"
                    );
                }
            }
        }
    }
    let mut strong = 0;
    let mut strong_yes = 0;
    for _ in 0..400 {
        let n = r.gen_range(2..=6);
        let m = r.gen_range(n..=3 * n);
        let d = random::digraph(&mut r, n, m);
        let k = r.gen_range(1..=2);
        let seeds = random_seeds(&mut r, &d, 0, k);
        let want = oracle::arborescence_completion(&d, 0, &seeds);
        match pack_arborescences(&d, 0, k, Some(&seeds)).map_err(|e| e.to_string())? {
            ArborescencePacking::Packed { arborescences } => {
                ensure!(
                    want.is_some(),
                    "completed seeds the oracle cannot: {:?} {seeds:?}",
                    d.arcs()
                );
                ensure!(disjoint(&arborescences), "completion not disjoint");
                for (a, s) in arborescences.iter().zip(&seeds) {
                    ensure!(
                        is_spanning_arborescence(&d, 0, a) && s.iter().all(|x| a.contains(x)),
                        "completion misses its seed"
                    );
                }
                strong_yes += 1;
            }
            ArborescencePacking::Deficient { set, .. } => {
                ensure!(
                    want.is_none(),
                    "missed a completion: {:?} seeds {seeds:?}",
                    d.arcs()
                );
                ensure!(
                    !set.is_empty() && !set.contains(&0),
                    "deficient set invalid"
                );
            }
        }
        strong += 1;
    }
    Ok(format!("500 random digraphs, {mader} mader outputs, {strong} seeded cases ({strong_yes} completable)"))
}

fn orientation_matches(g: &Graph, d: &Digraph) -> bool {
    d.arc_count() == g.edge_count()
        && d.arcs()
            .iter()
            .zip(g.edges())
            .all(|(&(t, h), &(u, v))| (t, h) == (u, v) || (t, h) == (v, u))
}

fn brute_hyper_orientation(h: &Hypergraph, root: NodeId, k: usize, l: usize) -> bool {
    let m = h.edge_count();
    let mut heads = vec![0usize; m];
    loop {
        let mut dy = arbor_core::hypergraph::Dypergraph::new(h.node_count());
        for (e, z) in h.edges().iter().enumerate() {
            dy.add_edge(z, z[heads[e]]).expect("member head");
        }
        let n = h.node_count();
        let mut ok = true;
        for mask in 1u64..(1u64 << n) {
            let inside: Vec<bool> = (0..n).map(|v| mask >> v & 1 == 1).collect();
            if inside[root] {
                continue;
            }
            let outside: Vec<bool> = inside.iter().map(|&x| !x).collect();
            if dy.in_cut(&inside) < k || dy.in_cut(&outside) < l {
                ok = false;
                break;
            }
        }
        if ok {
            return true;
        }
        let mut i = 0;
        loop {
            if i == m {
                return false;
            }
            heads[i] += 1;
            if heads[i] < h.edge(i).len() {
                break;
            }
            heads[i] = 0;
            i += 1;
        }
    }
}

fn criterion_6() -> Outcome {
    let graphs = simple_upto_six();
    let mut produced = 0;
    for g in &graphs {
        for k in 1..=3 {
            let pc = oracle::partition_connected(g, k, 0);
            match orient_rooted_k(g, 0, k).map_err(|e| e.to_string())? {
                RootedOrientation::Oriented(d) => {
                    ensure!(pc, "oriented a graph that is not {k}-partition-connected");
                    ensure!(
                        orientation_matches(g, &d),
                        "orientation does not follow the edges"
                    );
                    ensure!(
                        oracle::min_in_degree(&d, 0).map_or(true, |c| c >= k),
                        "orientation fails cut check"
                    );
                    produced += 1;
                }
                RootedOrientation::Deficient { partition, cross } => {
                    ensure!(!pc, "missed an orientation on {:?} k={k}", g.edges());
                    ensure!(
                        partition.cross_count(g) == cross && cross < k * (partition.len() - 1),
                        "partition invalid"
                    );
                }
            }
        }
    }
    let mut kl = 0;
    for g in graphs.iter().filter(|g| g.edge_count() <= 9) {
        for (k, l) in [(1, 1), (2, 1), (1, 2), (2, 2), (0, 2), (2, 0)] {
            let want = oracle::orientation(g, 0, k, l);
            match check_orientation_kl(g, 0, k, l, true).map_err(|e| e.to_string())? {
                KlOrientation::Holds { orientation } => {
                    ensure!(
                        want.is_some(),
                        "({k},{l}) holds but no orientation exists: {:?}",
                        g.edges()
                    );
                    if let Some(d) = orientation {
                        ensure!(
                            orientation_matches(g, &d) && oracle::rooted_kl_connected(&d, 0, k, l),
                            "({k},{l}) orientation fails cut check"
                        );
                        ensure!(
                            rooted_kl_violation(&d, 0, k, l)
                                .map_err(|e| e.to_string())?
                                .is_none(),
                            "flow check rejects orientation"
                        );
                        produced += 1;
                    }
                }
                KlOrientation::Violated {
                    partition,
                    cross,
                    required,
                } => {
                    ensure!(
                        want.is_none(),
                        "({k},{l}) violated but {:?} orients",
                        g.edges()
                    );
                    ensure!(
                        partition.cross_count(g) == cross && cross < required,
                        "({k},{l}) witness invalid"
                    );
                }
            }
            kl += 1;
        }
    }
    let mut r = rng(6);
    let mut hyper = 0;
    for _ in 0..300 {
        let n = r.gen_range(2..=6);
        let m = r.gen_range(1..=8);
        let h = random::hypergraph(&mut r, n, m, 4);
        for k in 1..=2 {
            let pc = oracle::hyper_partition_connected(&h, k, 0);
            match orient_hypergraph_rooted_k(&h, 0, k).map_err(|e| e.to_string())? {
                HyperOrientation::Oriented(dy) => {
                    ensure!(pc, "oriented a hypergraph that is not partition-connected");
                    ensure!(
                        dy.edges()
                            .iter()
                            .zip(h.edges())
                            .all(|((z, head), orig)| z == orig && orig.contains(head)),
                        "heads outside hyperedges"
                    );
                    ensure!(
                        oracle::dyper_min_in_degree(&dy, 0).map_or(true, |c| c >= k),
                        "hyper orientation fails cut check"
                    );
                    produced += 1;
                }
                HyperOrientation::Deficient { partition, cross } => {
                    ensure!(!pc, "missed a hyper orientation");
                    ensure!(
                        h.cross_count(&partition) == cross && cross < k * (partition.len() - 1),
                        "hyper partition invalid"
                    );
                }
            }
            hyper += 1;
        }
        if n <= 5 && m <= 6 {
            for (k, l) in [(1, 1), (1, 2), (2, 1), (0, 1)] {
                let want = brute_hyper_orientation(&h, 0, k, l);
                let got = check_hyper_orientation(&h, 0, k, l).map_err(|e| e.to_string())?
                    == HyperOrientationCheck::Holds;
                ensure!(
                    want == got,
                    "hyper ({k},{l}) condition {got} vs search {want} on {:?}",
                    h.edges()
                );
                hyper += 1;
            }
        }
    }
    Ok(format!(
        "{} graphs, {kl} (k,l) cases, {hyper} hypergraph cases, {produced} orientations verified",
        graphs.len()
    ))
}

fn criterion_7() -> Outcome {
    let mut r = rng(7);
    let mut cases = 0;
    for _ in 0..400 {
        let n = r.gen_range(2..=7);
        let m = r.gen_range(1..=10);
        let h = random::hypergraph(&mut r, n, m, 4);
        let ids: Vec<usize> = (0..m).filter(|_| r.gen_bool(0.7)).collect();
        let want = oracle::is_hyperforest(&h, &ids);
        match is_hyperforest(&h, &ids).map_err(|e| e.to_string())? {
            HyperforestCheck::Trimming(pairs) => {
                ensure!(want, "trimmed a non-hyperforest {:?}", h.edges());
                ensure!(pairs.len() == ids.len(), "trimming length");
                for (&(u, v), &e) in pairs.iter().zip(&ids) {
                    ensure!(
                        u != v && h.edge(e).contains(&u) && h.edge(e).contains(&v),
                        "pair outside hyperedge"
                    );
                }
                let g = Graph::from_edges(n, pairs.iter().copied()).map_err(|e| e.to_string())?;
                ensure!(
                    g.is_forest(&(0..g.edge_count()).collect::<Vec<_>>()),
                    "trimming has a cycle"
                );
            }
            HyperforestCheck::Violated(j) => {
                ensure!(!want, "rejected a hyperforest {:?} {ids:?}", h.edges());
                let mut covered = vec![false; n];
                for &e in &j {
                    for &v in h.edge(e) {
                        covered[v] = true;
                    }
                }
                ensure!(
                    !j.is_empty() && covered.iter().filter(|&&x| x).count() <= j.len(),
                    "violating family invalid"
                );
            }
        }
        if n <= 6 {
            let (rank, p) = hypergraphic_rank(&h);
            let w = oracle::min_partition_rank_bound(&h);
            ensure!(
                rank == w && rank == oracle::hypergraphic_rank(&h),
                "rank {rank} vs partition bound {w}"
            );
            ensure!(
                partition_rank_bound(&h, &p) == rank,
                "rank partition not tight"
            );
            for k in 1..=2 {
                let pc = oracle::hyper_partition_connected(&h, k, 0);
                match pack_hypertrees(&h, k).map_err(|e| e.to_string())? {
                    HypertreePacking::Packed {
                        hypertrees,
                        trimmings,
                    } => {
                        ensure!(pc && disjoint(&hypertrees), "hypertree packing invalid");
                        for (tree, pairs) in hypertrees.iter().zip(&trimmings) {
                            let g = Graph::from_edges(n, pairs.iter().copied())
                                .map_err(|e| e.to_string())?;
                            ensure!(
                                g.is_spanning_tree(&(0..g.edge_count()).collect::<Vec<_>>()),
                                "trimming not a spanning tree"
                            );
                            ensure!(
                                tree.iter()
                                    .zip(pairs)
                                    .all(|(&e, &(u, v))| h.edge(e).contains(&u)
                                        && h.edge(e).contains(&v)),
                                "pair outside its hyperedge"
                            );
                        }
                    }
                    HypertreePacking::Deficient { partition, cross } => {
                        ensure!(!pc, "missed a hypertree packing on {:?} k={k}", h.edges());
                        ensure!(
                            h.cross_count(&partition) == cross && cross < k * (partition.len() - 1),
                            "hyper partition invalid"
                        );
                    }
                }
            }
        }
        cases += 1;
    }
    let abc = Hypergraph::from_edges(3, [vec![0, 1, 2]]).map_err(|e| e.to_string())?;
    ensure!(abc.is_connected(), "single hyperedge should be connected");
    ensure!(
        !pack_hypertrees(&abc, 1)
            .map_err(|e| e.to_string())?
            .is_packed_like(),
        "single 3-hyperedge packed a hypertree"
    );
    Ok(format!(
        "{cases} random hypergraphs plus the single 3-node hyperedge"
    ))
}

trait PackedLike {
    fn is_packed_like(&self) -> bool;
}

impl PackedLike for HypertreePacking {
    fn is_packed_like(&self) -> bool {
        matches!(self, HypertreePacking::Packed { .. })
    }
}

/// Graph rank (n - components) of an edge subset given as ids into `edges`.
fn graph_rank(n: usize, edges: &[(NodeId, NodeId)], set: &[usize]) -> usize {
    let mut uf = UnionFind::new(n);
    set.iter()
        .filter(|&&e| uf.union(edges[e].0, edges[e].1))
        .count()
}

fn dual_rank(n: usize, edges: &[(NodeId, NodeId)], set: &[usize]) -> usize {
    let all: Vec<usize> = (0..edges.len()).collect();
    let rest: Vec<usize> = all.iter().copied().filter(|e| !set.contains(e)).collect();
    set.len() + graph_rank(n, edges, &rest) - graph_rank(n, edges, &all)
}

fn spanning_in(g: &Graph, nodes: &[NodeId], tree: &[EdgeId]) -> bool {
    let inside = nodes_to_set(g.node_count(), nodes);
    if tree.len() + 1 != nodes.len()
        || !tree
            .iter()
            .all(|&e| inside[g.edge(e).0] && inside[g.edge(e).1])
    {
        return false;
    }
    let mut uf = UnionFind::new(g.node_count());
    tree.iter().all(|&e| uf.union(g.edge(e).0, g.edge(e).1))
}

fn shares_at_most(trees: &[Vec<EdgeId>; 2], shared: Option<EdgeId>) -> bool {
    trees[0]
        .iter()
        .filter(|e| trees[1].contains(e))
        .all(|&e| Some(e) == shared)
}

fn verify_certificate(
    g: &Graph,
    variant: Variant,
    first: Player,
    winner: Player,
    cert: &Certificate,
) -> Result<bool, String> {
    let n = g.node_count();
    let all: Vec<NodeId> = (0..n).collect();
    let mut has_forests = true;
    match (cert, variant) {
        (Certificate::SpanningTrees { trees, shared }, Variant::Global) => {
            ensure!(winner == Player::Short, "tree certificate for Cut");
            ensure!(
                trees.iter().all(|t| spanning_in(g, &all, t)),
                "certificate trees not spanning"
            );
            ensure!(shares_at_most(trees, *shared), "trees share too much");
            ensure!(
                first == Player::Short || shared.is_none(),
                "shared edge with Cut first"
            );
        }
        (
            Certificate::Block {
                nodes,
                trees,
                shared,
            },
            Variant::St { s, t },
        ) => {
            ensure!(
                winner == Player::Short && nodes.contains(&s) && nodes.contains(&t),
                "block misses a terminal"
            );
            ensure!(
                trees.iter().all(|tr| spanning_in(g, nodes, tr)),
                "block trees not spanning"
            );
            ensure!(shares_at_most(trees, *shared), "block trees share too much");
            ensure!(
                first == Player::Short || shared.is_none(),
                "shared edge with Cut first"
            );
        }
        (
            Certificate::DeficientPartition {
                partition,
                cross,
                deficit,
            },
            Variant::Global,
        ) => {
            ensure!(winner == Player::Cut, "partition certificate for Short");
            ensure!(
                partition.cross_edges(g) == *cross && partition.deficit(g, 2) == *deficit as i64,
                "partition counts wrong"
            );
            let need = if first == Player::Cut { 1 } else { 2 };
            ensure!(*deficit >= need, "deficit {deficit} below {need}");
        }
        (Certificate::SeparatingPartition { partition, forests }, Variant::St { s, t }) => {
            ensure!(
                winner == Player::Cut && first == Player::Cut,
                "separating partition out of place"
            );
            ensure!(
                oracle::separates(partition, s, t),
                "partition keeps s and t together"
            );
            match forests {
                Some([f1, f2]) => {
                    let mut both: Vec<EdgeId> = f1.iter().chain(f2).copied().collect();
                    both.sort_unstable();
                    ensure!(
                        both == partition.cross_edges(g),
                        "forests do not split the cross edges"
                    );
                    let q = partition.len();
                    let lift = |f: &[EdgeId]| -> Vec<(usize, usize)> {
                        f.iter()
                            .map(|&e| {
                                (
                                    partition.block_of(g.edge(e).0),
                                    partition.block_of(g.edge(e).1),
                                )
                            })
                            .collect()
                    };
                    let mut uf2 = UnionFind::new(q);
                    ensure!(
                        lift(f2).into_iter().all(|(a, b)| uf2.union(a, b)),
                        "F2 has a cycle"
                    );
                    let mut uf1 = UnionFind::new(q);
                    ensure!(
                        lift(f1).into_iter().all(|(a, b)| uf1.union(a, b)),
                        "F1 has a cycle"
                    );
                    ensure!(
                        !uf1.same(partition.block_of(s), partition.block_of(t)),
                        "F1 joins s and t"
                    );
                }
                None => has_forests = false,
            }
        }
        (Certificate::DualBases { support, bases }, Variant::St { s, t }) => {
            ensure!(winner == Player::Cut, "dual bases for Short");
            let mut edges = g.edges().to_vec();
            edges.push((s, t));
            let e0 = g.edge_count();
            let r = dual_rank(n, &edges, support);
            ensure!(
                bases.iter().all(|b| b.len() == r
                    && dual_rank(n, &edges, b) == r
                    && b.iter().all(|e| support.contains(e))),
                "dual bases invalid"
            );
            ensure!(
                bases[0].iter().all(|e| !bases[1].contains(e)),
                "dual bases overlap"
            );
            let mut with = support.clone();
            with.push(e0);
            ensure!(
                dual_rank(n, &edges, &with) == r,
                "terminal edge outside the dual span"
            );
        }
        _ => return Err("certificate kind does not fit the variant".into()),
    }
    Ok(has_forests)
}

/// Every connected multigraph with at least 3 nodes and at most 8 edges.
fn game_graphs() -> Vec<Graph> {
    connected_graphs(9, 8, true)
        .into_iter()
        .filter(|g| g.node_count() >= 3)
        .collect()
}

fn criterion_8() -> Outcome {
    let graphs = game_graphs();
    let mut games = 0;
    let mut missing_forests = 0;
    for g in &graphs {
        let n = g.node_count();
        let mut variants = vec![Variant::Global];
        for s in 0..n {
            for t in s + 1..n {
                variants.push(Variant::St { s, t });
            }
        }
        for variant in variants {
            let mut memo = HashMap::new();
            for first in [Player::Cut, Player::Short] {
                let game = Game::new(g.clone(), variant, first).map_err(|e| e.to_string())?;
                let want = oracle::minimax_memo(&game, &mut memo);
                let a = analyze(g, variant, first).map_err(|e| e.to_string())?;
                ensure!(
                    a.winner == want,
                    "{variant:?} {first:?}: analyze {:?} vs minimax {want:?} on {:?}",
                    a.winner,
                    g.edges()
                );
                if !verify_certificate(g, variant, first, a.winner, &a.certificate)? {
                    missing_forests += 1;
                }
                let engine = Engine::new(&game, a.winner).map_err(|e| e.to_string())?;
                if let Some(line) = oracle::refute_engine(&game, &engine) {
                    return Err(format!(
                        "{variant:?} {first:?}: engine for {:?} loses on {:?} via {line:?}",
                        a.winner,
                        g.edges()
                    ));
                }
                games += 1;
            }
        }
    }
    Ok(format!("{} graphs, {games} (variant, order) games, engine unbeaten, {missing_forests} separating partitions without forest split", graphs.len()))
}

fn criterion_9() -> Outcome {
    let mut r = rng(9);
    let mut small = 0;
    for seed in 0..1000u64 {
        let k = 1 + (seed % 2) as usize;
        let steps = r.gen_range(0..=14);
        let g = gen_pinch_2k(seed, steps, k).value;
        if g.node_count() >= 2 {
            let c = rooted_connectivity(&g.doubled(), 0)
                .map_err(|e| e.to_string())?
                .map_or(usize::MAX, |c| c.value);
            ensure!(
                c >= 2 * k,
                "pinch seed {seed}: edge connectivity {c} < {}",
                2 * k
            );
            if g.node_count() <= 8 {
                ensure!(
                    oracle::edge_connectivity(&g).map_or(true, |c| c >= 2 * k),
                    "pinch seed {seed} fails cut enumeration"
                );
                small += 1;
            }
        }

        let k = 1 + (seed % 3) as usize;
        let d = gen_mader(seed, r.gen_range(0..=12), k).value;
        let c = rooted_connectivity(&d, 0)
            .map_err(|e| e.to_string())?
            .map_or(usize::MAX, |c| c.value);
        ensure!(c >= k, "mader seed {seed}: rooted connectivity {c} < {k}");
        if d.node_count() <= 8 {
            ensure!(
                oracle::min_in_degree(&d, 0).map_or(true, |c| c >= k),
                "mader seed {seed} fails subset check"
            );
            small += 1;
        }

        let (k, l) = [(1, 0), (2, 0), (2, 1), (3, 1), (3, 2)][(seed % 5) as usize];
        let g = gen_kl_pinch(seed, r.gen_range(0..=12), k, l).value;
        ensure!(
            check_partition_connected(&g, k, l)
                .map_err(|e| e.to_string())?
                .holds(),
            "kl-pinch seed {seed} ({k},{l}) fails validator"
        );
        if g.node_count() <= 7 {
            ensure!(
                oracle::partition_connected(&g, k, l),
                "kl-pinch seed {seed} fails partition enumeration"
            );
            small += 1;
        }

        let (k, l) = [(1, 0), (2, 0), (2, 1), (3, 1), (3, 2)][(seed % 5) as usize];
        let d = gen_kv(seed, r.gen_range(0..=12), k, l).value;
        ensure!(
            rooted_kl_violation(&d, 0, k, l)
                .map_err(|e| e.to_string())?
                .is_none(),
            "kv seed {seed} ({k},{l}) fails validator"
        );
        if d.node_count() <= 8 {
            ensure!(
                oracle::rooted_kl_connected(&d, 0, k, l),
                "kv seed {seed} fails subset check"
            );
            small += 1;
        }
    }
    Ok(format!(
        "4 families x 1000 seeds, {small} small outputs cross-checked"
    ))
}

fn doubled_cycle(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 0..n {
        for _ in 0..2 {
            g.add_edge(v, (v + 1) % n).expect("in range");
        }
    }
    g
}

fn criterion_10() -> Outcome {
    let tri = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).map_err(|e| e.to_string())?;
    ensure!(
        !pack_spanning_trees(&tri, 2)
            .map_err(|e| e.to_string())?
            .is_packed(),
        "triangle packs two trees"
    );
    let mut tri_plus = tri.clone();
    tri_plus.add_edge(0, 1).map_err(|e| e.to_string())?;
    ensure!(
        pack_spanning_trees(&tri_plus, 2)
            .map_err(|e| e.to_string())?
            .is_packed(),
        "triangle plus a parallel edge does not pack"
    );
    let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        .map_err(|e| e.to_string())?;
    ensure!(
        pack_spanning_trees(&k4, 2)
            .map_err(|e| e.to_string())?
            .is_packed(),
        "K4 does not pack two trees"
    );
    let mut spot = 0;
    for n in 3..=7 {
        let cycle =
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).map_err(|e| e.to_string())?;
        for g in [doubled_cycle(n), cycle] {
            let ec = oracle::edge_connectivity(&g).unwrap_or(usize::MAX);
            for k in 1..=3 {
                let pc = check_partition_connected(&g, k, k)
                    .map_err(|e| e.to_string())?
                    .holds();
                ensure!(
                    pc == (ec >= 2 * k),
                    "(k,k)-pc vs 2k-ec differ on n={n} k={k}"
                );
                spot += 1;
            }
        }
    }
    for n in [4, 5] {
        let g = doubled_cycle(n);
        let k = 2;
        let m = g.edge_count();
        for a in 0..m {
            for b in a + 1..m {
                let (rest, _) = g.without_edges(&[a, b]);
                ensure!(
                    pack_spanning_trees(&rest, k)
                        .map_err(|e| e.to_string())?
                        .is_packed(),
                    "doubled C{n} minus {{{a},{b}}} not 2-tree-connected"
                );
            }
        }
    }
    Ok(format!(
        "triangle, K4, {spot} cycle spot checks, all 2-edge deletions of doubled C4/C5"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("packing dichotomy", criterion_1),
        ("covering duality", criterion_2),
        ("matroid-sum rank formula", criterion_3),
        ("deficiency and augmentation", criterion_4),
        ("arborescence dichotomy", criterion_5),
        ("orientation soundness", criterion_6),
        ("hypergraph criteria", criterion_7),
        ("game soundness", criterion_8),
        ("generators", criterion_9),
        ("pinned equivalences", criterion_10),
    ];
    let only: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = i + 1;
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {id:>2} {name}: {detail} ({secs:.1}s)"),
            Err(why) => {
                failed += 1;
                println!("FAIL {id:>2} {name}: {why} ({secs:.1}s)");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
