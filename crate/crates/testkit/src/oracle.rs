//! Exhaustive ground truth. Everything here enumerates subsets, partitions or play
//! sequences directly from the definitions and shares no code with the algorithms
//! under test beyond the plain data types.

use std::collections::HashMap;

use arbor_core::game::{Engine, Game, Player};
use arbor_core::graph::{for_each_partition, Digraph, EdgeId, Graph, NodeId, Partition, UnionFind};
use arbor_core::hypergraph::{Dypergraph, Hypergraph};
use arbor_core::matroid::Matroid;

/// Largest node count for partition enumeration.
pub const NODE_CAP: usize = 10;
/// Largest ground set for subset enumeration.
pub const SUBSET_CAP: usize = 16;

fn connected_by(n: usize, edges: impl IntoIterator<Item = (NodeId, NodeId)>) -> UnionFind {
    let mut uf = UnionFind::new(n);
    for (u, v) in edges {
        uf.union(u, v);
    }
    uf
}

fn cross(edges: &[(NodeId, NodeId)], labels: &[usize]) -> usize {
    edges
        .iter()
        .filter(|&&(u, v)| labels[u] != labels[v])
        .count()
}

/// Max over partitions of (k(|P| - 1) - e(P))⁺, with the first partition attaining it
/// (the trivial partition when the maximum is 0).
pub fn max_deficit(g: &Graph, k: usize) -> (usize, Partition) {
    let n = g.node_count();
    assert!(n <= NODE_CAP, "partition oracle capped at {NODE_CAP} nodes");
    let mut best = (0usize, Partition::trivial(n));
    for_each_partition(n, |labels| {
        let blocks = labels.iter().max().map_or(0, |&b| b + 1);
        let want = k * blocks.saturating_sub(1);
        let have = cross(g.edges(), labels);
        if want > have && want - have > best.0 {
            best = (want - have, Partition::from_labels(labels));
        }
        true
    });
    best
}

/// Whether every partition with at least two blocks has ≥ k(|P| - 1) + l cross edges.
pub fn partition_connected(g: &Graph, k: usize, l: usize) -> bool {
    let n = g.node_count();
    assert!(n <= NODE_CAP, "partition oracle capped at {NODE_CAP} nodes");
    let mut ok = true;
    for_each_partition(n, |labels| {
        let blocks = labels.iter().max().map_or(0, |&b| b + 1);
        if blocks >= 2 && cross(g.edges(), labels) < k * (blocks - 1) + l {
            ok = false;
        }
        ok
    });
    ok
}

/// All spanning trees as ascending edge-id lists.
pub fn spanning_trees(g: &Graph) -> Vec<Vec<EdgeId>> {
    let n = g.node_count();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut pick = Vec::new();
    fn rec(
        g: &Graph,
        start: usize,
        need: usize,
        pick: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
    ) {
        if need == 0 {
            if g.is_spanning_tree(pick) {
                out.push(pick.clone());
            }
            return;
        }
        for e in start..g.edge_count() {
            if g.edge_count() - e < need {
                break;
            }
            pick.push(e);
            if g.is_forest(pick) {
                rec(g, e + 1, need - 1, pick, out);
            }
            pick.pop();
        }
    }
    rec(g, 0, n - 1, &mut pick, &mut out);
    out
}

/// k edge-disjoint spanning trees found by search over all spanning trees.
pub fn disjoint_trees(g: &Graph, k: usize) -> Option<Vec<Vec<EdgeId>>> {
    if k == 0 {
        return Some(Vec::new());
    }
    if g.node_count() <= 1 {
        return Some(vec![Vec::new(); k]);
    }
    let trees = spanning_trees(g);
    let mut used = vec![false; g.edge_count()];
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        trees: &[Vec<EdgeId>],
        k: usize,
        start: usize,
        used: &mut [bool],
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == k {
            return true;
        }
        for i in start..trees.len() {
            if trees[i].iter().any(|&e| used[e]) {
                continue;
            }
            for &e in &trees[i] {
                used[e] = true;
            }
            chosen.push(i);
            if rec(trees, k, i + 1, used, chosen) {
                return true;
            }
            chosen.pop();
            for &e in &trees[i] {
                used[e] = false;
            }
        }
        false
    }
    rec(&trees, k, 0, &mut used, &mut chosen)
        .then(|| chosen.iter().map(|&i| trees[i].clone()).collect())
}

fn for_each_subset(n: usize, mut f: impl FnMut(&[bool])) {
    assert!(n <= SUBSET_CAP, "subset oracle capped at {SUBSET_CAP}");
    let mut inside = vec![false; n];
    for mask in 1u64..(1u64 << n) {
        for (i, x) in inside.iter_mut().enumerate() {
            *x = mask >> i & 1 == 1;
        }
        f(&inside);
    }
}

/// A node set X with |X| ≥ 2 and i(X) > k(|X| - 1) - l, if any.
pub fn sparsity_violation(g: &Graph, k: usize, l: usize) -> Option<Vec<NodeId>> {
    let mut found = None;
    for_each_subset(g.node_count(), |inside| {
        let size = inside.iter().filter(|&&x| x).count();
        if found.is_none() && size >= 2 && g.induced_count(inside) + l > k * (size - 1) {
            found = Some((0..inside.len()).filter(|&v| inside[v]).collect());
        }
    });
    found
}

/// max over X with |X| ≥ 2 of ⌈i(X) / (|X| - 1)⌉.
pub fn arboricity(g: &Graph) -> usize {
    let mut best = 0;
    for_each_subset(g.node_count(), |inside| {
        let size = inside.iter().filter(|&&x| x).count();
        if size >= 2 {
            best = best.max(g.induced_count(inside).div_ceil(size - 1));
        }
    });
    best
}

/// min over X ⊆ S of |S - X| + Σ r_i(X).
pub fn union_rank(matroids: &[&dyn Matroid], elements: &[usize]) -> usize {
    let s = elements.len();
    assert!(s <= SUBSET_CAP, "subset oracle capped at {SUBSET_CAP}");
    let mut best = usize::MAX;
    for mask in 0u64..(1u64 << s) {
        let x: Vec<usize> = (0..s)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| elements[i])
            .collect();
        let value = s - x.len() + matroids.iter().map(|m| m.rank(&x)).sum::<usize>();
        best = best.min(value);
    }
    best
}

/// min over nonempty X ⊆ V - root of ρ(X); `None` for a single node.
pub fn min_in_degree(d: &Digraph, root: NodeId) -> Option<usize> {
    let mut best = None;
    for_each_subset(d.node_count(), |inside| {
        if !inside[root] {
            let v = d.in_cut(inside);
            best = Some(best.map_or(v, |b: usize| b.min(v)));
        }
    });
    best
}

/// Rooted (k, l)-arc-connectivity by subsets: ρ(X) ≥ k and δ(X) ≥ l for X ⊆ V - root.
pub fn rooted_kl_connected(d: &Digraph, root: NodeId, k: usize, l: usize) -> bool {
    let mut ok = true;
    for_each_subset(d.node_count(), |inside| {
        if !inside[root] {
            let outside: Vec<bool> = inside.iter().map(|&x| !x).collect();
            if d.in_cut(inside) < k || d.in_cut(&outside) < l {
                ok = false;
            }
        }
    });
    ok
}

/// min over nonempty proper X of d(X); `None` for a single node.
pub fn edge_connectivity(g: &Graph) -> Option<usize> {
    let n = g.node_count();
    let mut best = None;
    for_each_subset(n, |inside| {
        if inside[0] && inside.iter().any(|&x| !x) {
            let v = g.cut_degree(inside);
            best = Some(best.map_or(v, |b: usize| b.min(v)));
        }
    });
    best
}

fn spanning_arborescences_containing(
    d: &Digraph,
    root: NodeId,
    seed: &[EdgeId],
) -> Vec<Vec<EdgeId>> {
    let n = d.node_count();
    let mut fixed: Vec<Option<EdgeId>> = vec![None; n];
    for &a in seed {
        let (_, h) = d.arc(a);
        if h == root || fixed[h].is_some() {
            return Vec::new();
        }
        fixed[h] = Some(a);
    }
    let choices: Vec<Vec<EdgeId>> = (0..n)
        .map(|v| {
            if v == root {
                Vec::new()
            } else if let Some(a) = fixed[v] {
                vec![a]
            } else {
                (0..d.arc_count()).filter(|&a| d.arc(a).1 == v).collect()
            }
        })
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![usize::MAX; n];
    fn rec(
        d: &Digraph,
        root: NodeId,
        v: usize,
        choices: &[Vec<EdgeId>],
        pick: &mut [usize],
        out: &mut Vec<Vec<EdgeId>>,
    ) {
        let n = d.node_count();
        if v == n {
            // every node must reach the root by following parents
            for start in 0..n {
                let mut x = start;
                let mut steps = 0;
                while x != root {
                    x = d.arc(pick[x]).0;
                    steps += 1;
                    if steps > n {
                        return;
                    }
                }
            }
            let mut arcs: Vec<EdgeId> = (0..n).filter(|&u| u != root).map(|u| pick[u]).collect();
            arcs.sort_unstable();
            out.push(arcs);
            return;
        }
        if v == root {
            return rec(d, root, v + 1, choices, pick, out);
        }
        for &a in &choices[v] {
            pick[v] = a;
            rec(d, root, v + 1, choices, pick, out);
        }
    }
    rec(d, root, 0, &choices, &mut pick, &mut out);
    out
}

/// k arc-disjoint spanning arborescences with A_i ⊇ seeds[i], by full search.
pub fn arborescence_completion(
    d: &Digraph,
    root: NodeId,
    seeds: &[Vec<EdgeId>],
) -> Option<Vec<Vec<EdgeId>>> {
    let options: Vec<Vec<Vec<EdgeId>>> = seeds
        .iter()
        .map(|s| spanning_arborescences_containing(d, root, s))
        .collect();
    let mut used = vec![false; d.arc_count()];
    let mut chosen = Vec::new();
    fn rec(options: &[Vec<Vec<EdgeId>>], used: &mut [bool], chosen: &mut Vec<Vec<EdgeId>>) -> bool {
        let i = chosen.len();
        if i == options.len() {
            return true;
        }
        for a in &options[i] {
            if a.iter().any(|&x| used[x]) {
                continue;
            }
            for &x in a {
                used[x] = true;
            }
            chosen.push(a.clone());
            if rec(options, used, chosen) {
                return true;
            }
            chosen.pop();
            for &x in a {
                used[x] = false;
            }
        }
        false
    }
    rec(&options, &mut used, &mut chosen).then_some(chosen)
}

/// An orientation of G that is rooted (k, l)-arc-connected, by trying all 2^m.
pub fn orientation(g: &Graph, root: NodeId, k: usize, l: usize) -> Option<Digraph> {
    let m = g.edge_count();
    assert!(
        m <= SUBSET_CAP,
        "orientation oracle capped at {SUBSET_CAP} edges"
    );
    for mask in 0u64..(1u64 << m) {
        let arcs =
            g.edges()
                .iter()
                .enumerate()
                .map(|(e, &(u, v))| if mask >> e & 1 == 1 { (v, u) } else { (u, v) });
        let d = Digraph::from_arcs(g.node_count(), arcs).expect("same nodes");
        if rooted_kl_connected(&d, root, k, l) {
            return Some(d);
        }
    }
    None
}

/// Lovász condition on a sub-family: every nonempty J spans at least |J| + 1 nodes.
pub fn is_hyperforest(h: &Hypergraph, ids: &[usize]) -> bool {
    let s = ids.len();
    assert!(s <= SUBSET_CAP, "subset oracle capped at {SUBSET_CAP}");
    (1u64..(1u64 << s)).all(|mask| {
        let mut covered = vec![false; h.node_count()];
        let mut count = 0;
        for i in (0..s).filter(|&i| mask >> i & 1 == 1) {
            count += 1;
            for &v in h.edge(ids[i]) {
                covered[v] = true;
            }
        }
        covered.iter().filter(|&&x| x).count() > count
    })
}

/// Largest hyperforest sub-family size.
pub fn hypergraphic_rank(h: &Hypergraph) -> usize {
    let m = h.edge_count();
    assert!(m <= SUBSET_CAP, "subset oracle capped at {SUBSET_CAP}");
    let mut best = 0;
    for mask in 0u64..(1u64 << m) {
        let size = mask.count_ones() as usize;
        if size > best {
            let ids: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
            if is_hyperforest(h, &ids) {
                best = size;
            }
        }
    }
    best
}

/// min over partitions P of |V| - |P| + e_H(P).
pub fn min_partition_rank_bound(h: &Hypergraph) -> usize {
    let n = h.node_count();
    assert!(n <= NODE_CAP, "partition oracle capped at {NODE_CAP} nodes");
    let mut best = usize::MAX;
    for_each_partition(n, |labels| {
        let blocks = labels.iter().max().map_or(0, |&b| b + 1);
        let crossing = h
            .edges()
            .iter()
            .filter(|e| e.iter().any(|&v| labels[v] != labels[e[0]]))
            .count();
        best = best.min(n - blocks + crossing);
        true
    });
    best
}

/// Every partition with at least two blocks is crossed by ≥ k(|P| - 1) + l hyperedges.
pub fn hyper_partition_connected(h: &Hypergraph, k: usize, l: usize) -> bool {
    let n = h.node_count();
    assert!(n <= NODE_CAP, "partition oracle capped at {NODE_CAP} nodes");
    let mut ok = true;
    for_each_partition(n, |labels| {
        let blocks = labels.iter().max().map_or(0, |&b| b + 1);
        let crossing = h
            .edges()
            .iter()
            .filter(|e| e.iter().any(|&v| labels[v] != labels[e[0]]))
            .count();
        if blocks >= 2 && crossing < k * (blocks - 1) + l {
            ok = false;
        }
        ok
    });
    ok
}

/// min over nonempty X ⊆ V - root of the number of dyperedges entering X.
pub fn dyper_min_in_degree(dy: &Dypergraph, root: NodeId) -> Option<usize> {
    let mut best = None;
    for_each_subset(dy.node_count(), |inside| {
        if !inside[root] {
            let v = dy.in_cut(inside);
            best = Some(best.map_or(v, |b: usize| b.min(v)));
        }
    });
    best
}

/// Some U ∋ s, t with G[U] holding two edge-disjoint spanning trees, by subsets.
pub fn terminal_block(g: &Graph, s: NodeId, t: NodeId) -> Option<Vec<NodeId>> {
    let n = g.node_count();
    let mut found = None;
    for_each_subset(n, |inside| {
        if found.is_some() || !inside[s] || !inside[t] {
            return;
        }
        let nodes: Vec<NodeId> = (0..n).filter(|&v| inside[v]).collect();
        let (h, _) = g.induced_subgraph(&nodes);
        if disjoint_trees(&h, 2).is_some() {
            found = Some(nodes);
        }
    });
    found
}

/// Base-3 position key: tags plus whose turn.
fn key(game: &Game) -> u64 {
    let mut code = 0u64;
    for t in game.tags() {
        code = code * 3
            + match t {
                None => 0,
                Some(Player::Short) => 1,
                Some(Player::Cut) => 2,
            };
    }
    code * 2 + (game.to_move() == Player::Short) as u64
}

/// Game winner under perfect play from this position, by full search.
pub fn minimax(game: &Game) -> Player {
    assert!(
        game.graph().edge_count() <= 20,
        "minimax oracle capped at 20 edges"
    );
    minimax_memo(game, &mut HashMap::new())
}

/// As [`minimax`], sharing a table across calls on the same graph and variant.
pub fn minimax_memo(game: &Game, memo: &mut HashMap<u64, Player>) -> Player {
    if let Some(w) = game.winner() {
        return w;
    }
    let k = key(game);
    if let Some(&w) = memo.get(&k) {
        return w;
    }
    let me = game.to_move();
    let mut result = me.other();
    for e in game.untagged() {
        let mut next = game.clone();
        next.play(me, e).expect("legal move");
        if minimax_memo(&next, memo) == me {
            result = me;
            break;
        }
    }
    memo.insert(k, result);
    result
}

/// Plays the engine against every possible opponent line. Returns a move list that
/// ends in the engine losing, if one exists.
pub fn refute_engine(game: &Game, engine: &Engine) -> Option<Vec<(Player, EdgeId)>> {
    if let Some(w) = game.winner() {
        return (w != engine.side()).then(|| game.history().to_vec());
    }
    if game.to_move() == engine.side() {
        let mut engine = engine.clone();
        let mut next = game.clone();
        if engine.respond(&mut next).is_err() {
            return Some(game.history().to_vec());
        }
        return refute_engine(&next, &engine);
    }
    let them = engine.side().other();
    for e in game.untagged() {
        let mut next = game.clone();
        next.play(them, e).expect("legal move");
        if let Some(line) = refute_engine(&next, engine) {
            return Some(line);
        }
    }
    None
}

/// Whether `labels` (one block label per node) separates s and t.
pub fn separates(p: &Partition, s: NodeId, t: NodeId) -> bool {
    p.block_of(s) != p.block_of(t)
}

/// Connectivity of (V, edges) as a union-find, for certificate checks.
pub fn components(n: usize, edges: impl IntoIterator<Item = (NodeId, NodeId)>) -> UnionFind {
    connected_by(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn triangle_deficit_is_one() {
        let (d, p) = max_deficit(&triangle(), 2);
        assert_eq!(d, 1);
        assert_eq!(p.len(), 3);
    }

    #[test]
    fn k4_packs_two_trees() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(spanning_trees(&k4).len(), 16);
        assert!(disjoint_trees(&k4, 2).is_some());
        assert!(disjoint_trees(&k4, 3).is_none());
    }

    #[test]
    fn triangle_game_cut_first_is_cut() {
        let game = Game::new(triangle(), arbor_core::game::Variant::Global, Player::Cut).unwrap();
        assert_eq!(minimax(&game), Player::Cut);
    }

    #[test]
    fn single_hyperedge_rank() {
        let h = Hypergraph::from_edges(3, [vec![0, 1, 2]]).unwrap();
        assert_eq!(hypergraphic_rank(&h), 1);
        assert_eq!(min_partition_rank_bound(&h), 1);
        assert!(!hyper_partition_connected(&h, 1, 0));
    }
}
