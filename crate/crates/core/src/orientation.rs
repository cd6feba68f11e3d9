//! Orientations of graphs and hypergraphs with rooted connectivity requirements.
//!
//! Arc e of a returned digraph is the orientation of edge e; dyperedge e of a returned
//! dypergraph is the orientation of hyperedge e.

use std::collections::VecDeque;

use crate::arborescence::{
    check_dypergraph_decomposition, rooted_connectivity, DypergraphCheck, PARTITION_CAP,
};
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::forest::{
    check_partition_connected, pack_spanning_trees, PartitionConnectivity, TreePacking,
};
use crate::graph::{for_each_partition, Digraph, Graph, NodeId, Partition};
use crate::hypergraph::{pack_hypertrees, Dypergraph, Hypergraph, HypertreePacking};

/// Node cap for the exhaustive (k, l)-orientation construction.
pub const CONSTRUCTION_CAP: usize = 10;

fn check_root(n: usize, root: NodeId) -> Result<()> {
    if root >= n {
        return Err(Error::NodeOutOfRange { node: root, n });
    }
    Ok(())
}

/// Outcome of [`orient_rooted_k`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootedOrientation {
    Oriented(Digraph),
    /// e_G(P) < k(|P| - 1).
    Deficient {
        partition: Partition,
        cross: usize,
    },
}

/// Orients `tree` (edge ids of `g`) away from `root`: returns head per edge of the tree.
fn orient_tree_away(n: usize, pairs: &[(NodeId, NodeId)], root: NodeId) -> Vec<(NodeId, NodeId)> {
    let mut adj = vec![Vec::new(); n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        adj[u].push((v, i));
        adj[v].push((u, i));
    }
    let mut out = vec![(usize::MAX, usize::MAX); pairs.len()];
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &(v, i) in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                out[i] = (u, v);
                queue.push_back(v);
            }
        }
    }
    out
}

/// Rooted k-arc-connected orientation built from `k` disjoint spanning trees oriented
/// away from the root; remaining edges go from the lower to the higher endpoint.
pub fn orient_rooted_k(g: &Graph, root: NodeId, k: usize) -> Result<RootedOrientation> {
    let n = g.node_count();
    check_root(n, root)?;
    let trees = match pack_spanning_trees(g, k)? {
        TreePacking::Packed { trees } => trees,
        TreePacking::Deficient {
            partition, cross, ..
        } => return Ok(RootedOrientation::Deficient { partition, cross }),
    };
    let mut arcs: Vec<(NodeId, NodeId)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    for tree in &trees {
        let pairs: Vec<(NodeId, NodeId)> = tree.iter().map(|&e| g.edge(e)).collect();
        for (&e, arc) in tree.iter().zip(orient_tree_away(n, &pairs, root)) {
            arcs[e] = arc;
        }
    }
    let d = Digraph::from_arcs(n, arcs)?;
    if let Some(cut) = rooted_connectivity(&d, root)? {
        if cut.value < k {
            return Err(Error::Inconsistent(
                "oriented packing is not rooted k-arc-connected".into(),
            ));
        }
    }
    Ok(RootedOrientation::Oriented(d))
}

/// Set X ⊆ V - root with ρ_D(X) < k or out-degree below l, if any.
pub fn rooted_kl_violation(
    d: &Digraph,
    root: NodeId,
    k: usize,
    l: usize,
) -> Result<Option<Vec<NodeId>>> {
    if let Some(cut) = rooted_connectivity(d, root)? {
        if cut.value < k {
            return Ok(Some(cut.set));
        }
    }
    let reversed = Digraph::from_arcs(d.node_count(), d.arcs().iter().map(|&(u, v)| (v, u)))?;
    if let Some(cut) = rooted_connectivity(&reversed, root)? {
        if cut.value < l {
            return Ok(Some(cut.set));
        }
    }
    Ok(None)
}

/// Outcome of [`check_orientation_kl`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KlOrientation {
    /// An orientation exists; it is attached when construction was requested and the
    /// instance is within [`CONSTRUCTION_CAP`].
    Holds { orientation: Option<Digraph> },
    /// e_G(P) < a(|P| - 1) + b with (a, b) = (k, l), or (l, k) when l > k.
    Violated {
        partition: Partition,
        cross: usize,
        required: usize,
    },
}

fn edge_connectivity_violation(g: &Graph, l: usize) -> Result<Option<(Partition, usize)>> {
    let n = g.node_count();
    if n <= 1 || l == 0 {
        return Ok(None);
    }
    let cut = rooted_connectivity(&g.doubled(), 0)?.expect("at least two nodes");
    if cut.value >= l {
        return Ok(None);
    }
    let mut labels = vec![0; n];
    for &v in &cut.set {
        labels[v] = 1;
    }
    Ok(Some((Partition::from_labels(&labels), cut.value)))
}

fn pc_violation(g: &Graph, a: usize, b: usize) -> Result<Option<(Partition, usize, usize)>> {
    if a == 0 {
        return Ok(edge_connectivity_violation(g, b)?.map(|(p, cross)| (p, cross, b)));
    }
    Ok(match check_partition_connected(g, a, b)? {
        PartitionConnectivity::Holds => None,
        PartitionConnectivity::Violated {
            partition,
            cross,
            required,
            ..
        } => Some((partition, cross, required)),
    })
}

/// Whether G has an orientation with ρ(X) ≥ k and ρ(V - X) ≥ l for all nonempty
/// X ⊆ V - root.
///
/// This is (k, l)-partition-connectivity, together with (l, k)-partition-connectivity
/// when l > k. With `construct`, an orientation is searched for over in-degree vectors
/// (ρ(X) is the in-degree sum over X minus i_G(X)) and realized by a bipartite flow.
pub fn check_orientation_kl(
    g: &Graph,
    root: NodeId,
    k: usize,
    l: usize,
    construct: bool,
) -> Result<KlOrientation> {
    let n = g.node_count();
    check_root(n, root)?;
    let mut pairs = vec![(k, l)];
    if l > k {
        pairs.push((l, k));
    }
    for (a, b) in pairs {
        if let Some((partition, cross, required)) = pc_violation(g, a, b)? {
            return Ok(KlOrientation::Violated {
                partition,
                cross,
                required,
            });
        }
    }
    let orientation = if construct && n <= CONSTRUCTION_CAP {
        let d = search_orientation(g, root, k, l)?.ok_or_else(|| {
            Error::Inconsistent("no orientation found for a partition-connected graph".into())
        })?;
        if rooted_kl_violation(&d, root, k, l)?.is_some() {
            return Err(Error::Inconsistent(
                "constructed orientation fails its cut check".into(),
            ));
        }
        Some(d)
    } else {
        None
    };
    Ok(KlOrientation::Holds { orientation })
}

/// Depth-first search over in-degree vectors meeting every set requirement.
fn search_orientation(g: &Graph, root: NodeId, k: usize, l: usize) -> Result<Option<Digraph>> {
    let n = g.node_count();
    let m = g.edge_count();
    let full = (1usize << n) - 1;
    let mut induced = vec![0usize; 1 << n];
    for mask in 1..=full {
        induced[mask] = g
            .edges()
            .iter()
            .filter(|&&(u, v)| mask >> u & 1 == 1 && mask >> v & 1 == 1)
            .count();
    }
    // smallest in-degree sum a set may carry
    let need = |mask: usize| -> usize {
        if mask == 0 {
            0
        } else if mask == full {
            m
        } else if mask >> root & 1 == 1 {
            induced[mask] + l
        } else {
            induced[mask] + k
        }
    };
    let degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut indeg = vec![0usize; n];
    let mut sums = vec![0usize; 1 << n];
    fn dfs(
        j: usize,
        n: usize,
        m: usize,
        full: usize,
        degree: &[usize],
        need: &dyn Fn(usize) -> usize,
        indeg: &mut [usize],
        sums: &mut [usize],
    ) -> bool {
        if j == n {
            return sums[full] == m;
        }
        let prefix = (1usize << j) - 1;
        for value in 0..=degree[j] {
            indeg[j] = value;
            let mut ok = true;
            // all subsets of the assigned prefix that contain j
            let mut sub = prefix;
            loop {
                let mask = sub | 1 << j;
                sums[mask] = sums[sub] + value;
                let s = sums[mask];
                let rest = full & !mask;
                if s < need(mask) || (rest != 0 && s + need(rest) > m) {
                    ok = false;
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & prefix;
            }
            if ok && dfs(j + 1, n, m, full, degree, need, indeg, sums) {
                return true;
            }
        }
        false
    }
    if n == 0 {
        return Ok(Some(Digraph::new(0)));
    }
    if !dfs(0, n, m, full, &degree, &need, &mut indeg, &mut sums) {
        return Ok(None);
    }
    realize_in_degrees(g, &indeg).map(Some)
}

/// Orientation with the prescribed in-degrees, found by a bipartite flow.
pub fn realize_in_degrees(g: &Graph, indeg: &[usize]) -> Result<Digraph> {
    let n = g.node_count();
    let m = g.edge_count();
    let (source, sink) = (0, 1);
    let mut net = FlowNetwork::new(2 + m + n);
    let mut choice = Vec::with_capacity(m);
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        net.add_arc(source, 2 + e, 1);
        let to_u = net.add_arc(2 + e, 2 + m + u, 1);
        net.add_arc(2 + e, 2 + m + v, 1);
        choice.push(to_u);
    }
    for (v, &d) in indeg.iter().enumerate() {
        net.add_arc(2 + m + v, sink, d as u64);
    }
    if net.max_flow(source, sink) != m as u64 {
        return Err(Error::InvalidInput(
            "in-degree vector is not realizable".into(),
        ));
    }
    let arcs = g.edges().iter().zip(&choice).map(|(&(u, v), &to_u)| {
        if net.flow_on(to_u) == 1 {
            (v, u)
        } else {
            (u, v)
        }
    });
    Digraph::from_arcs(n, arcs)
}

/// Outcome of [`orient_hypergraph_rooted_k`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HyperOrientation {
    Oriented(Dypergraph),
    /// e_H(P) < k(|P| - 1).
    Deficient {
        partition: Partition,
        cross: usize,
    },
}

/// Out-rooted k-arc-connected orientation from `k` disjoint spanning hypertrees: each
/// trimmed tree is oriented away from the root and its hyperedges take the farther
/// endpoint as head; other hyperedges take their lowest node.
pub fn orient_hypergraph_rooted_k(
    h: &Hypergraph,
    root: NodeId,
    k: usize,
) -> Result<HyperOrientation> {
    let n = h.node_count();
    check_root(n, root)?;
    let mut heads: Vec<NodeId> = h.edges().iter().map(|z| z[0]).collect();
    if k > 0 {
        match pack_hypertrees(h, k)? {
            HypertreePacking::Deficient { partition, cross } => {
                return Ok(HyperOrientation::Deficient { partition, cross })
            }
            HypertreePacking::Packed {
                hypertrees,
                trimmings,
            } => {
                for (tree, pairs) in hypertrees.iter().zip(&trimmings) {
                    for (&e, (_, head)) in tree.iter().zip(orient_tree_away(n, pairs, root)) {
                        heads[e] = head;
                    }
                }
            }
        }
    }
    let mut dy = Dypergraph::new(n);
    for (z, &head) in h.edges().iter().zip(&heads) {
        dy.add_edge(z, head)?;
    }
    if check_dypergraph_decomposition(&dy, root, k)? != DypergraphCheck::Holds {
        return Err(Error::Inconsistent(
            "oriented hypertrees are not out-rooted k-arc-connected".into(),
        ));
    }
    Ok(HyperOrientation::Oriented(dy))
}

/// Outcome of [`check_hyper_orientation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HyperOrientationCheck {
    Holds,
    /// e_H(P) < k(|P| - 1) + l.
    CrossDeficient {
        partition: Partition,
        cross: usize,
        required: usize,
    },
    /// Σ_Z (d_P(Z) - 1) < l(|P| - 1) + k.
    WeakDeficient {
        partition: Partition,
        total: usize,
        required: usize,
    },
}

/// Partition conditions for a rooted (k, l)-arc-connected orientation of a hypergraph;
/// the second condition applies only when l > k.
pub fn check_hyper_orientation(
    h: &Hypergraph,
    root: NodeId,
    k: usize,
    l: usize,
) -> Result<HyperOrientationCheck> {
    let n = h.node_count();
    check_root(n, root)?;
    if n > PARTITION_CAP {
        return Err(Error::TooLarge {
            what: "node count",
            actual: n,
            cap: PARTITION_CAP,
        });
    }
    let mut result = HyperOrientationCheck::Holds;
    for_each_partition(n, |labels| {
        let p = Partition::from_labels(labels);
        let q = p.len();
        if q < 2 {
            return true;
        }
        let cross = h.cross_count(&p);
        if cross < k * (q - 1) + l {
            result = HyperOrientationCheck::CrossDeficient {
                required: k * (q - 1) + l,
                partition: p,
                cross,
            };
            return false;
        }
        if l > k {
            let total: usize = h
                .edges()
                .iter()
                .map(|z| {
                    let mut blocks: Vec<usize> = z.iter().map(|&v| labels[v]).collect();
                    blocks.sort_unstable();
                    blocks.dedup();
                    blocks.len() - 1
                })
                .sum();
            if total < l * (q - 1) + k {
                result = HyperOrientationCheck::WeakDeficient {
                    required: l * (q - 1) + k,
                    partition: p,
                    total,
                };
                return false;
            }
        }
        true
    });
    Ok(result)
}

/// Dyperedges entering X and leaving X (entering V - X) for the flagged set.
pub fn dyper_degrees(dy: &Dypergraph, in_set: &[bool]) -> (usize, usize) {
    let complement: Vec<bool> = in_set.iter().map(|&b| !b).collect();
    (dy.in_cut(in_set), dy.in_cut(&complement))
}
