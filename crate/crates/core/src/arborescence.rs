//! Rooted connectivity, arborescence packing and the directed covering conditions.

use crate::error::{Error, Result};
use crate::flow::{min_in_cut, FlowNetwork, InCut};
use crate::forest::{decompose_forests, ForestDecomposition};
use crate::graph::{
    for_each_partition, mask_to_set, set_to_nodes, Digraph, EdgeId, Graph, MixedGraph, NodeId,
    Partition,
};
use crate::hypergraph::Dypergraph;

/// Exponential checkers refuse instances with more nodes than this.
pub const SUBSET_CAP: usize = 16;
/// Node cap for checkers that enumerate partitions.
pub const PARTITION_CAP: usize = 12;

fn check_node(n: usize, v: NodeId) -> Result<()> {
    if v >= n {
        return Err(Error::NodeOutOfRange { node: v, n });
    }
    Ok(())
}

/// Minimum of ρ_D(X) over nonempty X ⊆ V - root, with a minimizing set; `None` when
/// the root is the only node.
pub fn rooted_connectivity(d: &Digraph, root: NodeId) -> Result<Option<InCut>> {
    check_node(d.node_count(), root)?;
    let mut best: Option<InCut> = None;
    for t in (0..d.node_count()).filter(|&t| t != root) {
        let cut = min_in_cut(d, root, t);
        if best.as_ref().map_or(true, |b| cut.value < b.value) {
            best = Some(cut);
        }
    }
    Ok(best)
}

/// Whether `arcs` form an arborescence rooted at `root` (not necessarily spanning).
pub fn is_arborescence(d: &Digraph, root: NodeId, arcs: &[EdgeId]) -> bool {
    let n = d.node_count();
    let mut parent = vec![None; n];
    let mut seen = vec![false; d.arc_count()];
    for &a in arcs {
        if a >= d.arc_count() || seen[a] {
            return false;
        }
        seen[a] = true;
        let (u, v) = d.arc(a);
        if v == root || parent[v].is_some() {
            return false;
        }
        parent[v] = Some(u);
    }
    // every head must trace back to the root
    for &a in arcs {
        let mut v = d.arc(a).1;
        let mut steps = 0;
        while v != root {
            match parent[v] {
                Some(u) if steps <= n => {
                    v = u;
                    steps += 1;
                }
                _ => return false,
            }
        }
    }
    true
}

/// Arborescence rooted at `root` reaching every node.
pub fn is_spanning_arborescence(d: &Digraph, root: NodeId, arcs: &[EdgeId]) -> bool {
    arcs.len() + 1 == d.node_count() && is_arborescence(d, root, arcs)
}

/// Outcome of [`pack_arborescences`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArborescencePacking {
    /// Arc-disjoint spanning arborescences, each an ascending list of arc ids.
    Packed { arborescences: Vec<Vec<EdgeId>> },
    /// ρ_{A_0}(X) plus the number of partial arborescences entering X is below k.
    Deficient {
        set: Vec<NodeId>,
        entering: usize,
        seeds_entering: usize,
        required: usize,
    },
}

impl ArborescencePacking {
    pub fn is_packed(&self) -> bool {
        matches!(self, ArborescencePacking::Packed { .. })
    }
}

struct Growth<'a> {
    d: &'a Digraph,
    root: NodeId,
    k: usize,
    used: Vec<bool>,
    trees: Vec<Vec<EdgeId>>,
    covers: Vec<Vec<bool>>,
}

impl Growth<'_> {
    /// Node set violating the extension condition, if any.
    ///
    /// Network: free arcs with capacity 1 and, per partial arborescence i, an extra node
    /// s_i with root → s_i of capacity 1 and s_i → v of capacity k for each covered v.
    /// A cut on sink side X costs ρ_{A_0}(X) plus the number of partial arborescences
    /// meeting X.
    fn violation(&self) -> Option<Vec<NodeId>> {
        let n = self.d.node_count();
        let mut net = FlowNetwork::new(n + self.k);
        for (a, &(u, v)) in self.d.arcs().iter().enumerate() {
            if !self.used[a] {
                net.add_arc(u, v, 1);
            }
        }
        for (i, cover) in self.covers.iter().enumerate() {
            net.add_arc(self.root, n + i, 1);
            for v in (0..n).filter(|&v| v != self.root && cover[v]) {
                net.add_arc(n + i, v, self.k as u64);
            }
        }
        for t in (0..n).filter(|&t| t != self.root) {
            let mut probe = net.clone();
            if probe.max_flow_limited(self.root, t, self.k as u64) < self.k as u64 {
                let side = probe.residual_reaches(t);
                return Some((0..n).filter(|&v| side[v]).collect());
            }
        }
        None
    }

    fn assign(&mut self, i: usize, a: EdgeId) {
        self.used[a] = true;
        self.trees[i].push(a);
        self.covers[i][self.d.arc(a).1] = true;
    }

    fn unassign(&mut self, i: usize, a: EdgeId) {
        self.used[a] = false;
        self.trees[i].pop();
        self.covers[i][self.d.arc(a).1] = false;
    }
}

fn validate_seeds(d: &Digraph, root: NodeId, k: usize, seeds: &[Vec<EdgeId>]) -> Result<()> {
    if seeds.len() != k {
        return Err(Error::InvalidInput(format!(
            "{} seeds given for k = {k}",
            seeds.len()
        )));
    }
    let mut owner = vec![None; d.arc_count()];
    for (i, s) in seeds.iter().enumerate() {
        if let Some(&a) = s.iter().find(|&&a| a >= d.arc_count()) {
            return Err(Error::UnknownEdge(a));
        }
        if !is_arborescence(d, root, s) {
            return Err(Error::InvalidInput(format!(
                "seed {i} is not an arborescence rooted at {root}"
            )));
        }
        for &a in s {
            if let Some(j) = owner[a] {
                return Err(Error::InvalidInput(format!(
                    "arc {a} is shared by seeds {j} and {i}"
                )));
            }
            owner[a] = Some(i);
        }
    }
    Ok(())
}

/// `k` arc-disjoint spanning arborescences rooted at `root`, each extending its seed, or
/// a set X ⊆ V - root violating the extension condition.
///
/// Arborescences grow round-robin, one arc at a time; the lowest-id arc leaving the
/// current tree whose assignment keeps the condition true is taken.
pub fn pack_arborescences(
    d: &Digraph,
    root: NodeId,
    k: usize,
    seeds: Option<&[Vec<EdgeId>]>,
) -> Result<ArborescencePacking> {
    let n = d.node_count();
    check_node(n, root)?;
    let empty = vec![Vec::new(); k];
    let seeds = seeds.unwrap_or(&empty);
    validate_seeds(d, root, k, seeds)?;
    if k == 0 {
        return Ok(ArborescencePacking::Packed {
            arborescences: Vec::new(),
        });
    }
    let mut g = Growth {
        d,
        root,
        k,
        used: vec![false; d.arc_count()],
        trees: Vec::new(),
        covers: Vec::new(),
    };
    for s in seeds {
        let mut cover = vec![false; n];
        cover[root] = true;
        for &a in s {
            g.used[a] = true;
            cover[d.arc(a).1] = true;
        }
        g.trees.push(s.clone());
        g.covers.push(cover);
    }
    if let Some(set) = g.violation() {
        let mut inside = vec![false; n];
        for &v in &set {
            inside[v] = true;
        }
        let entering = d
            .arcs()
            .iter()
            .enumerate()
            .filter(|&(a, &(u, v))| !g.used[a] && inside[v] && !inside[u])
            .count();
        let seeds_entering = g
            .covers
            .iter()
            .filter(|c| set.iter().any(|&v| c[v]))
            .count();
        return Ok(ArborescencePacking::Deficient {
            set,
            entering,
            seeds_entering,
            required: k,
        });
    }
    let mut remaining: usize = g.trees.iter().map(|t| n - 1 - t.len()).sum();
    let mut i = 0;
    while remaining > 0 {
        if g.trees[i].len() + 1 < n {
            let mut grown = false;
            for a in 0..d.arc_count() {
                let (u, v) = d.arc(a);
                if g.used[a] || !g.covers[i][u] || g.covers[i][v] {
                    continue;
                }
                g.assign(i, a);
                if g.violation().is_none() {
                    grown = true;
                    break;
                }
                g.unassign(i, a);
            }
            if !grown {
                return Err(Error::Inconsistent(format!(
                    "arborescence {i} cannot grow although the packing condition holds"
                )));
            }
            remaining -= 1;
        }
        i = (i + 1) % k;
    }
    let arborescences = g
        .trees
        .into_iter()
        .map(|mut t| {
            t.sort_unstable();
            t
        })
        .collect();
    Ok(ArborescencePacking::Packed { arborescences })
}

/// Outcome of [`certify_k_edge_connectivity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeConnectivityCertificate {
    /// Arc ids of the doubled digraph: arcs 2e and 2e + 1 are the two orientations of e.
    Arborescences(Vec<Vec<EdgeId>>),
    /// Node set X (root outside) with d_G(X) < k.
    Cut { set: Vec<NodeId>, degree: usize },
}

/// k-edge-connectivity certified by `k` disjoint arborescences in the doubled digraph.
pub fn certify_k_edge_connectivity(
    g: &Graph,
    k: usize,
    root: NodeId,
) -> Result<EdgeConnectivityCertificate> {
    let d = g.doubled();
    Ok(match pack_arborescences(&d, root, k, None)? {
        ArborescencePacking::Packed { arborescences } => {
            EdgeConnectivityCertificate::Arborescences(arborescences)
        }
        ArborescencePacking::Deficient { set, entering, .. } => EdgeConnectivityCertificate::Cut {
            set,
            degree: entering,
        },
    })
}

/// Outcome of [`check_arborescence_cover`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArborescenceCover {
    Holds,
    /// ρ_D(v) > k.
    InDegree {
        node: NodeId,
        in_degree: usize,
    },
    /// k - ρ_D(X) exceeds the sum of k - ρ_D(v) over heads v of arcs entering X.
    Subset {
        set: Vec<NodeId>,
        lhs: i64,
        rhs: i64,
    },
}

/// Covering of the arcs by `k` spanning arborescences rooted at `root`.
pub fn check_arborescence_cover(d: &Digraph, root: NodeId, k: usize) -> Result<ArborescenceCover> {
    let n = d.node_count();
    check_node(n, root)?;
    if let Some(a) = d.arcs().iter().position(|&(_, h)| h == root) {
        return Err(Error::InvalidInput(format!("arc {a} enters the root")));
    }
    if n > SUBSET_CAP {
        return Err(Error::TooLarge {
            what: "node count",
            actual: n,
            cap: SUBSET_CAP,
        });
    }
    let indeg: Vec<usize> = (0..n).map(|v| d.in_degree(v)).collect();
    if let Some(v) = (0..n).find(|&v| v != root && indeg[v] > k) {
        return Ok(ArborescenceCover::InDegree {
            node: v,
            in_degree: indeg[v],
        });
    }
    let others: Vec<NodeId> = (0..n).filter(|&v| v != root).collect();
    for mask in 1u64..1 << others.len() {
        let mut inside = vec![false; n];
        for (b, &v) in others.iter().enumerate() {
            inside[v] = mask >> b & 1 == 1;
        }
        let mut heads = vec![false; n];
        let mut rho = 0;
        for &(u, v) in d.arcs() {
            if inside[v] && !inside[u] {
                rho += 1;
                heads[v] = true;
            }
        }
        let lhs = k as i64 - rho as i64;
        let rhs: i64 = (0..n)
            .filter(|&v| heads[v])
            .map(|v| k as i64 - indeg[v] as i64)
            .sum();
        if lhs > rhs {
            return Ok(ArborescenceCover::Subset {
                set: set_to_nodes(&inside),
                lhs,
                rhs,
            });
        }
    }
    Ok(ArborescenceCover::Holds)
}

/// Outcome of [`check_branching_cover`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BranchingCover {
    Holds,
    InDegree {
        node: NodeId,
        in_degree: usize,
    },
    /// i_D(X) > k(|X| - 1).
    Dense {
        nodes: Vec<NodeId>,
        induced: usize,
        bound: usize,
    },
}

/// Covering of the arcs by `k` branchings.
pub fn check_branching_cover(d: &Digraph, k: usize) -> Result<BranchingCover> {
    if let Some(v) = (0..d.node_count()).find(|&v| d.in_degree(v) > k) {
        return Ok(BranchingCover::InDegree {
            node: v,
            in_degree: d.in_degree(v),
        });
    }
    Ok(match decompose_forests(&d.underlying(), k, None)? {
        ForestDecomposition::Decomposed { .. } => BranchingCover::Holds,
        ForestDecomposition::Dense {
            nodes,
            induced,
            bound,
        } => BranchingCover::Dense {
            nodes,
            induced,
            bound,
        },
        ForestDecomposition::OverCapacity { .. } => unreachable!("no caps given"),
    })
}

/// Outcome of [`check_mixed_arborescence_packing`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MixedPacking {
    Holds,
    /// e_E(P) < Σ_{i ≥ 1} (k - ρ_A(V_i)); the root block is listed first.
    Violated {
        partition: Vec<Vec<NodeId>>,
        cross: usize,
        required: i64,
    },
}

/// Partition condition for `k` edge-disjoint spanning mixed arborescences.
pub fn check_mixed_arborescence_packing(
    m: &MixedGraph,
    root: NodeId,
    k: usize,
) -> Result<MixedPacking> {
    let n = m.node_count();
    check_node(n, root)?;
    if n > PARTITION_CAP {
        return Err(Error::TooLarge {
            what: "node count",
            actual: n,
            cap: PARTITION_CAP,
        });
    }
    let mut found = None;
    for_each_partition(n, |labels| {
        let p = Partition::from_labels(labels);
        let root_block = p.block_of(root);
        let cross = p.cross_count(&m.edges);
        let mut required = 0i64;
        for (b, block) in p.blocks().iter().enumerate() {
            if b == root_block {
                continue;
            }
            let mut inside = vec![false; n];
            for &v in block {
                inside[v] = true;
            }
            required += k as i64 - m.arcs.in_cut(&inside) as i64;
        }
        if (cross as i64) < required {
            let mut blocks = vec![p.blocks()[root_block].clone()];
            blocks.extend(
                p.blocks()
                    .iter()
                    .enumerate()
                    .filter(|&(b, _)| b != root_block)
                    .map(|(_, x)| x.clone()),
            );
            found = Some(MixedPacking::Violated {
                partition: blocks,
                cross,
                required,
            });
            return false;
        }
        true
    });
    Ok(found.unwrap_or(MixedPacking::Holds))
}

/// Outcome of [`check_dypergraph_decomposition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DypergraphCheck {
    Holds,
    /// Nonempty X ⊆ V - root entered by fewer than k dyperedges.
    Deficient {
        set: Vec<NodeId>,
        in_degree: usize,
    },
}

/// Out-rooted k-arc-connectivity of a dypergraph.
///
/// Each dyperedge (Z, z) becomes a node w with uncapacitated arcs from its tails and a
/// unit arc w → z; a minimum cut then charges exactly the dyperedges entering the sink
/// side, so one flow per target node decides the condition for every size.
pub fn check_dypergraph_decomposition(
    dy: &Dypergraph,
    root: NodeId,
    k: usize,
) -> Result<DypergraphCheck> {
    let n = dy.node_count();
    check_node(n, root)?;
    if k == 0 {
        return Ok(DypergraphCheck::Holds);
    }
    let big = dy.edge_count() as u64 + 1;
    let mut net = FlowNetwork::new(n);
    for (z, head) in dy.edges() {
        let w = net.add_node();
        for &v in z.iter().filter(|&&v| v != *head) {
            net.add_arc(v, w, big);
        }
        net.add_arc(w, *head, 1);
    }
    for t in (0..n).filter(|&t| t != root) {
        let mut probe = net.clone();
        if probe.max_flow_limited(root, t, k as u64) < k as u64 {
            let side = probe.residual_reaches(t);
            let inside: Vec<bool> = (0..n).map(|v| side[v]).collect();
            return Ok(DypergraphCheck::Deficient {
                set: set_to_nodes(&inside),
                in_degree: dy.in_cut(&inside),
            });
        }
    }
    Ok(DypergraphCheck::Holds)
}

/// Minimum of ρ(X) over nonempty X ⊆ V - root by enumeration.
pub fn dypergraph_min_in_degree_by_subsets(dy: &Dypergraph, root: NodeId) -> Result<Option<usize>> {
    let n = dy.node_count();
    check_node(n, root)?;
    if n > SUBSET_CAP {
        return Err(Error::TooLarge {
            what: "node count",
            actual: n,
            cap: SUBSET_CAP,
        });
    }
    Ok((1u64..1 << n)
        .filter(|&mask| mask >> root & 1 == 0)
        .map(|mask| dy.in_cut(&mask_to_set(mask, n)))
        .min())
}
