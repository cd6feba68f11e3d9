//! Spanning-tree packing, forest covering and the counts built on them.
//!
//! Everything here is a thin layer over [`crate::matroid`]: k copies of the cycle matroid
//! are united, and the union certificate X is turned into a node partition (components
//! of `(V, X)`) or a dense node set.

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, NodeId, Partition};
use crate::matroid::{
    copies, matroid_union, max_base_packable_set, GraphicMatroid, Matroid, Minor, Restriction,
    Truncation, UnionOutcome,
};

/// Outcome of [`pack_spanning_trees`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreePacking {
    /// `k` edge-disjoint spanning trees, each an ascending list of edge ids.
    Packed { trees: Vec<Vec<EdgeId>> },
    /// A partition with fewer than k(|P| - 1) cross edges.
    Deficient {
        partition: Partition,
        cross: usize,
        deficit: usize,
    },
}

impl TreePacking {
    pub fn is_packed(&self) -> bool {
        matches!(self, TreePacking::Packed { .. })
    }
}

fn graphic_union(g: &Graph, k: usize) -> Result<UnionOutcome> {
    let m = GraphicMatroid::new(g);
    let all: Vec<usize> = (0..g.edge_count()).collect();
    matroid_union(&copies(&m, k), &all)
}

/// Partition whose blocks are the components of `(V, edges)`.
pub fn components_partition(g: &Graph, edges: &[EdgeId]) -> Partition {
    Partition::from_labels(&g.component_labels(edges.iter().copied()))
}

fn deficient(g: &Graph, k: usize, partition: Partition) -> TreePacking {
    let cross = partition.cross_count(g);
    let deficit = (k * (partition.len() - 1)).saturating_sub(cross);
    TreePacking::Deficient {
        partition,
        cross,
        deficit,
    }
}

/// `k` edge-disjoint spanning trees, or a partition P with e_G(P) < k(|P| - 1).
pub fn pack_spanning_trees(g: &Graph, k: usize) -> Result<TreePacking> {
    if k == 0 {
        return Ok(TreePacking::Packed { trees: Vec::new() });
    }
    let n = g.node_count();
    let outcome = graphic_union(g, k)?;
    if outcome.rank == k * n.saturating_sub(1) {
        return Ok(TreePacking::Packed {
            trees: outcome.labeling.classes(),
        });
    }
    let partition = components_partition(g, &outcome.certificate);
    let result = deficient(g, k, partition);
    debug_assert!(matches!(result, TreePacking::Deficient { deficit, .. } if deficit > 0));
    Ok(result)
}

/// Removal condition |F| ≥ k(q(G, F) - 1), q counting components of `(V, E - F)`.
pub fn verify_tutte_condition(g: &Graph, removed: &[EdgeId], k: usize) -> bool {
    let mut gone = vec![false; g.edge_count()];
    for &e in removed {
        gone[e] = true;
    }
    let q = g.component_count((0..g.edge_count()).filter(|&e| !gone[e]));
    removed.len() >= k * (q - 1)
}

/// Outcome of [`decompose_forests`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForestDecomposition {
    Decomposed {
        forests: Vec<Vec<EdgeId>>,
    },
    /// Node set X with i_G(X) > k(|X| - 1).
    Dense {
        nodes: Vec<NodeId>,
        induced: usize,
        bound: usize,
    },
    /// With size caps: an edge set X with |X| > Σ_i min(g_i, r(X)).
    OverCapacity {
        edges: Vec<EdgeId>,
        size: usize,
        capacity: usize,
    },
}

/// Component C of `(V, edges)` (edge ids of `host`) with i_G(C) > k(|C| - 1) - l.
fn dense_component(
    g: &Graph,
    host: &Graph,
    edges: &[EdgeId],
    k: usize,
    l: usize,
) -> Option<(Vec<NodeId>, usize)> {
    let p = components_partition(host, edges);
    p.blocks().iter().find_map(|block| {
        if block.len() < 2 {
            return None;
        }
        let mut inside = vec![false; g.node_count()];
        for &v in block {
            inside[v] = true;
        }
        let induced = g.induced_count(&inside);
        (induced + l > k * (block.len() - 1)).then(|| (block.clone(), induced))
    })
}

/// Partition of E into `k` forests (of sizes at most `caps[i]` when given), or a
/// violated counting condition.
pub fn decompose_forests(
    g: &Graph,
    k: usize,
    caps: Option<&[usize]>,
) -> Result<ForestDecomposition> {
    let m = g.edge_count();
    let all: Vec<usize> = (0..m).collect();
    let graphic = GraphicMatroid::new(g);
    match caps {
        None => {
            let outcome = matroid_union(&copies(&graphic, k), &all)?;
            if outcome.rank == m {
                return Ok(ForestDecomposition::Decomposed {
                    forests: outcome.labeling.classes(),
                });
            }
            let (nodes, induced) = dense_component(g, g, &outcome.certificate, k, 0)
                .expect("union certificate spans a dense component");
            Ok(ForestDecomposition::Dense {
                bound: k * (nodes.len() - 1),
                nodes,
                induced,
            })
        }
        Some(caps) => {
            if caps.len() != k {
                return Err(Error::InvalidInput(format!(
                    "{} caps given for {k} forests",
                    caps.len()
                )));
            }
            let truncated: Vec<Truncation<&GraphicMatroid>> = caps
                .iter()
                .map(|&cap| Truncation {
                    inner: &graphic,
                    cap,
                })
                .collect();
            let refs: Vec<&dyn Matroid> = truncated.iter().map(|t| t as &dyn Matroid).collect();
            let outcome = matroid_union(&refs, &all)?;
            if outcome.rank == m {
                return Ok(ForestDecomposition::Decomposed {
                    forests: outcome.labeling.classes(),
                });
            }
            let edges = outcome.certificate;
            let capacity = refs.iter().map(|t| t.rank(&edges)).sum();
            Ok(ForestDecomposition::OverCapacity {
                size: edges.len(),
                edges,
                capacity,
            })
        }
    }
}

/// Forest partition with every forest size inside `[lower[i], upper[i]]`, or `None`.
///
/// Starts from a decomposition respecting the upper bounds and then moves one unit of
/// size at a time from a class above its lower bound to a class below it, re-solving
/// the capped union for the new size vector. Achievable size vectors of a matroid
/// partition form an M-convex set, so when some in-box vector exists one of these
/// moves always succeeds.
pub fn decompose_forests_bounded(
    g: &Graph,
    lower: &[usize],
    upper: &[usize],
) -> Result<Option<Vec<Vec<EdgeId>>>> {
    let k = upper.len();
    if lower.len() != k {
        return Err(Error::InvalidInput(
            "lower and upper bounds differ in length".into(),
        ));
    }
    if lower.iter().zip(upper).any(|(f, c)| f > c) {
        return Ok(None);
    }
    let mut forests = match decompose_forests(g, k, Some(upper))? {
        ForestDecomposition::Decomposed { forests } => forests,
        _ => return Ok(None),
    };
    loop {
        let sizes: Vec<usize> = forests.iter().map(Vec::len).collect();
        let Some(short) = (0..k).find(|&i| sizes[i] < lower[i]) else {
            return Ok(Some(forests));
        };
        let mut moved = false;
        for donor in (0..k).filter(|&j| sizes[j] > lower[j]) {
            let mut target = sizes.clone();
            target[short] += 1;
            target[donor] -= 1;
            if let ForestDecomposition::Decomposed { forests: next } =
                decompose_forests(g, k, Some(&target))?
            {
                forests = next;
                moved = true;
                break;
            }
        }
        if !moved {
            return Ok(None);
        }
    }
}

/// Least k such that E splits into k forests, with such a split.
pub fn arboricity(g: &Graph) -> Result<(usize, Vec<Vec<EdgeId>>)> {
    let (n, m) = (g.node_count(), g.edge_count());
    if m == 0 {
        return Ok((0, Vec::new()));
    }
    let mut k = m.div_ceil(n - 1);
    loop {
        if let ForestDecomposition::Decomposed { forests } = decompose_forests(g, k, None)? {
            return Ok((k, forests));
        }
        k += 1;
    }
}

/// Π_k(G) together with a partition of maximum k-deficit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deficiency {
    pub value: usize,
    pub partition: Partition,
}

/// Largest k-deficit over all partitions, read from the k-fold graphic union rank.
pub fn partition_deficiency(g: &Graph, k: usize) -> Result<Deficiency> {
    let n = g.node_count();
    if k == 0 || n <= 1 {
        return Ok(Deficiency {
            value: 0,
            partition: Partition::trivial(n),
        });
    }
    let outcome = graphic_union(g, k)?;
    let value = k * (n - 1) - outcome.rank;
    if value == 0 {
        return Ok(Deficiency {
            value,
            partition: Partition::trivial(n),
        });
    }
    let partition = components_partition(g, &outcome.certificate);
    debug_assert_eq!(partition.deficit(g, k), value as i64);
    Ok(Deficiency { value, partition })
}

/// Where the new edges of an augmentation are placed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AugmentMode {
    /// Every new edge is incident to node 0.
    Star,
    /// Every new edge is parallel to an edge of a fixed spanning tree, chosen to
    /// extend a spanning forest of G.
    Parallel,
}

/// Outcome of [`augment_to_k_tree_connected`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Augmentation {
    Added {
        edges: Vec<(NodeId, NodeId)>,
    },
    Infeasible {
        needed: usize,
        budget: usize,
        partition: Partition,
    },
}

/// Template tree whose parallel copies are offered as new edges.
fn template_tree(g: &Graph, mode: AugmentMode) -> Vec<(NodeId, NodeId)> {
    let n = g.node_count();
    match mode {
        AugmentMode::Star => (1..n).map(|v| (0, v)).collect(),
        AugmentMode::Parallel => {
            let mut uf = crate::graph::UnionFind::new(n);
            let mut tree = Vec::new();
            for &(u, v) in g.edges() {
                if uf.union(u, v) {
                    tree.push((u, v));
                }
            }
            // join the remaining components through their smallest nodes
            for v in 1..n {
                if uf.union(0, v) {
                    tree.push((0, v));
                }
            }
            tree
        }
    }
}

/// Exactly Π_k(G) new edges whose addition makes G k-tree-connected.
///
/// The union of k copies of the cycle matroid is taken over E plus k parallel copies of
/// every template-tree edge, original edges first. Those copies alone hold k disjoint
/// spanning trees, so the greedy union reaches rank k(n - 1), and the inserted copies
/// number exactly k(n - 1) minus the union rank of E.
pub fn augment_to_k_tree_connected(
    g: &Graph,
    k: usize,
    budget: Option<usize>,
    mode: AugmentMode,
) -> Result<Augmentation> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::InvalidInput(
            "augmentation needs at least one node".into(),
        ));
    }
    let deficiency = partition_deficiency(g, k)?;
    if let Some(h) = budget {
        if h < deficiency.value {
            return Ok(Augmentation::Infeasible {
                needed: deficiency.value,
                budget: h,
                partition: deficiency.partition,
            });
        }
    }
    if deficiency.value == 0 {
        return Ok(Augmentation::Added { edges: Vec::new() });
    }
    let template = template_tree(g, mode);
    let mut extended = g.clone();
    for _ in 0..k {
        for &(u, v) in &template {
            extended.add_edge(u, v)?;
        }
    }
    let matroid = GraphicMatroid::new(&extended);
    let order: Vec<usize> = (0..extended.edge_count()).collect();
    let outcome = matroid_union(&copies(&matroid, k), &order)?;
    if outcome.rank != k * (n - 1) {
        return Err(Error::NotAMatroid(
            "augmented union did not reach full rank".into(),
        ));
    }
    let edges: Vec<(NodeId, NodeId)> = (g.edge_count()..extended.edge_count())
        .filter(|&e| outcome.labeling.part(e).is_some())
        .map(|e| extended.edge(e))
        .collect();
    debug_assert_eq!(edges.len(), deficiency.value);
    Ok(Augmentation::Added { edges })
}

/// Whether [`extend_forests`] asks for spanning trees or for a cover of E.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtendMode {
    Pack,
    Cover,
}

/// Outcome of [`extend_forests`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extension {
    /// Pack: spanning trees T_i with F_i ⊆ T_i ⊆ E_i. Cover: forests F_i ⊆ T_i ⊆ E_i
    /// partitioning E.
    Extended { forests: Vec<Vec<EdgeId>> },
    /// Pack only: E_i does not connect the graph.
    NotSpanning { class: usize },
    /// Pack: free edges X with |X| < Σ_i (n - 1 - |F_i| - r_i(E' - X)), E' the free edges.
    /// Cover: remaining edges X with |X| > Σ_i r_i(X).
    Violated {
        edges: Vec<EdgeId>,
        size: usize,
        bound: usize,
    },
}

/// Extends the given disjoint forests inside the allowed edge sets.
///
/// Class i uses the cycle matroid restricted to E_i and contracted by F_i, on the edges
/// not already used by any F_j.
pub fn extend_forests(
    g: &Graph,
    given: &[Vec<EdgeId>],
    allowed: &[Vec<EdgeId>],
    mode: ExtendMode,
) -> Result<Extension> {
    let k = given.len();
    if allowed.len() != k {
        return Err(Error::InvalidInput(format!(
            "{k} forests but {} allowed sets",
            allowed.len()
        )));
    }
    let m = g.edge_count();
    let mut used = vec![false; m];
    for (i, (f, e)) in given.iter().zip(allowed).enumerate() {
        let mut in_allowed = vec![false; m];
        for &x in e {
            if x >= m {
                return Err(Error::UnknownEdge(x));
            }
            in_allowed[x] = true;
        }
        for &x in f {
            if x >= m {
                return Err(Error::UnknownEdge(x));
            }
            if !in_allowed[x] {
                return Err(Error::InvalidInput(format!(
                    "edge {x} of forest {i} is not allowed for it"
                )));
            }
            if used[x] {
                return Err(Error::InvalidInput(format!(
                    "edge {x} appears in two given forests"
                )));
            }
            used[x] = true;
        }
        if !g.is_forest(f) {
            return Err(Error::InvalidInput(format!(
                "given set {i} is not a forest"
            )));
        }
    }
    let graphic = GraphicMatroid::new(g);
    let minors: Vec<Minor<Restriction<&GraphicMatroid>>> = given
        .iter()
        .zip(allowed)
        .map(|(f, e)| Minor::contraction(Restriction::new(&graphic, e), f))
        .collect();
    let refs: Vec<&dyn Matroid> = minors.iter().map(|x| x as &dyn Matroid).collect();
    let free: Vec<usize> = (0..m).filter(|&e| !used[e]).collect();
    let outcome = matroid_union(&refs, &free)?;
    let merge = |outcome: &UnionOutcome| -> Vec<Vec<EdgeId>> {
        let mut forests = outcome.labeling.classes();
        for (forest, f) in forests.iter_mut().zip(given) {
            forest.extend_from_slice(f);
            forest.sort_unstable();
        }
        forests
    };
    match mode {
        ExtendMode::Pack => {
            let n = g.node_count();
            for (i, e) in allowed.iter().enumerate() {
                if graphic.rank(e) + 1 < n {
                    return Ok(Extension::NotSpanning { class: i });
                }
            }
            let target: usize = given.iter().map(|f| n - 1 - f.len()).sum();
            if outcome.rank == target {
                return Ok(Extension::Extended {
                    forests: merge(&outcome),
                });
            }
            // X = free edges outside the union certificate; Σ t_i(X) > |X|
            let mut inside = vec![false; m];
            for &e in &outcome.certificate {
                inside[e] = true;
            }
            let edges: Vec<EdgeId> = free.iter().copied().filter(|&e| !inside[e]).collect();
            let rest: Vec<EdgeId> = free.iter().copied().filter(|&e| inside[e]).collect();
            let bound = refs
                .iter()
                .zip(given)
                .map(|(r, f)| n - 1 - f.len() - r.rank(&rest))
                .sum();
            Ok(Extension::Violated {
                size: edges.len(),
                edges,
                bound,
            })
        }
        ExtendMode::Cover => {
            if outcome.rank == free.len() {
                return Ok(Extension::Extended {
                    forests: merge(&outcome),
                });
            }
            let edges = outcome.certificate;
            let bound = refs.iter().map(|r| r.rank(&edges)).sum();
            Ok(Extension::Violated {
                size: edges.len(),
                edges,
                bound,
            })
        }
    }
}

/// Outcome of [`check_partition_connected`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionConnectivity {
    Holds,
    /// e_G(P) < k(|P| - 1) + l; `deleted` is the edge set whose removal exposed it.
    Violated {
        partition: Partition,
        cross: usize,
        required: usize,
        deleted: Vec<EdgeId>,
    },
}

impl PartitionConnectivity {
    pub fn holds(&self) -> bool {
        matches!(self, PartitionConnectivity::Holds)
    }
}

fn for_each_subset(items: &[usize], size: usize, mut f: impl FnMut(&[usize]) -> bool) {
    fn rec(
        items: &[usize],
        start: usize,
        size: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        for i in start..items.len() {
            if items.len() - i < size - cur.len() {
                break;
            }
            cur.push(items[i]);
            let go = rec(items, i + 1, size, cur, f);
            cur.pop();
            if !go {
                return false;
            }
        }
        true
    }
    rec(items, 0, size, &mut Vec::new(), &mut f);
}

/// (k, l)-partition-connectivity: e_G(P) ≥ k(|P| - 1) + l for every partition with at
/// least two blocks.
///
/// Decided through the deletion form: G is (k, l)-partition-connected iff it stays
/// k-tree-connected after deleting any l edges. When l ≤ k it suffices to delete
/// l-subsets of one fixed packing; otherwise all l-subsets of E are tried, which is
/// exponential in l.
pub fn check_partition_connected(g: &Graph, k: usize, l: usize) -> Result<PartitionConnectivity> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let n = g.node_count();
    if n <= 1 {
        return Ok(PartitionConnectivity::Holds);
    }
    let violated = |partition: Partition, deleted: Vec<EdgeId>| PartitionConnectivity::Violated {
        cross: partition.cross_count(g),
        required: k * (partition.len() - 1) + l,
        partition,
        deleted,
    };
    let trees = match pack_spanning_trees(g, k)? {
        TreePacking::Deficient { partition, .. } => return Ok(violated(partition, Vec::new())),
        TreePacking::Packed { trees } => trees,
    };
    if l == 0 {
        return Ok(PartitionConnectivity::Holds);
    }
    let mut pool: Vec<EdgeId> = trees.concat();
    pool.sort_unstable();
    let (pool, size) = if l <= k && pool.len() >= l {
        (pool, l)
    } else {
        ((0..g.edge_count()).collect(), l.min(g.edge_count()))
    };
    let mut found = None;
    let mut err = None;
    for_each_subset(&pool, size, |subset| {
        let (rest, _) = g.without_edges(subset);
        match pack_spanning_trees(&rest, k) {
            Ok(TreePacking::Packed { .. }) => true,
            Ok(TreePacking::Deficient { partition, .. }) => {
                found = Some((partition, subset.to_vec()));
                false
            }
            Err(e) => {
                err = Some(e);
                false
            }
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(match found {
        Some((partition, deleted)) => violated(partition, deleted),
        None => PartitionConnectivity::Holds,
    })
}

/// Outcome of the sparsity and tightness checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sparsity {
    Holds,
    /// i_G(X) > k(|X| - 1) - l.
    Dense {
        nodes: Vec<NodeId>,
        induced: usize,
        bound: usize,
    },
    /// Sparse but |E| ≠ k(n - 1) - l.
    WrongCount {
        edges: usize,
        required: i64,
    },
}

impl Sparsity {
    pub fn holds(&self) -> bool {
        matches!(self, Sparsity::Holds)
    }
}

/// (k, l)-forest-sparsity: i_G(X) ≤ k(|X| - 1) - l for every X with |X| ≥ 2.
///
/// For each distinct edge pair uv, G plus l extra parallel copies of uv must split into
/// k forests; a violating set induces an edge, so some probe catches it.
pub fn check_forest_sparse(g: &Graph, k: usize, l: usize) -> Result<Sparsity> {
    if k == 0 || l >= k {
        return Err(Error::InvalidInput(format!(
            "sparsity needs 0 <= l < k, got k = {k}, l = {l}"
        )));
    }
    let dense = |nodes: Vec<NodeId>, induced: usize| Sparsity::Dense {
        bound: k * (nodes.len() - 1) - l,
        nodes,
        induced,
    };
    if l == 0 {
        return Ok(match decompose_forests(g, k, None)? {
            ForestDecomposition::Decomposed { .. } => Sparsity::Holds,
            ForestDecomposition::Dense { nodes, induced, .. } => dense(nodes, induced),
            ForestDecomposition::OverCapacity { .. } => unreachable!("no caps given"),
        });
    }
    let mut pairs: Vec<(NodeId, NodeId)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    for (u, v) in pairs {
        let mut probe = g.clone();
        for _ in 0..l {
            probe.add_edge(u, v)?;
        }
        let outcome = graphic_union(&probe, k)?;
        if outcome.rank < probe.edge_count() {
            let (nodes, induced) = dense_component(g, &probe, &outcome.certificate, k, l)
                .expect("probe certificate contains a violating component");
            return Ok(dense(nodes, induced));
        }
    }
    Ok(Sparsity::Holds)
}

/// Sparse with exactly k(n - 1) - l edges.
pub fn check_forest_tight(g: &Graph, k: usize, l: usize) -> Result<Sparsity> {
    let sparse = check_forest_sparse(g, k, l)?;
    if !sparse.holds() {
        return Ok(sparse);
    }
    let required = (k * g.node_count().saturating_sub(1)) as i64 - l as i64;
    if g.edge_count() as i64 != required {
        return Ok(Sparsity::WrongCount {
            edges: g.edge_count(),
            required,
        });
    }
    Ok(Sparsity::Holds)
}

/// Generic minimal rigidity in the plane: (2, 1)-forest-tight.
pub fn check_laman(g: &Graph) -> Result<Sparsity> {
    check_forest_tight(g, 2, 1)
}

/// Rigid body-bar realizability in dimension d: d(d+1)/2 disjoint spanning trees.
pub fn check_body_bar(g: &Graph, d: usize) -> Result<TreePacking> {
    if d == 0 {
        return Err(Error::InvalidInput("dimension must be at least 1".into()));
    }
    pack_spanning_trees(g, d * (d + 1) / 2)
}

/// e_G(P) ≥ k(|P| - 1) + 1 for every partition.
pub fn check_highly_tree_connected(g: &Graph, k: usize) -> Result<PartitionConnectivity> {
    check_partition_connected(g, k, 1)
}

/// Blocks are the maximal node sets inducing k-tree-connected subgraphs (singletons
/// included). This is the coarsest partition of maximum k-deficit.
///
/// Computed as the components of the largest edge set that contains k disjoint bases of
/// its own cycle matroid.
pub fn maximal_tree_connected_blocks(g: &Graph, k: usize) -> Result<Partition> {
    let n = g.node_count();
    if k == 0 {
        return Ok(Partition::trivial(n));
    }
    let graphic = GraphicMatroid::new(g);
    let all: Vec<usize> = (0..g.edge_count()).collect();
    let (core, _) = max_base_packable_set(&graphic, k, &all)?;
    Ok(components_partition(g, &core))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn k4() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn doubled_cycle(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n).unwrap();
            g.add_edge(v, (v + 1) % n).unwrap();
        }
        g
    }

    fn assert_packing(g: &Graph, trees: &[Vec<EdgeId>]) {
        let mut used = vec![false; g.edge_count()];
        for t in trees {
            assert!(g.is_spanning_tree(t), "{t:?} is not a spanning tree");
            for &e in t {
                assert!(!used[e]);
                used[e] = true;
            }
        }
    }

    #[test]
    fn triangle_is_not_two_tree_connected() {
        match pack_spanning_trees(&triangle(), 2).unwrap() {
            TreePacking::Deficient {
                partition,
                cross,
                deficit,
            } => {
                assert_eq!(partition, Partition::singletons(3));
                assert_eq!((cross, deficit), (3, 1));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn single_node_packs_empty_trees() {
        match pack_spanning_trees(&Graph::new(1), 5).unwrap() {
            TreePacking::Packed { trees } => assert_eq!(trees, vec![Vec::<usize>::new(); 5]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn k4_packs_two_trees() {
        match pack_spanning_trees(&k4(), 2).unwrap() {
            TreePacking::Packed { trees } => {
                assert_eq!(trees.len(), 2);
                assert_packing(&k4(), &trees);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zero_trees_and_disconnected_graphs() {
        assert_eq!(
            pack_spanning_trees(&triangle(), 0).unwrap(),
            TreePacking::Packed { trees: vec![] }
        );
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!pack_spanning_trees(&g, 1).unwrap().is_packed());
    }

    #[test]
    fn tutte_condition_examples() {
        let t = triangle();
        assert!(verify_tutte_condition(&t, &[], 5));
        assert!(!verify_tutte_condition(&t, &[0, 1, 2], 2));
        let g = k4();
        for mask in 0u32..64 {
            let f: Vec<usize> = (0..6).filter(|&e| mask >> e & 1 == 1).collect();
            assert!(verify_tutte_condition(&g, &f, 2), "{f:?}");
        }
    }

    #[test]
    fn forest_decomposition_examples() {
        match decompose_forests(&triangle(), 2, None).unwrap() {
            ForestDecomposition::Decomposed { forests } => {
                assert_eq!(forests.iter().map(Vec::len).sum::<usize>(), 3);
                assert!(forests.iter().all(|f| triangle().is_forest(f)));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            decompose_forests(&triangle(), 1, None).unwrap(),
            ForestDecomposition::Dense {
                nodes: vec![0, 1, 2],
                induced: 3,
                bound: 2
            }
        );
        match decompose_forests(&k4(), 2, Some(&[3, 3])).unwrap() {
            ForestDecomposition::Decomposed { forests } => assert_packing(&k4(), &forests),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            decompose_forests(&k4(), 2, Some(&[3, 2])).unwrap(),
            ForestDecomposition::OverCapacity {
                size: 6,
                capacity: 5,
                ..
            }
        ));
    }

    #[test]
    fn arboricity_examples() {
        assert_eq!(arboricity(&Graph::new(4)).unwrap().0, 0);
        assert_eq!(arboricity(&triangle()).unwrap().0, 2);
        assert_eq!(arboricity(&k4()).unwrap().0, 2);
    }

    #[test]
    fn deficiency_examples() {
        let d = partition_deficiency(&k4(), 2).unwrap();
        assert_eq!(
            d,
            Deficiency {
                value: 0,
                partition: Partition::trivial(4)
            }
        );
        let d = partition_deficiency(&triangle(), 2).unwrap();
        assert_eq!(
            d,
            Deficiency {
                value: 1,
                partition: Partition::singletons(3)
            }
        );
        let path = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        for k in 2..5 {
            let d = partition_deficiency(&path, k).unwrap();
            assert_eq!(d.value, (k - 1) * 4);
            assert_eq!(d.partition, Partition::singletons(5));
        }
    }

    #[test]
    fn augmentation_examples() {
        for mode in [AugmentMode::Star, AugmentMode::Parallel] {
            match augment_to_k_tree_connected(&triangle(), 2, None, mode).unwrap() {
                Augmentation::Added { edges } => {
                    assert_eq!(edges.len(), 1);
                    let mut g = triangle();
                    for (u, v) in edges {
                        if mode == AugmentMode::Star {
                            assert!(u == 0 || v == 0);
                        }
                        g.add_edge(u, v).unwrap();
                    }
                    assert!(pack_spanning_trees(&g, 2).unwrap().is_packed());
                }
                other => panic!("{other:?}"),
            }
        }
        assert_eq!(
            augment_to_k_tree_connected(&k4(), 2, Some(0), AugmentMode::Star).unwrap(),
            Augmentation::Added { edges: vec![] }
        );
        assert_eq!(
            augment_to_k_tree_connected(&triangle(), 2, Some(0), AugmentMode::Star).unwrap(),
            Augmentation::Infeasible {
                needed: 1,
                budget: 0,
                partition: Partition::singletons(3)
            }
        );
    }

    #[test]
    fn augmentation_of_edgeless_graph_needs_parallel_copies() {
        let g = Graph::new(3);
        match augment_to_k_tree_connected(&g, 3, None, AugmentMode::Parallel).unwrap() {
            Augmentation::Added { edges } => assert_eq!(edges.len(), 6),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn extension_examples() {
        let g = k4();
        // 01 = 0, 23 = 5
        match extend_forests(
            &g,
            &[vec![0, 5], vec![]],
            &[(0..6).collect(), (0..6).collect()],
            ExtendMode::Pack,
        )
        .unwrap()
        {
            Extension::Extended { forests } => {
                assert_packing(&g, &forests);
                assert!(forests[0].contains(&0) && forests[0].contains(&5));
            }
            other => panic!("{other:?}"),
        }
        let t = triangle();
        assert_eq!(
            extend_forests(
                &t,
                &[vec![], vec![]],
                &[vec![0], vec![0, 1, 2]],
                ExtendMode::Pack
            )
            .unwrap(),
            Extension::NotSpanning { class: 0 }
        );
        assert!(matches!(
            extend_forests(&t, &[vec![0, 1, 2]], &[vec![0, 1, 2]], ExtendMode::Cover),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            extend_forests(&t, &[vec![0]], &[vec![1, 2]], ExtendMode::Cover),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn extension_degenerates_to_plain_packing() {
        let g = k4();
        let all: Vec<usize> = (0..6).collect();
        let ext = extend_forests(
            &g,
            &[vec![], vec![]],
            &[all.clone(), all.clone()],
            ExtendMode::Pack,
        )
        .unwrap();
        assert!(matches!(ext, Extension::Extended { .. }));
        let t = triangle();
        let all: Vec<usize> = (0..3).collect();
        let ext = extend_forests(
            &t,
            &[vec![], vec![]],
            &[all.clone(), all.clone()],
            ExtendMode::Pack,
        )
        .unwrap();
        match ext {
            Extension::Violated { size, bound, .. } => assert!(size < bound),
            other => panic!("{other:?}"),
        }
        let ext = extend_forests(&t, &[vec![]], &[all], ExtendMode::Cover).unwrap();
        assert!(matches!(
            ext,
            Extension::Violated {
                size: 3,
                bound: 2,
                ..
            }
        ));
    }

    #[test]
    fn partition_connectivity_examples() {
        assert!(check_partition_connected(&doubled_cycle(4), 1, 1)
            .unwrap()
            .holds());
        match check_partition_connected(&k4(), 2, 1).unwrap() {
            PartitionConnectivity::Violated {
                cross,
                required,
                deleted,
                ..
            } => {
                assert!(cross < required);
                assert_eq!(deleted.len(), 1);
            }
            other => panic!("{other:?}"),
        }
        assert!(check_partition_connected(&triangle(), 1, 0)
            .unwrap()
            .holds());
    }

    #[test]
    fn sparsity_examples() {
        assert_eq!(
            check_laman(&k4()).unwrap(),
            Sparsity::Dense {
                nodes: vec![0, 1, 2, 3],
                induced: 6,
                bound: 5
            }
        );
        let pendant = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert!(check_forest_sparse(&pendant, 2, 1).unwrap().holds());
        assert_eq!(
            check_laman(&pendant).unwrap(),
            Sparsity::WrongCount {
                edges: 4,
                required: 5
            }
        );
        assert!(check_forest_sparse(&pendant, 1, 1).is_err());
        let path = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(check_body_bar(&path, 1).unwrap().is_packed());
        let split = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(!check_body_bar(&split, 1).unwrap().is_packed());
    }

    #[test]
    fn brick_blocks() {
        let g = Graph::from_edges(4, [(0, 1), (0, 1), (1, 2), (2, 3), (2, 3)]).unwrap();
        let p = maximal_tree_connected_blocks(&g, 2).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!(
            maximal_tree_connected_blocks(&k4(), 2).unwrap(),
            Partition::trivial(4)
        );
        assert_eq!(
            maximal_tree_connected_blocks(&triangle(), 2).unwrap(),
            Partition::singletons(3)
        );
    }

    #[test]
    fn bounded_decomposition() {
        // K4 into two forests with one of them a spanning tree and the other small
        let g = k4();
        let f = decompose_forests_bounded(&g, &[3, 0], &[3, 3])
            .unwrap()
            .unwrap();
        assert_eq!(f[0].len(), 3);
        assert!(decompose_forests_bounded(&g, &[4, 0], &[6, 6])
            .unwrap()
            .is_none());
    }
}
