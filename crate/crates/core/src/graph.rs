//! Incidence structures and the counting functions shared by every other module.
//!
//! Nodes are dense integers `0..n`. Edge and arc identifiers are their positions in the
//! edge list, so they are dense `0..m` and stable for the lifetime of the value.

use crate::error::{Error, Result};

pub type NodeId = usize;
pub type EdgeId = usize;

/// Disjoint-set forest with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    sets: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            sets: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `false` when `a` and `b` were already in the same set.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.sets -= 1;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn set_count(&self) -> usize {
        self.sets
    }

    /// Component label per element, labels numbered by first occurrence.
    pub fn labels(&mut self) -> Vec<usize> {
        let n = self.parent.len();
        let mut label = vec![usize::MAX; n];
        let mut out = vec![0; n];
        let mut next = 0;
        for v in 0..n {
            let r = self.find(v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            out[v] = label[r];
        }
        out
    }
}

fn check_node(node: NodeId, n: usize) -> Result<()> {
    if node >= n {
        Err(Error::NodeOutOfRange { node, n })
    } else {
        Ok(())
    }
}

/// Loopless undirected multigraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(NodeId, NodeId)>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut g = Self::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: NodeId, v: NodeId) -> Result<EdgeId> {
        check_node(u, self.n)?;
        check_node(v, self.n)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
    }

    pub fn add_node(&mut self) -> NodeId {
        self.n += 1;
        self.n - 1
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: EdgeId) -> (NodeId, NodeId) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Component label of every node in the spanning subgraph `(V, subset)`.
    pub fn component_labels(&self, subset: impl IntoIterator<Item = EdgeId>) -> Vec<usize> {
        let mut uf = UnionFind::new(self.n);
        for e in subset {
            let (u, v) = self.edges[e];
            uf.union(u, v);
        }
        uf.labels()
    }

    /// Number of components of `(V, subset)`.
    pub fn component_count(&self, subset: impl IntoIterator<Item = EdgeId>) -> usize {
        let mut uf = UnionFind::new(self.n);
        for e in subset {
            let (u, v) = self.edges[e];
            uf.union(u, v);
        }
        uf.set_count()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count(0..self.edges.len()) == 1
    }

    /// `true` when the given edges contain no cycle.
    pub fn is_forest(&self, subset: &[EdgeId]) -> bool {
        let mut uf = UnionFind::new(self.n);
        subset.iter().all(|&e| {
            let (u, v) = self.edges[e];
            uf.union(u, v)
        })
    }

    /// `true` when the given edges form a spanning tree.
    pub fn is_spanning_tree(&self, subset: &[EdgeId]) -> bool {
        subset.len() + 1 == self.n.max(1) && self.is_forest(subset)
    }

    /// i_G(X): edges with both ends in X.
    pub fn induced_count(&self, in_set: &[bool]) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| in_set[u] && in_set[v])
            .count()
    }

    /// d_G(X): edges with exactly one end in X.
    pub fn cut_degree(&self, in_set: &[bool]) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| in_set[u] != in_set[v])
            .count()
    }

    /// Graph with the listed edges removed; ids of survivors are renumbered in order.
    pub fn without_edges(&self, removed: &[EdgeId]) -> (Graph, Vec<EdgeId>) {
        let mut gone = vec![false; self.edges.len()];
        for &e in removed {
            gone[e] = true;
        }
        let mut g = Graph::new(self.n);
        let mut original = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if !gone[e] {
                g.edges.push((u, v));
                original.push(e);
            }
        }
        (g, original)
    }

    /// Subgraph induced by `nodes`, relabelled `0..nodes.len()` in the given order.
    pub fn induced_subgraph(&self, nodes: &[NodeId]) -> (Graph, Vec<EdgeId>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in nodes.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(nodes.len());
        let mut original = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                g.edges.push((index[u], index[v]));
                original.push(e);
            }
        }
        (g, original)
    }

    /// Digraph with each edge replaced by two opposite arcs; arcs `2e` and `2e + 1`
    /// come from edge `e`.
    pub fn doubled(&self) -> Digraph {
        let mut d = Digraph::new(self.n);
        for &(u, v) in &self.edges {
            d.arcs.push((u, v));
            d.arcs.push((v, u));
        }
        d
    }
}

/// Loopless directed multigraph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(NodeId, NodeId)>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            arcs: Vec::new(),
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut d = Self::new(n);
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, tail: NodeId, head: NodeId) -> Result<EdgeId> {
        check_node(tail, self.n)?;
        check_node(head, self.n)?;
        if tail == head {
            return Err(Error::Loop(tail));
        }
        self.arcs.push((tail, head));
        Ok(self.arcs.len() - 1)
    }

    pub fn add_node(&mut self) -> NodeId {
        self.n += 1;
        self.n - 1
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arc(&self, a: EdgeId) -> (NodeId, NodeId) {
        self.arcs[a]
    }

    pub fn arcs(&self) -> &[(NodeId, NodeId)] {
        &self.arcs
    }

    pub fn in_degree(&self, v: NodeId) -> usize {
        self.arcs.iter().filter(|&&(_, h)| h == v).count()
    }

    /// ρ_D(X): arcs entering X.
    pub fn in_cut(&self, in_set: &[bool]) -> usize {
        self.arcs
            .iter()
            .filter(|&&(t, h)| !in_set[t] && in_set[h])
            .count()
    }

    /// i_D(X): arcs with both ends in X.
    pub fn induced_count(&self, in_set: &[bool]) -> usize {
        self.arcs
            .iter()
            .filter(|&&(t, h)| in_set[t] && in_set[h])
            .count()
    }

    /// Underlying undirected multigraph, edge ids equal to arc ids.
    pub fn underlying(&self) -> Graph {
        Graph {
            n: self.n,
            edges: self.arcs.clone(),
        }
    }
}

/// Graph with a directed part and an undirected part, both loopless.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedGraph {
    pub arcs: Digraph,
    pub edges: Graph,
}

impl MixedGraph {
    pub fn new(arcs: Digraph, edges: Graph) -> Result<Self> {
        if arcs.node_count() != edges.node_count() {
            return Err(Error::InvalidInput(format!(
                "directed part has {} nodes, undirected part has {}",
                arcs.node_count(),
                edges.node_count()
            )));
        }
        Ok(Self { arcs, edges })
    }

    pub fn node_count(&self) -> usize {
        self.arcs.node_count()
    }
}

/// Ordered family of disjoint nonempty blocks covering `0..n`.
///
/// Always kept canonical: each block ascending, blocks sorted by smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    blocks: Vec<Vec<NodeId>>,
    block_of: Vec<usize>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<NodeId>>) -> Result<Self> {
        let mut block_of = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::MalformedPartition("empty block".into()));
            }
            for &v in block {
                if v >= n {
                    return Err(Error::MalformedPartition(format!(
                        "node {v} out of range 0..{n}"
                    )));
                }
                if block_of[v] != usize::MAX {
                    return Err(Error::MalformedPartition(format!(
                        "node {v} appears in two blocks"
                    )));
                }
                block_of[v] = i;
            }
        }
        if let Some(v) = block_of.iter().position(|&b| b == usize::MAX) {
            return Err(Error::MalformedPartition(format!("node {v} is uncovered")));
        }
        if n > 0 && blocks.is_empty() {
            return Err(Error::MalformedPartition("no blocks".into()));
        }
        Ok(Self::from_labels(&block_of))
    }

    /// Builds the partition whose blocks are the classes of `labels`.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut remap = std::collections::HashMap::new();
        let mut blocks: Vec<Vec<NodeId>> = Vec::new();
        let mut block_of = vec![0; labels.len()];
        for (v, &l) in labels.iter().enumerate() {
            let b = *remap.entry(l).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(v);
            block_of[v] = b;
        }
        Self { blocks, block_of }
    }

    pub fn singletons(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_labels(&vec![0; n])
    }

    pub fn blocks(&self) -> &[Vec<NodeId>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn node_count(&self) -> usize {
        self.block_of.len()
    }

    pub fn block_of(&self, v: NodeId) -> usize {
        self.block_of[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.block_of
    }

    /// e_G(P) for a graph-shaped edge list.
    pub fn cross_count(&self, g: &Graph) -> usize {
        g.edges()
            .iter()
            .filter(|&&(u, v)| self.block_of[u] != self.block_of[v])
            .count()
    }

    pub fn cross_edges(&self, g: &Graph) -> Vec<EdgeId> {
        (0..g.edge_count())
            .filter(|&e| {
                let (u, v) = g.edge(e);
                self.block_of[u] != self.block_of[v]
            })
            .collect()
    }

    /// k(|P| - 1) - e_G(P), possibly negative.
    pub fn deficit(&self, g: &Graph, k: usize) -> i64 {
        (k * (self.len().saturating_sub(1))) as i64 - self.cross_count(g) as i64
    }
}

/// Counts returned by [`partition_stats`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    pub cross: usize,
    pub induced: Vec<usize>,
}

/// Cross-edge count and per-block induced edge counts.
pub fn partition_stats(g: &Graph, p: &Partition) -> Result<PartitionStats> {
    if p.node_count() != g.node_count() {
        return Err(Error::MalformedPartition(format!(
            "partition covers {} nodes, graph has {}",
            p.node_count(),
            g.node_count()
        )));
    }
    let mut induced = vec![0; p.len()];
    let mut cross = 0;
    for &(u, v) in g.edges() {
        let (bu, bv) = (p.block_of(u), p.block_of(v));
        if bu == bv {
            induced[bu] += 1;
        } else {
            cross += 1;
        }
    }
    Ok(PartitionStats { cross, induced })
}

/// A graph obtained by shrinking every block of a partition to one node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub graph: Graph,
    /// Original edge id of every surviving edge.
    pub original: Vec<EdgeId>,
}

/// Contracts each block to a single node (block index). Induced edges disappear,
/// cross edges survive and remember their original id.
pub fn contract(g: &Graph, p: &Partition) -> Result<Contraction> {
    if p.node_count() != g.node_count() {
        return Err(Error::MalformedPartition(format!(
            "partition covers {} nodes, graph has {}",
            p.node_count(),
            g.node_count()
        )));
    }
    let mut graph = Graph::new(p.len());
    let mut original = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (bu, bv) = (p.block_of(u), p.block_of(v));
        if bu != bv {
            graph.edges.push((bu, bv));
            original.push(e);
        }
    }
    Ok(Contraction { graph, original })
}

/// Violated cut requirement: `actual < required` on node set `set`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutCertificate {
    pub set: Vec<NodeId>,
    pub required: usize,
    pub actual: usize,
}

/// Calls `f` with the block labels of every set partition of `0..n`
/// (restricted growth strings). Stops early when `f` returns `false`.
pub fn for_each_partition(n: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if n == 0 {
        f(&[]);
        return;
    }
    let mut labels = vec![0usize; n];
    let mut max_prefix = vec![0usize; n];
    loop {
        if !f(&labels) {
            return;
        }
        // advance the restricted growth string
        let mut i = n - 1;
        loop {
            if i == 0 {
                return;
            }
            let bound = max_prefix[i - 1] + 1;
            if labels[i] < bound {
                labels[i] += 1;
                let m = max_prefix[i - 1].max(labels[i]);
                max_prefix[i] = m;
                for j in i + 1..n {
                    labels[j] = 0;
                    max_prefix[j] = m;
                }
                break;
            }
            i -= 1;
        }
    }
}

/// Membership vector of a bitmask over `0..n`.
pub fn mask_to_set(mask: u64, n: usize) -> Vec<bool> {
    (0..n).map(|v| mask >> v & 1 == 1).collect()
}

pub fn set_to_nodes(in_set: &[bool]) -> Vec<NodeId> {
    in_set
        .iter()
        .enumerate()
        .filter_map(|(v, &b)| b.then_some(v))
        .collect()
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

    #[test]
    fn loops_are_rejected() {
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(Error::Loop(1)));
        assert!(Digraph::from_arcs(2, [(0, 0)]).is_err());
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn partition_stats_examples() {
        let t = triangle();
        let s = partition_stats(&t, &Partition::singletons(3)).unwrap();
        assert_eq!(
            s,
            PartitionStats {
                cross: 3,
                induced: vec![0, 0, 0]
            }
        );
        let s = partition_stats(&t, &Partition::trivial(3)).unwrap();
        assert_eq!(
            s,
            PartitionStats {
                cross: 0,
                induced: vec![3]
            }
        );
        let p = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let s = partition_stats(&k4(), &p).unwrap();
        assert_eq!(
            s,
            PartitionStats {
                cross: 4,
                induced: vec![1, 1]
            }
        );
    }

    #[test]
    fn malformed_partitions() {
        assert!(matches!(
            Partition::new(3, vec![vec![0, 1], vec![1, 2]]),
            Err(Error::MalformedPartition(_))
        ));
        assert!(matches!(
            Partition::new(3, vec![vec![0, 1]]),
            Err(Error::MalformedPartition(_))
        ));
        assert!(matches!(
            Partition::new(3, vec![vec![0, 1, 2], vec![]]),
            Err(Error::MalformedPartition(_))
        ));
        let p = Partition::singletons(4);
        assert!(partition_stats(&triangle(), &p).is_err());
    }

    #[test]
    fn partition_is_canonical() {
        let p = Partition::new(4, vec![vec![3, 1], vec![2, 0]]).unwrap();
        assert_eq!(p.blocks(), &[vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn contraction_examples() {
        let t = triangle();
        let c = contract(&t, &Partition::singletons(3)).unwrap();
        assert_eq!(c.graph, t);
        assert_eq!(c.original, vec![0, 1, 2]);

        let p = Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        let c = contract(&t, &p).unwrap();
        assert_eq!(c.graph.node_count(), 2);
        assert_eq!(c.graph.edge_count(), 2);
        // edges 12 and 02 survive
        assert_eq!(c.original, vec![1, 2]);

        let c = contract(&k4(), &Partition::trivial(4)).unwrap();
        assert_eq!((c.graph.node_count(), c.graph.edge_count()), (1, 0));
    }

    #[test]
    fn partitions_are_enumerated_once() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in bell.iter().enumerate() {
            let mut seen = std::collections::HashSet::new();
            for_each_partition(n, |l| {
                assert!(seen.insert(Partition::from_labels(l)));
                true
            });
            assert_eq!(seen.len(), b, "n = {n}");
        }
    }

    #[test]
    fn cut_counts() {
        let g = k4();
        let x = mask_to_set(0b0011, 4);
        assert_eq!(g.cut_degree(&x), 4);
        assert_eq!(g.induced_count(&x), 1);
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(d.in_cut(&mask_to_set(0b100, 3)), 1);
    }
}
