//! Hypergraphs, dypergraphs and the hypergraphic matroid.
//!
//! A family of hyperedges is a hyperforest when every j > 0 of its members cover at
//! least j + 1 nodes. Independence is decided with one bipartite flow per hyperedge.

use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{NodeId, Partition, UnionFind};
use crate::matroid::{copies, matroid_union, Matroid};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<NodeId>>,
}

fn check_members(n: usize, members: &[NodeId]) -> Result<Vec<NodeId>> {
    let mut sorted = members.to_vec();
    sorted.sort_unstable();
    if let Some(&v) = sorted.iter().find(|&&v| v >= n) {
        return Err(Error::NodeOutOfRange { node: v, n });
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput(format!(
            "repeated node in hyperedge {members:?}"
        )));
    }
    if sorted.len() < 2 {
        return Err(Error::InvalidInput(format!(
            "hyperedge {members:?} has fewer than two nodes"
        )));
    }
    Ok(sorted)
}

impl Hypergraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
        }
    }

    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[NodeId]>,
    {
        let mut h = Self::new(n);
        for e in edges {
            h.add_edge(e.as_ref())?;
        }
        Ok(h)
    }

    /// Adds a hyperedge; members are stored in ascending order.
    pub fn add_edge(&mut self, members: &[NodeId]) -> Result<usize> {
        let sorted = check_members(self.n, members)?;
        self.edges.push(sorted);
        Ok(self.edges.len() - 1)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: usize) -> &[NodeId] {
        &self.edges[e]
    }

    pub fn edges(&self) -> &[Vec<NodeId>] {
        &self.edges
    }

    /// Hyperedges meeting at least two blocks.
    pub fn cross_count(&self, p: &Partition) -> usize {
        self.edges
            .iter()
            .filter(|e| e.iter().any(|&v| p.block_of(v) != p.block_of(e[0])))
            .count()
    }

    /// Hyperedges inside the flagged node set.
    pub fn induced_count(&self, in_set: &[bool]) -> usize {
        self.edges
            .iter()
            .filter(|e| e.iter().all(|&v| in_set[v]))
            .count()
    }

    /// Whether all nodes are joined through hyperedges.
    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.n);
        for e in &self.edges {
            for w in e.windows(2) {
                uf.union(w[0], w[1]);
            }
        }
        uf.set_count() <= 1
    }
}

/// Directed hyperedges (Z, z) with head z ∈ Z.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Dypergraph {
    n: usize,
    edges: Vec<(Vec<NodeId>, NodeId)>,
}

impl Dypergraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            edges: Vec::new(),
        }
    }

    pub fn add_edge(&mut self, members: &[NodeId], head: NodeId) -> Result<usize> {
        let sorted = check_members(self.n, members)?;
        if sorted.binary_search(&head).is_err() {
            return Err(Error::InvalidInput(format!(
                "head {head} is not a member of {members:?}"
            )));
        }
        self.edges.push((sorted, head));
        Ok(self.edges.len() - 1)
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: usize) -> (&[NodeId], NodeId) {
        (&self.edges[e].0, self.edges[e].1)
    }

    pub fn edges(&self) -> &[(Vec<NodeId>, NodeId)] {
        &self.edges
    }

    /// Dyperedges with head inside and some member outside the flagged set.
    pub fn in_cut(&self, in_set: &[bool]) -> usize {
        self.edges
            .iter()
            .filter(|(z, h)| in_set[*h] && z.iter().any(|&v| !in_set[v]))
            .count()
    }

    /// Hypergraph obtained by forgetting heads.
    pub fn underlying(&self) -> Hypergraph {
        Hypergraph {
            n: self.n,
            edges: self.edges.iter().map(|(z, _)| z.clone()).collect(),
        }
    }
}

/// Sub-family J (indices into `family`) covering at most |J| nodes, if one exists.
///
/// For each hyperedge e0 the family is tested for a system of distinct node
/// representatives in which e0 gets two nodes and every other member one.
pub fn surplus_violation(n: usize, family: &[&[NodeId]]) -> Option<Vec<usize>> {
    let f = family.len();
    if f == 0 {
        return None;
    }
    if f >= n {
        // too many hyperedges for the nodes; the whole family violates
        return Some((0..f).collect());
    }
    // 0 = source, 1 = sink, 2.. = hyperedges, then nodes
    let source = 0;
    let sink = 1;
    let node = |v: usize| 2 + f + v;
    let mut net = FlowNetwork::new(2 + f + n);
    for (i, e) in family.iter().enumerate() {
        net.add_arc(source, 2 + i, 1);
        for &v in e.iter() {
            net.add_arc(2 + i, node(v), 2);
        }
    }
    for v in 0..n {
        net.add_arc(node(v), sink, 1);
    }
    let reached = |net: &FlowNetwork| -> Vec<usize> {
        let seen = net.residual_reachable(source);
        (0..f).filter(|&i| seen[2 + i]).collect()
    };
    if net.max_flow(source, sink) < f as u64 {
        return Some(reached(&net));
    }
    for i in 0..f {
        let mut probe = net.clone();
        let extra = probe.node_count();
        probe.add_node();
        probe.add_arc(extra, 2 + i, 1);
        // push one more unit through hyperedge i only
        if probe.max_flow_limited(extra, sink, 1) == 0 {
            let seen = probe.residual_reachable(extra);
            let j: Vec<usize> = (0..f).filter(|&x| seen[2 + x]).collect();
            debug_assert!(j.contains(&i));
            return Some(j);
        }
    }
    None
}

/// Outcome of [`is_hyperforest`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HyperforestCheck {
    /// One node pair per hyperedge of the family (same order); the pairs form a forest.
    Trimming(Vec<(NodeId, NodeId)>),
    /// Hyperedge ids J with |∪J| ≤ |J|.
    Violated(Vec<usize>),
}

fn family_of<'a>(h: &'a Hypergraph, ids: &[usize]) -> Vec<&'a [NodeId]> {
    ids.iter().map(|&e| h.edges[e].as_slice()).collect()
}

/// Trimming of a hyperforest: each hyperedge of size at least 3 is shrunk by dropping
/// the highest node whose removal keeps the family a hyperforest, until only pairs remain.
fn trim(n: usize, family: &[&[NodeId]]) -> Vec<(NodeId, NodeId)> {
    let mut current: Vec<Vec<NodeId>> = family.iter().map(|e| e.to_vec()).collect();
    for i in 0..current.len() {
        while current[i].len() > 2 {
            let members = current[i].clone();
            let mut shrunk = false;
            for pos in (0..members.len()).rev() {
                let mut smaller = members.clone();
                smaller.remove(pos);
                current[i] = smaller;
                let view: Vec<&[NodeId]> = current.iter().map(Vec::as_slice).collect();
                if surplus_violation(n, &view).is_none() {
                    shrunk = true;
                    break;
                }
                current[i] = members.clone();
            }
            assert!(shrunk, "hyperforest without a trimmable node");
        }
    }
    current.iter().map(|e| (e[0], e[1])).collect()
}

/// Trimming of the sub-family `ids` into a forest, or a violating sub-family.
pub fn is_hyperforest(h: &Hypergraph, ids: &[usize]) -> Result<HyperforestCheck> {
    if let Some(&e) = ids.iter().find(|&&e| e >= h.edge_count()) {
        return Err(Error::UnknownEdge(e));
    }
    let family = family_of(h, ids);
    Ok(match surplus_violation(h.n, &family) {
        Some(j) => HyperforestCheck::Violated(j.into_iter().map(|x| ids[x]).collect()),
        None => HyperforestCheck::Trimming(trim(h.n, &family)),
    })
}

/// Hypergraphic matroid on the hyperedges: independent sets are the hyperforests.
#[derive(Clone, Debug)]
pub struct HypergraphicMatroid {
    n: usize,
    edges: Vec<Vec<NodeId>>,
}

impl HypergraphicMatroid {
    pub fn new(h: &Hypergraph) -> Self {
        Self {
            n: h.n,
            edges: h.edges.clone(),
        }
    }
}

impl Matroid for HypergraphicMatroid {
    fn ground_size(&self) -> usize {
        self.edges.len()
    }

    fn is_independent(&self, set: &[usize]) -> bool {
        let family: Vec<&[NodeId]> = set.iter().map(|&e| self.edges[e].as_slice()).collect();
        surplus_violation(self.n, &family).is_none()
    }
}

/// Partition into maximal node sets spanned tightly by the hyperforest `basis`: u and v
/// share a block iff adding the pair {u, v} to the basis breaks independence.
fn tight_partition(n: usize, family: &[&[NodeId]]) -> Partition {
    let mut uf = UnionFind::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if uf.same(u, v) {
                continue;
            }
            let pair = [u, v];
            let mut probe: Vec<&[NodeId]> = family.to_vec();
            probe.push(&pair);
            if surplus_violation(n, &probe).is_some() {
                uf.union(u, v);
            }
        }
    }
    Partition::from_labels(&uf.labels())
}

fn greedy_basis(m: &HypergraphicMatroid, ids: &[usize]) -> Vec<usize> {
    let mut basis = Vec::new();
    for &e in ids {
        basis.push(e);
        if !m.is_independent(&basis) {
            basis.pop();
        }
    }
    basis
}

/// Partition bound |V| - |P| + e_H(P) on the hypergraphic rank.
pub fn partition_rank_bound(h: &Hypergraph, p: &Partition) -> usize {
    h.n - p.len() + h.cross_count(p)
}

/// Rank of the hypergraphic matroid with a partition attaining the least partition bound.
pub fn hypergraphic_rank(h: &Hypergraph) -> (usize, Partition) {
    let m = HypergraphicMatroid::new(h);
    let all: Vec<usize> = (0..h.edge_count()).collect();
    let basis = greedy_basis(&m, &all);
    let p = tight_partition(h.n, &family_of(h, &basis));
    debug_assert_eq!(partition_rank_bound(h, &p), basis.len());
    (basis.len(), p)
}

/// Outcome of [`pack_hypertrees`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypertreePacking {
    /// Disjoint spanning hypertrees with their trimmings to spanning trees.
    Packed {
        hypertrees: Vec<Vec<usize>>,
        trimmings: Vec<Vec<(NodeId, NodeId)>>,
    },
    /// e_H(P) < k(|P| - 1).
    Deficient { partition: Partition, cross: usize },
}

/// Outcome of [`cover_by_hyperforests`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HyperforestCover {
    Covered {
        hyperforests: Vec<Vec<usize>>,
    },
    /// i_H(X) > k(|X| - 1).
    Dense {
        nodes: Vec<NodeId>,
        induced: usize,
    },
}

/// Tight partition of the sub-family `ids`.
fn partition_of_subfamily(h: &Hypergraph, ids: &[usize]) -> Partition {
    let m = HypergraphicMatroid::new(h);
    let basis = greedy_basis(&m, ids);
    tight_partition(h.n, &family_of(h, &basis))
}

/// `k` disjoint spanning hypertrees, or a partition with e_H(P) < k(|P| - 1).
pub fn pack_hypertrees(h: &Hypergraph, k: usize) -> Result<HypertreePacking> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let n = h.n;
    let m = HypergraphicMatroid::new(h);
    let all: Vec<usize> = (0..h.edge_count()).collect();
    let outcome = matroid_union(&copies(&m, k), &all)?;
    if outcome.rank == k * n.saturating_sub(1) {
        let hypertrees = outcome.labeling.classes();
        let trimmings = hypertrees
            .iter()
            .map(|t| trim(n, &family_of(h, t)))
            .collect();
        return Ok(HypertreePacking::Packed {
            hypertrees,
            trimmings,
        });
    }
    let partition = partition_of_subfamily(h, &outcome.certificate);
    let cross = h.cross_count(&partition);
    debug_assert!(cross < k * (partition.len() - 1));
    Ok(HypertreePacking::Deficient { partition, cross })
}

/// Partition of the hyperedges into `k` hyperforests, or a dense node set.
pub fn cover_by_hyperforests(h: &Hypergraph, k: usize) -> Result<HyperforestCover> {
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    let m = HypergraphicMatroid::new(h);
    let all: Vec<usize> = (0..h.edge_count()).collect();
    let outcome = matroid_union(&copies(&m, k), &all)?;
    if outcome.rank == all.len() {
        return Ok(HyperforestCover::Covered {
            hyperforests: outcome.labeling.classes(),
        });
    }
    let partition = partition_of_subfamily(h, &outcome.certificate);
    for block in partition.blocks() {
        let mut inside = vec![false; h.n];
        for &v in block {
            inside[v] = true;
        }
        let induced = h.induced_count(&inside);
        if induced > k * (block.len() - 1) {
            return Ok(HyperforestCover::Dense {
                nodes: block.clone(),
                induced,
            });
        }
    }
    Err(Error::NotAMatroid(
        "cover certificate has no dense block".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::matroid::audit_axioms;

    fn abc() -> Hypergraph {
        Hypergraph::from_edges(3, [[0, 1, 2]]).unwrap()
    }

    fn abc_twice() -> Hypergraph {
        Hypergraph::from_edges(3, [[0, 1, 2], [0, 1, 2]]).unwrap()
    }

    fn is_forest_pairs(n: usize, pairs: &[(NodeId, NodeId)]) -> bool {
        let g = Graph::from_edges(n, pairs.iter().copied()).unwrap();
        g.is_forest(&(0..pairs.len()).collect::<Vec<_>>())
    }

    #[test]
    fn rejects_bad_hyperedges() {
        assert!(Hypergraph::from_edges(3, [vec![0]]).is_err());
        assert!(Hypergraph::from_edges(3, [vec![0, 0]]).is_err());
        assert!(Hypergraph::from_edges(3, [vec![0, 5]]).is_err());
        let mut d = Dypergraph::new(3);
        assert!(d.add_edge(&[0, 1], 2).is_err());
    }

    #[test]
    fn single_hyperedge_trims_to_a_pair() {
        match is_hyperforest(&abc(), &[0]).unwrap() {
            HyperforestCheck::Trimming(pairs) => assert_eq!(pairs, vec![(0, 1)]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parallel_pairs_violate() {
        let h = Hypergraph::from_edges(2, [[0, 1], [0, 1]]).unwrap();
        assert_eq!(
            is_hyperforest(&h, &[0, 1]).unwrap(),
            HyperforestCheck::Violated(vec![0, 1])
        );
        let h = Hypergraph::from_edges(4, [[0, 1], [0, 1], [2, 3]]).unwrap();
        assert_eq!(
            is_hyperforest(&h, &[0, 1, 2]).unwrap(),
            HyperforestCheck::Violated(vec![0, 1])
        );
    }

    #[test]
    fn two_copies_of_abc_trim_to_a_tree() {
        match is_hyperforest(&abc_twice(), &[0, 1]).unwrap() {
            HyperforestCheck::Trimming(pairs) => {
                assert_eq!(pairs.len(), 2);
                assert!(is_forest_pairs(3, &pairs));
            }
            other => panic!("{other:?}"),
        }
        let h = Hypergraph::from_edges(3, [[0, 1, 2], [0, 1, 2], [0, 1, 2]]).unwrap();
        assert!(matches!(
            is_hyperforest(&h, &[0, 1, 2]).unwrap(),
            HyperforestCheck::Violated(_)
        ));
    }

    #[test]
    fn rank_examples() {
        let (r, p) = hypergraphic_rank(&abc());
        assert_eq!((r, p), (1, Partition::singletons(3)));
        let (r, p) = hypergraphic_rank(&abc_twice());
        assert_eq!((r, p), (2, Partition::trivial(3)));
        let g = Hypergraph::from_edges(5, [[0, 1], [1, 2], [3, 4]]).unwrap();
        let (r, p) = hypergraphic_rank(&g);
        assert_eq!(r, 3);
        assert_eq!(p.blocks(), &[vec![0, 1, 2], vec![3, 4]]);
    }

    #[test]
    fn packing_examples() {
        match pack_hypertrees(&abc(), 1).unwrap() {
            HypertreePacking::Deficient { partition, cross } => {
                assert_eq!(partition, Partition::singletons(3));
                assert_eq!(cross, 1);
            }
            other => panic!("{other:?}"),
        }
        assert!(abc().is_connected());
        match pack_hypertrees(&abc_twice(), 1).unwrap() {
            HypertreePacking::Packed {
                hypertrees,
                trimmings,
            } => {
                assert_eq!(hypertrees, vec![vec![0, 1]]);
                assert!(is_forest_pairs(3, &trimmings[0]));
                assert_eq!(trimmings[0].len(), 2);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn cover_examples() {
        assert_eq!(
            cover_by_hyperforests(&abc_twice(), 1).unwrap(),
            HyperforestCover::Covered {
                hyperforests: vec![vec![0, 1]]
            }
        );
        let h = Hypergraph::from_edges(3, [vec![0, 1, 2], vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(
            cover_by_hyperforests(&h, 1).unwrap(),
            HyperforestCover::Dense {
                nodes: vec![0, 1, 2],
                induced: 3
            }
        );
    }

    #[test]
    fn hypergraphic_matroid_axioms() {
        let h = Hypergraph::from_edges(
            4,
            [
                vec![0, 1, 2],
                vec![1, 2, 3],
                vec![0, 3],
                vec![0, 1],
                vec![2, 3],
                vec![0, 1, 2, 3],
            ],
        )
        .unwrap();
        audit_axioms(&HypergraphicMatroid::new(&h)).unwrap();
    }

    #[test]
    fn dyperedge_entering() {
        let mut d = Dypergraph::new(3);
        d.add_edge(&[0, 1, 2], 1).unwrap();
        assert_eq!(d.in_cut(&[false, false, true]), 0);
        assert_eq!(d.in_cut(&[false, true, false]), 1);
        assert_eq!(d.in_cut(&[true, true, true]), 0);
    }
}
