//! Generators that only ever produce YES instances, one constructive operation at a
//! time. Loops may appear while building (they can be pinched later) but are
//! dropped from the output; loops cross no cut, so connectivity is unaffected.

use arbor_core::graph::{Digraph, Graph, NodeId};
use rand::seq::index::sample;
use rand::Rng;

use crate::random::rng;

/// Identifier of the generator PRNG, written into every emitted header.
pub const PRNG_NAME: &str = "chacha8";

/// A generated instance with the parameters that reproduce it.
#[derive(Clone, Debug)]
pub struct Generated<T> {
    pub family: &'static str,
    pub seed: u64,
    pub params: Vec<(&'static str, usize)>,
    pub value: T,
}

impl<T> Generated<T> {
    /// `# seed: ...` header line for the text formats.
    pub fn header(&self) -> String {
        let mut line = format!("# seed: {} {} family={}", self.seed, PRNG_NAME, self.family);
        for (k, v) in &self.params {
            line.push_str(&format!(" {k}={v}"));
        }
        line
    }
}

/// Working multigraph where loops are allowed.
struct Builder {
    n: usize,
    edges: Vec<(NodeId, NodeId)>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            n: 1,
            edges: Vec::new(),
        }
    }

    fn add_node(&mut self) -> NodeId {
        self.n += 1;
        self.n - 1
    }

    /// Replaces each chosen edge u-v by u-z and z-v.
    fn pinch(&mut self, rng: &mut impl Rng, j: usize) -> NodeId {
        let chosen = sample(rng, self.edges.len(), j).into_vec();
        let z = self.add_node();
        for e in chosen {
            let (u, v) = self.edges[e];
            self.edges[e] = (u, z);
            self.edges.push((z, v));
        }
        z
    }

    fn attach(&mut self, rng: &mut impl Rng, z: NodeId, count: usize) {
        for _ in 0..count {
            let u = rng.gen_range(0..z);
            self.edges.push((u, z));
        }
    }

    fn random_edge(&mut self, rng: &mut impl Rng) {
        let u = rng.gen_range(0..self.n);
        let v = rng.gen_range(0..self.n);
        self.edges.push((u, v));
    }

    fn graph(&self) -> Graph {
        Graph::from_edges(self.n, self.edges.iter().copied().filter(|(u, v)| u != v))
            .expect("valid builder edges")
    }

    fn digraph(&self) -> Digraph {
        Digraph::from_arcs(self.n, self.edges.iter().copied().filter(|(u, v)| u != v))
            .expect("valid builder arcs")
    }
}

/// 2k-edge-connected graph: add an edge, or pinch k existing edges with a new node.
pub fn gen_pinch_2k(seed: u64, steps: usize, k: usize) -> Generated<Graph> {
    let mut rng = rng(seed);
    let mut b = Builder::new();
    for _ in 0..steps {
        if k > 0 && b.edges.len() >= k && rng.gen_bool(0.5) {
            b.pinch(&mut rng, k);
        } else {
            b.random_edge(&mut rng);
        }
    }
    Generated {
        family: "pinch",
        seed,
        params: vec![("steps", steps), ("k", k)],
        value: b.graph(),
    }
}

/// Rooted k-arc-connected digraph with root 0: add an arc, add a node with k
/// entering arcs, or pinch 0 < j ≤ k arcs and add k - j entering arcs.
pub fn gen_mader(seed: u64, steps: usize, k: usize) -> Generated<Digraph> {
    let mut rng = rng(seed);
    let mut b = Builder::new();
    for _ in 0..steps {
        match rng.gen_range(0..3) {
            0 => b.random_edge(&mut rng),
            1 => {
                let z = b.add_node();
                b.attach(&mut rng, z, k);
            }
            _ => {
                let top = k.min(b.edges.len());
                if top == 0 {
                    let z = b.add_node();
                    b.attach(&mut rng, z, k);
                } else {
                    let j = rng.gen_range(1..=top);
                    let z = b.pinch(&mut rng, j);
                    b.attach(&mut rng, z, k - j);
                }
            }
        }
    }
    Generated {
        family: "mader",
        seed,
        params: vec![("steps", steps), ("k", k)],
        value: b.digraph(),
    }
}

/// (k, l)-partition-connected graph: add an edge, or pinch l ≤ j ≤ k edges with a
/// new node and join it to k - j existing nodes.
///
/// # Panics
/// Unless 0 ≤ l < k.
pub fn gen_kl_pinch(seed: u64, steps: usize, k: usize, l: usize) -> Generated<Graph> {
    assert!(l < k, "gen_kl_pinch needs 0 <= l < k");
    let mut rng = rng(seed);
    let mut b = Builder::new();
    for _ in 0..steps {
        let top = k.min(b.edges.len());
        if top >= l && rng.gen_bool(0.6) {
            let j = rng.gen_range(l..=top);
            let z = b.pinch(&mut rng, j);
            b.attach(&mut rng, z, k - j);
        } else {
            b.random_edge(&mut rng);
        }
    }
    Generated {
        family: "kl-pinch",
        seed,
        params: vec![("steps", steps), ("k", k), ("l", l)],
        value: b.graph(),
    }
}

/// Digraph rooted (k, l)-arc-connected from root 0: add an arc, or pinch
/// l ≤ j ≤ k - 1 arcs with a new node and add k - j arcs entering it.
///
/// # Panics
/// Unless 0 ≤ l < k.
pub fn gen_kv(seed: u64, steps: usize, k: usize, l: usize) -> Generated<Digraph> {
    assert!(l < k, "gen_kv needs 0 <= l < k");
    let mut rng = rng(seed);
    let mut b = Builder::new();
    for _ in 0..steps {
        let top = (k - 1).min(b.edges.len());
        if top >= l && rng.gen_bool(0.6) {
            let j = rng.gen_range(l..=top);
            let z = b.pinch(&mut rng, j);
            b.attach(&mut rng, z, k - j);
        } else {
            b.random_edge(&mut rng);
        }
    }
    Generated {
        family: "kv",
        seed,
        params: vec![("steps", steps), ("k", k), ("l", l)],
        value: b.digraph(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_steps_is_one_node() {
        let g = gen_pinch_2k(1, 0, 2).value;
        assert_eq!((g.node_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn same_seed_same_output() {
        let a = gen_mader(7, 30, 2).value;
        let b = gen_mader(7, 30, 2).value;
        assert_eq!(a.arcs(), b.arcs());
    }

    #[test]
    fn header_names_the_prng() {
        let g = gen_kl_pinch(3, 5, 2, 1);
        assert!(g.header().starts_with("# seed: 3 chacha8 family=kl-pinch"));
    }
}
