//! Seeded random instances for property checks.

use arbor_core::graph::{Digraph, Graph};
use arbor_core::hypergraph::Hypergraph;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

fn distinct_pair(rng: &mut impl Rng, n: usize) -> (usize, usize) {
    let u = rng.gen_range(0..n);
    let mut v = rng.gen_range(0..n - 1);
    if v >= u {
        v += 1;
    }
    (u, v)
}

/// Loopless multigraph with exactly `m` edges.
pub fn multigraph(rng: &mut impl Rng, n: usize, m: usize) -> Graph {
    let mut g = Graph::new(n);
    if n >= 2 {
        for _ in 0..m {
            let (u, v) = distinct_pair(rng, n);
            g.add_edge(u, v).expect("endpoints in range");
        }
    }
    g
}

/// Random spanning tree plus `extra` random edges.
pub fn connected_multigraph(rng: &mut impl Rng, n: usize, extra: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v).expect("endpoints in range");
    }
    let more = multigraph(rng, n, extra);
    for &(u, v) in more.edges() {
        g.add_edge(u, v).expect("endpoints in range");
    }
    g
}

pub fn digraph(rng: &mut impl Rng, n: usize, m: usize) -> Digraph {
    let mut d = Digraph::new(n);
    if n >= 2 {
        for _ in 0..m {
            let (u, v) = distinct_pair(rng, n);
            d.add_arc(u, v).expect("endpoints in range");
        }
    }
    d
}

/// Hyperedges of size 2..=max_size.
pub fn hypergraph(rng: &mut impl Rng, n: usize, m: usize, max_size: usize) -> Hypergraph {
    let mut h = Hypergraph::new(n);
    let top = max_size.min(n).max(2);
    for _ in 0..m {
        let size = rng.gen_range(2..=top);
        let mut nodes: Vec<usize> = (0..n).collect();
        for i in 0..size {
            let j = rng.gen_range(i..n);
            nodes.swap(i, j);
        }
        nodes.truncate(size);
        h.add_edge(&nodes).expect("members in range");
    }
    h
}
