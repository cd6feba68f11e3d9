//! Augmenting-path maximum flow on small integer-capacity networks.
//!
//! Residual arcs are scanned in insertion order, so the flow and the reported
//! cut are deterministic for a given network.

use std::collections::VecDeque;

use crate::graph::{Digraph, NodeId};

#[derive(Clone, Debug)]
pub struct FlowNetwork {
    n: usize,
    // arc 2i is forward, 2i + 1 its reverse
    head: Vec<usize>,
    cap: Vec<u64>,
    adj: Vec<Vec<usize>>,
}

/// Value of a maximum flow together with the minimal sink-side cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinCut {
    pub value: u64,
    /// Nodes that can still reach the sink in the residual network.
    pub sink_side: Vec<bool>,
}

impl FlowNetwork {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.n += 1;
        self.n - 1
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: u64) -> usize {
        let id = self.head.len();
        self.head.push(to);
        self.cap.push(cap);
        self.adj[from].push(id);
        self.head.push(from);
        self.cap.push(0);
        self.adj[to].push(id + 1);
        id / 2
    }

    /// Unit-capacity network with one arc per digraph arc.
    pub fn from_digraph(d: &Digraph) -> Self {
        let mut net = Self::new(d.node_count());
        for &(t, h) in d.arcs() {
            net.add_arc(t, h, 1);
        }
        net
    }

    /// Flow currently routed on arc `id` (as returned by `add_arc`).
    pub fn flow_on(&self, id: usize) -> u64 {
        self.cap[2 * id + 1]
    }

    fn augment(&mut self, s: usize, t: usize, limit: u64) -> u64 {
        let mut pred = vec![usize::MAX; self.n];
        let mut seen = vec![false; self.n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                break;
            }
            for &a in &self.adj[u] {
                let v = self.head[a];
                if self.cap[a] > 0 && !seen[v] {
                    seen[v] = true;
                    pred[v] = a;
                    queue.push_back(v);
                }
            }
        }
        if !seen[t] {
            return 0;
        }
        let mut push = limit;
        let mut v = t;
        while v != s {
            let a = pred[v];
            push = push.min(self.cap[a]);
            v = self.head[a ^ 1];
        }
        let mut v = t;
        while v != s {
            let a = pred[v];
            self.cap[a] -= push;
            self.cap[a ^ 1] += push;
            v = self.head[a ^ 1];
        }
        push
    }

    /// Maximum s-t flow, stopping early once `limit` units are routed.
    pub fn max_flow_limited(&mut self, s: usize, t: usize, limit: u64) -> u64 {
        assert_ne!(s, t, "source equals sink");
        let mut total = 0;
        while total < limit {
            let pushed = self.augment(s, t, limit - total);
            if pushed == 0 {
                break;
            }
            total += pushed;
        }
        total
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        self.max_flow_limited(s, t, u64::MAX)
    }

    /// Nodes from which `t` is reachable in the residual network.
    pub fn residual_reaches(&self, t: usize) -> Vec<bool> {
        let mut rev: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for u in 0..self.n {
            for &a in &self.adj[u] {
                if self.cap[a] > 0 {
                    rev[self.head[a]].push(u);
                }
            }
        }
        let mut seen = vec![false; self.n];
        seen[t] = true;
        let mut queue = VecDeque::from([t]);
        while let Some(v) = queue.pop_front() {
            for &u in &rev[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen
    }

    /// Nodes reachable from `s` in the residual network.
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let v = self.head[a];
                if self.cap[a] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Runs a full maximum flow and returns the minimal sink side.
    pub fn min_cut(mut self, s: usize, t: usize) -> MinCut {
        let value = self.max_flow(s, t);
        MinCut {
            value,
            sink_side: self.residual_reaches(t),
        }
    }
}

/// Result of [`min_in_cut`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InCut {
    pub value: usize,
    /// A set X with `t ∈ X ⊆ V - root` and ρ_D(X) = `value`.
    pub set: Vec<NodeId>,
}

/// Maximum number of arc-disjoint root→t paths, with a set X (t ∈ X, root ∉ X)
/// entered by exactly that many arcs.
pub fn min_in_cut(d: &Digraph, root: NodeId, t: NodeId) -> InCut {
    assert_ne!(root, t, "root equals target");
    let cut = FlowNetwork::from_digraph(d).min_cut(root, t);
    InCut {
        value: cut.value as usize,
        set: crate::graph::set_to_nodes(&cut.sink_side),
    }
}
