//! Connected graphs up to isomorphism, grown one edge at a time.
//!
//! Canonical form: the lexicographically smallest upper-triangle multiplicity
//! vector over node orders that respect a degree-based refinement.

use std::collections::HashSet;

use arbor_core::graph::Graph;

fn multiplicities(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u8>> {
    let mut a = vec![vec![0u8; n]; n];
    for &(u, v) in edges {
        a[u][v] += 1;
        a[v][u] += 1;
    }
    a
}

/// Node invariant used to split the search: degree, then sorted neighbour degrees.
fn signature(a: &[Vec<u8>]) -> Vec<(usize, Vec<usize>)> {
    let n = a.len();
    let deg: Vec<usize> = (0..n)
        .map(|v| a[v].iter().map(|&x| x as usize).sum())
        .collect();
    (0..n)
        .map(|v| {
            let mut around: Vec<usize> = (0..n)
                .flat_map(|u| std::iter::repeat(deg[u]).take(a[v][u] as usize))
                .collect();
            around.sort_unstable();
            (deg[v], around)
        })
        .collect()
}

fn encode(a: &[Vec<u8>], order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            out.push(a[order[i]][order[j]]);
        }
    }
    out
}

/// Canonical code of a multigraph; equal codes iff isomorphic.
pub fn canonical_code(n: usize, edges: &[(usize, usize)]) -> Vec<u8> {
    let a = multiplicities(n, edges);
    let sig = signature(&a);
    let mut nodes: Vec<usize> = (0..n).collect();
    nodes.sort_by(|&x, &y| sig[x].cmp(&sig[y]));
    // classes of equal signature, in order
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &nodes {
        match classes.last_mut() {
            Some(c) if sig[c[0]] == sig[v] => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    let mut best: Option<Vec<u8>> = None;
    let mut order = Vec::with_capacity(n);
    search(&a, &classes, 0, &mut vec![false; n], &mut order, &mut best);
    let mut code = vec![n as u8];
    code.extend(best.unwrap_or_default());
    code
}

fn search(
    a: &[Vec<u8>],
    classes: &[Vec<usize>],
    class: usize,
    used: &mut Vec<bool>,
    order: &mut Vec<usize>,
    best: &mut Option<Vec<u8>>,
) {
    if order.len() == a.len() {
        let code = encode(a, order);
        if best.as_ref().map_or(true, |b| code < *b) {
            *best = Some(code);
        }
        return;
    }
    let c = &classes[class];
    let placed_in_class = c.iter().filter(|&&v| used[v]).count();
    let next_class = if placed_in_class + 1 == c.len() {
        class + 1
    } else {
        class
    };
    for &v in c {
        if used[v] {
            continue;
        }
        // prune: partial code must not already exceed the best
        order.push(v);
        used[v] = true;
        if partial_ok(a, order, best) {
            search(a, classes, next_class, used, order, best);
        }
        used[v] = false;
        order.pop();
    }
}

fn partial_ok(a: &[Vec<u8>], order: &[usize], best: &Option<Vec<u8>>) -> bool {
    let Some(best) = best else { return true };
    // rows fully determined: pairs (i, j) with i < j < order.len() in code order
    let n = a.len();
    let k = order.len();
    let mut idx = 0;
    for i in 0..n {
        for j in i + 1..n {
            if i >= k || j >= k {
                return true;
            }
            let x = a[order[i]][order[j]];
            match x.cmp(&best[idx]) {
                std::cmp::Ordering::Less => return true,
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Equal => {}
            }
            idx += 1;
        }
    }
    true
}

/// All connected graphs with at most `max_nodes` nodes and at most `max_edges` edges,
/// one per isomorphism class, at least one edge. Parallel edges only when `multi`.
pub fn connected_graphs(max_nodes: usize, max_edges: usize, multi: bool) -> Vec<Graph> {
    let mut out = Vec::new();
    if max_nodes < 2 || max_edges == 0 {
        return out;
    }
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut level: Vec<(usize, Vec<(usize, usize)>)> = vec![(2, vec![(0, 1)])];
    seen.insert(canonical_code(2, &[(0, 1)]));
    for _ in 1..=max_edges {
        let mut next = Vec::new();
        for (n, edges) in &level {
            out.push(Graph::from_edges(*n, edges.iter().copied()).expect("valid enumeration"));
            if edges.len() == max_edges {
                continue;
            }
            let mut candidates: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
            for u in 0..*n {
                for v in u + 1..*n {
                    if multi || !edges.contains(&(u, v)) {
                        let mut e = edges.clone();
                        e.push((u, v));
                        candidates.push((*n, e));
                    }
                }
                if *n < max_nodes {
                    let mut e = edges.clone();
                    e.push((u, *n));
                    candidates.push((*n + 1, e));
                }
            }
            for (cn, ce) in candidates {
                if seen.insert(canonical_code(cn, &ce)) {
                    next.push((cn, ce));
                }
            }
        }
        level = next;
        if level.is_empty() {
            break;
        }
    }
    out
}
