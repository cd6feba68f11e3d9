//! Plain-text instance formats. One header line names the kind and sizes, then one
//! line per edge; `#` starts a comment, all ids are 0-based.
//!
//! ```text
//! graph n m          u v
//! digraph n m        tail head
//! hypergraph n m     s v1 .. vs
//! dypergraph n m     s head v1 .. v(s-1)
//! mixed n p q        p arcs, then q edges
//! ```

use std::fmt::Write as _;

use arbor_core::graph::{Digraph, Graph, MixedGraph};
use arbor_core::hypergraph::{Dypergraph, Hypergraph};
use serde_json::{json, Value};

#[derive(Clone, Debug)]
pub enum Instance {
    Graph(Graph),
    Digraph(Digraph),
    Hypergraph(Hypergraph),
    Dypergraph(Dypergraph),
    Mixed(MixedGraph),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Graph(_) => "graph",
            Instance::Digraph(_) => "digraph",
            Instance::Hypergraph(_) => "hypergraph",
            Instance::Dypergraph(_) => "dypergraph",
            Instance::Mixed(_) => "mixed",
        }
    }
}

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Non-empty, comment-stripped lines with their 1-based numbers, split into numbers.
fn number_lines(text: &str) -> Result<Vec<(usize, String, Vec<usize>)>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let first = words.next().unwrap_or("");
        let (word, rest): (String, Vec<&str>) = if first.chars().all(|c| c.is_ascii_digit()) {
            (String::new(), line.split_whitespace().collect())
        } else {
            (first.to_string(), words.collect())
        };
        let nums = rest
            .iter()
            .map(|w| {
                w.parse::<usize>().map_err(|_| ParseError {
                    line: i + 1,
                    message: format!("expected a non-negative integer, got {w:?}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.push((i + 1, word, nums));
    }
    Ok(out)
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn core_err(line: usize) -> impl Fn(arbor_core::Error) -> ParseError {
    move |e| err(line, e.to_string())
}

fn pair(line: usize, nums: &[usize]) -> Result<(usize, usize), ParseError> {
    match nums {
        [u, v] => Ok((*u, *v)),
        _ => Err(err(line, format!("expected 2 numbers, got {}", nums.len()))),
    }
}

pub fn parse(text: &str) -> Result<Instance, ParseError> {
    let lines = number_lines(text)?;
    let Some((hline, kind, header)) = lines.first() else {
        return Err(err(1, "empty input"));
    };
    let body = &lines[1..];
    let expect = |count: usize| -> Result<(), ParseError> {
        if body.len() != count {
            return Err(err(
                *hline,
                format!("header announces {count} lines, found {}", body.len()),
            ));
        }
        if let Some((l, w, _)) = body.iter().find(|(_, w, _)| !w.is_empty()) {
            return Err(err(*l, format!("unexpected word {w:?}")));
        }
        Ok(())
    };
    match (kind.as_str(), header.as_slice()) {
        ("graph", &[n, m]) => {
            expect(m)?;
            let mut g = Graph::new(n);
            for (l, _, nums) in body {
                let (u, v) = pair(*l, nums)?;
                g.add_edge(u, v).map_err(core_err(*l))?;
            }
            Ok(Instance::Graph(g))
        }
        ("digraph", &[n, m]) => {
            expect(m)?;
            let mut d = Digraph::new(n);
            for (l, _, nums) in body {
                let (u, v) = pair(*l, nums)?;
                d.add_arc(u, v).map_err(core_err(*l))?;
            }
            Ok(Instance::Digraph(d))
        }
        ("hypergraph", &[n, m]) => {
            expect(m)?;
            let mut h = Hypergraph::new(n);
            for (l, _, nums) in body {
                match nums.split_first() {
                    Some((&s, members)) if s == members.len() => {
                        h.add_edge(members).map_err(core_err(*l))?;
                    }
                    _ => return Err(err(*l, "expected `s v1 .. vs`")),
                }
            }
            Ok(Instance::Hypergraph(h))
        }
        ("dypergraph", &[n, m]) => {
            expect(m)?;
            let mut dy = Dypergraph::new(n);
            for (l, _, nums) in body {
                match nums.as_slice() {
                    [s, head, tails @ ..] if *s == tails.len() + 1 => {
                        let mut members = vec![*head];
                        members.extend_from_slice(tails);
                        dy.add_edge(&members, *head).map_err(core_err(*l))?;
                    }
                    _ => return Err(err(*l, "expected `s head v1 .. v(s-1)`")),
                }
            }
            Ok(Instance::Dypergraph(dy))
        }
        ("mixed", &[n, p, q]) => {
            expect(p + q)?;
            let mut d = Digraph::new(n);
            let mut g = Graph::new(n);
            for (i, (l, _, nums)) in body.iter().enumerate() {
                let (u, v) = pair(*l, nums)?;
                if i < p {
                    d.add_arc(u, v).map_err(core_err(*l))?;
                } else {
                    g.add_edge(u, v).map_err(core_err(*l))?;
                }
            }
            Ok(Instance::Mixed(
                MixedGraph::new(d, g).map_err(core_err(*hline))?,
            ))
        }
        _ => Err(err(*hline, format!("unknown header {kind:?} {header:?}"))),
    }
}

/// Canonical text; `parse(&emit(x))` gives back the same instance.
pub fn emit(instance: &Instance) -> String {
    let mut s = String::new();
    match instance {
        Instance::Graph(g) => {
            let _ = writeln!(s, "graph {} {}", g.node_count(), g.edge_count());
            for &(u, v) in g.edges() {
                let _ = writeln!(s, "{u} {v}");
            }
        }
        Instance::Digraph(d) => {
            let _ = writeln!(s, "digraph {} {}", d.node_count(), d.arc_count());
            for &(u, v) in d.arcs() {
                let _ = writeln!(s, "{u} {v}");
            }
        }
        Instance::Hypergraph(h) => {
            let _ = writeln!(s, "hypergraph {} {}", h.node_count(), h.edge_count());
            for z in h.edges() {
                let _ = writeln!(s, "{} {}", z.len(), join(z));
            }
        }
        Instance::Dypergraph(dy) => {
            let _ = writeln!(s, "dypergraph {} {}", dy.node_count(), dy.edge_count());
            for (z, head) in dy.edges() {
                let tails: Vec<usize> = z.iter().copied().filter(|v| v != head).collect();
                let _ = writeln!(
                    s,
                    "{} {head}{}{}",
                    z.len(),
                    if tails.is_empty() { "" } else { " " },
                    join(&tails)
                );
            }
        }
        Instance::Mixed(m) => {
            let _ = writeln!(
                s,
                "mixed {} {} {}",
                m.node_count(),
                m.arcs.arc_count(),
                m.edges.edge_count()
            );
            for &(u, v) in m.arcs.arcs().iter().chain(m.edges.edges()) {
                let _ = writeln!(s, "{u} {v}");
            }
        }
    }
    s
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn pairs_json(pairs: &[(usize, usize)]) -> Value {
    Value::Array(pairs.iter().map(|&(u, v)| json!([u, v])).collect())
}

/// The instance as JSON, embedded in reports so certificates are self-contained.
pub fn to_json(instance: &Instance) -> Value {
    match instance {
        Instance::Graph(g) => {
            json!({"kind": "graph", "n": g.node_count(), "edges": pairs_json(g.edges())})
        }
        Instance::Digraph(d) => {
            json!({"kind": "digraph", "n": d.node_count(), "arcs": pairs_json(d.arcs())})
        }
        Instance::Hypergraph(h) => {
            json!({"kind": "hypergraph", "n": h.node_count(), "edges": h.edges()})
        }
        Instance::Dypergraph(dy) => json!({
            "kind": "dypergraph",
            "n": dy.node_count(),
            "edges": dy.edges().iter().map(|(z, head)| json!({"head": head, "members": z})).collect::<Vec<_>>(),
        }),
        Instance::Mixed(m) => json!({
            "kind": "mixed",
            "n": m.node_count(),
            "arcs": pairs_json(m.arcs.arcs()),
            "edges": pairs_json(m.edges.edges()),
        }),
    }
}

fn as_usize(v: &Value, what: &str) -> Result<usize, String> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| format!("{what}: expected a non-negative integer"))
}

fn as_pairs(v: Option<&Value>, what: &str) -> Result<Vec<(usize, usize)>, String> {
    let arr = v
        .and_then(Value::as_array)
        .ok_or_else(|| format!("{what}: expected an array"))?;
    arr.iter()
        .map(|p| match p.as_array().map(Vec::as_slice) {
            Some([a, b]) => Ok((as_usize(a, what)?, as_usize(b, what)?)),
            _ => Err(format!("{what}: expected [u, v] pairs")),
        })
        .collect()
}

pub fn usize_list(v: &Value, what: &str) -> Result<Vec<usize>, String> {
    v.as_array()
        .ok_or_else(|| format!("{what}: expected an array"))?
        .iter()
        .map(|x| as_usize(x, what))
        .collect()
}

/// Inverse of [`to_json`].
pub fn from_json(v: &Value) -> Result<Instance, String> {
    let n = as_usize(v.get("n").unwrap_or(&Value::Null), "n")?;
    let kind = v.get("kind").and_then(Value::as_str).unwrap_or("graph");
    let e = |x: arbor_core::Error| x.to_string();
    match kind {
        "graph" => Ok(Instance::Graph(
            Graph::from_edges(n, as_pairs(v.get("edges"), "edges")?).map_err(e)?,
        )),
        "digraph" => Ok(Instance::Digraph(
            Digraph::from_arcs(n, as_pairs(v.get("arcs"), "arcs")?).map_err(e)?,
        )),
        "hypergraph" => {
            let edges = v
                .get("edges")
                .and_then(Value::as_array)
                .ok_or("edges: expected an array")?;
            let lists = edges
                .iter()
                .map(|z| usize_list(z, "hyperedge"))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Instance::Hypergraph(
                Hypergraph::from_edges(n, lists).map_err(e)?,
            ))
        }
        "dypergraph" => {
            let edges = v
                .get("edges")
                .and_then(Value::as_array)
                .ok_or("edges: expected an array")?;
            let mut dy = Dypergraph::new(n);
            for z in edges {
                let head = as_usize(z.get("head").unwrap_or(&Value::Null), "head")?;
                let members = usize_list(z.get("members").unwrap_or(&Value::Null), "members")?;
                dy.add_edge(&members, head).map_err(e)?;
            }
            Ok(Instance::Dypergraph(dy))
        }
        "mixed" => {
            let d = Digraph::from_arcs(n, as_pairs(v.get("arcs"), "arcs")?).map_err(e)?;
            let g = Graph::from_edges(n, as_pairs(v.get("edges"), "edges")?).map_err(e)?;
            Ok(Instance::Mixed(MixedGraph::new(d, g).map_err(e)?))
        }
        other => Err(format!("unknown instance kind {other:?}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_graph_with_comments() {
        let text = "# triangle\ngraph 3 3\n0 1 # first\n1 2\n\n0 2\n";
        let Instance::Graph(g) = parse(text).unwrap() else {
            panic!()
        };
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2)]);
    }

    #[test]
    fn dypergraph_lists_head_first() {
        let text = "dypergraph 3 1\n3 2 0 1\n";
        let Instance::Dypergraph(dy) = parse(text).unwrap() else {
            panic!()
        };
        assert_eq!(dy.edge(0).1, 2);
        assert_eq!(emit(&Instance::Dypergraph(dy)), text);
    }

    #[test]
    fn rejects_bad_counts_and_ranges() {
        assert!(parse("graph 3 2\n0 1\n").is_err());
        assert!(parse("graph 2 1\n0 5\n").is_err());
        assert!(parse("hypergraph 3 1\n3 0 1\n").is_err());
        assert!(parse("tree 3 1\n0 1\n").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn mixed_splits_arcs_and_edges() {
        let text = "mixed 3 1 2\n0 1\n1 2\n0 2\n";
        let inst = parse(text).unwrap();
        assert_eq!(emit(&inst), text);
        let back = from_json(&to_json(&inst)).unwrap();
        assert_eq!(emit(&back), text);
    }
}
