//! Shannon switching game on graphs: Short tags edges to connect, Cut tags edges
//! to disconnect. Two variants: span every node, or join two terminals.
//!
//! Both connecting sides use the same bookkeeping. The player holds two disjoint
//! bases of N|A for the current minor N (own edges contracted, opponent's deleted),
//! with the target in cl(A). Whatever the opponent takes, one exchange restores the
//! structure one rank lower. Short plays this in the cycle matroid; Cut in the
//! terminal variant plays it in the dual. In the spanning variant Cut follows a
//! deficient partition instead.

use crate::forest::{
    maximal_tree_connected_blocks, pack_spanning_trees, partition_deficiency, TreePacking,
};
use crate::graph::{contract, EdgeId, Graph, NodeId, Partition, UnionFind};
use crate::matroid::{
    matroid_union, max_base_packable_set, Dual, GraphicMatroid, Matroid, Minor, Restriction,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Player {
    Short,
    Cut,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Short => Player::Cut,
            Player::Cut => Player::Short,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Player::Short => "short",
            Player::Cut => "cut",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Short wants a spanning tree, Cut wants a cut.
    Global,
    /// Short wants an s-t path, Cut wants an s-t cut.
    St { s: NodeId, t: NodeId },
}

fn validate(graph: &Graph, variant: Variant) -> Result<()> {
    let n = graph.node_count();
    if n < 3 {
        return Err(Error::InvalidInput(format!(
            "game needs at least 3 nodes, got {n}"
        )));
    }
    if !graph.is_connected() {
        return Err(Error::InvalidInput("game graph must be connected".into()));
    }
    if let Variant::St { s, t } = variant {
        for v in [s, t] {
            if v >= n {
                return Err(Error::NodeOutOfRange { node: v, n });
            }
        }
        if s == t {
            return Err(Error::InvalidInput("terminals must differ".into()));
        }
    }
    Ok(())
}

/// A position: who tagged what, and in which order.
#[derive(Clone, Debug)]
pub struct Game {
    graph: Graph,
    variant: Variant,
    first: Player,
    tags: Vec<Option<Player>>,
    history: Vec<(Player, EdgeId)>,
}

impl Game {
    pub fn new(graph: Graph, variant: Variant, first: Player) -> Result<Self> {
        validate(&graph, variant)?;
        let m = graph.edge_count();
        Ok(Game {
            graph,
            variant,
            first,
            tags: vec![None; m],
            history: Vec::new(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn first(&self) -> Player {
        self.first
    }

    pub fn tags(&self) -> &[Option<Player>] {
        &self.tags
    }

    pub fn history(&self) -> &[(Player, EdgeId)] {
        &self.history
    }

    pub fn to_move(&self) -> Player {
        if self.history.len() % 2 == 0 {
            self.first
        } else {
            self.first.other()
        }
    }

    pub fn edges_of(&self, p: Player) -> Vec<EdgeId> {
        (0..self.tags.len())
            .filter(|&e| self.tags[e] == Some(p))
            .collect()
    }

    pub fn untagged(&self) -> Vec<EdgeId> {
        (0..self.tags.len())
            .filter(|&e| self.tags[e].is_none())
            .collect()
    }

    fn connectivity(&self, keep: impl Fn(Option<Player>) -> bool) -> UnionFind {
        let mut uf = UnionFind::new(self.graph.node_count());
        for (e, &(u, v)) in self.graph.edges().iter().enumerate() {
            if keep(self.tags[e]) {
                uf.union(u, v);
            }
        }
        uf
    }

    pub fn winner(&self) -> Option<Player> {
        let mut short = self.connectivity(|t| t == Some(Player::Short));
        let mut open = self.connectivity(|t| t != Some(Player::Cut));
        match self.variant {
            Variant::Global => {
                if short.set_count() == 1 {
                    Some(Player::Short)
                } else if open.set_count() > 1 {
                    Some(Player::Cut)
                } else {
                    None
                }
            }
            Variant::St { s, t } => {
                if short.same(s, t) {
                    Some(Player::Short)
                } else if !open.same(s, t) {
                    Some(Player::Cut)
                } else {
                    None
                }
            }
        }
    }

    pub fn is_over(&self) -> bool {
        self.winner().is_some()
    }

    pub fn play(&mut self, player: Player, edge: EdgeId) -> Result<()> {
        if edge >= self.tags.len() {
            return Err(Error::UnknownEdge(edge));
        }
        if self.is_over() {
            return Err(Error::GameOver);
        }
        if player != self.to_move() {
            return Err(Error::NotYourTurn(self.to_move().name()));
        }
        if self.tags[edge].is_some() {
            return Err(Error::AlreadyTagged(edge));
        }
        self.tags[edge] = Some(player);
        self.history.push((player, edge));
        Ok(())
    }

    /// Whether tagging `edge` for `player` ends the game in their favour.
    pub fn would_win(&self, player: Player, edge: EdgeId) -> bool {
        if self.tags.get(edge) != Some(&None) {
            return false;
        }
        let mut next = self.clone();
        next.tags[edge] = Some(player);
        next.winner() == Some(player)
    }

    /// Cycle matroid of G, plus the terminal edge s-t (id m) in the path variant.
    fn arena(&self) -> GraphicMatroid {
        let mut edges = self.graph.edges().to_vec();
        if let Variant::St { s, t } = self.variant {
            edges.push((s, t));
        }
        GraphicMatroid::from_edge_list(self.graph.node_count(), edges)
    }

    fn target(&self) -> Target {
        match self.variant {
            Variant::Global => Target::Spanning,
            Variant::St { .. } => Target::Element(self.graph.edge_count()),
        }
    }
}

#[derive(Clone, Copy, Debug)]
enum Target {
    Spanning,
    Element(usize),
}

/// The minor a connecting side plays in: own elements contracted, opponent's deleted.
fn connector_minor<'a>(
    game: &Game,
    side: Player,
    arena: &'a GraphicMatroid,
) -> Box<dyn Matroid + 'a> {
    let own = game.edges_of(side);
    let theirs = game.edges_of(side.other());
    match side {
        Player::Short => Box::new(Minor::new(arena, &own, &theirs)),
        Player::Cut => Box::new(Minor::new(Dual::new(arena), &own, &theirs)),
    }
}

fn reaches_target(n: &dyn Matroid, set: &[usize], target: Target) -> bool {
    match target {
        Target::Spanning => n.rank(set) == n.full_rank(),
        Target::Element(e0) => {
            let mut with = set.to_vec();
            with.push(e0);
            n.rank(&with) == n.rank(set)
        }
    }
}

/// Two disjoint bases of N|A with the target spanned by A, if any A ⊆ `free` works.
fn connector_structure(
    n: &dyn Matroid,
    free: &[usize],
    target: Target,
) -> Result<Option<[Vec<usize>; 2]>> {
    let (a, classes) = max_base_packable_set(n, 2, free)?;
    if !reaches_target(n, &a, target) {
        return Ok(None);
    }
    let mut it = classes.into_iter();
    let b1 = it.next().unwrap_or_default();
    let b2 = it.next().unwrap_or_default();
    Ok(Some([b1, b2]))
}

fn with_element(set: &[usize], skip: Option<usize>, add: usize) -> Vec<usize> {
    let mut out: Vec<usize> = set.iter().copied().filter(|&e| Some(e) != skip).collect();
    out.push(add);
    out
}

/// One exchange of the connector strategy. `n` is the current minor (the opponent's
/// last element `x` already removed). Returns the reply and updates `bases` so they
/// stay valid once the reply is contracted.
fn connector_reply(
    n: &dyn Matroid,
    bases: &mut [Vec<usize>; 2],
    x: Option<usize>,
    free: &[usize],
) -> Result<usize> {
    if let Some(x) = x {
        for i in 0..2 {
            if let Some(pos) = bases[i].iter().position(|&e| e == x) {
                let j = 1 - i;
                let mut candidates = bases[j].clone();
                candidates.sort_unstable();
                let y = candidates
                    .into_iter()
                    .find(|&y| n.is_independent(&with_element(&bases[i], Some(x), y)))
                    .ok_or_else(|| {
                        Error::Inconsistent("no exchange element in the other basis".into())
                    })?;
                bases[i].remove(pos);
                bases[j].retain(|&e| e != y);
                return Ok(y);
            }
        }
    }
    let y = *free.first().ok_or(Error::NoUntaggedEdge)?;
    for basis in bases.iter_mut() {
        if let Some(pos) = basis.iter().position(|&e| e == y) {
            basis.remove(pos);
            continue;
        }
        if n.is_independent(&with_element(basis, None, y)) {
            continue;
        }
        let mut order = basis.clone();
        order.sort_unstable();
        let z = order
            .into_iter()
            .find(|&z| n.is_independent(&with_element(basis, Some(z), y)))
            .ok_or_else(|| Error::Inconsistent("fundamental circuit missing".into()))?;
        basis.retain(|&e| e != z);
    }
    Ok(y)
}

/// What the engine keeps between moves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StrategyCore {
    /// Two disjoint bases of the current minor (edge ids of G). For Short these
    /// are two edge-disjoint spanning trees of the shrunk graph.
    Bases { bases: [Vec<EdgeId>; 2] },
    /// A deficient partition; Cut keeps tagging its cross edges.
    Partition { partition: Partition },
    /// No winning structure; the engine plays heuristically.
    None,
}

/// Deterministic engine for one side.
#[derive(Clone, Debug)]
pub struct Engine {
    side: Player,
    core: StrategyCore,
}

impl Engine {
    /// Builds the engine for `side` in the given position.
    pub fn new(game: &Game, side: Player) -> Result<Self> {
        let mut engine = Engine {
            side,
            core: StrategyCore::None,
        };
        engine.core = match (side, game.variant) {
            (Player::Cut, Variant::Global) => {
                let needed = if game.to_move() == Player::Cut { 1 } else { 2 };
                let (rest, _) = game.graph.without_edges(&game.edges_of(Player::Cut));
                let d = partition_deficiency(&rest, 2)?;
                if d.value >= needed {
                    StrategyCore::Partition {
                        partition: d.partition,
                    }
                } else {
                    StrategyCore::None
                }
            }
            _ if game.to_move() != side => {
                let arena = game.arena();
                let n = connector_minor(game, side, &arena);
                match connector_structure(n.as_ref(), &game.untagged(), game.target())? {
                    Some(bases) => StrategyCore::Bases { bases },
                    None => StrategyCore::None,
                }
            }
            _ => StrategyCore::None,
        };
        Ok(engine)
    }

    pub fn side(&self) -> Player {
        self.side
    }

    pub fn core(&self) -> &StrategyCore {
        &self.core
    }

    /// Picks the engine's next edge and updates the core as if it were played.
    pub fn choose(&mut self, game: &Game) -> Result<EdgeId> {
        if game.is_over() {
            return Err(Error::GameOver);
        }
        if game.to_move() != self.side {
            return Err(Error::NotEngineTurn);
        }
        let free = game.untagged();
        if free.is_empty() {
            return Err(Error::NoUntaggedEdge);
        }
        if let StrategyCore::Partition { partition } = &self.core {
            let cross = partition.cross_edges(&game.graph);
            let pick = cross
                .into_iter()
                .find(|&e| game.tags[e].is_none())
                .unwrap_or(free[0]);
            return Ok(pick);
        }
        if self.side == Player::Cut && game.variant == Variant::Global {
            return Ok(heuristic_move(game, self.side));
        }
        let arena = game.arena();
        let n = connector_minor(game, self.side, &arena);
        let last = game
            .history
            .last()
            .copied()
            .filter(|&(p, _)| p != self.side);
        if let (StrategyCore::Bases { bases }, Some((_, x))) = (&mut self.core, last) {
            let intact = bases
                .iter()
                .flatten()
                .all(|&e| e == x || game.tags[e].is_none());
            if intact {
                let mut next = bases.clone();
                if let Ok(y) = connector_reply(n.as_ref(), &mut next, Some(x), &free) {
                    *bases = next;
                    return Ok(y);
                }
            }
        }
        // Fresh search: the lowest move after which the structure exists.
        let mut own = game.edges_of(self.side);
        let theirs = game.edges_of(self.side.other());
        for &y in &free {
            own.push(y);
            let rest: Vec<usize> = free.iter().copied().filter(|&e| e != y).collect();
            let found = match self.side {
                Player::Short => {
                    let minor = Minor::new(&arena, &own, &theirs);
                    connector_structure(&minor, &rest, game.target())?
                }
                Player::Cut => {
                    let minor = Minor::new(Dual::new(&arena), &own, &theirs);
                    connector_structure(&minor, &rest, game.target())?
                }
            };
            own.pop();
            if let Some(bases) = found {
                self.core = StrategyCore::Bases { bases };
                return Ok(y);
            }
        }
        self.core = StrategyCore::None;
        Ok(heuristic_move(game, self.side))
    }

    /// Chooses and plays the engine's move.
    pub fn respond(&mut self, game: &mut Game) -> Result<EdgeId> {
        let e = self.choose(game)?;
        game.play(self.side, e)?;
        Ok(e)
    }
}

/// Win now if possible, else block the opponent's immediate win, else the lowest
/// edge that still matters.
pub fn heuristic_move(game: &Game, side: Player) -> EdgeId {
    let free = game.untagged();
    if let Some(&e) = free.iter().find(|&&e| game.would_win(side, e)) {
        return e;
    }
    if let Some(&e) = free.iter().find(|&&e| game.would_win(side.other(), e)) {
        return e;
    }
    let mut short = game.connectivity(|t| t == Some(Player::Short));
    let useful = free.iter().copied().find(|&e| {
        let (u, v) = game.graph.edge(e);
        !short.same(u, v)
    });
    useful.unwrap_or(free[0])
}

/// Who controls an edge choice in [`play_out`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Policy {
    Engine,
    Heuristic,
    Lowest,
}

/// Plays a whole game and returns the move list and the winner.
pub fn play_out(game: &mut Game, short: Policy, cut: Policy) -> Result<Player> {
    let mut engines = [
        Engine::new(game, Player::Short)?,
        Engine::new(game, Player::Cut)?,
    ];
    loop {
        if let Some(w) = game.winner() {
            return Ok(w);
        }
        let p = game.to_move();
        let (idx, policy) = match p {
            Player::Short => (0, short),
            Player::Cut => (1, cut),
        };
        let e = match policy {
            Policy::Engine => engines[idx].choose(game)?,
            Policy::Heuristic => heuristic_move(game, p),
            Policy::Lowest => *game.untagged().first().ok_or(Error::NoUntaggedEdge)?,
        };
        game.play(p, e)?;
    }
}

/// Why the predicted winner wins from the initial position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// Two spanning trees of G sharing at most the edge `shared`.
    SpanningTrees {
        trees: [Vec<EdgeId>; 2],
        shared: Option<EdgeId>,
    },
    /// Node set U containing both terminals, with two spanning trees of G[U]
    /// sharing at most `shared`.
    Block {
        nodes: Vec<NodeId>,
        trees: [Vec<EdgeId>; 2],
        shared: Option<EdgeId>,
    },
    /// A partition with 2(|P| - 1) - e(P) = deficit.
    DeficientPartition {
        partition: Partition,
        cross: Vec<EdgeId>,
        deficit: usize,
    },
    /// A partition separating the terminals whose cross edges split into F1, F2,
    /// with F2 a forest and F1 a forest leaving s and t apart.
    SeparatingPartition {
        partition: Partition,
        forests: Option<[Vec<EdgeId>; 2]>,
    },
    /// Two disjoint bases of the dual cycle matroid restricted to `support`,
    /// whose span contains the terminal edge.
    DualBases {
        support: Vec<EdgeId>,
        bases: [Vec<EdgeId>; 2],
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub winner: Player,
    pub certificate: Certificate,
}

fn two(trees: Vec<Vec<EdgeId>>) -> [Vec<EdgeId>; 2] {
    let mut it = trees.into_iter();
    [it.next().unwrap_or_default(), it.next().unwrap_or_default()]
}

/// Two spanning trees sharing at most one edge, trying G + copy(y) in edge order.
fn trees_sharing_one(g: &Graph) -> Result<Option<([Vec<EdgeId>; 2], Option<EdgeId>)>> {
    if let TreePacking::Packed { trees } = pack_spanning_trees(g, 2)? {
        return Ok(Some((two(trees), None)));
    }
    let m = g.edge_count();
    for y in 0..m {
        let mut h = g.clone();
        let (u, v) = g.edge(y);
        h.add_edge(u, v)?;
        if let TreePacking::Packed { trees } = pack_spanning_trees(&h, 2)? {
            let mut trees = two(trees);
            for t in trees.iter_mut() {
                for e in t.iter_mut() {
                    if *e == m {
                        *e = y;
                    }
                }
                t.sort_unstable();
            }
            return Ok(Some((trees, Some(y))));
        }
    }
    Ok(None)
}

/// Block of the maximal 2-tree-connected partition holding both terminals, with
/// its two trees as original edge ids.
fn terminal_block(
    g: &Graph,
    s: NodeId,
    t: NodeId,
) -> Result<Option<(Vec<NodeId>, [Vec<EdgeId>; 2])>> {
    let blocks = maximal_tree_connected_blocks(g, 2)?;
    if blocks.block_of(s) != blocks.block_of(t) {
        return Ok(None);
    }
    let nodes = blocks.blocks()[blocks.block_of(s)].clone();
    let (h, ids) = g.induced_subgraph(&nodes);
    match pack_spanning_trees(&h, 2)? {
        TreePacking::Packed { trees } => {
            let mut trees = two(trees);
            for t in trees.iter_mut() {
                for e in t.iter_mut() {
                    *e = ids[*e];
                }
                t.sort_unstable();
            }
            Ok(Some((nodes, trees)))
        }
        TreePacking::Deficient { .. } => Err(Error::Inconsistent(
            "maximal block is not 2-tree-connected".into(),
        )),
    }
}

/// Short moving first in the path variant: the lowest edge y after which the
/// terminals share a 2-tree-connected block of G/y.
fn terminal_block_after_move(g: &Graph, s: NodeId, t: NodeId) -> Result<Option<Certificate>> {
    let n = g.node_count();
    for y in 0..g.edge_count() {
        let (a, b) = g.edge(y);
        let mut labels: Vec<usize> = (0..n).collect();
        labels[b] = labels[a];
        let p = Partition::from_labels(&labels);
        let c = contract(g, &p)?;
        let (cs, ct) = (p.block_of(s), p.block_of(t));
        if cs == ct {
            return Ok(Some(Certificate::Block {
                nodes: vec![s.min(t), s.max(t)],
                trees: [vec![y], vec![y]],
                shared: Some(y),
            }));
        }
        if let Some((block, trees)) = terminal_block(&c.graph, cs, ct)? {
            let mut nodes: Vec<NodeId> =
                (0..n).filter(|&v| block.contains(&p.block_of(v))).collect();
            nodes.sort_unstable();
            let trees = trees.map(|t| {
                let mut t: Vec<EdgeId> = t.into_iter().map(|e| c.original[e]).collect();
                t.push(y);
                t.sort_unstable();
                t
            });
            return Ok(Some(Certificate::Block {
                nodes,
                trees,
                shared: Some(y),
            }));
        }
    }
    Ok(None)
}

/// Splits the cross edges of `p` into F1 (forest keeping s, t apart) and F2 (forest).
fn separating_forests(
    g: &Graph,
    p: &Partition,
    s: NodeId,
    t: NodeId,
) -> Result<Option<[Vec<EdgeId>; 2]>> {
    let c = contract(g, p)?;
    let mh = c.graph.edge_count();
    let mut edges = c.graph.edges().to_vec();
    edges.push((p.block_of(s), p.block_of(t)));
    let arena = GraphicMatroid::from_edge_list(p.len(), edges);
    let f1 = Minor::contraction(&arena, &[mh]);
    let f2 = Restriction::deleting(&arena, &[mh]);
    let all: Vec<usize> = (0..mh).collect();
    let out = matroid_union(&[&f1, &f2], &all)?;
    if out.rank < mh {
        return Ok(None);
    }
    let classes = out.labeling.classes();
    Ok(Some(two(classes).map(|f| {
        let mut f: Vec<EdgeId> = f.into_iter().map(|e| c.original[e]).collect();
        f.sort_unstable();
        f
    })))
}

/// Predicts the winner under perfect play from the empty position and explains why.
pub fn analyze(graph: &Graph, variant: Variant, first: Player) -> Result<Analysis> {
    validate(graph, variant)?;
    match (variant, first) {
        (Variant::Global, Player::Cut) => match pack_spanning_trees(graph, 2)? {
            TreePacking::Packed { trees } => Ok(Analysis {
                winner: Player::Short,
                certificate: Certificate::SpanningTrees {
                    trees: two(trees),
                    shared: None,
                },
            }),
            TreePacking::Deficient {
                partition, deficit, ..
            } => Ok(Analysis {
                winner: Player::Cut,
                certificate: Certificate::DeficientPartition {
                    cross: partition.cross_edges(graph),
                    partition,
                    deficit,
                },
            }),
        },
        (Variant::Global, Player::Short) => {
            if let Some((trees, shared)) = trees_sharing_one(graph)? {
                return Ok(Analysis {
                    winner: Player::Short,
                    certificate: Certificate::SpanningTrees { trees, shared },
                });
            }
            let d = partition_deficiency(graph, 2)?;
            if d.value < 2 {
                return Err(Error::Inconsistent(
                    "deficiency below 2 without shared trees".into(),
                ));
            }
            Ok(Analysis {
                winner: Player::Cut,
                certificate: Certificate::DeficientPartition {
                    cross: d.partition.cross_edges(graph),
                    partition: d.partition,
                    deficit: d.value,
                },
            })
        }
        (Variant::St { s, t }, Player::Cut) => {
            if let Some((nodes, trees)) = terminal_block(graph, s, t)? {
                return Ok(Analysis {
                    winner: Player::Short,
                    certificate: Certificate::Block {
                        nodes,
                        trees,
                        shared: None,
                    },
                });
            }
            let partition = maximal_tree_connected_blocks(graph, 2)?;
            let forests = separating_forests(graph, &partition, s, t)?;
            Ok(Analysis {
                winner: Player::Cut,
                certificate: Certificate::SeparatingPartition { partition, forests },
            })
        }
        (Variant::St { s, t }, Player::Short) => {
            if let Some((nodes, trees)) = terminal_block(graph, s, t)? {
                return Ok(Analysis {
                    winner: Player::Short,
                    certificate: Certificate::Block {
                        nodes,
                        trees,
                        shared: None,
                    },
                });
            }
            if let Some(certificate) = terminal_block_after_move(graph, s, t)? {
                return Ok(Analysis {
                    winner: Player::Short,
                    certificate,
                });
            }
            let game = Game::new(graph.clone(), variant, first)?;
            let arena = game.arena();
            let dual = Dual::new(&arena);
            let free: Vec<usize> = (0..graph.edge_count()).collect();
            let (support, classes) = max_base_packable_set(&dual, 2, &free)?;
            if !reaches_target(&dual, &support, game.target()) {
                return Err(Error::Inconsistent(
                    "neither side holds a winning structure".into(),
                ));
            }
            Ok(Analysis {
                winner: Player::Cut,
                certificate: Certificate::DualBases {
                    support,
                    bases: two(classes),
                },
            })
        }
    }
}

/// The winner under perfect play, from the analysis.
pub fn predicted_winner(graph: &Graph, variant: Variant, first: Player) -> Result<Player> {
    Ok(analyze(graph, variant, first)?.winner)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    fn triangle() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn triangle_cut_first_is_cut_win() {
        let a = analyze(&triangle(), Variant::Global, Player::Cut).unwrap();
        assert_eq!(a.winner, Player::Cut);
        match a.certificate {
            Certificate::DeficientPartition {
                partition, deficit, ..
            } => {
                assert_eq!(partition.len(), 3);
                assert_eq!(deficit, 1);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn triangle_short_first_is_short_win() {
        let a = analyze(&triangle(), Variant::Global, Player::Short).unwrap();
        assert_eq!(a.winner, Player::Short);
        let mut game = Game::new(triangle(), Variant::Global, Player::Short).unwrap();
        assert_eq!(
            play_out(&mut game, Policy::Engine, Policy::Engine).unwrap(),
            Player::Short
        );
    }

    #[test]
    fn k4_cut_first_is_short_win() {
        let a = analyze(&k4(), Variant::Global, Player::Cut).unwrap();
        assert_eq!(a.winner, Player::Short);
        let mut game = Game::new(k4(), Variant::Global, Player::Cut).unwrap();
        assert_eq!(
            play_out(&mut game, Policy::Engine, Policy::Engine).unwrap(),
            Player::Short
        );
    }

    #[test]
    fn exchange_reply_on_k4() {
        let mut game = Game::new(k4(), Variant::Global, Player::Cut).unwrap();
        let mut engine = Engine::new(&game, Player::Short).unwrap();
        engine.core = StrategyCore::Bases {
            bases: [vec![0, 3, 5], vec![1, 2, 4]],
        };
        game.play(Player::Cut, 0).unwrap();
        assert_eq!(engine.respond(&mut game).unwrap(), 1);
    }

    #[test]
    fn move_errors() {
        let mut game = Game::new(k4(), Variant::Global, Player::Cut).unwrap();
        assert!(matches!(
            game.play(Player::Short, 0),
            Err(Error::NotYourTurn(_))
        ));
        game.play(Player::Cut, 0).unwrap();
        assert!(matches!(
            game.play(Player::Short, 0),
            Err(Error::AlreadyTagged(0))
        ));
        assert!(matches!(
            game.play(Player::Short, 9),
            Err(Error::UnknownEdge(9))
        ));
        let engine = Engine::new(&game, Player::Cut).unwrap();
        assert!(matches!(
            engine.clone().choose(&game),
            Err(Error::NotEngineTurn)
        ));
    }

    #[test]
    fn rejects_small_or_disconnected() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(Game::new(g, Variant::Global, Player::Cut).is_err());
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(analyze(&g, Variant::Global, Player::Cut).is_err());
        assert!(Game::new(triangle(), Variant::St { s: 1, t: 1 }, Player::Cut).is_err());
    }

    #[test]
    fn path_variant_on_triangle_with_chord() {
        // s = 0, t = 2: triangle 0-1-2 plus a direct edge 0-2.
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2), (0, 2)]).unwrap();
        let v = Variant::St { s: 0, t: 2 };
        let a = analyze(&g, v, Player::Cut).unwrap();
        assert_eq!(a.winner, Player::Short);
        let mut game = Game::new(g, v, Player::Cut).unwrap();
        assert_eq!(
            play_out(&mut game, Policy::Engine, Policy::Engine).unwrap(),
            Player::Short
        );
    }

    #[test]
    fn path_variant_cut_certificate_has_forests() {
        let v = Variant::St { s: 0, t: 2 };
        let a = analyze(&triangle(), v, Player::Cut).unwrap();
        assert_eq!(a.winner, Player::Cut);
        match a.certificate {
            Certificate::SeparatingPartition { partition, forests } => {
                assert_ne!(partition.block_of(0), partition.block_of(2));
                assert!(forests.is_some());
            }
            other => panic!("unexpected {other:?}"),
        }
        let mut game = Game::new(triangle(), v, Player::Cut).unwrap();
        assert_eq!(
            play_out(&mut game, Policy::Heuristic, Policy::Engine).unwrap(),
            Player::Cut
        );
    }
}
