//! JSON game server: one exclusive session per game, sessions independent.
//!
//! ```text
//! POST /api/games                   {graph, variant?, first?, engine_side?, s?, t?}
//! GET  /api/games/{id}
//! POST /api/games/{id}/moves        {edge_id}
//! GET  /api/games/{id}/certificate
//! ```
//! Unknown ids give 404, moves out of turn, on tagged edges or after the end give
//! 409, and any malformed body or graph gives 422.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use arbor_core::game::{analyze, Analysis, Engine, Game, Player, Variant};
use arbor_core::graph::{Graph, Partition, UnionFind};
use arbor_core::Error;
use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde_json::{json, Value};

use crate::commands::{certificate_json, core_json, parse_player};
use crate::format::{self, Instance};
use crate::report::pairs_json;

/// Largest graph a session accepts.
pub const MAX_EDGES: usize = 200;

struct Session {
    game: Game,
    engine: Engine,
    analysis: Analysis,
}

#[derive(Default)]
pub struct AppState {
    sessions: Mutex<HashMap<u64, Arc<Mutex<Session>>>>,
    next: AtomicU64,
}

struct ApiError(StatusCode, String);

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.0, Json(json!({"error": self.1}))).into_response()
    }
}

fn malformed(msg: impl Into<String>) -> ApiError {
    ApiError(StatusCode::UNPROCESSABLE_ENTITY, msg.into())
}

/// Status for a rejected move.
fn move_error(e: Error) -> ApiError {
    match e {
        Error::UnknownEdge(_) => malformed(e.to_string()),
        Error::AlreadyTagged(_) | Error::NotYourTurn(_) | Error::GameOver => {
            ApiError(StatusCode::CONFLICT, e.to_string())
        }
        other => ApiError(StatusCode::INTERNAL_SERVER_ERROR, other.to_string()),
    }
}

fn internal(e: Error) -> ApiError {
    ApiError(StatusCode::INTERNAL_SERVER_ERROR, e.to_string())
}

fn parse_body(body: &Bytes) -> Result<Value, ApiError> {
    let v: Value =
        serde_json::from_slice(body).map_err(|e| malformed(format!("invalid JSON: {e}")))?;
    if !v.is_object() {
        return Err(malformed("expected a JSON object"));
    }
    Ok(v)
}

fn parse_graph(v: &Value) -> Result<Graph, ApiError> {
    let instance = match v {
        Value::String(text) => format::parse(text).map_err(|e| malformed(format!("graph: {e}")))?,
        Value::Object(_) => {
            let mut v = v.clone();
            v["kind"] = json!("graph");
            format::from_json(&v).map_err(|e| malformed(format!("graph: {e}")))?
        }
        _ => return Err(malformed("graph: expected an object {n, edges} or text")),
    };
    match instance {
        Instance::Graph(g) if g.edge_count() <= MAX_EDGES => Ok(g),
        Instance::Graph(g) => Err(malformed(format!(
            "graph: {} edges exceed the limit {MAX_EDGES}",
            g.edge_count()
        ))),
        other => Err(malformed(format!(
            "graph: expected a graph, got a {}",
            other.kind()
        ))),
    }
}

fn player_field(v: &Value, key: &str, default: Player) -> Result<Player, ApiError> {
    match v.get(key) {
        None | Some(Value::Null) => Ok(default),
        Some(Value::String(s)) => {
            parse_player(s).ok_or_else(|| malformed(format!("{key}: unknown player {s:?}")))
        }
        Some(_) => Err(malformed(format!("{key}: expected \"short\" or \"cut\""))),
    }
}

fn node_field(v: &Value, key: &str) -> Result<usize, ApiError> {
    v.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| malformed(format!("{key}: expected a node id")))
}

fn state_json(id: u64, s: &Session) -> Value {
    let game = &s.game;
    let (variant, st) = match game.variant() {
        Variant::Global => ("global", (Value::Null, Value::Null)),
        Variant::St { s, t } => ("st", (json!(s), json!(t))),
    };
    let tags: Vec<&str> = game
        .tags()
        .iter()
        .map(|t| t.map_or("untagged", Player::name))
        .collect();
    let history: Vec<Value> = game
        .history()
        .iter()
        .map(|&(p, e)| json!({"player": p.name(), "edge": e}))
        .collect();
    let legal: Vec<usize> = if game.is_over() {
        Vec::new()
    } else {
        game.untagged()
    };
    json!({
        "id": id.to_string(),
        "graph": {"n": game.graph().node_count(), "edges": pairs_json(game.graph().edges())},
        "variant": variant,
        "s": st.0,
        "t": st.1,
        "first": game.first().name(),
        "engine_side": s.engine.side().name(),
        "human_side": s.engine.side().other().name(),
        "to_move": if game.is_over() { Value::Null } else { json!(game.to_move().name()) },
        "tags": tags,
        "history": history,
        "winner": game.winner().map(Player::name),
        "legal_moves": legal,
    })
}

fn analysis_json(a: &Analysis) -> Value {
    json!({"winner": a.winner.name(), "certificate": certificate_json(&a.certificate)})
}

/// Engine reply when it is the engine's turn.
fn engine_turn(s: &mut Session) -> Result<Option<usize>, ApiError> {
    if s.game.is_over() || s.game.to_move() != s.engine.side() {
        return Ok(None);
    }
    s.engine.respond(&mut s.game).map(Some).map_err(internal)
}

fn with_move(mut state: Value, engine_move: Option<usize>) -> Value {
    state["engine_move"] = json!(engine_move);
    state
}

async fn create(State(app): State<Arc<AppState>>, body: Bytes) -> Result<Response, ApiError> {
    let v = parse_body(&body)?;
    let graph = parse_graph(v.get("graph").ok_or_else(|| malformed("graph: missing"))?)?;
    let variant = match v.get("variant").and_then(Value::as_str).unwrap_or("global") {
        "global" => Variant::Global,
        "st" => Variant::St {
            s: node_field(&v, "s")?,
            t: node_field(&v, "t")?,
        },
        other => return Err(malformed(format!("variant: unknown {other:?}"))),
    };
    let first = player_field(&v, "first", Player::Short)?;
    let engine_side = player_field(&v, "engine_side", Player::Cut)?;
    let game = Game::new(graph.clone(), variant, first).map_err(|e| malformed(e.to_string()))?;
    let analysis = analyze(&graph, variant, first).map_err(internal)?;
    let engine = Engine::new(&game, engine_side).map_err(internal)?;
    let mut session = Session {
        game,
        engine,
        analysis,
    };
    let engine_move = engine_turn(&mut session)?;
    let id = app.next.fetch_add(1, Ordering::Relaxed) + 1;
    let out = json!({
        "id": id.to_string(),
        "analysis": analysis_json(&session.analysis),
        "state": state_json(id, &session),
        "engine_move": engine_move,
    });
    app.sessions
        .lock()
        .expect("session table")
        .insert(id, Arc::new(Mutex::new(session)));
    Ok((StatusCode::CREATED, Json(out)).into_response())
}

fn session(app: &AppState, id: &str) -> Result<(u64, Arc<Mutex<Session>>), ApiError> {
    let missing = || ApiError(StatusCode::NOT_FOUND, format!("no game {id:?}"));
    let key: u64 = id.parse().map_err(|_| missing())?;
    let table = app.sessions.lock().expect("session table");
    table
        .get(&key)
        .cloned()
        .map(|s| (key, s))
        .ok_or_else(missing)
}

async fn show(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
) -> Result<Json<Value>, ApiError> {
    let (key, s) = session(&app, &id)?;
    let s = s.lock().expect("session");
    Ok(Json(state_json(key, &s)))
}

async fn play(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<Value>, ApiError> {
    let (key, s) = session(&app, &id)?;
    let v = parse_body(&body)?;
    let edge = v
        .get("edge_id")
        .and_then(Value::as_u64)
        .ok_or_else(|| malformed("edge_id: expected an edge id"))? as usize;
    let mut s = s.lock().expect("session");
    let human = s.engine.side().other();
    s.game.play(human, edge).map_err(move_error)?;
    let engine_move = engine_turn(&mut s)?;
    Ok(Json(with_move(state_json(key, &s), engine_move)))
}

async fn certificate(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
) -> Result<Json<Value>, ApiError> {
    let (key, s) = session(&app, &id)?;
    let s = s.lock().expect("session");
    Ok(Json(json!({
        "id": key.to_string(),
        "engine_side": s.engine.side().name(),
        "core": core_json(s.engine.core()),
        "analysis": analysis_json(&s.analysis),
    })))
}

/// Routes of the game API, plus static assets from `static_dir` when given.
pub fn router(static_dir: Option<PathBuf>) -> Router {
    let api = Router::new()
        .route("/api/games", post(create))
        .route("/api/games/:id", get(show))
        .route("/api/games/:id/moves", post(play))
        .route("/api/games/:id/certificate", get(certificate))
        .with_state(Arc::new(AppState::default()));
    match static_dir {
        Some(dir) => api.fallback_service(tower_http::services::ServeDir::new(dir)),
        None => api,
    }
}

pub fn serve_blocking(host: &str, port: u16, static_dir: Option<PathBuf>) -> Result<(), String> {
    if let Some(dir) = &static_dir {
        if !dir.is_dir() {
            return Err(format!("{}: not a directory", dir.display()));
        }
    }
    let runtime = tokio::runtime::Runtime::new().map_err(|e| e.to_string())?;
    runtime.block_on(async move {
        let listener = tokio::net::TcpListener::bind((host, port))
            .await
            .map_err(|e| format!("{host}:{port}: {e}"))?;
        let addr = listener.local_addr().map_err(|e| e.to_string())?;
        eprintln!("serving games on http://{addr}");
        axum::serve(listener, router(static_dir))
            .await
            .map_err(|e| e.to_string())
    })
}

fn graphic_rank(g: &Graph, edges: impl IntoIterator<Item = usize>) -> usize {
    g.node_count() - g.component_count(edges)
}

/// Checks a game analysis certificate by counting on G.
pub fn check_game_certificate(
    g: &Graph,
    variant: Variant,
    first: Player,
    winner: Player,
    c: &Value,
) -> Result<(), String> {
    let kind = c
        .get("kind")
        .and_then(Value::as_str)
        .ok_or("certificate: missing kind")?;
    let m = g.edge_count();
    let list = |key: &str| format::usize_list(c.get(key).unwrap_or(&Value::Null), key);
    let two = |key: &str| -> Result<[Vec<usize>; 2], String> {
        let arr = c
            .get(key)
            .and_then(Value::as_array)
            .ok_or(format!("{key}: expected two lists"))?;
        match arr.as_slice() {
            [a, b] => Ok([format::usize_list(a, key)?, format::usize_list(b, key)?]),
            _ => Err(format!("{key}: expected two lists")),
        }
    };
    let shared = c.get("shared").and_then(Value::as_u64).map(|x| x as usize);
    let part = |key: &str| -> Result<Partition, String> {
        let blocks = c
            .get(key)
            .and_then(Value::as_array)
            .ok_or(format!("{key}: expected blocks"))?
            .iter()
            .map(|b| format::usize_list(b, key))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(g.node_count(), blocks).map_err(|e| e.to_string())
    };
    let expect = |who: Player| {
        if winner == who {
            Ok(())
        } else {
            Err(format!(
                "{kind} certificate does not support winner {}",
                winner.name()
            ))
        }
    };
    // trees over `nodes` using edges of G, sharing at most `shared`
    let trees_on = |nodes: &[usize], trees: &[Vec<usize>; 2]| -> Result<(), String> {
        if shared.is_some() && first != Player::Short {
            return Err("a shared edge needs Short to move first".into());
        }
        let mut inside = vec![false; g.node_count()];
        nodes.iter().for_each(|&v| inside[v] = true);
        let mut seen = vec![false; m];
        for (i, t) in trees.iter().enumerate() {
            let mut uf = UnionFind::new(g.node_count());
            for &e in t {
                if e >= m {
                    return Err(format!("edge {e} out of range"));
                }
                if seen[e] && Some(e) != shared {
                    return Err(format!("edge {e} used twice"));
                }
                seen[e] = true;
                let (u, v) = g.edge(e);
                if !inside[u] || !inside[v] || !uf.union(u, v) {
                    return Err(format!("tree {i} is not a tree on the given nodes"));
                }
            }
            if t.len() + 1 != nodes.len() {
                return Err(format!("tree {i} does not span"));
            }
        }
        Ok(())
    };
    match kind {
        "spanning_trees" => {
            expect(Player::Short)?;
            let all: Vec<usize> = (0..g.node_count()).collect();
            trees_on(&all, &two("trees")?)
        }
        "block" => {
            expect(Player::Short)?;
            let nodes = list("nodes")?;
            if nodes.iter().any(|&v| v >= g.node_count()) {
                return Err("block node out of range".into());
            }
            if let Variant::St { s, t } = variant {
                if !nodes.contains(&s) || !nodes.contains(&t) {
                    return Err("block misses a terminal".into());
                }
            }
            trees_on(&nodes, &two("trees")?)
        }
        "deficient_partition" => {
            expect(Player::Cut)?;
            let p = part("partition")?;
            let cross = list("cross")?;
            if cross != p.cross_edges(g) {
                return Err("cross edges do not match the partition".into());
            }
            let deficit = 2 * (p.len() as i64 - 1) - cross.len() as i64;
            let claimed = c
                .get("deficit")
                .and_then(Value::as_i64)
                .ok_or("deficit: missing")?;
            let needed = if first == Player::Cut { 1 } else { 2 };
            if deficit != claimed || deficit < needed {
                return Err(format!("deficit {deficit} does not reach {needed}"));
            }
            Ok(())
        }
        "separating_partition" => {
            expect(Player::Cut)?;
            let Variant::St { s, t } = variant else {
                return Err("separating partitions belong to the s-t game".into());
            };
            let p = part("partition")?;
            if p.block_of(s) == p.block_of(t) {
                return Err("partition does not separate the terminals".into());
            }
            match c.get("forests") {
                None | Some(Value::Null) => Ok(()),
                Some(_) => {
                    let [f1, f2] = two("forests")?;
                    let mut ids: Vec<usize> = f1.iter().chain(&f2).copied().collect();
                    ids.sort_unstable();
                    if ids != p.cross_edges(g) {
                        return Err("forests do not split the cross edges".into());
                    }
                    let mut uf1 = UnionFind::new(p.len());
                    let mut uf2 = UnionFind::new(p.len());
                    for (uf, f) in [(&mut uf1, &f1), (&mut uf2, &f2)] {
                        for &e in f {
                            let (u, v) = g.edge(e);
                            if !uf.union(p.block_of(u), p.block_of(v)) {
                                return Err("forest has a cycle on the blocks".into());
                            }
                        }
                    }
                    if uf1.same(p.block_of(s), p.block_of(t)) {
                        return Err("first forest joins the terminals".into());
                    }
                    Ok(())
                }
            }
        }
        "dual_bases" => {
            expect(Player::Cut)?;
            let Variant::St { s, t } = variant else {
                return Err("dual bases belong to the s-t game".into());
            };
            let mut arena = g.clone();
            let e0 = arena.add_edge(s, t).map_err(|e| e.to_string())?;
            let total = arena.edge_count();
            let support = list("support")?;
            if support.iter().any(|&e| e >= total) {
                return Err("support edge out of range".into());
            }
            let full = graphic_rank(&arena, 0..total);
            let complement =
                |set: &[usize]| -> Vec<usize> { (0..total).filter(|e| !set.contains(e)).collect() };
            // dual rank: r*(X) = |X| - r(E) + r(E - X)
            let dual_rank =
                |set: &[usize]| set.len() + graphic_rank(&arena, complement(set)) - full;
            let r_support = dual_rank(&support);
            for (i, b) in two("bases")?.iter().enumerate() {
                if b.iter().any(|e| !support.contains(e)) {
                    return Err(format!("basis {i} leaves the support"));
                }
                if graphic_rank(&arena, complement(b)) != full || b.len() != r_support {
                    return Err(format!("basis {i} is not a dual basis of the support"));
                }
            }
            let [b1, b2] = two("bases")?;
            if b1.iter().any(|e| b2.contains(e)) {
                return Err("bases overlap".into());
            }
            let mut extended = support.clone();
            if !extended.contains(&e0) {
                extended.push(e0);
            }
            if dual_rank(&extended) != r_support {
                return Err("terminal edge is outside the dual span".into());
            }
            Ok(())
        }
        other => Err(format!("unknown certificate kind {other:?}")),
    }
}
