pub mod arborescence;
pub mod error;
pub mod flow;
pub mod forest;
pub mod game;
pub mod graph;
pub mod hypergraph;
pub mod matroid;
pub mod orientation;

pub use error::{Error, Result};
