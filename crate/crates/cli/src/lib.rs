//! Command-line surface for arbor-core: text formats, JSON certificates, a
//! certificate re-checker and the HTTP game server.

pub mod commands;
pub mod format;
pub mod report;
pub mod serve;
pub mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use report::{Emission, Failure};

#[derive(Parser, Debug)]
#[command(
    name = "arbor",
    version,
    about = "Tree packings, arborescences, orientations and the switching game"
)]
pub struct Cli {
    /// Embed command, parameters and instance in the JSON so `selftest --verify` can recheck it.
    #[arg(long, global = true)]
    pub embed: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Instance file; `-` reads standard input.
#[derive(Args, Debug, Clone)]
pub struct Input {
    pub input: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct Rooted {
    #[arg(short)]
    pub k: usize,
    #[arg(long)]
    pub root: usize,
    #[command(flatten)]
    pub file: Input,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Star,
    Parallel,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// k edge-disjoint spanning trees, or a deficient partition.
    PackTrees {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        file: Input,
    },
    /// Split the edges into k forests (optionally of bounded sizes).
    DecomposeForests {
        #[arg(short)]
        k: usize,
        /// Comma-separated size caps, one per forest.
        #[arg(long, value_delimiter = ',')]
        caps: Option<Vec<usize>>,
        #[command(flatten)]
        file: Input,
    },
    /// Least number of forests covering the edges.
    Arboricity {
        #[command(flatten)]
        file: Input,
    },
    /// Largest k-deficit of a partition.
    Deficiency {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        file: Input,
    },
    /// Fewest new edges making the graph k-tree-connected.
    Augment {
        #[arg(short)]
        k: usize,
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long, value_enum, default_value = "star")]
        mode: Mode,
        #[command(flatten)]
        file: Input,
    },
    /// (k, l)-partition-connectivity.
    CheckPc {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        l: usize,
        #[command(flatten)]
        file: Input,
    },
    /// (k, l)-forest-sparsity, tightness, Laman or body-bar rigidity.
    CheckSparse {
        #[arg(short)]
        k: Option<usize>,
        #[arg(short)]
        l: Option<usize>,
        #[arg(long, conflicts_with_all = ["laman", "body_bar"])]
        tight: bool,
        #[arg(long, conflicts_with = "body_bar")]
        laman: bool,
        #[arg(long, value_name = "D")]
        body_bar: Option<usize>,
        #[command(flatten)]
        file: Input,
    },
    /// k arc-disjoint spanning arborescences, optionally extending seeds.
    PackArbs {
        #[command(flatten)]
        rooted: Rooted,
        /// `seeds k` header, then k lines `s a1 .. as` of arc ids.
        #[arg(long)]
        seeds: Option<PathBuf>,
    },
    /// k-edge-connectivity certified by arborescences of the doubled digraph.
    CertifyKec {
        #[command(flatten)]
        rooted: Rooted,
    },
    /// Covering of the arcs by k spanning arborescences.
    CoverArbs {
        #[command(flatten)]
        rooted: Rooted,
    },
    /// Covering of the arcs by k branchings.
    CoverBranchings {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        file: Input,
    },
    /// k disjoint spanning mixed arborescences.
    CheckMixed {
        #[command(flatten)]
        rooted: Rooted,
    },
    /// Rooted k-arc-connected orientation, or (k, l) with -l.
    Orient {
        #[command(flatten)]
        rooted: Rooted,
        #[arg(short)]
        l: Option<usize>,
    },
    /// Hypergraph rank, packing, covering and orientation.
    Hyper {
        #[command(subcommand)]
        op: HyperOp,
    },
    /// Out-rooted k-arc-connectivity of a dypergraph.
    CheckDyper {
        #[command(flatten)]
        rooted: Rooted,
    },
    /// Shannon switching game on edges.
    Game {
        #[command(subcommand)]
        op: GameOp,
    },
    /// Seeded generators of guaranteed instances.
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Run the built-in examples, or recheck an emitted certificate.
    Selftest {
        #[arg(long, value_name = "JSON")]
        verify: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum HyperOp {
    Rank {
        #[command(flatten)]
        file: Input,
    },
    Pack {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        file: Input,
    },
    Cover {
        #[arg(short)]
        k: usize,
        #[command(flatten)]
        file: Input,
    },
    Orient {
        #[command(flatten)]
        rooted: Rooted,
        #[arg(short)]
        l: Option<usize>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Global,
    St,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PlayerArg {
    Short,
    Cut,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolicyArg {
    Engine,
    Heuristic,
    Lowest,
}

#[derive(Args, Debug, Clone)]
pub struct GameSetup {
    #[arg(long, value_enum, default_value = "global")]
    pub variant: VariantArg,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, value_enum, default_value = "short")]
    pub first: PlayerArg,
    #[command(flatten)]
    pub file: Input,
}

#[derive(Subcommand, Debug)]
pub enum GameOp {
    Analyze {
        #[command(flatten)]
        setup: GameSetup,
    },
    Play {
        #[command(flatten)]
        setup: GameSetup,
        #[arg(long, value_enum, default_value = "engine")]
        short: PolicyArg,
        #[arg(long, value_enum, default_value = "engine")]
        cut: PolicyArg,
    },
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
        /// Directory of UI assets served at `/`.
        #[arg(long = "static", value_name = "DIR")]
        static_dir: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct GenArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 10)]
    pub steps: usize,
    #[arg(short)]
    pub k: usize,
}

#[derive(Subcommand, Debug)]
pub enum GenFamily {
    /// 2k-edge-connected graphs by pinching.
    Pinch {
        #[command(flatten)]
        args: GenArgs,
    },
    /// Rooted k-arc-connected digraphs.
    Mader {
        #[command(flatten)]
        args: GenArgs,
    },
    /// (k, l)-partition-connected graphs.
    KlPinch {
        #[command(flatten)]
        args: GenArgs,
        #[arg(short)]
        l: usize,
    },
    /// Rooted (k, l)-arc-connected digraphs.
    Kv {
        #[command(flatten)]
        args: GenArgs,
        #[arg(short)]
        l: usize,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Emission
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => commands::execute(cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Emission {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Emission {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}
