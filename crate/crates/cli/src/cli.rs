use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

/// Graded Brauer graphs, Kauer moves, admissible cuts and gentle algebras.
///
/// GRAPH arguments are `.bg` files and ALGEBRA arguments `.qa` files. Either
/// may be written `@name` to use a bundled fixture. A GRADING is a graph file
/// with the same half-edges or a comma list of degree-one half-edges.
#[derive(Parser, Debug)]
#[command(name = "brauer-kit", version, about, long_about)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the result to this file instead of standard output.
    #[arg(short = 'o', long = "output", value_name = "FILE", global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the graph axioms and describe the grading.
    Validate { graph: String },

    /// List vertices (orientation cycles) and edges.
    Vertices { graph: String },

    /// Apply a graded Kauer move along one sector or an ι-stable subset.
    Mutate {
        graph: String,
        #[command(flatten)]
        target: MoveTarget,
    },

    /// Maximal sectors of a subset.
    Sectors {
        graph: String,
        #[arg(long, value_name = "LIST")]
        subset: String,
    },

    /// Degrees of the sector morphisms of a subset.
    SectorDegrees {
        graph: String,
        #[arg(long, value_name = "LIST")]
        subset: String,
    },

    /// Find the grading whose move along a subset is the target grading.
    Transport {
        graph: String,
        #[arg(long, value_name = "LIST")]
        subset: String,
        /// Grading on the moved graph.
        #[arg(long, value_name = "GRADING")]
        target: String,
    },

    /// Quiver and relations, or dimension, of the Brauer graph algebra.
    #[command(group(ArgGroup::new("what").required(true).args(["relations", "dim"])))]
    Algebra {
        graph: String,
        #[arg(long)]
        relations: bool,
        #[arg(long)]
        dim: bool,
        /// Also print the quiver in DOT.
        #[arg(long)]
        emit_dot: bool,
    },

    /// Enumerate admissible cuts or check one.
    #[command(group(ArgGroup::new("mode").required(true).args(["enumerate", "check"])))]
    Cuts {
        graph: String,
        #[arg(long)]
        enumerate: bool,
        #[arg(long, value_name = "GRADING")]
        check: Option<String>,
    },

    /// The gentle algebra of a cut, as a `.qa` document.
    CutAlgebra {
        graph: String,
        /// Defaults to the graph's own grading.
        #[arg(long, value_name = "GRADING")]
        cut: Option<String>,
    },

    /// Trivial extension of a gentle algebra as a graph with its cut.
    Trivext { algebra: String },

    /// Check the gentle axioms.
    GentleCheck { algebra: String },

    /// Global dimension of a gentle algebra or of the cut algebra of a graph.
    Gldim {
        input: String,
        #[arg(long, value_name = "GRADING")]
        cut: Option<String>,
    },

    /// Avella-Alaminos–Geiss invariant of a gentle algebra or a cut algebra.
    Ag {
        input: String,
        #[arg(long, value_name = "GRADING")]
        cut: Option<String>,
    },

    /// Look for vertex shifts relating two gradings of the Brauer quiver.
    ShiftEquiv { graph: String, first: String, second: String },

    /// Shift equivalence between M·first and second for rank-2 gradings.
    TransformEquiv {
        graph: String,
        first: String,
        second: String,
        /// Row-major entries of M.
        #[arg(long, value_name = "a,b,c,d", value_parser = parse_matrix, allow_hyphen_values = true)]
        matrix: Option<[[i64; 2]; 2]>,
        /// Treat FIRST and SECOND as cuts Δ1, Δ2 and compare the bigradings
        /// they induce in both orders.
        #[arg(long)]
        cuts: bool,
    },

    /// Split a graph along connecting pairs into two cuts.
    Split(SplitArgs),

    /// Symbolic tilting object of a split.
    Tilting {
        #[command(flatten)]
        split: SplitArgs,
        /// Describe the graded tilting object.
        #[arg(long)]
        graded: bool,
    },

    /// Ribbon surface invariants of each component.
    Surface { graph: String },

    /// Bundled worked examples: `example list`, `example NAME [--run]`.
    Example {
        name: String,
        /// Run the commands and compare with the pinned output.
        #[arg(long)]
        run: bool,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct MoveTarget {
    /// A sector σ⁰h … σʳh.
    #[arg(long, num_args = 2, value_names = ["H", "R"])]
    pub sector: Option<Vec<String>>,
    /// Comma list of half-edges, closed under the pairing if needed.
    #[arg(long, value_name = "LIST")]
    pub subset: Option<String>,
}

#[derive(Args, Debug)]
pub struct SplitArgs {
    pub graph: String,
    /// Connecting pair α,β at one vertex; repeat for several.
    #[arg(long = "pair", value_name = "A,B", required = true)]
    pub pairs: Vec<String>,
    /// The common remainder Δ; the first choice is used when omitted.
    #[arg(long, value_name = "LIST")]
    pub delta: Option<String>,
}

fn parse_matrix(s: &str) -> Result<[[i64; 2]; 2], String> {
    let v: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<Result<_, _>>()?;
    match v.as_slice() {
        &[a, b, c, d] => Ok([[a, b], [c, d]]),
        _ => Err(format!("expected four integers, got {}", v.len())),
    }
}
