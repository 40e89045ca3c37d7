use thiserror::Error;

use crate::graph::{GraphDiagnostic, SurfaceInvariants};
use crate::gentle::GentleDiagnostic;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid half-edge id {0:?}: must be a nonempty token without whitespace")]
    BadId(String),

    #[error("unknown half-edge {0:?}")]
    UnknownHalfEdge(String),

    #[error("unknown {kind} {name:?}")]
    Unknown { kind: &'static str, name: String },

    #[error("invalid Brauer graph: {}", join(.0))]
    InvalidGraph(Vec<GraphDiagnostic>),

    #[error("grading has rank {found}, expected {expected}")]
    RankMismatch { expected: usize, found: usize },

    #[error("grading covers {found} half-edges, graph has {expected}")]
    GradingSize { expected: usize, found: usize },

    #[error("grading rank must be positive")]
    ZeroRank,

    #[error("grading is not an admissible cut")]
    NotACut,

    #[error("subset is not closed under the pairing: {0:?} is missing")]
    NotPairingStable(String),

    #[error("sector ({h}, {r}) is too long for a vertex of size {size}")]
    SectorTooLong { h: String, r: usize, size: usize },

    #[error("sector ({h}, {r}) covers its whole vertex")]
    WholeOrbit { h: String, r: usize },

    #[error("sector ({h}, {r}) ends next to its own partner {partner:?}; the move is not defined there")]
    Collision { h: String, r: usize, partner: String },

    #[error("graph is empty")]
    EmptyGraph,

    #[error("graph has {} connected components", .0.len())]
    Disconnected(Vec<SurfaceInvariants>),

    #[error("not a gentle presentation: {}", join(.0))]
    NotGentle(Vec<GentleDiagnostic>),

    #[error("inconsistent sign assignment at arrow {0:?}")]
    Signs(String),

    #[error("matrix {0:?} is not invertible over the integers")]
    NotUnimodular([[i64; 2]; 2]),

    #[error("triangular split: {0}")]
    Split(String),

    #[error("{message} (at {token:?})")]
    Semantic { message: String, token: String },

    #[error("{0}")]
    Syntax(String),
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("; ")
}
