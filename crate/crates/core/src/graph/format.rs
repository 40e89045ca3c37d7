//! The `.bg` text format: a TOML document with `halfedges`, `pairing`,
//! `orientation` and an optional `[grading]` table.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Deserialize;

use super::{BrauerGraph, GradedBrauerGraph, Grading};
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct BgDoc {
    halfedges: Vec<String>,
    #[serde(default)]
    pairing: Vec<Vec<String>>,
    #[serde(default)]
    orientation: Vec<Vec<String>>,
    grading: Option<GradingDoc>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GradingDoc {
    #[serde(default = "one")]
    rank: usize,
    #[serde(default)]
    d: BTreeMap<String, Vec<i64>>,
}

fn one() -> usize {
    1
}

pub fn parse(text: &str) -> Result<GradedBrauerGraph> {
    let doc: BgDoc = toml::from_str(text).map_err(|e| Error::Syntax(e.to_string()))?;
    let graph = BrauerGraph::from_cycles(&doc.halfedges, &doc.pairing, &doc.orientation)?;
    let grading = match doc.grading {
        None => Grading::zero(1, graph.len()),
        Some(g) => {
            if g.rank == 0 {
                return Err(Error::ZeroRank);
            }
            let mut degrees = vec![vec![0; g.rank]; graph.len()];
            for (id, value) in g.d {
                let h = graph.index_of(&id).map_err(|_| Error::Semantic {
                    message: "unknown half-edge in grading".into(),
                    token: id.clone(),
                })?;
                if value.len() != g.rank {
                    return Err(Error::Semantic {
                        message: format!("degree must have {} entries", g.rank),
                        token: id,
                    });
                }
                degrees[h] = value;
            }
            Grading::new(g.rank, degrees)?
        }
    };
    GradedBrauerGraph::new(graph, grading)
}

fn quote(s: &str) -> String {
    toml::Value::String(s.to_string()).to_string()
}

fn list(items: &[String]) -> String {
    format!("[{}]", items.iter().map(|s| quote(s)).collect::<Vec<_>>().join(", "))
}

/// Deterministic text: ids sorted, cycles starting at their least id, only
/// nonzero degrees written.
pub fn serialize(gg: &GradedBrauerGraph) -> String {
    let g = gg.graph();
    let mut out = String::new();
    let all: Vec<String> = g.names().iter().map(|h| h.to_string()).collect();
    writeln!(out, "halfedges = {}", list(&all)).unwrap();
    let pairs: Vec<String> = g.edges().iter().map(|e| list(&g.names_of(e))).collect();
    writeln!(out, "pairing = [{}]", pairs.join(", ")).unwrap();
    let cycles: Vec<String> = g
        .vertices()
        .iter()
        .filter(|o| o.len() > 1)
        .map(|o| list(&g.names_of(o)))
        .collect();
    writeln!(out, "orientation = [{}]", cycles.join(", ")).unwrap();
    let d = gg.grading();
    writeln!(out, "\n[grading]\nrank = {}\n\n[grading.d]", d.rank()).unwrap();
    for h in d.support() {
        let v: Vec<String> = d.degree(h).iter().map(|x| x.to_string()).collect();
        writeln!(out, "{} = [{}]", quote(g.name(h)), v.join(", ")).unwrap();
    }
    out
}
