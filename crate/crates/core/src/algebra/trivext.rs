use super::GentlePresentation;
use crate::error::{Error, Result};
use crate::gentle::{threads, ThreadKind};
use crate::graph::{BrauerGraph, Grading, RawBrauerGraph};

/// The Brauer graph of the trivial extension of a gentle algebra, with the
/// cut recovering the algebra. Each permitted thread through vertices
/// v0 → … → vk becomes a vertex with cyclic order (v0 … vk); the closing
/// half-edge at vk carries degree 1. Every quiver vertex is met twice overall
/// and its two occurrences, named `v+` and `v-` in order of appearance, are
/// paired into one edge.
pub fn trivial_extension_graph(p: &GentlePresentation) -> Result<(BrauerGraph, Grading)> {
    let q = &p.quiver;
    let permitted: Vec<_> =
        threads(p)?.into_iter().filter(|t| t.kind == ThreadKind::Permitted).collect();

    let nv = q.vertices().len();
    let mut occurrences: Vec<Vec<usize>> = vec![Vec::new(); nv];
    let mut halfedges = Vec::new();
    let mut sigma = Vec::new();
    let mut degree = Vec::new();
    for t in &permitted {
        let mut stops = vec![t.source];
        stops.extend(t.arrows.iter().map(|&a| q.arrows()[a].target));
        let base = halfedges.len();
        for (i, &v) in stops.iter().enumerate() {
            let sign = if occurrences[v].is_empty() { '+' } else { '-' };
            occurrences[v].push(base + i);
            halfedges.push(format!("{}{}", q.vertices()[v], sign));
            sigma.push(base + (i + 1) % stops.len());
            degree.push(i64::from(i + 1 == stops.len()));
        }
    }
    let mut iota = vec![0; halfedges.len()];
    for (v, occ) in occurrences.iter().enumerate() {
        let [a, b] = occ[..] else {
            return Err(Error::Semantic {
                message: format!("vertex lies on {} permitted threads, expected 2", occ.len()),
                token: q.vertices()[v].clone(),
            });
        };
        iota[a] = b;
        iota[b] = a;
    }
    // index order changes when the graph sorts its half-edges; carry degrees by name
    let graph = BrauerGraph::try_from(RawBrauerGraph { halfedges: halfedges.clone(), iota, sigma })?;
    let mut values = vec![0; graph.len()];
    for (name, d) in halfedges.iter().zip(degree) {
        values[graph.index_of(name)?] = d;
    }
    Ok((graph, Grading::scalar(&values)))
}
