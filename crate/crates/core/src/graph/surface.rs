use super::{orbits, BrauerGraph};
use crate::error::{Error, Result};

/// Numeric invariants of the ribbon surface of a connected Brauer graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceInvariants {
    pub vertices: usize,
    pub edges: usize,
    /// Orbits of the face permutation σ∘ι.
    pub boundary: usize,
    pub euler: i64,
    pub genus: usize,
}

fn invariants_of(graph: &BrauerGraph, members: &[usize]) -> SurfaceInvariants {
    let mut local = vec![usize::MAX; graph.len()];
    for (k, &h) in members.iter().enumerate() {
        local[h] = k;
    }
    let restrict = |f: &dyn Fn(usize) -> usize| -> Vec<usize> {
        members.iter().map(|&h| local[f(h)]).collect()
    };
    let sigma = restrict(&|h| graph.sigma(h));
    let face = restrict(&|h| graph.sigma(graph.iota(h)));
    let vertices = orbits(&sigma).len();
    let edges = members.len() / 2;
    let boundary = orbits(&face).len();
    let euler = vertices as i64 - edges as i64;
    let genus = (2 - boundary as i64 - euler) / 2;
    SurfaceInvariants { vertices, edges, boundary, euler, genus: genus as usize }
}

/// V, E, boundary count, Euler characteristic V−E and genus, with
/// 2 − 2·genus − boundary = euler. Disconnected input is an error carrying the
/// invariants of each component.
pub fn surface_invariants(graph: &BrauerGraph) -> Result<SurfaceInvariants> {
    if graph.is_empty() {
        return Err(Error::EmptyGraph);
    }
    let comps = graph.components();
    if comps.len() > 1 {
        return Err(Error::Disconnected(comps.iter().map(|c| invariants_of(graph, c)).collect()));
    }
    Ok(invariants_of(graph, &comps[0]))
}
