//! Graded generalized Kauer moves.

use crate::error::{Error, Result};
use crate::graph::{BrauerGraph, GradedBrauerGraph, Grading};
use crate::linalg;

/// A run σ⁰h, …, σʳh of half-edges at one vertex. `h` indexes the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Sector {
    pub h: usize,
    pub r: usize,
}

/// Maximal sectors of a subset, plus the half-edges of vertices lying wholly
/// inside it (which are left alone by every move).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorDecomposition {
    pub sectors: Vec<Sector>,
    pub saturated: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorDegree {
    pub h: usize,
    pub r: usize,
    pub degree: Vec<i64>,
}

/// Degrees of the morphisms α(h, H′) for h in H′ outside saturated vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorDegreeReport {
    pub entries: Vec<SectorDegree>,
    pub saturated: Vec<usize>,
    pub all_zero: bool,
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn neg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| -x).collect()
}

/// The three half-edges a sector move touches: (σ^{r+1}h, σ^r h, ισ^{r+1}h, σ^{-1}h).
fn sector_points(graph: &BrauerGraph, s: Sector) -> Result<(usize, usize, usize, usize)> {
    let size = graph.valency(s.h);
    let label = || graph.name(s.h).to_string();
    if s.r >= size {
        return Err(Error::SectorTooLong { h: label(), r: s.r, size });
    }
    let top = graph.sigma_pow(s.h, s.r as i64 + 1);
    if top == s.h {
        return Err(Error::WholeOrbit { h: label(), r: s.r });
    }
    let last = graph.sigma_pow(s.h, s.r as i64);
    let cut = graph.iota(top);
    if cut == last {
        return Err(Error::Collision { h: label(), r: s.r, partner: graph.name(cut).to_string() });
    }
    Ok((top, last, cut, graph.sigma_inv(s.h)))
}

/// One graded Kauer move: σ becomes (h σ^{r+1}h)∘σ∘(σ^r h ισ^{r+1}h) and three
/// degrees are reassigned.
pub fn sector_move(gg: &GradedBrauerGraph, s: Sector) -> Result<GradedBrauerGraph> {
    let graph = gg.graph();
    let d = gg.grading();
    let (top, last, cut, pred) = sector_points(graph, s)?;

    let swap = |x: usize, a: usize, b: usize| if x == a { b } else if x == b { a } else { x };
    let sigma: Vec<usize> =
        (0..graph.len()).map(|x| swap(graph.sigma(swap(x, last, cut)), s.h, top)).collect();

    let mut run = vec![0i64; d.rank()];
    for i in 0..=s.r {
        run = add(&run, d.degree(graph.sigma_pow(s.h, i as i64)));
    }
    let mut degrees = d.clone();
    if cut == pred {
        let with_pred = add(d.degree(pred), &run);
        degrees.set(cut, neg(&run));
        degrees.set(last, add(&with_pred, d.degree(last)));
    } else {
        degrees.set(cut, neg(&run));
        degrees.set(last, add(d.degree(cut), d.degree(last)));
        degrees.set(pred, add(d.degree(pred), &run));
    }
    GradedBrauerGraph::new(graph.with_sigma(sigma), degrees)
}

fn membership(graph: &BrauerGraph, subset: &[usize]) -> Result<Vec<bool>> {
    let mut inside = vec![false; graph.len()];
    for &h in subset {
        inside[h] = true;
    }
    for &h in subset {
        if !inside[graph.iota(h)] {
            return Err(Error::NotPairingStable(graph.name(graph.iota(h)).to_string()));
        }
    }
    Ok(inside)
}

/// Close a subset under ι. Returns the closure and the half-edges added.
pub fn close_under_pairing(graph: &BrauerGraph, subset: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut inside = vec![false; graph.len()];
    for &h in subset {
        inside[h] = true;
    }
    let added: Vec<usize> =
        (0..graph.len()).filter(|&h| !inside[h] && inside[graph.iota(h)]).collect();
    for &h in &added {
        inside[h] = true;
    }
    ((0..graph.len()).filter(|&h| inside[h]).collect(), added)
}

/// Maximal sectors of an ι-stable subset, ordered by starting half-edge.
pub fn maximal_sectors(graph: &BrauerGraph, subset: &[usize]) -> Result<SectorDecomposition> {
    let inside = membership(graph, subset)?;
    let mut sectors = Vec::new();
    let mut saturated = Vec::new();
    for orbit in graph.vertices() {
        if orbit.iter().all(|&h| inside[h]) {
            saturated.extend(orbit);
            continue;
        }
        for &h in &orbit {
            if inside[h] && !inside[graph.sigma_inv(h)] {
                let mut r = 0;
                while inside[graph.sigma_pow(h, r as i64 + 1)] {
                    r += 1;
                }
                sectors.push(Sector { h, r });
            }
        }
    }
    sectors.sort();
    saturated.sort_unstable();
    Ok(SectorDecomposition { sectors, saturated })
}

/// Apply sectors one after another, each with its own (h, r) evaluated against
/// the current orientation and grading.
pub fn apply_sectors(gg: &GradedBrauerGraph, sectors: &[Sector]) -> Result<GradedBrauerGraph> {
    let mut cur = gg.clone();
    for &s in sectors {
        cur = sector_move(&cur, s)?;
    }
    Ok(cur)
}

/// The graded generalized Kauer move along an ι-stable subset: one sector move
/// per maximal sector of the input graph.
pub fn subset_move(gg: &GradedBrauerGraph, subset: &[usize]) -> Result<GradedBrauerGraph> {
    let dec = maximal_sectors(gg.graph(), subset)?;
    apply_sectors(gg, &dec.sectors)
}

/// Orientation after the move, computed in one step as τ_cut∘σ∘τ_paste.
pub fn composite_orientation(graph: &BrauerGraph, subset: &[usize]) -> Result<Vec<usize>> {
    let dec = maximal_sectors(graph, subset)?;
    let n = graph.len();
    let mut cut: Vec<usize> = (0..n).collect();
    let mut paste: Vec<usize> = (0..n).collect();
    for &s in &dec.sectors {
        let (top, last, partner, _) = sector_points(graph, s)?;
        cut.swap(s.h, top);
        paste.swap(last, partner);
    }
    Ok((0..n).map(|x| cut[graph.sigma(paste[x])]).collect())
}

/// For each h of the subset outside saturated vertices, r(h) with
/// r(h)+1 = min{r ≥ 0 : σ^r h ∉ H′} and degree Σ_{i=0}^{r(h)+1} d(σ^i h).
pub fn sector_degrees(gg: &GradedBrauerGraph, subset: &[usize]) -> Result<SectorDegreeReport> {
    let graph = gg.graph();
    let inside = membership(graph, subset)?;
    let saturated = maximal_sectors(graph, subset)?.saturated;
    let mut entries = Vec::new();
    for h in 0..graph.len() {
        if !inside[h] || saturated.binary_search(&h).is_ok() {
            continue;
        }
        let mut r = 0;
        while inside[graph.sigma_pow(h, r as i64 + 1)] {
            r += 1;
        }
        let mut degree = vec![0; gg.grading().rank()];
        for i in 0..=r + 1 {
            degree = add(&degree, gg.grading().degree(graph.sigma_pow(h, i as i64)));
        }
        entries.push(SectorDegree { h, r, degree });
    }
    let all_zero = entries.iter().all(|e| e.degree.iter().all(|&x| x == 0));
    Ok(SectorDegreeReport { entries, saturated, all_zero })
}

/// Matrix of the linear map d ↦ d_{H′} on rank-1 gradings; column j is the
/// image of the j-th unit grading.
pub fn transport_matrix(graph: &BrauerGraph, subset: &[usize]) -> Result<Vec<Vec<i64>>> {
    let dec = maximal_sectors(graph, subset)?;
    let n = graph.len();
    let mut m = vec![vec![0i64; n]; n];
    for j in 0..n {
        let mut unit = vec![0; n];
        unit[j] = 1;
        let gg = GradedBrauerGraph::new(graph.clone(), Grading::scalar(&unit))?;
        let image = apply_sectors(&gg, &dec.sectors)?;
        for (i, row) in m.iter_mut().enumerate() {
            row[j] = image.grading().degree(i)[0];
        }
    }
    Ok(m)
}

/// The grading δ on the input graph whose move along `subset` is `target`,
/// solved exactly coordinate by coordinate. `None` if no integral preimage exists.
pub fn grading_transport(
    graph: &BrauerGraph,
    subset: &[usize],
    target: &Grading,
) -> Result<Option<Grading>> {
    if target.len() != graph.len() {
        return Err(Error::GradingSize { expected: graph.len(), found: target.len() });
    }
    let m = transport_matrix(graph, subset)?;
    let mut degrees = vec![vec![0; target.rank()]; graph.len()];
    for c in 0..target.rank() {
        let rhs: Vec<i64> = target.degrees().iter().map(|d| d[c]).collect();
        let Some(x) = linalg::solve_integral(&m, &rhs) else {
            return Ok(None);
        };
        for (h, v) in x.into_iter().enumerate() {
            degrees[h][c] = v;
        }
    }
    Ok(Some(Grading::new(target.rank(), degrees)?))
}
