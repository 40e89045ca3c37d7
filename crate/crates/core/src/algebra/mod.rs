//! Quivers with relations: the Brauer graph algebra of a graph, the gentle
//! algebras cut out of it, and the way back.

mod qa;
mod trivext;

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::graph::{is_admissible_cut, BrauerGraph, GradedBrauerGraph, Grading};

pub use qa::{parse_qa, serialize_qa};
pub use trivext::trivial_extension_graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::Semantic { message: "duplicate vertex".into(), token: v.clone() });
            }
        }
        let mut ids = BTreeSet::new();
        for a in &arrows {
            if !ids.insert(a.id.as_str()) {
                return Err(Error::Semantic { message: "duplicate arrow".into(), token: a.id.clone() });
            }
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::Semantic {
                    message: "arrow endpoint is not a vertex".into(),
                    token: a.id.clone(),
                });
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Unknown { kind: "vertex", name: name.to_string() })
    }

    pub fn arrow_index(&self, id: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.id == id)
            .ok_or_else(|| Error::Unknown { kind: "arrow", name: id.to_string() })
    }

    pub fn out_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].source == v).collect()
    }

    pub fn in_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&a| self.arrows[a].target == v).collect()
    }

    /// Connected components of the underlying graph after dropping the
    /// arrows flagged in `removed`; each component is a sorted vertex list.
    pub fn components_without(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if !removed.get(i).copied().unwrap_or(false) {
                let (x, y) = (find(&mut parent, a.source), find(&mut parent, a.target));
                parent[x] = y;
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_without(&[])
    }
}

/// A ℤ^k-degree per arrow, indexed like the quiver's arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowGrading {
    rank: usize,
    degrees: Vec<Vec<i64>>,
}

impl ArrowGrading {
    pub fn new(rank: usize, degrees: Vec<Vec<i64>>) -> Result<Self> {
        let g = Grading::new(rank, degrees)?;
        Ok(ArrowGrading { rank, degrees: g.degrees().to_vec() })
    }

    pub fn zero(rank: usize, arrows: usize) -> Self {
        ArrowGrading { rank, degrees: vec![vec![0; rank]; arrows] }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn degree(&self, a: usize) -> &[i64] {
        &self.degrees[a]
    }

    pub fn degrees(&self) -> &[Vec<i64>] {
        &self.degrees
    }

    /// Apply a 2×2 integer matrix to every degree vector (rank 2 only).
    pub fn transformed(&self, m: [[i64; 2]; 2]) -> Result<Self> {
        if self.rank != 2 {
            return Err(Error::RankMismatch { expected: 2, found: self.rank });
        }
        let degrees = self
            .degrees
            .iter()
            .map(|d| vec![m[0][0] * d[0] + m[0][1] * d[1], m[1][0] * d[0] + m[1][1] * d[1]])
            .collect();
        Ok(ArrowGrading { rank: 2, degrees })
    }
}

/// A quiver with quadratic monomial relations. A relation `(a, b)` means the
/// path "a then b", written b∘a, is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GentlePresentation {
    pub quiver: Quiver,
    pub relations: BTreeSet<(usize, usize)>,
    pub grading: Option<ArrowGrading>,
}

impl GentlePresentation {
    pub fn new(quiver: Quiver, relations: BTreeSet<(usize, usize)>) -> Self {
        GentlePresentation { quiver, relations, grading: None }
    }

    pub fn is_relation(&self, first: usize, then: usize) -> bool {
        self.relations.contains(&(first, then))
    }

    /// Look up a relation written right to left by arrow ids, as in `b∘a`.
    pub fn with_relation_ids(mut self, pairs: &[(&str, &str)]) -> Result<Self> {
        for &(b, a) in pairs {
            let (ia, ib) = (self.quiver.arrow_index(a)?, self.quiver.arrow_index(b)?);
            self.relations.insert((ia, ib));
        }
        Ok(self)
    }
}

/// An oriented cycle C_v^i: the arrows met going once around vertex `vertex`
/// starting at half-edge `start`. Arrows are half-edge indices in travel order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialCycle {
    pub vertex: usize,
    pub start: usize,
    pub arrows: Vec<usize>,
}

/// Relations of the Brauer graph algebra, all paths in travel order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSet {
    /// Pairs of special cycles through the same edge that are identified.
    pub type_i: Vec<(Vec<usize>, Vec<usize>)>,
    /// A special cycle followed by its own first arrow.
    pub type_ii: Vec<Vec<usize>>,
    /// Length-2 paths `(h, ισh)` that are not on any special cycle.
    pub type_iii: Vec<(usize, usize)>,
}

/// Half-edges carrying an arrow (those not fixed by σ), in index order.
pub fn arrow_halfedges(graph: &BrauerGraph) -> Vec<usize> {
    (0..graph.len()).filter(|&h| graph.sigma(h) != h).collect()
}

/// Quiver with one vertex per edge and one arrow per non-fixed half-edge h,
/// from the edge of h to the edge of σh.
pub fn quiver_of(graph: &BrauerGraph) -> Quiver {
    let edge = graph.edge_numbering();
    let vertices = graph.edges().iter().map(|e| graph.edge_name(e[0])).collect();
    let arrows = arrow_halfedges(graph)
        .into_iter()
        .map(|h| Arrow {
            id: graph.name(h).to_string(),
            source: edge[h],
            target: edge[graph.sigma(h)],
        })
        .collect();
    Quiver { vertices, arrows }
}

pub fn special_cycles(graph: &BrauerGraph) -> Vec<SpecialCycle> {
    let mut out = Vec::new();
    for (v, orbit) in graph.vertices().iter().enumerate() {
        if orbit.len() < 2 {
            continue;
        }
        for &start in orbit {
            out.push(SpecialCycle { vertex: v, start, arrows: graph.vertex_of(start) });
        }
    }
    out
}

pub fn relations_of(graph: &BrauerGraph) -> RelationSet {
    let mut type_i = Vec::new();
    for [a, b] in graph.edges() {
        if graph.valency(a) >= 2 && graph.valency(b) >= 2 {
            type_i.push((graph.vertex_of(a), graph.vertex_of(b)));
        }
    }
    let type_ii = special_cycles(graph)
        .into_iter()
        .map(|c| {
            let mut p = c.arrows;
            p.push(c.start);
            p
        })
        .collect();
    let type_iii = arrow_halfedges(graph)
        .into_iter()
        .filter_map(|h| {
            let next = graph.iota(graph.sigma(h));
            (graph.sigma(next) != next).then_some((h, next))
        })
        .collect();
    RelationSet { type_i, type_ii, type_iii }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisElement {
    /// Trivial path at an edge (given by its least half-edge).
    Trivial(usize),
    /// Proper subpath of a special cycle: `len` arrows starting at `start`.
    Path { start: usize, len: usize },
    /// The common class of the two special cycles through an edge. For an
    /// edge whose two ends are both univalent this is the square-zero
    /// element of k[x]/(x²).
    Socle(usize),
}

pub fn basis_of(graph: &BrauerGraph) -> Vec<BasisElement> {
    let mut out: Vec<BasisElement> =
        graph.edges().iter().map(|e| BasisElement::Trivial(e[0])).collect();
    for h in arrow_halfedges(graph) {
        for len in 1..graph.valency(h) {
            out.push(BasisElement::Path { start: h, len });
        }
    }
    out.extend(graph.edges().iter().map(|e| BasisElement::Socle(e[0])));
    out
}

pub fn dimension_of(graph: &BrauerGraph) -> usize {
    basis_of(graph).len()
}

fn require_cut(graph: &BrauerGraph, cut: &Grading) -> Result<()> {
    let gg = GradedBrauerGraph::new(graph.clone(), cut.clone())?;
    if is_admissible_cut(&gg)? {
        Ok(())
    } else {
        Err(Error::NotACut)
    }
}

/// Half-edges whose arrows survive a cut.
pub fn surviving_arrows(graph: &BrauerGraph, cut: &Grading) -> Vec<usize> {
    arrow_halfedges(graph).into_iter().filter(|&h| cut.degree(h)[0] == 0).collect()
}

/// The gentle algebra B_Δ: drop the degree-1 arrows; relations are the
/// surviving paths (h, ισh).
pub fn cut_algebra(graph: &BrauerGraph, cut: &Grading) -> Result<GentlePresentation> {
    require_cut(graph, cut)?;
    let full = quiver_of(graph);
    let keep = surviving_arrows(graph, cut);
    let mut pos = vec![usize::MAX; graph.len()];
    for (k, &h) in keep.iter().enumerate() {
        pos[h] = k;
    }
    let arrows = keep
        .iter()
        .map(|&h| full.arrows()[full.arrow_index(graph.name(h)).expect("arrow")].clone())
        .collect();
    let quiver = Quiver { vertices: full.vertices, arrows };
    let relations = keep
        .iter()
        .filter_map(|&h| {
            let next = graph.iota(graph.sigma(h));
            (pos[next] != usize::MAX).then(|| (pos[h], pos[next]))
        })
        .collect();
    Ok(GentlePresentation::new(quiver, relations))
}

/// The grading a cut algebra inherits from `d`: arrow a_h carries d(h).
pub fn induced_arrow_grading(graph: &BrauerGraph, cut: &Grading, d: &Grading) -> Result<ArrowGrading> {
    require_cut(graph, cut)?;
    if d.len() != graph.len() {
        return Err(Error::GradingSize { expected: graph.len(), found: d.len() });
    }
    let degrees = surviving_arrows(graph, cut).iter().map(|&h| d.degree(h).to_vec()).collect();
    ArrowGrading::new(d.rank(), degrees)
}

/// Restriction of a half-edge grading to the arrows of the full Brauer quiver.
pub fn arrow_grading_of(graph: &BrauerGraph, d: &Grading) -> Result<ArrowGrading> {
    if d.len() != graph.len() {
        return Err(Error::GradingSize { expected: graph.len(), found: d.len() });
    }
    let degrees = arrow_halfedges(graph).iter().map(|&h| d.degree(h).to_vec()).collect();
    ArrowGrading::new(d.rank(), degrees)
}

/// The ℤ²-grading on the trivial extension attached to two cuts: h carries
/// (Δ1(h), Δ2(h) − Δ1(h)). The first coordinate is the cut grading of Δ1 and
/// the coordinate sum is Δ2.
pub fn trivext_bigrading(graph: &BrauerGraph, cut1: &Grading, cut2: &Grading) -> Result<Grading> {
    require_cut(graph, cut1)?;
    require_cut(graph, cut2)?;
    let degrees = (0..graph.len())
        .map(|h| {
            let (x, y) = (cut1.degree(h)[0], cut2.degree(h)[0]);
            vec![x, y - x]
        })
        .collect();
    Grading::new(2, degrees)
}
