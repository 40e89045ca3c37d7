//! Brauer graphs as half-edge permutation data (H, ι, σ), with gradings and cuts.

mod format;
mod iso;
mod surface;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::error::{Error, Result};

pub use format::{parse, serialize};
pub use iso::is_isomorphic;
pub use surface::{surface_invariants, SurfaceInvariants};

/// Name of a half-edge. Nonempty, printable, no whitespace.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfEdgeId(String);

impl HalfEdgeId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if is_token(&name) {
            Ok(HalfEdgeId(name))
        } else {
            Err(Error::BadId(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl std::borrow::Borrow<str> for HalfEdgeId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for HalfEdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn is_token(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| !c.is_whitespace() && !c.is_control())
}

/// One violated axiom of a Brauer graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphDiagnostic {
    #[error("half-edge {0:?} is listed more than once")]
    DuplicateId(String),
    #[error("half-edge name {0:?} is not a valid token")]
    BadId(String),
    #[error("pairing has {iota} entries and orientation {sigma}, but there are {halfedges} half-edges")]
    LengthMismatch { halfedges: usize, iota: usize, sigma: usize },
    #[error("{map} sends {from:?} outside the half-edge set")]
    OutOfRange { map: &'static str, from: String },
    #[error("pairing fixes half-edge {0:?}")]
    PairingFixedPoint(String),
    #[error("pairing is not an involution at {0:?}")]
    PairingNotInvolution(String),
    #[error("orientation is not a bijection: {0:?} has several preimages")]
    OrientationNotBijective(String),
    #[error("odd number of half-edges ({0})")]
    OddCount(usize),
}

/// Unchecked (H, ι, σ) data, as read from user input. `iota[i]` and `sigma[i]`
/// are indices into `halfedges`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawBrauerGraph {
    pub halfedges: Vec<String>,
    pub iota: Vec<usize>,
    pub sigma: Vec<usize>,
}

impl RawBrauerGraph {
    /// All axiom violations; empty iff the data is a Brauer graph.
    pub fn validate(&self) -> Vec<GraphDiagnostic> {
        let mut out = Vec::new();
        let n = self.halfedges.len();
        let mut seen = HashMap::new();
        for name in &self.halfedges {
            if !is_token(name) {
                out.push(GraphDiagnostic::BadId(name.clone()));
            }
            let count = seen.entry(name.as_str()).or_insert(0usize);
            *count += 1;
            if *count == 2 {
                out.push(GraphDiagnostic::DuplicateId(name.clone()));
            }
        }
        if self.iota.len() != n || self.sigma.len() != n {
            out.push(GraphDiagnostic::LengthMismatch {
                halfedges: n,
                iota: self.iota.len(),
                sigma: self.sigma.len(),
            });
            return out;
        }
        if n % 2 == 1 {
            out.push(GraphDiagnostic::OddCount(n));
        }
        for (i, &j) in self.iota.iter().enumerate() {
            let name = self.halfedges[i].clone();
            if j >= n {
                out.push(GraphDiagnostic::OutOfRange { map: "pairing", from: name });
            } else if j == i {
                out.push(GraphDiagnostic::PairingFixedPoint(name));
            } else if self.iota[j] != i {
                out.push(GraphDiagnostic::PairingNotInvolution(name));
            }
        }
        let mut hits = vec![0usize; n];
        for (i, &j) in self.sigma.iter().enumerate() {
            if j >= n {
                out.push(GraphDiagnostic::OutOfRange {
                    map: "orientation",
                    from: self.halfedges[i].clone(),
                });
            } else {
                hits[j] += 1;
            }
        }
        for (j, &h) in hits.iter().enumerate() {
            if h > 1 {
                out.push(GraphDiagnostic::OrientationNotBijective(self.halfedges[j].clone()));
            }
        }
        out
    }
}

/// A valid Brauer graph. Half-edges are stored sorted by name, so index order
/// is lexicographic name order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerGraph {
    names: Vec<HalfEdgeId>,
    index: HashMap<HalfEdgeId, usize>,
    iota: Vec<usize>,
    sigma: Vec<usize>,
    sigma_inv: Vec<usize>,
}

impl TryFrom<RawBrauerGraph> for BrauerGraph {
    type Error = Error;

    fn try_from(raw: RawBrauerGraph) -> Result<Self> {
        let diags = raw.validate();
        if !diags.is_empty() {
            return Err(Error::InvalidGraph(diags));
        }
        let n = raw.halfedges.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| raw.halfedges[a].cmp(&raw.halfedges[b]));
        let mut new_of = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            new_of[old] = new;
        }
        let names: Vec<HalfEdgeId> =
            order.iter().map(|&old| HalfEdgeId(raw.halfedges[old].clone())).collect();
        let iota = order.iter().map(|&old| new_of[raw.iota[old]]).collect();
        let sigma = order.iter().map(|&old| new_of[raw.sigma[old]]).collect();
        Ok(Self::assemble(names, iota, sigma))
    }
}

impl BrauerGraph {
    fn assemble(names: Vec<HalfEdgeId>, iota: Vec<usize>, sigma: Vec<usize>) -> Self {
        let index = names.iter().cloned().enumerate().map(|(i, h)| (h, i)).collect();
        let mut sigma_inv = vec![0; sigma.len()];
        for (i, &j) in sigma.iter().enumerate() {
            sigma_inv[j] = i;
        }
        BrauerGraph { names, index, iota, sigma, sigma_inv }
    }

    /// Build from cycle notation: `pairing` lists 2-cycles, `orientation` lists
    /// disjoint cycles, and half-edges absent from `orientation` are σ-fixed.
    pub fn from_cycles<S: AsRef<str>>(
        halfedges: &[S],
        pairing: &[Vec<S>],
        orientation: &[Vec<S>],
    ) -> Result<Self> {
        let names: Vec<String> = halfedges.iter().map(|s| s.as_ref().to_string()).collect();
        let mut pos = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if pos.insert(name.as_str(), i).is_some() {
                return Err(Error::Semantic {
                    message: "duplicate half-edge".into(),
                    token: name.clone(),
                });
            }
        }
        let lookup = |s: &S, what: &str| -> Result<usize> {
            pos.get(s.as_ref()).copied().ok_or_else(|| Error::Semantic {
                message: format!("unknown half-edge in {what}"),
                token: s.as_ref().to_string(),
            })
        };
        let n = names.len();
        let mut iota: Vec<usize> = (0..n).collect();
        let mut paired = vec![false; n];
        for pair in pairing {
            if pair.len() != 2 {
                return Err(Error::Semantic {
                    message: "pairing must be an involution".into(),
                    token: pair.iter().map(|s| s.as_ref()).collect::<Vec<_>>().join(" "),
                });
            }
            let a = lookup(&pair[0], "pairing")?;
            let b = lookup(&pair[1], "pairing")?;
            for (x, s) in [(a, &pair[0]), (b, &pair[1])] {
                if paired[x] || a == b {
                    return Err(Error::Semantic {
                        message: "half-edge paired more than once".into(),
                        token: s.as_ref().to_string(),
                    });
                }
                paired[x] = true;
            }
            iota[a] = b;
            iota[b] = a;
        }
        let mut sigma: Vec<usize> = (0..n).collect();
        let mut placed = vec![false; n];
        for cycle in orientation {
            let idx: Vec<usize> =
                cycle.iter().map(|s| lookup(s, "orientation")).collect::<Result<_>>()?;
            for (k, &i) in idx.iter().enumerate() {
                if placed[i] {
                    return Err(Error::Semantic {
                        message: "half-edge appears twice in orientation".into(),
                        token: names[i].clone(),
                    });
                }
                placed[i] = true;
                sigma[i] = idx[(k + 1) % idx.len()];
            }
        }
        BrauerGraph::try_from(RawBrauerGraph { halfedges: names, iota, sigma })
    }

    pub fn to_raw(&self) -> RawBrauerGraph {
        RawBrauerGraph {
            halfedges: self.names.iter().map(|h| h.0.clone()).collect(),
            iota: self.iota.clone(),
            sigma: self.sigma.clone(),
        }
    }

    /// Same pairing, new orientation. Caller guarantees `sigma` is a permutation.
    pub(crate) fn with_sigma(&self, sigma: Vec<usize>) -> Self {
        Self::assemble(self.names.clone(), self.iota.clone(), sigma)
    }

    /// Rename every half-edge through `f`; the result is re-sorted.
    pub fn renamed(&self, f: impl Fn(&str) -> String) -> Result<Self> {
        let raw = self.to_raw();
        BrauerGraph::try_from(RawBrauerGraph {
            halfedges: raw.halfedges.iter().map(|s| f(s)).collect(),
            ..raw
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[HalfEdgeId] {
        &self.names
    }

    pub fn name(&self, h: usize) -> &str {
        &self.names[h].0
    }

    pub fn names_of(&self, hs: &[usize]) -> Vec<String> {
        hs.iter().map(|&h| self.name(h).to_string()).collect()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownHalfEdge(name.to_string()))
    }

    pub fn iota(&self, h: usize) -> usize {
        self.iota[h]
    }

    pub fn sigma(&self, h: usize) -> usize {
        self.sigma[h]
    }

    pub fn sigma_inv(&self, h: usize) -> usize {
        self.sigma_inv[h]
    }

    pub fn iota_map(&self) -> &[usize] {
        &self.iota
    }

    pub fn sigma_map(&self) -> &[usize] {
        &self.sigma
    }

    /// σ^k(h) for any integer k.
    pub fn sigma_pow(&self, mut h: usize, k: i64) -> usize {
        if k >= 0 {
            for _ in 0..k {
                h = self.sigma[h];
            }
        } else {
            for _ in 0..(-k) {
                h = self.sigma_inv[h];
            }
        }
        h
    }

    /// σ-orbit of `h` in cyclic order starting at `h`.
    pub fn vertex_of(&self, h: usize) -> Vec<usize> {
        let mut orbit = vec![h];
        let mut x = self.sigma[h];
        while x != h {
            orbit.push(x);
            x = self.sigma[x];
        }
        orbit
    }

    pub fn valency(&self, h: usize) -> usize {
        self.vertex_of(h).len()
    }

    /// The ι-orbit of `h`, as `(h, ι h)`.
    pub fn edge_of(&self, h: usize) -> [usize; 2] {
        [h, self.iota[h]]
    }

    /// σ-orbits, each starting at its least half-edge, ordered by that half-edge.
    pub fn vertices(&self) -> Vec<Vec<usize>> {
        orbits(&self.sigma)
    }

    /// ι-orbits as sorted pairs, ordered by least half-edge.
    pub fn edges(&self) -> Vec<[usize; 2]> {
        (0..self.len())
            .filter(|&h| h < self.iota[h])
            .map(|h| [h, self.iota[h]])
            .collect()
    }

    /// For each half-edge, the position of its vertex in [`Self::vertices`].
    pub fn vertex_numbering(&self) -> Vec<usize> {
        numbering(&self.vertices(), self.len())
    }

    /// For each half-edge, the position of its edge in [`Self::edges`].
    pub fn edge_numbering(&self) -> Vec<usize> {
        let mut out = vec![0; self.len()];
        for (k, [a, b]) in self.edges().into_iter().enumerate() {
            out[a] = k;
            out[b] = k;
        }
        out
    }

    /// Display name of the edge through `h`: the common stem when the two
    /// half-edges are `X+` and `X-`, otherwise `a|b`.
    pub fn edge_name(&self, h: usize) -> String {
        edge_name(self.name(h), self.name(self.iota[h]))
    }

    /// Half-edge sets of the connected components, ordered by least half-edge.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut k = 0;
            while k < members.len() {
                let x = members[k];
                k += 1;
                for y in [self.iota[x], self.sigma[x], self.sigma_inv[x]] {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

pub(crate) fn orbits(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            orbit.push(x);
            x = perm[x];
        }
        out.push(orbit);
    }
    out
}

fn numbering(orbits: &[Vec<usize>], n: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for (k, orbit) in orbits.iter().enumerate() {
        for &h in orbit {
            out[h] = k;
        }
    }
    out
}

pub(crate) fn edge_name(a: &str, b: &str) -> String {
    let split = |s: &str| match s.chars().last() {
        Some(c @ ('+' | '-')) if s.len() > 1 => Some((s[..s.len() - 1].to_string(), c)),
        _ => None,
    };
    if let (Some((sa, ca)), Some((sb, cb))) = (split(a), split(b)) {
        if sa == sb && ca != cb {
            return sa;
        }
    }
    if a <= b {
        format!("{a}|{b}")
    } else {
        format!("{b}|{a}")
    }
}

/// A map from half-edges to ℤ^k. Indexed like the owning graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grading {
    rank: usize,
    degrees: Vec<Vec<i64>>,
}

impl Grading {
    pub fn new(rank: usize, degrees: Vec<Vec<i64>>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if let Some(bad) = degrees.iter().find(|d| d.len() != rank) {
            return Err(Error::RankMismatch { expected: rank, found: bad.len() });
        }
        Ok(Grading { rank, degrees })
    }

    pub fn zero(rank: usize, n: usize) -> Self {
        Grading { rank: rank.max(1), degrees: vec![vec![0; rank.max(1)]; n] }
    }

    /// Rank-1 grading from integer values.
    pub fn scalar(values: &[i64]) -> Self {
        Grading { rank: 1, degrees: values.iter().map(|&v| vec![v]).collect() }
    }

    /// The rank-1 {0,1}-grading that is 1 exactly on `ones` and on every
    /// σ-fixed half-edge.
    pub fn cut(graph: &BrauerGraph, ones: &[usize]) -> Self {
        let mut values = vec![0; graph.len()];
        for h in 0..graph.len() {
            if graph.sigma(h) == h {
                values[h] = 1;
            }
        }
        for &h in ones {
            values[h] = 1;
        }
        Grading::scalar(&values)
    }

    /// [`Grading::cut`] with half-edges given by name.
    pub fn cut_named(graph: &BrauerGraph, ones: &[&str]) -> Result<Self> {
        let idx = ones.iter().map(|s| graph.index_of(s)).collect::<Result<Vec<_>>>()?;
        Ok(Grading::cut(graph, &idx))
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

    pub fn degree(&self, h: usize) -> &[i64] {
        &self.degrees[h]
    }

    pub fn degrees(&self) -> &[Vec<i64>] {
        &self.degrees
    }

    pub fn set(&mut self, h: usize, value: Vec<i64>) {
        debug_assert_eq!(value.len(), self.rank);
        self.degrees[h] = value;
    }

    /// The c-th coordinate as a rank-1 grading.
    pub fn component(&self, c: usize) -> Grading {
        Grading { rank: 1, degrees: self.degrees.iter().map(|d| vec![d[c]]).collect() }
    }

    /// Half-edges of nonzero degree.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&h| self.degrees[h].iter().any(|&x| x != 0)).collect()
    }
}

/// A Brauer graph together with a grading on its half-edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBrauerGraph {
    graph: BrauerGraph,
    grading: Grading,
}

impl GradedBrauerGraph {
    pub fn new(graph: BrauerGraph, grading: Grading) -> Result<Self> {
        if grading.len() != graph.len() {
            return Err(Error::GradingSize { expected: graph.len(), found: grading.len() });
        }
        Ok(GradedBrauerGraph { graph, grading })
    }

    /// Rank-1 all-zero grading.
    pub fn ungraded(graph: BrauerGraph) -> Self {
        let n = graph.len();
        GradedBrauerGraph { graph, grading: Grading::zero(1, n) }
    }

    pub fn graph(&self) -> &BrauerGraph {
        &self.graph
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn into_parts(self) -> (BrauerGraph, Grading) {
        (self.graph, self.grading)
    }
}

/// Always empty for a constructed [`BrauerGraph`]; use
/// [`RawBrauerGraph::validate`] on unchecked data.
pub fn validate(graph: &BrauerGraph) -> Vec<GraphDiagnostic> {
    graph.to_raw().validate()
}

/// The common degree sum g of every vertex, if there is one.
pub fn homogeneity(gg: &GradedBrauerGraph) -> Option<Vec<i64>> {
    let k = gg.grading.rank();
    let mut common: Option<Vec<i64>> = None;
    for orbit in gg.graph.vertices() {
        let mut sum = vec![0i64; k];
        for h in orbit {
            for (s, x) in sum.iter_mut().zip(gg.grading.degree(h)) {
                *s += x;
            }
        }
        match &common {
            None => common = Some(sum),
            Some(g) if *g != sum => return None,
            _ => {}
        }
    }
    Some(common.unwrap_or_else(|| vec![0; k]))
}

/// True iff the grading is 1-homogeneous with values in {0,1}.
pub fn is_admissible_cut(gg: &GradedBrauerGraph) -> Result<bool> {
    if gg.grading.rank() != 1 {
        return Err(Error::RankMismatch { expected: 1, found: gg.grading.rank() });
    }
    if gg.grading.degrees().iter().any(|d| d[0] != 0 && d[0] != 1) {
        return Ok(false);
    }
    Ok(gg.graph.is_empty() || homogeneity(gg) == Some(vec![1]))
}

/// Number of admissible cuts: the product of the sizes of non-singleton vertices.
pub fn admissible_cut_count(graph: &BrauerGraph) -> u128 {
    graph
        .vertices()
        .iter()
        .filter(|o| o.len() >= 2)
        .map(|o| o.len() as u128)
        .product()
}

/// Every admissible cut. Singleton vertices are forced to degree 1; each other
/// vertex picks one half-edge. Vertices are ordered by least half-edge and
/// picks within a vertex by half-edge index, first vertex most significant.
pub fn enumerate_admissible_cuts(graph: &BrauerGraph) -> Vec<Grading> {
    let choices: Vec<Vec<usize>> = graph
        .vertices()
        .into_iter()
        .filter(|o| o.len() >= 2)
        .map(|mut o| {
            o.sort_unstable();
            o
        })
        .collect();
    let mut out = Vec::new();
    let mut pick = vec![0usize; choices.len()];
    loop {
        let ones: Vec<usize> = choices.iter().zip(&pick).map(|(o, &p)| o[p]).collect();
        out.push(Grading::cut(graph, &ones));
        let mut k = choices.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
        }
    }
}
