//! Fixtures, random instance generators and brute-force oracles shared by the
//! integration tests. The oracles deliberately avoid the library's own
//! algorithms.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use brauer_kit::algebra::{quiver_of, relations_of, Arrow, GentlePresentation, Quiver};
use brauer_kit::graph::{BrauerGraph, GradedBrauerGraph, Grading};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn idx(g: &BrauerGraph, names: &[&str]) -> Vec<usize> {
    names.iter().map(|s| g.index_of(s).unwrap()).collect()
}

/// Rank-1 grading equal to 1 on `ones`, 0 elsewhere (no forced half-edges).
pub fn ones(g: &BrauerGraph, names: &[&str]) -> Grading {
    let mut v = vec![0; g.len()];
    for h in idx(g, names) {
        v[h] = 1;
    }
    Grading::scalar(&v)
}

pub fn values(g: &BrauerGraph, assign: &[(&str, i64)]) -> Grading {
    let mut v = vec![0; g.len()];
    for &(n, x) in assign {
        v[g.index_of(n).unwrap()] = x;
    }
    Grading::scalar(&v)
}

/// Four edges 1..4: a vertex (1+ 2+), a vertex (1- 4- 3- 2-) and two leaves.
pub fn gamma_star() -> BrauerGraph {
    BrauerGraph::from_cycles(
        &["1+", "1-", "2+", "2-", "3+", "3-", "4+", "4-"],
        &[vec!["1+", "1-"], vec!["2+", "2-"], vec!["3+", "3-"], vec!["4+", "4-"]],
        &[vec!["1+", "2+"], vec!["1-", "4-", "3-", "2-"]],
    )
    .unwrap()
}

pub fn d_star(g: &BrauerGraph) -> Grading {
    ones(g, &["1+", "2-", "3+", "4+"])
}

pub fn graded_star() -> GradedBrauerGraph {
    let g = gamma_star();
    let d = d_star(&g);
    GradedBrauerGraph::new(g, d).unwrap()
}

pub fn h_prime(g: &BrauerGraph) -> Vec<usize> {
    idx(g, &["1+", "1-", "4-", "4+"])
}

/// Γ⋆ after the move along H′: σ = (3- 2- 1+)(3+ 1- 4-).
pub fn gamma_moved() -> BrauerGraph {
    BrauerGraph::from_cycles(
        &["1+", "1-", "2+", "2-", "3+", "3-", "4+", "4-"],
        &[vec!["1+", "1-"], vec!["2+", "2-"], vec!["3+", "3-"], vec!["4+", "4-"]],
        &[vec!["3-", "2-", "1+"], vec!["3+", "1-", "4-"]],
    )
    .unwrap()
}

/// Gentle presentation from vertex names, arrows `(id, source, target)` and
/// relations `(b, a)` meaning b∘a = 0.
pub fn gentle(vertices: &[&str], arrows: &[(&str, &str, &str)], rels: &[(&str, &str)]) -> GentlePresentation {
    let vs: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
    let pos = |v: &str| vs.iter().position(|x| x == v).unwrap();
    let arrows = arrows
        .iter()
        .map(|&(id, s, t)| Arrow { id: id.into(), source: pos(s), target: pos(t) })
        .collect();
    GentlePresentation::new(Quiver::new(vs.clone(), arrows).unwrap(), BTreeSet::new())
        .with_relation_ids(rels)
        .unwrap()
}

/// 1 → 2 → 3 with β2β1 = 0.
pub fn a3_relation() -> GentlePresentation {
    gentle(&["1", "2", "3"], &[("b1", "1", "2"), ("b2", "2", "3")], &[("b2", "b1")])
}

/// 1 ← 2 → 3, no relations.
pub fn a3_star() -> GentlePresentation {
    gentle(&["1", "2", "3"], &[("a1", "2", "1"), ("a2", "2", "3")], &[])
}

/// Oriented 3-cycle 1 → 2 → 3 → 1 with β3β2 = 0 and β1β3 = 0.
pub fn three_cycle() -> GentlePresentation {
    gentle(
        &["1", "2", "3"],
        &[("b2", "1", "2"), ("b3", "2", "3"), ("b1", "3", "1")],
        &[("b3", "b2"), ("b1", "b3")],
    )
}

/// 1 → 2 → 3 with α2α1 = 0.
pub fn triangular_lambda1() -> GentlePresentation {
    gentle(&["1", "2", "3"], &[("a1", "1", "2"), ("a2", "2", "3")], &[("a2", "a1")])
}

/// Random Brauer graph with `edges` edges named k+/k-; σ is a uniform permutation.
pub fn random_graph(r: &mut StdRng, edges: usize) -> BrauerGraph {
    let names: Vec<String> =
        (0..edges).flat_map(|k| [format!("{k}+"), format!("{k}-")]).collect();
    let pairing: Vec<Vec<String>> = (0..edges).map(|k| vec![names[2 * k].clone(), names[2 * k + 1].clone()]).collect();
    let mut perm: Vec<usize> = (0..names.len()).collect();
    perm.shuffle(r);
    let mut seen = vec![false; perm.len()];
    let mut cycles = Vec::new();
    for s in 0..perm.len() {
        let mut c = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            c.push(names[x].clone());
            x = perm[x];
        }
        if c.len() > 1 {
            cycles.push(c);
        }
    }
    BrauerGraph::from_cycles(&names, &pairing, &cycles).unwrap()
}

pub fn random_grading(r: &mut StdRng, n: usize, rank: usize, spread: i64) -> Grading {
    let degrees = (0..n).map(|_| (0..rank).map(|_| r.random_range(-spread..=spread)).collect()).collect();
    Grading::new(rank, degrees).unwrap()
}

/// A g-homogeneous grading: random values, then the last half-edge of each
/// vertex absorbs the difference.
pub fn random_homogeneous(r: &mut StdRng, g: &BrauerGraph, target: i64) -> Grading {
    let mut v = vec![0i64; g.len()];
    for orbit in g.vertices() {
        let mut sum = 0;
        for &h in &orbit[..orbit.len() - 1] {
            v[h] = r.random_range(-2..=2);
            sum += v[h];
        }
        v[*orbit.last().unwrap()] = target - sum;
    }
    Grading::scalar(&v)
}

/// Random ι-stable subset: each edge included with probability 1/2.
pub fn random_subset(r: &mut StdRng, g: &BrauerGraph) -> Vec<usize> {
    let mut out = Vec::new();
    for [a, b] in g.edges() {
        if r.random_bool(0.5) {
            out.push(a);
            out.push(b);
        }
    }
    out.sort_unstable();
    out
}

// ---------------------------------------------------------------- oracles

/// All {0,1}-gradings that are 1-homogeneous, by exhaustive search.
pub fn brute_force_cuts(g: &BrauerGraph) -> Vec<Vec<i64>> {
    let n = g.len();
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let v: Vec<i64> = (0..n).map(|h| ((mask >> h) & 1) as i64).collect();
        let ok = (0..n).all(|h| {
            // sum around the vertex of h, by walking σ directly
            let mut s = v[h];
            let mut x = g.sigma(h);
            while x != h {
                s += v[x];
                x = g.sigma(x);
            }
            s == 1
        });
        if ok {
            out.push(v);
        }
    }
    out
}

/// Number of orbits of a permutation given as a closure, counted by marking.
pub fn count_orbits(n: usize, f: impl Fn(usize) -> usize) -> usize {
    let mut seen = vec![false; n];
    let mut count = 0;
    for s in 0..n {
        if !seen[s] {
            count += 1;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = f(x);
            }
        }
    }
    count
}

/// Dimension of the Brauer graph algebra by enumerating arrow words, killing
/// those containing a type II or type III relation and identifying the two
/// sides of each type I relation. Isolated edges contribute only their
/// trivial path here.
pub fn bga_dimension_by_words(g: &BrauerGraph) -> usize {
    let q = quiver_of(g);
    let rels = relations_of(g);
    let arrow = |h: usize| q.arrow_index(g.name(h)).unwrap();
    let zero2: BTreeSet<(usize, usize)> = rels.type_iii.iter().map(|&(a, b)| (arrow(a), arrow(b))).collect();
    let zero_long: Vec<Vec<usize>> = rels.type_ii.iter().map(|p| p.iter().map(|&h| arrow(h)).collect()).collect();
    let is_zero = |w: &[usize]| {
        w.windows(2).any(|p| zero2.contains(&(p[0], p[1])))
            || zero_long.iter().any(|z| w.windows(z.len()).any(|s| s == z.as_slice()))
    };
    let mut words: Vec<Vec<usize>> = Vec::new();
    let mut frontier: Vec<Vec<usize>> = (0..q.arrows().len()).map(|a| vec![a]).collect();
    while let Some(w) = frontier.pop() {
        if is_zero(&w) {
            continue;
        }
        let last = q.arrows()[*w.last().unwrap()].target;
        for b in 0..q.arrows().len() {
            if q.arrows()[b].source == last {
                let mut x = w.clone();
                x.push(b);
                frontier.push(x);
            }
        }
        words.push(w);
    }
    let mut class: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    for (i, w) in words.iter().enumerate() {
        class.insert(w.clone(), i);
    }
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            x = p[x];
        }
        x
    }
    for (a, b) in &rels.type_i {
        let wa: Vec<usize> = a.iter().map(|&h| arrow(h)).collect();
        let wb: Vec<usize> = b.iter().map(|&h| arrow(h)).collect();
        let (x, y) = (class[&wa], class[&wb]);
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        parent[rx] = ry;
    }
    let roots: BTreeSet<usize> = (0..words.len()).map(|i| find(&mut parent, i)).collect();
    q.vertices().len() + roots.len()
}

/// AG pairs predicted by the faces of a graph with an admissible cut: one pair
/// (Σ d, |F| − Σ d) per orbit F of h ↦ ι(σ(h)).
pub fn ag_from_faces(g: &BrauerGraph, cut: &Grading) -> Vec<(usize, usize)> {
    let mut seen = vec![false; g.len()];
    let mut out = Vec::new();
    for s in 0..g.len() {
        if seen[s] {
            continue;
        }
        let (mut len, mut sum) = (0usize, 0usize);
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            len += 1;
            sum += cut.degree(x)[0] as usize;
            x = g.iota(g.sigma(x));
        }
        out.push((sum, len - sum));
    }
    out.sort_unstable();
    out
}

// ------------------------------------------- projective resolutions over ℚ

type Q = BigRational;

fn q(x: i64) -> Q {
    Q::from_integer(BigInt::from(x))
}

/// Nonzero paths of a monomial quadratic algebra, including trivial ones.
#[derive(Clone, Debug)]
struct Path {
    src: usize,
    tgt: usize,
    arrows: Vec<usize>,
}

struct Algebra<'a> {
    p: &'a GentlePresentation,
    basis: Vec<Path>,
    lookup: HashMap<(usize, Vec<usize>), usize>,
}

impl<'a> Algebra<'a> {
    fn new(p: &'a GentlePresentation, limit: usize) -> Option<Self> {
        let arrows = p.quiver.arrows();
        let mut basis: Vec<Path> =
            (0..p.quiver.vertices().len()).map(|v| Path { src: v, tgt: v, arrows: vec![] }).collect();
        let mut stack: Vec<Path> = (0..arrows.len())
            .map(|a| Path { src: arrows[a].source, tgt: arrows[a].target, arrows: vec![a] })
            .collect();
        while let Some(path) = stack.pop() {
            if basis.len() > limit {
                return None;
            }
            let last = *path.arrows.last().unwrap();
            for (b, arrow) in arrows.iter().enumerate() {
                if arrow.source == path.tgt && !p.relations.contains(&(last, b)) {
                    let mut next = path.clone();
                    next.arrows.push(b);
                    next.tgt = arrow.target;
                    stack.push(next);
                }
            }
            basis.push(path);
        }
        let lookup = basis.iter().enumerate().map(|(i, b)| ((b.src, b.arrows.clone()), i)).collect();
        Some(Algebra { p, basis, lookup })
    }

    /// Basis index of path `x` followed... composed as `outer ∘ inner`
    /// (inner travelled first), or None when the product vanishes.
    fn compose(&self, outer: usize, inner: usize) -> Option<usize> {
        let (o, i) = (&self.basis[outer], &self.basis[inner]);
        if i.tgt != o.src {
            return None;
        }
        if let (Some(&a), Some(&b)) = (i.arrows.last(), o.arrows.first()) {
            if self.p.relations.contains(&(a, b)) {
                return None;
            }
        }
        let mut w = i.arrows.clone();
        w.extend(&o.arrows);
        self.lookup.get(&(i.src, w)).copied()
    }

    /// Basis of the projective e_vΛ: paths ending at v.
    fn projective(&self, v: usize) -> Vec<usize> {
        (0..self.basis.len()).filter(|&b| self.basis[b].tgt == v).collect()
    }
}

/// A submodule of a free module ⊕ P_{w_j}, stored as a k-basis of vectors
/// that are homogeneous for the source vertex of their paths.
struct Sub {
    tops: Vec<usize>,
    coords: Vec<(usize, usize)>,
    vectors: Vec<(usize, Vec<Q>)>,
}

fn echelon_insert(rows: &mut Vec<Vec<Q>>, mut v: Vec<Q>) -> bool {
    for r in rows.iter() {
        let p = r.iter().position(|x| !x.is_zero()).unwrap();
        if !v[p].is_zero() {
            let f = v[p].clone() / r[p].clone();
            for (x, y) in v.iter_mut().zip(r) {
                *x -= f.clone() * y;
            }
        }
    }
    if v.iter().all(Zero::is_zero) {
        return false;
    }
    rows.push(v);
    rows.sort_by_key(|r| r.iter().position(|x| !x.is_zero()).unwrap());
    true
}

fn nullspace(cols: &[Vec<Q>], rows: usize) -> Vec<Vec<Q>> {
    let n = cols.len();
    let mut m: Vec<Vec<Q>> = (0..rows).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Q::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x *= inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..n {
                    let v = m[r][j].clone();
                    m[i][j] -= f.clone() * v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); n];
            v[f] = Q::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[i][f].clone();
            }
            v
        })
        .collect()
}

fn free_coords(alg: &Algebra, tops: &[usize]) -> Vec<(usize, usize)> {
    tops.iter().enumerate().flat_map(|(j, &w)| alg.projective(w).into_iter().map(move |b| (j, b))).collect()
}

/// Projective cover of `m` followed by its kernel, as a submodule of the cover.
fn syzygy(alg: &Algebra, m: &Sub) -> Sub {
    let pos: HashMap<(usize, usize), usize> = m.coords.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let act = |v: &[Q], path: usize| -> Vec<Q> {
        let mut out = vec![Q::zero(); v.len()];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (j, b) = m.coords[i];
            if let Some(c) = alg.compose(b, path) {
                out[pos[&(j, c)]] += x.clone();
            }
        }
        out
    };
    let nv = alg.p.quiver.vertices().len();
    let arrow_paths: Vec<usize> = (0..alg.basis.len()).filter(|&b| alg.basis[b].arrows.len() == 1).collect();
    let mut generators: Vec<(usize, Vec<Q>)> = Vec::new();
    for u in 0..nv {
        let mut rows = Vec::new();
        for (w, v) in &m.vectors {
            for &a in &arrow_paths {
                let arrow = &alg.basis[a];
                if arrow.src == u && arrow.tgt == *w {
                    let img = act(v, a);
                    if img.iter().any(|x| !x.is_zero()) {
                        echelon_insert(&mut rows, img);
                    }
                }
            }
        }
        for (w, v) in &m.vectors {
            if *w == u && echelon_insert(&mut rows, v.clone()) {
                generators.push((u, v.clone()));
            }
        }
    }
    let tops: Vec<usize> = generators.iter().map(|(u, _)| *u).collect();
    let coords = free_coords(alg, &tops);
    let mut vectors = Vec::new();
    for s in 0..nv {
        let local: Vec<usize> = (0..coords.len()).filter(|&i| alg.basis[coords[i].1].src == s).collect();
        let cols: Vec<Vec<Q>> = local.iter().map(|&i| act(&generators[coords[i].0].1, coords[i].1)).collect();
        for k in nullspace(&cols, m.coords.len()) {
            let mut v = vec![Q::zero(); coords.len()];
            for (x, &i) in k.into_iter().zip(&local) {
                v[i] = x;
            }
            vectors.push((s, v));
        }
    }
    Sub { tops, coords, vectors }
}

/// Global dimension by minimal projective resolutions of the simples over ℚ.
/// `Some(None)` when some resolution is still going after `cap` steps;
/// `None` when the algebra exceeds `limit` basis paths.
pub fn gldim_by_resolution(p: &GentlePresentation, cap: usize, limit: usize) -> Option<Option<usize>> {
    let alg = Algebra::new(p, limit)?;
    let mut best = 0;
    for v in 0..p.quiver.vertices().len() {
        let tops = vec![v];
        let coords = free_coords(&alg, &tops);
        let vectors: Vec<(usize, Vec<Q>)> = coords
            .iter()
            .enumerate()
            .filter(|(_, &(_, b))| !alg.basis[b].arrows.is_empty())
            .map(|(i, &(_, b))| {
                let mut e = vec![Q::zero(); coords.len()];
                e[i] = q(1);
                (alg.basis[b].src, e)
            })
            .collect();
        let mut m = Sub { tops, coords, vectors };
        let mut pd = 0;
        while !m.vectors.is_empty() {
            pd += 1;
            if pd > cap {
                return Some(None);
            }
            m = syzygy(&alg, &m);
        }
        best = best.max(pd);
    }
    Some(Some(best))
}

/// Fraction-free Gaussian elimination.
pub fn bareiss(a: &[Vec<i64>]) -> i64 {
    let n = a.len();
    let mut m: Vec<Vec<i128>> = a.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else { return 0 };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    if n == 0 { 1 } else { (sign * m[n - 1][n - 1]) as i64 }
}

/// Random gentle presentation built directly from the local conditions: at
/// most two arrows in and out of each vertex, and at each composable pair a
/// coin decides relation or not within the one-of-each budget. Retries until
/// the result is finite dimensional with at most `max_dim` paths.
pub fn random_gentle(r: &mut StdRng, max_vertices: usize, max_dim: usize) -> GentlePresentation {
    loop {
        let n = r.random_range(1..=max_vertices);
        let arrow_target = r.random_range(0..=2 * n);
        let (mut outs, mut ins) = (vec![0; n], vec![0; n]);
        let mut arrows = Vec::new();
        for _ in 0..arrow_target {
            let (s, t) = (r.random_range(0..n), r.random_range(0..n));
            if outs[s] < 2 && ins[t] < 2 {
                outs[s] += 1;
                ins[t] += 1;
                arrows.push(Arrow { id: format!("a{}", arrows.len()), source: s, target: t });
            }
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for a in 0..arrows.len() {
            for b in 0..arrows.len() {
                if arrows[a].target == arrows[b].source {
                    pairs.push((a, b));
                }
            }
        }
        pairs.shuffle(r);
        let m = arrows.len();
        let (mut rel_out, mut free_out, mut rel_in, mut free_in) = (vec![0; m], vec![0; m], vec![0; m], vec![0; m]);
        let mut relations = BTreeSet::new();
        let mut ok = true;
        for (a, b) in pairs {
            let can_rel = rel_out[a] == 0 && rel_in[b] == 0;
            let can_free = free_out[a] == 0 && free_in[b] == 0;
            let rel = match (can_rel, can_free) {
                (true, true) => r.random_bool(0.5),
                (true, false) => true,
                (false, true) => false,
                (false, false) => {
                    ok = false;
                    break;
                }
            };
            if rel {
                rel_out[a] += 1;
                rel_in[b] += 1;
                relations.insert((a, b));
            } else {
                free_out[a] += 1;
                free_in[b] += 1;
            }
        }
        if !ok {
            continue;
        }
        let vertices = (0..n).map(|i| format!("v{i}")).collect();
        let p = GentlePresentation::new(Quiver::new(vertices, arrows).unwrap(), relations);
        if Algebra::new(&p, max_dim).is_some() {
            return p;
        }
    }
}

/// Total number of nonzero paths (trivial ones included), or None past `limit`.
pub fn path_count(p: &GentlePresentation, limit: usize) -> Option<usize> {
    Algebra::new(p, limit).map(|a| a.basis.len())
}

/// Brute-force isomorphism of presentations: a vertex bijection and an arrow
/// bijection commuting with source, target and the relation set.
pub fn presentations_isomorphic(p: &GentlePresentation, q: &GentlePresentation) -> bool {
    let (n, m) = (p.quiver.vertices().len(), p.quiver.arrows().len());
    if n != q.quiver.vertices().len() || m != q.quiver.arrows().len() || p.relations.len() != q.relations.len() {
        return false;
    }
    fn arrows_match(p: &GentlePresentation, q: &GentlePresentation, vmap: &[usize], amap: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let a = amap.len();
        if a == p.quiver.arrows().len() {
            return p.relations.iter().all(|&(x, y)| q.relations.contains(&(amap[x], amap[y])));
        }
        let pa = &p.quiver.arrows()[a];
        for b in 0..q.quiver.arrows().len() {
            let qb = &q.quiver.arrows()[b];
            if !used[b] && qb.source == vmap[pa.source] && qb.target == vmap[pa.target] {
                used[b] = true;
                amap.push(b);
                if arrows_match(p, q, vmap, amap, used) {
                    return true;
                }
                amap.pop();
                used[b] = false;
            }
        }
        false
    }
    fn vertices(p: &GentlePresentation, q: &GentlePresentation, vmap: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let n = p.quiver.vertices().len();
        if vmap.len() == n {
            let m = q.quiver.arrows().len();
            return arrows_match(p, q, vmap, &mut Vec::new(), &mut vec![false; m]);
        }
        for w in 0..n {
            if !used[w] {
                used[w] = true;
                vmap.push(w);
                if vertices(p, q, vmap, used) {
                    return true;
                }
                vmap.pop();
                used[w] = false;
            }
        }
        false
    }
    vertices(p, q, &mut Vec::new(), &mut vec![false; n])
}

/// The line with vertices (2+ 1+) and (2- 3+) and two leaves, carrying both
/// A3 algebras.
pub fn a3_line() -> BrauerGraph {
    BrauerGraph::from_cycles(
        &["1+", "1-", "2+", "2-", "3+", "3-"],
        &[vec!["1+", "1-"], vec!["2+", "2-"], vec!["3+", "3-"]],
        &[vec!["2+", "1+"], vec!["2-", "3+"]],
    )
    .unwrap()
}

/// 3 → 1 → 2 and 3 → 2, no relations.
pub fn triangle_hereditary() -> GentlePresentation {
    gentle(&["1", "2", "3"], &[("a1", "3", "1"), ("a2", "1", "2"), ("a3", "3", "2")], &[])
}

/// Brauer graph shared by the hereditary triangle and the 3-cycle.
pub fn triangle_graph() -> BrauerGraph {
    BrauerGraph::from_cycles(
        &["1+", "1-", "2+", "2-", "3+", "3-"],
        &[vec!["1+", "1-"], vec!["2+", "2-"], vec!["3+", "3-"]],
        &[vec!["3+", "1+", "2+"], vec!["3-", "2-"]],
    )
    .unwrap()
}

/// Vertices (1+ 2+) and (2- 3+) with leaves 1- and 3-: the trivial extension
/// of 1 → 2 → 3 with α2α1 = 0.
pub fn triangular_graph() -> BrauerGraph {
    BrauerGraph::from_cycles(
        &["1+", "1-", "2+", "2-", "3+", "3-"],
        &[vec!["1+", "1-"], vec!["2+", "2-"], vec!["3+", "3-"]],
        &[vec!["1+", "2+"], vec!["2-", "3+"]],
    )
    .unwrap()
}
