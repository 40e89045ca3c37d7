use std::collections::BTreeSet;

use crate::algebra::{cut_algebra, quiver_of, GentlePresentation};
use crate::error::{Error, Result};
use crate::gentle::nonzero_paths;
use crate::graph::{BrauerGraph, Grading};

/// Two admissible cuts Δ∪{α_i} and Δ∪{β_i} whose common part splits the
/// quiver into a plus side and a minus side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularSplit {
    /// Quiver vertices (edge numbers) on each side.
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
    /// Half-edge pairs (α_i, β_i); α_i goes minus → plus, β_i plus → minus.
    pub connecting: Vec<(usize, usize)>,
    /// The common remainder Δ: one half-edge per other non-singleton vertex.
    pub delta: Vec<usize>,
    /// How many remainders were possible (1 when the caller supplied Δ).
    pub delta_choices: u128,
    pub cuts: (Grading, Grading),
}

fn fail<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Split(msg.into()))
}

/// Check that deleting the arrows α_i, β_i leaves exactly two components and
/// assemble the pair of cuts. When `delta` is `None` the lexicographically
/// first remainder is used.
pub fn triangular_split(
    graph: &BrauerGraph,
    pairs: &[(usize, usize)],
    delta: Option<&[usize]>,
) -> Result<TriangularSplit> {
    let vertex = graph.vertex_numbering();
    let mut at = BTreeSet::new();
    for &(a, b) in pairs {
        for h in [a, b] {
            if graph.sigma(h) == h {
                return fail(format!("{} carries no arrow", graph.name(h)));
            }
        }
        if a == b || vertex[a] != vertex[b] {
            return fail(format!("{} and {} are not two arrows at one vertex", graph.name(a), graph.name(b)));
        }
        if !at.insert(vertex[a]) {
            return fail(format!("two pairs at the vertex of {}", graph.name(a)));
        }
    }
    let q = quiver_of(graph);
    let mut removed = vec![false; q.arrows().len()];
    for &(a, b) in pairs {
        removed[q.arrow_index(graph.name(a))?] = true;
        removed[q.arrow_index(graph.name(b))?] = true;
    }
    let comps = q.components_without(&removed);
    if comps.len() != 2 {
        return fail(format!("deleting the pairs leaves {} components, expected 2", comps.len()));
    }
    let edge = graph.edge_numbering();
    let plus_side = match pairs.first() {
        Some(&(a, _)) => edge[graph.sigma(a)],
        None => return fail("no connecting pairs"),
    };
    let (plus, minus) = if comps[0].contains(&plus_side) {
        (comps[0].clone(), comps[1].clone())
    } else {
        (comps[1].clone(), comps[0].clone())
    };
    for &(a, b) in pairs {
        let ok = minus.contains(&edge[a])
            && plus.contains(&edge[graph.sigma(a)])
            && plus.contains(&edge[b])
            && minus.contains(&edge[graph.sigma(b)]);
        if !ok {
            return fail(format!("{} must go from e⁻ to e⁺ and {} back", graph.name(a), graph.name(b)));
        }
    }

    let others: Vec<Vec<usize>> = graph
        .vertices()
        .into_iter()
        .enumerate()
        .filter(|(v, o)| o.len() >= 2 && !at.contains(v))
        .map(|(_, mut o)| {
            o.sort_unstable();
            o
        })
        .collect();
    let (delta, delta_choices) = match delta {
        Some(given) => {
            let given: BTreeSet<usize> =
                given.iter().copied().filter(|&h| graph.sigma(h) != h).collect();
            let mut chosen = Vec::new();
            for o in &others {
                let hits: Vec<usize> = o.iter().copied().filter(|h| given.contains(h)).collect();
                if hits.len() != 1 {
                    return fail(format!("Δ must pick exactly one half-edge at the vertex of {}", graph.name(o[0])));
                }
                chosen.push(hits[0]);
            }
            if chosen.len() != given.len() {
                return fail("Δ picks half-edges at the split vertices");
            }
            (chosen, 1)
        }
        None => (others.iter().map(|o| o[0]).collect(), others.iter().map(|o| o.len() as u128).product()),
    };
    let with = |extra: &dyn Fn(&(usize, usize)) -> usize| {
        let mut ones = delta.clone();
        ones.extend(pairs.iter().map(extra));
        Grading::cut(graph, &ones)
    };
    let cuts = (with(&|p| p.0), with(&|p| p.1));
    Ok(TriangularSplit { plus, minus, connecting: pairs.to_vec(), delta, delta_choices, cuts })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    /// e⁺Λ₂e⁺
    Plus,
    /// D(e⁻Λ₂e⁻)
    MinusDual,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub part: Part,
    /// Power of the Auslander–Reiten translation τ₂ applied.
    pub ar_power: i64,
    pub shift: i64,
    pub grade_shift: i64,
}

/// Symbolic description of a tilting object; no derived computation is done.
/// A graded summary describes the base object T, and the full object is
/// ⊕_{n∈ℤ} τ₂ⁿ T[2n](−n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltingSummary {
    pub summands: Vec<Summand>,
    pub graded: bool,
}

fn superscript(n: i64) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    let mut s: String = n.unsigned_abs().to_string().chars().map(|c| DIGITS[c as usize - '0' as usize]).collect();
    if n < 0 {
        s.insert(0, '⁻');
    }
    s
}

impl TiltingSummary {
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|s| {
                let mut out = String::new();
                if s.ar_power != 0 {
                    out.push_str(&format!("τ₂{}", superscript(s.ar_power)));
                }
                out.push_str(match s.part {
                    Part::Plus => "e⁺Λ₂e⁺",
                    Part::MinusDual => "D(e⁻Λ₂e⁻)",
                });
                if s.shift != 0 {
                    out.push_str(&format!("[{}]", s.shift));
                }
                if s.grade_shift != 0 {
                    out.push_str(&format!("({})", s.grade_shift));
                }
                out
            })
            .collect();
        let base = parts.join(" ⊕ ");
        if self.graded {
            format!("⊕_{{n∈ℤ}} τ₂ⁿ T[2n](−n) with T = {base}")
        } else {
            base
        }
    }
}

/// T = e⁺Λ₂e⁺ ⊕ D(e⁻Λ₂e⁻)[1].
pub fn tilting_summary(split: &TriangularSplit) -> TiltingSummary {
    let mut summands = vec![Summand { part: Part::Plus, ar_power: 0, shift: 0, grade_shift: 0 }];
    if !split.minus.is_empty() {
        summands.push(Summand { part: Part::MinusDual, ar_power: 0, shift: 1, grade_shift: 0 });
    }
    TiltingSummary { summands, graded: false }
}

/// Graded base object T = e⁺Λ₂e⁺ ⊕ τ₂⁻¹D(e⁻Λ₂e⁻)[−1].
pub fn graded_tilting_summary(split: &TriangularSplit) -> TiltingSummary {
    let mut summands = vec![Summand { part: Part::Plus, ar_power: 0, shift: 0, grade_shift: 0 }];
    if !split.minus.is_empty() {
        summands.push(Summand { part: Part::MinusDual, ar_power: -1, shift: -1, grade_shift: 0 });
    }
    TiltingSummary { summands, graded: true }
}

fn layers(names: &[String], mut rows: Vec<Vec<usize>>) -> String {
    rows.retain(|r| !r.is_empty());
    rows.iter()
        .map(|r| {
            let mut r = r.clone();
            r.sort_unstable();
            r.iter().map(|&v| names[v].as_str()).collect::<Vec<_>>().join(",")
        })
        .collect::<Vec<_>>()
        .join("/")
}

/// The non-graded tilting object written out as modules over Λ₂: one
/// indecomposable projective e_vΛ₂e⁺ per plus vertex and one injective of
/// e⁻Λ₂e⁻ per minus vertex (shifted by [1]), each as its composition layers
/// from the top. Plus summands come first, larger ones first.
pub fn tilting_modules(graph: &BrauerGraph, split: &TriangularSplit) -> Result<Vec<String>> {
    let lambda2: GentlePresentation = cut_algebra(graph, &split.cuts.1)?;
    let q = &lambda2.quiver;
    let paths = nonzero_paths(&lambda2)?;
    let src = |p: &Vec<usize>| q.arrows()[p[0]].source;
    let tgt = |p: &Vec<usize>| q.arrows()[*p.last().unwrap()].target;
    let names = q.vertices();

    let mut plus: Vec<(usize, usize, String)> = Vec::new();
    for &v in &split.plus {
        let mut rows = vec![vec![v]];
        for p in paths.iter().filter(|p| tgt(p) == v && split.plus.contains(&src(p))) {
            if rows.len() <= p.len() {
                rows.resize(p.len() + 1, Vec::new());
            }
            rows[p.len()].push(src(p));
        }
        let dim = rows.iter().map(Vec::len).sum();
        plus.push((dim, v, layers(names, rows)));
    }
    plus.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    let mut minus: Vec<(usize, usize, String)> = Vec::new();
    for &v in &split.minus {
        let mut rows = vec![vec![v]];
        for p in paths.iter().filter(|p| src(p) == v && split.minus.contains(&tgt(p))) {
            if rows.len() <= p.len() {
                rows.resize(p.len() + 1, Vec::new());
            }
            rows[p.len()].push(tgt(p));
        }
        rows.reverse();
        let dim = rows.iter().map(Vec::len).sum();
        minus.push((dim, v, format!("{}[1]", layers(names, rows))));
    }
    minus.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    Ok(plus.into_iter().chain(minus).map(|x| x.2).collect())
}
