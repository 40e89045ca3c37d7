//! Checkable derived-equivalence criteria between gradings and cuts.

mod split;

use crate::algebra::{ArrowGrading, Quiver};
use crate::error::{Error, Result};

pub use split::{graded_tilting_summary, tilting_modules, tilting_summary, triangular_split, Part, Summand, TiltingSummary, TriangularSplit};

/// The matrix (x, y) ↦ (x + y, −y).
pub const DEFAULT_TRANSFORM: [[i64; 2]; 2] = [[1, 1], [0, -1]];

/// Per-vertex shifts n with n(source α) − n(target α) = d2(α) − d1(α) for
/// every arrow α. Each connected component is normalized so that its least
/// shift (coordinate by coordinate) is 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexShift {
    pub shifts: Vec<Vec<i64>>,
}

fn check_grading(q: &Quiver, d: &ArrowGrading, rank: usize) -> Result<()> {
    if d.len() != q.arrows().len() {
        return Err(Error::GradingSize { expected: q.arrows().len(), found: d.len() });
    }
    if d.rank() != rank {
        return Err(Error::RankMismatch { expected: rank, found: d.rank() });
    }
    Ok(())
}

/// Solve for a vertex shift by propagation along a spanning forest, then check
/// every arrow. `None` when some arrow is inconsistent.
pub fn shift_equivalence(q: &Quiver, d1: &ArrowGrading, d2: &ArrowGrading) -> Result<Option<VertexShift>> {
    let k = d1.rank();
    check_grading(q, d1, k)?;
    check_grading(q, d2, k)?;
    let diff = |a: usize| -> Vec<i64> { d2.degree(a).iter().zip(d1.degree(a)).map(|(x, y)| x - y).collect() };
    let n = q.vertices().len();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (a, arrow) in q.arrows().iter().enumerate() {
        incident[arrow.source].push(a);
        incident[arrow.target].push(a);
    }
    let mut shift: Vec<Option<Vec<i64>>> = vec![None; n];
    for comp in q.components() {
        let root = comp[0];
        shift[root] = Some(vec![0; k]);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            let nv = shift[v].clone().unwrap();
            for &a in &incident[v] {
                let arrow = &q.arrows()[a];
                let delta = diff(a);
                // n(t) = n(s) − δ and n(s) = n(t) + δ
                let (w, value): (usize, Vec<i64>) = if arrow.source == v {
                    (arrow.target, nv.iter().zip(&delta).map(|(x, d)| x - d).collect())
                } else {
                    (arrow.source, nv.iter().zip(&delta).map(|(x, d)| x + d).collect())
                };
                match &shift[w] {
                    None => {
                        shift[w] = Some(value);
                        stack.push(w);
                    }
                    Some(existing) if *existing != value => return Ok(None),
                    _ => {}
                }
            }
        }
        for c in 0..k {
            let min = comp.iter().map(|&v| shift[v].as_ref().unwrap()[c]).min().unwrap();
            for &v in &comp {
                shift[v].as_mut().unwrap()[c] -= min;
            }
        }
    }
    Ok(Some(VertexShift { shifts: shift.into_iter().map(Option::unwrap).collect() }))
}

/// Shift equivalence between M·d1 and d2 for a unimodular 2×2 matrix M.
pub fn transformed_equivalence(
    q: &Quiver,
    d1: &ArrowGrading,
    d2: &ArrowGrading,
    m: [[i64; 2]; 2],
) -> Result<Option<VertexShift>> {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if det.abs() != 1 {
        return Err(Error::NotUnimodular(m));
    }
    check_grading(q, d1, 2)?;
    shift_equivalence(q, &d1.transformed(m)?, d2)
}

/// Inverse of a unimodular 2×2 matrix.
pub fn inverse_transform(m: [[i64; 2]; 2]) -> Result<[[i64; 2]; 2]> {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if det.abs() != 1 {
        return Err(Error::NotUnimodular(m));
    }
    Ok([[m[1][1] * det, -m[0][1] * det], [-m[1][0] * det, m[0][0] * det]])
}
