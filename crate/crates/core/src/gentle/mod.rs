//! Gentle presentations: checks, threads, global dimension and the AG invariant.

mod invariants;
mod threads;

use thiserror::Error;

use crate::algebra::GentlePresentation;
use crate::error::{Error, Result};

pub use invariants::{ag_invariant, ag_invariant_with, global_dimension, AgInvariant, AgOptions, Dimension, GlobalDimension, Witness};
pub use threads::{threads, threads_with_seed, Thread, ThreadKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GentleDiagnostic {
    #[error("vertex {vertex} has {count} outgoing arrows")]
    TooManyOutgoing { vertex: String, count: usize },
    #[error("vertex {vertex} has {count} incoming arrows")]
    TooManyIncoming { vertex: String, count: usize },
    #[error("relation {then}∘{first} is not a path")]
    NotComposable { first: String, then: String },
    #[error("arrow {0} has several relation successors")]
    RelationSuccessors(String),
    #[error("arrow {0} has several relation predecessors")]
    RelationPredecessors(String),
    #[error("arrow {0} has several non-relation successors")]
    NonRelationSuccessors(String),
    #[error("arrow {0} has several non-relation predecessors")]
    NonRelationPredecessors(String),
    #[error("relation-free cycle {}: infinite-dimensional", .0.join(" "))]
    RelationFreeCycle(Vec<String>),
}

/// Successor data of a presentation, arrow by arrow.
pub(crate) struct Local {
    pub rel_succ: Vec<Vec<usize>>,
    pub rel_pred: Vec<Vec<usize>>,
    pub free_succ: Vec<Vec<usize>>,
    pub free_pred: Vec<Vec<usize>>,
}

impl Local {
    pub fn new(p: &GentlePresentation) -> Self {
        let arrows = p.quiver.arrows();
        let n = arrows.len();
        let mut local = Local {
            rel_succ: vec![Vec::new(); n],
            rel_pred: vec![Vec::new(); n],
            free_succ: vec![Vec::new(); n],
            free_pred: vec![Vec::new(); n],
        };
        for a in 0..n {
            for b in 0..n {
                if arrows[a].target != arrows[b].source {
                    continue;
                }
                if p.is_relation(a, b) {
                    local.rel_succ[a].push(b);
                    local.rel_pred[b].push(a);
                } else {
                    local.free_succ[a].push(b);
                    local.free_pred[b].push(a);
                }
            }
        }
        local
    }
}

/// Arrows of one cycle in the directed graph `next`, if there is any.
pub(crate) fn find_cycle(next: &[Vec<usize>]) -> Option<Vec<usize>> {
    let n = next.len();
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut state = vec![0u8; n];
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        state[root] = 1;
        while let Some(top) = stack.len().checked_sub(1) {
            let (v, k) = stack[top];
            if let Some(&w) = next[v].get(k) {
                stack[top].1 += 1;
                match state[w] {
                    0 => {
                        state[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => {
                        let from = stack.iter().position(|&(x, _)| x == w).unwrap();
                        return Some(stack[from..].iter().map(|&(x, _)| x).collect());
                    }
                    _ => {}
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    None
}

/// Every way in which `p` fails to be a finite-dimensional gentle algebra.
pub fn check_gentle(p: &GentlePresentation) -> Vec<GentleDiagnostic> {
    let q = &p.quiver;
    let mut out = Vec::new();
    for v in 0..q.vertices().len() {
        let (o, i) = (q.out_arrows(v).len(), q.in_arrows(v).len());
        if o > 2 {
            out.push(GentleDiagnostic::TooManyOutgoing { vertex: q.vertices()[v].clone(), count: o });
        }
        if i > 2 {
            out.push(GentleDiagnostic::TooManyIncoming { vertex: q.vertices()[v].clone(), count: i });
        }
    }
    let id = |a: usize| q.arrows()[a].id.clone();
    for &(a, b) in &p.relations {
        if q.arrows()[a].target != q.arrows()[b].source {
            out.push(GentleDiagnostic::NotComposable { first: id(a), then: id(b) });
        }
    }
    let local = Local::new(p);
    for a in 0..q.arrows().len() {
        if local.rel_succ[a].len() > 1 {
            out.push(GentleDiagnostic::RelationSuccessors(id(a)));
        }
        if local.rel_pred[a].len() > 1 {
            out.push(GentleDiagnostic::RelationPredecessors(id(a)));
        }
        if local.free_succ[a].len() > 1 {
            out.push(GentleDiagnostic::NonRelationSuccessors(id(a)));
        }
        if local.free_pred[a].len() > 1 {
            out.push(GentleDiagnostic::NonRelationPredecessors(id(a)));
        }
    }
    if let Some(cycle) = find_cycle(&local.free_succ) {
        out.push(GentleDiagnostic::RelationFreeCycle(cycle.into_iter().map(id).collect()));
    }
    out
}

pub(crate) fn require_gentle(p: &GentlePresentation) -> Result<()> {
    let diags = check_gentle(p);
    if diags.is_empty() {
        Ok(())
    } else {
        Err(Error::NotGentle(diags))
    }
}

/// All nonzero paths of positive length, in travel order.
pub fn nonzero_paths(p: &GentlePresentation) -> Result<Vec<Vec<usize>>> {
    let local = Local::new(p);
    if let Some(cycle) = find_cycle(&local.free_succ) {
        let ids = cycle.into_iter().map(|a| p.quiver.arrows()[a].id.clone()).collect();
        return Err(Error::NotGentle(vec![GentleDiagnostic::RelationFreeCycle(ids)]));
    }
    let mut out = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..p.quiver.arrows().len()).map(|a| vec![a]).collect();
    stack.reverse();
    while let Some(path) = stack.pop() {
        let last = *path.last().unwrap();
        for &b in local.free_succ[last].iter().rev() {
            let mut next = path.clone();
            next.push(b);
            stack.push(next);
        }
        out.push(path);
    }
    out.sort();
    Ok(out)
}

/// Dimension of kQ/I: trivial paths plus nonzero paths.
pub fn dimension(p: &GentlePresentation) -> Result<usize> {
    Ok(p.quiver.vertices().len() + nonzero_paths(p)?.len())
}
