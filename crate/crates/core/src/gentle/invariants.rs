use std::collections::HashMap;

use super::{require_gentle, threads_with_seed, Local, Thread, ThreadKind};
use crate::algebra::GentlePresentation;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dimension {
    Finite(usize),
    Infinite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Arrows of a cycle on which every composition is a relation.
    Cycle(Vec<usize>),
    /// A vertex whose simple module has maximal projective dimension.
    Simple(usize),
    /// The quiver has no vertices.
    Empty,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlobalDimension {
    pub value: Dimension,
    pub witness: Witness,
}

/// Sorted multiset of pairs (n, m).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AgInvariant {
    pub pairs: Vec<(usize, usize)>,
}

/// Free choices in the AG walk; the result does not depend on them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AgOptions {
    pub sign_seed: u64,
    /// Rotate the order in which unused permitted threads are picked.
    pub start_rotation: usize,
}

fn rel_next(local: &Local) -> Vec<Option<usize>> {
    local.rel_succ.iter().map(|s| s.first().copied()).collect()
}

/// Cycles of the relation-successor map, each listed once starting at its
/// least arrow.
pub(crate) fn full_relation_cycles(local: &Local) -> Vec<Vec<usize>> {
    let next = rel_next(local);
    let mut out = Vec::new();
    let mut seen = vec![false; next.len()];
    for a in 0..next.len() {
        if seen[a] {
            continue;
        }
        let mut path = Vec::new();
        let mut on_path = HashMap::new();
        let mut x = Some(a);
        while let Some(y) = x {
            if seen[y] {
                if let Some(&i) = on_path.get(&y) {
                    let mut cycle: Vec<usize> = path[i..].to_vec();
                    let m = cycle.iter().enumerate().min_by_key(|(_, &c)| c).unwrap().0;
                    cycle.rotate_left(m);
                    out.push(cycle);
                }
                break;
            }
            seen[y] = true;
            on_path.insert(y, path.len());
            path.push(y);
            x = next[y];
        }
    }
    out.sort();
    out
}

/// Projective dimensions read off the relation walk: pd(S_v) = 0 without
/// outgoing arrows, else 1 + max over outgoing α of the number of
/// relation-successor steps starting at α.
pub fn global_dimension(p: &GentlePresentation) -> Result<GlobalDimension> {
    require_gentle(p)?;
    let local = Local::new(p);
    let cycles = full_relation_cycles(&local);
    if let Some(c) = cycles.first() {
        return Ok(GlobalDimension { value: Dimension::Infinite, witness: Witness::Cycle(c.clone()) });
    }
    let next = rel_next(&local);
    let steps = |mut a: usize| {
        let mut k = 0;
        while let Some(b) = next[a] {
            a = b;
            k += 1;
        }
        k
    };
    let q = &p.quiver;
    let mut best: Option<(usize, usize)> = None;
    for v in 0..q.vertices().len() {
        let pd = q.out_arrows(v).into_iter().map(|a| 1 + steps(a)).max().unwrap_or(0);
        if best.is_none_or(|(b, _)| pd > b) {
            best = Some((pd, v));
        }
    }
    Ok(match best {
        Some((pd, v)) => GlobalDimension { value: Dimension::Finite(pd), witness: Witness::Simple(v) },
        None => GlobalDimension { value: Dimension::Finite(0), witness: Witness::Empty },
    })
}

pub fn ag_invariant(p: &GentlePresentation) -> Result<AgInvariant> {
    ag_invariant_with(p, AgOptions::default())
}

/// The Avella-Alaminos–Geiss walk alternating permitted and forbidden threads,
/// plus a pair (0, ℓ) for each full-relation cycle of length ℓ.
pub fn ag_invariant_with(p: &GentlePresentation, opts: AgOptions) -> Result<AgInvariant> {
    let all = threads_with_seed(p, opts.sign_seed)?;
    let (permitted, forbidden): (Vec<&Thread>, Vec<&Thread>) =
        all.iter().partition(|t| t.kind == ThreadKind::Permitted);
    let mut by_end: HashMap<(usize, i8), usize> = HashMap::new();
    for (i, f) in forbidden.iter().enumerate() {
        if by_end.insert((f.target, f.epsilon), i).is_some() {
            return Err(Error::Signs(format!("forbidden threads ending at vertex {}", f.target)));
        }
    }
    let mut by_start: HashMap<(usize, i8), usize> = HashMap::new();
    for (i, h) in permitted.iter().enumerate() {
        if by_start.insert((h.source, h.sigma), i).is_some() {
            return Err(Error::Signs(format!("permitted threads starting at vertex {}", h.source)));
        }
    }
    let np = permitted.len();
    let mut used = vec![false; np];
    let mut used_forbidden = vec![false; forbidden.len()];
    let mut pairs = Vec::new();
    for k in 0..np {
        let start = (k + opts.start_rotation) % np;
        if used[start] {
            continue;
        }
        let (mut n, mut m) = (0, 0);
        let mut h = start;
        loop {
            used[h] = true;
            let t = permitted[h];
            let f = *by_end
                .get(&(t.target, -t.epsilon))
                .ok_or_else(|| Error::Signs(format!("no forbidden thread ends at vertex {}", t.target)))?;
            if std::mem::replace(&mut used_forbidden[f], true) {
                return Err(Error::Signs("forbidden thread visited twice".into()));
            }
            n += 1;
            m += forbidden[f].arrows.len();
            let ft = forbidden[f];
            h = *by_start
                .get(&(ft.source, -ft.sigma))
                .ok_or_else(|| Error::Signs(format!("no permitted thread starts at vertex {}", ft.source)))?;
            if h == start {
                break;
            }
            if used[h] {
                return Err(Error::Signs("permitted thread visited twice".into()));
            }
        }
        pairs.push((n, m));
    }
    if used_forbidden.contains(&false) {
        return Err(Error::Signs("a forbidden thread was never reached".into()));
    }
    for c in full_relation_cycles(&Local::new(p)) {
        pairs.push((0, c.len()));
    }
    pairs.sort_unstable();
    Ok(AgInvariant { pairs })
}
