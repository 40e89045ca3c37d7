use super::{require_gentle, Local};
use crate::algebra::GentlePresentation;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ThreadKind {
    Permitted,
    Forbidden,
}

/// A maximal path with no relations (permitted) or only relations (forbidden)
/// between consecutive arrows. Trivial threads have no arrows and
/// `source == target`. `sigma` and `epsilon` are the signs at the start and
/// end of the thread.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thread {
    pub kind: ThreadKind,
    pub arrows: Vec<usize>,
    pub source: usize,
    pub target: usize,
    pub sigma: i8,
    pub epsilon: i8,
}

/// Sign functions σ, ε on arrows. Arrows with a common source get opposite σ,
/// with a common target opposite ε; σ(β) = ε(α) if βα ∈ I and −ε(α) otherwise.
/// Each connected block of constraints is seeded with +1, flipped when the
/// matching bit of `seed` is set.
fn assign_signs(p: &GentlePresentation, seed: u64) -> Result<Vec<(i8, i8)>> {
    let q = &p.quiver;
    let n = q.arrows().len();
    // variable 2a is σ(a), 2a+1 is ε(a); edges carry +1 (equal) or −1 (opposite)
    let mut adj: Vec<Vec<(usize, i8)>> = vec![Vec::new(); 2 * n];
    let mut link = |x: usize, y: usize, rel: i8| {
        adj[x].push((y, rel));
        adj[y].push((x, rel));
    };
    for v in 0..q.vertices().len() {
        if let [a, b] = q.out_arrows(v)[..] {
            link(2 * a, 2 * b, -1);
        }
        if let [a, b] = q.in_arrows(v)[..] {
            link(2 * a + 1, 2 * b + 1, -1);
        }
    }
    for a in 0..n {
        for b in 0..n {
            if q.arrows()[a].target == q.arrows()[b].source {
                link(2 * b, 2 * a + 1, if p.is_relation(a, b) { 1 } else { -1 });
            }
        }
    }
    let mut value = vec![0i8; 2 * n];
    let mut block = 0;
    for root in 0..2 * n {
        if value[root] != 0 {
            continue;
        }
        value[root] = if (seed >> (block % 64)) & 1 == 1 { -1 } else { 1 };
        block += 1;
        let mut stack = vec![root];
        while let Some(x) = stack.pop() {
            for &(y, rel) in &adj[x] {
                let want = value[x] * rel;
                if value[y] == 0 {
                    value[y] = want;
                    stack.push(y);
                } else if value[y] != want {
                    return Err(Error::Signs(q.arrows()[y / 2].id.clone()));
                }
            }
        }
    }
    Ok((0..n).map(|a| (value[2 * a], value[2 * a + 1])).collect())
}

fn chains(starts: impl Iterator<Item = usize>, next: &[Vec<usize>]) -> Vec<Vec<usize>> {
    starts
        .map(|a| {
            let mut path = vec![a];
            while let Some(&b) = next[*path.last().unwrap()].first() {
                path.push(b);
            }
            path
        })
        .collect()
}

pub fn threads(p: &GentlePresentation) -> Result<Vec<Thread>> {
    threads_with_seed(p, 0)
}

/// All permitted and forbidden threads, trivial ones included, with signs.
/// Order: permitted before forbidden; within a kind, nontrivial threads by
/// first arrow, then trivial threads by vertex.
pub fn threads_with_seed(p: &GentlePresentation, seed: u64) -> Result<Vec<Thread>> {
    require_gentle(p)?;
    let q = &p.quiver;
    let local = Local::new(p);
    let signs = assign_signs(p, seed)?;
    let n = q.arrows().len();
    let make = |kind, arrows: Vec<usize>| {
        let (first, last) = (arrows[0], *arrows.last().unwrap());
        Thread {
            kind,
            source: q.arrows()[first].source,
            target: q.arrows()[last].target,
            sigma: signs[first].0,
            epsilon: signs[last].1,
            arrows,
        }
    };
    let trivial = |kind, v, sigma, epsilon| Thread {
        kind,
        arrows: Vec::new(),
        source: v,
        target: v,
        sigma,
        epsilon,
    };

    let mut permitted: Vec<Thread> =
        chains((0..n).filter(|&a| local.free_pred[a].is_empty()), &local.free_succ)
            .into_iter()
            .map(|c| make(ThreadKind::Permitted, c))
            .collect();
    let mut forbidden: Vec<Thread> =
        chains((0..n).filter(|&a| local.rel_pred[a].is_empty()), &local.rel_succ)
            .into_iter()
            .map(|c| make(ThreadKind::Forbidden, c))
            .collect();

    for v in 0..q.vertices().len() {
        let (ins, outs) = (q.in_arrows(v), q.out_arrows(v));
        if ins.len() > 1 || outs.len() > 1 {
            continue;
        }
        match (ins.first().copied(), outs.first().copied()) {
            (None, None) => {
                permitted.push(trivial(ThreadKind::Permitted, v, 1, -1));
                permitted.push(trivial(ThreadKind::Permitted, v, -1, 1));
                forbidden.push(trivial(ThreadKind::Forbidden, v, 1, 1));
                forbidden.push(trivial(ThreadKind::Forbidden, v, -1, -1));
            }
            (beta, gamma) => {
                let through_relation = matches!((beta, gamma), (Some(b), Some(c)) if p.is_relation(b, c));
                let through_free = matches!((beta, gamma), (Some(b), Some(c)) if !p.is_relation(b, c));
                if !through_relation {
                    let eps = match beta {
                        Some(b) => -signs[b].1,
                        None => signs[gamma.unwrap()].0,
                    };
                    permitted.push(trivial(ThreadKind::Permitted, v, -eps, eps));
                }
                if !through_free {
                    let s = match beta {
                        Some(b) => -signs[b].1,
                        None => -signs[gamma.unwrap()].0,
                    };
                    forbidden.push(trivial(ThreadKind::Forbidden, v, s, s));
                }
            }
        }
    }
    permitted.extend(forbidden);
    Ok(permitted)
}
