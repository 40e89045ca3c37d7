use super::{BrauerGraph, GradedBrauerGraph};

const UNSET: usize = usize::MAX;

/// A bijection φ: H1 → H2 (as `phi[h1] = h2`) commuting with ι and σ, and
/// preserving degrees when `respect_grading` is set. Components of the first
/// graph are matched in order of their least half-edge; within a component the
/// least half-edge tries its images in index order and the rest of the map is
/// forced by propagation.
pub fn is_isomorphic(
    g1: &GradedBrauerGraph,
    g2: &GradedBrauerGraph,
    respect_grading: bool,
) -> Option<Vec<usize>> {
    let (a, b) = (g1.graph(), g2.graph());
    if a.len() != b.len() {
        return None;
    }
    if respect_grading && g1.grading().rank() != g2.grading().rank() {
        return None;
    }
    let sig = |g: &BrauerGraph| {
        let mut v: Vec<usize> = g.vertices().iter().map(Vec::len).collect();
        v.sort_unstable();
        v
    };
    if sig(a) != sig(b) {
        return None;
    }
    if respect_grading {
        let mut d1 = g1.grading().degrees().to_vec();
        let mut d2 = g2.grading().degrees().to_vec();
        d1.sort();
        d2.sort();
        if d1 != d2 {
            return None;
        }
    }
    let search = Search { g1, g2, respect_grading, roots: a.components().iter().map(|c| c[0]).collect() };
    let mut phi = vec![UNSET; a.len()];
    let mut used = vec![false; b.len()];
    if search.extend(0, &mut phi, &mut used) {
        Some(phi)
    } else {
        None
    }
}

struct Search<'a> {
    g1: &'a GradedBrauerGraph,
    g2: &'a GradedBrauerGraph,
    respect_grading: bool,
    roots: Vec<usize>,
}

impl Search<'_> {
    fn extend(&self, comp: usize, phi: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let Some(&root) = self.roots.get(comp) else {
            return true;
        };
        for cand in 0..self.g2.graph().len() {
            if used[cand] {
                continue;
            }
            let mut assigned = Vec::new();
            if self.propagate(root, cand, phi, used, &mut assigned)
                && self.extend(comp + 1, phi, used)
            {
                return true;
            }
            for h in assigned {
                used[phi[h]] = false;
                phi[h] = UNSET;
            }
        }
        false
    }

    fn propagate(
        &self,
        root: usize,
        cand: usize,
        phi: &mut [usize],
        used: &mut [bool],
        assigned: &mut Vec<usize>,
    ) -> bool {
        let (a, b) = (self.g1.graph(), self.g2.graph());
        let mut queue = vec![(root, cand)];
        while let Some((x, y)) = queue.pop() {
            if phi[x] != UNSET {
                if phi[x] != y {
                    return false;
                }
                continue;
            }
            if used[y] {
                return false;
            }
            if self.respect_grading && self.g1.grading().degree(x) != self.g2.grading().degree(y) {
                return false;
            }
            phi[x] = y;
            used[y] = true;
            assigned.push(x);
            queue.push((a.iota(x), b.iota(y)));
            queue.push((a.sigma(x), b.sigma(y)));
            queue.push((a.sigma_inv(x), b.sigma_inv(y)));
        }
        true
    }
}
