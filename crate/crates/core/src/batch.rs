//! Batch sweeps over cuts, sector orderings and instance lists. With the
//! `parallel` feature these run on the rayon pool; without it, or with
//! [`Execution::Sequential`], they run on the calling thread.

use itertools::Itertools;
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::algebra::cut_algebra;
use crate::error::Result;
use crate::gentle::{ag_invariant, global_dimension, AgInvariant, GlobalDimension};
use crate::graph::{enumerate_admissible_cuts, homogeneity, BrauerGraph, GradedBrauerGraph, Grading};
use crate::mutation::{apply_sectors, maximal_sectors};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Order-preserving map over a slice.
pub fn map_items<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => items.par_iter().map(f).collect(),
        _ => items.iter().map(f).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutReport {
    pub cut: Grading,
    pub global_dimension: GlobalDimension,
    pub ag: AgInvariant,
}

/// Global dimension and AG invariant of the cut algebra of every admissible cut.
pub fn analyze_cuts(graph: &BrauerGraph, exec: Execution) -> Result<Vec<CutReport>> {
    let cuts = enumerate_admissible_cuts(graph);
    map_items(&cuts, exec, |cut| {
        let p = cut_algebra(graph, cut)?;
        Ok(CutReport { cut: cut.clone(), global_dimension: global_dimension(&p)?, ag: ag_invariant(&p)? })
    })
    .into_iter()
    .collect()
}

/// Cuts grouped by AG invariant, groups in order of first appearance; the
/// entries are positions in the admissible cut enumeration.
pub fn ag_classes(graph: &BrauerGraph, exec: Execution) -> Result<Vec<(AgInvariant, Vec<usize>)>> {
    let mut out: Vec<(AgInvariant, Vec<usize>)> = Vec::new();
    for (i, r) in analyze_cuts(graph, exec)?.into_iter().enumerate() {
        match out.iter_mut().find(|(ag, _)| *ag == r.ag) {
            Some((_, v)) => v.push(i),
            None => out.push((r.ag, vec![i])),
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderCheck {
    pub orderings: usize,
    pub agree: bool,
    pub homogeneity_preserved: bool,
    pub result: GradedBrauerGraph,
}

/// Apply the frozen sector list of `subset` in every order and compare.
pub fn sector_orderings_agree(gg: &GradedBrauerGraph, subset: &[usize], exec: Execution) -> Result<OrderCheck> {
    let sectors = maximal_sectors(gg.graph(), subset)?.sectors;
    let orders: Vec<Vec<_>> = sectors.iter().copied().permutations(sectors.len()).collect();
    let results = map_items(&orders, exec, |order| apply_sectors(gg, order))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let first = results[0].clone();
    let before = homogeneity(gg);
    Ok(OrderCheck {
        orderings: results.len(),
        agree: results.iter().all(|r| *r == first),
        homogeneity_preserved: results.iter().all(|r| homogeneity(r) == before),
        result: first,
    })
}
