//! Reading graphs, presentations, gradings and half-edge lists from arguments.

use std::fs;

use anyhow::{bail, Context, Result};
use brauer_kit::algebra::{cut_algebra, parse_qa, GentlePresentation};
use brauer_kit::graph::{parse, BrauerGraph, GradedBrauerGraph, Grading};
use brauer_kit::mutation::close_under_pairing;

use crate::registry;

/// Text of an input: a path, or `@name` for a bundled fixture.
pub fn read(arg: &str) -> Result<String> {
    if let Some(name) = arg.strip_prefix('@') {
        return registry::fixture(name)
            .map(str::to_string)
            .with_context(|| format!("no bundled fixture named {name:?} (see `example list`)"));
    }
    fs::read_to_string(arg).with_context(|| format!("cannot read {arg}"))
}

pub fn graph(arg: &str) -> Result<GradedBrauerGraph> {
    parse(&read(arg)?).with_context(|| format!("in {arg}"))
}

pub fn presentation(arg: &str) -> Result<GentlePresentation> {
    parse_qa(&read(arg)?).with_context(|| format!("in {arg}"))
}

fn looks_like_file(arg: &str) -> bool {
    arg.starts_with('@') || arg.ends_with(".bg") || arg.ends_with(".qa") || arg.contains('/')
}

/// A gentle presentation, either read from a `.qa` file or cut out of a
/// graph file. The cut defaults to the graph's own grading.
pub fn gentle(arg: &str, cut: Option<&str>) -> Result<GentlePresentation> {
    let text = read(arg)?;
    let as_graph = !arg.ends_with(".qa") && (arg.ends_with(".bg") || parse(&text).is_ok());
    if !as_graph {
        if cut.is_some() {
            bail!("--cut applies to graph inputs only");
        }
        return parse_qa(&text).with_context(|| format!("in {arg}"));
    }
    let gg = parse(&text).with_context(|| format!("in {arg}"))?;
    let c = match cut {
        Some(c) => grading(gg.graph(), c)?,
        None => gg.grading().clone(),
    };
    cut_algebra(gg.graph(), &c).with_context(|| format!("cut of {arg}"))
}

pub fn names(list: &str) -> Vec<&str> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

pub fn indices(graph: &BrauerGraph, list: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for n in names(list) {
        out.push(graph.index_of(n)?);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// A comma list closed under the pairing. Added half-edges come back as a
/// warning.
pub fn subset(graph: &BrauerGraph, list: &str, warnings: &mut Vec<String>) -> Result<Vec<usize>> {
    let given = indices(graph, list)?;
    let (closed, added) = close_under_pairing(graph, &given);
    if !added.is_empty() {
        warnings.push(format!(
            "subset closed under the pairing by adding {}",
            graph.names_of(&added).join(",")
        ));
    }
    Ok(closed)
}

/// A grading on `graph`: the grading of a graph file with the same
/// half-edges, or a comma list of degree-one half-edges. In a list, half-edges
/// fixed by the orientation always get degree one, as in every cut.
pub fn grading(graph: &BrauerGraph, arg: &str) -> Result<Grading> {
    if looks_like_file(arg) {
        let other = self::graph(arg)?;
        if other.graph().names() != graph.names() {
            bail!("{arg} has different half-edges from the graph it grades");
        }
        return Ok(other.grading().clone());
    }
    Ok(Grading::cut(graph, &indices(graph, arg)?))
}

pub fn pair(graph: &BrauerGraph, arg: &str) -> Result<(usize, usize)> {
    match names(arg).as_slice() {
        [a, b] => Ok((graph.index_of(a)?, graph.index_of(b)?)),
        _ => bail!("pair {arg:?} must name two half-edges, as in 3+,2-"),
    }
}
