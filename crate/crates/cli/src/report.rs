//! Rendered command results and shared JSON shapes.

use brauer_kit::algebra::GentlePresentation;
use brauer_kit::gentle::Dimension;
use brauer_kit::graph::{serialize, BrauerGraph, GradedBrauerGraph, Grading};
use serde_json::{json, Map, Value};

/// One command result in both output formats.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub warnings: Vec<String>,
    /// Output is still printed, then the command fails with this message.
    pub failure: Option<String>,
}

impl Report {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        let mut text = text.into();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        Report { text, json, warnings: Vec::new(), failure: None }
    }

    pub fn warn(mut self, warnings: Vec<String>) -> Self {
        self.warnings.extend(warnings);
        self
    }
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values always serialize");
    s.push('\n');
    s
}

/// Degrees print as bare integers in rank one.
pub fn degree(d: &[i64]) -> String {
    match d {
        [x] => x.to_string(),
        _ => format!("({})", d.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")),
    }
}

/// The `.bg` document as JSON, key for key.
pub fn graph_json(gg: &GradedBrauerGraph) -> Value {
    let doc: toml::Value = toml::from_str(&serialize(gg)).expect("serialized graphs parse");
    serde_json::to_value(doc).expect("toml values convert")
}

pub fn degree_one(graph: &BrauerGraph, g: &Grading) -> Vec<String> {
    (0..graph.len()).filter(|&h| g.degree(h)[0] == 1).map(|h| graph.name(h).to_string()).collect()
}

pub fn grading_json(graph: &BrauerGraph, g: &Grading) -> Value {
    let mut m = Map::new();
    for h in 0..graph.len() {
        m.insert(graph.name(h).to_string(), json!(g.degree(h)));
    }
    Value::Object(m)
}

pub fn presentation_json(p: &GentlePresentation) -> Value {
    let q = &p.quiver;
    let arrows: Vec<Value> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let mut v = json!({
                "id": a.id,
                "source": q.vertices()[a.source],
                "target": q.vertices()[a.target],
            });
            if let Some(g) = &p.grading {
                v["degree"] = json!(g.degree(i));
            }
            v
        })
        .collect();
    let relations: Vec<Value> =
        p.relations.iter().map(|&(a, b)| json!([q.arrows()[b].id, q.arrows()[a].id])).collect();
    json!({ "vertices": q.vertices(), "arrows": arrows, "relations": relations })
}

pub fn dimension_json(d: Dimension) -> Value {
    match d {
        Dimension::Finite(n) => json!(n),
        Dimension::Infinite => json!("infinite"),
    }
}

pub fn dimension_text(d: Dimension) -> String {
    match d {
        Dimension::Finite(n) => n.to_string(),
        Dimension::Infinite => "infinite".into(),
    }
}

pub fn pairs_text(pairs: &[(usize, usize)]) -> String {
    pairs.iter().map(|(n, m)| format!("({n},{m})")).collect::<Vec<_>>().join(" ")
}

/// Large counts stay exact: numbers when they fit, decimal strings otherwise.
pub fn count_json(n: u128) -> Value {
    u64::try_from(n).map_or_else(|_| json!(n.to_string()), |x| json!(x))
}
