//! The `.qa` text format for gentle presentations.

use std::collections::BTreeSet;
use std::fmt::Write;

use serde::Deserialize;

use super::{Arrow, ArrowGrading, GentlePresentation, Quiver};
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QaDoc {
    vertices: Vec<String>,
    #[serde(default)]
    arrows: Vec<ArrowDoc>,
    #[serde(default)]
    relations: Vec<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowDoc {
    id: String,
    source: String,
    target: String,
    degree: Option<Vec<i64>>,
}

pub fn parse_qa(text: &str) -> Result<GentlePresentation> {
    let doc: QaDoc = toml::from_str(text).map_err(|e| Error::Syntax(e.to_string()))?;
    let vertex = |name: &str, arrow: &str| {
        doc.vertices.iter().position(|v| v == name).ok_or_else(|| Error::Semantic {
            message: format!("unknown vertex in arrow {arrow:?}"),
            token: name.to_string(),
        })
    };
    let mut arrows = Vec::new();
    for a in &doc.arrows {
        arrows.push(Arrow {
            id: a.id.clone(),
            source: vertex(&a.source, &a.id)?,
            target: vertex(&a.target, &a.id)?,
        });
    }
    let quiver = Quiver::new(doc.vertices.clone(), arrows)?;
    let mut relations = BTreeSet::new();
    for rel in &doc.relations {
        let [b, a] = rel.as_slice() else {
            return Err(Error::Semantic {
                message: "relation must list exactly two arrows".into(),
                token: rel.join(" "),
            });
        };
        let find = |id: &str| {
            quiver.arrow_index(id).map_err(|_| Error::Semantic {
                message: "unknown arrow in relation".into(),
                token: id.to_string(),
            })
        };
        relations.insert((find(a)?, find(b)?));
    }
    let rank = doc.arrows.iter().filter_map(|a| a.degree.as_ref().map(Vec::len)).next();
    let grading = match rank {
        None => None,
        Some(rank) => {
            let degrees = doc
                .arrows
                .iter()
                .map(|a| a.degree.clone().unwrap_or_else(|| vec![0; rank]))
                .collect();
            Some(ArrowGrading::new(rank, degrees)?)
        }
    };
    Ok(GentlePresentation { quiver, relations, grading })
}

fn quote(s: &str) -> String {
    toml::Value::String(s.to_string()).to_string()
}

pub fn serialize_qa(p: &GentlePresentation) -> String {
    let q = &p.quiver;
    let mut out = String::new();
    let vs: Vec<String> = q.vertices().iter().map(|v| quote(v)).collect();
    writeln!(out, "vertices = [{}]", vs.join(", ")).unwrap();
    writeln!(out, "arrows = [").unwrap();
    for (i, a) in q.arrows().iter().enumerate() {
        let degree = p
            .grading
            .as_ref()
            .map(|g| {
                let v: Vec<String> = g.degree(i).iter().map(|x| x.to_string()).collect();
                format!(", degree = [{}]", v.join(", "))
            })
            .unwrap_or_default();
        writeln!(
            out,
            "  {{ id = {}, source = {}, target = {}{} }},",
            quote(&a.id),
            quote(&q.vertices()[a.source]),
            quote(&q.vertices()[a.target]),
            degree
        )
        .unwrap();
    }
    writeln!(out, "]").unwrap();
    let rels: Vec<String> = p
        .relations
        .iter()
        .map(|&(a, b)| format!("[{}, {}]", quote(&q.arrows()[b].id), quote(&q.arrows()[a].id)))
        .collect();
    writeln!(out, "relations = [{}]", rels.join(", ")).unwrap();
    out
}
